//! Signed vertex labelings, induced edge signs, and the signed product
//! cordial (SPC) verdict.
//!
//! A labeling assigns `+1` or `-1` to every vertex; each edge receives the
//! product of its endpoint signs. The labeling is SPC when the counts of the
//! two signs differ by at most one on vertices and, independently, on edges.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling has {labels} signs but the graph has {vertices} vertices")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("sign value must be 1 or -1, got {value}")]
    InvalidSign { value: i8 },
}

/// One of the two vertex labels, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Pos
    }
}

impl TryFrom<i8> for Sign {
    type Error = LabelingError;

    fn try_from(value: i8) -> Result<Self, LabelingError> {
        match value {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            _ => Err(LabelingError::InvalidSign { value }),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => write!(f, "+1"),
            Sign::Neg => write!(f, "-1"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = i8::deserialize(deserializer)?;
        Sign::try_from(value).map_err(serde::de::Error::custom)
    }
}

/// Sign induced on an edge by its endpoint labels: the product of the two,
/// so `+1` exactly when the endpoints agree.
pub fn induced_edge_sign(a: Sign, b: Sign) -> Sign {
    a * b
}

/// A `{+1, -1}` assignment to every vertex of some graph, bound by length
/// only: the wire form is `{"signs": [1, -1, ...]}` with one entry per
/// vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedLabeling {
    signs: Vec<Sign>,
}

impl SignedLabeling {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignedLabeling { signs }
    }

    pub fn from_values(values: &[i8]) -> Result<Self, LabelingError> {
        let signs = values
            .iter()
            .map(|&v| Sign::try_from(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignedLabeling { signs })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, v: usize) -> Sign {
        self.signs[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// The labeling with every sign flipped. An involution; it leaves every
    /// induced edge sign unchanged.
    pub fn negated(&self) -> Self {
        SignedLabeling {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }
}

/// The four counts of the SPC definition, their signed deltas, and the
/// verdict.
///
/// Deltas are stored signed (`v_neg - v_pos`, `e_neg - e_pos`), not as
/// absolute values, so a caller can observe which side of a published count
/// pair a computation lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordialityReport {
    pub v_pos: usize,
    pub v_neg: usize,
    pub e_pos: usize,
    pub e_neg: usize,
    pub vertex_delta: i64,
    pub edge_delta: i64,
    pub is_spc: bool,
}

impl CordialityReport {
    fn from_counts(v_pos: usize, v_neg: usize, e_pos: usize, e_neg: usize) -> Self {
        let vertex_delta = v_neg as i64 - v_pos as i64;
        let edge_delta = e_neg as i64 - e_pos as i64;
        CordialityReport {
            v_pos,
            v_neg,
            e_pos,
            e_neg,
            vertex_delta,
            edge_delta,
            is_spc: vertex_delta.abs() <= 1 && edge_delta.abs() <= 1,
        }
    }
}

/// Counts vertex and induced edge signs over all of `g` and reports whether
/// the labeling is signed product cordial.
pub fn evaluate(g: &Graph, labeling: &SignedLabeling) -> Result<CordialityReport, LabelingError> {
    if labeling.len() != g.num_vertices() {
        return Err(LabelingError::LengthMismatch {
            labels: labeling.len(),
            vertices: g.num_vertices(),
        });
    }
    let v_pos = labeling.signs().iter().filter(|s| s.is_positive()).count();
    let v_neg = g.num_vertices() - v_pos;
    let mut e_pos = 0;
    for &(u, v) in g.edges() {
        if induced_edge_sign(labeling.sign(u), labeling.sign(v)).is_positive() {
            e_pos += 1;
        }
    }
    let e_neg = g.num_edges() - e_pos;
    Ok(CordialityReport::from_counts(v_pos, v_neg, e_pos, e_neg))
}
