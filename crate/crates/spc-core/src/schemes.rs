//! The five closed-form labeling constructions, each emitting the family
//! graph together with its prescribed labeling and an honestly computed
//! report.
//!
//! Where a published count disagrees with what the construction actually
//! produces, the scheme still applies the construction as stated and records
//! the published values in [`ExpectedCounts`] with a provenance note, so
//! callers can display both sides. No scheme ever promises `is_spc`; the
//! report states the truth and the search module adjudicates existence.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::families;
use crate::graph::Graph;
use crate::labeling::{evaluate, CordialityReport, Sign, SignedLabeling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("bad parameter for scheme {scheme}: {reason}")]
    BadParameter {
        scheme: &'static str,
        reason: String,
    },
    #[error("unknown helm-dumbbell variant {got:?} (expected \"literal\" or \"endpoints-positive\")")]
    UnknownVariant { got: String },
}

/// Identifies one scheme instance. Command-line names: `spltg-star`,
/// `spltg-bull`, `psquare`, `corona-c-3k1`, `helm-dumbbell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeId {
    SpltgStar { n: usize },
    SpltgBull,
    PathSquare { n: usize },
    CoronaC3K1 { n: usize },
    HelmDumbbell { k: usize },
}

impl SchemeId {
    pub fn build(self, variant: HelmDumbbellVariant) -> Result<SchemeOutput, SchemeError> {
        match self {
            SchemeId::SpltgStar { n } => spltg_star_scheme(n),
            SchemeId::SpltgBull => Ok(spltg_bull_scheme()),
            SchemeId::PathSquare { n } => path_square_scheme(n),
            SchemeId::CoronaC3K1 { n } => corona_scheme(n),
            SchemeId::HelmDumbbell { k } => helm_dumbbell_scheme(k, variant),
        }
    }
}

/// Expected counts attached to a scheme, with a note saying where they come
/// from ("published ..." for values printed in the source material,
/// "derived" for values recomputed from the construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedCounts {
    pub v_pos: usize,
    pub v_neg: usize,
    pub e_pos: usize,
    pub e_neg: usize,
    /// When false, `{e_pos, e_neg}` is claimed only as a multiset; the
    /// printed orientation is not trusted.
    pub e_orientation_exact: bool,
    pub provenance: String,
}

impl ExpectedCounts {
    /// Compares a computed report against these expectations. `None` means
    /// full agreement; otherwise a short human-readable discrepancy note.
    pub fn discrepancy(&self, report: &CordialityReport) -> Option<String> {
        if (report.v_pos, report.v_neg) != (self.v_pos, self.v_neg) {
            return Some(format!(
                "vertex counts {}/{} differ from expected {}/{} ({})",
                report.v_pos, report.v_neg, self.v_pos, self.v_neg, self.provenance
            ));
        }
        let exact = (report.e_pos, report.e_neg) == (self.e_pos, self.e_neg);
        let transposed = (report.e_pos, report.e_neg) == (self.e_neg, self.e_pos);
        if exact {
            return None;
        }
        if transposed {
            if self.e_orientation_exact {
                return Some(format!(
                    "edge counts {}/{} transpose the expected {}/{} ({})",
                    report.e_pos, report.e_neg, self.e_pos, self.e_neg, self.provenance
                ));
            }
            // Multiset matches and no orientation was promised.
            return None;
        }
        Some(format!(
            "edge counts {}/{} differ from expected {}/{} ({})",
            report.e_pos, report.e_neg, self.e_pos, self.e_neg, self.provenance
        ))
    }

    /// When the orientation was never promised and the computed edge counts
    /// transpose the recorded ones, returns a note saying so. Not a
    /// discrepancy: the expected multiset still matches.
    pub fn orientation_note(&self, report: &CordialityReport) -> Option<String> {
        if self.e_orientation_exact || self.e_pos == self.e_neg {
            return None;
        }
        if (report.e_pos, report.e_neg) == (self.e_neg, self.e_pos) {
            return Some(format!(
                "computed edge counts {}/{} transpose the published orientation {}/{}",
                report.e_pos, report.e_neg, self.e_pos, self.e_neg
            ));
        }
        None
    }
}

/// A scheme's result: the graph, the prescribed labeling, the evaluated
/// report, and optionally the expected counts with provenance.
#[derive(Debug, Clone)]
pub struct SchemeOutput {
    pub graph: Graph,
    pub labeling: SignedLabeling,
    pub report: CordialityReport,
    pub expected: Option<ExpectedCounts>,
}

fn output(graph: Graph, signs: Vec<Sign>, expected: Option<ExpectedCounts>) -> SchemeOutput {
    let labeling = SignedLabeling::new(signs);
    let report = evaluate(&graph, &labeling).expect("scheme labelings cover every vertex");
    SchemeOutput {
        graph,
        labeling,
        report,
        expected,
    }
}

/// Labeling scheme for the splitting graph of the star on `n >= 1` leaves:
/// leaves alternate starting positive (`+1` for odd `i`), the apex is
/// positive, and every duplicate gets the negation of its original.
pub fn spltg_star_scheme(n: usize) -> Result<SchemeOutput, SchemeError> {
    let star = families::star(n).map_err(|e| SchemeError::BadParameter {
        scheme: "spltg-star",
        reason: e.to_string(),
    })?;
    let graph = families::splitting_graph(&star);

    let original = |i: usize| {
        if i == 0 || i % 2 == 1 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    };
    let mut signs = Vec::with_capacity(2 * (n + 1));
    signs.extend((0..=n).map(original));
    signs.extend((0..=n).map(|i| -original(i)));

    let expected = if n.is_multiple_of(2) {
        ExpectedCounts {
            v_pos: n + 1,
            v_neg: n + 1,
            e_pos: 3 * n / 2,
            e_neg: 3 * n / 2,
            e_orientation_exact: true,
            provenance: "published table (even case)".to_owned(),
        }
    } else {
        // The published odd row fixes an orientation for the two edge
        // counts; only the multiset is trusted here and the search oracle
        // pins which side the construction lands on.
        ExpectedCounts {
            v_pos: n + 1,
            v_neg: n + 1,
            e_pos: (3 * n).div_ceil(2),
            e_neg: (3 * n - 1) / 2,
            e_orientation_exact: false,
            provenance: "published table (odd case, orientation unverified)".to_owned(),
        }
    };
    Ok(output(graph, signs, Some(expected)))
}

/// Vertex sign for position `i` (1-based) of the bull path. The published
/// case rule has overlapping conditions; they are applied top-down with the
/// first match winning, and the explicit `-1` assignment for the first
/// vertex overrides the rule.
fn bull_sign(i: usize) -> Sign {
    debug_assert!((1..=5).contains(&i));
    match (i, i % 2, i % 3) {
        (1, _, _) => Sign::Neg,
        (_, 0, _) => Sign::Pos,
        (_, _, 0) => Sign::Neg,
        // i % 3 == 2 is the only case left for i in 2..=5.
        _ => Sign::Pos,
    }
}

/// Labeling scheme for the splitting graph of the bull: signs
/// `(-1, +1, -1, +1, +1)` on the path `v1..v5`, duplicates negated.
pub fn spltg_bull_scheme() -> SchemeOutput {
    let graph = families::splitting_graph(&families::bull());
    let mut signs: Vec<Sign> = (1..=5).map(bull_sign).collect();
    signs.extend((1..=5).map(|i| -bull_sign(i)));
    let expected = ExpectedCounts {
        v_pos: 5,
        v_neg: 5,
        e_pos: 8,
        e_neg: 7,
        e_orientation_exact: true,
        provenance: "published prose".to_owned(),
    };
    output(graph, signs, Some(expected))
}

/// Labeling scheme for the square of the path on `n >= 3` vertices:
/// alternate starting positive at `v1`. Consecutive edges all come out
/// negative and distance-2 edges all positive, giving `n-2` positive and
/// `n-1` negative edges.
pub fn path_square_scheme(n: usize) -> Result<SchemeOutput, SchemeError> {
    let graph = families::path_square(n).map_err(|e| SchemeError::BadParameter {
        scheme: "psquare",
        reason: e.to_string(),
    })?;
    let signs = (0..n)
        .map(|id| if id % 2 == 0 { Sign::Pos } else { Sign::Neg })
        .collect();
    let expected = ExpectedCounts {
        v_pos: n.div_ceil(2),
        v_neg: n / 2,
        e_pos: n - 2,
        e_neg: n - 1,
        e_orientation_exact: true,
        provenance: "published case analysis".to_owned(),
    };
    Ok(output(graph, signs, Some(expected)))
}

/// Labeling scheme for the corona of the cycle on `n >= 3` vertices with
/// three pendants per vertex: cycle vertices and `w`-pendants positive,
/// `v`- and `t`-pendants negative, so each vertex of the cycle contributes
/// two positive and two negative vertices and an even edge split.
pub fn corona_scheme(n: usize) -> Result<SchemeOutput, SchemeError> {
    let cycle = families::cycle(n).map_err(|e| SchemeError::BadParameter {
        scheme: "corona-c-3k1",
        reason: e.to_string(),
    })?;
    let graph = families::corona_empty(&cycle, 3).expect("three pendant copies is valid");
    let mut signs = vec![Sign::Pos; n];
    for _ in 0..n {
        signs.extend([Sign::Neg, Sign::Pos, Sign::Neg]);
    }
    // 2n/2n on both vertices and edges; the published totals (n/2) do not
    // add up to the 4n vertices of the construction, so the derived values
    // are recorded instead.
    let expected = ExpectedCounts {
        v_pos: 2 * n,
        v_neg: 2 * n,
        e_pos: 2 * n,
        e_neg: 2 * n,
        e_orientation_exact: true,
        provenance: "derived (published totals n/2 are inconsistent with the 4n-vertex construction)"
            .to_owned(),
    };
    Ok(output(graph, signs, Some(expected)))
}

/// The published instructions for the helm dumbbell contradict themselves:
/// the second apex is assigned `-1` as an internal vertex of its helm but
/// `+1` as a path endpoint. Each variant resolves the conflict one way and
/// is evaluated honestly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HelmDumbbellVariant {
    /// Apexes keep their helm-internal labels; interior path vertices
    /// alternate, positive at even positions.
    #[default]
    Literal,
    /// Both apexes forced positive; everything else as in `Literal`.
    EndpointsPositive,
}

impl HelmDumbbellVariant {
    pub const ALL: [HelmDumbbellVariant; 2] = [
        HelmDumbbellVariant::Literal,
        HelmDumbbellVariant::EndpointsPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HelmDumbbellVariant::Literal => "literal",
            HelmDumbbellVariant::EndpointsPositive => "endpoints-positive",
        }
    }
}

impl fmt::Display for HelmDumbbellVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HelmDumbbellVariant {
    type Err = SchemeError;

    fn from_str(s: &str) -> Result<Self, SchemeError> {
        match s {
            "literal" => Ok(HelmDumbbellVariant::Literal),
            "endpoints-positive" => Ok(HelmDumbbellVariant::EndpointsPositive),
            other => Err(SchemeError::UnknownVariant {
                got: other.to_owned(),
            }),
        }
    }
}

/// Labeling scheme for two helms joined by a path on `k >= 2` vertices,
/// under the chosen reading of the contradictory instructions. First helm
/// internals positive with negative pendants, second helm mirrored, interior
/// path vertices alternating. The report states whatever the labeling
/// actually achieves; use the search oracle for the existence question.
pub fn helm_dumbbell_scheme(
    k: usize,
    variant: HelmDumbbellVariant,
) -> Result<SchemeOutput, SchemeError> {
    let graph = families::helm_dumbbell(k).map_err(|e| SchemeError::BadParameter {
        scheme: "helm-dumbbell",
        reason: e.to_string(),
    })?;

    // Ids: 0..=4 first hub+rim, 5..=8 first pendants, 9..=13 second hub+rim,
    // 14..=17 second pendants, 18.. path interiors u2..u(k-1).
    let mut signs = Vec::with_capacity(graph.num_vertices());
    signs.extend([Sign::Pos; 5]);
    signs.extend([Sign::Neg; 4]);
    signs.extend([Sign::Neg; 5]);
    signs.extend([Sign::Pos; 4]);
    for position in 2..=k.saturating_sub(1) {
        signs.push(if position % 2 == 0 { Sign::Pos } else { Sign::Neg });
    }
    if variant == HelmDumbbellVariant::EndpointsPositive {
        signs[9] = Sign::Pos;
    }
    Ok(output(graph, signs, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::Sign::{Neg, Pos};

    fn recomputed(s: &SchemeOutput) -> CordialityReport {
        evaluate(&s.graph, &s.labeling).unwrap()
    }

    #[test]
    fn spltg_star_even_counts() {
        let s = spltg_star_scheme(8).unwrap();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg, r.e_pos, r.e_neg), (9, 9, 12, 12));
        assert!(r.is_spc);
        assert_eq!(recomputed(&s), r);
        assert_eq!(s.expected.unwrap().discrepancy(&r), None);
    }

    #[test]
    fn spltg_star_odd_counts() {
        let s = spltg_star_scheme(7).unwrap();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg), (8, 8));
        let mut edge_counts = [r.e_pos, r.e_neg];
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, [10, 11]);
        assert!(r.is_spc);
        // Orientation was not promised, so the multiset match is clean, but
        // the transposition is still reportable.
        let expected = s.expected.unwrap();
        assert_eq!(expected.discrepancy(&r), None);
        assert!(expected.orientation_note(&r).is_some());
    }

    #[test]
    fn spltg_star_odd_orientation_transposes_the_published_row() {
        // Direct evaluation lands on e_pos = (3n-1)/2, the transpose of the
        // printed orientation; see the oracle cross-checks for confirmation
        // that the labeling is nevertheless among the valid SPC labelings.
        for n in [1usize, 3, 5, 7, 9] {
            let r = spltg_star_scheme(n).unwrap().report;
            assert_eq!(r.e_pos, (3 * n - 1) / 2, "n = {n}");
            assert_eq!(r.e_neg, (3 * n).div_ceil(2), "n = {n}");
        }
    }

    #[test]
    fn spltg_star_smallest_case() {
        let s = spltg_star_scheme(1).unwrap();
        assert_eq!(s.graph.num_vertices(), 4);
        assert_eq!(s.graph.num_edges(), 3);
        assert_eq!(s.report.vertex_delta, 0);
        assert!(s.report.edge_delta.abs() <= 1);
    }

    #[test]
    fn spltg_star_rejects_zero() {
        assert!(matches!(
            spltg_star_scheme(0),
            Err(SchemeError::BadParameter { .. })
        ));
    }

    #[test]
    fn spltg_star_range_is_balanced() {
        for n in 1..=50 {
            let r = spltg_star_scheme(n).unwrap().report;
            assert_eq!(r.vertex_delta, 0, "n = {n}");
            assert!(r.edge_delta.abs() <= 1, "n = {n}");
            if n % 2 == 0 {
                assert_eq!((r.e_pos, r.e_neg), (3 * n / 2, 3 * n / 2), "n = {n}");
            }
        }
    }

    #[test]
    fn spltg_bull_matches_published_counts() {
        let s = spltg_bull_scheme();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg), (5, 5));
        assert_eq!((r.e_pos, r.e_neg), (8, 7));
        assert!(r.is_spc);
        assert_eq!(recomputed(&s), r);
    }

    #[test]
    fn spltg_bull_case_rule_resolution() {
        let s = spltg_bull_scheme();
        let originals: Vec<Sign> = (0..5).map(|v| s.labeling.sign(v)).collect();
        assert_eq!(originals, vec![Neg, Pos, Neg, Pos, Pos]);
        for v in 0..5 {
            assert_eq!(s.labeling.sign(5 + v), -s.labeling.sign(v), "duplicate of {v}");
        }
    }

    #[test]
    fn path_square_counts() {
        let s = path_square_scheme(8).unwrap();
        assert_eq!((s.report.e_pos, s.report.e_neg), (6, 7));
        assert!(s.report.is_spc);

        let s9 = path_square_scheme(9).unwrap();
        assert_eq!((s9.report.v_pos, s9.report.v_neg), (5, 4));
    }

    #[test]
    fn path_square_triangle_case() {
        let s = path_square_scheme(3).unwrap();
        assert_eq!(s.labeling.signs(), &[Pos, Neg, Pos]);
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg, r.e_pos, r.e_neg), (2, 1, 1, 2));
        assert!(r.is_spc);
    }

    #[test]
    fn path_square_range_matches_case_analysis() {
        for n in 3..=60 {
            let r = path_square_scheme(n).unwrap().report;
            assert_eq!((r.e_pos, r.e_neg), (n - 2, n - 1), "n = {n}");
            let expected_vdelta = if n % 2 == 0 { 0 } else { -1 };
            assert_eq!(r.vertex_delta, expected_vdelta, "n = {n}");
            assert!(r.is_spc, "n = {n}");
        }
        assert!(path_square_scheme(2).is_err());
    }

    #[test]
    fn corona_counts() {
        let s = corona_scheme(4).unwrap();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg, r.e_pos, r.e_neg), (8, 8, 8, 8));
        assert!(r.is_spc);

        let s3 = corona_scheme(3).unwrap();
        let r3 = s3.report;
        assert_eq!((r3.v_pos, r3.v_neg, r3.e_pos, r3.e_neg), (6, 6, 6, 6));

        assert!(corona_scheme(2).is_err());
    }

    #[test]
    fn corona_cycle_edges_are_all_positive() {
        for n in [3usize, 5, 8] {
            let s = corona_scheme(n).unwrap();
            for &(u, v) in s.graph.edges() {
                if u < n && v < n {
                    assert_eq!(s.labeling.sign(u) * s.labeling.sign(v), Pos);
                }
            }
        }
    }

    #[test]
    fn corona_range_is_balanced() {
        for n in 3..=50 {
            let r = corona_scheme(n).unwrap().report;
            assert_eq!((r.v_pos, r.v_neg, r.e_pos, r.e_neg), (2 * n, 2 * n, 2 * n, 2 * n));
        }
    }

    #[test]
    fn helm_dumbbell_literal_reading_is_not_cordial() {
        // Hand evaluation of the as-printed instructions at k = 5: the two
        // helms contribute 16 positive and 8 negative edges, the path 1/3,
        // so the edge condition fails by a wide margin.
        let s = helm_dumbbell_scheme(5, HelmDumbbellVariant::Literal).unwrap();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg), (11, 10));
        assert_eq!((r.e_pos, r.e_neg), (17, 11));
        assert!(!r.is_spc);
        assert_eq!(recomputed(&s), r);
    }

    #[test]
    fn helm_dumbbell_endpoints_positive_is_not_cordial_either() {
        let s = helm_dumbbell_scheme(5, HelmDumbbellVariant::EndpointsPositive).unwrap();
        let r = s.report;
        assert_eq!((r.v_pos, r.v_neg), (12, 9));
        assert_eq!((r.e_pos, r.e_neg), (14, 14));
        assert!(!r.is_spc);
    }

    #[test]
    fn helm_dumbbell_cardinalities_hold_for_every_variant() {
        for variant in HelmDumbbellVariant::ALL {
            let s = helm_dumbbell_scheme(2, variant).unwrap();
            assert_eq!(s.report.v_pos + s.report.v_neg, 18);
            assert_eq!(s.report.e_pos + s.report.e_neg, 25);

            let s5 = helm_dumbbell_scheme(5, variant).unwrap();
            assert_eq!(s5.graph.num_vertices(), 21);
            assert_eq!(s5.graph.num_edges(), 28);
        }
        assert!(helm_dumbbell_scheme(1, HelmDumbbellVariant::Literal).is_err());
    }

    #[test]
    fn variant_names_round_trip() {
        for variant in HelmDumbbellVariant::ALL {
            assert_eq!(variant.name().parse::<HelmDumbbellVariant>().unwrap(), variant);
        }
        assert!(matches!(
            "both".parse::<HelmDumbbellVariant>(),
            Err(SchemeError::UnknownVariant { .. })
        ));
    }

    #[test]
    fn scheme_id_dispatch() {
        let variant = HelmDumbbellVariant::default();
        assert_eq!(
            SchemeId::SpltgStar { n: 8 }.build(variant).unwrap().graph.num_vertices(),
            18
        );
        assert_eq!(
            SchemeId::CoronaC3K1 { n: 4 }.build(variant).unwrap().graph.num_vertices(),
            16
        );
        assert!(SchemeId::HelmDumbbell { k: 1 }.build(variant).is_err());
    }

    #[test]
    fn reports_recompute_exactly() {
        let outputs = vec![
            spltg_star_scheme(6).unwrap(),
            spltg_star_scheme(7).unwrap(),
            spltg_bull_scheme(),
            path_square_scheme(10).unwrap(),
            corona_scheme(5).unwrap(),
            helm_dumbbell_scheme(4, HelmDumbbellVariant::Literal).unwrap(),
            helm_dumbbell_scheme(4, HelmDumbbellVariant::EndpointsPositive).unwrap(),
        ];
        for s in outputs {
            assert_eq!(recomputed(&s), s.report);
            assert_eq!(s.labeling.len(), s.graph.num_vertices());
        }
    }
}
