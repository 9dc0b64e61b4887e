//! Constructors for every graph family and graph operator used by the
//! labeling schemes, each emitting role metadata with the conventional
//! vertex names (`v0` for an apex, `v'3` for a duplicate or pendant, `u2`
//! for a path vertex, and so on).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameter for {family}: {reason}")]
    BadParameter {
        family: &'static str,
        reason: String,
    },
    #[error("cannot parse family spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        reason: reason.into(),
    }
}

fn role_map(names: impl IntoIterator<Item = (VertexId, String)>) -> BTreeMap<VertexId, String> {
    names.into_iter().collect()
}

/// Path on `n >= 1` vertices. Roles `v1..vn`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("path", "need n >= 1"));
    }
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1));
    let roles = role_map((0..n).map(|i| (i, format!("v{}", i + 1))));
    Ok(Graph::with_roles(n, edges, roles).expect("path construction is valid"))
}

/// Cycle on `n >= 3` vertices. Roles `v1..vn`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", "need n >= 3"));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n));
    let roles = role_map((0..n).map(|i| (i, format!("v{}", i + 1))));
    Ok(Graph::with_roles(n, edges, roles).expect("cycle construction is valid"))
}

/// Star `K_{1,n}` for `n >= 1`: apex vertex 0 joined to `n` leaves.
/// `n + 1` vertices, `n` edges. Roles `v0` (apex), `v1..vn`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("star", "need n >= 1"));
    }
    let edges = (1..=n).map(|i| (0, i));
    let roles = role_map((0..=n).map(|i| (i, format!("v{i}"))));
    Ok(Graph::with_roles(n + 1, edges, roles).expect("star construction is valid"))
}

/// Wheel on `n >= 3` rim vertices: hub vertex 0, rim cycle `1..=n`,
/// `n` spokes. `n + 1` vertices, `2n` edges. Roles `hub`, `v1..vn`.
pub fn wheel(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("wheel", "need n >= 3"));
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, if i == n { 1 } else { i + 1 }));
    }
    let mut roles = role_map((1..=n).map(|i| (i, format!("v{i}"))));
    roles.insert(0, "hub".to_owned());
    Ok(Graph::with_roles(n + 1, edges, roles).expect("wheel construction is valid"))
}

/// Helm on `n >= 3` rim vertices: a wheel with one pendant vertex attached
/// to each rim vertex. `2n + 1` vertices, `3n` edges. Hub is vertex 0 with
/// role `v0`; rim vertex `i` has role `vi`; its pendant is vertex `n + i`
/// with role `v'i`.
pub fn helm(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("helm", "need n >= 3"));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, if i == n { 1 } else { i + 1 }));
        edges.push((i, n + i));
    }
    let mut roles = BTreeMap::new();
    roles.insert(0, "v0".to_owned());
    for i in 1..=n {
        roles.insert(i, format!("v{i}"));
        roles.insert(n + i, format!("v'{i}"));
    }
    Ok(Graph::with_roles(2 * n + 1, edges, roles).expect("helm construction is valid"))
}

/// The bull graph: the path `v1 v2 v3 v4 v5` plus the chord `v2 v4`, which
/// forms a triangle on `{v2, v3, v4}` with horns at `v1` and `v5`.
/// 5 vertices, 5 edges. Roles `v1..v5` on ids `0..=4`.
pub fn bull() -> Graph {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)];
    let roles = role_map((0..5).map(|i| (i, format!("v{}", i + 1))));
    Graph::with_roles(5, edges, roles).expect("bull construction is valid")
}

/// Square of the path on `n >= 3` vertices: the path plus an edge between
/// every pair of vertices at distance exactly 2. `n` vertices, `2n - 3`
/// edges. Roles `v1..vn`.
pub fn path_square(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("path square", "need n >= 3"));
    }
    let mut edges = Vec::with_capacity(2 * n - 3);
    for i in 0..n - 1 {
        edges.push((i, i + 1));
    }
    for i in 0..n - 2 {
        edges.push((i, i + 2));
    }
    let roles = role_map((0..n).map(|i| (i, format!("v{}", i + 1))));
    Ok(Graph::with_roles(n, edges, roles).expect("path square construction is valid"))
}

/// Inserts primes into a role name: `v0 -> v'0`, `u12 -> u'12`,
/// `hub -> hub'`.
fn primed(role: &str, count: usize) -> String {
    let marks = "'".repeat(count);
    match role.find(|c: char| c.is_ascii_digit()) {
        Some(split) => format!("{}{marks}{}", &role[..split], &role[split..]),
        None => format!("{role}{marks}"),
    }
}

/// Splitting graph of `g`: one duplicate `v'` per vertex `v`, adjacent to
/// exactly the original neighbors of `v` (not to `v` itself). Vertex `i`
/// keeps its id; its duplicate is `|V| + i` with a primed role. The result
/// has `2|V|` vertices and `3|E|` edges.
pub fn splitting_graph(g: &Graph) -> Graph {
    let n = g.num_vertices();
    let mut edges = Vec::with_capacity(3 * g.num_edges());
    for &(u, w) in g.edges() {
        edges.push((u, w));
        edges.push((n + u, w));
        edges.push((u, n + w));
    }
    // Duplicates take the primed original name; when the input already uses
    // primed names (a helm, say), extra primes are added until unique.
    let mut roles = g.roles().clone();
    let mut taken: std::collections::BTreeSet<String> = roles.values().cloned().collect();
    for (&v, role) in g.roles() {
        let mut marks = 1;
        let mut name = primed(role, marks);
        while taken.contains(&name) {
            marks += 1;
            name = primed(role, marks);
        }
        taken.insert(name.clone());
        roles.insert(n + v, name);
    }
    Graph::with_roles(2 * n, edges, roles).expect("splitting of a valid graph is valid")
}

/// Corona of `g` with `m >= 1` isolated vertices: `m` fresh pendant
/// vertices attached to each vertex of `g`, so `|V|(1 + m)` vertices and
/// `|E| + m|V|` edges. Pendant `j` of vertex `x` gets id `|V| + m*x + j`.
/// Original vertices are re-roled `u1..un`; the first three pendant copies
/// per vertex are roled `vx`, `wx`, `tx`.
pub fn corona_empty(g: &Graph, m: usize) -> Result<Graph, FamilyError> {
    if m < 1 {
        return Err(bad("corona", "need m >= 1 pendant copies"));
    }
    let n = g.num_vertices();
    let mut edges = g.edges().to_vec();
    let mut roles = BTreeMap::new();
    for x in 0..n {
        roles.insert(x, format!("u{}", x + 1));
        for j in 0..m {
            let pendant = n + m * x + j;
            edges.push((x, pendant));
            let name = match j {
                0 => format!("v{}", x + 1),
                1 => format!("w{}", x + 1),
                2 => format!("t{}", x + 1),
                _ => format!("p{}_{}", j + 1, x + 1),
            };
            roles.insert(pendant, name);
        }
    }
    Ok(Graph::with_roles(n * (1 + m), edges, roles).expect("corona construction is valid"))
}

/// Two disjoint helms on four rim vertices joined by a path on `k >= 2`
/// vertices whose endpoints are the two apexes, so only `k - 2` fresh path
/// vertices are added. `k + 16` vertices, `k + 23` edges.
///
/// Ids: first helm `0..=8` (roles `v*`), second helm `9..=17` (roles `w*`),
/// path interiors `18..` (roles `u2..u(k-1)`).
pub fn helm_dumbbell(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(bad("helm dumbbell", "need a path on k >= 2 vertices"));
    }
    let first = helm(4)?;
    let offset = first.num_vertices();
    let mut edges = first.edges().to_vec();
    for &(u, w) in first.edges() {
        edges.push((u + offset, w + offset));
    }
    let mut roles = first.roles().clone();
    for (&v, role) in first.roles() {
        roles.insert(v + offset, role.replacen('v', "w", 1));
    }

    // Path chain apex -- u2 -- ... -- u(k-1) -- apex'.
    let interior_base = 2 * offset;
    let mut chain = vec![0];
    for i in 0..k - 2 {
        let id = interior_base + i;
        chain.push(id);
        roles.insert(id, format!("u{}", i + 2));
    }
    chain.push(offset);
    for pair in chain.windows(2) {
        edges.push((pair[0], pair[1]));
    }

    let num_vertices = 2 * offset + (k - 2);
    Ok(Graph::with_roles(num_vertices, edges, roles).expect("helm dumbbell construction is valid"))
}

/// Declarative description of a buildable graph family, with a textual form
/// used on the command line: `path:n`, `cycle:n`, `star:n`, `wheel:n`,
/// `helm:n`, `bull`, `psquare:n`, `spltg(<spec>)`, `corona(<spec>,m)`,
/// `helmdumbbell:k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Wheel(usize),
    Helm(usize),
    Bull,
    PathSquare(usize),
    SplittingOf(Box<FamilySpec>),
    CoronaEmpty(Box<FamilySpec>, usize),
    HelmDumbbell(usize),
}

impl FamilySpec {
    /// Builds the described graph, with roles populated.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Wheel(n) => wheel(*n),
            FamilySpec::Helm(n) => helm(*n),
            FamilySpec::Bull => Ok(bull()),
            FamilySpec::PathSquare(n) => path_square(*n),
            FamilySpec::SplittingOf(inner) => Ok(splitting_graph(&inner.build()?)),
            FamilySpec::CoronaEmpty(inner, m) => corona_empty(&inner.build()?, *m),
            FamilySpec::HelmDumbbell(k) => helm_dumbbell(*k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Helm(n) => write!(f, "helm:{n}"),
            FamilySpec::Bull => write!(f, "bull"),
            FamilySpec::PathSquare(n) => write!(f, "psquare:{n}"),
            FamilySpec::SplittingOf(inner) => write!(f, "spltg({inner})"),
            FamilySpec::CoronaEmpty(inner, m) => write!(f, "corona({inner},{m})"),
            FamilySpec::HelmDumbbell(k) => write!(f, "helmdumbbell:{k}"),
        }
    }
}

struct SpecParser<'a> {
    input: &'a str,
    rest: &'a str,
}

impl<'a> SpecParser<'a> {
    fn error(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::Parse {
            input: self.input.to_owned(),
            reason: reason.into(),
        }
    }

    fn skip_spaces(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, token: char) -> Result<(), FamilyError> {
        self.skip_spaces();
        match self.rest.strip_prefix(token) {
            Some(rest) => {
                self.rest = rest;
                Ok(())
            }
            None => Err(self.error(format!("expected {token:?}"))),
        }
    }

    fn ident(&mut self) -> Result<&'a str, FamilyError> {
        self.skip_spaces();
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.error("expected a family name"));
        }
        let (name, rest) = self.rest.split_at(end);
        self.rest = rest;
        Ok(name)
    }

    fn number(&mut self) -> Result<usize, FamilyError> {
        self.skip_spaces();
        let end = self
            .rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest.len());
        if end == 0 {
            return Err(self.error("expected a number"));
        }
        let (digits, rest) = self.rest.split_at(end);
        self.rest = rest;
        digits
            .parse()
            .map_err(|_| self.error(format!("number {digits:?} out of range")))
    }

    fn sized(&mut self, make: fn(usize) -> FamilySpec) -> Result<FamilySpec, FamilyError> {
        self.eat(':')?;
        Ok(make(self.number()?))
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let name = self.ident()?;
        match name {
            "bull" => Ok(FamilySpec::Bull),
            "path" => self.sized(FamilySpec::Path),
            "cycle" => self.sized(FamilySpec::Cycle),
            "star" => self.sized(FamilySpec::Star),
            "wheel" => self.sized(FamilySpec::Wheel),
            "helm" => self.sized(FamilySpec::Helm),
            "psquare" => self.sized(FamilySpec::PathSquare),
            "helmdumbbell" => self.sized(FamilySpec::HelmDumbbell),
            "spltg" => {
                self.eat('(')?;
                let inner = self.spec()?;
                self.eat(')')?;
                Ok(FamilySpec::SplittingOf(Box::new(inner)))
            }
            "corona" => {
                self.eat('(')?;
                let inner = self.spec()?;
                self.eat(',')?;
                let m = self.number()?;
                self.eat(')')?;
                Ok(FamilySpec::CoronaEmpty(Box::new(inner), m))
            }
            other => Err(self.error(format!("unknown family {other:?}"))),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut parser = SpecParser { input: s, rest: s };
        let spec = parser.spec()?;
        parser.skip_spaces();
        if !parser.rest.is_empty() {
            return Err(parser.error(format!("trailing input {:?}", parser.rest)));
        }
        Ok(spec)
    }
}
