//! Graph families, signed product cordial (SPC) labelings, closed-form
//! labeling schemes, and an exhaustive search oracle that cross-checks them.
//!
//! A vertex labeling `V -> {+1, -1}` induces on each edge the product of its
//! endpoint signs; the labeling is signed product cordial when the counts of
//! the two signs differ by at most one on vertices and on edges. This crate
//! provides:
//!
//! - [`graph`]: a minimal immutable undirected simple graph with optional
//!   role names and a JSON wire format;
//! - [`families`]: constructors for paths, cycles, stars, wheels, helms, the
//!   bull, path squares, splitting graphs, coronas with pendant copies, and
//!   helm dumbbells;
//! - [`labeling`]: signs, labelings, and the SPC verdict;
//! - [`schemes`]: the closed-form labeling constructions for five of these
//!   families, reported honestly against their expected counts;
//! - [`search`]: exhaustive enumeration with symmetry reduction and
//!   admissible pruning, the ground truth the schemes are checked against;
//! - [`dot`]: deterministic Graphviz export.
//!
//! ```
//! use spc_core::{families, labeling, schemes, search};
//!
//! let scheme = schemes::spltg_star_scheme(8)?;
//! assert!(scheme.report.is_spc);
//!
//! let oracle = search::search_spc(
//!     &families::splitting_graph(&families::bull()),
//!     &search::SearchOptions::exists(),
//! )?;
//! assert!(oracle.exists);
//! let witness = oracle.witness.unwrap();
//! assert!(labeling::evaluate(&scheme.graph, &scheme.labeling)?.is_spc);
//! # let _ = witness;
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod dot;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod schemes;
pub mod search;

pub use families::{FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, VertexId, Violation};
pub use labeling::{
    evaluate, induced_edge_sign, CordialityReport, LabelingError, Sign, SignedLabeling,
};
pub use schemes::{
    ExpectedCounts, HelmDumbbellVariant, SchemeError, SchemeId, SchemeOutput,
};
pub use search::{
    search_spc, verify_scheme_against_oracle, OracleAgreement, SearchError, SearchMode,
    SearchOptions, SearchResult, DEFAULT_MAX_VERTICES,
};
