//! Vertex-shelling antimatroids of split graphs: feasibility, poset
//! decomposition, maximum-weight feasible sets, paths, circuits,
//! reconstruction and the independent-set hardness reduction.

pub mod closure_opt;
pub mod error;
pub mod family;
pub mod hardness;
pub mod feasibility;
pub mod limits;
pub mod poset;
pub mod simple_graph;
pub mod split_graph;
pub mod structure;
pub mod vertex;

pub use closure_opt::{max_closure, max_weight_feasible, OptResult, Sense, WeightFn};
pub use error::{Error, Result};
pub use family::{AxiomViolation, SetFamily};
pub use feasibility::{
    classify, enumerate_feasible, enumerate_feasible_with, fos, is_feasible, is_m_convex, is_m_convex_in,
    shelling, ufs, verify_antimatroid, FeasibleClass, Shelling,
};
pub use hardness::{
    build_reduction, extract_independent_set, is_feasible_reduction, max_feasible_weight, reduction_path_poset, Element,
    ElementSet, Extraction, Optimum, Rational, ReductionInstance,
};
pub use limits::BruteLimits;
pub use poset::{build_prec, Filter, Poset};
pub use simple_graph::SimpleGraph;
pub use split_graph::{Side, SplitGraph};
pub use structure::{
    is_free, path_poset, reconstruct_graph, recognize, rooted_circuits, trace, AntimatroidPath, CircuitClass, PathAnchor,
    PathClass, Recognition, RootedCircuit, Witness,
};
pub use vertex::{VertexId, VertexSet};
