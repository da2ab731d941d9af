//! Semi-transitive orientations of small graphs.
//!
//! The crate decides semi-transitive (and transitive) orientability by pruned
//! backtracking, certifies non-orientability with shortcut witnesses, and runs
//! the orientation-preserving edge operations (deletion, addition, lifting,
//! subdivision) as validated pipelines. It also builds graph products,
//! odd-girth blowups and alternation graphs of words, and enumerates all small
//! graphs to count the non-orientable ones.

pub mod bits;
pub mod canon;
pub mod census;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod orientation;
pub mod solver;
pub mod transforms;

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalCode,
};
pub use census::{run_census, CensusClass, CensusReport};
pub use constructions::{
    alternation_graph, find_w5_in_product, odd_girth, odd_girth_blowup, product, ProductKind,
    ProductWitness, Word,
};
pub use error::{Error, Result};
pub use graph::{generate, Edge, Edit, Family, Graph, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
pub use induced::{induced_contains, Embedding};
pub use orientation::{
    find_shortcut, is_acyclic, is_semi_transitive, is_transitive, shortcut_oracle,
    topological_levels, GoodPartition, Orientation, Shortcut,
};
pub use solver::{
    decide, find_semi_transitive_orientation, find_transitive_orientation, neighborhood_filter,
    Mode, SolveStats, SolveVerdict, Solver, Status,
};
pub use transforms::{
    add_to_complete, addable_pair, deletable_edge, delete_to_empty, extend_to_subdivision,
    lift_to_matching, liftable_path, safe_delete_k4free, validate_trace, TransformStep,
    TransformTrace,
};
