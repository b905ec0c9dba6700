//! Signed homology of symbolically presented Smale spaces: fiber products of
//! a signed s/u-bijective pair, the double complex, its rationalized homology
//! and the Lefschetz identity.

pub mod chain;
pub mod fiber;
pub mod homology;
pub mod lefschetz;
pub mod presentation;

pub use chain::{chain_space, differential, ChainCell, Differential, Generator};
pub use fiber::{fiber_graph, EdgeTuple, FiberGraph};
pub use homology::{homology, CellSummary, ChainComplex, GradedHomology, HomologyDegree};
pub use lefschetz::{
    lefschetz_check, lefschetz_number, lefschetz_rows, lefschetz_table, signed_fixed_points,
    LefschetzRow,
};
pub use presentation::{diagonal_pair, two_block_pair, PairFile, SuPairPresentation, DEFAULT_CAP};
