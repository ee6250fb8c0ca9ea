//! Border strip tableaux with a descent statistic, Littlewood quotients, and
//! exact evaluation of the bivariate fake degree `f^lambda(q, t)` at roots of unity.
//!
//! For a partition `lambda` with empty `k`-core and a primitive `k`-th root of
//! unity `xi`,
//!
//! ```text
//! f^lambda(xi, t) = eps(lambda, k) * sum_{B in BST(lambda, k)} t^stat(B)
//! ```
//!
//! where `stat(B) = k * |DES(B)| + height(B^1)`. The modules here compute both
//! sides exactly, plus the intermediate objects (quotients, tableau tuples,
//! Schur specialisations, the composition bijection) and a [`verify`] harness
//! that checks the whole chain exhaustively for small sizes.

pub mod bijections;
pub mod cycpoly;
pub mod error;
pub mod par;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use cycpoly::{BiPoly, CycElem, CycPolyT, IntPoly, RootOfUnity};
pub use error::{Error, Result};
pub use partitions::{BorderStrip, Cell, EdgeSequence, Partition, PartitionTuple, Step};
pub use tableaux::{
    BorderStripTableau, DescentData, SemistandardTableauTuple, StandardTableauTuple,
};
