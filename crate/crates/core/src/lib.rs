//! Exact computations with isometries of Euclidean space: move-sets and
//! min-sets, reflection length, minimal reflection factorizations, and the
//! poset of invariants that models intervals `[1, w]` in the isometry group.
//!
//! All arithmetic is over arbitrary-precision rationals; every equality is
//! exact.

pub mod affine;
pub mod error;
pub mod factorization;
pub mod isometry;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod poset;

pub use affine::{AffineSubspaceE, AffineSubspaceV, Point};
pub use error::{Error, Result};
pub use factorization::{
    chain_to_factorization, factor, factor_elliptic, factor_hyperbolic, factorization_to_chain, rewrite_shift,
    verify_minimal, Factorization,
};
pub use isometry::{
    interval_contains, interval_leq, is_reflection_below, motion_reflection, predict_product, Isometry,
    IsometryClass, ProductCase, ProductPrediction, Reflection, Tag,
};
pub use linalg::{LinearSubspace, Matrix, Scalar, Vector};
pub use poset::{hasse_dot, inv_map, HasseDiagram, Bowtie, JoinResult, Kind, MeetResult, PosetContext, PosetElement};
