//! Exact symmetry operators on tensors and numeric space-time verification.
//!
//! The crate has two halves that meet in the middle:
//!
//! * an exact-arithmetic half over the rationals: permutations and the group
//!   ring of the symmetric group ([`perm`], [`group_ring`]), Young tableaux
//!   and their symmetrizers ([`young`]), Littlewood-Richardson products
//!   ([`lr`]), dense tensors acted on by symmetry operators ([`tensor`]),
//!   and span-rank experiments for algebraic curvature tensors
//!   ([`curvature`]);
//! * a floating-point differential-geometry half: second-order forward jets
//!   ([`jet`]), a small metric catalog ([`metric`]), per-point geometric
//!   frames with the observer-projection fields ([`frame`]), and term-table
//!   driven verification of the curvature formulas ([`formulas`]).
//!
//! Everything is deterministic: randomized experiments draw from the
//! splittable generator in [`rng`] seeded explicitly by the caller.

pub mod curvature;
pub mod error;
pub mod formulas;
pub mod frame;
pub mod group_ring;
pub mod jet;
pub mod linalg;
pub mod lr;
pub mod metric;
pub mod perm;
pub mod rational;
pub mod rng;
pub mod tensor;
pub mod young;

pub use error::{AlgebraError, GeometryError};
pub use group_ring::GroupRingElement;
pub use perm::Permutation;
pub use rational::Rational;
pub use tensor::Tensor;
pub use young::{Partition, YoungTableau};
