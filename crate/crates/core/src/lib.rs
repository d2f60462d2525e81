//! Exact-arithmetic engine for symmetry actions on polynomial singular
//! foliations.
//!
//! The crate computes, over Q[x_1..x_d]:
//! involutivity certificates and membership witnesses for finitely generated
//! modules of vector fields, defect cocycles and connection data of weak
//! symmetry actions, isotropy Lie algebras at points, truncated syzygy
//! resolutions with the induced binary bracket on g[1] (+) E_{-1}, and the
//! Chevalley-Eilenberg class that obstructs straightening a weak action into
//! a strict one (equivalently, extending an action from an affine variety to
//! the ambient space).

pub mod kernel;
pub mod linalg;
pub mod groebner;
pub mod vect;
pub mod foliation;
pub mod liealg;
pub mod symaction;
pub mod infalgd;
pub mod obstruction;
pub mod oracle;

pub use kernel::{parse_scalar, ratio, scalar, Monomial, Poly, Ring, Scalar};
