//! An exact-arithmetic workbench for primitive axial algebras of Jordan
//! type: commutative algebras generated by idempotents whose adjoint
//! eigenvalues lie in `{1, 0, eta}` and obey the Jordan fusion rules.
//!
//! The crate builds these algebras (a small catalog, the two-generated
//! family `B(eta, phi)`, spin factors, and Matsuo algebras over partial
//! triple systems), verifies their Peirce and fusion structure, classifies
//! two-generated subalgebras, computes Miyamoto involution groups and the
//! 3-transposition property, and solves for associative bilinear forms with
//! their radicals. All arithmetic is exact, over `Q` or an odd prime field.
//!
//! Start with the runnable examples (`cargo run --example catalog`), or with
//! [`dihedral::catalog`] and [`matsuo::build`] for the two main entry
//! points. The `axial` binary exposes the same pipelines on files.

pub mod algebra;
pub mod axial;
pub mod bilinear;
pub mod cli;
pub mod dihedral;
pub mod error;
pub mod formats;
pub mod geometry;
pub mod groups;
pub mod linalg;
pub mod matsuo;
pub mod scalar;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use linalg::{Definiteness, Matrix, Subspace};
pub use scalar::{Field, Scalar};
