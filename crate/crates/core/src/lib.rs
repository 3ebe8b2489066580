//! Exact computations with the baby TKK algebra of the non-lattice semilattice
//! in ℤ², its realization through the σ-twisted affinization of the sp₄
//! toroidal conformal algebra, and windowed highest-weight modules.

pub mod conformal;
pub mod expr;
pub mod lab;
pub mod lattice;
pub mod linalg;
pub mod lincomb;
pub mod pbw;
pub mod scalars;
pub mod sp4;
pub mod tkk;
pub mod toroidal;
pub mod twisted;

pub use lattice::{in_semilattice, omega, LatticePoint, Stratum};
pub use lincomb::LinComb;
pub use scalars::{binom, GaussRational, Rational, ScalarError};
