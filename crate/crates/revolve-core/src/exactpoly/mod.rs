//! Exact arithmetic kernel: arbitrary-precision rationals, dense univariate
//! polynomials, sparse multivariate polynomials, gcds, resultants and root
//! utilities.
//!
//! Everything here is a pure function over immutable values. The decision
//! procedures built on top of this module never touch floating point;
//! [`roots::numeric_roots`] exists for display purposes only.

mod bipoly;
mod factorint;
mod mpoly;
mod poly;
pub mod rat;
mod resultant;
mod roots;

pub(crate) use bipoly::BiPoly;
pub use mpoly::{MPoly, Var, VarSet};
pub use poly::Poly;
pub use rat::Rat;
pub use resultant::resultant;
pub use roots::{numeric_roots, rational_roots, NumericRootError, ZeroPolynomial};
