//! Exact analysis of the coverage of surface-of-revolution parametrizations.
//!
//! Given a proper rational parametrization `(0, p(t), q(t))` of a profile
//! curve in the `(y,z)`-plane, the classical parametrization of the surface
//! obtained by rotating the profile around the `z`-axis is
//!
//! ```text
//! P(s,t) = ( 2s/(1+s^2) * p(t),  (1-s^2)/(1+s^2) * p(t),  q(t) )
//! ```
//!
//! `P` may fail to reach a small subset of the surface. This crate computes
//! a critical set containing everything `P` misses — over the reals it is
//! one of: nothing, a single point, the mirror curve `(0,-p,q)`, or the
//! mirror curve together with one cross-section circle; over the complexes
//! there are additionally pairs of lines `{x ± iy = 0}` at finitely many
//! `z`-levels. An independent implicitization-based oracle decides exact
//! reachability of rational points and cross-checks every verdict.
//!
//! All decision procedures run over exact rational arithmetic; floating
//! point appears only in display-layer root approximations.

pub mod coverage;
pub mod exactpoly;
pub mod oracle;
pub mod profile;
pub mod ratexpr;

pub use coverage::{Circle, ComplexCriticalSet, Point3, RealCriticalSet};
pub use exactpoly::{MPoly, Poly, Rat, Var};
pub use oracle::{ABSplit, ImplicitProfile, ImplicitSurface, LevelDecomposition};
pub use profile::{Normality, ProfileCurve, ProfileError};
pub use ratexpr::{ParseError, RationalFunction};
