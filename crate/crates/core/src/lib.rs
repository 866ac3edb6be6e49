//! Exact commutative-algebra toolkit for gluing points of affine varieties and deciding
//! whether pullbacks of coordinate rings are finitely generated.
//!
//! Everything is computed over `Q` or a simple extension `Q[s]/(m)` with Gröbner bases.

pub mod error;
pub mod field;
pub mod glue;
pub mod groebner;
pub mod linalg;
pub mod monoid;
pub mod parse;
pub mod poly;
pub mod pullback;
pub mod tangent;

pub use error::{AlgebraError, Result};
pub use field::{FieldElement, FieldSpec, Rational};
pub use glue::{GluingProblem, GluingTarget, SubalgebraPresentation};
pub use groebner::{GroebnerBasis, IdealPresentation, StandardMonomials};
pub use monoid::{DiophantineSystem, ExponentVector, HilbertBasis, MonomialSubalgebra};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};
pub use pullback::{AlgebraMap, AlgebraPresentation, PullbackDiagram, Shape, Verdict, VerdictStatus};
pub use tangent::{PointedPresentation, TangentReport};
