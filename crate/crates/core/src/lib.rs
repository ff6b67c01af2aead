//! Exact spacetime kinematics: relativistic and late classical spacetime,
//! their transformation groups, and first-order definability checks, all
//! over exact rational and quadratic-surd arithmetic.

pub mod error;
pub mod fol;
pub mod groups;
pub mod harness;
pub mod linalg;
pub mod relations;
pub mod sampling;
pub mod scalar;
pub mod verdict;

pub use error::{Error, Result};
pub use linalg::{AffineMap, Mat4, Point4};
pub use scalar::{Rational, Scalar, Sign};
