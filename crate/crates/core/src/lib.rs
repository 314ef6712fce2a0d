//! Exact computations in Verma modules over W(2,2) and the twisted
//! Heisenberg-Virasoro algebra.

pub mod error;
pub mod liealg;
pub mod linalg;
pub mod pbw;
pub mod scalar;
pub mod tensor;
pub mod verma;

pub use error::{Error, Result};
pub use liealg::{bracket, AlgebraKind, Central, Generator, LieCombo};
pub use pbw::{HighestWeight, ModuleVector, Monomial, Verma};
pub use scalar::{Rational, Scalar, Space};
pub use tensor::{IntermediateSeries, TensorDecision, TensorVector, TensorVerdict, Window};
