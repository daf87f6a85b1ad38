//! Exact scalars, dense linear algebra, tensors and root finding.

pub mod cyclo;
pub mod lll;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod split;
pub mod subspace;
pub mod tensor;

pub use cyclo::Cyclo;
pub use matrix::Matrix;
pub use scalar::{rat, Rational, Scalar};
pub use subspace::Subspace;
pub use tensor::Tensor;
