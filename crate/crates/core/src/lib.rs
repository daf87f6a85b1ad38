//! Exact computation with finite-dimensional Hopf algebras and their
//! quasitriangular structures.
//!
//! All arithmetic is exact. The core types are generic over [`Scalar`];
//! the aliases below fix the scalar to cyclotomic numbers.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod exact_math;
pub mod hopf_core;
pub mod io;
pub mod qt_structure;
pub mod quotients;
pub mod transmutation;

pub use error::{Error, Result};
pub use exact_math::{rat, Cyclo, Matrix, Rational, Scalar, Subspace, Tensor};
pub use hopf_core::{AxiomReport, FiniteDimHopf, HopfMorphism};
pub use qt_structure::QtPair;

/// Hopf algebra over the cyclotomic numbers.
pub type Hopf = FiniteDimHopf<Cyclo>;
/// Quasitriangular pair over the cyclotomic numbers.
pub type Qt = QtPair<Cyclo>;
pub type RationalHopf = FiniteDimHopf<Rational>;
pub type RationalQt = QtPair<Rational>;
