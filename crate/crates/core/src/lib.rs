//! Interval and spherical designs with odd harmonic index set
//! `T_m = {1, 3, .., 2m-1}`: verification, exact symmetry and antipodality
//! certificates, and the constructions attaining the optimal sizes.
//!
//! Kernels are generic over [`Scalar`]; use the aliases below for the two
//! common instantiations.

pub mod constructions;
pub mod error;
pub mod interval;
pub mod io;
pub mod polyroot;
pub mod scalar;
pub mod spherical;
pub mod symfun;
pub mod trig;

pub use error::{Error, Result, ToleranceFailure};
pub use interval::{Configuration, DesignReport, SymmetryCertificate, WeightedConfiguration};
pub use polyroot::{IsolatingInterval, RationalPolynomial, SturmSequence};
pub use scalar::{Arithmetic, Rational, Scalar, DEFAULT_TOL};
pub use spherical::{AntipodalCertificate, SphericalConfig, UnitVector};
pub use symfun::{ElemSymVector, PowerSumVector};

pub type ExactConfiguration = Configuration<Rational>;
pub type FloatConfiguration = Configuration<f64>;
pub type ExactWeighted = WeightedConfiguration<Rational>;
pub type FloatWeighted = WeightedConfiguration<f64>;
pub type ExactSphericalConfig = SphericalConfig<Rational>;
pub type FloatSphericalConfig = SphericalConfig<f64>;
