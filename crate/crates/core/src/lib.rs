//! Exact computations for the trigonal quartics `y^3 = x^4 + P(x) y + Q(x)` with a
//! hyperflex at infinity.

pub mod algebra;
pub mod bitangents;
pub mod e6;
pub mod error;
pub mod family;
pub mod padic;
pub mod report;
pub mod stats;

pub use algebra::newton::{NewtonPolygon, Segment};
pub use algebra::poly::{Poly, PolyRing};
pub use algebra::ring::{Field, FiniteField, Integers, PrimeField, Rationals, Ring};
pub use algebra::series::TruncatedSeries;
pub use bitangents::{BitangentResultant, GaloisReport, TangencySystem};
pub use e6::E6Report;
pub use error::{Error, Result};
pub use family::{FamilyPoint, PlaneQuarticForm, TrigonalAffineForm};
pub use padic::{BranchSeries, LogSeries, RhoLogImage};
pub use report::{Check, Report, Suite};
pub use stats::{ChabautyReport, DensityReport, MaxPointsReport};
