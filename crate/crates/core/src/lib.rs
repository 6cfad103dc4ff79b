//! Periodicity obstructions for knots and links from Khovanov polynomials,
//! together with the classical Alexander, HOMFLYPT, Naik and linking-number
//! criteria.

pub mod classical;
pub mod criterion;
pub mod equivlee;
pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod repcyc;

pub use criterion::{
    CriterionInput, Decomposition, Status, ValidationReport, Verdict, WidthPolicy,
};
pub use equivlee::{HomDegreeConvention, OrientationOrbit, PeriodicLinkData};
pub use error::{ClassicalError, CriterionError, EquivError, LaurentError, RepError};
pub use laurent::{BiLaurent, QLaurent, ResiduePoly, WidthConvention};
pub use repcyc::CyclotomicCoset;
