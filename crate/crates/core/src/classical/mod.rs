//! Classical periodicity obstructions: the Murasugi congruence for the
//! Alexander polynomial, the HOMFLYPT congruence, Naik's condition on the
//! homology of branched covers, and linking-number and determinant tests for
//! links.

mod alexander;
mod fp;
mod homfly;
mod linking;
mod naik;

pub use alexander::{murasugi_check, quotient_divides, AlexPoly, MurasugiResult};
pub use homfly::{homflypt_check, HomflyConvention, HomflyPoly, HomflyResult};
pub use linking::{det_divisibility, linking_obstruction, LinkingResult};
pub use naik::{
    l_q, naik_multiplicity_check, naik_sk_check, resultant, sk_ratio, NaikResult, SkPrime,
    TorsionDecomp,
};
