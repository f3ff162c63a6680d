//! The divided discriminant `Res(F_x, F_y, F_z) / 2^14` of the homogenized quartic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::point::{FamilyPoint, PlaneQuarticForm};
use crate::algebra::macaulay::macaulay_resultant;
use crate::algebra::ring::{Integers, Ring};
use crate::error::{Error, Result};

/// `4^7`: for a quartic in three variables the resultant of the partials is
/// `4^((3^3 + 1) / 4)` times the discriminant.
pub const DISCRIMINANT_NORMALIZATION: u64 = 1 << 14;

pub fn resultant_of_partials<R: Ring>(ring: &R, f: &PlaneQuarticForm<R::Elem>) -> Result<R::Elem> {
    macaulay_resultant(ring, &[f.partial(ring, 0), f.partial(ring, 1), f.partial(ring, 2)])
}

pub fn discriminant(b: &FamilyPoint) -> Result<BigInt> {
    let r = resultant_of_partials(&Integers, &b.homogenize(&Integers))?;
    let (q, rem) = r.div_rem(&BigInt::from(DISCRIMINANT_NORMALIZATION));
    if !rem.is_zero() {
        return Err(Error::Domain(format!("resultant of partials {r} is not divisible by 2^14")));
    }
    Ok(q)
}
