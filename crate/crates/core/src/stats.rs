//! Finite-field sweeps over the family and the corollary arithmetic built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::ring::{is_prime, PrimeField};
use crate::algebra::serial::rational_to_string;
use crate::error::{Error, Result};
use crate::family::{box_count as lattice_box_count, is_smooth, point_count, FamilyPoint};

/// Largest prime accepted by the exhaustive sweeps.
pub const SWEEP_PRIME_LIMIT: u64 = 13;

/// `q + 1 + 3 floor(2 sqrt q)` at `q = 7`.
pub const SERRE_WEIL_F7: u64 = 23;

/// Exact fraction and its 6-digit decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactRatio {
    pub exact: String,
    pub decimal: String,
}

impl ExactRatio {
    pub fn new(r: &BigRational) -> Self {
        ExactRatio {
            exact: rational_to_string(r),
            decimal: decimal(r, 6),
        }
    }
}

/// `r` rounded half-up to `digits` places.
pub fn decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let neg = rounded < BigInt::zero();
    let a = if neg { -rounded } else { rounded };
    let (int, frac) = (&a / &scale, &a % &scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = digits as usize);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub prime: u64,
    pub total: u64,
    pub smooth: u64,
    #[serde(skip)]
    pub density: BigRational,
    #[serde(rename = "density")]
    pub rendered: ExactRatio,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxPointsReport {
    pub prime: u64,
    pub max: u64,
    pub witness: [u64; 6],
    pub min: u64,
    pub smooth: u64,
}

fn point_from_index(p: u64, first: u64, mut rest: u64) -> FamilyPoint<u64> {
    let mut v = [0u64; 6];
    v[0] = first;
    for slot in v[1..].iter_mut().rev() {
        *slot = rest % p;
        rest /= p;
    }
    FamilyPoint::from_array(v)
}

#[derive(Clone, Copy, Debug, Default)]
struct Slice {
    smooth: u64,
    max: Option<(u64, [u64; 6])>,
    min: Option<u64>,
}

fn sweep_slice(field: &PrimeField, first: u64, with_counts: bool) -> Slice {
    let p = field.modulus();
    let mut s = Slice::default();
    for rest in 0..p.pow(5) {
        let b = point_from_index(p, first, rest);
        if !is_smooth(field, &b) {
            continue;
        }
        s.smooth += 1;
        if with_counts {
            let n = point_count(field, &b);
            if s.max.is_none_or(|(m, _)| n > m) {
                s.max = Some((n, b.clone().into_array()));
            }
            s.min = Some(s.min.map_or(n, |m| m.min(n)));
        }
    }
    s
}

/// Exhaustive sweep of `F_p^6`, one task per value of `p2`, merged in order of `p2`.
fn sweep(p: u64, with_counts: bool) -> Result<Vec<Slice>> {
    if !is_prime(p) || p > SWEEP_PRIME_LIMIT {
        return Err(Error::InvalidInput(format!(
            "sweeps need a prime at most {SWEEP_PRIME_LIMIT}, got {p}"
        )));
    }
    let field = PrimeField::new(p);
    Ok((0..p).into_par_iter().map(|a| sweep_slice(&field, a, with_counts)).collect())
}

pub fn density_good_reduction(p: u64) -> Result<DensityReport> {
    let slices = sweep(p, false)?;
    let smooth: u64 = slices.iter().map(|s| s.smooth).sum();
    let total = p.pow(6);
    let density = BigRational::new(BigInt::from(smooth), BigInt::from(total));
    Ok(DensityReport {
        prime: p,
        total,
        smooth,
        rendered: ExactRatio::new(&density),
        density,
    })
}

/// Largest point count among smooth members mod `p`, first witness in sweep order.
pub fn max_points(p: u64) -> Result<MaxPointsReport> {
    let slices = sweep(p, true)?;
    let mut best: Option<(u64, [u64; 6])> = None;
    for s in &slices {
        if let Some((n, w)) = s.max {
            if best.is_none_or(|(m, _)| n > m) {
                best = Some((n, w));
            }
        }
    }
    let (max, witness) = best.ok_or_else(|| Error::Domain(format!("no smooth member mod {p}")))?;
    Ok(MaxPointsReport {
        prime: p,
        max,
        witness,
        min: slices.iter().filter_map(|s| s.min).min().unwrap_or(0),
        smooth: slices.iter().map(|s| s.smooth).sum(),
    })
}

pub fn max_points_f7() -> Result<MaxPointsReport> {
    max_points(7)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChabautyReport {
    pub selmer_average_bound: ExactRatio,
    pub delta_low: ExactRatio,
    pub d7: ExactRatio,
    /// `max(0, δ_low + d7 - 1)`.
    pub majority_low: ExactRatio,
    /// `δ_low · d7`, the value if the two conditions were independent.
    pub independent_product: ExactRatio,
    pub max_points_f7: u64,
    pub point_cap: u64,
    #[serde(skip)]
    pub exact: ChabautyExact,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ChabautyExact {
    pub delta_low: BigRational,
    pub majority_low: BigRational,
    pub independent_product: BigRational,
}

fn clamp01(r: BigRational) -> BigRational {
    r.max(BigRational::zero()).min(BigRational::one())
}

/// `δ + 8 (1 - δ) <= S` gives `δ >= (8 - S) / 7`.
pub fn chabauty_combine(s: &BigRational, d7: &BigRational, max_f7: u64) -> Result<ChabautyReport> {
    if *s < BigRational::one() {
        return Err(Error::InvalidInput("average Selmer bound below 1".into()));
    }
    let seven = BigRational::from_integer(BigInt::from(7));
    let eight = BigRational::from_integer(BigInt::from(8));
    let delta = clamp01((eight - s) / seven);
    let majority = (&delta + d7 - BigRational::one()).max(BigRational::zero());
    let product = &delta * d7;
    Ok(ChabautyReport {
        selmer_average_bound: ExactRatio::new(s),
        delta_low: ExactRatio::new(&delta),
        d7: ExactRatio::new(d7),
        majority_low: ExactRatio::new(&majority),
        independent_product: ExactRatio::new(&product),
        max_points_f7: max_f7,
        point_cap: max_f7 + 4,
        exact: ChabautyExact {
            delta_low: delta,
            majority_low: majority,
            independent_product: product,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoxReport {
    pub height: String,
    pub count: String,
    /// `count / (64 a^{7/12})`.
    pub ratio: String,
}

pub fn box_report(a: &BigInt) -> Result<BoxReport> {
    if *a < BigInt::one() {
        return Err(Error::InvalidInput(format!("height must be positive, got {a}")));
    }
    let count = lattice_box_count(a);
    let af = a.to_f64().unwrap_or(f64::INFINITY);
    let ratio = count.to_f64().unwrap_or(f64::INFINITY) / (64.0 * af.powf(7.0 / 12.0));
    Ok(BoxReport {
        height: a.to_string(),
        count: count.to_string(),
        ratio: format!("{ratio:.6}"),
    })
}
