//! Bitangents `y = a x + β` by elimination.
//!
//! Along such a line `Q + P y - y^3` restricts to a monic quartic in `x`; the
//! line is a bitangent when that quartic is `(x^2 + c x + d)^2`. Matching the
//! `x^3` and `x^2` coefficients fixes `c` and `d`, and the `x^1`, `x^0`
//! coefficients leave two conditions `r1`, `r2` in `Q[a][β]`. Vertical lines
//! cannot be bitangents: every line `x = x0` meets the curve in the point
//! `(0:1:0)` at infinity, where it is transversal to the flex tangent `z = 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::factor::factor;
use crate::algebra::newton::{newton_polygon, residual_polynomial, NewtonPolygon};
use crate::algebra::poly::{Poly, PolyRing};
use crate::algebra::resultant::resultant;
use crate::algebra::ring::{is_prime, reduce_rational, PrimeField, Rationals, Ring};
use crate::error::{Error, Result};
use crate::family::FamilyPoint;

/// Polynomials in `β` over `Q[a]`.
pub type BivariatePoly = Poly<Poly<BigRational>>;

pub const BITANGENTS_OFF_INFINITY: usize = 27;

#[derive(Clone, Debug, PartialEq)]
pub struct TangencySystem {
    pub r1: BivariatePoly,
    pub r2: BivariatePoly,
}

fn rings() -> (PolyRing<Rationals>, PolyRing<PolyRing<Rationals>>) {
    let qa = PolyRing::new(Rationals);
    let qab = PolyRing::new(qa.clone());
    (qa, qab)
}

/// Coefficients `e_0..e_4` in `x` of `Q(x) + P(x) (a x + β) - (a x + β)^3`.
pub fn substituted_quartic(b: &FamilyPoint) -> Vec<BivariatePoly> {
    let (qa, qab) = rings();
    let qx = PolyRing::new(qab.clone());
    let lift = |c: &BigRational| qab.constant(qa.constant(c.clone()));
    let t = b.reduce(&Rationals).trigonal(&Rationals);
    let p = qx.from_coeffs(t.p.coeffs().iter().map(lift).collect());
    let q = qx.from_coeffs(t.q.coeffs().iter().map(lift).collect());
    let y = qx.from_coeffs(vec![qab.x(), qab.constant(qa.x())]);
    let f = qx.sub(&qx.add(&q, &qx.mul(&p, &y)), &qx.pow(&y, 3));
    (0..=4).map(|i| qx.coeff(&f, i)).collect()
}

pub fn tangency_system(b: &FamilyPoint) -> TangencySystem {
    let (_, qab) = rings();
    let e = substituted_quartic(b);
    debug_assert!(qab.is_one(&e[4]));
    let half = qab.constant(PolyRing::new(Rationals).constant(BigRational::new(BigInt::one(), BigInt::from(2))));
    let two = qab.from_int(2);
    let c = qab.mul(&e[3], &half);
    let d = qab.mul(&qab.sub(&e[2], &qab.mul(&c, &c)), &half);
    let r1 = qab.sub(&e[1], &qab.mul(&two, &qab.mul(&c, &d)));
    let r2 = qab.sub(&e[0], &qab.mul(&d, &d));
    TangencySystem { r1, r2 }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BitangentResultant {
    pub poly: Poly<BigRational>,
    pub monic: bool,
}

impl BitangentResultant {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn normalized(&self) -> Self {
        BitangentResultant {
            poly: PolyRing::new(Rationals).monic(&self.poly),
            monic: true,
        }
    }
}

/// `Res_β(r1, r2)` as computed, without normalization.
pub fn bitangent_resultant_raw(b: &FamilyPoint) -> Result<BitangentResultant> {
    let (_, qab) = rings();
    let sys = tangency_system(b);
    let poly = resultant(&qab, &sys.r1, &sys.r2)?;
    let degree = poly.degree();
    if degree != Some(BITANGENTS_OFF_INFINITY) {
        return Err(Error::DegenerateMember(format!(
            "bitangent resultant has degree {degree:?}, expected {BITANGENTS_OFF_INFINITY}"
        )));
    }
    Ok(BitangentResultant { poly, monic: false })
}

/// The monic representative of `Res_β(r1, r2)`.
pub fn bitangent_resultant(b: &FamilyPoint) -> Result<BitangentResultant> {
    Ok(bitangent_resultant_raw(b)?.normalized())
}

#[derive(Clone, Debug, Serialize)]
pub struct SegmentReport {
    pub slope: String,
    pub length: usize,
    pub ramification: usize,
    /// Low to high over `F_p`.
    pub residual: Vec<u64>,
    pub residual_factor_degrees: Vec<usize>,
    pub residual_irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonReport {
    pub prime: u64,
    pub segments: Vec<SegmentReport>,
    /// Every factor over `Q_p` has degree divisible by this.
    pub factor_degree_divisor: usize,
    /// One segment, nonzero constant term and an irreducible residual.
    pub irreducible_certified: bool,
}

fn ratio_string(r: &Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn newton_report(f: &Poly<BigRational>, p: u64) -> Result<NewtonReport> {
    let polygon: NewtonPolygon = newton_polygon(f, p)?;
    let fp = PolyRing::new(PrimeField::new(p));
    let mut segments = Vec::new();
    for s in &polygon.segments {
        let r = residual_polynomial(f, p, s)?;
        let degrees = factor(&fp, &r).map(|fac| fac.degree_pattern()).unwrap_or_default();
        segments.push(SegmentReport {
            slope: ratio_string(&s.slope),
            length: s.length,
            ramification: s.ramification(),
            residual: r.coeffs().to_vec(),
            residual_irreducible: degrees.len() == 1,
            residual_factor_degrees: degrees,
        });
    }
    let divisor = segments.iter().fold(0, |g, s| g.gcd(&s.ramification)).max(1);
    let nonzero_constant = f.get(0).is_some_and(|c| !c.is_zero());
    let irreducible_certified = segments.len() == 1 && nonzero_constant && segments[0].residual_irreducible;
    Ok(NewtonReport {
        prime: p,
        segments,
        factor_degree_divisor: divisor,
        irreducible_certified,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeReport {
    pub prime: u64,
    /// `unramified`, `ramified` (reduction not squarefree) or `non-integral`.
    pub status: String,
    pub degree_pattern: Option<Vec<usize>>,
    /// `(degree, multiplicity)` of each irreducible factor of the reduction.
    pub reduction: Vec<(usize, u32)>,
    pub newton: Option<NewtonReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    pub degree: usize,
    pub primes: Vec<PrimeReport>,
    /// Transitivity over `Q_2` needs irreducibility there; this records whether
    /// the Newton data alone settles it.
    pub q2_transitivity: String,
}

pub fn prime_report(f: &Poly<BigRational>, p: u64) -> Result<PrimeReport> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let field = PrimeField::new(p);
    let fp = PolyRing::new(field);
    let newton = if p == 2 { Some(newton_report(f, p)?) } else { None };
    let reduced: Option<Vec<u64>> = f.coeffs().iter().map(|c| reduce_rational(c, &field)).collect();
    let Some(reduced) = reduced else {
        return Ok(PrimeReport {
            prime: p,
            status: "non-integral".into(),
            degree_pattern: None,
            reduction: Vec::new(),
            newton,
        });
    };
    let r = fp.from_coeffs(reduced);
    let fac = factor(&fp, &r).ok_or_else(|| Error::Domain("reduction vanishes".into()))?;
    let reduction: Vec<(usize, u32)> = fac
        .factors
        .iter()
        .map(|(g, m)| (g.degree().unwrap_or(0), *m))
        .collect();
    let squarefree = r.degree() == f.degree() && fac.factors.iter().all(|(_, m)| *m == 1);
    Ok(PrimeReport {
        prime: p,
        status: if squarefree { "unramified" } else { "ramified" }.into(),
        degree_pattern: squarefree.then(|| fac.degree_pattern()),
        reduction,
        newton,
    })
}

pub fn galois_pattern_report(b: &FamilyPoint, primes: &[u64]) -> Result<GaloisReport> {
    let r = bitangent_resultant(b)?;
    let mut reports = Vec::new();
    for &p in primes {
        reports.push(prime_report(&r.poly, p)?);
    }
    let q2 = match reports.iter().find_map(|r| r.newton.as_ref()) {
        Some(n) if n.irreducible_certified => {
            "certified: irreducible over Q_2 (single Newton segment with irreducible residual)".to_string()
        }
        Some(n) => format!(
            "not decided: factors over Q_2 have degree divisible by {}",
            n.factor_degree_divisor
        ),
        None => "not examined: 2 not among the primes".to_string(),
    };
    Ok(GaloisReport {
        degree: r.degree(),
        primes: reports,
        q2_transitivity: q2,
    })
}

/// Exponent-indexed integer coefficients, for display and comparison.
pub fn integer_coefficients(f: &Poly<BigRational>) -> Option<BTreeMap<usize, BigInt>> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| c.is_integer().then(|| (i, c.to_integer())))
        .collect()
}
