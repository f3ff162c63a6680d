//! The residue disk at infinity: branch, differentials, formal logarithm.
//!
//! With `y = 1` the point at infinity becomes `(x, z) = (0, 0)` with local
//! parameter `x`, and the curve reads
//! `z = x^4 + p2 x^2 z + p5 x z^2 + p8 z^3 + p6 x^2 z^2 + p9 x z^3 + p12 z^4`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::ring::{is_prime, unit_part_mod, valuation, Field, PrimeField, Ring};
use crate::algebra::serial::rational_to_string;
use crate::algebra::series::{series_solve_fixed_point, TruncatedSeries};
use crate::error::{Error, Result};
use crate::family::{is_smooth, point_count, FamilyPoint};

pub type ProjectivePoint = [u64; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct BranchSeries {
    pub z: TruncatedSeries,
}

impl BranchSeries {
    pub fn precision(&self) -> usize {
        self.z.precision()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogSeries {
    pub components: [TruncatedSeries; 3],
    pub prime: u64,
}

impl LogSeries {
    pub fn precision(&self) -> usize {
        self.components[0].precision()
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Vec<String>> = self
            .components
            .iter()
            .map(|s| s.coeffs().iter().map(rational_to_string).collect())
            .collect();
        json!({
            "prime": self.prime,
            "precision": self.precision(),
            "components": comps,
        })
    }
}

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn series_const(c: &BigInt, n: usize) -> TruncatedSeries {
    TruncatedSeries::new(vec![q(c)], n)
}

fn x_pow(k: usize, n: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(BigRational::one(), k, n)
}

/// Right-hand side of the branch equation evaluated at `z`.
fn branch_rhs(b: &FamilyPoint, z: &TruncatedSeries) -> TruncatedSeries {
    let n = z.precision();
    let c = |v: &BigInt| series_const(v, n);
    let (z2, z3) = (z.mul(z), z.pow(3));
    let z4 = z2.mul(&z2);
    let x = x_pow(1, n);
    let x2 = x_pow(2, n);
    let linear = c(&b.p2).mul(&x2).mul(z);
    let quad = c(&b.p5).mul(&x).add(&c(&b.p6).mul(&x2)).mul(&z2);
    let cubic = c(&b.p8).add(&c(&b.p9).mul(&x)).mul(&z3);
    x_pow(4, n).add(&linear).add(&quad).add(&cubic).add(&c(&b.p12).mul(&z4))
}

/// `rhs(z) - z`; vanishes to the working precision on the branch.
pub fn branch_residual(b: &FamilyPoint, z: &TruncatedSeries) -> TruncatedSeries {
    branch_rhs(b, z).sub(z)
}

pub fn solve_branch(b: &FamilyPoint, n: usize) -> Result<BranchSeries> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("branch precision must be at least 5, got {n}")));
    }
    let z = series_solve_fixed_point(|z| branch_rhs(b, z), &TruncatedSeries::zero(n), n)?;
    Ok(BranchSeries { z })
}

/// `1 - dG/dz` on the branch, `G` the right-hand side.
fn z_partial(b: &FamilyPoint, z: &TruncatedSeries) -> TruncatedSeries {
    let n = z.precision();
    let c = |v: &BigInt, k: i64| series_const(&(v * k), n);
    let x = x_pow(1, n);
    let x2 = x_pow(2, n);
    let z2 = z.mul(z);
    let dg = c(&b.p2, 1)
        .mul(&x2)
        .add(&c(&b.p5, 2).mul(&x).mul(z))
        .add(&c(&b.p6, 2).mul(&x2).mul(z))
        .add(&c(&b.p8, 3).mul(&z2))
        .add(&c(&b.p9, 3).mul(&x).mul(&z2))
        .add(&c(&b.p12, 4).mul(&z2).mul(z));
    TruncatedSeries::one(n).sub(&dg)
}

/// `[ω1, ω2, ω3] = [1, x, z] / (1 - dG/dz)`, coefficients of `dx`.
pub fn omega_basis(b: &FamilyPoint, n: usize) -> Result<[TruncatedSeries; 3]> {
    let branch = solve_branch(b, n.max(5))?;
    let z = branch.z.truncate(n);
    let w1 = z_partial(b, &z).inverse()?;
    let w2 = w1.mul(&x_pow(1, n));
    let w3 = w1.mul(&z);
    Ok([w1, w2, w3])
}

/// Term-by-term antiderivatives of the `ω_i`, known modulo `x^n`.
pub fn formal_log(b: &FamilyPoint, p: u64, n: usize) -> Result<LogSeries> {
    check_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidInput(format!("log precision must be at least 2, got {n}")));
    }
    let [w1, w2, w3] = omega_basis(b, n - 1)?;
    Ok(LogSeries {
        components: [w1.integrate(), w2.integrate(), w3.integrate()],
        prime: p,
    })
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{p} is not prime")))
    }
}

fn normalize(field: &PrimeField, v: [u64; 3]) -> ProjectivePoint {
    let lead = *v.iter().find(|c| **c != 0).expect("nonzero vector");
    let inv = field.inv(&lead).expect("unit");
    v.map(|c| field.mul(&c, &inv))
}

/// Scale by the minimal `p`-power, reduce, and normalize the first nonzero entry to 1.
pub fn rho(v: &[BigRational; 3], p: u64) -> Result<ProjectivePoint> {
    check_prime(p)?;
    let field = PrimeField::new(p);
    let vals: Vec<Option<i64>> = v.iter().map(|c| valuation(c, p)).collect();
    let m = vals
        .iter()
        .flatten()
        .min()
        .copied()
        .ok_or_else(|| Error::Domain("rho of the zero vector".into()))?;
    let reduced = std::array::from_fn(|i| match vals[i] {
        Some(vi) if vi == m => unit_part_mod(&v[i], &field).expect("p-adic unit"),
        _ => 0,
    });
    Ok(normalize(&field, reduced))
}

/// `floor(log_p n)` for `n >= 1`.
fn floor_log(p: u64, n: usize) -> i64 {
    let mut k = 0;
    let mut acc = p as u128;
    while acc <= n as u128 {
        acc *= p as u128;
        k += 1;
    }
    k
}

/// Known nonzero terms `(n, v_p(c_n), c_n)` plus the tail from `x^N` on, where
/// `v_p(c_n) >= -floor(log_p n)`.
#[derive(Clone, Debug)]
struct DiskSeries {
    terms: Vec<(usize, i64, BigRational)>,
    tail_from: Option<usize>,
    prime: u64,
}

enum Stratum {
    Dominant { n: usize, value: i64 },
    Tie { first: usize, last: usize },
    Inconclusive,
}

impl DiskSeries {
    fn new(coeffs: &[BigRational], tail_from: Option<usize>, prime: u64) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(n, c)| *n > 0 && !c.is_zero())
            .map(|(n, c)| (n, valuation(c, prime).expect("nonzero"), c.clone()))
            .collect();
        DiskSeries { terms, tail_from, prime }
    }

    fn tail_bound(&self, m: i64) -> Option<i64> {
        self.tail_from.map(|n| n as i64 * m - floor_log(self.prime, n))
    }

    fn stratum(&self, m: i64) -> Stratum {
        let vals: Vec<(usize, i64)> = self.terms.iter().map(|(n, v, _)| (*n, v + *n as i64 * m)).collect();
        let Some(min) = vals.iter().map(|t| t.1).min() else {
            return Stratum::Inconclusive;
        };
        if self.tail_bound(m).is_some_and(|t| min >= t) {
            return Stratum::Inconclusive;
        }
        let at_min: Vec<usize> = vals.iter().filter(|t| t.1 == min).map(|t| t.0).collect();
        if at_min.len() == 1 {
            Stratum::Dominant { n: at_min[0], value: min }
        } else {
            Stratum::Tie {
                first: at_min[0],
                last: *at_min.last().unwrap(),
            }
        }
    }

    fn lowest(&self) -> Option<(usize, i64)> {
        self.terms.first().map(|(n, v, _)| (*n, *v))
    }

    /// Least `M >= 1` from which the lowest term strictly dominates on every stratum.
    fn dominance_threshold(&self) -> Option<i64> {
        let (n0, v0) = self.lowest()?;
        let mut m = 1;
        for (n, v, _) in self.terms.iter().skip(1) {
            m = m.max((v0 - v).div_euclid((n - n0) as i64) + 1);
        }
        if let Some(nt) = self.tail_from {
            if nt <= n0 {
                return None;
            }
            m = m.max((v0 + floor_log(self.prime, nt)).div_euclid((nt - n0) as i64) + 1);
        }
        Some(m)
    }

    fn coeff(&self, n: usize) -> &BigRational {
        &self.terms.iter().find(|t| t.0 == n).expect("known term").2
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct StratumCertificate {
    /// `v(x) = m`; the last stratum stands for every `m >= stable_from`.
    pub m: i64,
    pub valuations: [i64; 3],
    pub dominant_exponents: [usize; 3],
    pub tail_bound: i64,
    pub classes: Vec<ProjectivePoint>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RhoLogCertificate {
    pub prime: u64,
    pub precision: usize,
    pub good_reduction: bool,
    pub points_mod_p: u64,
    /// Every known log coefficient satisfies `v_p(c_n) >= -v_p(n)`.
    pub tail_hypothesis_checked: bool,
    pub stable_from: i64,
    pub strata: Vec<StratumCertificate>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RhoLogImage {
    pub image: Vec<ProjectivePoint>,
    pub certificate: RhoLogCertificate,
}

fn disk_preconditions(b: &FamilyPoint, p: u64) -> Result<u64> {
    check_prime(p)?;
    let field = PrimeField::new(p);
    let bp = b.reduce(&field);
    if !is_smooth(&field, &bp) {
        return Err(Error::Scope(format!("bad reduction at {p}")));
    }
    let count = point_count(&field, &bp);
    if count != 1 {
        return Err(Error::Scope(format!(
            "{count} points mod {p}: more than the residue disk at infinity"
        )));
    }
    Ok(count)
}

fn tail_hypothesis_holds(log: &LogSeries) -> bool {
    let p = log.prime;
    log.components.iter().all(|s| {
        s.coeffs().iter().enumerate().skip(1).all(|(n, c)| {
            let vn = crate::algebra::ring::int_valuation(&BigInt::from(n), p);
            valuation(c, p).is_none_or(|v| v >= -vn)
        })
    })
}

fn more_precision(n: usize) -> Error {
    Error::IncreasePrecision { precision: 2 * n }
}

/// `ρ(log(X(Q_p)))` for a curve whose `Q_p`-points all lie in the disk at infinity.
pub fn rho_log_image(b: &FamilyPoint, p: u64, n: usize) -> Result<RhoLogImage> {
    let count = disk_preconditions(b, p)?;
    let log = formal_log(b, p, n)?;
    if !tail_hypothesis_holds(&log) {
        return Err(Error::Scope("log coefficients violate the integrality tail bound".into()));
    }
    let field = PrimeField::new(p);
    let comps: Vec<DiskSeries> = log.components.iter().map(|s| DiskSeries::new(s.coeffs(), Some(n), p)).collect();
    let mut stable = 1;
    let mut lows = Vec::new();
    for c in &comps {
        stable = stable.max(c.dominance_threshold().ok_or_else(|| more_precision(n))?);
        lows.push(c.lowest().expect("threshold implies a term"));
    }
    for (i, &(ni, vi)) in lows.iter().enumerate() {
        for &(nj, vj) in &lows[i + 1..] {
            if ni != nj {
                // v_i + n_i m = v_j + n_j m
                let (num, den) = if ni > nj { (vj - vi, (ni - nj) as i64) } else { (vi - vj, (nj - ni) as i64) };
                stable = stable.max(num.div_euclid(den) + 1);
            }
        }
    }
    let mut image: Vec<ProjectivePoint> = Vec::new();
    let mut strata = Vec::new();
    for m in 1..=stable {
        let mut vals = [0i64; 3];
        let mut exps = [0usize; 3];
        for (j, c) in comps.iter().enumerate() {
            match c.stratum(m) {
                Stratum::Dominant { n: e, value } => {
                    vals[j] = value;
                    exps[j] = e;
                }
                _ => return Err(more_precision(n)),
            }
        }
        let mu = *vals.iter().min().unwrap();
        let units: [u64; 3] = std::array::from_fn(|j| {
            if vals[j] == mu {
                unit_part_mod(comps[j].coeff(exps[j]), &field).expect("unit")
            } else {
                0
            }
        });
        let mut classes: Vec<ProjectivePoint> = Vec::new();
        for u in 1..p {
            let w = std::array::from_fn(|j| field.mul(&units[j], &field.pow(&u, exps[j] as u64)));
            let pt = normalize(&field, w);
            if !classes.contains(&pt) {
                classes.push(pt);
            }
        }
        for c in &classes {
            if !image.contains(c) {
                image.push(*c);
            }
        }
        strata.push(StratumCertificate {
            m,
            valuations: vals,
            dominant_exponents: exps,
            tail_bound: comps[0].tail_bound(m).expect("tail"),
            classes,
        });
    }
    Ok(RhoLogImage {
        image,
        certificate: RhoLogCertificate {
            prime: p,
            precision: n,
            good_reduction: true,
            points_mod_p: count,
            tail_hypothesis_checked: true,
            stable_from: stable,
            strata,
        },
    })
}

/// Whether `sum c_n x^n` has a root with `v_p(x) >= 1` other than `0`.
///
/// `tail_from = Some(N)` means the coefficients from `x^N` on are unknown
/// but satisfy `v_p(c_n) >= -floor(log_p n)`; `None` means the list is exact.
pub fn nonzero_root_in_disk(coeffs: &[BigRational], tail_from: Option<usize>, p: u64) -> Result<bool> {
    check_prime(p)?;
    let n = tail_from.unwrap_or(coeffs.len());
    let s = DiskSeries::new(coeffs, tail_from, p);
    if s.terms.is_empty() {
        return match tail_from {
            None => Err(Error::Domain("the zero series vanishes everywhere".into())),
            Some(_) => Err(more_precision(n)),
        };
    }
    let top = s.dominance_threshold().ok_or_else(|| more_precision(n))?;
    for m in 1..top {
        match s.stratum(m) {
            Stratum::Dominant { .. } => {}
            // a segment of slope -m and length 1 carries exactly one root, which is then rational
            Stratum::Tie { first, last } if last - first == 1 => return Ok(true),
            Stratum::Tie { .. } => {
                return Err(Error::Scope(format!(
                    "Newton data alone cannot decide the roots of valuation {m}"
                )))
            }
            Stratum::Inconclusive => return Err(more_precision(n)),
        }
    }
    Ok(false)
}

/// True when the third log component vanishes on the disk only at `x = 0`.
pub fn torsion_disk_check(b: &FamilyPoint, p: u64, n: usize) -> Result<bool> {
    disk_preconditions(b, p)?;
    let log = formal_log(b, p, n)?;
    if !tail_hypothesis_holds(&log) {
        return Err(Error::Scope("log coefficients violate the integrality tail bound".into()));
    }
    Ok(!nonzero_root_in_disk(log.components[2].coeffs(), Some(n), p)?)
}

/// `1 - s - k s`.
pub fn sieve_lower_bound(selmer_eq_bound: &BigRational, image_size: u32) -> Result<BigRational> {
    if image_size > 7 {
        return Err(Error::InvalidInput(format!("P^2(F_2) has 7 points, got image size {image_size}")));
    }
    if *selmer_eq_bound < BigRational::zero() {
        return Err(Error::InvalidInput("negative equidistribution bound".into()));
    }
    let k = BigRational::from_integer(BigInt::from(image_size));
    Ok(BigRational::one() - selmer_eq_bound - k * selmer_eq_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn reference() -> FamilyPoint {
        FamilyPoint::reference_curve()
    }

    /// Partial sums of the log at an exact rational point.
    fn eval(s: &TruncatedSeries, x: &BigRational) -> BigRational {
        s.coeffs()
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    #[test]
    fn reference_branch() {
        let z = solve_branch(&reference(), 13).unwrap().z;
        assert_eq!(z, TruncatedSeries::from_ints(&[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1], 13));
    }

    #[test]
    fn cusp_branch_is_x4() {
        let z = solve_branch(&FamilyPoint::zero(), 17).unwrap().z;
        assert_eq!(z, x_pow(4, 17));
        assert!(solve_branch(&FamilyPoint::zero(), 4).is_err());
    }

    #[test]
    fn reference_omega() {
        let [w1, w2, w3] = omega_basis(&reference(), 12).unwrap();
        let mut e = vec![0i64; 12];
        e[0] = 1;
        e[8] = -3;
        e[9] = 3;
        assert_eq!(w1, TruncatedSeries::from_ints(&e, 12));
        assert!(w1.coeffs().iter().chain(w2.coeffs()).chain(w3.coeffs()).all(|c| c.is_integer()));
    }

    #[test]
    fn cusp_omega_from_inverse() {
        // 1 / (1 + 0) with z = x^4: only p-terms vanish, so ω1 = 1
        let [w1, _, w3] = omega_basis(&FamilyPoint::zero(), 12).unwrap();
        assert_eq!(w1, TruncatedSeries::one(12));
        assert_eq!(w3, x_pow(4, 12));
    }

    #[test]
    fn reference_log_components() {
        let log = formal_log(&reference(), 2, 13).unwrap();
        let mut l1 = vec![BigRational::zero(); 13];
        l1[1] = r(1, 1);
        l1[9] = r(-1, 3);
        l1[10] = r(3, 10);
        assert_eq!(log.components[0], TruncatedSeries::new(l1, 13));
        let mut l2 = vec![BigRational::zero(); 11];
        l2[2] = r(1, 2);
        l2[10] = r(-3, 10);
        assert_eq!(log.components[1].truncate(11), TruncatedSeries::new(l2, 11));
        assert_eq!(log.components[2], TruncatedSeries::monomial(r(1, 5), 5, 13));
        let j = log.to_json();
        assert_eq!(j["components"][0][10], "3/10");
    }

    #[test]
    fn rho_examples() {
        let v = |a: i64, b: i64, c: i64| [r(a, 1), r(b, 1), r(c, 1)];
        assert_eq!(rho(&v(2, 4, 8), 2).unwrap(), [1, 0, 0]);
        assert_eq!(rho(&v(0, 0, 3), 2).unwrap(), [0, 0, 1]);
        assert_eq!(rho(&v(6, 2, 4), 2).unwrap(), [1, 1, 0]);
        assert_eq!(rho(&v(3, 6, 0), 3).unwrap(), [1, 2, 0]);
        assert!(rho(&v(0, 0, 0), 2).is_err());
    }

    #[test]
    fn reference_rho_log_image() {
        let out = rho_log_image(&reference(), 2, 13).unwrap();
        assert_eq!(out.image, vec![[1, 1, 0], [1, 0, 0]]);
        let c = &out.certificate;
        assert_eq!(c.stable_from, 2);
        assert_eq!(c.strata[0].valuations, [1, 1, 5]);
        assert_eq!(c.strata[1].valuations, [2, 3, 10]);
        let wider = rho_log_image(&reference(), 2, 17).unwrap();
        assert_eq!(wider.image, out.image);
    }

    #[test]
    fn image_agrees_with_direct_evaluation() {
        // high-order partial sums at sample points of 2Z_2
        let log = formal_log(&reference(), 2, 40).unwrap();
        let image = rho_log_image(&reference(), 2, 13).unwrap().image;
        for x in [2i64, 6, -10, 4, 12, 8, 24, 48] {
            let x = r(x, 1);
            let v = std::array::from_fn(|j| eval(&log.components[j], &x));
            assert!(image.contains(&rho(&v, 2).unwrap()), "x = {x}");
        }
        let x2 = r(2, 1);
        let v = std::array::from_fn(|j| eval(&log.components[j], &x2));
        assert_eq!(rho(&v, 2).unwrap(), [1, 1, 0]);
    }

    #[test]
    fn scope_errors() {
        // the cusp has bad reduction everywhere
        assert!(matches!(rho_log_image(&FamilyPoint::zero(), 2, 13), Err(Error::Scope(_))));
        // y^3 = x^4 + 1 has the affine point (0, 1) over F_2
        let b = FamilyPoint::from_i64s([0, 0, 0, 0, 0, 1]);
        assert!(matches!(rho_log_image(&b, 2, 13), Err(Error::Scope(_))));
    }

    #[test]
    fn torsion_checks() {
        assert!(torsion_disk_check(&reference(), 2, 13).unwrap());
        let mono = [r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 5)];
        assert!(!nonzero_root_in_disk(&mono, None, 2).unwrap());
        // x^5 (1/5 - x/6) vanishes at x = 6/5, of valuation 1
        let mut c = mono.to_vec();
        c.push(r(-1, 6));
        assert!(nonzero_root_in_disk(&c, None, 2).unwrap());
        let root = r(6, 5);
        let value = c.iter().rev().fold(BigRational::zero(), |acc, k| acc * &root + k);
        assert!(value.is_zero());
        // x (1 - x/3) only vanishes at 3, a unit
        assert!(!nonzero_root_in_disk(&[r(0, 1), r(1, 1), r(-1, 3)], None, 2).unwrap());
    }

    #[test]
    fn tail_too_close_asks_for_precision() {
        // lowest term x^5/5 cannot beat a tail starting at x^6 on v(x) = 1
        let mono = [r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 5)];
        assert!(matches!(nonzero_root_in_disk(&mono, Some(6), 2), Err(Error::IncreasePrecision { .. })));
        assert!(matches!(rho_log_image(&reference(), 2, 6), Err(Error::IncreasePrecision { .. })));
    }

    #[test]
    fn sieve_examples() {
        assert_eq!(sieve_lower_bound(&r(1, 4), 2).unwrap(), r(1, 4));
        assert_eq!(sieve_lower_bound(&r(1, 4), 3).unwrap(), r(0, 1));
        for k in 0..=7 {
            assert_eq!(sieve_lower_bound(&r(0, 1), k).unwrap(), r(1, 1));
        }
        assert!(sieve_lower_bound(&r(1, 4), 8).is_err());
    }

    #[test]
    fn floor_logs() {
        assert_eq!(floor_log(2, 1), 0);
        assert_eq!(floor_log(2, 13), 3);
        assert_eq!(floor_log(2, 16), 4);
        assert_eq!(floor_log(3, 26), 2);
    }

    fn small_point() -> impl Strategy<Value = FamilyPoint> {
        proptest::array::uniform6(-5i64..=5).prop_map(FamilyPoint::from_i64s)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]

        #[test]
        fn branch_residual_vanishes(b in small_point(), n in 5usize..20) {
            let z = solve_branch(&b, n).unwrap().z;
            prop_assert_eq!(z.valuation(), Some(4));
            prop_assert_eq!(branch_residual(&b, &z).valuation(), None);
        }

        #[test]
        fn log_differentiates_to_omega(b in small_point(), n in 6usize..16) {
            let log = formal_log(&b, 2, n).unwrap();
            let omega = omega_basis(&b, n - 1).unwrap();
            for (c, w) in log.components.iter().zip(omega.iter()) {
                prop_assert!(c.coeff(0).is_zero());
                prop_assert_eq!(c.derivative(), w.clone());
            }
            prop_assert_eq!(log.components[0].coeff(1), r(1, 1));
            prop_assert_eq!(log.components[1].coeff(2), r(1, 2));
            prop_assert_eq!(log.components[2].valuation(), Some(5));
            prop_assert_eq!(log.components[2].coeff(5), r(1, 5));
        }

        #[test]
        fn log_coefficients_meet_tail_bound(b in small_point(), p in prop::sample::select(vec![2u64, 3, 5])) {
            let log = formal_log(&b, p, 24).unwrap();
            prop_assert!(tail_hypothesis_holds(&log));
        }
    }
}
