//! Factorization of univariate polynomials over finite fields.
//!
//! Squarefree split (Yun, with `p`-th roots in characteristic `p`), then
//! distinct-degree split, then Cantor-Zassenhaus equal-degree splitting
//! driven by a fixed-seed ChaCha generator. Factors are returned sorted by
//! degree and then by coefficient indices, so output is reproducible.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::poly::{Poly, PolyRing};
use super::ring::{FiniteField, Ring};

const SPLIT_SEED: u64 = 0x005e_ed27;

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<E> {
    pub unit: E,
    /// Monic irreducible factors with multiplicities.
    pub factors: Vec<(Poly<E>, u32)>,
}

impl<E: Clone> Factorization<E> {
    /// Degrees of the irreducible factors, repeated by multiplicity, ascending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m as usize))
            .collect();
        out.sort_unstable();
        out
    }
}

fn q_big<F: FiniteField>(field: &F) -> BigUint {
    BigUint::from(field.characteristic()).pow(field.degree())
}

/// Reassembles `unit * prod f^m`.
pub fn expand<F: FiniteField>(polys: &PolyRing<F>, fac: &Factorization<F::Elem>) -> Poly<F::Elem> {
    fac.factors.iter().fold(polys.constant(fac.unit.clone()), |acc, (f, m)| {
        polys.mul(&acc, &(0..*m).fold(polys.one(), |a, _| polys.mul(&a, f)))
    })
}

pub fn factor<F: FiniteField>(polys: &PolyRing<F>, f: &Poly<F::Elem>) -> Option<Factorization<F::Elem>> {
    let unit = f.lc()?.clone();
    let monic = polys.monic(f);
    let mut factors = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    for (part, mult) in squarefree_decomposition(polys, &monic) {
        for (d, block) in distinct_degree(polys, &part) {
            for g in equal_degree(polys, &block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| cmp_polys(polys.base(), &a.0, &b.0).then(a.1.cmp(&b.1)));
    Some(Factorization { unit, factors })
}

fn cmp_polys<F: FiniteField>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let ia = a.coeffs().iter().map(|c| field.index_of(c));
        let ib = b.coeffs().iter().map(|c| field.index_of(c));
        ia.cmp(ib)
    })
}

/// `f` monic; returns squarefree, pairwise coprime `(g_i, m_i)` with `f = prod g_i^m_i`.
pub fn squarefree_decomposition<F: FiniteField>(
    polys: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(Poly<F::Elem>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = polys.base().characteristic() as u32;
    let df = polys.derivative(f);
    if df.is_zero() {
        let root = pth_root(polys, f);
        for (g, m) in squarefree_decomposition(polys, &root) {
            out.push((g, m * p));
        }
        return out;
    }
    // Yun's algorithm in characteristic p: peel off parts of multiplicity < p,
    // then recurse on the remaining p-th power.
    let mut c = polys.gcd(f, &df);
    let mut w = polys.div_exact(f, &c).expect("gcd divides");
    let mut i = 1u32;
    while w.degree().unwrap_or(0) > 0 {
        let y = polys.gcd(&w, &c);
        let z = polys.div_exact(&w, &y).expect("gcd divides");
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        c = polys.div_exact(&c, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = pth_root(polys, &c);
        for (g, m) in squarefree_decomposition(polys, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// `f` must be a polynomial in `x^p`.
fn pth_root<F: FiniteField>(polys: &PolyRing<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let field = polys.base();
    let p = field.characteristic() as usize;
    // a^(q/p) is the p-th root in F_q
    let e = field.order() / field.characteristic();
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| field.pow(c, e))
        .collect();
    polys.from_coeffs(coeffs)
}

/// `f` monic squarefree; returns `(d, product of all degree-d factors)`.
pub fn distinct_degree<F: FiniteField>(
    polys: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(usize, Poly<F::Elem>)> {
    let q = q_big(polys.base());
    let x = polys.x();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = polys.rem(&x, &rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = polys.pow_mod(&h, &q, &rest);
        let g = polys.gcd(&polys.sub(&h, &x), &rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = polys.div_exact(&rest, &g).expect("gcd divides");
            h = polys.rem(&h, &rest);
            out.push((d, g));
        }
    }
    if let Some(n) = rest.degree() {
        if n > 0 {
            out.push((n, rest));
        }
    }
    out
}

/// Splits a monic squarefree product of degree-`d` irreducibles.
fn equal_degree<F: FiniteField>(
    polys: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<F::Elem>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let field = polys.base();
    let q = q_big(field);
    let odd_exp = (q.pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a = polys.from_coeffs((0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = polys.gcd(&a, f);
        let candidate = if g.degree().unwrap_or(0) > 0 {
            g
        } else if field.characteristic() == 2 {
            // absolute trace to F_2
            let steps = field.degree() as usize * d;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                t = polys.mul_mod(&t, &t, f);
                acc = polys.add(&acc, &t);
            }
            polys.gcd(&acc, f)
        } else {
            let b = polys.pow_mod(&a, &odd_exp, f);
            polys.gcd(&polys.sub(&b, &polys.one()), f)
        };
        let k = candidate.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = polys.div_exact(f, &candidate).expect("factor divides");
            let mut out = equal_degree(polys, &candidate, d, rng);
            out.extend(equal_degree(polys, &other, d, rng));
            return out;
        }
    }
}

pub fn is_irreducible<F: FiniteField>(polys: &PolyRing<F>, f: &Poly<F::Elem>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let f = polys.monic(f);
    let q = q_big(polys.base());
    let x = polys.x();
    let mut h = polys.rem(&x, &f);
    for _ in 1..=n / 2 {
        h = polys.pow_mod(&h, &q, &f);
        if polys.gcd(&polys.sub(&h, &x), &f).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Roots of `f` in the field, without multiplicity, sorted by index.
pub fn roots<F: FiniteField>(polys: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<F::Elem> {
    let Some(fac) = factor(polys, f) else {
        return Vec::new();
    };
    let field = polys.base();
    let mut out: Vec<F::Elem> = fac
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| field.neg(&polys.coeff(g, 0)))
        .collect();
    out.sort_by_key(|r| field.index_of(r));
    out
}
