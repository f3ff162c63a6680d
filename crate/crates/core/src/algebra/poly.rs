//! Dense univariate polynomials over an arbitrary [`Ring`].
//!
//! `PolyRing<R>` is itself a [`Ring`], so `Q[a][b]` is simply
//! `PolyRing<PolyRing<Rationals>>`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::ring::{Field, Ring};

/// Coefficients low to high; the last coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn get(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    /// Number of stored coefficients (`degree + 1`, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); k];
        v.push(c);
        self.from_coeffs(v)
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); k];
        v.extend(p.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_int(i as i64), c))
                .collect(),
        )
    }

    /// `p(q(x))`
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        p.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            self.add(&self.mul(&acc, q), &self.constant(c.clone()))
        })
    }

    /// Apply a coefficient map into another ring.
    pub fn map<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    /// Division with remainder, defined whenever every leading-coefficient
    /// quotient is exact in the base ring (always over a field, or for a
    /// monic divisor).
    pub fn div_rem(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Option<(Poly<R::Elem>, Poly<R::Elem>)> {
        let db = b.degree()?;
        let lb = b.lc()?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Some((Poly::zero(), a.clone()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if self.base.is_zero(&rem[i]) {
                continue;
            }
            let q = self.base.div_exact(&rem[i], lb)?;
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(&q, bc);
                rem[i - db + j] = self.base.sub(&rem[i - db + j], &t);
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        Some((self.from_coeffs(quot), self.from_coeffs(rem)))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| {
                    let x = a.coeffs.get(i).unwrap_or(&z);
                    let y = b.coeffs.get(i).unwrap_or(&z);
                    self.base.add(x, y)
                })
                .collect(),
        )
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|i| {
                    let x = a.coeffs.get(i).unwrap_or(&z);
                    let y = b.coeffs.get(i).unwrap_or(&z);
                    self.base.sub(x, y)
                })
                .collect(),
        )
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.base.mul(x, y);
                out[i + j] = self.base.add(&out[i + j], &t);
            }
        }
        self.from_coeffs(out)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }

    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.div_rem(a, b)?;
        r.is_zero().then_some(q)
    }
}

impl<F: Field> PolyRing<F> {
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.lc() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero leading coefficient");
                self.scale(p, &inv)
            }
        }
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(a, b).expect("division by zero polynomial").1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g` and `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero");
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        if e.is_zero() {
            return acc;
        }
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, p: &Poly<F::Elem>) -> bool {
        let g = self.gcd(p, &self.derivative(p));
        g.degree() == Some(0)
    }
}
