//! Rings as values.
//!
//! A ring is an object that knows how to combine plain element data. This
//! lets the same polynomial, resultant and factorization code run over the
//! integers, the rationals, prime fields and extension towers built at
//! runtime from a modulus polynomial.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of an integer under the canonical map `Z -> R`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// The quotient `a / b` when `b` divides `a` exactly.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Characteristic of the field; zero for the rationals.
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field `F_q` with `q = p^k`.
pub trait FiniteField: Field {
    /// Degree over the prime field.
    fn degree(&self) -> u32;

    /// Number of elements.
    fn order(&self) -> u64 {
        self.characteristic().pow(self.degree())
    }

    /// Element number `index` in a fixed enumeration, `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;

    /// Inverse of [`FiniteField::element`].
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element(rng.gen_range(0..self.order()))
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        self.div(a, b)
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// `F_p` for a word-sized prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Panics if `p` is not prime or does not fit the 32-bit multiply path.
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 32), "prime {p} too large");
        PrimeField { p }
    }

    pub fn try_new(p: u64) -> Option<Self> {
        (is_prime(p) && p < (1 << 32)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn centered(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.iter_u64_digits().next().unwrap_or(0)
    }
    fn from_int(&self, n: i64) -> u64 {
        self.from_i64(n)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.div(a, b)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl FiniteField for PrimeField {
    fn degree(&self) -> u32 {
        1
    }
    fn order(&self) -> u64 {
        self.p
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `p`-adic valuation of a nonzero rational.
pub fn valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
}

/// `p`-adic valuation of a nonzero integer; `0` for zero is never returned.
pub fn int_valuation(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    if n.is_zero() {
        return i64::MAX;
    }
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Reduction of a `p`-integral rational modulo `p`.
pub fn reduce_rational(x: &BigRational, field: &PrimeField) -> Option<u64> {
    let den = field.from_bigint(x.denom());
    let num = field.from_bigint(x.numer());
    field.div(&num, &den)
}

/// Unit part `x / p^{v_p(x)}` reduced modulo `p`.
pub fn unit_part_mod(x: &BigRational, field: &PrimeField) -> Option<u64> {
    let p = field.modulus();
    let v = valuation(x, p)?;
    let scale = BigRational::from_integer(BigInt::from(p).pow(v.unsigned_abs() as u32));
    let unit = if v >= 0 { x / scale } else { x * scale };
    reduce_rational(&unit, field)
}
