//! Members of the family `y^3 = x^4 + (p2 x^2 + p5 x + p8) y + p6 x^2 + p9 x + p12`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::macaulay::TernaryForm;
use crate::algebra::poly::{Poly, PolyRing};
use crate::algebra::ring::Ring;
use crate::error::{Error, Result};

/// Weight of each coordinate under `(p_i) -> (lambda^i p_i)`.
pub const WEIGHTS: [u32; 6] = [2, 5, 6, 8, 9, 12];
pub const NAMES: [&str; 6] = ["p2", "p5", "p6", "p8", "p9", "p12"];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyPoint<T = BigInt> {
    pub p2: T,
    pub p5: T,
    pub p6: T,
    pub p8: T,
    pub p9: T,
    pub p12: T,
}

/// A homogeneous ternary quartic.
pub type PlaneQuarticForm<E> = TernaryForm<E>;

/// `y^3 - P(x) y - Q(x)` with `P = p2 x^2 + p5 x + p8`, `Q = x^4 + p6 x^2 + p9 x + p12`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigonalAffineForm<E> {
    pub p: Poly<E>,
    pub q: Poly<E>,
}

impl<T> FamilyPoint<T> {
    pub fn from_array([p2, p5, p6, p8, p9, p12]: [T; 6]) -> Self {
        FamilyPoint { p2, p5, p6, p8, p9, p12 }
    }

    pub fn as_array(&self) -> [&T; 6] {
        [&self.p2, &self.p5, &self.p6, &self.p8, &self.p9, &self.p12]
    }

    pub fn into_array(self) -> [T; 6] {
        [self.p2, self.p5, self.p6, self.p8, self.p9, self.p12]
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> FamilyPoint<S> {
        let [a, b, c, d, e, g] = self.as_array();
        FamilyPoint::from_array([f(a), f(b), f(c), f(d), f(e), f(g)])
    }

    pub fn trigonal<R: Ring<Elem = T>>(&self, ring: &R) -> TrigonalAffineForm<T>
    where
        T: Clone,
    {
        let polys = PolyRing::new(ring.clone());
        TrigonalAffineForm {
            p: polys.from_coeffs(vec![self.p8.clone(), self.p5.clone(), self.p2.clone()]),
            q: polys.from_coeffs(vec![
                self.p12.clone(),
                self.p9.clone(),
                self.p6.clone(),
                ring.zero(),
                ring.one(),
            ]),
        }
    }

    /// `y^3 z - x^4 - (p2 x^2 z + p5 x z^2 + p8 z^3) y - (p6 x^2 z^2 + p9 x z^3 + p12 z^4)`.
    pub fn homogenize<R: Ring<Elem = T>>(&self, ring: &R) -> PlaneQuarticForm<T>
    where
        T: Clone + PartialEq + fmt::Debug,
    {
        let m = |c: &T| ring.neg(c);
        TernaryForm::from_terms(
            ring,
            4,
            &[
                ((0, 3, 1), ring.one()),
                ((4, 0, 0), ring.neg(&ring.one())),
                ((2, 1, 1), m(&self.p2)),
                ((1, 1, 2), m(&self.p5)),
                ((0, 1, 3), m(&self.p8)),
                ((2, 0, 2), m(&self.p6)),
                ((1, 0, 3), m(&self.p9)),
                ((0, 0, 4), m(&self.p12)),
            ],
        )
    }
}

impl FamilyPoint<BigInt> {
    pub fn from_i64s(v: [i64; 6]) -> Self {
        FamilyPoint::from_array(v.map(BigInt::from))
    }

    pub fn zero() -> Self {
        Self::from_i64s([0; 6])
    }

    /// The curve `y^3 + y = x^4 + x + 1`.
    pub fn reference_curve() -> Self {
        Self::from_i64s([0, 0, 0, -1, 1, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, lambda: &BigInt) -> Self {
        let mut out = self.clone().into_array();
        for (c, w) in out.iter_mut().zip(WEIGHTS) {
            *c *= lambda.pow(w);
        }
        FamilyPoint::from_array(out)
    }

    pub fn reduce<R: Ring>(&self, ring: &R) -> FamilyPoint<R::Elem> {
        self.map(|c| ring.from_bigint(c))
    }

    /// `ht(b) < a`, decided by `|p_i|^72 < a^i`.
    pub fn height_less_than(&self, a: &BigInt) -> bool {
        self.as_array()
            .iter()
            .zip(WEIGHTS)
            .all(|(c, w)| c.abs().pow(72u32) < a.pow(w))
    }

    /// No prime `q` with `q^i | p_i` for all `i`, and `p5 > 0` or (`p5 = 0`, `p9 >= 0`).
    pub fn is_minimal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("the zero point has no minimal form".into()));
        }
        let sign_ok = self.p5.is_positive() || (self.p5.is_zero() && !self.p9.is_negative());
        if !sign_ok {
            return Ok(false);
        }
        Ok(self.dividing_prime().is_none())
    }

    /// Smallest prime `q` with `q^i | p_i` for every `i`.
    pub fn dividing_prime(&self) -> Option<BigInt> {
        let nonzero: Vec<(&BigInt, u32)> = self
            .as_array()
            .into_iter()
            .zip(WEIGHTS)
            .filter(|(c, _)| !c.is_zero())
            .collect();
        let bound = nonzero.iter().map(|(c, w)| c.abs().nth_root(*w)).min()?;
        let g = nonzero.iter().fold(BigInt::zero(), |g, (c, _)| g.gcd(c));
        let divides_all = |q: &BigInt| nonzero.iter().all(|(c, w)| c.is_multiple_of(&q.pow(*w)));
        let mut q = BigInt::from(2);
        let mut rest = g;
        while q <= bound && !rest.is_one() {
            if rest.is_multiple_of(&q) {
                if divides_all(&q) {
                    return Some(q);
                }
                while rest.is_multiple_of(&q) {
                    rest /= &q;
                }
            }
            q += 1;
        }
        None
    }
}

impl fmt::Display for FamilyPoint<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.as_array();
        write!(f, "{a},{b},{c},{d},{e},{g}")
    }
}

impl FromStr for FamilyPoint<BigInt> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::InvalidInput(format!(
                "expected six comma-separated integers p2,p5,p6,p8,p9,p12, got {s:?}"
            )));
        }
        let mut v = Vec::with_capacity(6);
        for p in parts {
            v.push(
                BigInt::from_str(p).map_err(|_| Error::InvalidInput(format!("not an integer: {p:?}")))?,
            );
        }
        let arr: [BigInt; 6] = v.try_into().expect("six entries");
        Ok(FamilyPoint::from_array(arr))
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPoint {
    p2: String,
    p5: String,
    p6: String,
    p8: String,
    p9: String,
    p12: String,
}

impl Serialize for FamilyPoint<BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [p2, p5, p6, p8, p9, p12] = self.as_array().map(|c| c.to_string());
        JsonPoint { p2, p5, p6, p8, p9, p12 }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FamilyPoint<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = JsonPoint::deserialize(d)?;
        let parse = |s: &str| BigInt::from_str(s).map_err(serde::de::Error::custom);
        Ok(FamilyPoint::from_array([
            parse(&j.p2)?,
            parse(&j.p5)?,
            parse(&j.p6)?,
            parse(&j.p8)?,
            parse(&j.p9)?,
            parse(&j.p12)?,
        ]))
    }
}
