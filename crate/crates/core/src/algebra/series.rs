//! Exact rational power series known modulo `x^N`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A series `c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<BigRational>, precision: usize) -> Self {
        coeffs.resize(precision, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], precision: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect(), precision)
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(vec![BigRational::one()], precision)
    }

    /// `c x^k + O(x^precision)`.
    pub fn monomial(c: BigRational, k: usize, precision: usize) -> Self {
        let mut v = vec![BigRational::zero(); precision];
        if k < precision {
            v[k] = c;
        }
        TruncatedSeries { coeffs: v }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let n = precision.min(self.precision());
        TruncatedSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        TruncatedSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        TruncatedSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.precision()), |acc, _| acc.mul(self))
    }

    /// Multiplication by `x^k`; precision rises by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Antiderivative with zero constant term; precision rises by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.precision() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(n, c)| c / q(n as i64 + 1)));
        TruncatedSeries { coeffs }
    }

    /// Precision drops by one.
    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * q(n as i64))
                .collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self
            .coeffs
            .first()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain("series with zero constant term is not invertible".into()))?;
        let inv0 = c0.recip();
        let n = self.precision();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s = (1..=k).fold(BigRational::zero(), |acc, i| acc + &self.coeffs[i] * &out[k - i]);
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Same known coefficients on the common precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.precision().min(other.precision());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.precision())
    }
}

/// Iterates `z <- update(z)` from `seed` until the iterate is stable modulo
/// `x^order`. The valuation of the correction must strictly increase.
pub fn series_solve_fixed_point(
    update: impl Fn(&TruncatedSeries) -> TruncatedSeries,
    seed: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut z = TruncatedSeries::new(seed.coeffs.clone(), order);
    let mut last: Option<usize> = None;
    for _ in 0..=order + 1 {
        let next = update(&z);
        if next.precision() < order {
            return Err(Error::Convergence(format!(
                "update lost precision: {} < {order}",
                next.precision()
            )));
        }
        let next = next.truncate(order);
        match next.sub(&z).valuation() {
            None => return Ok(next),
            Some(v) => {
                if last.is_some_and(|l| v <= l) {
                    return Err(Error::Convergence(format!(
                        "correction valuation stalled at {v}"
                    )));
                }
                last = Some(v);
            }
        }
        z = next;
    }
    Err(Error::Convergence("no fixed point within the iteration bound".into()))
}
