//! Extension fields `K[t]/(m)` for an irreducible monic `m`.
//!
//! Elements are coefficient vectors of fixed length `deg m`. Nesting
//! `ExtField<ExtField<PrimeField>>` gives towers, which the smoothness
//! solver uses to adjoin the root of an irreducible factor over `F_{p^k}`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::factor::is_irreducible;
use super::poly::{Poly, PolyRing};
use super::ring::{Field, FiniteField, PrimeField, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtField<F: Field> {
    polys: PolyRing<F>,
    modulus: Poly<F::Elem>,
    degree: usize,
}

impl<F: Field> ExtField<F> {
    /// Skips the irreducibility check; the caller guarantees it.
    pub fn new_unchecked(base: F, modulus: Poly<F::Elem>) -> Self {
        let polys = PolyRing::new(base);
        let modulus = polys.monic(&modulus);
        let degree = modulus.degree().expect("nonzero modulus");
        ExtField {
            polys,
            modulus,
            degree,
        }
    }

    pub fn base(&self) -> &F {
        self.polys.base()
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn ext_degree(&self) -> usize {
        self.degree
    }

    fn pack(&self, p: &Poly<F::Elem>) -> Vec<F::Elem> {
        let mut v: Vec<F::Elem> = p.coeffs().to_vec();
        v.resize(self.degree, self.base().zero());
        v
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        self.polys.from_coeffs(a.to_vec())
    }

    /// Image of a base polynomial, reduced modulo the defining polynomial.
    pub fn from_poly(&self, p: &Poly<F::Elem>) -> Vec<F::Elem> {
        self.pack(&self.polys.rem(p, &self.modulus))
    }

    pub fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base().zero(); self.degree];
        v[0] = c.clone();
        v
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<F::Elem> {
        self.from_poly(&self.polys.x())
    }
}

impl<F: FiniteField> ExtField<F> {
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let polys = PolyRing::new(base.clone());
        match modulus.degree() {
            None | Some(0) => return Err(Error::Domain("modulus must have positive degree".into())),
            _ => {}
        }
        if !is_irreducible(&polys, &polys.monic(&modulus)) {
            return Err(Error::Domain("modulus is reducible".into()));
        }
        Ok(Self::new_unchecked(base, modulus))
    }
}

impl ExtField<PrimeField> {
    /// `F_{p^k}` with the lexicographically first monic irreducible modulus.
    pub fn with_degree(p: u64, k: usize) -> Result<Self> {
        let base = PrimeField::try_new(p).ok_or_else(|| Error::Domain(format!("{p} is not prime")))?;
        if k == 0 {
            return Err(Error::Domain("extension degree must be positive".into()));
        }
        let polys = PolyRing::new(base);
        let total = p.checked_pow(k as u32).ok_or_else(|| Error::Domain("field too large".into()))?;
        for idx in 0..total {
            let mut c = Vec::with_capacity(k + 1);
            let mut n = idx;
            for _ in 0..k {
                c.push(n % p);
                n /= p;
            }
            c.push(1);
            let m = polys.from_coeffs(c);
            if is_irreducible(&polys, &m) {
                return Ok(Self::new_unchecked(base, m));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.base().modulus(),
            k: self.degree as u32,
            modulus: self.modulus.coeffs().to_vec(),
        }
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        let base =
            PrimeField::try_new(d.p).ok_or_else(|| Error::Domain(format!("{} is not prime", d.p)))?;
        let polys = PolyRing::new(base);
        let m = polys.from_coeffs(d.modulus.iter().map(|&c| c % d.p).collect());
        if m.degree() != Some(d.k as usize) {
            return Err(Error::Domain("modulus degree does not match k".into()));
        }
        Self::new(base, m)
    }
}

/// Serialized form `{p, k, modulus}` with the modulus low to high.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

impl<F: Field> Ring for ExtField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base().zero(); self.degree]
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base().one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base().add(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base().neg(x)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base().sub(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let pa = self.to_poly(a);
        let pb = self.to_poly(b);
        self.from_poly(&self.polys.mul(&pa, &pb))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.base().is_zero(x))
    }
    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.embed(&self.base().from_bigint(n))
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.div(a, b)
    }
}

impl<F: Field> Field for ExtField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let (g, s, _) = self.polys.ext_gcd(&self.to_poly(a), &self.modulus);
        (g.degree() == Some(0)).then(|| self.from_poly(&s))
    }
    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn degree(&self) -> u32 {
        self.base().degree() * self.degree as u32
    }
    fn order(&self) -> u64 {
        self.base().order().pow(self.degree as u32)
    }
    fn element(&self, mut index: u64) -> Self::Elem {
        let q = self.base().order();
        (0..self.degree)
            .map(|_| {
                let e = self.base().element(index % q);
                index /= q;
                e
            })
            .collect()
    }
    fn index_of(&self, a: &Self::Elem) -> u64 {
        let q = self.base().order();
        a.iter().rev().fold(0, |acc, x| acc * q + self.base().index_of(x))
    }
}
