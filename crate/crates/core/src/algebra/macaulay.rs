//! Homogeneous ternary forms and the Macaulay resultant of three forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::resultant::determinant;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`.
pub type Monomial = (u32, u32, u32);

/// Monomials of degree `d`, ordered by descending `x`-exponent, then
/// descending `y`-exponent.
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push((i, j, d - i - j));
        }
    }
    out
}

fn monomial_index(d: u32, (i, j, _): Monomial) -> usize {
    // monomials with x-exponent > i come first: sum_{a=i+1}^{d} (d - a + 1)
    let before: u32 = (i + 1..=d).map(|a| d - a + 1).sum();
    (before + (d - i - j)) as usize
}

#[derive(Clone, Debug, PartialEq)]
pub struct TernaryForm<E> {
    degree: u32,
    /// Indexed by [`monomials`].
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> TernaryForm<E> {
    pub fn zero<R: Ring<Elem = E>>(ring: &R, degree: u32) -> Self {
        TernaryForm {
            degree,
            coeffs: vec![ring.zero(); monomials(degree).len()],
        }
    }

    pub fn from_terms<R: Ring<Elem = E>>(ring: &R, degree: u32, terms: &[(Monomial, E)]) -> Self {
        let mut f = Self::zero(ring, degree);
        for (m, c) in terms {
            assert_eq!(m.0 + m.1 + m.2, degree, "monomial {m:?} has wrong degree");
            let k = monomial_index(degree, *m);
            f.coeffs[k] = ring.add(&f.coeffs[k], c);
        }
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, m: Monomial) -> &E {
        &self.coeffs[monomial_index(self.degree, m)]
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &E)> {
        monomials(self.degree).into_iter().zip(self.coeffs.iter())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&E) -> S::Elem) -> TernaryForm<S::Elem> {
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.coeffs.iter().all(|c| ring.is_zero(c))
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| ring.mul(a, c)).collect(),
        }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        TernaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let d = self.degree + other.degree;
        let mut out = Self::zero(ring, d);
        for (m1, a) in self.terms() {
            if ring.is_zero(a) {
                continue;
            }
            for (m2, b) in other.terms() {
                if ring.is_zero(b) {
                    continue;
                }
                let k = monomial_index(d, (m1.0 + m2.0, m1.1 + m2.1, m1.2 + m2.2));
                out.coeffs[k] = ring.add(&out.coeffs[k], &ring.mul(a, b));
            }
        }
        out
    }

    /// Partial derivative in variable `var` (0 = x, 1 = y, 2 = z).
    pub fn partial<R: Ring<Elem = E>>(&self, ring: &R, var: usize) -> Self {
        assert!(self.degree > 0);
        let mut out = Self::zero(ring, self.degree - 1);
        for (m, c) in self.terms() {
            let e = [m.0, m.1, m.2];
            if e[var] == 0 || ring.is_zero(c) {
                continue;
            }
            let mut n = e;
            n[var] -= 1;
            let k = monomial_index(out.degree, (n[0], n[1], n[2]));
            out.coeffs[k] = ring.add(&out.coeffs[k], &ring.mul(&ring.from_int(e[var] as i64), c));
        }
        out
    }

    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R, point: &[E; 3]) -> E {
        self.terms().fold(ring.zero(), |acc, (m, c)| {
            let t = ring.mul(
                c,
                &ring.mul(
                    &ring.pow(&point[0], m.0 as u64),
                    &ring.mul(&ring.pow(&point[1], m.1 as u64), &ring.pow(&point[2], m.2 as u64)),
                ),
            );
            ring.add(&acc, &t)
        })
    }

    /// `f(A v)`: each variable is replaced by the corresponding row of `a`
    /// read as a linear form.
    pub fn substitute<R: Ring<Elem = E>>(&self, ring: &R, a: &[[E; 3]; 3]) -> Self {
        let linear: Vec<Self> = a
            .iter()
            .map(|row| Self::from_terms(ring, 1, &[((1, 0, 0), row[0].clone()), ((0, 1, 0), row[1].clone()), ((0, 0, 1), row[2].clone())]))
            .collect();
        let powers: Vec<Vec<Self>> = linear
            .iter()
            .map(|l| {
                let mut v = vec![Self::from_terms(ring, 0, &[((0, 0, 0), ring.one())])];
                for _ in 0..self.degree {
                    let next = v.last().unwrap().mul(ring, l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(ring, self.degree);
        for (m, c) in self.terms() {
            if ring.is_zero(c) {
                continue;
            }
            let t = powers[0][m.0 as usize]
                .mul(ring, &powers[1][m.1 as usize])
                .mul(ring, &powers[2][m.2 as usize])
                .scale(ring, c);
            out = out.add(ring, &t);
        }
        out
    }
}

/// Number of random determinant-one coordinate changes tried when the
/// Macaulay denominator minor vanishes.
pub const MACAULAY_RETRIES: usize = 16;
const MACAULAY_SEED: u64 = 0x00ac_a01a;

/// The Macaulay matrix in degree `d1 + d2 + d3 - 2`, together with the
/// indices of the non-reduced monomials that form the extraneous minor.
pub fn macaulay_matrix<R: Ring>(
    ring: &R,
    forms: &[TernaryForm<R::Elem>; 3],
) -> (Vec<Vec<R::Elem>>, Vec<usize>) {
    let degs = [forms[0].degree, forms[1].degree, forms[2].degree];
    let total = degs.iter().sum::<u32>() - 2;
    let mons = monomials(total);
    let mut rows = Vec::with_capacity(mons.len());
    let mut extraneous = Vec::new();
    for (r, m) in mons.iter().enumerate() {
        let e = [m.0, m.1, m.2];
        let divisible: Vec<usize> = (0..3).filter(|&i| e[i] >= degs[i]).collect();
        if divisible.len() >= 2 {
            extraneous.push(r);
        }
        // every degree-`total` monomial is divisible by some x_i^{d_i}
        let i = divisible[0];
        let mut q = e;
        q[i] -= degs[i];
        let mut row = vec![ring.zero(); mons.len()];
        for (fm, c) in forms[i].terms() {
            if ring.is_zero(c) {
                continue;
            }
            row[monomial_index(total, (fm.0 + q[0], fm.1 + q[1], fm.2 + q[2]))] = c.clone();
        }
        rows.push(row);
    }
    (rows, extraneous)
}

fn try_macaulay<R: Ring>(ring: &R, forms: &[TernaryForm<R::Elem>; 3]) -> Option<R::Elem> {
    let (m, extra) = macaulay_matrix(ring, forms);
    let minor: Vec<Vec<R::Elem>> = extra
        .iter()
        .map(|&r| extra.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    let den = determinant(ring, minor);
    if ring.is_zero(&den) {
        return None;
    }
    let num = determinant(ring, m);
    Some(ring.div_exact(&num, &den).expect("extraneous factor divides the Macaulay determinant"))
}

fn random_unimodular<R: Rng>(rng: &mut R) -> [[i64; 3]; 3] {
    loop {
        let mut a = [[0i64; 3]; 3];
        for row in a.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.gen_range(-3..=3);
            }
        }
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        if det == 1 {
            return a;
        }
    }
}

/// `Res(f1, f2, f3)`, normalized so that `Res(x^a, y^b, z^c) = 1`. It
/// vanishes iff the forms share a projective zero over the algebraic closure.
pub fn macaulay_resultant<R: Ring>(ring: &R, forms: &[TernaryForm<R::Elem>; 3]) -> Result<R::Elem> {
    if forms.iter().any(|f| f.degree == 0) {
        return Err(Error::Domain("Macaulay resultant needs forms of positive degree".into()));
    }
    if let Some(r) = try_macaulay(ring, forms) {
        return Ok(r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MACAULAY_SEED);
    for _ in 0..MACAULAY_RETRIES {
        let a = random_unimodular(&mut rng).map(|row| row.map(|v| ring.from_int(v)));
        let moved = [
            forms[0].substitute(ring, &a),
            forms[1].substitute(ring, &a),
            forms[2].substitute(ring, &a),
        ];
        if let Some(r) = try_macaulay(ring, &moved) {
            return Ok(r);
        }
    }
    Err(Error::DegenerateSpecialization {
        attempts: MACAULAY_RETRIES,
    })
}
