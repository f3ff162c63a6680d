//! Fraction-free determinants and Sylvester resultants.

use super::poly::{Poly, PolyRing};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Bareiss elimination over an integral domain. Every intermediate division
/// is exact, so this works for `Z`, `F_q`, and polynomial rings over them.
pub fn determinant<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = ring.mul(&m[i][j], &m[k][k]);
                let b = ring.mul(&m[i][k], &m[k][j]);
                m[i][j] = ring
                    .div_exact(&ring.sub(&a, &b), &prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester matrix with coefficients ordered from the leading term down.
pub fn sylvester_matrix<R: Ring>(
    polys: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Vec<Vec<R::Elem>> {
    let base = polys.base();
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![base.zero(); size];
            for (k, c) in p.coeffs().iter().enumerate() {
                row[shift + deg - k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(f, g)` as the Sylvester determinant. Zero when either input is zero
/// (and the other is not); an error when both are.
pub fn resultant<R: Ring>(
    polys: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<R::Elem> {
    let base = polys.base();
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::Domain("resultant of two zero polynomials".into())),
        (true, false) | (false, true) => Ok(base.zero()),
        (false, false) => Ok(determinant(base, sylvester_matrix(polys, f, g))),
    }
}
