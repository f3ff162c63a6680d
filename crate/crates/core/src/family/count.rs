//! Projective point counts over finite fields.

use num_bigint::BigUint;

use super::point::FamilyPoint;
use crate::algebra::poly::PolyRing;
use crate::algebra::ring::{FiniteField, Ring};

/// Beyond this field size the roots in `y` are counted by a gcd with `y^q - y`.
const BRUTE_FORCE_LIMIT: u64 = 64;

/// Number of `F_q`-points on the projective model, the point `(0:1:0)` included.
pub fn point_count<F: FiniteField>(field: &F, b: &FamilyPoint<F::Elem>) -> u64 {
    let polys = PolyRing::new(field.clone());
    let t = b.trigonal(field);
    let q = field.order();
    let elements: Vec<F::Elem> = field.elements().collect();
    let mut total = 1;
    for x in &elements {
        let px = polys.eval(&t.p, x);
        let qx = polys.eval(&t.q, x);
        if q <= BRUTE_FORCE_LIMIT {
            total += elements
                .iter()
                .filter(|y| {
                    let y3 = field.mul(&field.mul(y, y), y);
                    field.is_zero(&field.sub(&field.sub(&y3, &field.mul(&px, y)), &qx))
                })
                .count() as u64;
        } else {
            let cubic = polys.from_coeffs(vec![field.neg(&qx), field.neg(&px), field.zero(), field.one()]);
            let frob = polys.pow_mod(&polys.x(), &BigUint::from(q), &cubic);
            let g = polys.gcd(&polys.sub(&frob, &polys.x()), &cubic);
            total += g.degree().unwrap_or(0) as u64;
        }
    }
    total
}
