//! Smoothness by elimination of `y`.
//!
//! The point at infinity `(0:1:0)` is smooth on every member: there the
//! dehomogenized form is `z (1 - ...) - x^4 - ...` with `dF/dz = 1`. An affine
//! singular point `(x0, y0)` of `f = y^3 - P y - Q` is a root of multiplicity
//! at least two of `D(x) = Res_y(f, f_y)`, since `f` is monic in `y`. Each
//! candidate factor `g` of `D` is then tested by a gcd of `f, f_y, f_x` over
//! `K[x]/g`, splitting `g` whenever a leading coefficient is a zero divisor.

use super::point::FamilyPoint;
use crate::algebra::factor::factor;
use crate::algebra::poly::{Poly, PolyRing};
use crate::algebra::resultant::resultant;
use crate::algebra::ring::{Field, FiniteField, Rationals, Ring};

/// A polynomial in `y` with coefficients in `K[x]`, low to high.
type YPoly<E> = Vec<Poly<E>>;

struct Split<E>(Poly<E>, Poly<E>);

/// `[f, f_y, f_x]` as polynomials in `y`.
fn jacobian_system<F: Field>(polys: &PolyRing<F>, b: &FamilyPoint<F::Elem>) -> [YPoly<F::Elem>; 3] {
    let t = b.trigonal(polys.base());
    let neg = |p: &Poly<F::Elem>| polys.neg(p);
    let f = vec![neg(&t.q), neg(&t.p), Poly::zero(), polys.one()];
    let fy = vec![neg(&t.p), Poly::zero(), polys.from_ints(&[3])];
    let fx = vec![neg(&polys.derivative(&t.q)), neg(&polys.derivative(&t.p))];
    [f, fy, fx]
}

/// `D(x) = Res_y(f, f_y)`.
pub fn singular_x_polynomial<F: Field>(field: &F, b: &FamilyPoint<F::Elem>) -> Poly<F::Elem> {
    let polys = PolyRing::new(field.clone());
    let [f, fy, _] = jacobian_system(&polys, b);
    let outer = PolyRing::new(polys.clone());
    resultant(&outer, &outer.from_coeffs(f), &outer.from_coeffs(fy)).expect("f is monic in y")
}

fn normalize<F: Field>(polys: &PolyRing<F>, g: &Poly<F::Elem>, a: &mut YPoly<F::Elem>) -> Result<(), Split<F::Elem>> {
    while let Some(c) = a.last() {
        if c.is_zero() {
            a.pop();
            continue;
        }
        let h = polys.gcd(c, g);
        if h.degree() == Some(0) {
            return Ok(());
        }
        let other = polys.div_exact(g, &h).expect("gcd divides");
        return Err(Split(h, other));
    }
    Ok(())
}

/// Gcd in `(K[x]/g)[y]`, or a proper splitting of `g`.
fn gcd_mod<F: Field>(
    polys: &PolyRing<F>,
    g: &Poly<F::Elem>,
    a: &YPoly<F::Elem>,
    b: &YPoly<F::Elem>,
) -> Result<YPoly<F::Elem>, Split<F::Elem>> {
    let reduce = |v: &YPoly<F::Elem>| v.iter().map(|c| polys.rem(c, g)).collect::<Vec<_>>();
    let mut a = reduce(a);
    let mut b = reduce(b);
    normalize(polys, g, &mut a)?;
    loop {
        normalize(polys, g, &mut b)?;
        if b.is_empty() {
            return Ok(a);
        }
        let (_, inv, _) = polys.ext_gcd(b.last().expect("nonempty"), g);
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let t = polys.mul_mod(a.last().expect("nonempty"), &inv, g);
            for (i, c) in b.iter().enumerate() {
                a[i + k] = polys.rem(&polys.sub(&a[i + k], &polys.mul(&t, c)), g);
            }
            normalize(polys, g, &mut a)?;
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Whether some root `x0` of `g` admits a `y0` killing `cur` and every polynomial in `rest`.
fn has_common_root<F: Field>(
    polys: &PolyRing<F>,
    g: &Poly<F::Elem>,
    cur: &YPoly<F::Elem>,
    rest: &[YPoly<F::Elem>],
) -> bool {
    match rest.split_first() {
        None => cur.len() >= 2,
        Some((next, tail)) => match gcd_mod(polys, g, cur, next) {
            Ok(h) => has_common_root(polys, g, &h, tail),
            Err(Split(g1, g2)) => has_common_root(polys, &g1, cur, rest) || has_common_root(polys, &g2, cur, rest),
        },
    }
}

fn singular_above<F: Field>(polys: &PolyRing<F>, b: &FamilyPoint<F::Elem>, g: &Poly<F::Elem>) -> bool {
    let [f, fy, fx] = jacobian_system(polys, b);
    has_common_root(polys, &polys.monic(g), &f, &[fy, fx])
}

/// Smoothness of the projective closure over the algebraic closure of a finite field.
pub fn is_smooth<F: FiniteField>(field: &F, b: &FamilyPoint<F::Elem>) -> bool {
    let polys = PolyRing::new(field.clone());
    let d = singular_x_polynomial(field, b);
    let Some(fac) = factor(&polys, &d) else {
        return false;
    };
    !fac
        .factors
        .iter()
        .filter(|(_, m)| *m >= 2)
        .any(|(g, _)| singular_above(&polys, b, g))
}

/// Smoothness over the algebraic closure of `Q`.
pub fn is_smooth_over_q(b: &FamilyPoint) -> bool {
    let polys = PolyRing::new(Rationals);
    let bq = b.reduce(&Rationals);
    let d = singular_x_polynomial(&Rationals, &bq);
    if d.is_zero() {
        return false;
    }
    let repeated = polys.gcd(&d, &polys.derivative(&d));
    if repeated.degree() == Some(0) {
        return true;
    }
    let g = polys.div_exact(&repeated, &polys.gcd(&repeated, &polys.derivative(&repeated))).expect("gcd divides");
    !singular_above::<Rationals>(&polys, &bq, &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ext_field::ExtField;
    use crate::algebra::ring::PrimeField;
    use crate::family::discriminant::{discriminant, resultant_of_partials};
    use num_bigint::BigInt;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reference_curve_has_good_reduction_at_2() {
        let f2 = PrimeField::new(2);
        assert!(is_smooth(&f2, &FamilyPoint::reference_curve().reduce(&f2)));
        assert!(is_smooth_over_q(&FamilyPoint::reference_curve()));
    }

    #[test]
    fn cusp_is_singular_everywhere() {
        for p in [2u64, 3, 5, 7, 11] {
            let f = PrimeField::new(p);
            assert!(!is_smooth(&f, &FamilyPoint::zero().reduce(&f)), "p = {p}");
        }
        let f9 = ExtField::with_degree(3, 2).unwrap();
        assert!(!is_smooth(&f9, &FamilyPoint::zero().reduce(&f9)));
        assert!(!is_smooth_over_q(&FamilyPoint::zero()));
    }

    #[test]
    fn nodal_member_over_q() {
        // y^3 = x^2 (x^2 + 1) is singular at the origin
        let b = FamilyPoint::from_i64s([0, 0, 1, 0, 0, 0]);
        assert!(!is_smooth_over_q(&b));
        assert!(discriminant(&b).unwrap().is_zero());
    }

    #[test]
    fn singular_point_in_an_extension() {
        // singular points at x = +-i: y^3 = (x^2 + 1)^2 has cusps at (+-i, 0)
        let b = FamilyPoint::from_i64s([0, 0, 2, 0, 0, 1]);
        assert!(!is_smooth_over_q(&b));
        // F_7 has no square root of -1, so the singular points live over F_49
        let f7 = PrimeField::new(7);
        assert!(!is_smooth(&f7, &b.reduce(&f7)));
    }

    #[test]
    fn agrees_with_discriminant_mod_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [5u64, 7] {
            let f = PrimeField::new(p);
            for _ in 0..40 {
                let v: [i64; 6] = std::array::from_fn(|_| rng.gen_range(0..p as i64));
                let b = FamilyPoint::from_i64s(v);
                let d = discriminant(&b).unwrap();
                let nonzero = !(d % BigInt::from(p)).is_zero();
                assert_eq!(is_smooth(&f, &b.reduce(&f)), nonzero, "p={p} b={b}");
            }
        }
    }

    #[test]
    fn agrees_with_resultant_over_f9() {
        let f9 = ExtField::with_degree(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..25 {
            let b = FamilyPoint::from_array(std::array::from_fn(|_| f9.random(&mut rng)));
            let r = resultant_of_partials(&f9, &b.homogenize(&f9)).unwrap();
            assert_eq!(is_smooth(&f9, &b), !f9.is_zero(&r), "{b:?}");
        }
    }

    #[test]
    fn agrees_with_discriminant_over_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut singular = 0;
        for _ in 0..40 {
            let v: [i64; 6] = std::array::from_fn(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-2..=2) });
            let b = FamilyPoint::from_i64s(v);
            let d = discriminant(&b).unwrap();
            singular += d.is_zero() as usize;
            assert_eq!(is_smooth_over_q(&b), !d.is_zero(), "b={b}");
        }
        assert!(singular > 0);
    }
}
