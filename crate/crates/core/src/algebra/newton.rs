//! `p`-adic Newton polygons and residual polynomials.

use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use super::poly::{Poly, PolyRing};
use super::ring::{unit_part_mod, valuation, PrimeField, Rationals};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// Left endpoint `(exponent, valuation)`.
    pub start: (usize, i64),
    pub slope: Ratio<i64>,
    /// Horizontal length.
    pub length: usize,
}

impl Segment {
    pub fn end(&self) -> (usize, i64) {
        let rise = self.slope * Ratio::from_integer(self.length as i64);
        (self.start.0 + self.length, self.start.1 + rise.to_integer())
    }

    /// Denominator of the slope in lowest terms; the ramification forced on
    /// every root attached to this segment.
    pub fn ramification(&self) -> usize {
        *self.slope.denom() as usize
    }

    /// Hull height above exponent `i` (inside the segment's span).
    pub fn height_at(&self, i: usize) -> Ratio<i64> {
        Ratio::from_integer(self.start.1) + self.slope * Ratio::from_integer(i as i64 - self.start.0 as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub prime: u64,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    pub fn total_length(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }

    pub fn slopes(&self) -> Vec<Ratio<i64>> {
        self.segments.iter().map(|s| s.slope).collect()
    }
}

/// Lower convex hull of points sorted by strictly increasing abscissa.
/// Collinear interior points are dropped, so slopes strictly increase.
pub fn lower_hull(points: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut hull: Vec<(usize, i64)> = Vec::with_capacity(points.len());
    for &pt in points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b if it lies on or above segment a -> pt
            let cross = (b.0 as i128 - a.0 as i128) * (pt.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (pt.0 as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

pub fn polygon_from_points(points: &[(usize, i64)], prime: u64) -> NewtonPolygon {
    let hull = lower_hull(points);
    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            Segment {
                start: w[0],
                slope: Ratio::new(w[1].1 - w[0].1, length as i64),
                length,
            }
        })
        .collect();
    NewtonPolygon { prime, segments }
}

pub fn valuation_points(f: &Poly<BigRational>, p: u64) -> Vec<(usize, i64)> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| valuation(c, p).map(|v| (i, v)))
        .collect()
}

pub fn newton_polygon(f: &Poly<BigRational>, p: u64) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::Domain("Newton polygon of the zero polynomial".into()));
    }
    if PrimeField::try_new(p).is_none() {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(polygon_from_points(&valuation_points(f, p), p))
}

/// Residual polynomial of `f` along `segment`: for slope `-h/e` and length
/// `L`, the degree-`L/e` polynomial over `F_p` whose `j`-th coefficient is
/// the unit part of the coefficient at exponent `start + j e` when that point
/// lies on the segment, and zero otherwise.
pub fn residual_polynomial(f: &Poly<BigRational>, p: u64, segment: &Segment) -> Result<Poly<u64>> {
    let polygon = newton_polygon(f, p)?;
    if !polygon.segments.contains(segment) {
        return Err(Error::Domain("segment is not on the Newton polygon".into()));
    }
    let field = PrimeField::new(p);
    let fp = PolyRing::new(field);
    let e = segment.ramification();
    let step_rise = *segment.slope.numer() * (e as i64 / *segment.slope.denom());
    let coeffs = (0..=segment.length / e)
        .map(|j| {
            let i = segment.start.0 + j * e;
            let line = segment.start.1 + step_rise * j as i64;
            let c = f.get(i).cloned().unwrap_or_else(BigRational::zero);
            match valuation(&c, p) {
                Some(v) if v == line => unit_part_mod(&c, &field).expect("nonzero"),
                _ => 0,
            }
        })
        .collect();
    Ok(fp.from_coeffs(coeffs))
}

/// Helper for tests and reports: rational polynomial from integer coefficients.
pub fn rational_poly(coeffs: &[i64]) -> Poly<BigRational> {
    PolyRing::new(Rationals).from_ints(coeffs)
}

/// Number of roots (with multiplicity, in an algebraic closure of `Q_p`)
/// whose valuation is at least `bound`, read off the polygon of a polynomial.
pub fn roots_with_valuation_at_least(polygon: &NewtonPolygon, bound: Ratio<i64>) -> usize {
    polygon
        .segments
        .iter()
        .filter(|s| -s.slope >= bound)
        .map(|s| s.length)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x2_minus_p() {
        for p in [2u64, 3, 5, 7] {
            let f = rational_poly(&[-(p as i64), 0, 1]);
            let np = newton_polygon(&f, p).unwrap();
            assert_eq!(np.segments.len(), 1);
            assert_eq!(np.segments[0].slope, Ratio::new(-1, 2));
            assert_eq!(np.segments[0].length, 2);
            if p != 2 {
                let r = residual_polynomial(&f, p, &np.segments[0]).unwrap();
                // -p / p = -1, then 1
                assert_eq!(r.coeffs(), &[p - 1, 1]);
            }
        }
    }

    #[test]
    fn two_segments() {
        let p = 3;
        let f = rational_poly(&[3, 1, 3]);
        let np = newton_polygon(&f, p).unwrap();
        assert_eq!(np.slopes(), vec![Ratio::from_integer(-1), Ratio::from_integer(1)]);
        assert_eq!(np.segments.iter().map(|s| s.length).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn residual_of_split_quadratic() {
        // (x - 5)(x - 20) = x^2 - 25x + 100; slope -1, residual y^2 + 4 = (y - 1)(y - 4)
        let f = rational_poly(&[100, -25, 1]);
        let np = newton_polygon(&f, 5).unwrap();
        assert_eq!(np.segments.len(), 1);
        let r = residual_polynomial(&f, 5, &np.segments[0]).unwrap();
        assert_eq!(r.coeffs(), &[4, 0, 1]);
    }

    #[test]
    fn foreign_segment_rejected() {
        let f = rational_poly(&[3, 1, 3]);
        let seg = Segment {
            start: (0, 0),
            slope: Ratio::from_integer(0),
            length: 2,
        };
        assert!(residual_polynomial(&f, 3, &seg).is_err());
        assert!(newton_polygon(&Poly::zero(), 3).is_err());
    }

    #[test]
    fn vanishing_at_zero_shortens_polygon() {
        // x^2 (x - 2): points start at exponent 2
        let f = rational_poly(&[0, 0, -2, 1]);
        let np = newton_polygon(&f, 2).unwrap();
        assert_eq!(np.total_length(), 1);
    }
}
