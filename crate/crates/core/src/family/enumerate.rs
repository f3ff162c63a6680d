//! Integral family points of bounded height, in lexicographic order.

use num_bigint::BigInt;
use num_traits::One;

use super::point::{FamilyPoint, WEIGHTS};

/// `N_i = max { n >= 0 : n^72 < a^i }` for each weight `i`.
pub fn coordinate_bounds(a: &BigInt) -> [BigInt; 6] {
    assert!(*a >= BigInt::one(), "height bound must be positive");
    WEIGHTS.map(|w| (a.pow(w) - BigInt::one()).nth_root(72))
}

/// `prod (2 N_i + 1)`.
pub fn box_count(a: &BigInt) -> BigInt {
    coordinate_bounds(a)
        .iter()
        .map(|n| BigInt::from(2) * n + BigInt::one())
        .product()
}

/// Every integral `b` with `ht(b) < a`, lexicographic in `(p2, p5, p6, p8, p9, p12)`.
pub struct HeightBox {
    bounds: [i64; 6],
    next: Option<[i64; 6]>,
    minimal_only: bool,
}

impl HeightBox {
    pub fn new(a: &BigInt, minimal_only: bool) -> Self {
        let bounds = coordinate_bounds(a).map(|n| i64::try_from(n).expect("height box too large to enumerate"));
        HeightBox {
            bounds,
            next: Some(bounds.map(|n| -n)),
            minimal_only,
        }
    }

    fn advance(&mut self) -> Option<[i64; 6]> {
        let cur = self.next?;
        let mut nxt = cur;
        let mut k = 5;
        loop {
            if nxt[k] < self.bounds[k] {
                nxt[k] += 1;
                self.next = Some(nxt);
                break;
            }
            nxt[k] = -self.bounds[k];
            if k == 0 {
                self.next = None;
                break;
            }
            k -= 1;
        }
        Some(cur)
    }
}

impl Iterator for HeightBox {
    type Item = FamilyPoint;

    fn next(&mut self) -> Option<FamilyPoint> {
        loop {
            let v = self.advance()?;
            let b = FamilyPoint::from_i64s(v);
            if !self.minimal_only || (!b.is_zero() && b.is_minimal().unwrap_or(false)) {
                return Some(b);
            }
        }
    }
}

pub fn enumerate(a: &BigInt, minimal_only: bool) -> HeightBox {
    HeightBox::new(a, minimal_only)
}

/// Length of the unfiltered stream, counted without building points.
pub fn stream_length(a: &BigInt) -> u64 {
    let mut it = HeightBox::new(a, false);
    let mut n = 0u64;
    while it.advance().is_some() {
        n += 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn height_one_is_the_origin() {
        let v: Vec<_> = enumerate(&BigInt::one(), false).collect();
        assert_eq!(v, vec![FamilyPoint::zero()]);
        assert_eq!(box_count(&BigInt::one()), BigInt::one());
    }

    #[test]
    fn power_of_two_height() {
        let a = BigInt::from(2).pow(72u32);
        let bounds = coordinate_bounds(&a);
        let expected = WEIGHTS.map(|w| (1i64 << w) - 1);
        assert_eq!(bounds, expected.map(BigInt::from));
        assert_eq!(bounds[0], BigInt::from(3));
    }

    #[test]
    fn stream_matches_box_and_height_test() {
        let a = BigInt::from(10_000);
        let pts: Vec<_> = enumerate(&a, false).collect();
        assert_eq!(BigInt::from(pts.len()), box_count(&a));
        assert!(pts.iter().all(|b| b.height_less_than(&a)));
        assert!(pts.windows(2).all(|w| w[0].as_array() < w[1].as_array()));
        // one step outside the box fails the height test
        let bounds = coordinate_bounds(&a);
        for i in 0..6 {
            let mut v = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
            v[i] = &bounds[i] + 1;
            assert!(!FamilyPoint::from_array(v).height_less_than(&a));
        }
    }

    #[test]
    fn minimal_stream_is_filtered() {
        let a = BigInt::from(10).pow(9u32);
        let all = enumerate(&a, true).take(2000).collect::<Vec<_>>();
        assert!(all.iter().all(|b| b.is_minimal().unwrap()));
    }
}
