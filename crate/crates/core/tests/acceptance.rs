//! Acceptance criteria, one status line each. Runs as a plain binary so the
//! lines are always printed; exits nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperflex_core::algebra::ext_field::ExtField;
use hyperflex_core::algebra::factor::{expand, factor, is_irreducible};
use hyperflex_core::algebra::newton::newton_polygon;
use hyperflex_core::algebra::series::TruncatedSeries;
use hyperflex_core::bitangents::{bitangent_resultant, galois_pattern_report, newton_report};
use hyperflex_core::e6;
use hyperflex_core::family::discriminant::resultant_of_partials;
use hyperflex_core::family::enumerate::box_count;
use hyperflex_core::family::{discriminant, enumerate, is_smooth, point_count};
use hyperflex_core::padic::{formal_log, omega_basis, rho_log_image, sieve_lower_bound, solve_branch, torsion_disk_check};
use hyperflex_core::stats::{box_report, chabauty_combine, max_points_f7};
use hyperflex_core::{FamilyPoint, FiniteField, Integers, PolyRing, PrimeField, Rationals, Ring};

/// Published bitangent resultant, `(exponent, coefficient)`.
const PUBLISHED_RESULTANT: [(usize, i64); 12] = [
    (0, 4096),
    (1, 12288),
    (3, -126976),
    (6, 110592),
    (7, -165888),
    (9, -40704),
    (10, 70656),
    (11, -34560),
    (15, 17280),
    (18, 1344),
    (19, 480),
    (27, 1),
];

/// Frozen after the first exhaustive sweep of `F_7^6`.
const SMOOTH_MOD_7: u64 = 100_842;
const MAX_POINTS_MOD_7: u64 = 19;

#[derive(Default)]
struct Criterion {
    checks: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Criterion {
    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, computed: T, expected: T) {
        let ok = computed == expected;
        self.check(format!("{what}: computed {computed:?}, expected {expected:?}"), ok);
    }

    fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn v2(n: i64) -> i64 {
    n.trailing_zeros() as i64
}

fn e6_suite(c: &mut Criterion) {
    let rep = e6::verify();
    // rank times Coxeter number; product of the fundamental degrees
    c.eq("roots", rep.roots, 6 * 12);
    c.eq("weyl order", rep.weyl_order, 2 * 5 * 6 * 8 * 9 * 12);
    // minus-type form on F_2^6: 2^5 - 2^2 singular vectors including 0
    let singular = (1 << 5) - (1 << 2);
    c.eq("q=+1 nonzero", rep.q_counts.plus, singular - 1);
    c.eq("q=-1", rep.q_counts.minus, 64 - singular);
    c.eq("q=+1 total", rep.q_counts.plus_including_zero, singular);
    c.eq("W-fixed vectors mod 2", rep.w_fixed_space_dim, 0);
    c.eq("det(I - w_cox)", rep.det_one_minus_coxeter, 3);
    c.check("char poly of w_cox is Phi_12 Phi_3", rep.coxeter_char_poly_is_phi12_phi3);
    c.eq("w_cox-fixed vectors mod 2", rep.coxeter_fixed_space_dim, 0);
    c.check("pairing centralizer is trivial", rep.centralizer_trivial);
    c.eq("dual index", rep.dual_index.as_str(), "3");
    // |O^-_6(2)| = 2 q^{n(n-1)} (q^n + 1) prod_{i<n} (q^{2i} - 1) at q = 2, n = 3
    let orthogonal: u64 = 2 * 2u64.pow(6) * (8 + 1) * (4 - 1) * (16 - 1);
    c.check("mod-2 reduction of W is injective", rep.aut_injective);
    c.eq("image order", rep.aut_image_order as u64, orthogonal);
    c.eq("orthogonal group order formula", rep.orthogonal_group_order, orthogonal);
    c.check("C differs from W", rep.c_differs_from_w);
    c.note(format!("proportion of w in W fixing a nonzero vector mod 2: {}", rep.fixing_proportion));
}

fn bitangent_suite(c: &mut Criterion) {
    let r = bitangent_resultant(&FamilyPoint::reference_curve()).expect("resultant");
    let mut want = vec![BigRational::zero(); 28];
    for (i, v) in PUBLISHED_RESULTANT {
        want[i] = q(v, 1);
    }
    c.eq("degree", r.degree(), 27);
    c.check("monic Res_beta equals the published polynomial", r.poly.coeffs() == want.as_slice());
}

/// Hull and residual from the displayed coefficients alone, by exhaustive comparison.
fn two_adic_oracle() -> (Ratio<i64>, usize, Vec<u64>) {
    let pts: Vec<(i64, i64, i64)> = PUBLISHED_RESULTANT.iter().map(|&(i, c)| (i as i64, v2(c), c)).collect();
    let (first, last) = (pts[0], *pts.last().unwrap());
    let span = last.0 - first.0;
    // every point on or above the chord: a single segment
    let single = pts
        .iter()
        .all(|&(i, v, _)| v * span >= first.1 * (last.0 - i) + last.1 * (i - first.0));
    assert!(single, "hull has more than one segment");
    let slope = Ratio::new(last.1 - first.1, span);
    let e = *slope.denom();
    let residual = (0..=span / e)
        .map(|j| {
            let i = first.0 + j * e;
            match pts.iter().find(|p| p.0 == i) {
                Some(&(_, v, coeff)) if v * span == first.1 * (last.0 - i) + last.1 * (i - first.0) => {
                    ((coeff >> v).rem_euclid(2)) as u64
                }
                _ => 0,
            }
        })
        .collect();
    (slope, span as usize, residual)
}

fn two_adic_suite(c: &mut Criterion) {
    let (slope, length, residual) = two_adic_oracle();
    let r = bitangent_resultant(&FamilyPoint::reference_curve()).expect("resultant");
    let n = newton_report(&r.poly, 2).expect("newton");
    c.eq("segments", n.segments.len(), 1);
    let s = &n.segments[0];
    c.eq("slope", s.slope.clone(), format!("{}/{}", slope.numer(), slope.denom()));
    c.eq("slope value", s.slope.as_str(), "-4/9");
    c.eq("length", s.length, length);
    c.eq("length value", s.length, 27);
    c.eq("residual (library vs hull oracle)", s.residual.clone(), residual.clone());
    c.eq("residual", s.residual.clone(), vec![1, 1, 0, 1]);
    c.note(
        "flagged: the stated residual (y+1)^3 = 1 + y + y^2 + y^3 would need v_2(1344) = 4 at a^18; \
         it is 6, so that point lies above the segment and both oracle and library give 1 + y + y^3",
    );
    let g = galois_pattern_report(&FamilyPoint::reference_curve(), &[2]).expect("galois");
    c.check(format!("Q_2 irreducibility: {}", g.q2_transitivity), g.q2_transitivity.starts_with("certified"));
}

fn series_from(terms: &[(usize, BigRational)], n: usize) -> TruncatedSeries {
    let mut v = vec![BigRational::zero(); n];
    for (k, c) in terms {
        v[*k] = c.clone();
    }
    TruncatedSeries::new(v, n)
}

fn padic_suite(c: &mut Criterion) {
    let b = FamilyPoint::reference_curve();
    let one = BigRational::one;
    let z = solve_branch(&b, 13).expect("branch").z;
    c.check("z = x^4 - x^12 + O(x^13)", z == series_from(&[(4, one()), (12, -one())], 13));
    let w = omega_basis(&b, 12).expect("omega");
    c.check("omega1 = 1 - 3x^8 + 3x^9 + O(x^12)", w[0] == series_from(&[(0, one()), (8, q(-3, 1)), (9, q(3, 1))], 12));
    let log = formal_log(&b, 2, 13).expect("log");
    c.check(
        "log1 = x - x^9/3 + 3x^10/10 + O(x^13)",
        log.components[0] == series_from(&[(1, one()), (9, q(-1, 3)), (10, q(3, 10))], 13),
    );
    c.check(
        "log2 = x^2/2 - 3x^10/10 + O(x^11)",
        log.components[1].truncate(11) == series_from(&[(2, q(1, 2)), (10, q(-3, 10))], 11),
    );
    c.check("log3 = x^5/5 + O(x^13)", log.components[2] == series_from(&[(5, q(1, 5))], 13));
    let img = rho_log_image(&b, 2, 13).expect("rho log");
    c.eq("rho log image", img.image.clone(), vec![[1, 1, 0], [1, 0, 0]]);
    let img4 = rho_log_image(&b, 2, 17).expect("rho log at N + 4");
    c.eq("rho log image at N + 4", img4.image, img.image);
    c.eq("torsion disk check", torsion_disk_check(&b, 2, 13).expect("torsion"), true);
    c.eq("sieve lower bound (1/4, 2)", sieve_lower_bound(&q(1, 4), 2).expect("sieve"), q(1, 4));
}

fn family_suite(c: &mut Criterion) {
    let f2 = PrimeField::new(2);
    let b2 = FamilyPoint::reference_curve().reduce(&f2);
    c.eq("#C(F_2)", point_count(&f2, &b2), 1);
    c.check("smooth over F_2", is_smooth(&f2, &b2));
    let sweep = max_points_f7().expect("sweep");
    let total = 7u64.pow(6);
    c.eq("members swept", total, 117_649);
    let d7 = BigRational::new(BigInt::from(sweep.smooth), BigInt::from(total));
    c.eq("smooth members mod 7 (frozen)", sweep.smooth, SMOOTH_MOD_7);
    c.check(format!("density {d7} >= 6/7"), d7 >= q(6, 7));
    c.eq("max #C_b(F_7) (frozen)", sweep.max, MAX_POINTS_MOD_7);
    c.check(format!("max #C_b(F_7) = {} <= 22", sweep.max), sweep.max <= 22);
    c.check("min #C_b(F_7) >= 1", sweep.min >= 1);
    let stated = chabauty_combine(&q(3, 1), &d7, 22).expect("combine");
    c.eq("delta_low", stated.exact.delta_low.clone(), q(5, 7));
    c.eq("point cap from #C_b(F_7) <= 22", stated.point_cap, 26);
    let computed = chabauty_combine(&q(3, 1), &d7, sweep.max).expect("combine");
    c.check(format!("point cap from the computed maximum: {} <= 26", computed.point_cap), computed.point_cap <= 26);
    let majority = &stated.exact.majority_low;
    c.check(
        format!("delta_low + d7 - 1 = {} = {} >= 0.61", stated.majority_low.exact, stated.majority_low.decimal),
        *majority >= q(61, 100),
    );
    if *majority < q(61, 100) {
        c.note(format!(
            "flagged: with d7 = {} exactly, the additive bound gives {}; reaching 0.61 this way needs d7 >= 0.8957. \
             The product delta_low * d7 = {} = {} does reach 0.61",
            stated.d7.exact,
            stated.majority_low.exact,
            stated.independent_product.exact,
            stated.independent_product.decimal
        ));
    }
}

fn random_member(rng: &mut ChaCha8Rng, bound: i64) -> FamilyPoint {
    FamilyPoint::from_i64s(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
}

fn factor_round_trips<F: FiniteField>(field: &F, rng: &mut ChaCha8Rng, n: usize) -> bool {
    let polys = PolyRing::new(field.clone());
    (0..n).all(|_| {
        let deg = rng.gen_range(1..=10);
        let mut coeffs: Vec<F::Elem> = (0..deg).map(|_| field.random(rng)).collect();
        let mut lead = field.random(rng);
        while field.is_zero(&lead) {
            lead = field.random(rng);
        }
        coeffs.push(lead);
        let f = polys.from_coeffs(coeffs);
        let fac = factor(&polys, &f).expect("nonzero");
        expand(&polys, &fac) == f
            && fac
                .factors
                .iter()
                .all(|(g, _)| g.lc().is_some_and(|c| field.is_one(c)) && is_irreducible(&polys, g))
    })
}

fn property_suite(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);

    let homogeneous = (0..100).all(|_| {
        let b = random_member(&mut rng, 3);
        let lambda = BigInt::from([-2i64, -1, 2, 3][rng.gen_range(0..4)]);
        discriminant(&b.scale(&lambda)).expect("disc") == lambda.pow(72u32) * discriminant(&b).expect("disc")
    });
    c.check("Delta_0(lambda . b) = lambda^72 Delta_0(b), 100 samples", homogeneous);

    let scaled = (0..20).all(|_| {
        let form = random_member(&mut rng, 4).homogenize(&Integers);
        let lambda = BigInt::from(rng.gen_range(2i64..=5));
        resultant_of_partials(&Integers, &form.scale(&Integers, &lambda)).expect("res")
            == lambda.pow(27u32) * resultant_of_partials(&Integers, &form).expect("res")
    });
    c.check("Res(grad(lambda F)) = lambda^27 Res(grad F), 20 samples", scaled);

    for p in [5u64, 7, 11, 13] {
        let field = PrimeField::new(p);
        let bad = (0..500)
            .filter(|_| {
                let b = FamilyPoint::from_i64s(std::array::from_fn(|_| rng.gen_range(0..p as i64)));
                let disc = field.from_bigint(&discriminant(&b).expect("disc"));
                is_smooth(&field, &b.reduce(&field)) == field.is_zero(&disc)
            })
            .count();
        c.eq(&format!("smooth <=> Delta_0 != 0 mod {p}, disagreements in 500"), bad, 0);
    }

    let f49 = ExtField::with_degree(7, 2).expect("F_49");
    let ok = factor_round_trips(&PrimeField::new(2), &mut rng, 334)
        && factor_round_trips(&PrimeField::new(7), &mut rng, 333)
        && factor_round_trips(&f49, &mut rng, 333);
    c.check("factorization reconstructs 1000 polynomials over F_2, F_7, F_49", ok);

    let newton_ok = (0..200).all(|_| {
        let deg = rng.gen_range(1..=15usize);
        let coeffs: Vec<BigRational> = (0..=deg)
            .map(|i| {
                if i != deg && rng.gen_bool(0.3) {
                    BigRational::zero()
                } else {
                    let unit = 2 * rng.gen_range(-20i64..20) + 1;
                    q(unit * 2i64.pow(rng.gen_range(0..8)), 1)
                }
            })
            .collect();
        let f = PolyRing::new(Rationals).from_coeffs(coeffs.clone());
        let np = newton_polygon(&f, 2).expect("polygon");
        let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let slopes = np.slopes();
        let convex = slopes.windows(2).all(|w| w[0] < w[1]);
        let length = np.total_length() == deg - low;
        let above = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).all(|(i, c)| {
            let v = c.numer().trailing_zeros().unwrap_or(0) as i64;
            np.segments
                .iter()
                .filter(|s| s.start.0 <= i && i <= s.start.0 + s.length)
                .all(|s| Ratio::from_integer(v) >= s.height_at(i))
        });
        convex && length && above
    });
    c.check("Newton polygons: increasing slopes, length, points on or above, 200 samples", newton_ok);

    let series_ok = (0..200).all(|_| {
        let n = rng.gen_range(1..20usize);
        let s = TruncatedSeries::new((0..n).map(|_| q(rng.gen_range(-50..50), rng.gen_range(1..20))).collect(), n);
        s.integrate().derivative() == s
    });
    c.check("series derivative of integral is the identity, 200 samples", series_ok);

    for a in [10u64.pow(4), 10u64.pow(6), 10u64.pow(9)] {
        let a = BigInt::from(a);
        let streamed = enumerate(&a, false).count();
        c.eq(&format!("box_count({a}) = stream length"), box_count(&a), BigInt::from(streamed));
    }
    let rep = box_report(&BigInt::from(10u64.pow(12))).expect("box");
    let ratio: f64 = rep.ratio.parse().unwrap();
    c.check(format!("box ratio to 64 a^(7/12) at a = 10^12: {ratio}"), (ratio - 1.0).abs() <= 0.15);
}

fn main() -> ExitCode {
    type Suite = fn(&mut Criterion);
    let criteria: [(&str, Suite, Duration); 6] = [
        ("E6 suite", e6_suite, Duration::from_secs(60)),
        ("bitangent resultant", bitangent_suite, Duration::from_secs(10)),
        ("2-adic structure of the resultant", two_adic_suite, Duration::from_secs(1)),
        ("p-adic suite", padic_suite, Duration::from_secs(10)),
        ("family suite", family_suite, Duration::from_secs(300)),
        ("property suites", property_suite, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let mut c = Criterion::default();
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut c)));
        let elapsed = start.elapsed();
        if outcome.is_err() {
            c.check("completed without panicking", false);
        }
        c.check(format!("runtime {:.2}s within {}s", elapsed.as_secs_f64(), budget.as_secs()), elapsed <= *budget);
        let pass = c.checks.iter().all(|(_, ok)| *ok);
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} ({} checks, {:.2}s)",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            c.checks.len(),
            elapsed.as_secs_f64()
        );
        for (what, _) in c.checks.iter().filter(|(_, ok)| !ok) {
            println!("    failed: {what}");
        }
        for n in &c.notes {
            println!("    {n}");
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
