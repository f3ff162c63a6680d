//! The E6 root lattice, its Weyl group as integer matrices, and the quadratic
//! space `Λ/2Λ`.
//!
//! Coordinates are with respect to the simple roots in Bourbaki numbering:
//!
//! ```text
//! 1 - 3 - 4 - 5 - 6
//!         |
//!         2
//! ```

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::poly::{Poly, PolyRing};
use crate::algebra::resultant::determinant;
use crate::algebra::ring::{Integers, Ring};

pub const RANK: usize = 6;

pub type LatticeVector = [i64; RANK];
pub type IntMatrix = [[i64; RANK]; RANK];
/// A class of `Λ/2Λ`; bit `i` is coordinate `i` mod 2.
pub type ModTwoVector = u8;
/// Rows of a 6x6 matrix over `F_2`, each as a bit mask.
pub type F2Matrix = [u8; RANK];

const EDGES: [(usize, usize); 5] = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];

pub fn cartan_matrix() -> IntMatrix {
    let mut g = [[0; RANK]; RANK];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in EDGES {
        g[a - 1][b - 1] = -1;
        g[b - 1][a - 1] = -1;
    }
    g
}

pub fn identity() -> IntMatrix {
    let mut m = [[0; RANK]; RANK];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut c = [[0; RANK]; RANK];
    for i in 0..RANK {
        for k in 0..RANK {
            if a[i][k] != 0 {
                for j in 0..RANK {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

pub fn apply(m: &IntMatrix, v: &LatticeVector) -> LatticeVector {
    std::array::from_fn(|i| (0..RANK).map(|j| m[i][j] * v[j]).sum())
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i]))
}

pub fn inner(g: &IntMatrix, a: &LatticeVector, b: &LatticeVector) -> i64 {
    (0..RANK).map(|i| a[i] * apply(g, b)[i]).sum()
}

/// `s_i(v) = v - (v, α_i) α_i`.
pub fn simple_reflection(g: &IntMatrix, i: usize) -> IntMatrix {
    let mut s = identity();
    for j in 0..RANK {
        s[i][j] -= g[i][j];
    }
    s
}

pub fn simple_reflections(g: &IntMatrix) -> Vec<IntMatrix> {
    (0..RANK).map(|i| simple_reflection(g, i)).collect()
}

pub fn int_determinant(m: &[Vec<i64>]) -> BigInt {
    determinant(&Integers, m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

#[derive(Clone, Debug)]
pub struct E6RootSystem {
    pub gram: IntMatrix,
    pub roots: Vec<LatticeVector>,
}

/// Closure of the simple roots under the simple reflections.
pub fn build_root_system() -> E6RootSystem {
    let gram = cartan_matrix();
    let gens = simple_reflections(&gram);
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let mut queue: VecDeque<LatticeVector> = VecDeque::new();
    for i in 0..RANK {
        let mut e = [0; RANK];
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    let mut roots = Vec::new();
    while let Some(v) = queue.pop_front() {
        roots.push(v);
        for s in &gens {
            let w = apply(s, &v);
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    roots.sort();
    E6RootSystem { gram, roots }
}

/// Breadth-first closure of the simple reflections; the identity comes first.
pub fn weyl_group() -> Vec<IntMatrix> {
    let gens = simple_reflections(&cartan_matrix());
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut out = vec![identity()];
    seen.insert(identity());
    let mut head = 0;
    while head < out.len() {
        let m = out[head];
        head += 1;
        for s in &gens {
            let w = mat_mul(s, &m);
            if seen.insert(w) {
                out.push(w);
            }
        }
    }
    out
}

pub fn coxeter_element(g: &IntMatrix, order: &[usize]) -> IntMatrix {
    order.iter().fold(identity(), |acc, &i| mat_mul(&acc, &simple_reflection(g, i)))
}

pub fn matrix_order(m: &IntMatrix) -> usize {
    let mut p = *m;
    let mut k = 1;
    while p != identity() {
        p = mat_mul(&p, m);
        k += 1;
    }
    k
}

/// `det(t I - m)` over `Z[t]`.
pub fn characteristic_polynomial(m: &IntMatrix) -> Poly<BigInt> {
    let polys = PolyRing::new(Integers);
    let rows = (0..RANK)
        .map(|i| {
            (0..RANK)
                .map(|j| {
                    let c = polys.constant(BigInt::from(-m[i][j]));
                    if i == j {
                        polys.add(&c, &polys.x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    determinant(&polys, rows)
}

pub fn cyclotomic_12() -> Poly<BigInt> {
    PolyRing::new(Integers).from_ints(&[1, 0, -1, 0, 1])
}

pub fn cyclotomic_3() -> Poly<BigInt> {
    PolyRing::new(Integers).from_ints(&[1, 1, 1])
}

#[derive(Clone, Debug, Serialize)]
pub struct CoxeterReport {
    pub det_one_minus_w: i64,
    /// Low to high.
    pub characteristic_polynomial: Vec<i64>,
    pub equals_phi12_phi3: bool,
    pub order: usize,
    pub fixes_nonzero_class_mod_2: bool,
}

pub fn coxeter_checks() -> CoxeterReport {
    coxeter_checks_for(&[0, 1, 2, 3, 4, 5])
}

pub fn coxeter_checks_for(order: &[usize]) -> CoxeterReport {
    let g = cartan_matrix();
    let w = coxeter_element(&g, order);
    let one_minus: Vec<Vec<i64>> = (0..RANK)
        .map(|i| (0..RANK).map(|j| i64::from(i == j) - w[i][j]).collect())
        .collect();
    let det = int_determinant(&one_minus);
    let chi = characteristic_polynomial(&w);
    let polys = PolyRing::new(Integers);
    let equals = polys
        .div_rem(&chi, &cyclotomic_12())
        .is_some_and(|(q, r)| r.is_zero() && q == cyclotomic_3());
    CoxeterReport {
        det_one_minus_w: i64::try_from(det).expect("small"),
        characteristic_polynomial: chi.coeffs().iter().map(|c| i64::try_from(c).expect("small")).collect(),
        equals_phi12_phi3: equals,
        order: matrix_order(&w),
        fixes_nonzero_class_mod_2: !fixed_space_mod2(&[reduce_mod2(&w)]).is_empty(),
    }
}

// ---------- Λ/2Λ ----------

pub fn reduce_mod2(m: &IntMatrix) -> F2Matrix {
    std::array::from_fn(|i| (0..RANK).fold(0u8, |acc, j| acc | (((m[i][j] & 1) as u8) << j)))
}

pub fn f2_apply(m: &F2Matrix, v: ModTwoVector) -> ModTwoVector {
    (0..RANK).fold(0u8, |acc, i| acc | ((((m[i] & v).count_ones() & 1) as u8) << i))
}

pub fn f2_mul(a: &F2Matrix, b: &F2Matrix) -> F2Matrix {
    // row i of ab = sum over k in row i of a of row k of b
    std::array::from_fn(|i| (0..RANK).filter(|&k| a[i] >> k & 1 == 1).fold(0u8, |acc, k| acc ^ b[k]))
}

pub fn f2_identity() -> F2Matrix {
    std::array::from_fn(|i| 1u8 << i)
}

pub fn f2_transpose(m: &F2Matrix) -> F2Matrix {
    std::array::from_fn(|i| (0..RANK).fold(0u8, |acc, j| acc | ((m[j] >> i & 1) << j)))
}

/// Rank over `F_2` of bit-mask rows of any width up to 64.
pub fn f2_rank(rows: &[u64]) -> usize {
    f2_row_reduce(rows).len()
}

/// Reduced row echelon basis of the row space.
fn f2_row_reduce(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut r = r;
        for &b in &basis {
            let pivot = 63 - b.leading_zeros();
            if r >> pivot & 1 == 1 {
                r ^= b;
            }
        }
        if r != 0 {
            let pivot = 63 - r.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> pivot & 1 == 1 {
                    *b ^= r;
                }
            }
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Basis of `{ v in F_2^n : r . v = 0 for every row r }`.
pub fn f2_nullspace(rows: &[u64], n: usize) -> Vec<u64> {
    let basis = f2_row_reduce(rows);
    let pivots: Vec<u32> = basis.iter().map(|b| 63 - b.leading_zeros()).collect();
    (0..n as u32)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u64 << free;
            for (b, &p) in basis.iter().zip(&pivots) {
                if b >> free & 1 == 1 {
                    v |= 1u64 << p;
                }
            }
            v
        })
        .collect()
}

pub fn f2_invertible(m: &F2Matrix) -> bool {
    f2_rank(&m.map(u64::from)) == RANK
}

/// Basis of the common fixed space of the given matrices.
pub fn fixed_space_mod2(mats: &[F2Matrix]) -> Vec<ModTwoVector> {
    let id = f2_identity();
    let rows: Vec<u64> = mats
        .iter()
        .flat_map(|m| (0..RANK).map(move |i| u64::from(m[i] ^ id[i])))
        .collect();
    f2_nullspace(&rows, RANK).into_iter().map(|v| v as u8).collect()
}

pub fn w_mod2_fixed_space(subset: &[IntMatrix]) -> Vec<ModTwoVector> {
    let mats: Vec<F2Matrix> = subset.iter().map(reduce_mod2).collect();
    fixed_space_mod2(&mats)
}

#[derive(Clone, Debug)]
pub struct ModTwoQuadraticSpace {
    gram: IntMatrix,
}

impl ModTwoQuadraticSpace {
    pub fn new(gram: IntMatrix) -> Self {
        ModTwoQuadraticSpace { gram }
    }

    pub fn lift(v: ModTwoVector) -> LatticeVector {
        std::array::from_fn(|i| i64::from(v >> i & 1))
    }

    pub fn pairing(&self, a: ModTwoVector, b: ModTwoVector) -> u8 {
        inner(&self.gram, &Self::lift(a), &Self::lift(b)).rem_euclid(2) as u8
    }

    /// `(-1)^((λ, λ) / 2)`.
    pub fn q(&self, a: ModTwoVector) -> i8 {
        let l = Self::lift(a);
        if (inner(&self.gram, &l, &l) / 2).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn pairing_matrix(&self) -> F2Matrix {
        reduce_mod2(&self.gram)
    }

    pub fn classes() -> impl Iterator<Item = ModTwoVector> {
        0..(1u8 << RANK)
    }

    pub fn preserves_pairing(&self, m: &F2Matrix) -> bool {
        let b = self.pairing_matrix();
        f2_mul(&f2_mul(&f2_transpose(m), &b), m) == b
    }

    pub fn preserves_q(&self, m: &F2Matrix) -> bool {
        Self::classes().all(|v| self.q(f2_apply(m, v)) == self.q(v))
    }
}

pub fn quadratic_space() -> ModTwoQuadraticSpace {
    ModTwoQuadraticSpace::new(cartan_matrix())
}

#[derive(Clone, Debug, Serialize)]
pub struct QCounts {
    pub plus: usize,
    pub minus: usize,
    pub plus_including_zero: usize,
}

pub fn q_counts() -> QCounts {
    let qs = quadratic_space();
    let plus = ModTwoQuadraticSpace::classes().filter(|&v| v != 0 && qs.q(v) == 1).count();
    let minus = ModTwoQuadraticSpace::classes().filter(|&v| qs.q(v) == -1).count();
    QCounts {
        plus,
        minus,
        plus_including_zero: plus + 1,
    }
}

/// Solutions `X` of `X g = g X` for every generator, as a basis of the
/// solution space in `F_2^36` (bit `6 i + j` is entry `(i, j)`).
pub fn commutant_basis(gens: &[F2Matrix]) -> Vec<u64> {
    let entry = |i: usize, j: usize| 6 * i + j;
    let mut rows: Vec<u64> = Vec::new();
    for g in gens {
        // (X g)_{ij} = sum_k X_{ik} g_{kj};  (g X)_{ij} = sum_k g_{ik} X_{kj}
        for i in 0..RANK {
            for j in 0..RANK {
                let mut r = 0u64;
                for k in 0..RANK {
                    if g[k] >> j & 1 == 1 {
                        r ^= 1 << entry(i, k);
                    }
                    if g[i] >> k & 1 == 1 {
                        r ^= 1 << entry(k, j);
                    }
                }
                if r != 0 {
                    rows.push(r);
                }
            }
        }
    }
    f2_nullspace(&rows, RANK * RANK)
}

pub fn unpack_matrix(bits: u64) -> F2Matrix {
    std::array::from_fn(|i| ((bits >> (6 * i)) & 0x3f) as u8)
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub solution_dimension: usize,
    /// Invertible pairing-preserving solutions, when the space was enumerated.
    pub members: Option<Vec<F2Matrix>>,
    pub trivial: bool,
}

/// Invertible, pairing-preserving maps commuting with all of `gens`.
/// Spaces of dimension above `max_enumerate` are only measured.
pub fn pairing_centralizer(gens: &[F2Matrix], max_enumerate: usize) -> CentralizerReport {
    let qs = quadratic_space();
    let basis = commutant_basis(gens);
    let dim = basis.len();
    if dim > max_enumerate {
        return CentralizerReport {
            solution_dimension: dim,
            members: None,
            trivial: false,
        };
    }
    let mut members = Vec::new();
    for mask in 0u64..(1u64 << dim) {
        let bits = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(0u64, |acc, (_, b)| acc ^ b);
        let m = unpack_matrix(bits);
        if f2_invertible(&m) && qs.preserves_pairing(&m) {
            members.push(m);
        }
    }
    let trivial = members == vec![f2_identity()];
    CentralizerReport {
        solution_dimension: dim,
        members: Some(members),
        trivial,
    }
}

pub fn pairing_centralizer_of_w() -> CentralizerReport {
    let gens: Vec<F2Matrix> = simple_reflections(&cartan_matrix()).iter().map(reduce_mod2).collect();
    pairing_centralizer(&gens, 16)
}

#[derive(Clone, Debug, Serialize)]
pub struct AutImageReport {
    pub injective: bool,
    pub image_order: usize,
    pub target_order: u64,
    pub all_preserve_q: bool,
}

/// `2 q^(n(n-1)) (q^n + 1) prod_{i<n} (q^(2i) - 1)`, the order of `O^-_{2n}(q)`.
pub fn orthogonal_minus_order(q: u64, n: u32) -> u64 {
    2 * q.pow(n * (n - 1)) * (q.pow(n) + 1) * (1..n).map(|i| q.pow(2 * i) - 1).product::<u64>()
}

pub fn aut_image_checks(weyl: &[IntMatrix]) -> AutImageReport {
    let qs = quadratic_space();
    let image: HashSet<F2Matrix> = weyl.iter().map(reduce_mod2).collect();
    AutImageReport {
        injective: image.len() == weyl.len(),
        image_order: image.len(),
        target_order: orthogonal_minus_order(2, 3),
        all_preserve_q: image.iter().all(|m| qs.preserves_q(m)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub transitive_27: bool,
    pub transitive_36: bool,
    pub orbit_sizes: Vec<usize>,
    pub section_property: bool,
    pub roots_mod_2: usize,
    pub roots_fill_minus_classes: bool,
    pub fixing_count: usize,
    pub weyl_order: usize,
    pub fixing_proportion: (u64, u64),
    pub c_differs_from_w: bool,
    pub coxeter_outside_c: bool,
}

fn orbits(gens: &[F2Matrix]) -> Vec<Vec<ModTwoVector>> {
    let mut seen = [false; 64];
    let mut out = Vec::new();
    for start in ModTwoQuadraticSpace::classes() {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let v = orbit[head];
            head += 1;
            for g in gens {
                let w = f2_apply(g, v);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    orbit.push(w);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn orbit_and_section_checks(weyl: &[IntMatrix]) -> OrbitReport {
    let g = cartan_matrix();
    let qs = quadratic_space();
    let gens: Vec<F2Matrix> = simple_reflections(&g).iter().map(reduce_mod2).collect();
    let orbs = orbits(&gens);
    let plus: Vec<ModTwoVector> = ModTwoQuadraticSpace::classes().filter(|&v| v != 0 && qs.q(v) == 1).collect();
    let minus: Vec<ModTwoVector> = ModTwoQuadraticSpace::classes().filter(|&v| qs.q(v) == -1).collect();
    let transitive_27 = orbs.contains(&plus);
    let transitive_36 = orbs.contains(&minus);

    let section_property = minus.iter().all(|&v| {
        (0..2u8).all(|i| plus.iter().any(|&w| qs.pairing(v, w) == i))
    });

    let roots = build_root_system().roots;
    let reduced: HashSet<ModTwoVector> = roots
        .iter()
        .map(|r| (0..RANK).fold(0u8, |acc, i| acc | (((r[i] & 1) as u8) << i)))
        .collect();
    let minus_set: HashSet<ModTwoVector> = minus.iter().copied().collect();

    let fixing_count = weyl
        .iter()
        .filter(|m| !w_mod2_fixed_space(std::slice::from_ref(*m)).is_empty())
        .count();
    let cox = coxeter_element(&g, &[0, 1, 2, 3, 4, 5]);
    let (n, d) = reduce_fraction(fixing_count as u64, weyl.len() as u64);
    OrbitReport {
        transitive_27,
        transitive_36,
        orbit_sizes: {
            let mut s: Vec<usize> = orbs.iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        },
        section_property,
        roots_mod_2: reduced.len(),
        roots_fill_minus_classes: reduced == minus_set,
        fixing_count,
        weyl_order: weyl.len(),
        fixing_proportion: (n, d),
        c_differs_from_w: fixing_count < weyl.len(),
        coxeter_outside_c: w_mod2_fixed_space(&[cox]).is_empty(),
    }
}

fn reduce_fraction(n: u64, d: u64) -> (u64, u64) {
    let r = BigRational::new(n.into(), d.into());
    (
        u64::try_from(r.numer()).expect("small"),
        u64::try_from(r.denom()).expect("small"),
    )
}

/// `|det(Gram)|`, the index of the lattice in its dual.
pub fn dual_index_of(gram: &[Vec<i64>]) -> BigInt {
    let d = int_determinant(gram);
    if d < BigInt::from(0) {
        -d
    } else {
        d
    }
}

pub fn dual_index() -> BigInt {
    let g = cartan_matrix();
    dual_index_of(&g.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

#[derive(Clone, Debug, Serialize)]
pub struct E6Report {
    pub roots: usize,
    pub weyl_order: usize,
    pub det_one_minus_coxeter: i64,
    pub coxeter_char_poly_is_phi12_phi3: bool,
    pub coxeter_order: usize,
    pub q_counts: QCounts,
    pub w_fixed_space_dim: usize,
    pub coxeter_fixed_space_dim: usize,
    pub centralizer_trivial: bool,
    pub aut_image_order: usize,
    pub aut_injective: bool,
    pub orthogonal_group_order: u64,
    pub dual_index: String,
    pub pairing_nondegenerate: bool,
    pub fixing_proportion: String,
    pub c_differs_from_w: bool,
    pub transitive_27: bool,
    pub transitive_36: bool,
    pub section_property: bool,
}

pub fn verify() -> E6Report {
    let rs = build_root_system();
    let weyl = weyl_group();
    let cox = coxeter_checks();
    let g = cartan_matrix();
    let aut = aut_image_checks(&weyl);
    let orb = orbit_and_section_checks(&weyl);
    let qs = quadratic_space();
    E6Report {
        roots: rs.roots.len(),
        weyl_order: weyl.len(),
        det_one_minus_coxeter: cox.det_one_minus_w,
        coxeter_char_poly_is_phi12_phi3: cox.equals_phi12_phi3,
        coxeter_order: cox.order,
        q_counts: q_counts(),
        w_fixed_space_dim: w_mod2_fixed_space(&weyl).len(),
        coxeter_fixed_space_dim: w_mod2_fixed_space(&[coxeter_element(&g, &[0, 1, 2, 3, 4, 5])]).len(),
        centralizer_trivial: pairing_centralizer_of_w().trivial,
        aut_image_order: aut.image_order,
        aut_injective: aut.injective,
        orthogonal_group_order: aut.target_order,
        dual_index: dual_index().to_string(),
        pairing_nondegenerate: f2_invertible(&qs.pairing_matrix()),
        fixing_proportion: format!("{}/{}", orb.fixing_proportion.0, orb.fixing_proportion.1),
        c_differs_from_w: orb.c_differs_from_w,
        transitive_27: orb.transitive_27,
        transitive_36: orb.transitive_36,
        section_property: orb.section_property,
    }
}

/// Roots grouped by their class mod 2; each class holds a root and its negative.
pub fn roots_by_class() -> HashMap<ModTwoVector, Vec<LatticeVector>> {
    let mut out: HashMap<ModTwoVector, Vec<LatticeVector>> = HashMap::new();
    for r in build_root_system().roots {
        let c = (0..RANK).fold(0u8, |acc, i| acc | (((r[i] & 1) as u8) << i));
        out.entry(c).or_default().push(r);
    }
    out
}
