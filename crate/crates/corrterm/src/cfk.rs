//! Staircase knot Floer complexes of L-space knots, tensor products for
//! connected sums, and `d`-invariants of large integer surgeries computed
//! from quotient complexes over the two-element field.
//!
//! A complex is presented by finitely many generators over `F_2[U, U^-1]`.
//! Each generator is recorded at its `U^0` representative with an algebraic
//! filtration `i`, Alexander filtration `j`, and Maslov grading; the
//! translate `U^k x` sits at `(i - k, j - k)` with grading lowered by `2k`.

use crate::alexander::{torus_alexander, SymmetricLaurentPoly};
use crate::gf2::{kernel_basis, BitVec, Span};
use crate::lens::LensError;
use crate::rational::{rat, Rat};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CfkError {
    #[error("coefficients do not alternate in sign: not a staircase polynomial")]
    NotStaircase,
    #[error("differential fails validation: {0}")]
    BadDifferential(String),
    #[error("tilde-d failed to stabilize across enlarged truncation windows (s = {s})")]
    NotStabilized { s: i64 },
    #[error("surgery coefficient {n} must be odd and positive")]
    BadSurgeryCoefficient { n: i64 },
    #[error("Spin^c label {s} out of range for surgery coefficient {n}")]
    LabelOutOfRange { n: i64, s: i64 },
    #[error("surgery coefficient {n} below the large-surgery bound 2g-1 = {bound}")]
    SmallSurgery { n: i64, bound: i64 },
    #[error("({0}, {1}) is not an admissible coprime splitting of the surgery coefficient")]
    BadSplit(i64, i64),
    #[error(transparent)]
    Lens(#[from] LensError),
}

/// A generator at its `U^0` representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredGenerator {
    pub name: String,
    pub alg_i: i64,
    pub alex_j: i64,
    pub grading: i64,
}

/// A finitely generated doubly-filtered graded complex over `F_2[U, U^-1]`.
/// `diff[g]` lists terms `(h, k)` meaning `U^k x_h` appears in the boundary
/// of `x_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredComplex {
    generators: Vec<FilteredGenerator>,
    diff: Vec<Vec<(usize, i64)>>,
}

impl FilteredComplex {
    /// Build and validate: the boundary must lower the Maslov grading by
    /// exactly 1, must not increase either filtration, and must square to
    /// zero.
    pub fn new(
        generators: Vec<FilteredGenerator>,
        diff: Vec<Vec<(usize, i64)>>,
    ) -> Result<Self, CfkError> {
        if diff.len() != generators.len() {
            return Err(CfkError::BadDifferential(
                "differential length mismatch".into(),
            ));
        }
        for (g, terms) in diff.iter().enumerate() {
            for &(h, k) in terms {
                if h >= generators.len() {
                    return Err(CfkError::BadDifferential(format!(
                        "target {h} out of range"
                    )));
                }
                let src = &generators[g];
                let dst = &generators[h];
                if dst.grading - 2 * k != src.grading - 1 {
                    return Err(CfkError::BadDifferential(format!(
                        "term {} -> U^{k} {} does not lower grading by 1",
                        src.name, dst.name
                    )));
                }
                if dst.alg_i - k > src.alg_i || dst.alex_j - k > src.alex_j {
                    return Err(CfkError::BadDifferential(format!(
                        "term {} -> U^{k} {} raises a filtration",
                        src.name, dst.name
                    )));
                }
            }
        }
        // Boundary squared: count parallel paths (target, total U power).
        for g in 0..generators.len() {
            let mut acc: HashMap<(usize, i64), usize> = HashMap::new();
            for &(h, k1) in &diff[g] {
                for &(t, k2) in &diff[h] {
                    *acc.entry((t, k1 + k2)).or_default() += 1;
                }
            }
            if acc.values().any(|c| c % 2 != 0) {
                return Err(CfkError::BadDifferential(format!(
                    "boundary does not square to zero at {}",
                    generators[g].name
                )));
            }
        }
        Ok(FilteredComplex { generators, diff })
    }

    pub fn generators(&self) -> &[FilteredGenerator] {
        &self.generators
    }

    pub fn differential(&self) -> &[Vec<(usize, i64)>] {
        &self.diff
    }

    /// Top Alexander filtration level; the Seifert genus for knot complexes.
    pub fn genus(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| g.alex_j.abs())
            .max()
            .unwrap_or(0)
    }
}

/// The staircase complex of an L-space knot from its Alexander polynomial.
///
/// Writing the polynomial as `sum_k (-1)^k t^{n_k}` with
/// `n_0 > n_1 > ... > n_{2m}`, the generators `x_0 .. x_{2m}` all sit in
/// the `i = 0` column at heights `j = n_k`; odd-index generators carry the
/// differential `d x_{2i+1} = U^{n_{2i} - n_{2i+1}} x_{2i} + x_{2i+2}`.
/// Gradings are forced by the column having homology `F_2` in grading 0
/// and by `U`-equivariance.
pub fn staircase(poly: &SymmetricLaurentPoly) -> Result<FilteredComplex, CfkError> {
    let support = poly.support_desc();
    if support.len() % 2 != 1 {
        return Err(CfkError::NotStaircase);
    }
    for (k, &e) in support.iter().enumerate() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if poly.coeff(e).signum() != expected || poly.coeff(e).abs() != 1 {
            return Err(CfkError::NotStaircase);
        }
    }
    let mut generators = Vec::with_capacity(support.len());
    let mut grading = 0i64;
    for (k, &e) in support.iter().enumerate() {
        if k > 0 {
            if k % 2 == 1 {
                grading += 1 - 2 * (support[k - 1] - e);
            } else {
                grading -= 1;
            }
        }
        generators.push(FilteredGenerator {
            name: format!("x{k}"),
            alg_i: 0,
            alex_j: e,
            grading,
        });
    }
    let mut diff = vec![Vec::new(); generators.len()];
    for k in (1..generators.len()).step_by(2) {
        let horiz = support[k - 1] - support[k];
        diff[k].push((k - 1, horiz));
        diff[k].push((k + 1, 0));
    }
    FilteredComplex::new(generators, diff)
}

/// Model for the untwisted Whitehead double of the trefoil: its knot Floer
/// complex agrees with the trefoil staircase modulo acyclic summands, and
/// those do not affect any surgery `d`-invariant used here.
pub fn double_model() -> FilteredComplex {
    staircase(&torus_alexander(2, 3).expect("trefoil polynomial"))
        .expect("trefoil staircase")
}

/// Tensor product over `F_2[U, U^-1]`: generators are pairs, filtrations
/// and gradings add, and the boundary obeys the Leibniz rule.
pub fn tensor(c1: &FilteredComplex, c2: &FilteredComplex) -> FilteredComplex {
    let n2 = c2.generators.len();
    let mut generators = Vec::with_capacity(c1.generators.len() * n2);
    for g1 in &c1.generators {
        for g2 in &c2.generators {
            generators.push(FilteredGenerator {
                name: format!("{}|{}", g1.name, g2.name),
                alg_i: g1.alg_i + g2.alg_i,
                alex_j: g1.alex_j + g2.alex_j,
                grading: g1.grading + g2.grading,
            });
        }
    }
    let mut diff = vec![Vec::new(); generators.len()];
    for (i1, _) in c1.generators.iter().enumerate() {
        for (i2, _) in c2.generators.iter().enumerate() {
            let idx = i1 * n2 + i2;
            for &(h, k) in &c1.diff[i1] {
                diff[idx].push((h * n2 + i2, k));
            }
            for &(h, k) in &c2.diff[i2] {
                diff[idx].push((i1 * n2 + h, k));
            }
        }
    }
    FilteredComplex::new(generators, diff).expect("tensor of valid complexes is valid")
}

/// `tilde_d(C, s)`: the minimal grading of a homology class of the quotient
/// `C / C_{i<0, j<s}` lying in the image of `U^N` for every `N`.  This is
/// the surgery `d`-invariant before the grading shift.
///
/// Computed on a finite truncation of the `U`-action; the answer must agree
/// across two window sizes or the window is enlarged, and a hard error is
/// raised past a configured cap.
pub fn tilde_d(complex: &FilteredComplex, s: i64) -> Result<i64, CfkError> {
    let g = complex.genus();
    let base = 2 * g + s.abs() + 4;
    let mut window = base;
    let cap = base + 40;
    loop {
        let first = tilde_d_window(complex, s, window);
        let second = tilde_d_window(complex, s, window + 4);
        match (first, second) {
            (Some(a), Some(b)) if a == b => return Ok(a),
            _ => {
                window += 8;
                if window > cap {
                    return Err(CfkError::NotStabilized { s });
                }
            }
        }
    }
}

/// One truncated computation: `U`-powers `k` run over `[-window, K_g]`
/// where `K_g = max(alg_i, alex_j - s)` bounds the quotient.  Returns the
/// minimal grading whose homology meets the image of `U^(window/2)`.
fn tilde_d_window(complex: &FilteredComplex, s: i64, window: i64) -> Option<i64> {
    let power = (window / 2).max(1);
    let caps: Vec<i64> = complex
        .generators
        .iter()
        .map(|g| g.alg_i.max(g.alex_j - s))
        .collect();

    // Enumerate basis elements (generator, U-power) grouped by grading.
    let mut by_grading: HashMap<i64, Vec<(usize, i64)>> = HashMap::new();
    for (g, gen) in complex.generators.iter().enumerate() {
        let mut k = -window;
        while k <= caps[g] {
            by_grading
                .entry(gen.grading - 2 * k)
                .or_default()
                .push((g, k));
            k += 1;
        }
    }
    let mut index: HashMap<(usize, i64), usize> = HashMap::new();
    for elems in by_grading.values() {
        for (pos, &e) in elems.iter().enumerate() {
            index.insert(e, pos);
        }
    }

    let boundary = |g: usize, k: i64, dim: usize| -> BitVec {
        let mut v = BitVec::zeros(dim);
        for &(h, u) in &complex.diff[g] {
            let k2 = k + u;
            if k2 <= caps[h] && k2 >= -window {
                v.flip(index[&(h, k2)]);
            }
        }
        v
    };

    let mut gradings: Vec<i64> = by_grading.keys().copied().collect();
    gradings.sort_unstable();

    for &gr in &gradings {
        let elems = &by_grading[&gr];
        let dim_below = by_grading.get(&(gr - 1)).map_or(0, |v| v.len());

        // Boundaries landing in this grading.
        let mut image = Span::new();
        if let Some(above) = by_grading.get(&(gr + 1)) {
            for &(g, k) in above {
                image.insert(boundary(g, k, elems.len()));
            }
        }

        // Cycles 2*power higher, pushed down by U^power.
        let src_gr = gr + 2 * power;
        let Some(sources) = by_grading.get(&src_gr) else {
            continue;
        };
        let dim_under_src = by_grading.get(&(src_gr - 1)).map_or(0, |v| v.len());
        let cols: Vec<BitVec> = sources
            .iter()
            .map(|&(g, k)| boundary(g, k, dim_under_src))
            .collect();
        let cycles = kernel_basis(&cols, sources.len());

        for cycle in cycles {
            let mut pushed = BitVec::zeros(elems.len());
            for (j, &(g, k)) in sources.iter().enumerate() {
                if cycle.get(j) {
                    let k2 = k + power;
                    if k2 <= caps[g] {
                        pushed.flip(index[&(g, k2)]);
                    }
                }
            }
            if !image.contains(&pushed) {
                return Some(gr);
            }
        }
        let _ = dim_below;
    }
    None
}

/// Grading shift for `n`-surgery at the Spin^c label `s`:
/// `eta(n, s) = (-(2s - n)^2 + n) / (4n)`.
pub fn eta(n: i64, s: i64) -> Rat {
    let c = 2 * s - n;
    rat(-(c * c) + n, 4 * n)
}

fn check_surgery(complex: &FilteredComplex, n: i64, s: i64) -> Result<(), CfkError> {
    if n < 1 || n % 2 == 0 {
        return Err(CfkError::BadSurgeryCoefficient { n });
    }
    if s.abs() > (n - 1) / 2 {
        return Err(CfkError::LabelOutOfRange { n, s });
    }
    let bound = 2 * complex.genus() - 1;
    if n < bound {
        return Err(CfkError::SmallSurgery { n, bound });
    }
    Ok(())
}

/// `d` of `n`-surgery at the label `s`: `tilde_d(C, s) - eta(n, s)`.
/// Requires odd `n` at least `2g - 1` and `|s| <= (n-1)/2`.
pub fn d_surgery(complex: &FilteredComplex, n: i64, s: i64) -> Result<Rat, CfkError> {
    check_surgery(complex, n, s)?;
    Ok(rat(tilde_d(complex, s)?, 1) - eta(n, s))
}

/// Balanced representative of `x` mod `n` in `[-(n-1)/2, (n-1)/2]`.
fn balanced(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if r > (n - 1) / 2 {
        r - n
    } else {
        r
    }
}

/// Table of `dbar = d(s) - d(0)` over `(a, b)` in `Z_{m1} x Z_{m2}` with
/// `s(a, b) = a m2 + b m1 (mod n)`.  Rows run over `a` descending from
/// `(m1-1)/2`, columns over `b` ascending from `-(m2-1)/2`; the Spin
/// structure of odd surgery sits at `s = 0`.
pub fn dbar_surgery_table(
    complex: &FilteredComplex,
    n: i64,
    m1: i64,
    m2: i64,
) -> Result<Vec<Vec<Rat>>, CfkError> {
    if m1 < 1 || m2 < 1 || m1 * m2 != n || num::integer::gcd(m1, m2) != 1 {
        return Err(CfkError::BadSplit(m1, m2));
    }
    check_surgery(complex, n, 0)?;
    let d0 = d_surgery(complex, n, 0)?;
    let mut rows = Vec::new();
    for a in (-(m1 - 1) / 2..=(m1 - 1) / 2).rev() {
        let mut row = Vec::new();
        for b in -(m2 - 1) / 2..=(m2 - 1) / 2 {
            let s = balanced(a * m2 + b * m1, n);
            row.push(d_surgery(complex, n, s)? - d0.clone());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Differences `tilde_d(surgery on T(p, p+2)) - tilde_d(surgery on
/// T(p, p+2) # double)` at the labels `s = 1` and `s = 0`, for `pq`-surgery
/// with `q = p + 2`.  The expected pattern depends only on the parity of
/// `(p-1)/2`: odd gives `(2, 0)`, even gives `(0, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityDifference {
    pub p: i64,
    pub diff_s1: i64,
    pub diff_s0: i64,
}

impl ParityDifference {
    pub fn expected(p: i64) -> (i64, i64) {
        if ((p - 1) / 2) % 2 == 1 {
            (2, 0)
        } else {
            (0, 2)
        }
    }

    pub fn matches_expected(&self) -> bool {
        (self.diff_s1, self.diff_s0) == Self::expected(self.p)
    }
}

pub fn pq_torus_difference(p: i64) -> Result<ParityDifference, CfkError> {
    if p < 3 || p % 2 == 0 {
        return Err(CfkError::BadSurgeryCoefficient { n: p });
    }
    let q = p + 2;
    let torus = staircase(&torus_alexander(p, q).map_err(|_| CfkError::NotStaircase)?)?;
    let double = tensor(&torus, &double_model());
    let diff_s1 = tilde_d(&torus, 1)? - tilde_d(&double, 1)?;
    let diff_s0 = tilde_d(&torus, 0)? - tilde_d(&double, 0)?;
    Ok(ParityDifference { p, diff_s1, diff_s0 })
}

/// Unknot complex: one generator at the origin in grading 0.
pub fn unknot_complex() -> FilteredComplex {
    staircase(&SymmetricLaurentPoly::unknot()).expect("unknot staircase")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens;

    const TILDE_T35: [i64; 15] = [-14, -12, -10, -8, -8, -6, -4, -4, -2, -2, -2, 0, 0, 0, 0];
    const TILDE_T35_DOUBLE: [i64; 15] =
        [-14, -12, -10, -10, -8, -6, -6, -4, -4, -2, -2, -2, 0, 0, 0];
    const SCALED_D_T35: [i64; 15] =
        [-7, -3, 5, 17, -27, -7, 17, -15, 17, -7, -27, 17, 5, -3, -7];
    const SCALED_D_T35_DOUBLE: [i64; 15] =
        [-7, -3, 5, -43, -27, -7, -43, -15, -43, -7, -27, -43, 5, -3, -7];

    fn t35() -> FilteredComplex {
        staircase(&torus_alexander(3, 5).unwrap()).unwrap()
    }

    fn t35_double() -> FilteredComplex {
        tensor(&t35(), &double_model())
    }

    #[test]
    fn trefoil_staircase_shape() {
        let c = staircase(&torus_alexander(2, 3).unwrap()).unwrap();
        let gens = c.generators();
        assert_eq!(gens.len(), 3);
        let data: Vec<(i64, i64, i64)> = gens.iter().map(|g| (g.alg_i, g.alex_j, g.grading)).collect();
        assert_eq!(data, vec![(0, 1, 0), (0, 0, -1), (0, -1, -2)]);
        // Up to U-translation the third generator sits at (1, 0) in grading 0.
        assert_eq!(c.differential()[1], vec![(0, 1), (2, 0)]);
        assert!(c.differential()[0].is_empty());
        assert!(c.differential()[2].is_empty());
    }

    #[test]
    fn t35_staircase_shape() {
        let c = t35();
        assert_eq!(c.generators().len(), 7);
        let heights: Vec<i64> = c.generators().iter().map(|g| g.alex_j).collect();
        assert_eq!(heights, vec![4, 3, 1, 0, -1, -3, -4]);
        let gradings: Vec<i64> = c.generators().iter().map(|g| g.grading).collect();
        assert_eq!(gradings, vec![0, -1, -2, -3, -4, -7, -8]);
        assert_eq!(c.genus(), 4);
    }

    #[test]
    fn unknot_staircase_is_a_point() {
        let c = unknot_complex();
        assert_eq!(c.generators().len(), 1);
        assert_eq!(c.generators()[0].alg_i, 0);
        assert_eq!(c.generators()[0].alex_j, 0);
        assert_eq!(c.generators()[0].grading, 0);
    }

    #[test]
    fn non_staircase_polynomial_is_rejected() {
        // 3 - (t + 1/t): symmetric, value 1 at t=1, but |a_0| != 1.
        let poly = SymmetricLaurentPoly::new(vec![3, -1]).unwrap();
        assert_eq!(staircase(&poly), Err(CfkError::NotStaircase));
    }

    #[test]
    fn tensor_multiplies_generators() {
        let c = t35_double();
        assert_eq!(c.generators().len(), 21);
        let top = c
            .generators()
            .iter()
            .map(|g| g.alex_j)
            .max()
            .unwrap();
        assert_eq!(top, 5);
        // Top generator of the tensor has grading 0 + 0.
        let top_gen = c.generators().iter().find(|g| g.alex_j == 5).unwrap();
        assert_eq!(top_gen.grading, 0);
    }

    #[test]
    fn tensor_with_unknot_is_identity_on_the_data() {
        let c = t35();
        let t = tensor(&c, &unknot_complex());
        assert_eq!(t.generators().len(), c.generators().len());
        for (a, b) in c.generators().iter().zip(t.generators()) {
            assert_eq!((a.alg_i, a.alex_j, a.grading), (b.alg_i, b.alex_j, b.grading));
        }
    }

    #[test]
    fn tilde_d_matches_published_list_for_t35() {
        let c = t35();
        let got: Vec<i64> = (-7..=7).map(|s| tilde_d(&c, s).unwrap()).collect();
        assert_eq!(got, TILDE_T35);
    }

    #[test]
    fn tilde_d_matches_published_list_for_t35_double() {
        let c = t35_double();
        let got: Vec<i64> = (-7..=7).map(|s| tilde_d(&c, s).unwrap()).collect();
        assert_eq!(got, TILDE_T35_DOUBLE);
    }

    #[test]
    fn tilde_d_torsion_oracle_small_knots() {
        // tilde_d(s) = -2 t_s for s >= 0 and tilde_d(-s) = tilde_d(s) - 2s.
        for (p, q) in [(2i64, 3i64), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)] {
            let poly = torus_alexander(p, q).unwrap();
            let t = crate::alexander::torsion_coeffs(&poly);
            let c = staircase(&poly).unwrap();
            let g = poly.genus();
            for s in 0..=g {
                let plus = tilde_d(&c, s).unwrap();
                assert_eq!(plus, -2 * t[s as usize], "({p},{q}) s={s}");
                assert_eq!(tilde_d(&c, -s).unwrap(), plus - 2 * s, "({p},{q}) -s={s}");
            }
        }
    }

    #[test]
    fn tilde_d_values_are_even() {
        let c = t35_double();
        for s in -7..=7 {
            assert_eq!(tilde_d(&c, s).unwrap() % 2, 0);
        }
    }

    #[test]
    fn unknot_tilde_d() {
        let c = unknot_complex();
        for s in 0..4 {
            assert_eq!(tilde_d(&c, s).unwrap(), 0);
            assert_eq!(tilde_d(&c, -s).unwrap(), -2 * s);
        }
    }

    #[test]
    fn surgery_d_matches_published_scaled_list() {
        let c = t35();
        for (idx, s) in (-7..=7).enumerate() {
            let d = d_surgery(&c, 15, s).unwrap();
            assert_eq!(d, rat(SCALED_D_T35[idx], 30), "s={s}");
        }
        let cd = t35_double();
        for (idx, s) in (-7..=7).enumerate() {
            let d = d_surgery(&cd, 15, s).unwrap();
            assert_eq!(d, rat(SCALED_D_T35_DOUBLE[idx], 30), "s={s}");
        }
    }

    #[test]
    fn surgery_rejects_bad_labels() {
        let c = t35();
        assert!(matches!(
            d_surgery(&c, 15, 8),
            Err(CfkError::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            d_surgery(&c, 14, 0),
            Err(CfkError::BadSurgeryCoefficient { .. })
        ));
        assert!(matches!(
            d_surgery(&c, 5, 0),
            Err(CfkError::SmallSurgery { .. })
        ));
    }

    #[test]
    fn unknot_surgery_matches_lens_space() {
        for n in [5i64, 7, 15] {
            let c = unknot_complex();
            let lens = lens::LensSpace::new(n, 1).unwrap();
            for s in -(n - 1) / 2..=(n - 1) / 2 {
                let via_surgery = d_surgery(&c, n, s).unwrap();
                let i = s.rem_euclid(n);
                let via_lens = lens::d_lens(lens, i).unwrap();
                assert_eq!(via_surgery, via_lens, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn dbar_table_additivity_for_pure_torus_knot() {
        // Surgery on the torus knot alone is a connected sum of lens
        // spaces, so its table is additive: entry = row-axis + column-axis.
        let table = dbar_surgery_table(&t35(), 15, 3, 5).unwrap();
        let centre_row = 1usize; // a = 0
        let centre_col = 2usize; // b = 0
        for (r, row) in table.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let expect = table[r][centre_col].clone() + table[centre_row][c].clone();
                assert_eq!(*v, expect, "cell ({r},{c})");
            }
        }
    }

    #[test]
    fn parity_differences_for_small_p() {
        let d3 = pq_torus_difference(3).unwrap();
        assert_eq!((d3.diff_s1, d3.diff_s0), (2, 0));
        assert!(d3.matches_expected());
        let d5 = pq_torus_difference(5).unwrap();
        assert_eq!((d5.diff_s1, d5.diff_s0), (0, 2));
        assert!(d5.matches_expected());
    }

    #[test]
    fn differential_validation_catches_errors() {
        let gens = vec![
            FilteredGenerator {
                name: "a".into(),
                alg_i: 0,
                alex_j: 0,
                grading: 0,
            },
            FilteredGenerator {
                name: "b".into(),
                alg_i: 0,
                alex_j: 0,
                grading: 0,
            },
        ];
        // Grading not lowered by 1.
        let bad = FilteredComplex::new(gens.clone(), vec![vec![(1, 0)], vec![]]);
        assert!(matches!(bad, Err(CfkError::BadDifferential(_))));
    }
}
