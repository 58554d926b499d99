//! Torus-knot Alexander polynomials, torsion coefficients, resultants, and
//! the coefficient checks for the `T(p, p+2)` family.

use num::integer::gcd;
use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexError {
    #[error("(p, q) = ({0}, {1}) must satisfy 2 <= p < q and gcd(p, q) = 1")]
    BadTorusPair(i64, i64),
    #[error("inexact polynomial division (internal error)")]
    InexactDivision,
    #[error("coefficient sequence violates symmetry/normalization: {0}")]
    BadCoefficients(String),
    #[error("resultant of the zero polynomial is undefined")]
    ZeroPolynomial,
}

/// A symmetric Laurent polynomial `a_0 + sum_{i>=1} a_i (t^i + t^-i)`
/// normalized so the value at `t = 1` is `+1`.  Stored as `a_0 .. a_g`
/// with `a_g != 0` (the unknot is the constant 1, `g = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricLaurentPoly {
    coeffs: Vec<i64>,
}

impl SymmetricLaurentPoly {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, AlexError> {
        if coeffs.is_empty() {
            return Err(AlexError::BadCoefficients("empty".into()));
        }
        if coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            return Err(AlexError::BadCoefficients("trailing zero".into()));
        }
        let at_one: i64 = coeffs[0] + 2 * coeffs[1..].iter().sum::<i64>();
        if at_one != 1 {
            return Err(AlexError::BadCoefficients(format!(
                "value at t=1 is {at_one}, expected 1"
            )));
        }
        Ok(SymmetricLaurentPoly { coeffs })
    }

    pub fn unknot() -> Self {
        SymmetricLaurentPoly { coeffs: vec![1] }
    }

    /// `a_0 .. a_g`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Genus: the top exponent `g`.
    pub fn genus(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `t^e` for any integer exponent.
    pub fn coeff(&self, e: i64) -> i64 {
        let k = e.unsigned_abs() as usize;
        if k < self.coeffs.len() {
            self.coeffs[k]
        } else {
            0
        }
    }

    /// Exponents with nonzero coefficient, descending.
    pub fn support_desc(&self) -> Vec<i64> {
        let g = self.genus();
        (-g..=g).rev().filter(|&e| self.coeff(e) != 0).collect()
    }

    /// Laurent product, for connected sums of knots.
    pub fn mul(&self, other: &Self) -> Self {
        let g = self.genus() + other.genus();
        let mut full = vec![0i64; (2 * g + 1) as usize];
        for e1 in -self.genus()..=self.genus() {
            let c1 = self.coeff(e1);
            if c1 == 0 {
                continue;
            }
            for e2 in -other.genus()..=other.genus() {
                full[(e1 + e2 + g) as usize] += c1 * other.coeff(e2);
            }
        }
        let coeffs: Vec<i64> = (0..=g).map(|k| full[(g + k) as usize]).collect();
        SymmetricLaurentPoly::new(coeffs).expect("product of normalized symmetric polys")
    }
}

/// The Alexander polynomial of the `(p, q)` torus knot, computed by exact
/// division of `(1 - t^{pq})(1 - t)` by `(1 - t^p)(1 - t^q)`, recentred by
/// `t^{-g}` with `g = (p-1)(q-1)/2`, and normalized to value `+1` at `t=1`.
pub fn torus_alexander(p: i64, q: i64) -> Result<SymmetricLaurentPoly, AlexError> {
    if p < 2 || q <= p || gcd(p, q) != 1 {
        return Err(AlexError::BadTorusPair(p, q));
    }
    let num = poly_mul(&one_minus_power(p * q), &one_minus_power(1));
    let den = poly_mul(&one_minus_power(p), &one_minus_power(q));
    let quot = poly_div_exact(&num, &den)?;
    let g = ((p - 1) * (q - 1) / 2) as usize;
    debug_assert_eq!(quot.len(), 2 * g + 1);
    for k in 0..=g {
        if quot[k] != quot[2 * g - k] {
            return Err(AlexError::BadCoefficients("asymmetric quotient".into()));
        }
    }
    let mut coeffs: Vec<i64> = (0..=g).map(|k| quot[g + k]).collect();
    let at_one: i64 = coeffs[0] + 2 * coeffs[1..].iter().sum::<i64>();
    if at_one == -1 {
        for c in &mut coeffs {
            *c = -*c;
        }
    }
    SymmetricLaurentPoly::new(coeffs)
}

/// `1 - t^n` as a dense coefficient vector.
fn one_minus_power(n: i64) -> Vec<i64> {
    let mut v = vec![0i64; n as usize + 1];
    v[0] = 1;
    v[n as usize] = -1;
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division over the integers; a nonzero remainder is a hard error.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Result<Vec<i64>, AlexError> {
    let dd = den.len() - 1;
    let lead = den[dd];
    debug_assert!(lead == 1 || lead == -1);
    let mut rem: Vec<i64> = num.to_vec();
    let qd = num.len() - den.len();
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd] / lead;
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(AlexError::InexactDivision);
    }
    Ok(quot)
}

/// Torsion coefficients `t_s = sum_{j>=1} j a_{s+j}` for `s = 0 .. g`.
pub fn torsion_coeffs(poly: &SymmetricLaurentPoly) -> Vec<i64> {
    let g = poly.genus();
    (0..=g)
        .map(|s| ((s + 1)..=g).map(|k| (k - s) * poly.coeff(k)).sum())
        .collect()
}

/// Number of solutions of `x p + y q = i` with `x, y >= 0`.
pub fn rep_count(p: i64, q: i64, i: i64) -> Result<u64, AlexError> {
    if p < 1 || q < 1 || gcd(p, q) != 1 {
        return Err(AlexError::BadTorusPair(p, q));
    }
    if i < 0 {
        return Ok(0);
    }
    let mut count = 0;
    let mut rest = i;
    while rest >= 0 {
        if rest % q == 0 {
            count += 1;
        }
        rest -= p;
    }
    Ok(count)
}

/// Outcome of the coefficient checks for `T(p, p+2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientReport {
    pub p: i64,
    /// `|a_i| = 1` with strictly alternating signs for `0 <= i <= (p-1)/2`.
    pub head_alternates: bool,
    /// Sign of `a_0` in the value-1-at-1 normalization.
    pub a0_sign: i64,
    /// `(1-t) * sum b_i t^i` reproduces the unnormalized coefficients below
    /// degree `2g`.
    pub rep_counts_regenerate: bool,
    /// `b_i` alternates between 0 and 1 for `g - (p-1)/2 <= i <= g`.
    pub tail_bi_alternates: bool,
}

impl CoefficientReport {
    pub fn pass(&self) -> bool {
        self.head_alternates && self.rep_counts_regenerate && self.tail_bi_alternates
    }
}

/// Verify the unit-alternation of the central Alexander coefficients of
/// `T(p, p+2)` and regenerate the polynomial from representation counts.
/// Failures are reported, not raised.
pub fn check_coefficient_alternation(p: i64) -> Result<CoefficientReport, AlexError> {
    if p < 3 || p % 2 == 0 {
        return Err(AlexError::BadTorusPair(p, p + 2));
    }
    let q = p + 2;
    let poly = torus_alexander(p, q)?;
    let g = poly.genus();
    let half = (p - 1) / 2;

    let mut head_alternates = true;
    for i in 0..=half {
        if poly.coeff(i).abs() != 1 {
            head_alternates = false;
        }
        if i > 0 && poly.coeff(i) != -poly.coeff(i - 1) {
            head_alternates = false;
        }
    }

    // The unnormalized polynomial has coefficient c_k = b_k - b_{k-1} for
    // k < 2g, where b_i counts representations i = xp + yq.
    let raw = poly_div_exact(
        &poly_mul(&one_minus_power(p * q), &one_minus_power(1)),
        &poly_mul(&one_minus_power(p), &one_minus_power(q)),
    )?;
    let mut rep_counts_regenerate = true;
    let mut prev = 0i64;
    for k in 0..(2 * g) {
        let b_k = rep_count(p, q, k)? as i64;
        if raw[k as usize] != b_k - prev {
            rep_counts_regenerate = false;
        }
        prev = b_k;
    }

    let mut tail_bi_alternates = true;
    let mut expect = rep_count(p, q, g)?;
    if expect > 1 {
        tail_bi_alternates = false;
    }
    for i in ((g - half)..=g).rev() {
        let b = rep_count(p, q, i)?;
        if b != expect {
            tail_bi_alternates = false;
        }
        expect = 1 - expect.min(1);
    }

    Ok(CoefficientReport {
        p,
        head_alternates,
        a0_sign: poly.coeff(0).signum(),
        rep_counts_regenerate,
        tail_bi_alternates,
    })
}

/// Dense integer polynomial `c_0 + c_1 t + ... + c_d t^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Result<Self, AlexError> {
        let mut c: Vec<BigInt> = coeffs.iter().cloned().map(Into::into).collect();
        while c.len() > 1 && c.last().unwrap().is_zero() {
            c.pop();
        }
        if c.is_empty() || (c.len() == 1 && c[0].is_zero()) {
            return Err(AlexError::ZeroPolynomial);
        }
        Ok(IntPoly { coeffs: c })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// Resultant of two integer polynomials, exact, via the Euclidean scheme
/// over rationals with denominator clearing at the end.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let fr: Vec<Rat> = f.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let gr: Vec<Rat> = g.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let r = resultant_rat(&fr, &gr);
    debug_assert!(r.denom().is_one(), "resultant of integer polys is integral");
    r.numer().clone()
}

fn deg(p: &[Rat]) -> usize {
    p.len() - 1
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn resultant_rat(f: &[Rat], g: &[Rat]) -> Rat {
    let (m, n) = (deg(f), deg(g));
    if n == 0 {
        return num::pow::pow(g[0].clone(), m);
    }
    if m < n {
        let sign = if (m * n) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        return sign * resultant_rat(g, f);
    }
    let mut rem: Vec<Rat> = f.to_vec();
    let lead = g[n].clone();
    for k in (0..=(m - n)).rev() {
        let c = rem[k + n].clone() / lead.clone();
        if !c.is_zero() {
            for (j, gc) in g.iter().enumerate() {
                let v = rem[k + j].clone() - c.clone() * gc.clone();
                rem[k + j] = v;
            }
        }
    }
    rem.truncate(n.max(1));
    let rem = trim(rem);
    if rem.len() == 1 && rem[0].is_zero() {
        return Rat::zero();
    }
    let d = deg(&rem);
    let sign = if (m * n) % 2 == 1 {
        -Rat::one()
    } else {
        Rat::one()
    };
    sign * num::pow::pow(lead, m - d) * resultant_rat(g, &rem)
}
