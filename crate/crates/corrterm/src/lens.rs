//! Correction terms of lens spaces via the Ozsváth-Szabó recursion, the
//! closed forms for the families `L(pq,1)` and `L(4r^2+1, 2r)`, Spin
//! structure identification, and the additivity defect `delta`.
//!
//! Orientation convention used throughout: the recursion computes
//! `D(m,n,i) = d(-L(m,n), s_i)`, and we set `d_lens = -D` for the invariant
//! of `L(m,n)` itself.  The sign is pinned by the `L(4r^2+1, 2r)` closed
//! form: the recursion gives `D(5,2,0) = -2/5` while `d(L(5,2), s_0) = 2/5`.
//!
//! The defect `delta` is computed in the recursion's native orientation
//! (equivalently, from the `d`-invariants of the reversed-orientation lens
//! space), which makes `delta(L(pq,1), 1, 1) = -2` and keeps every interior
//! defect of the `L(pq,1)` family strictly negative.  Only the vanishing or
//! not of a defect carries obstruction content, so the sign choice is a
//! labeling convention; it is recorded in every report fingerprint.

use crate::rational::{rat, rint, Rat};
use num::integer::gcd;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LensError {
    #[error("m must be positive, got {0}")]
    NonPositiveOrder(i64),
    #[error("(m, n) = ({0}, {1}) is not an admissible coprime pair")]
    NotCoprime(i64, i64),
    #[error("Spin^c index {index} out of range for order {order}")]
    IndexOutOfRange { index: i64, order: i64 },
    #[error("({x}, {y}) is outside the label window for r = {r}")]
    LabelOutOfWindow { r: i64, x: i64, y: i64 },
    #[error("no unique Spin structure candidate for L({m}, {n}); supply the index explicitly")]
    AmbiguousSpin { m: i64, n: i64 },
    #[error("Spin structure identification requires odd order, got m = {0}")]
    EvenOrder(i64),
    #[error("({0}, {1}) is not a coprime factorization of the group order")]
    BadSplit(i64, i64),
    #[error("label ({a}, {b}) outside the admissible window for ({p}, {q})")]
    BadDefectLabel { p: i64, q: i64, a: i64, b: i64 },
}

/// The lens space `L(m, n)`, `0 < n < m`, `gcd(m, n) = 1`, with Spin^c
/// structures labeled `0..m-1` by the recursion convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensSpace {
    m: i64,
    n: i64,
}

impl LensSpace {
    pub fn new(m: i64, n: i64) -> Result<Self, LensError> {
        if m <= 0 {
            return Err(LensError::NonPositiveOrder(m));
        }
        if n <= 0 || n >= m || gcd(m, n) != 1 {
            return Err(LensError::NotCoprime(m, n));
        }
        Ok(LensSpace { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Canonical representative of an arbitrary integer label in `[0, m)`.
    pub fn reduce_index(&self, i: i64) -> i64 {
        i.rem_euclid(self.m)
    }
}

/// `D(m, n, i) = d(-L(m,n), s_i)` by the recursion
/// `D(m,n,i) = (mn - (2i+1-m-n)^2) / (4mn) - D(n, m mod n, i mod n)`
/// with base case `D(1, 0, 0) = 0`.
///
/// Requires `gcd(m,n) = 1`, `0 <= n < m` (with `n = 0` only for `m = 1`)
/// and `0 <= i < m`.  Pure; recursion depth is the length of the continued
/// fraction expansion of `m/n`.
pub fn big_d(m: i64, n: i64, i: i64) -> Result<Rat, LensError> {
    if m <= 0 {
        return Err(LensError::NonPositiveOrder(m));
    }
    if m == 1 {
        if n != 0 {
            return Err(LensError::NotCoprime(m, n));
        }
    } else if n <= 0 || n >= m || gcd(m, n) != 1 {
        return Err(LensError::NotCoprime(m, n));
    }
    if i < 0 || i >= m {
        return Err(LensError::IndexOutOfRange { index: i, order: m });
    }
    Ok(big_d_unchecked(m, n, i))
}

fn big_d_unchecked(m: i64, n: i64, i: i64) -> Rat {
    if m == 1 {
        return Rat::zero();
    }
    let c = 2 * i + 1 - m - n;
    let head = rat(m * n - c * c, 4 * m * n);
    head - big_d_unchecked(n, m % n, i % n)
}

/// `d(L(m,n), s_i)` in the orientation fixed by this module: `-D(m,n,i)`.
pub fn d_lens(lens: LensSpace, i: i64) -> Result<Rat, LensError> {
    Ok(-big_d(lens.m, lens.n, i)?)
}

/// Closed form for `d(L(4r^2+1, 2r), s_{2rx+y})`:
/// `2 (r x^2 + (y - r(2r+1)) x - r (y^2 - (2r-1) y - r)) / (4r^2+1)`.
///
/// Valid for `0 <= y < 2r` and `0 <= 2rx+y < 4r^2+1`; agrees with
/// `d_lens(L(4r^2+1, 2r), 2rx+y)`.
pub fn d_chain_closed(r: i64, x: i64, y: i64) -> Result<Rat, LensError> {
    if r <= 0 {
        return Err(LensError::NonPositiveOrder(r));
    }
    let m = 4 * r * r + 1;
    if y < 0 || y >= 2 * r || 2 * r * x + y < 0 || 2 * r * x + y >= m {
        return Err(LensError::LabelOutOfWindow { r, x, y });
    }
    let num = r * x * x + (y - r * (2 * r + 1)) * x - r * (y * y - (2 * r - 1) * y - r);
    Ok(rat(2 * num, m))
}

/// Index of the Spin structure among `s_0 .. s_{m-1}` for odd `m`.
///
/// Family rules first: `L(m, 1)` has Spin structure `s_0`, and
/// `L(4r^2+1, 2r)` has `s_{2r^2+r}`.  Otherwise fall back to the
/// uniqueness heuristic: conjugation pairs up equal `d`-values away from
/// the Spin structure, so an index whose value is attained exactly once is
/// the Spin structure provided it is the only such index.
pub fn spin_index(lens: LensSpace) -> Result<i64, LensError> {
    let (m, n) = (lens.m, lens.n);
    if m % 2 == 0 {
        return Err(LensError::EvenOrder(m));
    }
    if n == 1 {
        return Ok(0);
    }
    if n % 2 == 0 {
        let r = n / 2;
        if 4 * r * r + 1 == m {
            return Ok(2 * r * r + r);
        }
    }
    let values: Vec<Rat> = (0..m).map(|i| big_d_unchecked(m, n, i)).collect();
    let mut unique: Vec<i64> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if values.iter().filter(|w| *w == v).count() == 1 {
            unique.push(i as i64);
        }
    }
    match unique.as_slice() {
        [i] => Ok(*i),
        _ => Err(LensError::AmbiguousSpin { m, n }),
    }
}

/// `dbar(L, x) = d(L, spin + x) - d(L, spin)` with the offset taken mod `m`.
pub fn dbar(lens: LensSpace, offset: i64) -> Result<Rat, LensError> {
    let spin = spin_index(lens)?;
    let i = lens.reduce_index(spin + offset);
    Ok(d_lens(lens, i)? - d_lens(lens, spin)?)
}

/// Like [`dbar`] but in the recursion orientation (`D` instead of `-D`).
pub fn dbar_recursion(lens: LensSpace, offset: i64) -> Result<Rat, LensError> {
    let spin = spin_index(lens)?;
    let i = lens.reduce_index(spin + offset);
    Ok(big_d(lens.m, lens.n, i)? - big_d(lens.m, lens.n, spin)?)
}

/// Additivity defect at `(a, b)` in `Z_{m1} + Z_{m2}` for `m = m1 m2`:
///
/// `delta(a,b) = D(s(a,b)) - D(s(a,0)) - D(s(0,b)) + D(spin)`
///
/// where `s(a,b) = spin + a m2 + b m1  (mod m)` and `D` is the recursion
/// orientation.  A nonzero value obstructs splitting; the sign convention
/// makes `delta(L(pq,1), 1, 1) = -2`.
pub fn delta_defect(lens: LensSpace, m1: i64, m2: i64, a: i64, b: i64) -> Result<Rat, LensError> {
    if m1 < 1 || m2 < 1 || m1 * m2 != lens.m || gcd(m1, m2) != 1 {
        return Err(LensError::BadSplit(m1, m2));
    }
    let spin = spin_index(lens)?;
    let at = |off: i64| -> Rat { big_d_unchecked(lens.m, lens.n, lens.reduce_index(spin + off)) };
    Ok(at(a * m2 + b * m1) - at(a * m2) - at(b * m1) + at(0))
}

/// Piecewise closed form for the interior defect of `L(pq, 1)`, valid for
/// `0 < a <= (p-1)/2`, `-(q-1)/2 <= b <= (q-1)/2`, `b != 0`:
///
/// * `b > 0`:                 `-2ab`
/// * `b < 0`, `aq + bp > 0`:  `-2b(a-p)`
/// * `b < 0`, `aq + bp < 0`:  `-2a(b+q)`
///
/// Each case is strictly negative and agrees with
/// `delta_defect(L(pq,1), p, q, a, b)`.
pub fn delta_closed_form(p: i64, q: i64, a: i64, b: i64) -> Result<Rat, LensError> {
    if p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || gcd(p, q) != 1 {
        return Err(LensError::NotCoprime(p, q));
    }
    if a <= 0 || a > (p - 1) / 2 || b == 0 || b.abs() > (q - 1) / 2 {
        return Err(LensError::BadDefectLabel { p, q, a, b });
    }
    let v = if b > 0 {
        -2 * a * b
    } else if a * q + b * p > 0 {
        -2 * b * (a - p)
    } else {
        -2 * a * (b + q)
    };
    Ok(rint(v))
}
