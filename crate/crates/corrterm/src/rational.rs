//! Exact rational arithmetic helpers shared by every module.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// All `d`-invariants, linking-form values, and table entries are exact
/// arbitrary-precision rationals.
pub type Rat = BigRational;

/// Shorthand constructor from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduce into `[0, 1)`, i.e. the canonical representative in Q/Z.
pub fn mod1(x: &Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// True if `x` is an integer (zero in Q/Z).
pub fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Render as `num/den` (or plain integer when the denominator is 1).
pub fn display(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `a`, `-a`, `a/b` or `-a/b`.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Multiply by `scale` and return the result if it is an integer.
pub fn scaled_int(x: &Rat, scale: i64) -> Option<BigInt> {
    let y = x * rint(scale);
    if y.denom().is_one() {
        Some(y.numer().clone())
    } else {
        None
    }
}

/// Exact integer square root test.
pub fn perfect_sqrt(n: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    let r = (n as f64).sqrt() as u64;
    for c in r.saturating_sub(2)..=r + 2 {
        if c * c == n {
            return Some(c);
        }
    }
    None
}

/// |x| as a rational.
pub fn abs(x: &Rat) -> Rat {
    x.abs()
}
