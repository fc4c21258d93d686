use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

pub type Q = BigRational;

/// `num / den` as an exact rational.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Q, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Q::from_integer).map_err(|_| bad()),
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
    }
}

pub fn rational_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn fmt_coeff(c: &Q, first: bool, bare: bool) -> String {
    let neg = c.is_negative();
    let a = c.abs();
    let mut out = String::new();
    if neg {
        out.push_str(if first { "-" } else { " - " });
    } else if !first {
        out.push_str(" + ");
    }
    if !(bare && a.is_one()) {
        out.push_str(&rational_string(&a));
    }
    out
}
