use num::bigint::BigInt;
use num::{BigRational, Signed, Zero};

use super::{Eisenstein, Gaussian, Scalar};
use crate::error::{Error, Result};

/// Arbitrary-precision exact rational; always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the canonical rational `num/den`.
pub fn rat_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

/// Shorthand for small literals in code and tests. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    rat_normalize(num, den).expect("nonzero denominator")
}

/// Nonnegative rational square root, `Ok(None)` when `q` is not a square.
pub fn rat_sqrt(q: &Rational) -> Result<Option<Rational>> {
    if q.is_negative() {
        return Err(Error::NegativeSqrt(format_rational(q)));
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Ok(Some(Rational::new(sn, sd)))
    } else {
        Ok(None)
    }
}

/// `max(|numerator|, denominator)` of the reduced fraction.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Prints `a/b`, or `a` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `a/b`, `a`, or a plain decimal such as `-1.25` (exactly).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let s = s.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        return rat_normalize(n, d);
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int_part.starts_with('-');
        let digits = int_part.trim_start_matches(['-', '+']);
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let whole: BigInt = format!("{digits}{frac_part}").parse().map_err(|_| err())?;
        let scale = num::pow(BigInt::from(10), frac_part.len());
        let q = Rational::new(whole, scale);
        return Ok(if negative { -q } else { q });
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        rat_sqrt(self).ok().flatten()
    }

    fn magnitude(&self) -> f64 {
        use num::ToPrimitive;
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn is_exact() -> bool {
        true
    }

    fn to_eisenstein(&self) -> Option<Eisenstein> {
        Some(Eisenstein::from_rational(self.clone()))
    }

    fn to_gaussian(&self) -> Option<Gaussian> {
        Some(Gaussian::from_rational(self.clone()))
    }
}

/// True when the reduced form invariant holds.
#[cfg(test)]
pub(crate) fn is_canonical(q: &Rational) -> bool {
    use num::{Integer, One};
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
