use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use super::rational::{parse_rational, rat_sqrt};
use super::{Eisenstein, Rational, Scalar};
use crate::error::{Error, Result};

/// `a + b*i` with `i^2 = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub a: Rational,
    pub b: Rational,
}

impl Gaussian {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a^2 + b^2`; zero exactly when the element is zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*i", self.a, self.b)
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "gaussian",
            input: s.to_string(),
        };
        let body = s.trim().strip_suffix("*i").ok_or_else(err)?;
        let (a, b) = body.split_once('+').ok_or_else(err)?;
        Ok(Self::new(
            parse_rational(a).map_err(|_| err())?,
            parse_rational(b).map_err(|_| err())?,
        ))
    }
}

impl Add for Gaussian {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Gaussian {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Gaussian {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            &self.a * &rhs.a - &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for Gaussian {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Scalar for Gaussian {
    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &n, -&self.b / n))
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (x + y i)^2 = a + b i:  x^2 - y^2 = a,  2xy = b.
        let root_norm = rat_sqrt(&self.norm()).ok()??;
        let two = Rational::from_integer(2.into());
        for cand in [(&self.a + &root_norm) / &two, (&self.a - &root_norm) / &two] {
            if cand.is_negative() {
                continue;
            }
            let Some(x) = rat_sqrt(&cand).ok().flatten() else {
                continue;
            };
            let y = if x.is_zero() {
                match rat_sqrt(&-self.a.clone()) {
                    Ok(Some(y)) => y,
                    _ => continue,
                }
            } else {
                &self.b / (&x * &two)
            };
            let s = Self::new(x, y);
            if s.clone() * s.clone() == *self {
                return Some(s);
            }
        }
        None
    }

    fn magnitude(&self) -> f64 {
        self.norm().magnitude().sqrt()
    }

    fn is_exact() -> bool {
        true
    }

    fn to_gaussian(&self) -> Option<Gaussian> {
        Some(self.clone())
    }

    fn to_eisenstein(&self) -> Option<Eisenstein> {
        self.is_rational()
            .then(|| Eisenstein::from_rational(self.a.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn i_squared() {
        assert_eq!(Gaussian::i() * Gaussian::i(), Gaussian::from_int(-1));
        assert_eq!(Gaussian::from_int(-1).sqrt_in_field().map(|s| s.clone() * s), Some(Gaussian::from_int(-1)));
        assert!(Gaussian::from_int(3).sqrt_in_field().is_none());
    }

    #[test]
    fn text_form() {
        let z = Gaussian::new(rat(3, 4), rat(-1, 1));
        assert_eq!(z.to_string(), "3/4+-1*i");
        assert_eq!("3/4+-1*i".parse::<Gaussian>().unwrap(), z);
    }

    fn arb() -> impl Strategy<Value = Gaussian> {
        (-60i64..60, 1i64..40, -60i64..60, 1i64..40)
            .prop_map(|(a, b, c, d)| Gaussian::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z);
            if let Some(xi) = Scalar::inv(&x) {
                prop_assert_eq!(x.clone() * xi, Gaussian::one());
            }
        }

        #[test]
        fn norm_zero_iff_zero(x in arb()) {
            prop_assert_eq!(x.norm().is_zero(), x.is_zero());
        }

        #[test]
        fn round_trip(x in arb()) {
            prop_assert_eq!(x.to_string().parse::<Gaussian>().unwrap(), x);
        }

        #[test]
        fn sqrt_of_square(x in arb()) {
            let sq = x.clone() * x.clone();
            let r = sq.sqrt_in_field().unwrap();
            prop_assert_eq!(r.clone() * r, sq);
        }
    }
}
