use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use super::rational::{parse_rational, rat_sqrt};
use super::{Gaussian, Rational, Scalar};
use crate::error::{Error, Result};

/// `a + b*e` where `e` is a primitive cube root of unity (`e^2 = -1 - e`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: Rational,
    pub b: Rational,
}

impl Eisenstein {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    /// The cube root of unity `e`.
    pub fn epsilon() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `e^2 = -1 - e`.
    pub fn epsilon_sq() -> Self {
        Self::new(-Rational::one(), -Rational::one())
    }

    /// `sqrt(-3) = 1 + 2e`.
    pub fn sqrt_minus_three() -> Self {
        Self::new(Rational::one(), Rational::from_integer(2.into()))
    }

    /// Complex conjugation, `e -> e^2`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -self.b.clone())
    }

    /// `z * conj(z) = a^2 - ab + b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Writes the element as `p + q*sqrt(-3)`.
    fn to_sqrt3_basis(&self) -> (Rational, Rational) {
        // a + b e = a + b(-1 + sqrt(-3))/2
        let half = Rational::new(1.into(), 2.into());
        (&self.a - &self.b * &half, &self.b * &half)
    }

    fn from_sqrt3_basis(p: Rational, q: Rational) -> Self {
        // p + q sqrt(-3) = (p + q) + 2q e
        let two = Rational::from_integer(2.into());
        Self::new(&p + &q, q * two)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*e", self.a, self.b)
    }
}

impl FromStr for Eisenstein {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "eisenstein",
            input: s.to_string(),
        };
        let body = s.trim().strip_suffix("*e").ok_or_else(err)?;
        let (a, b) = body.split_once('+').ok_or_else(err)?;
        Ok(Self::new(
            parse_rational(a).map_err(|_| err())?,
            parse_rational(b).map_err(|_| err())?,
        ))
    }
}

impl Add for Eisenstein {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Eisenstein {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Eisenstein {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b e)(c + d e) = ac + (ad + bc) e + bd e^2,  e^2 = -1 - e
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = &self.a * &rhs.b + &self.b * &rhs.a;
        Self::new(ac - &bd, cross - bd)
    }
}

impl Neg for Eisenstein {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Scalar for Eisenstein {
    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / n))
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (x + y s)^2 = p + q s with s^2 = -3:  x^2 - 3y^2 = p,  2xy = q.
        let (p, q) = self.to_sqrt3_basis();
        let root_norm = rat_sqrt(&self.norm()).ok()??;
        let two = Rational::from_integer(2.into());
        for cand in [(&p + &root_norm) / &two, (&p - &root_norm) / &two] {
            if cand.is_negative() {
                continue;
            }
            let Some(x) = rat_sqrt(&cand).ok().flatten() else {
                continue;
            };
            let y = if x.is_zero() {
                // p = -3 y^2
                let y2 = -&p / Rational::from_integer(3.into());
                match rat_sqrt(&y2) {
                    Ok(Some(y)) => y,
                    _ => continue,
                }
            } else {
                &q / (&x * &two)
            };
            let s = Self::from_sqrt3_basis(x, y);
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

    fn to_eisenstein(&self) -> Option<Eisenstein> {
        Some(self.clone())
    }

    fn to_gaussian(&self) -> Option<Gaussian> {
        self.is_rational()
            .then(|| Gaussian::from_rational(self.a.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn e() -> Eisenstein {
        Eisenstein::epsilon()
    }

    #[test]
    fn defining_relation() {
        assert_eq!(e() * e(), Eisenstein::new(rat(-1, 1), rat(-1, 1)));
        assert_eq!(e() * e() * e(), Eisenstein::one());
        assert_eq!(Eisenstein::one() + e() + e() * e(), Eisenstein::zero());
    }

    #[test]
    fn one_plus_e_times_minus_e() {
        let lhs = (Eisenstein::one() + e()) * (-e());
        assert_eq!(lhs, Eisenstein::one());
    }

    #[test]
    fn conjugation_fixes_rationals_only() {
        assert_eq!(e().conj(), Eisenstein::epsilon_sq());
        let r = Eisenstein::from_rational(rat(5, 3));
        assert_eq!(r.conj(), r);
        let z = Eisenstein::new(rat(1, 2), rat(1, 3));
        assert_ne!(z.conj(), z);
    }

    #[test]
    fn sqrt_of_minus_three() {
        let s = Eisenstein::sqrt_minus_three();
        assert_eq!(s.clone() * s, Eisenstein::from_int(-3));
        let m = Eisenstein::from_rational(rat(-27, 4)).sqrt_in_field().unwrap();
        assert_eq!(m.clone() * m, Eisenstein::from_rational(rat(-27, 4)));
        assert!(Eisenstein::from_int(2).sqrt_in_field().is_none());
        assert!(Eisenstein::from_int(-1).sqrt_in_field().is_none());
    }

    #[test]
    fn text_form() {
        let z = Eisenstein::new(rat(-1, 2), rat(-3, 1));
        assert_eq!(z.to_string(), "-1/2+-3*e");
        assert_eq!("-1/2+-3*e".parse::<Eisenstein>().unwrap(), z);
        assert!("1+2*i".parse::<Eisenstein>().is_err());
    }

    fn arb() -> impl Strategy<Value = Eisenstein> {
        (-60i64..60, 1i64..40, -60i64..60, 1i64..40)
            .prop_map(|(a, b, c, d)| Eisenstein::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z);
            prop_assert_eq!(x.clone() * y.clone(), y * x.clone());
            if let Some(xi) = Scalar::inv(&x) {
                prop_assert_eq!(x * xi, Eisenstein::one());
            }
        }

        #[test]
        fn round_trip(x in arb()) {
            prop_assert_eq!(x.to_string().parse::<Eisenstein>().unwrap(), x);
        }

        #[test]
        fn sqrt_of_square(x in arb()) {
            let sq = x.clone() * x.clone();
            let r = sq.sqrt_in_field().unwrap();
            prop_assert_eq!(r.clone() * r, sq);
        }
    }
}
