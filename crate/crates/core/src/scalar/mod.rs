//! Scalar fields used throughout the toolkit.
//!
//! Exact paths run over [`Rational`] and its two quadratic extensions,
//! [`Eisenstein`] (`a + b*e` with `e^2 + e + 1 = 0`) and [`Gaussian`]
//! (`a + b*i` with `i^2 = -1`). Numeric paths, where irrational constants
//! such as `sqrt(3)` appear, run over `f64` and [`ComplexDouble`].

mod eisenstein;
mod gaussian;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Zero};

pub use eisenstein::Eisenstein;
pub use gaussian::Gaussian;
pub use rational::{
    format_rational, height, parse_rational, rat, rat_normalize, rat_sqrt, Rational,
};

/// Double-precision complex scalar for the numeric paths.
pub type ComplexDouble = Complex64;

/// A field element usable by the polynomial engine.
///
/// `Zero::is_zero` is an exact test; numeric callers compare against an
/// explicit tolerance using [`Scalar::magnitude`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// A square root inside the same field, when one exists.
    fn sqrt_in_field(&self) -> Option<Self>;

    /// Absolute value (or modulus) as a double, for tolerance scales.
    fn magnitude(&self) -> f64;

    /// Whether arithmetic is exact (zero tests are certificates).
    fn is_exact() -> bool;

    /// Embedding into the Eisenstein rationals, if this value lives there.
    fn to_eisenstein(&self) -> Option<Eisenstein> {
        None
    }

    /// Embedding into the Gaussian rationals, if this value lives there.
    fn to_gaussian(&self) -> Option<Gaussian> {
        None
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|d| self.clone() * d)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.inv())
    }

    fn sqrt_in_field(&self) -> Option<Self> {
        Some(self.sqrt())
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn is_exact() -> bool {
        false
    }
}

/// Relative comparison of two complex doubles with an explicit tolerance.
pub fn complex_approx_eq(a: ComplexDouble, b: ComplexDouble, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}
