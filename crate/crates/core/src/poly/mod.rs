//! Dense homogeneous forms in the four variables `(w, x, y, z)`.
//!
//! A [`Form4`] of degree `d <= 3` stores one coefficient per exponent tuple
//! `(e_w, e_x, e_y, e_z)` with `e_w + e_x + e_y + e_z = d`, in ascending
//! lexicographic order of the tuples. Cubics (`d = 3`, twenty slots) carry the
//! surfaces; the lower degrees appear as partial derivatives and as the
//! intermediate products of a substitution.
//!
//! The affine surface is the `w = 1` view of the homogeneous form, see
//! [`Form4::eval_affine`].

pub mod forms;
mod json;
mod projective;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use json::{FormJson, MonomialJson};
pub use projective::{LinearSubstitution, ProjectiveLine, ProjectivePoint4};

/// Exponent tuple `(e_w, e_x, e_y, e_z)`.
pub type Exponent = [u8; 4];

/// Variable indices.
pub const W: usize = 0;
pub const X: usize = 1;
pub const Y: usize = 2;
pub const Z: usize = 3;

pub const VAR_NAMES: [&str; 4] = ["w", "x", "y", "z"];

pub const MAX_DEGREE: u8 = 3;

/// All exponent tuples of total degree `d`, ascending lexicographically.
pub fn monomials(d: u8) -> &'static [Exponent] {
    static TABLES: OnceLock<[Vec<Exponent>; 4]> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        std::array::from_fn(|deg| {
            let deg = deg as u8;
            let mut out = Vec::new();
            for a in 0..=deg {
                for b in 0..=deg - a {
                    for c in 0..=deg - a - b {
                        out.push([a, b, c, deg - a - b - c]);
                    }
                }
            }
            out
        })
    });
    &tables[d as usize]
}

fn index_of(e: &Exponent) -> Option<usize> {
    let d = e.iter().sum::<u8>();
    if d > MAX_DEGREE {
        return None;
    }
    monomials(d).binary_search(e).ok()
}

/// A homogeneous polynomial in `(w, x, y, z)` of degree at most 3.
#[derive(Clone, Debug, PartialEq)]
pub struct Form4<S> {
    degree: u8,
    coeffs: Vec<S>,
}

/// The homogeneous cubic that carries every surface in this crate.
pub type CubicForm4<S> = Form4<S>;

impl<S: Scalar> Form4<S> {
    pub fn zero(degree: u8) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooHigh(degree));
        }
        Ok(Self {
            degree,
            coeffs: vec![S::zero(); monomials(degree).len()],
        })
    }

    pub fn constant(c: S) -> Self {
        Self {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// Linear form `sum_i coeffs[i] * v_i`.
    pub fn linear(coeffs: [S; 4]) -> Self {
        let mut f = Self::zero(1).expect("degree 1");
        for (i, c) in coeffs.into_iter().enumerate() {
            let mut e = [0u8; 4];
            e[i] = 1;
            f.set(&e, c).expect("degree 1 exponent");
        }
        f
    }

    /// The single variable `v_i`.
    pub fn var(i: usize) -> Self {
        let mut c: [S; 4] = std::array::from_fn(|_| S::zero());
        c[i] = S::one();
        Self::linear(c)
    }

    /// Builds a form from `(exponent, coefficient)` terms; repeated exponents
    /// are summed.
    pub fn from_terms(degree: u8, terms: impl IntoIterator<Item = (Exponent, S)>) -> Result<Self> {
        let mut f = Self::zero(degree)?;
        for (e, c) in terms {
            let slot = f.slot(&e)?;
            f.coeffs[slot] = f.coeffs[slot].clone() + c;
        }
        Ok(f)
    }

    fn slot(&self, e: &Exponent) -> Result<usize> {
        if e.iter().sum::<u8>() != self.degree {
            return Err(Error::Inhomogeneous {
                expected: self.degree,
                exponent: *e,
            });
        }
        Ok(index_of(e).expect("homogeneous exponent is tabulated"))
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn coeff(&self, e: &Exponent) -> S {
        match self.slot(e) {
            Ok(i) => self.coeffs[i].clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn set(&mut self, e: &Exponent, c: S) -> Result<()> {
        let i = self.slot(e)?;
        self.coeffs[i] = c;
        Ok(())
    }

    /// `(exponent, coefficient)` pairs in lexicographic order, including zeros.
    pub fn terms(&self) -> impl Iterator<Item = (&'static Exponent, &S)> + '_ {
        monomials(self.degree).iter().zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Form4<T> {
        Form4 {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|c| c.clone() * k.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Inhomogeneous {
                expected: self.degree,
                exponent: monomials(other.degree)[0],
            });
        }
        Ok(Self {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    /// Product of two forms; the degrees must sum to at most 3.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.degree + other.degree)?;
        for (ea, ca) in self.terms() {
            if ca.is_zero() {
                continue;
            }
            for (eb, cb) in other.terms() {
                if cb.is_zero() {
                    continue;
                }
                let e: Exponent = std::array::from_fn(|i| ea[i] + eb[i]);
                let slot = out.slot(&e)?;
                out.coeffs[slot] = out.coeffs[slot].clone() + ca.clone() * cb.clone();
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u8) -> Result<Self> {
        let mut acc = Self::constant(S::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact value at the given coordinate representative.
    pub fn eval(&self, v: &[S; 4]) -> S {
        let mut powers: [[S; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| S::one()));
        for (i, vi) in v.iter().enumerate() {
            for k in 1..=self.degree as usize {
                powers[i][k] = powers[i][k - 1].clone() * vi.clone();
            }
        }
        let mut acc = S::zero();
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for i in 0..4 {
                if e[i] > 0 {
                    t = t * powers[i][e[i] as usize].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Value of the `w = 1` view at `(x, y, z)`.
    pub fn eval_affine(&self, x: S, y: S, z: S) -> S {
        self.eval(&[S::one(), x, y, z])
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        if self.degree == 0 {
            return Self::constant(S::zero());
        }
        let mut out = Self::zero(self.degree - 1).expect("lower degree");
        for (e, c) in self.terms() {
            if e[var] == 0 || c.is_zero() {
                continue;
            }
            let mut lowered = *e;
            lowered[var] -= 1;
            let slot = out.slot(&lowered).expect("homogeneous");
            out.coeffs[slot] = c.clone() * S::from_int(e[var] as i64);
        }
        out
    }

    /// The four partial derivatives `(F_w, F_x, F_y, F_z)`.
    pub fn gradient(&self) -> [Self; 4] {
        std::array::from_fn(|i| self.partial(i))
    }

    /// The form `g(v) = f(M v)`, expanded exactly monomial by monomial.
    pub fn substitute(&self, s: &LinearSubstitution<S>) -> Self {
        let images: [Self; 4] = std::array::from_fn(|i| Self::linear(s.row(i)));
        let mut out = Self::zero(self.degree).expect("same degree");
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mut term = Self::constant(c.clone());
            for i in 0..4 {
                if e[i] > 0 {
                    let p = images[i].pow(e[i]).expect("degree <= 3");
                    term = term.mul(&p).expect("degree <= 3");
                }
            }
            out = out.add(&term).expect("same degree");
        }
        out
    }

    /// Coefficients `c_k` of `f(mu*p + lambda*q) = sum_k c_k mu^(d-k) lambda^k`.
    pub fn restrict_to_line(&self, line: &ProjectiveLine<S>) -> Vec<S> {
        let d = self.degree as usize;
        let (p, q) = (line.p().coords(), line.q().coords());
        let mut out = vec![S::zero(); d + 1];
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            // Binary form in (mu, lambda), indexed by the power of lambda.
            let mut poly = vec![c.clone()];
            for i in 0..4 {
                for _ in 0..e[i] {
                    let mut next = vec![S::zero(); poly.len() + 1];
                    for (k, a) in poly.iter().enumerate() {
                        next[k] = next[k].clone() + a.clone() * p[i].clone();
                        next[k + 1] = next[k + 1].clone() + a.clone() * q[i].clone();
                    }
                    poly = next;
                }
            }
            for (k, a) in poly.into_iter().enumerate() {
                out[k] = out[k].clone() + a;
            }
        }
        out
    }
}
