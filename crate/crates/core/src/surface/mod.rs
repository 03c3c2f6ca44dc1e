//! The revolution structure of `x^3 + y^3 + z^3 - 3xyz = 1`.
//!
//! Every real point has `t = x + y + z > 0`, and the points with a given `t`
//! form a circle centred at `(t/3, t/3, t/3)` of squared radius `2/(3t)`,
//! lying in the plane `x + y + z = t`. Sweeping `t` over `(0, inf)` and the
//! angle around each circle gives the `(t, theta)` parametrization in
//! [`param`].

mod invariance;
mod rotation;

use std::f64::consts::TAU;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Subject};
use crate::error::{Error, Result};
use crate::poly::Form4;
use crate::scalar::{Eisenstein, Rational, Scalar};

pub use invariance::{
    revolution_invariance_test, revolution_invariance_test_with, rotate_about_axis,
    solve_on_ray, InvarianceConfig, InvarianceReport, InvarianceWitness,
};
pub use rotation::{canonical_residual, from_rotated, rotation_matrix, to_rotated, CanonicalResidual};

/// A point of affine 3-space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffinePoint3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> AffinePoint3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// The six coordinate permutations, identity first.
    pub fn permutations(&self) -> [Self; 6] {
        let (x, y, z) = (self.x.clone(), self.y.clone(), self.z.clone());
        [
            Self::new(x.clone(), y.clone(), z.clone()),
            Self::new(x.clone(), z.clone(), y.clone()),
            Self::new(y.clone(), x.clone(), z.clone()),
            Self::new(y.clone(), z.clone(), x.clone()),
            Self::new(z.clone(), x.clone(), y.clone()),
            Self::new(z, y, x),
        ]
    }
}

impl AffinePoint3<f64> {
    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }
}

/// `x^3 + y^3 + z^3 - rho*xyz - 1`.
pub fn f_eval<S: Scalar>(p: &AffinePoint3<S>, rho: &S) -> S {
    let (x, y, z) = (p.x.clone(), p.y.clone(), p.z.clone());
    x.pow(3) + y.pow(3) + z.pow(3) - rho.clone() * x * y * z - S::one()
}

/// Magnitude of the evaluated terms, `max(1, |x|^3 + |y|^3 + |z|^3 + |rho xyz|)`.
pub fn residual_scale(p: &AffinePoint3<f64>, rho: f64) -> f64 {
    let terms = p.x.abs().powi(3) + p.y.abs().powi(3) + p.z.abs().powi(3)
        + (rho * p.x * p.y * p.z).abs();
    terms.max(1.0)
}

/// `|f_eval| / scale`.
pub fn scaled_residual(p: &AffinePoint3<f64>, rho: f64) -> f64 {
    f_eval(p, &rho).abs() / residual_scale(p, rho)
}

/// Numeric membership: `|f_eval| <= tol * scale`.
pub fn on_surface(p: &AffinePoint3<f64>, rho: f64, tol: f64) -> bool {
    scaled_residual(p, rho) <= tol
}

/// Exact membership for rational points on `rho = 3`.
pub fn on_surface_exact(p: &AffinePoint3<Rational>) -> bool {
    f_eval(p, &Rational::from_integer(3.into())).is_zero()
}

fn affine_cubic<S: Scalar>() -> Form4<S> {
    // x^3 + y^3 + z^3 - 3xyz, with no w
    Form4::from_terms(
        3,
        [
            ([0, 3, 0, 0], S::one()),
            ([0, 0, 3, 0], S::one()),
            ([0, 0, 0, 3], S::one()),
            ([0, 1, 1, 1], S::from_int(-3)),
        ],
    )
    .expect("cubic")
}

fn lin<S: Scalar>(x: S, y: S, z: S) -> Form4<S> {
    Form4::linear([S::zero(), x, y, z])
}

/// Exact certificates for the factorization of `x^3 + y^3 + z^3 - 3xyz`:
///
/// * `(x + y + z)(x^2 + y^2 + z^2 - xy - yz - zx)` over the rationals,
/// * `x^2 + y^2 + z^2 - xy - yz - zx = ((x-y)^2 + (x-z)^2 + (y-z)^2) / 2`,
/// * `(x + y + z)(x + e y + e^2 z)(x + e^2 y + e z)` over `Q(e)`.
pub fn verify_factorization() -> Certificate {
    let one = Rational::one;
    let cubic = affine_cubic::<Rational>();
    let sum = lin(one(), one(), one());
    let second = Form4::from_terms(
        2,
        [
            ([0, 2, 0, 0], one()),
            ([0, 0, 2, 0], one()),
            ([0, 0, 0, 2], one()),
            ([0, 1, 1, 0], -one()),
            ([0, 0, 1, 1], -one()),
            ([0, 1, 0, 1], -one()),
        ],
    )
    .expect("quadratic");
    let residual = sum.mul(&second).and_then(|p| p.sub(&cubic)).expect("cubic");

    let half = Rational::new(1.into(), 2.into());
    let sq = |f: Form4<Rational>| f.mul(&f).expect("quadratic");
    let halves = sq(lin(one(), -one(), Rational::zero()))
        .add(&sq(lin(one(), Rational::zero(), -one())))
        .and_then(|s| s.add(&sq(lin(Rational::zero(), one(), -one()))))
        .expect("quadratic")
        .scale(&half);
    let second_residual = halves.sub(&second).expect("quadratic");

    let e1 = Eisenstein::one;
    let eps = Eisenstein::epsilon;
    let eps2 = Eisenstein::epsilon_sq;
    let cyclotomic = lin(e1(), e1(), e1())
        .mul(&lin(e1(), eps(), eps2()))
        .and_then(|p| p.mul(&lin(e1(), eps2(), eps())))
        .expect("cubic");
    let cyclotomic_residual = cyclotomic
        .sub(&affine_cubic::<Eisenstein>())
        .expect("cubic");

    let witness = |zero: bool, json: String| (!zero).then_some(json);
    Certificate::new(Subject::Identity("x^3 + y^3 + z^3 - 3xyz".into()))
        .check(
            "(x+y+z)(x^2+y^2+z^2-xy-yz-zx) over Q",
            residual.is_zero(),
            witness(residual.is_zero(), residual.to_json_string()),
        )
        .check(
            "second factor = half sum of squared differences",
            second_residual.is_zero(),
            witness(second_residual.is_zero(), second_residual.to_json_string()),
        )
        .check(
            "(x+y+z)(x+e*y+e^2*z)(x+e^2*y+e*z) over Q(e)",
            cyclotomic_residual.is_zero(),
            witness(cyclotomic_residual.is_zero(), cyclotomic_residual.to_json_string()),
        )
}

/// The circle cut from the surface by the plane `x + y + z = t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SliceCircle {
    pub t: f64,
    pub center: AffinePoint3<f64>,
    pub circle_radius_sq: f64,
    pub sphere_radius_sq: f64,
    pub plane_constant: f64,
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveT(t.to_string()))
    }
}

pub fn slice(t: f64) -> Result<SliceCircle> {
    check_t(t)?;
    let c = t / 3.0;
    let circle_radius_sq = 2.0 / (3.0 * t);
    Ok(SliceCircle {
        t,
        center: AffinePoint3::new(c, c, c),
        circle_radius_sq,
        sphere_radius_sq: circle_radius_sq + t * t / 3.0,
        plane_constant: t,
    })
}

impl SliceCircle {
    pub fn point_at(&self, theta: f64) -> AffinePoint3<f64> {
        param_unchecked(self.t, theta)
    }
}

/// `(t, theta)` with `t > 0` and `theta` reduced to `[0, 2 pi)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceParams {
    t: f64,
    theta: f64,
}

impl SurfaceParams {
    pub fn new(t: f64, theta: f64) -> Result<Self> {
        check_t(t)?;
        let theta = theta.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU
        let theta = if theta >= TAU { 0.0 } else { theta };
        Ok(Self { t, theta })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// The meridian in the plane `2z = x + y`:
/// `(t/3 + 1/(3 sqrt t), t/3 + 1/(3 sqrt t), t/3 - 2/(3 sqrt t))`.
pub fn meridian(t: f64) -> Result<AffinePoint3<f64>> {
    check_t(t)?;
    let c = t / 3.0;
    let k = 1.0 / (3.0 * t.sqrt());
    Ok(AffinePoint3::new(c + k, c + k, c - 2.0 * k))
}

/// The surface point at `(t, theta)`.
pub fn param(s: SurfaceParams) -> AffinePoint3<f64> {
    param_unchecked(s.t, s.theta)
}

fn param_unchecked(t: f64, theta: f64) -> AffinePoint3<f64> {
    let c = t / 3.0;
    let (sin, cos) = theta.sin_cos();
    let a = cos / (3.0 * t.sqrt());
    let b = sin / (3.0 * t).sqrt();
    AffinePoint3::new(c + a + b, c + a - b, c - 2.0 * a)
}
