//! Singular points of the named surfaces and the change to canonical form.

use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use num::{One, Zero};

use super::{analyze_point, verify_singular, SingularityKind, SingularityReport};
use crate::certificate::{Certificate, Subject};
use crate::error::{Error, Result};
use crate::poly::forms::{canon, hcubic, rotated_scaled, rotated_with_constant};
use crate::poly::{CubicForm4, LinearSubstitution, ProjectivePoint4};
use crate::scalar::{complex_approx_eq, rat, Eisenstein, Gaussian, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedSurface {
    Hcubic,
    Canon,
    RotatedScaled,
}

impl NamedSurface {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Hcubic => "hcubic",
            Self::Canon => "canon",
            Self::RotatedScaled => "rotated-scaled",
        }
    }
}

impl FromStr for NamedSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hcubic" => Ok(Self::Hcubic),
            "canon" => Ok(Self::Canon),
            "rotated-scaled" => Ok(Self::RotatedScaled),
            _ => Err(Error::UnknownSurface(s.to_string())),
        }
    }
}

/// Reports over the field each surface's singular points live in.
#[derive(Clone, Debug, PartialEq)]
pub enum Catalog {
    Hcubic(Vec<SingularityReport<Eisenstein>>),
    Canon(Vec<SingularityReport<Rational>>),
    RotatedScaled(Vec<SingularityReport<Gaussian>>),
}

impl Catalog {
    pub fn len(&self) -> usize {
        match self {
            Self::Hcubic(r) => r.len(),
            Self::Canon(r) => r.len(),
            Self::RotatedScaled(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kinds(&self) -> Vec<SingularityKind> {
        match self {
            Self::Hcubic(r) => r.iter().map(|x| x.kind).collect(),
            Self::Canon(r) => r.iter().map(|x| x.kind).collect(),
            Self::RotatedScaled(r) => r.iter().map(|x| x.kind).collect(),
        }
    }

    /// One certificate per point: exact vanishing of the form and its
    /// partials, the rank and determinant, and the tangent-plane product.
    pub fn certificates(&self) -> Vec<Certificate> {
        match self {
            Self::Hcubic(r) => r.iter().map(|x| report_certificate(&hcubic(), x)).collect(),
            Self::Canon(r) => r.iter().map(|x| report_certificate(&canon(), x)).collect(),
            Self::RotatedScaled(r) => r
                .iter()
                .map(|x| report_certificate(&rotated_scaled(), x))
                .collect(),
        }
    }
}

pub(crate) fn format_point<S: fmt::Display>(coords: &[S; 4]) -> String {
    let parts: Vec<String> = coords.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn report_certificate<S: Scalar + fmt::Display>(
    f: &CubicForm4<S>,
    r: &SingularityReport<S>,
) -> Certificate {
    let v = r.point.coords();
    let mut cert = Certificate::new(Subject::Point(format_point(v)))
        .check("on surface", f.eval(v).is_zero(), Some(f.eval(v).to_string()));
    let grads: Vec<String> = f.gradient().iter().map(|g| g.eval(v).to_string()).collect();
    cert.push(
        "gradient vanishes",
        verify_singular(f, &r.point),
        Some(format!("[{}]", grads.join(", "))),
    );
    cert.push(
        "quadratic form symmetric",
        r.form.as_ref().is_some_and(|q| q.is_symmetric()),
        None,
    );
    cert.push("rank 2", r.rank == 2, Some(r.rank.to_string()));
    cert.push(
        "det 0",
        r.det.as_ref().is_some_and(|d| d.is_zero()),
        r.det.as_ref().map(ToString::to_string),
    );
    cert.push("binode", r.kind == SingularityKind::Binode, Some(r.kind.as_str().into()));
    let planes_ok = match (&r.tangent_planes, &r.form) {
        (Some(tp), Some(q)) => tp.multiplies_back(q),
        _ => false,
    };
    let witness = r
        .tangent_planes
        .as_ref()
        .and_then(|tp| tp.describe().map(|[a, b]| format!("{} | {a} ; {b}", tp.field())));
    cert.push("tangent planes multiply back", planes_ok, witness);
    cert
}

fn points<S: Scalar>(list: Vec<[S; 4]>) -> Vec<ProjectivePoint4<S>> {
    list.into_iter()
        .map(|c| ProjectivePoint4::new(c).expect("nonzero catalog point"))
        .collect()
}

/// The singular points of `"hcubic"` (over Q(e)), `"canon"` (over Q) or
/// `"rotated-scaled"` (the rational rescaling `z(x^2+y^2) = w^3`, over Q(i)),
/// each analyzed exactly.
pub fn singular_catalog(name: &str) -> Result<Catalog> {
    let surface: NamedSurface = name.parse()?;
    Ok(match surface {
        NamedSurface::Hcubic => {
            let (z, o) = (Eisenstein::zero(), Eisenstein::one());
            let (e, e2) = (Eisenstein::epsilon(), Eisenstein::epsilon_sq());
            let f = hcubic();
            let pts = points(vec![
                [z.clone(), o.clone(), o.clone(), o.clone()],
                [z.clone(), o.clone(), e.clone(), e2.clone()],
                [z, o, e2, e],
            ]);
            Catalog::Hcubic(pts.iter().map(|p| analyze_point(&f, p)).collect())
        }
        NamedSurface::Canon => {
            let (z, o) = (Rational::zero(), Rational::one());
            let f = canon();
            let pts = points(vec![
                [z.clone(), o.clone(), z.clone(), z.clone()],
                [z.clone(), z.clone(), o.clone(), z.clone()],
                [z.clone(), z.clone(), z, o],
            ]);
            Catalog::Canon(pts.iter().map(|p| analyze_point(&f, p)).collect())
        }
        NamedSurface::RotatedScaled => {
            let (z, o, i) = (Gaussian::zero(), Gaussian::one(), Gaussian::i());
            let f = rotated_scaled();
            let pts = points(vec![
                [z.clone(), i.clone(), o.clone(), z.clone()],
                [z.clone(), -i, o.clone(), z.clone()],
                [z.clone(), z.clone(), z, o],
            ]);
            Catalog::RotatedScaled(pts.iter().map(|p| analyze_point(&f, p)).collect())
        }
    })
}

/// Certifies the change from the rotated surface to `XYZ + W^3`.
///
/// Exact part over Q(i): with `x = (X+Y)/2`, `y = (X-Y)/(2i)`, `z = Z`,
/// `w = -W`, the rescaled form `z(x^2+y^2) - w^3` becomes `XYZ + W^3`.
///
/// Numeric part: the unscaled form `z(x^2+y^2) - 2/(3 sqrt 3) w^3` under
/// `W = -(3 sqrt 3 / 2)^(1/3) w` lands on `XYZ + lambda W^3` with
/// `lambda = 4/27`, and a further rescaling of `W` by `lambda^(-1/3)` gives
/// `XYZ + W^3`. Checked by evaluation at sample points.
pub fn canonical_equivalence_certificate() -> Certificate {
    let mut cert = Certificate::new(Subject::Identity(
        "z(x^2+y^2) - k w^3 ~ XYZ + W^3".into(),
    ));

    // exact: rows give (w, x, y, z) in terms of (W, X, Y, Z)
    let g = |a: i64, b: i64| Gaussian::new(rat(a, 1), rat(b, 1));
    let half = Gaussian::new(rat(1, 2), rat(0, 1));
    let m = [
        [g(-1, 0), g(0, 0), g(0, 0), g(0, 0)],
        [g(0, 0), half.clone(), half.clone(), g(0, 0)],
        // 1/(2i) = -i/2
        [g(0, 0), Gaussian::new(rat(0, 1), rat(-1, 2)), Gaussian::new(rat(0, 1), rat(1, 2)), g(0, 0)],
        [g(0, 0), g(0, 0), g(0, 0), g(1, 0)],
    ];
    let exact = LinearSubstitution::new(m)
        .map(|s| rotated_scaled::<Gaussian>().substitute(&s) == canon())
        .unwrap_or(false);
    cert.push("x^2+y^2 = XY and w = -W give XYZ + W^3 over Q(i)", exact, None);

    // numeric with the irrational constant
    let k = 2.0 / (3.0 * 3f64.sqrt());
    let scale = -(1.5 * 3f64.sqrt()).cbrt(); // W = scale * w
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let rotated = rotated_with_constant(c(k, 0.0));
    let lambda = k * k;
    let rescale = lambda.cbrt(); // W' = lambda^(1/3) W
    let canon_c: CubicForm4<Complex64> = canon();
    let samples = [
        [0.3, -1.2, 0.7, 2.1],
        [1.0, 1.0, 1.0, 1.0],
        [-0.5, 0.25, 3.0, -1.5],
        [2.2, -0.9, -0.4, 0.6],
        [0.0, 1.7, -2.3, 0.8],
        [-1.1, 0.05, 0.9, -0.3],
    ];
    let mut worst = 0.0f64;
    let mut ok = true;
    for s in samples {
        let (w_cap, x_cap, y_cap, z_cap) = (c(s[0], s[1]), c(s[1], s[2]), c(s[2], -s[3]), c(s[3], s[0]));
        // back to the rotated coordinates
        let w = w_cap / rescale / scale;
        let x = (x_cap + y_cap) / 2.0;
        let y = (x_cap - y_cap) / c(0.0, 2.0);
        let lhs = rotated.eval(&[w, x, y, z_cap]);
        let rhs = canon_c.eval(&[w_cap, x_cap, y_cap, z_cap]);
        worst = worst.max((lhs - rhs).norm());
        ok &= complex_approx_eq(lhs, rhs, 1e-12);
    }
    cert.push(
        "rescaled W gives XYZ + W^3 at sample points",
        ok,
        Some(format!("lambda = {lambda:.17}, max |diff| = {worst:.3e}")),
    );
    let lambda_q = 4.0 / 27.0;
    cert.push(
        "lambda = 4/27",
        (lambda - lambda_q).abs() <= 1e-15,
        Some(format!("{lambda:.17}")),
    );
    cert
}
