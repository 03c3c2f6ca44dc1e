//! Singular points of the homogenized cubics and their second-order type.
//!
//! At a singular point the cubic and its four partials vanish. Fixing the
//! first nonzero coordinate to one gives an affine chart in the remaining
//! three variables, where the Taylor expansion starts with a quadratic form
//! `alpha`. Its rank decides the type: rank 3 is a conic node, rank 2 a
//! binode (two tangent planes), rank 1 a unode.

mod catalog;
mod lines;

use std::fmt;

use crate::linalg;
use crate::poly::{CubicForm4, ProjectivePoint4, VAR_NAMES};
use crate::scalar::{Eisenstein, Gaussian, Scalar};
use crate::error::{Error, Result};

pub use catalog::{
    canonical_equivalence_certificate, singular_catalog, Catalog, NamedSurface,
};
pub use lines::{
    finite_line_rejection, line_certificate, line_contained, lines_at_infinity,
    FiniteLineReport, LineScalar, LinesAtInfinity,
};

/// Symmetric 3x3 matrix of a ternary quadratic form over the chart
/// variables `vars` (indices into `(w, x, y, z)`).
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm3<S> {
    entries: [[S; 3]; 3],
    vars: [usize; 3],
}

impl<S: Scalar> QuadraticForm3<S> {
    /// Rejects a matrix that is not exactly symmetric.
    pub fn new(entries: [[S; 3]; 3], vars: [usize; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidConfig(format!(
                        "quadratic form matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { entries, vars })
    }

    pub fn entries(&self) -> &[[S; 3]; 3] {
        &self.entries
    }

    pub fn vars(&self) -> [usize; 3] {
        self.vars
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn eval(&self, v: &[S; 3]) -> S {
        let mut acc = S::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc = acc + self.entries[i][j].clone() * v[i].clone() * v[j].clone();
            }
        }
        acc
    }

    fn map<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<QuadraticForm3<T>> {
        let flat: Vec<T> = self.entries.iter().flatten().map(f).collect::<Option<_>>()?;
        let mut it = flat.into_iter();
        Some(QuadraticForm3 {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| it.next().expect("nine entries"))),
            vars: self.vars,
        })
    }
}

/// `sum_i coeffs[i] * v_{vars[i]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm3<S> {
    pub coeffs: [S; 3],
    pub vars: [usize; 3],
}

impl<S: Scalar> LinearForm3<S> {
    /// Scaled so the first nonzero coefficient is one.
    pub fn normalized(&self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .and_then(Scalar::inv)
            .unwrap_or_else(S::one);
        Self {
            coeffs: self.coeffs.clone().map(|c| c * lead.clone()),
            vars: self.vars,
        }
    }

    /// Symmetric matrix of the product `self * other`.
    pub fn product_matrix(&self, other: &Self) -> [[S; 3]; 3] {
        let half = S::from_int(2).inv().expect("characteristic zero");
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (self.coeffs[i].clone() * other.coeffs[j].clone()
                    + self.coeffs[j].clone() * other.coeffs[i].clone())
                    * half.clone()
            })
        })
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for LinearForm3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, &v) in self.coeffs.iter().zip(&self.vars) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}~", VAR_NAMES[v])?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityKind {
    ConicNode,
    Binode,
    Unode,
    NotIsolatedQuadratic,
    NonsingularPoint,
}

impl SingularityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ConicNode => "conic-node",
            Self::Binode => "binode",
            Self::Unode => "unode",
            Self::NotIsolatedQuadratic => "not-isolated-quadratic",
            Self::NonsingularPoint => "nonsingular-point",
        }
    }
}

/// The two tangent planes of a binode, over the field where they split.
/// In every split case `planes[0] * planes[1]` equals the quadratic form.
#[derive(Clone, Debug, PartialEq)]
pub enum TangentPlanes<S> {
    Ambient([LinearForm3<S>; 2]),
    Eisenstein([LinearForm3<Eisenstein>; 2]),
    Gaussian([LinearForm3<Gaussian>; 2]),
    /// No square root of the discriminant in the scalar field or in the
    /// Eisenstein or Gaussian extension.
    Obstructed { discriminant: S },
}

impl<S: Scalar + fmt::Display> TangentPlanes<S> {
    /// Exact check that the product of the planes is the given form.
    pub fn multiplies_back(&self, qf: &QuadraticForm3<S>) -> bool {
        fn check<T: Scalar>(planes: &[LinearForm3<T>; 2], target: Option<QuadraticForm3<T>>) -> bool {
            target.is_some_and(|t| planes[0].product_matrix(&planes[1]) == t.entries)
        }
        match self {
            Self::Ambient(p) => check(p, Some(qf.clone())),
            Self::Eisenstein(p) => check(p, qf.map(Scalar::to_eisenstein)),
            Self::Gaussian(p) => check(p, qf.map(Scalar::to_gaussian)),
            Self::Obstructed { .. } => false,
        }
    }

    pub fn field(&self) -> &'static str {
        match self {
            Self::Ambient(_) => "ambient",
            Self::Eisenstein(_) => "Q(e)",
            Self::Gaussian(_) => "Q(i)",
            Self::Obstructed { .. } => "none",
        }
    }

    /// Normalized planes as text, `None` when obstructed.
    pub fn describe(&self) -> Option<[String; 2]> {
        fn show<T: Scalar + fmt::Display>(p: &[LinearForm3<T>; 2]) -> [String; 2] {
            [p[0].normalized().to_string(), p[1].normalized().to_string()]
        }
        match self {
            Self::Ambient(p) => Some(show(p)),
            Self::Eisenstein(p) => Some(show(p)),
            Self::Gaussian(p) => Some(show(p)),
            Self::Obstructed { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification<S> {
    pub rank: usize,
    pub det: S,
    pub kind: SingularityKind,
    pub tangent_planes: Option<TangentPlanes<S>>,
}

#[derive(Clone, Debug)]
pub struct SingularityReport<S> {
    pub point: ProjectivePoint4<S>,
    /// `None` when the point is not singular.
    pub form: Option<QuadraticForm3<S>>,
    pub rank: usize,
    pub det: Option<S>,
    pub kind: SingularityKind,
    pub tangent_planes: Option<TangentPlanes<S>>,
}

impl<S: Scalar> PartialEq for SingularityReport<S> {
    fn eq(&self, other: &Self) -> bool {
        self.point == other.point
            && self.form == other.form
            && self.rank == other.rank
            && self.det == other.det
            && self.kind == other.kind
            && self.tangent_planes == other.tangent_planes
    }
}

/// The form and all four partials vanish at `p` (exactly, for exact scalars).
pub fn verify_singular<S: Scalar>(f: &CubicForm4<S>, p: &ProjectivePoint4<S>) -> bool {
    let v = p.coords();
    f.eval(v).is_zero() && f.gradient().iter().all(|g| g.eval(v).is_zero())
}

/// Second-order part of `f` at a singular point, in the chart where the
/// first nonzero coordinate of `p` is fixed to one:
/// `alpha_ab = 1/2 d^2 f / dv_a dv_b` over the other three variables.
pub fn quadratic_form_at<S: Scalar>(
    f: &CubicForm4<S>,
    p: &ProjectivePoint4<S>,
) -> Result<QuadraticForm3<S>> {
    if !verify_singular(f, p) {
        return Err(Error::NotSingular);
    }
    let fixed = p.first_nonzero();
    let p = p.normalized_at(fixed).expect("nonzero coordinate");
    let mut vars = [0usize; 3];
    let mut k = 0;
    for i in 0..4 {
        if i != fixed {
            vars[k] = i;
            k += 1;
        }
    }
    let half = S::from_int(2).inv().expect("characteristic zero");
    let entries = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            f.partial(vars[a]).partial(vars[b]).eval(p.coords()) * half.clone()
        })
    });
    QuadraticForm3::new(entries, vars)
}

/// Rank and determinant (exact for exact scalars), the type by rank, and for
/// rank 2 the factorization into tangent planes.
pub fn classify<S: Scalar>(qf: &QuadraticForm3<S>) -> Classification<S> {
    let rows: Vec<Vec<S>> = qf.entries.iter().map(|r| r.to_vec()).collect();
    let rank = linalg::rank(&rows);
    let det = linalg::det3(&qf.entries);
    let kind = match rank {
        3 => SingularityKind::ConicNode,
        2 => SingularityKind::Binode,
        1 => SingularityKind::Unode,
        _ => SingularityKind::NotIsolatedQuadratic,
    };
    let tangent_planes = (rank == 2).then(|| split(qf));
    Classification {
        rank,
        det,
        kind,
        tangent_planes,
    }
}

/// Full report for a point: classification when singular, otherwise
/// `NonsingularPoint`.
pub fn analyze_point<S: Scalar>(f: &CubicForm4<S>, p: &ProjectivePoint4<S>) -> SingularityReport<S> {
    match quadratic_form_at(f, p) {
        Ok(form) => {
            let c = classify(&form);
            SingularityReport {
                point: p.clone(),
                form: Some(form),
                rank: c.rank,
                det: Some(c.det),
                kind: c.kind,
                tangent_planes: c.tangent_planes,
            }
        }
        Err(_) => SingularityReport {
            point: p.clone(),
            form: None,
            rank: 0,
            det: None,
            kind: SingularityKind::NonsingularPoint,
            tangent_planes: None,
        },
    }
}

fn split<S: Scalar>(qf: &QuadraticForm3<S>) -> TangentPlanes<S> {
    let discriminant = match factor_rank2(qf) {
        Ok(planes) => return TangentPlanes::Ambient(planes),
        Err(d) => d,
    };
    if let Some(Ok(planes)) = qf.map(Scalar::to_eisenstein).map(|q| factor_rank2(&q)) {
        return TangentPlanes::Eisenstein(planes);
    }
    if let Some(Ok(planes)) = qf.map(Scalar::to_gaussian).map(|q| factor_rank2(&q)) {
        return TangentPlanes::Gaussian(planes);
    }
    TangentPlanes::Obstructed { discriminant }
}

/// Writes a rank-2 form as a product of two linear forms over `S`, or
/// returns the discriminant whose square root is missing.
fn factor_rank2<S: Scalar>(qf: &QuadraticForm3<S>) -> std::result::Result<[LinearForm3<S>; 2], S> {
    let m = &qf.entries;
    let vars = qf.vars;
    let form = |c: [S; 3]| LinearForm3 { coeffs: c, vars };
    let two = S::from_int(2);

    let Some(a) = (0..3).find(|&i| !m[i][i].is_zero()) else {
        // Zero diagonal; a vanishing determinant forces one off-diagonal zero.
        let (i, j, k) = if m[0][1].is_zero() {
            (2, 0, 1) // 2 v2 (a02 v0 + a12 v1)
        } else if m[0][2].is_zero() {
            (1, 0, 2)
        } else {
            (0, 1, 2)
        };
        let mut l1 = [S::zero(), S::zero(), S::zero()];
        l1[i] = S::one();
        let mut l2 = [S::zero(), S::zero(), S::zero()];
        l2[j] = two.clone() * m[i][j].clone();
        l2[k] = two.clone() * m[i][k].clone();
        return Ok([form(l1), form(l2)]);
    };
    let (b, c) = match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let aa = m[a][a].clone();
    // alpha_aa * Q = (alpha_aa v_a + alpha_ab v_b + alpha_ac v_c)^2 - D(v_b, v_c)
    let dbb = m[a][b].clone() * m[a][b].clone() - aa.clone() * m[b][b].clone();
    let dbc = m[a][b].clone() * m[a][c].clone() - aa.clone() * m[b][c].clone();
    let dcc = m[a][c].clone() * m[a][c].clone() - aa.clone() * m[c][c].clone();
    // D has rank one: D = delta * (v_b + mu v_c)^2 or delta * v_c^2
    let (delta, mb, mc) = if !dbb.is_zero() {
        let mu = dbc.clone() * dbb.inv().expect("nonzero");
        (dbb, S::one(), mu)
    } else {
        (dcc, S::zero(), S::one())
    };
    let root = delta.sqrt_in_field().ok_or_else(|| delta.clone())?;
    let mut base = [S::zero(), S::zero(), S::zero()];
    base[a] = aa.clone();
    base[b] = m[a][b].clone();
    base[c] = m[a][c].clone();
    let mut shift = [S::zero(), S::zero(), S::zero()];
    shift[b] = root.clone() * mb;
    shift[c] = root * mc;
    let inv_aa = aa.inv().expect("nonzero");
    let plus: [S; 3] =
        std::array::from_fn(|i| (base[i].clone() + shift[i].clone()) * inv_aa.clone());
    let minus: [S; 3] = std::array::from_fn(|i| base[i].clone() - shift[i].clone());
    Ok([form(plus), form(minus)])
}

#[cfg(test)]
mod tests;
