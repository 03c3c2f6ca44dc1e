//! Lines on the surfaces: containment, the three lines at infinity of the
//! hcubic, and randomized refutation of finite lines on `xyz = 1`.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::catalog::format_point;
use crate::certificate::{Certificate, Subject};
use crate::error::{Error, Result};
use crate::poly::forms::{canon, hcubic};
use crate::poly::{CubicForm4, ProjectiveLine, ProjectivePoint4};
use crate::scalar::{rat, Eisenstein, Gaussian, Rational, Scalar};

/// Every coefficient of the restriction of `f` to `line` vanishes.
pub fn line_contained<S: Scalar>(f: &CubicForm4<S>, line: &ProjectiveLine<S>) -> bool {
    f.restrict_to_line(line).iter().all(|c| c.is_zero())
}

/// Containment certificate with one check per restriction coefficient.
pub fn line_certificate<S: Scalar + fmt::Display>(
    f: &CubicForm4<S>,
    line: &ProjectiveLine<S>,
    label: &str,
) -> Certificate {
    let subject = format!(
        "{label}: {} v {}",
        format_point(line.p().coords()),
        format_point(line.q().coords())
    );
    let mut cert = Certificate::new(Subject::Line(subject));
    for (k, c) in f.restrict_to_line(line).iter().enumerate() {
        cert.push(format!("c{k} = 0"), c.is_zero(), Some(c.to_string()));
    }
    cert
}

#[derive(Clone, Debug)]
pub struct LinesAtInfinity {
    /// `w = 0, x + y + z = 0`.
    pub real: ProjectiveLine<Rational>,
    /// `w = 0, x + e y + e^2 z = 0` and its conjugate.
    pub conjugates: [ProjectiveLine<Eisenstein>; 2],
    pub certificates: Vec<Certificate>,
}

impl LinesAtInfinity {
    /// All three lines over Q(e).
    pub fn all(&self) -> [ProjectiveLine<Eisenstein>; 3] {
        let embed = |c: &Rational| Eisenstein::from_rational(c.clone());
        [
            self.real.map(embed),
            self.conjugates[0].clone(),
            self.conjugates[1].clone(),
        ]
    }

    pub fn passed(&self) -> bool {
        self.certificates.iter().all(Certificate::passed)
    }
}

/// The three lines of the hcubic in the plane at infinity, certified
/// contained and pairwise distinct. Fails if any certificate fails.
pub fn lines_at_infinity() -> Result<LinesAtInfinity> {
    let q = |a: i64| rat(a, 1);
    let real = ProjectiveLine::new(
        ProjectivePoint4::new([q(0), q(1), q(-1), q(0)])?,
        ProjectivePoint4::new([q(0), q(0), q(1), q(-1)])?,
    )?;
    let (z, o) = (Eisenstein::zero(), Eisenstein::one());
    let (e, e2) = (Eisenstein::epsilon(), Eisenstein::epsilon_sq());
    // x + e y + e^2 z = 0 through (0,-e,1,0) and (0,-e^2,0,1)
    let first = ProjectiveLine::new(
        ProjectivePoint4::new([z.clone(), -e.clone(), o.clone(), z.clone()])?,
        ProjectivePoint4::new([z.clone(), -e2.clone(), z.clone(), o.clone()])?,
    )?;
    let second = ProjectiveLine::new(
        ProjectivePoint4::new([z.clone(), -e2, o.clone(), z.clone()])?,
        ProjectivePoint4::new([z.clone(), -e, z, o])?,
    )?;
    let mut certificates = vec![
        line_certificate(&hcubic(), &real, "x + y + z = 0, w = 0"),
        line_certificate(&hcubic(), &first, "x + e y + e^2 z = 0, w = 0"),
        line_certificate(&hcubic(), &second, "x + e^2 y + e z = 0, w = 0"),
    ];
    let out = LinesAtInfinity {
        real,
        conjugates: [first, second],
        certificates: Vec::new(),
    };
    let all = out.all();
    let distinct = (0..3).all(|i| (0..i).all(|j| !all[i].same_line(&all[j])));
    certificates.push(
        Certificate::new(Subject::Claim("the three lines are pairwise distinct".into()))
            .check("pairwise distinct", distinct, None),
    );
    if let Some(bad) = certificates.iter().find(|c| !c.passed()) {
        return Err(Error::CertificateFailed(bad.to_json()));
    }
    Ok(LinesAtInfinity { certificates, ..out })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineScalar {
    Rational,
    Gaussian,
}

impl FromStr for LineScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Self::Rational),
            "gaussian" => Ok(Self::Gaussian),
            _ => Err(Error::Parse {
                what: "line scalar",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteLineReport {
    pub scalar: LineScalar,
    pub seed: u64,
    pub trials: usize,
    /// Pairs that coincided and so define no line; not counted as tested.
    pub degenerate: usize,
    pub tested: usize,
    pub contained: usize,
    pub identity_mismatches: usize,
}

impl FiniteLineReport {
    pub fn passed(&self) -> bool {
        self.contained == 0 && self.identity_mismatches == 0
    }
}

enum Trial {
    Degenerate,
    Tested { contained: bool, identity: bool },
}

/// Joins two points `(-1, a, b, 1/(ab))` and `(-1, A, B, 1/(AB))` of
/// `XYZ + W^3 = 0` (the chart `xyz = 1` with `w = -1`). Along
/// `P + lambda (Q - P)` the cubic coefficient is
/// `(A - a)(B - b)(C - c)`, which is nonzero for distinct points on the chart.
fn trial<S: Scalar>(f: &CubicForm4<S>, a: [S; 2], b: [S; 2]) -> Trial {
    let point = |u: &[S; 2]| -> [S; 4] {
        let c = (u[0].clone() * u[1].clone()).inv().expect("nonzero coordinates");
        [-S::one(), u[0].clone(), u[1].clone(), c]
    };
    let (p, q) = (point(&a), point(&b));
    let dir: [S; 4] = std::array::from_fn(|i| q[i].clone() - p[i].clone());
    let (Ok(pp), Ok(qp)) = (ProjectivePoint4::new(p.clone()), ProjectivePoint4::new(dir.clone())) else {
        return Trial::Degenerate;
    };
    let Ok(line) = ProjectiveLine::new(pp, qp) else {
        return Trial::Degenerate;
    };
    let coeffs = f.restrict_to_line(&line);
    let lead = dir[1].clone() * dir[2].clone() * dir[3].clone();
    Trial::Tested {
        contained: coeffs.iter().all(|c| c.is_zero()),
        identity: coeffs[3] == lead,
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            return rat(n, rng.gen_range(1..=9));
        }
    }
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> Gaussian {
    loop {
        let re = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let im = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let g = Gaussian::new(re, im);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Samples `n_trials` point pairs on `xyz = 1` and checks that none of the
/// joining lines lies on the surface, together with the leading-coefficient
/// identity. Trial `i` uses the ChaCha8 stream `i` of `seed`, so results do
/// not depend on scheduling.
pub fn finite_line_rejection(n_trials: usize, seed: u64, scalar: LineScalar) -> Result<FiniteLineReport> {
    if n_trials == 0 {
        return Err(Error::InvalidConfig("n_trials must be at least 1".into()));
    }
    use rayon::prelude::*;
    let (fq, fg) = (canon::<Rational>(), canon::<Gaussian>());
    let outcomes: Vec<Trial> = (0..n_trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            match scalar {
                LineScalar::Rational => {
                    let mut draw = || random_rational(&mut rng);
                    trial(&fq, [draw(), draw()], [draw(), draw()])
                }
                LineScalar::Gaussian => {
                    let mut draw = || random_gaussian(&mut rng);
                    trial(&fg, [draw(), draw()], [draw(), draw()])
                }
            }
        })
        .collect();
    let mut report = FiniteLineReport {
        scalar,
        seed,
        trials: n_trials,
        degenerate: 0,
        tested: 0,
        contained: 0,
        identity_mismatches: 0,
    };
    for t in outcomes {
        match t {
            Trial::Degenerate => report.degenerate += 1,
            Trial::Tested { contained, identity } => {
                report.tested += 1;
                report.contained += usize::from(contained);
                report.identity_mismatches += usize::from(!identity);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
pub(crate) fn trial_for_test<S: Scalar>(a: [S; 2], b: [S; 2]) -> Option<(bool, bool)> {
    match trial(&canon(), a, b) {
        Trial::Degenerate => None,
        Trial::Tested { contained, identity } => Some((contained, identity)),
    }
}
