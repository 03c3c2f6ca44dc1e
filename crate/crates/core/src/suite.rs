//! The full battery of checks, each as a certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Subject};
use crate::error::Result;
use crate::mesh::{build_mesh, MeshConfig};
use crate::rational_points::{
    family_membership, rational_point, MembershipResult, NotInFamilyReason, RationalParams,
};
use crate::scalar::{format_rational, rat, Rational};
use crate::singular::{
    canonical_equivalence_certificate, finite_line_rejection, lines_at_infinity,
    singular_catalog, LineScalar,
};
use crate::surface::{
    canonical_residual, param, residual_scale, revolution_invariance_test, rotation_matrix,
    f_eval, to_rotated, verify_factorization, AffinePoint3, SurfaceParams,
};

/// Smallest `t` drawn by [`log_uniform_params`]. Below about `1e-4` the sum
/// `x + y + z` cancels badly in double precision and the rotated residual
/// can no longer be held to `1e-9`.
pub const T_SAMPLE_MIN: f64 = 1e-3;
pub const T_SAMPLE_MAX: f64 = 100.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub rho: f64,
    pub seed: u64,
    pub param_samples: usize,
    pub invariance_samples: usize,
    pub tol: f64,
    pub line_trials: usize,
    pub roundtrips: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            rho: 3.0,
            seed: 42,
            param_samples: 10_000,
            invariance_samples: 1000,
            tol: 1e-9,
            line_trials: 10_000,
            roundtrips: 500,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passed: bool,
    pub certificates: Vec<Certificate>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| !c.passed())
    }
}

/// `(t, theta)` with `log t` uniform on `[ln T_SAMPLE_MIN, ln T_SAMPLE_MAX]`
/// and `theta` uniform on `[0, 2 pi)`.
pub fn log_uniform_params(n: usize, seed: u64) -> Vec<SurfaceParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (T_SAMPLE_MIN.ln(), T_SAMPLE_MAX.ln());
    (0..n)
        .map(|_| {
            let t = rng.gen_range(lo..=hi).exp().min(T_SAMPLE_MAX);
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            SurfaceParams::new(t, theta).expect("positive t")
        })
        .collect()
}

/// `u = ±a/b`, `r = c/d` with `1 <= a, b, d <= 50` and `|c| <= 50`.
pub fn random_rational_params(n: usize, seed: u64) -> Vec<RationalParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let u = rat(sign * rng.gen_range(1..=50), rng.gen_range(1..=50));
            let r = rat(rng.gen_range(-50..=50), rng.gen_range(1..=50));
            RationalParams::new(u, r).expect("u != 0")
        })
        .collect()
}

fn param_certificate(samples: &[SurfaceParams], rho: f64, tol: f64) -> Certificate {
    let mut worst = (0.0f64, None);
    for s in samples {
        let p = param(*s);
        let r = f_eval(&p, &rho).abs() / residual_scale(&p, rho);
        if r > worst.0 || worst.1.is_none() {
            worst = (r, Some(*s));
        }
    }
    let witness = worst
        .1
        .map(|s| format!("max scaled residual {:.3e} at t = {}, theta = {}", worst.0, s.t(), s.theta()));
    Certificate::new(Subject::Claim(format!(
        "{} parametrized points lie on the rho = {rho} surface",
        samples.len()
    )))
    .check("scaled residual <= tol", worst.0 <= tol, witness)
}

fn rotation_certificate(samples: &[SurfaceParams], tol: f64) -> Certificate {
    let m = rotation_matrix();
    let mut orth = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let dot: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
            let want = if i == j { 1.0 } else { 0.0 };
            orth = orth.max((dot - want).abs());
        }
    }
    let mut worst = 0.0f64;
    let mut on_axis = 0;
    for s in samples {
        match canonical_residual(&to_rotated(&param(*s))).value() {
            Some(v) => worst = worst.max(v.abs()),
            None => on_axis += 1,
        }
    }
    Certificate::new(Subject::Claim("rotation to Z * 3 sqrt3 (X^2 + Y^2) = 2".into()))
        .check("R^T R = I", orth <= 1e-14, Some(format!("{orth:.3e}")))
        .check(
            "canonical residual <= tol",
            worst <= tol && on_axis == 0,
            Some(format!("max {worst:.3e}, on axis {on_axis}")),
        )
}

fn invariance_certificate(cfg: &SuiteConfig) -> Result<Certificate> {
    let rep = revolution_invariance_test(cfg.rho, cfg.invariance_samples, cfg.tol, cfg.seed)?;
    let witness = match &rep.witness {
        Some(w) => format!(
            "max residual {:.3e}: point {:?} rotated by {} to {:?}",
            rep.max_residual, w.point, w.angle, w.rotated
        ),
        None => format!("max residual {:.3e}", rep.max_residual),
    };
    Ok(Certificate::new(Subject::Claim(format!(
        "x^3+y^3+z^3-{}xyz=1 is invariant under rotation about x=y=z",
        cfg.rho
    )))
    .check("rotated samples stay on the surface", rep.invariant, Some(witness)))
}

fn rational_certificates(cfg: &SuiteConfig) -> Vec<Certificate> {
    let mut out = Vec::new();
    let params = RationalParams::new(rat(2, 1), rat(1, 3)).expect("u != 0");
    let p = rational_point(&params);
    let want = AffinePoint3::new(rat(9, 7), rat(15, 14), rat(23, 14));
    out.push(
        Certificate::new(Subject::Claim("u = 2, r = 1/3 gives (9/7, 15/14, 23/14)".into())).check(
            "generator output",
            p == want,
            Some(point_string(&p)),
        ),
    );

    let mut mismatched = None;
    let mut count = 0;
    for prm in random_rational_params(cfg.roundtrips, cfg.seed) {
        let p = rational_point(&prm);
        let ok = match family_membership(&p) {
            Ok(MembershipResult::InFamily { u, r }) => RationalParams::new(u, r)
                .map(|q| rational_point(&q) == p)
                .unwrap_or(false),
            _ => false,
        };
        count += usize::from(ok);
        if !ok && mismatched.is_none() {
            mismatched = Some(format!(
                "u = {}, r = {}",
                format_rational(prm.u()),
                format_rational(prm.r())
            ));
        }
    }
    out.push(
        Certificate::new(Subject::Claim(format!(
            "{} random family points round-trip through membership",
            cfg.roundtrips
        )))
        .check(
            "all reconstructed",
            count == cfg.roundtrips,
            Some(mismatched.unwrap_or_else(|| format!("{count} of {}", cfg.roundtrips))),
        ),
    );

    let odd = AffinePoint3::new(rat(18, 7), rat(16, 7), rat(15, 7));
    let member = family_membership(&odd);
    out.push(
        Certificate::new(Subject::Point(point_string(&odd)))
            .check("on surface", member.is_ok(), None)
            .check(
                "not in family, sum not a square",
                member
                    == Ok(MembershipResult::NotInFamily(
                        NotInFamilyReason::SumNotARationalSquare,
                    )),
                Some("x + y + z = 7".into()),
            ),
    );
    out
}

fn point_string(p: &AffinePoint3<Rational>) -> String {
    format!(
        "({}, {}, {})",
        format_rational(&p.x),
        format_rational(&p.y),
        format_rational(&p.z)
    )
}

fn mesh_certificate() -> Result<Certificate> {
    let cfg = MeshConfig::default();
    let mesh = build_mesh(&cfg)?;
    let max = mesh.max_residual();
    Ok(Certificate::new(Subject::Claim("default mesh".into()))
        .check(
            "vertex count",
            mesh.vertices.len() == cfg.vertex_count(),
            Some(mesh.vertices.len().to_string()),
        )
        .check(
            "triangle count",
            mesh.triangles.len() == cfg.triangle_count(),
            Some(mesh.triangles.len().to_string()),
        )
        .check("seam welded", mesh.seam_welded(), None)
        .check("max |F| <= 1e-6", max <= 1e-6, Some(format!("{max:.3e}"))))
}

/// Runs every check with `rho` as the family coefficient for the numeric
/// surface checks.
pub fn verify_all(rho: f64) -> Result<SuiteReport> {
    verify_all_with(&SuiteConfig {
        rho,
        ..SuiteConfig::default()
    })
}

pub fn verify_all_with(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut certificates = vec![verify_factorization()];
    let samples = log_uniform_params(cfg.param_samples, cfg.seed);
    certificates.push(param_certificate(&samples, cfg.rho, cfg.tol));
    certificates.push(rotation_certificate(&samples, cfg.tol));
    certificates.push(invariance_certificate(cfg)?);
    for name in ["hcubic", "canon", "rotated-scaled"] {
        certificates.extend(singular_catalog(name)?.certificates());
    }
    certificates.push(canonical_equivalence_certificate());
    match lines_at_infinity() {
        Ok(lines) => certificates.extend(lines.certificates),
        Err(e) => certificates.push(
            Certificate::new(Subject::Claim("lines at infinity".into())).check(
                "contained",
                false,
                Some(e.to_string()),
            ),
        ),
    }
    for scalar in [LineScalar::Rational, LineScalar::Gaussian] {
        let rep = finite_line_rejection(cfg.line_trials, cfg.seed, scalar)?;
        certificates.push(
            Certificate::new(Subject::Claim(format!(
                "no finite {scalar:?} line lies on xyz = 1"
            ).to_lowercase()))
            .check("no contained line", rep.contained == 0, Some(format!("{} tested, {} degenerate", rep.tested, rep.degenerate)))
            .check(
                "leading coefficient is (A-a)(B-b)(C-c)",
                rep.identity_mismatches == 0,
                Some(rep.identity_mismatches.to_string()),
            ),
        );
    }
    certificates.extend(rational_certificates(cfg));
    certificates.push(mesh_certificate()?);
    let passed = certificates.iter().all(Certificate::passed);
    Ok(SuiteReport {
        config: *cfg,
        passed,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_the_revolution_surface() {
        let cfg = SuiteConfig {
            param_samples: 500,
            line_trials: 200,
            roundtrips: 50,
            invariance_samples: 100,
            ..SuiteConfig::default()
        };
        let rep = verify_all_with(&cfg).unwrap();
        let bad: Vec<String> = rep.failures().map(Certificate::to_json).collect();
        assert!(rep.passed, "{bad:?}");
    }

    #[test]
    fn perturbed_rho_fails_with_witness() {
        let cfg = SuiteConfig {
            rho: 2.999,
            param_samples: 500,
            line_trials: 10,
            roundtrips: 5,
            invariance_samples: 100,
            ..SuiteConfig::default()
        };
        let rep = verify_all_with(&cfg).unwrap();
        assert!(!rep.passed);
        let fails: Vec<_> = rep.failures().collect();
        assert!(fails.iter().any(|c| c.to_json().contains("invariant under rotation")));
        assert!(fails.iter().all(|c| c.checks.iter().all(|k| k.passed() || k.witness.is_some())));
    }

    #[test]
    fn samples_cover_the_range() {
        let s = log_uniform_params(10_000, 42);
        assert!(s.iter().all(|p| p.t() > 0.0 && p.t() <= T_SAMPLE_MAX));
        assert!(s.iter().any(|p| p.t() < 2e-3));
        assert!(s.iter().any(|p| p.t() > 50.0));
        assert_eq!(s, log_uniform_params(10_000, 42));
    }
}
