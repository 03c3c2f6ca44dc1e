//! Numeric test of rotational symmetry about the axis `x = y = z` for the
//! family `x^3 + y^3 + z^3 - rho*xyz = 1`.
//!
//! Points are found by bisection along random rays from the origin (where the
//! cubic equals `-1`), then rotated by random angles about the axis. For a
//! surface of revolution about that axis the rotated points stay on the
//! surface; otherwise some sample leaves it and becomes the witness.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{f_eval, scaled_residual, AffinePoint3};
use crate::error::{Error, Result};

const BISECTION_TOL: f64 = 1e-13;
const MAX_RAY_LENGTH: f64 = 1e6;
const ATTEMPTS_PER_SAMPLE: usize = 50;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvarianceConfig {
    pub rho: f64,
    pub n_samples: usize,
    pub tol: f64,
    pub seed: u64,
    /// Rotate every sample by this angle instead of a random one.
    pub fixed_angle: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvarianceWitness {
    pub point: [f64; 3],
    pub angle: f64,
    pub rotated: [f64; 3],
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub rho: f64,
    pub tol: f64,
    pub seed: u64,
    pub requested: usize,
    pub accepted: usize,
    /// Rays on which no root was bracketed.
    pub skipped: usize,
    /// Largest scaled residual `|f| / scale` over the rotated samples.
    pub max_residual: f64,
    /// The sample attaining `max_residual`.
    pub witness: Option<InvarianceWitness>,
    pub invariant: bool,
}

/// Rodrigues rotation of `p` by `angle` about the unit axis `(1, 1, 1)/sqrt(3)`.
pub fn rotate_about_axis(p: &AffinePoint3<f64>, angle: f64) -> AffinePoint3<f64> {
    let n = 1.0 / 3f64.sqrt();
    let v = [p.x, p.y, p.z];
    let (s, c) = angle.sin_cos();
    let dot = n * (v[0] + v[1] + v[2]);
    let cross = [n * (v[2] - v[1]), n * (v[0] - v[2]), n * (v[1] - v[0])];
    let out: [f64; 3] = std::array::from_fn(|i| v[i] * c + cross[i] * s + n * dot * (1.0 - c));
    AffinePoint3::from_array(out)
}

/// Root of `f_eval(s * dir, rho)` for `s > 0`, by bracketing and bisection.
/// `None` if no sign change is found before the ray leaves the search box.
pub fn solve_on_ray(dir: [f64; 3], rho: f64) -> Option<AffinePoint3<f64>> {
    let at = |s: f64| AffinePoint3::new(s * dir[0], s * dir[1], s * dir[2]);
    let g = |s: f64| f_eval(&at(s), &rho);
    // g(0) = -1
    let mut lo = 0.0;
    let mut hi = 1.0;
    while g(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > MAX_RAY_LENGTH {
            return None;
        }
    }
    for _ in 0..400 {
        if hi - lo <= BISECTION_TOL * hi.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(at(0.5 * (lo + hi)))
}

fn random_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n2 = v.iter().map(|c| c * c).sum::<f64>();
        if n2 > 1e-6 && n2 <= 1.0 {
            let n = n2.sqrt();
            return v.map(|c| c / n);
        }
    }
}

pub fn revolution_invariance_test(
    rho: f64,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<InvarianceReport> {
    revolution_invariance_test_with(&InvarianceConfig {
        rho,
        n_samples,
        tol,
        seed,
        fixed_angle: None,
    })
}

pub fn revolution_invariance_test_with(cfg: &InvarianceConfig) -> Result<InvarianceReport> {
    if cfg.n_samples == 0 {
        return Err(Error::InvalidConfig("n_samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut accepted = 0;
    let mut skipped = 0;
    let mut max_residual = 0.0f64;
    let mut witness = None;
    let max_attempts = cfg.n_samples * ATTEMPTS_PER_SAMPLE;
    while accepted < cfg.n_samples && accepted + skipped < max_attempts {
        let dir = random_direction(&mut rng);
        let angle = rng.gen_range(0.0..TAU);
        let Some(p) = solve_on_ray(dir, cfg.rho) else {
            skipped += 1;
            continue;
        };
        accepted += 1;
        let angle = cfg.fixed_angle.unwrap_or(angle);
        let q = rotate_about_axis(&p, angle);
        let residual = scaled_residual(&q, cfg.rho);
        if witness.is_none() || residual > max_residual {
            max_residual = residual;
            witness = Some(InvarianceWitness {
                point: p.to_array(),
                angle,
                rotated: q.to_array(),
                residual,
            });
        }
    }
    Ok(InvarianceReport {
        rho: cfg.rho,
        tol: cfg.tol,
        seed: cfg.seed,
        requested: cfg.n_samples,
        accepted,
        skipped,
        max_residual,
        witness,
        invariant: accepted > 0 && max_residual <= cfg.tol,
    })
}
