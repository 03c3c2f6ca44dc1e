//! Triangle mesh of the surface over a `(t, theta)` grid, written as OBJ.
//!
//! `t` is log-spaced on `[t_min, t_max]` and `theta_j = 2 pi j / n_theta`.
//! The seam at `theta = 2 pi` reuses the `theta = 0` vertices, so the mesh is
//! a closed band with `n_t * n_theta` vertices and
//! `2 (n_t - 1) n_theta` triangles.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{f_eval, param, AffinePoint3, SurfaceParams};

pub const DEFAULT_T_MIN: f64 = 0.2;
pub const DEFAULT_T_MAX: f64 = 8.0;
pub const DEFAULT_N: usize = 96;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeshConfig {
    pub t_min: f64,
    pub t_max: f64,
    pub n_t: usize,
    pub n_theta: usize,
}

impl Default for MeshConfig {
    fn default() -> Self {
        Self {
            t_min: DEFAULT_T_MIN,
            t_max: DEFAULT_T_MAX,
            n_t: DEFAULT_N,
            n_theta: DEFAULT_N,
        }
    }
}

impl MeshConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_min.is_finite() && self.t_max.is_finite()) || self.t_min <= 0.0 {
            return Err(Error::NonPositiveT(self.t_min.to_string()));
        }
        if self.t_min >= self.t_max {
            return Err(Error::InvalidConfig(format!(
                "t_min ({}) must be below t_max ({})",
                self.t_min, self.t_max
            )));
        }
        if self.n_t < 2 || self.n_theta < 2 {
            return Err(Error::InvalidConfig("n_t and n_theta must be at least 2".into()));
        }
        Ok(())
    }

    /// Log-spaced values, ending exactly at `t_max`.
    pub fn t_values(&self) -> Vec<f64> {
        let ratio = (self.t_max / self.t_min).ln();
        let last = (self.n_t - 1) as f64;
        (0..self.n_t)
            .map(|i| {
                if i + 1 == self.n_t {
                    self.t_max
                } else {
                    self.t_min * (ratio * i as f64 / last).exp()
                }
            })
            .collect()
    }

    pub fn theta_values(&self) -> Vec<f64> {
        (0..self.n_theta)
            .map(|j| TAU * j as f64 / self.n_theta as f64)
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.n_t * self.n_theta
    }

    pub fn triangle_count(&self) -> usize {
        2 * (self.n_t - 1) * self.n_theta
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub config: MeshConfig,
    /// t-major: vertex `i * n_theta + j` sits at `(t_i, theta_j)`.
    pub vertices: Vec<AffinePoint3<f64>>,
    /// Zero-based, counter-clockwise in `(theta, t)`.
    pub triangles: Vec<[usize; 3]>,
}

impl Mesh {
    /// Largest `|F|` over the vertices.
    pub fn max_residual(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| f_eval(v, &3.0).abs())
            .fold(0.0, f64::max)
    }

    /// Every triangle index in range and no index equal to `n_t * n_theta`
    /// or beyond, i.e. the seam closes on existing vertices.
    pub fn seam_welded(&self) -> bool {
        let n = self.config.n_theta;
        let n_v = self.vertices.len();
        self.triangles.iter().all(|t| t.iter().all(|&i| i < n_v))
            && (0..self.config.n_t - 1).all(|i| {
                let last = i * n + n - 1;
                let first = i * n;
                self.triangles
                    .iter()
                    .any(|t| t.contains(&last) && t.contains(&first))
            })
    }

    pub fn to_obj(&self) -> String {
        let mut out = String::with_capacity(self.vertices.len() * 72 + self.triangles.len() * 24);
        for v in &self.vertices {
            writeln!(out, "v {:.16e} {:.16e} {:.16e}", v.x, v.y, v.z).expect("string write");
        }
        for t in &self.triangles {
            writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).expect("string write");
        }
        out
    }
}

pub fn build_mesh(config: &MeshConfig) -> Result<Mesh> {
    config.validate()?;
    let ts = config.t_values();
    let thetas = config.theta_values();
    let n = config.n_theta;
    let vertices = (0..config.vertex_count())
        .into_par_iter()
        .map(|k| SurfaceParams::new(ts[k / n], thetas[k % n]).map(param))
        .collect::<Result<Vec<_>>>()?;
    let mut triangles = Vec::with_capacity(config.triangle_count());
    for i in 0..config.n_t - 1 {
        for j in 0..n {
            let a = i * n + j;
            let b = i * n + (j + 1) % n;
            let c = a + n;
            let d = b + n;
            triangles.push([a, b, d]);
            triangles.push([a, d, c]);
        }
    }
    Ok(Mesh {
        config: *config,
        vertices,
        triangles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_band_counts() {
        let cfg = MeshConfig {
            t_min: 1.0,
            t_max: 4.0,
            n_t: 2,
            n_theta: 3,
        };
        let m = build_mesh(&cfg).unwrap();
        assert_eq!(m.vertices.len(), 6);
        assert_eq!(m.triangles.len(), 6);
        assert!(m.seam_welded());
        assert_eq!(cfg.t_values(), vec![1.0, 4.0]);
        let obj = m.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 6);
        assert!(obj.contains("f 3 1 4\n"));
    }

    #[test]
    fn default_grid() {
        let m = build_mesh(&MeshConfig::default()).unwrap();
        assert_eq!(m.vertices.len(), 96 * 96);
        assert_eq!(m.triangles.len(), 2 * 95 * 96);
        assert!(m.max_residual() <= 1e-6);
        assert!(m.seam_welded());
        assert_eq!(m.to_obj(), build_mesh(&MeshConfig::default()).unwrap().to_obj());
    }

    #[test]
    fn geometric_spacing() {
        let ts = MeshConfig::default().t_values();
        let r0 = ts[1] / ts[0];
        for w in ts.windows(2) {
            assert!((w[1] / w[0] - r0).abs() < 1e-12);
        }
        assert_eq!(ts[0], DEFAULT_T_MIN);
        assert_eq!(*ts.last().unwrap(), DEFAULT_T_MAX);
    }

    #[test]
    fn invalid_grids() {
        let base = MeshConfig::default();
        for cfg in [
            MeshConfig { t_min: 0.0, ..base },
            MeshConfig { t_min: -1.0, ..base },
            MeshConfig { t_min: 9.0, ..base },
            MeshConfig { n_t: 1, ..base },
            MeshConfig { n_theta: 1, ..base },
            MeshConfig { t_max: f64::INFINITY, ..base },
        ] {
            assert!(build_mesh(&cfg).is_err(), "{cfg:?}");
        }
    }
}
