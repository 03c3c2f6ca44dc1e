//! The rotation taking the axis `x = y = z` to the `Z` axis, the plane
//! `x + y + z = 0` to the `XY` plane and the line `x + y = 0, z = 0` to the
//! `X` axis. In the new coordinates the surface reads
//! `3 sqrt(3) Z (X^2 + Y^2) = 2`.

use super::AffinePoint3;

/// Columns are the images of the `X`, `Y` and `Z` axes: `(x, y, z) = R (X, Y, Z)`.
pub fn rotation_matrix() -> [[f64; 3]; 3] {
    let (s2, s3, s6) = (2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt());
    [
        [1.0 / s2, 1.0 / s6, 1.0 / s3],
        [-1.0 / s2, 1.0 / s6, 1.0 / s3],
        [0.0, -2.0 / s6, 1.0 / s3],
    ]
}

/// `(X, Y, Z) = R^T (x, y, z)`.
pub fn to_rotated(p: &AffinePoint3<f64>) -> AffinePoint3<f64> {
    let r = rotation_matrix();
    let v = [p.x, p.y, p.z];
    let col = |j: usize| (0..3).map(|i| r[i][j] * v[i]).sum::<f64>();
    AffinePoint3::new(col(0), col(1), col(2))
}

/// `(x, y, z) = R (X, Y, Z)`.
pub fn from_rotated(p: &AffinePoint3<f64>) -> AffinePoint3<f64> {
    let r = rotation_matrix();
    let v = [p.x, p.y, p.z];
    let row = |i: usize| (0..3).map(|j| r[i][j] * v[j]).sum::<f64>();
    AffinePoint3::new(row(0), row(1), row(2))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CanonicalResidual {
    Value(f64),
    /// `X^2 + Y^2 = 0`; the surface has no points on its axis.
    OnAxis,
}

impl CanonicalResidual {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Value(v) => Some(v),
            Self::OnAxis => None,
        }
    }
}

/// `3 sqrt(3) Z (X^2 + Y^2) - 2` for a point given in rotated coordinates.
pub fn canonical_residual(p: &AffinePoint3<f64>) -> CanonicalResidual {
    let rho_sq = p.x * p.x + p.y * p.y;
    let floor = f64::EPSILON * p.z.abs().max(1.0);
    if rho_sq <= floor * floor {
        return CanonicalResidual::OnAxis;
    }
    CanonicalResidual::Value(p.z * 3.0 * 3f64.sqrt() * rho_sq - 2.0)
}
