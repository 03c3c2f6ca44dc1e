use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

/// A point of projective 3-space in coordinates `(w, x, y, z)`.
///
/// Equality is up to a nonzero scalar multiple.
#[derive(Clone, Debug)]
pub struct ProjectivePoint4<S> {
    coords: [S; 4],
}

impl<S: Scalar> ProjectivePoint4<S> {
    pub fn new(coords: [S; 4]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        Ok(Self { coords })
    }

    /// The affine point `(1, x, y, z)`.
    pub fn affine(x: S, y: S, z: S) -> Self {
        Self {
            coords: [S::one(), x, y, z],
        }
    }

    pub fn coords(&self) -> &[S; 4] {
        &self.coords
    }

    pub fn into_coords(self) -> [S; 4] {
        self.coords
    }

    pub fn scaled(&self, k: &S) -> Result<Self> {
        Self::new(std::array::from_fn(|i| self.coords[i].clone() * k.clone()))
    }

    /// Representative whose coordinate `idx` equals one. `None` if it is zero.
    pub fn normalized_at(&self, idx: usize) -> Option<Self> {
        let k = self.coords[idx].inv()?;
        Some(Self {
            coords: std::array::from_fn(|i| self.coords[i].clone() * k.clone()),
        })
    }

    pub fn first_nonzero(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("projective point is nonzero")
    }

    /// Whether the two coordinate vectors are proportional.
    pub fn same_point(&self, other: &Self) -> bool {
        (0..4).all(|i| {
            (i + 1..4).all(|j| {
                self.coords[i].clone() * other.coords[j].clone()
                    == self.coords[j].clone() * other.coords[i].clone()
            })
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ProjectivePoint4<T> {
        ProjectivePoint4 {
            coords: std::array::from_fn(|i| f(&self.coords[i])),
        }
    }
}

impl<S: Scalar> PartialEq for ProjectivePoint4<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other)
    }
}

/// The line joining two distinct projective points.
#[derive(Clone, Debug)]
pub struct ProjectiveLine<S> {
    p: ProjectivePoint4<S>,
    q: ProjectivePoint4<S>,
}

impl<S: Scalar> ProjectiveLine<S> {
    pub fn new(p: ProjectivePoint4<S>, q: ProjectivePoint4<S>) -> Result<Self> {
        if p.same_point(&q) {
            return Err(Error::DegenerateLine);
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &ProjectivePoint4<S> {
        &self.p
    }

    pub fn q(&self) -> &ProjectivePoint4<S> {
        &self.q
    }

    pub fn contains_point(&self, r: &ProjectivePoint4<S>) -> bool {
        let rows = vec![
            self.p.coords.to_vec(),
            self.q.coords.to_vec(),
            r.coords.to_vec(),
        ];
        linalg::rank(&rows) == 2
    }

    /// Same set of points, regardless of the chosen spanning pair.
    pub fn same_line(&self, other: &Self) -> bool {
        self.contains_point(&other.p) && self.contains_point(&other.q)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ProjectiveLine<T> {
        ProjectiveLine {
            p: self.p.map(&f),
            q: self.q.map(&f),
        }
    }
}

/// A change of variables `v = M v'`: each old variable is replaced by the
/// corresponding row of `M` applied to the new variables.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSubstitution<S> {
    matrix: [[S; 4]; 4],
}

impl<S: Scalar> LinearSubstitution<S> {
    /// Rejects a singular matrix (exact zero determinant).
    pub fn new(matrix: [[S; 4]; 4]) -> Result<Self> {
        if linalg::inverse4(&matrix).is_none() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { matrix })
    }

    pub fn identity() -> Self {
        Self {
            matrix: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { S::one() } else { S::zero() })
            }),
        }
    }

    pub fn matrix(&self) -> &[[S; 4]; 4] {
        &self.matrix
    }

    pub fn row(&self, i: usize) -> [S; 4] {
        self.matrix[i].clone()
    }

    pub fn determinant(&self) -> S {
        linalg::inverse4(&self.matrix).expect("invertible").0
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: linalg::inverse4(&self.matrix).expect("invertible").1,
        }
    }

    /// `M v`.
    pub fn apply(&self, v: &[S; 4]) -> [S; 4] {
        std::array::from_fn(|i| {
            (0..4).fold(S::zero(), |acc, j| acc + self.matrix[i][j].clone() * v[j].clone())
        })
    }
}
