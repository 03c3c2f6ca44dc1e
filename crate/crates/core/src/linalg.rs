//! Small dense linear algebra over any [`Scalar`].

use crate::scalar::Scalar;

fn pivot_row<S: Scalar>(m: &[Vec<S>], col: usize, from: usize) -> Option<usize> {
    if S::is_exact() {
        (from..m.len()).find(|&r| !m[r][col].is_zero())
    } else {
        (from..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].magnitude().total_cmp(&m[b][col].magnitude()))
    }
}

/// Rank by fraction-free (Bareiss) elimination. Exact for exact scalars.
pub(crate) fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut prev = S::one();
    let mut r = 0;
    for col in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = pivot_row(&m, col, r) else {
            continue;
        };
        m.swap(r, p);
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in (r + 1)..n_rows {
            for j in (col + 1)..n_cols {
                let v = (m[r][col].clone() * m[i][j].clone()
                    - m[i][col].clone() * m[r][j].clone())
                    * prev_inv.clone();
                m[i][j] = v;
            }
            m[i][col] = S::zero();
        }
        prev = m[r][col].clone();
        r += 1;
    }
    r
}

/// Determinant by cofactor expansion of a 3x3 matrix.
pub(crate) fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    let c = |i: usize, j: usize| m[i][j].clone();
    c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1))
        - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0))
        + c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0))
}

/// Determinant and inverse of a 4x4 matrix by Gauss-Jordan elimination.
/// Returns `None` for a singular matrix.
pub(crate) fn inverse4<S: Scalar>(m: &[[S; 4]; 4]) -> Option<(S, [[S; 4]; 4])> {
    let mut a: Vec<Vec<S>> = m.iter().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<S>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    let mut det = S::one();
    for col in 0..4 {
        let p = pivot_row(&a, col, col)?;
        if p != col {
            a.swap(p, col);
            inv.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = det * piv.clone();
        let piv_inv = piv.inv()?;
        for j in 0..4 {
            a[col][j] = a[col][j].clone() * piv_inv.clone();
            inv[col][j] = inv[col][j].clone() * piv_inv.clone();
        }
        for i in 0..4 {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..4 {
                a[i][j] = a[i][j].clone() - f.clone() * a[col][j].clone();
                inv[i][j] = inv[i][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    let out = std::array::from_fn(|i| std::array::from_fn(|j| inv[i][j].clone()));
    Some((det, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        assert_eq!(rank(&m), 2);
        let z = vec![vec![r(0); 3]; 3];
        assert_eq!(rank(&z), 0);
        let id = vec![vec![r(1), r(0)], vec![r(0), r(1)]];
        assert_eq!(rank(&id), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = [
            [r(2), r(0), r(1), r(0)],
            [r(1), r(1), r(0), r(0)],
            [r(0), r(3), r(1), r(1)],
            [r(0), r(0), r(0), r(1)],
        ];
        let (det, inv) = inverse4(&m).unwrap();
        assert_eq!(det, det_by_permutations(&m));
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = r(0);
                for k in 0..4 {
                    acc += &m[i][k] * &inv[k][j];
                }
                assert_eq!(acc, if i == j { r(1) } else { r(0) });
            }
        }
        let mut sing = m.clone();
        sing[3] = sing[0].clone();
        assert!(inverse4(&sing).is_none());
    }

    fn det_by_permutations(m: &[[Rational; 4]; 4]) -> Rational {
        let mut total = r(0);
        let idx = [0usize, 1, 2, 3];
        for a in idx {
            for b in idx {
                for c in idx {
                    for d in idx {
                        let p = [a, b, c, d];
                        let mut seen = [false; 4];
                        if p.iter().any(|&k| std::mem::replace(&mut seen[k], true)) {
                            continue;
                        }
                        let inversions = (0..4)
                            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
                            .filter(|&(i, j)| p[i] > p[j])
                            .count();
                        let mut term = r(if inversions % 2 == 0 { 1 } else { -1 });
                        for (row, &col) in p.iter().enumerate() {
                            term *= &m[row][col];
                        }
                        total += term;
                    }
                }
            }
        }
        total
    }
}
