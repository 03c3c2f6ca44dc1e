use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Zero};
use rayon::prelude::*;

use super::{rational_roots_cubic, RationalPoint3};
use crate::error::{Error, Result};
use crate::scalar::{height, Rational};
use crate::surface::{on_surface_exact, AffinePoint3};

/// Every reduced rational `a/b` with `max(|a|, b) <= bound`, ascending.
pub fn reduced_rationals(bound: u64) -> Vec<Rational> {
    let bound = bound as i64;
    let mut out = vec![Rational::zero()];
    for b in 1..=bound {
        for a in 1..=bound {
            if a.gcd(&b) == 1 {
                let q = Rational::new(a.into(), b.into());
                out.push(-q.clone());
                out.push(q);
            }
        }
    }
    out.sort();
    out
}

/// Largest coordinate height of the point.
pub fn point_height(p: &RationalPoint3) -> BigInt {
    [&p.x, &p.y, &p.z]
        .into_iter()
        .map(height)
        .max()
        .expect("three coordinates")
}

/// The surface points above `(x, y)`: rational roots of
/// `z^3 - 3xy z + (x^3 + y^3 - 1)`, each checked on the surface.
pub fn points_over(x: &Rational, y: &Rational) -> Vec<RationalPoint3> {
    let a1 = -(Rational::from_integer(3.into()) * x * y);
    let a0 = x * x * x + y * y * y - Rational::one();
    rational_roots_cubic(&Rational::one(), &Rational::zero(), &a1, &a0)
        .expect("monic")
        .into_iter()
        .map(|z| AffinePoint3::new(x.clone(), y.clone(), z))
        .filter(on_surface_exact)
        .collect()
}

/// All rational points `(x, y, z)` with `height(x), height(y) <= bound`,
/// found by solving the surface cubic for `z`. `z` is not height-filtered.
/// Output is sorted lexicographically and verified on the surface exactly.
pub fn enumerate_points(height_bound: u64) -> Result<Vec<RationalPoint3>> {
    if height_bound == 0 {
        return Err(Error::InvalidConfig("height bound must be at least 1".into()));
    }
    let values = reduced_rationals(height_bound);
    let mut points: Vec<RationalPoint3> = values
        .par_iter()
        .flat_map_iter(|x| values.iter().flat_map(move |y| points_over(x, y)))
        .collect();
    points.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
    points.dedup();
    Ok(points)
}
