//! The named cubic forms, homogenized with `w`.

use super::{CubicForm4, Form4, W, X, Y, Z};
use crate::scalar::Scalar;

fn mono<S: Scalar>(e: [u8; 4], c: i64) -> ([u8; 4], S) {
    (e, S::from_int(c))
}

/// `x^3 + y^3 + z^3 - rho*x*y*z - w^3`, whose `w = 1` view is the family
/// `x^3 + y^3 + z^3 - rho*xyz = 1`.
pub fn family<S: Scalar>(rho: S) -> CubicForm4<S> {
    Form4::from_terms(
        3,
        [
            mono(e(X, X, X), 1),
            mono(e(Y, Y, Y), 1),
            mono(e(Z, Z, Z), 1),
            mono(e(W, W, W), -1),
            ([0, 1, 1, 1], -rho),
        ],
    )
    .expect("cubic terms")
}

/// `x^3 + y^3 + z^3 - 3xyz - w^3`.
pub fn hcubic<S: Scalar>() -> CubicForm4<S> {
    family(S::from_int(3))
}

/// `XYZ + W^3`, the canonical form with three binodes.
pub fn canon<S: Scalar>() -> CubicForm4<S> {
    Form4::from_terms(3, [mono([0, 1, 1, 1], 1), mono([3, 0, 0, 0], 1)]).expect("cubic terms")
}

/// `z(x^2 + y^2) - w^3`, the rotated surface with `w` rescaled so that all
/// coefficients are rational.
pub fn rotated_scaled<S: Scalar>() -> CubicForm4<S> {
    Form4::from_terms(
        3,
        [
            mono(e(X, X, Z), 1),
            mono(e(Y, Y, Z), 1),
            mono(e(W, W, W), -1),
        ],
    )
    .expect("cubic terms")
}

/// `z(x^2 + y^2) - k w^3` for an arbitrary constant `k`.
pub fn rotated_with_constant<S: Scalar>(k: S) -> CubicForm4<S> {
    Form4::from_terms(
        3,
        [mono(e(X, X, Z), 1), mono(e(Y, Y, Z), 1), (e(W, W, W), -k)],
    )
    .expect("cubic terms")
}

/// Exponent tuple of the product of the listed variables.
pub fn e(a: usize, b: usize, c: usize) -> [u8; 4] {
    let mut out = [0u8; 4];
    out[a] += 1;
    out[b] += 1;
    out[c] += 1;
    out
}
