//! Exact and numeric toolkit for the cubic surface of revolution
//!
//! ```text
//! x^3 + y^3 + z^3 - 3xyz = 1
//! ```
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: exact rationals, Eisenstein and Gaussian rationals, and the
//!   double-precision adapters.
//! * [`poly`]: dense homogeneous forms in `(w, x, y, z)` of degree at most 3,
//!   projective points and lines, linear substitutions.
//! * [`surface`]: slice circles, the meridian, the `(t, theta)`
//!   parametrization, the rotation to the canonical axis and the
//!   revolution-invariance test for the family `x^3 + y^3 + z^3 - rho*xyz = 1`.
//! * [`singular`]: singular points, binode classification and line
//!   containment.
//! * [`rational_points`]: the `(u, r)` rational-point generator, its inverse
//!   and a height-bounded enumeration oracle.
//! * [`mesh`] and [`suite`]: OBJ export and the full certificate suite used by
//!   the command-line tool.
//!
//! The guide in `book/` walks through the mathematics; every snippet in it is
//! compiled and run as a doctest of this crate.

pub mod certificate;
pub mod error;
mod linalg;
pub mod mesh;
pub mod poly;
pub mod rational_points;
pub mod scalar;
pub mod singular;
pub mod suite;
pub mod surface;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/revolution.md")]
    mod revolution {}
    #[doc = include_str!("../../../book/src/singularities.md")]
    mod singularities {}
    #[doc = include_str!("../../../book/src/lines.md")]
    mod lines {}
    #[doc = include_str!("../../../book/src/rational_points.md")]
    mod rational_points {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
