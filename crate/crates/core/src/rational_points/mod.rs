//! Rational points from Pythagorean-style angle parameters.
//!
//! Substituting `t = u^2` and the rational pair
//! `(s, c) = (2r/(r^2 + 3), (r^2 - 3)/(r^2 + 3))` for the angle in the surface
//! parametrization cancels every square root:
//!
//! ```text
//! x = u^2/3 + c/(3u) + s/u
//! y = u^2/3 + c/(3u) - s/u
//! z = u^2/3 - 2c/(3u)
//! ```
//!
//! `s` stands for `sin(theta)/sqrt(3)`, so the pair satisfies `3 s^2 + c^2 = 1`.
//! Not every rational point arises this way; [`family_membership`] decides it
//! by inverting the formulas directly.

mod enumerate;
mod io;
mod roots;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, rat_sqrt, Rational};
use crate::surface::{on_surface_exact, AffinePoint3};

pub use enumerate::{enumerate_points, point_height, points_over, reduced_rationals};
pub use io::{points_to_csv, points_to_json, PointRecord};
pub use roots::rational_roots_cubic;

pub type RationalPoint3 = AffinePoint3<Rational>;

/// Generator parameters; `u != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalParams {
    u: Rational,
    r: Rational,
}

impl RationalParams {
    pub fn new(u: Rational, r: Rational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroU);
        }
        Ok(Self { u, r })
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(s, c) = (2r/(r^2 + 3), (r^2 - 3)/(r^2 + 3))`.
pub fn pyth_pair(r: &Rational) -> (Rational, Rational) {
    let r2 = r * r;
    let den = &r2 + q(3);
    let s = (r * q(2)) / &den;
    let c = (r2 - q(3)) / den;
    (s, c)
}

pub fn rational_point(p: &RationalParams) -> RationalPoint3 {
    let (s, c) = pyth_pair(&p.r);
    let u = &p.u;
    let base = u * u / q(3);
    let a = &c / (u * q(3));
    let b = &s / u;
    AffinePoint3::new(
        &base + &a + &b,
        &base + &a - &b,
        base - a * q(2),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotInFamilyReason {
    SumNotARationalSquare,
    RSquaredNotARationalSquare,
    ReconstructionMismatch,
}

impl NotInFamilyReason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SumNotARationalSquare => "sum-not-a-rational-square",
            Self::RSquaredNotARationalSquare => "r-squared-not-a-rational-square",
            Self::ReconstructionMismatch => "reconstruction-mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipResult {
    InFamily { u: Rational, r: Rational },
    /// `c = 1`, the angle no finite `r` reaches.
    LimitPoint { u: Rational },
    NotInFamily(NotInFamilyReason),
}

impl MembershipResult {
    pub fn is_in_family(&self) -> bool {
        matches!(self, Self::InFamily { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Self::InFamily { .. } => "in-family",
            Self::LimitPoint { .. } => "limit-point",
            Self::NotInFamily(_) => "not-in-family",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Self::InFamily { u, r } => serde_json::json!({
                "status": self.status(),
                "u": format_rational(u),
                "r": format_rational(r),
            }),
            Self::LimitPoint { u } => serde_json::json!({
                "status": self.status(),
                "u": format_rational(u),
            }),
            Self::NotInFamily(reason) => serde_json::json!({
                "status": self.status(),
                "reason": reason.as_str(),
            }),
        }
    }
}

enum Attempt {
    Found(Rational, Rational),
    Limit(Rational),
    Fail(NotInFamilyReason),
}

fn try_sign(p: &RationalPoint3, u: Rational) -> Attempt {
    // z = u^2/3 - 2c/(3u)  =>  c = (u^2/3 - z) * 3u/2
    let c = (&u * &u / q(3) - &p.z) * (&u * q(3)) / q(2);
    if c.is_one() {
        return Attempt::Limit(u);
    }
    // c = (r^2 - 3)/(r^2 + 3)  =>  r^2 = 3(1 + c)/(1 - c)
    let r2 = (Rational::one() + &c) * q(3) / (Rational::one() - &c);
    if r2.is_negative() {
        return Attempt::Fail(NotInFamilyReason::RSquaredNotARationalSquare);
    }
    let Some(mut r) = rat_sqrt(&r2).expect("nonnegative") else {
        return Attempt::Fail(NotInFamilyReason::RSquaredNotARationalSquare);
    };
    // x - y = 2s/u has the sign of r * u
    let diff = &p.x - &p.y;
    if (diff.is_negative()) != (u.is_negative()) && !diff.is_zero() {
        r = -r;
    }
    let params = RationalParams::new(u.clone(), r.clone()).expect("u != 0");
    if rational_point(&params) == *p {
        Attempt::Found(u, r)
    } else {
        Attempt::Fail(NotInFamilyReason::ReconstructionMismatch)
    }
}

/// Decides whether an on-surface rational point is `rational_point(u, r)` for
/// some rational `u != 0` and `r`. Positive `u` is preferred when both signs
/// work.
pub fn family_membership(p: &RationalPoint3) -> Result<MembershipResult> {
    if !on_surface_exact(p) {
        return Err(Error::OffSurface);
    }
    let t = &p.x + &p.y + &p.z;
    let Some(root) = rat_sqrt(&t).ok().flatten() else {
        return Ok(MembershipResult::NotInFamily(
            NotInFamilyReason::SumNotARationalSquare,
        ));
    };
    let mut limit = None;
    let mut reason = NotInFamilyReason::RSquaredNotARationalSquare;
    for u in [root.clone(), -root] {
        match try_sign(p, u) {
            Attempt::Found(u, r) => return Ok(MembershipResult::InFamily { u, r }),
            Attempt::Limit(u) => limit = limit.or(Some(u)),
            Attempt::Fail(NotInFamilyReason::ReconstructionMismatch) => {
                reason = NotInFamilyReason::ReconstructionMismatch
            }
            Attempt::Fail(_) => {}
        }
    }
    Ok(match limit {
        Some(u) => MembershipResult::LimitPoint { u },
        None => MembershipResult::NotInFamily(reason),
    })
}
