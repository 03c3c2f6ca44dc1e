use serde::Serialize;

use super::{family_membership, point_height, RationalPoint3};
use crate::scalar::format_rational;

/// CSV with header `x,y,z` (or `x,y,z,height`), coordinates as `a/b`.
pub fn points_to_csv(points: &[RationalPoint3], with_height: bool) -> String {
    let mut out = String::from(if with_height { "x,y,z,height\n" } else { "x,y,z\n" });
    for p in points {
        out.push_str(&format_rational(&p.x));
        out.push(',');
        out.push_str(&format_rational(&p.y));
        out.push(',');
        out.push_str(&format_rational(&p.z));
        if with_height {
            out.push(',');
            out.push_str(&point_height(p).to_string());
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    pub height: String,
    pub membership: serde_json::Value,
}

impl PointRecord {
    pub fn new(p: &RationalPoint3) -> Self {
        let membership = match family_membership(p) {
            Ok(m) => m.to_json(),
            Err(e) => serde_json::json!({ "status": "error", "reason": e.to_string() }),
        };
        Self {
            x: format_rational(&p.x),
            y: format_rational(&p.y),
            z: format_rational(&p.z),
            height: point_height(p).to_string(),
            membership,
        }
    }
}

/// JSON array of points with height and family-membership annotations.
pub fn points_to_json(points: &[RationalPoint3]) -> serde_json::Value {
    serde_json::to_value(points.iter().map(PointRecord::new).collect::<Vec<_>>())
        .expect("plain data")
}
