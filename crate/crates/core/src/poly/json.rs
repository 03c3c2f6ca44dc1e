use std::fmt::Display;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Exponent, Form4};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `{"e": [e_w, e_x, e_y, e_z], "c": "<scalar>"}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub e: Exponent,
    pub c: String,
}

/// `{"monomials": [...]}` with monomials in lexicographic exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub monomials: Vec<MonomialJson>,
}

impl<S: Scalar + Display> Form4<S> {
    /// Nonzero monomials only, lexicographically ordered.
    pub fn to_json(&self) -> FormJson {
        FormJson {
            monomials: self
                .terms()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| MonomialJson {
                    e: *e,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data")
    }
}

impl<S: Scalar + FromStr> Form4<S> {
    /// Reads a form. The degree is taken from the first monomial; an empty
    /// list is the zero cubic.
    pub fn from_json(json: &FormJson) -> Result<Self> {
        let degree = json
            .monomials
            .first()
            .map_or(3, |m| m.e.iter().sum::<u8>());
        let mut f = Self::zero(degree)?;
        let mut seen = Vec::new();
        for m in &json.monomials {
            if seen.contains(&m.e) {
                return Err(Error::DuplicateMonomial(m.e));
            }
            seen.push(m.e);
            let c = m.c.parse::<S>().map_err(|_| Error::Parse {
                what: "scalar",
                input: m.c.clone(),
            })?;
            f.set(&m.e, c)?;
        }
        Ok(f)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: FormJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json(&json)
    }
}
