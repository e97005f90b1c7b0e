//! Pass/fail records shared by the exact and numeric verification routines.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Numeric,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckDetail {
    /// Largest residual coefficient magnitude, as an exact rational string.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nonzero_terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_discrepancy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub kind: CheckKind,
    pub pass: bool,
    pub detail: CheckDetail,
    pub samples: usize,
}

impl CheckEntry {
    /// An exact check passes iff every residual coefficient is zero.
    pub fn exact<'a>(
        name: impl Into<String>,
        residual: impl IntoIterator<Item = &'a ExactRational>,
        samples: usize,
    ) -> Self {
        let mut nonzero = 0;
        let mut max_abs = ExactRational::default();
        for c in residual {
            if *c != ExactRational::default() {
                nonzero += 1;
                if c.abs() > max_abs {
                    max_abs = c.abs();
                }
            }
        }
        Self {
            name: name.into(),
            kind: CheckKind::Exact,
            pass: nonzero == 0,
            detail: CheckDetail {
                residual: Some(max_abs.to_string()),
                nonzero_terms: Some(nonzero),
                ..CheckDetail::default()
            },
            samples,
        }
    }

    pub fn numeric(
        name: impl Into<String>,
        pass: bool,
        max_discrepancy: f64,
        bound: f64,
        samples: usize,
    ) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::Numeric,
            pass,
            detail: CheckDetail {
                max_discrepancy: Some(max_discrepancy),
                bound: Some(bound),
                ..CheckDetail::default()
            },
            samples,
        }
    }
}
