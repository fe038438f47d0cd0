//! Closed-form values and windows for the analyzed families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Caterpillar,
    Spider,
    Grid,
    IltPath,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "caterpillar" => Family::Caterpillar,
            "spider" => Family::Spider,
            "grid" => Family::Grid,
            "ilt_path" | "ilt-path" => Family::IltPath,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Caterpillar => "caterpillar",
            Family::Spider => "spider",
            Family::Grid => "grid",
            Family::IltPath => "ilt_path",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    Lower,
    Window,
}

/// A certified value: exact (`lo == hi`), a lower bound (`hi` absent) or a
/// window `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
    pub kind: BoundKind,
    pub lo: usize,
    pub hi: Option<usize>,
}

impl ClosedForm {
    fn exact(family: Family, params: BTreeMap<String, usize>, value: usize) -> Self {
        ClosedForm { family, params, kind: BoundKind::Exact, lo: value, hi: Some(value) }
    }

    pub fn contains(&self, value: usize) -> bool {
        value >= self.lo && self.hi.is_none_or(|hi| value <= hi)
    }

    pub fn exact_value(&self) -> Option<usize> {
        (self.kind == BoundKind::Exact).then_some(self.lo)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("closed form serializes")
    }
}

/// Smallest `k` with `2^k >= x`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

fn param(params: &BTreeMap<String, usize>, key: &str, min: usize, family: Family) -> Result<usize> {
    let v = *params.get(key).ok_or_else(|| Error::InvalidParameter(format!("{family} needs parameter `{key}`")))?;
    if v < min {
        return Err(Error::InvalidParameter(format!("{family} needs {key} >= {min}, got {v}")));
    }
    Ok(v)
}

/// `[2n - 2 floor(log2(n + 3)), 2n - 2 floor(log2(n + 3)) + 2]`, for `n >= 2`.
pub fn grid_cl_window(n: usize) -> Result<ClosedForm> {
    closed_form(Family::Grid, &[("n", n)])
}

pub fn closed_form(family: Family, params: &[(&str, usize)]) -> Result<ClosedForm> {
    let params: BTreeMap<String, usize> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    Ok(match family {
        Family::Path => {
            let n = param(&params, "n", 1, family)?;
            ClosedForm::exact(family, params, (n + 2) / 2)
        }
        Family::Cycle => {
            let n = param(&params, "n", 3, family)?;
            ClosedForm::exact(family, params, (n + 4) / 3)
        }
        Family::Caterpillar => {
            let d = param(&params, "d", 3, family)?;
            ClosedForm::exact(family, params, d)
        }
        Family::Spider => {
            let m = param(&params, "m", 1, family)?;
            let r = param(&params, "r", 1, family)?;
            if m < ceil_log2(r + 1) {
                let sum: usize = (1..=m).map(|i| (r + 1) >> i).sum();
                ClosedForm { family, params, kind: BoundKind::Lower, lo: 2 * sum, hi: None }
            } else {
                ClosedForm::exact(family, params, 2 * r + 1)
            }
        }
        Family::Grid => {
            let n = param(&params, "n", 2, family)?;
            let lo = 2 * n - 2 * (n + 3).ilog2() as usize;
            ClosedForm { family, params, kind: BoundKind::Window, lo, hi: Some(lo + 2) }
        }
        Family::IltPath => {
            let n = param(&params, "n", 3, family)?;
            let t = param(&params, "t", 1, family)?;
            let k = (2 * n).div_ceil(3);
            let value = if t == 1 && n % 3 == 2 { k } else { k + 1 };
            ClosedForm::exact(family, params, value)
        }
    })
}
