use serde::Serialize;

use crate::bitstring::RunParams;
use crate::error::{Error, Result};

/// Which of the two constructions a parameter set refers to: the
/// run-avoiding family (`V`) or the Dyck family (`D`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    V,
    D,
}

/// Identifies one constructed set: family tag, run length `k` (V only),
/// row bound `m` (matrix families only), and size bound `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub n: usize,
}

impl FamilyParams {
    /// Run-avoiding matrix family bounded by `m` rows and `n` columns.
    pub fn v(k: usize, m: usize, n: usize) -> Self {
        FamilyParams {
            family: Family::V,
            k: Some(k),
            m: Some(m),
            n,
        }
    }

    /// Run-avoiding string family bounded by length `n`.
    pub fn v_strings(k: usize, n: usize) -> Self {
        FamilyParams {
            family: Family::V,
            k: Some(k),
            m: None,
            n,
        }
    }

    /// Dyck matrix family bounded by `m` rows and `n` columns.
    pub fn d(m: usize, n: usize) -> Self {
        FamilyParams {
            family: Family::D,
            k: None,
            m: Some(m),
            n,
        }
    }

    /// Dyck string family bounded by length `n`.
    pub fn d_strings(n: usize) -> Self {
        FamilyParams {
            family: Family::D,
            k: None,
            m: None,
            n,
        }
    }

    /// The validated run parameter; only the `V` family has one.
    pub fn run_params(&self) -> Result<RunParams> {
        match self.family {
            Family::V => {
                let k = self
                    .k
                    .ok_or_else(|| Error::domain("the V family needs a run length k"))?;
                RunParams::new(k)
            }
            Family::D => Err(Error::domain(
                "the Dyck family has no run length parameter",
            )),
        }
    }
}
