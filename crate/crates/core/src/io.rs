//! JSON file formats.
//!
//! * group: `{"orders": [n1, ..., nk]}`
//! * function: `{"group": {...}, "domain": "group" | "dual", "values": [[re, im], ...]}`
//! * representation: `{"group": {...}, "dim": d, "generators": [matrix, ...]}`
//!
//! Complex numbers are `[re, im]` pairs. Matrices are row-major: either a
//! list of rows or one flat list of `d * d` entries.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{DualFunction, GroupFunction};
use crate::error::{Error, Result};
use crate::group::{Group, GroupSpec};
use crate::linalg::{from_rows, to_rows, CMatrix};
use crate::representation::UnitaryRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Group,
    Dual,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub group: GroupSpec,
    pub domain: Domain,
    pub values: Vec<Complex64>,
}

impl FunctionFile {
    pub fn from_group_function(f: &GroupFunction) -> Self {
        Self {
            group: f.group().spec(),
            domain: Domain::Group,
            values: f.values().to_vec(),
        }
    }

    pub fn from_dual_function(f: &DualFunction) -> Self {
        Self {
            group: f.group().spec(),
            domain: Domain::Dual,
            values: f.values().to_vec(),
        }
    }

    pub fn group(&self) -> Result<Group> {
        Group::new(&self.group.orders)
    }

    /// Reads the values as a function on the group; the domain must be `group`.
    pub fn to_group_function(&self) -> Result<GroupFunction> {
        if self.domain != Domain::Group {
            return Err(Error::GroupMismatch(
                "field `domain`: expected \"group\", found \"dual\"".into(),
            ));
        }
        GroupFunction::new(self.group()?, self.values.clone())
    }

    /// Reads the values as a function on the dual group; the domain must be `dual`.
    pub fn to_dual_function(&self) -> Result<DualFunction> {
        if self.domain != Domain::Dual {
            return Err(Error::GroupMismatch(
                "field `domain`: expected \"dual\", found \"group\"".into(),
            ));
        }
        DualFunction::new(self.group()?, self.values.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRepr {
    Rows(Vec<Vec<Complex64>>),
    Flat(Vec<Complex64>),
}

impl MatrixRepr {
    pub fn from_matrix(m: &CMatrix) -> Self {
        MatrixRepr::Rows(to_rows(m))
    }

    pub fn to_matrix(&self, dim: usize) -> Result<CMatrix> {
        match self {
            MatrixRepr::Rows(rows) => {
                let m = from_rows(rows).ok_or(Error::Length {
                    expected: dim,
                    got: rows.iter().map(|r| r.len()).min().unwrap_or(0),
                })?;
                if m.nrows() != dim || m.ncols() != dim {
                    return Err(Error::Length {
                        expected: dim * dim,
                        got: m.nrows() * m.ncols(),
                    });
                }
                Ok(m)
            }
            MatrixRepr::Flat(v) => {
                if v.len() != dim * dim {
                    return Err(Error::Length {
                        expected: dim * dim,
                        got: v.len(),
                    });
                }
                Ok(CMatrix::from_row_slice(dim, dim, v))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub group: GroupSpec,
    pub dim: usize,
    pub generators: Vec<MatrixRepr>,
}

impl RepresentationFile {
    pub fn from_rep(rep: &UnitaryRep) -> Self {
        Self {
            group: rep.group().spec(),
            dim: rep.dim(),
            generators: rep.generators().iter().map(MatrixRepr::from_matrix).collect(),
        }
    }

    /// Matrices shaped per `dim`; no representation checks yet.
    pub fn matrices(&self) -> Result<Vec<CMatrix>> {
        self.generators.iter().map(|m| m.to_matrix(self.dim)).collect()
    }

    pub fn to_rep(&self) -> Result<UnitaryRep> {
        let group = Group::new(&self.group.orders)?;
        UnitaryRep::new(group, self.matrices()?)
    }
}
