//! Unitary representations of a finite abelian group and their spectral
//! theory: the projection-valued measure on the dual group, cyclic
//! decomposition, diagonalization to multiplication operators, complete
//! systems of Dirac kets and the functional calculus.

mod calculus;
mod cyclic;
mod kets;
mod pvm;

pub use calculus::{functional_calculus, one_parameter_group};
pub use cyclic::{cyclic_decomposition, diagonalize, CyclicComponent, DiagonalModel};
pub use kets::{dirac_delta_integral, dirac_kets, Ket, KetSystem};
pub use pvm::{spectral_measure, ProjectionValuedMeasure, MULTIPLICITY_REL_TOL};

use crate::algebra::GroupFunction;
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::linalg::{frobenius, identity, matrix_power, unitarity_residual, CMatrix};

pub const UNITARITY_TOL: f64 = 1e-10;
pub const COMMUTATION_TOL: f64 = 1e-10;
pub const ORDER_TOL: f64 = 1e-9;

/// A unitary representation of `G` on `C^dim`, given by the images of the
/// generators of the cyclic factors.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryRep {
    group: Group,
    dim: usize,
    generators: Vec<CMatrix>,
}

impl UnitaryRep {
    /// Validates and wraps generator images: one square matrix per cyclic factor.
    pub fn new(group: Group, generators: Vec<CMatrix>) -> Result<Self> {
        if generators.len() != group.rank() {
            return Err(Error::Validation {
                relation: format!(
                    "expected {} generator images, got {}",
                    group.rank(),
                    generators.len()
                ),
                residual: f64::NAN,
            });
        }
        let dim = generators.first().map_or(0, |u| u.nrows());
        if dim == 0 {
            return Err(Error::Validation {
                relation: "representation dimension must be positive".into(),
                residual: f64::NAN,
            });
        }
        for (j, u) in generators.iter().enumerate() {
            if u.nrows() != dim || u.ncols() != dim {
                return Err(Error::Validation {
                    relation: format!(
                        "generator {j} is {}x{}, expected {dim}x{dim}",
                        u.nrows(),
                        u.ncols()
                    ),
                    residual: f64::NAN,
                });
            }
        }
        for (j, u) in generators.iter().enumerate() {
            let r = unitarity_residual(u);
            if !(r < UNITARITY_TOL) {
                return Err(Error::Validation {
                    relation: format!("generator {j} not unitary"),
                    residual: r,
                });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let (a, b) = (&generators[i], &generators[j]);
                let r = frobenius(&(a * b - b * a));
                if !(r < COMMUTATION_TOL) {
                    return Err(Error::Validation {
                        relation: format!("generators {i} and {j} do not commute"),
                        residual: r,
                    });
                }
            }
        }
        for (j, u) in generators.iter().enumerate() {
            let n = group.orders()[j];
            let r = frobenius(&(matrix_power(u, n) - identity(dim)));
            if !(r < ORDER_TOL) {
                return Err(Error::Validation {
                    relation: format!("generator {j} violates U^{n} = I"),
                    residual: r,
                });
            }
        }
        Ok(Self {
            group,
            dim,
            generators,
        })
    }

    /// The left-regular representation: `pi(g)` translates `delta_x` to `delta_{x+g}`.
    pub fn regular(group: &Group) -> Self {
        let n = group.size();
        let rank = group.rank();
        let generators = (0..rank)
            .map(|j| {
                let mut coords = vec![0; rank];
                coords[j] = 1 % group.orders()[j];
                let gen = group.index_of(&Element(coords)).expect("valid generator");
                translation_matrix(group, gen)
            })
            .collect();
        Self {
            group: group.clone(),
            dim: n,
            generators,
        }
    }

    /// `pi(g) = I` on `C^dim`.
    pub fn trivial(group: &Group, dim: usize) -> Self {
        Self {
            group: group.clone(),
            dim,
            generators: vec![identity(dim); group.rank()],
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    /// `pi(g) = prod_j U_j^{g_j}`, by enumeration index.
    pub fn apply_index(&self, g: usize) -> CMatrix {
        self.group
            .coords_of(g)
            .iter()
            .zip(&self.generators)
            .fold(identity(self.dim), |acc, (&k, u)| {
                if k == 0 {
                    acc
                } else {
                    acc * matrix_power(u, k)
                }
            })
    }

    pub fn apply(&self, g: &Element) -> Result<CMatrix> {
        Ok(self.apply_index(self.group.index_of(g)?))
    }

    /// All operators `pi(g)` in enumeration order.
    pub fn images(&self) -> Vec<CMatrix> {
        (0..self.group.size()).map(|g| self.apply_index(g)).collect()
    }

    /// `pi(f) = sum_g f(g) pi(g)`, the direct lift to the group algebra.
    pub fn apply_function(&self, f: &GroupFunction) -> Result<CMatrix> {
        if f.group() != &self.group {
            return Err(Error::GroupMismatch(
                "function and representation live on different groups".into(),
            ));
        }
        let mut acc = CMatrix::zeros(self.dim, self.dim);
        for (g, &v) in f.values().iter().enumerate() {
            if v != crate::linalg::ZERO {
                acc += self.apply_index(g) * v;
            }
        }
        Ok(acc * num_complex::Complex64::from(self.group.haar_weight()))
    }
}

/// Permutation matrix of `x -> x + g` acting on `C^{|G|}`.
pub fn translation_matrix(group: &Group, g: usize) -> CMatrix {
    let n = group.size();
    let mut m = CMatrix::zeros(n, n);
    for x in 0..n {
        m[(group.add_index(x, g), x)] = crate::linalg::ONE;
    }
    m
}
