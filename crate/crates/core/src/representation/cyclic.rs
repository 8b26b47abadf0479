use num_complex::Complex64;

use super::ProjectionValuedMeasure;
use crate::error::{Error, Result};
use crate::group::{Character, Group};
use crate::linalg::{diag, frobenius, identity, off_diagonal_norm, vector_norm, CMatrix, CVector};

/// Below this `|P(chi) u|` a declared support character is considered lost.
pub const COMPONENT_NORM_TOL: f64 = 1e-12;

/// A cyclic subspace of the representation, generated by `cyclic_vector`.
#[derive(Debug, Clone)]
pub struct CyclicComponent {
    pub cyclic_vector: CVector,
    /// Character indices with `P(chi) u != 0`, ascending.
    pub support: Vec<usize>,
    /// Columns `P(chi) u / |P(chi) u|` in support order.
    pub isometry: CMatrix,
}

impl CyclicComponent {
    /// `||(I - V V^dagger) pi(g) V V^dagger||`, maximized over the group.
    pub fn invariance_residual(&self, pvm: &ProjectionValuedMeasure) -> f64 {
        let v = &self.isometry;
        let proj = v * v.adjoint();
        let comp = identity(pvm.dim()) - &proj;
        (0..pvm.group().size())
            .map(|g| frobenius(&(&comp * pvm.rep().apply_index(g) * &proj)))
            .fold(0.0, f64::max)
    }
}

/// Splits the representation space into mutually orthogonal cyclic subspaces.
///
/// Component `i` is generated by the sum, over characters of multiplicity
/// greater than `i`, of the `i`-th range basis vector of `P(chi)`. There are
/// as many components as the largest multiplicity, and each restricted
/// representation is multiplicity-free.
pub fn cyclic_decomposition(pvm: &ProjectionValuedMeasure) -> Vec<CyclicComponent> {
    let dim = pvm.dim();
    (0..pvm.max_multiplicity())
        .map(|i| {
            let support: Vec<usize> = pvm
                .support()
                .iter()
                .copied()
                .filter(|&chi| pvm.multiplicities()[chi] > i)
                .collect();
            let mut u = CVector::zeros(dim);
            for &chi in &support {
                u += pvm.range_basis(chi).column(i);
            }
            let mut isometry = CMatrix::zeros(dim, support.len());
            for (k, &chi) in support.iter().enumerate() {
                let col = &pvm.projections()[chi] * &u;
                let norm = vector_norm(&col);
                isometry.set_column(k, &(col / Complex64::from(norm)));
            }
            CyclicComponent {
                cyclic_vector: u,
                support,
                isometry,
            }
        })
        .collect()
}

/// A cyclic component in which `pi(g)` acts as multiplication by `<g|chi>`
/// on functions over the support of the spectral measure.
#[derive(Debug, Clone)]
pub struct DiagonalModel {
    group: Group,
    support: Vec<usize>,
    columns: CMatrix,
    /// `pairing_table[g][k] = <g|support[k]>`.
    pairing_table: Vec<Vec<Complex64>>,
}

/// Realizes `U pi(g) U^{-1}` on a cyclic component as a diagonal matrix.
pub fn diagonalize(
    component: &CyclicComponent,
    pvm: &ProjectionValuedMeasure,
) -> Result<DiagonalModel> {
    let dim = pvm.dim();
    let mut columns = CMatrix::zeros(dim, component.support.len());
    for (k, &chi) in component.support.iter().enumerate() {
        let col = &pvm.projections()[chi] * &component.cyclic_vector;
        let norm = vector_norm(&col);
        if !(norm >= COMPONENT_NORM_TOL) {
            return Err(Error::DegenerateComponent { norm });
        }
        columns.set_column(k, &(col / Complex64::from(norm)));
    }
    let group = pvm.group().clone();
    let pairing_table = (0..group.size())
        .map(|g| {
            component
                .support
                .iter()
                .map(|&chi| group.pairing_by_index(g, chi))
                .collect()
        })
        .collect();
    Ok(DiagonalModel {
        group,
        support: component.support.clone(),
        columns,
        pairing_table,
    })
}

impl DiagonalModel {
    /// Builds the model of the multiplication representation on a set of
    /// characters directly, with the standard basis as isometry.
    pub fn multiplication(group: &Group, support: Vec<usize>) -> Self {
        let s = support.len();
        let pairing_table = (0..group.size())
            .map(|g| support.iter().map(|&chi| group.pairing_by_index(g, chi)).collect())
            .collect();
        Self {
            group: group.clone(),
            support,
            columns: identity(s),
            pairing_table,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Character indices in model order.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn support_characters(&self) -> Vec<Character> {
        self.support.iter().map(|&c| self.group.character(c)).collect()
    }

    /// The isometry `V` whose columns span the component.
    pub fn columns(&self) -> &CMatrix {
        &self.columns
    }

    pub fn pairing_table(&self) -> &[Vec<Complex64>] {
        &self.pairing_table
    }

    /// `pi_nu(g) = diag(<g|chi>)`.
    pub fn multiplication_operator(&self, g: usize) -> CMatrix {
        diag(&self.pairing_table[g])
    }

    /// `V^dagger pi(g) V`.
    pub fn conjugated(&self, pvm: &ProjectionValuedMeasure, g: usize) -> CMatrix {
        self.columns.adjoint() * pvm.rep().apply_index(g) * &self.columns
    }

    /// Off-diagonal mass and diagonal error of `V^dagger pi(g) V`, maximized over `g`.
    pub fn residuals(&self, pvm: &ProjectionValuedMeasure) -> (f64, f64) {
        let mut off = 0.0f64;
        let mut diag_err = 0.0f64;
        for g in 0..self.group.size() {
            let m = self.conjugated(pvm, g);
            off = off.max(off_diagonal_norm(&m));
            let d = (0..m.nrows())
                .map(|k| (m[(k, k)] - self.pairing_table[g][k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            diag_err = diag_err.max(d);
        }
        (off, diag_err)
    }
}
