use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::UnitaryRep;
use crate::algebra::GroupFunction;
use crate::error::{Error, Result};
use crate::group::{Character, Group};
use crate::linalg::{frobenius, hermitian_residual, identity, orthonormal_columns, rank, CMatrix};

/// Singular-value threshold, relative to `max(1, sigma_max)`, for projection ranks.
pub const MULTIPLICITY_REL_TOL: f64 = 1e-9;

const PVM_TOL: f64 = 1e-9;

/// The spectral measure `P` on the dual group of a unitary representation,
/// with `pi(g) = sum_chi <g|chi> P(chi)`.
#[derive(Debug, Clone)]
pub struct ProjectionValuedMeasure {
    rep: UnitaryRep,
    projections: Vec<CMatrix>,
    multiplicity: Vec<usize>,
    support: Vec<usize>,
    /// Orthonormal basis (as columns) of each projection range.
    bases: Vec<CMatrix>,
}

/// Residual norms of the projection-valued-measure axioms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PvmResiduals {
    pub idempotency: f64,
    pub self_adjointness: f64,
    pub orthogonality: f64,
    pub completeness: f64,
    pub reconstruction: f64,
}

impl PvmResiduals {
    pub fn max(&self) -> f64 {
        [
            self.idempotency,
            self.self_adjointness,
            self.orthogonality,
            self.completeness,
            self.reconstruction,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Averages the representation against each character:
/// `P(chi) = (1/|G|) sum_g conj(<g|chi>) pi(g)`.
pub fn spectral_measure(rep: &UnitaryRep) -> Result<ProjectionValuedMeasure> {
    let group = rep.group();
    let n = group.size();
    let dim = rep.dim();
    let mut projections = vec![CMatrix::zeros(dim, dim); n];
    for g in 0..n {
        let pg = rep.apply_index(g);
        for (chi, p) in projections.iter_mut().enumerate() {
            *p += &pg * group.pairing_by_index(g, chi).conj();
        }
    }
    let scale = Complex64::from(1.0 / n as f64);
    for p in projections.iter_mut() {
        *p *= scale;
    }

    let multiplicity: Vec<usize> = projections
        .iter()
        .map(|p| rank(p, MULTIPLICITY_REL_TOL))
        .collect();
    let total: usize = multiplicity.iter().sum();
    if total != dim {
        return Err(Error::NumericalDegeneracy {
            what: format!("multiplicities sum to {total}, expected {dim}"),
            residual: (total as f64 - dim as f64).abs(),
        });
    }
    let support = (0..n).filter(|&chi| multiplicity[chi] > 0).collect();

    let mut bases = Vec::with_capacity(n);
    for (chi, p) in projections.iter().enumerate() {
        let b = orthonormal_columns(p, multiplicity[chi], 1e-9);
        if b.ncols() != multiplicity[chi] {
            return Err(Error::NumericalDegeneracy {
                what: format!("range basis of P({chi}) has {} vectors", b.ncols()),
                residual: (multiplicity[chi] - b.ncols()) as f64,
            });
        }
        bases.push(b);
    }

    let pvm = ProjectionValuedMeasure {
        rep: rep.clone(),
        projections,
        multiplicity,
        support,
        bases,
    };
    let (idem, adj, complete) = pvm.cheap_residuals();
    let worst = idem.max(adj).max(complete);
    if !(worst < PVM_TOL) {
        return Err(Error::NumericalDegeneracy {
            what: "projection-valued measure axioms violated".into(),
            residual: worst,
        });
    }
    Ok(pvm)
}

impl ProjectionValuedMeasure {
    pub fn rep(&self) -> &UnitaryRep {
        &self.rep
    }

    pub fn group(&self) -> &Group {
        self.rep.group()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// `P(chi)` for every character, in enumeration order.
    pub fn projections(&self) -> &[CMatrix] {
        &self.projections
    }

    pub fn projection(&self, chi: &Character) -> Result<&CMatrix> {
        Ok(&self.projections[self.group().character_index(chi)?])
    }

    /// Rank of `P(chi)` for every character.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicity
    }

    pub fn multiplicity(&self, chi: &Character) -> Result<usize> {
        Ok(self.multiplicity[self.group().character_index(chi)?])
    }

    /// Indices of characters with nonzero projection, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn support_characters(&self) -> Vec<Character> {
        self.support.iter().map(|&c| self.group().character(c)).collect()
    }

    /// Weight of `nu` at a support character: counting measure.
    pub fn measure(&self, _chi: usize) -> f64 {
        1.0
    }

    pub fn max_multiplicity(&self) -> usize {
        self.multiplicity.iter().copied().max().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Orthonormal basis of the range of `P(chi)`, by character index.
    pub fn range_basis(&self, chi: usize) -> &CMatrix {
        &self.bases[chi]
    }

    /// `P(E) = sum_{chi in E} P(chi)` for a set of character indices.
    pub fn projection_of(&self, subset: &[usize]) -> CMatrix {
        subset
            .iter()
            .fold(CMatrix::zeros(self.dim(), self.dim()), |acc, &chi| {
                acc + &self.projections[chi]
            })
    }

    /// `sum_chi <g|chi> P(chi)`.
    pub fn reconstruct(&self, g: usize) -> CMatrix {
        let group = self.group();
        self.support
            .iter()
            .fold(CMatrix::zeros(self.dim(), self.dim()), |acc, &chi| {
                acc + &self.projections[chi] * group.pairing_by_index(g, chi)
            })
    }

    /// `pi(f) = sum_chi Lambda_{chi^{-1}}(f) P(chi)`, the spectral form of
    /// `sum_g f(g) pi(g)`.
    ///
    /// With `pi(g) = sum_chi <g|chi> P(chi)` the coefficient of `P(chi)` is
    /// `sum_g f(g) <g|chi>`, which is the transform at the inverse character.
    pub fn apply_algebra(&self, f: &GroupFunction) -> Result<CMatrix> {
        if f.group() != self.group() {
            return Err(Error::GroupMismatch(
                "function and representation live on different groups".into(),
            ));
        }
        let group = self.group();
        let fhat = f.fourier();
        Ok(self
            .support
            .iter()
            .fold(CMatrix::zeros(self.dim(), self.dim()), |acc, &chi| {
                acc + &self.projections[chi] * fhat.values()[group.neg_index(chi)]
            }))
    }

    fn cheap_residuals(&self) -> (f64, f64, f64) {
        let mut idem = 0.0f64;
        let mut adj = 0.0f64;
        for p in &self.projections {
            idem = idem.max(frobenius(&(p * p - p)));
            adj = adj.max(hermitian_residual(p));
        }
        let sum = self
            .projections
            .iter()
            .fold(CMatrix::zeros(self.dim(), self.dim()), |acc, p| acc + p);
        let complete = frobenius(&(sum - identity(self.dim())));
        (idem, adj, complete)
    }

    /// All axiom residuals, including pairwise orthogonality and the
    /// reconstruction of every `pi(g)`. Quadratic in `|G|`.
    pub fn residuals(&self) -> PvmResiduals {
        let (idempotency, self_adjointness, completeness) = self.cheap_residuals();
        let mut orthogonality = 0.0f64;
        for (i, &a) in self.support.iter().enumerate() {
            for &b in &self.support[i + 1..] {
                orthogonality =
                    orthogonality.max(frobenius(&(&self.projections[a] * &self.projections[b])));
            }
        }
        let reconstruction = (0..self.group().size())
            .map(|g| frobenius(&(self.rep.apply_index(g) - self.reconstruct(g))))
            .fold(0.0, f64::max);
        PvmResiduals {
            idempotency,
            self_adjointness,
            orthogonality,
            completeness,
            reconstruction,
        }
    }
}
