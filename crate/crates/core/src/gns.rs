//! The GNS construction for a positive-type function `phi` on a finite
//! abelian group.
//!
//! The Hermitian form `<h|f>_phi` is degenerate in general. Its null space
//! `N` is split off through the eigendecomposition of the Gram matrix, and
//! the quotient `L^1(G)/N` (already complete in finite dimension) gets an
//! orthonormal basis by pivoted Cholesky on the classes of the point masses
//! `delta_g`. Left translation `(L_g f)(x) = f(x - g)` preserves the form and
//! `N`, so it descends to a unitary `pi_phi(g)` on the quotient, and the class
//! `eta` of `delta_e` is cyclic with `phi(g) = <eta | pi_phi(g) eta>_phi`.

use num_complex::Complex64;

use crate::algebra::GroupFunction;
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::linalg::{frobenius, hermitian_eigen, identity, rank, CMatrix, CVector, ZERO};
use crate::representation::UnitaryRep;

/// Eigenvalues of the Gram matrix at or below this fraction of the largest
/// one span the null space `N`.
pub const RANK_REL_TOL: f64 = 1e-9;

/// Bound on the structural residuals checked during construction.
const CONSTRUCTION_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct GnsSpace {
    group: Group,
    phi: GroupFunction,
    gram: CMatrix,
    gram_eigenvalues: Vec<f64>,
    /// Orthonormal (Euclidean) eigenvectors spanning `N`, as columns.
    null_basis: CMatrix,
    /// `|G| x r`; columns are representatives of a `phi`-orthonormal basis of the quotient.
    quotient_basis: CMatrix,
    /// Elements whose point masses were used as Cholesky pivots, in order.
    pivots: Vec<usize>,
    /// `r x |G|`; column `x` holds the quotient coordinates of `delta_x`.
    coordinates: CMatrix,
    rep_generators: Vec<CMatrix>,
    eta: CVector,
}

/// Builds `H_phi`, `pi_phi` and `eta` from a positive-type `phi`.
pub fn gns_construct(phi: &GroupFunction, tol: f64) -> Result<GnsSpace> {
    let positivity = phi.is_positive_type(tol)?;
    if !positivity.verdict {
        return Err(Error::NotPositiveType {
            min_gram_eigenvalue: positivity.min_gram_eigenvalue,
            min_fourier: positivity.min_fourier,
        });
    }
    let group = phi.group().clone();
    let n = group.size();
    let gram = phi.hermitian_form();
    let herm = (&gram + gram.adjoint()).scale(0.5);

    let (eigenvalues, eigenvectors) = hermitian_eigen(&herm);
    let top = eigenvalues.last().copied().unwrap_or(0.0);
    let threshold = RANK_REL_TOL * top;
    let r = if top > 0.0 {
        eigenvalues.iter().filter(|&&l| l > threshold).count()
    } else {
        0
    };
    let null_basis = eigenvectors.columns(0, n - r).into_owned();

    let (quotient_basis, pivots) = pivoted_cholesky_basis(&herm, r)?;
    let orth = frobenius(&(quotient_basis.adjoint() * &gram * &quotient_basis - identity(r)));
    if !(orth < CONSTRUCTION_TOL) {
        return Err(Error::NumericalDegeneracy {
            what: "quotient basis is not orthonormal in the phi-inner product".into(),
            residual: orth,
        });
    }
    let coordinates = quotient_basis.adjoint() * &gram;

    let mut space = GnsSpace {
        eta: coordinates.column(0).into_owned(),
        group,
        phi: phi.clone(),
        gram,
        gram_eigenvalues: eigenvalues,
        null_basis,
        quotient_basis,
        pivots,
        coordinates,
        rep_generators: Vec::new(),
    };

    // null eigenvalues are at most `threshold`, so translated null vectors
    // may pick up that much Gram mass per column
    let null_res = space.null_invariance_residual();
    let null_bound = 10.0 * threshold * (n as f64).sqrt() + 1e-12 * top.max(1.0) * n as f64;
    if !(null_res <= null_bound) {
        return Err(Error::Inconsistency(format!(
            "translation does not preserve the null space (residual {null_res:e})"
        )));
    }
    let generators: Vec<CMatrix> = (0..space.group.rank())
        .map(|j| {
            let mut coords = vec![0; space.group.rank()];
            coords[j] = 1 % space.group.orders()[j];
            let g = space.group.index_of(&Element(coords)).expect("generator");
            space.translation_image(g)
        })
        .collect();
    for (j, m) in generators.iter().enumerate() {
        let res = frobenius(&(m.adjoint() * m - identity(r)));
        if !(res < CONSTRUCTION_TOL) {
            return Err(Error::Inconsistency(format!(
                "induced translation {j} is not unitary (residual {res:e})"
            )));
        }
    }
    space.rep_generators = generators;
    Ok(space)
}

/// Pivoted Cholesky of a Hermitian positive semi-definite matrix, stopped
/// after `r` steps. Returns `B` with `B^dagger H B = I_r`, supported on the
/// pivot coordinates, and the pivots.
fn pivoted_cholesky_basis(h: &CMatrix, r: usize) -> Result<(CMatrix, Vec<usize>)> {
    let n = h.nrows();
    let mut diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    let mut l = CMatrix::zeros(n, r);
    let mut pivots = Vec::with_capacity(r);
    for k in 0..r {
        let mut p = usize::MAX;
        let mut best = f64::NEG_INFINITY;
        for (i, &d) in diag.iter().enumerate() {
            if pivots.contains(&i) {
                continue;
            }
            // ties resolve to the lowest index
            if d > best * (1.0 + 1e-12) + f64::MIN_POSITIVE {
                best = d;
                p = i;
            }
        }
        if p == usize::MAX || !(best > 0.0) {
            return Err(Error::NumericalDegeneracy {
                what: format!("Cholesky pivot {k} of {r} is not positive"),
                residual: best,
            });
        }
        let root = best.sqrt();
        for i in 0..n {
            let mut v = h[(i, p)];
            for j in 0..k {
                v -= l[(i, j)] * l[(p, j)].conj();
            }
            l[(i, k)] = v / root;
        }
        for (i, d) in diag.iter_mut().enumerate() {
            *d -= l[(i, k)].norm_sqr();
        }
        pivots.push(p);
    }
    // rows of L at the pivots form a lower-triangular factor of H[piv, piv]
    let lp = CMatrix::from_fn(r, r, |i, j| if j <= i { l[(pivots[i], j)] } else { ZERO });
    let inv = lp
        .adjoint()
        .solve_upper_triangular(&identity(r))
        .ok_or_else(|| Error::NumericalDegeneracy {
            what: "singular Cholesky factor".into(),
            residual: 0.0,
        })?;
    let mut basis = CMatrix::zeros(n, r);
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..r {
            basis[(p, j)] = inv[(i, j)];
        }
    }
    Ok((basis, pivots))
}

impl GnsSpace {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn phi(&self) -> &GroupFunction {
        &self.phi
    }

    /// The Gram matrix `M[g', g] = phi(g - g')` of the form.
    pub fn gram(&self) -> &CMatrix {
        &self.gram
    }

    /// Eigenvalues of the Gram matrix, ascending.
    pub fn gram_eigenvalues(&self) -> &[f64] {
        &self.gram_eigenvalues
    }

    pub fn null_basis(&self) -> &CMatrix {
        &self.null_basis
    }

    pub fn quotient_basis(&self) -> &CMatrix {
        &self.quotient_basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Dimension `r` of `H_phi`.
    pub fn dim(&self) -> usize {
        self.quotient_basis.ncols()
    }

    /// Images of the cyclic-factor generators under `pi_phi`.
    pub fn rep_generators(&self) -> &[CMatrix] {
        &self.rep_generators
    }

    /// Coordinates of the cyclic vector `eta`, the class of `delta_e`.
    pub fn eta(&self) -> &CVector {
        &self.eta
    }

    /// `r x |G|` matrix sending a function to the coordinates of its class.
    pub fn coordinate_map(&self) -> &CMatrix {
        &self.coordinates
    }

    /// Quotient coordinates of the class of `f`.
    pub fn class_of(&self, f: &GroupFunction) -> CVector {
        &self.coordinates * CVector::from_column_slice(f.values())
    }

    /// `<f|h>_phi` evaluated on representatives.
    pub fn inner(&self, f: &GroupFunction, h: &GroupFunction) -> Complex64 {
        let fv = CVector::from_column_slice(f.values());
        let hv = CVector::from_column_slice(h.values());
        fv.dotc(&(&self.gram * hv))
    }

    /// `pi_phi` as a validated unitary representation.
    pub fn representation(&self) -> Result<UnitaryRep> {
        UnitaryRep::new(self.group.clone(), self.rep_generators.clone())
    }

    /// Quotient image of left translation by the element with index `g`.
    pub fn translation_image(&self, g: usize) -> CMatrix {
        let grp = &self.group;
        let n = grp.size();
        let r = self.dim();
        // (L_g B)[x, :] = B[x - g, :]
        let shifted = CMatrix::from_fn(n, r, |x, j| self.quotient_basis[(grp.sub_index(x, g), j)]);
        &self.coordinates * shifted
    }

    pub fn apply(&self, g: &Element) -> Result<CMatrix> {
        Ok(self.translation_image(self.group.index_of(g)?))
    }

    /// `pi_phi(f)`: the quotient image of `h -> f * h`.
    pub fn algebra_action(&self, f: &GroupFunction) -> Result<CMatrix> {
        if f.group() != &self.group {
            return Err(Error::GroupMismatch(
                "function and GNS space live on different groups".into(),
            ));
        }
        let grp = &self.group;
        let n = grp.size();
        let conv = CMatrix::from_fn(n, n, |x, y| f.values()[grp.sub_index(x, y)]);
        Ok(&self.coordinates * conv * &self.quotient_basis * Complex64::from(grp.haar_weight()))
    }

    /// `g -> <eta | pi_phi(g) eta>_phi`.
    pub fn reconstruct_phi(&self) -> GroupFunction {
        GroupFunction::from_fn(&self.group, |g| {
            self.eta.dotc(&(self.translation_image(g) * &self.eta))
        })
    }

    /// `max_g ||M(g)^dagger M(g) - I||` for the quotient translation images.
    pub fn unitarity_residual(&self) -> f64 {
        let r = self.dim();
        (0..self.group.size())
            .map(|g| {
                let m = self.translation_image(g);
                frobenius(&(m.adjoint() * &m - identity(r)))
            })
            .fold(0.0, f64::max)
    }

    /// `||M(g1) M(g2) - M(g1 + g2)||` for one pair.
    pub fn homomorphism_residual(&self, g1: usize, g2: usize) -> f64 {
        let lhs = self.translation_image(g1) * self.translation_image(g2);
        frobenius(&(lhs - self.translation_image(self.group.add_index(g1, g2))))
    }

    /// `max_g ||Gram * L_g * N||`: translated null vectors stay null.
    pub fn null_invariance_residual(&self) -> f64 {
        let grp = &self.group;
        let n = grp.size();
        let k = self.null_basis.ncols();
        (0..n)
            .map(|g| {
                let shifted = CMatrix::from_fn(n, k, |x, j| self.null_basis[(grp.sub_index(x, g), j)]);
                frobenius(&(&self.gram * shifted))
            })
            .fold(0.0, f64::max)
    }

    /// Rank of the classes of the point masses; equals `dim()` when `eta` is cyclic.
    pub fn cyclic_span_rank(&self) -> usize {
        rank(&self.coordinates, RANK_REL_TOL)
    }

    /// `||B^dagger Gram B - I||`.
    pub fn orthonormality_residual(&self) -> f64 {
        let b = &self.quotient_basis;
        frobenius(&(b.adjoint() * &self.gram * b - identity(self.dim())))
    }
}
