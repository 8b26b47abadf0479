//! Generalized eigenvectors and the spectral decomposition of `pi_phi(g)`.
//!
//! Starting from the diagonal (multiplication) model of a cyclic
//! representation and a cyclic vector `xi`, the positive-type function
//! `phi(g) = <xi | pi_nu(g) xi>` is formed, its GNS space is built, and the
//! functionals
//!
//! ```text
//! F_chi(f) = <f|F_chi> = |xi(chi)| * conj( sum_g <g|chi> f(g) )
//! ```
//!
//! resolve the identity of `H_phi` with `pi_phi(g) F_chi = <g|chi> F_chi`.
//! The functional is antilinear in `f`. The kernel `<g|chi>` is the one
//! produced by expanding the Gram form; it pairs with the Fourier transform
//! at the inverse character, `sum_g <g|chi> f(g) = f^(chi^{-1})`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{DualFunction, GroupFunction};
use crate::error::{Error, Result};
use crate::gns::GnsSpace;
use crate::group::{Character, Group};
use crate::linalg::{frobenius, identity, CMatrix, CVector};
use crate::representation::{DiagonalModel, UnitaryRep};

/// Weights at or below this value drop out of the support.
pub const WEIGHT_TOL: f64 = 1e-12;

/// Tolerance on the inner-product identity checked while building a decomposition.
const INNER_PRODUCT_TOL: f64 = 1e-9;

/// Sign of the exponent in the functional kernel. Only the standard sign is
/// correct; the flipped one exists to exercise the self-test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kernel {
    Standard,
    Flipped,
}

/// `phi(g) = <xi | pi_nu(g) xi> = sum_chi <g|chi> |xi(chi)|^2 nu(chi)` over the
/// support of the diagonal model.
pub fn phi_from_cyclic(model: &DiagonalModel, xi: &DualFunction) -> Result<GroupFunction> {
    let group = model.group();
    if xi.group() != group {
        return Err(Error::GroupMismatch("xi and diagonal model differ".into()));
    }
    for &chi in model.support() {
        if !(xi.values()[chi].norm() > WEIGHT_TOL) {
            return Err(Error::NotCyclic {
                character: group.character(chi).0,
            });
        }
    }
    Ok(GroupFunction::from_fn(group, |g| {
        model
            .support()
            .iter()
            .enumerate()
            .map(|(k, &chi)| {
                let x = xi.values()[chi];
                // <pi_nu(e) xi | pi_nu(g) xi> with nu = 1
                x.conj() * model.pairing_table()[g][k] * x
            })
            .sum()
    }))
}

/// Zeroes `xi` off the support of the model.
pub fn restrict_to_model(model: &DiagonalModel, xi: &DualFunction) -> DualFunction {
    DualFunction::from_fn(xi.group(), |chi| {
        if model.support().contains(&chi) {
            xi.values()[chi]
        } else {
            Complex64::from(0.0)
        }
    })
}

/// A generalized eigenvector `F_chi`.
#[derive(Debug, Clone)]
pub struct GeneralizedEigenvector {
    pub character: Character,
    pub character_index: usize,
    /// `|xi(chi)|`.
    pub weight: f64,
    /// The vector in `H_phi` representing the functional, in quotient coordinates.
    pub coordinates: CVector,
    group: Group,
    kernel: Kernel,
}

impl GeneralizedEigenvector {
    fn kernel_at(&self, g: usize) -> Complex64 {
        let p = self.group.pairing_by_index(g, self.character_index);
        match self.kernel {
            Kernel::Standard => p,
            Kernel::Flipped => p.conj(),
        }
    }

    /// `<f|F_chi>` from the Fourier-type formula, antilinear in `f`.
    pub fn apply(&self, f: &GroupFunction) -> Complex64 {
        let s: Complex64 = f
            .values()
            .iter()
            .enumerate()
            .map(|(g, &v)| self.kernel_at(g) * v)
            .sum();
        s.conj() * self.weight
    }

    /// `<f|F_chi>` as the `phi`-inner product of the class of `f` with the coordinates.
    pub fn apply_via_coordinates(&self, space: &GnsSpace, f: &GroupFunction) -> Complex64 {
        space.class_of(f).dotc(&self.coordinates)
    }
}

/// The resolution `pi_phi(g) = sum_chi <g|chi> |F_chi><F_chi| nu(chi)`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    group: Group,
    support: Vec<usize>,
    eigenvectors: Vec<GeneralizedEigenvector>,
    /// `xi(chi)/|xi(chi)|` on the support.
    phases: Vec<Complex64>,
    inner_product_residual: f64,
}

/// Builds `F_chi` for every character where `xi` does not vanish.
///
/// `space` must be the GNS space of `phi_from_cyclic(model, xi)`.
pub fn build_decomposition(space: &GnsSpace, xi: &DualFunction) -> Result<SpectralDecomposition> {
    let d = build_with_kernel(space, xi, Kernel::Standard)?;
    if !(d.inner_product_residual < INNER_PRODUCT_TOL * scale(space)) {
        return Err(Error::Inconsistency(format!(
            "phi-inner product does not match the spectral form (residual {:e})",
            d.inner_product_residual
        )));
    }
    Ok(d)
}

/// Same as [`build_decomposition`] with the exponent sign of the functional
/// kernel flipped and no internal check. Mutation target for the self-test.
#[doc(hidden)]
pub fn build_decomposition_flipped(
    space: &GnsSpace,
    xi: &DualFunction,
) -> Result<SpectralDecomposition> {
    build_with_kernel(space, xi, Kernel::Flipped)
}

fn scale(space: &GnsSpace) -> f64 {
    space.gram_eigenvalues().last().copied().unwrap_or(0.0).max(1.0)
}

fn build_with_kernel(
    space: &GnsSpace,
    xi: &DualFunction,
    kernel: Kernel,
) -> Result<SpectralDecomposition> {
    let group = space.group().clone();
    if xi.group() != &group {
        return Err(Error::GroupMismatch("xi and GNS space differ".into()));
    }
    let support: Vec<usize> = (0..group.size())
        .filter(|&chi| xi.values()[chi].norm() > WEIGHT_TOL)
        .collect();
    if support.len() != space.dim() {
        return Err(Error::Inconsistency(format!(
            "xi is supported on {} characters but the GNS space has dimension {}",
            support.len(),
            space.dim()
        )));
    }
    let n = group.size();
    let basis_adj = space.quotient_basis().adjoint();
    let mut eigenvectors = Vec::with_capacity(support.len());
    let mut phases = Vec::with_capacity(support.len());
    let mut spectral_gram = CMatrix::zeros(n, n);
    for &chi in &support {
        let x = xi.values()[chi];
        let weight = x.norm();
        phases.push(x / weight);
        let mut ev = GeneralizedEigenvector {
            character: group.character(chi),
            character_index: chi,
            weight,
            coordinates: CVector::zeros(0),
            group: group.clone(),
            kernel,
        };
        // <f|F_chi> = weight * f^dagger u with u[g] = conj(kernel(g))
        let u = CVector::from_fn(n, |g, _| ev.kernel_at(g).conj());
        ev.coordinates = &basis_adj * &u * Complex64::from(weight);
        spectral_gram += &u * u.adjoint() * Complex64::from(weight * weight);
        eigenvectors.push(ev);
    }
    let inner_product_residual = frobenius(&(space.gram() - spectral_gram));
    Ok(SpectralDecomposition {
        group,
        support,
        eigenvectors,
        phases,
        inner_product_residual,
    })
}

impl SpectralDecomposition {
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Character indices of the support, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn eigenvectors(&self) -> &[GeneralizedEigenvector] {
        &self.eigenvectors
    }

    /// `nu(chi)`: counting measure on the support.
    pub fn measure(&self, _chi: usize) -> f64 {
        1.0
    }

    /// `||Gram - sum_chi nu(chi) |F_chi><F_chi|||` on the point-mass basis, i.e. the
    /// inner-product identity for all pairs of functions at once.
    pub fn inner_product_residual(&self) -> f64 {
        self.inner_product_residual
    }

    /// `|<f|h>_phi - sum_chi <f|F_chi><F_chi|h> nu(chi)|`.
    pub fn inner_product_defect(&self, space: &GnsSpace, f: &GroupFunction, h: &GroupFunction) -> f64 {
        let spectral: Complex64 = self
            .eigenvectors
            .iter()
            .map(|ev| ev.apply(f) * ev.apply(h).conj() * self.measure(ev.character_index))
            .sum();
        (space.inner(f, h) - spectral).norm()
    }

    /// `sum_chi <g|chi> |F_chi><F_chi| nu(chi)` in quotient coordinates.
    pub fn reconstruct_operator(&self, g: usize) -> CMatrix {
        let r = self.eigenvectors.first().map_or(0, |e| e.coordinates.len());
        self.eigenvectors
            .iter()
            .fold(CMatrix::zeros(r, r), |acc, ev| {
                let c = &ev.coordinates;
                acc + c * c.adjoint()
                    * (self.group.pairing_by_index(g, ev.character_index)
                        * self.measure(ev.character_index))
            })
    }

    /// `max_g ||reconstruct_operator(g) - pi_phi(g)||`.
    pub fn reconstruction_residual(&self, space: &GnsSpace) -> f64 {
        (0..self.group.size())
            .map(|g| frobenius(&(self.reconstruct_operator(g) - space.translation_image(g))))
            .fold(0.0, f64::max)
    }

    /// `||sum_chi nu(chi) |F_chi><F_chi| - I||`.
    pub fn resolution_residual(&self, space: &GnsSpace) -> f64 {
        frobenius(&(self.reconstruct_operator(0) - identity(space.dim())))
    }

    /// Generalized eigenvalue `<chi|g> = conj(<g|chi>)` of the extension of
    /// `pi_phi(g)` acting on the functional `F_chi`.
    pub fn eigenvalue(&self, g: usize, chi: usize) -> Complex64 {
        self.group.pairing_by_index(g, chi).conj()
    }

    /// `||pi_phi(g)^dagger F_chi - <chi|g> F_chi||` in coordinates.
    pub fn eigen_residual(&self, space: &GnsSpace, g: usize, chi: &Character) -> Result<f64> {
        let ci = self.group.character_index(chi)?;
        let ev = self
            .eigenvectors
            .iter()
            .find(|e| e.character_index == ci)
            .ok_or_else(|| Error::OutsideSupport(chi.0.clone()))?;
        let lhs = space.translation_image(g).adjoint() * &ev.coordinates;
        let rhs = &ev.coordinates * self.eigenvalue(g, ci);
        Ok((lhs - rhs).norm())
    }

    /// Largest eigen residual over all `(g, chi)` pairs.
    pub fn max_eigen_residual(&self, space: &GnsSpace) -> f64 {
        let mut worst = 0.0f64;
        for g in 0..self.group.size() {
            let m = space.translation_image(g).adjoint();
            for ev in &self.eigenvectors {
                let lhs = &m * &ev.coordinates;
                let rhs = &ev.coordinates * self.eigenvalue(g, ev.character_index);
                worst = worst.max((lhs - rhs).norm());
            }
        }
        worst
    }

    /// `max_g ||R(g) R(-g) - I||`.
    pub fn reconstruction_unitarity_residual(&self) -> f64 {
        let r = self.eigenvectors.first().map_or(0, |e| e.coordinates.len());
        (0..self.group.size())
            .map(|g| {
                let prod = self.reconstruct_operator(g)
                    * self.reconstruct_operator(self.group.neg_index(g));
                frobenius(&(prod - identity(r)))
            })
            .fold(0.0, f64::max)
    }

    /// `max_chi |<f|F_chi>_formula - <f|F_chi>_coordinates|`.
    pub fn functional_agreement(&self, space: &GnsSpace, f: &GroupFunction) -> f64 {
        self.eigenvectors
            .iter()
            .map(|ev| (ev.apply(f) - ev.apply_via_coordinates(space, f)).norm())
            .fold(0.0, f64::max)
    }
}

/// The unitary `W : H_phi -> L^2(support, nu)` realizing `pi_phi ~ pi_nu`.
#[derive(Debug, Clone)]
pub struct Intertwiner {
    /// Rows are `phase(chi) * F_chi^dagger` in model order.
    pub matrix: CMatrix,
    /// `||W^dagger W - I||`.
    pub unitarity_residual: f64,
    /// `max_g ||W pi_phi(g) - pi_nu(g) W||`.
    pub intertwining_residual: f64,
    /// `||W eta - xi||`: `W` carries the GNS cyclic vector onto `xi`.
    pub cyclic_vector_residual: f64,
}

impl Intertwiner {
    /// `max_g ||V W pi_phi(g) - pi(g) V W||` against the original representation.
    pub fn embedding_residual(&self, model: &DiagonalModel, space: &GnsSpace, rep: &UnitaryRep) -> f64 {
        let vw = model.columns() * &self.matrix;
        (0..model.group().size())
            .map(|g| frobenius(&(&vw * space.translation_image(g) - rep.apply_index(g) * &vw)))
            .fold(0.0, f64::max)
    }
}

/// Builds the intertwiner between the GNS representation of
/// `phi_from_cyclic(model, xi)` and the multiplication model.
pub fn intertwiner(space: &GnsSpace, model: &DiagonalModel, xi: &DualFunction) -> Result<Intertwiner> {
    let xi = restrict_to_model(model, xi);
    let decomposition = build_decomposition(space, &xi)?;
    if decomposition.support() != model.support() {
        return Err(Error::Inconsistency(format!(
            "decomposition support {:?} differs from model support {:?}",
            decomposition.support(),
            model.support()
        )));
    }
    let r = space.dim();
    let s = model.support().len();
    let mut w = CMatrix::zeros(s, r);
    for (k, (ev, phase)) in decomposition
        .eigenvectors
        .iter()
        .zip(&decomposition.phases)
        .enumerate()
    {
        let row = ev.coordinates.adjoint() * *phase;
        w.set_row(k, &row);
    }
    let unitarity_residual = frobenius(&(w.adjoint() * &w - identity(r)));
    let intertwining_residual = (0..model.group().size())
        .map(|g| {
            frobenius(&(&w * space.translation_image(g) - model.multiplication_operator(g) * &w))
        })
        .fold(0.0, f64::max);
    let xi_model = CVector::from_iterator(s, model.support().iter().map(|&chi| xi.values()[chi]));
    let cyclic_vector_residual = (&w * space.eta() - xi_model).norm();
    Ok(Intertwiner {
        matrix: w,
        unitarity_residual,
        intertwining_residual,
        cyclic_vector_residual,
    })
}

/// Row of an eigenvalue table, for reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRow {
    pub element: crate::group::Element,
    /// `<chi|g>` for each support character, in support order.
    pub eigenvalues: Vec<Complex64>,
}

impl SpectralDecomposition {
    pub fn eigenvalue_table(&self) -> Vec<EigenvalueRow> {
        (0..self.group.size())
            .map(|g| EigenvalueRow {
                element: self.group.element(g),
                eigenvalues: self
                    .support
                    .iter()
                    .map(|&chi| self.eigenvalue(g, chi))
                    .collect(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gns::gns_construct;
    use crate::representation::{cyclic_decomposition, diagonalize, spectral_measure};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn regular_model(orders: &[usize]) -> (UnitaryRep, DiagonalModel) {
        let g = Group::new(orders).unwrap();
        let rep = UnitaryRep::regular(&g);
        let pvm = spectral_measure(&rep).unwrap();
        let comp = &cyclic_decomposition(&pvm)[0];
        let model = diagonalize(comp, &pvm).unwrap();
        (rep, model)
    }

    #[test]
    fn phi_examples() {
        let (_, model) = regular_model(&[5]);
        let phi = phi_from_cyclic(&model, &DualFunction::ones(model.group())).unwrap();
        let want = GroupFunction::from_fn(model.group(), |g| c(if g == 0 { 5.0 } else { 0.0 }, 0.0));
        assert!(phi.max_abs_diff(&want) < 1e-13);

        let g = Group::cyclic(3).unwrap();
        let single = DiagonalModel::multiplication(&g, vec![0]);
        let phi = phi_from_cyclic(&single, &DualFunction::ones(&g)).unwrap();
        assert!(phi.max_abs_diff(&GroupFunction::from_fn(&g, |_| c(1., 0.))) < 1e-15);

        let (_, model) = regular_model(&[2]);
        let phi = phi_from_cyclic(&model, &DualFunction::ones(model.group())).unwrap();
        assert!(phi.max_abs_diff(&GroupFunction::from_fn(model.group(), |g| c(if g == 0 { 2. } else { 0. }, 0.))) < 1e-15);
        assert!(phi.is_positive_type(1e-10).unwrap().verdict);
    }

    #[test]
    fn vanishing_xi_is_not_cyclic() {
        let (_, model) = regular_model(&[3]);
        let xi = DualFunction::new(model.group().clone(), vec![c(1., 0.), c(0., 0.), c(1., 0.)]).unwrap();
        assert!(matches!(
            phi_from_cyclic(&model, &xi),
            Err(Error::NotCyclic { character }) if character == vec![1]
        ));
    }

    #[test]
    fn regular_z2_decomposition() {
        let (rep, model) = regular_model(&[2]);
        let xi = DualFunction::ones(model.group());
        let phi = phi_from_cyclic(&model, &xi).unwrap();
        let space = gns_construct(&phi, 1e-10).unwrap();
        let d = build_decomposition(&space, &xi).unwrap();
        assert_eq!(d.eigenvectors().len(), 2);
        assert!(d.eigenvectors().iter().all(|e| (e.weight - 1.0).abs() < 1e-15));
        assert!(d.reconstruction_residual(&space) < 1e-12);
        assert!(d.resolution_residual(&space) < 1e-12);
        let r = d.eigen_residual(&space, 1, &Character(vec![1])).unwrap();
        assert!(r < 1e-12);
        assert!((d.eigenvalue(1, 1) - c(-1., 0.)).norm() < 1e-15);

        let w = intertwiner(&space, &model, &xi).unwrap();
        assert_eq!(w.matrix.shape(), (2, 2));
        assert!(w.unitarity_residual < 1e-12);
        assert!(w.intertwining_residual < 1e-12);
        assert!(w.cyclic_vector_residual < 1e-12);
        assert!(w.embedding_residual(&model, &space, &rep) < 1e-12);
    }

    #[test]
    fn single_character() {
        let g = Group::cyclic(4).unwrap();
        let model = DiagonalModel::multiplication(&g, vec![1]);
        let xi = restrict_to_model(&model, &DualFunction::ones(&g));
        let phi = phi_from_cyclic(&model, &xi).unwrap();
        let space = gns_construct(&phi, 1e-10).unwrap();
        assert_eq!(space.dim(), 1);
        let d = build_decomposition(&space, &xi).unwrap();
        assert_eq!(d.eigenvectors().len(), 1);
        let f = GroupFunction::from_fn(&g, |i| c(i as f64, 1.0));
        let ev = &d.eigenvectors()[0];
        let direct: Complex64 = f.values().iter().enumerate().map(|(x, &v)| g.pairing_by_index(x, 1) * v).sum();
        assert!((ev.apply(&f) - direct.conj()).norm() < 1e-13);
        assert!((ev.apply_via_coordinates(&space, &f) - ev.apply(&f)).norm() < 1e-12);

        let w = intertwiner(&space, &model, &xi).unwrap();
        assert_eq!(w.matrix.shape(), (1, 1));
        assert!((w.matrix[(0, 0)].norm() - 1.0).abs() < 1e-13);
        assert!(w.intertwining_residual < 1e-12);
    }

    #[test]
    fn eigen_residual_outside_support() {
        let g = Group::cyclic(4).unwrap();
        let model = DiagonalModel::multiplication(&g, vec![1, 2]);
        let xi = restrict_to_model(&model, &DualFunction::ones(&g));
        let space = gns_construct(&phi_from_cyclic(&model, &xi).unwrap(), 1e-10).unwrap();
        let d = build_decomposition(&space, &xi).unwrap();
        assert!(matches!(
            d.eigen_residual(&space, 1, &Character(vec![3])),
            Err(Error::OutsideSupport(_))
        ));
    }

    #[test]
    fn z6_exhaustive_sweep() {
        let (_, model) = regular_model(&[6]);
        let xi = DualFunction::ones(model.group());
        let space = gns_construct(&phi_from_cyclic(&model, &xi).unwrap(), 1e-10).unwrap();
        let d = build_decomposition(&space, &xi).unwrap();
        for g in 0..6 {
            for chi in model.group().dual_group() {
                assert!(d.eigen_residual(&space, g, &chi).unwrap() < 1e-9);
            }
        }
        assert!(d.max_eigen_residual(&space) < 1e-9);
    }

    #[test]
    fn support_mismatch_is_inconsistent() {
        let (_, model) = regular_model(&[3]);
        let xi = DualFunction::ones(model.group());
        let space = gns_construct(&phi_from_cyclic(&model, &xi).unwrap(), 1e-10).unwrap();
        let smaller = DualFunction::new(model.group().clone(), vec![c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap();
        assert!(matches!(
            build_decomposition(&space, &smaller),
            Err(Error::Inconsistency(_))
        ));
    }
}
