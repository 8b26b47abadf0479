//! Reference computations that do not share code paths with the library
//! routines they check.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::GroupFunction;
use crate::group::{Element, Group};
use crate::linalg::{hermitian_eigen, rank, spectral_norm, CMatrix};
use crate::random::Rng64;
use crate::representation::{ProjectionValuedMeasure, UnitaryRep};

/// Spectral projections assembled from a joint eigendecomposition of the
/// generator images.
///
/// A random real combination of the Hermitian and skew-Hermitian parts of
/// the commuting generators is diagonalized; each eigenvector is then
/// labelled by the character read off from its Rayleigh quotients.
pub fn joint_eigen_projections(rep: &UnitaryRep, rng: &mut Rng64) -> Vec<CMatrix> {
    let group = rep.group();
    let dim = rep.dim();
    let half = Complex64::new(0.5, 0.0);
    let minus_half_i = Complex64::new(0.0, -0.5);
    let mut h = CMatrix::zeros(dim, dim);
    for u in rep.generators() {
        let a: f64 = rng.random_range(-1.0..1.0);
        let b: f64 = rng.random_range(-1.0..1.0);
        h += (u + u.adjoint()) * half * Complex64::from(a);
        h += (u - u.adjoint()) * minus_half_i * Complex64::from(b);
    }
    let (_, vectors) = hermitian_eigen(&h);
    let mut projections = vec![CMatrix::zeros(dim, dim); group.size()];
    for k in 0..dim {
        let v = vectors.column(k).into_owned();
        let coords: Vec<usize> = rep
            .generators()
            .iter()
            .zip(group.orders())
            .map(|(u, &n)| {
                let lambda = v.dotc(&(u * &v));
                let turns = lambda.arg() / (2.0 * PI) * n as f64;
                (turns.round() as i64).rem_euclid(n as i64) as usize
            })
            .collect();
        let chi = group.index_of(&Element(coords)).expect("valid character");
        projections[chi] += &v * v.adjoint();
    }
    projections
}

/// Sine of the largest principal angle between the ranges of the two
/// families of projections, maximized over characters. Rank mismatches
/// count as a right angle.
pub fn max_subspace_angle(pvm: &ProjectionValuedMeasure, oracle: &[CMatrix]) -> f64 {
    pvm.projections()
        .iter()
        .zip(oracle)
        .map(|(p, q)| {
            if rank(p, 1e-6) != rank(q, 1e-6) {
                1.0
            } else {
                spectral_norm(&(p - q)).min(1.0)
            }
        })
        .fold(0.0, f64::max)
}

/// The quadratic form `sum_g sum_g' conj(f(g)) f(g + g') phi(g')` by direct
/// double summation over group elements.
pub fn positive_type_form(phi: &GroupFunction, f: &GroupFunction) -> Complex64 {
    let group: &Group = phi.group();
    let mut acc = Complex64::new(0.0, 0.0);
    for g in group.elements() {
        for gp in group.elements() {
            let sum = group.op(&g, &gp).expect("same group");
            acc += f.value_at(&g).unwrap().conj()
                * f.value_at(&sum).unwrap()
                * phi.value_at(&gp).unwrap();
        }
    }
    acc
}

/// `exp(2 pi i sum_j g_j chi_j / n_j)` in floating point, without the
/// exact phase reduction used by [`Group::pairing`].
pub fn explicit_pairing(group: &Group, g: &Element, chi: &Element) -> Complex64 {
    let phase: f64 = g
        .coords()
        .iter()
        .zip(chi.coords())
        .zip(group.orders())
        .map(|((&a, &b), &n)| (a * b) as f64 / n as f64)
        .sum();
    Complex64::cis(2.0 * PI * phase)
}

/// Eigenvalues of a unitary matrix from a random Hermitian pencil of its
/// real and imaginary parts, together with the worst eigen-equation
/// residual `|U v - lambda v|` of the recovered eigenvectors.
pub fn unitary_eigenvalues(u: &CMatrix, rng: &mut Rng64) -> (Vec<Complex64>, f64) {
    let a: f64 = rng.random_range(0.5..1.5);
    let b: f64 = rng.random_range(0.5..1.5);
    let re = (u + u.adjoint()) * Complex64::new(0.5 * a, 0.0);
    let im = (u - u.adjoint()) * Complex64::new(0.0, -0.5 * b);
    let (_, vectors) = hermitian_eigen(&(re + im));
    let mut residual = 0.0f64;
    let values = (0..u.ncols())
        .map(|k| {
            let v = vectors.column(k).into_owned();
            let uv = u * &v;
            let lambda = v.dotc(&uv);
            residual = residual.max((uv - &v * lambda).norm());
            lambda
        })
        .collect();
    (values, residual)
}
