use num_complex::Complex64;

use super::ProjectionValuedMeasure;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

const LABEL_IMAG_TOL: f64 = 1e-12;

/// `f(A) = sum_chi f(a(chi)) P(chi)` for the self-adjoint `A = sum_chi a(chi) P(chi)`.
///
/// `labels` holds one value per support character, in support order. Labels
/// must be real: a nonzero imaginary part means `A` is not self-adjoint.
pub fn functional_calculus(
    pvm: &ProjectionValuedMeasure,
    labels: &[Complex64],
    f: impl Fn(f64) -> Complex64,
) -> Result<CMatrix> {
    if labels.len() != pvm.support().len() {
        return Err(Error::Length {
            expected: pvm.support().len(),
            got: labels.len(),
        });
    }
    if let Some(bad) = labels.iter().find(|a| a.im.abs() > LABEL_IMAG_TOL) {
        return Err(Error::NotSelfAdjoint { imag: bad.im.abs() });
    }
    let dim = pvm.dim();
    Ok(pvm
        .support()
        .iter()
        .zip(labels)
        .fold(CMatrix::zeros(dim, dim), |acc, (&chi, a)| {
            acc + &pvm.projections()[chi] * f(a.re)
        }))
}

/// `exp(i t A)`, the one-parameter unitary group generated by `A`.
pub fn one_parameter_group(pvm: &ProjectionValuedMeasure, labels: &[f64], t: f64) -> CMatrix {
    let labels: Vec<Complex64> = labels.iter().map(|&a| Complex64::from(a)).collect();
    functional_calculus(pvm, &labels, |lambda| Complex64::cis(t * lambda))
        .expect("real labels of the right length")
}
