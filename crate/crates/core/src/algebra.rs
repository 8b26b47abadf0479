//! The group algebra `L^1(G)`: convolution, involution, the Gelfand-Fourier
//! transform and positive-type testing.
//!
//! On a finite group `L^1`, `L^2` and `L^inf` are the same vector space, so a
//! single [`GroupFunction`] type carries all of them. Haar measure is the
//! counting measure and the dual side carries weight `1/|G|` per character.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Character, Element, Group};
use crate::linalg::{hermitian_eigen, CMatrix, ZERO};

/// Default tolerance for positive-type decisions.
pub const DEFAULT_POSITIVITY_TOL: f64 = 1e-10;

/// A complex function on the group, indexed by element enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction {
    group: Group,
    values: Vec<Complex64>,
}

/// A complex function on the dual group, indexed by character enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct DualFunction {
    group: Group,
    values: Vec<Complex64>,
}

fn check_len(group: &Group, values: &[Complex64]) -> Result<()> {
    if values.len() != group.size() {
        return Err(Error::Length {
            expected: group.size(),
            got: values.len(),
        });
    }
    Ok(())
}

fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

impl GroupFunction {
    pub fn new(group: Group, values: Vec<Complex64>) -> Result<Self> {
        check_len(&group, &values)?;
        Ok(Self { group, values })
    }

    pub fn from_fn(group: &Group, f: impl FnMut(usize) -> Complex64) -> Self {
        let values = (0..group.size()).map(f).collect();
        Self {
            group: group.clone(),
            values,
        }
    }

    pub fn zeros(group: &Group) -> Self {
        Self::from_fn(group, |_| ZERO)
    }

    /// Indicator of the element with the given enumeration index.
    pub fn delta(group: &Group, index: usize) -> Self {
        Self::from_fn(group, |i| if i == index { Complex64::from(1.0) } else { ZERO })
    }

    pub fn delta_at(group: &Group, g: &Element) -> Result<Self> {
        Ok(Self::delta(group, group.index_of(g)?))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn value_at(&self, g: &Element) -> Result<Complex64> {
        Ok(self.values[self.group.index_of(g)?])
    }

    pub fn max_abs_diff(&self, other: &GroupFunction) -> f64 {
        max_abs_diff(&self.values, &other.values)
    }

    fn same_group(&self, other: &GroupFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!(
                "{:?} vs {:?}",
                self.group.orders(),
                other.group.orders()
            )));
        }
        Ok(())
    }

    /// `(f * h)(g) = sum_{g'} f(g') h(g - g')`.
    pub fn convolve(&self, other: &GroupFunction) -> Result<GroupFunction> {
        self.same_group(other)?;
        let g = &self.group;
        let w = g.haar_weight();
        Ok(Self::from_fn(g, |x| {
            let mut acc = ZERO;
            for (y, &fy) in self.values.iter().enumerate() {
                if fy != ZERO {
                    acc += fy * other.values[g.sub_index(x, y)];
                }
            }
            acc * w
        }))
    }

    /// `f*(g) = conj(f(-g))`.
    pub fn involution(&self) -> GroupFunction {
        let g = &self.group;
        Self::from_fn(g, |x| self.values[g.neg_index(x)].conj())
    }

    /// Left translation `(L_g f)(x) = f(x - g)`.
    pub fn translate(&self, g: usize) -> GroupFunction {
        let grp = &self.group;
        Self::from_fn(grp, |x| self.values[grp.sub_index(x, g)])
    }

    /// The Gelfand-Fourier transform `f^(chi) = sum_g conj(<g|chi>) f(g)`.
    ///
    /// The value at `chi` is also the functional `Lambda_chi(f)`.
    pub fn fourier(&self) -> DualFunction {
        let g = &self.group;
        let w = g.haar_weight();
        let values = (0..g.size())
            .map(|chi| {
                self.values
                    .iter()
                    .enumerate()
                    .map(|(x, &fx)| g.pairing_by_index(x, chi).conj() * fx)
                    .sum::<Complex64>()
                    * w
            })
            .collect();
        DualFunction {
            group: g.clone(),
            values,
        }
    }

    /// `Lambda_chi(f)` for a single character.
    pub fn lambda(&self, chi: &Character) -> Result<Complex64> {
        let g = &self.group;
        let c = g.character_index(chi)?;
        Ok(self
            .values
            .iter()
            .enumerate()
            .map(|(x, &fx)| g.pairing_by_index(x, c).conj() * fx)
            .sum::<Complex64>()
            * g.haar_weight())
    }

    /// Matrix of the Hermitian form `<h|f>_phi = sum conj(h(g')) M[g',g] f(g)`
    /// with `M[g', g] = phi(g - g')`.
    ///
    /// This argument order makes `<delta_e | delta_g>_phi = phi(g)`, so the
    /// GNS cyclic vector reproduces `phi` itself rather than its conjugate.
    pub fn hermitian_form(&self) -> CMatrix {
        let g = &self.group;
        let n = g.size();
        CMatrix::from_fn(n, n, |row, col| self.values[g.sub_index(col, row)])
    }

    /// Decides whether `self` is of positive type, two ways.
    ///
    /// Route (a) diagonalizes the Hermitian and skew-Hermitian parts of the
    /// Gram matrix; route (b) inspects the Fourier transform. The two sets of
    /// diagnostics must agree, otherwise an [`Error::Inconsistency`] is raised.
    ///
    /// `tol` is relative to `max(1, sum_g |phi(g)|)`, which bounds the
    /// spectral radius of the Gram matrix.
    pub fn is_positive_type(&self, tol: f64) -> Result<Positivity> {
        let m = self.hermitian_form();
        let (herm_vals, _) = hermitian_eigen(&m);
        let skew = (&m - m.adjoint()) * Complex64::new(0.0, -0.5);
        let (skew_vals, _) = hermitian_eigen(&skew);
        let min_gram_eigenvalue = herm_vals.first().copied().unwrap_or(0.0);
        let max_gram_skew = skew_vals.iter().fold(0.0f64, |a, v| a.max(v.abs()));

        let fhat = self.fourier();
        let min_fourier = fhat
            .values
            .iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min);
        let max_fourier_imag = fhat.values.iter().fold(0.0f64, |a, z| a.max(z.im.abs()));

        let scale = self.values.iter().map(|z| z.norm()).sum::<f64>().max(1.0);
        let agree = 1e-8 * scale;
        if (min_gram_eigenvalue - min_fourier).abs() > agree
            || (max_gram_skew - max_fourier_imag).abs() > agree
        {
            return Err(Error::Inconsistency(format!(
                "positivity routes disagree: Gram ({min_gram_eigenvalue:e}, skew {max_gram_skew:e}) \
                 vs Fourier ({min_fourier:e}, imag {max_fourier_imag:e})"
            )));
        }

        let tol = tol * scale;
        let gram_ok = min_gram_eigenvalue >= -tol && max_gram_skew < tol;
        let fourier_ok = min_fourier >= -tol && max_fourier_imag < tol;
        Ok(Positivity {
            verdict: gram_ok && fourier_ok,
            gram_verdict: gram_ok,
            fourier_verdict: fourier_ok,
            min_fourier,
            min_gram_eigenvalue,
            max_fourier_imag,
            max_gram_skew,
        })
    }
}

/// Diagnostics of a positive-type test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Positivity {
    pub verdict: bool,
    /// Route (a): Gram matrix positive semi-definite.
    pub gram_verdict: bool,
    /// Route (b): non-negative Fourier transform.
    pub fourier_verdict: bool,
    pub min_fourier: f64,
    pub min_gram_eigenvalue: f64,
    pub max_fourier_imag: f64,
    pub max_gram_skew: f64,
}

impl DualFunction {
    pub fn new(group: Group, values: Vec<Complex64>) -> Result<Self> {
        check_len(&group, &values)?;
        Ok(Self { group, values })
    }

    pub fn from_fn(group: &Group, f: impl FnMut(usize) -> Complex64) -> Self {
        Self {
            group: group.clone(),
            values: (0..group.size()).map(f).collect(),
        }
    }

    pub fn ones(group: &Group) -> Self {
        Self::from_fn(group, |_| Complex64::from(1.0))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn value_at(&self, chi: &Character) -> Result<Complex64> {
        Ok(self.values[self.group.character_index(chi)?])
    }

    pub fn max_abs_diff(&self, other: &DualFunction) -> f64 {
        max_abs_diff(&self.values, &other.values)
    }

    /// `f(g) = (1/|G|) sum_chi <g|chi> F(chi)`.
    pub fn inverse_fourier(&self) -> GroupFunction {
        let g = &self.group;
        let w = g.dual_weight() / g.haar_weight();
        GroupFunction::from_fn(g, |x| {
            self.values
                .iter()
                .enumerate()
                .map(|(chi, &v)| g.pairing_by_index(x, chi) * v)
                .sum::<Complex64>()
                * w
        })
    }
}
