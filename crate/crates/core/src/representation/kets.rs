use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ProjectionValuedMeasure;
use crate::algebra::DualFunction;
use crate::group::Character;
use crate::linalg::CVector;

/// A Dirac ket `|chi k>`: the `k`-th basis vector of the range of `P(chi)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ket {
    pub character: Character,
    #[serde(skip)]
    pub character_index: usize,
    /// 1-based index within the multiplicity of `chi`.
    pub k: usize,
    pub vector: Vec<Complex64>,
}

/// A complete system of Dirac kets for a projection-valued measure.
///
/// In finite dimension the kets are honest vectors and the exceptional null
/// set of characters is empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KetSystem {
    pub kets: Vec<Ket>,
}

pub fn dirac_kets(pvm: &ProjectionValuedMeasure) -> KetSystem {
    let group = pvm.group();
    let mut kets = Vec::with_capacity(pvm.dim());
    for &chi in pvm.support() {
        let basis = pvm.range_basis(chi);
        for k in 0..basis.ncols() {
            kets.push(Ket {
                character: group.character(chi),
                character_index: chi,
                k: k + 1,
                vector: basis.column(k).iter().copied().collect(),
            });
        }
    }
    KetSystem { kets }
}

impl KetSystem {
    pub fn len(&self) -> usize {
        self.kets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kets.is_empty()
    }

    /// `<phi|chi k>` with the inner product antilinear in its first slot.
    fn bracket(phi: &CVector, ket: &Ket) -> Complex64 {
        phi.iter()
            .zip(&ket.vector)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `sum_{chi in E} sum_k <phi|chi k> conj(<psi|chi k>) nu(chi)`, the
    /// ket-side of `<phi, P(E) psi>`. `subset` holds character indices.
    pub fn spectral_form(
        &self,
        pvm: &ProjectionValuedMeasure,
        phi: &CVector,
        psi: &CVector,
        subset: &[usize],
    ) -> Complex64 {
        self.kets
            .iter()
            .filter(|ket| subset.contains(&ket.character_index))
            .map(|ket| {
                Self::bracket(phi, ket)
                    * Self::bracket(psi, ket).conj()
                    * pvm.measure(ket.character_index)
            })
            .sum()
    }
}

/// `sum_chi f(chi) delta_{chi'}(chi) nu(chi)` over the support of `nu`:
/// evaluation of `f` at `chi'`.
pub fn dirac_delta_integral(
    f: &DualFunction,
    pvm: &ProjectionValuedMeasure,
    at: usize,
) -> Complex64 {
    pvm.support()
        .iter()
        .filter(|&&chi| chi == at)
        .map(|&chi| f.values()[chi] * pvm.measure(chi))
        .sum()
}
