//! Exact harmonic analysis on finite abelian groups.
//!
//! The crate covers the Gelfand-Fourier transform on the group algebra, the
//! projection-valued spectral measure of a unitary representation, the GNS
//! construction from a positive-type function and the expansion of the GNS
//! representation in generalized eigenvectors labelled by characters.
//!
//! ```
//! use abelian_spectra::prelude::*;
//!
//! let z4 = Group::cyclic(4).unwrap();
//! let delta = GroupFunction::delta(&z4, 0);
//! let hat = delta.fourier();
//! assert!(hat.values().iter().all(|z| (z - 1.0).norm() < 1e-15));
//! ```

// Tolerance checks are written as `!(x < tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod gns;
pub mod group;
pub mod io;
pub mod linalg;
pub mod random;
pub mod representation;
pub mod rigging;
pub mod selftest;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::algebra::{DualFunction, GroupFunction, Positivity};
    pub use crate::error::{Error, Result};
    pub use crate::gns::{gns_construct, GnsSpace};
    pub use crate::group::{Character, Element, Group};
    pub use crate::linalg::{CMatrix, CVector};
    pub use crate::representation::{
        cyclic_decomposition, diagonalize, dirac_kets, functional_calculus, one_parameter_group,
        spectral_measure, CyclicComponent, DiagonalModel, KetSystem, ProjectionValuedMeasure,
        UnitaryRep,
    };
    pub use crate::rigging::{
        build_decomposition, intertwiner, phi_from_cyclic, restrict_to_model, Intertwiner,
        SpectralDecomposition,
    };
    pub use num_complex::Complex64;
}
