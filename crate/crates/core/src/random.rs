//! Seeded random instances: groups, functions, unitaries and representations.
//!
//! Everything draws from a [`ChaCha8Rng`] so that a seed fixes the output on
//! every platform.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{DualFunction, GroupFunction};
use crate::group::{Element, Group};
use crate::linalg::{diag, CMatrix, ZERO};
use crate::representation::UnitaryRep;
use num_complex::Complex64;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A product of at most three cyclic factors with `|G| <= max_size`.
pub fn random_group(rng: &mut Rng64, max_size: usize) -> Group {
    let max_size = max_size.max(1);
    let factors = rng.random_range(1..=3usize);
    let mut orders = Vec::with_capacity(factors);
    let mut room = max_size;
    for _ in 0..factors {
        let n = rng.random_range(1..=room);
        orders.push(n);
        room /= n;
        if room < 2 {
            break;
        }
    }
    Group::new(&orders).expect("orders within cap")
}

/// Uniform on the square `[-1, 1] x [-1, 1]`.
pub fn random_complex(rng: &mut Rng64) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

pub fn random_gaussian(rng: &mut Rng64) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

pub fn random_function(rng: &mut Rng64, group: &Group) -> GroupFunction {
    GroupFunction::from_fn(group, |_| random_complex(rng))
}

/// A positive-type function: the inverse transform of a non-negative dual
/// function that vanishes on roughly a third of the characters (never all).
pub fn random_positive_type(rng: &mut Rng64, group: &Group) -> GroupFunction {
    let n = group.size();
    let keep = rng.random_range(0..n);
    let dual = DualFunction::from_fn(group, |chi| {
        if chi != keep && rng.random_bool(1.0 / 3.0) {
            ZERO
        } else {
            Complex64::from(rng.random_range(0.05..2.0))
        }
    });
    dual.inverse_fourier()
}

/// Haar-random unitary via QR of a complex Gaussian matrix.
pub fn random_unitary(rng: &mut Rng64, dim: usize) -> CMatrix {
    let z = CMatrix::from_fn(dim, dim, |_, _| random_gaussian(rng));
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::from(1.0) };
        let col = q.column(j) * phase;
        q.set_column(j, &col);
    }
    q
}

/// Character labels (enumeration indices) for a random representation.
///
/// Multiplicity-free draws need `dim <= |G|` distinct characters; otherwise
/// characters are drawn with replacement from a small pool so that
/// multiplicities above one are common.
pub fn random_labels(rng: &mut Rng64, group: &Group, dim: usize, multiplicity_free: bool) -> Vec<usize> {
    let n = group.size();
    if multiplicity_free {
        let mut idx = sample(rng, n, dim.min(n)).into_vec();
        idx.sort_unstable();
        idx
    } else {
        let pool = rng.random_range(1..=n.min(dim.max(1)));
        let choices = sample(rng, n, pool).into_vec();
        (0..dim).map(|_| choices[rng.random_range(0..pool)]).collect()
    }
}

/// `U_j = Q diag(<gen_j|chi_k>) Q^dagger` for the given character labels.
pub fn representation_from_labels(rng: &mut Rng64, group: &Group, labels: &[usize]) -> UnitaryRep {
    let q = random_unitary(rng, labels.len());
    let generators = (0..group.rank())
        .map(|j| {
            let mut coords = vec![0; group.rank()];
            coords[j] = 1 % group.orders()[j];
            let gen = group.index_of(&Element(coords)).expect("generator");
            let d: Vec<Complex64> = labels.iter().map(|&chi| group.pairing_by_index(gen, chi)).collect();
            &q * diag(&d) * q.adjoint()
        })
        .collect();
    UnitaryRep::new(group.clone(), generators).expect("conjugated diagonal representation is valid")
}

pub fn random_representation(
    rng: &mut Rng64,
    group: &Group,
    max_dim: usize,
    multiplicity_free: bool,
) -> UnitaryRep {
    let cap = if multiplicity_free { max_dim.min(group.size()) } else { max_dim };
    let dim = rng.random_range(1..=cap.max(1));
    let labels = random_labels(rng, group, dim, multiplicity_free);
    representation_from_labels(rng, group, &labels)
}

/// Random subset of `0..n` (each index with probability one half).
pub fn random_subset(rng: &mut Rng64, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}
