//! GNS space of a positive-type function with partial Fourier support.

use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::cyclic(6)?;
    // transform weights 3, 1, 0, 0, 1, 0 give a rank-3 space
    let weights = [3.0, 1.0, 0.0, 0.0, 1.0, 0.0];
    let phi = DualFunction::from_fn(&group, |chi| Complex64::from(weights[chi])).inverse_fourier();

    let space = gns_construct(&phi, 1e-10)?;
    println!("rank {}", space.dim());
    let eta: Vec<_> = space.eta().iter().map(|z| format!("{z:.4}")).collect();
    println!("eta = [{}]", eta.join(", "));
    println!("reconstruction error {:.1e}", space.reconstruct_phi().max_abs_diff(&phi));
    println!("unitarity residual {:.1e}", space.unitarity_residual());

    let rep = space.representation()?;
    let pvm = spectral_measure(&rep)?;
    let support: Vec<_> = pvm.support_characters().into_iter().map(|c| c.0).collect();
    println!("spectrum of pi_phi: {support:?}");
    Ok(())
}
