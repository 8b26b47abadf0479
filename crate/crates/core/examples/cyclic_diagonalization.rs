//! Cyclic decomposition of a representation with multiplicity, and the
//! multiplication operator on each component.

use abelian_spectra::prelude::*;
use abelian_spectra::random::{random_representation, rng};

fn main() -> abelian_spectra::Result<()> {
    let group = Group::new(&[2, 4])?;
    let mut r = rng(4);
    let rep = random_representation(&mut r, &group, 8, false);
    let pvm = spectral_measure(&rep)?;
    println!("multiplicities: {:?}", pvm.multiplicities());

    for (i, component) in cyclic_decomposition(&pvm).iter().enumerate() {
        let model = diagonalize(component, &pvm)?;
        let (off, diag) = model.residuals(&pvm);
        let support: Vec<_> = model.support_characters().into_iter().map(|c| c.0).collect();
        println!("component {i}: support {support:?}, off-diagonal {off:.1e}, diagonal {diag:.1e}");
    }
    Ok(())
}
