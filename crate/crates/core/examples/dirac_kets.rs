//! Dirac kets and the spectral form <phi|P(E)|psi>.

use abelian_spectra::linalg::CVector;
use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::cyclic(4)?;
    let rep = UnitaryRep::trivial(&group, 2);
    let pvm = spectral_measure(&rep)?;
    let kets = dirac_kets(&pvm);
    for ket in &kets.kets {
        println!("|{:?}, {}>", ket.character.coords(), ket.k);
    }

    let regular = UnitaryRep::regular(&group);
    let pvm = spectral_measure(&regular)?;
    let kets = dirac_kets(&pvm);
    let phi = CVector::from_fn(4, |i, _| Complex64::new(i as f64, 1.0));
    let psi = CVector::from_fn(4, |i, _| Complex64::new(1.0, -(i as f64)));
    let subset = [0, 2];
    let direct = phi.dotc(&(pvm.projection_of(&subset) * &psi));
    let by_kets = kets.spectral_form(&pvm, &phi, &psi, &subset);
    println!("direct {direct:.6}, by kets {by_kets:.6}");
    Ok(())
}
