//! Generalized eigenvectors of a cyclic representation of Z_6 and the
//! equivalence with its multiplication model.

use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::cyclic(6)?;
    let rep = UnitaryRep::regular(&group);
    let pvm = spectral_measure(&rep)?;
    let component = cyclic_decomposition(&pvm).remove(0);
    let model = diagonalize(&component, &pvm)?;

    let xi = DualFunction::from_fn(&group, |chi| Complex64::from_polar(1.0 + chi as f64 / 6.0, chi as f64));
    let phi = phi_from_cyclic(&model, &xi)?;
    let space = gns_construct(&phi, 1e-10)?;
    let decomposition = build_decomposition(&space, &xi)?;

    for ev in decomposition.eigenvectors() {
        println!("F_{:?}: weight {:.4}", ev.character.coords(), ev.weight);
    }
    println!("operator reconstruction {:.1e}", decomposition.reconstruction_residual(&space));
    println!("eigen equation {:.1e}", decomposition.max_eigen_residual(&space));

    let w = intertwiner(&space, &model, &xi)?;
    println!(
        "intertwiner: unitarity {:.1e}, intertwining {:.1e}, W eta = xi within {:.1e}",
        w.unitarity_residual, w.intertwining_residual, w.cyclic_vector_residual
    );
    Ok(())
}
