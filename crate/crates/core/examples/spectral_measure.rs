//! Projection-valued measure of the regular representation of Z_3 x Z_3.

use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::new(&[3, 3])?;
    let rep = UnitaryRep::regular(&group);
    let pvm = spectral_measure(&rep)?;

    for chi in pvm.support_characters() {
        println!("chi = {:?}: multiplicity {}", chi.coords(), pvm.multiplicity(&chi)?);
    }
    let res = pvm.residuals();
    println!(
        "idempotency {:.1e}, orthogonality {:.1e}, completeness {:.1e}, reconstruction {:.1e}",
        res.idempotency, res.orthogonality, res.completeness, res.reconstruction
    );

    // pi(f) through the measure agrees with sum_g f(g) pi(g)
    let f = GroupFunction::from_fn(&group, |g| Complex64::new(1.0, g as f64));
    let via_measure = pvm.apply_algebra(&f)?;
    let direct = rep.apply_function(&f)?;
    println!("algebra lift error: {:.1e}", (via_measure - direct).norm());
    Ok(())
}
