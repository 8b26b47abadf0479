//! Two independent positivity tests for functions on Z_6.

use abelian_spectra::prelude::*;

fn report(name: &str, phi: &GroupFunction) -> abelian_spectra::Result<()> {
    let p = phi.is_positive_type(1e-10)?;
    println!(
        "{name}: positive={} (Gram min eigenvalue {:.3}, min Re transform {:.3})",
        p.verdict, p.min_gram_eigenvalue, p.min_fourier
    );
    Ok(())
}

fn main() -> abelian_spectra::Result<()> {
    let group = Group::cyclic(6)?;
    report("delta_e", &GroupFunction::delta(&group, 0))?;

    // a character is of positive type with a one-point spectrum
    let chi = group.character(1);
    let character = GroupFunction::from_fn(&group, |g| group.pairing(&group.element(g), &chi).unwrap());
    report("character", &character)?;

    let bumpy = GroupFunction::from_fn(&group, |g| Complex64::from(if g == 3 { 2.0 } else { 1.0 }));
    report("bumpy", &bumpy)?;
    Ok(())
}
