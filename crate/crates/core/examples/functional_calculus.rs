//! Functional calculus and one-parameter unitary groups.

use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::cyclic(5)?;
    let pvm = spectral_measure(&UnitaryRep::regular(&group))?;
    let labels: Vec<f64> = pvm.support().iter().map(|&chi| chi as f64 - 2.0).collect();
    let complex_labels: Vec<Complex64> = labels.iter().map(|&a| Complex64::from(a)).collect();

    let a = functional_calculus(&pvm, &complex_labels, Complex64::from)?;
    let squared = functional_calculus(&pvm, &complex_labels, |x| Complex64::from(x * x))?;
    println!("f(x) = x^2 agrees with A*A: {:.1e}", (&a * &a - squared).norm());

    let (t1, t2) = (0.3, 1.1);
    let u1 = one_parameter_group(&pvm, &labels, t1);
    let u2 = one_parameter_group(&pvm, &labels, t2);
    let u12 = one_parameter_group(&pvm, &labels, t1 + t2);
    println!("group law residual: {:.1e}", (u1 * u2 - u12).norm());
    Ok(())
}
