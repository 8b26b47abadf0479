//! Fourier transform, convolution and Plancherel on Z_2 x Z_4.

use abelian_spectra::prelude::*;

fn main() -> abelian_spectra::Result<()> {
    let group = Group::new(&[2, 4])?;
    let f = GroupFunction::from_fn(&group, |i| Complex64::new(i as f64, 1.0));
    let h = GroupFunction::delta(&group, 3);

    let fhat = f.fourier();
    for (i, v) in fhat.values().iter().enumerate() {
        println!("fhat({:?}) = {:.4}", group.character(i).coords(), v);
    }

    // convolution becomes pointwise multiplication
    let lhs = f.convolve(&h)?.fourier();
    let rhs = DualFunction::from_fn(&group, |chi| fhat.values()[chi] * h.fourier().values()[chi]);
    println!("convolution theorem error: {:.2e}", lhs.max_abs_diff(&rhs));

    let energy: f64 = f.values().iter().map(|z| z.norm_sqr()).sum();
    let dual: f64 = fhat.values().iter().map(|z| z.norm_sqr()).sum::<f64>() * group.dual_weight();
    println!("Plancherel: {energy} vs {dual}");
    println!("round trip error: {:.2e}", fhat.inverse_fourier().max_abs_diff(&f));
    Ok(())
}
