//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use abelian_spectra::algebra::DEFAULT_POSITIVITY_TOL;
use abelian_spectra::linalg::{frobenius, identity, CVector};
use abelian_spectra::prelude::*;
use abelian_spectra::random::{
    random_complex, random_function, random_group, random_positive_type, random_representation,
    random_subset, rng, Rng64,
};
use abelian_spectra::selftest::oracle;
use rand::Rng;

const BIN: &str = env!("CARGO_BIN_EXE_abelian-spectra");

type Check = fn() -> Outcome;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn fourier_engine() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut plancherel = 0.0f64;
    let mut convolution = 0.0f64;
    for orders in [vec![2], vec![6], vec![2, 4], vec![256]] {
        let g = Group::new(&orders).unwrap();
        for _ in 0..100 {
            let f = random_function(&mut r, &g);
            let h = random_function(&mut r, &g);
            let fh = f.fourier();
            let hh = h.fourier();
            let energy: f64 = f.values().iter().map(|z| z.norm_sqr()).sum();
            let dual: f64 = fh.values().iter().map(|z| z.norm_sqr()).sum::<f64>() * g.dual_weight();
            plancherel = plancherel.max((energy - dual).abs() / energy);
            let lhs = f.convolve(&h).unwrap().fourier();
            let rhs = DualFunction::from_fn(&g, |chi| fh.values()[chi] * hh.values()[chi]);
            convolution = convolution.max(lhs.max_abs_diff(&rhs));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        plancherel < 1e-12 && convolution < 1e-10 && elapsed < Duration::from_secs(10),
        format!("plancherel {plancherel:.2e}, convolution {convolution:.2e}, {:.2}s", elapsed.as_secs_f64()),
    )
}

fn bochner() -> Outcome {
    let mut r = rng(2);
    let mut disagreements = 0;
    let mut constructed_rejected = 0;
    for k in 0..200 {
        let g = random_group(&mut r, 32);
        let phi = if k < 100 {
            random_positive_type(&mut r, &g)
        } else {
            random_function(&mut r, &g)
        };
        let p = phi.is_positive_type(DEFAULT_POSITIVITY_TOL).unwrap();
        if p.gram_verdict != p.fourier_verdict {
            disagreements += 1;
        }
        if k < 100 && !p.verdict {
            constructed_rejected += 1;
        }
    }
    outcome(
        disagreements == 0 && constructed_rejected == 0,
        format!("{disagreements} disagreements, {constructed_rejected} constructed functions rejected"),
    )
}

fn seeded_reps(seed: u64, count: usize, multiplicity_free: bool) -> (Rng64, Vec<UnitaryRep>) {
    let mut r = rng(seed);
    let reps = (0..count)
        .map(|_| {
            let g = random_group(&mut r, 16);
            random_representation(&mut r, &g, 8, multiplicity_free)
        })
        .collect();
    (r, reps)
}

fn pvm() -> Outcome {
    let (mut r, reps) = seeded_reps(3, 50, false);
    let (mut recon, mut axioms, mut roots, mut angle) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for rep in &reps {
        let g = rep.group();
        let pvm = spectral_measure(rep).unwrap();
        let res = pvm.residuals();
        axioms = axioms.max(res.idempotency).max(res.orthogonality).max(res.completeness);
        for x in 0..g.size() {
            let direct = rep.apply_index(x);
            let mut sum = CMatrix::zeros(rep.dim(), rep.dim());
            for chi in 0..g.size() {
                sum += &pvm.projections()[chi] * g.pairing_by_index(x, chi);
            }
            recon = recon.max(frobenius(&(direct - sum)));

            let order = g.element_order(x) as f64;
            let (values, residual) = oracle::unitary_eigenvalues(&rep.apply_index(x), &mut r);
            roots = roots.max(residual);
            for lambda in values {
                let k = (lambda.arg() / std::f64::consts::TAU * order).round();
                roots = roots.max((lambda - Complex64::cis(std::f64::consts::TAU * k / order)).norm());
            }
        }
        let reference = oracle::joint_eigen_projections(rep, &mut r);
        angle = angle.max(oracle::max_subspace_angle(&pvm, &reference));
    }
    outcome(
        recon < 1e-9 && axioms < 1e-9 && roots < 1e-9 && angle < 1e-7,
        format!("reconstruction {recon:.2e}, axioms {axioms:.2e}, roots of unity {roots:.2e}, oracle angle {angle:.2e}"),
    )
}

fn dirac_kets_criterion() -> Outcome {
    let (mut r, reps) = seeded_reps(4, 50, false);
    let mut worst = 0.0f64;
    for rep in &reps {
        let pvm = spectral_measure(rep).unwrap();
        let kets = dirac_kets(&pvm);
        let phi = CVector::from_fn(rep.dim(), |_, _| random_complex(&mut r));
        let psi = CVector::from_fn(rep.dim(), |_, _| random_complex(&mut r));
        let subset = random_subset(&mut r, rep.group().size());
        let lhs = phi.dotc(&(pvm.projection_of(&subset) * &psi));
        // brute-force sum over kets with character in the subset
        let mut rhs = Complex64::new(0.0, 0.0);
        for ket in &kets.kets {
            if subset.contains(&ket.character_index) {
                let v = CVector::from_column_slice(&ket.vector);
                rhs += phi.dotc(&v) * v.dotc(&psi);
            }
        }
        worst = worst.max((lhs - rhs).norm());
    }
    outcome(worst < 1e-9, format!("max difference {worst:.2e}"))
}

fn diagonalization() -> Outcome {
    let (_, reps) = seeded_reps(5, 50, false);
    let (mut off, mut entries, mut components) = (0.0f64, 0.0f64, 0);
    for rep in &reps {
        let g = rep.group();
        let pvm = spectral_measure(rep).unwrap();
        for comp in cyclic_decomposition(&pvm) {
            components += 1;
            let v = &comp.isometry;
            for x in 0..g.size() {
                let m = v.adjoint() * rep.apply_index(x) * v;
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        if i == j {
                            let expected = g.pairing_by_index(x, comp.support[i]);
                            entries = entries.max((m[(i, i)] - expected).norm());
                        } else {
                            off = off.max(m[(i, j)].norm());
                        }
                    }
                }
            }
        }
    }
    outcome(
        off < 1e-9 && entries < 1e-9,
        format!("{components} components, off-diagonal {off:.2e}, diagonal {entries:.2e}"),
    )
}

fn gns() -> Outcome {
    let mut r = rng(6);
    let (mut recon, mut unitary, mut hom, mut rank_mismatch) = (0.0f64, 0.0f64, 0.0f64, 0);
    for _ in 0..100 {
        let g = random_group(&mut r, 16);
        let phi = random_positive_type(&mut r, &g);
        let space = gns_construct(&phi, DEFAULT_POSITIVITY_TOL).unwrap();
        recon = recon.max(space.reconstruct_phi().max_abs_diff(&phi));
        unitary = unitary.max(space.unitarity_residual());
        for a in 0..g.size() {
            for b in 0..g.size() {
                hom = hom.max(space.homomorphism_residual(a, b));
            }
        }
        // support of the transform computed from the explicit exponential
        let mut support = 0;
        let total: f64 = phi.values().iter().map(|z| z.norm()).sum();
        for chi in g.elements() {
            let hat: Complex64 = g
                .elements()
                .map(|x| oracle::explicit_pairing(&g, &x, &chi).conj() * phi.value_at(&x).unwrap())
                .sum();
            if hat.re > 1e-8 * total.max(1.0) {
                support += 1;
            }
        }
        if support != space.dim() {
            rank_mismatch += 1;
        }
    }
    outcome(
        recon < 1e-9 && unitary < 1e-9 && hom < 1e-9 && rank_mismatch == 0,
        format!("reconstruction {recon:.2e}, unitarity {unitary:.2e}, homomorphism {hom:.2e}, rank mismatches {rank_mismatch}"),
    )
}

fn main_theorem() -> Outcome {
    let (mut r, reps) = seeded_reps(7, 50, true);
    let (mut eq21, mut recon, mut eigen, mut unit, mut inter) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for rep in &reps {
        let g = rep.group().clone();
        let pvm = spectral_measure(rep).unwrap();
        assert!(pvm.is_multiplicity_free());
        let model = diagonalize(&cyclic_decomposition(&pvm).remove(0), &pvm).unwrap();
        let xi = restrict_to_model(
            &model,
            &DualFunction::from_fn(&g, |_| Complex64::from_polar(r.random_range(0.2..1.5), r.random_range(0.0..6.3))),
        );
        let phi = phi_from_cyclic(&model, &xi).unwrap();
        let space = gns_construct(&phi, DEFAULT_POSITIVITY_TOL).unwrap();
        let d = build_decomposition(&space, &xi).unwrap();
        for _ in 0..5 {
            let f = random_function(&mut r, &g);
            let h = random_function(&mut r, &g);
            // <f|h>_phi against sum_chi <f|F_chi><F_chi|h>, functionals evaluated from their formula
            let lhs = space.inner(&f, &h);
            let rhs: Complex64 = d.eigenvectors().iter().map(|e| e.apply(&f) * e.apply(&h).conj()).sum();
            eq21 = eq21.max((lhs - rhs).norm());
        }
        for x in 0..g.size() {
            recon = recon.max(frobenius(&(d.reconstruct_operator(x) - space.translation_image(x))));
            for chi in model.support_characters() {
                eigen = eigen.max(d.eigen_residual(&space, x, &chi).unwrap());
            }
        }
        let w = intertwiner(&space, &model, &xi).unwrap();
        unit = unit.max(frobenius(&(w.matrix.adjoint() * &w.matrix - identity(space.dim()))));
        for x in 0..g.size() {
            let lhs = &w.matrix * space.translation_image(x);
            let rhs = model.multiplication_operator(x) * &w.matrix;
            inter = inter.max(frobenius(&(lhs - rhs)));
        }
    }
    outcome(
        eq21 < 1e-9 && recon < 1e-9 && eigen < 1e-9 && unit < 1e-9 && inter < 1e-9,
        format!(
            "inner product {eq21:.2e}, reconstruction {recon:.2e}, eigen {eigen:.2e}, unitarity {unit:.2e}, intertwining {inter:.2e}"
        ),
    )
}

fn calculus() -> Outcome {
    let (mut r, reps) = seeded_reps(8, 50, false);
    let (mut law, mut one) = (0.0f64, 0.0f64);
    for rep in &reps {
        let pvm = spectral_measure(rep).unwrap();
        let labels: Vec<f64> = pvm.support().iter().map(|_| r.random_range(-3.0..3.0)).collect();
        let complex: Vec<Complex64> = labels.iter().map(|&a| Complex64::from(a)).collect();
        let (t1, t2) = (r.random_range(-5.0..5.0), r.random_range(-5.0..5.0));
        let u = one_parameter_group(&pvm, &labels, t1) * one_parameter_group(&pvm, &labels, t2);
        law = law.max(frobenius(&(u - one_parameter_group(&pvm, &labels, t1 + t2))));
        let ones = functional_calculus(&pvm, &complex, |_| Complex64::from(1.0)).unwrap();
        one = one.max(frobenius(&(ones - identity(rep.dim()))));
    }
    outcome(law < 1e-10 && one < 1e-12, format!("group law {law:.2e}, identity {one:.2e}"))
}

fn run_selftest(out: &std::path::Path) -> (bool, Duration) {
    let start = Instant::now();
    let status = Command::new(BIN)
        .args(["selftest", "--seed", "0", "--output"])
        .arg(out)
        .output()
        .expect("binary runs");
    (status.status.success(), start.elapsed())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    run_selftest(&a);
    run_selftest(&b);
    let same = std::fs::read(&a).unwrap() == std::fs::read(&b).unwrap();
    outcome(same, if same { "reports identical" } else { "reports differ" })
}

fn selftest_runtime() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (ok, elapsed) = run_selftest(&dir.path().join("report.json"));
    outcome(
        ok && elapsed < Duration::from_secs(60),
        format!("exit {}, {:.2}s", if ok { 0 } else { 4 }, elapsed.as_secs_f64()),
    )
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("fourier engine", fourier_engine),
        ("bochner cross-check", bochner),
        ("projection-valued measure", pvm),
        ("dirac kets", dirac_kets_criterion),
        ("diagonalization", diagonalization),
        ("gns construction", gns),
        ("generalized eigenvector decomposition", main_theorem),
        ("functional calculus", calculus),
        ("determinism", determinism),
        ("selftest runtime", selftest_runtime),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| outcome(false, "panicked"));
        if !result.passed {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<40} {}  {}",
            i + 1,
            name,
            if result.passed { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
