//! Seeded property suite over every module.
//!
//! Each property draws random instances, computes a residual and compares
//! the worst one against a fixed threshold. The first failing instance of a
//! property is kept in the report so it can be replayed.

pub mod oracle;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{DualFunction, GroupFunction, DEFAULT_POSITIVITY_TOL};
use crate::gns::{gns_construct, GnsSpace, RANK_REL_TOL};
use crate::group::{Element, Group};
use crate::io::{FunctionFile, RepresentationFile};
use crate::linalg::{frobenius, identity, CVector};
use crate::random::{
    random_complex, random_function, random_group, random_positive_type, random_representation,
    random_subset, rng, Rng64,
};
use crate::representation::{
    cyclic_decomposition, diagonalize, dirac_kets, functional_calculus, one_parameter_group,
    spectral_measure, UnitaryRep,
};
use crate::rigging::{
    build_decomposition, build_decomposition_flipped, intertwiner, phi_from_cyclic,
    restrict_to_model,
};

pub const TOOL_NAME: &str = "abelian-spectra";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestConfig {
    pub max_group_size: usize,
    pub max_dim: usize,
    pub seed: u64,
    pub fourier_functions: usize,
    pub bochner_functions: usize,
    pub representations: usize,
    pub ket_triples: usize,
    pub gns_functions: usize,
    pub rigging_setups: usize,
    pub calculus_draws: usize,
    /// Flips the exponent sign of the generalized-eigenvector kernel. Used
    /// to check that the suite notices a broken build.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub mutate_functional_kernel: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            max_group_size: 16,
            max_dim: 8,
            seed: 0,
            fourier_functions: 100,
            bochner_functions: 200,
            representations: 50,
            ket_triples: 50,
            gns_functions: 100,
            rigging_setups: 50,
            calculus_draws: 50,
            mutate_functional_kernel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertyResult {
    pub name: String,
    pub instances: usize,
    pub max_residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FailureRecord {
    pub property: String,
    pub residual: f64,
    pub instance: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub config: SelftestConfig,
    pub properties: Vec<PropertyResult>,
    pub failures: Vec<FailureRecord>,
    pub passed: bool,
}

impl SelftestReport {
    /// One line per property.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for p in &self.properties {
            out.push_str(&format!(
                "{} {:<42} n={:<5} max={:.3e} tol={:.0e}\n",
                if p.passed { "PASS" } else { "FAIL" },
                p.name,
                p.instances,
                p.max_residual,
                p.threshold
            ));
        }
        out
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

struct Property {
    name: &'static str,
    threshold: f64,
    instances: usize,
    max_residual: f64,
    failure: Option<(f64, Value)>,
}

impl Property {
    fn new(name: &'static str, threshold: f64) -> Self {
        Self {
            name,
            threshold,
            instances: 0,
            max_residual: 0.0,
            failure: None,
        }
    }

    /// Records one residual; NaN counts as a failure.
    fn record(&mut self, residual: f64, instance: impl FnOnce() -> Value) {
        self.instances += 1;
        let bad = !(residual < self.threshold);
        if residual.is_nan() {
            self.max_residual = f64::INFINITY;
        } else {
            self.max_residual = self.max_residual.max(residual);
        }
        if bad && self.failure.is_none() {
            self.failure = Some((residual, instance()));
        }
    }

    /// Records a yes/no check as residual 0 or 1 against threshold 0.5.
    fn check(&mut self, ok: bool, instance: impl FnOnce() -> Value) {
        self.record(if ok { 0.0 } else { 1.0 }, instance)
    }
}

#[derive(Default)]
struct Suite {
    properties: Vec<Property>,
}

impl Suite {
    fn get(&mut self, name: &'static str, threshold: f64) -> &mut Property {
        if let Some(i) = self.properties.iter().position(|p| p.name == name) {
            &mut self.properties[i]
        } else {
            self.properties.push(Property::new(name, threshold));
            self.properties.last_mut().unwrap()
        }
    }

    fn record(&mut self, name: &'static str, threshold: f64, residual: f64, instance: impl FnOnce() -> Value) {
        self.get(name, threshold).record(residual, instance)
    }

    fn check(&mut self, name: &'static str, ok: bool, instance: impl FnOnce() -> Value) {
        self.get(name, 0.5).check(ok, instance)
    }
}

fn function_json(f: &GroupFunction) -> Value {
    serde_json::to_value(FunctionFile::from_group_function(f)).expect("serializable")
}

fn rep_json(rep: &UnitaryRep) -> Value {
    serde_json::to_value(RepresentationFile::from_rep(rep)).expect("serializable")
}

fn group_json(g: &Group) -> Value {
    json!({ "orders": g.orders() })
}

/// Runs the whole suite.
pub fn run(config: &SelftestConfig) -> SelftestReport {
    let mut suite = Suite::default();
    let mut r = rng(config.seed);
    group_properties(config, &mut r, &mut suite);
    algebra_properties(config, &mut r, &mut suite);
    representation_properties(config, &mut r, &mut suite);
    gns_properties(config, &mut r, &mut suite);
    rigging_properties(config, &mut r, &mut suite);

    let mut properties = Vec::new();
    let mut failures = Vec::new();
    for p in suite.properties {
        let passed = p.failure.is_none();
        if let Some((residual, instance)) = p.failure {
            failures.push(FailureRecord {
                property: p.name.to_string(),
                residual: if residual.is_finite() { residual } else { f64::MAX },
                instance,
            });
        }
        properties.push(PropertyResult {
            name: p.name.to_string(),
            instances: p.instances,
            max_residual: if p.max_residual.is_finite() { p.max_residual } else { f64::MAX },
            threshold: p.threshold,
            passed,
        });
    }
    SelftestReport {
        tool: TOOL_NAME.to_string(),
        version: VERSION.to_string(),
        seed: config.seed,
        config: config.clone(),
        passed: failures.is_empty(),
        properties,
        failures,
    }
}

fn group_properties(config: &SelftestConfig, r: &mut Rng64, suite: &mut Suite) {
    for _ in 0..10 {
        let g = random_group(r, config.max_group_size);
        let n = g.size();
        let table = g.pairing_table();
        let gram = table.adjoint() * &table;
        let orth = frobenius(&(gram - identity(n) * Complex64::from(n as f64)));
        suite.record("group.character_orthogonality", 1e-12 * n as f64, orth, || group_json(&g));

        let mut modulus = 0.0f64;
        let mut explicit = 0.0f64;
        let mut sym = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                modulus = modulus.max((table[(a, b)].norm() - 1.0).abs());
                sym = sym.max((table[(a, b)] - table[(b, a)]).norm());
                let e = oracle::explicit_pairing(&g, &g.element(a), &g.element(b));
                explicit = explicit.max((table[(a, b)] - e).norm());
            }
        }
        suite.record("group.unit_modulus", 1e-14, modulus, || group_json(&g));
        suite.record("group.self_duality", 1e-15, sym, || group_json(&g));
        suite.record("group.explicit_exponential", 1e-12, explicit, || group_json(&g));

        for _ in 0..20 {
            let (a, b, chi) = (r.random_range(0..n), r.random_range(0..n), r.random_range(0..n));
            let lhs = g.pairing_by_index(g.add_index(a, b), chi);
            let rhs = g.pairing_by_index(a, chi) * g.pairing_by_index(b, chi);
            suite.record("group.homomorphism", 1e-12, (lhs - rhs).norm(), || {
                json!({ "group": group_json(&g), "g1": g.element(a), "g2": g.element(b), "chi": g.character(chi) })
            });
        }
    }
}

fn algebra_properties(config: &SelftestConfig, r: &mut Rng64, suite: &mut Suite) {
    let mut groups: Vec<Group> = [vec![2], vec![6], vec![2, 4]]
        .iter()
        .filter_map(|o| Group::new(o).ok())
        .filter(|g| g.size() <= config.max_group_size)
        .collect();
    groups.push(random_group(r, config.max_group_size));
    for g in &groups {
        for _ in 0..config.fourier_functions {
            let f = random_function(r, g);
            let h = random_function(r, g);
            let fh = f.fourier();

            let energy: f64 = f.values().iter().map(|z| z.norm_sqr()).sum();
            let dual_energy: f64 = fh.values().iter().map(|z| z.norm_sqr()).sum::<f64>() * g.dual_weight();
            suite.record("algebra.plancherel", 1e-12, (energy - dual_energy).abs() / energy, || function_json(&f));

            let conv = f.convolve(&h).expect("same group").fourier();
            let prod = DualFunction::from_fn(g, |chi| fh.values()[chi] * h.fourier().values()[chi]);
            suite.record("algebra.convolution_theorem", 1e-10, conv.max_abs_diff(&prod), || {
                json!({ "f": function_json(&f), "h": function_json(&h) })
            });

            suite.record("algebra.inverse_round_trip", 1e-12, fh.inverse_fourier().max_abs_diff(&f), || function_json(&f));
            suite.check("algebra.involution_is_involutive", f.involution().involution() == f, || function_json(&f));
            let star_hat = f.involution().fourier();
            let conj_hat = DualFunction::from_fn(g, |chi| fh.values()[chi].conj());
            suite.record("algebra.involution_transform", 1e-10, star_hat.max_abs_diff(&conj_hat), || function_json(&f));
        }
    }

    let bochner_max = config.max_group_size.min(32);
    for k in 0..config.bochner_functions {
        let g = random_group(r, bochner_max);
        let phi = if k % 2 == 0 {
            random_positive_type(r, &g)
        } else {
            random_function(r, &g)
        };
        match phi.is_positive_type(DEFAULT_POSITIVITY_TOL) {
            Ok(p) => {
                let constructed = k % 2 == 0;
                suite.check("algebra.bochner_agreement", p.gram_verdict == p.fourier_verdict, || function_json(&phi));
                if constructed {
                    suite.check("algebra.constructed_positive_type", p.verdict, || function_json(&phi));
                }
            }
            Err(_) => suite.check("algebra.bochner_agreement", false, || function_json(&phi)),
        }
    }

    for _ in 0..10 {
        let g = random_group(r, config.max_group_size.min(12));
        let phi = random_function(r, &g);
        let f = random_function(r, &g);
        let m = phi.hermitian_form();
        let fv = CVector::from_column_slice(f.values());
        let via_matrix = fv.dotc(&(&m * &fv));
        let brute = oracle::positive_type_form(&phi, &f);
        suite.record("algebra.gram_form_identity", 1e-10, (via_matrix - brute).norm(), || {
            json!({ "phi": function_json(&phi), "f": function_json(&f) })
        });
    }
}

fn representation_properties(config: &SelftestConfig, r: &mut Rng64, suite: &mut Suite) {
    for k in 0..config.representations {
        let g = random_group(r, config.max_group_size);
        let rep = random_representation(r, &g, config.max_dim, k % 3 == 0);
        let inst = || rep_json(&rep);
        let pvm = match spectral_measure(&rep) {
            Ok(p) => p,
            Err(_) => {
                suite.check("representations.pvm_construction", false, inst);
                continue;
            }
        };
        suite.check("representations.pvm_construction", true, inst);
        let res = pvm.residuals();
        suite.record("representations.pvm_reconstruction", 1e-9, res.reconstruction, inst);
        let axioms = res.idempotency.max(res.self_adjointness).max(res.orthogonality).max(res.completeness);
        suite.record("representations.pvm_axioms", 1e-9, axioms, inst);
        suite.check(
            "representations.multiplicities_sum_to_dim",
            pvm.multiplicities().iter().sum::<usize>() == rep.dim(),
            inst,
        );

        let mut quant = 0.0f64;
        for x in 0..g.size() {
            let order = g.element_order(x) as f64;
            let (vals, residual) = oracle::unitary_eigenvalues(&rep.apply_index(x), r);
            quant = quant.max(residual);
            for lambda in vals {
                let k = (lambda.arg() / (2.0 * std::f64::consts::PI) * order).round();
                let root = Complex64::cis(2.0 * std::f64::consts::PI * k / order);
                quant = quant.max((lambda - root).norm());
            }
        }
        suite.record("representations.eigenvalue_quantization", 1e-9, quant, inst);

        // recompute the measure from the reconstructed generators
        let rebuilt: Vec<_> = (0..g.rank())
            .map(|j| {
                let mut c = vec![0; g.rank()];
                c[j] = 1 % g.orders()[j];
                pvm.reconstruct(g.index_of(&Element(c)).unwrap())
            })
            .collect();
        let idem = UnitaryRep::new(g.clone(), rebuilt)
            .and_then(|rep2| spectral_measure(&rep2))
            .map(|p2| {
                p2.projections()
                    .iter()
                    .zip(pvm.projections())
                    .map(|(a, b)| frobenius(&(a - b)))
                    .fold(0.0, f64::max)
            })
            .unwrap_or(f64::INFINITY);
        suite.record("representations.pvm_recompute_idempotent", 1e-9, idem, inst);

        let oracle_proj = oracle::joint_eigen_projections(&rep, r);
        suite.record(
            "representations.oracle_subspace_angle",
            1e-7,
            oracle::max_subspace_angle(&pvm, &oracle_proj),
            inst,
        );

        let f = random_function(r, &g);
        let lift = pvm.apply_algebra(&f).unwrap();
        let direct = rep.apply_function(&f).unwrap();
        suite.record("representations.algebra_lift", 1e-9, frobenius(&(lift - direct)), inst);

        let comps = cyclic_decomposition(&pvm);
        suite.check(
            "representations.component_count",
            comps.len() == pvm.max_multiplicity(),
            inst,
        );
        let mut inv = 0.0f64;
        let mut off = 0.0f64;
        let mut diag_err = 0.0f64;
        let mut total_cols = 0;
        for comp in &comps {
            inv = inv.max(comp.invariance_residual(&pvm));
            total_cols += comp.support.len();
            match diagonalize(comp, &pvm) {
                Ok(model) => {
                    let (o, d) = model.residuals(&pvm);
                    off = off.max(o);
                    diag_err = diag_err.max(d);
                }
                Err(_) => off = f64::INFINITY,
            }
        }
        suite.record("representations.cyclic_invariance", 1e-9, inv, inst);
        suite.record("representations.diagonal_off_mass", 1e-9, off, inst);
        suite.record("representations.diagonal_entries", 1e-9, diag_err, inst);
        suite.check("representations.components_span", total_cols == rep.dim(), inst);

        // functional calculus
        let labels: Vec<f64> = pvm.support().iter().map(|_| r.random_range(-3.0..3.0)).collect();
        let labels_c: Vec<Complex64> = labels.iter().map(|&a| Complex64::from(a)).collect();
        let ones = functional_calculus(&pvm, &labels_c, |_| Complex64::from(1.0)).unwrap();
        suite.record("representations.calculus_identity", 1e-12, frobenius(&(ones - identity(rep.dim()))), inst);
        let a_op = functional_calculus(&pvm, &labels_c, Complex64::from).unwrap();
        suite.record("representations.calculus_self_adjoint", 1e-12, frobenius(&(&a_op - a_op.adjoint())), inst);
        for _ in 0..(config.calculus_draws / config.representations.max(1)).max(1) {
            let (t1, t2) = (r.random_range(-5.0..5.0), r.random_range(-5.0..5.0));
            let u1 = one_parameter_group(&pvm, &labels, t1);
            let u2 = one_parameter_group(&pvm, &labels, t2);
            let u12 = one_parameter_group(&pvm, &labels, t1 + t2);
            suite.record("representations.calculus_group_law", 1e-10, frobenius(&(u1 * u2 - u12)), || {
                json!({ "rep": rep_json(&rep), "labels": labels, "t1": t1, "t2": t2 })
            });
        }
    }

    for _ in 0..config.ket_triples {
        let g = random_group(r, config.max_group_size);
        let rep = random_representation(r, &g, config.max_dim, false);
        let Ok(pvm) = spectral_measure(&rep) else {
            suite.check("representations.dirac_kets", false, || rep_json(&rep));
            continue;
        };
        let kets = dirac_kets(&pvm);
        let phi = CVector::from_fn(rep.dim(), |_, _| random_complex(r));
        let psi = CVector::from_fn(rep.dim(), |_, _| random_complex(r));
        let subset = random_subset(r, g.size());
        let lhs = phi.dotc(&(pvm.projection_of(&subset) * &psi));
        let rhs = kets.spectral_form(&pvm, &phi, &psi, &subset);
        suite.record("representations.dirac_kets", 1e-9, (lhs - rhs).norm(), || {
            json!({ "rep": rep_json(&rep), "subset": subset })
        });
        suite.check("representations.ket_count", kets.len() == rep.dim(), || rep_json(&rep));
    }
}

fn gns_checks(space: &GnsSpace, phi: &GroupFunction, r: &mut Rng64, suite: &mut Suite) {
    let g = space.group();
    let inst = || function_json(phi);
    suite.record("gns.reconstruct_phi", 1e-9, space.reconstruct_phi().max_abs_diff(phi), inst);
    suite.record("gns.orthonormal_quotient_basis", 1e-9, space.orthonormality_residual(), inst);
    suite.record("gns.unitarity", 1e-9, space.unitarity_residual(), inst);
    let mut hom = 0.0f64;
    for _ in 0..5 {
        let (a, b) = (r.random_range(0..g.size()), r.random_range(0..g.size()));
        hom = hom.max(space.homomorphism_residual(a, b));
    }
    suite.record("gns.homomorphism", 1e-9, hom, inst);
    let top = space.gram_eigenvalues().last().copied().unwrap_or(0.0).max(1.0);
    suite.record("gns.null_invariance", 1e-9, space.null_invariance_residual() / top, inst);
    suite.check("gns.cyclic_vector", space.cyclic_span_rank() == space.dim(), inst);
    let fhat = phi.fourier();
    let max_hat = fhat.values().iter().map(|z| z.re).fold(0.0, f64::max);
    let support = fhat.values().iter().filter(|z| z.re > RANK_REL_TOL * max_hat).count();
    suite.check("gns.rank_equals_fourier_support", support == space.dim(), inst);
}

fn gns_properties(config: &SelftestConfig, r: &mut Rng64, suite: &mut Suite) {
    for _ in 0..config.gns_functions {
        let g = random_group(r, config.max_group_size);
        let phi = random_positive_type(r, &g);
        match gns_construct(&phi, DEFAULT_POSITIVITY_TOL) {
            Ok(space) => {
                suite.check("gns.construction", true, || function_json(&phi));
                gns_checks(&space, &phi, r, suite);
            }
            Err(_) => suite.check("gns.construction", false, || function_json(&phi)),
        }
    }
}

fn rigging_properties(config: &SelftestConfig, r: &mut Rng64, suite: &mut Suite) {
    for _ in 0..config.rigging_setups {
        let g = random_group(r, config.max_group_size);
        let rep = random_representation(r, &g, config.max_dim, true);
        let inst = || rep_json(&rep);
        let setup = spectral_measure(&rep).and_then(|pvm| {
            let comp = cyclic_decomposition(&pvm).remove(0);
            diagonalize(&comp, &pvm)
        });
        let Ok(model) = setup else {
            suite.check("rigging.setup", false, inst);
            continue;
        };
        let xi = restrict_to_model(
            &model,
            &DualFunction::from_fn(&g, |_| Complex64::from_polar(r.random_range(0.2..1.5), r.random_range(0.0..6.3))),
        );
        let inst_xi = || {
            json!({ "rep": rep_json(&rep), "xi": serde_json::to_value(FunctionFile::from_dual_function(&xi)).unwrap() })
        };
        let built = phi_from_cyclic(&model, &xi).and_then(|phi| {
            let space = gns_construct(&phi, DEFAULT_POSITIVITY_TOL)?;
            let d = if config.mutate_functional_kernel {
                build_decomposition_flipped(&space, &xi)?
            } else {
                build_decomposition(&space, &xi)?
            };
            let w = intertwiner(&space, &model, &xi)?;
            Ok((phi, space, d, w))
        });
        let Ok((phi, space, d, w)) = built else {
            suite.check("rigging.setup", false, inst_xi);
            continue;
        };
        suite.check("rigging.setup", true, inst_xi);

        let mut eq21 = 0.0f64;
        let mut agree = 0.0f64;
        for _ in 0..5 {
            let f = random_function(r, &g);
            let h = random_function(r, &g);
            eq21 = eq21.max(d.inner_product_defect(&space, &f, &h));
            agree = agree.max(d.functional_agreement(&space, &f));
        }
        suite.record("rigging.inner_product_identity", 1e-9, eq21, inst_xi);
        suite.record("rigging.functional_agreement", 1e-10, agree, inst_xi);
        suite.record("rigging.operator_reconstruction", 1e-9, d.reconstruction_residual(&space), inst_xi);
        suite.record("rigging.resolution_of_identity", 1e-9, d.resolution_residual(&space), inst_xi);
        suite.record("rigging.eigen_equation", 1e-9, d.max_eigen_residual(&space), inst_xi);
        suite.record("rigging.reconstruction_unitarity", 1e-9, d.reconstruction_unitarity_residual(), inst_xi);
        let modulus = d
            .eigenvalue_table()
            .iter()
            .flat_map(|row| row.eigenvalues.iter().map(|z| (z.norm() - 1.0).abs()))
            .fold(0.0, f64::max);
        suite.record("rigging.eigenvalue_modulus", 1e-12, modulus, inst_xi);
        suite.record("rigging.intertwiner_unitarity", 1e-9, w.unitarity_residual, inst_xi);
        suite.record("rigging.intertwining", 1e-9, w.intertwining_residual, inst_xi);
        let triangle = space
            .reconstruct_phi()
            .max_abs_diff(&phi)
            .max(w.embedding_residual(&model, &space, &rep))
            .max(w.cyclic_vector_residual);
        suite.record("rigging.consistency_triangle", 1e-9, triangle, inst_xi);
    }
}
