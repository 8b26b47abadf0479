//! Command-line front end.
//!
//! Every command produces a JSON document and an exit status. Library errors
//! map onto statuses by kind; see [`ExitStatus`].

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{DualFunction, Positivity, DEFAULT_POSITIVITY_TOL};
use crate::error::Error;
use crate::gns::gns_construct;
use crate::group::Character;
use crate::io::{Domain, FunctionFile, MatrixRepr, RepresentationFile};
use crate::linalg::to_rows;
use crate::random::{random_function, rng};
use crate::representation::{
    cyclic_decomposition, diagonalize, dirac_kets, spectral_measure, KetSystem,
};
use crate::rigging::{build_decomposition, intertwiner, phi_from_cyclic, restrict_to_model, EigenvalueRow};
use crate::selftest::{self, SelftestConfig, SelftestReport, TOOL_NAME, VERSION};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const TOL_ENV: &str = "ABELIAN_SPECTRA_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Input = 2,
    Validation = 3,
    Breach = 4,
    Precondition = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of(err: &Error) -> Self {
        match err {
            Error::InvalidGroup(_)
            | Error::ElementShape { .. }
            | Error::CoordinateRange { .. }
            | Error::GroupMismatch(_)
            | Error::Length { .. } => ExitStatus::Input,
            Error::Validation { .. } => ExitStatus::Validation,
            Error::NumericalDegeneracy { .. }
            | Error::DegenerateComponent { .. }
            | Error::Inconsistency(_) => ExitStatus::Breach,
            Error::NotSelfAdjoint { .. }
            | Error::NotPositiveType { .. }
            | Error::NotCyclic { .. }
            | Error::OutsideSupport(_) => ExitStatus::Precondition,
        }
    }
}

/// A failed command: status, diagnostic and an optional partial report.
#[derive(Debug, Clone)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
    pub report: Option<Value>,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            status: ExitStatus::Input,
            message: message.into(),
            report: None,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        Self {
            status: ExitStatus::of(&err),
            message: err.to_string(),
            report: None,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "abelian-spectra", version, about = "Spectral analysis on finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Residual threshold for pass/fail decisions.
    #[arg(long, global = true, env = TOL_ENV, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Default for CommonArgs {
    fn default() -> Self {
        Self {
            output: None,
            seed: 0,
            tol: DEFAULT_TOL,
            format: Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourier transform of a function file.
    Fourier {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
    },
    /// Spectral measure, cyclic decomposition and kets of a representation.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// GNS construction from a function of positive type.
    Gns {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generalized-eigenvector decomposition of each cyclic component.
    Rig {
        #[arg(long)]
        input: PathBuf,
        /// Dual function file with the cyclic vector; defaults to all ones.
        #[arg(long)]
        xi: Option<PathBuf>,
    },
    /// Seeded property suite.
    Selftest {
        #[arg(long, default_value_t = 16)]
        max_group_size: usize,
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        #[arg(long, hide = true)]
        mutate_functional_kernel: bool,
    },
}

/// A named residual with its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Residual {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Residual {
    pub fn new(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            value,
            threshold,
            passed: value < threshold,
        }
    }
}

/// Report emitted by the analysis commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineReport<I, S> {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub inputs: I,
    pub stages: S,
    pub residuals: Vec<Residual>,
    pub passed: bool,
}

impl<I, S> PipelineReport<I, S> {
    fn new(command: &str, seed: u64, inputs: I, stages: S, residuals: Vec<Residual>) -> Self {
        Self {
            tool: TOOL_NAME.to_string(),
            version: VERSION.to_string(),
            command: command.to_string(),
            seed,
            inputs,
            stages,
            passed: residuals.iter().all(|r| r.passed),
            residuals,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PvmStage {
    pub support: Vec<Character>,
    /// One entry per character in enumeration order.
    pub multiplicities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentStage {
    pub cyclic_vector: Vec<Complex64>,
    pub support: Vec<Character>,
    pub isometry: Vec<Vec<Complex64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagonalStage {
    pub support: Vec<Character>,
    /// `pairing_table[g][k] = <g|chi_k>`.
    pub pairing_table: Vec<Vec<Complex64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeStages {
    pub pvm: PvmStage,
    pub components: Vec<ComponentStage>,
    pub diagonal_models: Vec<DiagonalStage>,
    pub kets: KetSystem,
}

pub type DecomposeReport = PipelineReport<RepresentationFile, DecomposeStages>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GnsStages {
    pub positivity: Positivity,
    pub rank: Option<usize>,
    pub gram_eigenvalues: Vec<f64>,
    pub generators: Vec<MatrixRepr>,
    pub eta: Vec<Complex64>,
}

pub type GnsReport = PipelineReport<FunctionFile, GnsStages>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenvectorStage {
    pub character: Character,
    pub weight: f64,
    pub coordinates: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RigComponentStage {
    pub support: Vec<Character>,
    pub xi: Vec<Complex64>,
    pub phi: Vec<Complex64>,
    pub gns_rank: usize,
    pub eigenvectors: Vec<EigenvectorStage>,
    pub eigenvalue_table: Vec<EigenvalueRow>,
    pub intertwiner: Vec<Vec<Complex64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RigInputs {
    pub representation: RepresentationFile,
    pub xi: Option<FunctionFile>,
}

pub type RigReport = PipelineReport<RigInputs, Vec<RigComponentStage>>;

fn read_json<T: DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        let inner = e.into_inner();
        if at == "." {
            CliError::input(format!("{}: {inner}", path.display()))
        } else {
            CliError::input(format!("{}: field `{at}`: {inner}", path.display()))
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

pub fn cmd_fourier(file: &FunctionFile, direction: Direction) -> Result<FunctionFile, CliError> {
    let mismatch = |want: &str| {
        CliError::input(format!(
            "domain mismatch: {} transform needs a function on the {want}",
            match direction {
                Direction::Forward => "forward",
                Direction::Inverse => "inverse",
            }
        ))
    };
    match (direction, file.domain) {
        (Direction::Forward, Domain::Group) => {
            Ok(FunctionFile::from_dual_function(&file.to_group_function()?.fourier()))
        }
        (Direction::Inverse, Domain::Dual) => Ok(FunctionFile::from_group_function(
            &file.to_dual_function()?.inverse_fourier(),
        )),
        (Direction::Forward, Domain::Dual) => Err(mismatch("group")),
        (Direction::Inverse, Domain::Group) => Err(mismatch("dual group")),
    }
}

pub fn cmd_decompose(file: &RepresentationFile, seed: u64, tol: f64) -> Result<DecomposeReport, CliError> {
    let rep = file.to_rep()?;
    let group = rep.group().clone();
    let pvm = spectral_measure(&rep)?;
    let res = pvm.residuals();
    let mut residuals = vec![
        Residual::new("pvm.reconstruction", res.reconstruction, tol),
        Residual::new("pvm.idempotency", res.idempotency, tol),
        Residual::new("pvm.self_adjointness", res.self_adjointness, tol),
        Residual::new("pvm.orthogonality", res.orthogonality, tol),
        Residual::new("pvm.completeness", res.completeness, tol),
    ];

    let comps = cyclic_decomposition(&pvm);
    let mut components = Vec::new();
    let mut diagonal_models = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        let model = diagonalize(comp, &pvm)?;
        let (off, diag) = model.residuals(&pvm);
        residuals.push(Residual::new(format!("component{i}.invariance"), comp.invariance_residual(&pvm), tol));
        residuals.push(Residual::new(format!("component{i}.off_diagonal"), off, tol));
        residuals.push(Residual::new(format!("component{i}.diagonal"), diag, tol));
        let support: Vec<Character> = comp.support.iter().map(|&c| group.character(c)).collect();
        components.push(ComponentStage {
            cyclic_vector: comp.cyclic_vector.iter().copied().collect(),
            support: support.clone(),
            isometry: to_rows(&comp.isometry),
        });
        diagonal_models.push(DiagonalStage {
            support,
            pairing_table: model.pairing_table().to_vec(),
        });
    }

    let kets = dirac_kets(&pvm);
    let whole: Vec<usize> = (0..group.size()).collect();
    let ket_completeness = (0..rep.dim())
        .map(|j| {
            let mut e = crate::linalg::CVector::zeros(rep.dim());
            e[j] = Complex64::from(1.0);
            (kets.spectral_form(&pvm, &e, &e, &whole) - Complex64::from(1.0)).norm()
        })
        .fold(0.0, f64::max);
    residuals.push(Residual::new("kets.completeness", ket_completeness, tol));

    let stages = DecomposeStages {
        pvm: PvmStage {
            support: pvm.support_characters(),
            multiplicities: pvm.multiplicities().to_vec(),
        },
        components,
        diagonal_models,
        kets,
    };
    Ok(PipelineReport::new("decompose", seed, file.clone(), stages, residuals))
}

pub fn cmd_gns(file: &FunctionFile, seed: u64, tol: f64) -> Result<GnsReport, CliError> {
    let phi = file.to_group_function()?;
    let group = phi.group().clone();
    let positivity = phi.is_positive_type(DEFAULT_POSITIVITY_TOL)?;
    if !positivity.verdict {
        let err = Error::NotPositiveType {
            min_gram_eigenvalue: positivity.min_gram_eigenvalue,
            min_fourier: positivity.min_fourier,
        };
        let stages = GnsStages {
            positivity,
            rank: None,
            gram_eigenvalues: Vec::new(),
            generators: Vec::new(),
            eta: Vec::new(),
        };
        let mut report = PipelineReport::new("gns", seed, file.clone(), stages, Vec::new());
        report.passed = false;
        return Err(CliError {
            report: Some(to_json(&report)),
            ..CliError::from(err)
        });
    }
    let space = gns_construct(&phi, DEFAULT_POSITIVITY_TOL)?;
    let mut hom = 0.0f64;
    for g in 0..group.size() {
        for j in 0..group.rank() {
            let mut c = vec![0; group.rank()];
            c[j] = 1 % group.orders()[j];
            let gen = group.index_of(&crate::group::Element(c))?;
            hom = hom.max(space.homomorphism_residual(g, gen));
        }
    }
    let residuals = vec![
        Residual::new("gns.reconstruction", space.reconstruct_phi().max_abs_diff(&phi), tol),
        Residual::new("gns.orthonormality", space.orthonormality_residual(), tol),
        Residual::new("gns.unitarity", space.unitarity_residual(), tol),
        Residual::new("gns.homomorphism", hom, tol),
    ];
    let stages = GnsStages {
        positivity,
        rank: Some(space.dim()),
        gram_eigenvalues: space.gram_eigenvalues().to_vec(),
        generators: space.rep_generators().iter().map(MatrixRepr::from_matrix).collect(),
        eta: space.eta().iter().copied().collect(),
    };
    Ok(PipelineReport::new("gns", seed, file.clone(), stages, residuals))
}

pub fn cmd_rig(
    file: &RepresentationFile,
    xi_file: Option<&FunctionFile>,
    seed: u64,
    tol: f64,
) -> Result<RigReport, CliError> {
    let rep = file.to_rep()?;
    let group = rep.group().clone();
    let xi_all = match xi_file {
        Some(f) => {
            let xi = f.to_dual_function()?;
            if xi.group() != &group {
                return Err(Error::GroupMismatch("xi and representation live on different groups".into()).into());
            }
            xi
        }
        None => DualFunction::ones(&group),
    };
    let pvm = spectral_measure(&rep)?;
    let mut r = rng(seed);
    let mut stages = Vec::new();
    let mut residuals = Vec::new();
    for (i, comp) in cyclic_decomposition(&pvm).iter().enumerate() {
        let model = diagonalize(comp, &pvm)?;
        let xi = restrict_to_model(&model, &xi_all);
        let phi = phi_from_cyclic(&model, &xi)?;
        let space = gns_construct(&phi, DEFAULT_POSITIVITY_TOL)?;
        let d = build_decomposition(&space, &xi)?;
        let w = intertwiner(&space, &model, &xi)?;

        let mut eq21 = 0.0f64;
        for _ in 0..4 {
            let f = random_function(&mut r, &group);
            let h = random_function(&mut r, &group);
            eq21 = eq21.max(d.inner_product_defect(&space, &f, &h));
        }
        let p = |name: &str| format!("component{i}.{name}");
        residuals.extend([
            Residual::new(p("phi_reconstruction"), space.reconstruct_phi().max_abs_diff(&phi), tol),
            Residual::new(p("inner_product_identity"), d.inner_product_residual().max(eq21), tol),
            Residual::new(p("operator_reconstruction"), d.reconstruction_residual(&space), tol),
            Residual::new(p("resolution_of_identity"), d.resolution_residual(&space), tol),
            Residual::new(p("eigen_equation"), d.max_eigen_residual(&space), tol),
            Residual::new(p("intertwiner_unitarity"), w.unitarity_residual, tol),
            Residual::new(p("intertwining"), w.intertwining_residual, tol),
            Residual::new(p("cyclic_vector"), w.cyclic_vector_residual, tol),
            Residual::new(p("embedding"), w.embedding_residual(&model, &space, &rep), tol),
        ]);
        stages.push(RigComponentStage {
            support: model.support_characters(),
            xi: model.support().iter().map(|&c| xi.values()[c]).collect(),
            phi: phi.values().to_vec(),
            gns_rank: space.dim(),
            eigenvectors: d
                .eigenvectors()
                .iter()
                .map(|e| EigenvectorStage {
                    character: e.character.clone(),
                    weight: e.weight,
                    coordinates: e.coordinates.iter().copied().collect(),
                })
                .collect(),
            eigenvalue_table: d.eigenvalue_table(),
            intertwiner: to_rows(&w.matrix),
        });
    }
    let inputs = RigInputs {
        representation: file.clone(),
        xi: xi_file.cloned(),
    };
    Ok(PipelineReport::new("rig", seed, inputs, stages, residuals))
}

pub fn cmd_selftest(config: &SelftestConfig) -> Result<SelftestReport, CliError> {
    if config.max_group_size == 0 || config.max_dim == 0 {
        return Err(CliError::input("max-group-size and max-dim must be positive"));
    }
    Ok(selftest::run(config))
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: ExitStatus,
    /// The JSON document, if any, ending with a newline.
    pub document: Option<String>,
    /// Human-readable lines for stderr.
    pub diagnostics: String,
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json");
    s.push('\n');
    s
}

fn finish<T: Serialize>(report: &T, passed: bool, diagnostics: String) -> Outcome {
    Outcome {
        status: if passed { ExitStatus::Success } else { ExitStatus::Breach },
        document: Some(render(&to_json(report))),
        diagnostics,
    }
}

fn failed_residuals(residuals: &[Residual]) -> String {
    residuals
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("residual {} = {:.3e} exceeds {:.0e}\n", r.name, r.value, r.threshold))
        .collect()
}

/// Runs a parsed command line without touching stdout or stderr.
pub fn execute(cli: &Cli) -> Outcome {
    let common = &cli.common;
    let result = (|| -> Result<Outcome, CliError> {
        if !(common.tol > 0.0) {
            return Err(CliError::input("tolerance must be positive"));
        }
        Ok(match &cli.command {
            Command::Fourier { input, direction } => {
                let file: FunctionFile = read_json(input)?;
                let out = cmd_fourier(&file, *direction)?;
                finish(&out, true, String::new())
            }
            Command::Decompose { input } => {
                let report = cmd_decompose(&read_json(input)?, common.seed, common.tol)?;
                finish(&report, report.passed, failed_residuals(&report.residuals))
            }
            Command::Gns { input } => {
                let report = cmd_gns(&read_json(input)?, common.seed, common.tol)?;
                finish(&report, report.passed, failed_residuals(&report.residuals))
            }
            Command::Rig { input, xi } => {
                let xi_file: Option<FunctionFile> = xi.as_ref().map(read_json).transpose()?;
                let report = cmd_rig(&read_json(input)?, xi_file.as_ref(), common.seed, common.tol)?;
                finish(&report, report.passed, failed_residuals(&report.residuals))
            }
            Command::Selftest {
                max_group_size,
                max_dim,
                mutate_functional_kernel,
            } => {
                let config = SelftestConfig {
                    max_group_size: *max_group_size,
                    max_dim: *max_dim,
                    seed: common.seed,
                    mutate_functional_kernel: *mutate_functional_kernel,
                    ..SelftestConfig::default()
                };
                let report = cmd_selftest(&config)?;
                let mut diagnostics = report.summary();
                for f in &report.failures {
                    diagnostics.push_str(&format!("failing instance for {}: {}\n", f.property, f.instance));
                }
                finish(&report, report.passed, diagnostics)
            }
        })
    })();
    result.unwrap_or_else(|e| Outcome {
        status: e.status,
        document: e.report.as_ref().map(render),
        diagnostics: format!("error: {}\n", e.message),
    })
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::Input.code() } else { 0 };
        }
    };
    let outcome = execute(&cli);
    eprint!("{}", outcome.diagnostics);
    if let Some(doc) = &outcome.document {
        match &cli.common.output {
            Some(path) => {
                if let Err(e) = fs::write(path, doc) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitStatus::Input.code();
                }
            }
            None => print!("{doc}"),
        }
    }
    outcome.status.code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupFunction;
    use crate::group::Group;
    use crate::representation::UnitaryRep;

    fn c(re: f64) -> Complex64 {
        Complex64::from(re)
    }

    #[test]
    fn decompose_z2_regular() {
        let g = Group::cyclic(2).unwrap();
        let file = RepresentationFile::from_rep(&UnitaryRep::regular(&g));
        let report = cmd_decompose(&file, 0, DEFAULT_TOL).unwrap();
        assert!(report.passed);
        assert_eq!(report.stages.pvm.multiplicities, vec![1, 1]);
        assert_eq!(report.stages.pvm.support.len(), 2);
    }

    #[test]
    fn decompose_trivial_dim3() {
        let g = Group::cyclic(3).unwrap();
        let file = RepresentationFile::from_rep(&UnitaryRep::trivial(&g, 3));
        let report = cmd_decompose(&file, 0, DEFAULT_TOL).unwrap();
        assert_eq!(report.stages.pvm.multiplicities, vec![3, 0, 0]);
        assert_eq!(report.stages.components.len(), 3);
    }

    #[test]
    fn shear_is_a_validation_error() {
        let file: RepresentationFile = serde_json::from_str(
            r#"{"group":{"orders":[2]},"dim":2,"generators":[[[[1,0],[1,0]],[[0,0],[1,0]]]]}"#,
        )
        .unwrap();
        let err = cmd_decompose(&file, 0, DEFAULT_TOL).unwrap_err();
        assert_eq!(err.status, ExitStatus::Validation);
        assert!(err.message.contains("generator 0 not unitary"), "{}", err.message);
    }

    #[test]
    fn gns_statuses() {
        let g = Group::cyclic(2).unwrap();
        let bad = FunctionFile::from_group_function(&GroupFunction::new(g.clone(), vec![c(1.0), c(2.0)]).unwrap());
        let err = cmd_gns(&bad, 0, DEFAULT_TOL).unwrap_err();
        assert_eq!(err.status, ExitStatus::Precondition);
        let report: GnsReport = serde_json::from_value(err.report.unwrap()).unwrap();
        assert!((report.stages.positivity.min_fourier + 1.0).abs() < 1e-12);

        let flat = FunctionFile::from_group_function(&GroupFunction::new(g, vec![c(1.0), c(1.0)]).unwrap());
        let report = cmd_gns(&flat, 0, DEFAULT_TOL).unwrap();
        assert_eq!(report.stages.rank, Some(1));
        assert!(report.passed);
    }

    #[test]
    fn rig_z6_regular() {
        let g = Group::cyclic(6).unwrap();
        let file = RepresentationFile::from_rep(&UnitaryRep::regular(&g));
        let report = cmd_rig(&file, None, 0, DEFAULT_TOL).unwrap();
        assert!(report.passed, "{:?}", report.residuals);
        assert_eq!(report.stages.len(), 1);
        assert_eq!(report.stages[0].eigenvectors.len(), 6);
    }

    #[test]
    fn report_round_trips() {
        let g = Group::new(&[2, 2]).unwrap();
        let file = RepresentationFile::from_rep(&UnitaryRep::regular(&g));
        let report = cmd_rig(&file, None, 3, DEFAULT_TOL).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: RigReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn fourier_domain_mismatch() {
        let g = Group::cyclic(4).unwrap();
        let dual = FunctionFile::from_dual_function(&DualFunction::ones(&g));
        let err = cmd_fourier(&dual, Direction::Forward).unwrap_err();
        assert_eq!(err.status, ExitStatus::Input);
        let back = cmd_fourier(&dual, Direction::Inverse).unwrap();
        let delta = back.to_group_function().unwrap();
        assert!(delta.max_abs_diff(&GroupFunction::delta(&g, 0)) < 1e-15);
    }
}
