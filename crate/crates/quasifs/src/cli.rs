//! The `quasifs` command-line surface.
//!
//! Exit codes: 0 success; 1 axiom or validation failure; 2 semisimplicity
//! failure (integral errors); 3 usage error (bad flags, unreadable or
//! malformed bundles); 4 internal inconsistency (oracle or construction
//! mismatch, which must never occur on valid input).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builders::{
    build_twisted_dual, catalog, cyclic_cocycle, dual_group_simples, BuilderError, GroupTable,
};
use crate::bundle::{load_bundle, Bundle, BundleError};
use crate::field::FieldElement;
use crate::indicator::{
    analyze, module_report, oracle_classify, pivotal_g, IndicatorError, IndicatorReport,
};
use crate::linalg::{Matrix, Tensor};
use crate::qha::{IntegralError, QuasiHopfAlgebra, TChoice, ValidationLevel, ValidationReport};
use crate::rep::{check_module, RepError};

#[derive(Parser)]
#[command(
    name = "quasifs",
    version,
    about = "Exact Frobenius-Schur indicators for semisimple quasi-Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TArg {
    Pl,
    Pr,
}

impl From<TArg> for TChoice {
    fn from(t: TArg) -> TChoice {
        match t {
            TArg::Pl => TChoice::Pl,
            TArg::Pr => TChoice::Pr,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the bundle JSON file.
    bundle: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quasi-Hopf axioms (core level; --strict adds the full set).
    Validate {
        #[command(flatten)]
        common: CommonArgs,
        /// Also check associativity, unitality, quasi-coassociativity and
        /// the pentagon.
        #[arg(long)]
        strict: bool,
    },
    /// Compute the normalized integral.
    Integral {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the Hausser-Nill elements and nu_H for both t-choices.
    Elements {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the pivotal element g.
    Pivotal {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Indicator table for every module in the bundle.
    Indicators {
        #[command(flatten)]
        common: CommonArgs,
        /// Which Hausser-Nill element plays the role of t in the displayed
        /// nu column.
        #[arg(long, value_enum, default_value_t = TArg::Pl)]
        t: TArg,
    },
    /// Classify one module by the bilinear-form oracle.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        /// Module name as recorded in the bundle.
        #[arg(long)]
        module: String,
    },
    /// Full pipeline: strict validation, integral, indicators, oracle, and
    /// agreement of all of them.
    Crosscheck {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit bundle files for the built-in constructions.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// A group algebra k[G] with its irreducible modules.
    GroupAlgebra {
        /// Group name: z1..z8, s3, q8, d4.
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// A twisted dual k^(Z/m)_w with its simple modules.
    TwistedDual {
        /// Order m of the cyclic group.
        #[arg(long)]
        order: usize,
        /// Cohomology class index 0 <= q < m.
        #[arg(long)]
        class: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

impl From<BundleError> for Failure {
    fn from(e: BundleError) -> Failure {
        Failure::new(3, e.to_string())
    }
}

impl From<IntegralError> for Failure {
    fn from(e: IntegralError) -> Failure {
        Failure::new(2, e.to_string())
    }
}

impl From<crate::qha::AlgebraError> for Failure {
    fn from(e: crate::qha::AlgebraError) -> Failure {
        Failure::new(1, e.to_string())
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Failure {
        match e {
            RepError::Integral(err) => err.into(),
            other => Failure::new(1, other.to_string()),
        }
    }
}

impl From<IndicatorError> for Failure {
    fn from(e: IndicatorError) -> Failure {
        match e {
            IndicatorError::NoUniqueSolution => Failure::new(2, e.to_string()),
            IndicatorError::Integral(err) => err.into(),
            IndicatorError::Rep(err) => err.into(),
            IndicatorError::OracleInconsistent(_) | IndicatorError::ConstructionMismatch(_) => {
                Failure::new(4, e.to_string())
            }
            other => Failure::new(1, other.to_string()),
        }
    }
}

impl From<BuilderError> for Failure {
    fn from(e: BuilderError) -> Failure {
        match e {
            BuilderError::InvalidGroup(_) => Failure::new(3, e.to_string()),
            other => Failure::new(1, other.to_string()),
        }
    }
}

/// Entry point used by the binary: parses `std::env::args`.
pub fn run_args() -> i32 {
    run(std::env::args())
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Validate { common, strict } => cmd_validate(&common, strict),
        Command::Integral { common } => cmd_integral(&common),
        Command::Elements { common } => cmd_elements(&common),
        Command::Pivotal { common } => cmd_pivotal(&common),
        Command::Indicators { common, t } => cmd_indicators(&common, t.into()),
        Command::Classify { common, module } => cmd_classify(&common, &module),
        Command::Crosscheck { common } => cmd_crosscheck(&common),
        Command::Gen { target } => cmd_gen(target),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<Bundle, Failure> {
    Ok(load_bundle(path)?)
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ValidateOutput {
    level: String,
    passed: bool,
    checks: Vec<CheckRow>,
}

fn validation_output(report: &ValidationReport) -> ValidateOutput {
    ValidateOutput {
        level: match report.level {
            ValidationLevel::Core => "core".into(),
            ValidationLevel::Strict => "strict".into(),
        },
        passed: report.passed(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckRow {
                name: c.name.to_string(),
                passed: c.passed,
                witness: c.witness.clone(),
            })
            .collect(),
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn cmd_validate(common: &CommonArgs, strict: bool) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let level = if strict {
        ValidationLevel::Strict
    } else {
        eprintln!(
            "warning: core level only checks the axioms the indicator proof uses; \
             pass --strict for the full Drinfeld set"
        );
        ValidationLevel::Core
    };
    let report = bundle.algebra.validate(level);
    let output = validation_output(&report);
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => {
            for check in &output.checks {
                if check.passed {
                    println!("ok   {}", check.name);
                } else {
                    println!(
                        "FAIL {} witness={:?}",
                        check.name,
                        check.witness.clone().unwrap_or_default()
                    );
                }
            }
        }
    }
    if !report.passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name).collect();
        return Err(Failure::new(
            1,
            format!("axiom validation failed: {}", names.join(", ")),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct IntegralOutput {
    lambda: Vec<FieldElement>,
    rendered: String,
}

fn cmd_integral(common: &CommonArgs) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let integral = bundle.algebra.normalized_integral()?;
    let output = IntegralOutput {
        lambda: integral.lambda().coeffs().to_vec(),
        rendered: bundle.algebra.format_element(integral.lambda()),
    };
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => println!("Lambda = {}", output.rendered),
    }
    Ok(())
}

fn tensor2_entries(h: &QuasiHopfAlgebra, t: &Tensor) -> Vec<(String, String, FieldElement)> {
    t.nonzero()
        .into_iter()
        .map(|(idx, v)| {
            (
                h.basis_names()[idx[0]].clone(),
                h.basis_names()[idx[1]].clone(),
                v.clone(),
            )
        })
        .collect()
}

#[derive(Serialize)]
struct ElementsOutput {
    q_r: Vec<(String, String, FieldElement)>,
    p_r: Vec<(String, String, FieldElement)>,
    q_l: Vec<(String, String, FieldElement)>,
    p_l: Vec<(String, String, FieldElement)>,
    nu_pl: String,
    nu_pr: String,
}

fn cmd_elements(common: &CommonArgs) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let h = &bundle.algebra;
    let integral = h.normalized_integral()?;
    let hn = h.hausser_nill()?;
    let output = ElementsOutput {
        q_r: tensor2_entries(h, &hn.q_r),
        p_r: tensor2_entries(h, &hn.p_r),
        q_l: tensor2_entries(h, &hn.q_l),
        p_l: tensor2_entries(h, &hn.p_l),
        nu_pl: h.format_element(&h.nu_element(&hn, &integral, TChoice::Pl)),
        nu_pr: h.format_element(&h.nu_element(&hn, &integral, TChoice::Pr)),
    };
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => {
            for (label, entries) in [
                ("q_R", &output.q_r),
                ("p_R", &output.p_r),
                ("q_L", &output.q_l),
                ("p_L", &output.p_l),
            ] {
                println!("{label}:");
                for (a, b, v) in entries {
                    println!("  {a} (x) {b} -> {v}");
                }
            }
            println!("nu_H (t = p_L): {}", output.nu_pl);
            println!("nu_H (t = p_R): {}", output.nu_pr);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PivotalOutput {
    g: String,
    g_inv: String,
    method: String,
}

fn cmd_pivotal(common: &CommonArgs) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let h = &bundle.algebra;
    let integral = h.normalized_integral()?;
    let hn = h.hausser_nill()?;
    let piv = pivotal_g(h, &integral, &hn, TChoice::Pl)?;
    let output = PivotalOutput {
        g: h.format_element(&piv.g),
        g_inv: h.format_element(&piv.g_inv),
        method: piv.method.label().to_string(),
    };
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => {
            println!("g     = {}", output.g);
            println!("g^-1  = {}", output.g_inv);
            println!("method: {}", output.method);
        }
    }
    Ok(())
}

fn render_scalar(v: &FieldElement) -> String {
    v.to_string()
}

fn print_indicator_table(reports: &[IndicatorReport], t: TChoice) {
    println!(
        "{:<14} {:>3} {:>8} {:>6} {:>8} {:>8} {:>5} {:>6}",
        "module", "dim", "self-dual", "nu", "trace_E", "mu", "simple", "agree"
    );
    for r in reports {
        let nu = match t {
            TChoice::Pl => &r.nu_pl,
            TChoice::Pr => &r.nu_pr,
        };
        println!(
            "{:<14} {:>3} {:>8} {:>6} {:>8} {:>8} {:>5} {:>6}",
            r.module,
            r.dim,
            if r.self_dual { "yes" } else { "no" },
            render_scalar(nu),
            render_scalar(&r.trace_e),
            r.mu.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
            if r.absolutely_simple { "yes" } else { "no" },
            if r.agree { "yes" } else { "NO" },
        );
        if let Some(note) = &r.note {
            println!("  note: {note}");
        }
    }
}

fn compute_reports(bundle: &Bundle) -> Result<Vec<IndicatorReport>, Failure> {
    let analysis = analyze(&bundle.algebra)?;
    let mut reports = Vec::with_capacity(bundle.modules.len());
    for module in &bundle.modules {
        reports.push(module_report(&bundle.algebra, &analysis, module)?);
    }
    Ok(reports)
}

fn cmd_indicators(common: &CommonArgs, t: TChoice) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let reports = compute_reports(&bundle)?;
    match common.format {
        OutputFormat::Json => emit_json(&reports),
        OutputFormat::Table => print_indicator_table(&reports, t),
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyOutput {
    module: String,
    absolutely_simple: bool,
    mu: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<(usize, usize, FieldElement)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn cmd_classify(common: &CommonArgs, module_name: &str) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let h = &bundle.algebra;
    let module = bundle
        .modules
        .iter()
        .find(|m| m.name == module_name)
        .ok_or_else(|| Failure::new(3, format!("no module named {module_name:?} in bundle")))?;
    let mr = check_module(h, module);
    if !mr.is_module {
        return Err(Failure::new(
            1,
            format!("{module_name:?} fails the module axioms"),
        ));
    }
    let output = if mr.absolutely_simple {
        let integral = h.normalized_integral()?;
        let hn = h.hausser_nill()?;
        let piv = pivotal_g(h, &integral, &hn, TChoice::Pl)?;
        let verdict = oracle_classify(h, module, &piv)?;
        let certificate = verdict.certificate.as_ref().map(matrix_entries);
        ClassifyOutput {
            module: module_name.to_string(),
            absolutely_simple: true,
            mu: Some(verdict.mu),
            certificate,
            note: None,
        }
    } else {
        ClassifyOutput {
            module: module_name.to_string(),
            absolutely_simple: false,
            mu: None,
            certificate: None,
            note: Some(format!(
                "end_dim = {}; the trichotomy only covers absolutely simple modules",
                mr.end_dim
            )),
        }
    };
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => {
            match output.mu {
                Some(mu) => println!("module {module_name}: mu = {mu}"),
                None => println!("module {module_name}: classification suppressed"),
            }
            if let Some(cert) = &output.certificate {
                println!("certifying bilinear form (row, col, value):");
                for (r, c, v) in cert {
                    println!("  ({r}, {c}) -> {v}");
                }
            }
            if let Some(note) = &output.note {
                println!("note: {note}");
            }
        }
    }
    Ok(())
}

fn matrix_entries(m: &Matrix) -> Vec<(usize, usize, FieldElement)> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.at(r, c).is_zero() {
                out.push((r, c, m.at(r, c).clone()));
            }
        }
    }
    out
}

#[derive(Serialize)]
struct CrosscheckOutput {
    validation: ValidateOutput,
    reports: Vec<IndicatorReport>,
    all_agree: bool,
}

fn cmd_crosscheck(common: &CommonArgs) -> CmdResult {
    let bundle = load(&common.bundle)?;
    let report = bundle.algebra.validate(ValidationLevel::Strict);
    if !report.passed() {
        let names: Vec<&str> = report.failures().map(|c| c.name).collect();
        if common.format == OutputFormat::Json {
            emit_json(&validation_output(&report));
        }
        return Err(Failure::new(
            1,
            format!("strict validation failed: {}", names.join(", ")),
        ));
    }
    let reports = compute_reports(&bundle)?;
    let all_agree = reports
        .iter()
        .filter(|r| r.absolutely_simple)
        .all(|r| r.agree);
    let output = CrosscheckOutput {
        validation: validation_output(&report),
        reports,
        all_agree,
    };
    match common.format {
        OutputFormat::Json => emit_json(&output),
        OutputFormat::Table => {
            println!("strict validation: ok ({} axioms)", output.validation.checks.len());
            print_indicator_table(&output.reports, TChoice::Pl);
            println!(
                "crosscheck: {}",
                if output.all_agree { "AGREE" } else { "DISAGREE" }
            );
        }
    }
    if !all_agree {
        return Err(Failure::new(
            4,
            "indicator, trace and oracle disagree on a simple module".to_string(),
        ));
    }
    Ok(())
}

fn cmd_gen(target: GenTarget) -> CmdResult {
    match target {
        GenTarget::GroupAlgebra { group, out } => {
            let entry = catalog::build(&group)
                .filter(|_| !group.starts_with('c'))
                .ok_or_else(|| {
                    Failure::new(
                        3,
                        format!("unknown group {group:?}; expected z1..z8, s3, q8 or d4"),
                    )
                })?;
            let bundle: Bundle = entry.into();
            bundle.save(&out)?;
            println!("wrote {}", out.display());
            Ok(())
        }
        GenTarget::TwistedDual { order, class, out } => {
            if order == 0 || class >= order {
                return Err(Failure::new(
                    3,
                    format!("need order >= 1 and 0 <= class < order, got ({order}, {class})"),
                ));
            }
            let table = GroupTable::cyclic(order);
            let cocycle = cyclic_cocycle(order, class);
            let algebra = build_twisted_dual(&table, &cocycle)?;
            let modules = dual_group_simples(&table, algebra.field());
            let bundle = Bundle {
                algebra,
                modules,
                provenance: Some(format!(
                    "twisted dual k^(Z/{order})_w for the class-{class} 3-cocycle, over Q(zeta_{order})"
                )),
            };
            bundle.save(&out)?;
            println!("wrote {}", out.display());
            Ok(())
        }
    }
}
