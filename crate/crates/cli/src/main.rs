use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use hopfint::hopf::FiniteHopfAlgebra;
use hopfint::json::parse_hopf_json;
use hopfint::presets::{build_preset, looks_like_preset, Preset, PresetObject};
use hopfint::report::{preset_report, tensor_report, truncation_report, Report, ReportOptions, Status};
use hopfint::{Error, Field, FieldSpec, DEFAULT_ORDER_CAP};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_AXIOMS: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

/// Exact integrals, integral order and integral quotients of Hopf algebras.
///
/// INPUT is a JSON file or a preset such as `preset:sweedler` or
/// `taft_family(n=3,m=1,t=1)`.
#[derive(Parser, Debug)]
#[command(name = "hopfint", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Field override, e.g. `Q`, `fp:5`, `cyc:12`, `F7(z3)`.
    #[arg(long, value_name = "SPEC")]
    field: Option<String>,
    /// Give up on orders beyond this bound.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf axioms (or the reduction chain of a family).
    Verify {
        input: String,
        #[arg(long, value_name = "SPEC")]
        field: Option<String>,
    },
    /// Run the full invariant pipeline.
    Report {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Report on the tensor product of two finite-dimensional inputs.
    Tensor {
        a: String,
        b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Analyse the truncation `H/K_s` of a family preset.
    Truncate {
        family: String,
        s: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Input(String),
    Unsupported(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidParams { .. }
            | Error::InvalidField(_)
            | Error::FieldMismatch(..)
            | Error::IncompatibleExtension { .. }
            | Error::RootUnavailable { .. }
            | Error::DimMismatch { .. }
            | Error::TruncationUndeclared(_) => Failure::Input(e.to_string()),
            Error::UnsupportedCharacteristic { .. } => Failure::Unsupported(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn parse_field(spec: Option<&str>) -> Result<Option<Field>, Failure> {
    spec.map(|s| Ok(Field::new(s.parse::<FieldSpec>()?)?)).transpose()
}

/// A preset, or a JSON file wrapped as an unnamed finite preset.
fn load(input: &str, field: Option<&Field>) -> Result<Preset, Failure> {
    if looks_like_preset(input) || (!Path::new(input).exists() && input.contains('(')) {
        return Ok(build_preset(input, field)?);
    }
    let text = std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))?;
    let mut h = parse_hopf_json(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    if let Some(f) = field {
        h = h.base_change(f)?;
    }
    Ok(Preset { descriptor: input.to_string(), object: PresetObject::Finite(h), golden: Vec::new(), pi_degree: None })
}

fn finite(p: &Preset, what: &str) -> Result<FiniteHopfAlgebra, Failure> {
    p.finite()
        .cloned()
        .ok_or_else(|| Failure::Unsupported(format!("{what} needs a finite-dimensional input, {} is a family", p.descriptor)))
}

fn emit(report: &Report, json: bool) -> u8 {
    print!("{}", if json { report.to_json() } else { report.to_text() });
    match &report.status {
        Status::Ok => EXIT_OK,
        Status::Failed(why) => {
            for w in why {
                eprintln!("failed: {w}");
            }
            EXIT_AXIOMS
        }
    }
}

fn verify(input: &str, field: Option<&str>) -> Result<u8, Failure> {
    let field = parse_field(field)?;
    let p = load(input, field.as_ref())?;
    let failures: Vec<String> = match &p.object {
        PresetObject::Finite(h) => {
            let r = h.verify_axioms();
            for c in &r.checks {
                println!("{}: {}", c.name, c.failure.as_deref().map_or("ok".to_string(), |w| format!("FAILED {w}")));
            }
            r.failures().map(|c| c.name.to_string()).collect()
        }
        PresetObject::Family(f) => {
            let r = f.verify_chain();
            for c in &r.checks {
                let state = c.failure.as_deref().map_or("ok".to_string(), |w| format!("FAILED {w}"));
                println!("step {} {}: {state}", c.step, c.name);
            }
            r.failures().map(|c| format!("step {} {}", c.step, c.name)).collect()
        }
    };
    if failures.is_empty() {
        println!("{}: ok", p.descriptor);
        Ok(EXIT_OK)
    } else {
        println!("{}: {} check(s) failed: {}", p.descriptor, failures.len(), failures.join(", "));
        Ok(EXIT_AXIOMS)
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify { input, field } => verify(&input, field.as_deref()),
        Command::Report { input, common } => {
            let field = parse_field(common.field.as_deref())?;
            let p = load(&input, field.as_ref())?;
            let r = preset_report(&p, ReportOptions { order_cap: common.order_cap })?;
            Ok(emit(&r, common.json))
        }
        Command::Tensor { a, b, common } => {
            let field = parse_field(common.field.as_deref())?;
            let (pa, pb) = (load(&a, field.as_ref())?, load(&b, field.as_ref())?);
            let (ha, hb) = (finite(&pa, "tensor")?, finite(&pb, "tensor")?);
            let r = tensor_report(
                (&pa.descriptor, &ha),
                (&pb.descriptor, &hb),
                ReportOptions { order_cap: common.order_cap },
            )?;
            Ok(emit(&r, common.json))
        }
        Command::Truncate { family, s, common } => {
            let field = parse_field(common.field.as_deref())?;
            let p = load(&family, field.as_ref())?;
            let f = p
                .family()
                .ok_or_else(|| Failure::Unsupported(format!("{} is finite-dimensional; truncate needs a family", p.descriptor)))?;
            let r = truncation_report(&p.descriptor, f, s, ReportOptions { order_cap: common.order_cap })?;
            Ok(emit(&r, common.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            EXIT_UNSUPPORTED
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            EXIT_AXIOMS
        }
    };
    ExitCode::from(code)
}
