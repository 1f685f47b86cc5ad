//! Command-line front end.
//!
//! # Purpose
//!
//! Thin plumbing over the library: list the catalog, build an entry to
//! the canonical JSON document, verify or census a document, export it
//! to the text formats, and evaluate the count formula.
//!
//! # Why
//!
//! Exit codes are part of the contract: 0 on success, 1 when a
//! verification check fails, 2 on usage or parse errors, so the tool
//! can drive shell pipelines and CI checks.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use platcfg::builder::{predict_counts, CountSpec};
use platcfg::catalog;
use platcfg::incidence::{census, format_signature, is_connected, levi_dot, levi_text, verify_axioms};
use platcfg::io::{from_json, to_json, to_obj};
use platcfg::solids::SolidKind;
use platcfg::symmetry::{classify, SymmetryClass};
use platcfg::EPS;

#[derive(Parser)]
#[command(name = "platcfg", version, about = "point-line configurations with Platonic symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Require the full symmetry group (rotations and reflections).
    Full,
    /// Require at least the rotation group.
    Rotational,
    /// Report the class; only the axioms decide the exit code.
    Auto,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Levi,
    Dot,
    Obj,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog entries.
    List,
    /// Build a catalog entry and write the canonical JSON document.
    Build {
        /// Catalog entry id.
        entry: String,
        /// Solid to build on (entry default when omitted).
        #[arg(long)]
        solid: Option<String>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Numeric tolerance.
        #[arg(long, default_value_t = EPS)]
        eps: f64,
    },
    /// Verify a JSON document: axioms, census, symmetry class.
    Verify {
        /// Configuration document.
        file: PathBuf,
        /// Solid whose symmetry groups to test against (document's
        /// solid field when omitted).
        #[arg(long)]
        solid: Option<String>,
        /// Which symmetry class the exit code requires.
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Numeric tolerance.
        #[arg(long, default_value_t = EPS)]
        eps: f64,
    },
    /// Print the census signature of a JSON document.
    Census {
        /// Configuration document.
        file: PathBuf,
    },
    /// Convert a JSON document to another format.
    Export {
        /// Configuration document.
        file: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the per-element count formula for one layer.
    Predict {
        /// Solid name or letter.
        #[arg(long)]
        solid: String,
        /// Points per vertex.
        #[arg(long, default_value_t = 0)]
        x: usize,
        /// Points per edge.
        #[arg(long, default_value_t = 0)]
        y: usize,
        /// Points per face.
        #[arg(long, default_value_t = 0)]
        z: usize,
        /// Lines per edge.
        #[arg(long, default_value_t = 0)]
        u: usize,
        /// Lines per face.
        #[arg(long, default_value_t = 0)]
        vv: usize,
    },
}

/// Usage or input error: exit 2.
const USAGE: u8 = 2;
/// Verification failure: exit 1.
const FAILED: u8 = 1;

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn parse_solid(name: &str) -> Result<SolidKind, String> {
    SolidKind::parse(name).map_err(|e| e.to_string())
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_document(file: &PathBuf) -> Result<platcfg::incidence::GeometricConfiguration, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    from_json(&text).map_err(|e| e.to_string())
}

fn cmd_list() -> ExitCode {
    for e in catalog::entries() {
        let letters: Vec<&str> = e.kinds.iter().map(|k| k.letter()).collect();
        println!("{}  {}  {}  {}", e.id, letters.join(","), e.headline, e.summary);
    }
    ExitCode::SUCCESS
}

fn cmd_build(entry: &str, solid: Option<&str>, out: Option<&PathBuf>, eps: f64) -> ExitCode {
    let kind = match solid.map(parse_solid).transpose() {
        Ok(k) => k,
        Err(e) => return fail(USAGE, e),
    };
    let config = match catalog::build(entry, kind, eps) {
        Ok(c) => c,
        Err(e @ (catalog::CatalogError::UnknownEntry(_)
        | catalog::CatalogError::KindNotAdmitted { .. })) => return fail(USAGE, e),
        Err(e) => return fail(FAILED, e),
    };
    let report = verify_axioms(&config, eps);
    eprintln!("{}", report.summary(eps));
    eprintln!("census: {}", format_signature(&census(&config)));
    if let Err(e) = write_out(out, &to_json(&config)) {
        return fail(USAGE, e);
    }
    if report.passes(eps) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILED)
    }
}

fn cmd_verify(file: &PathBuf, solid: Option<&str>, mode: Mode, eps: f64) -> ExitCode {
    let config = match read_document(file) {
        Ok(c) => c,
        Err(e) => return fail(USAGE, e),
    };
    let kind = match parse_solid(solid.unwrap_or(&config.meta.solid)) {
        Ok(k) => k,
        Err(e) => return fail(USAGE, e),
    };
    let report = verify_axioms(&config, eps);
    println!("{}", report.summary(eps));
    println!("census: {}", format_signature(&census(&config)));
    println!("connected: {}", is_connected(&config));
    let class = classify(&config, kind, eps);
    println!("symmetry: {} ({})", class.tag(), kind.name());
    let class_ok = match mode {
        Mode::Full => class == SymmetryClass::Full,
        Mode::Rotational => class != SymmetryClass::Neither,
        Mode::Auto => true,
    };
    if report.passes(eps) && class_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILED)
    }
}

fn cmd_census(file: &PathBuf) -> ExitCode {
    match read_document(file) {
        Ok(config) => {
            println!("{}", format_signature(&census(&config)));
            ExitCode::SUCCESS
        }
        Err(e) => fail(USAGE, e),
    }
}

fn cmd_export(file: &PathBuf, format: Format, out: Option<&PathBuf>) -> ExitCode {
    let config = match read_document(file) {
        Ok(c) => c,
        Err(e) => return fail(USAGE, e),
    };
    let text = match format {
        Format::Json => to_json(&config),
        Format::Levi => levi_text(&config),
        Format::Dot => levi_dot(&config),
        Format::Obj => to_obj(&config),
    };
    match write_out(out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(USAGE, e),
    }
}

fn cmd_predict(solid: &str, spec: CountSpec) -> ExitCode {
    match parse_solid(solid) {
        Ok(kind) => {
            let (p, l) = predict_counts(&kind.params(), &spec);
            println!("{p} {l}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(USAGE, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => cmd_list(),
        Command::Build { entry, solid, out, eps } => {
            cmd_build(&entry, solid.as_deref(), out.as_ref(), eps)
        }
        Command::Verify { file, solid, mode, eps } => {
            cmd_verify(&file, solid.as_deref(), mode, eps)
        }
        Command::Census { file } => cmd_census(&file),
        Command::Export { file, format, out } => cmd_export(&file, format, out.as_ref()),
        Command::Predict { solid, x, y, z, u, vv } => {
            cmd_predict(&solid, CountSpec { x, y, z, u, vv })
        }
    }
}
