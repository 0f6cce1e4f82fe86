use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kinkiness::bounds::{
    braid_kappa_plus_lb, diagram_kappa_plus_lb, positive_braid_profile, sqp_report, BoundReport,
};
use kinkiness::braiding::{braid_from_diagram, BraidingError};
use kinkiness::families::{
    pretzel_classify, pretzel_diagram, pretzel_invariants, torus_braid, twist_invariants, twist_knot_diagram,
    PretzelParams,
};
use kinkiness::scan::{scan, to_json, write_csv, ScanOptions};
use kinkiness::{BandWord, BraidWord, OrientedDiagram};
use serde_json::{json, Value};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kinkiness", version, about = "Lower bounds for kinkiness and unknotting numbers")]
struct Cli {
    /// Output format; JSON by default, CSV by default for `scan`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Also bound the negative kinkiness through the mirror image.
    #[arg(long, global = true)]
    mirror: bool,
    /// Include unclamped right-hand sides.
    #[arg(long, global = true)]
    raw: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound from a braid word, band word or PD file.
    #[command(subcommand)]
    Bound(BoundInput),
    /// Generate a family member with its invariants.
    #[command(subcommand)]
    Family(FamilyInput),
    /// Classification flags of a pretzel knot.
    #[command(subcommand)]
    Classify(ClassifyInput),
    /// Convert a PD file into a braid word.
    BraidFromDiagram { file: PathBuf },
    /// Evaluate a file of `id<TAB>kind<TAB>payload` records.
    Scan { file: PathBuf },
}

#[derive(Subcommand)]
enum BoundInput {
    /// A braid word such as "B2: 1 1 1".
    Braid { word: String },
    /// A band word such as "SQP B2: (1,2) (1,2) (1,2)".
    Band { word: String },
    /// A PD file, or `-` for standard input.
    Diagram { file: PathBuf },
}

#[derive(Subcommand)]
enum FamilyInput {
    Torus { p: i64, q: i64 },
    #[command(allow_negative_numbers = true)]
    Pretzel { p: i64, q: i64, r: i64 },
    Twist { m: i64 },
}

#[derive(Subcommand)]
enum ClassifyInput {
    #[command(allow_negative_numbers = true)]
    Pretzel { p: i64, q: i64, r: i64 },
}

/// Marks a failure that is a bug or a violated internal assertion, not bad input.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Internal(String);

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        return Ok(text);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_diagram(path: &Path) -> Result<OrientedDiagram> {
    read_input(path)?
        .parse()
        .map_err(|e| anyhow!("{e}"))
        .with_context(|| format!("parsing {}", path.display()))
}

fn report_json(report: &BoundReport, raw: bool) -> Value {
    let mut report = report.clone();
    if !raw {
        report.raw_minus = None;
    }
    serde_json::to_value(report).expect("reports serialize")
}

fn report_csv(report: &BoundReport, raw: bool) -> Result<String> {
    let mut header = vec!["source", "raw", "kappa_plus_lb", "u_plus_lb", "kappa_minus_lb", "presentation_digest"];
    let mut row = vec![
        report.source.to_string(),
        report.raw.to_string(),
        report.kappa_plus_lb.to_string(),
        report.u_plus_lb.to_string(),
        report.kappa_minus_lb.map(|k| k.to_string()).unwrap_or_default(),
        report.presentation_digest.clone(),
    ];
    if raw {
        header.push("raw_minus");
        row.push(report.raw_minus.map(|r| r.to_string()).unwrap_or_default());
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&header)?;
    writer.write_record(&row)?;
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn bound(input: &BoundInput, cli: &Cli) -> Result<BoundReport> {
    Ok(match input {
        BoundInput::Braid { word } => {
            let w: BraidWord = word.parse().map_err(|e| anyhow!("{e}"))?;
            let report = braid_kappa_plus_lb(&w);
            if cli.mirror {
                report.with_mirror(&braid_kappa_plus_lb(&w.mirror()))
            } else {
                report
            }
        }
        BoundInput::Band { word } => {
            let bw: BandWord = word.parse().map_err(|e| anyhow!("{e}"))?;
            let report = sqp_report(&bw)?;
            if cli.mirror {
                report.with_mirror(&braid_kappa_plus_lb(&bw.expand().mirror()))
            } else {
                report
            }
        }
        BoundInput::Diagram { file } => {
            let d = read_diagram(file)?;
            let report = diagram_kappa_plus_lb(&d);
            if cli.mirror {
                report.with_mirror(&diagram_kappa_plus_lb(&d.mirror()))
            } else {
                report
            }
        }
    })
}

fn diagram_bound(d: &OrientedDiagram, cli: &Cli) -> Value {
    let report = diagram_kappa_plus_lb(d);
    let report = if cli.mirror { report.with_mirror(&diagram_kappa_plus_lb(&d.mirror())) } else { report };
    report_json(&report, cli.raw)
}

fn family(input: &FamilyInput, cli: &Cli) -> Result<Value> {
    Ok(match *input {
        FamilyInput::Torus { p, q } => {
            let w = torus_braid(p, q)?;
            let report = braid_kappa_plus_lb(&w);
            let report = if cli.mirror { report.with_mirror(&braid_kappa_plus_lb(&w.mirror())) } else { report };
            json!({
                "family": "torus",
                "parameters": [p, q],
                "braid": w.to_string(),
                "profile": positive_braid_profile(&w)?,
                "bound": report_json(&report, cli.raw),
            })
        }
        FamilyInput::Pretzel { p, q, r } => {
            let params = PretzelParams::new(p, q, r)?;
            let d = pretzel_diagram(params);
            let inv = pretzel_invariants(params);
            json!({
                "family": "pretzel",
                "parameters": [p, q, r],
                "diagram": d.to_string(),
                "seifert_matrix": inv.seifert_matrix,
                "alexander": inv.alexander,
                "signature": inv.signature,
                "determinant": inv.determinant,
                "genus": inv.surface_genus,
                "bound": diagram_bound(&d, cli),
            })
        }
        FamilyInput::Twist { m } => {
            let d = twist_knot_diagram(m)?;
            let inv = twist_invariants(m)?;
            json!({
                "family": "twist",
                "parameters": [m],
                "diagram": d.to_string(),
                "seifert_matrix": inv.seifert_matrix,
                "alexander": inv.alexander,
                "determinant": inv.determinant,
                "kappa_profile": inv.kappa_profile,
                "bound": diagram_bound(&d, cli),
            })
        }
    })
}

fn braid_diagram(file: &Path) -> Result<Value> {
    let d = read_diagram(file)?;
    let form = braid_from_diagram(&d).map_err(|e| match e {
        BraidingError::Disconnected => anyhow!("{e}"),
        _ => anyhow::Error::new(Internal(e.to_string())),
    })?;
    Ok(json!({
        "braid": form.braid.to_string(),
        "strands": form.braid.strands(),
        "exponent_sum": form.braid.exponent_sum(),
        "moves_applied": form.moves_applied,
        "crossings_added": form.crossings_added,
        "moves": form.moves,
    }))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<()> {
    let json_only = |name: &str| -> Result<()> {
        if cli.format == Some(Format::Csv) {
            bail!("`{name}` only produces JSON");
        }
        Ok(())
    };
    match &cli.command {
        Command::Bound(input) => {
            let report = bound(input, cli)?;
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report_json(&report, cli.raw))?)?,
                Format::Csv => write!(out, "{}", report_csv(&report, cli.raw)?)?,
            }
        }
        Command::Family(input) => {
            json_only("family")?;
            writeln!(out, "{}", serde_json::to_string_pretty(&family(input, cli)?)?)?;
        }
        Command::Classify(ClassifyInput::Pretzel { p, q, r }) => {
            json_only("classify")?;
            let params = PretzelParams::new(*p, *q, *r)?;
            let value = json!({ "parameters": [p, q, r], "flags": pretzel_classify(params) });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        Command::BraidFromDiagram { file } => {
            json_only("braid-from-diagram")?;
            writeln!(out, "{}", serde_json::to_string_pretty(&braid_diagram(file)?)?)?;
        }
        Command::Scan { file } => {
            let text = read_input(file)?;
            let opts = ScanOptions { mirror: cli.mirror, raw: cli.raw };
            let rows = scan(&text, opts);
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => write_csv(&rows, opts, &mut *out)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&to_json(&rows, opts))?)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    // Violated internal assertions surface as panics; report them as exit code 3.
    let Ok(outcome) = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli, &mut out))) else {
        return ExitCode::from(3);
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Internal>() => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
