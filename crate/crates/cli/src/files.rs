use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use sumrank::block_codes::{export_generator_matrix, import_generator_matrix, BlockCode, Distance};
use sumrank::gf::FieldTower;
use sumrank::sumrank::{export_sumrank_code, import_sumrank_code, singleton_bound, SumRankCode};

use crate::{CliResult, Failure, Globals};

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))
}

pub fn read_generator_matrix(path: &Path) -> CliResult<(FieldTower, BlockCode)> {
    import_generator_matrix(&read(path)?)
        .map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))
}

pub fn read_sumrank(path: &Path) -> CliResult<SumRankCode> {
    import_sumrank_code(&read(path)?).map_err(|e| match e {
        sumrank::Error::BudgetExceeded { .. } => Failure::from(e),
        e => Failure::Precondition(format!("{}: {e}", path.display())),
    })
}

/// K, distances, Singleton exponent and defect (or gap) of a code.
pub fn summary(code: &SumRankCode) -> Value {
    let singleton = code.distance().and_then(|d| singleton_bound(code.space(), d).ok());
    json!({
        "provenance": code.provenance(),
        "q": code.space().q(),
        "sizes": code.space().sizes(),
        "dimension": code.dimension(),
        "claimed_distance": code.claimed_distance(),
        "verified_distance": code.verified_distance(),
        "singleton": singleton,
        "defect": code.defect().ok(),
        "singleton_gap": code.singleton_gap().ok(),
    })
}

pub fn print_summary(g: &Globals, code: &SumRankCode, to_stderr: bool) {
    let text = if g.json {
        summary(code).to_string()
    } else {
        let mut parts = vec![format!("K = {}", code.dimension())];
        if let Some(d) = code.claimed_distance() {
            parts.push(format!("claimed d = {d}"));
        }
        if let Some(d) = code.verified_distance() {
            parts.push(format!("verified d = {d}"));
        }
        if let Some(s) = code.distance().and_then(|d| singleton_bound(code.space(), d).ok()) {
            parts.push(format!("Singleton = {s}"));
        }
        match (code.defect(), code.singleton_gap()) {
            (Ok(x), _) => parts.push(format!("defect = {x}")),
            (Err(_), Ok(x)) => parts.push(format!("Singleton gap = {x}")),
            _ => {}
        }
        parts.join(", ")
    };
    if to_stderr {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Sum-rank code file.
    file: PathBuf,
}

pub fn verify(g: &Globals, args: VerifyArgs) -> CliResult {
    let mut code = read_sumrank(&args.file)?;
    let d = code.verify(g.budget)?;
    print_summary(g, &code, false);
    match code.claimed_distance() {
        Some(c) if d < c => Err(Failure::Verification(format!("verified distance {d} is below the claimed {c}"))),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct ConvertArgs {
    /// Generator-matrix or sum-rank code file.
    file: PathBuf,
    /// Output format; `--json` also selects JSON.
    #[arg(long, value_enum)]
    to: Option<Format>,
}

/// Generator-matrix files start with a five-number header, sum-rank files
/// with three.
fn first_data_line(text: &str) -> Option<usize> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .find(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().count())
}

pub fn convert(g: &Globals, args: ConvertArgs) -> CliResult {
    let text = read(&args.file)?;
    let json = matches!(args.to, Some(Format::Json)) || (args.to.is_none() && g.json);
    match first_data_line(&text) {
        Some(5) => {
            let (tower, code) = read_generator_matrix(&args.file)?;
            if json {
                let distance = match code.distance() {
                    Distance::Verified(d) => json!({"verified": d}),
                    Distance::Declared { bound, .. } => json!({"declared": bound}),
                    Distance::Unknown => Value::Null,
                };
                let v = json!({
                    "kind": "generator-matrix",
                    "p": tower.p(), "e": tower.e(), "n": tower.n(),
                    "t": code.length(), "k": code.dimension(),
                    "rows": code.generator(),
                    "distance": distance,
                });
                println!("{v}");
            } else {
                print!("{}", export_generator_matrix(&code, tower.e())?);
            }
        }
        Some(3) => {
            let code = read_sumrank(&args.file)?;
            if json {
                let f = code.space().field();
                let gens: Vec<&[u64]> = code.generators().iter().map(|g| g.as_flat()).collect();
                let v = json!({
                    "kind": "sum-rank",
                    "p": f.p(), "e": f.degree(),
                    "sizes": code.space().sizes(),
                    "dimension": code.dimension(),
                    "generators": gens,
                    "claimed_distance": code.claimed_distance(),
                    "verified_distance": code.verified_distance(),
                    "provenance": code.provenance(),
                });
                println!("{v}");
            } else {
                print!("{}", export_sumrank_code(&code));
            }
        }
        _ => {
            return Err(Failure::Precondition(format!(
                "{}: unrecognized header (expected `p e n t k` or `p e t`)",
                args.file.display()
            )))
        }
    }
    Ok(())
}
