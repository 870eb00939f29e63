use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;
use sumrank::block_codes::{BchFamily, BlockCode, Distance};
use sumrank::constructions::{bch_sumrank, from_component_codes, from_extension_code, msrd, rs_pair};
use sumrank::gf::{Embedding, FieldTower};
use sumrank::sumrank::{export_sumrank_code, SumRankCode};

use crate::files::{print_summary, read_generator_matrix};
use crate::{CliResult, Failure, Globals};

#[derive(Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Write the code file here instead of standard output.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Kind {
    /// Split the symbols of a code over F_{q^{n(v+1)}} into q-polynomial
    /// coefficients.
    #[command(alias = "construct1")]
    Extension {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        v: usize,
        /// Generator-matrix file over a field with q^{n(v+1)} elements.
        #[arg(long)]
        code: PathBuf,
    },
    /// Use codes C_0, ..., C_v over F_{q^n} as q-polynomial coefficient codes.
    #[command(alias = "construct2")]
    Components {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Comma-separated generator-matrix files, C_0 first.
        #[arg(long, value_delimiter = ',', required = true)]
        codes: Vec<PathBuf>,
    },
    /// Reed-Solomon pair over F_{q^2}: K = t + 3k + 1, d >= t - k + 1.
    #[command(alias = "thm25")]
    RsPair {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
    /// BCH component codes with designed distances u_0, ..., u_v.
    Bch {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        u: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        designed: Vec<u64>,
        #[arg(long, value_enum, default_value_t = FamilyArg::Extension)]
        family: FamilyArg,
        /// Divisor λ of q^n - 1 for the divided family.
        #[arg(long, default_value_t = 1)]
        lambda: u64,
    },
    /// Maximum sum-rank distance code with square blocks.
    Msrd {
        #[arg(long)]
        q: u64,
        /// Comma-separated block sizes n_1 >= n_2 >= ...
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    /// Primitive codes over F_{q^n}.
    Extension,
    /// Primitive codes over F_q.
    Ground,
    /// Length (q^{nu} - 1)/λ over F_{q^n}.
    Divided,
}

impl FamilyArg {
    pub fn family(self, lambda: u64) -> BchFamily {
        match self {
            FamilyArg::Extension => BchFamily::Extension,
            FamilyArg::Ground => BchFamily::Ground,
            FamilyArg::Divided => BchFamily::Divided { lambda },
        }
    }
}

/// Component distance: as recorded in the file, else computed when the code
/// is small enough.
fn with_known_distance(code: BlockCode, budget: u128) -> BlockCode {
    if code.distance() != &Distance::Unknown {
        return code;
    }
    let mut code = code;
    let _ = code.verify_distance(budget);
    code
}

/// Moves a code read from a file onto `tower`'s top field, re-encoding
/// symbols when the file uses a different presentation of the same field.
fn onto_tower(code: BlockCode, tower: &FieldTower, path: &std::path::Path) -> CliResult<BlockCode> {
    let target = tower.top();
    if code.alphabet().as_ref() == target.as_ref() {
        return Ok(code);
    }
    if code.alphabet().size() != target.size() || code.alphabet().p() != target.p() {
        return Err(Failure::Precondition(format!(
            "{}: code is over F_{}, expected F_{}",
            path.display(),
            code.alphabet().size(),
            target.size()
        )));
    }
    let emb = Embedding::new(code.alphabet(), target, 1 << 24)?;
    Ok(code.map_alphabet(target, |x| emb.apply(x))?)
}

pub fn run(g: &Globals, args: ConstructArgs) -> CliResult {
    let code: SumRankCode = match args.kind {
        Kind::Extension { q, n, v, code } => {
            let tower = FieldTower::for_q(q, n)?;
            let (_, c) = read_generator_matrix(&code)?;
            from_extension_code(&tower, v, &with_known_distance(c, g.budget))?
        }
        Kind::Components { q, n, codes } => {
            let tower = FieldTower::for_q(q, n)?;
            let mut comps = Vec::with_capacity(codes.len());
            for path in &codes {
                let (_, c) = read_generator_matrix(path)?;
                let c = onto_tower(c, &tower, path)?;
                comps.push(with_known_distance(c, g.budget));
            }
            from_component_codes(&tower, &comps)?
        }
        Kind::RsPair { q, t, k } => rs_pair(q, t, k)?,
        Kind::Bch { q, n, u, designed, family, lambda } => {
            let r = bch_sumrank(family.family(lambda), q, n, u, &designed, g.budget)?;
            match r.code {
                Some(code) => code,
                None => {
                    let v = json!({
                        "length": r.length,
                        "dimension": r.dimension,
                        "claimed_distance": r.claimed_distance,
                        "materialized": false,
                    });
                    if g.json {
                        println!("{v}");
                    } else {
                        println!(
                            "t = {}, K = {}, claimed d = {} (generators not built: K·t·n² exceeds the budget)",
                            r.length, r.dimension, r.claimed_distance
                        );
                    }
                    if args.out.is_some() {
                        return Err(Failure::Budget("code too large to write; raise --budget".into()));
                    }
                    return Ok(());
                }
            }
        }
        Kind::Msrd { q, sizes, d } => msrd(q, &sizes, d)?,
    };
    let text = export_sumrank_code(&code);
    match args.out {
        Some(path) => {
            std::fs::write(&path, text)?;
            print_summary(g, &code, false);
        }
        None => {
            print!("{text}");
            print_summary(g, &code, true);
        }
    }
    Ok(())
}
