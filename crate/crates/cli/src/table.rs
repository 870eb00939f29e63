use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;
use sumrank::gf::FieldTower;
use sumrank::sumrank::SumRankSpace;
use sumrank::table::{bch_row_dimension, offer_code, rs_pair_dimension, render, singleton_table, UNFILLED};

use crate::construct::FamilyArg;
use crate::files::read_sumrank;
use crate::{CliResult, Failure, Globals};

#[derive(Args)]
pub struct TableArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    n: usize,
    /// Columns per block; defaults to n.
    #[arg(long)]
    m: Option<usize>,
    /// Smallest distance listed.
    #[arg(long, default_value_t = 2)]
    from: usize,
    /// Largest distance listed; defaults to t·n.
    #[arg(long)]
    to: Option<usize>,
    /// Sum-rank code files placed on the row of their distance.
    #[arg(long = "code")]
    codes: Vec<PathBuf>,
    /// Fill rows from a closed-form family.
    #[arg(long, value_enum)]
    fill: Option<Fill>,
    #[arg(long, value_enum, default_value_t = FamilyArg::Extension)]
    family: FamilyArg,
    /// Extension degree u of the BCH length.
    #[arg(long)]
    u: Option<u32>,
    #[arg(long, default_value_t = 1)]
    lambda: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fill {
    /// Reed-Solomon pair codes with 2 × 2 blocks over F_{q^2}.
    RsPair,
    /// BCH component codes with n × n blocks.
    Bch,
}

pub fn run(g: &Globals, args: TableArgs) -> CliResult {
    let m = args.m.unwrap_or(args.n);
    let tower = FieldTower::for_q(args.q, 1)?;
    let space = SumRankSpace::uniform(tower.ground(), args.t, args.n, m)?;
    let to = args.to.unwrap_or(args.t * args.n);
    if args.from == 0 || args.from > to || to > args.t * args.n {
        return Err(Failure::Precondition(format!("distances must satisfy 1 <= from <= to <= {}", args.t * args.n)));
    }
    let mut rows = singleton_table(&space, args.from..=to)?;

    for path in &args.codes {
        let code = read_sumrank(path)?;
        if code.space().q() != args.q || code.space().sizes() != space.sizes() {
            return Err(Failure::Precondition(format!("{}: code is not in the tabulated space", path.display())));
        }
        offer_code(&mut rows, &code);
    }

    match args.fill {
        Some(Fill::RsPair) => {
            if args.n != 2 || m != 2 {
                return Err(Failure::Precondition("rs-pair rows need 2 × 2 blocks".into()));
            }
            for row in &mut rows {
                if let Some(k) = rs_pair_dimension(args.q, args.t, row.distance) {
                    row.offer(k, format!("rs-pair q={} t={} k={}", args.q, args.t, args.t + 1 - row.distance));
                }
            }
        }
        Some(Fill::Bch) => {
            let u = args.u.ok_or_else(|| Failure::Precondition("--fill bch needs --u".into()))?;
            let family = args.family.family(args.lambda);
            if args.n != m {
                return Err(Failure::Precondition("BCH rows need square blocks".into()));
            }
            let len = family.length(args.q, args.n as u32, u)?;
            if len != args.t as u64 {
                return Err(Failure::Precondition(format!("this BCH family has length {len}, not t = {}", args.t)));
            }
            for row in &mut rows {
                if let Some((k, designed)) = bch_row_dimension(family, args.q, args.n as u32, u, row.distance) {
                    if let Ok(k) = usize::try_from(k) {
                        row.offer(k, format!("bch designed={designed:?}"));
                    }
                }
            }
        }
        None => {}
    }

    if g.json {
        for r in &rows {
            let v = json!({
                "distance": r.distance,
                "singleton": r.singleton,
                "dimension": r.dimension,
                "gap": r.gap(),
                "source": r.provenance.as_deref().unwrap_or(UNFILLED),
            });
            println!("{v}");
        }
    } else {
        print!("{}", render(&rows, m));
    }
    Ok(())
}
