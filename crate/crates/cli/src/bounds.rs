use clap::{Args, Subcommand};
use serde_json::json;
use sumrank::bounds::{
    ag_sequence_tradeoff, asymptotic_gv_rate, ball_volume, entropy_hsr, entropy_lower_bound, gamma_q, gv_rhs,
    Binomial, GvParams,
};
use sumrank::gf::FieldTower;
use sumrank::sumrank::{singleton_bound, SumRankSpace};

use crate::{CliResult, Failure, Globals};

#[derive(Subcommand)]
pub enum BoundsCommand {
    /// Largest log_q |C| for a given minimum sum-rank distance.
    Singleton {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        d: usize,
    },
    /// Number of words of sum-rank weight at most r.
    Volume {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        r: usize,
    },
    /// γ_q = Π (1 - q^{-i})^{-1}.
    Gamma {
        #[arg(long)]
        q: u64,
    },
    /// Sum-rank entropy H_sr(ρ) and its lower bound.
    Entropy {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        rho: f64,
    },
    /// Gilbert-Varshamov-like rate for t blocks of n × m and distance d.
    Gv {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        d: u32,
        /// Report whether this rate satisfies the inequality.
        #[arg(long)]
        rate: Option<f64>,
    },
    /// Limiting rate δ² − δ(1 + 1/ξ) + 1, and optionally the algebraic
    /// geometry sequence bound on R + 2δ − δ².
    Asymptotic {
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 1.0)]
        xi: f64,
        /// Block size n for the algebraic-geometry sequence bound.
        #[arg(long, requires_all = ["v", "q"])]
        n: Option<u32>,
        #[arg(long)]
        v: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(Args)]
pub struct SpaceArgs {
    #[arg(long)]
    q: u64,
    /// Number of equal blocks (with --n and --m).
    #[arg(long, required_unless_present = "sizes")]
    t: Option<usize>,
    #[arg(long, required_unless_present = "sizes")]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Block sizes as n_1xm_1,n_2xm_2,... instead of --t/--n/--m.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["t", "n", "m"])]
    sizes: Vec<String>,
}

impl SpaceArgs {
    pub fn build(&self) -> CliResult<SumRankSpace> {
        let tower = FieldTower::for_q(self.q, 1)?;
        let sizes = if self.sizes.is_empty() {
            let n = self.n.expect("required by clap");
            vec![(n, self.m.unwrap_or(n)); self.t.expect("required by clap")]
        } else {
            self.sizes.iter().map(|s| parse_size(s)).collect::<CliResult<Vec<_>>>()?
        };
        Ok(SumRankSpace::new(tower.ground(), sizes)?)
    }
}

fn parse_size(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Precondition(format!("block size {s:?} is not of the form NxM"));
    let (n, m) = s.split_once('x').ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
}

fn emit(g: &Globals, text: String, value: serde_json::Value) {
    if g.json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

pub fn run(g: &Globals, cmd: BoundsCommand) -> CliResult {
    let kind = if g.as_printed { Binomial::Ordinary } else { Binomial::Gaussian };
    match cmd {
        BoundsCommand::Singleton { space, d } => {
            let s = singleton_bound(&space.build()?, d)?;
            emit(g, s.to_string(), json!({"bound": "singleton", "d": d, "value": s}));
        }
        BoundsCommand::Volume { space, r } => {
            let v = ball_volume(&space.build()?, r, kind)?;
            emit(
                g,
                v.to_string(),
                json!({"bound": "volume", "r": r, "value": v.to_string(), "as_printed": g.as_printed}),
            );
        }
        BoundsCommand::Gamma { q } => {
            if q < 2 {
                return Err(Failure::Precondition("q must be at least 2".into()));
            }
            let v = gamma_q(q);
            emit(g, format!("{v:.12}"), json!({"bound": "gamma", "q": q, "value": v}));
        }
        BoundsCommand::Entropy { q, n, m, rho } => {
            let h = entropy_hsr(n, m, q, rho, kind)?;
            let lb = entropy_lower_bound(n, m, q, rho);
            emit(
                g,
                format!("H_sr = {h:.12}, lower bound = {lb:.12}"),
                json!({"bound": "entropy", "rho": rho, "value": h, "lower_bound": lb}),
            );
        }
        BoundsCommand::Gv { q, n, m, t, d, rate } => {
            let params = GvParams { q, n, m, t, d };
            let v = gv_rhs(params)?;
            let limit = asymptotic_gv_rate(params.relative_distance(), m as f64 / n as f64);
            let mut text = format!("rate <= {v:.12} (limit {limit:.12})");
            if let Some(r) = rate {
                text.push_str(if r <= v { ", satisfied" } else { ", not satisfied" });
            }
            emit(
                g,
                text,
                json!({"bound": "gv", "value": v, "limit": limit, "satisfied": rate.map(|r| r <= v)}),
            );
        }
        BoundsCommand::Asymptotic { delta, xi, n, v, q } => {
            if !(0.0..=1.0).contains(&delta) || xi <= 0.0 {
                return Err(Failure::Precondition("need 0 <= delta <= 1 and xi > 0".into()));
            }
            let rate = asymptotic_gv_rate(delta, xi);
            let ag = match (n, v, q) {
                (Some(n), Some(v), Some(q)) => Some(ag_sequence_tradeoff(n, v, q)?),
                _ => None,
            };
            let mut text = format!("rate ~ {rate:.12}");
            if let Some(a) = ag {
                text.push_str(&format!(", R + 2δ − δ² >= {a:.12}"));
            }
            emit(g, text, json!({"bound": "asymptotic", "rate": rate, "ag_tradeoff": ag}));
        }
    }
    Ok(())
}
