//! Counting and bound evaluators: Gaussian binomials, sum-rank ball volumes,
//! the sum-rank entropy function and the Gilbert-Varshamov-like rate.
//!
//! The volume and entropy functions take a [`Binomial`] selector. The number
//! of `n × m` matrices of rank `s` is `[n choose s]_q Π_{j<s}(q^m - q^j)`
//! with a Gaussian binomial; [`Binomial::Ordinary`] replaces it by the
//! ordinary binomial to reproduce the formula as it is usually printed.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sumrank::SumRankSpace;

/// Which binomial coefficient multiplies the rank-`s` product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Binomial {
    /// `[n choose s]_q`; gives exact counts.
    #[default]
    Gaussian,
    /// `n choose s`.
    Ordinary,
}

/// `[n choose k]_q = Π_{i<k} (q^{n-i} - 1)/(q^{k-i} - 1)`, the number of
/// `k`-dimensional subspaces of `F_q^n`. Zero when `k > n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n - i) - 1u32;
        den *= q.pow(k - i) - 1u32;
    }
    num / den
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of `n × m` matrices over `F_q` of rank exactly `s` (with the
/// Gaussian binomial; see [`Binomial`] for the other choice).
pub fn rank_count(n: u32, m: u32, s: u32, q: u64, kind: Binomial) -> BigUint {
    if s > n.min(m) {
        return BigUint::zero();
    }
    let prefix = match kind {
        Binomial::Gaussian => gaussian_binomial(n, s, q),
        Binomial::Ordinary => binomial(n, s),
    };
    let qb = BigUint::from(q);
    let qm = qb.pow(m);
    (0..s).fold(prefix, |acc, j| acc * (&qm - qb.pow(j)))
}

/// Number of words of sum-rank weight exactly `w`, for every `w <= N`.
pub fn weight_distribution(space: &SumRankSpace, kind: Binomial) -> Vec<BigUint> {
    let q = space.q();
    let mut dist = vec![BigUint::one()];
    for &(n, m) in space.sizes() {
        let counts: Vec<BigUint> = (0..=n as u32).map(|s| rank_count(n as u32, m as u32, s, q, kind)).collect();
        let mut next = vec![BigUint::zero(); dist.len() + n];
        for (a, x) in dist.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in counts.iter().enumerate() {
                next[a + b] += x * y;
            }
        }
        dist = next;
    }
    dist
}

/// Number of words of sum-rank weight at most `r`.
pub fn ball_volume(space: &SumRankSpace, r: usize, kind: Binomial) -> Result<BigUint> {
    let big_n = space.total_rows();
    if r > big_n {
        return Err(Error::DistanceOutOfRange { d: r, max: big_n });
    }
    Ok(weight_distribution(space, kind).into_iter().take(r + 1).sum())
}

/// Natural logarithm of a big integer.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln` of the coefficients of `f(z) = Σ_i c_i z^i`, `c_i` the rank-`i` count.
fn f_log_coeffs(n: u32, m: u32, q: u64, kind: Binomial) -> Vec<f64> {
    (0..=n).map(|i| ln_big(&rank_count(n, m, i, q, kind))).collect()
}

fn log_sum_exp(terms: impl Iterator<Item = f64>) -> f64 {
    let terms: Vec<f64> = terms.collect();
    let top = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    top + terms.iter().map(|t| (t - top).exp()).sum::<f64>().ln()
}

/// `log_q f(z)` for `f(z) = Σ_{i=0}^{n} c_i z^i`, `c_i` the number of
/// `n × m` rank-`i` matrices; `f(1) = q^{nm}` with Gaussian binomials.
pub fn f_poly_log(n: u32, m: u32, q: u64, z: f64, kind: Binomial) -> Result<f64> {
    if !(z > 0.0 && z <= 1.0) {
        return Err(Error::InvalidParameter(format!("z = {z} outside (0, 1]")));
    }
    let c = f_log_coeffs(n, m, q, kind);
    let lz = z.ln();
    Ok(log_sum_exp(c.iter().enumerate().map(|(i, &ci)| ci + i as f64 * lz)) / (q as f64).ln())
}

/// `H_sr(ρ) = (1/mn) min_{z ∈ (0,1]} log_q(f(z) / z^ρ)` for `0 < ρ < n`.
///
/// With `u = ln z` the objective is convex, so a 1024-point grid followed by
/// golden-section refinement around the best grid point finds the minimum.
pub fn entropy_hsr(n: u32, m: u32, q: u64, rho: f64, kind: Binomial) -> Result<f64> {
    if !(rho > 0.0 && rho < n as f64) {
        return Err(Error::InvalidParameter(format!("ρ = {rho} outside (0, {n})")));
    }
    let c = f_log_coeffs(n, m, q, kind);
    let lnq = (q as f64).ln();
    let objective = |u: f64| log_sum_exp(c.iter().enumerate().map(|(i, &ci)| ci + i as f64 * u)) - rho * u;
    // the minimizer has z of order q^{-(n+m)}; go well below that
    let lo = -((n + m) as f64 + 8.0) * lnq - 8.0;
    const GRID: usize = 1024;
    let step = -lo / (GRID - 1) as f64;
    let (best, _) = (0..GRID)
        .map(|k| {
            let u = lo + k as f64 * step;
            (k, objective(u))
        })
        .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
    let mut a = lo + best.saturating_sub(1) as f64 * step;
    let mut b = (lo + (best + 1) as f64 * step).min(0.0);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let (mut f1, mut f2) = (objective(x1), objective(x2));
    while b - a > 1e-12 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = objective(x2);
        }
    }
    let min = objective((a + b) / 2.0).min(objective(0.0)).min(f1).min(f2);
    Ok(min / lnq / (m as f64 * n as f64))
}

/// `((m + n - ρ)ρ - 1/4 - log_q γ_q) / (mn)`, a lower bound on [`entropy_hsr`].
pub fn entropy_lower_bound(n: u32, m: u32, q: u64, rho: f64) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    ((mf + nf - rho) * rho - 0.25 - gamma_q(q).ln() / (q as f64).ln()) / (mf * nf)
}

/// `γ_q = Π_{i>=1} (1 - q^{-i})^{-1}`, truncated once `q^{-i} < 10^{-17}`.
pub fn gamma_q(q: u64) -> f64 {
    let qf = q as f64;
    let mut prod = 1.0;
    let mut term = 1.0 / qf;
    while term > 1e-17 {
        prod /= 1.0 - term;
        term /= qf;
    }
    prod
}

/// Parameters of the finite-length Gilbert-Varshamov-like inequality:
/// `t` blocks of `n × m` over `F_q`, distance `d` with `2 < d <= N = nt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GvParams {
    pub q: u64,
    pub n: u32,
    pub m: u32,
    pub t: u32,
    pub d: u32,
}

impl GvParams {
    pub fn total_rows(&self) -> u32 {
        self.n * self.t
    }

    pub fn relative_distance(&self) -> f64 {
        self.d as f64 / self.total_rows() as f64
    }
}

/// Right-hand side of the Gilbert-Varshamov-like inequality, with
/// `δ = d/N`:
///
/// ```text
/// δ² n/m − δ(1 + n/m + 2n/(Nm)) + 1 + 1/N + n/(Nm) + n/(N²m)
///   − (Σ_{i=1}^{d−1} log_q(1 + (t−1)/i) + log_q(d − 1)) / (Nm) − log_q(γ_q)/(nm)
/// ```
///
/// A rate at most this value is attained by some linear code of relative
/// distance at least `δ`.
pub fn gv_rhs(params: GvParams) -> Result<f64> {
    let GvParams { q, n, m, t, d } = params;
    let big_n = n * t;
    if n == 0 || n > m || t == 0 {
        return Err(Error::InvalidParameter(format!("need 1 <= n <= m and t >= 1, got n={n} m={m} t={t}")));
    }
    if d <= 2 || d > big_n {
        return Err(Error::Hypothesis(format!("need 2 < d <= N = {big_n}, got d = {d}")));
    }
    let lq = |x: f64| x.ln() / (q as f64).ln();
    let (nf, mf, nn, tf) = (n as f64, m as f64, big_n as f64, t as f64);
    let delta = d as f64 / nn;
    let sum: f64 = (1..d).map(|i| lq(1.0 + (tf - 1.0) / i as f64)).sum();
    Ok(delta * delta * nf / mf - delta * (1.0 + nf / mf + 2.0 * nf / (nn * mf))
        + 1.0
        + 1.0 / nn
        + nf / (nn * mf)
        + nf / (nn * nn * mf)
        - (sum + lq(d as f64 - 1.0)) / (nn * mf)
        - lq(gamma_q(q)) / (nf * mf))
}

/// Limiting Gilbert-Varshamov-like rate `δ² − δ(1 + 1/ξ) + 1` for `m = ξn`.
pub fn asymptotic_gv_rate(delta: f64, xi: f64) -> f64 {
    delta * delta - delta * (1.0 + 1.0 / xi) + 1.0
}

/// `R + 2δ − δ²`; at least 1 exactly on the square-block GV-like curve.
pub fn gv_tradeoff(rate: f64, delta: f64) -> f64 {
    rate + 2.0 * delta - delta * delta
}

/// Lower bound on [`gv_tradeoff`] for the sequences built from algebraic
/// geometry codes on the Tsfasman-Vlăduţ-Zink bound with square `n × n`
/// blocks and q-degree `v`:
/// `(1/n)(v + 3 − Σ_{i=0}^{v} 1/(n−i) − 1/(q^{n/2} − 1) − 1/n)`.
pub fn ag_sequence_tradeoff(n: u32, v: u32, q: u64) -> Result<f64> {
    if v >= n {
        return Err(Error::InvalidParameter(format!("v = {v} must be below n = {n}")));
    }
    let nf = n as f64;
    let harmonic: f64 = (0..=v).map(|i| 1.0 / (n - i) as f64).sum();
    let tvz = 1.0 / ((q as f64).powf(nf / 2.0) - 1.0);
    Ok((v as f64 + 3.0 - harmonic - tvz - 1.0 / nf) / nf)
}
