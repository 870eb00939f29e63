//! Sum-rank codes built from Hamming-metric codes over `F_{q^n}` and from
//! q-polynomials.
//!
//! Every block of every codeword is the `n × n` matrix over `F_q` of a
//! q-polynomial `a_0 x + a_1 x^q + ... + a_v x^{q^v}`; the constructions differ
//! in how the coefficients are chosen.

mod bch;
mod msrd;

use std::sync::Arc;

pub use bch::{bch_sumrank, BchSumRank};
pub use msrd::{msrd, MsrdPlan, Slot};

use crate::block_codes::{reed_solomon, BlockCode};
use crate::error::{Error, Result};
use crate::gf::{Embedding, FieldTower};
use crate::linearized::LinearizedPoly;
use crate::sumrank::{SumRankCode, SumRankCodeword, SumRankSpace};

/// Row-major `n × n` matrix of `Σ coeffs[i] x^{q^i}`.
pub(crate) fn poly_block(tower: &FieldTower, coeffs: Vec<u64>) -> Vec<u64> {
    LinearizedPoly::new(tower, coeffs).expect("q-degree below n").to_matrix(tower).data().to_vec()
}

/// `c · x^{q^i}` as a flat block.
pub(crate) fn monomial_block(tower: &FieldTower, c: u64, i: usize) -> Vec<u64> {
    let mut coeffs = vec![0; i + 1];
    coeffs[i] = c;
    poly_block(tower, coeffs)
}

/// Codes `C_0, ..., C_v` over `F_{q^n}` of common length `t` give the code of
/// all tuples `(f_1, ..., f_t)` with `f_s = Σ_i c_{i,s} x^{q^i}` and
/// `(c_{i,1}, ..., c_{i,t}) ∈ C_i`.
///
/// `K = n Σ k_i`; the claimed distance is `min_i w_i (n - i)` where `w_i` is
/// the distance recorded on `C_i` (no claim when one of them is unknown).
pub fn from_component_codes(tower: &FieldTower, codes: &[BlockCode]) -> Result<SumRankCode> {
    let n = tower.n() as usize;
    let first = codes.first().ok_or(Error::InvalidParameter("at least one component code is required".into()))?;
    if codes.len() > n {
        return Err(Error::InvalidParameter(format!(
            "{} component codes need q-degree {} but n = {n}",
            codes.len(),
            codes.len() - 1
        )));
    }
    let t = first.length();
    for (i, c) in codes.iter().enumerate() {
        if c.alphabet().as_ref() != tower.top().as_ref() {
            return Err(Error::InvalidParameter(format!("code {i} is not over F_{}", tower.top().size())));
        }
        if c.length() != t {
            return Err(Error::InvalidLength { expected: t, got: c.length() });
        }
    }
    let space = SumRankSpace::uniform(tower.ground(), t, n, n)?;
    let top = tower.top();
    let basis = tower.basis();
    let mut gens = Vec::with_capacity(n * codes.iter().map(BlockCode::dimension).sum::<usize>());
    for (i, code) in codes.iter().enumerate() {
        for row in code.generator() {
            for &beta in &basis {
                let data = row.iter().flat_map(|&g| monomial_block(tower, top.mul(beta, g), i)).collect();
                gens.push(SumRankCodeword::from_flat(&space, data)?);
            }
        }
    }
    let claim = codes
        .iter()
        .enumerate()
        .map(|(i, c)| c.distance().lower_bound().map(|w| w * (n - i)))
        .collect::<Option<Vec<_>>>()
        .and_then(|v| v.into_iter().min());
    let dims: Vec<String> = codes
        .iter()
        .map(|c| format!("[{},{},{}]", c.length(), c.dimension(), c.distance().lower_bound().map_or("?".into(), |d| d.to_string())))
        .collect();
    let mut code = SumRankCode::from_generators(space, gens)?
        .with_provenance(format!("components q={} n={n} codes={}", tower.q(), dims.join(",")));
    if let Some(d) = claim {
        code = code.with_claimed_distance(d);
    }
    Ok(code)
}

/// The field `F_{q^{n(v+1)}}` used by [`from_extension_code`], built on top of
/// `F_{q^n}` so that a symbol splits into `v + 1` coefficients.
pub fn extension_alphabet(tower: &FieldTower, v: usize) -> Result<Arc<crate::gf::Field>> {
    tower.top().extend(v as u32 + 1)
}

/// A code `C` over `F_{q^{n(v+1)}}` gives the code whose codeword for
/// `(a_1, ..., a_t) ∈ C` has block `s` equal to the q-polynomial with
/// coefficients the coordinates of `a_s` over `F_{q^n}`.
///
/// `K = w n (v+1)` for `w = dim C`; the claimed distance is `d (n - v)`.
/// When `C`'s alphabet is a different presentation of a field of the right
/// size, it is first mapped into [`extension_alphabet`].
pub fn from_extension_code(tower: &FieldTower, v: usize, code: &BlockCode) -> Result<SumRankCode> {
    let n = tower.n() as usize;
    if v >= n {
        return Err(Error::InvalidParameter(format!("v = {v} must be below n = {n}")));
    }
    let big = extension_alphabet(tower, v)?;
    let code = if code.alphabet().as_ref() == big.as_ref() {
        code.clone()
    } else if code.alphabet().size() == big.size() && code.alphabet().p() == big.p() {
        let emb = Embedding::new(code.alphabet(), &big, 1 << 24)?;
        code.map_alphabet(&big, |x| emb.apply(x))?
    } else {
        return Err(Error::InvalidParameter(format!(
            "code alphabet has {} elements, expected {}",
            code.alphabet().size(),
            big.size()
        )));
    };
    let t = code.length();
    let space = SumRankSpace::uniform(tower.ground(), t, n, n)?;
    // F_q-basis of the big field: products of the bases at each level
    let step = tower.top().size();
    let mut big_basis = Vec::with_capacity(n * (v + 1));
    let mut shift = 1u64;
    for _ in 0..=v {
        big_basis.extend(tower.basis().into_iter().map(|b| b * shift));
        shift = shift.saturating_mul(step);
    }
    let mut gens = Vec::with_capacity(code.dimension() * big_basis.len());
    for row in code.generator() {
        for &b in &big_basis {
            let data = row.iter().flat_map(|&g| poly_block(tower, big.coords(big.mul(b, g)))).collect();
            gens.push(SumRankCodeword::from_flat(&space, data)?);
        }
    }
    let mut out = SumRankCode::from_generators(space, gens)?.with_provenance(format!(
        "extension q={} n={n} v={v} code=[{},{}]",
        tower.q(),
        t,
        code.dimension()
    ));
    if let Some(d) = code.distance().lower_bound() {
        out = out.with_claimed_distance(d * (n - v));
    }
    Ok(out)
}

/// Two Reed-Solomon codes over `F_{q^2}` on the points `0, 1, ..., t-1`:
/// `RS[t, (t+k+1)/2]` at coefficient index 0 and `RS[t, k]` at index 1.
///
/// Requires `1 <= t <= q^2`, `1 <= k < t` and `t - k` odd. The result has
/// `K = t + 3k + 1`, claimed distance `t - k + 1` and defect `t - k - 1`.
pub fn rs_pair(q: u64, t: usize, k: usize) -> Result<SumRankCode> {
    let tower = FieldTower::for_q(q, 2)?;
    let q2 = tower.top().size();
    if t == 0 || t as u64 > q2 {
        return Err(Error::Hypothesis(format!("need 1 <= t <= q^2 = {q2}, got t = {t}")));
    }
    if k == 0 || k >= t {
        return Err(Error::Hypothesis(format!("need 1 <= k < t, got k = {k}")));
    }
    if (t - k).is_multiple_of(2) {
        return Err(Error::Hypothesis(format!("t - k = {} must be odd", t - k)));
    }
    let points: Vec<u64> = (0..t as u64).collect();
    let c0 = reed_solomon(tower.top(), &points, (t + k).div_ceil(2))?;
    let c1 = reed_solomon(tower.top(), &points, k)?;
    Ok(from_component_codes(&tower, &[c0, c1])?
        .with_provenance(format!("rs-pair q={q} t={t} k={k}"))
        .with_claimed_distance(t - k + 1))
}
