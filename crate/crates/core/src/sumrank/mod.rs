//! The sum-rank metric on `F_q^{n_1×m_1} × ... × F_q^{n_t×m_t}` and linear
//! codes in it.

mod io;

use std::fmt;
use std::sync::Arc;

pub use io::{export_sumrank_code, import_sumrank_code};

use crate::error::{Error, Result};
use crate::gf::{echelon_rank, rank_of_rows, Field, Matrix};
use crate::span::{self, SpanWalker};

/// Block sizes `(n_i, m_i)` over a ground field `F_q`, with `n_i <= m_i` and
/// `m_1 >= m_2 >= ... >= m_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct SumRankSpace {
    field: Arc<Field>,
    sizes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
}

impl SumRankSpace {
    pub fn new(field: &Arc<Field>, sizes: Vec<(usize, usize)>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::ShapeMismatch("at least one block is required".into()));
        }
        for (i, &(n, m)) in sizes.iter().enumerate() {
            if n == 0 || n > m {
                return Err(Error::ShapeMismatch(format!("block {i}: need 1 <= n <= m, got {n}x{m}")));
            }
        }
        if sizes.windows(2).any(|w| w[0].1 < w[1].1) {
            return Err(Error::ShapeMismatch("column counts m_i must be non-increasing".into()));
        }
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &(n, m) in &sizes {
            acc += n * m;
            offsets.push(acc);
        }
        Ok(Self { field: Arc::clone(field), sizes, offsets })
    }

    /// `t` blocks of `n × m`.
    pub fn uniform(field: &Arc<Field>, t: usize, n: usize, m: usize) -> Result<Self> {
        Self::new(field, vec![(n, m); t])
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    pub fn sizes(&self) -> &[(usize, usize)] {
        &self.sizes
    }

    pub fn blocks(&self) -> usize {
        self.sizes.len()
    }

    /// `N = Σ n_i`.
    pub fn total_rows(&self) -> usize {
        self.sizes.iter().map(|s| s.0).sum()
    }

    /// `Σ n_i m_i`, the `F_q`-dimension of the ambient space.
    pub fn ambient_dimension(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// The common `m` when all blocks have the same column count.
    pub fn common_columns(&self) -> Option<usize> {
        let m = self.sizes[0].1;
        self.sizes.iter().all(|s| s.1 == m).then_some(m)
    }

    /// Writes `d = Σ_{i<j} n_i + δ + 1` with `0 <= δ < n_j`; returns the
    /// zero-based block index `j` and `δ`.
    pub fn decompose(&self, d: usize) -> Result<(usize, usize)> {
        let big_n = self.total_rows();
        if d == 0 || d > big_n {
            return Err(Error::DistanceOutOfRange { d, max: big_n });
        }
        let mut before = 0;
        for (j, &(n, _)) in self.sizes.iter().enumerate() {
            if d <= before + n {
                return Ok((j, d - before - 1));
            }
            before += n;
        }
        unreachable!("d <= N")
    }

    fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }
}

/// Largest `log_q |C|` allowed by the Singleton-like bound for minimum
/// sum-rank distance `d`: `Σ_{i>=j} n_i m_i - m_j δ`.
pub fn singleton_bound(space: &SumRankSpace, d: usize) -> Result<usize> {
    let (j, delta) = space.decompose(d)?;
    let tail: usize = space.sizes[j..].iter().map(|&(n, m)| n * m).sum();
    Ok(tail - space.sizes[j].1 * delta)
}

/// A tuple of matrices, stored flat in block order, each block row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumRankCodeword {
    data: Vec<u64>,
}

impl SumRankCodeword {
    pub fn zero(space: &SumRankSpace) -> Self {
        Self { data: vec![0; space.ambient_dimension()] }
    }

    pub fn from_flat(space: &SumRankSpace, data: Vec<u64>) -> Result<Self> {
        if data.len() != space.ambient_dimension() {
            return Err(Error::InvalidLength { expected: space.ambient_dimension(), got: data.len() });
        }
        for &x in &data {
            space.field.check(x)?;
        }
        Ok(Self { data })
    }

    pub fn from_blocks(space: &SumRankSpace, blocks: &[Matrix]) -> Result<Self> {
        if blocks.len() != space.blocks() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} blocks, got {}",
                space.blocks(),
                blocks.len()
            )));
        }
        let mut data = Vec::with_capacity(space.ambient_dimension());
        for (i, (b, &size)) in blocks.iter().zip(&space.sizes).enumerate() {
            if b.shape() != size {
                return Err(Error::ShapeMismatch(format!(
                    "block {i}: expected {}x{}, got {}x{}",
                    size.0,
                    size.1,
                    b.rows(),
                    b.cols()
                )));
            }
            data.extend_from_slice(b.data());
        }
        Self::from_flat(space, data)
    }

    pub fn as_flat(&self) -> &[u64] {
        &self.data
    }

    pub fn block(&self, space: &SumRankSpace, i: usize) -> Matrix {
        let (n, m) = space.sizes[i];
        Matrix::new(&space.field, n, m, self.data[space.block_range(i)].to_vec()).expect("shape checked")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, space: &SumRankSpace, other: &Self) -> Self {
        let f = &space.field;
        Self { data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, space: &SumRankSpace, other: &Self) -> Self {
        let f = &space.field;
        Self { data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    pub fn scale(&self, space: &SumRankSpace, c: u64) -> Self {
        let f = &space.field;
        Self { data: self.data.iter().map(|&a| f.mul(c, a)).collect() }
    }
}

/// `Σ rank(x_i)`.
pub fn sr_weight(space: &SumRankSpace, x: &SumRankCodeword) -> usize {
    let mut buf = Vec::new();
    flat_weight(space, &x.data, &mut buf)
}

/// `wt(x - y)`.
pub fn sr_distance(space: &SumRankSpace, x: &SumRankCodeword, y: &SumRankCodeword) -> Result<usize> {
    if x.data.len() != space.ambient_dimension() || y.data.len() != space.ambient_dimension() {
        return Err(Error::ShapeMismatch("codeword does not belong to the space".into()));
    }
    Ok(sr_weight(space, &x.sub(space, y)))
}

fn flat_weight(space: &SumRankSpace, data: &[u64], buf: &mut Vec<u64>) -> usize {
    let mut total = 0;
    for (i, &(n, m)) in space.sizes.iter().enumerate() {
        let block = &data[space.block_range(i)];
        if block.iter().all(|&x| x == 0) {
            continue;
        }
        buf.clear();
        buf.extend_from_slice(block);
        total += echelon_rank(&space.field, buf, n, m);
    }
    total
}

/// An `F_q`-linear sum-rank code given by an independent generator list.
#[derive(Debug, Clone, PartialEq)]
pub struct SumRankCode {
    space: SumRankSpace,
    generators: Vec<SumRankCodeword>,
    provenance: String,
    claimed: Option<usize>,
    verified: Option<usize>,
}

impl SumRankCode {
    /// Checks `F_q`-independence of `generators`.
    pub fn from_generators(space: SumRankSpace, generators: Vec<SumRankCodeword>) -> Result<Self> {
        for g in &generators {
            if g.data.len() != space.ambient_dimension() {
                return Err(Error::InvalidLength { expected: space.ambient_dimension(), got: g.data.len() });
            }
        }
        let rows: Vec<Vec<u64>> = generators.iter().map(|g| g.data.clone()).collect();
        if rank_of_rows(&space.field, &rows) != rows.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(Self { space, generators, provenance: String::new(), claimed: None, verified: None })
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn with_claimed_distance(mut self, d: usize) -> Self {
        self.claimed = Some(d);
        self
    }

    pub fn space(&self) -> &SumRankSpace {
        &self.space
    }

    pub fn generators(&self) -> &[SumRankCodeword] {
        &self.generators
    }

    /// `K = log_q |C|`.
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn claimed_distance(&self) -> Option<usize> {
        self.claimed
    }

    pub fn verified_distance(&self) -> Option<usize> {
        self.verified
    }

    /// Verified distance if known, else the claimed lower bound.
    pub fn distance(&self) -> Option<usize> {
        self.verified.or(self.claimed)
    }

    /// `Σ c_i g_i` for coefficients in `F_q`.
    pub fn encode(&self, message: &[u64]) -> Result<SumRankCodeword> {
        if message.len() != self.dimension() {
            return Err(Error::InvalidLength { expected: self.dimension(), got: message.len() });
        }
        let f = &self.space.field;
        let mut data = vec![0; self.space.ambient_dimension()];
        for (&c, g) in message.iter().zip(&self.generators) {
            f.check(c)?;
            if c == 0 {
                continue;
            }
            for (x, &y) in data.iter_mut().zip(&g.data) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        Ok(SumRankCodeword { data })
    }

    /// Exact minimum sum-rank weight over the `q^K - 1` nonzero codewords.
    /// The zero code reports `N`.
    pub fn min_srd_exhaustive(&self, budget: u128) -> Result<usize> {
        let f = &self.space.field;
        let p = f.p();
        let e = f.degree() as usize;
        span::span_size(p, e * self.dimension(), budget)?;
        if self.dimension() == 0 {
            return Ok(self.space.total_rows());
        }
        // F_p-basis of the code: p^a · g for a < [F_q : F_p]
        let gens: Vec<Vec<u64>> = self
            .generators
            .iter()
            .flat_map(|g| {
                (0..e).map(move |a| {
                    let s = p.pow(a as u32);
                    g.data.iter().map(|&x| f.mul(s, x)).collect()
                })
            })
            .collect();
        let best = if f.size() == 2 && self.space.sizes[0].1 <= 64 {
            let walker = BinaryWalker::new(&self.space, &gens);
            span::min_nonzero_weight(&walker, gens.len(), 2)
        } else {
            let walker = GeneralWalker { space: &self.space, gens: &gens };
            span::min_nonzero_weight(&walker, gens.len(), p)
        };
        Ok(best.expect("at least one generator"))
    }

    /// Runs [`SumRankCode::min_srd_exhaustive`] and records the result.
    pub fn verify(&mut self, budget: u128) -> Result<usize> {
        let d = self.min_srd_exhaustive(budget)?;
        self.verified = Some(d);
        Ok(d)
    }

    /// Singleton-like exponent at the code's distance minus `K`. Equals the
    /// defect when all `m_i` agree; zero exactly for MSRD codes.
    pub fn singleton_gap(&self) -> Result<i64> {
        let d = self.distance().ok_or(Error::InvalidParameter("no distance known".into()))?;
        Ok(singleton_bound(&self.space, d)? as i64 - self.dimension() as i64)
    }

    /// `m(N - d + 1) - K`; defined only for a common column count `m`.
    pub fn defect(&self) -> Result<i64> {
        let m = self.space.common_columns().ok_or(Error::UnequalColumnSizes)?;
        let d = self.distance().ok_or(Error::InvalidParameter("no distance known".into()))?;
        if d == 0 || d > self.space.total_rows() {
            return Err(Error::DistanceOutOfRange { d, max: self.space.total_rows() });
        }
        Ok((m * (self.space.total_rows() - d + 1)) as i64 - self.dimension() as i64)
    }

    /// `(K / Σ n_i m_i, d / N)`.
    pub fn rate_and_relative_distance(&self) -> Result<(f64, f64)> {
        let d = self.distance().ok_or(Error::InvalidParameter("no distance known".into()))?;
        Ok((
            self.dimension() as f64 / self.space.ambient_dimension() as f64,
            d as f64 / self.space.total_rows() as f64,
        ))
    }
}

impl fmt::Display for SumRankCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.space.sizes.iter().map(|(n, m)| format!("{n}x{m}")).collect();
        write!(f, "K = {} over F_{}, blocks [{}]", self.dimension(), self.space.q(), sizes.join(", "))?;
        match (self.verified, self.claimed) {
            (Some(v), _) => write!(f, ", d = {v} (verified)")?,
            (None, Some(c)) => write!(f, ", d >= {c} (claimed)")?,
            (None, None) => {}
        }
        if !self.provenance.is_empty() {
            write!(f, ", {}", self.provenance)?;
        }
        Ok(())
    }
}

struct GeneralWalker<'a> {
    space: &'a SumRankSpace,
    gens: &'a [Vec<u64>],
}

impl SpanWalker for GeneralWalker<'_> {
    type State = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.space.ambient_dimension()]
    }

    fn add_generator(&self, state: &mut Vec<u64>, g: usize) {
        let f = &self.space.field;
        for (s, &x) in state.iter_mut().zip(&self.gens[g]) {
            *s = f.add(*s, x);
        }
    }

    fn weight(&self, state: &Vec<u64>) -> usize {
        flat_weight(self.space, state, &mut Vec::new())
    }
}

/// Binary codes with rows of at most 64 bits: each block row is a `u64`
/// mask, addition is XOR and the rank is computed on masks.
struct BinaryWalker {
    rows: Vec<usize>,
    gens: Vec<Vec<u64>>,
}

impl BinaryWalker {
    fn new(space: &SumRankSpace, gens: &[Vec<u64>]) -> Self {
        let rows = space.sizes.iter().map(|s| s.0).collect();
        let gens = gens
            .iter()
            .map(|g| {
                let mut masks = Vec::with_capacity(space.total_rows());
                for (i, &(n, m)) in space.sizes.iter().enumerate() {
                    let block = &g[space.block_range(i)];
                    for r in 0..n {
                        let mask = block[r * m..(r + 1) * m]
                            .iter()
                            .enumerate()
                            .fold(0u64, |acc, (c, &b)| acc | (b << c));
                        masks.push(mask);
                    }
                }
                masks
            })
            .collect();
        Self { rows, gens }
    }
}

impl SpanWalker for BinaryWalker {
    type State = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.rows.iter().sum()]
    }

    fn add_generator(&self, state: &mut Vec<u64>, g: usize) {
        for (s, &x) in state.iter_mut().zip(&self.gens[g]) {
            *s ^= x;
        }
    }

    fn weight(&self, state: &Vec<u64>) -> usize {
        let mut total = 0;
        let mut start = 0;
        let mut buf = [0u64; 64];
        for &n in &self.rows {
            let block = &mut buf[..n];
            block.copy_from_slice(&state[start..start + n]);
            start += n;
            total += binary_rank(block);
        }
        total
    }
}

fn binary_rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}
