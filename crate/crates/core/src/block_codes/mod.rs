//! Hamming-metric linear codes over `F_{q^n}`, used as component codes.

mod bch;
mod io;
mod rs;

use std::fmt;
use std::sync::Arc;

pub use bch::{bch_code, bch_dim_bound, bch_dimension, cyclotomic_cosets, BchFamily};
pub use io::{export_generator_matrix, import_generator_matrix};
pub use rs::{reed_solomon, repetition};

use crate::error::{Error, Result};
use crate::gf::{rank_of_rows, Field};
use crate::span::{self, SpanWalker};

/// Default cap on the number of words an exhaustive search may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// What is known about a code's minimum distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    /// Equal to the exhaustive minimum.
    Verified(usize),
    /// A lower bound asserted by a construction or an external source.
    Declared { bound: usize, source: String },
    Unknown,
}

impl Distance {
    pub fn declared(bound: usize, source: impl Into<String>) -> Self {
        Distance::Declared { bound, source: source.into() }
    }

    pub fn lower_bound(&self) -> Option<usize> {
        match self {
            Distance::Verified(d) | Distance::Declared { bound: d, .. } => Some(*d),
            Distance::Unknown => None,
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Distance::Verified(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Verified(d) => write!(f, "{d} (verified)"),
            Distance::Declared { bound, source } => write!(f, ">= {bound} ({source})"),
            Distance::Unknown => write!(f, "unknown"),
        }
    }
}

/// A linear `[t, k]` code over `alphabet`, given by a full-rank `k × t`
/// generator matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCode {
    alphabet: Arc<Field>,
    length: usize,
    generator: Vec<Vec<u64>>,
    distance: Distance,
}

impl BlockCode {
    pub fn new(
        alphabet: &Arc<Field>,
        length: usize,
        generator: Vec<Vec<u64>>,
        distance: Distance,
    ) -> Result<Self> {
        for row in &generator {
            if row.len() != length {
                return Err(Error::InvalidLength { expected: length, got: row.len() });
            }
            for &x in row {
                alphabet.check(x)?;
            }
        }
        let rank = rank_of_rows(alphabet, &generator);
        if rank != generator.len() {
            return Err(Error::RankDeficient { rank, expected: generator.len() });
        }
        Ok(Self { alphabet: Arc::clone(alphabet), length, generator, distance })
    }

    pub fn alphabet(&self) -> &Arc<Field> {
        &self.alphabet
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u64>] {
        &self.generator
    }

    pub fn distance(&self) -> &Distance {
        &self.distance
    }

    pub fn with_distance(mut self, distance: Distance) -> Self {
        self.distance = distance;
        self
    }

    /// `message · G`.
    pub fn encode(&self, message: &[u64]) -> Result<Vec<u64>> {
        if message.len() != self.dimension() {
            return Err(Error::InvalidLength { expected: self.dimension(), got: message.len() });
        }
        let f = &self.alphabet;
        let mut word = vec![0u64; self.length];
        for (&m, row) in message.iter().zip(&self.generator) {
            f.check(m)?;
            if m == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(m, g));
            }
        }
        Ok(word)
    }

    /// Exact minimum Hamming weight of a nonzero codeword, by enumerating all
    /// `|F|^k` messages. The zero code reports its length.
    pub fn min_hamming_distance(&self, budget: u128) -> Result<usize> {
        let f = &self.alphabet;
        let p = f.p();
        let degree = f.degree() as usize;
        span::span_size(p, degree * self.dimension(), budget)?;
        // F_p-basis of the code: p^a · g for every row g and a < [F : F_p]
        let gens: Vec<Vec<u64>> = self
            .generator
            .iter()
            .flat_map(|row| {
                (0..degree).map(move |a| {
                    let s = p.pow(a as u32);
                    row.iter().map(|&x| f.mul(s, x)).collect()
                })
            })
            .collect();
        let walker = HammingWalker { field: f, gens: &gens, length: self.length };
        Ok(span::min_nonzero_weight(&walker, gens.len(), p).unwrap_or(self.length))
    }

    /// Runs [`BlockCode::min_hamming_distance`] and records the result.
    pub fn verify_distance(&mut self, budget: u128) -> Result<usize> {
        let d = self.min_hamming_distance(budget)?;
        self.distance = Distance::Verified(d);
        Ok(d)
    }

    /// The same code with every symbol pushed through `map` into `alphabet`.
    pub fn map_alphabet(&self, alphabet: &Arc<Field>, map: impl Fn(u64) -> u64) -> Result<Self> {
        let generator = self
            .generator
            .iter()
            .map(|row| row.iter().map(|&x| map(x)).collect())
            .collect();
        BlockCode::new(alphabet, self.length, generator, self.distance.clone())
    }
}

pub fn hamming_weight(word: &[u64]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

struct HammingWalker<'a> {
    field: &'a Field,
    gens: &'a [Vec<u64>],
    length: usize,
}

impl SpanWalker for HammingWalker<'_> {
    type State = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.length]
    }

    fn add_generator(&self, state: &mut Vec<u64>, g: usize) {
        for (s, &x) in state.iter_mut().zip(&self.gens[g]) {
            *s = self.field.add(*s, x);
        }
    }

    fn weight(&self, state: &Vec<u64>) -> usize {
        hamming_weight(state)
    }
}
