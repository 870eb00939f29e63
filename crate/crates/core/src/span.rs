//! Exhaustive walk over the `F_p`-span of a generator list.
//!
//! Messages are visited in modular Gray-code order: consecutive messages differ
//! in one digit, which goes up by one, so each step adds a single generator to
//! the running word. The message space is split on its top digits into
//! independent chunks; the result is a plain minimum and does not depend on
//! how chunks are scheduled.

use rayon::prelude::*;

use crate::error::{Error, Result};

pub(crate) trait SpanWalker: Sync {
    type State: Clone + Send;

    fn zero(&self) -> Self::State;

    fn add_generator(&self, state: &mut Self::State, g: usize);

    fn weight(&self, state: &Self::State) -> usize;
}

/// `p^gens`, checked against `budget`.
pub(crate) fn span_size(p: u64, gens: usize, budget: u128) -> Result<u128> {
    let size = (0..gens).try_fold(1u128, |acc, _| acc.checked_mul(p as u128));
    match size {
        Some(s) if s <= budget => Ok(s),
        other => Err(Error::BudgetExceeded { needed: other.unwrap_or(u128::MAX), budget }),
    }
}

/// Least weight over the nonzero `F_p`-combinations of `gens` generators, or
/// `None` when there are no generators.
pub(crate) fn min_nonzero_weight<W: SpanWalker>(walker: &W, gens: usize, p: u64) -> Option<usize> {
    if gens == 0 {
        return None;
    }
    let mut prefix_digits = 0;
    let mut chunks = 1u64;
    while prefix_digits < gens && chunks < 256 {
        prefix_digits += 1;
        chunks *= p;
    }
    let low = gens - prefix_digits;
    let low_count = p.pow(low as u32);

    (0..chunks)
        .into_par_iter()
        .filter_map(|prefix| {
            let mut state = walker.zero();
            let mut x = prefix;
            for i in 0..prefix_digits {
                for _ in 0..x % p {
                    walker.add_generator(&mut state, low + i);
                }
                x /= p;
            }
            let mut best = if prefix == 0 { usize::MAX } else { walker.weight(&state) };
            for k in 1..low_count {
                walker.add_generator(&mut state, lowest_nonzero_digit(k, p));
                best = best.min(walker.weight(&state));
            }
            (best != usize::MAX).then_some(best)
        })
        .min()
}

fn lowest_nonzero_digit(mut k: u64, p: u64) -> usize {
    if p == 2 {
        return k.trailing_zeros() as usize;
    }
    let mut i = 0;
    while k.is_multiple_of(p) {
        k /= p;
        i += 1;
    }
    i
}
