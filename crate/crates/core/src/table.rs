//! Code tables: one row per minimum sum-rank distance with the
//! Singleton-like exponent and, when known, the dimension of a code.

use std::fmt::Write as _;

use crate::block_codes::{bch_dim_bound, BchFamily};
use crate::error::Result;
use crate::sumrank::{singleton_bound, SumRankCode, SumRankSpace};

pub const UNFILLED: &str = "needs external component codes";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub distance: usize,
    pub singleton: usize,
    pub dimension: Option<usize>,
    pub provenance: Option<String>,
}

impl TableRow {
    /// `singleton - K`; the defect when all blocks share `m`.
    pub fn gap(&self) -> Option<i64> {
        self.dimension.map(|k| self.singleton as i64 - k as i64)
    }

    /// Keeps the larger of the current and the offered dimension.
    pub fn offer(&mut self, dimension: usize, provenance: impl Into<String>) {
        if self.dimension.is_none_or(|k| dimension > k) {
            self.dimension = Some(dimension);
            self.provenance = Some(provenance.into());
        }
    }
}

/// Rows for every distance in `distances` with the Singleton column filled.
pub fn singleton_table(space: &SumRankSpace, distances: impl IntoIterator<Item = usize>) -> Result<Vec<TableRow>> {
    distances
        .into_iter()
        .map(|d| {
            Ok(TableRow { distance: d, singleton: singleton_bound(space, d)?, dimension: None, provenance: None })
        })
        .collect()
}

/// Places `code` on the row of its distance (verified if known, else
/// claimed). Returns whether a row was updated.
pub fn offer_code(rows: &mut [TableRow], code: &SumRankCode) -> bool {
    let Some(d) = code.distance() else { return false };
    match rows.iter_mut().find(|r| r.distance == d) {
        Some(row) => {
            let before = row.dimension;
            row.offer(code.dimension(), code.provenance().to_string());
            row.dimension != before
        }
        None => false,
    }
}

/// Dimension of the Reed-Solomon pair code over `F_{q^2}` with `t` blocks of
/// `2 × 2` and distance `d`: `4t - 3d + 4`, for even `d` with `2 <= d <= t <= q^2`.
pub fn rs_pair_dimension(q: u64, t: usize, d: usize) -> Option<usize> {
    if d < 2 || d > t || d % 2 == 1 || (t as u64) > q.saturating_mul(q) {
        return None;
    }
    Some(4 * t + 4 - 3 * d)
}

/// Best closed-form dimension of a BCH-based code with `n × n` blocks and
/// distance at least `d`, using designed distances `u_i = max(2, ⌈d/(n-i)⌉)`
/// for `i = 0..v` and the best `v < n`. Returns `(K, designed distances)`.
pub fn bch_row_dimension(family: BchFamily, q: u64, n: u32, u: u32, d: usize) -> Option<(u64, Vec<u64>)> {
    (0..n)
        .filter_map(|v| {
            let designed: Vec<u64> =
                (0..=v).map(|i| (d as u64).div_ceil((n - i) as u64).max(2)).collect();
            let dims: Option<Vec<u64>> =
                designed.iter().map(|&ui| bch_dim_bound(family, q, n, u, ui).ok()).collect();
            dims.map(|dims| (n as u64 * dims.iter().sum::<u64>(), designed))
        })
        .max_by_key(|(k, _)| *k)
}

/// `m·(x/m)` when `m` divides `x`, else `x`.
pub fn format_multiple(x: usize, m: usize) -> String {
    if m > 1 && x.is_multiple_of(m) {
        format!("{m}·{}", x / m)
    } else {
        x.to_string()
    }
}

/// Plain-text table with columns `d_sr`, dimension, Singleton, gap, source.
pub fn render(rows: &[TableRow], m: usize) -> String {
    let mut out = String::new();
    writeln!(out, "{:>6}  {:>10}  {:>10}  {:>5}  source", "d_sr", "dimension", "Singleton", "gap").unwrap();
    for r in rows {
        let dim = r.dimension.map_or("-".to_string(), |k| format_multiple(k, m));
        let gap = r.gap().map_or("-".to_string(), |g| g.to_string());
        let src = r.provenance.as_deref().unwrap_or(UNFILLED);
        writeln!(out, "{:>6}  {:>10}  {:>10}  {:>5}  {}", r.distance, dim, format_multiple(r.singleton, m), gap, src)
            .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::rs_pair;
    use crate::gf::Field;

    #[test]
    fn singleton_column_small_table() {
        let s = SumRankSpace::uniform(&Field::prime(2).unwrap(), 7, 2, 2).unwrap();
        let rows = singleton_table(&s, 2..=7).unwrap();
        let col: Vec<String> = rows.iter().map(|r| format_multiple(r.singleton, 2)).collect();
        assert_eq!(col, ["2·13", "2·12", "2·11", "2·10", "2·9", "2·8"]);
        assert!(render(&rows, 2).contains(UNFILLED));
    }

    #[test]
    fn rs_pair_formula_matches_construction() {
        for (q, t, d) in [(2u64, 4usize, 4usize), (2, 4, 2), (3, 9, 6), (3, 7, 4)] {
            let code = rs_pair(q, t, t - d + 1).unwrap();
            assert_eq!(rs_pair_dimension(q, t, d), Some(code.dimension()));
        }
        assert_eq!(rs_pair_dimension(2, 4, 3), None);
        assert_eq!(rs_pair_dimension(2, 5, 2), None);
    }

    #[test]
    fn bch_rows() {
        let (k, u) = bch_row_dimension(BchFamily::Ground, 2, 2, 6, 4).unwrap();
        assert_eq!((k, u), (216, vec![2, 4]));
        let (k, u) = bch_row_dimension(BchFamily::Ground, 2, 2, 5, 6).unwrap();
        assert_eq!((k, u), (84, vec![3, 6]));
    }

    #[test]
    fn offering_codes() {
        let s = SumRankSpace::uniform(&Field::prime(2).unwrap(), 4, 2, 2).unwrap();
        let mut rows = singleton_table(&s, 2..=4).unwrap();
        let code = rs_pair(2, 4, 1).unwrap();
        assert!(offer_code(&mut rows, &code));
        assert_eq!(rows[2].dimension, Some(8));
        assert_eq!(rows[2].gap(), Some(2));
        assert!(!offer_code(&mut rows, &code));
    }
}
