use std::collections::HashSet;
use std::sync::Arc;

use super::{BlockCode, Distance};
use crate::error::{Error, Result};
use crate::gf::Field;

/// Reed-Solomon code: evaluations of all polynomials of degree `< k` at
/// `points`. Row `i` of the generator holds the evaluations of `x^i`.
pub fn reed_solomon(alphabet: &Arc<Field>, points: &[u64], k: usize) -> Result<BlockCode> {
    let t = points.len();
    if k == 0 || k > t {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= t, got k = {k}, t = {t}")));
    }
    for &x in points {
        alphabet.check(x)?;
    }
    if points.iter().collect::<HashSet<_>>().len() != t {
        return Err(Error::DuplicatePoints);
    }
    let generator = (0..k)
        .map(|i| points.iter().map(|&x| alphabet.pow(x, i as u128)).collect())
        .collect();
    BlockCode::new(alphabet, t, generator, Distance::declared(t - k + 1, "Reed-Solomon, MDS"))
}

/// `[t, 1, t]` repetition code.
pub fn repetition(alphabet: &Arc<Field>, t: usize) -> Result<BlockCode> {
    if t == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    BlockCode::new(alphabet, t, vec![vec![1; t]], Distance::declared(t, "repetition"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_codes::{hamming_weight, DEFAULT_BUDGET};
    use crate::gf::FieldTower;

    fn f4() -> Arc<Field> {
        FieldTower::new(2, 1, 2).unwrap().top().clone()
    }

    #[test]
    fn rs_over_f4() {
        let f = f4();
        let c1 = reed_solomon(&f, &[0, 1, 2, 3], 1).unwrap();
        assert_eq!(c1.generator(), &[vec![1, 1, 1, 1]]);
        assert_eq!(c1.min_hamming_distance(DEFAULT_BUDGET).unwrap(), 4);

        let c2 = reed_solomon(&f, &[0, 1, 2, 3], 2).unwrap();
        assert_eq!(c2.distance().lower_bound(), Some(3));
        // 15 nonzero codewords, scanned directly
        let mut min = usize::MAX;
        for a in 0..4 {
            for b in 0..4 {
                if (a, b) != (0, 0) {
                    min = min.min(hamming_weight(&c2.encode(&[a, b]).unwrap()));
                }
            }
        }
        assert_eq!(min, 3);
        assert_eq!(c2.min_hamming_distance(DEFAULT_BUDGET).unwrap(), 3);
    }

    #[test]
    fn rs_over_f9_declares_singleton_distance() {
        let f = FieldTower::new(3, 1, 2).unwrap().top().clone();
        let c = reed_solomon(&f, &(0..9).collect::<Vec<_>>(), 5).unwrap();
        assert_eq!(c.distance().lower_bound(), Some(5));
    }

    #[test]
    fn rs_is_mds_exhaustively() {
        for (p, e, n) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 1), (7, 1, 1)] {
            let tower = FieldTower::new(p, e, n).unwrap();
            let f = tower.top();
            for t in 1..=f.size() as usize {
                for k in 1..=t {
                    if (f.size() as u128).pow(k as u32) > 1 << 16 {
                        continue;
                    }
                    let pts: Vec<u64> = (0..t as u64).collect();
                    let c = reed_solomon(f, &pts, k).unwrap();
                    assert_eq!(c.min_hamming_distance(1 << 16).unwrap(), t - k + 1);
                }
            }
        }
    }

    #[test]
    fn rs_errors() {
        let f = f4();
        assert_eq!(reed_solomon(&f, &[0, 1, 1], 2), Err(Error::DuplicatePoints));
        assert!(reed_solomon(&f, &[0, 1], 3).is_err());
        assert!(reed_solomon(&f, &[0, 4], 1).is_err());
    }

    #[test]
    fn repetition_codes() {
        let f = f4();
        let c = repetition(&f, 7).unwrap();
        for a in 1..4 {
            assert_eq!(hamming_weight(&c.encode(&[a]).unwrap()), 7);
        }
        let f2 = FieldTower::new(2, 1, 1).unwrap().top().clone();
        let c = repetition(&f2, 2).unwrap();
        assert_eq!(c.encode(&[1]).unwrap(), vec![1, 1]);
        assert_eq!(repetition(&f2, 5).unwrap().min_hamming_distance(DEFAULT_BUDGET).unwrap(), 5);
        assert_eq!(repetition(&f, 1).unwrap().dimension(), 1);
    }
}
