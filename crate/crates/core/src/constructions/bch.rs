use crate::block_codes::{bch_code, bch_dim_bound, BchFamily, BlockCode};
use crate::error::{Error, Result};
use crate::gf::FieldTower;
use crate::sumrank::SumRankCode;

use super::from_component_codes;

/// Parameters of the sum-rank code obtained from BCH component codes, and
/// the code itself when it was small enough to build.
#[derive(Debug, Clone)]
pub struct BchSumRank {
    /// Block count `t` (the BCH length).
    pub length: u64,
    /// `n Σ dim C_i` from the closed-form dimensions.
    pub dimension: u64,
    /// `min_i u_i (n - i)`.
    pub claimed_distance: u64,
    pub code: Option<SumRankCode>,
}

/// BCH codes of designed distances `u_0, ..., u_v` from `family` as the
/// component codes of [`from_component_codes`](super::from_component_codes).
///
/// The code is materialized when `K · t · n^2 <= budget`; its dimension is
/// then the exact coset count, which may exceed the closed form for the
/// divided family.
pub fn bch_sumrank(
    family: BchFamily,
    q: u64,
    n: u32,
    u: u32,
    designed: &[u64],
    budget: u128,
) -> Result<BchSumRank> {
    if designed.is_empty() {
        return Err(Error::InvalidParameter("at least one designed distance is required".into()));
    }
    if designed.len() > n as usize {
        return Err(Error::Hypothesis(format!("{} codes need n > {}", designed.len(), designed.len() - 1)));
    }
    let length = family.length(q, n, u)?;
    let dims = designed
        .iter()
        .map(|&ui| bch_dim_bound(family, q, n, u, ui))
        .collect::<Result<Vec<_>>>()?;
    let dimension = n as u64 * dims.iter().sum::<u64>();
    let claimed_distance = designed
        .iter()
        .enumerate()
        .map(|(i, &ui)| ui * (n as u64 - i as u64))
        .min()
        .expect("nonempty");

    let symbols = dimension as u128 * length as u128 * (n as u128).pow(2);
    let code = if symbols <= budget {
        let tower = FieldTower::for_q(q, n)?;
        let alphabet = match family {
            BchFamily::Ground => tower.ground(),
            _ => tower.top(),
        };
        let codes = designed
            .iter()
            .map(|&ui| {
                let c = bch_code(alphabet, length, ui as usize, 1)?;
                // subfield symbols are unchanged in the extension
                c.map_alphabet(tower.top(), |x| x)
            })
            .collect::<Result<Vec<BlockCode>>>()?;
        let list: Vec<String> = designed.iter().map(u64::to_string).collect();
        Some(from_component_codes(&tower, &codes)?.with_provenance(format!(
            "bch {family:?} q={q} n={n} u={u} designed={}",
            list.join(",")
        )))
    } else {
        None
    };
    Ok(BchSumRank { length, dimension, claimed_distance, code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_codes::DEFAULT_BUDGET;

    #[test]
    fn ground_family_even_u() {
        let r = bch_sumrank(BchFamily::Ground, 2, 2, 6, &[2, 4], DEFAULT_BUDGET).unwrap();
        assert_eq!((r.length, r.dimension, r.claimed_distance), (63, 216, 4));
        let code = r.code.unwrap();
        assert_eq!(code.dimension(), 216);
        assert_eq!(code.claimed_distance(), Some(4));
    }

    #[test]
    fn ground_family_odd_u() {
        let r = bch_sumrank(BchFamily::Ground, 2, 2, 5, &[3, 6], 0).unwrap();
        assert_eq!((r.length, r.dimension, r.claimed_distance), (31, 84, 6));
        assert!(r.code.is_none());
    }

    #[test]
    fn divided_family() {
        let r = bch_sumrank(BchFamily::Divided { lambda: 3 }, 2, 2, 5, &[7, 14], 0).unwrap();
        assert_eq!((r.length, r.dimension, r.claimed_distance), (341, 2 * 607, 14));
    }

    #[test]
    fn extension_family_materialized_small() {
        // length 15 over F_4 is u = 2, outside the closed-form range
        assert!(bch_sumrank(BchFamily::Extension, 2, 2, 2, &[2], DEFAULT_BUDGET).is_err());
        let r = bch_sumrank(BchFamily::Extension, 2, 2, 4, &[2, 3], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.length, 255);
        assert_eq!(r.dimension, 2 * (251 + 247));
    }

    #[test]
    fn hypothesis_errors() {
        assert!(bch_sumrank(BchFamily::Ground, 2, 2, 6, &[2, 4, 6], 0).is_err());
        assert!(bch_sumrank(BchFamily::Ground, 2, 2, 6, &[], 0).is_err());
        assert!(bch_sumrank(BchFamily::Ground, 2, 2, 6, &[1], 0).is_err());
    }
}
