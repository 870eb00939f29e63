use crate::error::{Error, Result};
use crate::gf::prime::prime_power;
use crate::gf::FieldTower;
use crate::sumrank::{singleton_bound, SumRankCode, SumRankCodeword, SumRankSpace};

use super::monomial_block;

/// A run of consecutive polynomial-basis elements `z^start, ..., z^{start+dim-1}`
/// of some `F_{q^{n_l}}`, spanning an `F_q`-subspace of dimension `dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub start: usize,
    pub dim: usize,
}

/// Layout of the maximum sum-rank distance code with square blocks
/// `n_1 >= ... >= n_t` and distance `d_sr = Σ_{i<j} n_i + d`, `1 <= d <= n_j`.
///
/// Blocks before `j` reserve one slot per generator group at the coefficient
/// of `x`: `n_j - d + 1` slots of size `n_j`, then for every later block `i`
/// `n_i` slots of size `n_i`. Block `j` reserves the later-block slots at the
/// coefficient of `x^{q^{n_j - d + 1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsrdPlan {
    q: u64,
    sizes: Vec<usize>,
    d_sr: usize,
    pivot: usize,
    d: usize,
    prefix_slots: Vec<Slot>,
    pivot_slots: Vec<Slot>,
}

impl MsrdPlan {
    pub fn new(q: u64, sizes: &[usize], d_sr: usize) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidParameter("block sizes must be positive".into()));
        }
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter("block sizes must be non-increasing".into()));
        }
        let total: usize = sizes.iter().sum();
        if d_sr == 0 || d_sr > total {
            return Err(Error::DistanceOutOfRange { d: d_sr, max: total });
        }
        let mut pivot = 0;
        let mut before = 0;
        while d_sr > before + sizes[pivot] {
            before += sizes[pivot];
            pivot += 1;
        }
        let d = d_sr - before;
        let nj = sizes[pivot];
        let tail: usize = sizes[pivot + 1..].iter().map(|n| n * n).sum();
        if nj < tail {
            return Err(Error::Hypothesis(format!(
                "block {} has size {nj} but the later blocks need {tail}",
                pivot + 1
            )));
        }
        if pivot > 0 {
            let need = nj * (nj - d + 1) + tail;
            if sizes[pivot - 1] < need {
                return Err(Error::Hypothesis(format!(
                    "block {} has size {} but {need} is needed",
                    pivot,
                    sizes[pivot - 1]
                )));
            }
        }
        let mut prefix_slots = Vec::new();
        let mut start = 0;
        for _ in 0..=nj - d {
            prefix_slots.push(Slot { start, dim: nj });
            start += nj;
        }
        let mut pivot_slots = Vec::new();
        let mut pstart = 0;
        for &ni in &sizes[pivot + 1..] {
            for _ in 0..ni {
                prefix_slots.push(Slot { start, dim: ni });
                pivot_slots.push(Slot { start: pstart, dim: ni });
                start += ni;
                pstart += ni;
            }
        }
        Ok(Self { q, sizes: sizes.to_vec(), d_sr, pivot, d, prefix_slots, pivot_slots })
    }

    /// Zero-based index of the block containing the distance split, and `d`.
    pub fn split(&self) -> (usize, usize) {
        (self.pivot, self.d)
    }

    /// `n_j (n_j - d + 1) + Σ_{i>j} n_i^2`.
    pub fn dimension(&self) -> usize {
        let nj = self.sizes[self.pivot];
        nj * (nj - self.d + 1) + self.sizes[self.pivot + 1..].iter().map(|n| n * n).sum::<usize>()
    }

    /// Slots used in every block before the split block, in generator order.
    pub fn prefix_slots(&self) -> &[Slot] {
        &self.prefix_slots
    }

    /// Slots used in the split block for the later-block generators.
    pub fn pivot_slots(&self) -> &[Slot] {
        &self.pivot_slots
    }
}

/// Image of `c ∈ F_{q^{n_src}}` under the `F_q`-isomorphism onto `slot` of
/// `dst` that maps basis element `z^k` to `z^{start+k}`.
fn place(src: &FieldTower, dst: &FieldTower, slot: Slot, c: u64) -> u64 {
    let coords = src.top().coords_over(c, src.q());
    let basis = dst.basis();
    let f = dst.top();
    coords
        .iter()
        .enumerate()
        .fold(0, |acc, (k, &a)| f.add(acc, f.mul(a, basis[slot.start + k])))
}

/// Linear code with square blocks `sizes` over `F_q` and minimum sum-rank
/// distance `d_sr` meeting the Singleton-like bound.
pub fn msrd(q: u64, sizes: &[usize], d_sr: usize) -> Result<SumRankCode> {
    let plan = MsrdPlan::new(q, sizes, d_sr)?;
    let (p, e) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    let towers = sizes
        .iter()
        .map(|&n| FieldTower::new(p, e, n as u32))
        .collect::<Result<Vec<_>>>()?;
    let space = SumRankSpace::new(towers[0].ground(), sizes.iter().map(|&n| (n, n)).collect())?;
    let (j, d) = plan.split();
    let nj = sizes[j];
    let zero_block = |l: usize| vec![0u64; sizes[l] * sizes[l]];
    let mut gens = Vec::with_capacity(plan.dimension());

    // first group: c x^{q^s} in block j, c spread into the prefix blocks
    for (s, &slot) in plan.prefix_slots[..=nj - d].iter().enumerate() {
        for c in towers[j].basis() {
            let mut data = Vec::with_capacity(space.ambient_dimension());
            for l in 0..sizes.len() {
                if l < j {
                    data.extend(monomial_block(&towers[l], place(&towers[j], &towers[l], slot, c), 0));
                } else if l == j {
                    data.extend(monomial_block(&towers[j], c, s));
                } else {
                    data.extend(zero_block(l));
                }
            }
            gens.push(SumRankCodeword::from_flat(&space, data)?);
        }
    }

    // one group per later block i and exponent r < n_i
    let mut slot_idx = 0;
    for i in j + 1..sizes.len() {
        for r in 0..sizes[i] {
            let prefix_slot = plan.prefix_slots[nj - d + 1 + slot_idx];
            let pivot_slot = plan.pivot_slots[slot_idx];
            slot_idx += 1;
            for c in towers[i].basis() {
                let mut data = Vec::with_capacity(space.ambient_dimension());
                for l in 0..sizes.len() {
                    if l < j {
                        data.extend(monomial_block(&towers[l], place(&towers[i], &towers[l], prefix_slot, c), 0));
                    } else if l == j {
                        if d > 1 {
                            let image = place(&towers[i], &towers[j], pivot_slot, c);
                            data.extend(monomial_block(&towers[j], image, nj - d + 1));
                        } else {
                            data.extend(zero_block(l));
                        }
                    } else if l == i {
                        data.extend(monomial_block(&towers[i], c, r));
                    } else {
                        data.extend(zero_block(l));
                    }
                }
                gens.push(SumRankCodeword::from_flat(&space, data)?);
            }
        }
    }

    let code = SumRankCode::from_generators(space, gens)?
        .with_claimed_distance(d_sr)
        .with_provenance(format!(
            "msrd q={q} sizes={} d={d_sr}",
            sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        ));
    debug_assert_eq!(Some(code.dimension()), singleton_bound(code.space(), d_sr).ok());
    Ok(code)
}
