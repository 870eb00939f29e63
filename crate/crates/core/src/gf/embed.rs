use std::sync::Arc;

use super::field::Field;
use super::poly;
use crate::error::{Error, Result};

/// Field embedding `K[z]/(h) → T` fixing `K`, where `K` is a subfield in the
/// chain of `T`. Determined by a root of `h` in `T`.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Arc<Field>,
    target: Arc<Field>,
    powers: Vec<u64>,
}

impl Embedding {
    /// Searches `T` for the smallest root of the defining polynomial of
    /// `source`; fails when `T` has no such root or is larger than `search_limit`.
    pub fn new(source: &Arc<Field>, target: &Arc<Field>, search_limit: u64) -> Result<Self> {
        let base = match source.base() {
            None => {
                if target.p() != source.p() {
                    return Err(Error::InvalidParameter("characteristics differ".into()));
                }
                return Ok(Self {
                    source: Arc::clone(source),
                    target: Arc::clone(target),
                    powers: vec![1],
                });
            }
            Some(b) => b,
        };
        if !target.has_subfield(base) {
            return Err(Error::InvalidParameter(
                "target does not contain the base field of the source".into(),
            ));
        }
        if target.size() > search_limit {
            return Err(Error::BudgetExceeded {
                needed: target.size() as u128,
                budget: search_limit as u128,
            });
        }
        let h = source.modulus();
        let root = target
            .elements()
            .find(|&x| poly::eval(target, h, x) == 0)
            .ok_or_else(|| Error::InvalidParameter("no root of the modulus in the target".into()))?;
        let r = source.rel_degree();
        let mut powers = Vec::with_capacity(r);
        let mut x = 1;
        for _ in 0..r {
            powers.push(x);
            x = target.mul(x, root);
        }
        Ok(Self { source: Arc::clone(source), target: Arc::clone(target), powers })
    }

    pub fn apply(&self, a: u64) -> u64 {
        if self.source.is_prime_field() {
            return a;
        }
        self.source
            .coords(a)
            .iter()
            .zip(&self.powers)
            .fold(0, |acc, (&c, &pw)| self.target.add(acc, self.target.mul(c, pw)))
    }

    pub fn target(&self) -> &Arc<Field> {
        &self.target
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldTower;

    #[test]
    fn isomorphism_between_presentations_of_f16() {
        // F_16 as F_2[z]/(deg 4) versus F_4[w]/(deg 2)
        let flat = FieldTower::new(2, 1, 4).unwrap();
        let nested = FieldTower::new(2, 1, 2).unwrap().top().extend(2).unwrap();
        let emb = Embedding::new(flat.top(), &nested, 1 << 20).unwrap();
        let f = flat.top();
        let mut images: Vec<u64> = f.elements().map(|a| emb.apply(a)).collect();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(emb.apply(f.mul(a, b)), nested.mul(emb.apply(a), emb.apply(b)));
                assert_eq!(emb.apply(f.add(a, b)), nested.add(emb.apply(a), emb.apply(b)));
            }
        }
        images.sort_unstable();
        assert_eq!(images, (0..16).collect::<Vec<_>>());
    }
}
