//! BCH codes through cyclotomic cosets, and closed-form dimension values for
//! the primitive and `(q^{nu}-1)/λ` families.

use std::sync::Arc;

use super::{BlockCode, Distance};
use crate::error::{Error, Result};
use crate::gf::prime::{checked_pow, gcd, multiplicative_order};
use crate::gf::{poly, Field};

/// All cyclotomic cosets of `Z/N` under multiplication by `multiplier`,
/// each sorted, ordered by smallest element.
pub fn cyclotomic_cosets(modulus: u64, multiplier: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; modulus as usize];
    let mut out = Vec::new();
    for s in 0..modulus {
        if seen[s as usize] {
            continue;
        }
        let coset = coset_of(s, modulus, multiplier);
        for &x in &coset {
            seen[x as usize] = true;
        }
        out.push(coset);
    }
    out
}

fn coset_of(s: u64, modulus: u64, multiplier: u64) -> Vec<u64> {
    let mut coset = vec![s];
    let mut x = (s as u128 * multiplier as u128 % modulus as u128) as u64;
    while x != s {
        coset.push(x);
        x = (x as u128 * multiplier as u128 % modulus as u128) as u64;
    }
    coset.sort_unstable();
    coset
}

/// Union of the cosets of `offset, ..., offset + designed - 2`.
fn defining_set(alphabet_size: u64, len: u64, designed: usize, offset: u64) -> Result<Vec<u64>> {
    if len == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    if gcd(len, alphabet_size) != 1 {
        return Err(Error::Hypothesis(format!(
            "gcd({len}, {alphabet_size}) != 1"
        )));
    }
    if designed == 0 {
        return Err(Error::InvalidParameter("designed distance must be at least 1".into()));
    }
    let mut member = vec![false; len as usize];
    for i in 0..designed as u64 - 1 {
        let s = (offset + i) % len;
        if member[s as usize] {
            continue;
        }
        for x in coset_of(s, len, alphabet_size % len) {
            member[x as usize] = true;
        }
    }
    Ok((0..len).filter(|&x| member[x as usize]).collect())
}

/// Dimension of the length-`len` BCH code over a field of `alphabet_size`
/// elements with the given designed distance and offset: `len` minus the size
/// of the defining set.
pub fn bch_dimension(alphabet_size: u64, len: u64, designed: usize, offset: u64) -> Result<usize> {
    Ok(len as usize - defining_set(alphabet_size, len, designed, offset)?.len())
}

/// BCH code of length `len` over `alphabet` with defining set the cyclotomic
/// closure of `α^offset, ..., α^{offset+designed-2}`, `α` of order `len` in
/// the splitting field. Generator rows are the shifts of `g(x)`.
pub fn bch_code(alphabet: &Arc<Field>, len: u64, designed: usize, offset: u64) -> Result<BlockCode> {
    let qa = alphabet.size();
    let zeros = defining_set(qa, len, designed, offset)?;
    let m = multiplicative_order(qa % len, len).expect("coprime") as u32;
    let big = alphabet.extend(m.max(1))?;
    let gamma = big.primitive_element();
    let alpha = big.pow(gamma, ((big.size() - 1) / len) as u128);
    let mut g = vec![1u64];
    for &j in &zeros {
        let root = big.pow(alpha, j as u128);
        g = poly::mul(&big, &g, &[big.neg(root), 1]);
    }
    if let Some(&c) = g.iter().find(|&&c| c >= qa) {
        return Err(Error::InvalidParameter(format!(
            "generator coefficient {c} outside the alphabet; defining set not closed"
        )));
    }
    let k = len as usize - zeros.len();
    let generator = (0..k)
        .map(|shift| {
            let mut row = vec![0u64; len as usize];
            row[shift..shift + g.len()].copy_from_slice(&g);
            row
        })
        .collect();
    let distance = if designed <= 1 {
        Distance::declared(1, "full space")
    } else {
        Distance::declared(designed, "BCH bound")
    };
    BlockCode::new(alphabet, len as usize, generator, distance)
}

/// Families of BCH codes with a closed-form dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BchFamily {
    /// Narrow-sense primitive codes over `F_{q^n}` of length `q^{un} - 1`.
    Extension,
    /// Narrow-sense primitive codes over `F_q` of length `q^u - 1`, read as
    /// codes over `F_{q^n}`.
    Ground,
    /// Codes over `F_{q^n}` of length `(q^{un} - 1)/λ`, `u` odd, `λ | q^n - 1`.
    Divided { lambda: u64 },
}

impl BchFamily {
    /// Size of the field the family's BCH codes are defined over.
    pub fn alphabet_size(&self, q: u64, n: u32) -> Result<u64> {
        match self {
            BchFamily::Ground => Ok(q),
            _ => pow(q, n),
        }
    }

    pub fn length(&self, q: u64, n: u32, u: u32) -> Result<u64> {
        let base = self.alphabet_size(q, n)?;
        let full = pow(base, u)? - 1;
        Ok(match self {
            BchFamily::Divided { lambda } => full / lambda,
            _ => full,
        })
    }

    fn check(&self, q: u64, n: u32, u: u32, ui: u64) -> Result<()> {
        let base = self.alphabet_size(q, n)?;
        match self {
            BchFamily::Extension | BchFamily::Ground => {
                let upper = if u.is_multiple_of(2) {
                    if u < 4 {
                        return Err(Error::Hypothesis(format!("even u must be >= 4, got {u}")));
                    }
                    pow(base, u / 2)? + 1
                } else {
                    if u < 5 {
                        return Err(Error::Hypothesis(format!("odd u must be >= 5, got {u}")));
                    }
                    pow(base, u.div_ceil(2))? + 1
                };
                if !(2..=upper).contains(&ui) {
                    return Err(Error::Hypothesis(format!("need 2 <= u_i <= {upper}, got {ui}")));
                }
            }
            BchFamily::Divided { lambda } => {
                if *lambda == 0 || (base - 1) % lambda != 0 {
                    return Err(Error::Hypothesis(format!("λ = {lambda} must divide {}", base - 1)));
                }
                if u.is_multiple_of(2) {
                    return Err(Error::Hypothesis(format!("u must be odd, got {u}")));
                }
                let upper = (pow(q, n * (u + 1) / 2)? - 1) / lambda;
                if ui < 2 || ui - 1 > upper {
                    return Err(Error::Hypothesis(format!("need 1 <= u_i - 1 <= {upper}, got u_i = {ui}")));
                }
            }
        }
        Ok(())
    }
}

/// Closed-form dimension of one member of a BCH family with designed
/// distance `ui`:
///
/// * primitive families: `Q^u - 1 - u(u_i - 1 - ⌊(u_i - 1)/Q⌋)` where `Q` is
///   the alphabet size,
/// * divided family: `(q^{un} - 1)/λ - u⌈(u_i - 1)(1 - q^{-n})⌉`.
pub fn bch_dim_bound(family: BchFamily, q: u64, n: u32, u: u32, ui: u64) -> Result<u64> {
    family.check(q, n, u, ui)?;
    let len = family.length(q, n, u)?;
    let base = family.alphabet_size(q, n)?;
    let loss = match family {
        BchFamily::Extension | BchFamily::Ground => u as u64 * (ui - 1 - (ui - 1) / base),
        BchFamily::Divided { .. } => {
            let num = (ui - 1) * (base - 1);
            u as u64 * num.div_ceil(base)
        }
    };
    len.checked_sub(loss)
        .ok_or_else(|| Error::Hypothesis("designed distance too large for the length".into()))
}

fn pow(base: u64, exp: u32) -> Result<u64> {
    checked_pow(base, exp).ok_or(Error::InvalidParameter(format!("{base}^{exp} overflows")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_codes::DEFAULT_BUDGET;
    use crate::gf::FieldTower;

    #[test]
    fn cosets_mod_15_under_4() {
        let cosets = cyclotomic_cosets(15, 4);
        assert!(cosets.contains(&vec![1, 4]));
        assert_eq!(cosets.iter().map(Vec::len).sum::<usize>(), 15);
        assert_eq!(bch_dimension(4, 15, 2, 1).unwrap(), 13);
    }

    #[test]
    fn length_255_over_f4() {
        assert_eq!(bch_dimension(4, 255, 2, 1).unwrap(), 251);
        assert_eq!(bch_dim_bound(BchFamily::Extension, 2, 2, 4, 2).unwrap(), 251);
    }

    #[test]
    fn trivial_designed_distance() {
        let f = FieldTower::new(2, 1, 2).unwrap().top().clone();
        let c = bch_code(&f, 5, 1, 1).unwrap();
        assert_eq!((c.length(), c.dimension()), (5, 5));
        assert_eq!(c.min_hamming_distance(DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn gcd_violation() {
        let f = FieldTower::new(2, 1, 2).unwrap().top().clone();
        assert!(matches!(bch_code(&f, 6, 2, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn hamming_code_is_bch() {
        let f2 = FieldTower::new(2, 1, 1).unwrap().top().clone();
        let c = bch_code(&f2, 7, 3, 1).unwrap();
        assert_eq!(c.dimension(), 4);
        assert_eq!(c.min_hamming_distance(DEFAULT_BUDGET).unwrap(), 3);
    }

    #[test]
    fn bch_bound_holds_on_small_lengths() {
        for (p, n) in [(2u64, 1u32), (2, 2), (3, 1)] {
            let tower = FieldTower::new(p, 1, n).unwrap();
            let f = tower.top();
            for len in 2..=63u64 {
                if gcd(len, f.size()) != 1 {
                    continue;
                }
                let m = multiplicative_order(f.size() % len, len).unwrap() as u32;
                if checked_pow(f.size(), m).is_none_or(|s| s > 1 << 16) {
                    continue;
                }
                for designed in 2..=len.min(9) as usize {
                    let c = bch_code(f, len, designed, 1).unwrap();
                    assert_eq!(c.dimension(), bch_dimension(f.size(), len, designed, 1).unwrap());
                    if (f.size() as u128).pow(c.dimension() as u32) > 1 << 12 {
                        continue;
                    }
                    let d = c.min_hamming_distance(1 << 12).unwrap();
                    assert!(d >= designed.min(len as usize) || c.dimension() == 0, "len {len} δ {designed}: d = {d}");
                }
            }
        }
    }

    #[test]
    fn primitive_family_values() {
        // length 63 binary codes read over F_4
        assert_eq!(bch_dim_bound(BchFamily::Ground, 2, 2, 6, 2).unwrap(), 57);
        assert_eq!(bch_dim_bound(BchFamily::Ground, 2, 2, 6, 4).unwrap(), 51);
        // length 31, odd u
        assert_eq!(bch_dim_bound(BchFamily::Ground, 2, 2, 5, 3).unwrap(), 26);
        assert_eq!(bch_dim_bound(BchFamily::Ground, 2, 2, 5, 6).unwrap(), 16);
        assert!(bch_dim_bound(BchFamily::Ground, 2, 2, 3, 2).is_err());
        assert!(bch_dim_bound(BchFamily::Ground, 2, 2, 6, 10).is_err());
        assert!(bch_dim_bound(BchFamily::Extension, 2, 2, 4, 18).is_err());
    }

    #[test]
    fn ground_family_matches_cosets() {
        for (u, uis) in [(6u32, 2..=9u64), (5, 2..=9)] {
            for ui in uis {
                let formula = bch_dim_bound(BchFamily::Ground, 2, 2, u, ui).unwrap();
                let len = (1u64 << u) - 1;
                assert_eq!(bch_dimension(2, len, ui as usize, 1).unwrap() as u64, formula, "u={u} ui={ui}");
            }
        }
    }

    #[test]
    fn divided_family() {
        let fam = BchFamily::Divided { lambda: 3 };
        assert_eq!(fam.length(2, 2, 5).unwrap(), 341);
        // 341 - 5⌈6·3/4⌉ and 341 - 5⌈13·3/4⌉
        assert_eq!(bch_dim_bound(fam, 2, 2, 5, 7).unwrap(), 316);
        assert_eq!(bch_dim_bound(fam, 2, 2, 5, 14).unwrap(), 291);
        assert!(bch_dim_bound(BchFamily::Divided { lambda: 2 }, 2, 2, 5, 7).is_err());
        assert!(bch_dim_bound(fam, 2, 2, 4, 7).is_err());
    }
}
