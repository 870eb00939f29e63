use std::sync::Arc;

use super::field::Field;
use crate::error::{Error, Result};

/// Which field of a [`FieldTower`] an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    /// `F_p`
    Prime,
    /// `F_q`, `q = p^e`
    Ground,
    /// `F_{q^n}`
    Top,
}

/// A field element tagged with its level.
///
/// `value` packs the polynomial-basis coordinates over `F_p` as base-`p`
/// digits, least significant first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Felem {
    pub level: Level,
    pub value: u64,
}

/// The tower `F_p ⊂ F_q ⊂ F_{q^n}`.
///
/// Both moduli are the lexicographically smallest monic irreducibles, so the
/// same `(p, e, n)` always produces the same tower. Degree-1 steps reuse the
/// field below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTower {
    e: u32,
    n: u32,
    prime: Arc<Field>,
    ground: Arc<Field>,
    top: Arc<Field>,
}

impl FieldTower {
    pub fn new(p: u64, e: u32, n: u32) -> Result<Self> {
        if e == 0 || n == 0 {
            return Err(Error::InvalidParameter("degrees must be positive".into()));
        }
        let prime = Field::prime(p)?;
        match super::prime::checked_pow(p, e.saturating_mul(n)) {
            Some(s) if s <= super::field::SIZE_LIMIT => {}
            _ => return Err(Error::FieldTooLarge { p, degree: e.saturating_mul(n) }),
        }
        let ground = prime.extend(e)?;
        let top = ground.extend(n)?;
        Ok(Self { e, n, prime, ground, top })
    }

    /// Tower for ground field size `q` (a prime power).
    pub fn for_q(q: u64, n: u32) -> Result<Self> {
        let (p, e) = super::prime::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p, e, n)
    }

    pub fn p(&self) -> u64 {
        self.prime.size()
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.ground.size()
    }

    pub fn field(&self, level: Level) -> &Arc<Field> {
        match level {
            Level::Prime => &self.prime,
            Level::Ground => &self.ground,
            Level::Top => &self.top,
        }
    }

    pub fn prime_field(&self) -> &Arc<Field> {
        &self.prime
    }

    pub fn ground(&self) -> &Arc<Field> {
        &self.ground
    }

    pub fn top(&self) -> &Arc<Field> {
        &self.top
    }

    pub fn elem(&self, level: Level, value: u64) -> Result<Felem> {
        self.field(level).check(value)?;
        Ok(Felem { level, value })
    }

    pub fn zero(&self, level: Level) -> Felem {
        Felem { level, value: 0 }
    }

    pub fn one(&self, level: Level) -> Felem {
        Felem { level, value: 1 }
    }

    /// Views `a` as an element of a higher level (same symbol).
    pub fn lift(&self, a: Felem, to: Level) -> Result<Felem> {
        if to < a.level {
            return Err(Error::LevelMismatch);
        }
        Ok(Felem { level: to, value: a.value })
    }

    fn same_level(&self, a: Felem, b: Felem) -> Result<&Arc<Field>> {
        if a.level != b.level {
            return Err(Error::LevelMismatch);
        }
        Ok(self.field(a.level))
    }

    pub fn add(&self, a: Felem, b: Felem) -> Result<Felem> {
        let f = self.same_level(a, b)?;
        Ok(Felem { level: a.level, value: f.add(a.value, b.value) })
    }

    pub fn sub(&self, a: Felem, b: Felem) -> Result<Felem> {
        let f = self.same_level(a, b)?;
        Ok(Felem { level: a.level, value: f.sub(a.value, b.value) })
    }

    pub fn mul(&self, a: Felem, b: Felem) -> Result<Felem> {
        let f = self.same_level(a, b)?;
        Ok(Felem { level: a.level, value: f.mul(a.value, b.value) })
    }

    pub fn neg(&self, a: Felem) -> Felem {
        Felem { level: a.level, value: self.field(a.level).neg(a.value) }
    }

    pub fn inv(&self, a: Felem) -> Result<Felem> {
        Ok(Felem { level: a.level, value: self.field(a.level).inv(a.value)? })
    }

    pub fn pow(&self, a: Felem, k: u64) -> Felem {
        Felem { level: a.level, value: self.field(a.level).pow(a.value, k as u128) }
    }

    /// `a^(q^i)` for `a` in `F_{q^n}`.
    pub fn frobenius(&self, a: Felem, i: u64) -> Result<Felem> {
        if a.level != Level::Top {
            return Err(Error::LevelMismatch);
        }
        Ok(Felem { level: Level::Top, value: self.top.frobenius(a.value, self.q(), i) })
    }

    /// Coordinates of `a ∈ F_{q^n}` over `F_q` in the polynomial basis.
    pub fn as_vector(&self, a: Felem) -> Result<Vec<u64>> {
        if a.level != Level::Top {
            return Err(Error::LevelMismatch);
        }
        Ok(self.top.coords_over(a.value, self.q()))
    }

    pub fn from_vector(&self, v: &[u64]) -> Result<Felem> {
        let n = self.n as usize;
        if v.len() != n {
            return Err(Error::InvalidLength { expected: n, got: v.len() });
        }
        let q = self.q();
        if let Some(&c) = v.iter().find(|&&c| c >= q) {
            return Err(Error::SymbolOutOfRange { symbol: c, size: q });
        }
        let value = v.iter().rev().fold(0, |acc, &c| acc * q + c);
        Ok(Felem { level: Level::Top, value })
    }

    /// The polynomial basis `1, z, ..., z^{n-1}` of `F_{q^n}` over `F_q`.
    pub fn basis(&self) -> Vec<u64> {
        let q = self.q();
        (0..self.n).map(|i| q.pow(i)).collect()
    }
}
