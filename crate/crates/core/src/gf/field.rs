//! Finite fields built as a chain of simple extensions of a prime field.
//!
//! An element is stored as a `u64` symbol whose base-`p` digits (least
//! significant first) are its coordinates over `F_p` in the nested polynomial
//! basis. A field `K[z]/(h)` built on a subfield `K` of size `Q` stores
//! `c_0 + c_1 z + ...` as `c_0 + c_1 Q + ...`, so an element of `K` has the
//! same symbol in every extension of `K`.

use std::fmt;
use std::sync::Arc;

use super::poly;
use super::prime::{checked_pow, is_prime, pow_mod, prime_factors};
use crate::error::{Error, Result};

/// Fields up to this size get exp/log tables.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest field size accepted at all.
pub const SIZE_LIMIT: u64 = 1 << 48;

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u64>,
}

pub struct Field {
    p: u64,
    size: u64,
    degree: u32,
    base: Option<Arc<Field>>,
    modulus: Vec<u64>,
    tables: Option<LogTables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("size", &self.size)
            .field("modulus", &self.modulus)
            .field("base", &self.base)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.size == other.size
            && self.modulus == other.modulus
            && self.base == other.base
    }
}

impl Eq for Field {}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::FieldTooLarge { p, degree: 1 });
        }
        Ok(Arc::new(Field {
            p,
            size: p,
            degree: 1,
            base: None,
            modulus: Vec::new(),
            tables: None,
        }))
    }

    /// Degree-`degree` extension of `self` by the lexicographically smallest
    /// monic irreducible polynomial (coefficients compared from the constant
    /// term upwards). Degree 1 returns `self` unchanged.
    pub fn extend(self: &Arc<Self>, degree: u32) -> Result<Arc<Field>> {
        if degree == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        if degree == 1 {
            return Ok(Arc::clone(self));
        }
        self.check_size(degree)?;
        let modulus = poly::smallest_irreducible(self, degree as usize);
        Self::build(self, modulus)
    }

    /// Extension of `base` by an explicit monic irreducible `modulus`
    /// (coefficients low degree first).
    pub fn with_modulus(base: &Arc<Field>, modulus: Vec<u64>) -> Result<Arc<Field>> {
        let m = poly::trim(modulus);
        if m.len() < 3 || *m.last().unwrap() != 1 {
            return Err(Error::InvalidParameter(
                "modulus must be monic of degree at least 2".into(),
            ));
        }
        if let Some(&c) = m.iter().find(|&&c| !base.contains(c)) {
            return Err(Error::SymbolOutOfRange { symbol: c, size: base.size });
        }
        base.check_size((m.len() - 1) as u32)?;
        if !poly::is_irreducible(base, &m) {
            return Err(Error::InvalidParameter("modulus is reducible".into()));
        }
        Self::build(base, m)
    }

    fn check_size(&self, degree: u32) -> Result<()> {
        let total = self.degree * degree;
        match checked_pow(self.p, total) {
            Some(s) if s <= SIZE_LIMIT => Ok(()),
            _ => Err(Error::FieldTooLarge { p: self.p, degree: total }),
        }
    }

    fn build(base: &Arc<Field>, modulus: Vec<u64>) -> Result<Arc<Field>> {
        let rel = (modulus.len() - 1) as u32;
        let degree = base.degree * rel;
        let size = checked_pow(base.p, degree)
            .filter(|&s| s <= SIZE_LIMIT)
            .ok_or(Error::FieldTooLarge { p: base.p, degree })?;
        let mut field = Field {
            p: base.p,
            size,
            degree,
            base: Some(Arc::clone(base)),
            modulus,
            tables: None,
        };
        if size <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(Arc::new(field))
    }

    fn build_tables(&self) -> LogTables {
        let order = self.size - 1;
        let g = self.find_primitive();
        let mut exp = vec![0u64; 2 * order as usize];
        let mut log = vec![0u64; self.size as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = self.mul_slow(x, g);
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        LogTables { exp, log }
    }

    fn find_primitive(&self) -> u64 {
        let order = self.size - 1;
        let factors = prime_factors(order);
        (1..self.size)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(g, (order / r) as u128) != 1)
            })
            .expect("the multiplicative group of a finite field is cyclic")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Degree over the immediate subfield (1 for a prime field).
    pub fn rel_degree(&self) -> usize {
        if self.base.is_some() {
            self.modulus.len() - 1
        } else {
            1
        }
    }

    pub fn base(&self) -> Option<&Arc<Field>> {
        self.base.as_ref()
    }

    /// Defining polynomial over the immediate subfield, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.base.is_none()
    }

    /// True when `sub` is `self` or appears in its chain of subfields.
    pub fn has_subfield(&self, sub: &Field) -> bool {
        if self == sub {
            return true;
        }
        match &self.base {
            Some(b) => b.has_subfield(sub),
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, a: u64) -> bool {
        a < self.size
    }

    pub fn check(&self, a: u64) -> Result<u64> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::SymbolOutOfRange { symbol: a, size: self.size })
        }
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        if p == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            let s = (a % p + b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        let p = self.p;
        if p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            let d = a % p;
            out += ((p - d) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let base = match &self.base {
            None => return ((a as u128 * b as u128) % self.p as u128) as u64,
            Some(b) => b,
        };
        let r = self.rel_degree();
        let ca = self.coords(a);
        let cb = self.coords(b);
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y));
                }
            }
        }
        for i in (r..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..r {
                let t = base.mul(c, self.modulus[j]);
                prod[i - r + j] = base.sub(prod[i - r + j], t);
            }
            prod[i] = 0;
        }
        self.from_coords_unchecked(&prod[..r])
    }

    fn pow_slow(&self, a: u64, mut k: u128) -> u64 {
        let mut acc = 1;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            k >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: u64, k: u128) -> u64 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.size - 1) as u128;
        let k = k % order;
        if let Some(t) = &self.tables {
            let e = (t.log[a as usize] as u128 * k) % order;
            return t.exp[e as usize];
        }
        self.pow_slow(a, k)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let order = self.size - 1;
            return Ok(t.exp[((order - t.log[a as usize]) % order) as usize]);
        }
        Ok(self.pow_slow(a, (self.size - 2) as u128))
    }

    /// `a^(Q^i)` for `Q` a power of `p`; with `Q` the size of a subfield `K`
    /// this is the `i`-th power of the `K`-Frobenius.
    pub fn frobenius(&self, a: u64, subfield_size: u64, i: u64) -> u64 {
        if a == 0 || i == 0 {
            return a;
        }
        let order = self.size - 1;
        let e = pow_mod(subfield_size, i as u128, order);
        let e = if e == 0 { order } else { e };
        self.pow(a, e as u128)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        match &self.tables {
            Some(t) => t.exp[1 % t.exp.len().max(1)],
            None => self.find_primitive(),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.size - 1;
        for r in prime_factors(self.size - 1) {
            while ord.is_multiple_of(r) && self.pow(a, (ord / r) as u128) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Coordinates over the immediate subfield (length `rel_degree`).
    pub fn coords(&self, a: u64) -> Vec<u64> {
        let r = self.rel_degree();
        let bs = self.base.as_ref().map_or(self.size, |b| b.size);
        let mut out = Vec::with_capacity(r);
        let mut a = a;
        for _ in 0..r {
            out.push(a % bs);
            a /= bs;
        }
        out
    }

    /// Inverse of [`Field::coords`].
    pub fn from_coords(&self, coords: &[u64]) -> Result<u64> {
        let r = self.rel_degree();
        if coords.len() != r {
            return Err(Error::InvalidLength { expected: r, got: coords.len() });
        }
        let bs = self.base.as_ref().map_or(self.size, |b| b.size);
        if let Some(&c) = coords.iter().find(|&&c| c >= bs) {
            return Err(Error::SymbolOutOfRange { symbol: c, size: bs });
        }
        Ok(self.from_coords_unchecked(coords))
    }

    fn from_coords_unchecked(&self, coords: &[u64]) -> u64 {
        let bs = self.base.as_ref().map_or(self.size, |b| b.size);
        coords.iter().rev().fold(0, |acc, &c| acc * bs + c)
    }

    /// Coordinates over a subfield of size `sub_size` somewhere down the chain.
    pub fn coords_over(&self, a: u64, sub_size: u64) -> Vec<u64> {
        let mut k = 0;
        let mut s = 1u64;
        while s < self.size {
            s *= sub_size;
            k += 1;
        }
        let mut out = Vec::with_capacity(k);
        let mut a = a;
        for _ in 0..k {
            out.push(a % sub_size);
            a /= sub_size;
        }
        out
    }
}
