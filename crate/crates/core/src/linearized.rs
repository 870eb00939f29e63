//! q-polynomials `a_0 x + a_1 x^q + ... + a_v x^{q^v}` over `F_{q^n}` and the
//! Gabidulin codes they span.
//!
//! A q-polynomial is an `F_q`-linear map of `F_{q^n}`. Its matrix acts on
//! column vectors of polynomial-basis coordinates: column `j` is the image of
//! the basis element `z^j`.

use crate::error::{Error, Result};
use crate::gf::{Felem, FieldTower, Level, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearizedPoly {
    coeffs: Vec<u64>,
}

impl LinearizedPoly {
    /// `coeffs[i]` multiplies `x^{q^i}`. At most `n` coefficients are accepted;
    /// higher q-degrees are rejected rather than folded with `x^{q^n} = x`.
    pub fn new(tower: &FieldTower, coeffs: Vec<u64>) -> Result<Self> {
        let n = tower.n() as usize;
        if coeffs.len() > n {
            return Err(Error::InvalidLength { expected: n, got: coeffs.len() });
        }
        for &c in &coeffs {
            tower.top().check(c)?;
        }
        Ok(Self { coeffs })
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The map `x ↦ x`.
    pub fn identity() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `c · x^{q^i}`.
    pub fn monomial(tower: &FieldTower, c: u64, i: usize) -> Result<Self> {
        let mut coeffs = vec![0; i + 1];
        coeffs[i] = c;
        Self::new(tower, coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Index of the highest nonzero coefficient.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    /// `Σ a_i x^{q^i}` at a raw element of `F_{q^n}`.
    pub fn apply(&self, tower: &FieldTower, x: u64) -> u64 {
        let top = tower.top();
        let q = tower.q();
        let mut acc = 0;
        let mut xi = x;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xi = top.frobenius(xi, q, 1);
            }
            if a != 0 {
                acc = top.add(acc, top.mul(a, xi));
            }
        }
        acc
    }

    pub fn eval(&self, tower: &FieldTower, x: Felem) -> Result<Felem> {
        if x.level != Level::Top {
            return Err(Error::LevelMismatch);
        }
        Ok(Felem { level: Level::Top, value: self.apply(tower, x.value) })
    }

    /// The `n × n` matrix over `F_q` of this map.
    pub fn to_matrix(&self, tower: &FieldTower) -> Matrix {
        let n = tower.n() as usize;
        let q = tower.q();
        let mut m = Matrix::zeros(n, n);
        for (j, beta) in tower.basis().into_iter().enumerate() {
            let image = tower.top().coords_over(self.apply(tower, beta), q);
            for (i, &c) in image.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Rank of the map, `n - dim ker`.
    pub fn rank(&self, tower: &FieldTower) -> usize {
        self.to_matrix(tower).rank(tower.ground())
    }
}

/// `Gab(n, v)`: every q-polynomial of q-degree at most `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GabidulinCode {
    n: usize,
    v: usize,
}

impl GabidulinCode {
    pub fn new(tower: &FieldTower, v: usize) -> Result<Self> {
        let n = tower.n() as usize;
        if v >= n {
            return Err(Error::InvalidParameter(format!("v = {v} must be below n = {n}")));
        }
        Ok(Self { n, v })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// `log_q` of the number of codewords, `n(v+1)`.
    pub fn dimension(&self) -> usize {
        self.n * (self.v + 1)
    }

    pub fn min_rank_distance(&self) -> usize {
        self.n - self.v
    }

    /// An `F_q`-basis: `β · x^{q^i}` for every basis element `β` and `i <= v`.
    pub fn basis(&self, tower: &FieldTower) -> Vec<LinearizedPoly> {
        let mut out = Vec::with_capacity(self.dimension());
        for i in 0..=self.v {
            for beta in tower.basis() {
                out.push(LinearizedPoly::monomial(tower, beta, i).expect("i < n"));
            }
        }
        out
    }

    /// Every codeword, in lexicographic order of the coefficient tuple.
    pub fn enumerate<'a>(
        &self,
        tower: &'a FieldTower,
        budget: u128,
    ) -> Result<impl Iterator<Item = LinearizedPoly> + 'a> {
        let qn = tower.top().size() as u128;
        let len = self.v + 1;
        let total = (0..len).try_fold(1u128, |acc, _| acc.checked_mul(qn));
        let total = match total {
            Some(t) if t <= budget => t,
            other => {
                return Err(Error::BudgetExceeded { needed: other.unwrap_or(u128::MAX), budget })
            }
        };
        Ok((0..total).map(move |mut idx| {
            let coeffs = (0..len)
                .map(|_| {
                    let c = (idx % qn) as u64;
                    idx /= qn;
                    c
                })
                .collect();
            LinearizedPoly { coeffs }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f4() -> FieldTower {
        FieldTower::new(2, 1, 2).unwrap()
    }

    #[test]
    fn identity_and_zero_maps() {
        let t = FieldTower::new(2, 1, 3).unwrap();
        for x in 0..8 {
            assert_eq!(LinearizedPoly::identity().apply(&t, x), x);
            assert_eq!(LinearizedPoly::zero().apply(&t, x), 0);
        }
        assert_eq!(LinearizedPoly::identity().to_matrix(&t), Matrix::identity(3));
        assert_eq!(LinearizedPoly::identity().rank(&t), 3);
        assert_eq!(LinearizedPoly::zero().rank(&t), 0);
    }

    #[test]
    fn frobenius_minus_identity_on_f4() {
        let t = f4();
        // x^q - x = x^2 + x in characteristic 2
        let l = LinearizedPoly::new(&t, vec![1, 1]).unwrap();
        let w = t.elem(Level::Top, 2).unwrap();
        assert_eq!(l.eval(&t, t.one(Level::Top)).unwrap().value, 0);
        // ω² + ω = 1
        assert_eq!(l.eval(&t, w).unwrap().value, 1);
        let m = l.to_matrix(&t);
        assert_eq!(m.rank(t.ground()), 1);
        // kernel is the fixed field F_2 = {0, 1}
        assert_eq!(m.kernel_basis(t.ground()), vec![vec![1, 0]]);
    }

    #[test]
    fn frobenius_matrix_on_f4() {
        let t = f4();
        let l = LinearizedPoly::monomial(&t, 1, 1).unwrap();
        let m = l.to_matrix(&t);
        for x in 0..4u64 {
            let v = t.top().coords_over(x, 2);
            let image = m.mul_vec(t.ground(), &v).unwrap();
            let expected = t.top().coords_over(t.top().frobenius(x, 2, 1), 2);
            assert_eq!(image, expected);
        }
    }

    #[test]
    fn matrix_action_matches_evaluation() {
        for (p, e, n) in [(2, 1, 3), (3, 1, 2), (2, 2, 2)] {
            let t = FieldTower::new(p, e, n).unwrap();
            let q = t.q();
            let l = LinearizedPoly::new(&t, (0..n as u64).map(|i| (3 * i + 1) % t.top().size()).collect()).unwrap();
            let m = l.to_matrix(&t);
            for x in t.top().elements() {
                let image = m.mul_vec(t.ground(), &t.top().coords_over(x, q)).unwrap();
                assert_eq!(image, t.top().coords_over(l.apply(&t, x), q));
            }
        }
    }

    #[test]
    fn rejects_too_many_coefficients() {
        let t = f4();
        assert!(LinearizedPoly::new(&t, vec![1, 0, 1]).is_err());
        assert!(LinearizedPoly::new(&t, vec![4]).is_err());
        assert!(GabidulinCode::new(&t, 2).is_err());
    }

    #[test]
    fn to_matrix_is_injective_for_small_n() {
        for n in 1..=3u32 {
            let t = FieldTower::new(2, 1, n).unwrap();
            let code = GabidulinCode::new(&t, n as usize - 1).unwrap();
            let all: Vec<_> = code.enumerate(&t, 1 << 20).unwrap().collect();
            let mats: HashSet<Matrix> = all.iter().map(|l| l.to_matrix(&t)).collect();
            assert_eq!(mats.len(), all.len());
            // every n×n binary matrix is some q-polynomial
            assert_eq!(mats.len(), 1 << (n * n));
        }
    }

    #[test]
    fn rank_from_root_count() {
        let t = FieldTower::new(2, 1, 3).unwrap();
        let code = GabidulinCode::new(&t, 2).unwrap();
        for l in code.enumerate(&t, 1 << 20).unwrap() {
            let roots = t.top().elements().filter(|&x| l.apply(&t, x) == 0).count() as u64;
            assert!(roots.is_power_of_two());
            assert_eq!(l.rank(&t), 3 - roots.trailing_zeros() as usize);
            if let Some(s) = l.q_degree() {
                assert!(l.rank(&t) >= 3 - s);
            }
        }
    }

    #[test]
    fn gab_2_0_is_scalar_multiples() {
        let t = f4();
        let code = GabidulinCode::new(&t, 0).unwrap();
        let words: Vec<_> = code.enumerate(&t, 100).unwrap().collect();
        assert_eq!(words.len(), 4);
        assert!(words.iter().all(|l| l.coeffs().len() == 1));
    }

    #[test]
    fn gabidulin_is_mrd_at_desk_scale() {
        for (q, n, v) in [(2u64, 2u32, 1usize), (2, 3, 1), (2, 3, 2), (3, 2, 1), (2, 2, 0), (2, 3, 0)] {
            let t = FieldTower::for_q(q, n).unwrap();
            let code = GabidulinCode::new(&t, v).unwrap();
            let words: Vec<_> = code.enumerate(&t, 1 << 20).unwrap().collect();
            assert_eq!(words.len() as u64, (q.pow(n)).pow(v as u32 + 1));
            let min = words.iter().filter(|l| !l.is_zero()).map(|l| l.rank(&t)).min().unwrap();
            assert_eq!(min, n as usize - v, "Gab({n},{v}) over F_{q}");
        }
    }

    #[test]
    fn enumeration_budget() {
        let t = FieldTower::new(2, 1, 3).unwrap();
        let code = GabidulinCode::new(&t, 1).unwrap();
        assert!(matches!(code.enumerate(&t, 63), Err(Error::BudgetExceeded { needed: 64, .. })));
        let distinct: HashSet<_> = code.enumerate(&t, 64).unwrap().collect();
        assert_eq!(distinct.len(), 64);
    }
}
