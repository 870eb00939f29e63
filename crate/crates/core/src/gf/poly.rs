//! Dense univariate polynomials over a [`Field`], coefficients low degree first.

use super::field::Field;

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn sub(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn mul(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(f: &Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for (i, &bc) in b[..=db].iter().enumerate() {
            let t = f.mul(c, bc);
            r[dr - db + i] = f.sub(r[dr - db + i], t);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    divrem(f, a, b).1
}

/// Monic greatest common divisor (empty for gcd(0, 0)).
pub fn gcd(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn monic(f: &Field, a: &[u64]) -> Vec<u64> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).expect("nonzero");
            a[..=d].iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

pub fn mulmod(f: &Field, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &Field, a: &[u64], mut k: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(f, a, m);
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        k >>= 1;
    }
    rem(f, &acc, m)
}

/// Horner evaluation at a point of `f` (or of any field containing it).
pub fn eval(f: &Field, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Irreducibility of a polynomial of degree >= 1 over `f`: no common factor
/// with `x^(Q^i) - x` for any `i <= deg/2`.
pub fn is_irreducible(f: &Field, a: &[u64]) -> bool {
    let a = trim(a.to_vec());
    let d = match degree(&a) {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    let a = monic(f, &a);
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = powmod(f, &h, f.size(), &a);
        let g = gcd(f, &a, &sub(f, &h, &x));
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`,
/// comparing the coefficient tuple `(a_0, a_1, ..., a_{d-1})` as integers.
pub fn smallest_irreducible(f: &Field, d: usize) -> Vec<u64> {
    let q = f.size();
    if d == 1 {
        return vec![0, 1];
    }
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    // a_0 is the most significant digit of the enumeration counter.
    let mut counter = vec![0u64; d];
    loop {
        for (i, &c) in counter.iter().enumerate() {
            coeffs[i] = c;
        }
        if coeffs[0] != 0 && is_irreducible(f, &coeffs) {
            return coeffs;
        }
        let mut i = d;
        loop {
            i -= 1;
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            assert!(i > 0, "irreducible polynomials exist in every degree");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    /// Trial division by every monic polynomial of degree 1..=d/2.
    fn irreducible_by_trial_division(f: &Field, a: &[u64]) -> bool {
        let d = degree(a).unwrap();
        let q = f.size();
        for k in 1..=d / 2 {
            for idx in 0..q.pow(k as u32) {
                let mut div: Vec<u64> = (0..k).map(|i| (idx / q.pow(i as u32)) % q).collect();
                div.push(1);
                if rem(f, a, &div).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn smallest_irreducibles_match_enumeration() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(smallest_irreducible(&f2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(&f2, 3), vec![1, 0, 1, 1]);
        assert_eq!(smallest_irreducible(&f2, 4), vec![1, 0, 0, 1, 1]);
        let f3 = Field::prime(3).unwrap();
        // monic quadratics over F_3 in (a0, a1) order: a0 = 0 has root 0,
        // x^2 + 1 has no root in {0, 1, 2}
        assert_eq!(smallest_irreducible(&f3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for (p, k) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = Field::prime(p).unwrap().extend(k).unwrap();
            let q = f.size();
            for d in 2..=4usize {
                if q.pow(d as u32) > 5000 {
                    continue;
                }
                for idx in 0..q.pow(d as u32) {
                    let mut a: Vec<u64> = (0..d).map(|i| (idx / q.pow(i as u32)) % q).collect();
                    a.push(1);
                    assert_eq!(is_irreducible(&f, &a), irreducible_by_trial_division(&f, &a), "{a:?}");
                }
            }
        }
    }

    #[test]
    fn division_identity() {
        let f = Field::prime(5).unwrap();
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), trim(a));
        assert!(degree(&r).is_none_or(|d| d < 2));
    }
}
