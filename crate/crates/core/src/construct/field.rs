//! The small fields GF(2), GF(3), GF(4), GF(5) and square matrices over them.

use crate::error::{Error, Result};

/// A finite field of order 2, 3, 4 or 5 with precomputed tables.
///
/// Elements are `u8` values `0..q`. For GF(4) the value `b1 b0` encodes
/// `b1·ω + b0` with `ω² = ω + 1`, so `2 = ω` and `3 = ω + 1`.
#[derive(Clone, Debug)]
pub struct Field {
    q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl Field {
    pub fn new(q: u8) -> Result<Self> {
        let (add, mul): (Vec<u8>, Vec<u8>) = match q {
            2 | 3 | 5 => {
                let q16 = q as u16;
                let add = (0..q16).flat_map(|a| (0..q16).map(move |b| ((a + b) % q16) as u8)).collect();
                let mul = (0..q16).flat_map(|a| (0..q16).map(move |b| ((a * b) % q16) as u8)).collect();
                (add, mul)
            }
            4 => {
                let add = (0..4u8).flat_map(|a| (0..4u8).map(move |b| a ^ b)).collect();
                let mul = (0..4u8).flat_map(|a| (0..4u8).map(move |b| gf4_mul(a, b))).collect();
                (add, mul)
            }
            _ => return Err(Error::InvalidParameter(format!("unsupported field order {q}"))),
        };
        let f = Field { q, add, mul };
        if !f.satisfies_axioms() {
            return Err(Error::Construction(format!("GF({q}) tables violate field axioms")));
        }
        Ok(f)
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.elements().find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        self.elements().find(|&b| self.mul(a, b) == 1)
    }

    /// `x ↦ x^p` for the prime `p` of the field; non-trivial only on GF(4).
    pub fn frobenius(&self, a: u8) -> u8 {
        match self.q {
            4 => self.mul(a, a),
            _ => a,
        }
    }

    /// Exhaustive check of the field axioms on the tables.
    pub fn satisfies_axioms(&self) -> bool {
        let els: Vec<u8> = self.elements().collect();
        for &a in &els {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return false;
            }
            if !els.iter().any(|&b| self.add(a, b) == 0) {
                return false;
            }
            if a != 0 && !els.iter().any(|&b| self.mul(a, b) == 1) {
                return false;
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for &c in &els {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    // carry-less product, then reduce by x^2 + x + 1
    let mut r = 0u8;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}

/// A square matrix over a [`Field`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<u8>,
}

impl Matrix {
    pub fn new(rows: &[&[u8]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, entries: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        let n = self.n;
        let mut out = Matrix { n, entries: vec![0; n * n] };
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn pow(&self, e: u32, f: &Field) -> Matrix {
        (0..e).fold(Matrix::identity(self.n), |acc, _| acc.mul(self, f))
    }

    /// Determinant by cofactor expansion (dimension ≤ 3 in practice).
    pub fn det(&self, f: &Field) -> u8 {
        match self.n {
            1 => self.get(0, 0),
            _ => {
                let mut acc = 0;
                for j in 0..self.n {
                    let minor = self.minor(0, j);
                    let term = f.mul(self.get(0, j), minor.det(f));
                    acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let n = self.n - 1;
        let entries = (0..self.n)
            .filter(|&i| i != row)
            .flat_map(|i| (0..self.n).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Matrix { n, entries }
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u8], f: &Field) -> Vec<u8> {
        (0..self.n)
            .map(|j| (0..self.n).fold(0, |acc, i| f.add(acc, f.mul(v[i], self.get(i, j)))))
            .collect()
    }

    /// `I + λ E_ij`.
    pub fn transvection(n: usize, i: usize, j: usize, lambda: u8) -> Matrix {
        let mut m = Matrix::identity(n);
        m.set(i, j, lambda);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_fields_pass_axioms() {
        for q in [2, 3, 4, 5] {
            assert!(Field::new(q).unwrap().satisfies_axioms());
        }
        assert!(Field::new(6).is_err());
    }

    #[test]
    fn gf4_omega() {
        let f = Field::new(4).unwrap();
        // ω² = ω + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn gf4_frobenius_is_order_two_automorphism() {
        let f = Field::new(4).unwrap();
        let mut moved = false;
        for a in f.elements() {
            assert_eq!(f.frobenius(f.frobenius(a)), a);
            moved |= f.frobenius(a) != a;
            for b in f.elements() {
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            }
        }
        assert!(moved);
    }

    #[test]
    fn determinant_and_products() {
        let f = Field::new(3).unwrap();
        let a = Matrix::new(&[&[0, 2], &[1, 0]]);
        assert_eq!(a.det(&f), 1);
        assert_eq!(a.pow(4, &f), Matrix::identity(2));
        let t = Matrix::transvection(3, 0, 2, 1);
        assert_eq!(t.det(&Field::new(4).unwrap()), 1);
        assert_eq!(a.apply(&[1, 0], &f), vec![0, 2]);
    }
}
