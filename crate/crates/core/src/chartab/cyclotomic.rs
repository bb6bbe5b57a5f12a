//! Integers of the cyclotomic field `Q(ζ_e)`, stored as coefficient vectors
//! in `Z[x]/(x^e − 1)`.
//!
//! Distinct vectors can represent the same complex number (the relation
//! ideal is generated by the e-th cyclotomic polynomial). Value equality
//! evaluates the difference at every primitive e-th root of unity modulo a
//! prime `P ≡ 1 (mod e)` larger than the difference's coefficient mass: a
//! non-zero algebraic integer whose absolute norm is at most `L^φ(e)` cannot
//! be divisible by `P` in every embedding when `P > L`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::Serialize;

use super::modp::{prime_one_mod, Zp};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInteger {
    conductor: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(conductor: usize) -> Self {
        assert!(conductor >= 1);
        CyclotomicInteger { conductor, coeffs: vec![0; conductor] }
    }

    pub fn from_int(conductor: usize, n: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = n;
        z
    }

    /// `ζ^k`.
    pub fn root(conductor: usize, k: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[k.rem_euclid(conductor as i64) as usize] = 1;
        z
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        CyclotomicInteger { conductor: coeffs.len(), coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Complex conjugation `ζ^k ↦ ζ^{−k}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism `ζ ↦ ζ^m`, `gcd(m, e) = 1`.
    pub fn galois(&self, m: i64) -> Self {
        let e = self.conductor as i64;
        debug_assert_eq!(m.rem_euclid(e).gcd(&e), 1);
        let mut out = Self::zero(self.conductor);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(k as i64 * m).rem_euclid(e) as usize] += c;
        }
        out
    }

    /// Sum of absolute coefficient values; bounds every complex embedding.
    pub fn mass(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).sum()
    }

    /// Whether the represented complex number is zero.
    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        Evaluator::new(self.conductor, self.mass()).eval(self).iter().all(|&v| v == 0)
    }

    /// Equality of the represented complex numbers.
    pub fn value_eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    pub fn value_eq_int(&self, n: i64) -> bool {
        self.value_eq(&Self::from_int(self.conductor, n))
    }

    /// Fixed by every Galois automorphism, i.e. a rational integer.
    pub fn is_rational(&self) -> bool {
        let e = self.conductor as i64;
        (2..e).filter(|m| m.gcd(&e) == 1).all(|m| self.galois(m).value_eq(self))
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let t = std::f64::consts::TAU * k as f64 / e;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }

    /// The integer value, when [`is_rational`](Self::is_rational) holds.
    pub fn to_integer(&self) -> Option<i64> {
        let (re, _) = self.to_complex();
        let n = re.round() as i64;
        self.value_eq_int(n).then_some(n)
    }
}

/// Images of cyclotomic integers under all primitive e-th roots modulo a
/// prime `P ≡ 1 (mod e)` with `P` above a given mass bound. Two values whose
/// difference has mass at most the bound are equal exactly when their images
/// agree.
#[derive(Clone, Debug)]
pub struct Evaluator {
    field: Zp,
    conductor: usize,
    /// Powers `z^0..z^{e-1}` for each primitive root `z`.
    powers: Vec<Vec<u64>>,
}

impl Evaluator {
    pub fn new(conductor: usize, mass_bound: u64) -> Self {
        let e = conductor as u64;
        let lower = mass_bound.max(1 << 20);
        let p = prime_one_mod(e, lower, u64::MAX >> 2).expect("prime exists");
        let field = Zp::new(p);
        let z = field.root_of_unity(e);
        let powers = (1..=e)
            .filter(|k| k.gcd(&e) == 1)
            .map(|k| {
                let zk = field.pow(z, k);
                let mut row = Vec::with_capacity(conductor);
                let mut acc = 1;
                for _ in 0..conductor {
                    row.push(acc);
                    acc = field.mul(acc, zk);
                }
                row
            })
            .collect();
        Evaluator { field, conductor, powers }
    }

    pub fn field(&self) -> Zp {
        self.field
    }

    pub fn eval(&self, x: &CyclotomicInteger) -> Vec<u64> {
        assert_eq!(x.conductor, self.conductor);
        self.powers
            .iter()
            .map(|row| {
                x.coeffs.iter().zip(row).fold(0, |acc, (&c, &w)| {
                    self.field.add(acc, self.field.mul(self.field.from_i64(c), w))
                })
            })
            .collect()
    }
}

impl Serialize for CyclotomicInteger {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (re, im) = self.to_complex();
        let mut st = s.serialize_struct("CyclotomicInteger", 3)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("coefficients", &self.coeffs)?;
        st.serialize_field("approx", &[round6(re), round6(im)])?;
        st.end()
    }
}

fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_integer() {
            return write!(f, "{n}");
        }
        let (re, im) = self.to_complex();
        let sign = if im < 0.0 { '-' } else { '+' };
        write!(f, "{:.3}{}{:.3}i", round6(re), sign, im.abs())
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn add(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.conductor, rhs.conductor);
        CyclotomicInteger {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn sub(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn mul(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.conductor, rhs.conductor);
        let e = self.conductor;
        let mut out = CyclotomicInteger::zero(e);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[(i + j) % e] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sum_of_roots_is_zero() {
        // 1 + ζ + ζ² = 0 for a primitive cube root
        let z = CyclotomicInteger::from_coeffs(vec![1, 1, 1]);
        assert!(z.is_zero());
        assert!(!CyclotomicInteger::root(3, 1).is_zero());
        // ζ_4² = −1
        let i = CyclotomicInteger::root(4, 1);
        assert!((&i * &i).value_eq_int(-1));
    }

    #[test]
    fn rationality() {
        let w = CyclotomicInteger::root(3, 1);
        assert!(!w.is_rational());
        assert!((&w + &w.conj()).is_rational());
        assert_eq!((&w + &w.conj()).to_integer(), Some(-1));
        // (−1 ± √5)/2 from ζ_5 is irrational
        let g = &CyclotomicInteger::root(5, 1) + &CyclotomicInteger::root(5, 4);
        assert!(!g.is_rational());
        assert!(CyclotomicInteger::from_int(7, 3).is_rational());
    }

    #[test]
    fn conjugation_reverses_indices() {
        let a = CyclotomicInteger::from_coeffs(vec![5, 1, 2, 3]);
        assert_eq!(a.conj().coeffs(), &[5, 3, 2, 1]);
    }

    fn arb(e: usize) -> impl Strategy<Value = CyclotomicInteger> {
        proptest::collection::vec(-5i64..5, e).prop_map(CyclotomicInteger::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb(12), b in arb(12), c in arb(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn zero_test_matches_floating_point(a in arb(12)) {
            let (re, im) = a.to_complex();
            let near_zero = re.abs() < 1e-9 && im.abs() < 1e-9;
            prop_assert_eq!(a.is_zero(), near_zero);
        }

        #[test]
        fn absolute_square_is_real(a in arb(8)) {
            let n = &a * &a.conj();
            prop_assert!(n.conj().value_eq(&n));
            prop_assert!(n.to_complex().1.abs() < 1e-9);
        }
    }
}
