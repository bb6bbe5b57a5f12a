//! Permutations of `{1..n}` in one-line storage.
//!
//! Composition is left to right: `p * q` first applies `p`, then `q`.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on `{1..n}`.
///
/// Images are kept 0-based internally; every constructor and accessor that is
/// part of the public surface speaks 1-based points. The derived ordering is
/// the lexicographic order of the image sequence, so the identity is the
/// least permutation of its degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize, "degree {degree} too large");
        Permutation { img: (0..degree as u16).collect() }
    }

    /// Builds a permutation from its 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!("image {x} out of range 1..{n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            img.push((x - 1) as u16);
        }
        Ok(Permutation { img: img.into_boxed_slice() })
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} out of range 1..{degree}"
                    )));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(format!("point {a} in two cycles")));
                }
                images[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    /// 0-based image slice.
    #[inline]
    pub(crate) fn raw(&self) -> &[u16] {
        &self.img
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `x`.
    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.img[x - 1] as usize + 1
    }

    /// 1-based one-line images.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `result(x) = q(self(x))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: q.degree() });
        }
        Ok(self.compose_unchecked(q))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, q: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), q.degree());
        let img = self.img.iter().map(|&x| q.img[x as usize]).collect();
        Permutation { img }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { img: inv.into_boxed_slice() }
    }

    /// `g⁻¹ · self · g`, i.e. the image of `self` under relabelling by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), g.degree());
        let mut out = vec![0u16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            out[g.img[i] as usize] = g.img[x as usize];
        }
        Permutation { img: out.into_boxed_slice() }
    }

    /// `self^m` for any integer `m` (negative powers invert).
    pub fn pow(&self, m: i64) -> Permutation {
        let n = self.img.len();
        let mut out = vec![0u16; n];
        let mut done = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x as u16);
                x = self.img[x] as usize;
            }
            let len = cycle.len() as i64;
            let shift = m.rem_euclid(len) as usize;
            for (i, &c) in cycle.iter().enumerate() {
                out[c as usize] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { img: out.into_boxed_slice() }
    }

    /// Lengths of all cycles, including fixed points.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.img.len();
        let mut done = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !done[x] {
                done[x] = true;
                len += 1;
                x = self.img[x] as usize;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Non-trivial cycles in 1-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] || self.img[start] as usize == start {
                done[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x + 1);
                x = self.img[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Points moved by the permutation (1-based).
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.image(x) != x).collect()
    }

    /// `[2,3,1]` style.
    pub fn to_one_line(&self) -> String {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// `(1,2,3)(4,5)` style; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut s = String::new();
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            s.push('(');
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }

    /// Parses either one-line (`[2,3,1]`) or cycle (`(1,2,3)(4,5)`) notation.
    /// Cycle notation needs the degree; one-line notation must agree with it.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        let t = text.trim();
        if let Some(body) = t.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated `{t}`")))?;
            let images = parse_points(body)?;
            if images.len() != degree {
                return Err(Error::DegreeMismatch { left: images.len(), right: degree });
            }
            return Permutation::from_images(&images);
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{t}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unbalanced `(` in `{t}`")))?;
            let inner = &open[..close];
            if !inner.trim().is_empty() {
                cycles.push(parse_points(inner)?);
            }
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs)
    }
}

fn parse_points(body: &str) -> Result<Vec<usize>> {
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(format!("bad point `{s}`")))
        })
        .collect()
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product. Panics on degree mismatch; use
    /// [`Permutation::compose`] for a checked version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_one_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[2, 1, 3]).compose(&p(&[2, 1, 3])).unwrap(), p(&[1, 2, 3]));
        assert_eq!(p(&[2, 3, 1]).compose(&p(&[2, 1, 3])).unwrap(), p(&[1, 3, 2]));
        let x = p(&[3, 1, 2]);
        assert_eq!(x.compose(&Permutation::identity(3)).unwrap(), x);
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = p(&[1, 2]).compose(&p(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(p(&[2, 1, 3]).inverse(), p(&[2, 1, 3]));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn text_forms() {
        let x = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(x.to_cycle_string(), "(1,2,3)(4,5)");
        assert_eq!(x.to_one_line(), "[2,3,1,5,4]");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(Permutation::parse("()", 3).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse("(1, 2)(3 4)", 4).unwrap(), p(&[2, 1, 4, 3]));
        assert!(Permutation::parse("[2,1]", 3).is_err());
        assert!(Permutation::parse("(1,2", 3).is_err());
    }

    #[test]
    fn order_and_powers() {
        let x = Permutation::from_cycles(7, &[&[1, 2, 3], &[4, 5, 6, 7]]).unwrap();
        assert_eq!(x.order(), 12);
        assert!(x.pow(12).is_identity());
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(5), (1..5).fold(x.clone(), |acc, _| &acc * &x));
    }

    #[test]
    fn conjugation_matches_product() {
        let x = p(&[2, 3, 1, 4]);
        let g = p(&[4, 1, 2, 3]);
        assert_eq!(x.conjugate_by(&g), &(&g.inverse() * &x) * &g);
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    fn arb_triple(n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        let one = move || {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(&v).unwrap())
        };
        (one(), one(), one())
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_perm(50)) {
            let n = x.degree();
            prop_assert_eq!(Permutation::parse(&x.to_cycle_string(), n).unwrap(), x.clone());
            prop_assert_eq!(Permutation::parse(&x.to_one_line(), n).unwrap(), x);
        }

        #[test]
        fn group_laws((a, b, c) in arb_triple(9)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert!((&a.inverse() * &a).is_identity());
            prop_assert_eq!(a.pow(a.order() as i64 + 1), a);
        }
    }
}
