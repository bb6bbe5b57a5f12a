//! Constructors for every named group, as permutation groups.

pub mod field;
pub mod geometry;
pub mod groupfile;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use field::{Field, Matrix};

pub use geometry::{
    l3_4_beta, l3_4_field_extension, l3_4_graph_extension, psl_3_4, psl_3_4_point_line,
    ProjectivePlane,
};
pub use groupfile::{parse_group_file, write_group_file};

fn cycle(n: usize, pts: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[pts]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric(0)".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[1, 2]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(1..=n).collect::<Vec<_>>()));
    }
    PermGroup::new(n, gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("alternating(0)".into()));
    }
    let gens = (3..=n).map(|i| cycle(n, &[1, 2, i])).collect();
    PermGroup::new(n, gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic(0)".into()));
    }
    PermGroup::new(n, vec![cycle(n, &(1..=n).collect::<Vec<_>>())])
}

/// Dihedral group of order `2n`. For `n ≥ 3` it acts on the `n` vertices of
/// a polygon; `n = 1, 2` give C₂ and C₂ × C₂.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidParameter("dihedral(0)".into())),
        1 => cyclic(2),
        2 => PermGroup::new(4, vec![cycle(4, &[1, 2]), cycle(4, &[3, 4])]),
        _ => {
            let rotation = cycle(n, &(1..=n).collect::<Vec<_>>());
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
            PermGroup::new(n, vec![rotation, Permutation::from_images(&reflection)?])
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(C_p)^k` as `k` disjoint `p`-cycles on `k·p` points.
pub fn elementary_abelian(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) || k == 0 {
        return Err(Error::InvalidParameter(format!("elementary_abelian({p}, {k})")));
    }
    let n = p * k;
    let gens = (0..k).map(|i| cycle(n, &(i * p + 1..=(i + 1) * p).collect::<Vec<_>>())).collect();
    PermGroup::new(n, gens)
}

/// Right regular representation of `⟨r, s | r^m, s r = r^c s, s² = r^e⟩`
/// (order `2m`), elements `r^i s^j` numbered `i + j·m + 1`. Returns the
/// images of `r` and `s`.
fn metacyclic_regular(m: usize, c: usize, e: usize) -> (Permutation, Permutation) {
    let n = 2 * m;
    let idx = |i: usize, j: usize| (i % m) + j * m + 1;
    let mut r = vec![0; n];
    let mut s = vec![0; n];
    for i in 0..m {
        r[idx(i, 0) - 1] = idx(i + 1, 0);
        r[idx(i, 1) - 1] = idx(i + c, 1);
        s[idx(i, 0) - 1] = idx(i, 1);
        s[idx(i, 1) - 1] = idx(i + e, 0);
    }
    (Permutation::from_images(&r).unwrap(), Permutation::from_images(&s).unwrap())
}

fn power_of_two_exponent(order: usize) -> Result<u32> {
    if order.is_power_of_two() && order >= 8 {
        Ok(order.trailing_zeros())
    } else {
        Err(Error::InvalidParameter(format!("order {order} is not 2^k with k ≥ 3")))
    }
}

/// Generalised quaternion group of order `2^k` (k ≥ 3), regular action.
pub fn generalized_quaternion(order: usize) -> Result<PermGroup> {
    power_of_two_exponent(order)?;
    let m = order / 2;
    let (r, s) = metacyclic_regular(m, m - 1, m / 2);
    PermGroup::new(order, vec![r, s])
}

/// Semidihedral group of order `2^k` (k ≥ 4 for a genuinely semidihedral
/// group), regular action, with `s r s = r^(m/2 - 1)`.
pub fn semidihedral(order: usize) -> Result<PermGroup> {
    let k = power_of_two_exponent(order)?;
    if k < 4 {
        return Err(Error::InvalidParameter("semidihedral groups need order ≥ 16".into()));
    }
    let m = order / 2;
    let c = m / 2 - 1;
    let (r, s) = metacyclic_regular(m, c, 0);
    if !r.pow(m as i64).is_identity()
        || !(&s * &s).is_identity()
        || &(&s * &r) * &s != r.pow(c as i64)
    {
        return Err(Error::Construction("semidihedral relations fail".into()));
    }
    PermGroup::new(order, vec![r, s])
}

/// `G × H` acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let (a, b) = (g.degree(), h.degree());
    let n = a + b;
    let mut gens = Vec::new();
    for x in g.generators() {
        let mut images = x.images();
        images.extend(a + 1..=n);
        gens.push(Permutation::from_images(&images)?);
    }
    for y in h.generators() {
        let mut images: Vec<usize> = (1..=a).collect();
        images.extend(y.images().into_iter().map(|p| p + a));
        gens.push(Permutation::from_images(&images)?);
    }
    PermGroup::new(n, gens)
}

/// Nonzero row vectors of GF(q)², in lexicographic order.
fn nonzero_vectors(f: &Field) -> Vec<Vec<u8>> {
    let q = f.order();
    (0..q).flat_map(|a| (0..q).map(move |b| vec![a, b])).filter(|v| v != &[0, 0]).collect()
}

/// Permutation of the nonzero vectors induced by `v ↦ vA`.
pub fn vector_action(f: &Field, a: &Matrix) -> Permutation {
    let vs = nonzero_vectors(f);
    let images: Vec<usize> = vs
        .iter()
        .map(|v| vs.iter().position(|w| *w == a.apply(v, f)).unwrap() + 1)
        .collect();
    Permutation::from_images(&images).expect("invertible matrix")
}

fn matrix_group(q: u8, matrices: &[Matrix], expected: u128, name: &str) -> Result<PermGroup> {
    let f = Field::new(q)?;
    for m in matrices {
        if m.det(&f) == 0 {
            return Err(Error::Construction(format!("{name}: singular generator")));
        }
    }
    let n = (q as usize).pow(2) - 1;
    let g = PermGroup::new(n, matrices.iter().map(|m| vector_action(&f, m)).collect())?;
    if g.order() != expected {
        return Err(Error::Construction(format!("{name} has order {}", g.order())));
    }
    Ok(g)
}

/// GL(2,3) on the 8 nonzero vectors of GF(3)².
pub fn gl_2_3() -> Result<PermGroup> {
    let gens = [
        Matrix::new(&[&[1, 1], &[0, 1]]),
        Matrix::new(&[&[1, 0], &[1, 1]]),
        Matrix::new(&[&[2, 0], &[0, 1]]),
    ];
    matrix_group(3, &gens, 48, "GL(2,3)")
}

/// SL(2,5) on the 24 nonzero vectors of GF(5)².
pub fn sl_2_5() -> Result<PermGroup> {
    let gens = [Matrix::new(&[&[1, 1], &[0, 1]]), Matrix::new(&[&[1, 0], &[1, 1]])];
    matrix_group(5, &gens, 120, "SL(2,5)")
}

/// Generators of the quaternion complement in GL(2,3).
pub fn w_complement_matrices() -> [Matrix; 2] {
    [Matrix::new(&[&[0, 2], &[1, 0]]), Matrix::new(&[&[1, 1], &[1, 2]])]
}

/// Index (0-based) of a vector of GF(3)² in the 9-point affine plane.
fn affine_index(v: &[u8]) -> usize {
    v[0] as usize * 3 + v[1] as usize
}

fn affine_perm(map: impl Fn(&[u8]) -> Vec<u8>) -> Permutation {
    let images: Vec<usize> = (0..9u8)
        .map(|i| affine_index(&map(&[i / 3, i % 3])) + 1)
        .collect();
    Permutation::from_images(&images).expect("affine bijection")
}

/// The translations `v ↦ v + (1,0)` and `v ↦ v + (0,1)` of GF(3)².
pub fn w_kernel_generators() -> Vec<Permutation> {
    let f = Field::new(3).unwrap();
    [[1u8, 0u8], [0, 1]]
        .iter()
        .map(|t| affine_perm(|v| vec![f.add(v[0], t[0]), f.add(v[1], t[1])]))
        .collect()
}

/// The complement generators as permutations of the 9 affine points.
pub fn w_complement_generators() -> Vec<Permutation> {
    let f = Field::new(3).unwrap();
    w_complement_matrices().iter().map(|m| affine_perm(|v| m.apply(v, &f))).collect()
}

/// The Frobenius group `3² : Q₈` of order 72 acting on GF(3)².
pub fn frobenius_w() -> Result<PermGroup> {
    let f = Field::new(3)?;
    let [a, b] = w_complement_matrices();
    let id = Matrix::identity(2);
    let a_inv = a.pow(3, &f);
    let b_inv = b.pow(3, &f);
    let q8_ok = a.pow(4, &f) == id
        && a.pow(2, &f) == b.pow(2, &f)
        && b_inv.mul(&a, &f).mul(&b, &f) == a_inv;
    if !q8_ok {
        return Err(Error::Construction("complement matrices violate the Q8 relations".into()));
    }
    let mut gens = w_kernel_generators();
    gens.extend(w_complement_generators());
    let g = PermGroup::new(9, gens)?;
    if g.order() != 72 {
        return Err(Error::Construction(format!("W has order {}", g.order())));
    }
    Ok(g)
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] =
    &["s3", "s5", "a5", "a6", "q8", "sd16", "gl23", "sl25", "w", "l34", "l34b"];

/// Resolves a builtin group name: one of [`BUILTIN_NAMES`] or a
/// parameterised family `sym:<n>`, `alt:<n>`, `cyc:<n>`, `dih:<n>`,
/// `ea:<p>:<k>`, `genq:<2^k>`, `sd:<2^k>`.
pub fn builtin(name: &str) -> Result<PermGroup> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::InvalidParameter(format!("bad number `{s}` in `{name}`")))
    };
    match parts.as_slice() {
        ["s3"] => symmetric(3),
        ["s5"] => symmetric(5),
        ["a5"] => alternating(5),
        ["a6"] => alternating(6),
        ["q8"] => generalized_quaternion(8),
        ["sd16"] => semidihedral(16),
        ["gl23"] => gl_2_3(),
        ["sl25"] => sl_2_5(),
        ["w"] => frobenius_w(),
        ["l34"] => psl_3_4(),
        ["l34b"] => l3_4_beta(),
        ["sym", n] => symmetric(num(n)?),
        ["alt", n] => alternating(num(n)?),
        ["cyc", n] => cyclic(num(n)?),
        ["dih", n] => dihedral(num(n)?),
        ["ea", p, k] => elementary_abelian(num(p)?, num(k)?),
        ["genq", n] => generalized_quaternion(num(n)?),
        ["sd", n] => semidihedral(num(n)?),
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

/// Smallest prime factor helper shared by the analysis code.
pub(crate) fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(3).unwrap().degree(), 3);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(2).unwrap().order(), 4);
        let ea = elementary_abelian(3, 2).unwrap();
        assert_eq!((ea.order(), ea.degree()), (9, 6));
        assert!(elementary_abelian(4, 2).is_err());
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn quaternion_and_semidihedral() {
        let q8 = generalized_quaternion(8).unwrap();
        let involutions = q8.elements().unwrap().iter().filter(|x| x.order() == 2).count();
        assert_eq!((q8.order(), involutions), (8, 1));
        let q16 = generalized_quaternion(16).unwrap();
        let els = q16.elements().unwrap();
        assert_eq!(els.iter().filter(|x| x.order() == 2).count(), 1);
        assert_eq!(els.iter().map(|x| x.order()).max(), Some(8));
        let sd = semidihedral(16).unwrap();
        assert_eq!(sd.order(), 16);
        assert_eq!(sd.elements().unwrap().iter().map(|x| x.order()).max(), Some(8));
        assert!(generalized_quaternion(4).is_err());
        assert!(semidihedral(12).is_err());
    }

    #[test]
    fn products() {
        let c2 = cyclic(2).unwrap();
        let c3 = cyclic(3).unwrap();
        let p = direct_product(&c2, &c3).unwrap();
        assert_eq!((p.order(), p.degree()), (6, 5));
        assert!(p.is_abelian());
        assert_eq!(direct_product(&symmetric(3).unwrap(), &c2).unwrap().order(), 12);
    }

    #[test]
    fn matrix_groups() {
        let gl = gl_2_3().unwrap();
        assert_eq!((gl.order(), gl.degree()), (48, 8));
        let sl = sl_2_5().unwrap();
        assert_eq!((sl.order(), sl.degree()), (120, 24));
        let involutions: Vec<_> = sl.elements().unwrap().iter().filter(|x| x.order() == 2).cloned().collect();
        assert_eq!(involutions.len(), 1);
        // -I swaps v and -v: fixed-point-free
        assert!(involutions[0].support().len() == 24);
    }

    #[test]
    fn vector_action_is_homomorphism() {
        let f = Field::new(3).unwrap();
        let ms = [
            Matrix::new(&[&[1, 1], &[0, 1]]),
            Matrix::new(&[&[2, 0], &[0, 1]]),
            Matrix::new(&[&[0, 2], &[1, 0]]),
        ];
        for a in &ms {
            for b in &ms {
                assert_eq!(vector_action(&f, &a.mul(b, &f)), &vector_action(&f, a) * &vector_action(&f, b));
            }
        }
    }

    #[test]
    fn w_is_frobenius() {
        let w = frobenius_w().unwrap();
        assert_eq!((w.order(), w.degree()), (72, 9));
        let complement = PermGroup::new(9, w_complement_generators()).unwrap();
        assert_eq!(complement.order(), 8);
        let zero = 1; // vector (0,0) is point 1
        for h in complement.elements().unwrap().iter().filter(|h| !h.is_identity()) {
            for v in 1..=9 {
                assert_eq!(h.image(v) == v, v == zero, "{h} fixes {v}");
            }
        }
    }

    #[test]
    fn builtin_names_resolve() {
        for name in BUILTIN_NAMES.iter().filter(|n| !n.starts_with("l34")) {
            builtin(name).unwrap();
        }
        assert_eq!(builtin("ea:2:3").unwrap().order(), 8);
        assert_eq!(builtin("genq:16").unwrap().order(), 16);
        assert!(matches!(builtin("nope"), Err(Error::UnknownGroup(_))));
        assert!(builtin("sym:x").is_err());
    }
}
