//! Burnside–Dixon character tables.
//!
//! Central characters are the common eigenvectors of the class matrices
//! `(M_i)_{jk} = a_{ijk}`. Working over `GF(p)` with `p ≡ 1 (mod e)` every
//! eigenvalue lies in the prime field, so the common eigenspaces can be split
//! by plain linear algebra. Degrees follow from the norm of the central
//! character, and the values lift to `Z[ζ_e]` through eigenvalue
//! multiplicities of `ρ(g)`.

use std::fmt::Write as _;

use num_integer::{Integer, Roots};
use serde::Serialize;

use super::cyclotomic::{CyclotomicInteger, Evaluator};
use super::modp::{prime_one_mod, Zp};
use crate::analysis::{class_data, power_map, ClassData, ConjugacyClass};
use crate::error::{Error, Result};
use crate::group::PermGroup;

pub const DEFAULT_CHARACTER_CAP: usize = 2000;
/// Search bound for the splitting prime.
pub const PRIME_SEARCH_BOUND: u64 = 1_000_000;

/// Class multiplication coefficients: `a_{ijk}` counts pairs
/// `(x, y) ∈ C_i × C_j` with `xy = z` for a fixed `z ∈ C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassConstants {
    r: usize,
    data: Vec<u32>,
}

impl ClassConstants {
    pub fn class_count(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

fn check_cap(g: &PermGroup, cap: usize) -> Result<()> {
    if g.order() > cap as u128 {
        return Err(Error::TooLarge { order: g.order(), cap });
    }
    Ok(())
}

pub fn class_constants(g: &PermGroup) -> Result<ClassConstants> {
    class_constants_with_cap(g, DEFAULT_CHARACTER_CAP)
}

pub fn class_constants_with_cap(g: &PermGroup, cap: usize) -> Result<ClassConstants> {
    check_cap(g, cap)?;
    let data = class_data(g)?;
    let table = g.element_table()?;
    table.prepare_multiplication();
    Ok(constants_from(&data, |a, b| table.mul(a, b), |a| table.inverse(a)))
}

fn constants_from(
    data: &ClassData,
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
) -> ClassConstants {
    let r = data.len();
    let mut out = vec![0u32; r * r * r];
    for k in 0..r {
        let z = data.members[k][0] as usize;
        for x in 0..data.group_order {
            // y = x⁻¹ z
            let y = mul(inv(x), z);
            let i = data.class_of[x] as usize;
            let j = data.class_of[y] as usize;
            out[(i * r + j) * r + k] += 1;
        }
    }
    ClassConstants { r, data: out }
}

/// One irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Character {
    pub degree: u64,
    /// Values in class order.
    pub values: Vec<CyclotomicInteger>,
}

impl Character {
    pub fn is_rational(&self) -> bool {
        self.values.iter().all(CyclotomicInteger::is_rational)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub classes: Vec<ConjugacyClass>,
    /// Group exponent, the conductor of every value.
    pub exponent: u64,
    /// Prime used for the modular computation.
    pub prime: u64,
    pub rows: Vec<Character>,
    /// Rationality of each class under the power-map criterion.
    pub rational_classes: Vec<bool>,
}

pub fn dixon_character_table(g: &PermGroup) -> Result<CharacterTable> {
    dixon_character_table_with_cap(g, DEFAULT_CHARACTER_CAP)
}

pub fn dixon_character_table_with_cap(g: &PermGroup, cap: usize) -> Result<CharacterTable> {
    let consts = class_constants_with_cap(g, cap)?;
    let data = class_data(g)?;
    let table = g.element_table()?;
    let order = data.group_order as u64;
    let r = data.len();
    let exponent = data.classes.iter().fold(1u64, |acc, c| acc.lcm(&c.rep_order));
    let lower = (4 * order).sqrt();
    let p = prime_one_mod(exponent, lower, PRIME_SEARCH_BOUND).ok_or(Error::NoSuitablePrime {
        exponent,
        lower,
        bound: PRIME_SEARCH_BOUND,
    })?;
    let f = Zp::new(p);

    let spaces = split_spaces(f, &consts)?;
    let sizes: Vec<u64> = data.classes.iter().map(|c| c.size as u64).collect();
    let inverse: Vec<usize> = (0..r).map(|k| data.inverse_class(table, k)).collect();
    // powers[k][t] = class of rep(k)^t
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|k| (0..exponent).map(|t| data.power_class(table, k, t as i64)).collect())
        .collect();
    let z = f.root_of_unity(exponent);
    let z_inv = f.inv(z);
    let e_inv = f.inv(exponent % p);
    let e = exponent as usize;

    let mut rows = Vec::with_capacity(r);
    for v in spaces {
        let v0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, v0)).collect();
        let norm = (0..r).fold(0, |acc, k| {
            f.add(acc, f.mul(f.mul(omega[k], omega[inverse[k]]), f.inv(sizes[k] % p)))
        });
        let target = f.mul(order % p, f.inv(norm));
        let degree = (1..=order.sqrt())
            .find(|&d| order.is_multiple_of(d) && f.mul(d, d) == target)
            .ok_or_else(|| Error::Construction("no degree matches a central character".into()))?;
        let modp: Vec<u64> =
            (0..r).map(|k| f.mul(f.mul(omega[k], degree), f.inv(sizes[k] % p))).collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let mut coeffs = vec![0i64; e];
            for (l, c) in coeffs.iter_mut().enumerate() {
                // m_l = e⁻¹ Σ_t χ(g^t) z^{-lt}
                let step = f.pow(z_inv, l as u64);
                let mut w = 1;
                let mut acc = 0;
                for t in 0..e {
                    acc = f.add(acc, f.mul(modp[powers[k][t]], w));
                    w = f.mul(w, step);
                }
                let m = f.mul(acc, e_inv);
                if m > degree {
                    return Err(Error::Construction(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                *c = m as i64;
            }
            values.push(CyclotomicInteger::from_coeffs(coeffs));
        }
        rows.push(Character { degree, values });
    }
    rows.sort();

    let pm = power_map(g)?;
    Ok(CharacterTable {
        classes: data.classes.clone(),
        exponent,
        prime: p,
        rows,
        rational_classes: (0..r).map(|k| pm.is_rational_class(k)).collect(),
    })
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(f: Zp, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, sel);
        let inv = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != row && m[i][col] != 0 {
                let c = m[i][col];
                for j in 0..cols {
                    let t = f.mul(c, m[row][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    pivots
}

fn nullspace(f: Zp, mut m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let pivots = rref(f, &mut m);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; n];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.sub(0, m[row][free]);
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial (low to high coefficients) by reduction to
/// Hessenberg form.
fn charpoly(f: Zp, mut h: Vec<Vec<u64>>) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (x - h_kk) p_k
        let prev = &polys[k];
        let mut next = vec![0; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[k][k], c));
        }
        let mut prod = 1;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let c = f.mul(prod, h[i][k]);
            for (d, &pc) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(c, pc));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(f: Zp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Splits `GF(p)^r` into the common eigenlines of all class matrices,
/// taking the matrices in class order.
fn split_spaces(f: Zp, a: &ClassConstants) -> Result<Vec<Vec<u64>>> {
    let r = a.class_count();
    // Each space: basis rows in reduced echelon form plus pivots.
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![(
        (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect(),
        (0..r).collect(),
    )];
    for i in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let apply = |v: &[u64]| -> Vec<u64> {
            (0..r)
                .map(|j| {
                    (0..r).fold(0, |acc, k| f.add(acc, f.mul(a.get(i, j, k) as u64 % f.p, v[k])))
                })
                .collect()
        };
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(b)).collect();
            // restricted[t][s] = coefficient of basis t in M_i b_s
            let restricted: Vec<Vec<u64>> =
                (0..d).map(|t| (0..d).map(|s| images[s][pivots[t]]).collect()).collect();
            let poly = charpoly(f, restricted.clone());
            let roots: Vec<u64> = (0..f.p).filter(|&x| eval_poly(f, &poly, x) == 0).collect();
            let mut found = 0;
            let mut parts = Vec::new();
            for lambda in roots {
                let mut shifted = restricted.clone();
                for (t, row) in shifted.iter_mut().enumerate() {
                    row[t] = f.sub(row[t], lambda);
                }
                let null = nullspace(f, shifted);
                found += null.len();
                let mut vecs: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|x| {
                                (0..d).fold(0, |acc, t| f.add(acc, f.mul(c[t], basis[t][x])))
                            })
                            .collect()
                    })
                    .collect();
                let piv = rref(f, &mut vecs);
                parts.push((vecs, piv));
            }
            if found != d {
                return Err(Error::Construction(format!(
                    "class matrix {i} is not diagonalisable modulo {}",
                    f.p
                )));
            }
            next.extend(parts);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Construction("common eigenspaces are not one-dimensional".into()));
    }
    Ok(spaces.into_iter().map(|(mut b, _)| b.pop().unwrap()).collect())
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|c| c.degree).collect()
    }

    pub fn group_order(&self) -> u64 {
        self.classes.iter().map(|c| c.size as u64).sum()
    }

    fn evaluator(&self, mass: u64) -> Evaluator {
        Evaluator::new(self.exponent as usize, mass)
    }

    /// `Σ_j |C_j| χ(g_j) conj(ψ(g_j)) = |G| [χ = ψ]` for all pairs, exactly.
    pub fn rows_orthogonal(&self) -> bool {
        let n = self.group_order();
        let ev = self.evaluator(n * n + n);
        let f = ev.field();
        let images: Vec<Vec<Vec<u64>>> =
            self.rows.iter().map(|c| c.values.iter().map(|v| ev.eval(v)).collect()).collect();
        let conj: Vec<Vec<Vec<u64>>> = self
            .rows
            .iter()
            .map(|c| c.values.iter().map(|v| ev.eval(&v.conj())).collect())
            .collect();
        let embeddings = images.first().map_or(0, |row| row[0].len());
        (0..self.rows.len()).all(|a| {
            (0..self.rows.len()).all(|b| {
                let want = if a == b { n % f.p } else { 0 };
                (0..embeddings).all(|s| {
                    let sum = self.classes.iter().enumerate().fold(0, |acc, (j, c)| {
                        let t = f.mul(images[a][j][s], conj[b][j][s]);
                        f.add(acc, f.mul(t, c.size as u64))
                    });
                    sum == want
                })
            })
        })
    }

    /// `Σ_χ χ(g_i) conj(χ(g_j)) = |C_G(g_i)| [i = j]` for all pairs, exactly.
    pub fn columns_orthogonal(&self) -> bool {
        let n = self.group_order();
        let ev = self.evaluator(2 * n);
        let f = ev.field();
        let r = self.classes.len();
        let images: Vec<Vec<Vec<u64>>> =
            self.rows.iter().map(|c| c.values.iter().map(|v| ev.eval(v)).collect()).collect();
        let conj: Vec<Vec<Vec<u64>>> = self
            .rows
            .iter()
            .map(|c| c.values.iter().map(|v| ev.eval(&v.conj())).collect())
            .collect();
        let embeddings = images.first().map_or(0, |row| row[0].len());
        (0..r).all(|i| {
            (0..r).all(|j| {
                let want = if i == j { (n / self.classes[i].size as u64) % f.p } else { 0 };
                (0..embeddings).all(|s| {
                    let sum = (0..self.rows.len())
                        .fold(0, |acc, x| f.add(acc, f.mul(images[x][i][s], conj[x][j][s])));
                    sum == want
                })
            })
        })
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut head = vec!["class".to_string()];
        head.extend((0..self.classes.len()).map(|k| (k + 1).to_string()));
        cells.push(head);
        let mut size = vec!["size".to_string()];
        size.extend(self.classes.iter().map(|c| c.size.to_string()));
        cells.push(size);
        let mut ord = vec!["order".to_string()];
        ord.extend(self.classes.iter().map(|c| c.rep_order.to_string()));
        cells.push(ord);
        for (x, row) in self.rows.iter().enumerate() {
            let mut line = vec![format!("X.{}", x + 1)];
            line.extend(row.values.iter().map(|v| v.to_string()));
            cells.push(line);
        }
        let width: Vec<usize> = (0..cells[0].len())
            .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for (i, row) in cells.iter().enumerate() {
            let line: Vec<String> =
                row.iter().zip(&width).map(|(s, &w)| format!("{s:>w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
            if i == 2 {
                let total = width.iter().sum::<usize>() + 2 * width.len().saturating_sub(1);
                let _ = writeln!(out, "{}", "-".repeat(total));
            }
        }
        out
    }
}

/// `(rational characters, rational classes)`. Classical theory says the
/// two numbers agree.
pub fn rationality_counts(table: &CharacterTable) -> (usize, usize) {
    (
        table.rows.iter().filter(|c| c.is_rational()).count(),
        table.rational_classes.iter().filter(|&&b| b).count(),
    )
}
