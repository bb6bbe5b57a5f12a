//! The projective plane PG(2,4), PSL(3,4) on its points, and the extension
//! by the unitary polarity acting on points and lines together.

use crate::construct::field::{Field, Matrix};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Homogeneous coordinates over GF(4), first non-zero coordinate equal to 1.
pub type ProjectivePoint = [u8; 3];

/// Points and lines of PG(2,4) with their incidence.
///
/// Points are numbered 1..=21 in increasing order of normalised coordinates.
/// Lines use the same coordinate list (a line `[a:b:c]` is the set of points
/// `w` with `a·w₁ + b·w₂ + c·w₃ = 0`) and are numbered 22..=42 in the
/// combined point-line action.
pub struct ProjectivePlane {
    field: Field,
    points: Vec<ProjectivePoint>,
    /// Sorted 0-based point indices on each line.
    lines: Vec<Vec<usize>>,
}

impl ProjectivePlane {
    pub fn new() -> Self {
        let field = Field::new(4).expect("GF(4)");
        let mut points = Vec::new();
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let v = [a, b, c];
                    if v != [0, 0, 0] && normalize(&field, v) == v {
                        points.push(v);
                    }
                }
            }
        }
        points.sort();
        let lines = points
            .iter()
            .map(|l| {
                (0..points.len())
                    .filter(|&i| dot(&field, l, &points[i]) == 0)
                    .collect::<Vec<_>>()
            })
            .collect();
        ProjectivePlane { field, points, lines }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// 0-based point indices on each line, in line order.
    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn point_index(&self, v: ProjectivePoint) -> usize {
        let n = normalize(&self.field, v);
        self.points.binary_search(&n).expect("normalised point")
    }

    fn line_index(&self, pts: &[usize]) -> usize {
        let mut sorted = pts.to_vec();
        sorted.sort_unstable();
        self.lines.iter().position(|l| *l == sorted).expect("image of a line is a line")
    }

    /// Point permutation (degree 21) induced by `v ↦ vA`.
    pub fn point_action(&self, a: &Matrix) -> Permutation {
        let images: Vec<usize> = self
            .points
            .iter()
            .map(|v| self.point_index(to_point(&a.apply(v, &self.field))) + 1)
            .collect();
        Permutation::from_images(&images).expect("invertible matrix")
    }

    /// Degree-42 permutation: points as `point_action`, lines by the induced
    /// map on point sets.
    pub fn point_line_action(&self, a: &Matrix) -> Permutation {
        let on_points = self.point_action(a);
        let mut images: Vec<usize> = on_points.images();
        for line in &self.lines {
            let moved: Vec<usize> = line.iter().map(|&p| on_points.image(p + 1) - 1).collect();
            images.push(self.line_index(&moved) + 22);
        }
        Permutation::from_images(&images).expect("collineation")
    }

    /// The polarity `[v] ↦ [v̄]ᵀ`, `[ℓ]ᵀ ↦ [ℓ̄]` where the bar is the
    /// Frobenius of GF(4), as an involution of the 42 points and lines.
    pub fn unitary_polarity(&self) -> Permutation {
        self.polarity(true)
    }

    /// The polarity `[v] ↦ [v]ᵀ` of the symmetric form `Σ vᵢwᵢ`; conjugation
    /// by it is the inverse-transpose automorphism.
    pub fn orthogonal_polarity(&self) -> Permutation {
        self.polarity(false)
    }

    fn polarity(&self, twisted: bool) -> Permutation {
        let mut images = vec![0usize; 42];
        for (i, v) in self.points.iter().enumerate() {
            let w = if twisted { self.bar(v) } else { *v };
            let target = self.point_index(w);
            images[i] = target + 22;
            images[21 + i] = target + 1;
        }
        Permutation::from_images(&images).expect("polarity is a bijection")
    }

    /// The collineation `[v] ↦ [v̄]` on points and lines (degree 42).
    pub fn frobenius_collineation(&self) -> Permutation {
        let mut images = vec![0usize; 42];
        for (i, v) in self.points.iter().enumerate() {
            let target = self.point_index(self.bar(v));
            images[i] = target + 1;
            images[21 + i] = target + 22;
        }
        Permutation::from_images(&images).expect("collineation is a bijection")
    }

    fn bar(&self, v: &ProjectivePoint) -> ProjectivePoint {
        let f = &self.field;
        [f.frobenius(v[0]), f.frobenius(v[1]), f.frobenius(v[2])]
    }
}

impl Default for ProjectivePlane {
    fn default() -> Self {
        Self::new()
    }
}

fn to_point(v: &[u8]) -> ProjectivePoint {
    [v[0], v[1], v[2]]
}

fn dot(f: &Field, a: &ProjectivePoint, b: &ProjectivePoint) -> u8 {
    (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

fn normalize(f: &Field, v: ProjectivePoint) -> ProjectivePoint {
    let lead = v.iter().copied().find(|&x| x != 0).expect("non-zero vector");
    let inv = f.inv(lead).unwrap();
    [f.mul(v[0], inv), f.mul(v[1], inv), f.mul(v[2], inv)]
}

/// Elementary transvections `I + λE_ij` of SL(3,4), `λ ∈ {1, ω}`.
pub fn sl34_transvections() -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                for lambda in [1u8, 2u8] {
                    out.push(Matrix::transvection(3, i, j, lambda));
                }
            }
        }
    }
    out
}

/// Drops generators that are not needed to reach `target` order.
pub(crate) fn prune_generators(degree: usize, gens: Vec<Permutation>, target: u128) -> Vec<Permutation> {
    let mut kept = gens;
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        let ok = !trial.is_empty()
            && PermGroup::new(degree, trial.clone()).map(|g| g.order() == target).unwrap_or(false);
        if ok {
            kept = trial;
        } else {
            i += 1;
        }
    }
    kept
}

pub const PSL34_ORDER: u128 = 20160;

/// PSL(3,4) acting on the 21 points of PG(2,4).
pub fn psl_3_4() -> Result<PermGroup> {
    let plane = ProjectivePlane::new();
    let gens: Vec<Permutation> = sl34_transvections().iter().map(|m| plane.point_action(m)).collect();
    let gens = prune_generators(21, gens, PSL34_ORDER);
    let g = PermGroup::new(21, gens)?;
    if g.order() != PSL34_ORDER {
        return Err(Error::Construction(format!("PSL(3,4) has order {}", g.order())));
    }
    Ok(g)
}

/// PSL(3,4) acting on points and lines (degree 42).
pub fn psl_3_4_point_line() -> Result<PermGroup> {
    let plane = ProjectivePlane::new();
    let gens: Vec<Permutation> =
        sl34_transvections().iter().map(|m| plane.point_line_action(m)).collect();
    let gens = prune_generators(42, gens, PSL34_ORDER);
    let g = PermGroup::new(42, gens)?;
    if g.order() != PSL34_ORDER {
        return Err(Error::Construction(format!("point-line PSL(3,4) has order {}", g.order())));
    }
    Ok(g)
}

/// PSL(3,4) extended by the unitary polarity, on the 42 points and lines.
pub fn l3_4_beta() -> Result<PermGroup> {
    extend_psl_3_4(ProjectivePlane::new().unitary_polarity())
}

/// PSL(3,4) extended by the Frobenius collineation (degree 42).
pub fn l3_4_field_extension() -> Result<PermGroup> {
    extend_psl_3_4(ProjectivePlane::new().frobenius_collineation())
}

/// PSL(3,4) extended by the orthogonal polarity (degree 42).
pub fn l3_4_graph_extension() -> Result<PermGroup> {
    extend_psl_3_4(ProjectivePlane::new().orthogonal_polarity())
}

/// `⟨PSL(3,4), t⟩` for an involution `t` normalising the point-line action.
fn extend_psl_3_4(t: Permutation) -> Result<PermGroup> {
    let base = psl_3_4_point_line()?;
    if !(&t * &t).is_identity() {
        return Err(Error::Construction("extending element is not an involution".into()));
    }
    for s in base.generators() {
        if !base.contains(&s.conjugate_by(&t))? {
            return Err(Error::Construction("extending element does not normalise PSL(3,4)".into()));
        }
    }
    if base.contains(&t)? {
        return Err(Error::Construction("extending element lies in PSL(3,4)".into()));
    }
    let mut gens = base.generators().to_vec();
    gens.push(t);
    let g = PermGroup::new(42, gens)?;
    if g.order() != 2 * PSL34_ORDER {
        return Err(Error::Construction(format!("extension has order {}", g.order())));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_structure() {
        let plane = ProjectivePlane::new();
        assert_eq!(plane.points().len(), 21);
        assert_eq!(plane.lines().len(), 21);
        assert!(plane.lines().iter().all(|l| l.len() == 5));
        for p in 0..21 {
            assert_eq!(plane.lines().iter().filter(|l| l.contains(&p)).count(), 5);
        }
        for p in 0..21 {
            for q in p + 1..21 {
                let common = plane.lines().iter().filter(|l| l.contains(&p) && l.contains(&q)).count();
                assert_eq!(common, 1, "points {p} {q}");
            }
        }
    }

    #[test]
    fn matrix_action_is_homomorphism() {
        let plane = ProjectivePlane::new();
        let f = plane.field().clone();
        let gens = sl34_transvections();
        for a in &gens {
            for b in &gens {
                let ab = a.mul(b, &f);
                assert_eq!(plane.point_line_action(&ab), &plane.point_line_action(a) * &plane.point_line_action(b));
            }
        }
    }

    #[test]
    fn polarity_preserves_incidence() {
        let plane = ProjectivePlane::new();
        let beta = plane.unitary_polarity();
        for (li, line) in plane.lines().iter().enumerate() {
            for &p in line {
                // p on line li  ⇒  β(line) (a point) lies on β(p) (a line)
                let bp = beta.image(p + 1) - 22;
                let bl = beta.image(li + 22) - 1;
                assert!(plane.lines()[bp].contains(&bl));
            }
        }
    }

    #[test]
    fn psl_orders() {
        let g = psl_3_4().unwrap();
        assert_eq!(g.degree(), 21);
        assert_eq!(g.order(), 20160);
        let h = l3_4_beta().unwrap();
        assert_eq!(h.order(), 40320);
    }
}
