//! The regular fiber as a ribbon surface: one 0-handle (disk, or annulus
//! stored as a disk plus a distinguished handle) with untwisted 1-handles
//! attached along a cyclic boundary word, plus the curves living on it.

use crate::matrix::IntMatrix;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiberError {
    #[error("label {0} appears {1} times in the boundary word, expected exactly 2")]
    BadWord(usize, usize),
    #[error("annulus base requires the distinguished handle 0 in the word")]
    MissingCoreHandle,
    #[error("curve does not live on this fiber (labels {0:?})")]
    ForeignCurve(Vec<usize>),
    #[error("curve `{0}` carries no embedded representative")]
    NoEmbedding(String),
    #[error("feet of handles {0} and {1} are not adjacent in the boundary word")]
    FeetNotAdjacent(usize, usize),
    #[error("cannot slide a foot over its own handle")]
    SelfSlide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiberBase {
    Disk,
    /// Annulus `S^1 x D^1`, realized as the disk plus handle label 0.
    Annulus,
}

/// Which end of a 1-handle a foot belongs to. Handle cores are oriented
/// from their top foot to their bottom foot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum End {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Foot {
    pub label: usize,
    pub end: End,
}

/// Disk with `k` untwisted bands given by a cyclic boundary word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonFiber {
    base: FiberBase,
    word: Vec<Foot>,
    /// Sorted distinct labels; index in this list = homology basis index.
    labels: Vec<usize>,
}

impl RibbonFiber {
    /// Build a fiber from a plain label word; the first occurrence of each
    /// label is taken as the top foot of its handle.
    pub fn from_boundary_word(word: &[usize], base: FiberBase) -> Result<Self, FiberError> {
        let mut seen: Vec<usize> = Vec::new();
        let feet = word
            .iter()
            .map(|&label| {
                let end = if seen.contains(&label) {
                    End::Bottom
                } else {
                    seen.push(label);
                    End::Top
                };
                Foot { label, end }
            })
            .collect();
        Self::from_feet(feet, base)
    }

    pub fn from_feet(word: Vec<Foot>, base: FiberBase) -> Result<Self, FiberError> {
        let mut labels: Vec<usize> = word.iter().map(|f| f.label).collect();
        labels.sort_unstable();
        labels.dedup();
        for &l in &labels {
            let count = word.iter().filter(|f| f.label == l).count();
            if count != 2 {
                return Err(FiberError::BadWord(l, count));
            }
        }
        if base == FiberBase::Annulus && !labels.contains(&0) {
            return Err(FiberError::MissingCoreHandle);
        }
        Ok(RibbonFiber { base, word, labels })
    }

    pub fn base(&self) -> FiberBase {
        self.base
    }

    pub fn word(&self) -> &[Foot] {
        &self.word
    }

    pub fn label_word(&self) -> Vec<usize> {
        self.word.iter().map(|f| f.label).collect()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn handle_count(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_index(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.handle_count() as i64
    }

    /// Number of boundary circles, by tracing the boundary of the disk
    /// with bands: from foot position `p`, the boundary continues past the
    /// partner foot of the same handle.
    pub fn boundary_components(&self) -> usize {
        let m = self.word.len();
        if m == 0 {
            return 1;
        }
        let partner = self.partner_table();
        let mut seen = vec![false; m];
        let mut count = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = (partner[p] + 1) % m;
            }
        }
        count
    }

    fn partner_table(&self) -> Vec<usize> {
        let m = self.word.len();
        let mut partner = vec![usize::MAX; m];
        for i in 0..m {
            for j in 0..m {
                if i != j && self.word[i].label == self.word[j].label {
                    partner[i] = j;
                }
            }
        }
        partner
    }

    pub fn genus(&self) -> i64 {
        let chi = self.euler_characteristic();
        let b = self.boundary_components() as i64;
        let twice = 2 - b - chi;
        debug_assert!(twice % 2 == 0);
        twice / 2
    }

    /// Positions of the two feet of `label`, top first.
    fn feet_of(&self, label: usize) -> (usize, usize) {
        let mut top = usize::MAX;
        let mut bottom = usize::MAX;
        for (p, f) in self.word.iter().enumerate() {
            if f.label == label {
                match f.end {
                    End::Top => top = p,
                    End::Bottom => bottom = p,
                }
            }
        }
        (top, bottom)
    }

    /// Algebraic intersection numbers of the handle core classes. Chords
    /// that interleave in the boundary word meet once, others not at all;
    /// the sign is `+1` when the feet appear in the cyclic pattern
    /// top(i), top(j), bottom(i), bottom(j).
    pub fn intersection_form(&self) -> IntersectionForm {
        let k = self.handle_count();
        let mut m = IntMatrix::zeros(k, k);
        for (a, &la) in self.labels.iter().enumerate() {
            for (b, &lb) in self.labels.iter().enumerate() {
                if a < b {
                    let s = self.chord_pairing(la, lb);
                    m[(a, b)] = s;
                    m[(b, a)] = -s;
                }
            }
        }
        IntersectionForm { matrix: m }
    }

    fn chord_pairing(&self, i: usize, j: usize) -> i64 {
        let (ti, bi) = self.feet_of(i);
        let (tj, bj) = self.feet_of(j);
        let m = self.word.len();
        // Walk cyclically from top(i); record the order the other three
        // feet appear in.
        let rel = |p: usize| (p + m - ti) % m;
        if !(rel(tj).min(rel(bj)) < rel(bi) && rel(bi) < rel(tj).max(rel(bj))) {
            return 0; // not interleaved
        }
        if rel(tj) < rel(bi) {
            1 // pattern Ti Tj Bi Bj
        } else {
            -1 // pattern Ti Bj Bi Tj
        }
    }

    /// Pairing of two homology classes under the intersection form.
    pub fn pairing(&self, a: &Curve, b: &Curve) -> Result<i64, FiberError> {
        let dim = self.handle_count();
        if a.homology.len() != dim || b.homology.len() != dim {
            return Err(FiberError::ForeignCurve(self.labels.clone()));
        }
        Ok(self.intersection_form().pair(&a.homology, &b.homology))
    }

    /// Surface framing of a curve: the writhe of its planar projection,
    /// read off the crossing data carried by the embedding.
    pub fn surface_framing(&self, c: &Curve) -> Result<i64, FiberError> {
        let emb = c
            .embedding
            .as_ref()
            .ok_or_else(|| FiberError::NoEmbedding(c.name.clone()))?;
        Ok(emb.self_crossings.iter().sum())
    }

    /// Whether two curves admit disjoint representatives: no shared handle,
    /// and no disk arc of one separates the endpoints of a disk arc of the
    /// other along the boundary circle.
    pub fn disjoint(&self, a: &Curve, b: &Curve) -> Result<bool, FiberError> {
        if a.embedding.is_none() {
            return Err(FiberError::NoEmbedding(a.name.clone()));
        }
        if b.embedding.is_none() {
            return Err(FiberError::NoEmbedding(b.name.clone()));
        }
        let la: Vec<usize> = a.traversals.iter().map(|&(l, _)| l).collect();
        let lb: Vec<usize> = b.traversals.iter().map(|&(l, _)| l).collect();
        if la.iter().any(|l| lb.contains(l)) {
            return Ok(false);
        }
        let m = self.word.len();
        for &(pa, qa) in &self.disk_arcs(a) {
            for &(pb, qb) in &self.disk_arcs(b) {
                let rel = |p: usize| (p + m - pa) % m;
                let inside = |p: usize| rel(p) > 0 && rel(p) < rel(qa);
                if inside(pb) != inside(qb) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Disk arcs of a curve as pairs of word positions: each connects the
    /// exit foot of one traversed handle to the entry foot of the next.
    fn disk_arcs(&self, c: &Curve) -> Vec<(usize, usize)> {
        let t = &c.traversals;
        (0..t.len())
            .map(|i| {
                let (l0, s0) = t[i];
                let (l1, s1) = t[(i + 1) % t.len()];
                let (t0, b0) = self.feet_of(l0);
                let (t1, b1) = self.feet_of(l1);
                // Sign +1 means the handle is traversed top to bottom.
                let exit = if s0 >= 0 { b0 } else { t0 };
                let entry = if s1 >= 0 { t1 } else { b1 };
                (exit, entry)
            })
            .collect()
    }

    /// Slide the foot at word position `p` over the handle of the foot that
    /// follows it. Returns the new fiber and the homology basis update: the
    /// slid handle's class gains `coefficient * e_j`.
    pub fn slide_handle_foot(&self, p: usize) -> Result<(RibbonFiber, BasisSlide), FiberError> {
        let m = self.word.len();
        let f = self.word[p];
        let g = self.word[(p + 1) % m];
        if f.label == g.label {
            return Err(FiberError::SelfSlide);
        }
        // Direction the curve would travel over handle j entering at g.
        let d1 = if g.end == End::Top { 1 } else { -1 };
        let coefficient = if f.end == End::Bottom { d1 } else { -d1 };

        let mut word = self.word.clone();
        word.remove(p);
        let other = word
            .iter()
            .position(|w| w.label == g.label && w.end != g.end)
            .unwrap();
        word.insert(other + 1, f);
        let fiber = RibbonFiber::from_feet(word, self.base)?;
        Ok((
            fiber,
            BasisSlide {
                slid: f.label,
                over: g.label,
                coefficient,
            },
        ))
    }
}

/// Homology bookkeeping for a handle slide: `e_slid += coefficient * e_over`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisSlide {
    pub slid: usize,
    pub over: usize,
    pub coefficient: i64,
}

impl BasisSlide {
    /// Columns express the new basis vectors in the old basis, so the
    /// intersection forms satisfy `new = E^T * old * E`.
    pub fn matrix(&self, fiber: &RibbonFiber) -> IntMatrix {
        let k = fiber.handle_count();
        let mut m = IntMatrix::identity(k);
        let i = fiber.basis_index(self.slid).unwrap();
        let j = fiber.basis_index(self.over).unwrap();
        m[(j, i)] = self.coefficient;
        m
    }
}

/// Antisymmetric pairing matrix on the handle core classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub matrix: IntMatrix,
}

impl IntersectionForm {
    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        self.matrix.mul_vec(b).iter().zip(a).map(|(x, y)| x * y).sum()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let m = &self.matrix;
        (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)] == -m[(j, i)]))
    }
}

/// Closed curve on a ribbon fiber: a cyclic sequence of signed handle
/// traversals joined by disk arcs, plus its homology class in the basis of
/// handle cores. Curves built by the construction also carry an embedding
/// with the signed crossings of their planar projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub name: String,
    /// `(handle label, sign)`, sign `+1` for a top-to-bottom traversal.
    pub traversals: Vec<(usize, i64)>,
    /// Class in the basis indexed by the fiber's sorted labels.
    pub homology: Vec<i64>,
    pub embedding: Option<CurveEmbedding>,
}

/// Planar data of a constructed curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEmbedding {
    /// Signed self-crossings of the projection: the crossings inherited
    /// from the grid diagram plus one `-1` kink per NW-cornered lifted
    /// column (for guide cycles), or the single `-1` of a canceling cycle.
    pub self_crossings: Vec<i64>,
    /// Polyline through scene coordinates, for rendering.
    pub path: Vec<(i64, i64)>,
}

impl Curve {
    /// Simple cycle over one handle: the canceling-pair vanishing cycle.
    pub fn over_handle(fiber: &RibbonFiber, label: usize, name: impl Into<String>) -> Self {
        let mut homology = vec![0; fiber.handle_count()];
        homology[fiber.basis_index(label).unwrap()] = 1;
        Curve {
            name: name.into(),
            traversals: vec![(label, 1)],
            homology,
            embedding: Some(CurveEmbedding {
                self_crossings: vec![-1],
                path: Vec::new(),
            }),
        }
    }

    pub fn homology_is_zero(&self) -> bool {
        self.homology.iter().all(|&x| x == 0)
    }
}

/// First-appearance relabeling of a label sequence.
fn relabel(word: &[usize]) -> Vec<usize> {
    let mut map: Vec<usize> = Vec::new();
    word.iter()
        .map(|&l| {
            if let Some(i) = map.iter().position(|&m| m == l) {
                i + 1
            } else {
                map.push(l);
                map.len()
            }
        })
        .collect()
}

/// Canonical form of a cyclic boundary word: the lexicographically least
/// first-appearance relabeling over all rotations and both orientations.
pub fn canonical_word(word: &[usize]) -> Vec<usize> {
    let m = word.len();
    if m == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |w: &[usize]| {
        let r = relabel(w);
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    };
    let reversed: Vec<usize> = word.iter().rev().copied().collect();
    for start in 0..m {
        let rot: Vec<usize> = (0..m).map(|i| word[(start + i) % m]).collect();
        consider(&rot);
        let rot: Vec<usize> = (0..m).map(|i| reversed[(start + i) % m]).collect();
        consider(&rot);
    }
    best.unwrap()
}

/// Cyclic equality of label words up to rotation, relabeling and reflection.
pub fn cyclic_equivalent(a: &[usize], b: &[usize]) -> bool {
    canonical_word(a) == canonical_word(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fiber(word: &[usize]) -> RibbonFiber {
        RibbonFiber::from_boundary_word(word, FiberBase::Disk).unwrap()
    }

    #[test]
    fn small_fibers() {
        let f = fiber(&[1, 1]);
        assert_eq!(
            (f.euler_characteristic(), f.boundary_components(), f.genus()),
            (0, 2, 0)
        );
        let f = fiber(&[1, 2, 1, 2]);
        assert_eq!(
            (f.euler_characteristic(), f.boundary_components(), f.genus()),
            (-1, 1, 1)
        );
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        assert_eq!(
            (f.euler_characteristic(), f.boundary_components(), f.genus()),
            (-3, 3, 1)
        );
    }

    #[test]
    fn comb_fibers_from_families() {
        // Horizontal-only construction on twist knots yields chains of
        // handles where consecutive pairs interleave once.
        let chain = |k: usize| -> Vec<usize> {
            // 1 2 1 3 2 4 3 ... k k-1 k
            let mut w = vec![1, 2, 1];
            for i in 3..=k {
                w.push(i);
                w.push(i - 1);
            }
            w.push(k);
            w
        };
        let f = fiber(&chain(5));
        assert_eq!((f.boundary_components(), f.handle_count(), f.genus()), (2, 5, 2));
        let f = fiber(&chain(6));
        assert_eq!((f.boundary_components(), f.handle_count(), f.genus()), (1, 6, 3));
    }

    #[test]
    fn malformed_words() {
        assert!(matches!(
            RibbonFiber::from_boundary_word(&[1, 2, 1], FiberBase::Disk),
            Err(FiberError::BadWord(2, 1))
        ));
        assert!(matches!(
            RibbonFiber::from_boundary_word(&[1, 1], FiberBase::Annulus),
            Err(FiberError::MissingCoreHandle)
        ));
    }

    #[test]
    fn intersection_form_cases() {
        let f = fiber(&[1, 2, 1, 2]);
        let form = f.intersection_form();
        assert_eq!(form.matrix[(0, 1)].abs(), 1);
        assert!(form.is_antisymmetric());

        // Nested chords do not meet.
        let f = fiber(&[1, 2, 2, 1]);
        assert_eq!(f.intersection_form().matrix[(0, 1)], 0);

        // The printed word: C1 meets C2 but not C4.
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let form = f.intersection_form();
        let i = |l| f.basis_index(l).unwrap();
        assert_eq!(form.matrix[(i(1), i(2))].abs(), 1);
        assert_eq!(form.matrix[(i(1), i(4))], 0);
        assert!(form.is_antisymmetric());
    }

    #[test]
    fn pairing_is_antisymmetric() {
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let c1 = Curve::over_handle(&f, 1, "a");
        let c2 = Curve::over_handle(&f, 2, "b");
        assert_eq!(f.pairing(&c1, &c1).unwrap(), 0);
        assert_eq!(
            f.pairing(&c1, &c2).unwrap(),
            -f.pairing(&c2, &c1).unwrap()
        );
        assert_eq!(f.pairing(&c1, &c2).unwrap().abs(), 1);
    }

    #[test]
    fn disjointness() {
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let c = |l: usize| Curve::over_handle(&f, l, format!("C{l}"));
        // Chords 1 and 4 do not interleave, so the cycles can be separated.
        assert!(f.disjoint(&c(1), &c(4)).unwrap());
        assert!(!f.disjoint(&c(1), &c(2)).unwrap());
        assert!(!f.disjoint(&c(1), &c(1)).unwrap());
    }

    #[test]
    fn slide_preserves_topology() {
        let f = fiber(&[1, 2, 1, 2]);
        let (g, slide) = f.slide_handle_foot(0).unwrap();
        assert_eq!(g.euler_characteristic(), f.euler_characteristic());
        assert_eq!(g.boundary_components(), f.boundary_components());
        assert_eq!(g.genus(), f.genus());
        assert_eq!(slide.coefficient.abs(), 1);

        // The intersection form transforms by congruence under the slide.
        let e = slide.matrix(&g);
        let old = f.intersection_form().matrix;
        let new = g.intersection_form().matrix;
        assert_eq!(&(&e.transpose() * &old) * &e, new);
    }

    #[test]
    fn canonical_words() {
        assert!(cyclic_equivalent(&[2, 3, 1, 4, 2, 3, 4, 1], &[2, 3, 4, 1, 2, 3, 1, 4]));
        assert!(cyclic_equivalent(&[1, 2, 1, 2], &[7, 9, 7, 9]));
        assert!(!cyclic_equivalent(&[1, 2, 1, 2], &[1, 2, 2, 1]));
        assert_eq!(
            canonical_word(&[2, 3, 1, 4, 2, 3, 4, 1]),
            vec![1, 2, 3, 1, 4, 2, 3, 4]
        );
    }
}
