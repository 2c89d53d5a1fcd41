//! Homological action of the monodromy: symplectic transvections for the
//! Dehn twists along vanishing cycles, products in factorization order,
//! and the elementary (Hurwitz) transformations that rewrite them.

use crate::fiber::{Curve, RibbonFiber};
use crate::matrix::IntMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("position {0} out of range for a factorization of length {1}")]
    BadPosition(usize, usize),
    #[error("curves at positions {0} and {1} are not certified disjoint")]
    NotDisjoint(usize, usize),
    #[error("factorization curves live on a different fiber")]
    FiberMismatch,
}

/// Ordered vanishing cycles `(V_1, ..., V_m)`; `V_1` is applied first, so
/// the total monodromy is the twist along `V_m` composed after the others.
#[derive(Debug, Clone)]
pub struct MonodromyFactorization {
    fiber: RibbonFiber,
    curves: Vec<Curve>,
}

/// Homological Dehn twist along a class `c`: `x -> x + power * <x, c> c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transvection {
    pub matrix: IntMatrix,
}

pub fn transvection(fiber: &RibbonFiber, class: &[i64], power: i64) -> Transvection {
    let k = fiber.handle_count();
    assert_eq!(class.len(), k);
    let omega_c = fiber.intersection_form().matrix.mul_vec(class);
    let mut m = IntMatrix::identity(k);
    // x -> x + power * (x^T omega c) * c
    for i in 0..k {
        for j in 0..k {
            m[(i, j)] += power * class[i] * omega_c[j];
        }
    }
    Transvection { matrix: m }
}

impl MonodromyFactorization {
    pub fn new(fiber: RibbonFiber, curves: Vec<Curve>) -> Self {
        MonodromyFactorization { fiber, curves }
    }

    pub fn fiber(&self) -> &RibbonFiber {
        &self.fiber
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.curves.iter().map(|c| c.name.clone()).collect()
    }

    /// Product of the transvections in factorization order.
    pub fn total_monodromy(&self) -> IntMatrix {
        let k = self.fiber.handle_count();
        let mut total = IntMatrix::identity(k);
        for c in &self.curves {
            let t = transvection(&self.fiber, &c.homology, 1);
            total = &t.matrix * &total;
        }
        total
    }

    /// Move `V_{i+1}` leftward past `V_i` (1-based `i`):
    /// `(.. V_i, V_{i+1} ..) -> (.. t_{V_i}^{-1}(V_{i+1}), V_i ..)`.
    /// The moved curve keeps only its homology unless the twist acts
    /// trivially on it.
    pub fn hurwitz_left(&self, i: usize) -> Result<MonodromyFactorization, MonodromyError> {
        let m = self.len();
        if i == 0 || i >= m {
            return Err(MonodromyError::BadPosition(i, m));
        }
        let a = self.curves[i - 1].clone();
        let b = self.curves[i].clone();
        let moved = twist_curve(&self.fiber, &a, &b, -1);
        let mut curves = self.curves.clone();
        curves[i - 1] = moved;
        curves[i] = a;
        Ok(MonodromyFactorization {
            fiber: self.fiber.clone(),
            curves,
        })
    }

    /// Inverse elementary transformation:
    /// `(.. V_i, V_{i+1} ..) -> (.. V_{i+1}, t_{V_{i+1}}(V_i) ..)`.
    pub fn hurwitz_right(&self, i: usize) -> Result<MonodromyFactorization, MonodromyError> {
        let m = self.len();
        if i == 0 || i >= m {
            return Err(MonodromyError::BadPosition(i, m));
        }
        let a = self.curves[i - 1].clone();
        let b = self.curves[i].clone();
        let moved = twist_curve(&self.fiber, &b, &a, 1);
        let mut curves = self.curves.clone();
        curves[i - 1] = b;
        curves[i] = moved;
        Ok(MonodromyFactorization {
            fiber: self.fiber.clone(),
            curves,
        })
    }

    /// Swap adjacent factors, allowed only for certified-disjoint curves.
    pub fn commute(&self, i: usize) -> Result<MonodromyFactorization, MonodromyError> {
        let m = self.len();
        if i == 0 || i >= m {
            return Err(MonodromyError::BadPosition(i, m));
        }
        let a = &self.curves[i - 1];
        let b = &self.curves[i];
        let disjoint = self
            .fiber
            .disjoint(a, b)
            .map_err(|_| MonodromyError::NotDisjoint(i, i + 1))?;
        if !disjoint {
            return Err(MonodromyError::NotDisjoint(i, i + 1));
        }
        let mut curves = self.curves.clone();
        curves.swap(i - 1, i);
        Ok(MonodromyFactorization {
            fiber: self.fiber.clone(),
            curves,
        })
    }
}

/// Image of `b` under the `power` twist along `a`. The embedding survives
/// only when the twist acts trivially on the representative.
fn twist_curve(fiber: &RibbonFiber, a: &Curve, b: &Curve, power: i64) -> Curve {
    let t = transvection(fiber, &a.homology, power);
    let homology = t.matrix.mul_vec(&b.homology);
    let unchanged = homology == b.homology
        && fiber
            .disjoint(a, b)
            .unwrap_or(false);
    let name = if unchanged || b.name.ends_with('\'') {
        b.name.clone()
    } else {
        format!("{}'", b.name)
    };
    Curve {
        name,
        traversals: if unchanged {
            b.traversals.clone()
        } else {
            Vec::new()
        },
        homology,
        embedding: if unchanged { b.embedding.clone() } else { None },
    }
}

/// Report of the comparison sequence on a torus-knot fibration: two
/// elementary transformations move the third cycle to the front, then the
/// now-adjacent disjoint pair commutes. The total homological monodromy is
/// asserted unchanged at every step.
#[derive(Debug, Clone)]
pub struct SequenceReport {
    pub steps: Vec<(String, Vec<String>)>,
    pub invariant: bool,
    pub final_factorization: MonodromyFactorization,
}

/// Run the rewriting sequence on the factorization `(C_{2n+2},...,C_1)` of
/// the torus-knot fibration with `2n+2` cycles.
pub fn comparison_sequence(
    fac: &MonodromyFactorization,
) -> Result<SequenceReport, MonodromyError> {
    let m = fac.len();
    assert!(m >= 4, "expected a torus-knot fibration");
    let total = fac.total_monodromy();
    let mut steps = vec![("start".to_string(), fac.names())];
    let mut invariant = true;

    // In the factorization (C_{m}, ..., C_1) the second-to-lowest cycle
    // C_2 sits at position m-1; move it left twice, then commute the
    // displaced disjoint pair.
    let mut cur = fac.hurwitz_left(m - 2)?;
    invariant &= cur.total_monodromy() == total;
    steps.push((format!("L {}", m - 1), cur.names()));
    cur = cur.hurwitz_left(m - 3)?;
    invariant &= cur.total_monodromy() == total;
    steps.push((format!("L {}", m - 2), cur.names()));
    cur = cur.commute(m - 2)?;
    invariant &= cur.total_monodromy() == total;
    steps.push((format!("C {}", m - 2), cur.names()));

    Ok(SequenceReport {
        steps,
        invariant,
        final_factorization: cur,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::FiberBase;

    fn fiber(word: &[usize]) -> RibbonFiber {
        RibbonFiber::from_boundary_word(word, FiberBase::Disk).unwrap()
    }

    #[test]
    fn transvection_basics() {
        let f = fiber(&[1, 2, 1, 2]);
        // Zero class: identity.
        let t = transvection(&f, &[0, 0], 1);
        assert_eq!(t.matrix, IntMatrix::identity(2));

        // tau_c then tau_c^{-1} is the identity.
        let c = vec![1, 0];
        let t = transvection(&f, &c, 1);
        let ti = transvection(&f, &c, -1);
        assert_eq!(&t.matrix * &ti.matrix, IntMatrix::identity(2));
        assert_eq!(t.matrix.det(), 1);

        // tau_{e_1} maps e_2 to e_2 +/- e_1.
        let e2 = t.matrix.mul_vec(&[0, 1]);
        assert_eq!(e2[1], 1);
        assert_eq!(e2[0].abs(), 1);
    }

    #[test]
    fn transvection_preserves_form() {
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let omega = f.intersection_form().matrix;
        for class in [vec![1, 0, 0, 0], vec![1, -1, 2, 0], vec![0, 1, 1, 1]] {
            let t = transvection(&f, &class, 1).matrix;
            assert_eq!(&(&t.transpose() * &omega) * &t, omega);
            assert_eq!(t.det(), 1);
        }
    }

    #[test]
    fn empty_and_singleton_products() {
        let f = fiber(&[1, 2, 1, 2]);
        let fac = MonodromyFactorization::new(f.clone(), Vec::new());
        assert_eq!(fac.total_monodromy(), IntMatrix::identity(2));

        let c = Curve::over_handle(&f, 1, "c");
        let fac = MonodromyFactorization::new(f.clone(), vec![c.clone()]);
        assert_eq!(
            fac.total_monodromy(),
            transvection(&f, &c.homology, 1).matrix
        );
    }

    #[test]
    fn hurwitz_inverse_pair() {
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let curves: Vec<Curve> = [4, 3, 2, 1]
            .iter()
            .map(|&l| Curve::over_handle(&f, l, format!("C{l}")))
            .collect();
        let fac = MonodromyFactorization::new(f, curves);
        let total = fac.total_monodromy();
        for i in 1..fac.len() {
            let moved = fac.hurwitz_left(i).unwrap();
            assert_eq!(moved.total_monodromy(), total);
            let back = moved.hurwitz_right(i).unwrap();
            assert_eq!(back.total_monodromy(), total);
            for (a, b) in back.curves().iter().zip(fac.curves()) {
                assert_eq!(a.homology, b.homology);
            }
        }
    }

    #[test]
    fn commute_requires_disjoint() {
        let f = fiber(&[2, 3, 1, 4, 2, 3, 4, 1]);
        let curves: Vec<Curve> = [1, 4, 2]
            .iter()
            .map(|&l| Curve::over_handle(&f, l, format!("C{l}")))
            .collect();
        let fac = MonodromyFactorization::new(f, curves);
        // Chords 1 and 4 do not interleave: they commute.
        let swapped = fac.commute(1).unwrap();
        assert_eq!(swapped.names(), vec!["C4", "C1", "C2"]);
        assert_eq!(swapped.total_monodromy(), fac.total_monodromy());
        // Chords 4 and 2 interleave: refuse.
        assert!(matches!(
            fac.commute(2),
            Err(MonodromyError::NotDisjoint(2, 3))
        ));
    }
}
