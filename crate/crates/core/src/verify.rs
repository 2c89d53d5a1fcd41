//! Algebraic verification of the construction's claims: Euler
//! characteristics, first homology of the total space via Smith normal
//! form, framings, allowability, and the two knot-family checkers.

use crate::construct::{construct_palf, ConstructError, Palf, Strategy};
use crate::fiber::canonical_word;
use crate::grid::GridDiagram;
use crate::matrix::{smith_normal_form, IntMatrix, SmithForm};
use serde::Serialize;

/// Expected handle decomposition of the total space.
#[derive(Debug, Clone, Serialize)]
pub struct HandlebodyExpectation {
    /// Number of 4-dimensional 1-handles.
    pub one_handles: usize,
    /// Number of 2-handles.
    pub two_handles: usize,
    /// Expected framing of each 2-handle, component order.
    pub framings: Vec<i64>,
    /// Relations presenting H1 of the handlebody: one row per 2-handle,
    /// one column per 1-handle.
    pub h1_relations: Vec<Vec<i64>>,
}

impl HandlebodyExpectation {
    /// Knot or link trace without 1-handles, Stein framings `tb - 1`.
    pub fn trace(grid: &GridDiagram) -> Self {
        let m = grid.component_count();
        let framings = (0..m)
            .map(|k| grid.legendrian_invariants(k).unwrap().framing)
            .collect();
        HandlebodyExpectation {
            one_handles: 0,
            two_handles: m,
            framings,
            h1_relations: vec![Vec::new(); m],
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.one_handles as i64 + self.two_handles as i64
    }

    pub fn h1(&self) -> SmithForm {
        let rows = self.one_handles;
        let cols: Vec<Vec<i64>> = self.h1_relations.iter().cloned().collect();
        smith_normal_form(&IntMatrix::from_columns(&cols, rows))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn record(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
        pass
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// Homology classes of the vanishing cycles as columns of an integer
/// matrix over the fiber basis.
pub fn class_matrix(palf: &Palf) -> IntMatrix {
    let cols: Vec<Vec<i64>> = palf.cycles.iter().map(|c| c.homology.clone()).collect();
    IntMatrix::from_columns(&cols, palf.fiber.handle_count())
}

/// First homology of the total space: the fiber classes modulo the
/// vanishing cycles.
pub fn total_space_h1(palf: &Palf) -> SmithForm {
    smith_normal_form(&class_matrix(palf))
}

pub fn total_space_euler(palf: &Palf) -> i64 {
    palf.fiber.euler_characteristic() + palf.cycles.len() as i64
}

/// Compare the fibration's algebraic consequences against the expected
/// handle decomposition of the total space.
pub fn check_total_space(palf: &Palf, expect: &HandlebodyExpectation) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.record(
        "total-space euler characteristic",
        expect.euler_characteristic(),
        total_space_euler(palf),
    );
    report.record(
        "total-space H1",
        expect.h1().coker_string(),
        total_space_h1(palf).coker_string(),
    );
    report.record("allowability", true, palf.is_allowable());
    report
}

/// The fibration without guide cycles has trivial total space.
pub fn check_trivial_total_space(palf: &Palf) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.record("trivial-total-space euler characteristic", 1, total_space_euler(palf));
    report.record(
        "trivial-total-space H1",
        "0",
        total_space_h1(palf).coker_string(),
    );
    report
}

/// Surface framings: `tb` for the guide cycles, `-1` for every canceling
/// cycle, with 2-handle framings one less.
pub fn check_framings(grid: &GridDiagram, palf: &Palf) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (k, c0) in palf.c0_curves.iter().enumerate() {
        let inv = grid.legendrian_invariants(k).unwrap();
        let sf = palf.fiber.surface_framing(c0).unwrap();
        report.record(format!("surface framing of {}", c0.name), inv.tb, sf);
        report.record(format!("framing of {}", c0.name), inv.framing, sf - 1);
    }
    for c in &palf.cycles {
        if c.name.starts_with("C0") {
            continue;
        }
        let sf = palf.fiber.surface_framing(c).unwrap();
        report.record(format!("surface framing of {}", c.name), -1, sf);
        report.record(format!("framing of {}", c.name), -2, sf - 1);
    }
    report
}

/// Fiber data `(boundary components, handles, genus)` of the flex
/// construction on positive twist knots, and of the comb construction for
/// the two cases worked out in the source.
pub fn check_twist_family(s_max: usize) -> Result<VerificationReport, ConstructError> {
    let mut report = VerificationReport::default();
    for s in 1..=s_max {
        let grid = crate::construct::fixtures::twist_knot(s);
        let palf = construct_palf(&grid, Strategy::Flex, false)?;
        let f = &palf.fiber;
        report.record(
            format!("twist knot s={s} flex (b, k, g)"),
            format!("({}, {}, 1)", s + 2, s + 3),
            format!(
                "({}, {}, {})",
                f.boundary_components(),
                f.handle_count(),
                f.genus()
            ),
        );
    }
    for (s, expected) in [(2, (2usize, 5usize, 2i64)), (3, (1, 6, 3))] {
        if s > s_max {
            continue;
        }
        let grid = crate::construct::fixtures::twist_knot(s);
        let palf = construct_palf(&grid, Strategy::Comb, false)?;
        let f = &palf.fiber;
        report.record(
            format!("twist knot s={s} comb (b, k, g)"),
            format!("({}, {}, {})", expected.0, expected.1, expected.2),
            format!(
                "({}, {}, {})",
                f.boundary_components(),
                f.handle_count(),
                f.genus()
            ),
        );
    }
    Ok(report)
}

/// Fiber data of the flex construction on positive torus knots.
pub fn check_torus_family(n_max: usize) -> Result<VerificationReport, ConstructError> {
    let mut report = VerificationReport::default();
    for n in 1..=n_max {
        let grid = crate::construct::fixtures::torus_knot(n);
        report.record(
            format!("torus knot n={n} tb"),
            2 * n as i64 - 1,
            grid.legendrian_invariants(0).unwrap().tb,
        );
        let palf = construct_palf(&grid, Strategy::Flex, false)?;
        let f = &palf.fiber;
        report.record(
            format!("torus knot n={n} flex (b, k, g)"),
            format!("({}, {}, 1)", 2 * n + 1, 2 * n + 2),
            format!(
                "({}, {}, {})",
                f.boundary_components(),
                f.handle_count(),
                f.genus()
            ),
        );
    }
    Ok(report)
}

/// Every valid vertical translate constructs a fiber with the same
/// canonical boundary word and the same `(chi, b, g)`.
pub fn check_translation_principle(grid: &GridDiagram) -> Result<VerificationReport, ConstructError> {
    let mut report = VerificationReport::default();
    let reference = construct_palf(grid, Strategy::Flex, false)?;
    let want_word = reference.canonical_word();
    let f = &reference.fiber;
    let want_data = (f.euler_characteristic(), f.boundary_components(), f.genus());
    for shift in 0..grid.n() {
        let Ok(translated) = grid.vertical_translate(shift) else {
            continue;
        };
        let palf = construct_palf(&translated, Strategy::Flex, false)?;
        report.record(
            format!("translation {shift} canonical word"),
            format!("{want_word:?}"),
            format!("{:?}", palf.canonical_word()),
        );
        let g = &palf.fiber;
        report.record(
            format!("translation {shift} (chi, b, g)"),
            format!("{want_data:?}"),
            format!(
                "{:?}",
                (g.euler_characteristic(), g.boundary_components(), g.genus())
            ),
        );
    }
    Ok(report)
}

/// The right-to-left construction on the rotated diagram reproduces the
/// reversed canonical word of the flex construction.
pub fn check_rtl(grid: &GridDiagram) -> Result<VerificationReport, ConstructError> {
    let mut report = VerificationReport::default();
    let flex = construct_palf(grid, Strategy::Flex, false)?;
    let rtl = construct_palf(&grid.rotate180(), Strategy::Rtl, false)?;
    let mut reversed = flex.boundary_word();
    reversed.reverse();
    report.record(
        "rtl word matches reversed flex word",
        format!("{:?}", canonical_word(&reversed)),
        format!("{:?}", rtl.canonical_word()),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn smith_oracle_exhaustive_2x2() {
        // Naive cokernel order for comparison: |det| when nonzero.
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    for d in -3..=3i64 {
                        let m = IntMatrix::from_rows(vec![vec![a, b], vec![c, d]]);
                        let det = m.det();
                        let snf = smith_normal_form(&m);
                        if det != 0 {
                            assert_eq!(snf.factors.iter().product::<i64>(), det.abs());
                            assert_eq!(snf.coker_free_rank, 0);
                        } else {
                            assert!(snf.factors.len() < 2);
                        }
                        // Divisibility chain.
                        for w in snf.factors.windows(2) {
                            assert_eq!(w[1] % w[0], 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unknot_total_space() {
        let g = fixtures::unknot2();
        let sf = construct_palf(&g, Strategy::Flex, false).unwrap();
        assert!(check_trivial_total_space(&sf).all_pass());

        let p = construct_palf(&g, Strategy::Flex, true).unwrap();
        let expect = HandlebodyExpectation::trace(&g);
        assert!(check_total_space(&p, &expect).all_pass());
        assert!(check_framings(&g, &p).all_pass());
    }

    #[test]
    fn wrong_framing_override_fails() {
        let mut g = fixtures::unknot2();
        g.set_framing_override(0, crate::grid::FramingSpec::Absolute(7));
        let p = construct_palf(&g, Strategy::Flex, true).unwrap();
        let report = check_framings(&g, &p);
        assert!(!report.all_pass());
        assert!(report.failures().iter().any(|c| c.name.contains("framing of C0")));
    }
}
