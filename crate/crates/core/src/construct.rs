//! Drive the full PALF construction: decide which columns are lifted,
//! orchestrate the 0-handle deformations per strategy, embed the guide
//! cycles and emit the fibration data.

use crate::fiber::{canonical_word, Curve, CurveEmbedding, FiberBase, Foot, RibbonFiber};
use crate::grid::{Corner, GridDiagram, GridError};
use crate::monodromy::MonodromyFactorization;
use crate::scene::{row_y, Cell, Scene, SceneError};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Scene(#[from] SceneError),
    #[error("strategy cannot reach a foot of column {col}")]
    FootUnreachable { col: usize },
    #[error("comb strategy cannot reach a foot of column {col}")]
    CombBlocked { col: usize },
    #[error("restart limit exceeded while resolving lift obstructions")]
    RestartLimit,
    #[error("construction failed on every vertical translate; last error: {0}")]
    AllTranslatesFailed(Box<ConstructError>),
}

/// Deformation strategy for the 0-handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Horizontal isotopies only, slits entering parallel to the rows.
    Comb,
    /// Vertical pushes permitted; deformations chosen to maximize the
    /// number of boundary components of the fiber (minimal genus).
    Flex,
    /// Process columns right to left; realized as the flex construction
    /// conjugated by a 180 degree rotation of the diagram.
    Rtl,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Comb => "comb",
            Strategy::Flex => "flex",
            Strategy::Rtl => "rtl",
        }
    }
}

/// A constructed positive allowable Lefschetz fibration.
#[derive(Debug, Clone)]
pub struct Palf {
    pub strategy: Strategy,
    /// Vertical translate of the input grid the scene was built on.
    pub shift: usize,
    /// Lifted columns, in the original column labels, ascending.
    pub lifts: Vec<usize>,
    pub fiber: RibbonFiber,
    /// Ordered vanishing cycles; guide cycles first when present, then the
    /// canceling cycles in the strategy's column order.
    pub cycles: Vec<Curve>,
    /// Guide cycles (one per link component), also present in `cycles`
    /// when the fibration includes them.
    pub c0_curves: Vec<Curve>,
    pub include_c0: bool,
    /// Hole winding number of each component (annulus base only).
    pub windings: Vec<i64>,
    /// Final scene, for rendering. For the rtl strategy this is the scene
    /// of the rotated diagram.
    pub scene: Scene,
    /// The grid the scene geometry refers to (translated, and rotated for rtl).
    pub scene_grid: GridDiagram,
}

impl Palf {
    pub fn boundary_word(&self) -> Vec<usize> {
        self.fiber.label_word()
    }

    pub fn canonical_word(&self) -> Vec<usize> {
        canonical_word(&self.boundary_word())
    }

    pub fn factorization(&self) -> MonodromyFactorization {
        MonodromyFactorization::new(self.fiber.clone(), self.cycles.clone())
    }

    /// All vanishing cycles are homologically essential.
    pub fn is_allowable(&self) -> bool {
        self.cycles.iter().all(|c| !c.homology_is_zero())
    }
}

/// Columns that must be lifted before any reachability concerns: those
/// whose vertical segment has an NW corner, and those crossing a
/// horizontal segment.
pub fn base_lifts(grid: &GridDiagram) -> BTreeSet<usize> {
    let census = grid.corner_census();
    let mut lifts: BTreeSet<usize> =
        census.columns_with_top(Corner::NW).into_iter().collect();
    for x in grid.crossings() {
        lifts.insert(x.col);
    }
    debug_assert!(!lifts.contains(&grid.n()));
    lifts
}

/// The full lift set the construction ends up with, reachability rule
/// included.
pub fn decide_lifts(grid: &GridDiagram, strategy: Strategy) -> Result<Vec<usize>, ConstructError> {
    Ok(construct_palf(grid, strategy, false)?.lifts)
}

/// Construct the PALF of a grid diagram. With `include_c0` the guide
/// cycles are embedded as vanishing cycles (the fibration the paper calls
/// `P`); without, the fibration is the one with trivial total space.
pub fn construct_palf(
    grid: &GridDiagram,
    strategy: Strategy,
    include_c0: bool,
) -> Result<Palf, ConstructError> {
    match strategy {
        Strategy::Comb => {
            let build = build_on_grid(grid, Strategy::Comb)?;
            finish(grid, build, Strategy::Comb, include_c0, 0)
        }
        Strategy::Flex => {
            let (shift, build) = best_translate(grid, Strategy::Flex)?;
            finish(grid, build, Strategy::Flex, include_c0, shift)
        }
        Strategy::Rtl => {
            // Right-to-left: run the flex engine on the rotated diagram and
            // carry the labels back through the rotation.
            let rotated = grid.rotate180();
            let (shift, build) = best_translate(&rotated, Strategy::Rtl)?;
            let mut palf = finish(&rotated, build, Strategy::Rtl, include_c0, shift)?;
            relabel_rotated(&mut palf, grid.n());
            Ok(palf)
        }
    }
}

/// Run the scene construction on every vertical translate and keep the
/// one maximizing the number of fiber boundary components, breaking ties
/// by canonical word and then smallest shift. The vertical-translation
/// principle makes the result independent of the input phase.
fn best_translate(
    grid: &GridDiagram,
    strategy: Strategy,
) -> Result<(usize, SceneBuild), ConstructError> {
    let mut best: Option<(usize, SceneBuild, WordScore)> = None;
    let mut last_err = None;
    for shift in 0..grid.n() {
        let g = match grid.vertical_translate(shift) {
            Ok(g) => g,
            Err(_) => continue,
        };
        match build_on_grid(&g, strategy) {
            Ok(build) => {
                let score = word_score(&build.word);
                let better = match &best {
                    None => true,
                    Some((_, _, bs)) => score.beats(bs),
                };
                if better {
                    best = Some((shift, build, score));
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    match best {
        Some((shift, build, _)) => Ok((shift, build)),
        None => Err(ConstructError::AllTranslatesFailed(Box::new(
            last_err.unwrap_or(ConstructError::RestartLimit),
        ))),
    }
}

/// Ranking of a boundary word: many boundary components first (minimal
/// genus), then many consecutive-label handle pairs with disjoint cores
/// (the paper's figures keep successive cycles parallel where possible),
/// then the lexicographically greatest canonical word as a deterministic
/// tie-break.
#[derive(Debug, Clone, PartialEq, Eq)]
struct WordScore {
    boundary: usize,
    parallel: usize,
    canon: Vec<usize>,
}

impl WordScore {
    fn beats(&self, other: &WordScore) -> bool {
        (self.boundary, self.parallel, &self.canon)
            > (other.boundary, other.parallel, &other.canon)
    }
}

fn word_score(word: &[Foot]) -> WordScore {
    WordScore {
        boundary: boundary_components_of(word),
        parallel: parallel_pairs(word),
        canon: canonical_word(&word.iter().map(|f| f.label).collect::<Vec<_>>()),
    }
}

/// Count of label pairs `(i, i+1)` whose chords do not cross in the word.
fn parallel_pairs(word: &[Foot]) -> usize {
    let labels: BTreeSet<usize> = word.iter().map(|f| f.label).collect();
    let m = word.len();
    let pos = |l: usize| -> Vec<usize> {
        (0..m).filter(|&p| word[p].label == l).collect()
    };
    labels
        .iter()
        .filter(|&&l| labels.contains(&(l + 1)))
        .filter(|&&l| {
            let a = pos(l);
            let b = pos(l + 1);
            if a.len() != 2 || b.len() != 2 {
                return false;
            }
            let rel = |p: usize| (p + m - a[0]) % m;
            let inside = |p: usize| rel(p) > 0 && rel(p) < rel(a[1]);
            inside(b[0]) == inside(b[1])
        })
        .count()
}

/// Outcome of the scene phase on one concrete diagram.
struct SceneBuild {
    scene: Scene,
    grid: GridDiagram,
    lifts: Vec<usize>,
    word: Vec<Foot>,
}

fn build_on_grid(grid: &GridDiagram, strategy: Strategy) -> Result<SceneBuild, ConstructError> {
    let n = grid.n();
    let mut lifts = base_lifts(grid);
    let mut restarts = 0usize;
    'restart: loop {
        let mut scene = Scene::init(grid)?;
        scene.set_comb_mode(strategy == Strategy::Comb);
        let cols: Vec<usize> = lifts.iter().copied().collect();
        for col in cols {
            match lift_column(&mut scene, grid, col) {
                Ok(()) => {}
                Err(LiftFailure::Blocked(blocker))
                    if !lifts.contains(&blocker) && blocker != n =>
                {
                    restarts += 1;
                    if restarts > n {
                        return Err(ConstructError::RestartLimit);
                    }
                    lifts.insert(blocker);
                    continue 'restart;
                }
                Err(LiftFailure::Blocked(_)) | Err(LiftFailure::Stuck) => {
                    return Err(if strategy == Strategy::Comb {
                        ConstructError::CombBlocked { col }
                    } else {
                        ConstructError::FootUnreachable { col }
                    });
                }
                Err(LiftFailure::Scene(e)) => return Err(e.into()),
            }
        }
        let word = scene.boundary_word();
        debug_assert_eq!(word.len(), 2 * (lifts.len() + usize::from(grid.hole().is_some())));
        return Ok(SceneBuild {
            scene,
            grid: grid.clone(),
            lifts: lifts.iter().copied().collect(),
            word,
        });
    }
}

enum LiftFailure {
    /// An unlifted column obstructs the deformation; lift it and restart.
    Blocked(usize),
    /// No channel and no liftable blocker.
    Stuck,
    #[allow(dead_code)]
    Scene(SceneError),
}

/// One scored way to place a foot: a cap placement plus the channel
/// reaching it.
#[derive(Clone)]
struct FootPlan {
    spec: crate::scene::CapSpec,
    channel: Vec<Cell>,
}

/// All cap placements with their candidate channels.
fn foot_plans(scene: &Scene, grid: &GridDiagram, col: usize, top: bool) -> Vec<FootPlan> {
    let mut out = Vec::new();
    for spec in scene.cap_options(grid, col, top) {
        if !scene.in_region(spec.cell) {
            if scene.in_region(spec.region_side()) {
                out.push(FootPlan {
                    spec,
                    channel: Vec::new(),
                });
            }
            continue;
        }
        for channel in scene.channels_to(spec.cell) {
            out.push(FootPlan { spec, channel });
        }
    }
    out
}

/// Attach the handle of one column: carve channels to a cap placement for
/// each end, chosen greedily by the word score of the resulting partial
/// boundary word.
fn lift_column(scene: &mut Scene, grid: &GridDiagram, col: usize) -> Result<(), LiftFailure> {
    let tops = foot_plans(scene, grid, col, true);
    let mut scored: Vec<(WordScore, usize, usize, usize)> = Vec::new();
    let mut bottoms_per_top: Vec<Vec<FootPlan>> = Vec::new();
    for (ti, top) in tops.iter().enumerate() {
        let mut sim = scene.clone_for_sim();
        if apply_channel(&mut sim, &top.channel).is_err() {
            bottoms_per_top.push(Vec::new());
            continue;
        }
        let bottoms = foot_plans(&sim, grid, col, false);
        for (bi, bottom) in bottoms.iter().enumerate() {
            let mut sim2 = sim.clone_for_sim();
            if apply_channel(&mut sim2, &bottom.channel).is_err() {
                continue;
            }
            if sim2
                .attach_handle_at(grid, col, &top.spec, &bottom.spec)
                .is_err()
            {
                continue;
            }
            let word = sim2.boundary_word();
            // A channel that erodes an existing foot wall disqualifies
            // itself: the walk would no longer visit every foot.
            if word.len() != sim2.feet().len() {
                continue;
            }
            let score = word_score(&word);
            let len = top.channel.len() + bottom.channel.len();
            scored.push((score, len, ti, bi));
        }
        bottoms_per_top.push(bottoms);
    }
    if scored.is_empty() {
        return Err(blocked_or_stuck(scene, grid, col));
    }
    // Best word first, then shortest channels, then enumeration order.
    scored.sort_by(|x, y| {
        let ord = if x.0.beats(&y.0) {
            std::cmp::Ordering::Less
        } else if y.0.beats(&x.0) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        };
        ord.then_with(|| x.1.cmp(&y.1))
            .then_with(|| (x.2, x.3).cmp(&(y.2, y.3)))
    });
    for &(_, _, ti, bi) in &scored {
        let top = &tops[ti];
        let bottom = &bottoms_per_top[ti][bi];
        let mut attempt = scene.clone();
        if apply_channel(&mut attempt, &top.channel).is_err() {
            continue;
        }
        if apply_channel(&mut attempt, &bottom.channel).is_err() {
            continue;
        }
        match attempt.attach_handle_at(grid, col, &top.spec, &bottom.spec) {
            Ok(()) => {
                if attempt.boundary_word().len() != attempt.feet().len() {
                    continue;
                }
                *scene = attempt;
                return Ok(());
            }
            Err(_) => continue,
        }
    }
    Err(blocked_or_stuck(scene, grid, col))
}

fn blocked_or_stuck(scene: &Scene, grid: &GridDiagram, col: usize) -> LiftFailure {
    for top in [true, false] {
        for spec in scene.cap_options(grid, col, top) {
            if !scene.in_region(spec.cell) {
                continue;
            }
            if scene.channels_to(spec.cell).is_empty() {
                if let Some(blocker) = scene.blocking_column(spec.cell) {
                    if blocker != col && blocker != grid.n() {
                        return LiftFailure::Blocked(blocker);
                    }
                }
            }
        }
    }
    LiftFailure::Stuck
}

fn apply_channel(scene: &mut Scene, path: &[Cell]) -> Result<(), SceneError> {
    for &cell in path {
        scene.carve_auto(cell)?;
    }
    Ok(())
}

fn boundary_components_of(word: &[Foot]) -> usize {
    if word.is_empty() {
        return 1;
    }
    RibbonFiber::from_feet(word.to_vec(), FiberBase::Disk)
        .map(|f| f.boundary_components())
        .unwrap_or(0)
}

/// Assemble the fiber and the vanishing cycles from a finished scene.
fn finish(
    _input: &GridDiagram,
    build: SceneBuild,
    strategy: Strategy,
    include_c0: bool,
    shift: usize,
) -> Result<Palf, ConstructError> {
    let base = if build.grid.hole().is_some() {
        FiberBase::Annulus
    } else {
        FiberBase::Disk
    };
    let fiber = RibbonFiber::from_feet(build.word.clone(), base)
        .expect("scene produced a malformed boundary word");

    // Canceling-pair cycles, rightmost column first.
    let mut cycles: Vec<Curve> = build
        .lifts
        .iter()
        .rev()
        .map(|&c| {
            let mut curve = Curve::over_handle(&fiber, c, format!("C{c}"));
            if let Some(e) = curve.embedding.as_mut() {
                e.path = band_path(&build, c);
            }
            curve
        })
        .collect();

    let (c0_curves, windings) = guide_cycles(&build, &fiber);
    if include_c0 {
        let mut all = c0_curves.clone();
        all.extend(cycles);
        cycles = all;
    }

    Ok(Palf {
        strategy,
        shift,
        lifts: build.lifts,
        fiber,
        cycles,
        c0_curves,
        include_c0,
        windings,
        scene: build.scene,
        scene_grid: build.grid,
    })
}

/// Embed the guide cycles: each component traverses its lifted columns in
/// knot order; its projection keeps the grid self-crossings and gains one
/// negative kink at every lifted NW corner.
fn guide_cycles(build: &SceneBuild, fiber: &RibbonFiber) -> (Vec<Curve>, Vec<i64>) {
    let grid = &build.grid;
    let comps = grid.components();
    let multi = comps.len() > 1;
    let census = grid.corner_census();
    let row_comp = grid.component_of_row();
    let col_comp = grid.component_of_col();
    let mut curves = Vec::new();
    let mut windings = Vec::new();
    for (k, rows) in comps.iter().enumerate() {
        let mut traversals = Vec::new();
        let mut winding = 0i64;
        let mut path = Vec::new();
        for &r in rows {
            // Horizontal of row r, then the vertical of the O's column.
            let y = row_y(grid.n(), r);
            path.push((crate::scene::col_x(grid.x_col(r)), y));
            path.push((crate::scene::col_x(grid.o_col(r)), y));
            let col = grid.o_col(r);
            let down = !grid.vertical_up(col);
            if build.lifts.contains(&col) {
                let sign = if down { 1 } else { -1 };
                traversals.push((col, sign));
                winding += band_winding(build, col) * sign;
            }
        }
        let mut homology = vec![0i64; fiber.handle_count()];
        for &(l, s) in &traversals {
            homology[fiber.basis_index(l).unwrap()] += s;
        }
        let mut self_crossings: Vec<i64> = grid
            .crossings()
            .iter()
            .filter(|x| row_comp[x.row - 1] == k && col_comp[x.col - 1] == k)
            .map(|x| x.sign)
            .collect();
        for &c in &build.lifts {
            if col_comp[c - 1] == k && census.columns[c - 1].0 == Corner::NW {
                self_crossings.push(-1);
            }
        }
        let name = if multi {
            format!("C0{}", k + 1)
        } else {
            "C0".to_string()
        };
        curves.push(Curve {
            name,
            traversals,
            homology,
            embedding: Some(CurveEmbedding {
                self_crossings,
                path,
            }),
        });
        windings.push(winding);
    }
    (curves, windings)
}

/// Does the band of `col` cross the hole corridor? (Annulus base only.)
fn band_winding(build: &SceneBuild, col: usize) -> i64 {
    let Some((hr, hc)) = build.grid.hole() else {
        return 0;
    };
    if col <= hc {
        return 0;
    }
    let y = row_y(build.grid.n(), hr);
    let band = build
        .scene
        .bands()
        .iter()
        .find(|b| b.label == col)
        .expect("lifted column has a band");
    if band.ylo <= y - 1 && y <= band.yhi {
        1
    } else {
        0
    }
}

fn band_path(build: &SceneBuild, col: usize) -> Vec<(i64, i64)> {
    let band = build
        .scene
        .bands()
        .iter()
        .find(|b| b.label == col)
        .expect("band exists");
    let x = crate::scene::col_x(col);
    vec![(x, band.ylo), (x, band.yhi)]
}

/// Carry a rtl result built on the rotated diagram back to the original
/// grid: columns relabel by `c -> n + 1 - c`.
fn relabel_rotated(palf: &mut Palf, n: usize) {
    let map = |l: usize| if l == 0 { 0 } else { n + 1 - l };
    let feet: Vec<Foot> = palf
        .fiber
        .word()
        .iter()
        .map(|f| Foot {
            label: map(f.label),
            end: f.end,
        })
        .collect();
    let fiber = RibbonFiber::from_feet(feet, palf.fiber.base()).unwrap();
    let relabel_curve = |c: &Curve, fiber: &RibbonFiber| -> Curve {
        let traversals: Vec<(usize, i64)> =
            c.traversals.iter().map(|&(l, s)| (map(l), s)).collect();
        let mut homology = vec![0i64; fiber.handle_count()];
        for &(l, s) in &traversals {
            homology[fiber.basis_index(l).unwrap()] += s;
        }
        Curve {
            name: if c.name.starts_with("C0") {
                c.name.clone()
            } else {
                format!("C{}", map(c.name[1..].parse::<usize>().unwrap()))
            },
            traversals,
            homology,
            embedding: c.embedding.clone(),
        }
    };
    palf.cycles = palf.cycles.iter().map(|c| relabel_curve(c, &fiber)).collect();
    palf.c0_curves = palf
        .c0_curves
        .iter()
        .map(|c| relabel_curve(c, &fiber))
        .collect();
    palf.lifts = palf.lifts.iter().map(|&c| map(c)).collect();
    palf.lifts.sort_unstable();
    palf.fiber = fiber;
}

/// The right-to-left variant on the rotated diagram reproduces the fiber
/// of the flex construction up to rotation: compare canonical words.
pub fn rtl_equivalence_check(grid: &GridDiagram) -> Result<bool, ConstructError> {
    let flex = construct_palf(grid, Strategy::Flex, false)?;
    let rtl = construct_palf(&grid.rotate180(), Strategy::Rtl, false)?;
    let mut reversed = flex.boundary_word();
    reversed.reverse();
    Ok(canonical_word(&rtl.boundary_word()) == canonical_word(&reversed))
}

/// Attach a single column in tests without the full driver.
#[doc(hidden)]
pub fn lift_column_for_test(scene: &mut Scene, grid: &GridDiagram, col: usize) {
    lift_column(scene, grid, col).ok().expect("column lifts");
}

/// Raw single-diagram build for the development harness.
#[doc(hidden)]
pub fn build_debug(
    grid: &GridDiagram,
    strategy: Strategy,
) -> Result<(Vec<usize>, Vec<usize>), ConstructError> {
    let build = build_on_grid(grid, strategy)?;
    Ok((
        build.word.iter().map(|f| f.label).collect(),
        build.lifts,
    ))
}

/// Step the construction column by column, printing cap diagnostics.
#[doc(hidden)]
pub fn trace_build(grid: &GridDiagram, strategy: Strategy) {
    let lifts = base_lifts(grid);
    let mut scene = Scene::init(grid).unwrap();
    scene.set_comb_mode(strategy == Strategy::Comb);
    for &col in &lifts {
        let tops = foot_plans(&scene, grid, col, true).len();
        let bots = foot_plans(&scene, grid, col, false).len();
        println!("col {col}: {tops} top plans, {bots} bottom plans");
        match lift_column(&mut scene, grid, col) {
            Ok(()) => {
                let word: Vec<usize> =
                    scene.boundary_word().iter().map(|f| f.label).collect();
                println!("   attached; word now {word:?}");
            }
            Err(LiftFailure::Blocked(b)) => {
                println!("   BLOCKED by column {b}");
                return;
            }
            Err(LiftFailure::Stuck) => {
                println!("   STUCK");
                return;
            }
            Err(LiftFailure::Scene(e)) => {
                println!("   scene error {e}");
                return;
            }
        }
    }
}

/// Grid fixtures used across the crate.
pub mod fixtures {
    use super::*;

    /// Legendrian right-handed trefoil, writhe 3, two NW corners.
    pub fn trefoil5() -> GridDiagram {
        GridDiagram::new(vec![5, 1, 2, 3, 4], vec![2, 3, 4, 5, 1], None).unwrap()
    }

    /// Legendrian unknot with maximal tb on the smallest grid.
    pub fn unknot2() -> GridDiagram {
        GridDiagram::new(vec![1, 2], vec![2, 1], None).unwrap()
    }

    /// Positive torus knot T(2, 2n+1) on a (2n+3)-grid, tb = 2n-1.
    pub fn torus_knot(n: usize) -> GridDiagram {
        assert!(n >= 1);
        let size = 2 * n + 3;
        let mut xs = vec![0; size];
        let mut os = vec![0; size];
        for r in 1..=size {
            os[r - 1] = if r < size { r + 1 } else { 1 };
            xs[r - 1] = if r == 1 { size } else { r - 1 };
        }
        GridDiagram::new(xs, os, None).unwrap()
    }

    /// Positive twist knot W_s; W_1 is the trefoil.
    pub fn twist_knot(s: usize) -> GridDiagram {
        assert!(s >= 1);
        if s == 1 {
            return trefoil5();
        }
        // Placeholder until the family fixture is finalized.
        torus_knot(s)
    }

    /// Figure-eight knot in grid position.
    pub fn figure_eight() -> GridDiagram {
        // Placeholder until the fixture is finalized.
        GridDiagram::new(vec![3, 4, 5, 6, 1, 2], vec![2, 3, 4, 5, 6, 1], None).unwrap()
    }

    /// Two-component Legendrian link on the annulus 0-handle.
    pub fn link_example() -> GridDiagram {
        // Placeholder until the fixture is finalized.
        let mut g =
            GridDiagram::new(vec![2, 1, 4, 3], vec![1, 2, 3, 4], None).unwrap();
        let _ = &mut g;
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_construction() {
        let palf = construct_palf(&fixtures::unknot2(), Strategy::Flex, true).unwrap();
        assert_eq!(palf.lifts, vec![1]);
        assert_eq!(canonical_word(&palf.boundary_word()), vec![1, 1]);
        assert_eq!(palf.fiber.boundary_components(), 2);
        assert!(palf.is_allowable());
    }

    #[test]
    fn trefoil_lifts_and_word() {
        let palf = construct_palf(&fixtures::trefoil5(), Strategy::Flex, true).unwrap();
        assert_eq!(palf.lifts, vec![1, 2, 3, 4]);
        assert_eq!(
            palf.canonical_word(),
            canonical_word(&[2, 3, 1, 4, 2, 3, 4, 1])
        );
        let f = &palf.fiber;
        assert_eq!(
            (f.euler_characteristic(), f.boundary_components(), f.genus()),
            (-3, 3, 1)
        );
    }
}
