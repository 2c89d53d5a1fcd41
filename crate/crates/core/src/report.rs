//! Deterministic JSON reports: schema-versioned, stable field order,
//! byte-identical for identical inputs.

use crate::construct::Palf;
use crate::grid::GridDiagram;
use crate::verify::VerificationReport;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub input: GridEcho,
    pub invariants: Vec<ComponentInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridEcho {
    pub n: usize,
    pub xs: Vec<usize>,
    pub os: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hole: Option<(usize, usize)>,
    pub components: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentInvariants {
    pub component: usize,
    pub writhe: i64,
    pub nw_corners: usize,
    pub tb: i64,
    pub framing: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub strategy: String,
    pub lifted_columns: Vec<usize>,
    pub boundary_word: Vec<usize>,
    pub canonical_word: Vec<usize>,
    pub fiber: FiberReport,
    pub factorization: Vec<CycleReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hole_windings: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub base: String,
    pub handles: usize,
    pub euler_characteristic: i64,
    pub boundary_components: usize,
    pub genus: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleReport {
    pub name: String,
    pub homology: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface_framing: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub framing: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSection {
    pub overall: bool,
    pub report: VerificationReport,
}

pub fn grid_echo(grid: &GridDiagram) -> GridEcho {
    GridEcho {
        n: grid.n(),
        xs: (1..=grid.n()).map(|r| grid.x_col(r)).collect(),
        os: (1..=grid.n()).map(|r| grid.o_col(r)).collect(),
        hole: grid.hole(),
        components: grid.component_count(),
    }
}

pub fn invariants_section(grid: &GridDiagram) -> Vec<ComponentInvariants> {
    (0..grid.component_count())
        .map(|k| {
            let inv = grid.legendrian_invariants(k).unwrap();
            ComponentInvariants {
                component: k,
                writhe: inv.writhe,
                nw_corners: inv.nw_corners,
                tb: inv.tb,
                framing: inv.framing,
            }
        })
        .collect()
}

pub fn construction_section(palf: &Palf) -> ConstructionReport {
    let f = &palf.fiber;
    ConstructionReport {
        strategy: palf.strategy.name().to_string(),
        lifted_columns: palf.lifts.clone(),
        boundary_word: palf.boundary_word(),
        canonical_word: palf.canonical_word(),
        fiber: FiberReport {
            base: match f.base() {
                crate::fiber::FiberBase::Disk => "disk".to_string(),
                crate::fiber::FiberBase::Annulus => "annulus".to_string(),
            },
            handles: f.handle_count(),
            euler_characteristic: f.euler_characteristic(),
            boundary_components: f.boundary_components(),
            genus: f.genus(),
        },
        factorization: palf
            .cycles
            .iter()
            .map(|c| {
                let sf = f.surface_framing(c).ok();
                CycleReport {
                    name: c.name.clone(),
                    homology: c.homology.clone(),
                    surface_framing: sf,
                    framing: sf.map(|v| v - 1),
                }
            })
            .collect(),
        hole_windings: if palf.scene_grid.hole().is_some() {
            palf.windings.clone()
        } else {
            Vec::new()
        },
    }
}

pub fn document(
    grid: &GridDiagram,
    palf: Option<&Palf>,
    verification: Option<VerificationReport>,
) -> ReportDocument {
    ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input: grid_echo(grid),
        invariants: invariants_section(grid),
        construction: palf.map(construction_section),
        verification: verification.map(|report| VerificationSection {
            overall: report.all_pass(),
            report,
        }),
    }
}

pub fn to_json(doc: &ReportDocument) -> String {
    serde_json::to_string_pretty(doc).expect("report serializes")
}
