//! Construction of positive allowable Lefschetz fibrations (PALFs) from
//! knots and links in grid position.
//!
//! The pipeline: parse a grid diagram ([`grid`]), deform the 0-handle and
//! attach 1-handles in a planar scene ([`scene`]), read off the ribbon
//! fiber and its vanishing cycles ([`fiber`], [`construct`]), act on
//! homology ([`monodromy`]) and verify every checkable claim ([`verify`]).

pub mod construct;
pub mod fiber;
pub mod grid;
pub mod matrix;
pub mod monodromy;
pub mod openbook;
pub mod report;
pub mod scene;
pub mod svg;
pub mod verify;

pub use construct::{construct_palf, Palf, Strategy};
pub use fiber::{Curve, FiberBase, IntersectionForm, RibbonFiber};
pub use grid::GridDiagram;
pub use monodromy::MonodromyFactorization;
pub use verify::VerificationReport;
