//! Riemann surfaces of genus `g` with exactly `4g` automorphisms.
//!
//! The pipeline runs from admissible quotient signatures through smooth group
//! actions and their extensions by anticonformal involutions, to real forms
//! and the boundary of the resulting one-parameter family in moduli space.

pub mod actions;
pub mod boundary;
pub mod check;
pub mod error;
pub mod extensions;
pub mod groups;
pub mod realforms;
pub mod report;
pub mod signatures;

pub use actions::{ActionClass, GeneratingVector};
pub use boundary::{BoundaryDescription, NodalGraph};
pub use error::{Error, Result};
pub use extensions::{ExtendedAction, Kind};
pub use groups::{Elem, FiniteGroup, Structure, Subgroup};
pub use realforms::Species;
pub use report::{Atlas, Report, ReportOptions};
pub use signatures::{parse_signature, FamilyTag, Period, Sign, Signature, Word};
