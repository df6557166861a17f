//! Root systems of simply-laced Dynkin diagrams, their Weyl groups, the
//! abelianized pure braid group, and exact verification of the lattice
//! representations that carry the Weyl action.

pub mod braid;
pub mod dynkin;
pub mod error;
pub mod exactla;
pub mod oracle;
pub mod reps;
pub mod roots;
pub mod weyl;

pub use braid::{abelianize, act_on_ab, parse_word, AbVector, BraidWord, Letter};
pub use dynkin::{parse_diagram, DynkinDiagram, Family, IntersectionForm};
pub use error::{Error, Result};
pub use roots::{enumerate_roots, Root, RootSystem};
pub use weyl::{apply_word, simple_reflection, WeylElement};
pub use oracle::{numeric_linking, OracleOutput, OracleParams};
pub use reps::{build_rep, RepKind, VerificationReport, WRepresentation};
