//! Exact evaluation of Rehan-Lanel type topological indices.
//!
//! The engine works over arbitrary-precision rationals. A descriptor names a
//! degree source, a kernel variant, a transform, an aggregation and a form;
//! [`registry`] lists the 448 catalog names and [`lookup`] resolves them.

pub mod closed_forms;
pub mod error;
pub mod exactnum;
pub mod functionals;
pub mod graph;
pub mod index;

pub use closed_forms::{
    oracle_value, oracles, verify, Baseline, OracleEntry, OracleResult, OracleValue, Verdict, VerifyOptions,
};
pub use error::{Error, Result};
pub use exactnum::{format_significant, ExpPoly, Rat, SurdSum};
pub use functionals::{DegreeSource, DominationConfig, FunctionalTable};
pub use graph::{generate, parse_edge_list, random_connected, write_edge_list, FamilyKind, FamilySpec, Graph};
pub use index::{
    evaluate, lookup, registry, special_index, Aggregation, Engine, Form, IndexDescriptor, IndexResult, IndexSpec,
    KernelVariant, RegistryEntry, SpecialIndex, Transform, TransformKind,
};
