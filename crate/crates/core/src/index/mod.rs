//! Descriptor algebra, the name registry and evaluation.

mod descriptor;
mod engine;
mod registry;

pub use descriptor::{Aggregation, Form, IndexDescriptor, KernelVariant, Transform, TransformKind};
pub use engine::{evaluate, special_index, ApproxPoly, Engine, IndexResult, APPROX_REL_TOL};
pub use registry::{lookup, registry, registry_lookup, IndexSpec, RegistryEntry, SpecialIndex};
