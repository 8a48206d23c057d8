//! Centralizer diagrams, cubic complexes and the deformation complexes built from them.

mod centralizer;
mod classes;
mod cubic;
mod deformation;

pub use centralizer::{centralizer, CentralizerRoute, Level, Workspace};
pub use classes::{
    symmetric_models, symmetric_reduced_complex, SignedClassQuotient, SymmetricRoute,
};
pub use cubic::{
    cubic_cohomology, random_module, relative_cube_dims, top_quotient, CubicDiagram,
    RelativeCubeRow, SnModule,
};
pub use deformation::{
    deformation_complex_truncated, first_cohomology_direct, generic_models, horizontal_cohomology,
    horizontal_diagram, reduced_coface, reduced_complex, Component, GenericQuotient, Model,
    ModelProvider, QuotientRoute, ReducedComplex, TruncatedComplex, WeightQuotient, WeightSummary,
};
