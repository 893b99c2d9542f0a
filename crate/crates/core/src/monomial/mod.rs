//! Concrete graded modules: direct sums of shifted monomial cyclic
//! quotients and shifted monomial ideals, with exact Hilbert series, graded
//! Betti numbers, Ext and local cohomology tables, primary decomposition
//! and dimension filtrations.

pub mod betti;
pub mod classify;
pub mod ext;
pub mod filtration;
pub mod hilbert;
pub mod homology;
pub mod ideal;
pub mod module;

pub use betti::{graded_betti, projective_dimension, subquotient_betti};
pub use classify::{classify, dim_depth, Classification};
pub use ext::{ext_table, local_coh_table, ExtError};
pub use filtration::{dimension_filtration, DimensionFactor, FiltrationResult, SummandFiltration};
pub use hilbert::hilbert_series;
pub use ideal::{IdealError, MonomialIdeal};
pub use module::{GradedModule, ModuleError, Summand, SummandKind};
