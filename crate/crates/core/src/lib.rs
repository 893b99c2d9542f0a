//! Exact tables of graded modules over polynomial rings.
//!
//! The crate computes Betti, Ext and local cohomology tables in series form
//! (vectors of rational functions with `(1-t)`-power denominators), maps
//! between the table spaces, and decomposes tables as positive rational
//! combinations of the pure-resolution generator families, with exact-LP
//! certificates for both membership and non-membership. A monomial-module
//! backend supplies genuine instances: Hilbert series, graded Betti numbers,
//! Ext and local cohomology of direct sums of shifted monomial quotients and
//! monomial ideals, together with primary decomposition, dimension
//! filtrations, saturation and the dimension-3 identity checkers.
//!
//! All arithmetic is exact; equality of tables is decidable and never goes
//! through series truncation.

pub mod corpus;
pub mod decomp;
pub mod gamma;
pub mod laurent;
pub mod linalg;
pub mod lp;
pub mod maps;
pub mod monomial;
pub mod pure;
pub mod rat;
pub mod ratfunc;
pub mod sacm;
pub mod table;

pub use laurent::LaurentPoly;
pub use rat::Rat;
pub use ratfunc::{ratfunc_normalize, Direction, RatFunc};
pub use table::{table_combine, Orientation, Table};
