//! Regular (Kuhn-type) triangulation of the dilated standard simplex and
//! Sperner labelings of its vertices.
//!
//! The crate enumerates the lattice points of the simplex `{x in Z^k : x_i >= 0,
//! sum x_i = q}`, builds its regular triangulation into `q^(k-1)` unimodular
//! cells by three independent constructions (anchored permutation chains, and
//! k-clique enumeration over two adjacency graphs), evaluates Sperner labelings
//! on the result, and computes the exact minimum number of non-monochromatic
//! cells by brute force or branch and bound, together with closed-form lower
//! and upper bounds.
//!
//! Module map:
//! - [`lattice`]: point enumeration, coordinate changes, vertex ids
//! - [`triangulation`]: the three cell builders, adjacency graphs, validation
//! - [`labeling`]: Sperner labelings, the first-choice labeling, cell color counts
//! - [`hypergraph`]: the simplex-lattice hypergraph and its embedding as cells
//! - [`search`]: exact minimization with machine-checkable certificates
//! - [`report`]: closed-form bounds, CSV/table emission

pub mod error;
pub mod hypergraph;
pub mod labeling;
pub mod lattice;
pub mod report;
pub mod search;
pub mod triangulation;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
