//! Exact computational topology for closed manifolds.
//!
//! The crate computes integral and mod-2 (co)homology of simplicial and chain
//! complexes with exact integer arithmetic, certifies closed-pseudomanifold
//! structure and orientability, evaluates simplicial Steenrod squares through
//! cup-i products, and decides C-triviality (every complex vector bundle has
//! total Chern class 1) from the homological classification criteria that are
//! complete through dimension 7.
//!
//! The main pipeline is [`classify::classify_complex`]: facets in, a manifold
//! certificate, an integral homology profile and a cited verdict out.

pub mod abelian;
pub mod chain;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod gf2;
pub mod io;
pub mod simplicial;
pub mod steenrod;
pub mod verify;
pub mod matrix;
pub mod mod2;

pub use abelian::FGAbelianGroup;
pub use chain::{ChainComplex, Coefficients, HomologyProfile};
pub use classify::{Obstruction, Outcome, Verdict};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, SNFResult};
pub use mod2::Mod2Cochain;
pub use simplicial::SimplicialComplex;
pub use verify::ManifoldCertificate;
