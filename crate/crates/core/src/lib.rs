//! Unipotent invariants of filtered quiver representations.
//!
//! The crate decides whether a quiver has at most two pathways between any
//! two vertices, computes degree-truncated invariant subspaces of filtered
//! representation spaces by exact linear algebra, and builds the
//! bideterminant generators of the invariant ring for framed quivers.

pub mod dsl;
pub mod error;
pub mod exec;
pub mod filtrep;
pub mod invariants;
pub mod linalg;
pub mod polyring;
pub mod quiver;
pub mod report;
pub mod tableaux;

pub use error::{Error, Result};
pub use exec::Exec;
