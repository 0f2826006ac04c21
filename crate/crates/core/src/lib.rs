//! Depth of group algebras of right-angled Artin groups and surface groups.
//!
//! The commutation graph of a right-angled Artin group determines its flag
//! complex, and the depth of the rational group algebra is read off from
//! link cohomology in three independent ways ([`depth`]). The supporting
//! algebra (enveloping algebras of the associated weighted Lie algebras,
//! their Hilbert series, and free resolutions of Q over them) is in
//! [`lie`] and [`resolution`], where truncated Ext groups give a fourth,
//! purely algebraic, certificate of the same numbers.

pub mod config;
pub mod depth;
pub mod error;
pub mod flag;
pub mod graph;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod resolution;
pub mod verify;

pub use config::Limits;
pub use error::{Error, Result};
pub use flag::{FlagComplex, Simplex};
pub use graph::{parse_graph, Graph, VertexSet};
