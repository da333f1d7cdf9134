//! Construction and verification of cubic graphs without cycles whose length
//! is a power of two.
//!
//! The crate builds graphs by *vertex inflation*: every vertex of a cubic base
//! graph is replaced by a small gadget with three attachment vertices. It then
//! certifies the properties of the results with an exact cycle search, flow
//! based connectivity tests, and rotation-system genus computations.
//!
//! ```
//! use pow2free::atlas;
//! use pow2free::cycles::is_pow2_cycle_free;
//!
//! let petersen = atlas::petersen();
//! assert!(is_pow2_cycle_free(&petersen.graph, 2).unwrap().is_free());
//! ```

pub mod atlas;
pub mod canon;
pub mod cycles;
pub mod embedding;
pub mod format;
pub mod graph;
pub mod replacement;
pub mod search;
pub mod structure;
pub mod traversal;

pub use graph::{Graph, GraphError};
