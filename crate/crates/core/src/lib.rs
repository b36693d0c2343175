//! Generalized Petersen graphs `G(n,k)`: closed-form core classification with
//! explicit retractions, homomorphism and isomorphism search, automorphisms,
//! finite semigroup tables, and Cayley-graph representations.
//!
//! ```
//! use gpetersen::{classify_core, GPParams};
//!
//! let petersen = GPParams::new(5, 2).unwrap();
//! assert!(classify_core(petersen).is_core());
//! ```

pub mod algebra;
pub mod cayley;
pub mod cores;
pub mod error;
pub mod gp;
pub mod graph;
pub mod hom;
pub mod plane;
pub mod symmetry;

pub use cores::{build_retraction, classify_core, CoreStatus, CoreVerdict};
pub use error::{Error, Result};
pub use gp::{build_gp, GPParams};
pub use graph::SimpleGraph;
pub use hom::{SearchBudget, VertexMap};
