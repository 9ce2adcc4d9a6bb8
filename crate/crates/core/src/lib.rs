//! Exact computational algebra for quaternionic Prym varieties and the Hodge
//! classes of abelian varieties of quaternion type.
//!
//! Every computation is carried out over `Q`, `Q(i)`, `Z` or `F_p`; there is no
//! floating point anywhere in the crate.

pub mod cover_homology;
pub mod curve_model;
pub mod error;
pub mod exterior;
pub mod lattice;
pub mod lie_engine;
pub mod linalg;
pub mod qalg;
pub mod report;
pub mod spin_explicit;
pub mod surface_homs;
pub mod weil_classes;

pub use error::{Error, Result};
pub use linalg::{q, qf, Matrix, Rat};
