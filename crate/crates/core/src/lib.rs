//! Exact computations with vector bundles over the projective line,
//! quaternionic-like linear structures and twistor spheres of orbits.

pub mod error;
pub mod bundles;
pub mod catalog;
pub mod cli;
pub mod form;
mod fraction_free;
pub mod kernel;
pub mod lie;
pub mod linalg;
pub mod modp;
pub mod orbit;
pub mod polymat;
pub mod qlike;
pub mod scalar;

pub use error::{Error, Result};
pub use form::BinaryForm;
pub use linalg::Matrix;
pub use polymat::PolyMatrix;
pub use scalar::Scalar;
