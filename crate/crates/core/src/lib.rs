pub mod algebroid;
pub mod envelope;
pub mod error;
pub mod intertwine;
pub mod lie_core;
pub mod linalg;
pub mod regfun;
pub mod scalar;
pub mod weyl;
pub mod zhu;

pub use error::{Error, Result};
pub use scalar::{Nf, Poly, Scalar};
