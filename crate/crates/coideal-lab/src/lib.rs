pub mod classifier;
pub mod coefficients;
pub mod error;
mod linalg;
pub mod pbw;
pub mod phi;
pub mod scalar;
pub mod shuffle;
pub mod words;
