pub mod cli;
pub mod error;
pub mod identities;
pub mod poly;
pub mod quad;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64 as Complex;
