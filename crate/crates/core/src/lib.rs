pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod polytope;
pub mod polarize;
pub mod weights;
pub mod latticegen;
pub mod series;
pub mod cli;
