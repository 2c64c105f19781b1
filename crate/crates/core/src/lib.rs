#![no_std]

extern crate alloc;

pub mod antipode_equiv;
pub mod catalog;
pub mod drinfeld;
pub mod dynamical;
pub mod error;
pub mod linalg;
pub mod qtriangular;
pub mod random;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod twist;

pub use error::{Error, Result};
pub use scalar::{Field, Rational, Scalar};
pub use tensor::{Algebra, LinearMap, Tensor};
