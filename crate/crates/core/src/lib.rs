pub mod array;
pub mod atlas;
pub mod bounds;
pub mod brent;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod golden;
pub mod poly;
pub mod report;
pub mod search;
pub mod spectral;
pub mod surd;

pub use array::{parse_array, DerivedParams, IntersectionArray};
pub use error::{Error, Result};
pub use spectral::{EigValue, Multiplicity, Spectrum};
