pub mod code;
pub mod construct;
pub mod embedding;
pub mod error;
pub mod field;
pub mod forge;
pub mod linalg;
pub mod params;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
