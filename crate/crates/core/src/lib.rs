pub mod chromatic;
pub mod error;
pub mod bounds;
pub mod graph;
pub mod json;
pub mod optimize;
pub mod poly;
pub mod polymer;
pub mod roots;
pub mod series;

pub use error::{Error, Result};
