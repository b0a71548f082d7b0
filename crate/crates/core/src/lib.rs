pub mod arith;
pub mod cli;
pub mod curves;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod matgroups;
pub mod orbifold;
pub mod poly;
pub mod surfaces;
mod ser;

pub use error::{Error, Result};
