//! Bounds and constructions for binary linear locally repairable codes.

pub mod bounds;
pub mod cli;
pub mod code;
pub mod construction;
pub mod error;
pub mod gf2;
pub mod gf2m;
pub mod tables;

pub use error::{Error, Result};
