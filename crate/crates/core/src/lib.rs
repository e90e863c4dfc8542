pub mod centralizers;
pub mod config;
pub mod corpus;
pub mod error;
pub mod group;
pub mod models;
pub mod products;
pub mod saturation;
pub mod subsystems;
pub mod verify;

pub use error::{Error, Result};
pub mod fusion;

#[cfg(test)]
pub(crate) mod testing;
