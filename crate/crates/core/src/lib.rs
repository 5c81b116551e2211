//! Coverings, fundamental groupoids, gradings and smash products of
//! finite small categories.

pub mod cat;
pub mod cover;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod frac;
pub mod grading;
pub mod group;
pub mod io;
pub mod universal;

pub use error::{Error, Result};
