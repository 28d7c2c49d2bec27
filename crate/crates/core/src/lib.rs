pub mod algebraic;
pub mod classify;
pub mod cli;
pub mod cyclotomic;
pub mod dynamics;
pub mod error;
pub mod polyring;

pub use error::{Error, Result};
