pub mod algebra;
pub mod error;
pub mod io;
pub mod lift;
pub mod random;
pub mod report;
pub mod structure;
pub mod tensor;
pub mod theorem;

pub use error::{Error, Result};
