pub mod classical;
pub mod constructions;
pub mod error;
pub mod exceptional;
pub mod golden;
pub mod lattice;
pub mod poset;
pub mod rigidity;
pub mod tits;
pub mod variety;

pub use error::{Error, Result};
