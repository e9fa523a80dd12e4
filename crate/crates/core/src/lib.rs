//! Exact Plancherel and Jack–Plancherel averages of regular functions on
//! Young diagrams, with checkers for the polynomiality of those averages
//! and for the identities satisfied by the Kerov growth process.

pub mod error;
pub mod measure;
pub mod observables;
pub mod partition;
pub mod polycheck;
pub mod rat;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rat::Rat;
