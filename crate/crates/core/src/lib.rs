//! Exact zeta-function calculus for additive codes over finite abelian groups.

pub mod algebra;
pub mod code;
pub mod curves;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod mds;
pub mod rrc;
pub mod zeta;

pub use error::{Error, Result};
