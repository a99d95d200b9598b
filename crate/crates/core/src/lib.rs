//! Rational group algebras of finite groups: primitive central idempotents,
//! Wedderburn components, the SN/SSN/NCN properties and nilpotent
//! decomposition.

pub mod arith;
pub mod components;
pub mod config;
pub mod error;
pub mod group;
pub mod props;
pub mod qalgebra;
pub mod report;
pub mod shoda;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
