//! Gruenberg–Kegel prime graphs of finite simple groups, their extensions, and
//! a replay engine deciding which sporadic groups are determined by the
//! isomorphism type of their prime graph.

pub mod catalog;
pub mod error;
pub mod extensions;
pub mod families;
pub mod graph;
pub mod lemmas;
pub mod numtheory;
pub mod recogniser;

pub use error::{Error, Result};
