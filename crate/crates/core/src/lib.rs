//! Quaternary locally recoverable codes.
//!
//! Exact GF(4) linear algebra, minimum-distance computation, projective
//! geometry over GF(4), (r,δ)-locality verification, a catalog of optimal
//! constructions with their parameter families, classification evidence and
//! a local erasure-repair simulator.
//!
//! Coordinates are 0-based in the library API unless a doc comment says
//! otherwise; the command-line tool and its JSON reports are 1-based.

pub mod classify;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf4;
pub mod lrc;
pub mod mat4;
mod packed;
pub mod pg;
pub mod repair;

pub use code::{CodeParams, LinearCode};
pub use error::{Error, Result};
pub use gf4::Gf4;
pub use mat4::Mat4;
