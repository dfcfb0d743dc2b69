//! Varieties of minimal rational tangents of wonderful compactifications of
//! irreducible adjoint symmetric spaces, computed from marked Kac diagrams.
#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod atlas;
pub mod error;
pub mod exec;
pub mod graph;
pub mod render_io;
pub mod root_core;
pub mod verify;
pub mod vmrt_engine;

pub use error::{Error, Result};
