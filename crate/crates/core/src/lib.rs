//! Computational tools for the (3,2;2,2) weakly locally projective amalgams:
//! GF(2) linear algebra, permutation groups, matrix actions, coset enumeration,
//! module computations, the amalgam verification suites and coset graphs.

pub mod error;
pub mod gf2;
pub mod perm;

pub use error::{Error, Result};
pub mod fp;
pub mod mataction;
pub mod repmod;
pub mod report;
pub mod lab;
pub mod completion;
pub mod cosetgraph;
pub mod cli;
