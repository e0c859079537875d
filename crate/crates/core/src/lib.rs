//! Exact structure-constant computations for crossed products of
//! finite-dimensional Hopf algebras and their braidings.

#![allow(clippy::needless_range_loop)]

pub mod braiding;
pub mod cli;
pub mod crossed;
pub mod field;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod polybraid;
pub mod presets;
pub mod structure;
