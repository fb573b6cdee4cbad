//! Exact combinatorics for comparing irreducible dimensions with conjugacy
//! class sizes.
//!
//! The crate covers three families of finite groups:
//!
//! * symmetric groups `S_n`, through partitions, the hook-length formula,
//!   the class equation and Plancherel sampling ([`partitions`], [`symstats`]);
//! * general linear groups `GL_n(F_q)`, through exact polynomials in `q` and
//!   truncated power series ([`qseries`]);
//! * small unitriangular groups over `F_p`, by brute-force coadjoint orbits
//!   and conjugacy classes ([`kirillov`]).
//!
//! All counts are arbitrary precision. Floating point only appears in
//! logarithms and in derived statistics that are explicitly real-valued.

#![allow(clippy::needless_range_loop)]

pub mod bigmath;
pub mod error;
pub mod kirillov;
pub mod partitions;
pub mod qseries;
pub mod symstats;

pub use error::{Error, Result};
pub use partitions::{FrequencyForm, Partition};
