//! Coadjoint orbits against conjugacy classes for small unitriangular
//! groups over `F_p`.
//!
//! Only `p` larger than the nilpotency class is supported, since the
//! truncated exponential and logarithm need `1/k!` for `k` up to the class.
//! This excludes the order-8 groups (`p = 2`), where the two kinds of data
//! already disagree and the exponential correspondence is unavailable.

mod algebra;
mod orbits;

pub use algebra::{exp_element, FpMatrix, NilAlgebra, Preset};
pub use orbits::{coadjoint_orbits, conjugacy_classes, kirillov_report, OrbitReport};
