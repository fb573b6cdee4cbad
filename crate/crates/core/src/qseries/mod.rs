//! Exact polynomials in `q` and truncated power series in `t` for the
//! general linear groups `GL_n(F_q)`.
//!
//! Nothing here uses floating point; rationals are exact until they are
//! rendered.

mod gl;
mod poly;
mod series;

pub use gl::{
    feit_fine, gamma_q, gauss_identity_check, gauss_identity_sides, gl2_census, gl_order, gow_sum,
    is_prime, log_constant_ratio, log_constant_ratios, sl2_pgl2_leading_check,
    symmetric_invertible_count, CensusRow, GammaPartialSum, Gl2Census, LeadingPair, Sl2Pgl2Report,
    SYMMETRIC_ENUMERATION_LIMIT,
};
pub use poly::QPolynomial;
pub use series::TruncatedSeries;
