//! Schubert polynomials of all four classical types, Stanley functions,
//! theta and eta polynomials, splitting formulas, and identity checks.

pub mod compute;
pub mod expansion;
pub mod reverse;
pub mod theta;
pub mod verify;

pub use compute::{
    full_product, is_increasing_up_to, max_length, schubert, schubert_at_rank, schubert_poly,
    schubert_with_cap, stanley, SchubertJson, SchubertPoly, StanleyVariant, Type,
};
pub use theta::{eta, eta_with, theta};
