//! Exact sparse polynomials over `ℤ[½]`, series atoms, and the rings `Γ`, `Γ′`.

pub mod divdiff;
pub mod dyadic;
pub mod gamma;
pub mod json;
pub mod linalg;
pub mod monomial;
#[allow(clippy::module_inception)]
pub mod poly;
pub mod series;

pub use divdiff::{divided_difference, divided_difference_word, omega, reflect, Side};
pub use dyadic::Dyadic;
pub use gamma::{canonical, gamma_eq, normalize, peel_x, GammaElement, Ring};
pub use json::{from_json_terms, to_json_terms, JsonTerm};
pub use linalg::{det, pfaffian};
pub use monomial::{Family, Monomial, Var};
pub use poly::Poly;
pub use series::{complete, elementary, gen_eh, q_in, supersym_h, supersym_h_in, Alphabet, EH};
