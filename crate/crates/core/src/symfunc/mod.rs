//! Symmetric functions: Schur, flagged and multi-Schur polynomials, raising
//! operator formulas for `Q` and `P` functions, and basis expansions.

pub mod expand;
pub mod families;
pub mod qp;
pub mod raising;
pub mod schur;

pub use expand::{lr_coefficients, schur_expand, solve_in_span};
pub use families::{c_family, c_hat, c_single, frak_c, frak_c_hat, FChoice};
pub use qp::{
    double_schur_p, double_schur_p_sym, hat_star, multi_schur_q, p_ell_sym, phat_pfaffian, phat_star, schur_p,
    schur_q,
};
pub use raising::{PairOp, RaisingExpr, RaisingTerm};
pub use schur::{flagged_det, flagged_schur, flagged_schur_rows, mixed_rows, multi_schur, schur_in, schur_s};
