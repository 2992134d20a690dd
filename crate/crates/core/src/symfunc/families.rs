//! The families `^kc^r_p`, their hatted variants, and the `t`-deformed `𝔠^r_p`.
//!
//! The `t` variables of the factorial functions are carried by the `z` family.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::poly::{gen_eh, Family, Poly, EH};

thread_local! {
    static C_FAMILY: RefCell<HashMap<(i64, i64, i64), Poly>> = RefCell::new(HashMap::new());
}

/// `^kc^r_p = Σ_{i,j} q_{p−i−j} h^{−k}_i(Y) h^r_j(−Z)`.
pub fn c_family(k: i64, r: i64, p: i64) -> Poly {
    if p < 0 {
        return Poly::zero();
    }
    if let Some(c) = C_FAMILY.with(|m| m.borrow().get(&(k, r, p)).cloned()) {
        return c;
    }
    let mut out = Poly::zero();
    for i in 0..=p {
        let hy = gen_eh(EH::H, i, -k, Family::Y, false);
        if hy.is_zero() {
            continue;
        }
        for j in 0..=p - i {
            let hz = gen_eh(EH::H, j, r, Family::Z, true);
            if hz.is_zero() {
                continue;
            }
            out += &(&(&Poly::q(p - i - j) * &hy) * &hz);
        }
    }
    C_FAMILY.with(|m| m.borrow_mut().insert((k, r, p), out.clone()));
    out
}

/// `^kc_p = ^kc^0_p`, the single version.
pub fn c_single(k: i64, p: i64) -> Poly {
    c_family(k, 0, p)
}

/// `𝔠^r_p = Σ_j q_{p−j} e^r_j(−t)`.
pub fn frak_c(r: i64, p: i64) -> Poly {
    (0..=p.max(-1)).map(|j| &Poly::q(p - j) * &gen_eh(EH::E, j, r, Family::Z, true)).sum()
}

/// `𝔠̂^β_α` at 1-based position `pos`: adds `(−1)^pos e^α_α(−t)` when `β = α > 0`.
pub fn frak_c_hat(pos: usize, r: i64, p: i64) -> Poly {
    let base = frak_c(r, p);
    if r == p && p > 0 {
        &base + &sign(pos, gen_eh(EH::E, p, p, Family::Z, true))
    } else {
        base
    }
}

/// How `f_k` is chosen in `^kĉ^r_p`; the correction term is `2f_k − ^kc_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FChoice {
    /// `f_k = ^kb_k`: correction `e^k_k(Y)`.
    B,
    /// `f_k = ^kb̃_k`: correction `−e^k_k(Y)`.
    BTilde,
    /// `f_k = ½ ^kc_k`: no correction.
    HalfC,
    /// `^kb̃_k` at odd positions and `^kb_k` at even ones.
    Alternating,
}

impl FChoice {
    /// `2f_k − ^kc_k` at 1-based position `pos`.
    pub fn correction(self, k: i64, pos: usize) -> Poly {
        let e = gen_eh(EH::E, k, k, Family::Y, false);
        match self {
            FChoice::B => e,
            FChoice::BTilde => -e,
            FChoice::HalfC => Poly::zero(),
            FChoice::Alternating => sign(pos, e),
        }
    }
}

fn sign(pos: usize, p: Poly) -> Poly {
    if pos % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `^kĉ^r_p = ^kc^r_p + (2f_k − ^kc_k) e^{p−k}_{p−k}(−Z)` if `r = k − p < 0`.
pub fn c_hat(k: i64, r: i64, p: i64, f: FChoice, pos: usize) -> Poly {
    let base = c_family(k, r, p);
    if r < 0 && r == k - p {
        let extra = &f.correction(k, pos) * &gen_eh(EH::E, p - k, p - k, Family::Z, true);
        &base + &extra
    } else {
        base
    }
}

/// `ω^s_p = Σ_{j=1}^p ^kc_{p−j} h^s_j(−Z)`.
pub fn omega_family(k: i64, s: i64, p: i64) -> Poly {
    (1..=p).map(|j| &c_single(k, p - j) * &gen_eh(EH::H, j, s, Family::Z, true)).sum()
}

/// `a^s_p = ½ ^kc_p + ω^s_p`.
pub fn a_family(k: i64, s: i64, p: i64) -> Poly {
    &c_single(k, p).halve(1) + &omega_family(k, s, p)
}

/// `b^s_k = ^kb_k + ω^s_k` (`tilde = false`) or `b̃^s_k = ^kb̃_k + ω^s_k`.
pub fn b_family(k: i64, s: i64, tilde: bool) -> Poly {
    let e = gen_eh(EH::E, k, k, Family::Y, false).halve(1);
    let half = c_single(k, k).halve(1);
    let b = if tilde { &half - &e } else { &half + &e };
    &b + &omega_family(k, s, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn y(i: u8) -> Poly {
        Poly::var(Var::Y(i))
    }
    fn z(i: u8) -> Poly {
        Poly::var(Var::Z(i))
    }

    #[test]
    fn first_c_values() {
        assert_eq!(c_family(1, 1, 1), &(&Poly::q(1) + &y(1)) - &z(1));
        assert_eq!(c_single(0, 3), Poly::q(3));
        assert_eq!(c_family(0, -1, 1), &Poly::q(1) - &z(1));
    }

    #[test]
    fn frak_c_single_row() {
        assert_eq!(frak_c(1, 1), &Poly::q(1) - &z(1));
        assert_eq!(frak_c_hat(1, 1, 1), &(&Poly::q(1) - &z(1)) + &z(1));
    }

    #[test]
    fn b_pair_sums_to_c() {
        for k in 1..3 {
            let s = &b_family(k, 0, false) + &b_family(k, 0, true);
            assert_eq!(s, c_single(k, k));
        }
    }
}
