//! Reflections and divided differences on `Γ[Y, Z]` and `Γ′[Y, Z]`.

use super::monomial::{Family, Var};
use super::poly::Poly;
use super::series::{complete, Alphabet};
use crate::error::{Error, Result};
use crate::weyl::Gen;

/// Which alphabet an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Y,
    Z,
}

/// The involution `y_j ↦ −z_j`, `z_j ↦ −y_j`, fixing `q_r`.
pub fn omega(f: &Poly) -> Poly {
    f.rename(|v| match v {
        Var::Y(i) => (Var::Z(i), true),
        Var::Z(i) => (Var::Y(i), true),
        v => (v, false),
    })
}

fn y(i: u8) -> Poly {
    Poly::var(Var::Y(i))
}

/// `s_0(q_r) = q_r(y_1, X) = q_r + 2 Σ_{j=1}^r y_1^j q_{r−j}`.
fn s0_image(r: i64) -> Poly {
    let mut out = Poly::q(r);
    for j in 1..=r {
        out += &(&y(1).pow(j as u32) * &Poly::q(r - j)).scale_i64(2);
    }
    out
}

/// `s_□(q_r) = q_r + 2 (y_1 + y_2) Σ_{j<r} h_j(y_1, y_2) q_{r−1−j}`.
fn sbox_image(r: i64) -> Poly {
    let pair = Alphabet::first(Family::Y, 2, false);
    let mut sum = Poly::zero();
    for j in 0..r {
        sum += &(&complete(j, &pair) * &Poly::q(r - 1 - j));
    }
    &Poly::q(r) + &(&(&y(1) + &y(2)) * &sum).scale_i64(2)
}

/// The action of a simple reflection on the `y` side.
pub fn reflect_y(f: &Poly, g: Gen) -> Poly {
    match g {
        Gen::I(0) => f.substitute(|v| match v {
            Var::Q(r) => Some(s0_image(r as i64)),
            Var::Y(1) => Some(-y(1)),
            _ => None,
        }),
        Gen::Box => f.substitute(|v| match v {
            Var::Q(r) => Some(sbox_image(r as i64)),
            Var::Y(1) => Some(-y(2)),
            Var::Y(2) => Some(-y(1)),
            _ => None,
        }),
        Gen::I(i) => f.swap(Var::Y(i as u8), Var::Y(i as u8 + 1)),
    }
}

/// The action of a simple reflection, on either side.
pub fn reflect(f: &Poly, g: Gen, side: Side) -> Poly {
    match side {
        Side::Y => reflect_y(f, g),
        Side::Z => omega(&reflect_y(&omega(f), g)),
    }
}

fn check_ring(f: &Poly, g: Gen) -> Result<()> {
    if matches!(g, Gen::I(0) | Gen::Box) && f.has_family(Family::X) {
        return Err(Error::WrongRing("s_0 and s_□ act on q-form, not on x variables".into()));
    }
    Ok(())
}

/// `∂^y_g`: `(f − s_i f)/(y_i − y_{i+1})`, `(f − s_0 f)/(−2y_1)`, or `(f − s_□ f)/(−y_1 − y_2)`.
pub fn divided_difference_y(f: &Poly, g: Gen) -> Result<Poly> {
    check_ring(f, g)?;
    let num = f - &reflect_y(f, g);
    match g {
        Gen::I(0) => Ok(num.div_linear(Var::Y(1), None)?.halve(1).scale_i64(-1)),
        Gen::Box => Ok(-num.div_linear(Var::Y(1), Some((Var::Y(2), -1)))?),
        Gen::I(i) => num.div_linear(Var::Y(i as u8), Some((Var::Y(i as u8 + 1), 1))),
    }
}

/// `∂_g` on either side; `∂^z = ω ∂^y ω`.
pub fn divided_difference(f: &Poly, g: Gen, side: Side) -> Result<Poly> {
    match side {
        Side::Y => divided_difference_y(f, g),
        Side::Z => Ok(omega(&divided_difference_y(&omega(f), g)?)),
    }
}

/// Apply `∂_{g_1} ∘ ⋯ ∘ ∂_{g_r}` with the rightmost generator acting first.
pub fn divided_difference_word(f: &Poly, word: &[Gen], side: Side) -> Result<Poly> {
    let mut out = f.clone();
    for &g in word.iter().rev() {
        if out.is_zero() {
            break;
        }
        out = divided_difference(&out, g, side)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gamma::gamma_eq;

    #[test]
    fn type_a_basics() {
        assert_eq!(divided_difference(&y(1), Gen::I(1), Side::Y).unwrap(), Poly::one());
        assert!(divided_difference(&(&y(1) * &y(2)), Gen::I(1), Side::Y).unwrap().is_zero());
    }

    #[test]
    fn s0_on_q1() {
        assert_eq!(reflect_y(&Poly::q(1), Gen::I(0)), &Poly::q(1) + &y(1).scale_i64(2));
        assert_eq!(divided_difference(&Poly::q(1), Gen::I(0), Side::Y).unwrap(), Poly::one());
    }

    #[test]
    fn sbox_is_involution_mod_relations() {
        for r in 1..6 {
            let twice = reflect_y(&reflect_y(&Poly::q(r), Gen::Box), Gen::Box);
            assert!(gamma_eq(&twice, &Poly::q(r)), "r = {r}");
            let twice = reflect_y(&reflect_y(&Poly::q(r), Gen::I(0)), Gen::I(0));
            assert!(gamma_eq(&twice, &Poly::q(r)), "r = {r}");
        }
    }

    #[test]
    fn z_side_via_omega() {
        let z1 = Poly::var(Var::Z(1));
        assert_eq!(divided_difference(&z1, Gen::I(1), Side::Z).unwrap(), Poly::constant(-1));
        let f = Poly::q(1);
        assert_eq!(divided_difference(&f, Gen::I(0), Side::Z).unwrap(), Poly::one());
    }

    #[test]
    fn x_input_rejected_for_s0() {
        let f = Poly::var(Var::X(1));
        assert!(matches!(divided_difference(&f, Gen::I(0), Side::Y), Err(Error::WrongRing(_))));
    }
}
