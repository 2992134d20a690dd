//! Structural properties: descent symmetries, stability in the rank,
//! factorization through Stanley functions, and the type B rescaling.

use crate::error::Result;
use crate::poly::{canonical, normalize, Family, Poly, Ring, Var};
use crate::weyl::{factorizations_with, Gen, Slot, WeylElement};

use super::super::compute::{max_length, schubert_at_rank, schubert_with_cap, stanley, StanleyVariant, Type};
use super::super::expansion::restricted_stanley;
use super::super::reverse::a_schubert_in;
use super::{elements, expect, gamma_diff, kind_rank_ok, schubert_of, sweep, Check, Report};

const UNSIGNED: Slot = Slot { unsigned: true, fixes_upto: 0 };

/// Swapping `y_i, y_{i+1}` fixes `𝔖_w` exactly when `s_i` is not a right
/// descent of `w`; likewise for `z` and left descents.
pub fn descent_symmetry_verify(ty: Type, n: usize) -> Result<Report> {
    if !kind_rank_ok(ty.kind(), n) {
        return Ok(Report::new("properties"));
    }
    let checks = sweep(&elements(ty, n), |w| {
        let s = match schubert_of(ty, w) {
            Ok(s) => canonical(&s),
            Err(e) => return vec![Check::new(&format!("{ty}.descent-symmetry"), w.to_string(), Err(e))],
        };
        let mut out = Vec::new();
        for i in 1..n {
            let g = Gen::I(i as u32);
            for (side, descent, a, b) in [
                ("y", w.has_right_descent(g), Var::Y(i as u8), Var::Y(i as u8 + 1)),
                ("z", w.has_left_descent(g), Var::Z(i as u8), Var::Z(i as u8 + 1)),
            ] {
                let same = gamma_diff(&s.swap(a, b), &s).is_none();
                let outcome = Ok(expect(same != descent, || {
                    format!("symmetric={same} but descent={descent}")
                }));
                out.push(Check::new(&format!("{ty}.descent-symmetry.{side}"), format!("w={w} i={i}"), outcome));
            }
        }
        out
    });
    Ok(Report::with_checks("properties", checks))
}

/// The rank `n` and rank `n + 1` extractions agree for every element of rank `n`.
pub fn stability_verify(ty: Type, n: usize) -> Result<Report> {
    if !kind_rank_ok(ty.kind(), n) {
        return Ok(Report::new("properties"));
    }
    let cap = max_length(ty.kind(), n + 1);
    let checks = sweep(&elements(ty, n), |w| {
        let outcome = (|| {
            let a = schubert_at_rank(ty, w, n, cap)?;
            let b = schubert_at_rank(ty, w, n + 1, cap)?;
            Ok(gamma_diff(&a, &b))
        })();
        vec![Check::new(&format!("{ty}.stability"), format!("w={w} n={n}"), outcome)]
    });
    Ok(Report::with_checks("properties", checks))
}

fn rename_y(p: &Poly, fam: Family, negate: bool) -> Poly {
    p.rename(|v| match v {
        Var::Y(i) => (fam.var(i as usize), negate),
        v => (v, false),
    })
}

/// `𝔖_w` as a sum over `u v ϖ = w` with `u, ϖ` unsigned.
fn factorized(ty: Type, w: &WeylElement) -> Result<Poly> {
    let mut sum = Poly::zero();
    if ty == Type::A {
        for f in factorizations_with(w, &[Slot::FREE, Slot::FREE]) {
            let left = a_schubert_in(&f[0].inverse(), Family::Z, 0, true)?;
            sum += &(&left * &a_schubert_in(&f[1], Family::Y, 0, false)?);
        }
        return Ok(sum);
    }
    for f in factorizations_with(w, &[UNSIGNED, Slot::FREE, UNSIGNED]) {
        let left = a_schubert_in(&f[0].inverse(), Family::Z, 0, true)?;
        let mid = stanley(ty, &f[1], StanleyVariant::Single)?;
        let right = a_schubert_in(&f[2], Family::Y, 0, false)?;
        sum += &(&(&left * &mid) * &right);
    }
    Ok(sum)
}

/// `G_w(Y/Z) = Σ_{uv=w} G_{u^{-1}}(−Z) G_v(Y)` in `ℓ(w)` variables each.
fn double_stanley_factorized(w: &WeylElement) -> Result<Poly> {
    let m = w.length() as usize;
    let mut sum = Poly::zero();
    for f in factorizations_with(w, &[Slot::FREE, Slot::FREE]) {
        let left = rename_y(&restricted_stanley(Type::A, &f[0].inverse(), m, 0)?, Family::Z, true);
        sum += &(&left * &restricted_stanley(Type::A, &f[1], m, 0)?);
    }
    Ok(sum)
}

/// The factorization of `𝔖_w` through reduced factorizations, for all `w`
/// of rank `n` with `ℓ(w) ≤ max_len`.
pub fn factorization_verify(ty: Type, n: usize, max_len: u32) -> Result<Report> {
    if ty == Type::B || !kind_rank_ok(ty.kind(), n) {
        return Ok(Report::new("properties"));
    }
    let items: Vec<WeylElement> = elements(ty, n).into_iter().filter(|w| w.length() <= max_len).collect();
    let checks = sweep(&items, |w| {
        let mut out = Vec::new();
        let outcome = (|| Ok(gamma_diff(&factorized(ty, w)?, &schubert_of(ty, w)?)))();
        out.push(Check::new(&format!("{ty}.factorization"), w.to_string(), outcome));
        if ty == Type::A {
            let outcome = (|| {
                let direct = stanley(Type::A, w, StanleyVariant::Double)?;
                Ok(gamma_diff(&double_stanley_factorized(w)?, &direct))
            })();
            out.push(Check::new("A.double-stanley.factorization", w.to_string(), outcome));
        }
        out
    });
    Ok(Report::with_checks("properties", checks))
}

/// `2^{s(w)} 𝔅𝔖_w = ℭ𝔖_w`, with integral coefficients in `Q_λ` and `P_λ` respectively.
pub fn type_b_verify(n: usize) -> Result<Report> {
    let cap = u32::MAX;
    let checks = sweep(&elements(Type::B, n), |w| {
        let input = w.to_string();
        let mut out = Vec::new();
        let pair = (|| Ok((schubert_with_cap(Type::B, w, true, cap)?.value, schubert_with_cap(Type::C, w, true, cap)?.value)))();
        let (b, c) = match pair {
            Ok(p) => p,
            Err(e) => return vec![Check::new("B.rescaling", input, Err(e))],
        };
        let scaled = (0..w.sign_count()).fold(b.clone(), |p, _| p.scale_i64(2));
        out.push(Check::new("B.rescaling", input.clone(), Ok(gamma_diff(&scaled, &c))));
        for (id, p, ring) in [("C.integral", &c, Ring::Gamma), ("B.integral", &b, Ring::GammaPrime)] {
            let outcome = normalize(p, ring, 2 * max_length(w.kind(), n)).map(|coeffs| {
                coeffs
                    .iter()
                    .find(|(_, c)| !c.is_integral())
                    .map(|(l, c)| format!("coefficient {c} at {l}"))
            });
            out.push(Check::new(id, input.clone(), outcome));
        }
        out
    });
    Ok(Report::with_checks("properties", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_properties() {
        for ty in [Type::A, Type::C, Type::D] {
            for r in [
                descent_symmetry_verify(ty, 2).unwrap(),
                stability_verify(ty, 2).unwrap(),
                factorization_verify(ty, 2, 6).unwrap(),
            ] {
                assert!(r.all_pass(), "{:?}", r.first_failure());
            }
        }
        let r = type_b_verify(2).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
}
