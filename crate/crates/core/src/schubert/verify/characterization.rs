//! The divided difference equations and constant terms that single out
//! Schubert polynomials.

use crate::error::Result;
use crate::poly::{Poly, Side};
use crate::weyl::Gen;

use super::super::compute::{schubert_with_cap, Type};
use super::{apply_divided_difference, elements, expect, gamma_diff, kind_rank_ok, schubert_of, sweep, Check, Report};

/// Every element of the rank `n` group against every generator, on both sides.
pub fn characterization_verify(ty: Type, n: usize) -> Result<Report> {
    let kind = ty.kind();
    if ty == Type::B || !kind_rank_ok(kind, n) {
        return Ok(Report::new("characterization"));
    }
    let gens = Gen::all(kind, n);
    let checks = sweep(&elements(ty, n), |w| {
        let mut out = Vec::new();
        let s = match schubert_with_cap(ty, w, true, u32::MAX) {
            Ok(s) => s,
            Err(e) => return vec![Check::new(&format!("{ty}.characterization"), w.to_string(), Err(e))],
        };
        let c = s.value.constant_term();
        let outcome = Ok(expect(c.is_one() == w.is_identity() && (c.is_one() || c.is_zero()), || {
            format!("constant term {c}")
        }));
        out.push(Check::new(&format!("{ty}.constant-term"), w.to_string(), outcome));
        for &g in &gens {
            for side in [Side::Y, Side::Z] {
                let outcome = (|| {
                    let d = apply_divided_difference(&s, g, side)?;
                    let expected = if d.element == *w { Poly::zero() } else { schubert_of(ty, &d.element)? };
                    Ok(gamma_diff(&d.value, &expected))
                })();
                let id = match side {
                    Side::Y => format!("{ty}.divided-difference.y"),
                    Side::Z => format!("{ty}.divided-difference.z"),
                };
                out.push(Check::new(&id, format!("w={w} g={g}"), outcome));
            }
        }
        out
    });
    Ok(Report::with_checks("characterization", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        for ty in [Type::A, Type::C, Type::D] {
            let r = characterization_verify(ty, 2).unwrap();
            assert!(r.all_pass(), "{:?}", r.first_failure());
            assert!(!r.checks.is_empty());
        }
    }
}
