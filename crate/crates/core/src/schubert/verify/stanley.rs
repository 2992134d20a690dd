//! Stanley coefficients: transpose symmetry in type A, positivity and exact
//! reconstruction in types C and D, and inverse symmetry of `F_w`, `E_w`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::poly::Poly;
use crate::weyl::{group_elements, Kind, WeylElement};

use super::super::compute::{is_increasing_up_to, stanley, StanleyVariant, Type};
use super::super::expansion::{restricted_stanley, stanley_coefficients_a, stanley_coefficients_c, stanley_coefficients_d};
use super::super::theta::{eta, theta};
use super::{expect, gamma_diff, sweep, Check, Report};

/// `a^ϖ_λ = a^{ϖ^{-1}}_{λ′}` for every `ϖ ∈ S_n`.
fn transpose_symmetry(n: usize) -> Vec<Check> {
    sweep(&group_elements(Kind::A, n), |w| {
        let outcome = (|| {
            let a: BTreeMap<_, _> = stanley_coefficients_a(w)?.into_iter().map(|(l, c)| (l.conjugate(), c)).collect();
            let b = stanley_coefficients_a(&w.inverse())?;
            Ok(expect(a == b, || format!("{a:?} vs {b:?}")))
        })();
        vec![Check::new("A.stanley.transpose", w.to_string(), outcome)]
    })
}

/// Coefficients of `J_w(X; Y_(k))` (or `I_w`) and the reassembled sum.
fn reconstruct(ty: Type, w: &WeylElement, k: u32) -> Result<Option<String>> {
    let target = restricted_stanley(ty, w, k as usize, 0)?;
    let mut sum = Poly::zero();
    if ty == Type::C {
        for (l, c) in stanley_coefficients_c(w, k)? {
            sum += &theta(&l, k, false)?.scale_i64(c);
        }
    } else {
        for (t, c) in stanley_coefficients_d(w, k)? {
            sum += &eta(&t, false)?.scale_i64(c);
        }
    }
    Ok(gamma_diff(&sum, &target))
}

/// Coefficients and symmetries over `S_{n+1}` and the rank `n` groups of
/// types C and D, restricted to elements of length at most `max_len`.
pub fn stanley_verify(n: usize, max_len: u32) -> Result<Report> {
    let mut checks = transpose_symmetry(n + 1);
    for ty in [Type::C, Type::D] {
        if ty == Type::D && n < 2 {
            continue;
        }
        let items: Vec<(WeylElement, u32)> = group_elements(ty.kind(), n)
            .into_iter()
            .filter(|w| w.length() <= max_len)
            .flat_map(|w| {
                let ks: Vec<u32> = (0..=n as u32).filter(|&k| is_increasing_up_to(&w, k as usize)).collect();
                ks.into_iter().map(move |k| (w.clone(), k))
            })
            .collect();
        checks.extend(sweep(&items, |(w, k)| {
            let name = if ty == Type::C { "C.stanley.theta" } else { "D.stanley.eta" };
            vec![Check::new(name, format!("w={w} k={k}"), reconstruct(ty, w, *k))]
        }));
        let elements: Vec<WeylElement> =
            group_elements(ty.kind(), n).into_iter().filter(|w| w.length() <= max_len).collect();
        checks.extend(sweep(&elements, |w| {
            let outcome = (|| {
                let a = stanley(ty, w, StanleyVariant::Single)?;
                Ok(gamma_diff(&a, &stanley(ty, &w.inverse(), StanleyVariant::Single)?))
            })();
            vec![Check::new(&format!("{ty}.stanley.inverse"), w.to_string(), outcome)]
        }));
    }
    Ok(Report::with_checks("stanley", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        let r = stanley_verify(2, 4).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
}
