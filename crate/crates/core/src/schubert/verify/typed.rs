//! Symmetrized `P` functions and Ivanov's factorial `P_λ(X | t)`.

use crate::poly::gamma::{evaluate_x, p_basis};
use crate::poly::{Family, Poly, EH};
use crate::symfunc::{double_schur_p, double_schur_p_sym, flagged_schur, p_ell_sym};
use crate::weyl::Partition;

use super::{expect, gamma_diff, poly_diff, sweep, Check, Report};

fn vectors(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `P^{(ℓ)}_α(x_1..x_n)` alternates in `α`, and drops a trailing zero part
/// (vanishing for odd `ℓ`) when `n` is even.
pub fn p_ell_verify(n: usize, max_len: usize) -> Report {
    let items: Vec<Vec<i64>> = (1..=max_len.min(n)).flat_map(|l| vectors(l, 3)).collect();
    let checks = sweep(&items, |alpha| {
        let input = format!("n={n} α={alpha:?}");
        let l = alpha.len();
        let mut out = Vec::new();
        let value = match p_ell_sym(alpha, n) {
            Ok(v) => v,
            Err(e) => return vec![Check::new("D.p-ell", input, Err(e))],
        };
        for i in 0..l.saturating_sub(1) {
            let mut swapped = alpha.clone();
            swapped.swap(i, i + 1);
            let outcome = p_ell_sym(&swapped, n).map(|s| poly_diff(&value, &-&s));
            out.push(Check::new("D.p-ell.alternating", format!("{input} i={}", i + 1), outcome));
        }
        if n % 2 == 0 && alpha[l - 1] == 0 {
            let outcome = if l % 2 == 1 {
                Ok(expect(value.is_zero(), || "nonzero for odd length".into()))
            } else {
                p_ell_sym(&alpha[..l - 1], n).map(|s| poly_diff(&value, &s))
            };
            out.push(Check::new("D.p-ell.trailing-zero", input, outcome));
        }
        out
    });
    Report::with_checks("type-d", checks)
}

fn staircase(l: usize) -> Vec<i64> {
    (1..=l as i64).rev().collect()
}

/// `P_λ(X | t) = Σ_{ν ⊆ μ} P_{δ+ν}(X) S^λ_{μ/ν}(e(−t))` with `δ = δ_{ℓ−1}` for
/// even `ℓ` and `δ_ℓ` for odd `ℓ`, for strict `λ` with `|λ| ≤ max_weight`.
pub fn pxt_verify(max_weight: u32) -> Report {
    let items: Vec<Partition> = (1..=max_weight).flat_map(Partition::strict_of).collect();
    let checks = sweep(&items, |lam| {
        let l = lam.len();
        let lp = lam.padded(l);
        let mut delta = staircase(if l % 2 == 0 { l - 1 } else { l });
        delta.resize(l, 0);
        let mu: Vec<i64> = lp.iter().zip(&delta).map(|(a, b)| a - b).collect();
        let mu_part = Partition::new(mu.iter().map(|&x| x as u32).collect()).expect("difference is a partition");
        let outcome = (|| {
            let mut sum = Poly::zero();
            for nu in mu_part.subpartitions() {
                let np = nu.padded(l);
                let top: Vec<u32> = delta.iter().zip(&np).map(|(a, b)| (a + b) as u32).filter(|&x| x > 0).collect();
                let p = p_basis(&Partition::new(top)?);
                let s = flagged_schur(&mu, &np, &lp, EH::E, Family::Z, true)?;
                sum += &(&p * &s);
            }
            Ok(gamma_diff(&double_schur_p(lam), &sum))
        })();
        let id = if l % 2 == 0 { "D.factorial-p.even" } else { "D.factorial-p.odd" };
        vec![Check::new(id, format!("λ={lam}"), outcome)]
    });
    Report::with_checks("type-d", checks)
}

/// The raising operator form of `P_λ(X | t)` in `n` variables against symmetrization.
pub fn star_sym_verify(max_weight: u32, n: usize) -> Report {
    let items: Vec<Partition> =
        (1..=max_weight).flat_map(Partition::strict_of).filter(|l| l.len() <= n).collect();
    let checks = sweep(&items, |lam| {
        let outcome = double_schur_p_sym(lam, n).map(|s| poly_diff(&evaluate_x(&double_schur_p(lam), n), &s));
        vec![Check::new("D.factorial-p.symmetrization", format!("λ={lam} n={n}"), outcome)]
    });
    Report::with_checks("type-d", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_weights() {
        for r in [p_ell_verify(4, 2), pxt_verify(4), star_sym_verify(3, 4)] {
            assert!(r.all_pass(), "{:?}", r.first_failure());
        }
    }
}
