//! Theta-type raising formulas for `Q` and `P` functions, their hatted
//! variants, and the symmetrization formulas in finitely many `x`'s.

use crate::error::{Error, Result};
use crate::poly::{pfaffian, Family, Poly, Var};
use crate::weyl::Partition;

use super::families::{c_family, c_hat, frak_c, frak_c_hat, FChoice};
use super::raising::{apply, apply_masked, support, RaisingExpr};

/// `Q_α = ℝ q_α` in `q`-form.
pub fn schur_q(alpha: &[i64]) -> Poly {
    apply(&RaisingExpr::ratio_all(alpha.len()), alpha, 0, |_, p| Poly::q(p)).expect("lengths agree")
}

/// `P_α = 2^{−ℓ} ℝ q_α`.
pub fn schur_p(alpha: &[i64]) -> Poly {
    schur_q(alpha).halve(alpha.len() as u32)
}

fn check3(rho: &[i64], beta: &[i64], alpha: &[i64]) -> Result<()> {
    if rho.len() != alpha.len() || beta.len() != alpha.len() {
        return Err(Error::LengthMismatch(format!(
            "flag, superscript and index vectors of lengths {}, {}, {}",
            rho.len(),
            beta.len(),
            alpha.len()
        )));
    }
    Ok(())
}

/// `^ρQ^β_α(c) = ℝ ^ρc^β_α`.
pub fn multi_schur_q(rho: &[i64], beta: &[i64], alpha: &[i64]) -> Result<Poly> {
    check3(rho, beta, alpha)?;
    apply(&RaisingExpr::ratio_all(alpha.len()), alpha, 0, |i, p| c_family(rho[i], beta[i], p))
}

/// `^ρP̂^β_α(c) = 2^{−ℓ} ℝ ⋆ ^ρĉ^β_α`: positions moved by a raising operator
/// keep the plain family, the others take the hatted one.
pub fn phat_star(rho: &[i64], beta: &[i64], alpha: &[i64]) -> Result<Poly> {
    hat_star(rho, beta, alpha, FChoice::Alternating)
}

/// [`phat_star`] with an arbitrary choice of `f_k` in the hatted family.
pub fn hat_star(rho: &[i64], beta: &[i64], alpha: &[i64], f: FChoice) -> Result<Poly> {
    check3(rho, beta, alpha)?;
    let l = alpha.len();
    let raw = apply_masked(
        &RaisingExpr::ratio_all(l),
        alpha,
        0,
        |mask, i| support(mask, l)[i],
        |i, p, moved| {
            if moved {
                c_family(rho[i], beta[i], p)
            } else {
                c_hat(rho[i], beta[i], p, f, i + 1)
            }
        },
    )?;
    Ok(raw.halve(l as u32))
}

/// `^ρP̂^β_α(c)` as the Pfaffian of its one- and two-row pieces.
pub fn phat_pfaffian(rho: &[i64], beta: &[i64], alpha: &[i64]) -> Result<Poly> {
    check3(rho, beta, alpha)?;
    let l = alpha.len();
    if l <= 2 {
        return phat_star(rho, beta, alpha);
    }
    let size = l + l % 2;
    let mut entries = vec![vec![Poly::zero(); size]; size];
    for i in 0..l {
        for j in i + 1..size {
            entries[i][j] = if j == l {
                phat_star(&rho[i..=i], &beta[i..=i], &alpha[i..=i])?
            } else {
                phat_star(&[rho[i], rho[j]], &[beta[i], beta[j]], &[alpha[i], alpha[j]])?
            };
        }
    }
    Ok(pfaffian(size, |i, j| entries[i][j].clone()))
}

/// Factorial `P_λ(X|t) = 2^{−ℓ} ℝ ⋆ 𝔠̂^λ_λ`, with `t` carried by `z`.
pub fn double_schur_p(lambda: &Partition) -> Poly {
    let alpha = lambda.padded(lambda.len());
    let l = alpha.len();
    let raw = apply_masked(
        &RaisingExpr::ratio_all(l),
        &alpha,
        0,
        |mask, i| support(mask, l)[i],
        |i, p, moved| if moved { frak_c(alpha[i], p) } else { frak_c_hat(i + 1, alpha[i], p) },
    )
    .expect("lengths agree");
    raw.halve(l as u32)
}

fn x(i: usize) -> Poly {
    Poly::var(Var::X(i as u8))
}

/// `(x|t)^r = ∏_{s ≤ r} (x − t_s)`.
fn factorial_power(i: usize, r: i64) -> Poly {
    let mut out = Poly::one();
    for s in 1..=r {
        out = &out * &(&x(i) - &Poly::var(Var::Z(s as u8)));
    }
    out
}

/// `(1/(n−ℓ)!) Σ_{ϖ ∈ S_n} ϖ(∏_{i≤ℓ} g_i(x_i) ∏_{i≤ℓ, i<j≤n} (x_i + x_j)/(x_i − x_j))`,
/// summed over coset representatives and divided by the Vandermonde.
fn symmetrize(l: usize, n: usize, g: impl Fn(usize, usize) -> Poly) -> Result<Poly> {
    if n > Family::X.capacity() {
        return Err(Error::BoundExceeded(n));
    }
    if l > n {
        return Ok(Poly::zero());
    }
    let mut total = Poly::zero();
    let mut chosen = Vec::with_capacity(l);
    injections(n, l, &mut chosen, &mut |head| {
        let mut perm: Vec<usize> = head.to_vec();
        perm.extend((1..=n).filter(|v| !head.contains(v)));
        let mut term = Poly::one();
        for (i, &v) in head.iter().enumerate() {
            term = &term * &g(i, v);
        }
        for i in 0..l {
            for j in i + 1..n {
                term = &term * &(&x(perm[i]) + &x(perm[j]));
            }
        }
        for i in l..n {
            for j in i + 1..n {
                term = &term * &(&x(perm[i]) - &x(perm[j]));
            }
        }
        if inversions(&perm) % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    });
    for i in 1..=n {
        for j in i + 1..=n {
            total = total.div_linear(Var::X(i as u8), Some((Var::X(j as u8), 1)))?;
        }
    }
    Ok(total)
}

fn injections(n: usize, l: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if chosen.len() == l {
        f(chosen);
        return;
    }
    for v in 1..=n {
        if !chosen.contains(&v) {
            chosen.push(v);
            injections(n, l, chosen, f);
            chosen.pop();
        }
    }
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// `P^{(ℓ)}_α(x_1, …, x_n)` for `α ∈ ℕ^ℓ`.
pub fn p_ell_sym(alpha: &[i64], n: usize) -> Result<Poly> {
    if alpha.iter().any(|&a| a < 0) {
        return Err(Error::InvalidWindow("negative exponent".into()));
    }
    symmetrize(alpha.len(), n, |i, v| x(v).pow(alpha[i] as u32))
}

/// `P_λ(x_1, …, x_n | t)` by symmetrization, with `t` carried by `z`.
pub fn double_schur_p_sym(lambda: &Partition, n: usize) -> Result<Poly> {
    let parts = lambda.padded(lambda.len());
    symmetrize(parts.len(), n, |i, v| factorial_power(v, parts[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gamma::{evaluate_x, gamma_eq, q_basis};

    #[test]
    fn q_raising_matches_pfaffian() {
        for alpha in [vec![3, 1], vec![4, 2, 1], vec![5, 3, 1], vec![2, 3], vec![3, 2, 1, 0]] {
            assert!(gamma_eq(&schur_q(&alpha), &q_basis(&alpha)), "{alpha:?}");
        }
    }

    #[test]
    fn multi_q_reduces_to_q() {
        let a = [3, 1];
        assert_eq!(multi_schur_q(&[0, 0], &[0, 0], &a).unwrap(), schur_q(&a));
    }

    #[test]
    fn p_single_row_symmetrized() {
        let l = Partition::new(vec![2]).unwrap();
        let sym = double_schur_p_sym(&l, 2).unwrap();
        assert_eq!(evaluate_x(&double_schur_p(&l), 2), sym);
    }

    #[test]
    fn p_ell_alternates() {
        let a = p_ell_sym(&[2, 1], 4).unwrap();
        let b = p_ell_sym(&[1, 2], 4).unwrap();
        assert_eq!(a, -b);
        assert!(p_ell_sym(&[1, 1], 4).unwrap().is_zero());
    }
}

#[cfg(test)]
mod agreement {
    use super::*;
    use crate::poly::gamma::{evaluate_x, gamma_eq};

    #[test]
    fn star_route_matches_symmetrization() {
        for d in 1..=5u32 {
            for l in Partition::strict_of(d) {
                assert_eq!(evaluate_x(&double_schur_p(&l), 4), double_schur_p_sym(&l, 4).unwrap(), "{l}");
            }
        }
    }

    #[test]
    fn three_row_pfaffian() {
        for (rho, beta, alpha) in [
            (vec![2, 1, 1], vec![-2, -2, -1], vec![4, 3, 2]),
            (vec![1, 1, 1], vec![-3, -2, -1], vec![4, 3, 2]),
        ] {
            let a = phat_star(&rho, &beta, &alpha).unwrap();
            assert!(gamma_eq(&a, &phat_pfaffian(&rho, &beta, &alpha).unwrap()), "{alpha:?}");
        }
    }
}
