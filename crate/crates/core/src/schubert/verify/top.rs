//! Formulas for the Schubert polynomials of longest and maximal elements.

use crate::error::Result;
use crate::poly::gamma::{p_basis, q_basis};
use crate::poly::{divided_difference, elementary, Alphabet, Family, Poly, Side, EH};
use crate::symfunc::{flagged_det, flagged_schur_rows, lr_coefficients, mixed_rows, multi_schur_q, phat_pfaffian, phat_star};
use crate::weyl::{
    flag_indices, k_strict_shape, longest_a, longest_bc, longest_d, longest_for_flag, top_k_grassmannian_bc,
    top_k_grassmannian_d, typed_shape, FlagSequence, Gen, Kind, Partition,
};

use super::super::compute::{y, z, Type};
use super::super::theta::{eta, theta};
use super::{gamma_diff, poly_diff, schubert_of, Report};

/// `(n, n−1, …, 1)`.
fn stair(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// `a + b`, with `b` padded by zeros.
fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().enumerate().map(|(i, &v)| v + b.get(i).copied().unwrap_or(0)).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|v| -v).collect()
}

fn q_of(alpha: &[i64]) -> Poly {
    (*q_basis(alpha)).clone()
}

/// `P_α` for a strictly decreasing `α`, trailing zeros dropped.
fn p_of(alpha: &[i64]) -> Result<Poly> {
    let parts = alpha.iter().filter(|&&a| a > 0).map(|&a| a as u32).collect();
    Ok(p_basis(&Partition::new(parts)?))
}

/// All nonempty increasing sequences drawn from `0..n`.
fn subsets(n: u32) -> Vec<Vec<u32>> {
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Both sides of every longest and maximal element formula in rank `n`.
pub fn top_formulas_verify(ty: Type, n: usize) -> Result<Report> {
    let mut r = Report::new("top");
    match ty {
        Type::A => top_a(&mut r, n),
        Type::B => top_b(&mut r, n),
        Type::C => top_c(&mut r, n)?,
        Type::D => {
            if n >= 2 {
                top_d(&mut r, n)?
            }
        }
    }
    Ok(r)
}

fn top_a(r: &mut Report, n: usize) {
    let outcome = (|| {
        let lhs = schubert_of(Type::A, &longest_a(n))?;
        let mut rhs = Poly::one();
        for i in 1..n {
            for j in 1..=n - i {
                rhs = &rhs * &(&y(i) - &z(j));
            }
        }
        Ok(poly_diff(&lhs, &rhs))
    })();
    r.record("A.top.product", format!("n={n}"), outcome);
}

fn top_b(r: &mut Report, n: usize) {
    let outcome = (|| {
        let b = schubert_of(Type::B, &longest_bc(n))?;
        let alpha: Vec<i64> = (1..=n as i64).rev().map(|i| 2 * i - 1).collect();
        let mut rho = stair(n - 1);
        rho.push(0);
        let mut beta = neg(&stair(n - 1));
        beta.push(0);
        let c = multi_schur_q(&rho, &beta, &alpha)?;
        let scaled = (0..n).fold(b, |p, _| p.scale_i64(2));
        Ok(gamma_diff(&scaled, &c))
    })();
    r.record("B.top.scaled-pfaffian", format!("n={n}"), outcome);
}

fn top_c(r: &mut Report, n: usize) -> Result<()> {
    let input = format!("n={n}");
    let w0 = longest_bc(n);
    let cs = schubert_of(Type::C, &w0)?;
    let d1 = stair(n - 1);
    let dn = stair(n);

    let outcome = (|| {
        let dual: Vec<i64> = (1..n as i64).collect();
        let rows = mixed_rows(&dual, &dual);
        let mut sum = Poly::zero();
        for lam in Partition::staircase(n - 1).subpartitions() {
            let s = flagged_schur_rows(&d1, &lam.conjugate().padded(n - 1), &rows, EH::H)?;
            sum += &(&q_of(&plus(&dn, &lam.padded(n))) * &s);
        }
        Ok(gamma_diff(&sum, &cs))
    })();
    r.record("C.top.flagged-h", input.clone(), outcome);

    let outcome = (|| {
        let rows = mixed_rows(&d1, &d1);
        let mut sum = Poly::zero();
        for lam in Partition::staircase(n - 1).subpartitions() {
            let s = flagged_schur_rows(&d1, &lam.padded(n - 1), &rows, EH::E)?;
            sum += &(&q_of(&plus(&dn, &lam.padded(n))) * &s);
        }
        Ok(gamma_diff(&sum, &cs))
    })();
    r.record("C.top.flagged-e", input.clone(), outcome);

    let outcome = (|| {
        let mut rho = d1.clone();
        rho.push(0);
        let mut beta = neg(&d1);
        beta.push(0);
        let alpha = plus(&dn, &d1);
        Ok(gamma_diff(&multi_schur_q(&rho, &beta, &alpha)?, &cs))
    })();
    r.record("C.top.pfaffian", input.clone(), outcome);

    // s_0 w_0
    let s0w0 = w0.gen_mul(Gen::I(0));
    let target = schubert_of(Type::C, &s0w0)?;
    let outcome = divided_difference(&cs, Gen::I(0), Side::Z).map(|d| gamma_diff(&d, &target));
    r.record("C.s0w0.divided-difference", input.clone(), outcome);
    let dstar: Vec<i64> = (2..=n as i64).rev().collect();
    let outcome = multi_schur_q(&d1, &neg(&d1), &plus(&dstar, &d1)).map(|p| gamma_diff(&p, &target));
    r.record("C.s0w0.pfaffian", input.clone(), outcome);
    let outcome = (|| {
        let rows = mixed_rows(&d1, &d1);
        let parts = dstar.iter().map(|&v| v as u32).collect();
        let mut sum = Poly::zero();
        for lam in Partition::new(parts)?.subpartitions() {
            let s = flagged_schur_rows(&dstar, &lam.padded(n - 1), &rows, EH::E)?;
            sum += &(&q_of(&plus(&d1, &lam.padded(n - 1))) * &s);
        }
        Ok(gamma_diff(&sum, &target))
    })();
    r.record("C.s0w0.flagged-e", input.clone(), outcome);

    for k in 0..n {
        wkn_c(r, k, n)?;
    }

    for vals in subsets(n as u32) {
        let a = FlagSequence::from_values(Kind::BC, &vals)?;
        let outcome = (|| {
            let w = longest_for_flag(n, &a)?;
            let (lam, beta, rho) = flag_indices(n, &a);
            Ok(gamma_diff(&multi_schur_q(&rho, &beta, &lam)?, &schubert_of(Type::C, &w)?))
        })();
        r.record("C.flag.pfaffian", format!("n={n} a={vals:?}"), outcome);
    }
    Ok(())
}

fn wkn_c(r: &mut Report, k: usize, n: usize) -> Result<()> {
    let input = format!("k={k} n={n}");
    let w = top_k_grassmannian_bc(k as u32, n)?;
    let cs = schubert_of(Type::C, &w)?;
    let len = n - k;
    let rho = vec![k as i64; len];
    let alpha: Vec<i64> = (2 * k as i64 + 1..=(n + k) as i64).rev().collect();

    let beta: Vec<i64> = (1 - n as i64..=-(k as i64)).collect();
    let outcome = multi_schur_q(&rho, &beta, &alpha).map(|p| gamma_diff(&p, &cs));
    r.record("C.wkn.pfaffian", input.clone(), outcome);
    let outcome = (|| Ok(gamma_diff(&theta(&k_strict_shape(&w, k as u32)?, k as u32, true)?, &cs)))();
    r.record("C.wkn.theta", input.clone(), outcome);

    let outcome = multi_schur_q(&rho, &vec![-(k as i64); len], &alpha).map(|p| gamma_diff(&p, &cs));
    r.record("C.wkn.symmetric-pfaffian", input.clone(), outcome);

    let mu0 = Partition::new(vec![2 * k as u32; len])?;
    let dl = stair(len);
    let alphabet = Alphabet::first(Family::Y, k, false).chain(Alphabet::first(Family::Z, k, true));
    let e_det = |outer: &[i64], inner: &[i64], a: &Alphabet| flagged_det(outer, inner, |_, d| elementary(d, a));

    let outcome = (|| {
        let mut sum = Poly::zero();
        for mu in mu0.subpartitions() {
            let s = e_det(&mu0.padded(len), &mu.padded(len), &alphabet)?;
            sum += &(&q_of(&plus(&dl, &mu.padded(len))) * &s);
        }
        Ok(gamma_diff(&sum, &cs))
    })();
    r.record("C.wkn.skew-e", input.clone(), outcome);

    let outcome = (|| {
        let ya = Alphabet::first(Family::Y, k, false);
        let za = Alphabet::first(Family::Z, k, true);
        let subs = mu0.subpartitions();
        let mut sum = Poly::zero();
        for nu1 in &subs {
            let e1 = e_det(&nu1.padded(nu1.len()), &vec![0; nu1.len()], &ya)?;
            for nu2 in &subs {
                let e2 = e_det(&nu2.padded(nu2.len()), &vec![0; nu2.len()], &za)?;
                let prod = &e1 * &e2;
                for (mu, c) in lr_coefficients(nu1, nu2)? {
                    if !mu0.contains(&mu) {
                        continue;
                    }
                    let mp = mu.padded(len);
                    let vee: Vec<i64> = (0..len).map(|i| 2 * k as i64 - mp[len - 1 - i]).collect();
                    sum += &(&q_of(&plus(&dl, &vee)) * &prod).scale_i64(c);
                }
            }
        }
        Ok(gamma_diff(&sum, &cs))
    })();
    r.record("C.wkn.littlewood-richardson", input, outcome);
    Ok(())
}

fn top_d(r: &mut Report, n: usize) -> Result<()> {
    let input = format!("n={n}");
    let w0 = longest_d(n);
    let ds = schubert_of(Type::D, &w0)?;
    let d1 = stair(n - 1);

    let outcome = (|| {
        let rows = mixed_rows(&d1, &d1);
        let (outer, shift) = if n % 2 == 0 {
            (d1.clone(), d1.clone())
        } else {
            ((2..=n as i64).rev().collect::<Vec<_>>(), stair(n - 2))
        };
        let parts = outer.iter().map(|&v| v as u32).collect();
        let mut sum = Poly::zero();
        for lam in Partition::new(parts)?.subpartitions() {
            let s = flagged_schur_rows(&outer, &lam.padded(n - 1), &rows, EH::E)?;
            sum += &(&p_of(&plus(&lam.padded(n - 1), &shift))? * &s);
        }
        Ok(gamma_diff(&sum, &ds))
    })();
    r.record("D.top.flagged-e", input.clone(), outcome);

    let twice: Vec<i64> = d1.iter().map(|v| 2 * v).collect();
    let outcome = phat_star(&d1, &neg(&d1), &twice).map(|p| gamma_diff(&p, &ds));
    r.record("D.top.star", input.clone(), outcome);
    let outcome = phat_pfaffian(&d1, &neg(&d1), &twice).map(|p| gamma_diff(&p, &ds));
    r.record("D.top.pfaffian", input.clone(), outcome);

    for k in 0..n {
        let input = format!("k={k} n={n}");
        let w = top_k_grassmannian_d(k as u32, n)?;
        let target = schubert_of(Type::D, &w)?;
        // For k = □ the row with index 2k = 0 is left out.
        let low = k.max(1) as i64;
        let rho = vec![k as i64; n - low as usize];
        let beta: Vec<i64> = (1 - n as i64..=-low).collect();
        let alpha: Vec<i64> = (k as i64 + low..(n + k) as i64).rev().collect();
        let outcome = phat_star(&rho, &beta, &alpha).map(|p| gamma_diff(&p, &target));
        r.record("D.wkn.star", input.clone(), outcome);
        let outcome = phat_pfaffian(&rho, &beta, &alpha).map(|p| gamma_diff(&p, &target));
        r.record("D.wkn.pfaffian", input.clone(), outcome);
        let outcome = (|| Ok(gamma_diff(&eta(&typed_shape(&w, k as u32)?, true)?, &target)))();
        r.record("D.wkn.eta", input, outcome);
    }

    for vals in subsets(n as u32) {
        let Ok(a) = FlagSequence::from_values(Kind::D, &vals) else {
            continue;
        };
        let outcome = (|| {
            let w = longest_for_flag(n, &a)?;
            let (lam, beta, rho) = flag_indices(n, &a);
            Ok(gamma_diff(&phat_pfaffian(&rho, &beta, &lam)?, &schubert_of(Type::D, &w)?))
        })();
        r.record("D.flag.pfaffian", format!("n={n} a={vals:?}"), outcome);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_pass() {
        for ty in [Type::A, Type::B, Type::C, Type::D] {
            for n in 1..=2 {
                let r = top_formulas_verify(ty, n).unwrap();
                assert!(r.all_pass(), "{ty} {n}: {:?}", r.first_failure());
            }
        }
    }
}
