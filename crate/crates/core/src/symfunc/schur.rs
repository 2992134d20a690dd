//! Schur, supersymmetric Schur, flagged and multi-Schur polynomials.

use crate::error::{Error, Result};
use crate::poly::{complete, det, elementary, gen_eh, supersym_h_in, Alphabet, Family, Poly, EH};

use super::raising::{apply, RaisingExpr};

/// `det(entry(i, α_i − β_j + j − i))` over `i, j < ℓ`, with `entry` indexed by row.
pub fn flagged_det(alpha: &[i64], beta: &[i64], entry: impl Fn(usize, i64) -> Poly) -> Result<Poly> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch(format!(
            "shape of length {} over a shape of length {}",
            alpha.len(),
            beta.len()
        )));
    }
    let l = alpha.len();
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| entry(i, alpha[i] - beta[j] + j as i64 - i as i64)).collect())
        .collect();
    Ok(det(&m))
}

/// Supersymmetric `s_α(A/B) = det(h_{α_i + j − i}(A/B))`.
pub fn schur_in(alpha: &[i64], a: &Alphabet, b: &Alphabet) -> Poly {
    let zero = vec![0; alpha.len()];
    flagged_det(alpha, &zero, |_, d| supersym_h_in(d, a, b)).expect("equal lengths")
}

/// `s_α(Y_(m)/Z_(l))` by the Jacobi–Trudi determinant.
pub fn schur_s(alpha: &[i64], m: usize, l: usize) -> Poly {
    schur_in(alpha, &Alphabet::first(Family::Y, m, false), &Alphabet::first(Family::Z, l, false))
}

/// `s_α(Y_(m)/Z_(l)) = ∏_{i<j}(1 − R_ij) h_α` by raising operators.
pub fn schur_s_raising(alpha: &[i64], m: usize, l: usize) -> Poly {
    let a = Alphabet::first(Family::Y, m, false);
    let b = Alphabet::first(Family::Z, l, false);
    apply(&RaisingExpr::minus_all(alpha.len()), alpha, 0, |_, p| supersym_h_in(p, &a, &b)).expect("lengths agree")
}

/// `s_λ` of one alphabet, by the dual Jacobi–Trudi determinant in `e`'s.
pub fn schur_e(lambda: &[i64], a: &Alphabet) -> Poly {
    let conj = conjugate(lambda);
    let zero = vec![0; conj.len()];
    flagged_det(&conj, &zero, |_, d| elementary(d, a)).expect("equal lengths")
}

/// `s_λ` of one alphabet, by the Jacobi–Trudi determinant in `h`'s.
pub fn schur_h(lambda: &[i64], a: &Alphabet) -> Poly {
    let zero = vec![0; lambda.len()];
    flagged_det(lambda, &zero, |_, d| complete(d, a)).expect("equal lengths")
}

/// Conjugate of a weakly decreasing vector of nonnegative integers.
pub fn conjugate(lambda: &[i64]) -> Vec<i64> {
    let top = lambda.first().copied().unwrap_or(0).max(0);
    (1..=top).map(|c| lambda.iter().filter(|&&p| p >= c).count() as i64).collect()
}

/// `S^ρ_{α/β}(e(t))` or `S^ρ_{α/β}(h(t))`: row `i` uses `e^{ρ_i}` or `h^{ρ_i}` of one family.
pub fn flagged_schur(alpha: &[i64], beta: &[i64], rho: &[i64], kind: EH, fam: Family, negated: bool) -> Result<Poly> {
    if rho.len() != alpha.len() {
        return Err(Error::LengthMismatch("flag and shape lengths differ".into()));
    }
    flagged_det(alpha, beta, |i, d| gen_eh(kind, d, rho[i], fam, negated))
}

/// Flagged determinant whose row `i` uses `e` or `h` of the alphabet `rows[i]`.
pub fn flagged_schur_rows(alpha: &[i64], beta: &[i64], rows: &[Alphabet], kind: EH) -> Result<Poly> {
    if rows.len() != alpha.len() {
        return Err(Error::LengthMismatch("one alphabet per row is required".into()));
    }
    flagged_det(alpha, beta, |i, d| match kind {
        EH::E => elementary(d, &rows[i]),
        EH::H => complete(d, &rows[i]),
    })
}

/// Row alphabets `(y_1..y_{ρ_i}, −z_1..−z_{σ_i})` of `h(Y, −Z)` or `e(Y, −Z)`.
pub fn mixed_rows(rho: &[i64], sigma: &[i64]) -> Vec<Alphabet> {
    rho.iter()
        .zip(sigma)
        .map(|(&r, &s)| {
            Alphabet::first(Family::Y, r.max(0) as usize, false)
                .chain(Alphabet::first(Family::Z, s.max(0) as usize, true))
        })
        .collect()
}

/// Multi-Schur `S_α(A_1/B_1; …; A_ℓ/B_ℓ) = det(h_{α_i + j − i}(A_i/B_i))`.
pub fn multi_schur(alpha: &[i64], rows: &[(Alphabet, Alphabet)]) -> Result<Poly> {
    if rows.len() != alpha.len() {
        return Err(Error::LengthMismatch("one pair of alphabets per row is required".into()));
    }
    let zero = vec![0; alpha.len()];
    flagged_det(alpha, &zero, |i, d| supersym_h_in(d, &rows[i].0, &rows[i].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    #[test]
    fn det_and_raising_agree() {
        for alpha in [vec![2, 1], vec![1, 1, 1], vec![3, 1, 0], vec![1, 2], vec![2, 2, 1]] {
            assert_eq!(schur_s(&alpha, 3, 2), schur_s_raising(&alpha, 3, 2), "{alpha:?}");
        }
    }

    #[test]
    fn e_and_h_routes_agree() {
        let a = Alphabet::first(Family::Y, 3, false).chain(Alphabet::first(Family::Z, 1, true));
        for l in [vec![2, 1], vec![3], vec![2, 2, 1]] {
            assert_eq!(schur_e(&l, &a), schur_h(&l, &a));
        }
    }

    #[test]
    fn one_variable_schur() {
        let y1 = Poly::var(Var::Y(1));
        assert_eq!(schur_s(&[2], 1, 0), &y1 * &y1);
        assert!(schur_s(&[1, 1], 1, 0).is_zero());
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[]), Vec::<i64>::new());
    }
}
