//! Expansions in Schur bases, Littlewood–Richardson numbers, and exact
//! linear solving against a finite family.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{canonical, Alphabet, Family, Monomial, Poly};
use crate::weyl::Partition;

use super::schur::schur_h;

/// Expansion of a polynomial symmetric in `v_1, …, v_m` of family `fam` as
/// `Σ c_λ s_λ(v_1, …, v_m)`, peeling lex-leading monomials. Coefficients may
/// involve the other variables.
pub fn schur_expand(f: &Poly, fam: Family, m: usize) -> Result<BTreeMap<Partition, Poly>> {
    if f.max_index(fam) > m {
        return Err(Error::NotSymmetric(format!("more than {m} {} variables", fam.symbol())));
    }
    let alphabet = Alphabet::first(fam, m, false);
    let mut work = f.coefficients_in(fam);
    work.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = work.pop_last() {
        let lambda = lead.family_exponents(fam);
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!("leading monomial {lead} is not a partition")));
        }
        let parts: Vec<i64> = lambda.iter().map(|&p| p as i64).collect();
        let s = schur_h(&parts, &alphabet);
        for (sm, sc) in s.coefficients_in(fam) {
            if sm == lead {
                continue;
            }
            let delta = &c * &sc;
            let e = work.entry(sm).or_default();
            *e -= &delta;
            if e.is_zero() {
                work.remove(&sm);
            }
        }
        out.insert(Partition::new(lambda)?, c);
    }
    Ok(out)
}

/// `c^λ_{μν}` for all `λ`, from `s_μ s_ν` in `ℓ(μ) + ℓ(ν)` variables.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    let m = (mu.len() + nu.len()).max(1);
    let a = Alphabet::first(Family::Y, m, false);
    let prod = &schur_h(&mu.padded(mu.len()), &a) * &schur_h(&nu.padded(nu.len()), &a);
    schur_expand(&prod, Family::Y, m)?
        .into_iter()
        .map(|(l, c)| {
            let v = c.constant_term().to_i64().filter(|_| c.is_constant());
            v.map(|v| (l, v)).ok_or_else(|| Error::NonIntegralCoefficient(c.to_string()))
        })
        .collect()
}

fn coordinates(p: &Poly) -> BTreeMap<Monomial, BigRational> {
    canonical(p).terms().map(|(m, c)| (*m, c.to_rational())).collect()
}

/// Coefficients `a_k` with `target = Σ a_k basis_k`, compared after rewriting
/// even `q`'s through odd ones. Fails if `target` is outside the span or the
/// family is linearly dependent.
pub fn solve_in_span<K: Clone + Ord>(target: &Poly, basis: &[(K, Poly)]) -> Result<BTreeMap<K, BigRational>> {
    let cols: Vec<BTreeMap<Monomial, BigRational>> = basis.iter().map(|(_, p)| coordinates(p)).collect();
    let rhs = coordinates(target);
    let mut rows: Vec<Monomial> = cols.iter().flat_map(|c| c.keys().copied()).collect();
    rows.extend(rhs.keys().copied());
    rows.sort();
    rows.dedup();
    let n = basis.len();
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c.get(m).cloned().unwrap_or_else(BigRational::zero)).collect();
            row.push(rhs.get(m).cloned().unwrap_or_else(BigRational::zero));
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            return Err(Error::NonTriangular("the basis family is linearly dependent".into()));
        };
        mat.swap(r, p);
        let inv = BigRational::one() / &mat[r][c];
        for v in mat[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..=n {
                    let d = &f * &mat[r][j];
                    mat[i][j] -= d;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    if mat[r..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::NonTriangular("target is not in the span of the basis".into()));
    }
    Ok(basis
        .iter()
        .zip(pivots)
        .map(|((k, _), p)| (k.clone(), mat[p][n].clone()))
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_rule() {
        let c = lr_coefficients(&part(&[2, 1]), &part(&[1])).unwrap();
        let expect: BTreeMap<Partition, i64> =
            [(part(&[3, 1]), 1), (part(&[2, 2]), 1), (part(&[2, 1, 1]), 1)].into_iter().collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn lr_21_21() {
        let c = lr_coefficients(&part(&[2, 1]), &part(&[2, 1])).unwrap();
        assert_eq!(c[&part(&[3, 2, 1])], 2);
        assert_eq!(c.values().sum::<i64>(), 8);
    }

    #[test]
    fn rejects_non_symmetric() {
        let f = Poly::var(Var::Y(2));
        assert!(schur_expand(&f, Family::Y, 2).is_err());
    }

    #[test]
    fn span_solver() {
        let a = Poly::q(1);
        let b = &Poly::q(1) + &Poly::var(Var::Y(1));
        let t = &a.scale_i64(3) - &b;
        let sol = solve_in_span(&t, &[(0, a), (1, b)]).unwrap();
        assert_eq!(sol[&0], BigRational::from_integer(3.into()));
        assert_eq!(sol[&1], BigRational::from_integer((-1).into()));
    }
}
