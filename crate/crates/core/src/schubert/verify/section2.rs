//! Flagged Schur polynomials, the duality involution on `H_n`, and reverse
//! double Schubert polynomials.

use crate::poly::{gen_eh, Dyadic, Family, Monomial, Poly, Var, EH};
use crate::symfunc::{flagged_det, flagged_schur};
use crate::weyl::{group_elements, longest_a, Kind, Partition};

use super::super::reverse::{
    duality_holds, elementary_duality_holds, reverse_schubert, reverse_schubert_omega, reverse_top_flagged,
};
use super::{expect, poly_diff, sweep, Check, Report};

/// `Σ t^U` over column strict tableaux of shape `λ` with row `i` bounded by `ρ_i`.
fn tableau_sum(lambda: &[u32], rho: &[u32]) -> Poly {
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut filling: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Poly::zero();
    fill(&cells, 0, rho, &mut filling, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], at: usize, rho: &[u32], t: &mut Vec<Vec<u32>>, out: &mut Poly) {
    let Some(&(r, c)) = cells.get(at) else {
        let vars: Vec<(Var, u32)> = t.iter().flatten().map(|&v| (Var::T(v as u8), 1)).collect();
        let m = vars.iter().fold(Monomial::from_vars(&[]), |m, &v| m.mul(&Monomial::from_vars(&[v])));
        *out += &Poly::term(m, Dyadic::one());
        return;
    };
    let lo = [if c > 0 { t[r][c - 1] } else { 1 }, if r > 0 { t[r - 1][c] + 1 } else { 1 }];
    for v in lo[0].max(lo[1])..=rho[r] {
        t[r][c] = v;
        fill(cells, at + 1, rho, t, out);
    }
}

fn weakly_increasing(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let lo = v.last().copied().unwrap_or(1);
                (lo..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn box_partitions(rows: usize, cols: u32) -> Vec<Partition> {
    let full = Partition::new(vec![cols; rows]).expect("rectangle");
    full.subpartitions()
}

fn as_i64(v: &[u32]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// Flagged Schur determinants against tableau sums, for all shapes inside
/// the `side × side` square and increasing flags bounded by `max_flag`.
pub fn flagged_tableau_verify(side: usize, max_flag: u32) -> Report {
    let items: Vec<(Partition, Vec<u32>)> = box_partitions(side, side as u32)
        .into_iter()
        .flat_map(|l| weakly_increasing(l.len(), max_flag).into_iter().map(move |rho| (l.clone(), rho)))
        .collect();
    let checks = sweep(&items, |(l, rho)| {
        let parts = l.parts();
        let outcome = flagged_schur(&as_i64(parts), &vec![0; parts.len()], &as_i64(rho), EH::H, Family::T, false)
            .map(|det| poly_diff(&det, &tableau_sum(parts, rho)));
        vec![Check::new("flagged.tableau", format!("λ={l} ρ={rho:?}"), outcome)]
    });
    Report::with_checks("flagged", checks)
}

/// The `h`/`e` determinant duality for `λ, μ` inside the `ℓ × k` box, `k, ℓ ≤ max`.
pub fn he_duality_verify(max: usize) -> Report {
    let items: Vec<(usize, usize, Partition, Partition)> = (1..=max)
        .flat_map(|k| (1..=max).map(move |l| (k, l)))
        .flat_map(|(k, l)| {
            let shapes = box_partitions(l, k as u32);
            shapes
                .iter()
                .flat_map(|a| shapes.iter().map(move |b| (k, l, a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let checks = sweep(&items, |(k, l, lam, mu)| {
        let (k, l) = (*k as i64, *l);
        let (lp, mp) = (lam.padded(l), mu.padded(l));
        let (lc, mc) = (lam.conjugate().padded(k as usize), mu.conjugate().padded(k as usize));
        let outcome = (|| {
            let h = flagged_det(&lp, &mp, |i, d| gen_eh(EH::H, d, k + i as i64 + 1 - lp[i], Family::T, false))?;
            let e = flagged_det(&lc, &mc, |i, d| gen_eh(EH::E, d, k + lc[i] - i as i64 - 1, Family::T, false))?;
            Ok(poly_diff(&h, &e))
        })();
        vec![Check::new("flagged.h-e-duality", format!("k={k} ℓ={l} λ={lam} μ={mu}"), outcome)]
    });
    Report::with_checks("flagged", checks)
}

/// `D 𝔄𝔖_ϖ ≡ 𝔄𝔖_{ϖ*}` modulo `I_n` for all `ϖ ∈ S_n`, and the elementary case.
pub fn duality_verify(n: usize) -> Report {
    let perms = group_elements(Kind::A, n);
    let mut checks = sweep(&perms, |w| {
        let outcome = duality_holds(w, n).map(|ok| expect(ok, || "difference not in the ideal".into()));
        vec![Check::new("duality.schubert", format!("n={n} w={w}"), outcome)]
    });
    for r in 1..=n {
        for i in 1..=r as i64 {
            let outcome = elementary_duality_holds(i, r, n).map(|ok| expect(ok, || "difference not in the ideal".into()));
            checks.push(Check::new("duality.elementary", format!("n={n} i={i} r={r}"), outcome));
        }
    }
    Report::with_checks("duality", checks)
}

/// The `Ω`-prefixed top reverse polynomial as a flagged Schur polynomial,
/// and for `m = 0` the nilCoxeter extraction against the defining sum.
pub fn reverse_verify(n: usize, m: usize) -> Report {
    let mut r = Report::new("reverse");
    let outcome = (|| Ok(poly_diff(&reverse_schubert_omega(&longest_a(n), n, m)?, &reverse_top_flagged(n, m)?)))();
    r.record("reverse.top-flagged", format!("n={n} m={m}"), outcome);
    if m == 0 {
        let checks = sweep(&group_elements(Kind::A, n), |w| {
            let outcome = (|| Ok(poly_diff(&reverse_schubert_omega(w, n, 0)?, &reverse_schubert(w)?)))();
            vec![Check::new("reverse.extraction", format!("n={n} w={w}"), outcome)]
        });
        r.checks.extend(checks);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_count() {
        let p = tableau_sum(&[1, 1], &[2, 3]);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn small_suites() {
        for r in [flagged_tableau_verify(2, 3), he_duality_verify(2), duality_verify(3), reverse_verify(3, 1), reverse_verify(3, 0)] {
            assert!(r.all_pass(), "{:?}", r.first_failure());
        }
    }
}
