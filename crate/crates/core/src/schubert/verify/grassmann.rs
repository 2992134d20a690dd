//! Grassmannian elements: Schur, theta and eta polynomials against
//! nilCoxeter extraction, and the divided difference recursion.

use crate::error::Result;
use crate::poly::{divided_difference, Side};
use crate::symfunc::schur_s;
use crate::weyl::{is_k_grassmannian, k_strict_shape, shape_a, typed_shape, Gen, WeylElement};

use super::super::compute::{schubert_with_cap, Type};
use super::super::theta::{eta, theta};
use super::{elements, gamma_diff, kind_rank_ok, poly_diff, schubert_of, sweep, Check, Report};

/// The Grassmannian polynomial of `w` for `k`, double or single.
fn grassmannian_poly(ty: Type, w: &WeylElement, k: u32, double: bool) -> Result<crate::poly::Poly> {
    match ty {
        Type::D => eta(&typed_shape(w, k)?, double),
        _ => theta(&k_strict_shape(w, k)?, k, double),
    }
}

/// Agreement and recursion for every `k`-Grassmannian element of rank `n`.
pub fn grassmannian_verify(ty: Type, n: usize) -> Result<Report> {
    let kind = ty.kind();
    if ty == Type::B || !kind_rank_ok(kind, n) {
        return Ok(Report::new("grassmannian"));
    }
    let items: Vec<(u32, WeylElement)> = (0..n as u32)
        .flat_map(|k| elements(ty, n).into_iter().map(move |w| (k, w)))
        .filter(|(k, w)| is_k_grassmannian(w, *k) && (ty != Type::A || *k > 0))
        .collect();
    let gens = Gen::all(kind, n);
    let checks = sweep(&items, |(k, w)| {
        let k = *k;
        let input = format!("k={k} w={w}");
        if ty == Type::A {
            let outcome = (|| {
                let lam = shape_a(w, k)?;
                let s = schur_s(&lam.padded(lam.len()), k as usize, 0);
                Ok(poly_diff(&schubert_with_cap(ty, w, false, u32::MAX)?.value, &s))
            })();
            return vec![Check::new("A.grassmannian.schur", input, outcome)];
        }
        let name = if ty == Type::D { "eta" } else { "theta" };
        let mut out = Vec::new();
        let outcome = (|| Ok(gamma_diff(&grassmannian_poly(ty, w, k, true)?, &schubert_of(ty, w)?)))();
        out.push(Check::new(&format!("{ty}.grassmannian.{name}.double"), input.clone(), outcome));
        let outcome = (|| {
            let single = schubert_with_cap(ty, w, false, u32::MAX)?.value;
            Ok(gamma_diff(&grassmannian_poly(ty, w, k, false)?, &single))
        })();
        out.push(Check::new(&format!("{ty}.grassmannian.{name}.single"), input.clone(), outcome));
        for &g in &gens {
            if !w.has_left_descent(g) {
                continue;
            }
            let outcome = (|| {
                let v = w.gen_mul(g);
                let d = divided_difference(&grassmannian_poly(ty, w, k, true)?, g, Side::Z)?;
                Ok(gamma_diff(&d, &grassmannian_poly(ty, &v, k, true)?))
            })();
            out.push(Check::new(&format!("{ty}.grassmannian.{name}.recursion"), format!("{input} g={g}"), outcome));
        }
        out
    });
    Ok(Report::with_checks("grassmannian", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        for ty in [Type::A, Type::C, Type::D] {
            let r = grassmannian_verify(ty, 2).unwrap();
            assert!(r.all_pass(), "{:?}", r.first_failure());
        }
    }
}
