//! Key identities: Schubert polynomials as sums over reduced factorizations
//! of Stanley, mixed Stanley and type A Schubert pieces.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Family, Poly, Var};
use crate::symfunc::schur_in;
use crate::poly::Alphabet;
use crate::weyl::{factorizations_with, FlagSequence, Kind, Partition, Slot, WeylElement};

use super::super::compute::{is_increasing_up_to, schubert_with_cap, stanley, y, z, StanleyVariant, Type};
use super::super::expansion::{restricted_stanley, splitting_expand, stanley_coefficients_a, stanley_coefficients_c};
use super::super::reverse::a_schubert_in;
use super::super::theta::theta;
use super::{elements, gamma_diff, kind_rank_ok, sweep, Check, Report};

const UNSIGNED: Slot = Slot { unsigned: true, fixes_upto: 0 };

fn fixing(m: usize) -> Slot {
    Slot { unsigned: true, fixes_upto: m as u32 }
}

/// Rename `y_i ↦ ±v_i` for a family `fam`.
fn move_y(p: &Poly, fam: Family, negate: bool) -> Poly {
    p.rename(|v| match v {
        Var::Y(i) => (fam.var(i as usize), negate),
        v => (v, false),
    })
}

/// `G_u` of a permutation in `m` variables of `fam`, possibly negated.
fn g_in(u: &WeylElement, m: usize, fam: Family, negate: bool) -> Result<Poly> {
    let u = u.with_kind(Kind::A)?;
    Ok(move_y(&restricted_stanley(Type::A, &u, m, 0)?, fam, negate))
}

/// `𝔖_w(X; Y)` as a sum of `J_v(X; Y_(k)) 𝔄𝔖_u(Y_{>k})` over `w = v (1_k × u)`.
fn key_sum(ty: Type, w: &WeylElement, k: usize) -> Result<Poly> {
    let mut sum = Poly::zero();
    for f in factorizations_with(w, &[Slot::FREE, fixing(k)]) {
        let j = restricted_stanley(ty, &f[0], k, 0)?;
        sum += &(&j * &a_schubert_in(&f[1].unshift(k), Family::Y, k, false)?);
    }
    Ok(sum)
}

/// The double version over `(1_l × u) v (1_k × u′) = w`.
fn key_sum_double(ty: Type, w: &WeylElement, k: usize, l: usize) -> Result<Poly> {
    let mut sum = Poly::zero();
    for f in factorizations_with(w, &[fixing(l), Slot::FREE, fixing(k)]) {
        let left = a_schubert_in(&f[0].unshift(l).inverse(), Family::Z, l, true)?;
        let mid = restricted_stanley(ty, &f[1], k, l)?;
        let right = a_schubert_in(&f[2].unshift(k), Family::Y, k, false)?;
        sum += &(&(&left * &mid) * &right);
    }
    Ok(sum)
}

/// `Σ_{uv=w} G_{u^{-1}}(−Z_(l)) J_v(X; Y_(k))`, one entry per factorization.
fn mixed_left(ty: Type, w: &WeylElement, k: usize, l: usize) -> Result<Vec<(WeylElement, WeylElement, Poly)>> {
    factorizations_with(w, &[UNSIGNED, Slot::FREE])
        .into_iter()
        .map(|f| {
            let g = g_in(&f[0].inverse(), l, Family::Z, true)?;
            let j = restricted_stanley(ty, &f[1], k, 0)?;
            Ok((f[0].clone(), f[1].clone(), &g * &j))
        })
        .collect()
}

/// `Σ_{uv=w^{-1}} G_{u^{-1}}(Y_(k)) J_v(X; −Z_(l))`, one entry per factorization.
fn mixed_right(ty: Type, w: &WeylElement, k: usize, l: usize) -> Result<Vec<(WeylElement, WeylElement, Poly)>> {
    factorizations_with(&w.inverse(), &[UNSIGNED, Slot::FREE])
        .into_iter()
        .map(|f| {
            let g = g_in(&f[0].inverse(), k, Family::Y, false)?;
            let j = move_y(&restricted_stanley(ty, &f[1], l, 0)?, Family::Z, true);
            Ok((f[0].clone(), f[1].clone(), &g * &j))
        })
        .collect()
}

fn total(terms: &[(WeylElement, WeylElement, Poly)]) -> Poly {
    terms.iter().map(|t| t.2.clone()).sum()
}

/// The key identities of `w` for `k` (or `m`) leading `y`'s and `l` leading `z`'s.
pub fn key_identity_verify(ty: Type, w: &WeylElement, k: usize, l: usize) -> Result<Report> {
    ty.check(w)?;
    if ty == Type::B {
        return Err(Error::KindMismatch("key identities are checked in types A, C and D".into()));
    }
    if !is_increasing_up_to(w, k) {
        return Err(Error::HypothesisViolated(format!("{w} is not increasing up to {k}")));
    }
    if !is_increasing_up_to(&w.inverse(), l) {
        return Err(Error::HypothesisViolated(format!("the inverse of {w} is not increasing up to {l}")));
    }
    let mut r = Report::new("identities");
    let input = format!("w={w} k={k} l={l}");
    let single = || Ok::<_, Error>(schubert_with_cap(ty, w, false, u32::MAX)?.value);
    let double = || Ok::<_, Error>(schubert_with_cap(ty, w, true, u32::MAX)?.value);

    let outcome = (|| Ok(gamma_diff(&key_sum(ty, w, k)?, &single()?)))();
    r.record(&format!("{ty}.key"), input.clone(), outcome);
    let outcome = (|| Ok(gamma_diff(&key_sum_double(ty, w, k, l)?, &double()?)))();
    r.record(&format!("{ty}.key-double"), input.clone(), outcome);

    let restricted = stanley(ty, w, StanleyVariant::RestrictedMixed { k, l });
    let outcome = (|| Ok(gamma_diff(&total(&mixed_left(ty, w, k, l)?), restricted.as_ref().map_err(Clone::clone)?)))();
    r.record(&format!("{ty}.mixed-double.left"), input.clone(), outcome);
    let outcome = (|| Ok(gamma_diff(&total(&mixed_right(ty, w, k, l)?), restricted.as_ref().map_err(Clone::clone)?)))();
    r.record(&format!("{ty}.mixed-double.right"), input, outcome);
    Ok(r)
}

/// [`key_identity_verify`] over all elements of rank `n` and length at most
/// `max_len`, for every admissible `(k, l)`.
pub fn key_identity_sweep(ty: Type, n: usize, max_len: u32) -> Result<Report> {
    if ty == Type::B || !kind_rank_ok(ty.kind(), n) {
        return Ok(Report::new("identities"));
    }
    let items: Vec<(WeylElement, usize, usize)> = elements(ty, n)
        .into_iter()
        .filter(|w| w.length() <= max_len)
        .flat_map(|w| {
            let inv = w.inverse();
            let ks: Vec<usize> = (0..=n).filter(|&k| is_increasing_up_to(&w, k)).collect();
            let ls: Vec<usize> = (0..=n).filter(|&l| is_increasing_up_to(&inv, l)).collect();
            ks.into_iter().flat_map(move |k| ls.clone().into_iter().map(move |l| (k, l))).map(move |(k, l)| (w.clone(), k, l))
        })
        .collect();
    let checks = sweep(&items, |(w, k, l)| match key_identity_verify(ty, w, *k, *l) {
        Ok(r) => r.checks,
        Err(e) => vec![Check::new(&format!("{ty}.key"), format!("w={w} k={k} l={l}"), Err(e))],
    });
    Ok(Report::with_checks("identities", checks))
}

type Labels = BTreeMap<(Partition, Partition), Poly>;

/// Label each factorization term by its Schur and theta shapes.
fn labelled(
    terms: &[(WeylElement, WeylElement, Poly)],
    k: usize,
    schur_var: impl Fn(&Partition) -> Poly,
    theta_var: impl Fn(&Partition) -> Result<Poly>,
) -> Result<Labels> {
    let mut out = Labels::new();
    for (u, v, _) in terms {
        for (nu, a) in stanley_coefficients_a(&u.inverse())? {
            for (lam, e) in stanley_coefficients_c(v, k as u32)? {
                let value = (&schur_var(&nu) * &theta_var(&lam)?).scale_i64(a * e);
                let slot = out.entry((nu.clone(), lam)).or_insert_with(Poly::zero);
                *slot += &value;
            }
        }
    }
    Ok(out)
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).expect("literal partition")
}

fn labels_diff(got: &Labels, want: &[((&[u32], &[u32]), Poly)]) -> Option<String> {
    let want: Labels = want.iter().map(|((a, b), p)| ((part(a), part(b)), p.clone())).collect();
    if got.keys().ne(want.keys()) {
        let keys: Vec<String> = got.keys().map(|(a, b)| format!("{a}×{b}")).collect();
        return Some(format!("shapes {}", keys.join(" ")));
    }
    got.iter().zip(&want).find_map(|((key, a), (_, b))| gamma_diff(a, b).map(|d| format!("{}×{}: {d}", key.0, key.1)))
}

/// The worked example `w = 231`, `k = l = 1`, term by term.
pub fn worked_example_verify() -> Report {
    let mut r = Report::new("example");
    let w = WeylElement::new(Kind::BC, vec![2, 3, 1]).expect("valid window");
    let input = "w=2,3,1 k=1 l=1";
    let q = Poly::q;
    let (y1, y2, z1) = (y(1), y(2), z(1));

    let outcome = (|| {
        let expect = &(&q(2) + &(&q(1) * &(&(&y1 + &y2) - &z1))) + &(&(&y1 - &z1) * &(&y2 - &z1));
        Ok(gamma_diff(&schubert_with_cap(Type::C, &w, true, u32::MAX)?.value, &expect))
    })();
    r.record("example.schubert", input, outcome);

    let j_expect = &(&q(2) + &(&q(1) * &(&y1 - &z1))) - &(&(&y1 - &z1) * &z1);
    let outcome = stanley(Type::C, &w, StanleyVariant::RestrictedMixed { k: 1, l: 1 }).map(|j| gamma_diff(&j, &j_expect));
    r.record("example.restricted-mixed", input, outcome);

    let outcome = (|| {
        let t1 = theta(&part(&[1]), 1, false)?;
        let t2 = theta(&part(&[2]), 1, false)?;
        let t11 = move_y(&theta(&part(&[1, 1]), 1, false)?, Family::Z, true);
        Ok(gamma_diff(&t1, &(&q(1) + &y1))
            .or_else(|| gamma_diff(&t2, &(&q(2) + &(&q(1) * &y1))))
            .or_else(|| gamma_diff(&t11, &(&(&q(2) - &(&q(1) * &z1)) + &(&z1 * &z1)))))
    })();
    r.record("example.theta", input, outcome);

    let outcome = (|| {
        let terms = mixed_left(Type::C, &w, 1, 1)?;
        let minus_z = Alphabet::first(Family::Z, 1, true);
        let labels = labelled(
            &terms,
            1,
            |nu| schur_in(&nu.padded(nu.len()), &minus_z, &Alphabet::empty()),
            |lam| theta(lam, 1, false),
        )?;
        let want = [
            ((&[][..], &[2][..]), &q(2) + &(&q(1) * &y1)),
            ((&[1][..], &[1][..]), &(-&z1) * &(&q(1) + &y1)),
            ((&[2][..], &[][..]), &z1 * &z1),
        ];
        Ok(labels_diff(&labels, &want).or_else(|| gamma_diff(&total(&terms), &j_expect)))
    })();
    r.record("example.z-first", input, outcome);

    let outcome = (|| {
        let terms = mixed_right(Type::C, &w, 1, 1)?;
        let plus_y = Alphabet::first(Family::Y, 1, false);
        let labels = labelled(
            &terms,
            1,
            |nu| schur_in(&nu.padded(nu.len()), &plus_y, &Alphabet::empty()),
            |lam| Ok(move_y(&theta(lam, 1, false)?, Family::Z, true)),
        )?;
        let want = [
            ((&[][..], &[1, 1][..]), &(&q(2) - &(&q(1) * &z1)) + &(&z1 * &z1)),
            ((&[1][..], &[1][..]), &y1 * &(&q(1) - &z1)),
            ((&[1, 1][..], &[][..]), Poly::zero()),
        ];
        Ok(labels_diff(&labels, &want).or_else(|| gamma_diff(&total(&terms), &j_expect)))
    })();
    r.record("example.y-first", input, outcome);

    let outcome = (|| {
        let a = FlagSequence::from_values(Kind::BC, &[1, 2])?;
        let b = FlagSequence::from_values(Kind::BC, &[0, 1])?;
        let s = splitting_expand(Type::C, &w, &a, &b)?;
        let negative = s.terms.values().any(|&c| c < 0);
        Ok(if negative {
            Some("negative splitting coefficient".into())
        } else if !s.reconstructs()? {
            Some("splitting does not reassemble".into())
        } else {
            None
        })
    })();
    r.record("example.splitting", "w=2,3,1 a=1,2 b=0,1", outcome);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_passes() {
        let r = worked_example_verify();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }

    #[test]
    fn hypothesis_is_enforced() {
        let w = WeylElement::new(Kind::A, vec![2, 1]).unwrap();
        assert!(matches!(key_identity_verify(Type::A, &w, 2, 0), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn identity_reduces_to_one() {
        for ty in [Type::A, Type::C, Type::D] {
            let r = key_identity_verify(ty, &WeylElement::identity(ty.kind()), 1, 1).unwrap();
            assert!(r.all_pass(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn permutation_2413() {
        let w = WeylElement::new(Kind::A, vec![2, 4, 1, 3]).unwrap();
        let r = key_identity_verify(Type::A, &w, 2, 0).unwrap();
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }
}
