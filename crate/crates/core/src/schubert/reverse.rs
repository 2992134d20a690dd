//! Reverse double Schubert polynomials and the duality involution on `H_n`.

use crate::error::{Error, Result};
use crate::nilcox::{Factor, NilCox};
use crate::poly::{complete, divided_difference_word, elementary, Alphabet, Family, Poly, Side, Var};
use crate::symfunc::schur::flagged_schur_rows;
use crate::poly::EH;
use crate::weyl::{group_elements, longest_a, reduced_factorizations, reduced_word, Kind, WeylElement};

use super::compute::{schubert, Type};

fn check_a(w: &WeylElement) -> Result<()> {
    if w.kind() != Kind::A {
        return Err(Error::KindMismatch(format!("{w} is not a permutation")));
    }
    Ok(())
}

/// Single `𝔄𝔖_u` with `y_i ↦ ±v_{shift+i}` for a family `fam`.
pub fn a_schubert_in(u: &WeylElement, fam: Family, shift: usize, negate: bool) -> Result<Poly> {
    let u = u.with_kind(Kind::A)?;
    let p = schubert(Type::A, &u, false)?.value;
    Ok(p.rename(|v| match v {
        Var::Y(i) => (fam.var(shift + i as usize), negate),
        v => (v, false),
    }))
}

/// `S̃_ϖ(Y, Z) = Σ_{uv=ϖ} 𝔄𝔖_u(Y) 𝔄𝔖_{v^{-1}}(−Z)`.
pub fn reverse_schubert(w: &WeylElement) -> Result<Poly> {
    check_a(w)?;
    let mut out = Poly::zero();
    for f in reduced_factorizations(w, 2) {
        let left = a_schubert_in(&f[0], Family::Y, 0, false)?;
        let right = a_schubert_in(&f[1].inverse(), Family::Z, 0, true)?;
        out += &(&left * &right);
    }
    Ok(out)
}

/// `⟨𝔸_1(ω_1) ⋯ 𝔸_m(ω_m) 𝔸_{m+1}(y_1) ⋯ 𝔸_{m+n−1}(y_{n−1}) 𝔸̃_{m+n−1}(z_{n−1}) ⋯ 𝔸̃_{m+1}(z_1), 1_m × ϖ⟩`
/// in rank `m + n`, with `ω_i` carried by the `w` family.
pub fn reverse_schubert_omega(w: &WeylElement, n: usize, m: usize) -> Result<Poly> {
    check_a(w)?;
    if !w.fits_rank(n) {
        return Err(Error::InvalidWindow(format!("{w} does not lie in S_{n}")));
    }
    let rank = m + n;
    let mut prod = NilCox::one(Kind::A, rank).with_cap(w.length());
    for i in 1..=m {
        prod = prod.times(Factor::A(i as u32), &Poly::var(Var::W(i as u8)))?;
    }
    for i in 1..n {
        prod = prod.times(Factor::A((m + i) as u32), &Poly::var(Var::Y(i as u8)))?;
    }
    for i in (1..n).rev() {
        prod = prod.times(Factor::ATilde((m + i) as u32), &Poly::var(Var::Z(i as u8)))?;
    }
    Ok(prod.extract(&w.shift(m)))
}

/// `S^{(δ∨(m), δ∨)}_{δ_{n−1}}(h(Ω+Y, −Z))`: row `i` uses `ω_1..ω_m, y_1..y_i` and `−z_1..−z_i`.
pub fn reverse_top_flagged(n: usize, m: usize) -> Result<Poly> {
    let len = n.saturating_sub(1);
    let alpha: Vec<i64> = (1..=len as i64).rev().collect();
    let rows: Vec<Alphabet> = (1..=len)
        .map(|i| {
            Alphabet::first(Family::W, m, false)
                .chain(Alphabet::first(Family::Y, i, false))
                .chain(Alphabet::first(Family::Z, i, true))
        })
        .collect();
    flagged_schur_rows(&alpha, &vec![0; len], &rows, EH::H)
}

/// The duality `D`: `y_i ↦ −y_{n+1−i}`.
pub fn dual(f: &Poly, n: usize) -> Poly {
    f.rename(|v| match v {
        Var::Y(i) => (Var::Y((n + 1 - i as usize) as u8), true),
        v => (v, false),
    })
}

/// Whether `g ∈ ℤ[y_1..y_n]` lies in the ideal generated by `e_1(Y_n), …, e_n(Y_n)`:
/// `(∂_σ g)(0) = 0` for every `σ ∈ S_n`.
pub fn in_coinvariant_ideal(g: &Poly, n: usize) -> Result<bool> {
    if g.max_index(Family::Y) > n {
        return Err(Error::WrongRing(format!("polynomial involves more than {n} y's")));
    }
    for s in group_elements(Kind::A, n) {
        let d = divided_difference_word(g, &reduced_word(&s), Side::Y)?;
        if !d.constant_term().is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ϖ* = ϖ_0 ϖ ϖ_0` in `S_n`.
pub fn star(w: &WeylElement, n: usize) -> WeylElement {
    let w0 = longest_a(n);
    w0.mul(w).mul(&w0)
}

/// `D(𝔄𝔖_ϖ) − 𝔄𝔖_{ϖ*} ∈ I_n`.
pub fn duality_holds(w: &WeylElement, n: usize) -> Result<bool> {
    let a = schubert(Type::A, w, false)?.value;
    let b = schubert(Type::A, &star(w, n), false)?.value;
    in_coinvariant_ideal(&(&dual(&a, n) - &b), n)
}

/// `D(e_i(y_1..y_r)) ≡ h_i(y_1..y_{n−r})` modulo `I_n`.
pub fn elementary_duality_holds(i: i64, r: usize, n: usize) -> Result<bool> {
    let e = elementary(i, &Alphabet::first(Family::Y, r, false));
    let h = complete(i, &Alphabet::first(Family::Y, n - r, false));
    in_coinvariant_ideal(&(&dual(&e, n) - &h), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[i32]) -> WeylElement {
        WeylElement::new(Kind::A, w.to_vec()).unwrap()
    }

    #[test]
    fn small_reverse() {
        assert_eq!(reverse_schubert(&WeylElement::identity(Kind::A)).unwrap(), Poly::one());
        let s = reverse_schubert(&perm(&[2, 1])).unwrap();
        assert_eq!(s, &Poly::var(Var::Y(1)) - &Poly::var(Var::Z(1)));
        assert_eq!(reverse_schubert_omega(&perm(&[2, 1]), 2, 0).unwrap(), s);
    }

    #[test]
    fn omega_prefix() {
        let w0 = longest_a(3);
        assert_eq!(reverse_schubert_omega(&w0, 3, 1).unwrap(), reverse_top_flagged(3, 1).unwrap());
    }

    #[test]
    fn duality_small() {
        assert!(duality_holds(&perm(&[2, 1]), 2).unwrap());
        assert!(elementary_duality_holds(1, 1, 3).unwrap());
        assert!(!in_coinvariant_ideal(&Poly::var(Var::Y(1)), 2).unwrap());
    }
}
