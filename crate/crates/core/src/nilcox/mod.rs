//! NilCoxeter algebras of types A, B/C and D, and the generating factors
//! whose products carry Schubert polynomials and Stanley functions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::gamma::{from_basis, peel_x, faithful_arity, Ring};
use crate::poly::{Family, Poly, Var};
use crate::weyl::{Gen, Kind, WeylElement};

/// An element `Σ_w p_w u_w` of the nilCoxeter algebra of rank `n`.
#[derive(Clone, PartialEq)]
pub struct NilCox {
    kind: Kind,
    rank: usize,
    cap: Option<u32>,
    terms: BTreeMap<WeylElement, Poly>,
}

impl NilCox {
    pub fn one(kind: Kind, rank: usize) -> NilCox {
        let mut terms = BTreeMap::new();
        terms.insert(WeylElement::identity(kind), Poly::one());
        NilCox { kind, rank, cap: None, terms }
    }

    pub fn zero(kind: Kind, rank: usize) -> NilCox {
        NilCox { kind, rank, cap: None, terms: BTreeMap::new() }
    }

    /// `c · u_w`.
    pub fn basis(w: &WeylElement, rank: usize, c: Poly) -> Result<NilCox> {
        if !w.fits_rank(rank) {
            return Err(Error::InvalidWindow(format!("{w} does not lie in rank {rank}")));
        }
        let mut out = NilCox::zero(w.kind(), rank);
        if !c.is_zero() {
            out.terms.insert(w.clone(), c);
        }
        Ok(out)
    }

    /// Drop every term longer than `cap`, now and after each product.
    pub fn with_cap(mut self, cap: u32) -> NilCox {
        self.cap = Some(self.cap.map_or(cap, |c| c.min(cap)));
        self.terms.retain(|w, _| w.length() <= cap);
        self
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient `⟨ξ, w⟩`.
    pub fn extract(&self, w: &WeylElement) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn admits(&self, len: u32) -> bool {
        self.cap.is_none_or(|c| len <= c)
    }

    fn check_gen(&self, g: Gen) -> Result<()> {
        g.check(self.kind)?;
        if !Gen::all(self.kind, self.rank).contains(&g) {
            return Err(Error::IllegalGenerator { gen: g.to_string(), kind: self.kind.to_string() });
        }
        Ok(())
    }

    /// Right multiplication by `1 + t u_g`.
    pub fn mul_linear(&self, g: Gen, t: &Poly) -> Result<NilCox> {
        self.check_gen(g)?;
        let mut out = self.clone();
        if t.is_zero() {
            return Ok(out);
        }
        for (w, p) in &self.terms {
            let ws = w.mul_gen(g);
            let len = ws.length();
            if len > w.length() && self.admits(len) {
                let add = p * t;
                let e = out.terms.entry(ws.clone()).or_default();
                *e += &add;
                if e.is_zero() {
                    out.terms.remove(&ws);
                }
            }
        }
        Ok(out)
    }

    /// Product in the `u_w` basis: `u_v u_w = u_{vw}` when lengths add, else 0.
    pub fn mul(&self, other: &NilCox) -> Result<NilCox> {
        if self.kind != other.kind || self.rank != other.rank {
            return Err(Error::KindMismatch(format!(
                "{} rank {} against {} rank {}",
                self.kind, self.rank, other.kind, other.rank
            )));
        }
        let cap = match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = NilCox { kind: self.kind, rank: self.rank, cap, terms: BTreeMap::new() };
        for (v, p) in &self.terms {
            let lv = v.length();
            for (w, r) in &other.terms {
                let target = lv + w.length();
                if !out.admits(target) {
                    continue;
                }
                let vw = v.mul(w);
                if vw.length() != target {
                    continue;
                }
                let add = p * r;
                *out.terms.entry(vw).or_default() += &add;
            }
        }
        out.terms.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Apply a ring map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> NilCox {
        let terms = self
            .terms
            .iter()
            .map(|(w, p)| (w.clone(), f(p)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        NilCox { kind: self.kind, rank: self.rank, cap: self.cap, terms }
    }

    /// Right multiplication by a generating factor in the variable `t`.
    pub fn times(&self, f: Factor, t: &Poly) -> Result<NilCox> {
        let mut out = self.clone();
        for (g, sign) in factor_word(self.kind, self.rank, f)? {
            out = out.mul_linear(g, &t.scale_i64(sign))?;
        }
        Ok(out)
    }
}

impl fmt::Debug for NilCox {
    /// Lists `(window, polynomial)` pairs by length, then lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&WeylElement> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.length_lex_cmp(b));
        writeln!(f, "NilCox({} rank {})", self.kind, self.rank)?;
        for w in keys {
            writeln!(f, "  [{}] {}", w, self.terms[w])?;
        }
        Ok(())
    }
}

/// The generating factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `A_i(t) = (1 + t u_{n−1}) ⋯ (1 + t u_i)`.
    A(u32),
    /// `Ã_i(t) = (1 − t u_i) ⋯ (1 − t u_{n−1})`.
    ATilde(u32),
    /// `C(t) = (1 + t u_{n−1}) ⋯ (1 + t u_0)(1 + t u_0) ⋯ (1 + t u_{n−1})`.
    C,
    /// `D(t) = (1 + t u_{n−1}) ⋯ (1 + t u_1)(1 + t u_□)(1 + t u_2) ⋯ (1 + t u_{n−1})`.
    D,
    /// `B_i(t) = (1 + t u_{n−i}) ⋯ (1 + t u_1)`.
    B(u32),
}

/// The linear factors `(g, ±1)` of a generating factor, left to right.
pub fn factor_word(kind: Kind, n: usize, f: Factor) -> Result<Vec<(Gen, i64)>> {
    let n = n as u32;
    let illegal = |g: &str| Error::IllegalGenerator { gen: g.to_string(), kind: kind.to_string() };
    let word: Vec<(Gen, i64)> = match f {
        Factor::A(i) => {
            if i == 0 {
                return Err(illegal("0"));
            }
            (i..n).rev().map(|j| (Gen::I(j), 1)).collect()
        }
        Factor::ATilde(i) => {
            if i == 0 {
                return Err(illegal("0"));
            }
            (i..n).map(|j| (Gen::I(j), -1)).collect()
        }
        Factor::B(i) => (1..=n.saturating_sub(i)).rev().map(|j| (Gen::I(j), 1)).collect(),
        Factor::C => {
            if kind != Kind::BC {
                return Err(illegal("0"));
            }
            let mut w: Vec<(Gen, i64)> = (0..n).rev().map(|j| (Gen::I(j), 1)).collect();
            w.extend((0..n).map(|j| (Gen::I(j), 1)));
            w
        }
        Factor::D => {
            if kind != Kind::D {
                return Err(illegal("b"));
            }
            if n < 2 {
                return Ok(Vec::new());
            }
            let mut w: Vec<(Gen, i64)> = (1..n).rev().map(|j| (Gen::I(j), 1)).collect();
            w.push((Gen::Box, 1));
            w.extend((2..n).map(|j| (Gen::I(j), 1)));
            w
        }
    };
    Ok(word)
}

/// A generating factor as an algebra element.
pub fn factor(kind: Kind, n: usize, f: Factor, t: &Poly) -> Result<NilCox> {
    NilCox::one(kind, n).times(f, t)
}

/// `C(X)` (type B/C) or `D(X)` (type D) in rank `n` up to length `cap`,
/// with coefficients in `q`-form: the factor is instantiated in `M`
/// variables `x_i` and each coefficient is lifted back to `Γ`.
pub fn x_factor(kind: Kind, n: usize, cap: u32) -> Result<NilCox> {
    let f = match kind {
        Kind::BC => Factor::C,
        Kind::D => Factor::D,
        Kind::A => return Ok(NilCox::one(kind, n)),
    };
    let m = faithful_arity(cap).max(1);
    let mut prod = NilCox::one(kind, n).with_cap(cap);
    for i in 1..=m {
        prod = prod.times(f, &Poly::var(Var::X(i as u8)))?;
    }
    let mut terms = BTreeMap::new();
    for (w, p) in prod.terms {
        let basis = peel_x(&p, m, Ring::Gamma)?;
        terms.insert(w, from_basis(&basis, Ring::Gamma));
    }
    Ok(NilCox { kind, rank: n, cap: Some(cap), terms })
}

/// Evaluate every `q_r` of the coefficients in `x_1, …, x_m`.
pub fn evaluate_x(xi: &NilCox, m: usize) -> NilCox {
    xi.map_coeffs(|p| crate::poly::gamma::evaluate_x(p, m))
}

/// True when no coefficient mentions the family.
pub fn free_of(xi: &NilCox, fam: Family) -> bool {
    xi.terms.values().all(|p| !p.has_family(fam))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Poly {
        Poly::var(Var::T(1))
    }

    fn el(kind: Kind, w: &[i32]) -> WeylElement {
        WeylElement::new(kind, w.to_vec()).unwrap()
    }

    #[test]
    fn u_squared_vanishes() {
        let s1 = el(Kind::A, &[2, 1]);
        let u = NilCox::basis(&s1, 2, Poly::one()).unwrap();
        assert!(u.mul(&u).unwrap().is_zero());
        let s2 = el(Kind::A, &[1, 3, 2]);
        let a = NilCox::basis(&s1, 3, Poly::one()).unwrap();
        let b = NilCox::basis(&s2, 3, Poly::one()).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.extract(&s1.mul(&s2)), Poly::one());
    }

    #[test]
    fn inverse_linear_factor() {
        let p = NilCox::one(Kind::A, 2).mul_linear(Gen::I(1), &t()).unwrap();
        let q = p.mul_linear(Gen::I(1), &-t()).unwrap();
        assert_eq!(q, NilCox::one(Kind::A, 2));
    }

    #[test]
    fn small_factors() {
        let c = factor(Kind::BC, 1, Factor::C, &t()).unwrap();
        assert_eq!(c.extract(&el(Kind::BC, &[-1])), t().scale_i64(2));
        let d = factor(Kind::D, 2, Factor::D, &t()).unwrap();
        assert_eq!(d.terms().len(), 4);
        let s1sb = el(Kind::D, &[2, 1]).mul(&el(Kind::D, &[-2, -1]));
        assert_eq!(d.extract(&s1sb), t().pow(2));
    }

    #[test]
    fn c_of_two_x() {
        let a = factor(Kind::BC, 1, Factor::C, &Poly::var(Var::X(1))).unwrap();
        let b = a.times(Factor::C, &Poly::var(Var::X(2))).unwrap();
        let expect = (&Poly::var(Var::X(1)) + &Poly::var(Var::X(2))).scale_i64(2);
        assert_eq!(b.extract(&el(Kind::BC, &[-1])), expect);
    }

    #[test]
    fn kind_mismatch() {
        let a = NilCox::one(Kind::A, 2);
        let b = NilCox::one(Kind::BC, 2);
        assert!(matches!(a.mul(&b), Err(Error::KindMismatch(_))));
    }

    #[test]
    fn x_factor_length_one() {
        let c = x_factor(Kind::BC, 2, 3).unwrap();
        assert_eq!(c.extract(&el(Kind::BC, &[-1])), Poly::q(1));
    }
}
