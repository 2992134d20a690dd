//! The rings `Γ = ℤ[q_1, q_2, …]` and `Γ′ = ℤ[P_1, P_2, …]` over `ℤ[½][Y, Z]`.
//!
//! Elements are carried as polynomials in free `q_r` symbols. Two routes
//! decide equality: rewriting even `q`'s through the odd ones (which are
//! algebraically independent), and evaluating in finitely many `x`'s and
//! peeling off `Q_λ` leading terms.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use super::linalg::pfaffian;
use super::monomial::{Family, Monomial, Var};
use super::poly::Poly;
use super::series::{q_in, Alphabet};
use crate::error::{Error, Result};
use crate::weyl::Partition;

/// Default bound on the `x`-degree handled by [`normalize`].
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// The degree cap from `SCHUBERTKIT_DEGREE_CAP`, else [`DEFAULT_DEGREE_CAP`].
pub fn degree_cap_from_env() -> u32 {
    std::env::var("SCHUBERTKIT_DEGREE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// Which basis of symmetric functions an element is reported in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    /// `Γ`, basis `Q_λ`.
    Gamma,
    /// `Γ′`, basis `P_λ = 2^{−ℓ(λ)} Q_λ`.
    GammaPrime,
}

thread_local! {
    static ODD_FORMS: RefCell<Vec<Rc<Poly>>> = const { RefCell::new(Vec::new()) };
    static Q_BASIS: RefCell<HashMap<Vec<i64>, Rc<Poly>>> = RefCell::new(HashMap::new());
    static Q_BASIS_X: RefCell<HashMap<(Vec<u32>, usize), Rc<Poly>>> = RefCell::new(HashMap::new());
    static Q_IN_X: RefCell<HashMap<(i64, usize), Rc<Poly>>> = RefCell::new(HashMap::new());
}

/// `q_r` written in the odd generators, via `q_{2s} = −½ Σ_{0<i<2s} (−1)^i q_i q_{2s−i}`.
pub fn odd_form(r: i64) -> Rc<Poly> {
    if r <= 0 {
        return Rc::new(Poly::q(r));
    }
    let r = r as usize;
    ODD_FORMS.with(|cell| {
        let mut forms = cell.borrow_mut();
        if forms.is_empty() {
            forms.push(Rc::new(Poly::one()));
        }
        while forms.len() <= r {
            let n = forms.len();
            let p = if n % 2 == 1 {
                Poly::q(n as i64)
            } else {
                let mut s = Poly::zero();
                for i in 1..n {
                    let t = &*forms[i] * &*forms[n - i];
                    if i % 2 == 1 {
                        s -= &t;
                    } else {
                        s += &t;
                    }
                }
                s.halve(1).scale_i64(-1)
            };
            forms.push(Rc::new(p));
        }
        forms[r].clone()
    })
}

/// Canonical form: every even `q` rewritten through odd ones.
pub fn canonical(p: &Poly) -> Poly {
    p.substitute(|v| match v {
        Var::Q(r) if r % 2 == 0 => Some((*odd_form(r as i64)).clone()),
        _ => None,
    })
}

/// Equality in `Γ[Y, Z]` via canonical forms.
pub fn gamma_eq(a: &Poly, b: &Poly) -> bool {
    canonical(&(a - b)).is_zero()
}

/// `Q_{(a,b)} = q_a q_b + 2 Σ_{j≥1} (−1)^j q_{a+j} q_{b−j}`.
pub fn q_pair(a: i64, b: i64) -> Poly {
    let mut out = &Poly::q(a) * &Poly::q(b);
    for j in 1..=b.max(0) {
        let t = (&Poly::q(a + j) * &Poly::q(b - j)).scale_i64(2);
        if j % 2 == 1 {
            out -= &t;
        } else {
            out += &t;
        }
    }
    out
}

/// `Q_α` in `q`-form by the Schur Pfaffian of the two-part functions,
/// padding odd lengths with a zero part.
pub fn q_basis(alpha: &[i64]) -> Rc<Poly> {
    if let Some(p) = Q_BASIS.with(|c| c.borrow().get(alpha).cloned()) {
        return p;
    }
    let mut a = alpha.to_vec();
    let p = match a.len() {
        0 => Poly::one(),
        1 => Poly::q(a[0]),
        _ => {
            if a.len() % 2 == 1 {
                a.push(0);
            }
            pfaffian(a.len(), |i, j| q_pair(a[i], a[j]))
        }
    };
    let p = Rc::new(p);
    Q_BASIS.with(|c| c.borrow_mut().insert(alpha.to_vec(), p.clone()));
    p
}

/// `P_λ = 2^{−ℓ(λ)} Q_λ` in `q`-form.
pub fn p_basis(lambda: &Partition) -> Poly {
    q_basis(&lambda.padded(lambda.len())).halve(lambda.len() as u32)
}

/// Basis element of the given ring.
pub fn basis_element(ring: Ring, lambda: &Partition) -> Poly {
    match ring {
        Ring::Gamma => (*q_basis(&lambda.padded(lambda.len()))).clone(),
        Ring::GammaPrime => p_basis(lambda),
    }
}

/// Number of `x`-variables that separates all strict partitions of weight `d`.
pub fn faithful_arity(d: u32) -> usize {
    (0usize..).find(|m| m * (m + 1) / 2 >= d as usize).unwrap()
}

/// Largest `q`-weight occurring in `p`.
pub fn x_degree(p: &Poly) -> u32 {
    p.terms().map(|(m, _)| m.family_degree(Family::Q)).max().unwrap_or(0)
}

fn q_in_x(r: i64, m: usize) -> Rc<Poly> {
    if let Some(p) = Q_IN_X.with(|c| c.borrow().get(&(r, m)).cloned()) {
        return p;
    }
    let p = Rc::new(q_in(r, &Alphabet::first(Family::X, m, false)));
    Q_IN_X.with(|c| c.borrow_mut().insert((r, m), p.clone()));
    p
}

/// Replace each `q_r` by `q_r(x_1, …, x_m)`.
pub fn evaluate_x(p: &Poly, m: usize) -> Poly {
    p.substitute(|v| match v {
        Var::Q(r) => Some((*q_in_x(r as i64, m)).clone()),
        _ => None,
    })
}

fn q_basis_x(lambda: &[u32], m: usize) -> Rc<Poly> {
    let key = (lambda.to_vec(), m);
    if let Some(p) = Q_BASIS_X.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    let alpha: Vec<i64> = lambda.iter().map(|&v| v as i64).collect();
    let p = Rc::new(evaluate_x(&q_basis(&alpha), m));
    Q_BASIS_X.with(|c| c.borrow_mut().insert(key, p.clone()));
    p
}

/// Expansion of `p ∈ Γ[Y, Z]` in the `Q_λ` (or `P_λ`) basis, found by
/// evaluating in `M` variables and peeling lex-leading monomials.
pub fn normalize(p: &Poly, ring: Ring, cap: u32) -> Result<BTreeMap<Partition, Poly>> {
    if p.has_family(Family::X) {
        return Err(Error::WrongRing("input already contains x variables".into()));
    }
    let d = x_degree(p);
    if d > cap {
        return Err(Error::DegreeOverflow { degree: d, cap });
    }
    let m = faithful_arity(d);
    peel_x(&evaluate_x(p, m), m, ring)
}

/// Basis expansion of a polynomial in `x_1, …, x_m` that is the image of
/// an element of `Γ[Y, Z]`; `m` must be faithful for its degree.
pub fn peel_x(f: &Poly, m: usize, ring: Ring) -> Result<BTreeMap<Partition, Poly>> {
    if f.max_index(Family::X) > m {
        return Err(Error::WrongRing(format!("more than {m} x variables")));
    }
    let mut work = f.coefficients_in(Family::X);
    work.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = work.pop_last() {
        let lambda = lead.family_exponents(Family::X);
        if lambda.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotSymmetric(format!("leading x-monomial {lead} is not strict")));
        }
        let len = lambda.len() as u32;
        let qx = q_basis_x(&lambda, m);
        // Q_λ(x) has leading coefficient 2^ℓ.
        let unit = c.halve(len);
        for (xm, xc) in qx.terms() {
            if *xm == lead {
                continue;
            }
            let delta = unit.scale(xc);
            let e = work.entry(*xm).or_default();
            *e -= &delta;
            if e.is_zero() {
                work.remove(xm);
            }
        }
        let coeff = match ring {
            Ring::Gamma => unit,
            Ring::GammaPrime => c,
        };
        out.insert(Partition::new(lambda)?, coeff);
    }
    Ok(out)
}

/// Inverse of [`normalize`]: `Σ c_λ Q_λ` (or `Σ c_λ P_λ`) in `q`-form.
pub fn from_basis(coeffs: &BTreeMap<Partition, Poly>, ring: Ring) -> Poly {
    coeffs.iter().map(|(l, c)| c * &basis_element(ring, l)).sum()
}

/// An element of `Γ[Y, Z]` or `Γ′[Y, Z]`.
#[derive(Clone, Debug)]
pub struct GammaElement {
    pub ring: Ring,
    pub rep: Poly,
}

impl GammaElement {
    pub fn new(ring: Ring, rep: Poly) -> GammaElement {
        GammaElement { ring, rep }
    }

    /// The basis expansion under the degree cap.
    pub fn normalized(&self, cap: u32) -> Result<BTreeMap<Partition, Poly>> {
        normalize(&self.rep, self.ring, cap)
    }

    pub fn is_zero(&self) -> bool {
        canonical(&self.rep).is_zero()
    }

    /// Drop the `Z` variables.
    pub fn single(&self) -> GammaElement {
        GammaElement { ring: self.ring, rep: self.rep.set_zero(|v| v.family() == Family::Z) }
    }
}

impl PartialEq for GammaElement {
    fn eq(&self, other: &Self) -> bool {
        gamma_eq(&self.rep, &other.rep)
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// `q`-exponent vector of a monomial, indexed from `q_1`.
pub fn q_exponents(m: &Monomial) -> Vec<u32> {
    m.family_exponents(Family::Q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn even_generators_reduce() {
        // q_2 = q_1^2 / 2
        let q2 = odd_form(2);
        assert_eq!(*q2, Poly::q(1).pow(2).halve(1));
        assert!(gamma_eq(&Poly::q(2), &Poly::q(1).pow(2).halve(1)));
        assert!(!gamma_eq(&Poly::q(3), &Poly::q(1).pow(3)));
    }

    #[test]
    fn two_part_q_function() {
        assert_eq!(*q_basis(&[2, 1]), &(&Poly::q(2) * &Poly::q(1)) - &Poly::q(3).scale_i64(2));
        assert!(gamma_eq(&q_basis(&[1, 2]), &-(*q_basis(&[2, 1])).clone()));
        assert!(gamma_eq(&q_basis(&[1, 1]), &Poly::zero()));
    }

    #[test]
    fn q1_evaluates() {
        let v = evaluate_x(&Poly::q(1), 2);
        let expect = (&Poly::var(Var::X(1)) + &Poly::var(Var::X(2))).scale_i64(2);
        assert_eq!(v, expect);
    }

    #[test]
    fn normalize_basics() {
        let n = normalize(&Poly::q(1), Ring::Gamma, 12).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n[&part(&[1])], Poly::one());
        assert!(normalize(&Poly::zero(), Ring::Gamma, 12).unwrap().is_empty());
        // q_1^2 = 2 q_2 = Q_2 (q_2 = Q_2).
        let n = normalize(&Poly::q(1).pow(2), Ring::Gamma, 12).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n[&part(&[2])], Poly::constant(2));
        let p = normalize(&Poly::q(1).pow(2), Ring::GammaPrime, 12).unwrap();
        assert_eq!(p[&part(&[2])], Poly::constant(4));
    }

    #[test]
    fn normalize_round_trips() {
        for lam in Partition::strict_of(6) {
            let p = basis_element(Ring::Gamma, &lam);
            let n = normalize(&p, Ring::Gamma, 12).unwrap();
            assert_eq!(n.len(), 1, "{lam}");
            assert_eq!(n[&lam], Poly::one());
            assert!(gamma_eq(&from_basis(&n, Ring::Gamma), &p));
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(matches!(
            normalize(&Poly::q(13), Ring::Gamma, 12),
            Err(Error::DegreeOverflow { degree: 13, cap: 12 })
        ));
    }

    #[test]
    fn faithful_arity_values() {
        assert_eq!(faithful_arity(0), 0);
        assert_eq!(faithful_arity(1), 1);
        assert_eq!(faithful_arity(3), 2);
        assert_eq!(faithful_arity(4), 3);
        assert_eq!(faithful_arity(9), 4);
    }
}
