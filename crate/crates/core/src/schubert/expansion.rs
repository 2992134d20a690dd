//! Stanley coefficients and the splitting of Schubert polynomials into
//! products of Schur, theta and eta pieces.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::nilcox::{Factor, NilCox};
use crate::poly::gamma::gamma_eq;
use crate::poly::{Alphabet, Family, Poly, Var};
use crate::symfunc::expand::{schur_expand, solve_in_span};
use crate::symfunc::schur::{schur_h, schur_in};
use crate::weyl::{compatible_factorizations, FlagSequence, Kind, Partition, TypedPartition, WeylElement};

use super::compute::{schubert_poly, working_rank, x_part, Type};
use super::theta::{eta, theta};

/// `⟨Ã_1(z_1) ⋯ Ã_1(z_l) · X · A_1(y_1) ⋯ A_1(y_k), w⟩` without any hypothesis on `w`.
pub fn restricted_stanley(ty: Type, w: &WeylElement, k: usize, l: usize) -> Result<Poly> {
    ty.check(w)?;
    let kind = ty.kind();
    let n = working_rank(w);
    let cap = w.length();
    let mut prod = NilCox::one(kind, n).with_cap(cap);
    for j in 1..=l {
        prod = prod.times(Factor::ATilde(1), &Poly::var(Var::Z(j as u8)))?;
    }
    if kind != Kind::A {
        prod = prod.mul(&*x_part(kind, n, cap)?)?;
    }
    for i in 1..=k {
        prod = prod.times(Factor::A(1), &Poly::var(Var::Y(i as u8)))?;
    }
    let mut p = prod.extract(w);
    if ty == Type::B {
        p = p.halve(w.sign_count());
    }
    Ok(p)
}

/// Shape labelling one factor of a splitting term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Schur(Partition),
    Theta(Partition),
    Eta(TypedPartition),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Schur(l) | Shape::Theta(l) => write!(f, "{l}"),
            Shape::Eta(t) => write!(f, "{t}"),
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn to_integer(c: &BigRational) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::NonIntegralCoefficient(c.to_string()));
    }
    c.to_integer().to_i64().ok_or_else(|| Error::NonIntegralCoefficient(c.to_string()))
}

fn constant_integer(p: &Poly) -> Result<i64> {
    if !p.is_constant() {
        return Err(Error::NonIntegralCoefficient(p.to_string()));
    }
    p.constant_term().to_i64().ok_or_else(|| Error::NonIntegralCoefficient(p.to_string()))
}

fn check_nonnegative<K: fmt::Display>(m: &BTreeMap<K, i64>) -> Result<()> {
    match m.iter().find(|(_, &c)| c < 0) {
        Some((k, c)) => Err(Error::NegativeCoefficient(format!("{c} at {k}"))),
        None => Ok(()),
    }
}

thread_local! {
    static STANLEY_COEFFICIENTS_C: RefCell<HashMap<(WeylElement, u32), BTreeMap<Partition, i64>>> =
        RefCell::new(HashMap::new());
    static STANLEY_COEFFICIENTS_D: RefCell<HashMap<(WeylElement, u32), BTreeMap<TypedPartition, i64>>> =
        RefCell::new(HashMap::new());
}

/// `a^ϖ_λ` with `G_ϖ = Σ a^ϖ_λ s_λ`.
pub fn stanley_coefficients_a(w: &WeylElement) -> Result<BTreeMap<Partition, i64>> {
    let w = w.with_kind(Kind::A)?;
    let m = (w.length() as usize).max(1);
    let g = restricted_stanley(Type::A, &w, m, 0)?;
    let out = schur_expand(&g, Family::Y, m)?
        .into_iter()
        .map(|(l, c)| Ok((l, constant_integer(&c)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    check_nonnegative(&out)?;
    Ok(out)
}

/// `e^w_λ` with `J_w(X; Y_(k)) = Σ e^w_λ Θ_λ(X; Y_(k))`, for `w ∈ W_∞` increasing up to `k`.
pub fn stanley_coefficients_c(w: &WeylElement, k: u32) -> Result<BTreeMap<Partition, i64>> {
    let key = (w.clone(), k);
    if let Some(v) = STANLEY_COEFFICIENTS_C.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = stanley_coefficients_c_uncached(w, k)?;
    STANLEY_COEFFICIENTS_C.with(|c| c.borrow_mut().insert(key, v.clone()));
    Ok(v)
}

fn stanley_coefficients_c_uncached(w: &WeylElement, k: u32) -> Result<BTreeMap<Partition, i64>> {
    let target = restricted_stanley(Type::C, w, k as usize, 0)?;
    let basis = Partition::k_strict_of(w.length(), k)
        .into_iter()
        .map(|l| Ok((l.clone(), theta(&l, k, false)?)))
        .collect::<Result<Vec<_>>>()?;
    integral_solution(&target, &basis)
}

/// `d^w_λ` with `I_w(X; Y_(k)) = Σ d^w_λ H_λ(X; Y_(k))`; `k = 0` stands for `□`.
pub fn stanley_coefficients_d(w: &WeylElement, k: u32) -> Result<BTreeMap<TypedPartition, i64>> {
    let key = (w.clone(), k);
    if let Some(v) = STANLEY_COEFFICIENTS_D.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = stanley_coefficients_d_uncached(w, k)?;
    STANLEY_COEFFICIENTS_D.with(|c| c.borrow_mut().insert(key, v.clone()));
    Ok(v)
}

fn stanley_coefficients_d_uncached(w: &WeylElement, k: u32) -> Result<BTreeMap<TypedPartition, i64>> {
    let target = restricted_stanley(Type::D, w, k as usize, 0)?;
    let basis = TypedPartition::all_of(w.length(), k)
        .into_iter()
        .map(|t| Ok((t.clone(), eta(&t, false)?)))
        .collect::<Result<Vec<_>>>()?;
    integral_solution(&target, &basis)
}

fn integral_solution<K: Clone + Ord + fmt::Display>(target: &Poly, basis: &[(K, Poly)]) -> Result<BTreeMap<K, i64>> {
    let sol = solve_in_span(target, basis)?;
    let out = sol
        .iter()
        .map(|(k, c)| {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(format!("{c} at {k}")));
            }
            Ok((k.clone(), to_integer(c)?))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(out)
}

/// A splitting expansion together with the data needed to reassemble it.
#[derive(Clone, Debug, Serialize)]
pub struct Splitting {
    pub ty: Type,
    #[serde(serialize_with = "display")]
    pub element: WeylElement,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    /// Coefficients keyed by the shapes of the factors, left to right.
    pub terms: BTreeMap<Vec<Shape>, i64>,
}

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn a_terms(u: &WeylElement) -> Result<Vec<(Shape, i64)>> {
    Ok(stanley_coefficients_a(u)?.into_iter().map(|(l, c)| (Shape::Schur(l), c)).collect())
}

/// Splitting coefficients of `𝔖_w` for the flag sequences `𝔞`, `𝔟`.
pub fn splitting_expand(ty: Type, w: &WeylElement, a: &FlagSequence, b: &FlagSequence) -> Result<Splitting> {
    ty.check(w)?;
    if ty == Type::B {
        return Err(Error::KindMismatch("splitting is provided for types A, C and D".into()));
    }
    let bv = b.values();
    if ty != Type::A && bv[0] != 0 {
        return Err(Error::HypothesisViolated("the first entry of 𝔟 must be 0 (or □ in type D)".into()));
    }
    let q = bv.len();
    let k = a.values()[0];
    let mut terms: BTreeMap<Vec<Shape>, i64> = BTreeMap::new();
    for f in compatible_factorizations(w, a, b)? {
        let mut partial: Vec<(Vec<Shape>, i64)> = vec![(Vec::new(), 1)];
        for (j, u) in f.iter().enumerate() {
            let options: Vec<(Shape, i64)> = if j + 1 != q || ty == Type::A {
                a_terms(u)?
            } else if ty == Type::C {
                stanley_coefficients_c(u, k)?.into_iter().map(|(l, c)| (Shape::Theta(l), c)).collect()
            } else {
                stanley_coefficients_d(u, k)?.into_iter().map(|(l, c)| (Shape::Eta(l), c)).collect()
            };
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for (shapes, c) in &partial {
                for (s, d) in &options {
                    let mut v = shapes.clone();
                    v.push(s.clone());
                    next.push((v, c * d));
                }
            }
            partial = next;
        }
        for (shapes, c) in partial {
            *terms.entry(shapes).or_insert(0) += c;
        }
    }
    terms.retain(|_, c| *c != 0);
    check_nonnegative(&terms.iter().map(|(k, v)| (format!("{k:?}"), *v)).collect())?;
    Ok(Splitting { ty, element: w.clone(), a: a.values(), b: bv, terms })
}

impl Splitting {
    /// `Σ coeff · ∏ factor`, with factor `j < q` in `0/Z_{q+1−j}`, the middle in
    /// `Y_1/Z_1`, and factor `q + j` in `Y_{j+1}`.
    pub fn reassemble(&self) -> Result<Poly> {
        let q = self.b.len();
        let block = |v: &[u32], i: usize| (v.get(i.wrapping_sub(2)).map_or(0, |&x| x as usize), v[i - 1] as usize);
        let mut out = Poly::zero();
        for (shapes, c) in &self.terms {
            let mut prod = Poly::constant(*c);
            for (j0, s) in shapes.iter().enumerate() {
                let j = j0 + 1;
                let value = match s {
                    Shape::Schur(l) if j < q => {
                        let (lo, hi) = block(&self.b, q + 1 - j);
                        schur_in(&l.padded(l.len()), &Alphabet::empty(), &Alphabet::range(Family::Z, lo, hi, false))
                    }
                    Shape::Schur(l) if j == q => {
                        let (ya, za) = (self.a[0] as usize, self.b[0] as usize);
                        schur_in(&l.padded(l.len()), &Alphabet::first(Family::Y, ya, false), &Alphabet::first(Family::Z, za, false))
                    }
                    Shape::Schur(l) => {
                        let (lo, hi) = block(&self.a, j - q + 1);
                        schur_h(&l.padded(l.len()), &Alphabet::range(Family::Y, lo, hi, false))
                    }
                    Shape::Theta(l) => theta(l, self.a[0], false)?,
                    Shape::Eta(t) => eta(t, false)?,
                };
                prod = &prod * &value;
            }
            out += &prod;
        }
        Ok(out)
    }

    /// Whether the reassembled sum equals the double Schubert polynomial.
    pub fn reconstructs(&self) -> Result<bool> {
        let lhs = schubert_poly(self.ty, &self.element)?;
        Ok(gamma_eq(&lhs, &self.reassemble()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor_case() {
        let w = WeylElement::new(Kind::A, vec![2, 1]).unwrap();
        let f = FlagSequence::from_values(Kind::A, &[1]).unwrap();
        let s = splitting_expand(Type::A, &w, &f, &f).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert!(s.reconstructs().unwrap());
    }

    #[test]
    fn worked_example_c() {
        let w = WeylElement::new(Kind::BC, vec![2, 3, 1]).unwrap();
        let a = FlagSequence::from_values(Kind::BC, &[1, 2]).unwrap();
        let b = FlagSequence::from_values(Kind::BC, &[0, 1]).unwrap();
        let s = splitting_expand(Type::C, &w, &a, &b).unwrap();
        assert!(s.reconstructs().unwrap());
    }

    #[test]
    fn f_of_s0() {
        let w = WeylElement::new(Kind::BC, vec![-1]).unwrap();
        let e = stanley_coefficients_c(&w, 0).unwrap();
        assert_eq!(e, [(Partition::new(vec![1]).unwrap(), 1)].into_iter().collect());
    }
}
