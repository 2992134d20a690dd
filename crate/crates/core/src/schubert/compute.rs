//! Schubert polynomials and Stanley functions by nilCoxeter extraction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nilcox::{x_factor, Factor, NilCox};
use crate::poly::gamma::{degree_cap_from_env, Ring};
use crate::poly::{from_json_terms, to_json_terms, Family, JsonTerm, Poly, Var};
use crate::weyl::{Kind, WeylElement};

/// Lie type of a Schubert polynomial; B and C share the Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Type {
    A,
    B,
    C,
    D,
}

impl Type {
    pub fn kind(self) -> Kind {
        match self {
            Type::A => Kind::A,
            Type::B | Type::C => Kind::BC,
            Type::D => Kind::D,
        }
    }

    /// The ring the `X`-part lives in, if any.
    pub fn ring(self) -> Option<Ring> {
        match self {
            Type::A => None,
            Type::B | Type::C => Some(Ring::Gamma),
            Type::D => Some(Ring::GammaPrime),
        }
    }

    pub(crate) fn check(self, w: &WeylElement) -> Result<()> {
        if w.kind() != self.kind() {
            return Err(Error::KindMismatch(format!("{w} is of kind {}, not type {self}", w.kind())));
        }
        Ok(())
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Type {
    type Err = Error;
    fn from_str(s: &str) -> Result<Type> {
        match s.trim() {
            "A" | "a" => Ok(Type::A),
            "B" | "b" => Ok(Type::B),
            "C" | "c" => Ok(Type::C),
            "D" | "d" => Ok(Type::D),
            _ => Err(Error::Parse(format!("unknown type {s:?}"))),
        }
    }
}

/// Length of the longest element of the rank `n` group.
pub fn max_length(kind: Kind, n: usize) -> u32 {
    let n = n as u32;
    match kind {
        Kind::A => n * n.saturating_sub(1) / 2,
        Kind::BC => n * n,
        Kind::D => n * n.saturating_sub(1),
    }
}

/// The rank used for an element: its own, but at least the smallest legal one.
pub fn working_rank(w: &WeylElement) -> usize {
    let min = if w.kind() == Kind::D { 2 } else { 1 };
    w.rank().max(min)
}

pub(crate) fn y(i: usize) -> Poly {
    Poly::var(Var::Y(i as u8))
}

pub(crate) fn z(i: usize) -> Poly {
    Poly::var(Var::Z(i as u8))
}

type ProductKey = (Kind, usize, u32);

fn x_factors() -> &'static Mutex<HashMap<ProductKey, Arc<NilCox>>> {
    static CELL: OnceLock<Mutex<HashMap<ProductKey, Arc<NilCox>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

fn full_products() -> &'static Mutex<HashMap<ProductKey, Arc<NilCox>>> {
    static CELL: OnceLock<Mutex<HashMap<ProductKey, Arc<NilCox>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

/// `C(X)` or `D(X)` (or 1 in type A) in `q`-form, cached.
pub fn x_part(kind: Kind, n: usize, cap: u32) -> Result<Arc<NilCox>> {
    let key = (kind, n, cap);
    if let Some(p) = x_factors().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(x_factor(kind, n, cap)?);
    x_factors().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// `Ã_{n−1}(z_{n−1}) ⋯ Ã_1(z_1) · X · A_1(y_1) ⋯ A_{n−1}(y_{n−1})` up to length `cap`.
pub fn full_product(kind: Kind, n: usize, cap: u32) -> Result<Arc<NilCox>> {
    let key = (kind, n, cap);
    if let Some(p) = full_products().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let mut left = NilCox::one(kind, n).with_cap(cap);
    for i in (1..n).rev() {
        left = left.times(Factor::ATilde(i as u32), &z(i))?;
    }
    let mut prod = left.mul(&*x_part(kind, n, cap)?)?;
    for i in 1..n {
        prod = prod.times(Factor::A(i as u32), &y(i))?;
    }
    let p = Arc::new(prod);
    full_products().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

fn choose_cap(kind: Kind, n: usize, w: &WeylElement, degree_cap: u32) -> Result<u32> {
    let top = max_length(kind, n);
    if kind == Kind::A || top <= degree_cap {
        return Ok(top);
    }
    let l = w.length();
    if l > degree_cap {
        return Err(Error::DegreeOverflow { degree: l, cap: degree_cap });
    }
    Ok(l.max(degree_cap.min(top)))
}

/// The double Schubert polynomial of `w` computed in the rank `n` algebra.
pub fn schubert_at_rank(ty: Type, w: &WeylElement, n: usize, cap: u32) -> Result<Poly> {
    ty.check(w)?;
    if !w.fits_rank(n) {
        return Err(Error::InvalidWindow(format!("{w} does not lie in rank {n}")));
    }
    if w.length() > cap {
        return Err(Error::BoundExceeded(cap as usize));
    }
    let mut p = full_product(ty.kind(), n, cap)?.extract(w);
    if ty == Type::B {
        p = p.halve(w.sign_count());
    }
    Ok(p)
}

/// A computed Schubert polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SchubertPoly {
    pub ty: Type,
    pub element: WeylElement,
    pub double: bool,
    pub value: Poly,
}

impl SchubertPoly {
    pub fn ring(&self) -> Option<Ring> {
        self.ty.ring()
    }

    /// `{"type":"C","w":"2,-3,1","double":true,"terms":[…]}`.
    pub fn to_json(&self) -> SchubertJson {
        SchubertJson {
            ty: self.ty,
            w: self.element.to_string(),
            double: self.double,
            terms: to_json_terms(&self.value),
        }
    }

    pub fn from_json(j: &SchubertJson) -> Result<SchubertPoly> {
        Ok(SchubertPoly {
            ty: j.ty,
            element: WeylElement::parse(j.ty.kind(), &j.w)?,
            double: j.double,
            value: from_json_terms(&j.terms)?,
        })
    }
}

/// Serialized form of a [`SchubertPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertJson {
    #[serde(rename = "type")]
    pub ty: Type,
    pub w: String,
    pub double: bool,
    pub terms: Vec<JsonTerm>,
}

/// `𝔄𝔖_w`, `𝔅𝔖_w`, `ℭ𝔖_w` or `𝔇𝔖_w`; single versions set `Z = 0`.
pub fn schubert(ty: Type, w: &WeylElement, double: bool) -> Result<SchubertPoly> {
    schubert_with_cap(ty, w, double, degree_cap_from_env())
}

/// As [`schubert`], with an explicit bound on the `X`-degree.
pub fn schubert_with_cap(ty: Type, w: &WeylElement, double: bool, degree_cap: u32) -> Result<SchubertPoly> {
    ty.check(w)?;
    let n = working_rank(w);
    let cap = choose_cap(ty.kind(), n, w, degree_cap)?;
    let mut value = schubert_at_rank(ty, w, n, cap)?;
    if !double {
        value = value.set_zero(|v| v.family() == Family::Z);
    }
    Ok(SchubertPoly { ty, element: w.clone(), double, value })
}

/// The value of [`schubert`], double version.
pub fn schubert_poly(ty: Type, w: &WeylElement) -> Result<Poly> {
    Ok(schubert(ty, w, true)?.value)
}

/// Variable budgets of a Stanley-type extraction
/// `⟨Ã_1(z_1) ⋯ Ã_1(z_l) · X · A_1(y_1) ⋯ A_1(y_k), w⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StanleyVariant {
    /// `G_w(Y)`, `F_w(X)` or `E_w(X)`.
    Single,
    /// `G_w(Y/Z)`, or `J_w(X; Y/Z)`, `I_w(X; Y/Z)` in `ℓ(w)` variables each.
    Double,
    /// `J_w(X; Y_(k))` or `I_w(X; Y_(k))`.
    Mixed { k: usize },
    /// `J_w(X; Y_(k)/Z_(l))` or `I_w(X; Y_(k)/Z_(l))`.
    RestrictedMixed { k: usize, l: usize },
}

/// `0 < w(1) < ⋯ < w(k)`, and in type D `|w(1)| < w(2) < ⋯ < w(k)`.
pub fn is_increasing_up_to(w: &WeylElement, k: usize) -> bool {
    let first = k == 0 || w.kind() == Kind::D || w.at(1) > 0;
    first && (1..k).all(|i| {
        let a = if i == 1 && w.kind() == Kind::D { w.at(1).abs() } else { w.at(i) };
        a < w.at(i + 1)
    })
}

/// The Stanley product with `k` `y`'s and `l` `z`'s, up to length `cap`.
pub fn stanley_product(kind: Kind, n: usize, k: usize, l: usize, with_x: bool, cap: u32) -> Result<NilCox> {
    let mut prod = NilCox::one(kind, n).with_cap(cap);
    for j in 1..=l {
        prod = prod.times(Factor::ATilde(1), &z(j))?;
    }
    if with_x && kind != Kind::A {
        prod = prod.mul(&*x_part(kind, n, cap)?)?;
    }
    for i in 1..=k {
        prod = prod.times(Factor::A(1), &y(i))?;
    }
    Ok(prod)
}

/// Stanley symmetric functions and their mixed versions.
pub fn stanley(ty: Type, w: &WeylElement, variant: StanleyVariant) -> Result<Poly> {
    ty.check(w)?;
    let n = working_rank(w);
    let len = w.length();
    let full = len as usize;
    let with_x = ty != Type::A;
    let (k, l) = match variant {
        StanleyVariant::Single => (if with_x { 0 } else { full }, 0),
        StanleyVariant::Double => (full, full),
        StanleyVariant::Mixed { k } => (k, 0),
        StanleyVariant::RestrictedMixed { k, l } => {
            if !is_increasing_up_to(w, k) {
                return Err(Error::NotIncreasing(format!("{w} is not increasing up to {k}")));
            }
            if !is_increasing_up_to(&w.inverse(), l) {
                return Err(Error::NotIncreasing(format!("the inverse of {w} is not increasing up to {l}")));
            }
            (k, l)
        }
    };
    let mut p = stanley_product(ty.kind(), n, k, l, with_x, len)?.extract(w);
    if ty == Type::B {
        p = p.halve(w.sign_count());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gamma::gamma_eq;

    fn el(kind: Kind, w: &[i32]) -> WeylElement {
        WeylElement::new(kind, w.to_vec()).unwrap()
    }

    #[test]
    fn type_a_small() {
        let p = schubert_poly(Type::A, &el(Kind::A, &[2, 1])).unwrap();
        assert_eq!(p, &y(1) - &z(1));
        assert_eq!(schubert_poly(Type::A, &WeylElement::identity(Kind::A)).unwrap(), Poly::one());
    }

    #[test]
    fn type_c_simple_reflection() {
        // ℭ𝔖_{s_i}(X; Y) = q_1 + y_1 + ⋯ + y_i
        for i in 1..3 {
            let mut win: Vec<i32> = (1..=i as i32 + 1).collect();
            win.swap(i - 1, i);
            let s = schubert(Type::C, &el(Kind::BC, &win), false).unwrap().value;
            let mut expect = Poly::q(1);
            for j in 1..=i {
                expect += &y(j);
            }
            assert!(gamma_eq(&s, &expect), "{s}");
        }
    }

    #[test]
    fn type_c_worked_example() {
        let s = schubert_poly(Type::C, &el(Kind::BC, &[2, 3, 1])).unwrap();
        let expect = &(&Poly::q(2) + &(&Poly::q(1) * &(&(&y(1) + &y(2)) - &z(1))))
            + &(&(&y(1) - &z(1)) * &(&y(2) - &z(1)));
        assert!(gamma_eq(&s, &expect), "{s}");
    }

    #[test]
    fn stanley_of_s0() {
        let f = stanley(Type::C, &el(Kind::BC, &[-1]), StanleyVariant::Single).unwrap();
        assert_eq!(f, Poly::q(1));
    }

    #[test]
    fn restricted_mixed_example() {
        let w = el(Kind::BC, &[2, 3, 1]);
        let j = stanley(Type::C, &w, StanleyVariant::RestrictedMixed { k: 1, l: 1 }).unwrap();
        let d = &y(1) - &z(1);
        let expect = &(&Poly::q(2) + &(&Poly::q(1) * &d)) - &(&d * &z(1));
        assert!(gamma_eq(&j, &expect), "{j}");
    }
}
