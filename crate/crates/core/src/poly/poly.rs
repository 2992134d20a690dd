use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::dyadic::Dyadic;
use super::monomial::{Family, Monomial, Var};
use crate::error::{Error, Result};

/// Sparse polynomial with dyadic coefficients over the variables of [`Var`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Dyadic>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Poly {
        Poly::from_dyadic(Dyadic::from_i64(c))
    }

    pub fn from_dyadic(c: Dyadic) -> Poly {
        Poly::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), Dyadic::one())
    }

    pub fn term(m: Monomial, c: Dyadic) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// `q_r` with `q_0 = 1` and `q_r = 0` for `r < 0`.
    pub fn q(r: i64) -> Poly {
        match r {
            r if r < 0 => Poly::zero(),
            0 => Poly::one(),
            r => Poly::var(Var::Q(r as u8)),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Dyadic)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Dyadic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Dyadic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Dyadic {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Dyadic {
        self.coefficient(&Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn scale(&self, c: &Dyadic) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    pub fn scale_i64(&self, c: i64) -> Poly {
        self.scale(&Dyadic::from_i64(c))
    }

    /// Multiply by `2^{-k}`.
    pub fn halve(&self, k: u32) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, d.halve(k))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.clone())).collect() }
    }

    pub fn mul_truncated(&self, other: &Poly, cap: Option<u32>) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.len() == 1 && cap.is_none() {
            let (m, c) = other.terms.iter().next().unwrap();
            return Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() };
        }
        let mut acc: HashMap<Monomial, Dyadic> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if let Some(cap) = cap {
                    if d1 + m2.degree() > cap {
                        continue;
                    }
                }
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(e) => *e += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Maximal total degree (with `deg q_r = r`); 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn truncate(&self, cap: u32) -> Poly {
        self.filter(|m| m.degree() <= cap)
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Set every variable selected by `pred` to zero.
    pub fn set_zero(&self, pred: impl Fn(Var) -> bool) -> Poly {
        self.filter(|m| !m.vars().any(|(v, _)| pred(v)))
    }

    /// Substitute `v ↦ ±v'` for every variable; `f` returns the image and a sign flag.
    pub fn rename(&self, f: impl Fn(Var) -> (Var, bool)) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut neg = false;
            let mut pairs = Vec::new();
            for (v, e) in m.vars() {
                let (w, flip) = f(v);
                if flip && e % 2 == 1 {
                    neg = !neg;
                }
                pairs.push((w, e));
            }
            let c = if neg { -c } else { c.clone() };
            out.add_term(Monomial::from_vars(&pairs), c);
        }
        out
    }

    /// Ring substitution: each variable with `f(v) = Some(p)` is replaced by `p`.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut cache: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut images: HashMap<Var, Option<Poly>> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Poly::from_dyadic(c.clone());
            for (v, e) in m.vars() {
                let img = images.entry(v).or_insert_with(|| f(v));
                match img {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let p = p.clone();
                        let pw = cache.entry((v, e)).or_insert_with(|| p.pow(e));
                        factor = &factor * pw;
                    }
                }
            }
            out += &factor.mul_monomial(&Monomial::from_vars(&kept));
        }
        out
    }

    /// Exact division by `v_a − sign·v_b`, or by `v_a` when `b` is `None`.
    pub fn div_linear(&self, a: Var, b: Option<(Var, i64)>) -> Result<Poly> {
        let mut by_power: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            let mut rest = *m;
            rest.set_exponent(a, 0);
            by_power.entry(e).or_default().add_term(rest, c.clone());
        }
        let top = match by_power.keys().next_back() {
            None => return Ok(Poly::zero()),
            Some(&t) => t,
        };
        let shift = match b {
            None => {
                if by_power.contains_key(&0) {
                    return Err(Error::NonDivisible);
                }
                return Ok(Poly {
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| {
                            let mut n = *m;
                            n.set_exponent(a, m.exponent(a) - 1);
                            (n, c.clone())
                        })
                        .collect(),
                });
            }
            Some((v, s)) => Poly::var(v).scale_i64(s),
        };
        let mut quotient = Poly::zero();
        let mut carry = Poly::zero();
        for k in (1..=top).rev() {
            let fk = by_power.get(&k).cloned().unwrap_or_default();
            carry = &fk + &(&shift * &carry);
            quotient += &carry.mul_monomial(&Monomial::var_pow(a, k - 1));
        }
        let f0 = by_power.get(&0).cloned().unwrap_or_default();
        if !(&f0 + &(&shift * &carry)).is_zero() {
            return Err(Error::NonDivisible);
        }
        Ok(quotient)
    }

    /// Group terms by their monomial in one family; values carry the remaining variables.
    pub fn coefficients_in(&self, fam: Family) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split_family(fam);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out
    }

    pub fn max_index(&self, fam: Family) -> usize {
        self.terms.keys().map(|m| m.max_index(fam)).max().unwrap_or(0)
    }

    pub fn has_family(&self, fam: Family) -> bool {
        self.terms.keys().any(|m| m.has_family(fam))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Swap two variables.
    pub fn swap(&self, a: Var, b: Var) -> Poly {
        self.rename(|v| {
            if v == a {
                (b, false)
            } else if v == b {
                (a, false)
            } else {
                (v, false)
            }
        })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Dyadic)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_truncated(rhs, None)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_truncated(&rhs, None)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(self.clone())
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut out = Poly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(c)
    }
}
