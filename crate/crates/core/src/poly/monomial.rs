use std::fmt;

/// Variable families. `Q(r)` is the generator `q_r(X)` of `Γ`; `W(i)` is `ω_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q(u8),
    X(u8),
    Y(u8),
    Z(u8),
    T(u8),
    W(u8),
}

/// Family tag of a [`Var`], without its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Q,
    X,
    Y,
    Z,
    T,
    W,
}

pub const Q_SLOTS: usize = 24;
pub const FAMILY_SLOTS: usize = 8;
pub const SLOTS: usize = Q_SLOTS + 5 * FAMILY_SLOTS;

const FAMILIES: [Family; 5] = [Family::X, Family::Y, Family::Z, Family::T, Family::W];

impl Family {
    fn base(self) -> usize {
        match self {
            Family::Q => 0,
            Family::X => Q_SLOTS,
            Family::Y => Q_SLOTS + FAMILY_SLOTS,
            Family::Z => Q_SLOTS + 2 * FAMILY_SLOTS,
            Family::T => Q_SLOTS + 3 * FAMILY_SLOTS,
            Family::W => Q_SLOTS + 4 * FAMILY_SLOTS,
        }
    }

    pub fn capacity(self) -> usize {
        if self == Family::Q {
            Q_SLOTS
        } else {
            FAMILY_SLOTS
        }
    }

    pub fn var(self, i: usize) -> Var {
        let i = i as u8;
        match self {
            Family::Q => Var::Q(i),
            Family::X => Var::X(i),
            Family::Y => Var::Y(i),
            Family::Z => Var::Z(i),
            Family::T => Var::T(i),
            Family::W => Var::W(i),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Q => "q",
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::T => "t",
            Family::W => "w",
        }
    }
}

impl Var {
    pub fn family(self) -> Family {
        match self {
            Var::Q(_) => Family::Q,
            Var::X(_) => Family::X,
            Var::Y(_) => Family::Y,
            Var::Z(_) => Family::Z,
            Var::T(_) => Family::T,
            Var::W(_) => Family::W,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Var::Q(i) | Var::X(i) | Var::Y(i) | Var::Z(i) | Var::T(i) | Var::W(i) => i as usize,
        }
    }

    pub(crate) fn slot(self) -> usize {
        let (fam, i) = (self.family(), self.index());
        assert!(
            i >= 1 && i <= fam.capacity(),
            "variable {}{} outside the supported range 1..={}",
            fam.symbol(),
            i,
            fam.capacity()
        );
        fam.base() + i - 1
    }

    fn from_slot(s: usize) -> Var {
        if s < Q_SLOTS {
            return Var::Q(s as u8 + 1);
        }
        let f = (s - Q_SLOTS) / FAMILY_SLOTS;
        FAMILIES[f].var((s - Q_SLOTS) % FAMILY_SLOTS + 1)
    }

    /// Weight in the grading with `deg q_r = r`.
    pub fn degree(self) -> u32 {
        match self {
            Var::Q(r) => r as u32,
            _ => 1,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q(r) => write!(f, "q_{r}"),
            v => write!(f, "{}{}", v.family().symbol(), v.index()),
        }
    }
}

/// Dense exponent vector over the fixed variable layout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) [u8; SLOTS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; SLOTS]);

    pub fn var(v: Var) -> Monomial {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut m = Self::ONE;
        m.0[v.slot()] = u8::try_from(e).expect("exponent overflow");
        m
    }

    pub fn from_vars(vars: &[(Var, u32)]) -> Monomial {
        let mut m = Self::ONE;
        for &(v, e) in vars {
            let s = v.slot();
            m.0[s] = u8::try_from(m.0[s] as u32 + e).expect("exponent overflow");
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.slot()] as u32
    }

    pub fn set_exponent(&mut self, v: Var, e: u32) {
        self.0[v.slot()] = u8::try_from(e).expect("exponent overflow");
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u8; SLOTS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// `self / other` if it is a monomial.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u8; SLOTS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(s, &e)| if s < Q_SLOTS { (s as u32 + 1) * e as u32 } else { e as u32 })
            .sum()
    }

    /// Degree counting only the variables of one family (q's by weight).
    pub fn family_degree(&self, fam: Family) -> u32 {
        let base = fam.base();
        (0..fam.capacity())
            .map(|i| {
                let e = self.0[base + i] as u32;
                if fam == Family::Q {
                    (i as u32 + 1) * e
                } else {
                    e
                }
            })
            .sum()
    }

    /// Exponents of one family, indexed from variable 1.
    pub fn family_exponents(&self, fam: Family) -> Vec<u32> {
        let base = fam.base();
        let mut v: Vec<u32> = (0..fam.capacity()).map(|i| self.0[base + i] as u32).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// The part of the monomial in the given family, and the rest.
    pub fn split_family(&self, fam: Family) -> (Monomial, Monomial) {
        let base = fam.base();
        let mut inside = Self::ONE;
        let mut outside = *self;
        for i in base..base + fam.capacity() {
            inside.0[i] = self.0[i];
            outside.0[i] = 0;
        }
        (inside, outside)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(s, &e)| (Var::from_slot(s), e as u32))
    }

    pub fn has_family(&self, fam: Family) -> bool {
        let base = fam.base();
        self.0[base..base + fam.capacity()].iter().any(|&e| e > 0)
    }

    /// Largest index of a variable of the family occurring, 0 if none.
    pub fn max_index(&self, fam: Family) -> usize {
        let base = fam.base();
        (0..fam.capacity()).rev().find(|&i| self.0[base + i] > 0).map_or(0, |i| i + 1)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    /// Paper-style rendering such as `q_2*q_1*y1^2*z1`; q's listed by decreasing index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut vars: Vec<(Var, u32)> = self.vars().collect();
        vars.sort_by(|a, b| match (a.0, b.0) {
            (Var::Q(i), Var::Q(j)) => j.cmp(&i),
            (x, y) => x.cmp(&y),
        });
        let mut first = true;
        for (v, e) in vars {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match (v, e) {
                (Var::Q(_), e) => {
                    for i in 0..e {
                        if i > 0 {
                            f.write_str("*")?;
                        }
                        write!(f, "{v}")?;
                    }
                }
                (v, 1) => write!(f, "{v}")?,
                (v, e) => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}
