use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lie type of a Weyl group element. Types B and C share the group `W_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    BC,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::BC => "BC",
            Kind::D => "D",
        })
    }
}

/// Index of a simple reflection. `Box` is the extra type D generator
/// `s_□ = s_0 s_1 s_0`; `I(0)` is the type B/C sign change.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Box,
    I(u32),
}

impl Gen {
    pub fn is_legal(self, kind: Kind) -> bool {
        match (kind, self) {
            (Kind::A, Gen::I(i)) => i >= 1,
            (Kind::A, Gen::Box) => false,
            (Kind::BC, Gen::I(_)) => true,
            (Kind::BC, Gen::Box) => false,
            (Kind::D, Gen::I(i)) => i >= 1,
            (Kind::D, Gen::Box) => true,
        }
    }

    pub fn check(self, kind: Kind) -> Result<Gen> {
        if self.is_legal(kind) {
            Ok(self)
        } else {
            Err(Error::IllegalGenerator { gen: self.to_string(), kind: kind.to_string() })
        }
    }

    /// Numeric value used when a generator names a variable count; `□` counts as 0.
    pub fn value(self) -> u32 {
        match self {
            Gen::Box => 0,
            Gen::I(i) => i,
        }
    }

    /// All legal generators of the rank `n` group.
    pub fn all(kind: Kind, n: usize) -> Vec<Gen> {
        let n = n as u32;
        match kind {
            Kind::A => (1..n).map(Gen::I).collect(),
            Kind::BC => (0..n).map(Gen::I).collect(),
            Kind::D => {
                if n < 2 {
                    Vec::new()
                } else {
                    std::iter::once(Gen::Box).chain((1..n).map(Gen::I)).collect()
                }
            }
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Box => f.write_str("b"),
            Gen::I(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        let s = s.trim();
        if s == "b" || s == "□" {
            return Ok(Gen::Box);
        }
        s.parse::<u32>().map(Gen::I).map_err(|_| Error::Parse(format!("bad generator {s:?}")))
    }
}

/// A signed permutation of finite support in one-line notation,
/// with trailing fixed points trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    kind: Kind,
    window: Vec<i32>,
}

impl WeylElement {
    pub fn new(kind: Kind, window: Vec<i32>) -> Result<WeylElement> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(format!("{window:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        let negatives = window.iter().filter(|&&v| v < 0).count();
        match kind {
            Kind::A if negatives > 0 => {
                return Err(Error::InvalidWindow(format!("{window:?} has barred entries in type A")))
            }
            Kind::D if negatives % 2 == 1 => {
                return Err(Error::InvalidWindow(format!("{window:?} has odd sign parity in type D")))
            }
            _ => {}
        }
        Ok(Self::from_raw(kind, window))
    }

    pub(crate) fn from_raw(kind: Kind, mut window: Vec<i32>) -> WeylElement {
        while let Some(&last) = window.last() {
            if last == window.len() as i32 {
                window.pop();
            } else {
                break;
            }
        }
        WeylElement { kind, window }
    }

    pub fn identity(kind: Kind) -> WeylElement {
        WeylElement { kind, window: Vec::new() }
    }

    pub fn generator(kind: Kind, g: Gen) -> Result<WeylElement> {
        g.check(kind)?;
        Ok(Self::identity(kind).mul_gen(g))
    }

    /// Product `s_{a_1} ⋯ s_{a_r}` of a word.
    pub fn from_word(kind: Kind, word: &[Gen]) -> Result<WeylElement> {
        let mut w = Self::identity(kind);
        for &g in word {
            g.check(kind)?;
            w = w.mul_gen(g);
        }
        Ok(w)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Smallest rank `n` with the element in the rank `n` group.
    pub fn rank(&self) -> usize {
        if self.kind == Kind::D && self.window.len() == 1 {
            // (-1) is not in W̃_1; a nonempty type D window always has length ≥ 2.
            2
        } else {
            self.window.len()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// Value `w(i)` for `i ≥ 1`, extended by fixed points.
    pub fn at(&self, i: usize) -> i32 {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1]
        } else {
            i as i32
        }
    }

    fn padded(&self, n: usize) -> Vec<i32> {
        (1..=n.max(self.window.len())).map(|i| self.at(i)).collect()
    }

    pub fn length(&self) -> u32 {
        let w = &self.window;
        let n = w.len();
        let mut inv = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        match self.kind {
            Kind::A => inv,
            Kind::BC => {
                let mut neg = 0u32;
                for i in 0..n {
                    for j in i..n {
                        if w[i] + w[j] < 0 {
                            neg += 1;
                        }
                    }
                }
                inv + neg
            }
            Kind::D => {
                let mut neg = 0u32;
                for i in 0..n {
                    for j in i + 1..n {
                        if w[i] + w[j] < 0 {
                            neg += 1;
                        }
                    }
                }
                inv + neg
            }
        }
    }

    /// Number of barred entries `s(w)`.
    pub fn sign_count(&self) -> u32 {
        self.window.iter().filter(|&&v| v < 0).count() as u32
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.window.len();
        let mut inv = vec![0i32; n];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            inv[pos] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self::from_raw(self.kind, inv)
    }

    /// Composition `(self · other)(i) = self(other(i))`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        debug_assert_eq!(self.kind, other.kind);
        let n = self.window.len().max(other.window.len());
        let window = (1..=n)
            .map(|i| {
                let o = other.at(i);
                let v = self.at(o.unsigned_abs() as usize);
                if o < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Self::from_raw(self.kind, window)
    }

    /// Right multiplication `w s_g`, acting on positions.
    pub fn mul_gen(&self, g: Gen) -> WeylElement {
        let need = match g {
            Gen::Box => 2,
            Gen::I(0) => 1,
            Gen::I(i) => i as usize + 1,
        };
        let mut w = self.padded(need);
        match g {
            Gen::Box => {
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            }
            Gen::I(0) => w[0] = -w[0],
            Gen::I(i) => w.swap(i as usize - 1, i as usize),
        }
        Self::from_raw(self.kind, w)
    }

    /// Left multiplication `s_g w`, acting on values.
    pub fn gen_mul(&self, g: Gen) -> WeylElement {
        self.inverse().mul_gen(g).inverse()
    }

    pub fn has_right_descent(&self, g: Gen) -> bool {
        match g {
            Gen::Box => self.at(1) + self.at(2) < 0,
            Gen::I(0) => self.at(1) < 0,
            Gen::I(i) => self.at(i as usize) > self.at(i as usize + 1),
        }
    }

    pub fn has_left_descent(&self, g: Gen) -> bool {
        self.inverse().has_right_descent(g)
    }

    /// Right descents `{g : ℓ(w s_g) < ℓ(w)}`, in generator order.
    pub fn right_descents(&self) -> Vec<Gen> {
        Gen::all(self.kind, self.window.len().max(2))
            .into_iter()
            .filter(|&g| self.has_right_descent(g))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<Gen> {
        self.inverse().right_descents()
    }

    /// True if every entry is positive, i.e. the element lies in `S_∞`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// True if `w(i) = i` for all `i ≤ m`.
    pub fn fixes_upto(&self, m: u32) -> bool {
        (1..=m as usize).all(|i| self.at(i) == i as i32)
    }

    /// Reinterpret an unsigned element in another Weyl group.
    pub fn with_kind(&self, kind: Kind) -> Result<WeylElement> {
        WeylElement::new(kind, self.window.clone())
    }

    /// The element `1_m × w`: shift the support of an unsigned element by `m`.
    pub fn shift(&self, m: usize) -> WeylElement {
        let mut window: Vec<i32> = (1..=m as i32).collect();
        window.extend(self.window.iter().map(|&v| v + m as i32));
        Self::from_raw(self.kind, window)
    }

    /// Inverse of [`shift`](Self::shift) for elements fixing `1..=m`.
    pub fn unshift(&self, m: usize) -> WeylElement {
        debug_assert!(self.fixes_upto(m as u32));
        let window = self.window.iter().skip(m).map(|&v| v - m as i32).collect();
        Self::from_raw(self.kind, window)
    }

    /// Whether the element belongs to the rank `n` group.
    pub fn fits_rank(&self, n: usize) -> bool {
        self.window.len() <= n
    }

    /// Ordering by length, then window; used for canonical listings.
    pub fn length_lex_cmp(&self, other: &WeylElement) -> Ordering {
        self.length().cmp(&other.length()).then_with(|| self.window.cmp(&other.window))
    }

    pub fn parse(kind: Kind, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "id" {
            return Ok(Self::identity(kind));
        }
        let window = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad window entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        WeylElement::new(kind, window)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// All elements of `S_n`, `W_n` or `W̃_n`, sorted by length then window.
pub fn group_elements(kind: Kind, n: usize) -> Vec<WeylElement> {
    let mut perms = vec![Vec::<i32>::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for v in 1..=n as i32 {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        match kind {
            Kind::A => out.push(WeylElement::from_raw(kind, p)),
            Kind::BC | Kind::D => {
                for mask in 0u32..(1 << n) {
                    if kind == Kind::D && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let w = p
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(WeylElement::from_raw(kind, w));
                }
            }
        }
    }
    out.sort_by(|a, b| a.length_lex_cmp(b));
    out
}
