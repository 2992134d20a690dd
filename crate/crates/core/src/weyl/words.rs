use std::collections::{BTreeSet, HashMap};

use super::element::{Gen, Kind, WeylElement};
use crate::error::{Error, Result};

pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// All reduced words of `w` in lexicographic order.
pub fn reduced_words(w: &WeylElement, cap: usize) -> Result<Vec<Vec<Gen>>> {
    let mut memo: HashMap<WeylElement, Vec<Vec<Gen>>> = HashMap::new();
    let mut words = words_rec(w, cap, &mut memo)?;
    words.sort();
    Ok(words)
}

fn words_rec(
    w: &WeylElement,
    cap: usize,
    memo: &mut HashMap<WeylElement, Vec<Vec<Gen>>>,
) -> Result<Vec<Vec<Gen>>> {
    if w.is_identity() {
        return Ok(vec![Vec::new()]);
    }
    if let Some(ws) = memo.get(w) {
        return Ok(ws.clone());
    }
    let mut out = Vec::new();
    for g in w.right_descents() {
        for mut word in words_rec(&w.mul_gen(g), cap, memo)? {
            word.push(g);
            out.push(word);
            if out.len() > cap {
                return Err(Error::BoundExceeded(cap));
            }
        }
    }
    memo.insert(w.clone(), out.clone());
    Ok(out)
}

/// One reduced word, built greedily from right descents.
pub fn reduced_word(w: &WeylElement) -> Vec<Gen> {
    let mut word = Vec::new();
    let mut cur = w.clone();
    while let Some(&g) = cur.right_descents().first() {
        word.push(g);
        cur = cur.mul_gen(g);
    }
    word.reverse();
    word
}

/// Elements `v` with `w = v·v'` and `ℓ(v) + ℓ(v') = ℓ(w)`, sorted by length then window.
pub fn prefixes(w: &WeylElement) -> Vec<WeylElement> {
    let total = w.length();
    let gens = Gen::all(w.kind(), w.window().len().max(2));
    let mut seen: BTreeSet<WeylElement> = BTreeSet::new();
    let mut layer = vec![WeylElement::identity(w.kind())];
    seen.insert(layer[0].clone());
    for len in 0..total {
        let mut next = Vec::new();
        for v in &layer {
            for &g in &gens {
                if v.has_right_descent(g) {
                    continue;
                }
                let u = v.mul_gen(g);
                if u.inverse().mul(w).length() == total - len - 1 && seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<WeylElement> = seen.into_iter().collect();
    out.sort_by(|a, b| a.length_lex_cmp(b));
    out
}

/// Membership condition imposed on one factor of a reduced factorization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Slot {
    /// Factor must lie in `S_∞` (no barred entries).
    pub unsigned: bool,
    /// Factor must fix `1, …, fixes_upto`.
    pub fixes_upto: u32,
}

impl Slot {
    pub const FREE: Slot = Slot { unsigned: false, fixes_upto: 0 };

    pub fn admits(&self, u: &WeylElement) -> bool {
        (!self.unsigned || u.is_unsigned()) && u.fixes_upto(self.fixes_upto)
    }
}

/// All reduced factorizations `w = u_1 ⋯ u_p` with `u_j` admitted by `slots[j]`.
pub fn factorizations_with(w: &WeylElement, slots: &[Slot]) -> Vec<Vec<WeylElement>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fact_rec(w, slots, &mut cur, &mut out);
    out
}

fn fact_rec(
    w: &WeylElement,
    slots: &[Slot],
    cur: &mut Vec<WeylElement>,
    out: &mut Vec<Vec<WeylElement>>,
) {
    match slots {
        [] => {}
        [last] => {
            if last.admits(w) {
                let mut f = cur.clone();
                f.push(w.clone());
                out.push(f);
            }
        }
        [first, rest @ ..] => {
            for v in prefixes(w) {
                if !first.admits(&v) {
                    continue;
                }
                let r = v.inverse().mul(w);
                cur.push(v);
                fact_rec(&r, rest, cur, out);
                cur.pop();
            }
        }
    }
}

/// All reduced factorizations into `p` unconstrained factors.
pub fn reduced_factorizations(w: &WeylElement, p: usize) -> Vec<Vec<WeylElement>> {
    factorizations_with(w, &vec![Slot::FREE; p])
}

/// A strictly increasing flag sequence `a_1 < ⋯ < a_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagSequence {
    kind: Kind,
    entries: Vec<Gen>,
}

impl FlagSequence {
    pub fn new(kind: Kind, entries: Vec<Gen>) -> Result<FlagSequence> {
        if entries.is_empty() {
            return Err(Error::InvalidFlag("empty sequence".into()));
        }
        for (i, &g) in entries.iter().enumerate() {
            let legal = match (kind, g) {
                (Kind::A, Gen::I(a)) => a >= 1,
                (Kind::BC, Gen::I(_)) => true,
                (Kind::D, Gen::Box) => i == 0,
                (Kind::D, Gen::I(a)) => a >= 1 && !(i == 0 && a == 1),
                _ => false,
            };
            if !legal {
                return Err(Error::InvalidFlag(format!("entry {g} at position {} in type {kind}", i + 1)));
            }
        }
        for pair in entries.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidFlag("entries must increase".into()));
            }
        }
        Ok(FlagSequence { kind, entries })
    }

    pub fn from_values(kind: Kind, values: &[u32]) -> Result<FlagSequence> {
        let entries = values
            .iter()
            .map(|&v| if kind == Kind::D && v == 0 { Gen::Box } else { Gen::I(v) })
            .collect();
        FlagSequence::new(kind, entries)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn entries(&self) -> &[Gen] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Numeric values, with `□` read as 0.
    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|g| g.value()).collect()
    }

    /// Whether every right descent of `w` lies in the sequence.
    pub fn admits_descents_of(&self, w: &WeylElement) -> bool {
        w.right_descents().iter().all(|d| self.entries.contains(d))
    }

    /// The smallest sequence containing the right descents of `w`.
    /// Type B/C sequences always start at 0 and type D ones at `□`.
    pub fn minimal_for(w: &WeylElement) -> FlagSequence {
        let mut entries = w.right_descents();
        match w.kind() {
            Kind::A => {
                if entries.is_empty() {
                    entries.push(Gen::I(1));
                }
            }
            Kind::BC => {
                if entries.first() != Some(&Gen::I(0)) {
                    entries.insert(0, Gen::I(0));
                }
            }
            Kind::D => {
                if entries.first() != Some(&Gen::Box) {
                    entries.insert(0, Gen::Box);
                }
            }
        }
        FlagSequence { kind: w.kind(), entries }
    }
}

impl FlagSequence {
    /// The right descents of `w` alone (or the smallest legal entry when
    /// there are none); in type D a leading 1 is preceded by `□`.
    pub fn descents_for(w: &WeylElement) -> FlagSequence {
        let mut entries = w.right_descents();
        let kind = w.kind();
        if entries.is_empty() {
            entries.push(match kind {
                Kind::A => Gen::I(1),
                Kind::BC => Gen::I(0),
                Kind::D => Gen::Box,
            });
        } else if kind == Kind::D && entries[0] == Gen::I(1) {
            entries.insert(0, Gen::Box);
        }
        FlagSequence { kind, entries }
    }
}

/// Reduced factorizations `w = u_1 ⋯ u_{p+q−1}` compatible with `(𝔞, 𝔟)`,
/// where `q = |𝔟|` marks the middle factor.
pub fn compatible_factorizations(
    w: &WeylElement,
    a: &FlagSequence,
    b: &FlagSequence,
) -> Result<Vec<Vec<WeylElement>>> {
    if !a.admits_descents_of(w) {
        return Err(Error::IncompatibleFlags(format!("descents of {w} not in 𝔞")));
    }
    if !b.admits_descents_of(&w.inverse()) {
        return Err(Error::IncompatibleFlags(format!("descents of {w}⁻¹ not in 𝔟")));
    }
    let (av, bv) = (a.values(), b.values());
    let (p, q) = (av.len(), bv.len());
    let typed = w.kind() != Kind::A;
    let slots: Vec<Slot> = (1..p + q)
        .map(|j| {
            if j < q {
                Slot { unsigned: typed, fixes_upto: bv[q - j - 1] }
            } else if j == q {
                Slot::FREE
            } else {
                Slot { unsigned: typed, fixes_upto: av[j - q - 1] }
            }
        })
        .collect();
    Ok(factorizations_with(w, &slots))
}
