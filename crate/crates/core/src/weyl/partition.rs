use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `λ_i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|p| p[0] > p[1])
    }

    /// No part greater than `k` is repeated.
    pub fn is_k_strict(&self, k: u32) -> bool {
        self.0.windows(2).all(|p| p[0] <= k || p[0] > p[1])
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// Parts padded with zeros to length `n`, as signed integers.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|i| self.part(i) as i64).collect()
    }

    /// Number of parts strictly greater than `k`.
    pub fn len_above(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p > k).count()
    }

    /// Partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions contained in `self` (as a diagram), including the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(outer: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, u32::MAX, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn strict_of(n: u32) -> Vec<Partition> {
        Self::all_of(n).into_iter().filter(|p| p.is_strict()).collect()
    }

    pub fn k_strict_of(n: u32, k: u32) -> Vec<Partition> {
        Self::all_of(n).into_iter().filter(|p| p.is_k_strict(k)).collect()
    }

    /// Staircase `δ_n = (n, n−1, …, 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition((1..=n as u32).rev().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A `k`-strict partition with a type tag in `{0, 1, 2}`; the tag is
/// positive exactly when some part equals `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypedPartition {
    pub shape: Partition,
    pub k: u32,
    pub ty: u8,
}

impl TypedPartition {
    pub fn new(shape: Partition, k: u32, ty: u8) -> Result<TypedPartition> {
        let has_k = k > 0 && shape.parts().contains(&k);
        let ok = shape.is_k_strict(k) && ty <= 2 && (ty > 0) == has_k;
        if !ok {
            return Err(Error::NotTypedKStrict(format!("{shape} with k={k}, type={ty}")));
        }
        Ok(TypedPartition { shape, k, ty })
    }

    /// All typed `k`-strict partitions of weight `n`.
    pub fn all_of(n: u32, k: u32) -> Vec<TypedPartition> {
        let mut out = Vec::new();
        for shape in Partition::k_strict_of(n, k) {
            if k > 0 && shape.parts().contains(&k) {
                out.push(TypedPartition { shape: shape.clone(), k, ty: 1 });
                out.push(TypedPartition { shape, k, ty: 2 });
            } else {
                out.push(TypedPartition { shape, k, ty: 0 });
            }
        }
        out
    }
}

impl fmt::Display for TypedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ty == 0 {
            write!(f, "{}", self.shape)
        } else {
            write!(f, "{};type={}", self.shape, self.ty)
        }
    }
}

impl std::str::FromStr for TypedPartition {
    type Err = Error;
    /// Parses `"2,1;type=1"`; the `k` must be set by the caller afterwards.
    fn from_str(s: &str) -> Result<TypedPartition> {
        let (shape, ty) = match s.split_once(';') {
            Some((a, b)) => {
                let t = b.trim().trim_start_matches("type=");
                (a, t.parse::<u8>().map_err(|_| Error::Parse(format!("bad type {b:?}")))?)
            }
            None => (s, 0),
        };
        Ok(TypedPartition { shape: shape.parse()?, k: 0, ty })
    }
}
