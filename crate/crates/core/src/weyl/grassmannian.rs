//! Grassmannian elements, their partitions, and the maximal elements of
//! parabolic cosets.

use super::element::{Gen, Kind, WeylElement};
use super::partition::{Partition, TypedPartition};
use super::words::FlagSequence;
use crate::error::{Error, Result};

/// Whether all right descents of `w` lie in the parabolic set for `k`:
/// `{k}` in types A and B/C, and in type D `{□}` for `k = 0`,
/// `{□, 1}` for `k = 1`, `{k}` otherwise.
pub fn is_k_grassmannian(w: &WeylElement, k: u32) -> bool {
    let allowed: Vec<Gen> = match (w.kind(), k) {
        (Kind::D, 0) => vec![Gen::Box],
        (Kind::D, 1) => vec![Gen::Box, Gen::I(1)],
        _ => vec![Gen::I(k)],
    };
    w.right_descents().iter().all(|d| allowed.contains(d))
}

/// Type A shape: `λ_{m+1−j} = w_j − j` for `j ≤ m`.
pub fn shape_a(w: &WeylElement, m: u32) -> Result<Partition> {
    if w.kind() != Kind::A || !is_k_grassmannian(w, m) {
        return Err(Error::NotGrassmannian(w.to_string()));
    }
    let m = m as usize;
    let parts = (1..=m).rev().map(|j| (w.at(j) - j as i32) as u32).collect();
    Partition::new(parts)
}

/// Inverse of [`shape_a`].
pub fn element_a(lambda: &Partition, m: u32) -> Result<WeylElement> {
    let m = m as usize;
    if lambda.len() > m {
        return Err(Error::NotGrassmannian(format!("{lambda} has more than {m} parts")));
    }
    let mut window: Vec<i32> = (1..=m).map(|j| lambda.part(m + 1 - j) as i32 + j as i32).collect();
    let n = window.iter().copied().max().unwrap_or(0).max(m as i32) as usize;
    for v in 1..=n as i32 {
        if !window.contains(&v) {
            window.push(v);
        }
    }
    WeylElement::new(Kind::A, window)
}

/// The `k`-strict partition of a `k`-Grassmannian element of `W_∞`.
pub fn k_strict_shape(w: &WeylElement, k: u32) -> Result<Partition> {
    if w.kind() != Kind::BC || !is_k_grassmannian(w, k) {
        return Err(Error::NotGrassmannian(w.to_string()));
    }
    let k = k as usize;
    let n = w.window().len();
    let mut parts = Vec::new();
    for j in 1..=n.saturating_sub(k) {
        let v = w.at(k + j);
        let part = if v < 0 {
            v.unsigned_abs() + k as u32
        } else {
            (1..=k).filter(|&p| w.at(p) > v).count() as u32
        };
        parts.push(part);
    }
    Partition::new(parts)
}

/// Inverse of [`k_strict_shape`].
pub fn k_strict_element(lambda: &Partition, k: u32) -> Result<WeylElement> {
    if !lambda.is_k_strict(k) {
        return Err(Error::NotKStrict(lambda.to_string()));
    }
    let negs: Vec<i32> = lambda.parts().iter().filter(|&&p| p > k).map(|&p| (p - k) as i32).collect();
    let lows: Vec<u32> = lambda.parts().iter().copied().filter(|&p| p <= k).collect();
    let n = k as usize + lambda.len() + lambda.part(1) as usize + 1;
    let pool: Vec<i32> = (1..=n as i32).filter(|v| !negs.contains(v)).collect();
    let (top, bottom) = split_pool(&pool, k, &lows, |v| v);
    let mut window = top;
    window.extend(negs.iter().map(|&v| -v));
    window.extend(bottom);
    let w = WeylElement::new(Kind::BC, window)?;
    debug_assert_eq!(k_strict_shape(&w, k).as_ref(), Ok(lambda));
    Ok(w)
}

/// Distribute an ascending pool between the first `k` positions and the
/// positive tail so that each tail entry sees the requested number of
/// larger top entries.
fn split_pool(pool: &[i32], k: u32, lows: &[u32], abs: impl Fn(i32) -> i32) -> (Vec<i32>, Vec<i32>) {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut next = 0usize;
    for &v in pool {
        let want = lows.get(next).copied().unwrap_or(0);
        let larger = k - top.len() as u32;
        if top.len() < k as usize && larger > want {
            top.push(abs(v));
        } else {
            bottom.push(v);
            next += 1;
        }
    }
    (top, bottom)
}

/// The typed `k`-strict partition of a `k`-Grassmannian element of `W̃_∞`
/// (`k = 0` stands for `□`).
pub fn typed_shape(w: &WeylElement, k: u32) -> Result<TypedPartition> {
    if w.kind() != Kind::D || !is_k_grassmannian(w, k) {
        return Err(Error::NotGrassmannian(w.to_string()));
    }
    let ku = k as usize;
    let n = w.window().len();
    let mut parts = Vec::new();
    for j in 1..=n.saturating_sub(ku) {
        let v = w.at(ku + j);
        let part = if v < 0 {
            v.unsigned_abs() + k - 1
        } else {
            (1..=ku).filter(|&p| w.at(p).abs() > v).count() as u32
        };
        parts.push(part);
    }
    let shape = Partition::new(parts)?;
    let w1 = w.at(1);
    let ty = if k == 0 || w1.abs() <= 1 {
        0
    } else if w1 > 0 {
        1
    } else {
        2
    };
    TypedPartition::new(shape, k, ty)
}

/// Inverse of [`typed_shape`].
pub fn typed_element(tp: &TypedPartition) -> Result<WeylElement> {
    let TypedPartition { shape, k, ty } = tp;
    let k = *k;
    TypedPartition::new(shape.clone(), k, *ty)?;
    let negs: Vec<i32> = shape.parts().iter().filter(|&&p| p > k).map(|&p| (p + 1 - k) as i32).collect();
    let one_in_tail = k == 0 || *ty > 0;
    // One part equal to k comes from the entry ±1; any others from small positive entries.
    let mut lows: Vec<u32> = shape.parts().iter().copied().filter(|&p| p <= k).collect();
    if *ty > 0 {
        lows.remove(0);
    }
    let n = k as usize + shape.len() + shape.part(1) as usize + 2;
    let pool: Vec<i32> = (1..=n as i32)
        .filter(|v| !negs.contains(v) && !(one_in_tail && *v == 1))
        .collect();
    let (mut top, rest) = split_pool(&pool, k, &lows, |v| v);
    let mut parity = negs.len();
    if *ty == 2 {
        top[0] = -top[0];
        parity += 1;
    }
    let mut window = top;
    window.extend(negs.iter().map(|&v| -v));
    if one_in_tail {
        window.push(if parity % 2 == 1 { -1 } else { 1 });
    } else if parity % 2 == 1 {
        window[0] = -window[0];
    }
    window.extend(rest);
    let w = WeylElement::new(Kind::D, window)?;
    debug_assert_eq!(typed_shape(&w, k).as_ref(), Ok(tp));
    Ok(w)
}

/// `ϖ_0 = (n, …, 1)`.
pub fn longest_a(n: usize) -> WeylElement {
    WeylElement::from_raw(Kind::A, (1..=n as i32).rev().collect())
}

/// `w_0 = (1̄, …, n̄)` in `W_n`.
pub fn longest_bc(n: usize) -> WeylElement {
    WeylElement::from_raw(Kind::BC, (1..=n as i32).map(|v| -v).collect())
}

/// `w̃_0 = (1̄, …, n̄)` for even `n` and `(1, 2̄, …, n̄)` for odd `n`.
pub fn longest_d(n: usize) -> WeylElement {
    let mut w: Vec<i32> = (1..=n as i32).map(|v| -v).collect();
    if n % 2 == 1 {
        w[0] = 1;
    }
    WeylElement::from_raw(Kind::D, w)
}

/// Longest element `w_0(𝔞)` of `W_n` (or `w̃_0(𝔞)` of `W̃_n`) whose right
/// descents lie in `𝔞`. In type D the entry of absolute value 1 takes the
/// sign that makes the number of barred entries even.
pub fn longest_for_flag(n: usize, a: &FlagSequence) -> Result<WeylElement> {
    let kind = a.kind();
    if kind == Kind::A {
        return Err(Error::InvalidFlag("type A maximal elements are not needed".into()));
    }
    let vals = a.values();
    if *vals.last().unwrap() as usize >= n {
        return Err(Error::InvalidFlag(format!("entries must be below n = {n}")));
    }
    let mut window: Vec<i32> = (1..=vals[0] as i32).collect();
    let mut bounds = vals.clone();
    bounds.push(n as u32);
    for pair in bounds.windows(2) {
        window.extend((pair[0] as i32 + 1..=pair[1] as i32).rev().map(|v| -v));
    }
    if kind == Kind::D && window.iter().filter(|&&v| v < 0).count() % 2 == 1 {
        let pos = window.iter().position(|v| v.abs() == 1).unwrap();
        window[pos] = -window[pos];
    }
    WeylElement::new(kind, window)
}

/// `w^{(k,n)} = 1 ⋯ k n̄ ⋯ (k+1)‾`.
pub fn top_k_grassmannian_bc(k: u32, n: usize) -> Result<WeylElement> {
    longest_for_flag(n, &FlagSequence::from_values(Kind::BC, &[k])?)
}

/// `w̃^{(k,n)} = 1̂ 2 ⋯ k n̄ ⋯ (k+1)‾`; `k = 1` uses the flag `(□, 1)`.
pub fn top_k_grassmannian_d(k: u32, n: usize) -> Result<WeylElement> {
    let flag = match k {
        1 => FlagSequence::new(Kind::D, vec![Gen::Box, Gen::I(1)])?,
        _ => FlagSequence::from_values(Kind::D, &[k])?,
    };
    longest_for_flag(n, &flag)
}

/// Index data `(λ(𝔞), β(𝔞), ρ(𝔞))` of the Pfaffian formula for the
/// maximal element of a parabolic coset in rank `n`. A type D flag starting
/// at `□` would end in a row with all three indices zero; that row is dropped.
pub fn flag_indices(n: usize, a: &FlagSequence) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let shift = if a.kind() == Kind::D { 1 } else { 0 };
    let mut bounds: Vec<i64> = a.values().iter().map(|&v| v as i64).collect();
    bounds.push(n as i64);
    let (mut lam, mut beta, mut rho) = (Vec::new(), Vec::new(), Vec::new());
    for pair in bounds.windows(2).rev() {
        let (lo, hi) = (pair[0], pair[1]);
        for t in 0..hi - lo {
            lam.push(lo + hi - shift - t);
            beta.push(1 - hi + t);
            rho.push(lo);
        }
    }
    if lam.last() == Some(&0) {
        lam.pop();
        beta.pop();
        rho.pop();
    }
    (lam, beta, rho)
}
