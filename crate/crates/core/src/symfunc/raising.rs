//! Raising operator expressions, expanded exactly over a finite index set.
//!
//! A raising operator `R_ij` (with `i < j`) sends `c_α` to `c_{α + e_i − e_j}`.
//! Expressions here are products over pairs of one of four series in `R_ij`.
//! Every term is kept together with the set of pairs that occur in it, which
//! is what the `⋆` action and its variants need.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// The factor attached to one pair `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairOp {
    /// `1`.
    One,
    /// `1 − R_ij`.
    Minus,
    /// `(1 + R_ij)^{−1}`.
    Inverse,
    /// `(1 − R_ij)/(1 + R_ij)`.
    Ratio,
}

impl PairOp {
    /// Coefficient of `R_ij^n`, or `None` past the last nonzero power.
    fn coeff(self, n: i64) -> Option<i64> {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        match (self, n) {
            (_, 0) => Some(1),
            (PairOp::One, _) => None,
            (PairOp::Minus, 1) => Some(-1),
            (PairOp::Minus, _) => None,
            (PairOp::Inverse, n) => Some(sign * (n >= 0) as i64),
            (PairOp::Ratio, _) => Some(2 * sign),
        }
    }
}

/// A product `∏_{i<j} op_ij(R_ij)` on vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RaisingExpr {
    len: usize,
    ops: Vec<PairOp>,
}

/// One term `coeff · R^n` applied to `α`: the resulting index vector and the
/// set of pairs with `n_ij > 0` (bit [`pair_index`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingTerm {
    pub nu: Vec<i64>,
    pub mask: u64,
    pub coeff: i64,
}

/// Bit position of the pair `(i, j)`, 0-based with `i < j`.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Largest length supported (so that pair masks fit in a `u64`).
pub const MAX_LEN: usize = 11;

impl RaisingExpr {
    pub fn new(len: usize, op: impl Fn(usize, usize) -> PairOp) -> RaisingExpr {
        assert!(len <= MAX_LEN, "raising expressions limited to {MAX_LEN} indices");
        let mut ops = vec![PairOp::One; len * len.saturating_sub(1) / 2];
        for j in 1..len {
            for i in 0..j {
                ops[pair_index(i, j)] = op(i, j);
            }
        }
        RaisingExpr { len, ops }
    }

    /// `∏_{i<j} (1 − R_ij)`.
    pub fn minus_all(len: usize) -> RaisingExpr {
        RaisingExpr::new(len, |_, _| PairOp::Minus)
    }

    /// `ℝ = ∏_{i<j} (1 − R_ij)/(1 + R_ij)`.
    pub fn ratio_all(len: usize) -> RaisingExpr {
        RaisingExpr::new(len, |_, _| PairOp::Ratio)
    }

    /// `∏_{i<j} (1 − R_ij) ∏_{(i,j) ∈ C} (1 + R_ij)^{−1}`, pairs of `C` 1-based.
    pub fn with_ratio_pairs(len: usize, pairs: &[(usize, usize)]) -> RaisingExpr {
        RaisingExpr::new(len, |i, j| {
            if pairs.contains(&(i + 1, j + 1)) {
                PairOp::Ratio
            } else {
                PairOp::Minus
            }
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn op(&self, i: usize, j: usize) -> PairOp {
        self.ops[pair_index(i, j)]
    }

    /// All terms of the expression applied to `alpha`, dropping every term
    /// with an index below `floor`. Terms with equal `(ν, mask)` are merged.
    pub fn expand(&self, alpha: &[i64], floor: i64) -> Result<Vec<RaisingTerm>> {
        if alpha.len() != self.len {
            return Err(Error::LengthMismatch(format!(
                "raising expression on {} indices applied to a vector of length {}",
                self.len,
                alpha.len()
            )));
        }
        let mut acc: BTreeMap<(Vec<i64>, u64), i64> = BTreeMap::new();
        let mut nu = alpha.to_vec();
        if self.len > 0 {
            self.column(self.len - 1, 0, &mut nu, 0, 1, floor, &mut acc);
        } else {
            acc.insert((nu, 0), 1);
        }
        Ok(acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((nu, mask), coeff)| RaisingTerm { nu, mask, coeff })
            .collect())
    }

    /// Choose `n_ij` for the pair `(i, j)`, then move on; column `j` is closed
    /// once all `i < j` are chosen, at which point `ν_j` is final.
    #[allow(clippy::too_many_arguments)]
    fn column(
        &self,
        j: usize,
        i: usize,
        nu: &mut Vec<i64>,
        mask: u64,
        coeff: i64,
        floor: i64,
        acc: &mut BTreeMap<(Vec<i64>, u64), i64>,
    ) {
        if i == j {
            if nu[j] < floor {
                return;
            }
            if j == 0 {
                *acc.entry((nu.clone(), mask)).or_insert(0) += coeff;
            } else {
                self.column(j - 1, 0, nu, mask, coeff, floor, acc);
            }
            return;
        }
        let op = self.op(i, j);
        let mut n = 0;
        while let Some(c) = op.coeff(n) {
            if nu[j] - n < floor {
                break;
            }
            let m = if n > 0 { mask | (1 << pair_index(i, j)) } else { mask };
            nu[i] += n;
            nu[j] -= n;
            self.column(j, i + 1, nu, m, coeff * c, floor, acc);
            nu[i] -= n;
            nu[j] += n;
            n += 1;
        }
    }
}

/// Indices touched by some pair of the mask.
pub fn support(mask: u64, len: usize) -> Vec<bool> {
    let mut out = vec![false; len];
    for j in 1..len {
        for i in 0..j {
            if mask & (1 << pair_index(i, j)) != 0 {
                out[i] = true;
                out[j] = true;
            }
        }
    }
    out
}

/// Indices touched by a pair `(i, j)` of the mask with `j < m` (0-based `j < m − 1`).
pub fn support_below(mask: u64, len: usize, m: usize) -> Vec<bool> {
    let mut out = vec![false; len];
    for j in 1..len.min(m.saturating_sub(1)) {
        for i in 0..j {
            if mask & (1 << pair_index(i, j)) != 0 {
                out[i] = true;
                out[j] = true;
            }
        }
    }
    out
}

/// Evaluate `expr` on `alpha` with a separable family: the term `c_ν` is
/// `∏_i entry(i, ν_i)`. Entries are memoized per `(i, ν_i)`.
pub fn apply(expr: &RaisingExpr, alpha: &[i64], floor: i64, entry: impl Fn(usize, i64) -> Poly) -> Result<Poly> {
    apply_masked(expr, alpha, floor, |_, _| false, |i, p, _| entry(i, p))
}

/// Evaluate `expr` on `alpha` where the factor at position `i` may also depend
/// on a per-term flag `flag(mask, ·)[i]`. The term is
/// `∏_i entry(i, ν_i, flags[i])`.
pub fn apply_masked(
    expr: &RaisingExpr,
    alpha: &[i64],
    floor: i64,
    flag: impl Fn(u64, usize) -> bool,
    entry: impl Fn(usize, i64, bool) -> Poly,
) -> Result<Poly> {
    apply_general(expr, alpha, floor, |nu, mask| {
        (0..nu.len()).map(|i| (i, nu[i], flag(mask, i))).collect()
    }, entry)
}

/// Most general form: `factors(ν, mask)` lists `(position, index, flag)` for
/// each factor of the term, and `entry` evaluates one factor.
pub fn apply_general<F: Copy + Eq + Hash>(
    expr: &RaisingExpr,
    alpha: &[i64],
    floor: i64,
    factors: impl Fn(&[i64], u64) -> Vec<(usize, i64, F)>,
    entry: impl Fn(usize, i64, F) -> Poly,
) -> Result<Poly> {
    let mut memo: HashMap<(usize, i64, F), Poly> = HashMap::new();
    let mut out = Poly::zero();
    for t in expr.expand(alpha, floor)? {
        let mut prod = Poly::constant(t.coeff);
        for key in factors(&t.nu, t.mask) {
            let f = memo.entry(key).or_insert_with(|| entry(key.0, key.1, key.2));
            if f.is_zero() {
                prod = Poly::zero();
                break;
            }
            prod = &prod * f;
        }
        out += &prod;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_index_minus() {
        let t = RaisingExpr::minus_all(2).expand(&[2, 1], 0).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.contains(&RaisingTerm { nu: vec![3, 0], mask: 1, coeff: -1 }));
    }

    #[test]
    fn ratio_coefficients() {
        let t = RaisingExpr::ratio_all(2).expand(&[1, 3], 0).unwrap();
        let coeffs: Vec<i64> = t.iter().map(|t| t.coeff).collect();
        assert_eq!(t.len(), 4);
        assert_eq!(coeffs.iter().sum::<i64>(), 1 - 2 + 2 - 2);
    }

    #[test]
    fn floor_drops_negative_indices() {
        let t = RaisingExpr::ratio_all(3).expand(&[0, 0, 0], 0).unwrap();
        assert_eq!(t, vec![RaisingTerm { nu: vec![0, 0, 0], mask: 0, coeff: 1 }]);
    }

    #[test]
    fn supports() {
        let m = 1 << pair_index(0, 2);
        assert_eq!(support(m, 3), vec![true, false, true]);
        assert_eq!(support_below(m, 3, 3), vec![false; 3]);
        assert_eq!(support_below(m, 3, 4), vec![true, false, true]);
    }
}
