//! Determinants and Pfaffians of polynomial matrices by cofactor expansion.

use std::collections::HashMap;

use super::poly::Poly;

/// Determinant by Laplace expansion along the first row, memoized on the
/// set of remaining columns.
pub fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    assert!(n <= 63, "matrix too large");
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    det_rec(m, 0, (1u64 << n) - 1, &mut memo)
}

fn det_rec(m: &[Vec<Poly>], row: usize, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    if cols == 0 {
        return Poly::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut out = Poly::zero();
    let mut sign = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = det_rec(m, row + 1, cols & !(1 << c), memo);
            let t = entry * &minor;
            if sign {
                out -= &t;
            } else {
                out += &t;
            }
        }
        sign = !sign;
    }
    memo.insert(cols, out.clone());
    out
}

/// Pfaffian of the skew-symmetric matrix whose strictly upper entries are
/// given by `entry(i, j)` for `i < j`; size must be even.
pub fn pfaffian(n: usize, entry: impl Fn(usize, usize) -> Poly) -> Poly {
    assert!(n % 2 == 0, "Pfaffian of odd size");
    assert!(n <= 63, "matrix too large");
    let mut upper = vec![vec![Poly::zero(); n]; n];
    for (i, row) in upper.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate().skip(i + 1) {
            *e = entry(i, j);
        }
    }
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    pf_rec(&upper, (1u64 << n) - 1, &mut memo)
}

fn pf_rec(a: &[Vec<Poly>], live: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    if live == 0 {
        return Poly::one();
    }
    if let Some(p) = memo.get(&live) {
        return p.clone();
    }
    let i = live.trailing_zeros() as usize;
    let rest = live & !(1 << i);
    let mut out = Poly::zero();
    let mut sign = false;
    for j in i + 1..a.len() {
        if rest & (1 << j) == 0 {
            continue;
        }
        if !a[i][j].is_zero() {
            let sub = pf_rec(a, rest & !(1 << j), memo);
            let t = &a[i][j] * &sub;
            if sign {
                out -= &t;
            } else {
                out += &t;
            }
        }
        sign = !sign;
    }
    memo.insert(live, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn x(i: u8) -> Poly {
        Poly::var(Var::X(i))
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![x(1), x(2)], vec![x(3), x(4)]];
        assert_eq!(det(&m), &(&x(1) * &x(4)) - &(&x(2) * &x(3)));
        let id: Vec<Vec<Poly>> =
            (0..4).map(|i| (0..4).map(|j| Poly::constant((i == j) as i64)).collect()).collect();
        assert_eq!(det(&id), Poly::one());
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let names: Vec<Poly> = (1..=6).map(x).collect();
        let mut k = 0;
        let mut up = vec![vec![Poly::zero(); 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                up[i][j] = names[k].clone();
                k += 1;
            }
        }
        let pf = pfaffian(4, |i, j| up[i][j].clone());
        let full: Vec<Vec<Poly>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => up[i][j].clone(),
                        std::cmp::Ordering::Greater => -&up[j][i],
                        std::cmp::Ordering::Equal => Poly::zero(),
                    })
                    .collect()
            })
            .collect();
        assert_eq!(&pf * &pf, det(&full));
    }
}
