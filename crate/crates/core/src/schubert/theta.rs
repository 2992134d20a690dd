//! Theta and eta polynomials by raising operators.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::Result;
use crate::poly::{Family, Poly};
use crate::symfunc::families::{a_family, b_family, c_family, c_hat, FChoice};
use crate::symfunc::raising::{apply, apply_general, pair_index, support_below, RaisingExpr};
use crate::weyl::{k_strict_element, typed_element, Partition, TypedPartition, WeylElement};

/// Raising data read off the Grassmannian element: the pairs `(i, j)` with
/// `w_{k+i} + w_{k+j} < 0` and the superscripts `β_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingData {
    pub pairs: Vec<(usize, usize)>,
    pub beta: Vec<i64>,
}

/// The data for the first `len` tail positions of `w` after `k`.
pub fn raising_data(w: &WeylElement, k: usize, len: usize) -> RaisingData {
    let tail: Vec<i32> = (1..=len).map(|j| w.at(k + j)).collect();
    let mut pairs = Vec::new();
    for j in 1..=len {
        for i in 1..j {
            if tail[i - 1] + tail[j - 1] < 0 {
                pairs.push((i, j));
            }
        }
    }
    let beta = tail.iter().map(|&v| if v < 0 { v as i64 + 1 } else { v as i64 }).collect();
    RaisingData { pairs, beta }
}

fn drop_z(p: Poly, double: bool) -> Poly {
    if double {
        p
    } else {
        p.set_zero(|v| v.family() == Family::Z)
    }
}

thread_local! {
    static THETA: RefCell<HashMap<(Partition, u32, bool), Poly>> = RefCell::new(HashMap::new());
    static ETA: RefCell<HashMap<(TypedPartition, FChoice, bool), Poly>> = RefCell::new(HashMap::new());
}

/// `Θ_λ(X; Y_(k), Z) = R^λ c^{β(λ)}_λ` for a `k`-strict `λ`.
pub fn theta(lambda: &Partition, k: u32, double: bool) -> Result<Poly> {
    let key = (lambda.clone(), k, double);
    if let Some(p) = THETA.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(p);
    }
    let p = theta_uncached(lambda, k, double)?;
    THETA.with(|c| c.borrow_mut().insert(key, p.clone()));
    Ok(p)
}

fn theta_uncached(lambda: &Partition, k: u32, double: bool) -> Result<Poly> {
    let w = k_strict_element(lambda, k)?;
    let alpha = lambda.padded(lambda.len());
    let data = raising_data(&w, k as usize, alpha.len());
    let expr = RaisingExpr::with_ratio_pairs(alpha.len(), &data.pairs);
    let p = apply(&expr, &alpha, 0, |i, p| c_family(k as i64, data.beta[i], p))?;
    Ok(drop_z(p, double))
}

/// `H_λ(X; Y_(k), Z) = 2^{−ℓ_k(λ)} R^λ ⋆ ĉ^{β(λ)}_λ` for a typed `k`-strict `λ`,
/// with `f` fixing the hatted family.
pub fn eta_with(tp: &TypedPartition, f: FChoice, double: bool) -> Result<Poly> {
    let key = (tp.clone(), f, double);
    if let Some(p) = ETA.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(p);
    }
    let p = eta_uncached(tp, f, double)?;
    ETA.with(|c| c.borrow_mut().insert(key, p.clone()));
    Ok(p)
}

fn eta_uncached(tp: &TypedPartition, f: FChoice, double: bool) -> Result<Poly> {
    let w = typed_element(tp)?;
    let k = tp.k as i64;
    let alpha = tp.shape.padded(tp.shape.len());
    let len = alpha.len();
    let data = raising_data(&w, tp.k as usize, len);
    let expr = RaisingExpr::with_ratio_pairs(len, &data.pairs);
    let lk = tp.shape.len_above(tp.k);
    let m = lk + 1;
    let beta = data.beta.clone();
    // Flags: 0 hatted, 1 plain, 2 the a-family, 3 the b-family.
    let touches_m = move |mask: u64| {
        (0..len).any(|o| o != m - 1 && mask & (1 << pair_index(o.min(m - 1), o.max(m - 1))) != 0)
    };
    let p = apply_general(
        &expr,
        &alpha,
        0,
        |nu, mask| {
            let below = support_below(mask, len, m);
            (0..len)
                .map(|i| {
                    let code = if tp.ty == 0 || i + 1 < m {
                        if below[i] || i + 1 > m { 1 } else { 0 }
                    } else if i + 1 == m {
                        if touches_m(mask) { 2 } else { 3 }
                    } else {
                        1
                    };
                    (i, nu[i], code)
                })
                .collect()
        },
        |i, p, code| match code {
            0 => c_hat(k, beta[i], p, f, i + 1),
            1 => c_family(k, beta[i], p),
            2 => a_family(k, beta[i], p),
            _ => {
                if p == k {
                    b_family(k, beta[i], tp.ty == 2)
                } else {
                    Poly::zero()
                }
            }
        },
    )?;
    Ok(drop_z(p.halve(lk as u32), double))
}

/// `H_λ` with the alternating choice of `f_k`.
pub fn eta(tp: &TypedPartition, double: bool) -> Result<Poly> {
    eta_with(tp, FChoice::Alternating, double)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gamma::gamma_eq;
    use crate::schubert::{schubert_poly, Type};
    use crate::weyl::{Kind, WeylElement};

    #[test]
    fn theta_of_a_box() {
        let l = Partition::new(vec![1]).unwrap();
        let w = WeylElement::new(Kind::BC, vec![2, 1]).unwrap();
        assert!(gamma_eq(&theta(&l, 1, true).unwrap(), &schubert_poly(Type::C, &w).unwrap()));
    }

    #[test]
    fn eta_with_repeated_k() {
        for (win, ty) in [([3, 1, 2], 1), ([-3, -1, 2], 2)] {
            let w = WeylElement::new(Kind::D, win.to_vec()).unwrap();
            let tp = TypedPartition::new(Partition::new(vec![1, 1]).unwrap(), 1, ty).unwrap();
            assert!(gamma_eq(&eta(&tp, true).unwrap(), &schubert_poly(Type::D, &w).unwrap()));
        }
    }
}
