//! Elementary, complete and `q` generating-series atoms.

use super::monomial::{Family, Var};
use super::poly::Poly;

/// A finite list of signed variables; `(v, true)` stands for `−v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Alphabet(pub Vec<(Var, bool)>);

impl Alphabet {
    pub fn empty() -> Alphabet {
        Alphabet(Vec::new())
    }

    /// `v_1, …, v_n` of one family, optionally negated.
    pub fn first(fam: Family, n: usize, negated: bool) -> Alphabet {
        Alphabet((1..=n).map(|i| (fam.var(i), negated)).collect())
    }

    /// `v_{from+1}, …, v_{to}`.
    pub fn range(fam: Family, from: usize, to: usize, negated: bool) -> Alphabet {
        Alphabet((from + 1..=to).map(|i| (fam.var(i), negated)).collect())
    }

    pub fn chain(mut self, other: Alphabet) -> Alphabet {
        self.0.extend(other.0);
        self
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn atom(&self, i: usize) -> Poly {
        let (v, neg) = self.0[i];
        let p = Poly::var(v);
        if neg {
            -p
        } else {
            p
        }
    }
}

/// `e_j` of the alphabet; zero for `j < 0`.
pub fn elementary(j: i64, a: &Alphabet) -> Poly {
    if j < 0 || j as usize > a.len() {
        return Poly::zero();
    }
    let j = j as usize;
    let mut e = vec![Poly::zero(); j + 1];
    e[0] = Poly::one();
    for i in 0..a.len() {
        let x = a.atom(i);
        for d in (1..=j.min(i + 1)).rev() {
            let add = &e[d - 1] * &x;
            e[d] += &add;
        }
    }
    e.swap_remove(j)
}

/// `h_j` of the alphabet; zero for `j < 0`.
pub fn complete(j: i64, a: &Alphabet) -> Poly {
    if j < 0 {
        return Poly::zero();
    }
    if j == 0 {
        return Poly::one();
    }
    if a.is_empty() {
        return Poly::zero();
    }
    let j = j as usize;
    let mut h = vec![Poly::zero(); j + 1];
    h[0] = Poly::one();
    for i in 0..a.len() {
        let x = a.atom(i);
        for d in 1..=j {
            let add = &h[d - 1] * &x;
            h[d] += &add;
        }
    }
    h.swap_remove(j)
}

/// Which of the two families of symmetric functions a superscripted symbol names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EH {
    E,
    H,
}

/// `e^r_j` or `h^r_j` in the first `|r|` variables of a family, with
/// `h^r_j := e^{−r}_j` and `e^r_j := h^{−r}_j` for `r < 0`, and `e^0_j = h^0_j = δ_{0j}`.
pub fn gen_eh(kind: EH, j: i64, r: i64, fam: Family, negated: bool) -> Poly {
    if j < 0 {
        return Poly::zero();
    }
    if r == 0 {
        return if j == 0 { Poly::one() } else { Poly::zero() };
    }
    let kind = if r < 0 {
        match kind {
            EH::E => EH::H,
            EH::H => EH::E,
        }
    } else {
        kind
    };
    let a = Alphabet::first(fam, r.unsigned_abs() as usize, negated);
    match kind {
        EH::E => elementary(j, &a),
        EH::H => complete(j, &a),
    }
}

/// Supersymmetric `h_p(Y/Z)` in `y_1..y_m` and `z_1..z_l`.
pub fn supersym_h(p: i64, m: usize, l: usize) -> Poly {
    supersym_h_in(p, &Alphabet::first(Family::Y, m, false), &Alphabet::first(Family::Z, l, false))
}

/// `h_p(A/B) = Σ_j h_j(A) e_{p−j}(B) (−1)^{p−j}`.
pub fn supersym_h_in(p: i64, a: &Alphabet, b: &Alphabet) -> Poly {
    if p < 0 {
        return Poly::zero();
    }
    let mut out = Poly::zero();
    for j in 0..=p {
        let term = &complete(j, a) * &elementary(p - j, b);
        if (p - j) % 2 == 1 {
            out -= &term;
        } else {
            out += &term;
        }
    }
    out
}

/// The generator `q_r(X)` as a symbol.
pub fn gen_q(r: i64) -> Poly {
    Poly::q(r)
}

/// `q_r` evaluated in an alphabet: the coefficient of `t^r` in `∏ (1+at)/(1−at)`.
pub fn q_in(r: i64, a: &Alphabet) -> Poly {
    if r < 0 {
        return Poly::zero();
    }
    (0..=r).map(|j| &elementary(j, a) * &complete(r - j, a)).sum()
}
