//! The JSON term format: one object per term, exponents listed by index.

use serde::{Deserialize, Serialize};

use super::dyadic::Dyadic;
use super::monomial::{Family, Monomial};
use super::poly::Poly;
use crate::error::{Error, Result};

/// A single term `coeff · q^α x^β y^γ z^δ …`; `q[r−1]` is the exponent of `q_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    #[serde(default)]
    pub q: Vec<u32>,
    #[serde(default)]
    pub y: Vec<u32>,
    #[serde(default)]
    pub z: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub x: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub w: Vec<u32>,
}

/// Terms of `p` in the order of its internal monomial ordering.
pub fn to_json_terms(p: &Poly) -> Vec<JsonTerm> {
    p.terms()
        .map(|(m, c)| JsonTerm {
            coeff: c.to_json_string(),
            q: m.family_exponents(Family::Q),
            y: m.family_exponents(Family::Y),
            z: m.family_exponents(Family::Z),
            x: m.family_exponents(Family::X),
            t: m.family_exponents(Family::T),
            w: m.family_exponents(Family::W),
        })
        .collect()
}

/// Inverse of [`to_json_terms`].
pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Poly> {
    let mut out = Poly::zero();
    for t in terms {
        let c: Dyadic = t.coeff.parse()?;
        let mut vars = Vec::new();
        for (fam, exps) in [
            (Family::Q, &t.q),
            (Family::X, &t.x),
            (Family::Y, &t.y),
            (Family::Z, &t.z),
            (Family::T, &t.t),
            (Family::W, &t.w),
        ] {
            if exps.len() > fam.capacity() {
                return Err(Error::Parse(format!("too many {} exponents", fam.symbol())));
            }
            vars.extend(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (fam.var(i + 1), e)));
        }
        out += &Poly::term(Monomial::from_vars(&vars), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    #[test]
    fn round_trip() {
        let p = &(&Poly::q(2) * &Poly::var(Var::Y(1))).halve(1) - &Poly::var(Var::Z(2)).pow(3);
        let terms = to_json_terms(&p);
        let text = serde_json::to_string(&terms).unwrap();
        let back: Vec<JsonTerm> = serde_json::from_str(&text).unwrap();
        assert_eq!(from_json_terms(&back).unwrap(), p);
    }

    #[test]
    fn term_layout() {
        let p = Poly::q(2).scale_i64(3);
        let t = &to_json_terms(&p)[0];
        assert_eq!(t.coeff, "3/2^0");
        assert_eq!(t.q, vec![0, 1]);
        assert!(t.y.is_empty());
    }
}
