//! Cross-checks of the identities satisfied by Schubert polynomials.
//!
//! Each suite computes both sides of an identity along independent code
//! paths and records one [`Check`] per input. Reports are plain data and
//! serialize to JSON.

mod characterization;
mod grassmann;
mod identities;
mod props;
mod section2;
mod splitting;
mod stanley;
mod top;
mod typed;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::gamma::canonical;
use crate::poly::{divided_difference, Poly, Side};
use crate::weyl::{Gen, Kind, WeylElement};

use super::compute::{schubert_with_cap, SchubertPoly, Type};

pub use characterization::characterization_verify;
pub use grassmann::grassmannian_verify;
pub use identities::{key_identity_verify, key_identity_sweep, worked_example_verify};
pub use props::{
    descent_symmetry_verify, factorization_verify, stability_verify, type_b_verify,
};
pub use section2::{duality_verify, flagged_tableau_verify, he_duality_verify, reverse_verify};
pub use splitting::splitting_verify;
pub use stanley::stanley_verify;
pub use top::top_formulas_verify;
pub use typed::{p_ell_verify, pxt_verify, star_sym_verify};

/// Outcome of one identity on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub input: String,
    pub pass: bool,
    /// First differing term, or the error met while computing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// `outcome` is `Ok(None)` on success and `Ok(Some(diff))` on a mismatch.
    pub fn new(id: &str, input: impl Into<String>, outcome: Result<Option<String>>) -> Check {
        let (pass, detail) = match outcome {
            Ok(None) => (true, None),
            Ok(Some(d)) => (false, Some(d)),
            Err(e) => (false, Some(format!("error: {e}"))),
        };
        Check { id: id.to_string(), input: input.into(), pass, detail }
    }
}

/// The checks of one suite, in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Report {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn with_checks(suite: impl Into<String>, checks: Vec<Check>) -> Report {
        Report { suite: suite.into(), checks }
    }

    pub fn record(&mut self, id: &str, input: impl Into<String>, outcome: Result<Option<String>>) {
        self.checks.push(Check::new(id, input, outcome));
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// `None` if `a = b` in `Γ[Y, Z]`, else the lowest term of `a − b`.
pub fn gamma_diff(a: &Poly, b: &Poly) -> Option<String> {
    poly_diff(&canonical(a), &canonical(b))
}

/// `None` if `a = b` term by term, else the lowest term of `a − b`.
pub fn poly_diff(a: &Poly, b: &Poly) -> Option<String> {
    let d = a - b;
    let first = d.terms().next().map(|(m, c)| format!("{} terms differ, first {c}·{m}", d.len()));
    first
}

/// `None` if `cond` holds, otherwise `msg`.
pub(crate) fn expect(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(msg())
    }
}

/// Map `f` over `items` in parallel, keeping input order.
pub(crate) fn sweep<T: Sync, F>(items: &[T], f: F) -> Vec<Check>
where
    F: Fn(&T) -> Vec<Check> + Sync + Send,
{
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// Run `f` on a pool of `jobs` worker threads (`0` keeps the global pool).
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|_| Error::BoundExceeded(jobs))?;
    Ok(pool.install(f))
}

pub(crate) fn schubert_of(ty: Type, w: &WeylElement) -> Result<Poly> {
    Ok(schubert_with_cap(ty, w, true, u32::MAX)?.value)
}

/// `∂_g 𝔖_w` on the `y` side (or `z` side). The element of the result is
/// `w s_g` (or `s_g w`) when that is shorter than `w`, and `w` otherwise,
/// in which case the value should vanish.
pub fn apply_divided_difference(s: &SchubertPoly, g: Gen, side: Side) -> Result<SchubertPoly> {
    g.check(s.element.kind())?;
    let value = divided_difference(&s.value, g, side)?;
    let next = match side {
        Side::Y => s.element.mul_gen(g),
        Side::Z => s.element.gen_mul(g),
    };
    let element = if next.length() < s.element.length() { next } else { s.element.clone() };
    Ok(SchubertPoly { ty: s.ty, element, double: s.double, value })
}

/// The suites understood by [`run_suite`].
pub const SUITES: &[&str] = &[
    "top",
    "characterization",
    "grassmannian",
    "identities",
    "example",
    "flagged",
    "duality",
    "reverse",
    "type-d",
    "stanley",
    "splitting",
    "properties",
];

fn types_for(ty: Option<Type>, all: &[Type]) -> Vec<Type> {
    match ty {
        Some(t) => vec![t],
        None => all.to_vec(),
    }
}

/// Run a named suite (or `"all"`) for ranks up to `max_n`; `ty` restricts
/// the Lie types where a suite covers several.
pub fn run_suite(name: &str, ty: Option<Type>, max_n: usize) -> Result<Report> {
    let mut report = Report::new(name);
    match name {
        "all" => {
            for s in SUITES {
                report.merge(run_suite(s, ty, max_n)?);
            }
        }
        "top" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                for n in 1..=max_n {
                    report.merge(top_formulas_verify(t, n)?);
                }
            }
        }
        "characterization" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                report.merge(characterization_verify(t, max_n)?);
            }
        }
        "grassmannian" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                report.merge(grassmannian_verify(t, max_n)?);
            }
        }
        "identities" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                report.merge(key_identity_sweep(t, max_n, 6)?);
            }
        }
        "example" => report.merge(worked_example_verify()),
        "flagged" => {
            report.merge(flagged_tableau_verify(max_n, max_n as u32 + 1));
            report.merge(he_duality_verify(max_n));
        }
        "duality" => {
            for n in 1..=max_n {
                report.merge(duality_verify(n));
            }
        }
        "reverse" => {
            for n in 1..=max_n {
                for m in 0..max_n {
                    report.merge(reverse_verify(n, m));
                }
            }
        }
        "type-d" => {
            report.merge(p_ell_verify(max_n.max(2) & !1, max_n));
            report.merge(pxt_verify(2 * max_n as u32 + 2));
            report.merge(star_sym_verify(2 * max_n as u32, 4));
        }
        "stanley" => report.merge(stanley_verify(max_n, 6)?),
        "splitting" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                let n = if t == Type::A { max_n + 1 } else { max_n };
                report.merge(splitting_verify(t, n)?);
            }
        }
        "properties" => {
            for t in types_for(ty, &[Type::A, Type::C, Type::D]) {
                report.merge(descent_symmetry_verify(t, max_n)?);
                report.merge(stability_verify(t, max_n.saturating_sub(1).max(1))?);
                report.merge(factorization_verify(t, max_n, 6)?);
            }
            if ty.is_none() || ty == Some(Type::B) {
                report.merge(type_b_verify(max_n)?);
            }
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    }
    report.suite = name.to_string();
    Ok(report)
}

/// All elements of the rank `n` group of `ty`.
pub(crate) fn elements(ty: Type, n: usize) -> Vec<WeylElement> {
    crate::weyl::group_elements(ty.kind(), n)
}

pub(crate) fn kind_rank_ok(kind: Kind, n: usize) -> bool {
    kind != Kind::D || n >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::schubert;

    #[test]
    fn report_counts() {
        let mut r = Report::new("t");
        r.record("a", "x", Ok(None));
        r.record("b", "y", Ok(Some("diff".into())));
        r.record("c", "z", Err(Error::Parse("bad".into())));
        assert_eq!((r.passed(), r.failed()), (1, 2));
        assert_eq!(r.first_failure().unwrap().id, "b");
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }

    #[test]
    fn divided_difference_of_s1() {
        let w = WeylElement::new(Kind::A, vec![2, 1]).unwrap();
        let s = schubert(Type::A, &w, true).unwrap();
        let d = apply_divided_difference(&s, Gen::I(1), Side::Y).unwrap();
        assert!(d.element.is_identity());
        assert_eq!(d.value, Poly::one());
    }

    #[test]
    fn diff_reports_first_term() {
        assert_eq!(gamma_diff(&Poly::q(2), &Poly::q(2)), None);
        assert!(gamma_diff(&Poly::q(2), &Poly::q(1)).is_some());
    }
}
