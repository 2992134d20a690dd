//! Splitting expansions with the minimal compatible flag sequences.

use crate::error::Result;
use crate::weyl::FlagSequence;

use super::super::compute::Type;
use super::super::expansion::splitting_expand;
use super::{elements, kind_rank_ok, sweep, Check, Report};

/// Nonnegative splitting coefficients that reassemble `𝔖_w`, for every `w` of rank `n`.
pub fn splitting_verify(ty: Type, n: usize) -> Result<Report> {
    if ty == Type::B || !kind_rank_ok(ty.kind(), n) {
        return Ok(Report::new("splitting"));
    }
    let checks = sweep(&elements(ty, n), |w| {
        let a = FlagSequence::minimal_for(w);
        let b = FlagSequence::minimal_for(&w.inverse());
        let input = format!("w={w} a={:?} b={:?}", a.values(), b.values());
        let outcome = (|| {
            let s = splitting_expand(ty, w, &a, &b)?;
            if let Some((shapes, c)) = s.terms.iter().find(|(_, &c)| c < 0) {
                return Ok(Some(format!("coefficient {c} at {shapes:?}")));
            }
            Ok(if s.reconstructs()? { None } else { Some("sum does not reassemble".into()) })
        })();
        vec![Check::new(&format!("{ty}.splitting"), input, outcome)]
    });
    Ok(Report::with_checks("splitting", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two() {
        for ty in [Type::A, Type::C, Type::D] {
            let r = splitting_verify(ty, 2).unwrap();
            assert!(r.all_pass(), "{:?}", r.first_failure());
        }
    }
}
