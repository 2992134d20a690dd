//! Acceptance suite: eight criteria, each a batch of exact identity checks.
//!
//! Runs without the libtest harness so that every criterion prints a single
//! PASS/FAIL line with its check count and wall time. The process exits
//! nonzero if any criterion fails.
//!
//! Usage: cargo test --release -p schubertkit --test acceptance

use std::process::ExitCode;
use std::time::Instant;

use schubertkit::schubert::verify::{
    characterization_verify, duality_verify, flagged_tableau_verify, grassmannian_verify, he_duality_verify,
    p_ell_verify, pxt_verify, reverse_verify, splitting_verify, stanley_verify, star_sym_verify, top_formulas_verify,
    worked_example_verify, Report,
};
use schubertkit::schubert::Type;
use schubertkit::Result;

struct Criterion {
    name: &'static str,
    run: fn() -> Result<Report>,
}

fn merged(parts: impl IntoIterator<Item = Result<Report>>) -> Result<Report> {
    let mut out = Report::new("acceptance");
    for p in parts {
        out.merge(p?);
    }
    Ok(out)
}

fn top_a() -> Result<Report> {
    merged((1..=5).map(|n| top_formulas_verify(Type::A, n)))
}

fn characterization() -> Result<Report> {
    merged([
        characterization_verify(Type::A, 4),
        characterization_verify(Type::C, 3),
        characterization_verify(Type::D, 3),
    ])
}

fn section_two() -> Result<Report> {
    let mut parts = vec![Ok(flagged_tableau_verify(3, 4)), Ok(he_duality_verify(3))];
    parts.extend((1..=4).map(|n| Ok(duality_verify(n))));
    parts.extend((1..=3).flat_map(|n| (0..=2).map(move |m| Ok(reverse_verify(n, m)))));
    merged(parts)
}

fn top_c() -> Result<Report> {
    merged((1..=3).map(|n| top_formulas_verify(Type::C, n)))
}

fn theta_eta() -> Result<Report> {
    merged([grassmannian_verify(Type::C, 3), grassmannian_verify(Type::D, 3)])
}

fn type_d() -> Result<Report> {
    merged([
        Ok(p_ell_verify(4, 4)),
        Ok(pxt_verify(8)),
        Ok(star_sym_verify(6, 4)),
        top_formulas_verify(Type::D, 2),
        top_formulas_verify(Type::D, 3),
    ])
}

fn splitting() -> Result<Report> {
    merged([
        splitting_verify(Type::A, 4),
        splitting_verify(Type::C, 3),
        splitting_verify(Type::D, 3),
        Ok(worked_example_verify()),
    ])
}

fn stanley() -> Result<Report> {
    stanley_verify(3, 6)
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "1 type A top formula, n <= 5", run: top_a },
    Criterion { name: "2 characterization on S_4, W_3, W~_3", run: characterization },
    Criterion { name: "3 flagged Schur, h/e duality, D on H_n, reverse Schubert", run: section_two },
    Criterion { name: "4 type C top element stack, n <= 3", run: top_c },
    Criterion { name: "5 theta and eta polynomials, recursion", run: theta_eta },
    Criterion { name: "6 type D: P^(l), P(X|t), top elements", run: type_d },
    Criterion { name: "7 splitting and the worked example", run: splitting },
    Criterion { name: "8 Stanley coefficients and symmetries", run: stanley },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(r) if r.all_pass() && !r.checks.is_empty() => {
                println!("PASS  criterion {}: {} checks in {secs:.1}s", c.name, r.checks.len());
            }
            Ok(r) => {
                failures += 1;
                let first = r.first_failure().map_or("no checks ran".to_string(), |f| {
                    format!("{} [{}] {}", f.id, f.input, f.detail.as_deref().unwrap_or(""))
                });
                println!("FAIL  criterion {}: {}/{} failed in {secs:.1}s; first: {first}", c.name, r.failed(), r.checks.len());
            }
            Err(e) => {
                failures += 1;
                println!("FAIL  criterion {}: error {e} after {secs:.1}s", c.name);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
