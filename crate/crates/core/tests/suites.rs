//! Every named suite at rank three.

use schubertkit::schubert::verify::{run_suite, SUITES};

#[test]
fn all_suites_pass_at_rank_three() {
    for name in SUITES {
        let r = run_suite(name, None, 3).unwrap();
        assert!(!r.checks.is_empty(), "{name} ran no checks");
        assert!(r.all_pass(), "{name}: {} failed, first {:?}", r.failed(), r.first_failure());
    }
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite("nonsense", None, 2).is_err());
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite("identities", None, 3).unwrap();
    let b = run_suite("identities", None, 3).unwrap();
    assert_eq!(a, b);
}
