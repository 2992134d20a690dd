//! Randomized algebraic laws: divided differences, the involution ω,
//! canonical forms, and the combinatorial round trips.

use proptest::prelude::*;

use schubertkit::poly::{canonical, divided_difference, gamma_eq, omega, reflect, Monomial, Poly, Side, Var};
use schubertkit::schubert::{schubert, Type};
use schubertkit::weyl::{
    element_a, k_strict_element, k_strict_shape, reduced_word, shape_a, typed_element, typed_shape, Gen, Kind,
    Partition, TypedPartition, WeylElement,
};

const VARS: u8 = 4;

/// Polynomials in `y_1..y_4`, `z_1..z_4`; with `q_form`, also in `q_1..q_3`.
fn poly(q_form: bool) -> impl Strategy<Value = Poly> {
    let term = (
        prop::collection::vec(0u32..3, 2 * VARS as usize),
        prop::collection::vec(0u32..2, 3),
        -3i64..=3,
    );
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = Poly::zero();
        for (ez, eq, c) in terms {
            let mut exps: Vec<(Var, u32)> = (0..VARS).map(|i| (Var::Y(i + 1), ez[i as usize])).collect();
            exps.extend((0..VARS).map(|i| (Var::Z(i + 1), ez[(VARS + i) as usize])));
            if q_form {
                exps.extend((0..3).map(|r| (Var::Q(r as u8 + 1), eq[r])));
            }
            p += &Poly::term(Monomial::from_vars(&exps), c.into());
        }
        p
    })
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Y), Just(Side::Z)]
}

fn dd(f: &Poly, g: Gen, s: Side) -> Poly {
    divided_difference(f, g, s).expect("divisible")
}

fn word(f: &Poly, w: &[Gen], s: Side) -> Poly {
    w.iter().rev().fold(f.clone(), |acc, &g| dd(&acc, g, s))
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted")
    })
}

fn element(kind: Kind, n: usize) -> impl Strategy<Value = WeylElement> {
    let gens = Gen::all(kind, n);
    prop::collection::vec(prop::sample::select(gens), 0..12)
        .prop_map(move |w| WeylElement::from_word(kind, &w).expect("legal word"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squares_vanish_on_type_a_generators(f in poly(false), i in 1u32..VARS as u32, s in side()) {
        prop_assert!(dd(&dd(&f, Gen::I(i), s), Gen::I(i), s).is_zero());
    }

    #[test]
    fn squares_vanish_on_sign_generators(f in poly(true), g in prop_oneof![Just(Gen::I(0)), Just(Gen::Box)], s in side()) {
        prop_assert!(gamma_eq(&dd(&dd(&f, g, s), g, s), &Poly::zero()));
    }

    #[test]
    fn braid_relations(f in poly(true), s in side()) {
        let (b, s0, s1, s2) = (Gen::Box, Gen::I(0), Gen::I(1), Gen::I(2));
        prop_assert_eq!(word(&f, &[s1, s2, s1], s), word(&f, &[s2, s1, s2], s));
        prop_assert!(gamma_eq(&word(&f, &[s0, s1, s0, s1], s), &word(&f, &[s1, s0, s1, s0], s)));
        prop_assert!(gamma_eq(&word(&f, &[b, s2, b], s), &word(&f, &[s2, b, s2], s)));
        prop_assert!(gamma_eq(&word(&f, &[b, s1], s), &word(&f, &[s1, b], s)));
        prop_assert!(gamma_eq(&word(&f, &[s0, s2], s), &word(&f, &[s2, s0], s)));
    }

    #[test]
    fn twisted_leibniz_rule(f in poly(true), g in poly(true), gen in prop_oneof![Just(Gen::I(0)), Just(Gen::Box), Just(Gen::I(1)), Just(Gen::I(3))], s in side()) {
        let lhs = dd(&(&f * &g), gen, s);
        let rhs = &(&dd(&f, gen, s) * &g) + &(&reflect(&f, gen, s) * &dd(&g, gen, s));
        prop_assert!(gamma_eq(&lhs, &rhs));
    }

    #[test]
    fn omega_is_an_involution(f in poly(true)) {
        prop_assert_eq!(omega(&omega(&f)), f);
    }

    #[test]
    fn canonical_form_is_idempotent(f in poly(true)) {
        let c = canonical(&f);
        prop_assert_eq!(canonical(&c), c.clone());
        prop_assert!(gamma_eq(&c, &f));
    }

    #[test]
    fn omega_exchanges_inverses_in_type_a(w in element(Kind::A, 4)) {
        let s = schubert(Type::A, &w, true).unwrap().value;
        let t = schubert(Type::A, &w.inverse(), true).unwrap().value;
        prop_assert_eq!(omega(&s), t);
    }

    #[test]
    fn omega_exchanges_inverses_in_type_c(w in element(Kind::BC, 3)) {
        let s = schubert(Type::C, &w, true).unwrap().value;
        let t = schubert(Type::C, &w.inverse(), true).unwrap().value;
        prop_assert!(gamma_eq(&omega(&s), &t));
    }

    #[test]
    fn omega_exchanges_inverses_in_type_d(w in element(Kind::D, 3)) {
        let s = schubert(Type::D, &w, true).unwrap().value;
        let t = schubert(Type::D, &w.inverse(), true).unwrap().value;
        prop_assert!(gamma_eq(&omega(&s), &t));
    }

    #[test]
    fn elements_display_and_parse(kind in prop_oneof![Just(Kind::A), Just(Kind::BC), Just(Kind::D)], seed in any::<u64>()) {
        let gens = Gen::all(kind, 5);
        let w: Vec<Gen> = (0..10).map(|i| gens[((seed >> (i * 6)) % gens.len() as u64) as usize]).collect();
        let w = WeylElement::from_word(kind, &w).unwrap();
        prop_assert_eq!(WeylElement::parse(kind, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn reduced_words_rebuild_the_element(w in element(Kind::D, 4)) {
        let r = reduced_word(&w);
        prop_assert_eq!(r.len() as u32, w.length());
        prop_assert_eq!(WeylElement::from_word(Kind::D, &r).unwrap(), w);
    }

    #[test]
    fn partitions_display_and_parse(lam in partition(5, 5)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn grassmannian_shapes_round_trip_in_type_a(lam in partition(3, 3)) {
        let w = element_a(&lam, 3).unwrap();
        prop_assert_eq!(shape_a(&w, 3).unwrap(), lam);
    }

    #[test]
    fn k_strict_shapes_round_trip(n in 0u32..9, k in 0u32..3, pick in any::<prop::sample::Index>()) {
        let all = Partition::k_strict_of(n, k);
        let lam = pick.get(&all).clone();
        let w = k_strict_element(&lam, k).unwrap();
        prop_assert_eq!(k_strict_shape(&w, k).unwrap(), lam);
    }

    #[test]
    fn typed_shapes_round_trip(n in 0u32..9, k in 0u32..3, pick in any::<prop::sample::Index>()) {
        let all = TypedPartition::all_of(n, k);
        prop_assume!(!all.is_empty());
        let tp = pick.get(&all).clone();
        let w = typed_element(&tp).unwrap();
        prop_assert_eq!(typed_shape(&w, k).unwrap(), tp);
    }
}
