use liftcheck::algebra::Epsilon;
use liftcheck::io::{emit_definition, parse_definition, Definition, Task};
use liftcheck::random;
use liftcheck::structure::{canonical_structure, conjugate_structure, Signature};
use proptest::prelude::*;

#[test]
fn shipped_contact_file_is_the_canonical_emission() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/contact_n1_r1.def");
    let text = std::fs::read_to_string(path).unwrap();
    let parsed = parse_definition(&text).unwrap();
    let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
    let emitted = emit_definition(&Definition::from_structure(&s, None, parsed.tasks.clone()));
    assert_eq!(emitted, text);
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "  # header\nchart M: x   # trailing\n\n[tasks]   \n  check # run the axioms\n";
    let def = parse_definition(text).unwrap();
    assert_eq!(def.tasks, vec![Task::Check]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugated_structures_round_trip(
        seed in any::<u64>(),
        n in 0usize..3,
        r in 1usize..3,
        lorentzian in any::<bool>(),
        plus in any::<bool>(),
    ) {
        let sig = if lorentzian { Signature::Lorentzian } else { Signature::Riemannian };
        let eps = if plus { Epsilon::Plus } else { Epsilon::Minus };
        let base = canonical_structure(n, r, eps, sig).unwrap();
        let mut rng = random::rng(seed);
        let u = random::unimodular(base.chart(), 3, 2, &mut rng);
        let s = conjugate_structure(&base, &u).unwrap();
        let conn = random::connection(s.chart(), 3, 2, &mut rng).unwrap();
        let def = Definition::from_structure(&s, Some(&conn), vec![Task::Check]);
        let text = emit_definition(&def);
        let back = parse_definition(&text).unwrap();
        prop_assert_eq!(&back, &def);
        prop_assert_eq!(back.structure().unwrap().unwrap(), s);
        prop_assert_eq!(back.connection().unwrap().unwrap(), conn);
        prop_assert_eq!(emit_definition(&back), text);
    }
}
