mod common;

use proptest::prelude::*;

use common::arb_formula;
use epicomp::syntax::{expand_sugar, parse, render};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn render_then_parse_is_identity(f in arb_formula(3)) {
        let text = render(&f);
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rendering_is_stable(f in arb_formula(3)) {
        let once = render(&f);
        prop_assert_eq!(render(&parse(&once).unwrap()), once);
    }

    #[test]
    fn expansion_leaves_only_core(f in arb_formula(3)) {
        let core = expand_sugar(&f);
        prop_assert!(core.is_core());
        prop_assert_eq!(expand_sugar(&core), core.clone());
        prop_assert_eq!(core.atoms(), f.atoms());
    }
}

#[test]
fn precedence_examples() {
    for (text, shown) in [
        ("~p & q", "~p & q"),
        ("p | q & r", "p | q & r"),
        ("(p | q) & r", "(p | q) & r"),
        ("p -> q -> r", "p -> q -> r"),
        ("D{b,a} p", "D{a,b} p"),
        ("CD[{b};{a}] [{a} <= {b}]", "CD[{a};{b}] [{a} <= {b}]"),
    ] {
        assert_eq!(render(&parse(text).unwrap()), shown, "{text}");
    }
}

#[test]
fn malformed_input_is_rejected() {
    for text in [
        "", "p &", "D{} p", "K{a,b} p", "[a <= b]", "CD[] p", "p q", "(p",
    ] {
        assert!(parse(text).is_err(), "{text} should not parse");
    }
}
