use epicomp::corpus::{
    find_claim, fixture, registry, run_all, run_claim, ClaimBody, ClaimFilter, CorpusError, Verdict,
};
use epicomp::kripke::{canonicalize, FrameClass, KripkeModel, Relation, WorldSet};
use epicomp::search::{check_validity, SearchBounds};
use epicomp::semantics::{extension, satisfies};
use epicomp::syntax::Formula;

fn f(text: &str) -> Formula {
    text.parse().unwrap()
}

#[test]
fn unknown_claim_is_an_error() {
    assert!(matches!(
        run_claim("NOPE"),
        Err(CorpusError::UnknownClaim(_))
    ));
}

#[test]
fn filters_select_subsets() {
    let kt = ClaimFilter {
        id_prefix: Some("FIX-FIG3".into()),
        frame: None,
    };
    let reports = run_all(&kt);
    assert_eq!(reports.len(), 5);
    assert!(reports
        .iter()
        .all(|r| r.matched && r.id.starts_with("FIX-FIG3")));

    let s5 = ClaimFilter {
        id_prefix: None,
        frame: Some(FrameClass::S5),
    };
    let n = registry().iter().filter(|c| s5.accepts(c)).count();
    assert!(n > 0 && n < registry().len());
    assert!(registry()
        .iter()
        .filter(|c| s5.accepts(c))
        .all(|c| c.frame == FrameClass::S5));
}

#[test]
fn every_countermodel_claim_has_a_witness_and_every_valid_claim_a_bound() {
    for c in registry() {
        match &c.body {
            ClaimBody::Countermodel { max_worlds, .. } | ClaimBody::Valid { max_worlds, .. } => {
                assert!((1..=4).contains(max_worlds), "{}", c.id);
            }
            ClaimBody::Holds { .. } | ClaimBody::Class { .. } => assert!(c.id.starts_with("FIX-")),
        }
    }
}

#[test]
fn fig3_comparison_extension_is_exactly_s() {
    let m = fixture("fig3").unwrap();
    assert_eq!(
        m.world_names(extension(&m, &f("[{b} < {a}]")).unwrap()),
        vec!["s"]
    );
    // The two teams with c are equivalent everywhere, which is why the
    // strict-team counterexample can be read at any world where a < c.
    assert_eq!(
        extension(&m, &f("[{a,b} == {c,b}]")).unwrap(),
        WorldSet::full(3)
    );
    assert!(satisfies(&m, "u", &f("[{a} < {c}]")).unwrap());
    assert!(!satisfies(&m, "s", &f("[{a} < {c}]")).unwrap());
}

/// Two worlds; agent a sees both from world 0 and only itself from world 1,
/// agent b sees everything. b is at least as informed as a at w0 but not
/// at w1, which b cannot tell apart from w0. Built by hand as an
/// independent check on the known-superiority failure.
fn superiority_oracle() -> KripkeModel {
    let a = Relation::from_pairs(2, [(0, 0), (0, 1), (1, 1)]);
    KripkeModel::new(
        vec!["w0".into(), "w1".into()],
        vec!["a".into(), "b".into()],
        vec![],
        vec![a, Relation::total(2)],
        vec![],
    )
    .unwrap()
}

#[test]
fn known_superiority_fails_on_two_world_preorders() {
    let m = superiority_oracle();
    assert!(!satisfies(&m, "w0", &f("[{b} <= {a}] -> D{b} [{b} <= {a}]")).unwrap());
    let ks = f("[{a} <= {b}] -> D{a} [{a} <= {b}]");
    // No one-world S4 model refutes it, so two worlds is the minimum.
    let one = SearchBounds::new(FrameClass::S4, 2, 1);
    assert!(!check_validity(&ks, &one).unwrap().is_countermodel());

    let r = run_claim("S4-KS-FAIL").unwrap();
    assert!(r.matched, "{}", r.detail);
    assert_eq!(r.expected, Verdict::Countermodel);
    assert_eq!(r.countermodel_worlds(), Some(2));
    let (cm, w) = r.countermodel.unwrap();
    assert_eq!(cm.worlds().len(), m.worlds().len());
    // The search found the instance B={a}, C={b}: up to renaming worlds it
    // is the hand-built model with the agents swapped.
    let swapped = m
        .with_relations(vec![m.relations()[1], m.relations()[0]])
        .unwrap();
    assert_eq!(canonicalize(&cm, &[]), canonicalize(&swapped, &[]));
    assert!(!satisfies(&cm, &w, &ks).unwrap());
}

#[test]
fn find_claim_returns_registered_entries() {
    let c = find_claim("S5-OBS3").unwrap();
    assert_eq!(c.expected(), Verdict::Countermodel);
    assert!(c.witness_text().unwrap().starts_with("fig3@t"));
    assert!(find_claim("KT-KT1").unwrap().statement().contains("D{B}"));
}

#[test]
fn claim_table_lists_every_claim() {
    let doc = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/claims.md"))
        .unwrap();
    for c in registry() {
        assert!(
            doc.contains(&format!("| `{}` |", c.id)),
            "{} missing from docs/claims.md",
            c.id
        );
    }
}
