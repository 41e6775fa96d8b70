mod common;

use proptest::prelude::*;

use common::*;
use epicomp::kripke::{
    apply_closure, canonicalize, classify_frame, load_model, save_model, FrameClass, KripkeModel,
    WorldSet,
};
use epicomp::semantics::{extension, extension_with, EvalError, EvalOptions};
use epicomp::syntax::{expand_sugar, CmpOp, Formula, Group, Supergroup};

fn ext(m: &KripkeModel, f: &Formula) -> WorldSet {
    extension(m, f).unwrap()
}

fn any_frame() -> impl Strategy<Value = FrameClass> {
    prop_oneof![
        Just(FrameClass::Kt),
        Just(FrameClass::S4),
        Just(FrameClass::S5)
    ]
}

fn model_and_formula() -> impl Strategy<Value = (KripkeModel, Formula)> {
    any_frame().prop_flat_map(|fr| (arb_model(fr, 4, 3), arb_formula(3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn evaluator_matches_direct_oracle((m, f) in model_and_formula()) {
        prop_assert_eq!(ext(&m, &f), oracle_extension(&m, &f), "{}", f);
    }

    #[test]
    fn sugar_and_core_agree((m, f) in model_and_formula()) {
        prop_assert_eq!(ext(&m, &f), ext(&m, &expand_sugar(&f)));
    }

    #[test]
    fn knowledge_transfers_down_comparison(
        m in arb_model(FrameClass::Kt, 4, 3),
        a in arb_group(3), b in arb_group(3), f in arb_formula(3),
    ) {
        let law = Formula::cmp(CmpOp::Leq, a.clone(), b.clone())
            .implies(Formula::dk(b, f.clone()).implies(Formula::dk(a, f)));
        prop_assert_eq!(ext(&m, &law), WorldSet::full(m.worlds().len()));
    }

    #[test]
    fn bigger_groups_know_more(
        m in arb_model(FrameClass::Kt, 4, 3),
        a in arb_group(3), b in arb_group(3), f in arb_formula(3),
    ) {
        let ab = a.union(&b).unwrap();
        let n = m.worlds().len();
        prop_assert_eq!(ext(&m, &Formula::cmp(CmpOp::Leq, ab.clone(), a.clone())), WorldSet::full(n));
        prop_assert!(ext(&m, &Formula::dk(a, f.clone())).is_subset(ext(&m, &Formula::dk(ab, f))));
    }

    #[test]
    fn attitude_chain(
        m in arb_model(FrameClass::Kt, 4, 3),
        sg in arb_supergroup(3), f in arb_formula(2),
    ) {
        let union = sg.union().unwrap();
        let ck = ext(&m, &Formula::ck(union.clone(), f.clone()));
        let cdk = ext(&m, &Formula::cdk(sg.clone(), f.clone()));
        let each = sg
            .groups()
            .iter()
            .map(|g| ext(&m, &Formula::dk(g.clone(), f.clone())))
            .fold(WorldSet::full(m.worlds().len()), |acc, s| WorldSet::from_bits(acc.bits() & s.bits()));
        let joint = ext(&m, &Formula::dk(union, f));
        prop_assert!(ck.is_subset(cdk));
        prop_assert!(cdk.is_subset(each));
        prop_assert!(each.is_subset(joint));
    }

    #[test]
    fn renaming_worlds_renames_extensions(
        (m, f) in model_and_formula(),
        seed in any::<u64>(),
    ) {
        let n = m.worlds().len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = m.permuted(&perm);
        prop_assert_eq!(ext(&p, &f), ext(&m, &f).permuted(&perm));
        let pool: Vec<String> = ATOMS.iter().map(|s| s.to_string()).collect();
        prop_assert_eq!(canonicalize(&p, &pool), canonicalize(&m, &pool));
    }

    #[test]
    fn model_files_round_trip(m in any_frame().prop_flat_map(|fr| arb_model(fr, 5, 3))) {
        let text = save_model(&m, None);
        prop_assert_eq!(load_model(&text).unwrap(), m);
    }

    #[test]
    fn closure_lands_in_its_class(m in arb_model(FrameClass::None, 5, 3), fr in any_frame()) {
        let closed = apply_closure(&m, closure_for(fr));
        prop_assert!(classify_frame(&closed).class >= fr);
        prop_assert_eq!(apply_closure(&closed, closure_for(fr)), closed.clone());
        for (r, c) in m.relations().iter().zip(closed.relations()) {
            prop_assert!(r.is_subset(c));
        }
    }
}

#[test]
fn strict_atoms_reports_unknown_atoms() {
    let m = build_model(FrameClass::S5, 2, 1, &[0, 0], &[1, 2]);
    let f: Formula = "r | p".parse().unwrap();
    assert_eq!(extension(&m, &f).unwrap(), WorldSet::singleton(0));
    let strict = EvalOptions { strict_atoms: true };
    assert!(
        matches!(extension_with(&m, &f, strict), Err(EvalError::UndeclaredAtom(a)) if a == "r")
    );
}

#[test]
fn unknown_agents_are_errors() {
    let m = build_model(FrameClass::S5, 2, 2, &[0; 4], &[0, 0]);
    let f = Formula::dk(Group::singleton("c"), Formula::atom("p"));
    assert!(matches!(extension(&m, &f), Err(EvalError::UnknownAgent(_))));
    let sg = Supergroup::new(vec![Group::singleton("a"), Group::singleton("z")]).unwrap();
    assert!(extension(&m, &Formula::cdk(sg, Formula::atom("p"))).is_err());
}
