//! The claim list. Ids start with the frame class the claim is checked on.

use super::{ClaimBody, CorpusClaim, Witness};
use crate::kripke::FrameClass::{self, Kt, S4, S5};
use crate::search::{Constraint, Schema};
use crate::syntax::{Formula, Group};

fn f(text: &str) -> Formula {
    text.parse()
        .unwrap_or_else(|e| panic!("bad claim formula {text:?}: {e}"))
}

fn g(agents: &[&str]) -> Group {
    Group::new(agents.iter().copied()).expect("claim groups are valid")
}

fn axiom(text: &str) -> Schema {
    Schema::axiom(text).unwrap_or_else(|e| panic!("bad claim schema {text:?}: {e}"))
}

fn rule(premises: &[&str], conclusion: &str) -> Schema {
    Schema::rule(premises, conclusion)
        .unwrap_or_else(|e| panic!("bad claim rule {conclusion:?}: {e}"))
}

fn pool(n: usize) -> Vec<String> {
    ["a", "b", "c"][..n].iter().map(|s| s.to_string()).collect()
}

fn valid(
    id: &'static str,
    frame: FrameClass,
    description: &'static str,
    schema: Schema,
    agents: usize,
    max_worlds: usize,
) -> CorpusClaim {
    CorpusClaim {
        id,
        description,
        frame,
        body: ClaimBody::Valid {
            schema,
            pool: pool(agents),
            max_worlds,
        },
    }
}

struct W {
    fixture: &'static str,
    world: &'static str,
    groups: &'static [(&'static str, &'static [&'static str])],
    formulas: &'static [(&'static str, &'static str)],
    also: &'static [(&'static str, &'static str)],
}

fn refuted(
    id: &'static str,
    frame: FrameClass,
    description: &'static str,
    schema: Schema,
    agents: usize,
    max_worlds: usize,
    w: W,
) -> CorpusClaim {
    CorpusClaim {
        id,
        description,
        frame,
        body: ClaimBody::Countermodel {
            schema,
            pool: pool(agents),
            max_worlds,
            witness: Witness {
                fixture: w.fixture,
                world: w.world,
                groups: w.groups.iter().map(|(k, a)| (*k, g(a))).collect(),
                formulas: w.formulas.iter().map(|(k, x)| (*k, f(x))).collect(),
                also_holds: w.also.iter().map(|(k, x)| (*k, f(x))).collect(),
            },
        },
    }
}

fn holds(
    id: &'static str,
    frame: FrameClass,
    description: &'static str,
    fixture: &'static str,
    world: Option<&'static str>,
    formula: &str,
) -> CorpusClaim {
    CorpusClaim {
        id,
        description,
        frame,
        body: ClaimBody::Holds {
            fixture,
            world,
            formula: f(formula),
        },
    }
}

fn class(id: &'static str, fixture: &'static str, c: FrameClass) -> CorpusClaim {
    CorpusClaim {
        id,
        description: "frame class of a bundled fixture",
        frame: c,
        body: ClaimBody::Class { fixture, class: c },
    }
}

fn singletons(s: Schema) -> Schema {
    s.with(Constraint::singleton("B"))
        .with(Constraint::singleton("C"))
        .with(Constraint::distinct("B", "C"))
}

/// Every registered claim, in reporting order.
#[allow(clippy::vec_init_then_push)]
pub fn registry() -> Vec<CorpusClaim> {
    let mut v = Vec::new();

    // Fixtures and the facts they are drawn to show.
    v.push(class("FIX-FIG1-CLASS", "fig1", S5));
    v.push(class("FIX-FIG2-CLASS", "fig2", S4));
    v.push(class("FIX-FIG3-CLASS", "fig3", S5));
    v.push(holds(
        "FIX-FIG3-S",
        S5,
        "b strictly above a at s",
        "fig3",
        Some("s"),
        "[{b} < {a}]",
    ));
    v.push(holds(
        "FIX-FIG3-T",
        S5,
        "a and b incomparable at t",
        "fig3",
        Some("t"),
        "[{a} # {b}]",
    ));
    v.push(holds(
        "FIX-FIG3-U",
        S5,
        "a strictly above b at u",
        "fig3",
        Some("u"),
        "[{a} < {b}]",
    ));
    v.push(holds(
        "FIX-FIG3-TEAM",
        S5,
        "adding c makes a and b equivalent at t",
        "fig3",
        Some("t"),
        "[{a,c} == {b,c}]",
    ));
    v.push(holds(
        "FIX-FIG2-S",
        S4,
        "b strictly above a at s",
        "fig2",
        Some("s"),
        "[{b} < {a}]",
    ));
    v.push(holds(
        "FIX-FIG2-U",
        S4,
        "a strictly above b at u",
        "fig2",
        Some("u"),
        "[{a} < {b}]",
    ));
    v.push(holds(
        "FIX-FIG2-DK",
        S4,
        "together a and b rule out two tails at s",
        "fig2",
        Some("s"),
        "D{a,b} ~(T1 & T2)",
    ));
    v.push(holds(
        "FIX-FIG2-CK",
        S4,
        "it is common knowledge that b knows whether both coins show tails",
        "fig2",
        None,
        "C{a,b} (K{b} (T1 & T2) | K{b} ~(T1 & T2))",
    ));
    v.push(holds(
        "FIX-FIG2-NI",
        S4,
        "a does not know that it does not know two tails at s",
        "fig2",
        Some("s"),
        "~K{a} ~K{a} (T1 & T2)",
    ));
    v.push(holds(
        "FIX-FIG2-KS",
        S4,
        "b is above a at s without knowing it",
        "fig2",
        Some("s"),
        "[{b} < {a}] & ~K{b} [{b} <= {a}]",
    ));
    v.push(holds(
        "FIX-FIG1-CMP",
        S5,
        "a and b together beat c everywhere",
        "fig1",
        None,
        "[{a,b} < {c}]",
    ));
    v.push(holds(
        "FIX-FIG1-CK",
        S5,
        "the advantage of a and b over c is common knowledge",
        "fig1",
        None,
        "C{a,b,c} [{a,b} < {c}]",
    ));
    v.push(holds(
        "FIX-FIG1-DK",
        S5,
        "a and b together know both coins at HH",
        "fig1",
        Some("HH"),
        "D{a,b} (H1 & H2)",
    ));

    // Soundness of the base axioms and rules on reflexive frames.
    v.push(valid(
        "KT-PL1",
        Kt,
        "propositional axiom K",
        axiom("phi -> (psi -> phi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-PL2",
        Kt,
        "propositional axiom S",
        axiom("(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))"),
        2,
        3,
    ));
    v.push(valid(
        "KT-PL3",
        Kt,
        "contraposition",
        axiom("(~phi -> ~psi) -> (psi -> phi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-MP",
        Kt,
        "modus ponens preserves validity",
        rule(&["phi", "phi -> psi"], "psi"),
        2,
        3,
    ));
    v.push(valid(
        "KT-NEC",
        Kt,
        "necessitation for distributed knowledge",
        rule(&["phi"], "D{A} phi"),
        2,
        3,
    ));
    v.push(valid(
        "KT-DIST",
        Kt,
        "distribution for distributed knowledge",
        axiom("D{A} (phi -> psi) -> (D{A} phi -> D{A} psi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-VER",
        Kt,
        "distributed knowledge is true",
        axiom("D{A} phi -> phi"),
        2,
        3,
    ));
    v.push(valid(
        "KT-INCL",
        Kt,
        "a group knows at least as much as any subgroup",
        axiom("[{A} <= {B}]").with(Constraint::subset("B", "A")),
        2,
        3,
    ));
    v.push(valid(
        "KT-ADD",
        Kt,
        "comparison is additive on the right",
        axiom("[{A} <= {B}] & [{A} <= {C}] -> [{A} <= {B,C}]"),
        2,
        3,
    ));
    v.push(valid(
        "KT-TRANS",
        Kt,
        "comparison is transitive",
        axiom("[{A} <= {B}] & [{B} <= {C}] -> [{A} <= {C}]"),
        2,
        3,
    ));
    v.push(valid(
        "KT-KT1",
        Kt,
        "knowledge transfers down the comparison",
        axiom("[{A} <= {B}] -> (D{B} phi -> D{A} phi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-CNEC",
        Kt,
        "necessitation for common knowledge",
        rule(&["phi"], "C{A} phi"),
        2,
        3,
    ));
    v.push(valid(
        "KT-CDIST",
        Kt,
        "distribution for common knowledge",
        axiom("C{A} (phi -> psi) -> (C{A} phi -> C{A} psi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-CFIX",
        Kt,
        "common knowledge fixed point",
        axiom("C{A} phi -> phi & K{A} C{A} phi"),
        2,
        3,
    ));
    v.push(valid(
        "KT-CIND",
        Kt,
        "common knowledge induction",
        axiom("C{A} (phi -> K{A} phi) -> (phi -> C{A} phi)"),
        2,
        3,
    ));
    v.push(valid(
        "KT-MON",
        Kt,
        "adding members never loses distributed knowledge",
        axiom("D{B} phi -> D{B,C} phi"),
        2,
        3,
    ));

    // Introspection.
    v.push(valid(
        "S4-PI",
        S4,
        "positive introspection",
        axiom("D{A} phi -> D{A} D{A} phi"),
        2,
        3,
    ));
    v.push(valid(
        "S5-PI",
        S5,
        "positive introspection",
        axiom("D{A} phi -> D{A} D{A} phi"),
        2,
        4,
    ));
    v.push(valid(
        "S5-NI",
        S5,
        "negative introspection",
        axiom("~D{A} phi -> D{A} ~D{A} phi"),
        2,
        4,
    ));
    v.push(valid(
        "S5-KS",
        S5,
        "a group knows whether it is at least as informed",
        axiom("[{A} <= {B}] -> D{A} [{A} <= {B}]"),
        2,
        4,
    ));
    v.push(refuted(
        "S4-NI-FAIL",
        S4,
        "negative introspection fails on preorders",
        axiom("~D{A} phi -> D{A} ~D{A} phi"),
        2,
        4,
        W {
            fixture: "fig2",
            world: "s",
            groups: &[("A", &["a"])],
            formulas: &[("phi", "T1 & T2")],
            also: &[],
        },
    ));
    v.push(refuted(
        "S4-KS-FAIL",
        S4,
        "a better informed group need not know it on preorders",
        axiom("[{B} <= {C}] -> D{B} [{B} <= {C}]"),
        2,
        4,
        W {
            fixture: "fig2",
            world: "s",
            groups: &[("B", &["b"]), ("C", &["a"])],
            formulas: &[],
            also: &[("s", "[{b} <= {a}] & ~K{b} [{b} <= {a}]")],
        },
    ));

    // Derived comparison operators.
    v.push(valid(
        "KT-OBS2A",
        Kt,
        "failure of weak comparison splits into strict reverse or incomparable",
        axiom("~[{B} <= {C}] <-> ([{C} < {B}] | [{B} # {C}])"),
        2,
        3,
    ));
    v.push(valid(
        "KT-OBS2B",
        Kt,
        "failure of strict comparison splits into weak reverse or incomparable",
        axiom("~[{B} < {C}] <-> ([{C} <= {B}] | [{B} # {C}])"),
        2,
        3,
    ));
    v.push(valid(
        "KT-OBS2C",
        Kt,
        "comparable means related one way or the other",
        axiom("~[{B} # {C}] <-> ([{C} <= {B}] | [{B} <= {C}])"),
        2,
        3,
    ));

    // Knowledge of the comparison itself on equivalence frames.
    v.push(valid(
        "S5-P2",
        S5,
        "the better informed group knows it",
        axiom("[{B} <= {C}] -> D{B} [{B} <= {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P3A",
        S5,
        "equivalent groups both know they are equivalent",
        axiom("[{B} == {C}] -> D{B} [{B} == {C}] & D{C} [{B} == {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P3B",
        S5,
        "non-equivalent groups both know they are not equivalent",
        axiom("~[{B} == {C}] -> D{B} ~[{B} == {C}] & D{C} ~[{B} == {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P4",
        S5,
        "the strictly better group knows it",
        axiom("[{B} < {C}] -> D{B} [{B} < {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P5",
        S5,
        "a group that is not at least as informed knows it",
        axiom("~[{C} <= {B}] -> D{C} ~[{C} <= {B}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P6A",
        S5,
        "the joint group knows the weak comparison",
        axiom("[{B} <= {C}] -> D{B,C} [{B} <= {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P6B",
        S5,
        "the joint group knows the equivalence",
        axiom("[{B} == {C}] -> D{B,C} [{B} == {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P6C",
        S5,
        "the joint group knows the strict comparison",
        axiom("[{B} < {C}] -> D{B,C} [{B} < {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-P7",
        S5,
        "the joint group knows the non-equivalence",
        axiom("~[{B} == {C}] -> D{B,C} ~[{B} == {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S4-P8",
        S4,
        "known inferiority of one agent becomes common knowledge of the pair",
        singletons(axiom("K{C} [{B} <= {C}] -> C{B,C} [{B} <= {C}]")),
        2,
        4,
    ));
    v.push(valid(
        "S5-P10",
        S5,
        "equivalence of two agents is common knowledge between them",
        singletons(axiom("[{B} == {C}] -> C{B,C} [{B} == {C}]")),
        3,
        4,
    ));
    v.push(valid(
        "S5-P11",
        S5,
        "non-equivalence of two agents is common knowledge between them",
        singletons(axiom("~[{B} == {C}] -> C{B,C} ~[{B} == {C}]")),
        3,
        4,
    ));

    // Negative results on the three-world fixture.
    v.push(refuted(
        "S5-OBS3",
        S5,
        "incomparability may be known by neither group",
        axiom("[{B} # {C}] -> D{B} [{B} # {C}] | D{C} [{B} # {C}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "t",
            groups: &[("B", &["a"]), ("C", &["b"])],
            formulas: &[],
            also: &[("t", "[{a} # {b}] & ~K{a} [{a} # {b}] & ~K{b} [{a} # {b}]")],
        },
    ));
    v.push(refuted(
        "S5-OBS4A",
        S5,
        "the less informed group may not know it is strictly behind",
        axiom("[{B} < {C}] -> D{C} [{B} < {C}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "u",
            groups: &[("B", &["a"]), ("C", &["b"])],
            formulas: &[],
            also: &[("u", "K{a} [{a} < {b}]")],
        },
    ));
    v.push(refuted(
        "S5-OBS4B",
        S5,
        "the less informed group may not know it is behind",
        axiom("[{B} <= {C}] -> D{C} [{B} <= {C}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "u",
            groups: &[("B", &["a"]), ("C", &["b"])],
            formulas: &[],
            also: &[],
        },
    ));
    v.push(refuted(
        "S5-OBS5",
        S5,
        "a comparison between teams need not survive removing a shared member",
        axiom("[{B,A} <= {C,A}] -> [{B} <= {C}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "t",
            groups: &[("A", &["c"]), ("B", &["a"]), ("C", &["b"])],
            formulas: &[],
            also: &[("t", "[{a,c} == {b,c}]")],
        },
    ));
    v.push(refuted(
        "S5-STRICT-TEAM",
        S5,
        "a strict advantage can vanish when both sides add the same member",
        axiom("[{B} < {C}] -> [{B,A} < {C,A}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "u",
            groups: &[("A", &["b"]), ("B", &["a"]), ("C", &["c"])],
            formulas: &[],
            also: &[("u", "[{a} < {c}]"), ("s", "~[{a,b} < {c,b}]")],
        },
    ));
    v.push(refuted(
        "S5-STRICT-ADD",
        S5,
        "strict comparison is not additive",
        axiom("[{B} < {C}] & [{B} < {E}] -> [{B} < {C,E}]"),
        3,
        4,
        W {
            fixture: "fig3",
            world: "u",
            groups: &[("B", &["a"]), ("C", &["b"]), ("E", &["c"])],
            formulas: &[],
            also: &[("u", "[{a} < {b}] & [{a} < {c}]"), ("u", "[{a} == {b,c}]")],
        },
    ));

    // Teams on reflexive frames.
    v.push(valid(
        "KT-P12A",
        Kt,
        "adding the same members preserves weak comparison",
        axiom("[{B} <= {C}] -> [{B,A} <= {C,A}]"),
        3,
        3,
    ));
    v.push(valid(
        "KT-P12B",
        Kt,
        "adding the same members preserves equivalence",
        axiom("[{B} == {C}] -> [{B,A} == {C,A}]"),
        3,
        3,
    ));
    v.push(valid(
        "KT-P13",
        Kt,
        "strict advantage of teams carries over to comparable cores",
        axiom("[{B,A} < {C,A}] & ~[{B} # {C}] -> [{B} < {C}]"),
        3,
        3,
    ));
    v.push(valid(
        "KT-P14",
        Kt,
        "a strictly better team also beats the other core alone",
        axiom("[{B,A} < {C,A}] -> [{B,A} < {C}]"),
        3,
        3,
    ));
    v.push(valid(
        "KT-PWW",
        Kt,
        "weak comparison against a union splits into its parts",
        axiom("([{B} <= {C}] & [{B} <= {E}]) <-> [{B} <= {C,E}]"),
        3,
        3,
    ));
    v.push(valid(
        "KT-P16",
        Kt,
        "what the weaker group knows about the comparison the stronger knows too",
        axiom("D{C} [{B} <= {C}] -> D{B} [{B} <= {C}]"),
        2,
        3,
    ));

    // Common distributed knowledge.
    v.push(valid(
        "KT-P15",
        Kt,
        "common knowledge, common distributed knowledge, each group, joint group",
        axiom(
            "(C{B,C} phi -> CD[{B};{C}] phi) & (CD[{B};{C}] phi -> D{B} phi & D{C} phi) \
             & (D{B} phi & D{C} phi -> D{B,C} phi)",
        ),
        2,
        3,
    ));
    v.push(valid(
        "S4-CDK16A",
        S4,
        "known inferiority becomes common distributed knowledge",
        axiom("D{C} [{B} <= {C}] -> CD[{B};{C}] [{B} <= {C}]"),
        2,
        4,
    ));
    v.push(valid(
        "S5-CDK16B",
        S5,
        "equivalence is common distributed knowledge",
        axiom("[{B} == {C}] -> CD[{B};{C}] [{B} == {C}]"),
        3,
        4,
    ));
    v.push(valid(
        "S5-CDK16C",
        S5,
        "non-equivalence is common distributed knowledge",
        axiom("~[{B} == {C}] -> CD[{B};{C}] ~[{B} == {C}]"),
        3,
        4,
    ));

    v
}
