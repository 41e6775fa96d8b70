//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;

use epicomp::kripke::{apply_closure, Closure, FrameClass, KripkeModel, Relation, WorldSet};
use epicomp::syntax::{CmpOp, Formula, Group, Supergroup};

pub const AGENTS: [&str; 3] = ["a", "b", "c"];
pub const ATOMS: [&str; 2] = ["p", "q"];

pub fn group_of_mask(mask: u8, agents: usize) -> Group {
    let names: Vec<&str> = (0..agents)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| AGENTS[i])
        .collect();
    Group::new(names).unwrap()
}

pub fn all_groups(agents: usize) -> Vec<Group> {
    (1u8..1 << agents)
        .map(|m| group_of_mask(m, agents))
        .collect()
}

pub fn closure_for(frame: FrameClass) -> Closure {
    match frame {
        FrameClass::Kt => Closure {
            reflexive: true,
            ..Closure::default()
        },
        FrameClass::S4 => Closure {
            reflexive: true,
            transitive: true,
            ..Closure::default()
        },
        FrameClass::S5 => Closure::EQUIVALENCE,
        FrameClass::None => Closure::default(),
    }
}

/// Builds a model from raw bit patterns and closes it into `frame`.
pub fn build_model(
    frame: FrameClass,
    n: usize,
    agents: usize,
    rel_bits: &[u16],
    val_bits: &[u16],
) -> KripkeModel {
    let rels = (0..agents)
        .map(|k| {
            let rows: Vec<WorldSet> = (0..n)
                .map(|i| WorldSet::from_bits((rel_bits[k * n + i]) & ((1 << n) - 1)))
                .collect();
            Relation::from_rows(&rows)
        })
        .collect();
    let vals = val_bits
        .iter()
        .map(|b| WorldSet::from_bits(b & ((1 << n) - 1)))
        .collect();
    let m = KripkeModel::new(
        (0..n).map(|i| format!("w{i}")).collect(),
        AGENTS[..agents].iter().map(|s| s.to_string()).collect(),
        ATOMS.iter().map(|s| s.to_string()).collect(),
        rels,
        vals,
    )
    .unwrap();
    apply_closure(&m, closure_for(frame))
}

pub fn arb_model(
    frame: FrameClass,
    max_worlds: usize,
    agents: usize,
) -> impl Strategy<Value = KripkeModel> {
    (1..=max_worlds).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<u16>(), agents * n),
            proptest::collection::vec(any::<u16>(), ATOMS.len()),
        )
            .prop_map(move |(r, v)| build_model(frame, n, agents, &r, &v))
    })
}

/// A random model with 1..=`max_worlds` worlds and 1..=`max_agents` agents.
pub fn random_model<R: Rng>(
    rng: &mut R,
    frame: FrameClass,
    max_worlds: usize,
    max_agents: usize,
) -> KripkeModel {
    let n = rng.gen_range(1..=max_worlds);
    let agents = rng.gen_range(1..=max_agents);
    let density: f64 = rng.gen_range(0.1..0.7);
    let rel: Vec<u16> = (0..agents * n)
        .map(|_| {
            (0..n)
                .filter(|_| rng.gen_bool(density))
                .fold(0u16, |acc, j| acc | 1 << j)
        })
        .collect();
    let val: Vec<u16> = (0..ATOMS.len()).map(|_| rng.gen()).collect();
    build_model(frame, n, agents, &rel, &val)
}

pub fn arb_group(agents: usize) -> impl Strategy<Value = Group> {
    (1u8..1 << agents).prop_map(move |m| group_of_mask(m, agents))
}

pub fn arb_supergroup(agents: usize) -> impl Strategy<Value = Supergroup> {
    proptest::collection::vec(arb_group(agents), 1..=3)
        .prop_map(|gs| Supergroup::from_groups(gs).unwrap())
}

pub fn arb_cmp_op() -> impl Strategy<Value = CmpOp> {
    prop_oneof![
        Just(CmpOp::Leq),
        Just(CmpOp::Lt),
        Just(CmpOp::Eqv),
        Just(CmpOp::Incomp)
    ]
}

/// Formulas over atoms p, q and the first `agents` agents, sugar included.
pub fn arb_formula(agents: usize) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        3 => prop::sample::select(ATOMS.to_vec()).prop_map(Formula::atom),
        1 => (arb_cmp_op(), arb_group(agents), arb_group(agents)).prop_map(|(o, a, b)| Formula::cmp(o, a, b)),
    ];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.iff(b)),
            (arb_group(agents), inner.clone()).prop_map(|(g, x)| Formula::dk(g, x)),
            (arb_group(agents), inner.clone()).prop_map(|(g, x)| Formula::ck(g, x)),
            (arb_supergroup(agents), inner.clone()).prop_map(|(s, x)| Formula::cdk(s, x)),
            (prop::sample::select(AGENTS[..agents].to_vec()), inner)
                .prop_map(|(a, x)| Formula::knows(a, x)),
        ]
    })
}

fn mask(m: &KripkeModel, g: &Group) -> Vec<usize> {
    g.agents()
        .iter()
        .map(|a| m.agent_index(a).unwrap())
        .collect()
}

/// `w` reaches `v` by a joint step of group `g`, checked edge by edge.
pub fn joint_step(m: &KripkeModel, g: &Group, w: usize, v: usize) -> bool {
    mask(m, g)
        .into_iter()
        .all(|k| m.relations()[k].contains(w, v))
}

/// Worlds reachable from `w` in at most `max_len` steps, where one step is
/// any of the `step` predicates.
pub fn reachable(
    n: usize,
    w: usize,
    max_len: usize,
    step: &dyn Fn(usize, usize) -> bool,
) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[w] = true;
    let mut frontier = vec![w];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &x in &frontier {
            for (y, s) in seen.iter_mut().enumerate() {
                if !*s && step(x, y) {
                    *s = true;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Direct, uncompiled evaluation of `f` at `w`. Atoms missing from the
/// model are false.
pub fn oracle(m: &KripkeModel, f: &Formula, w: usize) -> bool {
    let n = m.worlds().len();
    let all_succ = |step: &dyn Fn(usize, usize) -> bool, body: &Formula| {
        reachable(n, w, n, step)
            .iter()
            .enumerate()
            .all(|(v, &r)| !r || oracle(m, body, v))
    };
    match f {
        Formula::Atom(p) => m.extension_of_atom(p).contains(w),
        Formula::Not(x) => !oracle(m, x, w),
        Formula::And(a, b) => oracle(m, a, w) && oracle(m, b, w),
        Formula::Or(a, b) => oracle(m, a, w) || oracle(m, b, w),
        Formula::Imp(a, b) => !oracle(m, a, w) || oracle(m, b, w),
        Formula::Iff(a, b) => oracle(m, a, w) == oracle(m, b, w),
        Formula::Dk(g, x) => (0..n).all(|v| !joint_step(m, g, w, v) || oracle(m, x, v)),
        Formula::IndK(a, x) => {
            let g = Group::singleton(a.clone());
            (0..n).all(|v| !joint_step(m, &g, w, v) || oracle(m, x, v))
        }
        Formula::Ck(g, x) => {
            let singles: Vec<Group> = g
                .agents()
                .iter()
                .map(|a| Group::singleton(a.clone()))
                .collect();
            all_succ(&|s, t| singles.iter().any(|h| joint_step(m, h, s, t)), x)
        }
        Formula::Cdk(sg, x) => all_succ(
            &|s, t| sg.groups().iter().any(|h| joint_step(m, h, s, t)),
            x,
        ),
        Formula::Cmp(op, a, b) => {
            let leq = |x: &Group, y: &Group| {
                (0..n).all(|v| !joint_step(m, x, w, v) || joint_step(m, y, w, v))
            };
            match op {
                CmpOp::Leq => leq(a, b),
                CmpOp::Lt => leq(a, b) && !leq(b, a),
                CmpOp::Eqv => leq(a, b) && leq(b, a),
                CmpOp::Incomp => !leq(a, b) && !leq(b, a),
            }
        }
    }
}

pub fn oracle_extension(m: &KripkeModel, f: &Formula) -> WorldSet {
    (0..m.worlds().len()).filter(|&w| oracle(m, f, w)).collect()
}
