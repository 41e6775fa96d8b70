use super::{CmpOp, Formula, Group};

fn leq(a: &Group, b: &Group) -> Formula {
    Formula::cmp(CmpOp::Leq, a.clone(), b.clone())
}

/// Rewrites every abbreviation in terms of the core constructs.
///
/// Disjunction, implication and the biconditional become `~`/`&`
/// combinations; `K{a}` becomes `D{a}`; the derived comparisons become
/// Boolean combinations of `<=`.
pub fn expand_sugar(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Not(x) => expand_sugar(x).not(),
        Formula::And(a, b) => expand_sugar(a).and(expand_sugar(b)),
        Formula::Or(a, b) => expand_sugar(a).not().and(expand_sugar(b).not()).not(),
        Formula::Imp(a, b) => expand_sugar(a).and(expand_sugar(b).not()).not(),
        Formula::Iff(a, b) => {
            let (a, b) = (expand_sugar(a), expand_sugar(b));
            let fwd = a.clone().and(b.clone().not()).not();
            let bwd = b.and(a.not()).not();
            fwd.and(bwd)
        }
        Formula::Dk(g, x) => Formula::dk(g.clone(), expand_sugar(x)),
        Formula::Ck(g, x) => Formula::ck(g.clone(), expand_sugar(x)),
        Formula::Cdk(sg, x) => Formula::cdk(sg.clone(), expand_sugar(x)),
        Formula::IndK(a, x) => Formula::dk(Group::singleton(a.clone()), expand_sugar(x)),
        Formula::Cmp(op, a, b) => match op {
            CmpOp::Leq => f.clone(),
            CmpOp::Lt => leq(a, b).and(leq(b, a).not()),
            CmpOp::Eqv => leq(a, b).and(leq(b, a)),
            CmpOp::Incomp => leq(a, b).not().and(leq(b, a).not()),
        },
    }
}
