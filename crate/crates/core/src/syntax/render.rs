use std::fmt;

use super::Formula;

const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => IFF,
        Formula::Imp(..) => IMP,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => UNARY,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        write_formula(f, out)?;
        out.write_str(")")
    } else {
        write_formula(f, out)
    }
}

fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Atom(p) => out.write_str(p),
        Formula::Not(x) => {
            out.write_str("~")?;
            write_at(x, UNARY, out)
        }
        Formula::And(a, b) => binary(a, " & ", b, AND, AND + 1, out),
        Formula::Or(a, b) => binary(a, " | ", b, OR, OR + 1, out),
        Formula::Imp(a, b) => binary(a, " -> ", b, IMP + 1, IMP, out),
        Formula::Iff(a, b) => binary(a, " <-> ", b, IFF, IFF + 1, out),
        Formula::Dk(g, x) => {
            write!(out, "D{g} ")?;
            write_at(x, UNARY, out)
        }
        Formula::Ck(g, x) => {
            write!(out, "C{g} ")?;
            write_at(x, UNARY, out)
        }
        Formula::Cdk(sg, x) => {
            write!(out, "CD{sg} ")?;
            write_at(x, UNARY, out)
        }
        Formula::IndK(a, x) => {
            write!(out, "K{{{a}}} ")?;
            write_at(x, UNARY, out)
        }
        Formula::Cmp(op, a, b) => write!(out, "[{a} {} {b}]", op.symbol()),
    }
}

fn binary(
    a: &Formula,
    sep: &str,
    b: &Formula,
    left_min: u8,
    right_min: u8,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write_at(a, left_min, out)?;
    out.write_str(sep)?;
    write_at(b, right_min, out)
}

/// Canonical ASCII rendering; re-parses to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f)
    }
}

#[cfg(test)]
mod tests {
    use crate::syntax::{parse, CmpOp, Formula, Group, Supergroup};

    fn g(agents: &[&str]) -> Group {
        Group::new(agents.iter().copied()).unwrap()
    }

    #[test]
    fn comparison() {
        let f = Formula::cmp(CmpOp::Leq, g(&["a"]), g(&["b"]));
        assert_eq!(f.to_string(), "[{a} <= {b}]");
    }

    #[test]
    fn conjunction() {
        assert_eq!(
            Formula::atom("p").and(Formula::atom("q")).to_string(),
            "p & q"
        );
    }

    #[test]
    fn common_distributed() {
        let sg = Supergroup::new(vec![g(&["a", "b"]), g(&["c"])]).unwrap();
        assert_eq!(
            Formula::cdk(sg, Formula::atom("p")).to_string(),
            "CD[{a,b};{c}] p"
        );
    }

    #[test]
    fn parenthesises_only_when_needed() {
        for text in [
            "(p -> q) -> r",
            "p -> q -> r",
            "p & (q | r)",
            "~(p & q)",
            "D{a} (p -> q)",
            "p <-> q <-> r",
            "p <-> (q <-> r)",
            "~~p",
            "~K{a} ~K{a} (T1 & T2)",
        ] {
            assert_eq!(parse(text).unwrap().to_string(), text);
        }
    }
}
