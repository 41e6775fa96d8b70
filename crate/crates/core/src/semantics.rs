//! Satisfaction of formulas at worlds of a Kripke model.
//!
//! A formula is compiled once against an agent list and an atom list into a
//! post-order program. Every group modality refers to a relation slot, so a
//! relation mentioned several times (typical of comparison-heavy formulas) is
//! computed once per evaluation.

use thiserror::Error;

use crate::kripke::{
    cdk_of_masks, common_of_mask, joint_of_mask, KripkeModel, Relation, Structure, WorldSet,
};
use crate::syntax::{CmpOp, Formula, Group};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown world '{0}'")]
    UnknownWorld(String),
    #[error("unknown agent '{0}'")]
    UnknownAgent(String),
    #[error("atom '{0}' is not declared by the model")]
    UndeclaredAtom(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Reject atoms the model does not declare instead of reading them as
    /// false everywhere.
    pub strict_atoms: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Slot {
    Joint(u8),
    Common(u8),
    Cdk(Vec<u8>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Atom(usize),
    False,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Box(usize),
    Cmp(CmpOp, usize, usize),
}

/// Reusable buffers for [`Evaluator::extension_in`].
#[derive(Debug, Default)]
pub struct Scratch {
    rels: Vec<Relation>,
    stack: Vec<WorldSet>,
}

/// A formula compiled against fixed agent and atom indices.
#[derive(Debug, Clone)]
pub struct Evaluator {
    ops: Vec<Op>,
    slots: Vec<Slot>,
}

struct Compiler<'a> {
    agents: &'a [String],
    atoms: &'a [String],
    strict_atoms: bool,
    ops: Vec<Op>,
    slots: Vec<Slot>,
}

impl Compiler<'_> {
    fn mask(&self, g: &Group) -> Result<u8, EvalError> {
        g.agents().iter().try_fold(0u8, |m, a| {
            let k = self
                .agents
                .iter()
                .position(|x| x == a)
                .ok_or_else(|| EvalError::UnknownAgent(a.clone()))?;
            Ok(m | 1 << k)
        })
    }

    fn slot(&mut self, s: Slot) -> usize {
        if let Some(i) = self.slots.iter().position(|x| *x == s) {
            return i;
        }
        self.slots.push(s);
        self.slots.len() - 1
    }

    fn emit(&mut self, f: &Formula) -> Result<(), EvalError> {
        match f {
            Formula::Atom(p) => {
                let op = match self.atoms.iter().position(|a| a == p) {
                    Some(i) => Op::Atom(i),
                    None if self.strict_atoms => return Err(EvalError::UndeclaredAtom(p.clone())),
                    None => Op::False,
                };
                self.ops.push(op);
            }
            Formula::Not(x) => {
                self.emit(x)?;
                self.ops.push(Op::Not);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                self.emit(a)?;
                self.emit(b)?;
                self.ops.push(match f {
                    Formula::And(..) => Op::And,
                    Formula::Or(..) => Op::Or,
                    Formula::Imp(..) => Op::Imp,
                    _ => Op::Iff,
                });
            }
            Formula::Dk(g, x) => {
                let s = Slot::Joint(self.mask(g)?);
                self.modal(s, x)?;
            }
            Formula::IndK(a, x) => {
                let s = Slot::Joint(self.mask(&Group::singleton(a.clone()))?);
                self.modal(s, x)?;
            }
            Formula::Ck(g, x) => {
                let s = Slot::Common(self.mask(g)?);
                self.modal(s, x)?;
            }
            Formula::Cdk(sg, x) => {
                let mut masks = sg
                    .groups()
                    .iter()
                    .map(|g| self.mask(g))
                    .collect::<Result<Vec<_>, _>>()?;
                masks.sort_unstable();
                masks.dedup();
                self.modal(Slot::Cdk(masks), x)?;
            }
            Formula::Cmp(op, a, b) => {
                let sa = Slot::Joint(self.mask(a)?);
                let sb = Slot::Joint(self.mask(b)?);
                let (sa, sb) = (self.slot(sa), self.slot(sb));
                self.ops.push(Op::Cmp(*op, sa, sb));
            }
        }
        Ok(())
    }

    fn modal(&mut self, s: Slot, body: &Formula) -> Result<(), EvalError> {
        self.emit(body)?;
        let i = self.slot(s);
        self.ops.push(Op::Box(i));
        Ok(())
    }
}

impl Evaluator {
    /// Resolves agent and atom names to positions in `agents` and `atoms`.
    pub fn compile(
        f: &Formula,
        agents: &[String],
        atoms: &[String],
        opts: EvalOptions,
    ) -> Result<Self, EvalError> {
        let mut c = Compiler {
            agents,
            atoms,
            strict_atoms: opts.strict_atoms,
            ops: Vec::new(),
            slots: Vec::new(),
        };
        c.emit(f)?;
        Ok(Evaluator {
            ops: c.ops,
            slots: c.slots,
        })
    }

    pub fn for_model(f: &Formula, m: &KripkeModel, opts: EvalOptions) -> Result<Self, EvalError> {
        Evaluator::compile(f, m.agents(), m.atoms(), opts)
    }

    /// Worlds of `s` where the formula holds.
    pub fn extension<S: Structure + ?Sized>(&self, s: &S) -> WorldSet {
        self.extension_in(s, &mut Scratch::default())
    }

    pub fn extension_in<S: Structure + ?Sized>(&self, s: &S, scratch: &mut Scratch) -> WorldSet {
        let n = s.world_count();
        let full = WorldSet::full(n);
        scratch.rels.clear();
        for slot in &self.slots {
            scratch.rels.push(match slot {
                Slot::Joint(m) => joint_of_mask(s, *m),
                Slot::Common(m) => common_of_mask(s, *m),
                Slot::Cdk(ms) => cdk_of_masks(s, ms),
            });
        }
        let st = &mut scratch.stack;
        st.clear();
        for op in &self.ops {
            let v = match *op {
                Op::Atom(i) => s.atom_extension(i),
                Op::False => WorldSet::EMPTY,
                Op::Not => st.pop().unwrap().complement(n),
                Op::Box(i) => scratch.rels[i].necessity(st.pop().unwrap()),
                Op::Cmp(op, a, b) => {
                    let (ra, rb) = (&scratch.rels[a], &scratch.rels[b]);
                    let ab = ra.row_inclusion(rb);
                    let ba = rb.row_inclusion(ra);
                    match op {
                        CmpOp::Leq => ab,
                        CmpOp::Lt => ab & ba.complement(n),
                        CmpOp::Eqv => ab & ba,
                        CmpOp::Incomp => ab.complement(n) & ba.complement(n),
                    }
                }
                Op::And | Op::Or | Op::Imp | Op::Iff => {
                    let r = st.pop().unwrap();
                    let l = st.pop().unwrap();
                    match *op {
                        Op::And => l & r,
                        Op::Or => l | r,
                        Op::Imp => l.complement(n) | r,
                        _ => WorldSet::from_bits(!(l.bits() ^ r.bits()) & full.bits()),
                    }
                }
            };
            st.push(v);
        }
        st.pop().expect("compiled program leaves one value")
    }
}

pub fn extension_with(
    m: &KripkeModel,
    f: &Formula,
    opts: EvalOptions,
) -> Result<WorldSet, EvalError> {
    Ok(Evaluator::for_model(f, m, opts)?.extension(m))
}

pub fn satisfies_with(
    m: &KripkeModel,
    world: &str,
    f: &Formula,
    opts: EvalOptions,
) -> Result<bool, EvalError> {
    let w = m
        .world_index(world)
        .map_err(|_| EvalError::UnknownWorld(world.to_string()))?;
    Ok(extension_with(m, f, opts)?.contains(w))
}

pub fn valid_in_model_with(
    m: &KripkeModel,
    f: &Formula,
    opts: EvalOptions,
) -> Result<bool, EvalError> {
    Ok(extension_with(m, f, opts)? == WorldSet::full(m.worlds().len()))
}

/// Set of worlds where `f` holds. Undeclared atoms are false everywhere.
pub fn extension(m: &KripkeModel, f: &Formula) -> Result<WorldSet, EvalError> {
    extension_with(m, f, EvalOptions::default())
}

pub fn satisfies(m: &KripkeModel, world: &str, f: &Formula) -> Result<bool, EvalError> {
    satisfies_with(m, world, f, EvalOptions::default())
}

/// True when `f` holds at every world of `m`.
pub fn valid_in_model(m: &KripkeModel, f: &Formula) -> Result<bool, EvalError> {
    valid_in_model_with(m, f, EvalOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::load_model;
    use crate::syntax::parse;

    const CHAIN: &str = "\
agents: a b
worlds: x y z
atoms: p
closure: reflexive
rel a: (x,y)
rel b: (y,z)
val p: x y
";

    fn ext(m: &KripkeModel, f: &str) -> Vec<String> {
        let set = extension(m, &parse(f).unwrap()).unwrap();
        m.world_names(set).into_iter().map(String::from).collect()
    }

    #[test]
    fn boolean_and_box() {
        let m = load_model(CHAIN).unwrap();
        assert_eq!(ext(&m, "p"), ["x", "y"]);
        assert_eq!(ext(&m, "~p | p"), ["x", "y", "z"]);
        assert_eq!(ext(&m, "D{a} p"), ["x", "y"]);
        assert_eq!(ext(&m, "D{b} p"), ["x"]);
        assert!(ext(&m, "C{a,b} p").is_empty());
        assert_eq!(ext(&m, "p <-> D{b} p"), ["x", "z"]);
        assert_eq!(ext(&m, "p -> D{b} p"), ["x", "z"]);
    }

    #[test]
    fn comparison_rows() {
        let m = load_model(CHAIN).unwrap();
        // rows: a = {x,y},{y},{z}; b = {x},{y,z},{z}
        assert_eq!(ext(&m, "[{a} <= {b}]"), ["y", "z"]);
        assert_eq!(ext(&m, "[{b} < {a}]"), ["x"]);
        assert_eq!(ext(&m, "[{a} == {b}]"), ["z"]);
        assert_eq!(ext(&m, "[{a} # {b}]"), Vec::<String>::new());
        assert_eq!(ext(&m, "[{a,b} <= {a}]"), ["x", "y", "z"]);
    }

    #[test]
    fn undeclared_atoms() {
        let m = load_model(CHAIN).unwrap();
        assert_eq!(ext(&m, "q"), Vec::<String>::new());
        let strict = EvalOptions { strict_atoms: true };
        assert_eq!(
            satisfies_with(&m, "x", &parse("q").unwrap(), strict),
            Err(EvalError::UndeclaredAtom("q".into()))
        );
    }

    #[test]
    fn errors() {
        let m = load_model(CHAIN).unwrap();
        assert_eq!(
            satisfies(&m, "w", &parse("p").unwrap()),
            Err(EvalError::UnknownWorld("w".into()))
        );
        assert_eq!(
            satisfies(&m, "x", &parse("D{c} p").unwrap()),
            Err(EvalError::UnknownAgent("c".into()))
        );
    }

    #[test]
    fn slots_are_shared() {
        let agents = vec!["a".to_string(), "b".to_string()];
        let f = parse("[{a} <= {b}] & D{a} [{b} <= {a}] & C{a} D{a,b} p").unwrap();
        let e = Evaluator::compile(&f, &agents, &[], EvalOptions::default()).unwrap();
        assert_eq!(e.slots.len(), 4);
    }
}
