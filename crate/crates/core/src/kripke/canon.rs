use itertools::Itertools;

use super::{KripkeModel, Relation, WorldSet};

/// Byte encoding of a model's relations and valuation, minimised over all
/// world orderings. Two models (over the same agents and atom pool) have equal
/// canonical forms exactly when they are isomorphic under world renaming.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Encoding under the current world order: the world count, then every
/// relation row (agent by agent) as a big-endian `u16`, then the extension
/// of each pool atom. Byte order equals the order used by model enumeration.
pub fn encode(m: &KripkeModel, atom_pool: &[String]) -> CanonicalForm {
    let n = m.worlds().len();
    let mut out = Vec::with_capacity(1 + 2 * (n * m.agents().len() + atom_pool.len()));
    out.push(n as u8);
    for r in m.relations() {
        push_rows(&mut out, r);
    }
    for atom in atom_pool {
        out.extend_from_slice(&m.extension_of_atom(atom).bits().to_be_bytes());
    }
    CanonicalForm(out)
}

fn push_rows(out: &mut Vec<u8>, r: &Relation) {
    for row in r.rows() {
        out.extend_from_slice(&row.bits().to_be_bytes());
    }
}

/// Minimum encoding over all `n!` world permutations.
///
/// Intended for the small models produced by bounded search; the cost grows
/// factorially with the number of worlds.
pub fn canonicalize(m: &KripkeModel, atom_pool: &[String]) -> CanonicalForm {
    let n = m.worlds().len();
    let vals: Vec<WorldSet> = atom_pool.iter().map(|a| m.extension_of_atom(a)).collect();
    let mut best: Option<Vec<u8>> = None;
    for perm in (0..n).permutations(n) {
        let mut out = Vec::with_capacity(1 + 2 * (n * m.agents().len() + vals.len()));
        out.push(n as u8);
        for r in m.relations() {
            push_rows(&mut out, &r.permuted(&perm));
        }
        for v in &vals {
            out.extend_from_slice(&v.permuted(&perm).bits().to_be_bytes());
        }
        if best.as_ref().is_none_or(|b| out < *b) {
            best = Some(out);
        }
    }
    CanonicalForm(best.expect("a model has at least one world"))
}
