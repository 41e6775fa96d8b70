//! Index space of all models with a fixed world count.
//!
//! A model is addressed by a mixed-radix number whose digits are, from most
//! to least significant, one relation index per agent and then the
//! valuation. Each agent's relation list is sorted by its rows read as a
//! sequence of `u16` masks and the valuation index puts the first atom's
//! mask in the high bits, so increasing index order coincides with the byte
//! order of [`crate::kripke::encode`].

use itertools::Itertools;

use super::{SearchError, MAX_SEARCH_AGENTS, MAX_SEARCH_ATOMS};
use crate::kripke::{FrameClass, Relation, Structure, WorldSet};

/// Compact model used while scanning; world `i` is named `w{i}`.
#[derive(Debug, Clone, Copy)]
pub struct RawModel {
    pub n: usize,
    pub rels: [Relation; MAX_SEARCH_AGENTS],
    pub vals: [WorldSet; MAX_SEARCH_ATOMS],
}

impl RawModel {
    pub fn new(n: usize) -> Self {
        RawModel {
            n,
            rels: [Relation::empty(n); MAX_SEARCH_AGENTS],
            vals: [WorldSet::EMPTY; MAX_SEARCH_ATOMS],
        }
    }
}

impl Structure for RawModel {
    fn world_count(&self) -> usize {
        self.n
    }

    fn agent_relation(&self, agent: usize) -> &Relation {
        &self.rels[agent]
    }

    fn atom_extension(&self, atom: usize) -> WorldSet {
        self.vals[atom]
    }
}

fn cmp_rows(x: &Relation, y: &Relation) -> std::cmp::Ordering {
    x.rows()
        .iter()
        .map(|r| r.bits())
        .cmp(y.rows().iter().map(|r| r.bits()))
}

fn reflexive_relations(n: usize) -> Vec<Relation> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    (0u64..1 << off.len())
        .map(|bits| {
            let mut r = Relation::identity(n);
            for (b, &(i, j)) in off.iter().enumerate() {
                if bits >> b & 1 == 1 {
                    r.insert(i, j);
                }
            }
            r
        })
        .collect()
}

/// Restricted growth strings of length `n`, one per set partition.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            cur.push(b);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// Every relation an agent may have in a frame of class `frame` over `n`
/// worlds, in enumeration order.
pub fn frame_relations(frame: FrameClass, n: usize) -> Vec<Relation> {
    let mut rels = match frame {
        FrameClass::S5 => partitions(n)
            .iter()
            .map(|b| Relation::from_blocks(b))
            .collect(),
        FrameClass::S4 => {
            let mut v = reflexive_relations(n);
            v.retain(Relation::is_transitive);
            v
        }
        FrameClass::Kt => reflexive_relations(n),
        FrameClass::None => unreachable!("bounds reject frame NONE"),
    };
    rels.sort_by(cmp_rows);
    rels
}

pub struct Space {
    pub n: usize,
    agents: usize,
    atoms: usize,
    rels: Vec<Relation>,
    /// Permutations other than the identity, for the canonicity test.
    perms: Vec<Vec<usize>>,
    pub total: u64,
}

impl Space {
    pub fn new(
        frame: FrameClass,
        n: usize,
        agents: usize,
        atoms: usize,
    ) -> Result<Self, SearchError> {
        let rels = frame_relations(frame, n);
        let too_large = || SearchError::SpaceTooLarge { worlds: n };
        let mut total: u64 = 1;
        for _ in 0..agents {
            total = total.checked_mul(rels.len() as u64).ok_or_else(too_large)?;
        }
        let val_bits = u32::try_from(n * atoms).map_err(|_| too_large())?;
        total = 1u64
            .checked_shl(val_bits)
            .filter(|_| val_bits < 64)
            .and_then(|v| total.checked_mul(v))
            .ok_or_else(too_large)?;
        let perms = (0..n)
            .permutations(n)
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .collect();
        Ok(Space {
            n,
            agents,
            atoms,
            rels,
            perms,
            total,
        })
    }

    pub fn decode(&self, mut idx: u64, out: &mut RawModel) {
        out.n = self.n;
        let n = self.n;
        let mask = (1u64 << n) - 1;
        for a in (0..self.atoms).rev() {
            out.vals[a] = WorldSet::from_bits((idx & mask) as u16);
            idx >>= n;
        }
        let r = self.rels.len() as u64;
        for k in (0..self.agents).rev() {
            out.rels[k] = self.rels[(idx % r) as usize];
            idx /= r;
        }
    }

    /// True when no world renaming yields a lexicographically smaller
    /// encoding, i.e. the model is the representative of its class.
    pub fn is_canonical(&self, m: &RawModel) -> bool {
        use std::cmp::Ordering::*;
        'perm: for p in &self.perms {
            for k in 0..self.agents {
                match cmp_rows(&m.rels[k].permuted(p), &m.rels[k]) {
                    Less => return false,
                    Greater => continue 'perm,
                    Equal => {}
                }
            }
            for a in 0..self.atoms {
                match m.vals[a].permuted(p).bits().cmp(&m.vals[a].bits()) {
                    Less => return false,
                    Greater => continue 'perm,
                    Equal => {}
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let bell = [1, 1, 2, 5, 15, 52];
        let preorders = [1, 1, 4, 29, 355, 6942];
        for n in 1..=5 {
            assert_eq!(frame_relations(FrameClass::S5, n).len(), bell[n]);
            assert_eq!(frame_relations(FrameClass::S4, n).len(), preorders[n]);
        }
        assert_eq!(frame_relations(FrameClass::Kt, 3).len(), 64);
    }

    #[test]
    fn lists_are_strictly_sorted() {
        for frame in [FrameClass::Kt, FrameClass::S4, FrameClass::S5] {
            let rels = frame_relations(frame, 3);
            assert!(rels.windows(2).all(|w| cmp_rows(&w[0], &w[1]).is_lt()));
        }
    }

    #[test]
    fn decode_covers_every_digit() {
        let s = Space::new(FrameClass::S5, 2, 2, 1).unwrap();
        assert_eq!(s.total, 2 * 2 * 4);
        let mut m = RawModel::new(2);
        s.decode(s.total - 1, &mut m);
        assert_eq!(m.rels[0], Relation::total(2));
        assert_eq!(m.rels[1], Relation::total(2));
        assert_eq!(m.vals[0], WorldSet::full(2));
        s.decode(1, &mut m);
        assert_eq!(m.rels[0], m.rels[1]);
        assert_eq!(m.vals[0], WorldSet::singleton(0));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            Space::new(FrameClass::Kt, 5, 4, 3),
            Err(SearchError::SpaceTooLarge { worlds: 5 })
        ));
    }
}
