use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

/// Largest number of worlds a model may have.
pub const MAX_WORLDS: usize = 16;

/// A set of world indices, stored as a bitmask (bit `i` is world `i`).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldSet(u16);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn from_bits(bits: u16) -> Self {
        WorldSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// All worlds `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_WORLDS);
        if n >= 16 {
            WorldSet(u16::MAX)
        } else {
            WorldSet((1u16 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        WorldSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement relative to the worlds `0..n`.
    pub fn complement(self, n: usize) -> Self {
        WorldSet(!self.0 & WorldSet::full(n).0)
    }

    /// Lowest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Renames members: world `i` becomes `perm[i]`.
    pub fn permuted(self, perm: &[usize]) -> Self {
        let mut out = 0u16;
        for i in self.iter() {
            out |= 1 << perm[i];
        }
        WorldSet(out)
    }
}

impl FromIterator<usize> for WorldSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = WorldSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl BitAnd for WorldSet {
    type Output = WorldSet;
    fn bitand(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 & rhs.0)
    }
}

impl BitOr for WorldSet {
    type Output = WorldSet;
    fn bitor(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 | rhs.0)
    }
}

impl BitAndAssign for WorldSet {
    fn bitand_assign(&mut self, rhs: WorldSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for WorldSet {
    fn bitor_assign(&mut self, rhs: WorldSet) {
        self.0 |= rhs.0;
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A binary relation on worlds `0..n`, stored as one bitmask row per world.
/// `row(i).contains(j)` means world `j` is accessible from world `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Relation {
    size: u8,
    rows: [WorldSet; MAX_WORLDS],
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_WORLDS,
            "relation over {n} worlds exceeds {MAX_WORLDS}"
        );
        Relation {
            size: n as u8,
            rows: [WorldSet::EMPTY; MAX_WORLDS],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for i in 0..n {
            r.rows[i] = WorldSet::singleton(i);
        }
        r
    }

    pub fn total(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for i in 0..n {
            r.rows[i] = WorldSet::full(n);
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    /// Builds a relation from raw row masks; bits at or above `rows.len()`
    /// are dropped.
    pub fn from_rows(rows: &[WorldSet]) -> Self {
        let n = rows.len();
        let mut r = Relation::empty(n);
        let full = WorldSet::full(n);
        for (i, row) in rows.iter().enumerate() {
            r.rows[i] = *row & full;
        }
        r
    }

    /// The equivalence relation whose classes are given by `block[i]`.
    pub fn from_blocks(block: &[usize]) -> Self {
        let n = block.len();
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                if block[i] == block[j] {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn rows(&self) -> &[WorldSet] {
        &self.rows[..self.size()]
    }

    pub fn row(&self, i: usize) -> WorldSet {
        self.rows[i]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(
            i < self.size() && j < self.size(),
            "pair ({i},{j}) out of range"
        );
        self.rows[i].insert(j);
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size()).flat_map(move |i| self.rows[i].iter().map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.len()).sum()
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.size, other.size);
        let mut r = *self;
        for i in 0..self.size() {
            r.rows[i] &= other.rows[i];
        }
        r
    }

    pub fn union(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.size, other.size);
        let mut r = *self;
        for i in 0..self.size() {
            r.rows[i] |= other.rows[i];
        }
        r
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        (0..self.size()).all(|i| self.rows[i].is_subset(other.rows[i]))
    }

    pub fn transpose(&self) -> Relation {
        let mut r = Relation::empty(self.size());
        for (i, j) in self.pairs() {
            r.rows[j].insert(i);
        }
        r
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|i| self.rows[i].contains(i))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_transitive(&self) -> bool {
        // every successor's row must be contained in the row
        (0..self.size()).all(|i| {
            self.rows[i]
                .iter()
                .all(|j| self.rows[j].is_subset(self.rows[i]))
        })
    }

    /// `i R j` and `i R k` imply `j R k`.
    pub fn is_euclidean(&self) -> bool {
        (0..self.size()).all(|i| {
            self.rows[i]
                .iter()
                .all(|j| self.rows[i].is_subset(self.rows[j]))
        })
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn reflexive_closure(&self) -> Relation {
        let mut r = *self;
        for i in 0..self.size() {
            r.rows[i].insert(i);
        }
        r
    }

    pub fn symmetric_closure(&self) -> Relation {
        self.union(&self.transpose())
    }

    /// Warshall's algorithm over bitmask rows.
    pub fn transitive_closure(&self) -> Relation {
        let mut r = *self;
        let n = self.size();
        for k in 0..n {
            let via = r.rows[k];
            for i in 0..n {
                if r.rows[i].contains(k) {
                    r.rows[i] |= via;
                }
            }
        }
        r
    }

    pub fn reflexive_transitive_closure(&self) -> Relation {
        self.reflexive_closure().transitive_closure()
    }

    /// Worlds all of whose successors lie in `target`: the extension of a
    /// box modality over this relation.
    pub fn necessity(&self, target: WorldSet) -> WorldSet {
        let mut out = WorldSet::EMPTY;
        for i in 0..self.size() {
            if self.rows[i].is_subset(target) {
                out.insert(i);
            }
        }
        out
    }

    /// Worlds where this relation's successor set is contained in `other`'s.
    pub fn row_inclusion(&self, other: &Relation) -> WorldSet {
        let mut out = WorldSet::EMPTY;
        for i in 0..self.size() {
            if self.rows[i].is_subset(other.rows[i]) {
                out.insert(i);
            }
        }
        out
    }

    /// Renames worlds: world `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Relation {
        let mut r = Relation::empty(self.size());
        for i in 0..self.size() {
            r.rows[perm[i]] = self.rows[i].permuted(perm);
        }
        r
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation<{}>", self.size)?;
        f.debug_set().entries(self.pairs()).finish()
    }
}
