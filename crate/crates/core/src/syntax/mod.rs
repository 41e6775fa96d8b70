//! Formulas of the group epistemic language: atoms, Boolean connectives,
//! distributed knowledge `D{..}`, common knowledge `C{..}`, common
//! distributed knowledge `CD[..]`, and group comparison statements
//! `[G <= H]`.
//!
//! Only `Atom`, `Not`, `And`, `Dk`, `Ck`, `Cdk` and `Cmp(Leq, ..)` are core
//! constructs. Everything else is sugar that [`expand_sugar`] removes.

mod lexer;
mod parser;
mod render;
mod sugar;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use parser::parse;
pub use sugar::expand_sugar;

/// Largest number of agents a group (and a model) may mention.
pub const MAX_GROUP_AGENTS: usize = 8;

/// Errors raised while building a [`Group`] or [`Supergroup`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group is empty")]
    Empty,
    #[error("agent '{0}' appears twice in a group")]
    DuplicateAgent(String),
    #[error("group has {0} agents, at most {MAX_GROUP_AGENTS} are supported")]
    TooManyAgents(usize),
    #[error("supergroup is empty")]
    EmptySupergroup,
    #[error("group {0} appears twice in a supergroup")]
    DuplicateGroup(String),
}

/// Lexing and parsing failures. Columns are 1-based character positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unexpected character '{ch}' at column {col}")]
    Lex { col: usize, ch: char },
    #[error("expected {expected} at column {col}, found {found}")]
    Parse {
        col: usize,
        expected: String,
        found: String,
    },
    #[error("empty group at column {col}")]
    EmptyGroup { col: usize },
    #[error("invalid group at column {col}: {source}")]
    Group { col: usize, source: GroupError },
    #[error("K needs exactly one agent, found {count} at column {col}")]
    NotSingleton { col: usize, count: usize },
}

/// A non-empty set of agents, kept sorted so that equal sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Group(Vec<String>);

impl Group {
    pub fn new<I, S>(agents: I) -> Result<Self, GroupError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut list: Vec<String> = agents.into_iter().map(Into::into).collect();
        if list.is_empty() {
            return Err(GroupError::Empty);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GroupError::DuplicateAgent(w[0].clone()));
        }
        if list.len() > MAX_GROUP_AGENTS {
            return Err(GroupError::TooManyAgents(list.len()));
        }
        Ok(Group(list))
    }

    pub fn singleton(agent: impl Into<String>) -> Self {
        Group(vec![agent.into()])
    }

    pub fn agents(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; groups are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, agent: &str) -> bool {
        self.0.binary_search_by(|a| a.as_str().cmp(agent)).is_ok()
    }

    pub fn is_subset(&self, other: &Group) -> bool {
        self.0.iter().all(|a| other.contains(a))
    }

    pub fn is_disjoint(&self, other: &Group) -> bool {
        self.0.iter().all(|a| !other.contains(a))
    }

    pub fn union(&self, other: &Group) -> Result<Group, GroupError> {
        let set: BTreeSet<&String> = self.0.iter().chain(other.0.iter()).collect();
        Group::new(set.into_iter().cloned())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

/// A non-empty set of groups, the index of common distributed knowledge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Supergroup(Vec<Group>);

impl Supergroup {
    /// Builds a supergroup, rejecting repeated groups.
    pub fn new(groups: Vec<Group>) -> Result<Self, GroupError> {
        let mut groups = groups;
        if groups.is_empty() {
            return Err(GroupError::EmptySupergroup);
        }
        groups.sort();
        if let Some(w) = groups.windows(2).find(|w| w[0] == w[1]) {
            return Err(GroupError::DuplicateGroup(w[0].to_string()));
        }
        Ok(Supergroup(groups))
    }

    /// Builds a supergroup, silently merging repeated groups.
    pub fn from_groups(groups: Vec<Group>) -> Result<Self, GroupError> {
        let mut groups = groups;
        groups.sort();
        groups.dedup();
        Supergroup::new(groups)
    }

    pub fn groups(&self) -> &[Group] {
        &self.0
    }

    /// Union of all member groups.
    pub fn union(&self) -> Result<Group, GroupError> {
        let mut it = self.0.iter();
        let first = it.next().ok_or(GroupError::EmptySupergroup)?.clone();
        it.try_fold(first, |acc, g| acc.union(g))
    }
}

impl fmt::Display for Supergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

/// Comparison operators between groups. Only `Leq` is primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmpOp {
    /// `A <= B`: A knows at least as much as B.
    Leq,
    /// `A < B`: A knows strictly more.
    Lt,
    /// `A == B`: equally strong.
    Eqv,
    /// `A # B`: incomparable.
    Incomp,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Leq => "<=",
            CmpOp::Lt => "<",
            CmpOp::Eqv => "==",
            CmpOp::Incomp => "#",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// Distributed knowledge of a group.
    Dk(Group, Box<Formula>),
    /// Common knowledge of a group.
    Ck(Group, Box<Formula>),
    /// Common distributed knowledge of a supergroup.
    Cdk(Supergroup, Box<Formula>),
    Cmp(CmpOp, Group, Group),
    /// Individual knowledge, sugar for `Dk` over a singleton group.
    IndK(String, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Imp(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(other))
    }

    pub fn dk(group: Group, body: Formula) -> Self {
        Formula::Dk(group, Box::new(body))
    }

    pub fn ck(group: Group, body: Formula) -> Self {
        Formula::Ck(group, Box::new(body))
    }

    pub fn cdk(sg: Supergroup, body: Formula) -> Self {
        Formula::Cdk(sg, Box::new(body))
    }

    pub fn cmp(op: CmpOp, lhs: Group, rhs: Group) -> Self {
        Formula::Cmp(op, lhs, rhs)
    }

    pub fn knows(agent: impl Into<String>, body: Formula) -> Self {
        Formula::IndK(agent.into(), Box::new(body))
    }

    /// Conjunction of a non-empty list, folded to the left.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    /// Atom names, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(p) = f {
                out.insert(p.clone());
            }
        });
        out
    }

    /// Every agent mentioned anywhere in the formula, sorted.
    pub fn agents(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Dk(g, _) | Formula::Ck(g, _) => out.extend(g.agents().iter().cloned()),
            Formula::Cdk(sg, _) => {
                for g in sg.groups() {
                    out.extend(g.agents().iter().cloned());
                }
            }
            Formula::Cmp(_, a, b) => {
                out.extend(a.agents().iter().cloned());
                out.extend(b.agents().iter().cloned());
            }
            Formula::IndK(a, _) => {
                out.insert(a.clone());
            }
            _ => {}
        });
        out
    }

    /// True when the formula uses only core constructs.
    pub fn is_core(&self) -> bool {
        let mut core = true;
        self.visit(&mut |f| {
            if matches!(
                f,
                Formula::Or(..)
                    | Formula::Imp(..)
                    | Formula::Iff(..)
                    | Formula::IndK(..)
                    | Formula::Cmp(CmpOp::Lt | CmpOp::Eqv | CmpOp::Incomp, ..)
            ) {
                core = false;
            }
        });
        core
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    /// Pre-order traversal.
    pub fn visit<F: FnMut(&Formula)>(&self, f: &mut F) {
        f(self);
        match self {
            Formula::Atom(_) | Formula::Cmp(..) => {}
            Formula::Not(x)
            | Formula::Dk(_, x)
            | Formula::Ck(_, x)
            | Formula::Cdk(_, x)
            | Formula::IndK(_, x) => x.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Canonical text of a formula; parsing it gives back an equal formula.
pub fn render(f: &Formula) -> String {
    f.to_string()
}
