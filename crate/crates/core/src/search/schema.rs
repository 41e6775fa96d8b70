//! Axiom and rule schemas with group and formula placeholders.
//!
//! Inside a schema the agent names `A`, `B`, `C` and `E` stand for groups
//! and the atoms `phi`, `psi` and `chi` stand for formulas. A group such as
//! `{B,A}` denotes the union of the bound groups. `K{A} x`, with `A` a
//! placeholder, denotes the conjunction of `K{m} x` over the members `m` of
//! `A`, which is how "every member knows" is written.

use std::collections::BTreeMap;
use std::fmt;

use super::{
    check_rule_with, Executor, SearchBounds, SearchError, SearchOutcome, AGENT_NAMES,
    MAX_SEARCH_ATOMS,
};
use crate::syntax::{parse, Formula, Group, Supergroup};

pub const GROUP_PLACEHOLDERS: [&str; 4] = ["A", "B", "C", "E"];
pub const FORMULA_PLACEHOLDERS: [&str; 3] = ["phi", "psi", "chi"];
/// Formulas substituted for each formula placeholder.
pub const FORMULA_POOL: [&str; 4] = ["p", "~p", "p & q", "D{a} p"];

/// Restriction on the bindings of group placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Subset(String, String),
    Singleton(String),
    Distinct(String, String),
    Disjoint(String, String),
}

impl Constraint {
    pub fn subset(x: &str, y: &str) -> Self {
        Constraint::Subset(x.into(), y.into())
    }

    pub fn singleton(x: &str) -> Self {
        Constraint::Singleton(x.into())
    }

    pub fn distinct(x: &str, y: &str) -> Self {
        Constraint::Distinct(x.into(), y.into())
    }

    pub fn disjoint(x: &str, y: &str) -> Self {
        Constraint::Disjoint(x.into(), y.into())
    }

    fn holds(&self, g: &BTreeMap<String, Group>) -> bool {
        match self {
            Constraint::Subset(x, y) => g[x].is_subset(&g[y]),
            Constraint::Singleton(x) => g[x].len() == 1,
            Constraint::Distinct(x, y) => g[x] != g[y],
            Constraint::Disjoint(x, y) => g[x].is_disjoint(&g[y]),
        }
    }

    fn names(&self) -> Vec<&str> {
        match self {
            Constraint::Singleton(x) => vec![x],
            Constraint::Subset(x, y) | Constraint::Distinct(x, y) | Constraint::Disjoint(x, y) => {
                vec![x, y]
            }
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Subset(x, y) => write!(f, "{x} ⊆ {y}"),
            Constraint::Singleton(x) => write!(f, "|{x}| = 1"),
            Constraint::Distinct(x, y) => write!(f, "{x} ≠ {y}"),
            Constraint::Disjoint(x, y) => write!(f, "{x} ∩ {y} = ∅"),
        }
    }
}

/// Premises (possibly none) and a conclusion over placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub constraints: Vec<Constraint>,
}

impl Schema {
    pub fn axiom(text: &str) -> Result<Self, SearchError> {
        Schema::rule(&[], text)
    }

    pub fn rule(premises: &[&str], conclusion: &str) -> Result<Self, SearchError> {
        let p = |t: &str| parse(t).map_err(|e| SearchError::Schema(format!("'{t}': {e}")));
        Ok(Schema {
            premises: premises.iter().map(|t| p(t)).collect::<Result<_, _>>()?,
            conclusion: p(conclusion)?,
            constraints: Vec::new(),
        })
    }

    pub fn with(mut self, c: Constraint) -> Self {
        self.constraints.push(c);
        self
    }

    fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.premises.iter().chain([&self.conclusion])
    }

    /// Group placeholders in use, in canonical order.
    pub fn group_placeholders(&self) -> Vec<&'static str> {
        let mut used: Vec<String> = self.formulas().flat_map(|f| f.agents()).collect();
        used.extend(
            self.constraints
                .iter()
                .flat_map(|c| c.names().into_iter().map(String::from)),
        );
        GROUP_PLACEHOLDERS
            .into_iter()
            .filter(|p| used.iter().any(|u| u == p))
            .collect()
    }

    pub fn formula_placeholders(&self) -> Vec<&'static str> {
        let used: Vec<String> = self.formulas().flat_map(|f| f.atoms()).collect();
        FORMULA_PLACEHOLDERS
            .into_iter()
            .filter(|p| used.iter().any(|u| u == p))
            .collect()
    }

    /// Every instance allowed by the constraints. Group placeholders range
    /// over the non-empty subsets of `pool`; formula placeholders over
    /// [`FORMULA_POOL`]. The first placeholder varies slowest.
    pub fn instances(&self, pool: &[String]) -> Result<Vec<Instance>, SearchError> {
        if pool.is_empty() {
            return Err(SearchError::Schema("empty agent pool".into()));
        }
        let groups = self.group_placeholders();
        let fvars = self.formula_placeholders();
        let subsets: Vec<Group> = (1u32..1 << pool.len())
            .map(|m| {
                Group::new(
                    (0..pool.len())
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| pool[i].clone()),
                )
                .map_err(|e| SearchError::Schema(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        let fpool: Vec<Formula> = FORMULA_POOL
            .iter()
            .map(|t| parse(t).expect("formula pool parses"))
            .collect();

        let mut out = Vec::new();
        let radix_g = subsets.len();
        let n_group_choices = radix_g.pow(groups.len() as u32);
        let n_formula_choices = fpool.len().pow(fvars.len() as u32);
        for gi in 0..n_group_choices {
            let mut bind = BTreeMap::new();
            let mut rest = gi;
            for name in groups.iter().rev() {
                bind.insert(name.to_string(), subsets[rest % radix_g].clone());
                rest /= radix_g;
            }
            if !self.constraints.iter().all(|c| c.holds(&bind)) {
                continue;
            }
            for fi in 0..n_formula_choices {
                let mut fbind = BTreeMap::new();
                let mut rest = fi;
                for name in fvars.iter().rev() {
                    fbind.insert(name.to_string(), fpool[rest % fpool.len()].clone());
                    rest /= fpool.len();
                }
                let sub = |f: &Formula| substitute(f, &bind, &fbind);
                out.push(Instance {
                    groups: groups
                        .iter()
                        .map(|g| (g.to_string(), bind[*g].clone()))
                        .collect(),
                    formulas: fvars
                        .iter()
                        .map(|v| (v.to_string(), fbind[*v].clone()))
                        .collect(),
                    premises: self.premises.iter().map(sub).collect::<Result<_, _>>()?,
                    conclusion: sub(&self.conclusion)?,
                });
            }
        }
        Ok(out)
    }
}

impl Schema {
    /// The instance with explicitly given bindings; every placeholder in use
    /// must be bound and the constraints must hold.
    pub fn instantiate(
        &self,
        groups: &[(&str, Group)],
        formulas: &[(&str, Formula)],
    ) -> Result<Instance, SearchError> {
        let bind: BTreeMap<String, Group> = groups
            .iter()
            .map(|(k, g)| (k.to_string(), g.clone()))
            .collect();
        let fbind: BTreeMap<String, Formula> = formulas
            .iter()
            .map(|(k, f)| (k.to_string(), f.clone()))
            .collect();
        let gvars = self.group_placeholders();
        let fvars = self.formula_placeholders();
        if let Some(v) = gvars.iter().find(|v| !bind.contains_key(**v)) {
            return Err(SearchError::Schema(format!("placeholder {v} is unbound")));
        }
        if let Some(v) = fvars.iter().find(|v| !fbind.contains_key(**v)) {
            return Err(SearchError::Schema(format!("placeholder {v} is unbound")));
        }
        if let Some(c) = self.constraints.iter().find(|c| !c.holds(&bind)) {
            return Err(SearchError::Schema(format!("binding violates {c}")));
        }
        let sub = |f: &Formula| substitute(f, &bind, &fbind);
        Ok(Instance {
            groups: gvars
                .iter()
                .map(|g| (g.to_string(), bind[*g].clone()))
                .collect(),
            formulas: fvars
                .iter()
                .map(|v| (v.to_string(), fbind[*v].clone()))
                .collect(),
            premises: self.premises.iter().map(sub).collect::<Result<_, _>>()?,
            conclusion: sub(&self.conclusion)?,
        })
    }
}

fn expand_group(g: &Group, bind: &BTreeMap<String, Group>) -> Result<Group, SearchError> {
    let mut agents: Vec<String> = Vec::new();
    for a in g.agents() {
        match bind.get(a) {
            Some(b) => agents.extend(b.agents().iter().cloned()),
            None => agents.push(a.clone()),
        }
    }
    agents.sort();
    agents.dedup();
    Group::new(agents).map_err(|e| SearchError::Schema(e.to_string()))
}

fn substitute(
    f: &Formula,
    bind: &BTreeMap<String, Group>,
    fbind: &BTreeMap<String, Formula>,
) -> Result<Formula, SearchError> {
    let sub = |x: &Formula| substitute(x, bind, fbind);
    Ok(match f {
        Formula::Atom(p) => fbind.get(p).cloned().unwrap_or_else(|| f.clone()),
        Formula::Not(x) => sub(x)?.not(),
        Formula::And(a, b) => sub(a)?.and(sub(b)?),
        Formula::Or(a, b) => sub(a)?.or(sub(b)?),
        Formula::Imp(a, b) => sub(a)?.implies(sub(b)?),
        Formula::Iff(a, b) => sub(a)?.iff(sub(b)?),
        Formula::Dk(g, x) => Formula::dk(expand_group(g, bind)?, sub(x)?),
        Formula::Ck(g, x) => Formula::ck(expand_group(g, bind)?, sub(x)?),
        Formula::Cdk(sg, x) => {
            let groups = sg
                .groups()
                .iter()
                .map(|g| expand_group(g, bind))
                .collect::<Result<Vec<_>, _>>()?;
            let sg =
                Supergroup::from_groups(groups).map_err(|e| SearchError::Schema(e.to_string()))?;
            Formula::cdk(sg, sub(x)?)
        }
        Formula::Cmp(op, a, b) => Formula::cmp(*op, expand_group(a, bind)?, expand_group(b, bind)?),
        Formula::IndK(a, x) => {
            let body = sub(x)?;
            match bind.get(a) {
                Some(g) => Formula::conjunction(
                    g.agents()
                        .iter()
                        .map(|m| Formula::knows(m.clone(), body.clone())),
                )
                .expect("groups are non-empty"),
                None => Formula::knows(a.clone(), body),
            }
        }
    })
}

/// One substitution instance of a schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub groups: Vec<(String, Group)>,
    pub formulas: Vec<(String, Formula)>,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Instance {
    /// Bounds for this instance: the atoms it mentions and just enough
    /// agents from the front of the pool to cover the ones it mentions.
    /// Relations of unmentioned agents cannot affect the verdict.
    pub fn bounds(&self, base: &SearchBounds) -> Result<SearchBounds, SearchError> {
        let mut atoms = std::collections::BTreeSet::new();
        let mut agents = std::collections::BTreeSet::new();
        for f in self.premises.iter().chain([&self.conclusion]) {
            atoms.extend(f.atoms());
            agents.extend(f.agents());
        }
        if atoms.len() > MAX_SEARCH_ATOMS {
            return Err(SearchError::AtomBound(atoms.len()));
        }
        let mut n_agents = 1;
        for a in &agents {
            let k = AGENT_NAMES.iter().position(|x| x == a).ok_or_else(|| {
                SearchError::AgentOutsidePool {
                    agent: a.clone(),
                    pool: AGENT_NAMES.join(","),
                }
            })?;
            n_agents = n_agents.max(k + 1);
        }
        Ok(SearchBounds {
            n_agents,
            atoms: atoms.into_iter().collect(),
            ..base.clone()
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(k, g)| format!("{k}={g}"))
            .chain(self.formulas.iter().map(|(k, x)| format!("{k}={x}")))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub instance: Instance,
    pub outcome: SearchOutcome,
}

/// Searches every instance of `schema` over `pool`, taking the frame, world
/// bound and isomorphism setting from `b`.
pub fn check_schema(
    schema: &Schema,
    b: &SearchBounds,
    pool: &[String],
) -> Result<Vec<InstanceOutcome>, SearchError> {
    check_schema_with(schema, b, pool, &Executor::default())
}

pub fn check_schema_with(
    schema: &Schema,
    b: &SearchBounds,
    pool: &[String],
    exec: &Executor,
) -> Result<Vec<InstanceOutcome>, SearchError> {
    schema
        .instances(pool)?
        .into_iter()
        .map(|instance| {
            let bounds = instance.bounds(b)?;
            let outcome = check_rule_with(&instance.premises, &instance.conclusion, &bounds, exec)?;
            Ok(InstanceOutcome { instance, outcome })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::FrameClass;

    fn pool(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn instance_counts_and_constraints() {
        let s = Schema::axiom("[{A} <= {B}]").unwrap();
        assert_eq!(s.instances(&pool(&["a", "b"])).unwrap().len(), 9);
        let s = s.with(Constraint::subset("B", "A"));
        let inst = s.instances(&pool(&["a", "b"])).unwrap();
        assert_eq!(inst.len(), 5);
        assert!(inst.iter().all(|i| i.groups[1].1.is_subset(&i.groups[0].1)));
    }

    #[test]
    fn group_union_and_everybody_knows() {
        let s = Schema::axiom("C{A} phi -> phi & K{A} C{A} phi").unwrap();
        let inst = s.instances(&pool(&["a", "b"])).unwrap();
        assert_eq!(inst.len(), 3 * 4);
        let ab = inst
            .iter()
            .find(|i| i.groups[0].1.len() == 2 && i.formulas[0].1 == Formula::atom("p"));
        assert_eq!(
            ab.unwrap().conclusion,
            parse("C{a,b} p -> p & (K{a} C{a,b} p & K{b} C{a,b} p)").unwrap()
        );
        let s = Schema::axiom("[{B,A} <= {C,A}]").unwrap();
        let i = &s.instances(&pool(&["a", "b"])).unwrap()[0];
        assert_eq!(i.conclusion, parse("[{a} <= {a}]").unwrap());
    }

    #[test]
    fn additivity_is_sound_on_small_kt() {
        let s = Schema::axiom("[{A} <= {B}] & [{A} <= {C}] -> [{A} <= {B,C}]").unwrap();
        let b = SearchBounds::new(FrameClass::Kt, 2, 2);
        let out = check_schema(&s, &b, &pool(&["a", "b"])).unwrap();
        assert_eq!(out.len(), 27);
        assert!(out.iter().all(|o| !o.outcome.is_countermodel()));
    }
}
