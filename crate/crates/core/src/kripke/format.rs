//! Line-oriented model files.
//!
//! ```text
//! agents: a b c
//! worlds: s t u
//! atoms: p q              # optional
//! closure: reflexive      # optional; applied after the rel lines
//! rel a: (s,t) (t,s)
//! val p: s t
//! witness: t              # optional; written by countermodel search
//! ```
//!
//! Sections must appear in this order. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Closure, KripkeModel, ModelError, Relation, WorldSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Model {
        line: usize,
        #[source]
        source: ModelError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Agents,
    Worlds,
    Atoms,
    Closure,
    Rel,
    Val,
    Witness,
}

impl Section {
    fn keyword(self) -> &'static str {
        match self {
            Section::Agents => "agents",
            Section::Worlds => "worlds",
            Section::Atoms => "atoms",
            Section::Closure => "closure",
            Section::Rel => "rel",
            Section::Val => "val",
            Section::Witness => "witness",
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn model_err(line: usize) -> impl Fn(ModelError) -> FormatError {
    move |source| FormatError::Model { line, source }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || "(),:#".contains(c))
}

fn unique(
    line: usize,
    list: Vec<String>,
    err: fn(String) -> ModelError,
) -> Result<Vec<String>, FormatError> {
    for (i, n) in list.iter().enumerate() {
        if list[..i].contains(n) {
            return Err(model_err(line)(err(n.clone())));
        }
    }
    Ok(list)
}

fn names(line: usize, rest: &str, what: &str) -> Result<Vec<String>, FormatError> {
    rest.split_whitespace()
        .map(|w| {
            if valid_name(w) {
                Ok(w.to_string())
            } else {
                Err(syntax(line, format!("invalid {what} name '{w}'")))
            }
        })
        .collect()
}

fn pairs(line: usize, rest: &str) -> Result<Vec<(String, String)>, FormatError> {
    let mut out = Vec::new();
    let mut s = rest.trim_start();
    while !s.is_empty() {
        let body = s
            .strip_prefix('(')
            .ok_or_else(|| syntax(line, format!("expected '(' at '{s}'")))?;
        let close = body
            .find(')')
            .ok_or_else(|| syntax(line, "unterminated pair, expected ')'"))?;
        let (l, r) = body[..close]
            .split_once(',')
            .ok_or_else(|| syntax(line, "pair needs two worlds separated by ','"))?;
        let (l, r) = (l.trim(), r.trim());
        if !valid_name(l) || !valid_name(r) {
            return Err(syntax(line, format!("invalid pair '({})'", &body[..close])));
        }
        out.push((l.to_string(), r.to_string()));
        s = body[close + 1..].trim_start();
    }
    Ok(out)
}

/// Parses a model file, ignoring any `witness:` line.
pub fn load_model(text: &str) -> Result<KripkeModel, FormatError> {
    load_model_with_witness(text).map(|(m, _)| m)
}

/// Parses a model file and returns the witness world named on a trailing
/// `witness:` line, if any.
pub fn load_model_with_witness(text: &str) -> Result<(KripkeModel, Option<String>), FormatError> {
    let mut agents: Option<Vec<String>> = None;
    let mut worlds: Option<Vec<String>> = None;
    let mut atoms: Vec<String> = Vec::new();
    let mut closure = Closure::default();
    let mut rels: Vec<Option<Relation>> = Vec::new();
    let mut vals: Vec<Option<WorldSet>> = Vec::new();
    let mut witness = None;
    let mut current: Option<Section> = None;
    let mut last_line = 0;

    let world_idx = |worlds: &[String], name: &str, line: usize| {
        worlds
            .iter()
            .position(|w| w == name)
            .ok_or_else(|| FormatError::Model {
                line,
                source: ModelError::UnknownWorld(name.to_string()),
            })
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last_line = line;
        let (head, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected 'keyword: ...'"))?;
        let mut head_words = head.split_whitespace();
        let keyword = head_words.next().unwrap_or("");
        let label = head_words.next();
        if head_words.next().is_some() {
            return Err(syntax(
                line,
                format!("unexpected text before ':' in '{head}'"),
            ));
        }
        let section = match keyword {
            "agents" => Section::Agents,
            "worlds" => Section::Worlds,
            "atoms" => Section::Atoms,
            "closure" => Section::Closure,
            "rel" => Section::Rel,
            "val" => Section::Val,
            "witness" => Section::Witness,
            other => return Err(syntax(line, format!("unknown section '{other}'"))),
        };
        let labelled = matches!(section, Section::Rel | Section::Val);
        if labelled != label.is_some() {
            return Err(if labelled {
                syntax(
                    line,
                    format!("'{}' needs a name before ':'", section.keyword()),
                )
            } else {
                syntax(
                    line,
                    format!("unexpected name after '{}'", section.keyword()),
                )
            });
        }
        if let Some(cur) = current {
            if section < cur || (section == cur && !labelled) {
                return Err(syntax(
                    line,
                    format!("'{}' line out of order or repeated", section.keyword()),
                ));
            }
        }
        if section > Section::Agents && agents.is_none() {
            return Err(syntax(line, "missing 'agents:' line"));
        }
        if section > Section::Worlds && worlds.is_none() {
            return Err(syntax(line, "missing 'worlds:' line"));
        }
        current = Some(section);

        match section {
            Section::Agents => {
                let list = unique(
                    line,
                    names(line, rest, "agent")?,
                    ModelError::DuplicateAgent,
                )?;
                rels = vec![None; list.len()];
                agents = Some(list);
            }
            Section::Worlds => {
                let list = unique(
                    line,
                    names(line, rest, "world")?,
                    ModelError::DuplicateWorld,
                )?;
                if list.is_empty() {
                    return Err(model_err(line)(ModelError::NoWorlds));
                }
                if list.len() > super::MAX_WORLDS {
                    return Err(model_err(line)(ModelError::TooManyWorlds(list.len())));
                }
                worlds = Some(list);
            }
            Section::Atoms => {
                atoms = unique(line, names(line, rest, "atom")?, ModelError::DuplicateAtom)?;
                vals = vec![None; atoms.len()];
            }
            Section::Closure => {
                closure = rest
                    .parse()
                    .map_err(|e: super::UnknownClosure| syntax(line, e.to_string()))?;
            }
            Section::Rel => {
                let agent = label.unwrap();
                let agents = agents.as_ref().unwrap();
                let worlds = worlds.as_ref().unwrap();
                let k = agents
                    .iter()
                    .position(|a| a == agent)
                    .ok_or_else(|| model_err(line)(ModelError::UnknownAgent(agent.to_string())))?;
                if rels[k].is_some() {
                    return Err(syntax(
                        line,
                        format!("second 'rel' line for agent '{agent}'"),
                    ));
                }
                let mut r = Relation::empty(worlds.len());
                for (l, rr) in pairs(line, rest)? {
                    r.insert(world_idx(worlds, &l, line)?, world_idx(worlds, &rr, line)?);
                }
                rels[k] = Some(r);
            }
            Section::Val => {
                let atom = label.unwrap();
                let worlds = worlds.as_ref().unwrap();
                let k = atoms
                    .iter()
                    .position(|a| a == atom)
                    .ok_or_else(|| model_err(line)(ModelError::UnknownAtom(atom.to_string())))?;
                if vals[k].is_some() {
                    return Err(syntax(line, format!("second 'val' line for atom '{atom}'")));
                }
                let mut set = WorldSet::EMPTY;
                for w in names(line, rest, "world")? {
                    set.insert(world_idx(worlds, &w, line)?);
                }
                vals[k] = Some(set);
            }
            Section::Witness => {
                let list = names(line, rest, "world")?;
                let [w] = list.as_slice() else {
                    return Err(syntax(line, "witness needs exactly one world"));
                };
                world_idx(worlds.as_ref().unwrap(), w, line)?;
                witness = Some(w.clone());
            }
        }
    }

    let end = last_line + 1;
    let agents = agents.ok_or_else(|| syntax(end, "missing 'agents:' line"))?;
    let worlds = worlds.ok_or_else(|| syntax(end, "missing 'worlds:' line"))?;
    let n = worlds.len();
    let relations = rels
        .into_iter()
        .map(|r| closure.apply(&r.unwrap_or_else(|| Relation::empty(n))))
        .collect();
    let valuation = vals.into_iter().map(Option::unwrap_or_default).collect();
    let m =
        KripkeModel::new(worlds, agents, atoms, relations, valuation).map_err(model_err(end))?;
    Ok((m, witness))
}

/// Writes a model file with every relation listed explicitly. The witness,
/// when given, is emitted as a trailing `witness:` line.
pub fn save_model(m: &KripkeModel, witness: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "agents: {}", m.agents().join(" "));
    let _ = writeln!(out, "worlds: {}", m.worlds().join(" "));
    if !m.atoms().is_empty() {
        let _ = writeln!(out, "atoms: {}", m.atoms().join(" "));
    }
    let w = m.worlds();
    for (agent, r) in m.agents().iter().zip(m.relations()) {
        let _ = write!(out, "rel {agent}:");
        for (i, j) in r.pairs() {
            let _ = write!(out, " ({},{})", w[i], w[j]);
        }
        out.push('\n');
    }
    for (atom, set) in m.atoms().iter().zip(m.valuation()) {
        let _ = write!(out, "val {atom}:");
        for i in set.iter() {
            let _ = write!(out, " {}", w[i]);
        }
        out.push('\n');
    }
    if let Some(wit) = witness {
        let _ = writeln!(out, "witness: {wit}");
    }
    out
}
