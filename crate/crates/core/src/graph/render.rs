use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ArgGraph, ArgNode, Argument};
use crate::attack::{AttackKind, KindSet};
use crate::classical::ClassicalArgument;
use crate::default::{DefaultArgument, DefaultRule, DefaultTheory};
use crate::error::{Error, Result};
use crate::prop::{parse_formula, parse_literal};
use crate::simple::{SimpleArgument, SimpleKb, SimpleRule};
use crate::system_p::{Conditional, PreferentialArgument};

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    nodes: Vec<JsonNode>,
    attacks: Vec<JsonAttack>,
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    id: String,
    logic: String,
    support: Vec<String>,
    claim: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonAttack {
    from: String,
    to: String,
    kinds: Vec<AttackKind>,
}

fn kinds_text(k: &KindSet) -> String {
    k.iter().map(|x| x.name()).collect::<Vec<_>>().join(", ")
}

/// One line per node, then one per attack.
pub fn to_text(g: &ArgGraph) -> String {
    let mut s = String::new();
    for n in &g.nodes {
        let _ = writeln!(s, "{}: {}", n.id, n.argument);
    }
    for (&(a, b), k) in &g.attacks {
        let _ = write!(s, "{} -> {}", g.nodes[a].id, g.nodes[b].id);
        if !k.is_empty() {
            let _ = write!(s, " [{}]", kinds_text(k));
        }
        s.push('\n');
    }
    s
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph; nodes are labelled by claim with the support as
/// tooltip.
pub fn to_dot(g: &ArgGraph) -> String {
    let mut s = String::from("digraph arguments {\n");
    for n in &g.nodes {
        let label = match n.argument {
            Argument::Abstract => n.id.clone(),
            _ => format!("{}: {}", n.id, n.argument.claim_text()),
        };
        let _ = writeln!(
            s,
            "  \"{}\" [label=\"{}\", tooltip=\"{}\"];",
            dot_escape(&n.id),
            dot_escape(&label),
            dot_escape(&n.argument.support_items().join("; "))
        );
    }
    for (&(a, b), k) in &g.attacks {
        let _ = write!(
            s,
            "  \"{}\" -> \"{}\"",
            dot_escape(&g.nodes[a].id),
            dot_escape(&g.nodes[b].id)
        );
        if !k.is_empty() {
            let _ = write!(s, " [label=\"{}\"]", kinds_text(k));
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    s
}

pub fn to_json(g: &ArgGraph) -> String {
    let doc = JsonGraph {
        nodes: g
            .nodes
            .iter()
            .map(|n| JsonNode {
                id: n.id.clone(),
                logic: n.argument.logic_name().to_string(),
                support: n.argument.support_items(),
                claim: n.argument.claim().map(|c| c.to_string()),
            })
            .collect(),
        attacks: g
            .attacks
            .iter()
            .map(|(&(a, b), k)| JsonAttack {
                from: g.nodes[a].id.clone(),
                to: g.nodes[b].id.clone(),
                kinds: k.iter().copied().collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph serialises");
    out.push('\n');
    out
}

/// Reloads a graph written by [`to_json`].
pub fn from_json(text: &str) -> Result<ArgGraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut nodes = Vec::with_capacity(doc.nodes.len());
    let mut index = BTreeMap::new();
    for n in doc.nodes {
        if index.insert(n.id.clone(), nodes.len()).is_some() {
            return Err(Error::Invalid(format!("duplicate node id `{}`", n.id)));
        }
        let argument = parse_argument(&n.logic, &n.support, n.claim.as_deref())?;
        nodes.push(ArgNode { id: n.id, argument });
    }
    let mut attacks = BTreeMap::new();
    for a in doc.attacks {
        let find = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("attack mentions unknown node `{}`", id)))
        };
        attacks.insert(
            (find(&a.from)?, find(&a.to)?),
            a.kinds.into_iter().collect::<BTreeSet<_>>(),
        );
    }
    Ok(ArgGraph { nodes, attacks })
}

/// Rebuilds an argument from its logic tag and printed support and claim.
pub(crate) fn parse_argument(logic: &str, support: &[String], claim: Option<&str>) -> Result<Argument> {
    if logic == "abstract" {
        return Ok(Argument::Abstract);
    }
    let claim = claim.ok_or_else(|| Error::Invalid(format!("a {} argument needs a claim", logic)))?;
    Ok(match logic {
        "simple" => {
            let mut kb = SimpleKb::default();
            for item in support {
                if item.contains("->") {
                    kb.rules.insert(SimpleRule::parse(item)?);
                } else {
                    kb.facts.insert(parse_literal(item)?);
                }
            }
            Argument::Simple(SimpleArgument {
                support: kb,
                claim: parse_literal(claim)?,
            })
        }
        "classical" => Argument::Classical(ClassicalArgument::new(
            support.iter().map(|s| parse_formula(s)).collect::<Result<Vec<_>>>()?,
            parse_formula(claim)?,
        )),
        "default" => {
            let mut t = DefaultTheory::default();
            for item in support {
                if item.contains(':') {
                    t.defaults.insert(DefaultRule::parse(item)?);
                } else {
                    t.facts.insert(parse_formula(item)?);
                }
            }
            Argument::Default(DefaultArgument {
                support: t,
                claim: parse_formula(claim)?,
            })
        }
        "conditional" => {
            let conds = support
                .iter()
                .filter(|s| s.contains("=>"))
                .map(|s| Conditional::parse(s))
                .collect::<Result<Vec<_>>>()?;
            Argument::Preferential(PreferentialArgument::new(conds, Conditional::parse(claim)?))
        }
        other => return Err(Error::Invalid(format!("unknown argument logic `{}`", other))),
    })
}
