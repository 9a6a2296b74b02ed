use std::collections::{BTreeMap, BTreeSet};

use super::{attack_kinds, Argument};
use crate::attack::KindSet;
use crate::prop::Prover;
use crate::Bounds;

/// A given abstract graph together with the arguments meant to fill it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescriptiveGraph {
    pub nodes: Vec<String>,
    pub edges: BTreeSet<(String, String)>,
    pub assignment: BTreeMap<String, Argument>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    /// Realised by these enabled kinds.
    Confirmed(KindSet),
    Violated,
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub from: String,
    pub to: String,
    pub status: EdgeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptiveReport {
    pub edges: Vec<EdgeCheck>,
    /// Attacks between assigned arguments that the abstract graph lacks.
    pub surplus: Vec<(String, String, KindSet)>,
    /// Nodes without an assigned argument.
    pub unassigned: Vec<String>,
    /// Nodes whose assigned argument fails its logic's argument conditions.
    pub invalid: Vec<String>,
    pub strict: bool,
}

impl DescriptiveReport {
    /// No violated edge, every node assigned, and in strict mode no surplus
    /// attack.
    pub fn passed(&self) -> bool {
        self.edges.iter().all(|e| matches!(e.status, EdgeStatus::Confirmed(_)))
            && self.unassigned.is_empty()
            && (!self.strict || self.surplus.is_empty())
    }

    pub fn violated(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .filter(|e| !matches!(e.status, EdgeStatus::Confirmed(_)))
            .map(|e| (e.from.clone(), e.to.clone()))
            .collect()
    }
}

/// Checks each abstract edge against the attacks its assigned arguments
/// actually realise under `enabled`.
pub fn verify_descriptive(
    prover: &Prover,
    graph: &DescriptiveGraph,
    enabled: &KindSet,
    bounds: &Bounds,
    strict: bool,
) -> DescriptiveReport {
    let unassigned: Vec<String> = graph
        .nodes
        .iter()
        .filter(|n| !graph.assignment.contains_key(*n))
        .cloned()
        .collect();
    let invalid: Vec<String> = graph
        .nodes
        .iter()
        .filter(|n| {
            graph
                .assignment
                .get(*n)
                .is_some_and(|a| !matches!(a.is_valid(prover, bounds), Ok(true)))
        })
        .cloned()
        .collect();

    let mut edges = Vec::new();
    for (from, to) in &graph.edges {
        let status = match (graph.assignment.get(from), graph.assignment.get(to)) {
            (Some(a), Some(b)) => match attack_kinds(prover, a, b, enabled, bounds) {
                Ok(k) if !k.is_empty() => EdgeStatus::Confirmed(k),
                Ok(_) => EdgeStatus::Violated,
                Err(e) => EdgeStatus::Error(e.to_string()),
            },
            _ => EdgeStatus::Error("endpoint has no assigned argument".into()),
        };
        edges.push(EdgeCheck {
            from: from.clone(),
            to: to.clone(),
            status,
        });
    }

    let mut surplus = Vec::new();
    for x in &graph.nodes {
        for y in &graph.nodes {
            if graph.edges.contains(&(x.clone(), y.clone())) {
                continue;
            }
            if let (Some(a), Some(b)) = (graph.assignment.get(x), graph.assignment.get(y)) {
                if let Ok(k) = attack_kinds(prover, a, b, enabled, bounds) {
                    if !k.is_empty() {
                        surplus.push((x.clone(), y.clone(), k));
                    }
                }
            }
        }
    }

    DescriptiveReport {
        edges,
        surplus,
        unassigned,
        invalid,
        strict,
    }
}
