//! Argument graphs: generation from a knowledge base, Dung semantics,
//! descriptive-graph checking and rendering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::attack::{AttackKind, KindSet};
use crate::classical::{self, ClassicalArgument};
use crate::default::{self, DefaultArgument, DefaultTheory};
use crate::error::{Error, Result};
use crate::prop::{Formula, Prover};
use crate::simple::{self, SimpleArgument, SimpleKb};
use crate::system_p::{self, Conditional, ConditionalKb, PreferentialArgument};
use crate::{Bounds, Logic};

mod descriptive;
mod render;
mod semantics;

pub use descriptive::{verify_descriptive, DescriptiveGraph, DescriptiveReport, EdgeCheck, EdgeStatus};
pub use render::{from_json, to_dot, to_json, to_text};
pub use semantics::{accepted_claims, enumerate_extensions, grounded_extension, Framework, Semantics};

/// What an argument concludes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Formula(Formula),
    Conditional(Conditional),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Formula(x) => write!(f, "{}", x),
            Claim::Conditional(c) => write!(f, "{}", c),
        }
    }
}

/// Payload of a graph node.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Argument {
    Simple(SimpleArgument),
    Classical(ClassicalArgument),
    Default(DefaultArgument),
    Preferential(PreferentialArgument),
    /// A node of a descriptive graph before arguments are assigned.
    Abstract,
}

impl Argument {
    /// `simple`, `classical`, `default`, `conditional` or `abstract`.
    pub fn logic_name(&self) -> &'static str {
        match self {
            Argument::Simple(_) => Logic::Simple.name(),
            Argument::Classical(_) => Logic::Classical.name(),
            Argument::Default(_) => Logic::Default.name(),
            Argument::Preferential(_) => Logic::Conditional.name(),
            Argument::Abstract => "abstract",
        }
    }

    pub fn claim(&self) -> Option<Claim> {
        match self {
            Argument::Simple(a) => Some(Claim::Formula(a.claim.to_formula())),
            Argument::Classical(a) => Some(Claim::Formula(a.claim.clone())),
            Argument::Default(a) => Some(Claim::Formula(a.claim.clone())),
            Argument::Preferential(a) => Some(Claim::Conditional(a.claim.clone())),
            Argument::Abstract => None,
        }
    }

    pub fn claim_text(&self) -> String {
        self.claim().map(|c| c.to_string()).unwrap_or_default()
    }

    pub fn support_items(&self) -> Vec<String> {
        match self {
            Argument::Simple(a) => a.support.items(),
            Argument::Classical(a) => a.support_items(),
            Argument::Default(a) => a.support.items(),
            Argument::Preferential(a) => a.support_items(),
            Argument::Abstract => Vec::new(),
        }
    }

    /// Re-checks the defining conditions of the argument in its logic.
    pub fn is_valid(&self, prover: &Prover, bounds: &Bounds) -> Result<bool> {
        match self {
            Argument::Simple(a) => Ok(a.is_valid()),
            Argument::Classical(a) => a.is_valid(prover),
            Argument::Default(a) => a.is_valid(prover, bounds),
            Argument::Preferential(a) => a.is_valid(prover),
            Argument::Abstract => Ok(true),
        }
    }

    fn sort_key(&self) -> (String, String) {
        (self.claim_text(), self.support_items().join(", "))
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Argument::Abstract => f.write_str("<abstract>"),
            other => write!(f, "<{{{}}}, {}>", other.support_items().join(", "), other.claim_text()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgNode {
    pub id: String,
    pub argument: Argument,
}

/// Nodes plus directed attacks, each annotated with the kinds behind it.
/// Abstract edges carry an empty kind set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArgGraph {
    pub nodes: Vec<ArgNode>,
    pub attacks: BTreeMap<(usize, usize), KindSet>,
}

impl ArgGraph {
    /// Numbers the arguments `A1, A2, ...` after sorting them by claim and
    /// then support print form.
    pub fn from_arguments(mut args: Vec<Argument>) -> ArgGraph {
        args.sort_by_cached_key(|a| (a.sort_key(), a.clone()));
        args.dedup();
        ArgGraph {
            nodes: args
                .into_iter()
                .enumerate()
                .map(|(i, argument)| ArgNode {
                    id: format!("A{}", i + 1),
                    argument,
                })
                .collect(),
            attacks: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn attacks(&self, from: usize, to: usize) -> bool {
        self.attacks.contains_key(&(from, to))
    }

    /// Attack edges as id pairs, in index order.
    pub fn edge_ids(&self) -> Vec<(String, String)> {
        self.attacks
            .keys()
            .map(|&(a, b)| (self.nodes[a].id.clone(), self.nodes[b].id.clone()))
            .collect()
    }

    pub fn arguments(&self) -> impl Iterator<Item = &Argument> {
        self.nodes.iter().map(|n| &n.argument)
    }

    /// Computes every attack among the nodes with the given kinds enabled.
    pub fn compute_attacks(&mut self, prover: &Prover, enabled: &KindSet, bounds: &Bounds) -> Result<()> {
        self.attacks.clear();
        for i in 0..self.nodes.len() {
            for j in 0..self.nodes.len() {
                let kinds = attack_kinds(
                    prover,
                    &self.nodes[i].argument,
                    &self.nodes[j].argument,
                    enabled,
                    bounds,
                )?;
                if !kinds.is_empty() {
                    self.attacks.insert((i, j), kinds);
                }
            }
        }
        Ok(())
    }
}

/// The enabled attack kinds by which `a` attacks `b`, across base logics.
///
/// Arguments of different logics only interact where an attack is defined
/// for the pair: any formula-claimed argument may justification-undercut a
/// default argument, and a default argument's facts may be attacked like a
/// classical support.
pub fn attack_kinds(
    prover: &Prover,
    a: &Argument,
    b: &Argument,
    enabled: &KindSet,
    bounds: &Bounds,
) -> Result<KindSet> {
    use Argument::*;
    let mut kinds = match (a, b) {
        (Simple(x), Simple(y)) => simple::simple_attack_kinds(x, y),
        (Classical(x), Classical(y)) => classical::classical_attack_kinds(prover, x, y, enabled, bounds)?,
        (Preferential(x), Preferential(y)) => system_p::preferential_attack_kinds(prover, x, y, enabled)?,
        (Classical(_) | Default(_), Default(y)) => {
            let claim = formula_claim(a);
            let mut k = classical::claim_attack_kinds(prover, &claim, &y.support.facts, &y.claim, enabled, bounds)?;
            if enabled.contains(&AttackKind::JustificationUndercut)
                && default::is_justification_undercut(prover, &claim, y)?
            {
                k.insert(AttackKind::JustificationUndercut);
            }
            k
        }
        (Default(x), Classical(y)) => {
            classical::claim_attack_kinds(prover, &x.claim, &y.support, &y.claim, enabled, bounds)?
        }
        _ => KindSet::new(),
    };
    kinds.retain(|k| enabled.contains(k));
    Ok(kinds)
}

fn formula_claim(a: &Argument) -> Formula {
    match a.claim() {
        Some(Claim::Formula(f)) => f,
        _ => unreachable!("only called on formula-claimed arguments"),
    }
}

/// A knowledge base in one of the four base logics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnowledgeBase {
    Simple(SimpleKb),
    Classical(BTreeSet<Formula>),
    Default(DefaultTheory),
    Conditional(ConditionalKb),
}

impl KnowledgeBase {
    pub fn logic(&self) -> Logic {
        match self {
            KnowledgeBase::Simple(_) => Logic::Simple,
            KnowledgeBase::Classical(_) => Logic::Classical,
            KnowledgeBase::Default(_) => Logic::Default,
            KnowledgeBase::Conditional(_) => Logic::Conditional,
        }
    }
}

/// Selection of arguments and attacks for a generated graph.
#[derive(Clone, Debug)]
pub struct GenerationConfig {
    pub kinds: KindSet,
    /// Claims to argue about. For classical and default bases each one is
    /// taken together with its negation. Empty means a logic-specific default
    /// selection.
    pub focal: Vec<Claim>,
    /// Largest premise conjunction whose negation is a default classical
    /// focal claim.
    pub focal_depth: usize,
    pub bounds: Bounds,
    pub prover: Prover,
}

impl GenerationConfig {
    pub fn for_logic(logic: Logic) -> GenerationConfig {
        GenerationConfig {
            kinds: AttackKind::default_for(logic),
            focal: Vec::new(),
            focal_depth: 2,
            bounds: Bounds::default(),
            prover: Prover::default(),
        }
    }

    fn focal_formulas(&self) -> Result<Vec<Formula>> {
        self.focal
            .iter()
            .map(|c| match c {
                Claim::Formula(f) => Ok(f.clone()),
                Claim::Conditional(c) => Err(Error::Invalid(format!(
                    "focal claim `{}` is a conditional; a formula is expected",
                    c
                ))),
            })
            .collect()
    }

    fn focal_conditionals(&self) -> Result<Vec<Conditional>> {
        self.focal
            .iter()
            .map(|c| match c {
                Claim::Conditional(c) => Ok(c.clone()),
                Claim::Formula(f) => Err(Error::Invalid(format!("focal claim `{}` is not a conditional", f))),
            })
            .collect()
    }
}

/// Every argument the configuration selects from `kb`, unnumbered.
pub fn generate_arguments(kb: &KnowledgeBase, config: &GenerationConfig) -> Result<Vec<Argument>> {
    let (p, bounds) = (&config.prover, &config.bounds);
    let mut args = Vec::new();
    match kb {
        KnowledgeBase::Simple(delta) => {
            args.extend(simple::all_simple_arguments(delta).into_iter().map(Argument::Simple));
        }
        KnowledgeBase::Classical(delta) => {
            let focal = config.focal_formulas()?;
            let claims = if focal.is_empty() {
                classical::default_focal_claims(delta, config.focal_depth)
            } else {
                classical::with_negations(&focal)
            };
            for c in &claims {
                let found = classical::classical_arguments(p, delta, c, bounds)?;
                args.extend(found.into_iter().map(Argument::Classical));
            }
        }
        KnowledgeBase::Default(theory) => {
            let focal = config.focal_formulas()?;
            let claims = if focal.is_empty() {
                default::default_claims(theory)
            } else {
                classical::with_negations(&focal)
            };
            for c in &claims {
                let found = default::default_arguments(p, theory, c, bounds)?;
                args.extend(found.into_iter().map(Argument::Default));
            }
        }
        KnowledgeBase::Conditional(kb) => {
            let focal = config.focal_conditionals()?;
            let queries = if focal.is_empty() {
                system_p::default_queries(kb)
            } else {
                focal
            };
            for q in &queries {
                let found = system_p::preferential_arguments(p, kb, q, bounds)?;
                args.extend(found.into_iter().map(Argument::Preferential));
            }
        }
    }
    Ok(args)
}

/// Builds the generative graph of `kb`: the selected arguments and every
/// enabled attack between them.
pub fn generate_graph(kb: &KnowledgeBase, config: &GenerationConfig) -> Result<ArgGraph> {
    let mut g = ArgGraph::from_arguments(generate_arguments(kb, config)?);
    g.compute_attacks(&config.prover, &config.kinds, &config.bounds)?;
    Ok(g)
}
