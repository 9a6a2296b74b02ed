//! KLM System P over conditional knowledge bases.
//!
//! `⊢P` is decided through tolerance: a base is ε-consistent when it can be
//! emptied by repeatedly removing conditionals tolerated by what remains, and
//! `kb ⊢P α⇒β` holds iff `kb ∪ {α⇒¬β}` is not ε-consistent (or `kb` itself
//! is not).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::attack::{AttackKind, KindSet};
use crate::classical::{combinations, sorted_strings};
use crate::error::{Error, Result};
use crate::prop::{Formula, Prover, Schematic};
use crate::{check_bound, Bounds};

/// `ante => cons`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Conditional {
    pub ante: Formula,
    pub cons: Formula,
}

impl Conditional {
    pub fn new(ante: Formula, cons: Formula) -> Conditional {
        Conditional { ante, cons }
    }

    /// Parses `A => B`.
    pub fn parse(text: &str) -> Result<Conditional> {
        Conditional::parse_with(text, false)
    }

    /// As [`Conditional::parse`]; with `allow_vars`, variables are kept for
    /// later grounding.
    pub fn parse_with(text: &str, allow_vars: bool) -> Result<Conditional> {
        let ((ac, a), (cc, c)) = split_conditional(text)?;
        let side = |offset: usize, part: &str| {
            let parsed = if allow_vars {
                crate::prop::parse_schema(part)
            } else {
                crate::prop::parse_formula(part)
            };
            parsed.map_err(|e| {
                let (line, column) = crate::error::char_position(text, offset);
                e.rebase(line, column)
            })
        };
        Ok(Conditional {
            ante: side(ac, a)?,
            cons: side(cc, c)?,
        })
    }

    /// The material counterpart `ante -> cons`.
    pub fn material(&self) -> Formula {
        Formula::implies(self.ante.clone(), self.cons.clone())
    }

    /// `ante => !cons`.
    pub fn opposite(&self) -> Conditional {
        Conditional::new(self.ante.clone(), Formula::not(self.cons.clone()))
    }
}

type Part<'a> = (usize, &'a str);

/// Splits `A => B` into its sides with their char offsets.
fn split_conditional(text: &str) -> Result<(Part<'_>, Part<'_>)> {
    let at = text.find("=>").ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: "expected `antecedent => consequent`".into(),
    })?;
    let rhs = at + 2;
    Ok(((0, &text[..at]), (text[..rhs].chars().count(), &text[rhs..])))
}

impl fmt::Display for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.ante, self.cons)
    }
}

impl fmt::Debug for Conditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self)
    }
}

impl Schematic for Conditional {
    fn variables(&self) -> BTreeSet<String> {
        let mut v = self.ante.variables();
        v.extend(self.cons.variables());
        v
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        Conditional {
            ante: self.ante.substitute(binding),
            cons: self.cons.substitute(binding),
        }
    }
}

pub type ConditionalKb = BTreeSet<Conditional>;

/// `c` is tolerated by `kb` when some world verifies `c` and falsifies no
/// member of `kb`.
pub fn is_tolerated(prover: &Prover, c: &Conditional, kb: &ConditionalKb) -> Result<bool> {
    let verify = Formula::and(vec![c.ante.clone(), c.cons.clone()]);
    let materials: Vec<Formula> = kb.iter().map(Conditional::material).collect();
    prover.satisfiable(materials.iter().chain(std::iter::once(&verify)))
}

/// Tolerance partition of a base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    pub consistent: bool,
    /// Successive layers; when inconsistent, the leftover conditionals that
    /// nothing tolerates come last.
    pub layers: Vec<Vec<Conditional>>,
}

/// Strips tolerated conditionals layer by layer.
pub fn epsilon_consistent(prover: &Prover, kb: &ConditionalKb) -> Result<Layering> {
    let mut rest = kb.clone();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let mut layer = Vec::new();
        for c in &rest {
            if is_tolerated(prover, c, &rest)? {
                layer.push(c.clone());
            }
        }
        if layer.is_empty() {
            layers.push(rest.into_iter().collect());
            return Ok(Layering {
                consistent: false,
                layers,
            });
        }
        for c in &layer {
            rest.remove(c);
        }
        layers.push(layer);
    }
    Ok(Layering {
        consistent: true,
        layers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVerdict {
    pub entailed: bool,
    /// The base alone is not ε-consistent, so it entails everything.
    pub inconsistent_base: bool,
    /// Layering of the base, or of the base with the query's opposite when
    /// the base is consistent.
    pub layers: Vec<Vec<Conditional>>,
}

/// `kb ⊢P query`.
pub fn p_entails(prover: &Prover, kb: &ConditionalKb, query: &Conditional) -> Result<PVerdict> {
    let base = epsilon_consistent(prover, kb)?;
    if !base.consistent {
        return Ok(PVerdict {
            entailed: true,
            inconsistent_base: true,
            layers: base.layers,
        });
    }
    let mut extended = kb.clone();
    extended.insert(query.opposite());
    let test = epsilon_consistent(prover, &extended)?;
    Ok(PVerdict {
        entailed: !test.consistent,
        inconsistent_base: false,
        layers: test.layers,
    })
}

/// `⟨Φ ∪ Ψ, claim⟩` with `Φ` minimal and `Ψ` the conjuncts of the claim's
/// antecedent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreferentialArgument {
    pub cond_support: BTreeSet<Conditional>,
    pub context: BTreeSet<Formula>,
    pub claim: Conditional,
}

impl PreferentialArgument {
    pub fn new(cond_support: impl IntoIterator<Item = Conditional>, claim: Conditional) -> Self {
        PreferentialArgument {
            cond_support: cond_support.into_iter().collect(),
            context: context_of(&claim.ante),
            claim,
        }
    }

    /// Conditionals first, then context formulas, each sorted.
    pub fn support_items(&self) -> Vec<String> {
        let mut v = sorted_strings(&self.cond_support);
        v.extend(sorted_strings(&self.context));
        v
    }

    pub fn is_valid(&self, prover: &Prover) -> Result<bool> {
        let conj = Formula::and(self.context.iter().cloned().collect());
        if !prover.equivalent(&conj, &self.claim.ante)? {
            return Ok(false);
        }
        if !p_entails(prover, &self.cond_support, &self.claim)?.entailed {
            return Ok(false);
        }
        for c in &self.cond_support {
            let mut rest = self.cond_support.clone();
            rest.remove(c);
            if p_entails(prover, &rest, &self.claim)?.entailed {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for PreferentialArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{{{}}}, {}>", self.support_items().join(", "), self.claim)
    }
}

fn context_of(ante: &Formula) -> BTreeSet<Formula> {
    ante.conjuncts().into_iter().collect()
}

/// All preferential arguments for `query` over `kb`. `⊢P` is monotonic in the
/// base, so supersets of a found support are skipped.
pub fn preferential_arguments(
    prover: &Prover,
    kb: &ConditionalKb,
    query: &Conditional,
    bounds: &Bounds,
) -> Result<Vec<PreferentialArgument>> {
    check_bound("conditionals", kb.len(), bounds.support_bound)?;
    if !p_entails(prover, kb, query)?.entailed {
        return Ok(Vec::new());
    }
    let items: Vec<&Conditional> = kb.iter().collect();
    let mut found: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    for k in 0..=items.len() {
        for combo in combinations(items.len(), k) {
            let mask = combo.iter().fold(0u32, |m, &i| m | 1 << i);
            if found.iter().any(|m| m & mask == *m) {
                continue;
            }
            let phi: ConditionalKb = combo.iter().map(|&i| items[i].clone()).collect();
            if p_entails(prover, &phi, query)?.entailed {
                found.push(mask);
                out.push(PreferentialArgument::new(phi, query.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Which preferential attacks `a2` mounts on `a1`, restricted to `enabled`.
pub fn preferential_attack_kinds(
    prover: &Prover,
    a2: &PreferentialArgument,
    a1: &PreferentialArgument,
    enabled: &KindSet,
) -> Result<KindSet> {
    let (alpha, beta) = (&a1.claim.ante, &a1.claim.cons);
    let (gamma, delta) = (&a2.claim.ante, &a2.claim.cons);
    let on = |k| enabled.contains(&k);
    let not = |f: &Formula| Formula::not(f.clone());
    let mut kinds = KindSet::new();

    if on(AttackKind::Rebuttal) || on(AttackKind::DirectRebuttal) {
        let specific = prover.entails([gamma], alpha)?;
        if specific && on(AttackKind::Rebuttal) && prover.entails([delta], &not(beta))? {
            kinds.insert(AttackKind::Rebuttal);
        }
        if specific && on(AttackKind::DirectRebuttal) && prover.equivalent(delta, &not(beta))? {
            kinds.insert(AttackKind::DirectRebuttal);
        }
    }
    if on(AttackKind::Undercut) && prover.entails([delta], &not(alpha))? {
        kinds.insert(AttackKind::Undercut);
    }
    if on(AttackKind::CanonicalUndercut) && prover.equivalent(delta, &not(alpha))? {
        kinds.insert(AttackKind::CanonicalUndercut);
    }
    if on(AttackKind::DirectUndercut) {
        for sigma in &a1.context {
            if prover.equivalent(delta, &not(sigma))? {
                kinds.insert(AttackKind::DirectUndercut);
                break;
            }
        }
    }
    Ok(kinds)
}

/// Queries to generate arguments for when none are given: each conditional
/// of the base, and for each pair with different antecedents, the joint
/// antecedent with either consequent.
pub fn default_queries(kb: &ConditionalKb) -> Vec<Conditional> {
    let items: Vec<&Conditional> = kb.iter().collect();
    let mut out: Vec<Conditional> = items.iter().map(|c| (*c).clone()).collect();
    for pair in combinations(items.len(), 2) {
        let (x, y) = (items[pair[0]], items[pair[1]]);
        if x.ante == y.ante {
            continue;
        }
        let joint = Formula::and(vec![x.ante.clone(), y.ante.clone()]);
        out.push(Conditional::new(joint.clone(), x.cons.clone()));
        out.push(Conditional::new(joint, y.cons.clone()));
    }
    crate::classical::dedup_keep_order(out)
}
