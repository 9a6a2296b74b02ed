//! Reiter default logic.
//!
//! Extensions are never materialised as deductively closed sets. An
//! [`ExtensionRep`] keeps the facts and the generating defaults, and
//! membership in the extension is answered by an entailment query against
//! `W ∪ cons(generating)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::classical::{combinations, sorted_strings};
use crate::error::{Error, Result};
use crate::prop::{Formula, Prover, Schematic};
use crate::{check_bound, Bounds, Mode};

/// `pre : just / cons`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefaultRule {
    pub pre: Formula,
    pub just: Formula,
    pub cons: Formula,
}

impl DefaultRule {
    pub fn new(pre: Formula, just: Formula, cons: Formula) -> DefaultRule {
        DefaultRule { pre, just, cons }
    }

    /// Parses `pre : just / cons`.
    pub fn parse(text: &str) -> Result<DefaultRule> {
        let parts = split_default(text)?;
        let mut fs = Vec::with_capacity(3);
        for (offset, part) in parts {
            let (line, column) = crate::error::char_position(text, offset);
            fs.push(crate::prop::parse_formula(part).map_err(|e| e.rebase(line, column))?);
        }
        let cons = fs.pop().unwrap();
        let just = fs.pop().unwrap();
        let pre = fs.pop().unwrap();
        Ok(DefaultRule { pre, just, cons })
    }
}

/// Splits `pre : just / cons` into its three parts with their char offsets.
pub(crate) fn split_default(text: &str) -> Result<[(usize, &str); 3]> {
    let bad = || Error::Syntax {
        line: 1,
        column: 1,
        message: "expected `pre : justification / consequent`".into(),
    };
    let colon = text.find(':').ok_or_else(bad)?;
    let slash = text[colon..].find('/').ok_or_else(bad)? + colon;
    let offset = |byte: usize| text[..byte].chars().count();
    Ok([
        (0, &text[..colon]),
        (offset(colon + 1), &text[colon + 1..slash]),
        (offset(slash + 1), &text[slash + 1..]),
    ])
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} / {}", self.pre, self.just, self.cons)
    }
}

impl fmt::Debug for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self)
    }
}

impl Schematic for DefaultRule {
    fn variables(&self) -> BTreeSet<String> {
        let mut v = self.pre.variables();
        v.extend(self.just.variables());
        v.extend(self.cons.variables());
        v
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        DefaultRule {
            pre: self.pre.substitute(binding),
            just: self.just.substitute(binding),
            cons: self.cons.substitute(binding),
        }
    }
}

/// `(D, W)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefaultTheory {
    pub defaults: BTreeSet<DefaultRule>,
    pub facts: BTreeSet<Formula>,
}

impl DefaultTheory {
    pub fn new(
        defaults: impl IntoIterator<Item = DefaultRule>,
        facts: impl IntoIterator<Item = Formula>,
    ) -> DefaultTheory {
        DefaultTheory {
            defaults: defaults.into_iter().collect(),
            facts: facts.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.defaults.len() + self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &DefaultTheory) -> bool {
        self.defaults.is_subset(&other.defaults) && self.facts.is_subset(&other.facts)
    }

    /// Defaults first, then facts, each group sorted by print form.
    pub fn items(&self) -> Vec<String> {
        let mut v = sorted_strings(&self.defaults);
        v.extend(sorted_strings(&self.facts));
        v
    }
}

/// Finite stand-in for an extension `Cn(W ∪ cons(generating))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRep {
    /// Generating defaults in an order in which each one's pre-condition
    /// follows from the facts and the consequents listed before it.
    pub generating: Vec<DefaultRule>,
    pub base: Vec<Formula>,
    /// Set when the facts themselves are inconsistent.
    pub inconsistent: bool,
}

impl ExtensionRep {
    /// The finite base whose closure is the extension.
    pub fn formulas(&self) -> Vec<Formula> {
        self.base
            .iter()
            .cloned()
            .chain(self.generating.iter().map(|d| d.cons.clone()))
            .collect()
    }

    pub fn entails(&self, prover: &Prover, f: &Formula) -> Result<bool> {
        prover.entails(&self.formulas(), f)
    }

    /// Checks that every generating default is applicable at its position.
    pub fn is_grounded(&self, prover: &Prover) -> Result<bool> {
        let mut known = self.base.clone();
        for d in &self.generating {
            if !prover.entails(&known, &d.pre)? {
                return Ok(false);
            }
            known.push(d.cons.clone());
        }
        Ok(true)
    }
}

/// Computes `Γ(E)` for `E = Cn(e)` and returns the defaults it applies, in
/// application order. `Γ(E)` itself is `Cn(W ∪ cons(result))`.
pub fn gamma_closure(prover: &Prover, theory: &DefaultTheory, e: &[Formula]) -> Result<Vec<DefaultRule>> {
    let mut usable = Vec::new();
    for d in &theory.defaults {
        // E ⊬ ¬β  iff  E ∪ {β} is consistent
        if prover.is_consistent(e.iter().chain(std::iter::once(&d.just)))? {
            usable.push(d);
        }
    }
    let mut current: Vec<Formula> = theory.facts.iter().cloned().collect();
    let mut applied: Vec<DefaultRule> = Vec::new();
    let mut pending = usable;
    loop {
        let mut progress = false;
        let mut rest = Vec::new();
        for d in pending {
            if prover.entails(&current, &d.pre)? {
                current.push(d.cons.clone());
                applied.push(d.clone());
                progress = true;
            } else {
                rest.push(d);
            }
        }
        pending = rest;
        if !progress {
            return Ok(applied);
        }
    }
}

/// Every extension of `theory`, ordered by the bit encoding of its
/// generating set over the sorted defaults.
///
/// For each candidate `S ⊆ D`, `E = Cn(W ∪ cons(S))` is an extension iff
/// `Γ(E) = E`. When it is, `Γ(E)` applies exactly the generating defaults of
/// `E`, so keeping only candidates with `applied(Γ(E)) = S` visits each
/// extension once.
pub fn enumerate_extensions(prover: &Prover, theory: &DefaultTheory, bounds: &Bounds) -> Result<Vec<ExtensionRep>> {
    check_bound("defaults", theory.defaults.len(), bounds.default_bound)?;
    let defaults: Vec<&DefaultRule> = theory.defaults.iter().collect();
    let base: Vec<Formula> = theory.facts.iter().cloned().collect();
    let inconsistent = !prover.is_consistent(&base)?;
    let mut out = Vec::new();
    for mask in 0u32..1 << defaults.len() {
        let chosen: BTreeSet<&DefaultRule> = (0..defaults.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| defaults[i])
            .collect();
        let e: Vec<Formula> = base
            .iter()
            .cloned()
            .chain(chosen.iter().map(|d| d.cons.clone()))
            .collect();
        let mut blocked = false;
        for d in &chosen {
            if !prover.is_consistent(e.iter().chain(std::iter::once(&d.just)))? {
                blocked = true;
                break;
            }
        }
        if blocked {
            continue;
        }
        let applied = gamma_closure(prover, theory, &e)?;
        if applied.len() == chosen.len() && applied.iter().all(|d| chosen.contains(d)) {
            out.push(ExtensionRep {
                generating: applied,
                base: base.clone(),
                inconsistent,
            });
        }
    }
    Ok(out)
}

/// Outcome of a `⊢d` query, with enough detail to re-check it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivesVerdict {
    pub holds: bool,
    pub no_extension: bool,
    /// Indices into `extensions` of those entailing the formula.
    pub witnesses: Vec<usize>,
    pub extensions: Vec<ExtensionRep>,
}

/// `theory ⊢d f`: membership in some extension (credulous) or in all of
/// them (skeptical). A theory without extensions derives nothing in either
/// mode.
pub fn default_derives(
    prover: &Prover,
    theory: &DefaultTheory,
    f: &Formula,
    mode: Mode,
    bounds: &Bounds,
) -> Result<DerivesVerdict> {
    let extensions = enumerate_extensions(prover, theory, bounds)?;
    let mut witnesses = Vec::new();
    for (i, ext) in extensions.iter().enumerate() {
        if ext.entails(prover, f)? {
            witnesses.push(i);
        }
    }
    let holds = match mode {
        Mode::Credulous => !witnesses.is_empty(),
        Mode::Skeptical => !extensions.is_empty() && witnesses.len() == extensions.len(),
    };
    Ok(DerivesVerdict {
        holds,
        no_extension: extensions.is_empty(),
        witnesses,
        extensions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefaultArgument {
    pub support: DefaultTheory,
    pub claim: Formula,
}

impl DefaultArgument {
    pub fn default_rules(&self) -> &BTreeSet<DefaultRule> {
        &self.support.defaults
    }

    /// True when the support uses no defaults at all.
    pub fn is_classical(&self) -> bool {
        self.support.defaults.is_empty()
    }

    pub fn is_valid(&self, prover: &Prover, bounds: &Bounds) -> Result<bool> {
        if !prover.is_consistent(&self.support.facts)? || !derives(prover, &self.support, &self.claim, bounds)? {
            return Ok(false);
        }
        for d in &self.support.defaults {
            let mut s = self.support.clone();
            s.defaults.remove(d);
            if derives(prover, &s, &self.claim, bounds)? {
                return Ok(false);
            }
        }
        for w in &self.support.facts {
            let mut s = self.support.clone();
            s.facts.remove(w);
            if derives(prover, &s, &self.claim, bounds)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for DefaultArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{{{}}}, {}>", self.support.items().join(", "), self.claim)
    }
}

fn derives(prover: &Prover, theory: &DefaultTheory, f: &Formula, bounds: &Bounds) -> Result<bool> {
    // every extension lies inside Cn(W ∪ cons(D))
    let all: Vec<&Formula> = theory
        .facts
        .iter()
        .chain(theory.defaults.iter().map(|d| &d.cons))
        .collect();
    if !prover.entails(all, f)? {
        return Ok(false);
    }
    Ok(default_derives(prover, theory, f, Mode::Credulous, bounds)?.holds)
}

/// All default arguments for `claim` drawn from `theory`.
///
/// A support must be minimal under the pairwise subset order on `(D', W')`,
/// which is plain subset order on the disjoint union. Subsets are visited
/// by increasing size, so a candidate is minimal exactly when it contains no
/// support found earlier. Supports with inconsistent facts are skipped.
pub fn default_arguments(
    prover: &Prover,
    theory: &DefaultTheory,
    claim: &Formula,
    bounds: &Bounds,
) -> Result<Vec<DefaultArgument>> {
    check_bound("default theory", theory.len(), bounds.support_bound)?;
    check_bound("defaults", theory.defaults.len(), bounds.default_bound)?;
    let defaults: Vec<&DefaultRule> = theory.defaults.iter().collect();
    let facts: Vec<&Formula> = theory.facts.iter().collect();
    let n = defaults.len() + facts.len();
    let sub = |combo: &[usize]| DefaultTheory {
        defaults: combo
            .iter()
            .filter(|&&i| i < defaults.len())
            .map(|&i| defaults[i].clone())
            .collect(),
        facts: combo
            .iter()
            .filter(|&&i| i >= defaults.len())
            .map(|&i| facts[i - defaults.len()].clone())
            .collect(),
    };
    if !derives_upper(prover, &sub(&(0..n).collect::<Vec<_>>()), claim)? {
        return Ok(Vec::new());
    }
    let mut found: Vec<u32> = Vec::new();
    let mut inconsistent: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    for k in 0..=n {
        for combo in combinations(n, k) {
            let mask = combo.iter().fold(0u32, |m, &i| m | 1 << i);
            let covers = |m: &u32| m & mask == *m;
            if found.iter().any(covers) || inconsistent.iter().any(covers) {
                continue;
            }
            let candidate = sub(&combo);
            if !derives_upper(prover, &candidate, claim)? {
                continue;
            }
            if !prover.is_consistent(&candidate.facts)? {
                let fact_mask = mask & !((1u32 << defaults.len()) - 1);
                inconsistent.push(fact_mask);
                continue;
            }
            if generates_all(prover, &candidate)? {
                found.push(mask);
                out.push(DefaultArgument {
                    support: candidate,
                    claim: claim.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Whether `Cn(W' ∪ cons(D'))` is an extension of `(D', W')`.
///
/// If a candidate derives the claim through an extension generated by a
/// proper subset of its defaults, that subset is itself an extension's
/// generator for the smaller theory, so a smaller support exists and the
/// candidate was pruned. Hence for the candidates reached above, deriving
/// the claim is the same as all of `D'` generating an extension.
fn generates_all(prover: &Prover, theory: &DefaultTheory) -> Result<bool> {
    let e: Vec<Formula> = theory
        .facts
        .iter()
        .cloned()
        .chain(theory.defaults.iter().map(|d| d.cons.clone()))
        .collect();
    Ok(gamma_closure(prover, theory, &e)?.len() == theory.defaults.len())
}

fn derives_upper(prover: &Prover, theory: &DefaultTheory, f: &Formula) -> Result<bool> {
    let all: Vec<&Formula> = theory
        .facts
        .iter()
        .chain(theory.defaults.iter().map(|d| &d.cons))
        .collect();
    prover.entails(all, f)
}

/// Whether an argument with claim `attacker` justification-undercuts
/// `target`: some default of `target` has a justification whose negation
/// follows from `attacker`.
pub fn is_justification_undercut(prover: &Prover, attacker: &Formula, target: &DefaultArgument) -> Result<bool> {
    for d in target.default_rules() {
        if prover.entails([attacker], &Formula::not(d.just.clone()))? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Claims to generate arguments for when none are given: every fact and
/// default consequent, and the negation of each.
pub fn default_claims(theory: &DefaultTheory) -> Vec<Formula> {
    let base: Vec<Formula> = theory
        .facts
        .iter()
        .cloned()
        .chain(theory.defaults.iter().map(|d| d.cons.clone()))
        .collect();
    crate::classical::with_negations(&base)
}
