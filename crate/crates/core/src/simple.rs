//! Simple logic: literals, conjunctive rules, and modus ponens as the only
//! proof rule.
//!
//! A literal is a consequence of a knowledge base only when it is the head of
//! an applicable rule; facts on their own are not consequences. As a result a
//! bare fact is never a simple argument.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::attack::{AttackKind, KindSet};
use crate::error::{Error, Result};
use crate::prop::{Formula, Literal, Schematic};

/// `b1 & ... & bk -> h`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleRule {
    pub body: Vec<Literal>,
    pub head: Literal,
}

impl SimpleRule {
    pub fn new(body: Vec<Literal>, head: Literal) -> Result<SimpleRule> {
        if body.is_empty() {
            return Err(Error::Invalid("simple rule needs a non-empty body".into()));
        }
        Ok(SimpleRule { body, head })
    }

    /// Parses `a & !b -> c`.
    pub fn parse(text: &str) -> Result<SimpleRule> {
        Self::parse_with(text, false)
    }

    pub(crate) fn parse_with(text: &str, allow_vars: bool) -> Result<SimpleRule> {
        let f = if allow_vars {
            crate::prop::parse_schema(text)?
        } else {
            crate::prop::parse_formula(text)?
        };
        let shape = || Error::Syntax {
            line: 1,
            column: 1,
            message: format!("expected `l1 & ... & lk -> l`, found `{}`", f),
        };
        let Formula::Implies(body, head) = &f else {
            return Err(shape());
        };
        let head = Literal::from_formula(head).ok_or_else(shape)?;
        let body = match body.as_ref() {
            Formula::And(items) => items
                .iter()
                .map(Literal::from_formula)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(shape)?,
            other => vec![Literal::from_formula(other).ok_or_else(shape)?],
        };
        SimpleRule::new(body, head)
    }
}

impl fmt::Display for SimpleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, " -> {}", self.head)
    }
}

impl fmt::Debug for SimpleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self)
    }
}

impl Schematic for SimpleRule {
    fn variables(&self) -> BTreeSet<String> {
        self.body
            .iter()
            .chain(std::iter::once(&self.head))
            .flat_map(|l| l.variables())
            .collect()
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        SimpleRule {
            body: self.body.iter().map(|l| l.substitute(binding)).collect(),
            head: self.head.substitute(binding),
        }
    }
}

/// A set of literals and a set of simple rules.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleKb {
    pub facts: BTreeSet<Literal>,
    pub rules: BTreeSet<SimpleRule>,
}

impl SimpleKb {
    pub fn new(facts: impl IntoIterator<Item = Literal>, rules: impl IntoIterator<Item = SimpleRule>) -> SimpleKb {
        SimpleKb {
            facts: facts.into_iter().collect(),
            rules: rules.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.facts.len() + self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &SimpleKb) -> bool {
        self.facts.is_subset(&other.facts) && self.rules.is_subset(&other.rules)
    }

    /// Every literal obtainable by modus ponens, as a least fixpoint.
    pub fn consequences(&self) -> BTreeSet<Literal> {
        let mut derived: BTreeSet<Literal> = BTreeSet::new();
        let available = |l: &Literal, derived: &BTreeSet<Literal>| self.facts.contains(l) || derived.contains(l);
        loop {
            let mut changed = false;
            for r in &self.rules {
                if !derived.contains(&r.head) && r.body.iter().all(|b| available(b, &derived)) {
                    derived.insert(r.head.clone());
                    changed = true;
                }
            }
            if !changed {
                return derived;
            }
        }
    }

    /// `self ⊢s goal`.
    pub fn derives(&self, goal: &Literal) -> bool {
        self.consequences().contains(goal)
    }

    /// Support elements in a stable order, facts first.
    pub fn items(&self) -> Vec<String> {
        self.facts
            .iter()
            .map(|f| f.to_string())
            .chain(self.rules.iter().map(|r| r.to_string()))
            .collect()
    }
}

/// `derives_s`: whether `goal` follows from `delta` by modus ponens.
pub fn derives_s(delta: &SimpleKb, goal: &Literal) -> bool {
    delta.derives(goal)
}

/// `⟨support, claim⟩` with a minimal support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleArgument {
    pub support: SimpleKb,
    pub claim: Literal,
}

impl SimpleArgument {
    /// Checks the argument conditions: derivation and minimality.
    pub fn is_valid(&self) -> bool {
        self.support.derives(&self.claim) && is_minimal(&self.support, &self.claim)
    }
}

impl fmt::Display for SimpleArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{{{}}}, {}>", self.support.items().join(", "), self.claim)
    }
}

/// Derivability is monotone, so a support is minimal as soon as no
/// single-element removal still derives the claim.
fn is_minimal(support: &SimpleKb, claim: &Literal) -> bool {
    let without_fact = support.facts.iter().all(|f| {
        let mut s = support.clone();
        s.facts.remove(f);
        !s.derives(claim)
    });
    without_fact
        && support.rules.iter().all(|r| {
            let mut s = support.clone();
            s.rules.remove(r);
            !s.derives(claim)
        })
}

type Candidates = Vec<SimpleKb>;

/// Drops every candidate that strictly contains another one.
fn keep_minimal(mut cands: Candidates) -> Candidates {
    cands.sort_by_key(SimpleKb::len);
    cands.dedup();
    let mut out: Candidates = Vec::new();
    for c in cands {
        if !out.iter().any(|o| o.is_subset(&c)) {
            out.push(c);
        }
    }
    out
}

struct SupportSearch<'a> {
    kb: &'a SimpleKb,
}

impl SupportSearch<'_> {
    /// Supports of acyclic derivations of `goal` by a rule, avoiding the
    /// literals currently on the derivation path.
    fn derivations(&self, goal: &Literal, path: &mut Vec<Literal>) -> Candidates {
        if path.contains(goal) {
            return Vec::new();
        }
        path.push(goal.clone());
        let mut out = Vec::new();
        for rule in self.kb.rules.iter().filter(|r| &r.head == goal) {
            let mut partial: Candidates = vec![SimpleKb::new([], [rule.clone()])];
            for b in &rule.body {
                let options = self.options(b, path);
                let mut next = Vec::new();
                for p in &partial {
                    for o in &options {
                        let mut merged = p.clone();
                        merged.facts.extend(o.facts.iter().cloned());
                        merged.rules.extend(o.rules.iter().cloned());
                        next.push(merged);
                    }
                }
                partial = keep_minimal(next);
                if partial.is_empty() {
                    break;
                }
            }
            out.extend(partial);
        }
        path.pop();
        keep_minimal(out)
    }

    /// Ways to make a body literal available: as a fact or by derivation.
    fn options(&self, lit: &Literal, path: &mut Vec<Literal>) -> Candidates {
        let mut opts = Vec::new();
        if self.kb.facts.contains(lit) {
            opts.push(SimpleKb::new([lit.clone()], []));
        }
        opts.extend(self.derivations(lit, path));
        keep_minimal(opts)
    }
}

/// Every simple argument of `delta`: for each derivable literal, each
/// minimal sub-base deriving it. Sorted by claim, then support.
pub fn all_simple_arguments(delta: &SimpleKb) -> Vec<SimpleArgument> {
    let search = SupportSearch { kb: delta };
    let mut out = Vec::new();
    for claim in delta.consequences() {
        for support in search.derivations(&claim, &mut Vec::new()) {
            if is_minimal(&support, &claim) {
                out.push(SimpleArgument {
                    support,
                    claim: claim.clone(),
                });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Which simple attacks `a` mounts on `b`.
///
/// Undercut looks at the body literals of the rules in `b`'s support only;
/// rebut compares the two claims.
pub fn simple_attack_kinds(a: &SimpleArgument, b: &SimpleArgument) -> KindSet {
    let mut kinds = KindSet::new();
    if b.support
        .rules
        .iter()
        .flat_map(|r| &r.body)
        .any(|l| a.claim.is_complement_of(l))
    {
        kinds.insert(AttackKind::Undercut);
    }
    if a.claim.is_complement_of(&b.claim) {
        kinds.insert(AttackKind::Rebut);
    }
    kinds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::parse_literal;
    use proptest::prelude::*;

    fn lit(s: &str) -> Literal {
        parse_literal(s).unwrap()
    }

    fn rule(s: &str) -> SimpleRule {
        SimpleRule::parse(s).unwrap()
    }

    fn kb(facts: &[&str], rules: &[&str]) -> SimpleKb {
        SimpleKb::new(facts.iter().map(|f| lit(f)), rules.iter().map(|r| rule(r)))
    }

    fn arg(facts: &[&str], rules: &[&str], claim: &str) -> SimpleArgument {
        SimpleArgument {
            support: kb(facts, rules),
            claim: lit(claim),
        }
    }

    #[test]
    fn modus_ponens_chain() {
        let delta = kb(&["a", "b"], &["a & b -> c", "c -> d"]);
        assert!(derives_s(&delta, &lit("c")));
        assert!(derives_s(&delta, &lit("d")));
        assert!(!derives_s(&delta, &lit("a")));
        assert!(!derives_s(&delta, &lit("b")));
        assert!(!derives_s(&kb(&["a"], &[]), &lit("a")));
    }

    #[test]
    fn rule_parsing() {
        let r = rule("a & !c -> !b");
        assert_eq!(r.body, vec![lit("a"), lit("!c")]);
        assert_eq!(r.head, lit("!b"));
        assert_eq!(r.to_string(), "a & !c -> !b");
        assert!(SimpleRule::parse("a & b").is_err());
        assert!(SimpleRule::parse("a | b -> c").is_err());
        assert!(SimpleRule::parse(" -> c").is_err());
    }

    #[test]
    fn self_cycle_knowledge_base_has_three_arguments() {
        let delta = kb(&["a", "b", "c"], &["a & c -> !a", "b -> !c", "a & c -> !b"]);
        let args = all_simple_arguments(&delta);
        assert_eq!(
            args,
            vec![
                arg(&["a", "c"], &["a & c -> !a"], "!a"),
                arg(&["a", "c"], &["a & c -> !b"], "!b"),
                arg(&["b"], &["b -> !c"], "!c"),
            ]
        );
        // the first one undercuts itself
        assert_eq!(simple_attack_kinds(&args[0], &args[0]), [AttackKind::Undercut].into());
    }

    #[test]
    fn good_employee_argument() {
        let delta = kb(
            &["clever(John)", "conscientious(John)"],
            &["clever(John) & conscientious(John) -> goodEmployee(John)"],
        );
        let args = all_simple_arguments(&delta);
        assert_eq!(args.len(), 1);
        assert_eq!(args[0].support, delta);
        assert_eq!(args[0].claim, lit("goodEmployee(John)"));
    }

    #[test]
    fn facts_alone_give_no_arguments() {
        assert!(all_simple_arguments(&kb(&["a", "!b"], &[])).is_empty());
    }

    #[test]
    fn undercut_and_rebut() {
        let a1 = arg(&["efficientMetro"], &["efficientMetro -> useMetro"], "useMetro");
        let a2 = arg(&["strikeMetro"], &["strikeMetro -> !efficientMetro"], "!efficientMetro");
        assert_eq!(simple_attack_kinds(&a2, &a1), [AttackKind::Undercut].into());
        assert!(simple_attack_kinds(&a1, &a2).is_empty());

        let d1 = arg(&["govDeficit"], &["govDeficit -> cutGovSpending"], "cutGovSpending");
        let d2 = arg(&["weakEconomy"], &["weakEconomy -> !cutGovSpending"], "!cutGovSpending");
        assert_eq!(simple_attack_kinds(&d1, &d2), [AttackKind::Rebut].into());
        assert_eq!(simple_attack_kinds(&d2, &d1), [AttackKind::Rebut].into());
    }

    #[test]
    fn alternative_derivations_give_separate_arguments() {
        let delta = kb(&["a", "b", "c"], &["a -> x", "b -> x", "x -> y", "a & b -> y"]);
        let ys: Vec<_> = all_simple_arguments(&delta)
            .into_iter()
            .filter(|a| a.claim == lit("y"))
            .collect();
        assert_eq!(
            ys,
            vec![
                arg(&["a"], &["a -> x", "x -> y"], "y"),
                arg(&["a", "b"], &["a & b -> y"], "y"),
                arg(&["b"], &["b -> x", "x -> y"], "y"),
            ]
        );
    }

    #[test]
    fn cyclic_rules_terminate() {
        let delta = kb(&["a"], &["a -> b", "b -> c", "c -> b", "b -> a"]);
        let args = all_simple_arguments(&delta);
        assert!(args.iter().all(SimpleArgument::is_valid));
        assert!(args.contains(&arg(&["a"], &["a -> b", "b -> a"], "a")));
    }

    // Brute-force oracle: enumerate every sub-base, keep minimal derivers.
    fn brute_force_arguments(delta: &SimpleKb) -> Vec<SimpleArgument> {
        let items: Vec<std::result::Result<Literal, SimpleRule>> = delta
            .facts
            .iter()
            .cloned()
            .map(Ok)
            .chain(delta.rules.iter().cloned().map(Err))
            .collect();
        let subsets: Vec<SimpleKb> = (0u32..1 << items.len())
            .map(|mask| {
                let mut s = SimpleKb::default();
                for (i, it) in items.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        match it {
                            Ok(l) => {
                                s.facts.insert(l.clone());
                            }
                            Err(r) => {
                                s.rules.insert(r.clone());
                            }
                        }
                    }
                }
                s
            })
            .collect();
        let mut out = Vec::new();
        for claim in delta.consequences() {
            let derivers: Vec<&SimpleKb> = subsets.iter().filter(|s| s.derives(&claim)).collect();
            for s in &derivers {
                if !derivers.iter().any(|t| t != s && t.is_subset(s)) {
                    out.push(SimpleArgument {
                        support: (*s).clone(),
                        claim: claim.clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    fn arb_kb(max_facts: usize, max_rules: usize) -> impl Strategy<Value = SimpleKb> {
        let atoms = vec!["a", "b", "c", "d"];
        let literal = (prop::sample::select(atoms), any::<bool>()).prop_map(|(a, p)| Literal {
            atom: crate::Atom::new(a),
            positive: p,
        });
        let rule = (prop::collection::vec(literal.clone(), 1..3), literal.clone())
            .prop_map(|(body, head)| SimpleRule { body, head });
        (
            prop::collection::btree_set(literal, 0..=max_facts),
            prop::collection::btree_set(rule, 0..=max_rules),
        )
            .prop_map(|(facts, rules)| SimpleKb { facts, rules })
    }

    fn naive_consequences(kb: &SimpleKb) -> BTreeSet<Literal> {
        // iterate the one-step operator from the empty set until stable
        let mut current: BTreeSet<Literal> = BTreeSet::new();
        loop {
            let next: BTreeSet<Literal> = kb
                .rules
                .iter()
                .filter(|r| r.body.iter().all(|b| kb.facts.contains(b) || current.contains(b)))
                .map(|r| r.head.clone())
                .collect();
            if next == current {
                return current;
            }
            current = next;
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

        #[test]
        fn fixpoint_matches_naive_iteration(delta in arb_kb(5, 5)) {
            prop_assert_eq!(delta.consequences(), naive_consequences(&delta));
        }

        #[test]
        fn arguments_match_brute_force(delta in arb_kb(4, 5)) {
            prop_assert_eq!(all_simple_arguments(&delta), brute_force_arguments(&delta));
        }

        #[test]
        fn arguments_are_valid_and_claims_are_rule_heads(delta in arb_kb(6, 5)) {
            for a in all_simple_arguments(&delta) {
                prop_assert!(a.is_valid());
                prop_assert!(a.support.rules.iter().any(|r| r.head == a.claim));
            }
        }

        #[test]
        fn construction_is_monotonic(small in arb_kb(4, 3), extra in arb_kb(4, 3)) {
            let mut big = small.clone();
            big.facts.extend(extra.facts);
            big.rules.extend(extra.rules);
            let big_args = all_simple_arguments(&big);
            for a in all_simple_arguments(&small) {
                prop_assert!(big_args.contains(&a));
            }
        }
    }
}
