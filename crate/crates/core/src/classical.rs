//! Classical arguments: minimal consistent subsets of a premise set that
//! entail a claim, and the attack relations between them.

use std::collections::BTreeSet;
use std::fmt;

use crate::attack::{AttackKind, KindSet};
use crate::error::Result;
use crate::prop::{Formula, Prover};
use crate::{check_bound, Bounds};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalArgument {
    pub support: BTreeSet<Formula>,
    pub claim: Formula,
}

impl ClassicalArgument {
    pub fn new(support: impl IntoIterator<Item = Formula>, claim: Formula) -> Self {
        ClassicalArgument {
            support: support.into_iter().collect(),
            claim,
        }
    }

    /// Entailment, consistency and minimality of the support.
    pub fn is_valid(&self, prover: &Prover) -> Result<bool> {
        if !prover.is_consistent(&self.support)? || !prover.entails(&self.support, &self.claim)? {
            return Ok(false);
        }
        for drop in &self.support {
            let rest = self.support.iter().filter(|f| *f != drop);
            if prover.entails(rest, &self.claim)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Support items as printed strings, sorted.
    pub fn support_items(&self) -> Vec<String> {
        sorted_strings(&self.support)
    }
}

pub(crate) fn sorted_strings<'a, T: fmt::Display + 'a>(items: impl IntoIterator<Item = &'a T>) -> Vec<String> {
    let mut v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    v.sort();
    v
}

impl fmt::Display for ClassicalArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{{{}}}, {}>", self.support_items().join(", "), self.claim)
    }
}

/// Subsets of `0..n` of size `k`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.clone()?;
        // advance to the next combination
        let mut next = cur.clone();
        let mut i = k;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                idx = Some(next);
                break;
            }
        }
        Some(cur)
    })
}

/// All classical arguments for `claim` whose support is drawn from `delta`.
///
/// Subsets are visited by increasing size; supersets of a support already
/// found, and supersets of inconsistent subsets, are skipped.
pub fn classical_arguments(
    prover: &Prover,
    delta: &BTreeSet<Formula>,
    claim: &Formula,
    bounds: &Bounds,
) -> Result<Vec<ClassicalArgument>> {
    check_bound("premises", delta.len(), bounds.support_bound)?;
    let items: Vec<&Formula> = delta.iter().collect();
    if !prover.entails(items.iter().copied(), claim)? {
        return Ok(Vec::new());
    }
    let n = items.len();
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
            let chosen: Vec<&Formula> = combo.iter().map(|&i| items[i]).collect();
            if !prover.is_consistent(chosen.iter().copied())? {
                inconsistent.push(mask);
                continue;
            }
            if prover.entails(chosen.iter().copied(), claim)? {
                found.push(mask);
                out.push(ClassicalArgument::new(chosen.into_iter().cloned(), claim.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The classical attack kinds among `enabled` by which `a` attacks `b`.
pub fn classical_attack_kinds(
    prover: &Prover,
    a: &ClassicalArgument,
    b: &ClassicalArgument,
    enabled: &KindSet,
    bounds: &Bounds,
) -> Result<KindSet> {
    claim_attack_kinds(prover, &a.claim, &b.support, &b.claim, enabled, bounds)
}

/// Attack kinds of a claim against a (support, claim) pair, shared with
/// default arguments whose facts play the role of the support.
pub(crate) fn claim_attack_kinds(
    prover: &Prover,
    claim: &Formula,
    support: &BTreeSet<Formula>,
    target_claim: &Formula,
    enabled: &KindSet,
    bounds: &Bounds,
) -> Result<KindSet> {
    let mut kinds = KindSet::new();
    let on = |k| enabled.contains(&k);
    // claim ⊢ ¬∧Ψ for some non-empty Ψ ⊆ support iff claim ∪ support is
    // inconsistent; every undercut needs this.
    let defeats = !support.is_empty()
        && (on(AttackKind::Defeater) || on(AttackKind::Undercut) || on(AttackKind::DirectUndercut))
        && !prover.is_consistent(support.iter().chain(std::iter::once(claim)))?;
    if defeats && on(AttackKind::Defeater) {
        kinds.insert(AttackKind::Defeater);
    }
    if defeats && on(AttackKind::DirectUndercut) {
        for phi in support {
            if prover.equivalent(claim, &Formula::not(phi.clone()))? {
                kinds.insert(AttackKind::DirectUndercut);
                break;
            }
        }
    }
    if defeats && on(AttackKind::Undercut) {
        // a direct undercut is an undercut with a singleton Ψ
        if kinds.contains(&AttackKind::DirectUndercut) || has_undercut(prover, claim, support, bounds)? {
            kinds.insert(AttackKind::Undercut);
        }
    }
    if on(AttackKind::Rebuttal) && prover.equivalent(claim, &Formula::not(target_claim.clone()))? {
        kinds.insert(AttackKind::Rebuttal);
    }
    Ok(kinds)
}

fn has_undercut(prover: &Prover, claim: &Formula, support: &BTreeSet<Formula>, bounds: &Bounds) -> Result<bool> {
    check_bound("undercut support", support.len(), bounds.psi_bound)?;
    let items: Vec<&Formula> = support.iter().collect();
    for k in 1..=items.len() {
        for combo in combinations(items.len(), k) {
            let psi = Formula::and(combo.iter().map(|&i| items[i].clone()).collect());
            if prover.equivalent(claim, &Formula::not(psi))? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Claims worth arguing about when no explicit focal list is given: each
/// premise, the negation of each premise, and the negation of each
/// conjunction of up to `depth` premises.
pub fn default_focal_claims(delta: &BTreeSet<Formula>, depth: usize) -> Vec<Formula> {
    let items: Vec<&Formula> = delta.iter().collect();
    let mut out: Vec<Formula> = items.iter().map(|f| (*f).clone()).collect();
    for k in 1..=depth.min(items.len()) {
        for combo in combinations(items.len(), k) {
            let conj = Formula::and(combo.iter().map(|&i| items[i].clone()).collect());
            out.push(conj.negate());
        }
    }
    dedup_keep_order(out)
}

/// Each focal claim followed by its negation.
pub fn with_negations(claims: &[Formula]) -> Vec<Formula> {
    dedup_keep_order(claims.iter().flat_map(|c| [c.clone(), c.negate()]).collect())
}

pub(crate) fn dedup_keep_order<T: Ord + Clone>(items: Vec<T>) -> Vec<T> {
    let mut seen = BTreeSet::new();
    items.into_iter().filter(|x| seen.insert(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::parse_formula;
    use proptest::prelude::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Formula> {
        items.iter().map(|s| f(s)).collect()
    }

    fn arg(support: &[&str], claim: &str) -> ClassicalArgument {
        ClassicalArgument::new(set(support), f(claim))
    }

    fn all_kinds() -> KindSet {
        [
            AttackKind::Undercut,
            AttackKind::DirectUndercut,
            AttackKind::Rebuttal,
            AttackKind::Defeater,
        ]
        .into()
    }

    fn kinds(a: &ClassicalArgument, b: &ClassicalArgument) -> KindSet {
        classical_attack_kinds(&Prover::default(), a, b, &all_kinds(), &Bounds::default()).unwrap()
    }

    fn args_for(delta: &[&str], claim: &str) -> Vec<ClassicalArgument> {
        classical_arguments(&Prover::default(), &set(delta), &f(claim), &Bounds::default()).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn inconsistent_supersets_are_excluded() {
        assert_eq!(args_for(&["a", "!a"], "a"), vec![arg(&["a"], "a")]);
    }

    #[test]
    fn airline_argument() {
        let delta = ["lowCost", "luxury", "lowCost & luxury -> goodFlight"];
        assert_eq!(args_for(&delta, "goodFlight"), vec![arg(&delta, "goodFlight")]);
    }

    #[test]
    fn irrelevant_premise_is_not_used() {
        assert_eq!(args_for(&["a", "b", "a -> c"], "c"), vec![arg(&["a", "a -> c"], "c")]);
        assert!(args_for(&["a"], "b").is_empty());
    }

    #[test]
    fn integrity_constraint_undercuts_without_direct_undercut() {
        let a1 = arg(&["lowCost", "luxury", "lowCost & luxury -> goodFlight"], "goodFlight");
        let a2 = arg(&["!lowCost | !luxury"], "!lowCost | !luxury");
        assert_eq!(kinds(&a2, &a1), [AttackKind::Undercut, AttackKind::Defeater].into());
    }

    fn medical() -> [ClassicalArgument; 3] {
        [
            arg(
                &[
                    "bp(high)",
                    "ok(diuretic)",
                    "bp(high) & ok(diuretic) -> give(diuretic)",
                    "!ok(diuretic) | !ok(betablocker)",
                ],
                "give(diuretic) & !ok(betablocker)",
            ),
            arg(
                &[
                    "bp(high)",
                    "ok(betablocker)",
                    "bp(high) & ok(betablocker) -> give(betablocker)",
                    "!ok(diuretic) | !ok(betablocker)",
                ],
                "give(betablocker) & !ok(diuretic)",
            ),
            arg(
                &["symptom(emphysema)", "symptom(emphysema) -> !ok(betablocker)"],
                "!ok(betablocker)",
            ),
        ]
    }

    #[test]
    fn treatment_arguments() {
        let [top, mid, low] = medical();
        let p = Prover::default();
        assert!(top.is_valid(&p).unwrap() && mid.is_valid(&p).unwrap() && low.is_valid(&p).unwrap());
        assert_eq!(
            kinds(&low, &mid),
            [AttackKind::Undercut, AttackKind::DirectUndercut, AttackKind::Defeater].into()
        );
        assert_eq!(kinds(&top, &mid), [AttackKind::Defeater].into());
        assert_eq!(kinds(&mid, &top), [AttackKind::Defeater].into());
        assert!(kinds(&low, &top).is_empty());
        assert!(kinds(&top, &low).is_empty());
    }

    #[test]
    fn disabled_kinds_are_not_reported() {
        let [top, mid, _] = medical();
        let only = [AttackKind::Rebuttal].into();
        let got = classical_attack_kinds(&Prover::default(), &top, &mid, &only, &Bounds::default());
        assert!(got.unwrap().is_empty());
    }

    #[test]
    fn rebuttal_on_negated_claims() {
        let a = arg(&["a"], "a");
        let b = arg(&["!a"], "!a");
        let k = kinds(&a, &b);
        assert!(k.contains(&AttackKind::Rebuttal) && k.contains(&AttackKind::DirectUndercut));
    }

    #[test]
    fn focal_claims() {
        let claims = default_focal_claims(&set(&["a", "b"]), 2);
        assert_eq!(claims, vec![f("a"), f("b"), f("!a"), f("!b"), f("!(a & b)")]);
        assert_eq!(with_negations(&[f("a"), f("!a")]), vec![f("a"), f("!a")]);
    }

    #[test]
    fn oversized_premise_set_is_rejected() {
        let delta: BTreeSet<Formula> = (0..5).map(|i| Formula::atom(format!("p{}", i))).collect();
        let bounds = Bounds {
            support_bound: 4,
            ..Bounds::default()
        };
        let err = classical_arguments(&Prover::default(), &delta, &f("p0"), &bounds).unwrap_err();
        assert!(err.is_resource_limit());
    }

    // Oracle: every subset, checked directly by truth tables.
    fn truth_table_sat(fs: &[&Formula]) -> bool {
        let atoms: Vec<_> = fs
            .iter()
            .flat_map(|f| f.atoms())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        (0u32..1 << atoms.len()).any(|m| {
            let v: crate::Valuation = atoms
                .iter()
                .enumerate()
                .map(|(i, a)| (a.clone(), m >> i & 1 == 1))
                .collect();
            fs.iter().all(|f| crate::prop::evaluate(&v, f).unwrap())
        })
    }

    fn tt_entails(gamma: &[&Formula], f: &Formula) -> bool {
        let neg = Formula::not(f.clone());
        let mut all = gamma.to_vec();
        all.push(&neg);
        !truth_table_sat(&all)
    }

    fn brute_force(delta: &BTreeSet<Formula>, claim: &Formula) -> Vec<ClassicalArgument> {
        let items: Vec<&Formula> = delta.iter().collect();
        let ok: Vec<u32> = (0u32..1 << items.len())
            .filter(|m| {
                let s: Vec<&Formula> = (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect();
                truth_table_sat(&s) && tt_entails(&s, claim)
            })
            .collect();
        let mut out: Vec<ClassicalArgument> = ok
            .iter()
            .filter(|m| !ok.iter().any(|o| o != *m && o & *m == *o))
            .map(|m| {
                ClassicalArgument::new(
                    (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i].clone()),
                    claim.clone(),
                )
            })
            .collect();
        out.sort();
        out
    }

    fn arb_small_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop::sample::select(vec!["a", "b", "c", "d"]).prop_map(Formula::atom);
        leaf.prop_recursive(2, 6, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(x, y)| Formula::and(vec![x, y])),
                (inner.clone(), inner.clone()).prop_map(|(x, y)| Formula::or(vec![x, y])),
                (inner.clone(), inner).prop_map(|(x, y)| Formula::implies(x, y)),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

        #[test]
        fn matches_subset_oracle(
            delta in prop::collection::btree_set(arb_small_formula(), 0..=8),
            claim in arb_small_formula(),
        ) {
            let got = classical_arguments(&Prover::default(), &delta, &claim, &Bounds::default()).unwrap();
            prop_assert_eq!(got, brute_force(&delta, &claim));
        }

        #[test]
        fn construction_is_monotonic(
            small in prop::collection::btree_set(arb_small_formula(), 0..=5),
            extra in prop::collection::btree_set(arb_small_formula(), 0..=3),
            claim in arb_small_formula(),
        ) {
            let p = Prover::default();
            let big: BTreeSet<Formula> = small.iter().chain(&extra).cloned().collect();
            let before = classical_arguments(&p, &small, &claim, &Bounds::default()).unwrap();
            let after = classical_arguments(&p, &big, &claim, &Bounds::default()).unwrap();
            for a in before {
                prop_assert!(after.contains(&a));
            }
        }

        #[test]
        fn kind_inclusions(
            s1 in prop::collection::btree_set(arb_small_formula(), 1..=3),
            c1 in arb_small_formula(),
            s2 in prop::collection::btree_set(arb_small_formula(), 1..=3),
            c2 in arb_small_formula(),
        ) {
            let a = ClassicalArgument::new(s1, c1);
            let b = ClassicalArgument::new(s2, c2);
            let ab = kinds(&a, &b);
            if ab.contains(&AttackKind::DirectUndercut) {
                prop_assert!(ab.contains(&AttackKind::Undercut));
            }
            if ab.contains(&AttackKind::Undercut) {
                prop_assert!(ab.contains(&AttackKind::Defeater));
            }
            if ab.contains(&AttackKind::Rebuttal) {
                prop_assert!(kinds(&b, &a).contains(&AttackKind::Rebuttal));
                // only meaningful for genuine arguments
                let p = Prover::default();
                if a.is_valid(&p).unwrap() && b.is_valid(&p).unwrap() {
                    prop_assert!(!p.is_consistent(a.support.iter().chain(&b.support)).unwrap());
                }
            }
        }
    }
}
