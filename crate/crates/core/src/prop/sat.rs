//! Classical entailment, consistency and equivalence.
//!
//! Every query is reduced to satisfiability of a clause set: formulas are
//! turned into clauses with a structural (Tseitin) encoding and handed to a
//! small DPLL search with two-watched-literal unit propagation and
//! chronological backtracking.

use std::collections::{BTreeMap, BTreeSet};

use super::{Atom, Formula, Valuation};
use crate::error::{Error, Result};

pub const DEFAULT_ATOM_LIMIT: usize = 24;

/// Entry point for classical reasoning. The only configuration is the cap on
/// distinct atoms per query; exceeding it is an error, never a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prover {
    pub atom_limit: usize,
}

impl Default for Prover {
    fn default() -> Self {
        Prover {
            atom_limit: DEFAULT_ATOM_LIMIT,
        }
    }
}

impl Prover {
    pub fn with_atom_limit(atom_limit: usize) -> Prover {
        Prover { atom_limit }
    }

    /// A model of all `formulas`, or `None` when they are jointly unsatisfiable.
    pub fn model<'a, I>(&self, formulas: I) -> Result<Option<Valuation>>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let formulas: Vec<&Formula> = formulas.into_iter().collect();
        let mut atoms = BTreeSet::new();
        for f in &formulas {
            f.collect_atoms(&mut atoms);
        }
        if atoms.len() > self.atom_limit {
            return Err(Error::AtomLimit {
                atoms: atoms.len(),
                limit: self.atom_limit,
            });
        }
        let mut enc = Encoder::new(atoms);
        for f in &formulas {
            enc.assert(f, true);
        }
        let n_atoms = enc.atom_vars.len();
        let atom_names: Vec<Atom> = enc.atom_vars.keys().cloned().collect();
        let mut solver = Solver::new(enc.n_vars, enc.clauses);
        Ok(solver.solve().then(|| {
            atom_names
                .into_iter()
                .enumerate()
                .take(n_atoms)
                .map(|(i, a)| (a, solver.value(i as u32).unwrap_or(false)))
                .collect()
        }))
    }

    pub fn satisfiable<'a, I>(&self, formulas: I) -> Result<bool>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        Ok(self.model(formulas)?.is_some())
    }

    /// `gamma ⊢ f`: no valuation satisfies `gamma` together with `!f`.
    pub fn entails<'a, I>(&self, gamma: I, f: &Formula) -> Result<bool>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let negated = Formula::not(f.clone());
        let mut all: Vec<&Formula> = gamma.into_iter().collect();
        all.push(&negated);
        Ok(!self.satisfiable(all)?)
    }

    pub fn is_consistent<'a, I>(&self, gamma: I) -> Result<bool>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        self.satisfiable(gamma)
    }

    pub fn equivalent(&self, f: &Formula, g: &Formula) -> Result<bool> {
        Ok(!self.satisfiable([&Formula::not(Formula::iff(f.clone(), g.clone()))])?)
    }

    /// Two finite sets with the same classical consequences.
    pub fn sets_equivalent(&self, a: &[Formula], b: &[Formula]) -> Result<bool> {
        for f in b {
            if !self.entails(a, f)? {
                return Ok(false);
            }
        }
        for f in a {
            if !self.entails(b, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// [`Prover::entails`] with the default atom limit.
pub fn entails<'a, I>(gamma: I, f: &Formula) -> Result<bool>
where
    I: IntoIterator<Item = &'a Formula>,
{
    Prover::default().entails(gamma, f)
}

pub fn is_consistent<'a, I>(gamma: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a Formula>,
{
    Prover::default().is_consistent(gamma)
}

pub fn equivalent(f: &Formula, g: &Formula) -> Result<bool> {
    Prover::default().equivalent(f, g)
}

// Literal encoding: variable v, polarity in the low bit (1 = negated).
type Lit = u32;

fn lit(var: u32, negated: bool) -> Lit {
    var << 1 | negated as u32
}

fn var_of(l: Lit) -> u32 {
    l >> 1
}

fn neg(l: Lit) -> Lit {
    l ^ 1
}

struct Encoder {
    atom_vars: BTreeMap<Atom, u32>,
    n_vars: u32,
    clauses: Vec<Vec<Lit>>,
    truth: Option<Lit>,
}

impl Encoder {
    fn new(atoms: BTreeSet<Atom>) -> Encoder {
        let atom_vars: BTreeMap<Atom, u32> = atoms.into_iter().enumerate().map(|(i, a)| (a, i as u32)).collect();
        let n_vars = atom_vars.len() as u32;
        Encoder {
            atom_vars,
            n_vars,
            clauses: Vec::new(),
            truth: None,
        }
    }

    fn fresh(&mut self) -> u32 {
        self.n_vars += 1;
        self.n_vars - 1
    }

    fn truth(&mut self) -> Lit {
        if let Some(t) = self.truth {
            return t;
        }
        let t = lit(self.fresh(), false);
        self.clauses.push(vec![t]);
        self.truth = Some(t);
        t
    }

    /// Adds clauses forcing `f` to have the given polarity, splitting
    /// top-level conjunctions (and negated disjunctions) without auxiliaries.
    fn assert(&mut self, f: &Formula, positive: bool) {
        match (f, positive) {
            (Formula::And(fs), true) | (Formula::Or(fs), false) => {
                for g in fs {
                    self.assert(g, positive);
                }
            }
            (Formula::Not(g), p) => self.assert(g, !p),
            (Formula::Implies(a, b), false) => {
                self.assert(a, true);
                self.assert(b, false);
            }
            (Formula::True, true) | (Formula::False, false) => {}
            (Formula::True, false) | (Formula::False, true) => self.clauses.push(Vec::new()),
            (Formula::Or(fs), true) => {
                let clause = fs.iter().map(|g| self.encode(g)).collect();
                self.clauses.push(clause);
            }
            (Formula::Implies(a, b), true) => {
                let clause = vec![neg(self.encode(a)), self.encode(b)];
                self.clauses.push(clause);
            }
            (Formula::And(fs), false) => {
                let clause = fs.iter().map(|g| neg(self.encode(g))).collect();
                self.clauses.push(clause);
            }
            (other, p) => {
                let l = self.encode(other);
                self.clauses.push(vec![if p { l } else { neg(l) }]);
            }
        }
    }

    /// Returns a literal equivalent to `f`, adding definitional clauses.
    fn encode(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Atom(a) => lit(self.atom_vars[a], false),
            Formula::Not(g) => neg(self.encode(g)),
            Formula::True => self.truth(),
            Formula::False => neg(self.truth()),
            Formula::And(fs) => {
                let parts: Vec<Lit> = fs.iter().map(|g| self.encode(g)).collect();
                let x = lit(self.fresh(), false);
                let mut long = vec![x];
                for &p in &parts {
                    self.clauses.push(vec![neg(x), p]);
                    long.push(neg(p));
                }
                self.clauses.push(long);
                x
            }
            Formula::Or(fs) => {
                let parts: Vec<Lit> = fs.iter().map(|g| self.encode(g)).collect();
                let x = lit(self.fresh(), false);
                let mut long = vec![neg(x)];
                for &p in &parts {
                    self.clauses.push(vec![x, neg(p)]);
                    long.push(p);
                }
                self.clauses.push(long);
                x
            }
            Formula::Implies(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let x = lit(self.fresh(), false);
                self.clauses.push(vec![neg(x), neg(a), b]);
                self.clauses.push(vec![x, a]);
                self.clauses.push(vec![x, neg(b)]);
                x
            }
            Formula::Iff(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let x = lit(self.fresh(), false);
                self.clauses.push(vec![neg(x), neg(a), b]);
                self.clauses.push(vec![neg(x), a, neg(b)]);
                self.clauses.push(vec![x, a, b]);
                self.clauses.push(vec![x, neg(a), neg(b)]);
                x
            }
        }
    }
}

const UNASSIGNED: i8 = -1;

struct Solver {
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<usize>>,
    assign: Vec<i8>,
    trail: Vec<Lit>,
    // (trail index of the decision, whether it is already the flipped branch)
    levels: Vec<(usize, bool)>,
    qhead: usize,
    conflict_at_root: bool,
}

impl Solver {
    fn new(n_vars: u32, clauses: Vec<Vec<Lit>>) -> Solver {
        let n = n_vars as usize;
        let mut s = Solver {
            clauses: Vec::with_capacity(clauses.len()),
            watches: vec![Vec::new(); 2 * n],
            assign: vec![UNASSIGNED; n],
            trail: Vec::new(),
            levels: Vec::new(),
            qhead: 0,
            conflict_at_root: false,
        };
        for mut c in clauses {
            c.sort_unstable();
            c.dedup();
            if c.windows(2).any(|w| w[0] == neg(w[1])) {
                continue; // tautology
            }
            match c.len() {
                0 => s.conflict_at_root = true,
                1 => {
                    if !s.enqueue(c[0]) {
                        s.conflict_at_root = true;
                    }
                }
                _ => {
                    let idx = s.clauses.len();
                    s.watches[c[0] as usize].push(idx);
                    s.watches[c[1] as usize].push(idx);
                    s.clauses.push(c);
                }
            }
        }
        s
    }

    fn lit_value(&self, l: Lit) -> i8 {
        match self.assign[var_of(l) as usize] {
            UNASSIGNED => UNASSIGNED,
            v => (v as u32 ^ (l & 1)) as i8,
        }
    }

    fn value(&self, var: u32) -> Option<bool> {
        match self.assign[var as usize] {
            UNASSIGNED => None,
            v => Some(v == 1),
        }
    }

    fn enqueue(&mut self, l: Lit) -> bool {
        match self.lit_value(l) {
            1 => true,
            0 => false,
            _ => {
                self.assign[var_of(l) as usize] = (1 ^ (l & 1)) as i8;
                self.trail.push(l);
                true
            }
        }
    }

    /// Unit propagation; false on conflict.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = neg(p);
            let watching = std::mem::take(&mut self.watches[false_lit as usize]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = false;
            for (k, &ci) in watching.iter().enumerate() {
                if conflict {
                    keep.extend_from_slice(&watching[k..]);
                    break;
                }
                if self.clauses[ci][0] == false_lit {
                    self.clauses[ci].swap(0, 1);
                }
                let first = self.clauses[ci][0];
                if self.lit_value(first) == 1 {
                    keep.push(ci);
                    continue;
                }
                let clause = &self.clauses[ci];
                let replacement = (2..clause.len()).find(|&j| self.lit_value(clause[j]) != 0);
                if let Some(j) = replacement {
                    let clause = &mut self.clauses[ci];
                    clause.swap(1, j);
                    let w = clause[1];
                    self.watches[w as usize].push(ci);
                    continue;
                }
                keep.push(ci);
                if !self.enqueue(first) {
                    conflict = true;
                }
            }
            self.watches[false_lit as usize] = keep;
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        for &l in &self.trail[len..] {
            self.assign[var_of(l) as usize] = UNASSIGNED;
        }
        self.trail.truncate(len);
        self.qhead = len;
    }

    fn solve(&mut self) -> bool {
        if self.conflict_at_root {
            return false;
        }
        loop {
            if !self.propagate() {
                // flip the most recent unflipped decision
                loop {
                    let Some((at, flipped)) = self.levels.pop() else {
                        return false;
                    };
                    let decision = self.trail[at];
                    self.undo_to(at);
                    if !flipped {
                        self.levels.push((at, true));
                        self.enqueue(neg(decision));
                        break;
                    }
                }
                continue;
            }
            let Some(var) = self.assign.iter().position(|&v| v == UNASSIGNED) else {
                return true;
            };
            self.levels.push((self.trail.len(), false));
            self.enqueue(lit(var as u32, false));
        }
    }
}
