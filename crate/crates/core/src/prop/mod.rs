//! Ground propositional language shared by every base logic.
//!
//! Formulas are trees over [`Atom`]s. Predicate-style atoms such as
//! `bp(high)` are kept as a single flattened token; the argument list is only
//! looked at when a schema is grounded (see [`ground`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod ground;
mod parse;
pub mod sat;

pub use ground::{ground_schema, harvest_constants, Schematic};
pub use parse::{parse_formula, parse_literal, parse_schema};
pub use sat::{entails, equivalent, is_consistent, Prover, DEFAULT_ATOM_LIMIT};

/// A ground propositional atom, e.g. `efficientMetro` or `bird(Tweety)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Atom(String);

impl Atom {
    /// Builds an atom from its canonical token. Callers that accept user text
    /// should go through the parser instead.
    pub fn new(name: impl Into<String>) -> Atom {
        let name = name.into();
        debug_assert!(!name.is_empty());
        Atom(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Predicate part of `pred(a,b)`, or the whole name for a plain atom.
    pub fn predicate(&self) -> &str {
        match self.0.find('(') {
            Some(i) => &self.0[..i],
            None => &self.0,
        }
    }

    /// Arguments of `pred(a,b)`; empty for a plain atom.
    pub fn args(&self) -> Vec<&str> {
        match self.0.find('(') {
            Some(i) => self.0[i + 1..self.0.len() - 1].split(',').collect(),
            None => Vec::new(),
        }
    }

    pub(crate) fn from_parts(predicate: &str, args: &[&str]) -> Atom {
        if args.is_empty() {
            Atom(predicate.to_string())
        } else {
            Atom(format!("{}({})", predicate, args.join(",")))
        }
    }

    /// Schematic variables among the arguments.
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args().into_iter().filter(|a| is_variable(a))
    }

    pub fn is_ground(&self) -> bool {
        self.variables().next().is_none()
    }
}

/// Variables are single upper-case letters, optionally followed by digits
/// (`X`, `Y2`). Longer capitalised names such as `Tweety` are constants.
pub fn is_variable(arg: &str) -> bool {
    let mut chars = arg.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_uppercase()) && chars.all(|c| c.is_ascii_digit())
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An atom or its negation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: impl Into<String>) -> Literal {
        Literal {
            atom: Atom::new(atom),
            positive: true,
        }
    }

    pub fn neg(atom: impl Into<String>) -> Literal {
        Literal {
            atom: Atom::new(atom),
            positive: false,
        }
    }

    pub fn complement(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }

    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.atom == other.atom && self.positive != other.positive
    }

    pub fn to_formula(&self) -> Formula {
        let atom = Formula::Atom(self.atom.clone());
        if self.positive {
            atom
        } else {
            Formula::Not(Box::new(atom))
        }
    }

    /// Inverse of [`Literal::to_formula`].
    pub fn from_formula(f: &Formula) -> Option<Literal> {
        match f {
            Formula::Atom(a) => Some(Literal {
                atom: a.clone(),
                positive: true,
            }),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Atom(a) => Some(Literal {
                    atom: a.clone(),
                    positive: false,
                }),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("!")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Propositional formula. `And`/`Or` carry at least one operand; the parser
/// always produces at least two.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    True,
    False,
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(Atom::new(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Conjunction that collapses the degenerate cases: the empty
    /// conjunction is `True`, a singleton is its only member.
    pub fn and(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::True,
            1 => fs.pop().unwrap(),
            _ => Formula::And(fs),
        }
    }

    pub fn or(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::False,
            1 => fs.pop().unwrap(),
            _ => Formula::Or(fs),
        }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Negation that strips a leading `!` instead of stacking another one.
    pub fn negate(&self) -> Formula {
        match self {
            Formula::Not(inner) => inner.as_ref().clone(),
            Formula::True => Formula::False,
            Formula::False => Formula::True,
            other => Formula::not(other.clone()),
        }
    }

    /// Top-level conjuncts; a non-conjunction is its own single conjunct.
    pub fn conjuncts(&self) -> Vec<Formula> {
        match self {
            Formula::And(fs) => fs.clone(),
            other => vec![other.clone()],
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Formula::True | Formula::False => {}
        }
    }

    /// Rebuilds the formula with every atom replaced through `f`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Atom) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(f(a)),
            Formula::Not(g) => Formula::Not(Box::new(g.map_atoms(f))),
            Formula::And(gs) => Formula::And(gs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Or(gs) => Formula::Or(gs.iter().map(|g| g.map_atoms(f)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.map_atoms(f), b.map_atoms(f)),
            Formula::Iff(a, b) => Formula::iff(a.map_atoms(f), b.map_atoms(f)),
            Formula::True => Formula::True,
            Formula::False => Formula::False,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(_) => 3,
            Formula::And(_) => 4,
            Formula::Not(_) => 5,
            Formula::Atom(_) | Formula::True | Formula::False => 6,
        }
    }

    fn fmt_child(&self, child: &Formula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Equal precedence is parenthesised too, so nesting survives a reparse.
        if child.precedence() <= self.precedence() {
            write!(f, "({})", child)
        } else {
            write!(f, "{}", child)
        }
    }

    fn fmt_nary(&self, op: &str, fs: &[Formula], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, child) in fs.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", op)?;
            }
            self.fmt_child(child, f)?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{}", a),
            Formula::Not(inner) => {
                f.write_str("!")?;
                if inner.precedence() < 5 {
                    write!(f, "({})", inner)
                } else {
                    write!(f, "{}", inner)
                }
            }
            Formula::And(fs) => self.fmt_nary("&", fs, f),
            Formula::Or(fs) => self.fmt_nary("|", fs, f),
            Formula::Implies(a, b) => {
                self.fmt_child(a, f)?;
                f.write_str(" -> ")?;
                self.fmt_child(b, f)
            }
            Formula::Iff(a, b) => {
                self.fmt_child(a, f)?;
                f.write_str(" <-> ")?;
                self.fmt_child(b, f)
            }
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", self)
    }
}

impl From<Literal> for Formula {
    fn from(l: Literal) -> Formula {
        l.to_formula()
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Formula, D::Error> {
        let text = String::deserialize(d)?;
        parse_formula(&text).map_err(serde::de::Error::custom)
    }
}

/// Truth assignment to atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    assignment: BTreeMap<Atom, bool>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn set(&mut self, atom: Atom, value: bool) -> &mut Self {
        self.assignment.insert(atom, value);
        self
    }

    pub fn with(mut self, atom: &str, value: bool) -> Self {
        self.set(Atom::new(atom), value);
        self
    }

    pub fn get(&self, atom: &Atom) -> Option<bool> {
        self.assignment.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, bool)> {
        self.assignment.iter().map(|(a, v)| (a, *v))
    }
}

impl FromIterator<(Atom, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Atom, bool)>>(iter: I) -> Self {
        Valuation {
            assignment: iter.into_iter().collect(),
        }
    }
}

/// Truth-functional evaluation. Fails if `v` does not cover `f`.
pub fn evaluate(v: &Valuation, f: &Formula) -> Result<bool> {
    Ok(match f {
        Formula::Atom(a) => v.get(a).ok_or_else(|| Error::MissingAtom(a.to_string()))?,
        Formula::Not(g) => !evaluate(v, g)?,
        Formula::And(gs) => {
            let mut all = true;
            for g in gs {
                // keep going so a missing atom is reported regardless of order
                all &= evaluate(v, g)?;
            }
            all
        }
        Formula::Or(gs) => {
            let mut any = false;
            for g in gs {
                any |= evaluate(v, g)?;
            }
            any
        }
        Formula::Implies(a, b) => {
            let (a, b) = (evaluate(v, a)?, evaluate(v, b)?);
            !a || b
        }
        Formula::Iff(a, b) => evaluate(v, a)? == evaluate(v, b)?,
        Formula::True => true,
        Formula::False => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let v = Valuation::new().with("a", true);
        assert!(evaluate(&v, &f("a | !a")).unwrap());

        let v = Valuation::new().with("a", true).with("b", false);
        assert!(!evaluate(&v, &f("a -> b")).unwrap());

        let v = Valuation::new().with("lowCost", true).with("luxury", true);
        assert!(!evaluate(&v, &f("!lowCost | !luxury")).unwrap());
    }

    #[test]
    fn evaluate_reports_missing_atom() {
        let v = Valuation::new().with("a", true);
        assert_eq!(evaluate(&v, &f("a & b")), Err(Error::MissingAtom("b".into())));
    }

    #[test]
    fn complement_is_involutive() {
        let l = Literal::neg("even77");
        assert_eq!(l.complement().complement(), l);
        assert!(l.is_complement_of(&Literal::pos("even77")));
        assert!(!l.is_complement_of(&l));
    }

    #[test]
    fn atom_parts() {
        let a = Atom::new("bp(high)");
        assert_eq!(a.predicate(), "bp");
        assert_eq!(a.args(), vec!["high"]);
        assert!(a.is_ground());
        let b = Atom::new("bird(X)");
        assert!(!b.is_ground());
        assert!(is_variable("X"));
        assert!(is_variable("Y12"));
        assert!(!is_variable("Tweety"));
        assert!(!is_variable("x"));
    }

    #[test]
    fn negate_strips_double_negation() {
        assert_eq!(f("!a").negate(), f("a"));
        assert_eq!(f("a & b").negate(), f("!(a & b)"));
    }
}
