//! Deductive argumentation: arguments and counterarguments built over a
//! choice of base logic, composed into argument graphs and evaluated with
//! Dung-style semantics.
//!
//! Four base logics are supported:
//!
//! - [`simple`]: literals and conjunctive rules under modus ponens,
//! - [`classical`]: propositional logic with minimal consistent supports,
//! - [`default`]: Reiter default theories (credulous or skeptical),
//! - [`system_p`]: KLM System P conditional knowledge bases.
//!
//! Argument construction in each of them is monotonic; evaluation in
//! [`graph`] is not.

pub mod attack;
pub mod classical;
pub mod default;
pub mod error;
pub mod graph;
pub mod kb;
pub mod prop;
pub mod simple;
pub mod system_p;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use attack::{AttackKind, KindSet};
pub use error::{Error, Result};
pub use prop::{Atom, Formula, Literal, Prover, Valuation};

/// The base logic a knowledge base or argument belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Logic {
    Simple,
    Classical,
    Default,
    Conditional,
}

impl Logic {
    pub fn name(self) -> &'static str {
        match self {
            Logic::Simple => "simple",
            Logic::Classical => "classical",
            Logic::Default => "default",
            Logic::Conditional => "conditional",
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Logic> {
        match s {
            "simple" => Ok(Logic::Simple),
            "classical" => Ok(Logic::Classical),
            "default" => Ok(Logic::Default),
            "conditional" => Ok(Logic::Conditional),
            other => Err(Error::Invalid(format!("unknown logic `{}`", other))),
        }
    }
}

/// Size limits for the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest knowledge base searched for minimal supports.
    pub support_bound: usize,
    /// Largest support whose subsets are searched for undercuts.
    pub psi_bound: usize,
    /// Most ground defaults in a theory whose extensions are enumerated.
    pub default_bound: usize,
    /// Most nodes in a graph whose extensions are enumerated.
    pub graph_bound: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            support_bound: 16,
            psi_bound: 12,
            default_bound: 12,
            graph_bound: 25,
        }
    }
}

pub(crate) fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded { what, size, bound })
    } else {
        Ok(())
    }
}

/// Whether a conclusion needs one witness or all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Credulous,
    Skeptical,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "credulous" => Ok(Mode::Credulous),
            "skeptical" => Ok(Mode::Skeptical),
            other => Err(Error::Invalid(format!("unknown mode `{}`", other))),
        }
    }
}
