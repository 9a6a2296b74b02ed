use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Every attack relation the engine knows, across all base logics. Each logic
/// uses a subset; see [`AttackKind::default_for`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttackKind {
    Undercut,
    DirectUndercut,
    CanonicalUndercut,
    Rebut,
    Rebuttal,
    DirectRebuttal,
    /// Claim of the attacker entails the negation of part of the target's
    /// support.
    Defeater,
    JustificationUndercut,
}

pub type KindSet = BTreeSet<AttackKind>;

impl AttackKind {
    pub const ALL: [AttackKind; 8] = [
        AttackKind::Undercut,
        AttackKind::DirectUndercut,
        AttackKind::CanonicalUndercut,
        AttackKind::Rebut,
        AttackKind::Rebuttal,
        AttackKind::DirectRebuttal,
        AttackKind::Defeater,
        AttackKind::JustificationUndercut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AttackKind::Undercut => "undercut",
            AttackKind::DirectUndercut => "direct-undercut",
            AttackKind::CanonicalUndercut => "canonical-undercut",
            AttackKind::Rebut => "rebut",
            AttackKind::Rebuttal => "rebuttal",
            AttackKind::DirectRebuttal => "direct-rebuttal",
            AttackKind::Defeater => "defeater",
            AttackKind::JustificationUndercut => "justification-undercut",
        }
    }

    /// Kinds enabled when nothing is configured.
    pub fn default_for(logic: crate::Logic) -> KindSet {
        use crate::Logic;
        use AttackKind::*;
        match logic {
            Logic::Simple => [Undercut, Rebut].into(),
            Logic::Classical => [Undercut, DirectUndercut, Rebuttal].into(),
            Logic::Default => [JustificationUndercut].into(),
            Logic::Conditional => [Rebuttal, DirectRebuttal, Undercut, CanonicalUndercut, DirectUndercut].into(),
        }
    }

    /// Parses `undercut, defeater` or `[undercut|defeater]`.
    pub fn parse_list(text: &str) -> Result<KindSet, Error> {
        text.trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split([',', '|'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AttackKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        AttackKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown attack kind `{}`", s)))
    }
}
