use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{ArgGraph, Claim};
use crate::error::{Error, Result};
use crate::{check_bound, Bounds, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Grounded,
    Complete,
    Preferred,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Grounded,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Stable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Grounded => "grounded",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Semantics> {
        Semantics::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown semantics `{}`", s)))
    }
}

/// The bare attack relation over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Framework {
    pub attackers: Vec<Vec<usize>>,
    pub targets: Vec<Vec<usize>>,
}

impl Framework {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Framework {
        let mut fw = Framework {
            attackers: vec![Vec::new(); n],
            targets: vec![Vec::new(); n],
        };
        for (a, b) in edges {
            fw.attackers[b].push(a);
            fw.targets[a].push(b);
        }
        fw
    }

    pub fn of(g: &ArgGraph) -> Framework {
        Framework::new(g.len(), g.attacks.keys().copied())
    }

    pub fn len(&self) -> usize {
        self.attackers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attackers.is_empty()
    }

    /// Least fixpoint of the characteristic function.
    pub fn grounded(&self) -> BTreeSet<usize> {
        let mut ext: BTreeSet<usize> = BTreeSet::new();
        loop {
            let defeated: BTreeSet<usize> = ext.iter().flat_map(|&a| self.targets[a].iter().copied()).collect();
            let next: BTreeSet<usize> = (0..self.len())
                .filter(|&x| self.attackers[x].iter().all(|y| defeated.contains(y)))
                .collect();
            if next == ext {
                return ext;
            }
            ext = next;
        }
    }

    /// Extensions under `sem`, each sorted, listed in lexicographic order.
    pub fn extensions(&self, sem: Semantics) -> Vec<BTreeSet<usize>> {
        match sem {
            Semantics::Grounded => vec![self.grounded()],
            Semantics::Complete => sorted(self.labellings(false)),
            Semantics::Stable => sorted(self.labellings(true)),
            Semantics::Preferred => {
                let complete = self.labellings(false);
                let maximal = complete
                    .iter()
                    .filter(|e| !complete.iter().any(|o| o.len() > e.len() && e.is_subset(o)))
                    .cloned()
                    .collect();
                sorted(maximal)
            }
        }
    }

    /// In-sets of all complete labellings, or of the stable ones (no
    /// undecided node). Search starts from the grounded labelling, which
    /// every complete labelling extends.
    fn labellings(&self, stable: bool) -> Vec<BTreeSet<usize>> {
        let mut labels = vec![None; self.len()];
        let grounded = self.grounded();
        for &x in &grounded {
            labels[x] = Some(Label::In);
            for &t in &self.targets[x] {
                labels[t] = Some(Label::Out);
            }
        }
        let order: Vec<usize> = (0..self.len()).filter(|&x| labels[x].is_none()).collect();
        let mut out = Vec::new();
        self.search(&order, 0, &mut labels, stable, &mut out);
        out
    }

    fn search(
        &self,
        order: &[usize],
        pos: usize,
        labels: &mut Vec<Option<Label>>,
        stable: bool,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if pos == order.len() {
            out.push((0..self.len()).filter(|&x| labels[x] == Some(Label::In)).collect());
            return;
        }
        let x = order[pos];
        let choices: &[Label] = if stable {
            &[Label::In, Label::Out]
        } else {
            &[Label::In, Label::Out, Label::Undec]
        };
        for &l in choices {
            labels[x] = Some(l);
            if self.locally_legal(x, labels) && self.targets[x].iter().all(|&t| self.locally_legal(t, labels)) {
                self.search(order, pos + 1, labels, stable, out);
            }
        }
        labels[x] = None;
    }

    /// Checks the complete-labelling conditions at `x` as far as the current
    /// partial labelling decides them.
    fn locally_legal(&self, x: usize, labels: &[Option<Label>]) -> bool {
        let Some(lx) = labels[x] else { return true };
        let att = &self.attackers[x];
        let any = |l: Label| att.iter().any(|&y| labels[y] == Some(l));
        let settled = att.iter().all(|&y| labels[y].is_some());
        match lx {
            Label::In => !any(Label::In) && !any(Label::Undec),
            Label::Out => !settled || any(Label::In),
            Label::Undec => !any(Label::In) && (!settled || any(Label::Undec)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    In,
    Out,
    Undec,
}

fn sorted(mut exts: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    exts.sort_by(|a, b| a.iter().cmp(b.iter()));
    exts.dedup();
    exts
}

pub fn grounded_extension(g: &ArgGraph) -> BTreeSet<usize> {
    Framework::of(g).grounded()
}

/// Extensions of `g` as sets of node indices.
pub fn enumerate_extensions(g: &ArgGraph, sem: Semantics, bounds: &Bounds) -> Result<Vec<BTreeSet<usize>>> {
    if sem != Semantics::Grounded {
        check_bound("graph nodes", g.len(), bounds.graph_bound)?;
    }
    Ok(Framework::of(g).extensions(sem))
}

/// Claims of the nodes that belong to some (credulous) or every (skeptical)
/// extension. With no extension at all nothing is accepted.
pub fn accepted_claims(g: &ArgGraph, sem: Semantics, mode: Mode, bounds: &Bounds) -> Result<Vec<Claim>> {
    let exts = enumerate_extensions(g, sem, bounds)?;
    let nodes: BTreeSet<usize> = match mode {
        Mode::Credulous => exts.iter().flatten().copied().collect(),
        Mode::Skeptical => match exts.split_first() {
            None => BTreeSet::new(),
            Some((first, rest)) => first
                .iter()
                .copied()
                .filter(|x| rest.iter().all(|e| e.contains(x)))
                .collect(),
        },
    };
    let mut claims: Vec<Claim> = nodes.iter().filter_map(|&i| g.nodes[i].argument.claim()).collect();
    claims.sort_by_cached_key(|c| (c.to_string(), c.clone()));
    claims.dedup();
    Ok(claims)
}
