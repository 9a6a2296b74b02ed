//! Finite grounding of schematic formulas and rules over named constants.

use std::collections::{BTreeMap, BTreeSet};

use super::{is_variable, Atom, Formula, Literal};
use crate::error::{Error, Result};

/// Anything built from atoms that may carry schematic variables.
pub trait Schematic: Sized {
    fn variables(&self) -> BTreeSet<String>;

    /// Replaces every bound variable; unbound ones are left in place.
    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self;
}

fn substitute_atom(a: &Atom, binding: &BTreeMap<String, String>) -> Atom {
    if a.is_ground() {
        return a.clone();
    }
    let args: Vec<&str> = a
        .args()
        .into_iter()
        .map(|x| binding.get(x).map(String::as_str).unwrap_or(x))
        .collect();
    Atom::from_parts(a.predicate(), &args)
}

impl Schematic for Atom {
    fn variables(&self) -> BTreeSet<String> {
        Atom::variables(self).map(str::to_string).collect()
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        substitute_atom(self, binding)
    }
}

impl Schematic for Formula {
    fn variables(&self) -> BTreeSet<String> {
        self.atoms().iter().flat_map(Schematic::variables).collect()
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        self.map_atoms(&mut |a| substitute_atom(a, binding))
    }
}

impl Schematic for Literal {
    fn variables(&self) -> BTreeSet<String> {
        Schematic::variables(&self.atom)
    }

    fn substitute(&self, binding: &BTreeMap<String, String>) -> Self {
        Literal {
            atom: substitute_atom(&self.atom, binding),
            positive: self.positive,
        }
    }
}

/// All ground instances of `template`, one per assignment of `constants` to
/// its variables, in lexicographic order of the assignments. A ground
/// template yields itself.
pub fn ground_schema<T: Schematic + Clone>(template: &T, constants: &BTreeSet<String>) -> Result<Vec<T>> {
    let vars: Vec<String> = template.variables().into_iter().collect();
    if vars.is_empty() {
        return Ok(vec![template.clone()]);
    }
    if constants.is_empty() {
        return Err(Error::Grounding(format!(
            "variables {} but no constants to instantiate them with",
            vars.join(", ")
        )));
    }
    let consts: Vec<&String> = constants.iter().collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let binding: BTreeMap<String, String> = vars
            .iter()
            .zip(&idx)
            .map(|(v, &i)| (v.clone(), consts[i].clone()))
            .collect();
        out.push(template.substitute(&binding));
        // odometer increment, last variable fastest
        let mut k = vars.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < consts.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Constants appearing as arguments of the given atoms.
pub fn harvest_constants<'a>(atoms: impl IntoIterator<Item = &'a Atom>) -> BTreeSet<String> {
    atoms
        .into_iter()
        .flat_map(|a| a.args())
        .filter(|x| !is_variable(x))
        .map(str::to_string)
        .collect()
}
