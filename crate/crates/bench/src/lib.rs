//! Fixtures shared by the benchmarks.

use dedarg::graph::Framework;
use dedarg::kb::{parse_kb, KbDocument};

pub const CYCLE: &str = "logic simple\nfact a. fact b. fact c.\nrule a & c -> !a.\nrule b -> !c.\nrule a & c -> !b.\n";

pub const TREATMENT: &str = "logic classical
axiom bp(high).
axiom ok(diuretic).
axiom ok(betablocker).
axiom bp(high) & ok(diuretic) -> give(diuretic).
axiom bp(high) & ok(betablocker) -> give(betablocker).
axiom !ok(diuretic) | !ok(betablocker).
axiom symptom(emphysema).
axiom symptom(emphysema) -> !ok(betablocker).
";

pub const TWEETY: &str = "logic default
fact bird(Tweety).
fact penguin(Tweety).
default bird(X) : !penguin(X) & fly(X) / fly(X).
default penguin(X) : bird(X) / bird(X).
default penguin(X) : !fly(X) / !fly(X).
";

pub const PENGUINS: &str = "logic conditional
cond penguin => bird.
cond penguin => !fly.
cond bird => fly.
";

pub fn load(text: &str) -> KbDocument {
    parse_kb(text).expect("fixture parses")
}

/// A chain of `n` simple rules `x0 -> x1 -> ... -> xn` with a blocker on
/// every link.
pub fn rule_chain(n: usize) -> KbDocument {
    let mut text = String::from("logic simple\nfact x0.\n");
    for i in 0..n {
        text.push_str(&format!("rule x{} -> x{}.\n", i, i + 1));
        text.push_str(&format!("fact b{}.\nrule b{} -> !x{}.\n", i, i, i + 1));
    }
    load(&text)
}

/// A deterministic pseudo-random framework with about `density` of all
/// ordered pairs as attacks.
pub fn random_framework(n: usize, density: f64, seed: u64) -> Framework {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if ((state >> 33) as f64 / (1u64 << 31) as f64) < density {
                edges.push((a, b));
            }
        }
    }
    Framework::new(n, edges)
}
