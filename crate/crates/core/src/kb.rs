//! Loader for `.akb` knowledge-base files.
//!
//! ```text
//! # comment
//! logic simple
//! const Sid.
//! fact workDay.
//! rule workDay & normal -> useMetro(Sid).
//! set attack.kinds = [undercut|rebut].
//! ```
//!
//! Each file declares one base logic first; the statements allowed after
//! that depend on it:
//!
//! | logic         | statements                                  |
//! |---------------|---------------------------------------------|
//! | `simple`      | `fact <literal>.` `rule <lits> -> <lit>.`   |
//! | `classical`   | `axiom <formula>.` `focal <formula>.`       |
//! | `default`     | `fact <formula>.` `default <f> : <f> / <f>.` `focal <formula>.` |
//! | `conditional` | `cond <f> => <f>.` `focal <f> => <f>.`      |
//!
//! Every logic accepts `const`, `set`, and the descriptive-graph statements
//! `node <id>.`, `edge <id> -> <id>.` and `arg <id> : <item>, ... |- <claim>.`
//! Rules, axioms, defaults and conditionals may use variables (`X`, `Y1`),
//! which are grounded over the declared constants together with every
//! constant appearing in the file.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::attack::{AttackKind, KindSet};
use crate::classical::ClassicalArgument;
use crate::default::{split_default, DefaultRule, DefaultTheory};
use crate::error::{char_position, position, Error, Result};
use crate::graph::{Argument, Claim, DescriptiveGraph, GenerationConfig, KnowledgeBase};
use crate::prop::{
    ground_schema, harvest_constants, is_variable, parse_formula, parse_literal, parse_schema, Atom, Formula, Prover,
};
use crate::simple::{SimpleArgument, SimpleKb, SimpleRule};
use crate::system_p::{Conditional, ConditionalKb, PreferentialArgument};
use crate::{Bounds, Logic};

/// A parsed and fully grounded knowledge-base file.
#[derive(Clone, Debug)]
pub struct KbDocument {
    pub kb: KnowledgeBase,
    pub constants: BTreeSet<String>,
    pub focal: Vec<Claim>,
    /// `attack.kinds`, when set.
    pub kinds: Option<KindSet>,
    pub bounds: Bounds,
    pub focal_depth: usize,
    pub atom_limit: usize,
    /// Present when the file declares nodes, edges or arguments.
    pub descriptive: Option<DescriptiveGraph>,
}

impl KbDocument {
    pub fn logic(&self) -> Logic {
        self.kb.logic()
    }

    pub fn prover(&self) -> Prover {
        Prover::with_atom_limit(self.atom_limit)
    }

    /// Attack kinds from the file, or the logic's defaults.
    pub fn kinds(&self) -> KindSet {
        self.kinds
            .clone()
            .unwrap_or_else(|| AttackKind::default_for(self.logic()))
    }

    pub fn generation_config(&self) -> GenerationConfig {
        GenerationConfig {
            kinds: self.kinds(),
            focal: self.focal.clone(),
            focal_depth: self.focal_depth,
            bounds: self.bounds,
            prover: self.prover(),
        }
    }
}

/// Reads and parses a file. Positions in errors refer to that file.
pub fn load_kb(path: impl AsRef<Path>) -> Result<KbDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_kb(&text)
}

fn syntax_at(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = position(text, offset);
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// A piece of the source: its text and where it starts.
#[derive(Clone, Copy)]
struct Span<'a> {
    text: &'a str,
    start: usize,
}

impl<'a> Span<'a> {
    fn sub(&self, from: usize, to: usize) -> Span<'a> {
        Span {
            text: &self.text[from..to],
            start: self.start + from,
        }
    }

    fn trimmed(&self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            start: self.start + lead,
        }
    }

    /// Runs a substring parser and moves its error positions into the file.
    fn parse<T>(&self, src: &str, f: impl FnOnce(&str) -> Result<T>) -> Result<T> {
        f(self.text).map_err(|e| {
            let (line, column) = position(src, self.start);
            e.rebase(line, column)
        })
    }
}

struct Statement<'a> {
    keyword: Span<'a>,
    body: Span<'a>,
}

fn blank_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        match c {
            '\n' => {
                in_comment = false;
                out.push('\n');
            }
            '#' => {
                in_comment = true;
                out.push(' ');
            }
            c if in_comment => out.extend(std::iter::repeat_n(' ', c.len_utf8())),
            c => out.push(c),
        }
    }
    out
}

fn statements(src: &str) -> Result<Vec<Statement<'_>>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let word = |i: usize| {
        let mut j = i;
        while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
            j += 1;
        }
        j
    };
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= bytes.len() {
            return Ok(out);
        }
        let end = word(i);
        if end == i {
            return Err(syntax_at(src, i, "expected a statement keyword"));
        }
        let keyword = Span {
            text: &src[i..end],
            start: i,
        };
        if keyword.text == "logic" {
            // `logic NAME` with an optional final dot
            let mut j = end;
            while j < bytes.len() && bytes[j].is_ascii_whitespace() && bytes[j] != b'\n' {
                j += 1;
            }
            let k = word(j);
            out.push(Statement {
                keyword,
                body: Span {
                    text: &src[j..k],
                    start: j,
                },
            });
            i = k;
            let mut m = k;
            while m < bytes.len() && bytes[m] == b' ' {
                m += 1;
            }
            if m < bytes.len() && bytes[m] == b'.' {
                i = m + 1;
            }
            continue;
        }
        // `set a.b = v.` has dots in the key
        let search_from = if keyword.text == "set" {
            src[end..].find('=').map_or(end, |p| end + p)
        } else {
            end
        };
        let Some(dot) = src[search_from..].find('.') else {
            return Err(syntax_at(
                src,
                i,
                format!("`{}` statement is missing its final `.`", keyword.text),
            ));
        };
        let dot = search_from + dot;
        out.push(Statement {
            keyword,
            body: Span {
                text: &src[end..dot],
                start: end,
            },
        });
        i = dot + 1;
    }
}

enum Schema {
    Rule(SimpleRule),
    Axiom(Formula),
    Default(DefaultRule),
    Cond(Conditional),
}

impl Schema {
    fn atoms(&self) -> BTreeSet<Atom> {
        match self {
            Schema::Rule(r) => r
                .body
                .iter()
                .chain(std::iter::once(&r.head))
                .map(|l| l.atom.clone())
                .collect(),
            Schema::Axiom(f) => f.atoms(),
            Schema::Default(d) => {
                let mut a = d.pre.atoms();
                a.extend(d.just.atoms());
                a.extend(d.cons.atoms());
                a
            }
            Schema::Cond(c) => {
                let mut a = c.ante.atoms();
                a.extend(c.cons.atoms());
                a
            }
        }
    }
}

/// Splits on commas outside parentheses.
fn split_items(span: Span<'_>) -> Vec<Span<'_>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut last = 0;
    for (i, c) in span.text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(span.sub(last, i).trimmed());
                last = i + 1;
            }
            _ => {}
        }
    }
    let tail = span.sub(last, span.text.len()).trimmed();
    if !tail.text.is_empty() || !out.is_empty() {
        out.push(tail);
    }
    out
}

fn parse_default_schema(text: &str) -> Result<DefaultRule> {
    let parts = split_default(text)?;
    let mut fs = Vec::with_capacity(3);
    for (offset, part) in parts {
        let (line, column) = char_position(text, offset);
        fs.push(parse_schema(part).map_err(|e| e.rebase(line, column))?);
    }
    let cons = fs.pop().unwrap();
    let just = fs.pop().unwrap();
    Ok(DefaultRule::new(fs.pop().unwrap(), just, cons))
}

/// Parses the text of a knowledge-base file.
pub fn parse_kb(text: &str) -> Result<KbDocument> {
    let src = blank_comments(text);
    let stmts = statements(&src)?;
    let Some(first) = stmts.first().filter(|s| s.keyword.text == "logic") else {
        let at = stmts.first().map_or(0, |s| s.keyword.start);
        return Err(syntax_at(&src, at, "a knowledge base must start with `logic <name>`"));
    };
    let logic: Logic = first
        .body
        .text
        .parse()
        .map_err(|_| syntax_at(&src, first.body.start, format!("unknown logic `{}`", first.body.text)))?;

    let mut constants: BTreeSet<String> = BTreeSet::new();
    let mut literal_facts = Vec::new();
    let mut formula_facts = Vec::new();
    let mut schemas: Vec<(Schema, usize)> = Vec::new();
    let mut focal = Vec::new();
    let mut kinds = None;
    let mut bounds = Bounds::default();
    let mut focal_depth = 2;
    let mut atom_limit = crate::prop::DEFAULT_ATOM_LIMIT;
    let mut nodes: Vec<String> = Vec::new();
    let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
    let mut assignment: BTreeMap<String, Argument> = BTreeMap::new();
    let mut descriptive = false;

    for st in &stmts[1..] {
        let kw = st.keyword.text;
        let body = st.body.trimmed();
        let wrong_logic = || {
            syntax_at(
                &src,
                st.keyword.start,
                format!("`{}` is not allowed in a {} knowledge base", kw, logic),
            )
        };
        match (kw, logic) {
            ("logic", _) => return Err(syntax_at(&src, st.keyword.start, "the logic is already declared")),
            ("const", _) => {
                if body.text.is_empty()
                    || is_variable(body.text)
                    || !body.text.chars().all(|c| c.is_alphanumeric() || c == '_')
                {
                    return Err(syntax_at(
                        &src,
                        body.start,
                        format!("`{}` is not a constant name", body.text),
                    ));
                }
                constants.insert(body.text.to_string());
            }
            ("fact", Logic::Simple) => literal_facts.push(body.parse(&src, parse_literal)?),
            ("fact", Logic::Default) => formula_facts.push(body.parse(&src, parse_formula)?),
            ("rule", Logic::Simple) => schemas.push((
                Schema::Rule(body.parse(&src, |t| SimpleRule::parse_with(t, true))?),
                body.start,
            )),
            ("axiom", Logic::Classical) => schemas.push((Schema::Axiom(body.parse(&src, parse_schema)?), body.start)),
            ("default", Logic::Default) => {
                schemas.push((Schema::Default(body.parse(&src, parse_default_schema)?), body.start))
            }
            ("cond", Logic::Conditional) => schemas.push((
                Schema::Cond(body.parse(&src, |t| Conditional::parse_with(t, true))?),
                body.start,
            )),
            ("focal", Logic::Classical | Logic::Default) => {
                focal.push(Claim::Formula(body.parse(&src, parse_formula)?))
            }
            ("focal", Logic::Conditional) => focal.push(Claim::Conditional(
                body.parse(&src, |t| Conditional::parse_with(t, false))?,
            )),
            ("fact" | "rule" | "axiom" | "default" | "cond" | "focal", _) => return Err(wrong_logic()),
            ("set", _) => {
                let Some(eq) = body.text.find('=') else {
                    return Err(syntax_at(&src, body.start, "expected `set key = value`"));
                };
                let key = body.sub(0, eq).trimmed();
                let value = body.sub(eq + 1, body.text.len()).trimmed();
                let number =
                    || {
                        value.text.parse::<usize>().ok().filter(|n| *n > 0).ok_or_else(|| {
                            syntax_at(&src, value.start, format!("`{}` needs a positive integer", key.text))
                        })
                    };
                match key.text {
                    "attack.kinds" => {
                        kinds = Some(
                            AttackKind::parse_list(value.text)
                                .map_err(|e| syntax_at(&src, value.start, e.to_string()))?,
                        )
                    }
                    "enum.support_bound" => bounds.support_bound = number()?,
                    "enum.psi_bound" => bounds.psi_bound = number()?,
                    "enum.default_bound" => bounds.default_bound = number()?,
                    "enum.graph_bound" => bounds.graph_bound = number()?,
                    "enum.focal_depth" => focal_depth = number()?,
                    "prover.atom_limit" => atom_limit = number()?,
                    other => return Err(syntax_at(&src, key.start, format!("unknown setting `{}`", other))),
                }
            }
            ("node", _) => {
                descriptive = true;
                let id = node_id(&src, body)?;
                if !nodes.contains(&id) {
                    nodes.push(id);
                }
            }
            ("edge", _) => {
                descriptive = true;
                let Some(arrow) = body.text.find("->") else {
                    return Err(syntax_at(&src, body.start, "expected `edge <id> -> <id>`"));
                };
                let from = node_id(&src, body.sub(0, arrow).trimmed())?;
                let to = node_id(&src, body.sub(arrow + 2, body.text.len()).trimmed())?;
                for id in [&from, &to] {
                    if !nodes.contains(id) {
                        nodes.push(id.clone());
                    }
                }
                edges.insert((from, to));
            }
            ("arg", _) => {
                descriptive = true;
                let Some(colon) = body.text.find(':') else {
                    return Err(syntax_at(&src, body.start, "expected `arg <id> : <items> |- <claim>`"));
                };
                let id = node_id(&src, body.sub(0, colon).trimmed())?;
                let rest = body.sub(colon + 1, body.text.len());
                let Some(turnstile) = rest.text.find("|-") else {
                    return Err(syntax_at(&src, rest.start, "expected `|-` before the claim"));
                };
                let items = split_items(rest.sub(0, turnstile));
                let claim = rest.sub(turnstile + 2, rest.text.len()).trimmed();
                let argument = parse_argument(&src, logic, &items, claim)?;
                if assignment.insert(id.clone(), argument).is_some() {
                    return Err(syntax_at(
                        &src,
                        body.start,
                        format!("argument `{}` is assigned twice", id),
                    ));
                }
                if !nodes.contains(&id) {
                    nodes.push(id);
                }
            }
            (other, _) => {
                return Err(syntax_at(
                    &src,
                    st.keyword.start,
                    format!("unknown statement `{}`", other),
                ))
            }
        }
    }

    // constants: declared, plus those used anywhere in the file
    let mut atoms: BTreeSet<Atom> = literal_facts.iter().map(|l: &crate::Literal| l.atom.clone()).collect();
    for f in &formula_facts {
        atoms.extend(f.atoms());
    }
    for (s, _) in &schemas {
        atoms.extend(s.atoms());
    }
    for c in &focal {
        match c {
            Claim::Formula(f) => atoms.extend(f.atoms()),
            Claim::Conditional(c) => {
                atoms.extend(c.ante.atoms());
                atoms.extend(c.cons.atoms());
            }
        }
    }
    constants.extend(harvest_constants(&atoms));

    let ground = |s: &Schema, at: usize| -> Result<Vec<Schema>> {
        let located = |e: Error| match e {
            Error::Grounding(m) => {
                let (line, column) = position(&src, at);
                Error::Grounding(format!("{}:{}: {}", line, column, m))
            }
            other => other,
        };
        Ok(match s {
            Schema::Rule(r) => ground_schema(r, &constants)
                .map_err(located)?
                .into_iter()
                .map(Schema::Rule)
                .collect(),
            Schema::Axiom(f) => ground_schema(f, &constants)
                .map_err(located)?
                .into_iter()
                .map(Schema::Axiom)
                .collect(),
            Schema::Default(d) => ground_schema(d, &constants)
                .map_err(located)?
                .into_iter()
                .map(Schema::Default)
                .collect(),
            Schema::Cond(c) => ground_schema(c, &constants)
                .map_err(located)?
                .into_iter()
                .map(Schema::Cond)
                .collect(),
        })
    };
    let mut grounded = Vec::new();
    for (s, at) in &schemas {
        grounded.extend(ground(s, *at)?);
    }

    let kb = match logic {
        Logic::Simple => KnowledgeBase::Simple(SimpleKb::new(
            literal_facts,
            grounded.into_iter().filter_map(|s| match s {
                Schema::Rule(r) => Some(r),
                _ => None,
            }),
        )),
        Logic::Classical => KnowledgeBase::Classical(
            grounded
                .into_iter()
                .filter_map(|s| match s {
                    Schema::Axiom(f) => Some(f),
                    _ => None,
                })
                .collect(),
        ),
        Logic::Default => KnowledgeBase::Default(DefaultTheory::new(
            grounded.into_iter().filter_map(|s| match s {
                Schema::Default(d) => Some(d),
                _ => None,
            }),
            formula_facts,
        )),
        Logic::Conditional => KnowledgeBase::Conditional(
            grounded
                .into_iter()
                .filter_map(|s| match s {
                    Schema::Cond(c) => Some(c),
                    _ => None,
                })
                .collect::<ConditionalKb>(),
        ),
    };

    Ok(KbDocument {
        kb,
        constants,
        focal,
        kinds,
        bounds,
        focal_depth,
        atom_limit,
        descriptive: descriptive.then_some(DescriptiveGraph {
            nodes,
            edges,
            assignment,
        }),
    })
}

fn node_id(src: &str, span: Span<'_>) -> Result<String> {
    if span.text.is_empty() || !span.text.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(syntax_at(
            src,
            span.start,
            format!("`{}` is not a node identifier", span.text),
        ));
    }
    Ok(span.text.to_string())
}

/// Parses an `arg` statement's items and claim in the document's logic.
fn parse_argument(src: &str, logic: Logic, items: &[Span<'_>], claim: Span<'_>) -> Result<Argument> {
    Ok(match logic {
        Logic::Simple => {
            let mut kb = SimpleKb::default();
            for it in items {
                if it.text.contains("->") {
                    kb.rules.insert(it.parse(src, SimpleRule::parse)?);
                } else {
                    kb.facts.insert(it.parse(src, parse_literal)?);
                }
            }
            Argument::Simple(SimpleArgument {
                support: kb,
                claim: claim.parse(src, parse_literal)?,
            })
        }
        Logic::Classical => {
            let support = items
                .iter()
                .map(|it| it.parse(src, parse_formula))
                .collect::<Result<Vec<_>>>()?;
            Argument::Classical(ClassicalArgument::new(support, claim.parse(src, parse_formula)?))
        }
        Logic::Default => {
            let mut t = DefaultTheory::default();
            for it in items {
                if it.text.contains(':') {
                    t.defaults.insert(it.parse(src, DefaultRule::parse)?);
                } else {
                    t.facts.insert(it.parse(src, parse_formula)?);
                }
            }
            Argument::Default(crate::default::DefaultArgument {
                support: t,
                claim: claim.parse(src, parse_formula)?,
            })
        }
        Logic::Conditional => {
            let mut conds = Vec::new();
            let mut context = BTreeSet::new();
            for it in items {
                if it.text.contains("=>") {
                    conds.push(it.parse(src, Conditional::parse)?);
                } else {
                    context.insert(it.parse(src, parse_formula)?);
                }
            }
            let mut arg = PreferentialArgument::new(conds, claim.parse(src, Conditional::parse)?);
            if !context.is_empty() {
                arg.context = context;
            }
            Argument::Preferential(arg)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::Schematic;

    fn err_pos(text: &str) -> (usize, usize) {
        match parse_kb(text) {
            Err(Error::Syntax { line, column, .. }) | Err(Error::UnboundVariable { line, column, .. }) => {
                (line, column)
            }
            other => panic!("expected a positioned error, got {:?}", other),
        }
    }

    #[test]
    fn simple_file() {
        let doc = parse_kb(
            "# three facts, three rules\nlogic simple\nfact a. fact b. fact c.\nrule a & c -> !a.\nrule b -> !c.\nrule a & c -> !b. # trailing\n",
        )
        .unwrap();
        let KnowledgeBase::Simple(kb) = &doc.kb else { panic!() };
        assert_eq!(kb.facts.len(), 3);
        assert_eq!(kb.rules.len(), 3);
        assert!(doc.descriptive.is_none());
        assert_eq!(doc.kinds(), AttackKind::default_for(Logic::Simple));
    }

    #[test]
    fn schematic_defaults_are_grounded() {
        let doc = parse_kb(
            "logic default.\nfact bird(Tweety).\ndefault bird(X) : !penguin(X) & fly(X) / fly(X).\ndefault penguin(X) : bird(X) / bird(X).\ndefault penguin(X) : !fly(X) / !fly(X).\n",
        )
        .unwrap();
        let KnowledgeBase::Default(t) = &doc.kb else { panic!() };
        assert_eq!(t.defaults.len(), 3);
        assert!(t.defaults.iter().all(|d| d.variables().is_empty()));
        assert!(t
            .defaults
            .contains(&DefaultRule::parse("penguin(Tweety) : bird(Tweety) / bird(Tweety)").unwrap()));
        assert_eq!(doc.constants, ["Tweety".to_string()].into());
    }

    #[test]
    fn declared_constants_widen_grounding() {
        let doc = parse_kb("logic classical\nconst ann. const bob.\naxiom p(X) -> q(X).\n").unwrap();
        let KnowledgeBase::Classical(delta) = &doc.kb else {
            panic!()
        };
        assert_eq!(delta.len(), 2);
    }

    #[test]
    fn stanza_must_match_logic() {
        assert_eq!(err_pos("logic simple\ncond a => b.\n"), (2, 1));
        assert_eq!(err_pos("logic classical\nfact a.\n"), (2, 1));
        assert!(parse_kb("fact a.\n").is_err());
        assert!(parse_kb("logic modal\n").is_err());
    }

    #[test]
    fn positions_point_into_the_file() {
        assert_eq!(err_pos("logic classical\naxiom a & ->.\n"), (2, 11));
        assert_eq!(err_pos("logic simple\n\n  fact !.\n"), (3, 9));
        assert_eq!(err_pos("logic default\ndefault a :\n  b / &.\n"), (3, 7));
        assert_eq!(err_pos("logic simple\nfact bird(X).\n"), (2, 6));
        assert_eq!(err_pos("logic simple\nfact a\n"), (2, 1));
        assert_eq!(err_pos("logic simple\nset enum.colour = 3.\n"), (2, 5));
    }

    #[test]
    fn grounding_needs_constants() {
        match parse_kb("logic classical\naxiom p(X).\n") {
            Err(Error::Grounding(m)) => assert!(m.starts_with("2:7:"), "{}", m),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn settings() {
        let doc = parse_kb(
            "logic classical\nset attack.kinds = [undercut|direct-undercut|rebuttal|defeater].\nset enum.support_bound = 8.\nset enum.psi_bound = 5.\naxiom a.\n",
        )
        .unwrap();
        assert_eq!(doc.kinds().len(), 4);
        assert_eq!(doc.bounds.support_bound, 8);
        assert_eq!(doc.bounds.psi_bound, 5);
        assert!(parse_kb("logic classical\nset enum.psi_bound = 0.\n").is_err());
        assert!(parse_kb("logic classical\nset attack.kinds = [undermine].\n").is_err());
    }

    #[test]
    fn conditionals_and_focal() {
        let doc =
            parse_kb("logic conditional\ncond penguin => bird.\ncond bird => fly.\nfocal bird => fly.\n").unwrap();
        let KnowledgeBase::Conditional(kb) = &doc.kb else {
            panic!()
        };
        assert_eq!(kb.len(), 2);
        assert_eq!(
            doc.focal,
            vec![Claim::Conditional(Conditional::parse("bird => fly").unwrap())]
        );
    }

    #[test]
    fn descriptive_block() {
        let doc = parse_kb(
            "logic classical\nnode A1.\nedge A2 -> A1.\narg A1 : bp(high), bp(high) -> give(d) |- give(d).\narg A2 : !bp(high) |- !bp(high).\n",
        )
        .unwrap();
        let d = doc.descriptive.unwrap();
        assert_eq!(d.nodes, ["A1", "A2"]);
        assert_eq!(d.edges, [("A2".to_string(), "A1".to_string())].into());
        let Argument::Classical(a1) = &d.assignment["A1"] else {
            panic!()
        };
        assert_eq!(a1.support.len(), 2);
        assert!(parse_kb("logic classical\narg A1 : a |- a.\narg A1 : b |- b.\n").is_err());
        assert!(parse_kb("logic classical\narg A1 : a, b.\n").is_err());
    }

    #[test]
    fn items_split_outside_parentheses() {
        let s = Span {
            text: "p(a,b), q , r(c)",
            start: 0,
        };
        let items: Vec<&str> = split_items(s).iter().map(|x| x.text).collect();
        assert_eq!(items, ["p(a,b)", "q", "r(c)"]);
    }
}
