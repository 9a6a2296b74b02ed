//! Command dispatch for the `dedarg` binary.
//!
//! [`run_command`] does the work and returns a [`QueryResult`]; the binary
//! only prints it and exits with [`QueryResult::exit_code`].

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use dedarg::classical::default_focal_claims;
use dedarg::default::{default_claims, default_derives, enumerate_extensions as dl_extensions};
use dedarg::graph::{
    accepted_claims, enumerate_extensions, from_json, generate_arguments, generate_graph, to_dot, to_json, to_text,
    verify_descriptive, ArgGraph, Claim, DescriptiveGraph, EdgeStatus, GenerationConfig, KnowledgeBase, Semantics,
};
use dedarg::kb::{load_kb, parse_kb, KbDocument};
use dedarg::prop::{parse_formula, parse_literal};
use dedarg::system_p::{p_entails, Conditional};
use dedarg::{AttackKind, Error, Logic, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "dedarg",
    version,
    about = "Deductive argumentation over a knowledge-base file"
)]
pub struct Cli {
    /// Knowledge-base file (.akb)
    pub file: PathBuf,

    /// Enabled attack kinds, e.g. `undercut,rebut` (overrides the file)
    #[arg(long, global = true)]
    pub kinds: Option<String>,

    /// Focal claim; repeatable (overrides the file)
    #[arg(long, global = true)]
    pub focal: Vec<String>,

    /// Print the elapsed time to stderr
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the generated arguments
    Args {
        #[arg(long)]
        claim: Option<String>,
    },
    /// List the attacks of the generated graph
    Attacks,
    /// Print the generated graph
    Graph {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extensions of the generated graph
    Extensions {
        #[arg(long)]
        semantics: Semantics,
    },
    /// Is the claim accepted under the semantics?
    Accept {
        claim: String,
        #[arg(long)]
        semantics: Semantics,
        #[arg(long, default_value = "credulous")]
        mode: Mode,
    },
    /// Extensions of a default theory
    DlExtensions,
    /// Default-logic derivability of a formula
    DlEntails {
        formula: String,
        #[arg(long)]
        skeptical: bool,
    },
    /// System P entailment of a conditional
    PEntails { query: String },
    /// Check a descriptive graph against its assigned arguments
    VerifyDescriptive {
        /// `.akb` file with node/edge/arg statements, or a JSON graph;
        /// defaults to the knowledge-base file itself
        graphfile: Option<PathBuf>,
        /// Also fail on attacks the abstract graph does not list
        #[arg(long)]
        strict: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Dot,
    Json,
}

/// Options shared by all commands.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub kinds: Option<String>,
    pub focal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Bool(bool),
    /// A listing of arguments, attacks or extensions.
    Listing(usize),
}

#[derive(Clone, Debug)]
pub struct QueryResult {
    pub verdict: Verdict,
    /// Printable detail: the listing, or the witnesses behind a verdict.
    pub output: String,
    pub timing: Duration,
}

impl QueryResult {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Bool(false) => EXIT_FALSE,
            _ => EXIT_OK,
        }
    }
}

/// A failure together with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    /// Maps a library error; `file` prefixes positioned diagnostics.
    pub fn from_error(e: Error, file: Option<&Path>) -> CliError {
        let code = if e.is_resource_limit() {
            EXIT_RESOURCE
        } else if e.is_input_error() {
            EXIT_PARSE
        } else {
            EXIT_USAGE
        };
        let message = match (file, &e) {
            (Some(p), Error::Syntax { .. } | Error::UnboundVariable { .. } | Error::Grounding(_)) => {
                format!("{}:{}", p.display(), e)
            }
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

fn query_error(what: &str, e: Error) -> CliError {
    CliError {
        code: if e.is_resource_limit() {
            EXIT_RESOURCE
        } else {
            EXIT_PARSE
        },
        message: format!("{}: {}", what, e),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Loads `path`, runs the command and reports the outcome.
pub fn run(cli: &Cli) -> CliResult<QueryResult> {
    let doc = load_kb(&cli.file).map_err(|e| CliError::from_error(e, Some(&cli.file)))?;
    let flags = Flags {
        kinds: cli.kinds.clone(),
        focal: cli.focal.clone(),
    };
    run_command(&doc, &cli.command, &flags)
}

/// Runs one command against a loaded document.
pub fn run_command(doc: &KbDocument, command: &Command, flags: &Flags) -> CliResult<QueryResult> {
    let start = Instant::now();
    let (verdict, output) = dispatch(doc, command, flags)?;
    Ok(QueryResult {
        verdict,
        output,
        timing: start.elapsed(),
    })
}

fn err(e: Error) -> CliError {
    CliError::from_error(e, None)
}

fn parse_claim(logic: Logic, text: &str) -> CliResult<Claim> {
    let parsed = match logic {
        Logic::Simple => parse_literal(text).map(|l| Claim::Formula(l.to_formula())),
        Logic::Classical | Logic::Default => parse_formula(text).map(Claim::Formula),
        Logic::Conditional => Conditional::parse(text).map(Claim::Conditional),
    };
    parsed.map_err(|e| query_error(&format!("claim `{}`", text), e))
}

fn config(doc: &KbDocument, flags: &Flags) -> CliResult<GenerationConfig> {
    let mut config = doc.generation_config();
    if let Some(k) = &flags.kinds {
        config.kinds = AttackKind::parse_list(k).map_err(|e| CliError::usage(format!("--kinds: {}", e)))?;
    }
    if !flags.focal.is_empty() {
        if doc.logic() == Logic::Simple {
            return Err(CliError::usage("--focal does not apply to simple logic"));
        }
        config.focal = flags
            .focal
            .iter()
            .map(|t| parse_claim(doc.logic(), t))
            .collect::<CliResult<_>>()?;
    }
    Ok(config)
}

/// Makes sure `claim` is among the focal claims without dropping the
/// logic's default selection.
fn include_claim(doc: &KbDocument, config: &mut GenerationConfig, claim: &Claim) {
    if config.focal.contains(claim) {
        return;
    }
    if config.focal.is_empty() {
        config.focal = match &doc.kb {
            KnowledgeBase::Simple(_) => return,
            KnowledgeBase::Classical(delta) => default_focal_claims(delta, config.focal_depth)
                .into_iter()
                .map(Claim::Formula)
                .collect(),
            KnowledgeBase::Default(t) => default_claims(t).into_iter().map(Claim::Formula).collect(),
            KnowledgeBase::Conditional(kb) => dedarg::system_p::default_queries(kb)
                .into_iter()
                .map(Claim::Conditional)
                .collect(),
        };
    }
    config.focal.push(claim.clone());
}

fn graph(doc: &KbDocument, config: &GenerationConfig) -> CliResult<ArgGraph> {
    generate_graph(&doc.kb, config).map_err(err)
}

fn ext_text(g: &ArgGraph, ext: &BTreeSet<usize>) -> String {
    let ids: Vec<&str> = ext.iter().map(|&i| g.nodes[i].id.as_str()).collect();
    format!("{{{}}}", ids.join(", "))
}

fn require(doc: &KbDocument, logic: Logic, command: &str) -> CliResult<()> {
    if doc.logic() != logic {
        return Err(CliError::usage(format!(
            "`{}` needs a {} knowledge base, this one is {}",
            command,
            logic,
            doc.logic()
        )));
    }
    Ok(())
}

fn dispatch(doc: &KbDocument, command: &Command, flags: &Flags) -> CliResult<(Verdict, String)> {
    let prover = doc.prover();
    let bounds = doc.bounds;
    match command {
        Command::Args { claim } => {
            let mut config = config(doc, flags)?;
            let wanted = claim.as_deref().map(|t| parse_claim(doc.logic(), t)).transpose()?;
            if let Some(c) = &wanted {
                include_claim(doc, &mut config, c);
            }
            let g = ArgGraph::from_arguments(generate_arguments(&doc.kb, &config).map_err(err)?);
            let mut out = String::new();
            let mut count = 0;
            for n in &g.nodes {
                if wanted.is_none() || n.argument.claim() == wanted {
                    out.push_str(&format!("{}: {}\n", n.id, n.argument));
                    count += 1;
                }
            }
            Ok(match wanted {
                Some(_) => (Verdict::Bool(count > 0), out),
                None => (Verdict::Listing(count), out),
            })
        }
        Command::Attacks => {
            let g = graph(doc, &config(doc, flags)?)?;
            let text = to_text(&g);
            let out: String = text.lines().skip(g.len()).map(|l| format!("{}\n", l)).collect();
            Ok((Verdict::Listing(g.attacks.len()), out))
        }
        Command::Graph { format } => {
            let g = graph(doc, &config(doc, flags)?)?;
            let out = match format {
                Format::Text => to_text(&g),
                Format::Dot => to_dot(&g),
                Format::Json => to_json(&g),
            };
            Ok((Verdict::Listing(g.len()), out))
        }
        Command::Extensions { semantics } => {
            let g = graph(doc, &config(doc, flags)?)?;
            let exts = enumerate_extensions(&g, *semantics, &bounds).map_err(err)?;
            let out: String = exts.iter().map(|e| ext_text(&g, e) + "\n").collect();
            Ok((Verdict::Listing(exts.len()), out))
        }
        Command::Accept { claim, semantics, mode } => {
            let wanted = parse_claim(doc.logic(), claim)?;
            let mut config = config(doc, flags)?;
            include_claim(doc, &mut config, &wanted);
            let g = graph(doc, &config)?;
            let exts = enumerate_extensions(&g, *semantics, &bounds).map_err(err)?;
            let accepted = accepted_claims(&g, *semantics, *mode, &bounds).map_err(err)?;
            let holds = accepted.contains(&wanted);
            let mut out = format!("{}\n", holds);
            for n in g.nodes.iter().filter(|n| n.argument.claim().as_ref() == Some(&wanted)) {
                out.push_str(&format!("{}: {}\n", n.id, n.argument));
            }
            for e in &exts {
                out.push_str(&format!("{} extension {}\n", semantics.name(), ext_text(&g, e)));
            }
            Ok((Verdict::Bool(holds), out))
        }
        Command::DlExtensions => {
            require(doc, Logic::Default, "dl-extensions")?;
            let KnowledgeBase::Default(theory) = &doc.kb else {
                unreachable!()
            };
            let exts = dl_extensions(&prover, theory, &bounds).map_err(err)?;
            let mut out = String::new();
            for (i, e) in exts.iter().enumerate() {
                out.push_str(&extension_text(i, e));
            }
            Ok((Verdict::Listing(exts.len()), out))
        }
        Command::DlEntails { formula, skeptical } => {
            require(doc, Logic::Default, "dl-entails")?;
            let KnowledgeBase::Default(theory) = &doc.kb else {
                unreachable!()
            };
            let f = parse_formula(formula).map_err(|e| query_error(&format!("formula `{}`", formula), e))?;
            let mode = if *skeptical { Mode::Skeptical } else { Mode::Credulous };
            let v = default_derives(&prover, theory, &f, mode, &bounds).map_err(err)?;
            let mut out = format!("{}\n", v.holds);
            if v.no_extension {
                out.push_str("no extension\n");
            }
            for (i, e) in v.extensions.iter().enumerate() {
                let mark = if v.witnesses.contains(&i) {
                    "entails"
                } else {
                    "does not entail"
                };
                out.push_str(&format!("E{} {} {}\n", i + 1, mark, f));
                out.push_str(&extension_text(i, e));
            }
            Ok((Verdict::Bool(v.holds), out))
        }
        Command::PEntails { query } => {
            require(doc, Logic::Conditional, "p-entails")?;
            let KnowledgeBase::Conditional(kb) = &doc.kb else {
                unreachable!()
            };
            let q = Conditional::parse(query).map_err(|e| query_error(&format!("query `{}`", query), e))?;
            let v = p_entails(&prover, kb, &q).map_err(err)?;
            let mut out = format!("{}\n", v.entailed);
            if v.inconsistent_base {
                out.push_str("base is not consistent\n");
            } else {
                out.push_str(&format!("layers of the base with {}:\n", q.opposite()));
            }
            for (i, layer) in v.layers.iter().enumerate() {
                let items: Vec<String> = layer.iter().map(|c| c.to_string()).collect();
                // with a failed layering the last entry is the untolerated remainder
                let name = if v.entailed && i + 1 == v.layers.len() {
                    "untolerated".to_string()
                } else {
                    format!("L{}", i)
                };
                out.push_str(&format!("  {}: {}\n", name, items.join("; ")));
            }
            Ok((Verdict::Bool(v.entailed), out))
        }
        Command::VerifyDescriptive { graphfile, strict } => {
            let config = config(doc, flags)?;
            let graph = match graphfile {
                None => doc
                    .descriptive
                    .clone()
                    .ok_or_else(|| CliError::usage("the knowledge base declares no descriptive graph"))?,
                Some(path) => load_descriptive(doc, path)?,
            };
            let r = verify_descriptive(&prover, &graph, &config.kinds, &bounds, *strict);
            let mut out = format!("{}\n", r.passed());
            for e in &r.edges {
                let status = match &e.status {
                    EdgeStatus::Confirmed(k) => {
                        let names: Vec<&str> = k.iter().map(|x| x.name()).collect();
                        format!("confirmed [{}]", names.join(", "))
                    }
                    EdgeStatus::Violated => "violated".to_string(),
                    EdgeStatus::Error(m) => format!("error: {}", m),
                };
                out.push_str(&format!("{} -> {} {}\n", e.from, e.to, status));
            }
            for (a, b, k) in &r.surplus {
                let names: Vec<&str> = k.iter().map(|x| x.name()).collect();
                out.push_str(&format!("surplus {} -> {} [{}]\n", a, b, names.join(", ")));
            }
            for n in &r.unassigned {
                out.push_str(&format!("unassigned {}\n", n));
            }
            for n in &r.invalid {
                out.push_str(&format!("invalid argument {}\n", n));
            }
            Ok((Verdict::Bool(r.passed()), out))
        }
    }
}

fn extension_text(i: usize, e: &dedarg::default::ExtensionRep) -> String {
    let gen: Vec<String> = e.generating.iter().map(|d| d.to_string()).collect();
    let base: Vec<String> = e.formulas().iter().map(|f| f.to_string()).collect();
    let mut s = format!("E{}: Th({{{}}})\n", i + 1, base.join(", "));
    s.push_str(&format!(
        "  generating: {}\n",
        if gen.is_empty() { "none".into() } else { gen.join("; ") }
    ));
    if e.inconsistent {
        s.push_str("  facts are inconsistent\n");
    }
    s
}

/// Reads a descriptive graph from an `.akb` file or a JSON graph.
fn load_descriptive(doc: &KbDocument, path: &Path) -> CliResult<DescriptiveGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("{}: {}", path.display(), e),
    })?;
    if path.extension().is_some_and(|x| x == "json") {
        let g = from_json(&text).map_err(|e| CliError {
            code: EXIT_PARSE,
            message: format!("{}:{}", path.display(), e),
        })?;
        return Ok(DescriptiveGraph {
            nodes: g.nodes.iter().map(|n| n.id.clone()).collect(),
            edges: g.edge_ids().into_iter().collect(),
            assignment: g.nodes.iter().map(|n| (n.id.clone(), n.argument.clone())).collect(),
        });
    }
    let gdoc = parse_kb(&text).map_err(|e| CliError::from_error(e, Some(path)))?;
    if gdoc.logic() != doc.logic() {
        return Err(CliError::usage(format!(
            "{} is a {} document but the knowledge base is {}",
            path.display(),
            gdoc.logic(),
            doc.logic()
        )));
    }
    gdoc.descriptive
        .ok_or_else(|| CliError::usage(format!("{} declares no nodes, edges or arguments", path.display())))
}
