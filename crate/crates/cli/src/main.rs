//! `cyclepack` command line.
//!
//! Exit status: 0 success or agreement, 1 disagreement or invalid witness,
//! 2 usage or parse error, 3 node budget exhausted.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cyclepack::families::{hamiltonian_decomposition, make_family, DecompositionFailure};
use cyclepack::flow::flow_decompose;
use cyclepack::gadgets::{gadget_eulerian, gadget_planar, gadget_replacement, LinkageInstance};
use cyclepack::harness::{self, Corpus, DEFAULT_SEED};
use cyclepack::io::{self, Document};
use cyclepack::packing::{lambda_k_with, LambdaKOptions};
use cyclepack::{
    solve, verify_packing, Certainty, CyclePacking, FamilySpec, MultiDigraph, SolveOptions, TerminalSet,
    Vertex,
};

#[derive(Parser)]
#[command(name = "cyclepack", version, about = "Arc-disjoint S-cycle packing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Digraph file (`n`, `a` lines; gadget documents are accepted).
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Use a family digraph instead of a file, e.g. `complete:6`.
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum number of arc-disjoint S-cycles, with a witness.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Terminal set; defaults to the document's `S:` line.
        #[arg(long = "S", value_parser = parse_set)]
        s: Option<VertexList>,
        #[arg(long)]
        budget: Option<u64>,
        /// Stop once this many cycles are packed.
        #[arg(long)]
        target: Option<usize>,
    },
    /// Minimum of lambda_S over all k-subsets S.
    LambdaK {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// Only solve S = {0..k-1}; valid for vertex-transitive inputs.
        #[arg(long)]
        transitive: bool,
        /// Node budget per terminal set.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Closed-form values for a family: one `k<TAB>value` line per k.
    Formula {
        spec: FamilySpec,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Family digraphs and their closed-form tables.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Build a reduction gadget and print it with roles, `S:` and `L:`.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Hamiltonian decomposition by exhaustive search.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Path/cycle decomposition of an integral flow file.
    FlowDecompose { input: PathBuf },
    /// Check a witness file against a digraph.
    Verify {
        digraph: PathBuf,
        witness: PathBuf,
        /// Terminal set; defaults to the witness's, then the digraph's, `S:` line.
        #[arg(long = "S", value_parser = parse_set)]
        s: Option<VertexList>,
    },
    /// Seeded oracle-versus-solver corpora.
    Harness {
        /// One of replacement, eulerian, planar, symmetric, flow, facts, all.
        #[arg(long, default_value = "all")]
        corpus: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Instances per corpus; defaults to the acceptance counts.
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Print the family digraph.
    Make { spec: FamilySpec },
    /// `k<TAB>lambda_k` for every valid k.
    LambdaTable { spec: FamilySpec },
}

#[derive(Args)]
struct Pairs {
    #[arg(long)]
    s1: Vertex,
    #[arg(long)]
    t1: Vertex,
    #[arg(long)]
    s2: Vertex,
    #[arg(long)]
    t2: Vertex,
}

#[derive(Subcommand)]
enum GadgetKind {
    /// Weak 2-linkage instance to an Eulerian digraph (k >= 3).
    Eulerian {
        input: PathBuf,
        #[command(flatten)]
        pairs: Pairs,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Two-demand-pair instance to a planar digraph (k >= 2).
    Planar {
        input: PathBuf,
        #[command(flatten)]
        pairs: Pairs,
        #[arg(long, default_value_t = 1)]
        d1: usize,
        #[arg(long, default_value_t = 1)]
        d2: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Undirected graph (arcs read as edges) to a symmetric digraph.
    Replacement {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        ell: usize,
    },
}

/// A `--S` value: comma-separated, sorted, no duplicates.
#[derive(Clone, Debug)]
struct VertexList(Vec<Vertex>);

fn parse_set(text: &str) -> Result<VertexList, String> {
    io::parse_vertex_list(text).map(VertexList)
}

struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

/// Usage-level failure: exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn read_document(path: &PathBuf) -> Result<Document, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    io::parse_document(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Document, Usage> {
    match (&input.input, input.family) {
        (_, Some(spec)) => Ok(Document {
            digraph: make_family(spec)?,
            ..Document::default()
        }),
        (Some(path), None) => read_document(path),
        (None, None) => Err(Usage("an input file or --family is required".into())),
    }
}

fn terminals(flag: Option<VertexList>, docs: &[Option<Vec<Vertex>>], n: usize) -> Result<TerminalSet, Usage> {
    let members = flag
        .map(|l| l.0)
        .or_else(|| docs.iter().flatten().next().cloned())
        .ok_or_else(|| Usage("no terminal set: pass --S".into()))?;
    Ok(TerminalSet::new(members, n)?)
}

fn status(c: Certainty) -> &'static str {
    match c {
        Certainty::Optimal => "optimal",
        Certainty::TargetReached => "target-reached",
        Certainty::BudgetExhausted => "budget-exhausted",
    }
}

fn exit_for(c: Certainty) -> u8 {
    if c == Certainty::BudgetExhausted {
        3
    } else {
        0
    }
}

fn family_table(spec: FamilySpec, only: Option<usize>) -> Result<String, Usage> {
    let mut out = String::new();
    match only {
        Some(k) => writeln!(out, "{k}\t{}", spec.lambda_k(k)?)?,
        None => {
            for (k, v) in spec.lambda_table()? {
                writeln!(out, "{k}\t{v}")?;
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<Report, Usage> {
    match cli.command {
        Command::Solve {
            input,
            s,
            budget,
            target,
        } => {
            let doc = load(&input)?;
            let s = terminals(
                s,
                std::slice::from_ref(&doc.terminals),
                doc.digraph.vertex_count(),
            )?;
            let sol = solve(
                &doc.digraph,
                &s,
                SolveOptions {
                    node_budget: budget,
                    target,
                },
            );
            let mut text = format!("S: {s}\n");
            text += &io::write_witness(&sol.packing);
            writeln!(text, "status {}\nnodes {}", status(sol.certainty), sol.nodes)?;
            Ok(Report {
                text,
                code: exit_for(sol.certainty),
            })
        }
        Command::LambdaK {
            input,
            k,
            transitive,
            budget,
            workers,
        } => {
            let doc = load(&input)?;
            let opts = LambdaKOptions {
                transitive_shortcut: transitive,
                node_budget: budget,
                workers,
            };
            let res = lambda_k_with(&doc.digraph, k, opts)?;
            let mut text = format!("k {k}\nS: {}\n", res.witness_set);
            text += &io::write_witness(&res.witness_packing);
            writeln!(
                text,
                "status {}\nsets {}",
                status(res.certainty),
                res.sets_examined
            )?;
            Ok(Report {
                text,
                code: exit_for(res.certainty),
            })
        }
        Command::Formula { spec, k } => Ok(Report::ok(family_table(spec, k)?)),
        Command::Family { action } => match action {
            FamilyAction::Make { spec } => Ok(Report::ok(io::write_digraph(&make_family(spec)?))),
            FamilyAction::LambdaTable { spec } => Ok(Report::ok(family_table(spec, None)?)),
        },
        Command::Gadget { kind } => {
            let out = match kind {
                GadgetKind::Eulerian { input, pairs, k } => {
                    let doc = read_document(&input)?;
                    let inst = LinkageInstance::new(doc.digraph, pairs.s1, pairs.t1, pairs.s2, pairs.t2);
                    gadget_eulerian(&inst, k)?
                }
                GadgetKind::Planar {
                    input,
                    pairs,
                    d1,
                    d2,
                    k,
                } => {
                    let doc = read_document(&input)?;
                    let inst = LinkageInstance::new(doc.digraph, pairs.s1, pairs.t1, pairs.s2, pairs.t2)
                        .with_demands(d1, d2);
                    gadget_planar(&inst, k)?
                }
                GadgetKind::Replacement { input, ell } => {
                    let doc = read_document(&input)?;
                    gadget_replacement(&doc.digraph.underlying_graph(), ell)?
                }
            };
            Ok(Report::ok(io::write_gadget(&out)))
        }
        Command::Decompose { input, budget } => {
            let doc = load(&input)?;
            match hamiltonian_decomposition(&doc.digraph, budget) {
                Ok(cert) => {
                    let mut text = format!("decomposition {}\n", cert.cycles.len());
                    for c in &cert.cycles {
                        writeln!(text, "cycle: {c}")?;
                    }
                    Ok(Report::ok(text))
                }
                Err(DecompositionFailure::Exhausted) => Ok(Report::ok("failure exhausted\n".into())),
                Err(DecompositionFailure::Budget) => Ok(Report {
                    text: "failure budget\n".into(),
                    code: 3,
                }),
            }
        }
        Command::FlowDecompose { input } => {
            let doc = read_document(&input)?;
            let net = doc.flow_network().map_err(Usage)?;
            Ok(Report::ok(io::write_decomposition(&flow_decompose(&net)?)))
        }
        Command::Verify { digraph, witness, s } => {
            let doc = read_document(&digraph)?;
            let text =
                fs::read_to_string(&witness).map_err(|e| Usage(format!("{}: {e}", witness.display())))?;
            let w = io::parse_witness(&text).map_err(|e| Usage(format!("{}: {e}", witness.display())))?;
            let s = terminals(
                s,
                &[w.terminals.clone(), doc.terminals.clone()],
                doc.digraph.vertex_count(),
            )?;
            Ok(verify_report(
                &doc.digraph,
                CyclePacking::new(s, w.cycles),
                w.value,
            ))
        }
        Command::Harness { corpus, seed, count } => {
            let corpora: Vec<Corpus> = if corpus == "all" {
                Corpus::ALL.to_vec()
            } else {
                vec![corpus.parse().map_err(Usage)?]
            };
            let mut text = String::new();
            let mut all_agree = true;
            for c in corpora {
                let rows = harness::run(c, seed, count.unwrap_or_else(|| c.default_count()));
                let agree = rows.iter().filter(|r| r.agree).count();
                for r in &rows {
                    writeln!(text, "{r}")?;
                }
                writeln!(text, "# {c}: {agree}/{} agree", rows.len())?;
                all_agree &= agree == rows.len();
            }
            Ok(Report {
                text,
                code: if all_agree { 0 } else { 1 },
            })
        }
    }
}

fn verify_report(d: &MultiDigraph, packing: CyclePacking, claimed: usize) -> Report {
    if !verify_packing(d, &packing) {
        return Report {
            text: "invalid: cycles are not arc-disjoint S-cycles of the digraph\n".into(),
            code: 1,
        };
    }
    if packing.len() != claimed {
        return Report {
            text: format!("invalid: lambda {claimed} but {} cycles\n", packing.len()),
            code: 1,
        };
    }
    Report::ok(format!("valid {} cycles\n", packing.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.code)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
