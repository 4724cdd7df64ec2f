//! `caw`: generate graphs, compute coherent closures, decompose circular-arc
//! graphs with an association scheme and run verification sweeps.
//!
//! Exit codes: 0 success or certificate, 1 negative result, 2 input or
//! usage error.

mod render;
mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use caw_core::{
    closure_of_graph, count_automorphisms, decompose_caw, format, predicted_aut_order, scheme_decomposition,
    check_neighborhood_condition, ArcCondition, ArcFunction, CoherentConfiguration, Error, Graph,
    DEFAULT_AUT_LIMIT, DEFAULT_CLOSURE_LIMIT, DEFAULT_ISO_LIMIT,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Largest bound accepted by `verify` unless `--limit` says otherwise.
const DEFAULT_VERIFY_LIMIT: usize = 24;

#[derive(Parser)]
#[command(name = "caw", version, about = "Coherent closures and circular-arc graph decompositions")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Report timing as none, for byte-stable output.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Overrides every size limit (closure, isomorphism, automorphisms, verify bound).
    #[arg(long, global = true, env = "CAW_LIMIT")]
    limit: Option<usize>,
    /// Seed for random sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph in edge-list format.
    ///
    /// Families: cnk N K, cycle N, complete N, path N, empty N, star LEAVES,
    /// petersen, mkn M R, lex OUTER INNER where OUTER and INNER are
    /// colon-separated specs such as cnk:5:1 or complete:2.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Coherent closure of a graph: summary and scheme dump.
    Closure {
        file: PathBuf,
        /// Write the dump here instead of printing it.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decompose as C_{m,k}[K_r] and verify the certificate.
    Decompose { file: PathBuf },
    /// Work with an arc model.
    Arcs {
        file: PathBuf,
        action: ArcAction,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification sweep up to a size bound.
    Verify { suite: Suite, bound: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum ArcAction {
    Graph,
    Reduce,
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Dihedral,
    Wreath,
    Aut,
    All,
}

/// Failure of a command; the variant decides the exit code.
enum Failure {
    Negative(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    format: OutputFormat,
    no_timing: bool,
    limit: Option<usize>,
    seed: u64,
    start: Instant,
}

impl Ctx {
    fn timing(&self) -> Option<f64> {
        (!self.no_timing).then(|| (self.start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
    }

    fn emit<T: Serialize>(&self, report: &T) {
        let value = serde_json::to_value(report).expect("reports serialize");
        match self.format {
            OutputFormat::Machine => println!("{}", serde_json::to_string_pretty(&value).expect("valid json")),
            OutputFormat::Text => print!("{}", render::text(&value)),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        no_timing: cli.no_timing,
        limit: cli.limit,
        seed: cli.seed,
        start: Instant::now(),
    };
    let outcome = match cli.command {
        Command::Gen { family, params, output } => cmd_gen(&family, &params, output.as_deref()),
        Command::Closure { file, output } => cmd_closure(&ctx, &file, output.as_deref()),
        Command::Decompose { file } => cmd_decompose(&ctx, &file),
        Command::Arcs { file, action, output } => cmd_arcs(&ctx, &file, action, output.as_deref()),
        Command::Verify { suite, bound } => cmd_verify(&ctx, suite, bound),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    format::parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check_size(what: &str, n: usize, limit: usize) -> Outcome {
    if n > limit {
        return Err(Failure::Input(format!("{what}: {n} vertices exceed limit {limit} (raise with --limit)")));
    }
    Ok(())
}

fn number(s: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::Input(format!("expected a non-negative integer, got {s:?}")))
}

/// Graph from a family name and its parameters.
fn graph_from_spec(family: &str, params: &[&str]) -> Result<Graph, Failure> {
    let nums = || params.iter().map(|p| number(p)).collect::<Result<Vec<_>, _>>();
    let arity = |want: usize| -> Result<Vec<usize>, Failure> {
        let v = nums()?;
        if v.len() != want {
            return Err(Failure::Input(format!("{family} takes {want} parameter(s), got {}", v.len())));
        }
        Ok(v)
    };
    let g = match family {
        "cnk" => {
            let p = arity(2)?;
            Graph::elementary_caw(p[0], p[1])?
        }
        "cycle" => Graph::cycle(arity(1)?[0])?,
        "complete" => Graph::complete(arity(1)?[0])?,
        "path" => Graph::path(arity(1)?[0])?,
        "empty" => {
            let n = arity(1)?[0];
            if n == 0 {
                return Err(Error::EmptyVertexSet.into());
            }
            Graph::empty(n)
        }
        "star" => Graph::star(arity(1)?[0]),
        "petersen" => {
            arity(0)?;
            Graph::petersen()
        }
        "mkn" => {
            let p = arity(2)?;
            Graph::disjoint_cliques(p[0], p[1])?
        }
        "lex" => {
            if params.len() != 2 {
                return Err(Failure::Input("lex takes two specs, e.g. lex cnk:5:1 complete:2".into()));
            }
            let sub = |spec: &str| {
                let mut parts = spec.split(':');
                let fam = parts.next().unwrap_or_default();
                if fam == "lex" {
                    return Err(Failure::Input("nested lex specs are not supported".into()));
                }
                graph_from_spec(fam, &parts.collect::<Vec<_>>())
            };
            Graph::lex_product(&sub(params[0])?, &sub(params[1])?)
        }
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    };
    Ok(g)
}

fn cmd_gen(family: &str, params: &[String], output: Option<&Path>) -> Outcome {
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    let g = graph_from_spec(family, &params)?;
    write_out(output, &format::write_graph(&g))
}

#[derive(Serialize)]
struct SchemeSummary {
    n: usize,
    rank: usize,
    association: bool,
    diagonal_colors: Vec<usize>,
}

impl SchemeSummary {
    fn of(cfg: &CoherentConfiguration) -> Self {
        SchemeSummary {
            n: cfg.n(),
            rank: cfg.rank(),
            association: cfg.is_association(),
            diagonal_colors: cfg.diagonal_colors().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct ClosureReport {
    input: String,
    scheme: SchemeSummary,
    dump: Option<String>,
    dump_file: Option<String>,
    timing_ms: Option<f64>,
}

fn cmd_closure(ctx: &Ctx, file: &Path, output: Option<&Path>) -> Outcome {
    let g = load_graph(file)?;
    check_size("closure", g.n(), ctx.limit.unwrap_or(DEFAULT_CLOSURE_LIMIT))?;
    let cfg = closure_of_graph(&g);
    let dump = format::write_scheme(&cfg);
    if let Some(path) = output {
        write_out(Some(path), &dump)?;
    }
    ctx.emit(&ClosureReport {
        input: file.display().to_string(),
        scheme: SchemeSummary::of(&cfg),
        dump: output.is_none().then_some(dump),
        dump_file: output.map(|p| p.display().to_string()),
        timing_ms: ctx.timing(),
    });
    Ok(())
}

#[derive(Serialize)]
struct Certificate {
    m: usize,
    k: usize,
    r: usize,
    /// `[i, j]` per vertex: clique `j` at position `i` of `Z_m`.
    relabeling: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct SchemeCheck {
    outer_kind: Option<&'static str>,
    inner_size: Option<usize>,
    outer_size: Option<usize>,
    verdict: &'static str,
}

#[derive(Serialize)]
struct AutCheck {
    predicted: u128,
    counted: Option<u128>,
    matches: Option<bool>,
}

#[derive(Serialize)]
struct Verification {
    relabeling_verified: Option<bool>,
    scheme_decomposition: Option<SchemeCheck>,
    automorphism_order: Option<AutCheck>,
}

#[derive(Serialize)]
struct DecomposeReport {
    input: String,
    vertices: usize,
    edges: usize,
    scheme: SchemeSummary,
    certificate: Option<Certificate>,
    failure_stage: Option<&'static str>,
    verification: Verification,
    timing_ms: Option<f64>,
}

fn cmd_decompose(ctx: &Ctx, file: &Path) -> Outcome {
    let g = load_graph(file)?;
    check_size("closure", g.n(), ctx.limit.unwrap_or(DEFAULT_CLOSURE_LIMIT))?;
    let search_limit = ctx.limit.unwrap_or(DEFAULT_ISO_LIMIT);
    let aut_limit = ctx.limit.unwrap_or(DEFAULT_AUT_LIMIT);
    let cfg = closure_of_graph(&g);
    let result = decompose_caw(&g);

    let mut verification = Verification {
        relabeling_verified: None,
        scheme_decomposition: None,
        automorphism_order: None,
    };
    let mut ok = result.is_ok();
    if let Ok(d) = &result {
        let verified = d.verify(&g);
        verification.relabeling_verified = Some(verified);
        ok &= verified;
        verification.scheme_decomposition = Some(match scheme_decomposition(&g, search_limit) {
            Ok(s) => SchemeCheck {
                outer_kind: Some(s.outer_kind.label()),
                inner_size: Some(s.inner_size),
                outer_size: Some(s.outer_size),
                verdict: s.verdict.label(),
            },
            Err(stage) => {
                ok = false;
                SchemeCheck {
                    outer_kind: None,
                    inner_size: None,
                    outer_size: None,
                    verdict: stage.label(),
                }
            }
        });
        let predicted = predicted_aut_order(d.m, d.k, d.r)?;
        let counted = (g.n() <= aut_limit)
            .then(|| count_automorphisms(&g, aut_limit))
            .transpose()?;
        let matches = counted.map(|c| c == predicted);
        ok &= matches != Some(false);
        verification.automorphism_order = Some(AutCheck {
            predicted,
            counted,
            matches,
        });
    }
    ctx.emit(&DecomposeReport {
        input: file.display().to_string(),
        vertices: g.n(),
        edges: g.edge_count(),
        scheme: SchemeSummary::of(&cfg),
        certificate: result.as_ref().ok().map(|d| Certificate {
            m: d.m,
            k: d.k,
            r: d.r,
            relabeling: d.relabeling.iter().map(|&(i, j)| [i, j]).collect(),
        }),
        failure_stage: result.as_ref().err().map(|s| s.label()),
        verification,
        timing_ms: ctx.timing(),
    });
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative(String::new()))
    }
}

#[derive(Serialize)]
struct ConditionRow {
    condition: String,
    holds: bool,
    detail: Option<String>,
}

#[derive(Serialize)]
struct ArcCheckReport {
    input: String,
    length: usize,
    vertices: usize,
    conditions: Vec<ConditionRow>,
    reduced: bool,
    timing_ms: Option<f64>,
}

fn load_arcs(path: &Path) -> Result<ArcFunction, Failure> {
    format::parse_arc_model(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_arcs(ctx: &Ctx, file: &Path, action: ArcAction, output: Option<&Path>) -> Outcome {
    let f = load_arcs(file)?;
    match action {
        ArcAction::Graph => write_out(output, &format::write_graph(&f.intersection_graph())),
        ArcAction::Reduce => match f.reduce() {
            Ok(r) => write_out(output, &format::write_arc_model(r.arc_function())),
            Err(e) => Err(Failure::Negative(format!("not reducible: {e}"))),
        },
        ArcAction::Check => {
            // (1) and (2) hold for anything that parsed
            let mut conditions = vec![
                ConditionRow {
                    condition: ArcCondition::EndpointCover.to_string(),
                    holds: true,
                    detail: None,
                },
                ConditionRow {
                    condition: ArcCondition::MinSize.to_string(),
                    holds: true,
                    detail: None,
                },
            ];
            let g = f.intersection_graph();
            let neighborhood = match check_neighborhood_condition(&g) {
                caw_core::NeighborhoodCheck::Holds => None,
                caw_core::NeighborhoodCheck::Violated(u, v) => Some(format!("edge {u}-{v}")),
            };
            conditions.push(ConditionRow {
                condition: "condition (3.1)".into(),
                holds: neighborhood.is_none(),
                detail: neighborhood,
            });
            let violations = f.reduced_violations();
            for cond in [
                ArcCondition::NoContainment,
                ArcCondition::LengthEqualsOrder,
                ArcCondition::ExactlyTwoEndpoints,
            ] {
                let detail = violations.iter().find_map(|e| match e {
                    Error::Arc { condition, detail } if *condition == cond => Some(detail.clone()),
                    _ => None,
                });
                conditions.push(ConditionRow {
                    condition: cond.to_string(),
                    holds: detail.is_none(),
                    detail,
                });
            }
            let all = conditions.iter().all(|c| c.holds);
            ctx.emit(&ArcCheckReport {
                input: file.display().to_string(),
                length: f.m(),
                vertices: f.n_vertices(),
                reduced: violations.is_empty(),
                conditions,
                timing_ms: ctx.timing(),
            });
            if all {
                Ok(())
            } else {
                Err(Failure::Negative(String::new()))
            }
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    suite: &'static str,
    bound: usize,
    seed: u64,
    cases: Vec<suites::Case>,
    passed: usize,
    failed: usize,
    ok: bool,
    timing_ms: Option<f64>,
}

fn cmd_verify(ctx: &Ctx, suite: Suite, bound: usize) -> Outcome {
    check_size("verify bound", bound, ctx.limit.unwrap_or(DEFAULT_VERIFY_LIMIT))?;
    let (name, cases) = match suite {
        Suite::Dihedral => ("dihedral", suites::dihedral(bound)),
        Suite::Wreath => ("wreath", suites::wreath(bound, ctx.seed)),
        Suite::Aut => ("aut", suites::aut(bound)),
        Suite::All => {
            let mut all = suites::dihedral(bound);
            all.extend(suites::wreath(bound, ctx.seed));
            all.extend(suites::aut(bound));
            ("all", all)
        }
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    let failed = cases.len() - passed;
    ctx.emit(&VerifyReport {
        suite: name,
        bound,
        seed: ctx.seed,
        passed,
        failed,
        ok: failed == 0,
        cases,
        timing_ms: ctx.timing(),
    });
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Negative(format!("{failed} case(s) failed")))
    }
}
