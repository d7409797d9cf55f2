//! Command-line front end.
//!
//! Exit status: 0 when the queried property holds, 1 when it fails, 2 on
//! bad input.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::decide::{
    is_cm, koszul_lift_details, necessary_scm, recheck_verdict, scm_with_budget, sufficient_scm, Evidence,
    GraphJson, Property, Verdict, VerdictJson, SEARCH_BUDGET,
};
use crate::harness::{exhaustive_t37, run_campaign, run_all_fixtures, run_fixture, Campaign, FixtureId, TheoremId};
use crate::homology::{betti_numbers, FieldSpec};
use crate::monomial::{alexander_dual_of_edge_ideal, dual_component, format_monomial};
use crate::quotients::{dual_degree_range, find_order_bounded, verify_order, CertificateJson, OrderSearch, QuotientOrder};
use crate::{Error, Graph, MonomialIdeal, Result, VarSet};

#[derive(Parser, Debug)]
#[command(name = "edgescm", version, about = "Sequentially Cohen-Macaulay tests for edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators of the Alexander dual of the edge ideal.
    Dual {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Vertex covers: the minimal ones, or all of a given size.
    Covers {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        size: Option<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Betti numbers of the dual or of one of its components.
    Betti {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        degree: Option<usize>,
        /// Also list the multigraded entries.
        #[arg(long)]
        multigraded: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Linear-quotients orders of the dual components.
    LinQuotients {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = SEARCH_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Decide whether R/I(G) is sequentially Cohen-Macaulay.
    IsScm {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = SEARCH_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Decide whether R/I(G) is Cohen-Macaulay.
    IsCm {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Decide G ∪ W(S) through the whisker conditions.
    Whisker {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertices to whisker, 1-based.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Print the whiskered graph.
        #[arg(long)]
        print_graph: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check a certificate or verdict JSON file.
    Verify {
        file: PathBuf,
        /// Also require a certificate's ideal to be a dual component of this graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Randomized campaign for one theorem.
    VerifyTheorem {
        theorem: TheoremId,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_delimiter = ',', env = "EDGESCM_FIELD", default_value = "2")]
        field: Vec<FieldSpec>,
        /// Run only this trial.
        #[arg(long)]
        trial: Option<usize>,
        /// For T3.7, check every graph with at most --max-n vertices instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a worked example, or all of them.
    Fixture {
        #[arg(default_value = "all")]
        id: String,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph file, `-` for stdin: plain `n m` format or graph JSON.
    graph: PathBuf,
    /// Add whiskers at these vertices (1-based), before deletions.
    #[arg(long, value_delimiter = ',')]
    whisker: Vec<usize>,
    /// Delete these vertices (1-based, after whiskering).
    #[arg(long, value_delimiter = ',')]
    delete: Vec<usize>,
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long)]
    json: bool,
    #[arg(long, env = "EDGESCM_FIELD", default_value = "2")]
    field: FieldSpec,
    /// Report elapsed time.
    #[arg(long)]
    timings: bool,
}

/// Outcome of a subcommand: printed output and whether the property holds.
struct Outcome {
    text: String,
    holds: bool,
}

impl Outcome {
    fn yes(text: String) -> Self {
        Outcome { text, holds: true }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Run with the process arguments and exit.
pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code)
}

/// Run with explicit arguments and streams; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    let timings = match &cli.command {
        Command::VerifyTheorem { .. } => false,
        Command::Dual { out, .. }
        | Command::Covers { out, .. }
        | Command::Betti { out, .. }
        | Command::LinQuotients { out, .. }
        | Command::IsScm { out, .. }
        | Command::IsCm { out, .. }
        | Command::Whisker { out, .. }
        | Command::Verify { out, .. }
        | Command::Fixture { out, .. } => out.timings,
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if timings {
                let _ = writeln!(err, "time: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
            }
            if o.holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
    }
}

fn load_graph_file(path: &Path) -> Result<Graph> {
    let text = read_input(path)?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str::<GraphJson>(&text)?.to_graph()
    } else {
        Graph::parse(&text)
    }
}

fn one_based_set(g: &Graph, list: &[usize]) -> Result<VarSet> {
    let n = g.vertex_count();
    let mut s = VarSet::EMPTY;
    for &v in list {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { index: v, count: n });
        }
        s.insert(v - 1);
    }
    Ok(s)
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        let mut g = load_graph_file(&self.graph)?;
        if !self.whisker.is_empty() {
            let s = one_based_set(&g, &self.whisker)?;
            g = g.add_whiskers(s)?.0;
        }
        if !self.delete.is_empty() {
            let s = one_based_set(&g, &self.delete)?;
            g = g.induced_subgraph_with_map(g.vertices().difference(s))?.0;
        }
        Ok(g)
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Dual { graph, out } => dual(&graph.load()?, &out),
        Command::Covers { graph, size, out } => covers(&graph.load()?, size, &out),
        Command::Betti { graph, degree, multigraded, out } => betti(&graph.load()?, degree, multigraded, &out),
        Command::LinQuotients { graph, degree, budget, out } => lin_quotients(&graph.load()?, degree, budget, &out),
        Command::IsScm { graph, budget, out } => {
            let g = graph.load()?;
            let start = Instant::now();
            let v = scm_with_budget(&g, out.field, budget);
            verdict_outcome(&g, &v, start, &out)
        }
        Command::IsCm { graph, out } => {
            let g = graph.load()?;
            let start = Instant::now();
            let v = is_cm(&g, out.field);
            verdict_outcome(&g, &v, start, &out)
        }
        Command::Whisker { graph, set, print_graph, out } => whisker(&graph.load()?, &set, print_graph, &out),
        Command::Verify { file, graph, out } => verify(&file, graph.as_deref(), &out),
        Command::VerifyTheorem { theorem, trials, max_n, seed, field, trial, exhaustive, json: as_json } => {
            if exhaustive {
                if theorem != TheoremId::T37 {
                    return Err(Error::Unknown { kind: "exhaustive campaign", name: theorem.to_string() });
                }
                let r = exhaustive_t37(max_n);
                let holds = r.disagreements.is_empty();
                let text = if as_json {
                    json(&r)?
                } else {
                    let mut t = format!(
                        "exhaustive {theorem} up to {max_n} vertices: {} graphs, {} pairs, {} both true, {} both false, {} disagreements\n",
                        r.graphs,
                        r.pairs,
                        r.both_true,
                        r.both_false,
                        r.disagreements.len()
                    );
                    for d in &r.disagreements {
                        t.push_str(&format!("  {d}\n"));
                    }
                    if let Some(first) = &r.first_tipless_failure {
                        t.push_str(&format!(
                            "  without requiring the whisker tips the right side fails in {} pairs, first {first}\n",
                            r.tipless_failures
                        ));
                    }
                    t
                };
                return Ok(Outcome { text, holds });
            }
            let mut c = Campaign::new(theorem, trials, max_n, seed).with_fields(field);
            c.only_trial = trial;
            let r = run_campaign(&c)?;
            let text = if as_json { json(&r)? } else { r.to_string() };
            Ok(Outcome { text, holds: r.ok() })
        }
        Command::Fixture { id, out } => {
            let results = if id.eq_ignore_ascii_case("all") {
                run_all_fixtures(out.field)?
            } else {
                vec![run_fixture(id.parse::<FixtureId>()?, out.field)?]
            };
            let holds = results.iter().all(|r| r.ok());
            let text = if out.json {
                json(&results)?
            } else {
                results.iter().map(|r| r.to_string()).collect::<String>()
            };
            Ok(Outcome { text, holds })
        }
    }
}

fn set_labels(g: &Graph, s: VarSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_string()).collect()
}

fn dual(g: &Graph, out: &OutArgs) -> Result<Outcome> {
    let d = alexander_dual_of_edge_ideal(g);
    if out.json {
        return Ok(Outcome::yes(json(&d.to_json(g.labels()))?));
    }
    let mut text = format!("{}\n", d.format(g.labels()));
    if let Some((lo, hi)) = d.degree_range() {
        text.push_str(&format!("{} generators, degrees {lo}..{hi}\n", d.len()));
    }
    Ok(Outcome::yes(text))
}

fn covers(g: &Graph, size: Option<usize>, out: &OutArgs) -> Result<Outcome> {
    let list: Vec<VarSet> = match size {
        Some(d) => dual_component(g, d).generators().iter().map(|m| m.support()).collect(),
        None => g.minimal_vertex_covers(),
    };
    if out.json {
        let labels: Vec<Vec<String>> = list.iter().map(|&c| set_labels(g, c)).collect();
        return Ok(Outcome::yes(json(&labels)?));
    }
    Ok(Outcome::yes(list.iter().map(|&c| format!("{}\n", g.format_set(c))).collect()))
}

fn betti(g: &Graph, degree: Option<usize>, multigraded: bool, out: &OutArgs) -> Result<Outcome> {
    let ideal = match degree {
        Some(d) => dual_component(g, d),
        None => alexander_dual_of_edge_ideal(g),
    };
    let table = betti_numbers(&ideal, out.field);
    if out.json {
        return Ok(Outcome::yes(json(&table.to_json(g.labels()))?));
    }
    let mut text = table.graded().to_string();
    if multigraded {
        for (i, b, r) in table.entries() {
            text.push_str(&format!("b{i} {} = {r}\n", g.format_set(b)));
        }
    }
    Ok(Outcome::yes(text))
}

#[derive(Serialize)]
struct DegreeOrderJson {
    degree: usize,
    generators: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
}

fn lin_quotients(g: &Graph, degree: Option<usize>, budget: u64, out: &OutArgs) -> Result<Outcome> {
    let degrees: Vec<usize> = match degree {
        Some(d) => vec![d],
        None => dual_degree_range(g).collect(),
    };
    let mut rows = Vec::new();
    for d in degrees {
        let component = dual_component(g, d);
        let (status, cert) = match find_order_bounded(&component, budget) {
            OrderSearch::Found(q) => ("found", Some(q)),
            OrderSearch::NoOrder => ("none", None),
            OrderSearch::Undecided => ("undecided", None),
        };
        rows.push((d, component, status, cert));
    }
    let holds = rows.iter().all(|r| r.2 == "found");
    if out.json {
        let js: Vec<DegreeOrderJson> = rows
            .iter()
            .map(|(d, c, status, q)| DegreeOrderJson {
                degree: *d,
                generators: c.len(),
                status,
                certificate: q.as_ref().map(|q| q.to_json(g.labels())),
            })
            .collect();
        return Ok(Outcome { text: json(&js)?, holds });
    }
    let mut text = String::new();
    for (d, c, status, q) in &rows {
        text.push_str(&format!("degree {d}: {} generators, order {status}\n", c.len()));
        if let Some(q) = q {
            text.push_str(&format_order(q, g.labels()));
        }
    }
    Ok(Outcome { text, holds })
}

fn format_order(q: &QuotientOrder, names: &[String]) -> String {
    let mut text = String::new();
    for (m, colon) in q.ordered_generators().iter().zip(q.colon_vars()) {
        let vars: Vec<&str> = colon.iter().map(|v| names[v].as_str()).collect();
        text.push_str(&format!("  {}  : ({})\n", format_monomial(*m, names), vars.join(", ")));
    }
    text
}

fn verdict_outcome(g: &Graph, v: &Verdict, start: Instant, out: &OutArgs) -> Result<Outcome> {
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let text = if out.json {
        let mut j = v.to_json(g);
        if out.timings {
            j.timings_ms = Some(elapsed);
        }
        json(&j)?
    } else {
        let mut t = format!("{}\n", v.summary(g));
        if !v.dlq_gaps.is_empty() {
            t.push_str(&format!("linear resolution without a quotient order in degrees {:?}\n", v.dlq_gaps));
        }
        t
    };
    Ok(Outcome { text, holds: v.value })
}

#[derive(Serialize)]
struct WitnessJson {
    degree: usize,
    i: usize,
    b: Vec<String>,
    lifted: Vec<String>,
    rank: usize,
    lift_holds: bool,
}

#[derive(Serialize)]
struct WhiskerJson {
    s: Vec<String>,
    sufficient: Option<crate::decide::TheoremHit>,
    remainder_witness: Option<WitnessJson>,
    verdict: VerdictJson,
}

fn whisker(g: &Graph, set: &[usize], print_graph: bool, out: &OutArgs) -> Result<Outcome> {
    let s = one_based_set(g, set)?;
    let start = Instant::now();
    let (w, verdict) = crate::decide::whiskered_scm(g, s, out.field)?;
    let hit = sufficient_scm(g, s)?;
    let witness = match hit {
        Some(_) => None,
        None => match necessary_scm(g, s, out.field)? {
            Some(wit) => {
                let lift = koszul_lift_details(g, s, &wit)?;
                Some(WitnessJson {
                    degree: wit.d,
                    i: wit.i,
                    b: set_labels(g, wit.b),
                    lifted: set_labels(&w, wit.lifted_c),
                    rank: wit.rank,
                    lift_holds: lift.holds(),
                })
            }
            None => None,
        },
    };
    let base = matches!(verdict.evidence, Evidence::SufficientCondition { .. });
    let mut vj = verdict.to_json(if base { g } else { &w });
    if out.timings {
        vj.timings_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    if out.json {
        let j = WhiskerJson { s: set_labels(g, s), sufficient: hit, remainder_witness: witness, verdict: vj };
        return Ok(Outcome { text: json(&j)?, holds: verdict.value });
    }
    let mut text = format!("S = {}\n", g.format_set(s));
    match &hit {
        Some(h) => {
            let all: Vec<&str> = h.all.iter().map(|c| c.theorem()).collect();
            text.push_str(&format!("sufficient: {} ({})\n", h.primary.describe(), all.join(", ")));
        }
        None => text.push_str("sufficient: none\n"),
    }
    if let Some(wt) = &witness {
        text.push_str(&format!(
            "G \\ S: nonlinear beta_{},{} = {} in degree {} at {{{}}}, lifted to {{{}}}: {}\n",
            wt.i,
            wt.b.len(),
            wt.rank,
            wt.degree,
            wt.b.join(", "),
            wt.lifted.join(", "),
            if wt.lift_holds { "lift holds" } else { "lift FAILS" }
        ));
    }
    text.push_str(&format!("G ∪ W(S): {}\n", verdict.summary(&w)));
    if print_graph {
        text.push_str(&w.to_text());
    }
    Ok(Outcome { text, holds: verdict.value })
}

#[derive(Serialize)]
struct VerifyJson {
    kind: &'static str,
    valid: bool,
    detail: String,
}

fn verify(file: &Path, graph: Option<&Path>, out: &OutArgs) -> Result<Outcome> {
    let text = read_input(file)?;
    let value: Value = serde_json::from_str(&text)?;
    let (kind, valid, detail) = if value.get("property").is_some() {
        let v: VerdictJson = serde_json::from_value(value)?;
        let ok = recheck_verdict(&v)?;
        let name = match v.property {
            Property::Scm => "SCM",
            Property::Cm => "CM",
        };
        ("verdict", ok, format!("{name} = {} re-derived from {}", v.value, evidence_kind(&v)))
    } else {
        let c: CertificateJson = serde_json::from_value(value)?;
        let q = QuotientOrder::from_json(&c)?;
        let mut ok = verify_order(&q)?;
        let mut detail = format!("{} generators, colon sizes {:?}", q.ideal().len(), q.colon_sizes());
        if let Some(path) = graph {
            let g = load_graph_file(path)?;
            let matches = component_matches(&g, q.ideal());
            if !matches {
                detail.push_str("; ideal is not a dual component of the graph");
            }
            ok &= matches;
        }
        ("certificate", ok, detail)
    };
    let text = if out.json {
        json(&VerifyJson { kind, valid, detail })?
    } else {
        format!("{kind}: {} ({detail})\n", if valid { "valid" } else { "INVALID" })
    };
    Ok(Outcome { text, holds: valid })
}

fn evidence_kind(v: &VerdictJson) -> String {
    serde_json::to_value(&v.evidence)
        .ok()
        .and_then(|e| e.get("kind").and_then(|k| k.as_str().map(str::to_string)))
        .unwrap_or_default()
}

fn component_matches(g: &Graph, ideal: &MonomialIdeal) -> bool {
    ideal.ambient() == g.vertex_count()
        && match ideal.equigenerated_degree() {
            Some(d) => &dual_component(g, d) == ideal,
            None => &alexander_dual_of_edge_ideal(g) == ideal,
        }
}
