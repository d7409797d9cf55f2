//! Randomized theorem campaigns.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decide::{
    is_cm, is_sequentially_cm, koszul_lift_details, necessary_scm, sufficient_scm, Condition, Evidence, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{classify_remainder, Graph, RemainderClass};
use crate::homology::{betti_from_quotient_order, betti_numbers, FieldSpec};
use crate::quotients::{dual_degree_range, find_order_greedy, whisker_chain_oracle, DlqCache};
use crate::varset::{VarSet, VertexSet};

pub const ATTEMPT_CAP: usize = 1000;
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.4, 0.6];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T3.2")]
    T32,
    #[serde(rename = "T3.3")]
    T33,
    #[serde(rename = "T3.7")]
    T37,
    #[serde(rename = "T4.1")]
    T41,
    #[serde(rename = "C3.4")]
    C34,
    #[serde(rename = "C3.5")]
    C35,
    #[serde(rename = "C3.6")]
    C36,
    #[serde(rename = "C4.2")]
    C42,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T32,
        TheoremId::T33,
        TheoremId::T37,
        TheoremId::T41,
        TheoremId::C34,
        TheoremId::C35,
        TheoremId::C36,
        TheoremId::C42,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T32 => "T3.2",
            TheoremId::T33 => "T3.3",
            TheoremId::T37 => "T3.7",
            TheoremId::T41 => "T4.1",
            TheoremId::C34 => "C3.4",
            TheoremId::C35 => "C3.5",
            TheoremId::C36 => "C3.6",
            TheoremId::C42 => "C4.2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T32 => "G \\ S chordal => G u W(S) is SCM",
            TheoremId::T33 => "G \\ S a five-cycle => G u W(S) is SCM",
            TheoremId::T37 => "all induced subgraphs of G \\ S have DLQ <=> all induced subgraphs of G u W(S) containing the tips do",
            TheoremId::T41 => "G \\ S not SCM => G u W(S) not SCM",
            TheoremId::C34 => "S a vertex cover => G u W(S) is SCM",
            TheoremId::C35 => "|S| >= |V| - 3 => G u W(S) is SCM",
            TheoremId::C36 => "G u W(V) is CM",
            TheoremId::C42 => "G \\ S = C_n, n not 3 or 5 => G u W(S) not SCM",
        }
    }

    /// Fewest vertices of `G` for which the hypothesis can hold.
    pub fn min_vertices(self) -> usize {
        match self {
            TheoremId::T33 => 5,
            TheoremId::T41 | TheoremId::C42 => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown { kind: "theorem", name: s.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Campaign {
    pub theorem: TheoremId,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    pub fields: Vec<FieldSpec>,
    /// Run only this trial index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only_trial: Option<usize>,
}

impl Campaign {
    pub fn new(theorem: TheoremId, trials: usize, max_n: usize, seed: u64) -> Self {
        Campaign { theorem, trials, max_n, seed, fields: vec![FieldSpec::GF2], only_trial: None }
    }

    pub fn with_fields(mut self, fields: Vec<FieldSpec>) -> Self {
        self.fields = fields;
        self
    }

    fn rerun_command(&self, trial: usize) -> String {
        let fields: Vec<String> = self.fields.iter().map(|f| f.flag()).collect();
        format!(
            "edgescm verify-theorem {} --trials {} --max-n {} --seed {} --field {} --trial {}",
            self.theorem,
            self.trials,
            self.max_n,
            self.seed,
            fields.join(","),
            trial
        )
    }
}

/// A failing trial, with the sampled and the shrunk counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub trial: usize,
    pub reason: String,
    /// Graph in the plain text format.
    pub graph: String,
    /// `S` as 1-based indices into `graph`.
    pub s: Vec<usize>,
    pub shrunk_graph: String,
    pub shrunk_s: Vec<usize>,
    pub rerun: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    /// Certified components whose Betti table was compared with the
    /// quotient formula.
    pub oracle_checks: usize,
    /// Certified components the greedy search also ordered.
    pub greedy_agree: usize,
    pub greedy_miss: usize,
    /// Witnesses passed through the Koszul lift comparison.
    pub lift_checks: usize,
    /// Constructive whisker orders that passed verification.
    pub constructive_orders: usize,
    /// Graphs whose dual is componentwise linear in a degree without a
    /// linear-quotients order.
    pub dlq_gap_candidates: Vec<String>,
    /// T3.7: trials where both sides held.
    pub both_sides_true: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub campaign: Campaign,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub tally: Tally,
    pub failures: Vec<FailureRecord>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.campaign;
        let fields: Vec<String> = c.fields.iter().map(|x| x.to_string()).collect();
        writeln!(f, "campaign {}: {}", c.theorem, c.theorem.statement())?;
        writeln!(f, "  trials {}, max n {}, seed {}, fields {}", c.trials, c.max_n, c.seed, fields.join(" "))?;
        writeln!(f, "  passed {}, failed {}, skipped {}", self.passed, self.failed, self.skipped)?;
        let t = &self.tally;
        if t.oracle_checks > 0 {
            writeln!(f, "  betti tables matching the quotient formula: {}", t.oracle_checks)?;
            writeln!(f, "  greedy order search: {} found, {} missed", t.greedy_agree, t.greedy_miss)?;
        }
        if t.constructive_orders > 0 {
            writeln!(f, "  constructive whisker orders verified: {}", t.constructive_orders)?;
        }
        if t.lift_checks > 0 {
            writeln!(f, "  syzygy witnesses lifted: {}", t.lift_checks)?;
        }
        if c.theorem == TheoremId::T37 {
            writeln!(f, "  both sides true: {}", t.both_sides_true)?;
        }
        if !t.dlq_gap_candidates.is_empty() {
            writeln!(f, "  componentwise linear without linear quotients: {}", t.dlq_gap_candidates.len())?;
            for g in &t.dlq_gap_candidates {
                writeln!(f, "    {g}")?;
            }
        }
        for fail in &self.failures {
            writeln!(f, "  FAIL trial {}: {}", fail.trial, fail.reason)?;
            let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            writeln!(f, "    S = {{{}}}, shrunk to {{{}}} on", list(&fail.s), list(&fail.shrunk_s))?;
            for line in fail.shrunk_graph.lines() {
                writeln!(f, "    | {line}")?;
            }
            writeln!(f, "    rerun: {}", fail.rerun)?;
        }
        Ok(())
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Generator for one trial, independent of every other trial.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(trial as u64)))
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("small");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

/// Random graph with `G \ S` a cycle through `cycle_len` vertices of
/// `V \ S` (the rest of `V \ S` isolated); edges touching `S` are random.
fn planted_cycle(rng: &mut impl Rng, n: usize, s_size: usize, cycle_len: usize, p: f64) -> (Graph, VertexSet) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let s: VertexSet = order[..s_size].iter().copied().collect();
    let cycle = &order[s_size..s_size + cycle_len];
    let mut g = Graph::new(n).expect("small");
    for k in 0..cycle_len {
        g.add_edge(cycle[k], cycle[(k + 1) % cycle_len]).expect("cycle edge");
    }
    for u in 0..n {
        for v in u + 1..n {
            if (s.contains(u) || s.contains(v)) && rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    (g, s)
}

/// Whether `(G, S)` satisfies the theorem's hypothesis.
pub fn hypothesis(theorem: TheoremId, g: &Graph, s: VertexSet, field: FieldSpec) -> bool {
    let n = g.vertex_count();
    match theorem {
        TheoremId::T32 => classify_remainder(g, s).ok() == Some(RemainderClass::Chordal),
        TheoremId::T33 => classify_remainder(g, s).ok() == Some(RemainderClass::FiveCycle),
        TheoremId::C34 => g.is_vertex_cover(s),
        TheoremId::C35 => s.len() + 3 >= n,
        TheoremId::C36 => s == g.vertices(),
        TheoremId::T37 => true,
        TheoremId::T41 => {
            let rest = g.delete_vertices(s).expect("subset");
            !is_sequentially_cm(&rest, field).value
        }
        TheoremId::C42 => {
            let rest = g.delete_vertices(s).expect("subset");
            rest.isolated_vertices().is_empty() && rest.is_cycle() && ![3, 5].contains(&rest.vertex_count())
        }
    }
}

/// Draw `(G, S)` satisfying the hypothesis, or `None` after the attempt cap.
pub fn sample(theorem: TheoremId, rng: &mut impl Rng, max_n: usize, field: FieldSpec) -> Option<(Graph, VertexSet)> {
    let lo = theorem.min_vertices();
    if max_n < lo {
        return None;
    }
    let p = EDGE_PROBABILITIES[rng.random_range(0..EDGE_PROBABILITIES.len())];
    for _ in 0..ATTEMPT_CAP {
        let n = rng.random_range(lo..=max_n);
        let (g, s) = match theorem {
            TheoremId::T33 => {
                let keep = rng.random_range(5..=n);
                planted_cycle(rng, n, n - keep, 5, p)
            }
            TheoremId::C42 => {
                let lengths: Vec<usize> = [4, 6, 7].into_iter().filter(|&k| k <= n).collect();
                let k = lengths[rng.random_range(0..lengths.len())];
                planted_cycle(rng, n, n - k, k, p)
            }
            TheoremId::C36 => (random_graph(rng, n, p), VarSet::full(n)),
            TheoremId::T41 => {
                // non-SCM remainders have at least four vertices
                let keep = rng.random_range(4..=n);
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(rng);
                (random_graph(rng, n, p), order[..n - keep].iter().copied().collect())
            }
            _ => {
                let g = random_graph(rng, n, p);
                let s = random_subset(rng, n);
                (g, s)
            }
        };
        if hypothesis(theorem, &g, s, field) {
            return Some((g, s));
        }
    }
    None
}

fn expected_condition(theorem: TheoremId) -> Option<Condition> {
    match theorem {
        TheoremId::T32 => Some(Condition::ChordalRemainder),
        TheoremId::T33 => Some(Condition::FiveCycleRemainder),
        TheoremId::C34 => Some(Condition::VertexCover),
        TheoremId::C35 => Some(Condition::SizeBound),
        _ => None,
    }
}

/// Compare each certified component's Betti table with the quotient
/// formula and run the greedy search on it.
fn audit_certificates(v: &Verdict, g: &Graph, tally: &mut Tally) -> std::result::Result<(), String> {
    let certs = match &v.evidence {
        Evidence::QuotientCertificates(qs) => qs,
        Evidence::HomologyLinear { certificates, .. } => certificates,
        _ => return Ok(()),
    };
    for q in certs {
        let formula = betti_from_quotient_order(q).map_err(|e| format!("certificate rejected: {e}"))?;
        let table = betti_numbers(q.ideal(), v.field).graded();
        if formula != table {
            return Err(format!(
                "betti table differs from the quotient formula in degree {:?}",
                q.ideal().equigenerated_degree()
            ));
        }
        tally.oracle_checks += 1;
        if find_order_greedy(q.ideal()).is_some() {
            tally.greedy_agree += 1;
        } else {
            tally.greedy_miss += 1;
        }
    }
    if !v.dlq_gaps.is_empty() {
        tally.dlq_gap_candidates.push(format!("{g:?} degrees {:?}", v.dlq_gaps));
    }
    Ok(())
}

/// Evaluate the theorem's conclusion on `(G, S)`.
pub fn evaluate(
    theorem: TheoremId,
    g: &Graph,
    s: VertexSet,
    fields: &[FieldSpec],
    tally: &mut Tally,
    cache: &mut DlqCache,
) -> std::result::Result<(), String> {
    let (w, map) = g.add_whiskers(s).map_err(|e| e.to_string())?;
    match theorem {
        TheoremId::T32 | TheoremId::T33 | TheoremId::C34 | TheoremId::C35 => {
            let want = expected_condition(theorem).expect("sufficient condition");
            let hit = sufficient_scm(g, s).map_err(|e| e.to_string())?;
            if !hit.as_ref().is_some_and(|h| h.includes(want)) {
                return Err(format!("sufficient condition {want:?} not recognised: {hit:?}"));
            }
            for &f in fields {
                let v = is_sequentially_cm(&w, f);
                if !v.value {
                    return Err(format!("G u W(S) is not SCM: {}", v.summary(&w)));
                }
                audit_certificates(&v, &w, tally)?;
            }
            if matches!(theorem, TheoremId::T32 | TheoremId::T33) && w.edge_count() > 0 {
                let mut oracle = whisker_chain_oracle(map.tips());
                for d in dual_degree_range(&w) {
                    if oracle(&w, w.vertices(), d).is_none() {
                        return Err(format!("constructive whisker order fails in degree {d}"));
                    }
                    tally.constructive_orders += 1;
                }
            }
        }
        TheoremId::C36 => {
            for &f in fields {
                let v = is_cm(&w, f);
                if !v.value {
                    return Err(format!("G u W(V) is not CM: {}", v.summary(&w)));
                }
                audit_certificates(&v, &w, tally)?;
            }
        }
        TheoremId::T41 | TheoremId::C42 => {
            if let Some(hit) = sufficient_scm(g, s).map_err(|e| e.to_string())? {
                return Err(format!("sufficient condition {:?} fires on a non-SCM remainder", hit.primary));
            }
            for &f in fields {
                let wit = necessary_scm(g, s, f)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("G \\ S is SCM over {f}"))?;
                let check = koszul_lift_details(g, s, &wit).map_err(|e| e.to_string())?;
                if !check.holds() {
                    return Err(format!("Koszul lift differs: {check:?}"));
                }
                tally.lift_checks += 1;
                let v = is_sequentially_cm(&w, f);
                if v.value {
                    return Err(format!("G u W(S) is SCM: {}", v.summary(&w)));
                }
            }
        }
        TheoremId::T37 => {
            let (lhs, rhs) = t37_sides(g, s, &w, cache);
            if lhs != rhs {
                return Err(format!("remainder side {lhs}, whiskered side {rhs}"));
            }
            if lhs {
                tally.both_sides_true += 1;
            }
        }
    }
    Ok(())
}

/// Both sides of the induced-subgraph DLQ equivalence: every induced
/// subgraph of `G \ S`, and every induced subgraph of `G ∪ W(S)` that
/// contains all whisker tips.
///
/// Without the tips the right side fails too often: `G = C4`, `S` one
/// vertex leaves a path, yet `C4` itself is induced in `G ∪ W(S)`.
pub fn t37_sides(g: &Graph, s: VertexSet, whiskered: &Graph, cache: &mut DlqCache) -> (bool, bool) {
    let rest = g.vertices().difference(s);
    let tips = whiskered.vertices().difference(g.vertices());
    let lhs = cache.all_induced_have_dlq(g, VarSet::EMPTY, rest);
    let rhs = cache.all_induced_have_dlq(whiskered, tips, whiskered.vertices());
    (lhs, rhs)
}

/// Right side over every induced subgraph of `G ∪ W(S)`, tips or not.
pub fn t37_rhs_all_induced(whiskered: &Graph, cache: &mut DlqCache) -> bool {
    cache.all_induced_have_dlq(whiskered, VarSet::EMPTY, whiskered.vertices())
}

/// Delete vertices while the hypothesis holds and the conclusion still fails.
pub fn shrink(
    theorem: TheoremId,
    g: &Graph,
    s: VertexSet,
    fields: &[FieldSpec],
    cache: &mut DlqCache,
) -> (Graph, VertexSet) {
    shrink_with(g, s, |h, s2| {
        hypothesis(theorem, h, s2, fields[0]) && evaluate(theorem, h, s2, fields, &mut Tally::default(), cache).is_err()
    })
}

/// Greedy vertex deletion down to a locally minimal `(G, S)` on which
/// `fails` still holds. Labels follow the surviving vertices.
pub fn shrink_with(g: &Graph, s: VertexSet, mut fails: impl FnMut(&Graph, VertexSet) -> bool) -> (Graph, VertexSet) {
    let mut cur = (g.clone(), s);
    'outer: loop {
        for v in cur.0.vertices() {
            let (h, origin) = cur.0.induced_subgraph_with_map(cur.0.vertices().without(v)).expect("subset");
            let s2: VertexSet = (0..origin.len()).filter(|&i| cur.1.contains(origin[i])).collect();
            if fails(&h, s2) {
                cur = (h, s2);
                continue 'outer;
            }
        }
        return cur;
    }
}

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

pub fn run_campaign(c: &Campaign) -> Result<Report> {
    if c.trials == 0 {
        return Err(Error::Parse { line: 0, message: "trials must be at least 1".into() });
    }
    if c.fields.is_empty() {
        return Err(Error::Field(String::new()));
    }
    let mut report = Report {
        campaign: c.clone(),
        passed: 0,
        failed: 0,
        skipped: 0,
        tally: Tally::default(),
        failures: Vec::new(),
    };
    let mut cache = DlqCache::new();
    let trials: Vec<usize> = match c.only_trial {
        Some(t) => vec![t],
        None => (0..c.trials).collect(),
    };
    for trial in trials {
        let mut rng = trial_rng(c.seed, trial);
        let Some((g, s)) = sample(c.theorem, &mut rng, c.max_n, c.fields[0]) else {
            report.skipped += 1;
            continue;
        };
        match evaluate(c.theorem, &g, s, &c.fields, &mut report.tally, &mut cache) {
            Ok(()) => report.passed += 1,
            Err(reason) => {
                report.failed += 1;
                let (sg, ss) = shrink(c.theorem, &g, s, &c.fields, &mut cache);
                report.failures.push(FailureRecord {
                    trial,
                    reason,
                    graph: g.to_text(),
                    s: one_based(s),
                    shrunk_graph: sg.to_text(),
                    shrunk_s: one_based(ss),
                    rerun: c.rerun_command(trial),
                });
            }
        }
    }
    Ok(report)
}

/// Result of checking the DLQ equivalence on every labelled graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveReport {
    pub max_n: usize,
    pub graphs: usize,
    pub pairs: usize,
    pub both_true: usize,
    pub both_false: usize,
    pub disagreements: Vec<String>,
    /// Pairs where the left side holds but some induced subgraph of
    /// `G ∪ W(S)` missing a tip lacks DLQ.
    pub tipless_failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_tipless_failure: Option<String>,
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}

/// Check both sides of the equivalence on all `(G, S)` with `|V_G| <= max_n`.
pub fn exhaustive_t37(max_n: usize) -> ExhaustiveReport {
    let mut report = ExhaustiveReport { max_n, ..Default::default() };
    let mut cache = DlqCache::new();
    for n in 0..=max_n {
        for g in all_graphs(n) {
            report.graphs += 1;
            for s in g.vertices().subsets() {
                let (w, _) = g.add_whiskers(s).expect("fits");
                let (lhs, rhs) = t37_sides(&g, s, &w, &mut cache);
                report.pairs += 1;
                match (lhs, rhs) {
                    (true, true) => report.both_true += 1,
                    (false, false) => report.both_false += 1,
                    _ => report.disagreements.push(format!("{g:?} S = {}", g.format_set(s))),
                }
                if lhs && !t37_rhs_all_induced(&w, &mut cache) {
                    report.tipless_failures += 1;
                    report
                        .first_tipless_failure
                        .get_or_insert_with(|| format!("{g:?} S = {}", g.format_set(s)));
                }
            }
        }
    }
    report
}
