//! Linear-quotients certificates.
//!
//! A [`QuotientOrder`] is an ordering `u_1, .., u_r` of the generators of an
//! ideal together with, for every position, the variables claimed to
//! generate `(u_1, .., u_{i-1}) : u_i`. [`verify_order`] re-derives every
//! colon ideal from scratch and never trusts the claim.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{dual_component, minimalize, names_to_monomial, IdealJson, Monomial, MonomialIdeal};
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOrder {
    ideal: MonomialIdeal,
    order: Vec<usize>,
    colon_vars: Vec<VarSet>,
}

impl QuotientOrder {
    /// Order the generators of `ideal` by `order` (indices into the
    /// canonical generator list) and record the variables that appear as
    /// degree-one generators of each prefix colon.
    pub fn from_sequence(ideal: MonomialIdeal, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order, ideal.len())?;
        let gens = ideal.generators();
        let colon_vars = (0..order.len())
            .map(|i| {
                let u = gens[order[i]];
                let prefix = order[..i].iter().map(|&j| gens[j].colon(u));
                linear_part(&minimalize(ideal.ambient(), prefix))
            })
            .collect();
        Ok(QuotientOrder { ideal, order, colon_vars })
    }

    /// Order given as a list of generator supports; they must be exactly
    /// the generators of `ideal`.
    pub fn from_monomials(ideal: MonomialIdeal, sequence: &[VarSet]) -> Result<Self> {
        let index: HashMap<VarSet, usize> =
            ideal.generators().iter().enumerate().map(|(i, g)| (g.0, i)).collect();
        let order = sequence
            .iter()
            .map(|s| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| Error::Certificate(format!("{s:?} is not a generator")))
            })
            .collect::<Result<Vec<_>>>()?;
        QuotientOrder::from_sequence(ideal, order)
    }

    /// A certificate exactly as supplied, for later verification.
    pub fn from_parts(ideal: MonomialIdeal, order: Vec<usize>, colon_vars: Vec<VarSet>) -> Self {
        QuotientOrder { ideal, order, colon_vars }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn colon_vars(&self) -> &[VarSet] {
        &self.colon_vars
    }

    /// `r_j = |colon_vars[j]|`.
    pub fn colon_sizes(&self) -> Vec<usize> {
        self.colon_vars.iter().map(|c| c.len()).collect()
    }

    pub fn ordered_generators(&self) -> Vec<Monomial> {
        self.order.iter().map(|&i| self.ideal.generators()[i]).collect()
    }

    pub fn to_json(&self, names: &[String]) -> CertificateJson {
        let name = |s: VarSet| s.iter().map(|v| names[v].clone()).collect::<Vec<_>>();
        CertificateJson {
            ambient: self.ideal.ambient(),
            vars: names.to_vec(),
            degree: self.ideal.equigenerated_degree(),
            order: self.ordered_generators().iter().map(|g| name(g.0)).collect(),
            colon: self.colon_vars.iter().map(|c| name(*c)).collect(),
        }
    }

    pub fn from_json(json: &CertificateJson) -> Result<Self> {
        let sequence = json
            .order
            .iter()
            .map(|g| names_to_monomial(g, &json.vars))
            .collect::<Result<Vec<_>>>()?;
        let ideal = MonomialIdeal::from_json(&IdealJson {
            ambient: json.ambient,
            vars: json.vars.clone(),
            gens: json.order.clone(),
        })?;
        if ideal.len() != sequence.len() {
            return Err(Error::Certificate("generator list is not minimal or has repeats".into()));
        }
        let index: HashMap<Monomial, usize> =
            ideal.generators().iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let order = sequence.iter().map(|m| index[m]).collect();
        let colon_vars = json
            .colon
            .iter()
            .map(|c| names_to_monomial(c, &json.vars).map(|m| m.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuotientOrder { ideal, order, colon_vars })
    }
}

/// Certificate JSON: the ordered generators and per-step colon variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub ambient: usize,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub order: Vec<Vec<String>>,
    pub colon: Vec<Vec<String>>,
}

fn check_permutation(order: &[usize], len: usize) -> Result<()> {
    if order.len() != len {
        return Err(Error::Certificate(format!("order has {} entries for {} generators", order.len(), len)));
    }
    let mut seen = vec![false; len];
    for &i in order {
        if i >= len || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Certificate("order is not a permutation of the generators".into()));
        }
    }
    Ok(())
}

fn linear_part(ideal: &MonomialIdeal) -> VarSet {
    ideal
        .generators()
        .iter()
        .filter(|g| g.degree() == 1)
        .fold(VarSet::EMPTY, |acc, g| acc.union(g.0))
}

/// Recompute every prefix colon and compare it with the claimed variables.
///
/// Errors on malformed certificates (non-permutation, colon variables
/// outside the ambient ring, wrong number of steps).
pub fn verify_order(q: &QuotientOrder) -> Result<bool> {
    let ideal = &q.ideal;
    check_permutation(&q.order, ideal.len())?;
    if q.colon_vars.len() != q.order.len() {
        return Err(Error::Certificate("one colon entry per generator is required".into()));
    }
    let bound = VarSet::full(ideal.ambient());
    if q.colon_vars.iter().any(|c| !c.is_subset(bound)) {
        return Err(Error::Certificate("colon variable outside the ambient ring".into()));
    }
    let seq = q.ordered_generators();
    if seq.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return Ok(false);
    }
    for i in 0..seq.len() {
        let prefix = MonomialIdeal::new(ideal.ambient(), seq[..i].iter().copied())?;
        let colon = prefix.colon(seq[i]);
        let claimed = MonomialIdeal::new(ideal.ambient(), q.colon_vars[i].iter().map(|v| Monomial::from_vars([v])))?;
        if colon != claimed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a bounded order search.
#[derive(Clone, Debug)]
pub enum OrderSearch {
    Found(QuotientOrder),
    NoOrder,
    /// The node budget ran out before the search was decided.
    Undecided,
}

/// Backtracking search for a linear-quotients order.
///
/// Candidates are explored in canonical generator order, so the result is
/// deterministic. Non-equigenerated ideals are ordered by weakly
/// increasing degree. Returns `None` only if no admissible order exists.
pub fn find_order(ideal: &MonomialIdeal) -> Option<QuotientOrder> {
    match OrderSearcher::new(ideal).run(true, u64::MAX) {
        OrderSearch::Found(q) => Some(q),
        OrderSearch::NoOrder => None,
        OrderSearch::Undecided => unreachable!("unbounded search"),
    }
}

/// Same search, giving up after `node_budget` placed generators.
pub fn find_order_bounded(ideal: &MonomialIdeal, node_budget: u64) -> OrderSearch {
    OrderSearcher::new(ideal).run(true, node_budget)
}

/// Greedy variant: always append the first admissible generator, never
/// backtrack. May return `None` even when an order exists.
pub fn find_order_greedy(ideal: &MonomialIdeal) -> Option<QuotientOrder> {
    match OrderSearcher::new(ideal).run(false, u64::MAX) {
        OrderSearch::Found(q) => Some(q),
        _ => None,
    }
}

enum Undo {
    Pushed(usize, VarSet),
    Linear { cand: usize, old: VarSet, removed: Vec<VarSet> },
}

/// Incremental colon tracking: for each unplaced candidate `c`, `linear[c]`
/// holds the variables `v` with `u \ c = {v}` for some placed `u`, and
/// `pending[c]` the differences `u \ c` not yet hit by `linear[c]`. The
/// colon by `c` is variable-generated exactly when `pending[c]` is empty.
struct OrderSearcher<'a> {
    ideal: &'a MonomialIdeal,
    gens: Vec<VarSet>,
    placed_mask: Vec<u64>,
    placed: Vec<usize>,
    linear: Vec<VarSet>,
    pending: Vec<Vec<VarSet>>,
    undo: Vec<Vec<Undo>>,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
}

impl<'a> OrderSearcher<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        let gens: Vec<VarSet> = ideal.generators().iter().map(|g| g.0).collect();
        let r = gens.len();
        OrderSearcher {
            ideal,
            placed_mask: vec![0; r.div_ceil(64)],
            placed: Vec::with_capacity(r),
            linear: vec![VarSet::EMPTY; r],
            pending: vec![Vec::new(); r],
            undo: Vec::with_capacity(r),
            failed: HashSet::new(),
            nodes: 0,
            gens,
        }
    }

    fn is_placed(&self, c: usize) -> bool {
        self.placed_mask[c / 64] >> (c % 64) & 1 == 1
    }

    fn place(&mut self, k: usize) {
        let u = self.gens[k];
        let mut log = Vec::new();
        for c in 0..self.gens.len() {
            if c == k || self.is_placed(c) {
                continue;
            }
            let diff = u.difference(self.gens[c]);
            if diff.len() == 1 {
                if !diff.is_subset(self.linear[c]) {
                    let old = self.linear[c];
                    self.linear[c] = old.union(diff);
                    let (hit, keep): (Vec<VarSet>, Vec<VarSet>) =
                        self.pending[c].iter().partition(|p| !p.is_disjoint(diff));
                    self.pending[c] = keep;
                    log.push(Undo::Linear { cand: c, old, removed: hit });
                }
            } else if diff.is_disjoint(self.linear[c]) {
                self.pending[c].push(diff);
                log.push(Undo::Pushed(c, diff));
            }
        }
        self.placed_mask[k / 64] |= 1 << (k % 64);
        self.placed.push(k);
        self.undo.push(log);
        self.nodes += 1;
    }

    fn unplace(&mut self) {
        let k = self.placed.pop().expect("nonempty");
        self.placed_mask[k / 64] &= !(1 << (k % 64));
        for op in self.undo.pop().expect("nonempty").into_iter().rev() {
            match op {
                // restored entries are appended, so the pushed one need not be last
                Undo::Pushed(c, diff) => {
                    let at = self.pending[c].iter().rposition(|&p| p == diff).expect("pushed entry");
                    self.pending[c].swap_remove(at);
                }
                Undo::Linear { cand, old, removed } => {
                    self.linear[cand] = old;
                    self.pending[cand].extend(removed);
                }
            }
        }
    }

    /// Next admissible candidate at index `>= from`.
    fn next_candidate(&self, from: usize) -> Option<usize> {
        let r = self.gens.len();
        let min_degree = (0..r).find(|&c| !self.is_placed(c)).map(|c| self.gens[c].len())?;
        (from..r).find(|&c| {
            !self.is_placed(c) && self.gens[c].len() == min_degree && self.pending[c].is_empty()
        })
    }

    fn run(mut self, backtrack: bool, budget: u64) -> OrderSearch {
        let r = self.gens.len();
        // resume cursor for each placed level
        let mut cursors: Vec<usize> = Vec::with_capacity(r);
        let mut cursor = 0;
        loop {
            if self.placed.len() == r {
                let q = QuotientOrder::from_sequence(self.ideal.clone(), self.placed.clone())
                    .expect("search yields a permutation");
                return OrderSearch::Found(q);
            }
            if self.nodes >= budget {
                return OrderSearch::Undecided;
            }
            match self.next_candidate(cursor) {
                Some(c) => {
                    self.place(c);
                    if backtrack && self.failed.contains(&self.placed_mask) {
                        self.unplace();
                        cursor = c + 1;
                        continue;
                    }
                    cursors.push(c + 1);
                    cursor = 0;
                }
                None => {
                    if !backtrack || self.placed.is_empty() {
                        return OrderSearch::NoOrder;
                    }
                    self.failed.insert(self.placed_mask.clone());
                    self.unplace();
                    cursor = cursors.pop().expect("cursor per level");
                }
            }
        }
    }
}

/// Certificate (or its absence) for one degree component.
#[derive(Clone, Debug)]
pub struct DegreeOutcome {
    pub degree: usize,
    pub generators: usize,
    pub certificate: Option<QuotientOrder>,
}

#[derive(Clone, Debug)]
pub struct DlqReport {
    pub degrees: Vec<DegreeOutcome>,
}

impl DlqReport {
    pub fn has_dlq(&self) -> bool {
        self.degrees.iter().all(|d| d.certificate.is_some())
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.degrees.iter().find(|d| d.certificate.is_none()).map(|d| d.degree)
    }
}

/// Degrees in which `(I(G)^∨_[d])` is nonzero: minimum cover size to `n`.
pub fn dual_degree_range(g: &Graph) -> std::ops::RangeInclusive<usize> {
    g.min_cover_size()..=g.vertex_count()
}

/// Search every degree component of the dual for a linear-quotients order.
pub fn has_dual_linear_quotients(g: &Graph) -> DlqReport {
    let degrees = dual_degree_range(g)
        .map(|d| {
            let component = dual_component(g, d);
            DegreeOutcome {
                degree: d,
                generators: component.len(),
                certificate: find_order(&component),
            }
        })
        .collect();
    DlqReport { degrees }
}

/// Short-circuiting form of [`has_dual_linear_quotients`].
pub fn graph_has_dlq(g: &Graph) -> bool {
    dual_degree_range(g).all(|d| find_order(&dual_component(g, d)).is_some())
}

/// Memo of DLQ verdicts keyed by adjacency after discarding isolated
/// vertices; isolated vertices do not change whether a graph has DLQ.
#[derive(Default)]
pub struct DlqCache {
    map: HashMap<Vec<u64>, bool>,
}

impl DlqCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn has_dlq(&mut self, g: &Graph) -> bool {
        let core = g
            .induced_subgraph(g.vertices().difference(g.isolated_vertices()))
            .expect("subset of vertices");
        let key: Vec<u64> = core.adjacency().iter().map(|a| a.bits()).collect();
        if let Some(&v) = self.map.get(&key) {
            return v;
        }
        let v = graph_has_dlq(&core);
        self.map.insert(key, v);
        v
    }

    /// Every induced subgraph of `g` on a vertex set `W` with
    /// `required ⊆ W ⊆ allowed` has DLQ. Smaller subgraphs are tried first.
    pub fn all_induced_have_dlq(&mut self, g: &Graph, required: VarSet, allowed: VarSet) -> bool {
        self.first_induced_without_dlq(g, required, allowed).is_none()
    }

    pub fn first_induced_without_dlq(&mut self, g: &Graph, required: VarSet, allowed: VarSet) -> Option<VarSet> {
        if !required.is_subset(allowed) {
            return None;
        }
        let free = allowed.difference(required);
        for k in 0..=free.len() {
            for extra in free.subsets_of_size(k) {
                let w = required.union(extra);
                let h = g.induced_subgraph(w).expect("within range");
                if !self.has_dlq(&h) {
                    return Some(w);
                }
            }
        }
        None
    }
}

/// Vertex covers of size `e` of the induced subgraph `k[within]`,
/// expressed in the indices of `k`, lexicographically sorted.
pub fn covers_within(k: &Graph, within: VarSet, e: usize) -> Vec<VarSet> {
    let (h, origin) = k.induced_subgraph_with_map(within).expect("within range");
    let mut covers: Vec<VarSet> = h
        .vertex_covers_of_size(e)
        .into_iter()
        .map(|c| c.map_through(&origin))
        .collect();
    covers.sort();
    covers
}

/// Decomposition of the size-`d` covers of `K` at a whisker `x y`.
#[derive(Clone, Debug)]
pub struct WhiskerSplit {
    pub tip: usize,
    pub base: usize,
    pub degree: usize,
    /// Covers of `K \ {x}` of size `d - 1`.
    pub a_list: Vec<VarSet>,
    /// Covers of `K \ {x, y}` of size `d - 1`.
    pub b_list: Vec<VarSet>,
    /// `N(y) \ {x}`.
    pub d_mono: VarSet,
    /// Covers of `K \ ({x, y} ∪ N(y))` of size `d - 1 - u`, `u = |N(y)| - 1`.
    pub c_list: Vec<VarSet>,
}

impl WhiskerSplit {
    /// Every `A` avoiding `y` is `D·C` for some `C`; every `y·B` and `x·A`
    /// has degree `d`.
    pub fn check(&self) -> bool {
        let y = self.base;
        let c_set: HashSet<VarSet> = self.c_list.iter().copied().collect();
        let a_ok = self
            .a_list
            .iter()
            .filter(|a| !a.contains(y))
            .all(|a| self.d_mono.is_subset(*a) && c_set.contains(&a.difference(self.d_mono)));
        let degrees_ok = self.a_list.iter().all(|a| a.len() + 1 == self.degree)
            && self.b_list.iter().all(|b| b.len() + 1 == self.degree)
            && self.c_list.iter().all(|c| c.len() + self.d_mono.len() + 1 == self.degree);
        a_ok && degrees_ok
    }
}

fn whisker_base(k: &Graph, within: VarSet, tip: usize) -> Result<Option<usize>> {
    let nbrs = k.neighbors(tip).intersection(within);
    match nbrs.len() {
        0 => Ok(None),
        1 => Ok(nbrs.first()),
        _ => Err(Error::NotWhisker { tip, base: nbrs.first().unwrap_or(tip) }),
    }
}

pub fn whisker_split(k: &Graph, tip: usize, d: usize) -> Result<WhiskerSplit> {
    k.check_set(VarSet::singleton(tip))?;
    let base = whisker_base(k, k.vertices(), tip)?.ok_or(Error::NotWhisker { tip, base: tip })?;
    Ok(split_within(k, k.vertices(), tip, base, d))
}

fn split_within(k: &Graph, within: VarSet, tip: usize, base: usize, d: usize) -> WhiskerSplit {
    let d_mono = k.neighbors(base).intersection(within).without(tip);
    let (a_list, b_list) = if d == 0 {
        (Vec::new(), Vec::new())
    } else {
        (
            covers_within(k, within.without(tip), d - 1),
            covers_within(k, within.without(tip).without(base), d - 1),
        )
    };
    let c_list = match (d + 1).checked_sub(d_mono.len() + 2) {
        Some(e) if d > 0 => covers_within(k, within.without(tip).without(base).difference(d_mono), e),
        _ => Vec::new(),
    };
    WhiskerSplit { tip, base, degree: d, a_list, b_list, d_mono, c_list }
}

/// Supplies an ordering of the size-`e` covers of `k[within]` (in `k`'s
/// indices), or `None` when it has no linear-quotients order.
pub type OrderOracle<'o> = dyn FnMut(&Graph, VarSet, usize) -> Option<Vec<VarSet>> + 'o;

/// Oracle backed by [`find_order`] on the induced subgraph.
pub fn search_oracle(k: &Graph, within: VarSet, e: usize) -> Option<Vec<VarSet>> {
    let (h, origin) = k.induced_subgraph_with_map(within).expect("within range");
    let component = dual_component(&h, e);
    let q = find_order(&component)?;
    Some(q.ordered_generators().iter().map(|m| m.0.map_through(&origin)).collect())
}

/// The ordering built in the whisker argument, with the blocks
/// `y·B_1, .., y·B_b`, then `x·A` for the `A` avoiding `y` (in the order of
/// the matching `C`), then `x·A` for the `A` containing `y`.
///
/// Sub-orders come from `oracle`; when it reports no order, the canonical
/// order is used instead and the result generally fails [`verify_order`].
pub fn whisker_order(k: &Graph, tip: usize, d: usize, oracle: &mut OrderOracle<'_>) -> Result<QuotientOrder> {
    k.check_set(VarSet::singleton(tip))?;
    let sequence = whisker_sequence(k, k.vertices(), tip, d, oracle)?;
    QuotientOrder::from_monomials(dual_component(k, d), &sequence)
}

pub(crate) fn whisker_sequence(
    k: &Graph,
    within: VarSet,
    tip: usize,
    d: usize,
    oracle: &mut OrderOracle<'_>,
) -> Result<Vec<VarSet>> {
    let mut ordered = |within: VarSet, e: usize, fallback: Vec<VarSet>| -> Vec<VarSet> {
        if fallback.len() <= 1 {
            return fallback;
        }
        oracle(k, within, e).unwrap_or(fallback)
    };
    match whisker_base(k, within, tip)? {
        None => {
            // isolated tip: covers avoiding x, then x times covers of size d - 1
            let rest = within.without(tip);
            let mut seq = ordered(rest, d, covers_within(k, rest, d));
            if d > 0 {
                let lower = ordered(rest, d - 1, covers_within(k, rest, d - 1));
                seq.extend(lower.into_iter().map(|c| c.with(tip)));
            }
            Ok(seq)
        }
        Some(base) => {
            let split = split_within(k, within, tip, base, d);
            if d == 0 {
                return Ok(Vec::new());
            }
            let h = within.without(tip).without(base);
            let b_order = ordered(h, d - 1, split.b_list.clone());
            let mut seq: Vec<VarSet> = b_order.into_iter().map(|b| b.with(base)).collect();
            if let Some(e) = (d + 1).checked_sub(split.d_mono.len() + 2) {
                let c_order = ordered(h.difference(split.d_mono), e, split.c_list.clone());
                seq.extend(c_order.into_iter().map(|c| c.union(split.d_mono).with(tip)));
            }
            seq.extend(split.a_list.iter().filter(|a| a.contains(base)).map(|a| a.with(tip)));
            Ok(seq)
        }
    }
}

/// Order oracle that peels whiskers recursively: inside `k[within]` the
/// highest-index tip from `tips` is split off with the whisker ordering,
/// and once no tip is left the remainder is ordered by [`find_order`].
pub fn whisker_chain_oracle(tips: VarSet) -> impl FnMut(&Graph, VarSet, usize) -> Option<Vec<VarSet>> {
    move |k: &Graph, within: VarSet, e: usize| chain_order(k, within, e, tips)
}

fn chain_order(k: &Graph, within: VarSet, e: usize, tips: VarSet) -> Option<Vec<VarSet>> {
    let Some(tip) = tips.intersection(within).last() else {
        return search_oracle(k, within, e);
    };
    let mut inner = |k: &Graph, w: VarSet, e: usize| chain_order(k, w, e, tips);
    let seq = whisker_sequence(k, within, tip, e, &mut inner).ok()?;
    // sub-orders may have fallen back to canonical order; only hand back verified ones
    let h = k.induced_subgraph(within).ok()?;
    let local: Vec<VarSet> = seq.iter().map(|s| s.iter().map(|v| within.rank_of(v)).collect()).collect();
    let q = QuotientOrder::from_monomials(dual_component(&h, e), &local).ok()?;
    verify_order(&q).ok()?.then_some(seq)
}
