//! Simple graphs on indexed vertices.
//!
//! Vertices are `0..n` internally. Every vertex carries a display label
//! (by default `x1, x2, ..` for the 1-based index), and labels survive
//! induced subgraphs, deletions and whiskering.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::varset::{VarSet, VertexSet, MAX_VARS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VarSet>,
}

/// The whiskers added by [`Graph::add_whiskers`], as `(base, tip)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerMap {
    pub pairs: Vec<(usize, usize)>,
}

impl WhiskerMap {
    pub fn tips(&self) -> VarSet {
        self.pairs.iter().map(|&(_, tip)| tip).collect()
    }

    pub fn bases(&self) -> VarSet {
        self.pairs.iter().map(|&(base, _)| base).collect()
    }

    pub fn tip_of(&self, base: usize) -> Option<usize> {
        self.pairs.iter().find(|&&(b, _)| b == base).map(|&(_, t)| t)
    }
}

fn default_label(i: usize) -> String {
    format!("x{}", i + 1)
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVertices { count: n, max: MAX_VARS });
        }
        Ok(Graph {
            labels: (0..n).map(default_label).collect(),
            adj: vec![VarSet::EMPTY; n],
        })
    }

    /// Graph on `n` vertices with the given 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            g.adj[u] = VarSet::full(n).without(u);
        }
        Ok(g)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.vertex_count() {
            return Err(Error::Parse {
                line: 0,
                message: format!("{} labels for {} vertices", labels.len(), self.vertex_count()),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "loop" });
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidEdge { u, v, reason: "duplicate edge" });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v]
    }

    /// Neighbors of any vertex in `set`, excluding `set` itself.
    pub fn neighborhood(&self, set: VarSet) -> VarSet {
        set.iter()
            .fold(VarSet::EMPTY, |acc, v| acc.union(self.adj[v]))
            .difference(set)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VarSet::full(self.vertex_count())
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacency(&self) -> &[VarSet] {
        &self.adj
    }

    /// Index of the vertex carrying `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_from_labels(&self, labels: &[&str]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.find_label(l).ok_or_else(|| Error::Unknown {
                    kind: "vertex label",
                    name: (*l).to_string(),
                })
            })
            .collect()
    }

    pub fn format_set(&self, set: VarSet) -> String {
        set.iter().map(|v| self.labels[v].as_str()).collect::<Vec<_>>().join("")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            Err(Error::VertexOutOfRange { index: v, count: self.vertex_count() })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, set: VarSet) -> Result<()> {
        match set.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn is_vertex_cover(&self, set: VarSet) -> bool {
        (0..self.vertex_count()).all(|v| set.contains(v) || self.adj[v].is_subset(set))
    }

    pub fn is_independent(&self, set: VarSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Induced subgraph on `w`, reindexed in increasing vertex order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        Ok(self.induced_subgraph_with_map(w)?.0)
    }

    /// Induced subgraph together with the original index of each new vertex.
    pub fn induced_subgraph_with_map(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(w)?;
        let origin = w.to_vec();
        let adj = origin
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(w)
                    .iter()
                    .map(|u| w.rank_of(u))
                    .collect()
            })
            .collect();
        let labels = origin.iter().map(|&v| self.labels[v].clone()).collect();
        Ok((Graph { labels, adj }, origin))
    }

    /// `G \ S`: remove the vertices of `s` and every edge meeting them.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// `G ∪ W(S)`: one new pendant vertex per member of `s`, appended after
    /// the existing vertices in increasing order of its base.
    pub fn add_whiskers(&self, s: VertexSet) -> Result<(Graph, WhiskerMap)> {
        self.check_set(s)?;
        let n = self.vertex_count();
        if n + s.len() > MAX_VARS {
            return Err(Error::TooManyVertices { count: n + s.len(), max: MAX_VARS });
        }
        let mut g = self.clone();
        let mut pairs = Vec::with_capacity(s.len());
        for base in s {
            let tip = g.adj.len();
            g.adj.push(VarSet::singleton(base));
            g.adj[base].insert(tip);
            g.labels.push(default_label(tip));
            pairs.push((base, tip));
        }
        Ok((g, WhiskerMap { pairs }))
    }

    /// Chordality with a certificate either way.
    pub fn is_chordal(&self) -> Chordality {
        let order = self.perfect_elimination_candidate();
        if is_perfect_elimination_order(self, &order) {
            return Chordality::Chordal { elimination_order: order };
        }
        match self.find_chordless_cycle() {
            Some(cycle) => Chordality::NotChordal { cycle },
            None => unreachable!("maximum cardinality search failed on a chordal graph"),
        }
    }

    /// Reverse of a maximum cardinality search visit order.
    fn perfect_elimination_candidate(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut visited = VarSet::EMPTY;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self
                .vertices()
                .difference(visited)
                .iter()
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unvisited vertex");
            visited.insert(v);
            visit.push(v);
            for u in self.adj[v].difference(visited) {
                weight[u] += 1;
            }
        }
        visit.reverse();
        visit
    }

    /// A chordless cycle of length at least 4, searched through every vertex
    /// `v` and non-adjacent neighbor pair `a < b`: a shortest `a`-`b` path
    /// avoiding the rest of `N[v]` closes an induced cycle through `v`.
    pub fn find_chordless_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.vertex_count() {
            let nbrs = self.adj[v];
            for a in nbrs {
                for b in nbrs.iter().filter(|&b| b > a && !self.has_edge(a, b)) {
                    let allowed = self
                        .vertices()
                        .difference(nbrs.with(v))
                        .with(a)
                        .with(b);
                    if let Some(path) = self.shortest_path_within(a, b, allowed) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path_within(&self, from: usize, to: usize, allowed: VarSet) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.vertex_count()];
        let mut seen = VarSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[u].intersection(allowed).difference(seen) {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    /// True iff the graph is a single cycle (connected, 2-regular, ≥ 3 vertices).
    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = VarSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self.neighborhood(frontier).difference(seen);
            seen = seen.union(frontier);
        }
        seen == self.vertices()
    }

    pub fn is_forest(&self) -> bool {
        // a forest has |E| = |V| - #components
        let mut components = 0;
        let mut seen = VarSet::EMPTY;
        for v in 0..self.vertex_count() {
            if seen.contains(v) {
                continue;
            }
            components += 1;
            let mut comp = VarSet::singleton(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.neighborhood(frontier).difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
        }
        self.edge_count() + components == self.vertex_count()
    }

    /// All vertex covers with exactly `d` vertices, lexicographically sorted.
    ///
    /// Covers are complements of independent sets, so this enumerates
    /// independent sets of size `n - d` with candidate pruning.
    pub fn vertex_covers_of_size(&self, d: usize) -> Vec<VertexSet> {
        let n = self.vertex_count();
        if d > n {
            return Vec::new();
        }
        let all = self.vertices();
        let mut out = Vec::new();
        self.independent_sets_rec(VarSet::EMPTY, all, n - d, &mut |ind| out.push(all.difference(ind)));
        out.sort();
        out
    }

    fn independent_sets_rec(&self, chosen: VarSet, cand: VarSet, k: usize, emit: &mut dyn FnMut(VarSet)) {
        if k == 0 {
            emit(chosen);
            return;
        }
        if cand.len() < k {
            return;
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            if rest.len() + 1 < k {
                break;
            }
            self.independent_sets_rec(chosen.with(v), rest.difference(self.adj[v]), k - 1, emit);
        }
    }

    /// Inclusion-minimal vertex covers (complements of maximal independent
    /// sets), lexicographically sorted. Isolated vertices never appear.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let all = self.vertices();
        let mut out = Vec::new();
        self.maximal_independent_rec(VarSet::EMPTY, all, VarSet::EMPTY, &mut out);
        let mut covers: Vec<VarSet> = out.into_iter().map(|ind| all.difference(ind)).collect();
        covers.sort();
        covers
    }

    // Bron–Kerbosch with pivoting on the complement graph.
    fn maximal_independent_rec(&self, r: VarSet, p: VarSet, x: VarSet, out: &mut Vec<VarSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let all = self.vertices();
        let non_adj = |u: usize| all.difference(self.adj[u]).without(u);
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(non_adj(u)).len())
            .expect("nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(non_adj(pivot)) {
            let nv = non_adj(v);
            self.maximal_independent_rec(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Smallest cardinality of a vertex cover.
    pub fn min_cover_size(&self) -> usize {
        self.minimal_vertex_covers().iter().map(|c| c.len()).min().unwrap_or(0)
    }

    /// All minimal vertex covers share one cardinality.
    pub fn is_unmixed(&self) -> bool {
        let covers = self.minimal_vertex_covers();
        covers.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Parse the plain graph format: `n m`, then `m` lines `u v` with
    /// 1-based indices. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
        let nums = parse_numbers(hline, header)?;
        let [n, m] = nums[..] else {
            return Err(Error::Parse { line: hline, message: "header must be `n m`".into() });
        };
        let mut g = Graph::new(n)?;
        let mut seen = 0;
        for (line, l) in lines {
            let nums = parse_numbers(line, l)?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse { line, message: "edge line must be `u v`".into() });
            };
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Parse { line, message: format!("vertex out of range 1..{n}") });
            }
            g.add_edge(u - 1, v - 1).map_err(|e| Error::Parse { line, message: e.to_string() })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse { line: hline, message: format!("header declares {m} edges, found {seen}") });
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse { line, message: format!("expected a nonnegative integer, got `{t}`") })
        })
        .collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph({}; {})", self.vertex_count(), edges.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal { elimination_order: Vec<usize> },
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.vertex_count() {
        return false;
    }
    let mut remaining = g.vertices();
    for &v in order {
        if !remaining.contains(v) {
            return false;
        }
        remaining.remove(v);
        let later = g.neighbors(v).intersection(remaining);
        if later.iter().any(|w| !later.without(w).is_subset(g.neighbors(w))) {
            return false;
        }
    }
    true
}

/// `cycle` lists distinct vertices of an induced cycle of length ≥ 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let set: VarSet = cycle.iter().copied().collect();
    if set.len() != k || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &v)| {
        let expected = VarSet::singleton(cycle[(i + 1) % k]).with(cycle[(i + k - 1) % k]);
        g.neighbors(v).intersection(set) == expected
    })
}

/// Shape of `G \ S` as far as the sufficient conditions care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RemainderClass {
    Chordal,
    FiveCycle,
    Other,
}

/// Classify `G \ S`. Isolated vertices are discarded before testing for a
/// five-cycle; an edgeless remainder counts as chordal.
pub fn classify_remainder(g: &Graph, s: VertexSet) -> Result<RemainderClass> {
    let rest = g.delete_vertices(s)?;
    if rest.is_chordal().is_chordal() {
        return Ok(RemainderClass::Chordal);
    }
    let core = rest.induced_subgraph(rest.vertices().difference(rest.isolated_vertices()))?;
    if core.vertex_count() == 5 && core.is_cycle() {
        Ok(RemainderClass::FiveCycle)
    } else {
        Ok(RemainderClass::Other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    /// Brute-force cover scan over all 2^n subsets.
    fn covers_by_scan(g: &Graph, d: usize) -> Vec<VarSet> {
        let mut v: Vec<VarSet> = g
            .vertices()
            .subsets()
            .filter(|s| s.len() == d && g.is_vertex_cover(*s))
            .collect();
        v.sort();
        v
    }

    fn minimal_by_scan(g: &Graph) -> Vec<VarSet> {
        let covers: Vec<VarSet> = g.vertices().subsets().filter(|s| g.is_vertex_cover(*s)).collect();
        let mut v: Vec<VarSet> = covers
            .iter()
            .copied()
            .filter(|c| !covers.iter().any(|o| o != c && o.is_subset(*c)))
            .collect();
        v.sort();
        v
    }

    fn example_38() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = Graph::cycle(5).unwrap();
        let p = c5.induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.labels(), &["x1", "x2", "x3"]);
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
    }

    #[test]
    fn example_38_contains_four_cycle() {
        let g = example_38();
        let h = g.induced_subgraph(set(&[0, 1, 2, 3])).unwrap();
        assert!(h.is_cycle());
        assert_eq!(h.vertex_count(), 4);
    }

    #[test]
    fn out_of_range_is_an_input_error() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(g.induced_subgraph(set(&[4])), Err(Error::VertexOutOfRange { .. })));
        assert!(g.delete_vertices(set(&[9])).is_err());
        assert!(g.add_whiskers(set(&[5])).is_err());
    }

    #[test]
    fn deleting_from_cycle_gives_path() {
        for n in 3..9 {
            let c = Graph::cycle(n).unwrap();
            let p = c.delete_vertices(set(&[0])).unwrap();
            assert_eq!(p.vertex_count(), n - 1);
            assert_eq!(p.edge_count(), n - 2);
            assert!(p.is_forest() && p.is_connected());
        }
        let g = example_38();
        assert_eq!(g.delete_vertices(VarSet::EMPTY).unwrap(), g);
    }

    #[test]
    fn example_43_minus_pendant_is_c4() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap();
        let c4 = g.delete_vertices(set(&[4])).unwrap();
        assert!(c4.is_cycle() && c4.vertex_count() == 4);
    }

    #[test]
    fn whiskers_append_pendant_vertices() {
        let e = Graph::path(2).unwrap();
        let (p4, map) = e.add_whiskers(set(&[0, 1])).unwrap();
        assert_eq!(map.pairs, vec![(0, 2), (1, 3)]);
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);

        let (g7, map) = example_38().add_whiskers(set(&[5])).unwrap();
        assert_eq!(map.pairs, vec![(5, 6)]);
        assert_eq!(g7.label(6), "x7");
        assert!(g7.has_edge(5, 6) && g7.degree(6) == 1);

        let (c, _) = Graph::cycle(5).unwrap().add_whiskers(set(&[2])).unwrap();
        assert_eq!(c.edge_count(), 6);
    }

    #[test]
    fn chordality_certificates() {
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(tree.is_chordal().is_chordal());
        let c4 = Graph::cycle(4).unwrap();
        match c4.is_chordal() {
            Chordality::NotChordal { cycle } => {
                assert_eq!(cycle, vec![0, 1, 2, 3]);
                assert!(is_chordless_cycle(&c4, &cycle));
            }
            other => panic!("{other:?}"),
        }
        let mut c4_chord = c4.clone();
        c4_chord.add_edge(0, 2).unwrap();
        match c4_chord.is_chordal() {
            Chordality::Chordal { elimination_order } => {
                assert!(is_perfect_elimination_order(&c4_chord, &elimination_order))
            }
            other => panic!("{other:?}"),
        }
        assert!(Graph::new(0).unwrap().is_chordal().is_chordal());
    }

    #[test]
    fn remainder_classes() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(classify_remainder(&c5, VarSet::EMPTY).unwrap(), RemainderClass::FiveCycle);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(classify_remainder(&c6, VarSet::EMPTY).unwrap(), RemainderClass::Other);
        // S a vertex cover leaves isolated vertices only
        assert_eq!(classify_remainder(&c6, set(&[0, 2, 4])).unwrap(), RemainderClass::Chordal);
        // C5 plus an isolated vertex left behind by S
        let mut g = Graph::cycle(5).unwrap();
        g = g.add_whiskers(set(&[0])).unwrap().0;
        let mut g2 = Graph::new(7).unwrap();
        for (u, v) in g.edges() {
            g2.add_edge(u, v).unwrap();
        }
        g2.add_edge(5, 6).unwrap();
        assert_eq!(classify_remainder(&g2, set(&[5])).unwrap(), RemainderClass::FiveCycle);
    }

    #[test]
    fn c5_covers() {
        let c5 = Graph::cycle(5).unwrap();
        let three = c5.vertex_covers_of_size(3);
        let expected = [[0, 1, 3], [0, 2, 3], [0, 2, 4], [1, 2, 4], [1, 3, 4]].map(|t| set(&t));
        assert_eq!(three, expected);
        assert_eq!(c5.vertex_covers_of_size(4), covers_by_scan(&c5, 4));
        assert_eq!(c5.vertex_covers_of_size(4).len(), 5);
        assert!(c5.vertex_covers_of_size(2).is_empty());
        assert!(c5.vertex_covers_of_size(6).is_empty());
    }

    #[test]
    fn minimal_covers_small_cases() {
        let edge = Graph::path(2).unwrap();
        assert_eq!(edge.minimal_vertex_covers(), vec![set(&[0]), set(&[1])]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.minimal_vertex_covers(), minimal_by_scan(&c4));
        assert_eq!(c4.minimal_vertex_covers(), vec![set(&[0, 2]), set(&[1, 3])]);

        // Example 4.3: C4 on y1..y4, pendant y at y1, whisker x at y.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)])
            .unwrap()
            .with_labels(["y1", "y2", "y3", "y4", "y", "x"])
            .unwrap();
        let expected = ["y1y3y", "y2y4y", "y1y3x", "y1y2y4x"].map(|c| {
            let labels: Vec<&str> = match c {
                "y1y3y" => vec!["y1", "y3", "y"],
                "y2y4y" => vec!["y2", "y4", "y"],
                "y1y3x" => vec!["y1", "y3", "x"],
                _ => vec!["y1", "y2", "y4", "x"],
            };
            g.set_from_labels(&labels).unwrap()
        });
        let mut expected = expected.to_vec();
        expected.sort();
        assert_eq!(g.minimal_vertex_covers(), expected);
    }

    #[test]
    fn isolated_vertices_never_in_minimal_covers() {
        let mut g = Graph::new(5).unwrap();
        g.add_edge(0, 1).unwrap();
        for c in g.minimal_vertex_covers() {
            assert!(!c.contains(2) && !c.contains(3) && !c.contains(4));
        }
        assert_eq!(Graph::new(3).unwrap().minimal_vertex_covers(), vec![VarSet::EMPTY]);
    }

    #[test]
    fn unmixedness() {
        assert!(!Graph::path(3).unwrap().is_unmixed());
        assert!(Graph::cycle(4).unwrap().is_unmixed());
        let g = example_38();
        let (w, _) = g.add_whiskers(g.vertices()).unwrap();
        assert!(w.is_unmixed());
        assert!(w.minimal_vertex_covers().iter().all(|c| c.len() == 6));
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let text = "# a 4-cycle\n4 4\n1 2\n2 3\n3 4\n1 4\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(Graph::parse("3 1\n1 1\n").is_err());
        assert!(Graph::parse("3 2\n1 2\n2 1\n").is_err());
        assert!(Graph::parse("3 1\n1 4\n").is_err());
        assert!(Graph::parse("3 2\n1 2\n").is_err());
        assert!(Graph::parse("3 1\n1 b\n").is_err());
        assert!(Graph::parse("").is_err());
    }
}
