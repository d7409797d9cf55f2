//! Square-free monomials and minimally generated square-free monomial ideals.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::varset::{graded_cmp, VarSet, MAX_VARS};

/// A square-free monomial, identified with its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub VarSet);

impl Monomial {
    pub const ONE: Monomial = Monomial(VarSet::EMPTY);

    pub fn from_vars(vars: impl IntoIterator<Item = usize>) -> Self {
        Monomial(vars.into_iter().collect())
    }

    #[inline]
    pub fn support(self) -> VarSet {
        self.0
    }

    #[inline]
    pub fn degree(self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        self.0.is_subset(other.0)
    }

    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0.union(other.0))
    }

    #[inline]
    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0.intersection(other.0))
    }

    /// `self / gcd(self, other)`.
    #[inline]
    pub fn colon(self, other: Monomial) -> Monomial {
        Monomial(self.0.difference(other.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for v in self.0 {
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

/// Square-free monomial ideal in `ambient` variables, minimally generated.
///
/// Generators are kept in canonical order (degree, then lexicographic). The
/// zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `gens` and sort them canonically.
    pub fn new(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if ambient > MAX_VARS {
            return Err(Error::TooManyVertices { count: ambient, max: MAX_VARS });
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let bound = VarSet::full(ambient);
        if let Some(bad) = gens.iter().find(|g| !g.0.is_subset(bound)) {
            return Err(Error::VertexOutOfRange {
                index: bad.0.last().unwrap_or(0),
                count: ambient,
            });
        }
        Ok(minimalize(ambient, gens))
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::ONE] }
    }

    /// Build from generators already known to be minimal and sorted.
    pub(crate) fn from_sorted_minimal(ambient: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| graded_cmp(&w[0].0, &w[1].0).is_lt()));
        MonomialIdeal { ambient, gens }
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&Monomial::ONE)
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Smallest and largest generator degree.
    pub fn degree_range(&self) -> Option<(usize, usize)> {
        Some((self.gens.first()?.degree(), self.gens.last()?.degree()))
    }

    /// The common generator degree, if all generators share one.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        match self.degree_range() {
            Some((lo, hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// Union of all generator supports.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.0))
    }

    /// `(I_[d])`: all square-free degree-`d` monomials of the ideal.
    pub fn squarefree_component(&self, d: usize) -> MonomialIdeal {
        let all = VarSet::full(self.ambient);
        let mut out: BTreeSet<VarSetGraded> = BTreeSet::new();
        for g in self.gens.iter().filter(|g| g.degree() <= d) {
            for extra in all.difference(g.0).subsets_of_size(d - g.degree()) {
                out.insert(VarSetGraded(g.0.union(extra)));
            }
        }
        MonomialIdeal {
            ambient: self.ambient,
            gens: out.into_iter().map(|s| Monomial(s.0)).collect(),
        }
    }

    /// `I : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: Monomial) -> MonomialIdeal {
        minimalize(self.ambient, self.gens.iter().map(|g| g.colon(u)))
    }

    /// The ideal in a larger ambient ring with the same generators.
    pub fn with_ambient(&self, ambient: usize) -> Result<MonomialIdeal> {
        if ambient < self.support().bound() || ambient > MAX_VARS {
            return Err(Error::VertexOutOfRange { index: ambient, count: self.ambient });
        }
        Ok(MonomialIdeal { ambient, gens: self.gens.clone() })
    }

    /// Rename variables through `map` (old index -> new index).
    pub fn embed(&self, ambient: usize, map: &[usize]) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ambient, self.gens.iter().map(|g| Monomial(g.0.map_through(map))))
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| format_monomial(*g, names)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn to_json(&self, names: &[String]) -> IdealJson {
        IdealJson {
            ambient: self.ambient,
            vars: names.to_vec(),
            gens: self
                .gens
                .iter()
                .map(|g| g.0.iter().map(|v| names[v].clone()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<MonomialIdeal> {
        if json.vars.len() != json.ambient {
            return Err(Error::Certificate(format!(
                "{} variable names for ambient {}",
                json.vars.len(),
                json.ambient
            )));
        }
        let gens = json
            .gens
            .iter()
            .map(|g| names_to_monomial(g, &json.vars))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(json.ambient, gens)
    }
}

pub(crate) fn names_to_monomial(names: &[String], vars: &[String]) -> Result<Monomial> {
    names
        .iter()
        .map(|n| {
            vars.iter()
                .position(|v| v == n)
                .ok_or_else(|| Error::Unknown { kind: "variable", name: n.clone() })
        })
        .collect::<Result<VarSet>>()
        .map(Monomial)
}

/// Read a product of variable names written without separators, such as
/// `y1y3y`, matching the longest name at each step.
pub fn parse_monomial_word(word: &str, names: &[String]) -> Result<Monomial> {
    let mut rest = word.trim();
    let mut vars = VarSet::EMPTY;
    while !rest.is_empty() {
        let (idx, len) = names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_empty() && rest.starts_with(n.as_str()))
            .map(|(i, n)| (i, n.len()))
            .max_by_key(|&(_, l)| l)
            .ok_or_else(|| Error::Unknown { kind: "variable", name: rest.to_string() })?;
        vars.insert(idx);
        rest = &rest[len..];
    }
    Ok(Monomial(vars))
}

pub fn format_monomial(m: Monomial, names: &[String]) -> String {
    if m.0.is_empty() {
        "1".into()
    } else {
        m.0.iter().map(|v| names[v].as_str()).collect()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {} vars", self.gens, self.ambient)
    }
}

/// JSON form of an ideal: `{ "ambient": n, "vars": [..], "gens": [[..], ..] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ambient: usize,
    pub vars: Vec<String>,
    pub gens: Vec<Vec<String>>,
}

#[derive(PartialEq, Eq)]
struct VarSetGraded(VarSet);

impl Ord for VarSetGraded {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for VarSetGraded {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Drop every generator divisible by another; sort canonically.
pub fn minimalize(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    gens.sort_by(|a, b| graded_cmp(&a.0, &b.0));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // sorted by degree, so only earlier generators can divide g
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    MonomialIdeal { ambient, gens: kept }
}

/// `I(G)`: one generator `x_u x_v` per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    minimalize(
        g.vertex_count(),
        g.edges().map(|(u, v)| Monomial(VarSet::singleton(u).with(v))),
    )
}

/// `I(G)^∨`, generated by the minimal vertex covers.
pub fn alexander_dual_of_edge_ideal(g: &Graph) -> MonomialIdeal {
    minimalize(g.vertex_count(), g.minimal_vertex_covers().into_iter().map(Monomial))
}

/// `(I(G)^∨_[d])`, read off directly from the size-`d` vertex covers.
pub fn dual_component(g: &Graph, d: usize) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = g.vertex_covers_of_size(d).into_iter().map(Monomial).collect();
    gens.sort_by(|a, b| graded_cmp(&a.0, &b.0));
    MonomialIdeal::from_sorted_minimal(g.vertex_count(), gens)
}

/// Alexander dual of an arbitrary square-free ideal: generators are the
/// minimal transversals of the generator supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = ideal.ambient();
    if ideal.is_zero() {
        return MonomialIdeal::unit(n);
    }
    if ideal.is_unit() {
        return MonomialIdeal::zero(n);
    }
    let supports: Vec<VarSet> = ideal.generators().iter().map(|g| g.0).collect();
    // transversals built incrementally: T_{k+1} = min { t ∪ {v} : v ∈ g_{k+1} } ∪ { t hitting g_{k+1} }
    let mut current: Vec<VarSet> = vec![VarSet::EMPTY];
    for g in supports {
        let mut next = Vec::new();
        for t in &current {
            if !t.is_disjoint(g) {
                next.push(*t);
            } else {
                next.extend(g.iter().map(|v| t.with(v)));
            }
        }
        current = minimalize(n, next.into_iter().map(Monomial))
            .generators()
            .iter()
            .map(|m| m.0)
            .collect();
    }
    minimalize(n, current.into_iter().map(Monomial))
}
