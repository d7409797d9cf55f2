//! Multigraded Betti numbers and linearity tests.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::complex::{reduced_homology_ranks, upper_koszul_complex};
use super::field::FieldSpec;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::quotients::{verify_order, QuotientOrder};
use crate::varset::{graded_cmp, VarSet};

/// Nonzero `β_{i,b}` of a square-free ideal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    ambient: usize,
    entries: BTreeMap<(usize, VarSet), usize>,
}

impl BettiTable {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn get(&self, i: usize, b: VarSet) -> usize {
        self.entries.get(&(i, b)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, VarSet, usize)> + '_ {
        self.entries.iter().map(|(&(i, b), &r)| (i, b, r))
    }

    /// `β_{i,j} = Σ_{|b| = j} β_{i,b}`.
    pub fn graded(&self) -> GradedBetti {
        let mut g = GradedBetti::default();
        for (&(i, b), &r) in &self.entries {
            *g.entries.entry((i, b.len())).or_default() += r;
        }
        g
    }

    pub fn to_json(&self, names: &[String]) -> BettiJson {
        BettiJson {
            ambient: self.ambient,
            graded: self.graded().triples(),
            multigraded: self
                .entries()
                .map(|(i, b, rank)| MultiEntry { i, b: b.iter().map(|v| names[v].clone()).collect(), rank })
                .collect(),
        }
    }
}

/// Total-degree Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedBetti {
    entries: BTreeMap<(usize, usize), usize>,
}

impl GradedBetti {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), usize)>) -> Self {
        GradedBetti { entries: entries.into_iter().filter(|e| e.1 != 0).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum over `j` of `β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|e| e.0 .0 == i).map(|e| e.1).sum()
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r)).collect()
    }

    /// Every nonzero entry satisfies `j = d + i`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == d + i)
    }
}

/// Staircase layout: column `i`, row `j - i`, entry `β_{i,j}`.
impl fmt::Display for GradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "total: 0");
        }
        let max_i = self.entries.keys().map(|k| k.0).max().unwrap_or(0);
        let rows: Vec<usize> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
            let hi = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            x => x.to_string(),
        };
        let widths: Vec<usize> = (0..=max_i)
            .map(|i| {
                rows.iter()
                    .map(|&r| cell(i, r).len())
                    .chain([i.to_string().len(), self.total(i).to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(0).max("total:".len());
        let line = |f: &mut fmt::Formatter<'_>, head: String, cells: Vec<String>| -> fmt::Result {
            write!(f, "{head:>label$}")?;
            for (c, w) in cells.iter().zip(&widths) {
                write!(f, " {c:>w$}")?;
            }
            writeln!(f)
        };
        line(f, String::new(), (0..=max_i).map(|i| i.to_string()).collect())?;
        line(f, "total:".into(), (0..=max_i).map(|i| self.total(i).to_string()).collect())?;
        for &r in &rows {
            line(f, format!("{r}:"), (0..=max_i).map(|i| cell(i, r)).collect())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiEntry {
    pub i: usize,
    pub b: Vec<String>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub ambient: usize,
    /// `(i, j, β_{i,j})`
    pub graded: Vec<(usize, usize, usize)>,
    pub multigraded: Vec<MultiEntry>,
}

/// Unions of nonempty sets of generator supports, by size then lex.
pub fn lcm_lattice(m: &MonomialIdeal) -> Vec<VarSet> {
    let mut seen: HashSet<VarSet> = HashSet::new();
    let mut all: Vec<VarSet> = Vec::new();
    for g in m.generators() {
        let fresh: Vec<VarSet> = std::iter::once(g.0)
            .chain(all.iter().map(|l| l.union(g.0)))
            .filter(|u| !seen.contains(u))
            .collect();
        for u in fresh {
            if seen.insert(u) {
                all.push(u);
            }
        }
    }
    all.sort_by(graded_cmp);
    all
}

/// `β_{i,b}` for all `i`; entry `i` of the result is `β_{i,b}`.
pub fn betti_at(m: &MonomialIdeal, b: VarSet, field: FieldSpec) -> Vec<usize> {
    reduced_homology_ranks(&upper_koszul_complex(m, b), field)
}

pub fn betti_numbers(m: &MonomialIdeal, field: FieldSpec) -> BettiTable {
    let mut entries = BTreeMap::new();
    for b in lcm_lattice(m) {
        for (i, r) in betti_at(m, b, field).into_iter().enumerate() {
            if r != 0 {
                entries.insert((i, b), r);
            }
        }
    }
    BettiTable { ambient: m.ambient(), entries }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `β_{i,d+i} = Σ_j C(r_j, i)` for a verified certificate in degree `d`.
pub fn betti_from_quotient_order(q: &QuotientOrder) -> Result<GradedBetti> {
    if !verify_order(q)? {
        return Err(Error::Certificate("order does not have linear quotients".into()));
    }
    if q.ideal().is_zero() {
        return Ok(GradedBetti::default());
    }
    let d = q.ideal().equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    let sizes = q.colon_sizes();
    let top = sizes.iter().copied().max().unwrap_or(0);
    Ok(GradedBetti::from_entries(
        (0..=top).map(|i| ((i, d + i), sizes.iter().map(|&r| binomial(r, i)).sum())),
    ))
}

/// A nonzero `β_{i,b}` with `|b| != d + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonlinearWitness {
    pub i: usize,
    #[serde(with = "bits")]
    pub b: VarSet,
    pub rank: usize,
}

mod bits {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::varset::VarSet;

    pub fn serialize<S: Serializer>(b: &VarSet, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(b.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<VarSet, D::Error> {
        Ok(Vec::<usize>::deserialize(d)?.into_iter().collect())
    }
}

/// First nonlinear Betti number, scanning multidegrees by increasing size.
pub fn linear_resolution_witness(m: &MonomialIdeal, field: FieldSpec) -> Result<Option<NonlinearWitness>> {
    if m.is_zero() {
        return Ok(None);
    }
    let d = m.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    for b in lcm_lattice(m).into_iter().filter(|b| b.len() > d) {
        let ranks = betti_at(m, b, field);
        if let Some((i, &rank)) = ranks.iter().enumerate().find(|&(i, &r)| r != 0 && b.len() != d + i) {
            return Ok(Some(NonlinearWitness { i, b, rank }));
        }
    }
    Ok(None)
}

pub fn has_linear_resolution(m: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    linear_resolution_witness(m, field).map(|w| w.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeLinearity {
    pub degree: usize,
    pub generators: usize,
    pub witness: Option<NonlinearWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwlReport {
    pub field: FieldSpec,
    pub degrees: Vec<DegreeLinearity>,
}

impl CwlReport {
    pub fn is_componentwise_linear(&self) -> bool {
        self.degrees.iter().all(|d| d.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<(usize, NonlinearWitness)> {
        self.degrees.iter().find_map(|d| d.witness.map(|w| (d.degree, w)))
    }
}

/// Linear-resolution test for each `(I_[d])`, `d` from the least generator
/// degree to the number of variables.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldSpec) -> CwlReport {
    let lo = ideal.degree_range().map(|r| r.0);
    let degrees = lo
        .map(|lo| lo..=ideal.ambient())
        .into_iter()
        .flatten()
        .map(|d| {
            let component = ideal.squarefree_component(d);
            DegreeLinearity {
                degree: d,
                generators: component.len(),
                witness: linear_resolution_witness(&component, field).expect("components are equigenerated"),
            }
        })
        .collect();
    CwlReport { field, degrees }
}
