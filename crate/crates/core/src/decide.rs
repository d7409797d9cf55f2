//! Sequentially Cohen-Macaulay and Cohen-Macaulay verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify_remainder, Graph, RemainderClass};
use crate::homology::{betti_at, linear_resolution_witness, upper_koszul_complex, FieldSpec, NonlinearWitness};
use crate::monomial::dual_component;
use crate::quotients::{dual_degree_range, find_order_bounded, verify_order, CertificateJson, OrderSearch, QuotientOrder};
use crate::varset::{VarSet, VertexSet};

/// Node budget for the linear-quotients search before a degree is handed
/// to the homology computation.
pub const SEARCH_BUDGET: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Property {
    Scm,
    Cm,
}

/// A sufficient condition for `G ∪ W(S)` to be sequentially Cohen-Macaulay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `S` is a vertex cover of `G`.
    VertexCover,
    /// `G \ S` is chordal.
    ChordalRemainder,
    /// `G \ S` is a five-cycle, up to isolated vertices.
    FiveCycleRemainder,
    /// `|S| >= |V_G| - 3`.
    SizeBound,
}

impl Condition {
    pub fn theorem(self) -> &'static str {
        match self {
            Condition::VertexCover => "C3.4",
            Condition::ChordalRemainder => "T3.2",
            Condition::FiveCycleRemainder => "T3.3",
            Condition::SizeBound => "C3.5",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Condition::VertexCover => "S is a vertex cover",
            Condition::ChordalRemainder => "G \\ S is chordal",
            Condition::FiveCycleRemainder => "G \\ S is a five-cycle",
            Condition::SizeBound => "|S| >= |V| - 3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremHit {
    /// First applicable condition in scan order.
    pub primary: Condition,
    /// Every applicable condition, in scan order.
    pub all: Vec<Condition>,
}

impl TheoremHit {
    pub fn includes(&self, c: Condition) -> bool {
        self.all.contains(&c)
    }
}

/// Check the sufficient conditions in the order vertex cover, chordal
/// remainder, five-cycle remainder, size bound.
pub fn sufficient_scm(g: &Graph, s: VertexSet) -> Result<Option<TheoremHit>> {
    g.check_set(s)?;
    let class = classify_remainder(g, s)?;
    let all: Vec<Condition> = [
        (Condition::VertexCover, g.is_vertex_cover(s)),
        (Condition::ChordalRemainder, class == RemainderClass::Chordal),
        (Condition::FiveCycleRemainder, class == RemainderClass::FiveCycle),
        (Condition::SizeBound, s.len() + 3 >= g.vertex_count()),
    ]
    .into_iter()
    .filter_map(|(c, holds)| holds.then_some(c))
    .collect();
    Ok(all.first().map(|&primary| TheoremHit { primary, all: all.clone() }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// A verified linear-quotients order in every degree.
    QuotientCertificates(Vec<QuotientOrder>),
    /// Linear resolutions; `certificates` cover some degrees, the rest
    /// were settled by homology.
    HomologyLinear { certificates: Vec<QuotientOrder>, homology_degrees: Vec<usize> },
    /// A nonlinear Betti number of `(I^∨_[degree])`.
    BettiWitness { degree: usize, witness: NonlinearWitness },
    SufficientCondition { s: VertexSet, hit: TheoremHit },
    /// No edges: the quotient is the polynomial ring.
    ZeroIdealConvention,
}

impl Evidence {
    pub fn kind(&self) -> &'static str {
        match self {
            Evidence::QuotientCertificates(_) => "quotient_certificates",
            Evidence::HomologyLinear { .. } => "homology_linear",
            Evidence::BettiWitness { .. } => "betti_witness",
            Evidence::SufficientCondition { .. } => "sufficient_condition",
            Evidence::ZeroIdealConvention => "zero_ideal_convention",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub value: bool,
    pub field: FieldSpec,
    pub field_independent: bool,
    pub unmixed: Option<bool>,
    pub evidence: Evidence,
    /// Degrees where the search proved no linear-quotients order exists
    /// although the resolution is linear.
    pub dlq_gaps: Vec<usize>,
}

impl Verdict {
    /// One-line summary such as `SCM: true (dual linear quotients, field-independent)`.
    pub fn summary(&self, g: &Graph) -> String {
        let name = match self.property {
            Property::Scm => "SCM",
            Property::Cm => "CM",
        };
        let field = if self.field_independent { "field-independent".to_string() } else { format!("over {}", self.field) };
        let why = match &self.evidence {
            Evidence::QuotientCertificates(_) => "dual linear quotients".to_string(),
            Evidence::HomologyLinear { homology_degrees, .. } => {
                format!("componentwise linear dual, homology in degrees {homology_degrees:?}")
            }
            Evidence::BettiWitness { degree, witness } => format!(
                "nonlinear syzygy of the degree-{degree} dual component: beta_{},{} = {} at {}",
                witness.i,
                witness.b.len(),
                witness.rank,
                g.format_set(witness.b)
            ),
            Evidence::SufficientCondition { hit, .. } => {
                format!("{} ({})", hit.primary.describe(), hit.primary.theorem())
            }
            Evidence::ZeroIdealConvention => "no edges".to_string(),
        };
        let mixed = match (self.property, self.unmixed) {
            (Property::Cm, Some(false)) => "; mixed",
            (Property::Cm, Some(true)) => "; unmixed",
            _ => "",
        };
        format!("{name}: {} ({why}{mixed}, {field})", self.value)
    }
}

/// Decide whether `R/I(G)` is sequentially Cohen-Macaulay.
///
/// Every dual component is first searched for a linear-quotients order;
/// components without one are decided by their Betti numbers over
/// `field`.
pub fn is_sequentially_cm(g: &Graph, field: FieldSpec) -> Verdict {
    scm_with_budget(g, field, SEARCH_BUDGET)
}

pub fn scm_with_budget(g: &Graph, field: FieldSpec, budget: u64) -> Verdict {
    let verdict = |value, field_independent, evidence, dlq_gaps| Verdict {
        property: Property::Scm,
        value,
        field,
        field_independent,
        unmixed: None,
        evidence,
        dlq_gaps,
    };
    if g.edge_count() == 0 {
        return verdict(true, true, Evidence::ZeroIdealConvention, Vec::new());
    }
    let mut certificates = Vec::new();
    let mut homology_degrees = Vec::new();
    let mut gaps = Vec::new();
    for d in dual_degree_range(g) {
        let component = dual_component(g, d);
        let search = find_order_bounded(&component, budget);
        if let OrderSearch::Found(q) = &search {
            if verify_order(q).unwrap_or(false) {
                certificates.push(q.clone());
                continue;
            }
        }
        match linear_resolution_witness(&component, field).expect("equigenerated") {
            Some(witness) => {
                return verdict(false, false, Evidence::BettiWitness { degree: d, witness }, gaps);
            }
            None => {
                if matches!(search, OrderSearch::NoOrder) {
                    gaps.push(d);
                }
                homology_degrees.push(d);
            }
        }
    }
    if homology_degrees.is_empty() {
        verdict(true, true, Evidence::QuotientCertificates(certificates), gaps)
    } else {
        verdict(true, false, Evidence::HomologyLinear { certificates, homology_degrees }, gaps)
    }
}

/// Cohen-Macaulay: sequentially Cohen-Macaulay and unmixed.
pub fn is_cm(g: &Graph, field: FieldSpec) -> Verdict {
    let scm = is_sequentially_cm(g, field);
    let unmixed = g.is_unmixed();
    Verdict { property: Property::Cm, value: scm.value && unmixed, unmixed: Some(unmixed), ..scm }
}

/// A nonlinear syzygy of `(I(G\S)^∨_[d])` and its lift to `G ∪ W(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyWitness {
    pub d: usize,
    pub i: usize,
    /// Multidegree over the vertices of `G \ S`, in `G`'s indices.
    pub b: VertexSet,
    /// `b ∪ S`, in the indices of `G ∪ W(S)`.
    pub lifted_c: VertexSet,
    pub rank: usize,
    pub field: FieldSpec,
}

/// If `G \ S` is not sequentially Cohen-Macaulay over `field`, the first
/// nonlinear syzygy by degree `d`, then multidegree size.
pub fn necessary_scm(g: &Graph, s: VertexSet, field: FieldSpec) -> Result<Option<SyzygyWitness>> {
    g.check_set(s)?;
    let (h, origin) = g.induced_subgraph_with_map(g.vertices().difference(s))?;
    let v = is_sequentially_cm(&h, field);
    let Evidence::BettiWitness { degree, witness } = v.evidence else {
        return Ok(None);
    };
    let b = witness.b.map_through(&origin);
    Ok(Some(SyzygyWitness { d: degree, i: witness.i, b, lifted_c: b.union(s), rank: witness.rank, field }))
}

/// Both upper Koszul complexes and Betti numbers of a lifted witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCheck {
    pub complexes_equal: bool,
    pub faces: usize,
    pub beta_b: usize,
    pub beta_c: usize,
}

impl LiftCheck {
    pub fn holds(&self) -> bool {
        self.complexes_equal && self.beta_b == self.beta_c
    }
}

/// Compare `K^b(I)` with `K^c(J)` for `I = (I(G\S)^∨_[d])` and
/// `J = (I(G ∪ W(S))^∨_[d+|S|])`.
pub fn check_koszul_lift(g: &Graph, s: VertexSet, w: &SyzygyWitness) -> Result<bool> {
    koszul_lift_details(g, s, w).map(|c| c.holds())
}

pub fn koszul_lift_details(g: &Graph, s: VertexSet, w: &SyzygyWitness) -> Result<LiftCheck> {
    g.check_set(s)?;
    let rest = g.vertices().difference(s);
    if !w.b.is_subset(rest) {
        return Err(Error::WitnessMismatch("b meets S or leaves the vertex set".into()));
    }
    if w.lifted_c != w.b.union(s) {
        return Err(Error::WitnessMismatch("c is not b together with S".into()));
    }
    if w.b.len() <= w.d + w.i {
        return Err(Error::WitnessMismatch(format!("|b| = {} is not above d + i = {}", w.b.len(), w.d + w.i)));
    }
    let (h, origin) = g.induced_subgraph_with_map(rest)?;
    let (whiskered, _) = g.add_whiskers(s)?;
    let i_ideal = dual_component(&h, w.d);
    let j_ideal = dual_component(&whiskered, w.d + s.len());
    let b_local: VarSet = w.b.iter().map(|v| rest.rank_of(v)).collect();

    let k_b = upper_koszul_complex(&i_ideal, b_local);
    let k_c = upper_koszul_complex(&j_ideal, w.lifted_c);
    let mut faces_b: Vec<VarSet> = k_b.faces().into_iter().map(|f| f.map_through(&origin)).collect();
    let mut faces_c = k_c.faces();
    faces_b.sort();
    faces_c.sort();

    let beta = |ranks: Vec<usize>| ranks.get(w.i).copied().unwrap_or(0);
    let beta_b = beta(betti_at(&i_ideal, b_local, w.field));
    if beta_b == 0 {
        return Err(Error::WitnessMismatch(format!("beta_{} vanishes at b", w.i)));
    }
    let beta_c = beta(betti_at(&j_ideal, w.lifted_c, w.field));
    Ok(LiftCheck { complexes_equal: faces_b == faces_c, faces: faces_b.len(), beta_b, beta_c })
}

/// Verdict for `G ∪ W(S)`, using the sufficient conditions first, then a
/// lifted witness, then the full decision.
pub fn whiskered_scm(g: &Graph, s: VertexSet, field: FieldSpec) -> Result<(Graph, Verdict)> {
    let (w, _) = g.add_whiskers(s)?;
    if let Some(hit) = sufficient_scm(g, s)? {
        let v = Verdict {
            property: Property::Scm,
            value: true,
            field,
            field_independent: true,
            unmixed: None,
            evidence: Evidence::SufficientCondition { s, hit },
            dlq_gaps: Vec::new(),
        };
        return Ok((w, v));
    }
    if let Some(wit) = necessary_scm(g, s, field)? {
        if check_koszul_lift(g, s, &wit)? {
            let v = Verdict {
                property: Property::Scm,
                value: false,
                field,
                field_independent: false,
                unmixed: None,
                evidence: Evidence::BettiWitness {
                    degree: wit.d + s.len(),
                    witness: NonlinearWitness { i: wit.i, b: wit.lifted_c, rank: wit.rank },
                },
                dlq_gaps: Vec::new(),
            };
            return Ok((w, v));
        }
    }
    let v = is_sequentially_cm(&w, field);
    Ok((w, v))
}

/// Vertex list and labelled edges, enough to rebuild the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::new(self.vertices.len())?.with_labels(self.vertices.iter().cloned())?;
        for [a, b] in &self.edges {
            let find = |l: &str| g.find_label(l).ok_or_else(|| Error::Unknown { kind: "vertex", name: l.to_string() });
            let (u, v) = (find(a)?, find(b)?);
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceJson {
    QuotientCertificates {
        certificates: Vec<CertificateJson>,
    },
    HomologyLinear {
        certificates: Vec<CertificateJson>,
        homology_degrees: Vec<usize>,
    },
    BettiWitness {
        degree: usize,
        i: usize,
        b: Vec<String>,
        rank: usize,
    },
    SufficientCondition {
        s: Vec<String>,
        primary: Condition,
        all: Vec<Condition>,
    },
    ZeroIdealConvention,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub property: Property,
    pub value: bool,
    pub field: FieldSpec,
    pub field_independent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmixed: Option<bool>,
    pub graph: GraphJson,
    pub evidence: EvidenceJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dlq_gaps: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<f64>,
}

fn names(g: &Graph, s: VarSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_string()).collect()
}

impl Verdict {
    pub fn to_json(&self, g: &Graph) -> VerdictJson {
        let certs = |qs: &[QuotientOrder]| qs.iter().map(|q| q.to_json(g.labels())).collect();
        let evidence = match &self.evidence {
            Evidence::QuotientCertificates(qs) => EvidenceJson::QuotientCertificates { certificates: certs(qs) },
            Evidence::HomologyLinear { certificates, homology_degrees } => EvidenceJson::HomologyLinear {
                certificates: certs(certificates),
                homology_degrees: homology_degrees.clone(),
            },
            Evidence::BettiWitness { degree, witness } => EvidenceJson::BettiWitness {
                degree: *degree,
                i: witness.i,
                b: names(g, witness.b),
                rank: witness.rank,
            },
            Evidence::SufficientCondition { s, hit } => EvidenceJson::SufficientCondition {
                s: names(g, *s),
                primary: hit.primary,
                all: hit.all.clone(),
            },
            Evidence::ZeroIdealConvention => EvidenceJson::ZeroIdealConvention,
        };
        VerdictJson {
            property: self.property,
            value: self.value,
            field: self.field,
            field_independent: self.field_independent,
            unmixed: self.unmixed,
            graph: GraphJson::from_graph(g),
            evidence,
            dlq_gaps: self.dlq_gaps.clone(),
            timings_ms: None,
        }
    }
}

/// Independently re-derive a verdict from its evidence.
///
/// For `sufficient_condition` evidence the graph is the base graph `G`
/// and the verdict concerns `G ∪ W(S)`. Returns `Ok(false)` when the
/// evidence does not support the stated value.
pub fn recheck_verdict(v: &VerdictJson) -> Result<bool> {
    let g = v.graph.to_graph()?;
    let set = |labels: &[String]| -> Result<VarSet> {
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        g.set_from_labels(&refs)
    };
    let certified = |certs: &[CertificateJson]| -> Result<Vec<usize>> {
        let mut degrees = Vec::new();
        for c in certs {
            let q = QuotientOrder::from_json(c)?;
            let Some(d) = q.ideal().equigenerated_degree() else { return Ok(Vec::new()) };
            if q.ideal() != &dual_component(&g, d) || !verify_order(&q)? {
                return Ok(Vec::new());
            }
            degrees.push(d);
        }
        Ok(degrees)
    };
    let all_degrees: Vec<usize> = if g.edge_count() == 0 { Vec::new() } else { dual_degree_range(&g).collect() };
    // what the evidence establishes about the sequential property, if valid
    let scm_claim: Option<bool> = match &v.evidence {
        EvidenceJson::ZeroIdealConvention => (g.edge_count() == 0).then_some(true),
        EvidenceJson::QuotientCertificates { certificates } => {
            let mut d = certified(certificates)?;
            d.sort_unstable();
            (d == all_degrees).then_some(true)
        }
        EvidenceJson::HomologyLinear { certificates, homology_degrees } => {
            let mut d = certified(certificates)?;
            for &h in homology_degrees {
                if linear_resolution_witness(&dual_component(&g, h), v.field)?.is_some() {
                    return Ok(false);
                }
                d.push(h);
            }
            d.sort_unstable();
            (d == all_degrees).then_some(true)
        }
        EvidenceJson::BettiWitness { degree, i, b, rank } => {
            let b = set(b)?;
            let ranks = betti_at(&dual_component(&g, *degree), b, v.field);
            (b.len() > degree + i && ranks.get(*i) == Some(rank) && *rank > 0).then_some(false)
        }
        EvidenceJson::SufficientCondition { s, primary, all } => {
            let hit = sufficient_scm(&g, set(s)?)?;
            hit.is_some_and(|h| h.primary == *primary && &h.all == all).then_some(true)
        }
    };
    let Some(scm) = scm_claim else { return Ok(false) };
    match (v.property, v.unmixed) {
        (Property::Scm, _) => Ok(v.value == scm),
        (Property::Cm, Some(u)) => Ok(u == g.is_unmixed() && v.value == (scm && u)),
        (Property::Cm, None) => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    fn example_43() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn cycles() {
        let c5 = is_sequentially_cm(&Graph::cycle(5).unwrap(), FieldSpec::GF2);
        assert!(c5.value && c5.field_independent);
        assert!(matches!(c5.evidence, Evidence::QuotientCertificates(_)));
        let c4 = is_sequentially_cm(&Graph::cycle(4).unwrap(), FieldSpec::GF2);
        assert!(!c4.value);
        match c4.evidence {
            Evidence::BettiWitness { degree, witness } => {
                assert_eq!((degree, witness.i, witness.b), (2, 1, VarSet::full(4)));
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn edgeless_convention() {
        let g = Graph::new(3).unwrap();
        let v = is_cm(&g, FieldSpec::GF2);
        assert!(v.value);
        assert_eq!(v.evidence, Evidence::ZeroIdealConvention);
    }

    #[test]
    fn cm_examples() {
        let p3 = Graph::path(3).unwrap();
        let v = is_cm(&p3, FieldSpec::GF2);
        assert!(!v.value && v.unmixed == Some(false));
        assert!(is_sequentially_cm(&p3, FieldSpec::GF2).value);
        assert!(is_cm(&Graph::path(2).unwrap(), FieldSpec::GF2).value);
        assert!(is_cm(&Graph::path(4).unwrap(), FieldSpec::GF2).value);
    }

    #[test]
    fn sufficient_scan_order() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(sufficient_scm(&c6, VarSet::EMPTY).unwrap(), None);
        let hit = sufficient_scm(&c6, set(&[0, 2, 4])).unwrap().unwrap();
        assert_eq!(hit.primary, Condition::VertexCover);
        let hit = sufficient_scm(&c6, set(&[0, 1, 2])).unwrap().unwrap();
        assert_eq!(hit.primary, Condition::ChordalRemainder);
        assert!(hit.includes(Condition::SizeBound));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(sufficient_scm(&c5, VarSet::EMPTY).unwrap().unwrap().primary, Condition::FiveCycleRemainder);
        // sharpness: |S| = |V| - 4 with G \ S = C4
        assert_eq!(sufficient_scm(&example_43(), set(&[4])).unwrap(), None);
    }

    #[test]
    fn example_43_lift() {
        let g = example_43();
        let s = set(&[4]);
        let w = necessary_scm(&g, s, FieldSpec::GF2).unwrap().unwrap();
        assert_eq!((w.d, w.i, w.b), (2, 1, set(&[0, 1, 2, 3])));
        assert_eq!(w.lifted_c, set(&[0, 1, 2, 3, 4]));
        let check = koszul_lift_details(&g, s, &w).unwrap();
        assert!(check.holds());
        assert_eq!((check.beta_b, check.beta_c, w.lifted_c.len()), (1, 1, 5));
        let (_, v) = whiskered_scm(&g, s, FieldSpec::GF2).unwrap();
        assert!(!v.value);
        let (w6, _) = g.add_whiskers(s).unwrap();
        assert!(!is_sequentially_cm(&w6, FieldSpec::GF2).value);
    }

    #[test]
    fn chordal_remainder_has_no_witness() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(necessary_scm(&g, set(&[3]), FieldSpec::GF2).unwrap().is_none());
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let g = example_43();
        let s = set(&[4]);
        let mut w = necessary_scm(&g, s, FieldSpec::GF2).unwrap().unwrap();
        w.lifted_c = w.b;
        assert!(matches!(check_koszul_lift(&g, s, &w), Err(Error::WitnessMismatch(_))));
        let mut w = necessary_scm(&g, s, FieldSpec::GF2).unwrap().unwrap();
        w.b = set(&[0, 1, 2]);
        w.lifted_c = w.b.union(s);
        assert!(check_koszul_lift(&g, s, &w).is_err());
    }

    #[test]
    fn verdict_json_rechecks() {
        for g in [Graph::cycle(5).unwrap(), Graph::cycle(4).unwrap(), Graph::path(3).unwrap(), Graph::new(2).unwrap()] {
            for v in [is_sequentially_cm(&g, FieldSpec::GF2), is_cm(&g, FieldSpec::GF2)] {
                let json = v.to_json(&g);
                let text = serde_json::to_string(&json).unwrap();
                let back: VerdictJson = serde_json::from_str(&text).unwrap();
                assert!(recheck_verdict(&back).unwrap(), "{g:?}");
                let mut flipped = back.clone();
                flipped.value = !flipped.value;
                assert!(!recheck_verdict(&flipped).unwrap(), "{g:?}");
            }
        }
    }
}
