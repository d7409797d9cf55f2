//! Small worked examples with known answers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::decide::{
    is_cm, is_sequentially_cm, koszul_lift_details, necessary_scm, sufficient_scm, Evidence,
};
use crate::homology::{betti_from_quotient_order, betti_numbers, FieldSpec};
use crate::monomial::{alexander_dual_of_edge_ideal, dual_component, parse_monomial_word};
use crate::quotients::{verify_order, QuotientOrder};
use crate::{Error, Graph, MonomialIdeal, Result, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixtureId {
    #[serde(rename = "EX3.8")]
    Ex38,
    #[serde(rename = "EX3.9")]
    Ex39,
    #[serde(rename = "EX4.3")]
    Ex43,
    #[serde(rename = "C5-ORDER")]
    C5Order,
    #[serde(rename = "VILLARREAL-EDGE")]
    VillarrealEdge,
}

impl FixtureId {
    pub const ALL: [FixtureId; 5] =
        [FixtureId::Ex38, FixtureId::Ex39, FixtureId::Ex43, FixtureId::C5Order, FixtureId::VillarrealEdge];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Ex38 => "EX3.8",
            FixtureId::Ex39 => "EX3.9",
            FixtureId::Ex43 => "EX4.3",
            FixtureId::C5Order => "C5-ORDER",
            FixtureId::VillarrealEdge => "VILLARREAL-EDGE",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            FixtureId::Ex38 => "one whisker on a graph whose remainder has dual linear quotients, not SCM",
            FixtureId::Ex39 => "one whisker giving a mixed-degree dual with linear quotients",
            FixtureId::Ex43 => "4-cycle with a pendant, whiskered at the pendant, not SCM",
            FixtureId::C5Order => "the 5-cycle dual and its quotient order",
            FixtureId::VillarrealEdge => "a path on three vertices is SCM, the whiskered edge is CM",
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown { kind: "fixture", name: s.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureResult {
    pub id: FixtureId,
    pub field: FieldSpec,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
}

impl FixtureResult {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for FixtureResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "ok" } else { "FAILED" };
        writeln!(f, "{} ({}): {status}", self.id, self.id.title())?;
        for c in &self.checks {
            let mark = if c.pass { "ok" } else { "FAIL" };
            if c.pass {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.observed)?;
            } else {
                writeln!(f, "  [{mark}] {}: expected {}, observed {}", c.name, c.expected, c.observed)?;
            }
        }
        Ok(())
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + fmt::Display>(&mut self, name: &str, expected: T, observed: T) {
        self.0.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass: expected == observed,
        });
    }

    fn ideal(&mut self, name: &str, expected: &MonomialIdeal, observed: &MonomialIdeal, names: &[String]) {
        self.0.push(Check {
            name: name.to_string(),
            expected: expected.format(names),
            observed: observed.format(names),
            pass: expected == observed,
        });
    }

    fn table(&mut self, name: &str, expected: &[(usize, usize, usize)], observed: Vec<(usize, usize, usize)>) {
        let show = |t: &[(usize, usize, usize)]| {
            t.iter().map(|(i, j, r)| format!("b{i},{j}={r}")).collect::<Vec<_>>().join(" ")
        };
        self.0.push(Check {
            name: name.to_string(),
            expected: show(expected),
            observed: show(&observed),
            pass: expected == observed.as_slice(),
        });
    }
}

fn words(names: &[String], ws: &[&str]) -> Result<Vec<VarSet>> {
    ws.iter().map(|w| parse_monomial_word(w, names).map(|m| m.support())).collect()
}

fn ideal_of(ambient: usize, names: &[String], ws: &[&str]) -> Result<MonomialIdeal> {
    MonomialIdeal::new(ambient, words(names, ws)?.into_iter().map(crate::Monomial))
}

fn listed_order(ideal: &MonomialIdeal, names: &[String], ws: &[&str]) -> Result<QuotientOrder> {
    QuotientOrder::from_monomials(ideal.clone(), &words(names, ws)?)
}

pub fn run_fixture(id: FixtureId, field: FieldSpec) -> Result<FixtureResult> {
    let start = Instant::now();
    let mut c = Checks(Vec::new());
    match id {
        FixtureId::Ex38 => ex38(&mut c, field)?,
        FixtureId::Ex39 => ex39(&mut c, field)?,
        FixtureId::Ex43 => ex43(&mut c, field)?,
        FixtureId::C5Order => c5_order(&mut c, field)?,
        FixtureId::VillarrealEdge => villarreal(&mut c, field)?,
    }
    Ok(FixtureResult { id, field, checks: c.0, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 })
}

pub fn run_all_fixtures(field: FieldSpec) -> Result<Vec<FixtureResult>> {
    FixtureId::ALL.into_iter().map(|id| run_fixture(id, field)).collect()
}

fn ex38(c: &mut Checks, field: FieldSpec) -> Result<()> {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4), (4, 5)])?;
    let s = VarSet::singleton(5);
    let (rest, _) = g.induced_subgraph_with_map(g.vertices().difference(s))?;
    let names = rest.labels().to_vec();
    let listed = ["x1x3x4", "x2x3x4", "x1x3x5", "x2x4x5"];
    let rest_dual = alexander_dual_of_edge_ideal(&rest);
    c.ideal("dual of G\\S", &ideal_of(rest.vertex_count(), &names, &listed)?, &rest_dual, &names);
    c.eq("listed order of G\\S dual verifies", true, verify_order(&listed_order(&rest_dual, &names, &listed)?)?);
    c.eq("G\\S is SCM", true, is_sequentially_cm(&rest, field).value);

    let (w, _) = g.add_whiskers(s)?;
    let names = w.labels().to_vec();
    let dual = alexander_dual_of_edge_ideal(&w);
    let expected =
        ideal_of(w.vertex_count(), &names, &["x1x3x4x6", "x2x3x4x6", "x1x3x5x6", "x2x4x5x6", "x1x3x5x7", "x2x4x5x7"])?;
    c.ideal("dual of G with whisker", &expected, &dual, &names);
    c.table("graded Betti numbers", &[(0, 4, 6), (1, 5, 5), (1, 6, 1), (2, 7, 1)], betti_numbers(&dual, field).graded().triples());
    c.eq("G with whisker is SCM", false, is_sequentially_cm(&w, field).value);
    Ok(())
}

fn ex39(c: &mut Checks, field: FieldSpec) -> Result<()> {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4), (1, 5), (2, 5)])?;
    let s = VarSet::singleton(5);
    let (w, _) = g.add_whiskers(s)?;
    let names = w.labels().to_vec();
    let listed = ["x1x3x4x6", "x2x3x4x6", "x1x3x5x6", "x2x4x5x6", "x2x3x4x7", "x1x2x3x5x7"];
    let dual = alexander_dual_of_edge_ideal(&w);
    c.ideal("dual of G with whisker", &ideal_of(w.vertex_count(), &names, &listed)?, &dual, &names);
    c.eq("listed mixed-degree order verifies", true, verify_order(&listed_order(&dual, &names, &listed)?)?);
    c.eq("G with whisker is SCM", true, is_sequentially_cm(&w, field).value);
    Ok(())
}

fn ex43(c: &mut Checks, field: FieldSpec) -> Result<()> {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])?.with_labels(["y1", "y2", "y3", "y4", "y"])?;
    let s = VarSet::singleton(4);
    let (w, _) = g.add_whiskers(s)?;
    let w = w.with_labels(["y1", "y2", "y3", "y4", "y", "x"])?;
    let names = w.labels().to_vec();
    let dual = alexander_dual_of_edge_ideal(&w);
    c.ideal("dual of G with whisker", &ideal_of(w.vertex_count(), &names, &["y1y3y", "y2y4y", "y1y3x", "y1y2y4x"])?, &dual, &names);
    let component = dual_component(&w, 3);
    c.table("graded Betti numbers in degree 3", &[(0, 3, 3), (1, 4, 1), (1, 5, 1)], betti_numbers(&component, field).graded().triples());
    c.eq("G with whisker is SCM", false, is_sequentially_cm(&w, field).value);
    c.eq("a sufficient condition applies", false, sufficient_scm(&g, s)?.is_some());
    match necessary_scm(&g, s, field)? {
        Some(witness) => {
            let lift = koszul_lift_details(&g, s, &witness)?;
            c.eq("nonlinear syzygy of G\\S lifts", true, lift.holds());
        }
        None => c.eq("G\\S has a nonlinear syzygy", true, false),
    }
    Ok(())
}

fn c5_order(c: &mut Checks, field: FieldSpec) -> Result<()> {
    let g = Graph::cycle(5)?;
    let names = g.labels().to_vec();
    let listed = ["x1x2x4", "x1x3x4", "x1x3x5", "x2x3x5", "x2x4x5"];
    let dual = alexander_dual_of_edge_ideal(&g);
    c.ideal("dual of C5", &ideal_of(5, &names, &listed)?, &dual, &names);
    let q = listed_order(&dual, &names, &listed)?;
    c.eq("listed order verifies", true, verify_order(&q)?);
    let formula = betti_from_quotient_order(&q)?.triples();
    c.table("Betti numbers from the order", &[(0, 3, 5), (1, 4, 5), (2, 5, 1)], formula.clone());
    c.table("Betti numbers by homology", &formula, betti_numbers(&dual, field).graded().triples());
    let v = is_sequentially_cm(&g, field);
    c.eq("C5 is SCM with certificates", true, v.value && matches!(v.evidence, Evidence::QuotientCertificates(_)));
    c.eq("C5 is CM", true, is_cm(&g, field).value);
    Ok(())
}

fn villarreal(c: &mut Checks, field: FieldSpec) -> Result<()> {
    let path = Graph::path(3)?.with_labels(["x", "y1", "y2"])?;
    c.eq("x-y1-y2 is SCM", true, is_sequentially_cm(&path, field).value);
    let v = is_cm(&path, field);
    c.eq("x-y1-y2 is CM", false, v.value);
    c.eq("x-y1-y2 is unmixed", false, v.unmixed == Some(true));
    let edge = Graph::path(2)?;
    let (p4, _) = edge.add_whiskers(edge.vertices())?;
    c.eq("whiskered edge is CM", true, is_cm(&p4, field).value);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals] {
            for r in run_all_fixtures(field).unwrap() {
                assert!(r.ok(), "{r}");
            }
        }
    }

    #[test]
    fn ids_parse() {
        for id in FixtureId::ALL {
            assert_eq!(id.name().parse::<FixtureId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.name()));
        }
        assert_eq!("ex4.3".parse::<FixtureId>().unwrap(), FixtureId::Ex43);
        assert!("EX9.9".parse::<FixtureId>().is_err());
    }

    #[test]
    fn failing_check_is_reported() {
        let mut c = Checks(Vec::new());
        c.eq("x", 1, 2);
        let r = FixtureResult { id: FixtureId::Ex38, field: FieldSpec::GF2, checks: c.0, elapsed_ms: 0.0 };
        assert!(!r.ok());
        assert!(r.to_string().contains("expected 1, observed 2"));
    }
}
