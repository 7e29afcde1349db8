//! Labelings, certificates, and the coprimality verifier.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::graphs::{GraphFamily, GraphInstance, VertexId};
use crate::numtheory;

/// A vertex label: a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Label(u64);

impl Label {
    pub fn new(value: u64) -> Option<Label> {
        (value >= 1).then_some(Label(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Label {
    type Error = String;
    fn try_from(v: u64) -> Result<Label, String> {
        Label::new(v).ok_or_else(|| "label must be >= 1".to_string())
    }
}

impl From<Label> for u64 {
    fn from(l: Label) -> u64 {
        l.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Which construction produced a labeling.
///
/// The identifiers name the labeling rules by their hypothesis family;
/// they are stable strings in the JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum TheoremId {
    /// Prism rule for prime `n`.
    T3_1,
    /// Prism rule for prime `n + 2`.
    T3_2,
    /// Prism rule for prime `2n + 1`.
    T3_3,
    /// Prism rule for prime `2n - 1`.
    T3_4,
    /// Prism fallback driven by a prime pair witness `s`.
    T3_6,
    /// Prism rule for prime `n + 4`.
    A_n4,
    /// Prism rule for prime `n - 2` (`n > 5`).
    A_nm2,
    /// Prism rule for prime `n - 4` (`n > 7`).
    A_nm4,
    /// Prism rule for prime `2n + 3`.
    A_2n3,
    /// Prism rule for prime `2n - 3`.
    A_2nm3,
    /// Prism rule for prime `2n - 5`.
    A_2nm5,
    /// Prism rule for prime `n + 6`.
    A_n6,
    /// Block construction for `GP(5m, 2)`.
    L4_1,
    /// Residue-tail construction for `GP(n, 2)`, any `n >= 5`.
    T4_2,
    /// Recursive construction for `Y(3, n)`.
    T5_1,
    /// Table construction for `Y(5, n)` with period-420 extension.
    T5_2,
    /// Construction for `GP*(2k, k)`.
    T6_1,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T3_1 => "T3_1",
            TheoremId::T3_2 => "T3_2",
            TheoremId::T3_3 => "T3_3",
            TheoremId::T3_4 => "T3_4",
            TheoremId::T3_6 => "T3_6",
            TheoremId::A_n4 => "A_n4",
            TheoremId::A_nm2 => "A_nm2",
            TheoremId::A_nm4 => "A_nm4",
            TheoremId::A_2n3 => "A_2n3",
            TheoremId::A_2nm3 => "A_2nm3",
            TheoremId::A_2nm5 => "A_2nm5",
            TheoremId::A_n6 => "A_n6",
            TheoremId::L4_1 => "L4_1",
            TheoremId::T4_2 => "T4_2",
            TheoremId::T5_1 => "T5_1",
            TheoremId::T5_2 => "T5_2",
            TheoremId::T6_1 => "T6_1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certificate naming the rule and case that produced a labeling, with
/// optional witness data (the `s` of the prime-pair fallback).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: TheoremId,
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<u64>,
}

impl Certificate {
    pub fn new(theorem: TheoremId, case: impl Into<String>) -> Self {
        Certificate {
            theorem,
            case: case.into(),
            witness: None,
        }
    }

    pub fn with_witness(theorem: TheoremId, case: impl Into<String>, witness: u64) -> Self {
        Certificate {
            theorem,
            case: case.into(),
            witness: Some(witness),
        }
    }
}

/// An injective assignment of labels to vertices, with the maximum
/// label cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    entries: Vec<(VertexId, Label)>, // sorted by vertex id
    max_label: Label,
}

impl Labeling {
    /// Build from (vertex, label) pairs. Panics on an empty input or a
    /// repeated vertex; duplicate *labels* are representable so the
    /// verifier can report them.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, Label)>) -> Labeling {
        let mut entries: Vec<(VertexId, Label)> = pairs.into_iter().collect();
        assert!(!entries.is_empty(), "labeling must assign at least one vertex");
        entries.sort_by_key(|&(v, _)| v);
        for w in entries.windows(2) {
            assert!(w[0].0 != w[1].0, "vertex {} assigned twice", w[0].0);
        }
        let max_label = entries.iter().map(|&(_, l)| l).max().unwrap();
        Labeling { entries, max_label }
    }

    pub fn from_u64_pairs(pairs: impl IntoIterator<Item = (VertexId, u64)>) -> Labeling {
        Labeling::from_pairs(pairs.into_iter().map(|(v, l)| {
            let label = Label::new(l).unwrap_or_else(|| panic!("label {l} for {v} must be >= 1"));
            (v, label)
        }))
    }

    pub fn get(&self, v: VertexId) -> Option<Label> {
        self.entries
            .binary_search_by_key(&v, |&(id, _)| id)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn max_label(&self) -> u64 {
        self.max_label.get()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Label)> + '_ {
        self.entries.iter().copied()
    }

    /// Labels arranged by the graph's vertex order, or the first vertex
    /// missing an assignment. Both lists are sorted by vertex id, so
    /// this is a single merge pass.
    pub fn dense(&self, g: &GraphInstance) -> Result<Vec<u64>, VertexId> {
        let mut out = Vec::with_capacity(g.vertices.len());
        let mut entries = self.entries.iter().peekable();
        for &v in &g.vertices {
            loop {
                match entries.peek() {
                    Some(&&(id, label)) if id == v => {
                        out.push(label.get());
                        entries.next();
                        break;
                    }
                    Some(&&(id, _)) if id < v => {
                        entries.next();
                    }
                    _ => return Err(v),
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("labeling does not assign vertex {0}")]
    MissingVertex(VertexId),
}

/// One edge whose endpoint labels share a factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeViolation {
    pub a: VertexId,
    pub b: VertexId,
    pub label_a: u64,
    pub label_b: u64,
    pub gcd: u64,
}

/// Outcome of checking a labeling against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<EdgeViolation>,
    pub duplicate_labels: Vec<(u64, VertexId, VertexId)>,
    /// Labels are exactly `{1..|V|}`.
    pub prime: bool,
}

impl VerificationReport {
    /// Empty report: the labeling is a coprime labeling.
    pub fn is_coprime(&self) -> bool {
        self.violations.is_empty() && self.duplicate_labels.is_empty()
    }
}

/// Check that `l` labels `g` injectively with relatively prime labels
/// on every edge. Errors if any vertex of `g` is unassigned; all
/// violations are collected, not just the first.
pub fn verify(g: &GraphInstance, l: &Labeling) -> Result<VerificationReport, VerifyError> {
    let dense = l.dense(g).map_err(VerifyError::MissingVertex)?;

    let mut duplicate_labels = Vec::new();
    let mut by_label: Vec<(u64, u32)> = dense
        .iter()
        .enumerate()
        .map(|(idx, &label)| (label, idx as u32))
        .collect();
    by_label.sort_unstable();
    for w in by_label.windows(2) {
        if w[0].0 == w[1].0 {
            duplicate_labels.push((
                w[0].0,
                g.vertices[w[0].1 as usize],
                g.vertices[w[1].1 as usize],
            ));
        }
    }

    let mut violations = Vec::new();
    for &(a, b) in &g.edges {
        let (la, lb) = (dense[a as usize], dense[b as usize]);
        if !numtheory::coprime(la, lb) {
            violations.push(EdgeViolation {
                a: g.vertices[a as usize],
                b: g.vertices[b as usize],
                label_a: la,
                label_b: lb,
                gcd: numtheory::gcd(la, lb),
            });
        }
    }

    let n = g.vertex_count() as u64;
    let prime = duplicate_labels.is_empty() && dense.iter().all(|&l| l <= n);

    Ok(VerificationReport {
        violations,
        duplicate_labels,
        prime,
    })
}

/// DOT rendering with labels as node text.
pub fn to_dot_labeled(g: &GraphInstance, l: &Labeling) -> Result<String, VerifyError> {
    use std::fmt::Write;
    let dense = l.dense(g).map_err(VerifyError::MissingVertex)?;
    let mut out = String::new();
    let _ = writeln!(out, "graph {{");
    for (idx, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", v, dense[idx]);
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(
            out,
            "  {} -- {};",
            g.vertices[a as usize], g.vertices[b as usize]
        );
    }
    out.push_str("}\n");
    Ok(out)
}

/// One labeled vertex in the JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexLabel {
    pub id: String,
    pub label: u64,
}

/// Family parameters in the JSON document.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
}

/// Serializable labeling document:
/// `{ family, params, certificate, max_label, vertices, verified }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub family: String,
    pub params: FamilyParams,
    pub certificate: Certificate,
    pub max_label: u64,
    pub vertices: Vec<VertexLabel>,
    pub verified: bool,
}

pub fn family_params(family: GraphFamily) -> FamilyParams {
    let mut p = FamilyParams::default();
    match family {
        GraphFamily::Prism(n) | GraphFamily::Gp2(n) => p.n = Some(n),
        GraphFamily::StackedPrism(m, n) => {
            p.m = Some(m);
            p.n = Some(n);
        }
        GraphFamily::GpStar(k) => p.k = Some(k),
        GraphFamily::Petersen(n, k) => {
            p.n = Some(n);
            p.k = Some(k);
        }
    }
    p
}

/// Parse a family back out of a JSON document header.
pub fn family_from_params(name: &str, params: FamilyParams) -> Option<GraphFamily> {
    match name {
        "prism" => Some(GraphFamily::Prism(params.n?)),
        "gp2" => Some(GraphFamily::Gp2(params.n?)),
        "stacked_prism" => Some(GraphFamily::StackedPrism(params.m?, params.n?)),
        "gpstar" => Some(GraphFamily::GpStar(params.k?)),
        "gp" => Some(GraphFamily::Petersen(params.n?, params.k?)),
        _ => None,
    }
}

impl LabelingDocument {
    pub fn new(g: &GraphInstance, l: &Labeling, certificate: Certificate, verified: bool) -> Self {
        LabelingDocument {
            family: g.family.name().to_string(),
            params: family_params(g.family),
            certificate,
            max_label: l.max_label(),
            vertices: l
                .iter()
                .map(|(v, label)| VertexLabel {
                    id: v.to_string(),
                    label: label.get(),
                })
                .collect(),
            verified,
        }
    }

    pub fn graph_family(&self) -> Option<GraphFamily> {
        family_from_params(&self.family, self.params)
    }

    /// Rebuild the labeling keyed by parsed vertex ids.
    pub fn labeling(&self) -> Option<Labeling> {
        let mut pairs = Vec::with_capacity(self.vertices.len());
        for vl in &self.vertices {
            pairs.push((parse_vertex_id(&vl.id)?, Label::new(vl.label)?));
        }
        Some(Labeling::from_pairs(pairs))
    }
}

/// Parse "v12", "u3", or "x4_2" back into a vertex id.
pub fn parse_vertex_id(s: &str) -> Option<VertexId> {
    let (head, rest) = s.split_at_checked(1)?;
    match head {
        "v" => rest.parse().ok().map(VertexId::Outer),
        "u" => rest.parse().ok().map(VertexId::Inner),
        "x" => {
            let (layer, pos) = rest.split_once('_')?;
            Some(VertexId::Grid {
                layer: layer.parse().ok()?,
                pos: pos.parse().ok()?,
            })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build;

    fn prism3_labeling(u_labels: [u64; 3]) -> Labeling {
        Labeling::from_u64_pairs([
            (VertexId::Outer(1), 1),
            (VertexId::Outer(2), 2),
            (VertexId::Outer(3), 3),
            (VertexId::Inner(1), u_labels[0]),
            (VertexId::Inner(2), u_labels[1]),
            (VertexId::Inner(3), u_labels[2]),
        ])
    }

    #[test]
    fn verify_accepts_valid_labeling() {
        let g = build(GraphFamily::Prism(3)).unwrap();
        let l = prism3_labeling([4, 5, 7]);
        let report = verify(&g, &l).unwrap();
        assert!(report.is_coprime());
        assert!(!report.prime); // max label 7 > 6 vertices
    }

    #[test]
    fn verify_reports_duplicates() {
        let g = build(GraphFamily::Prism(3)).unwrap();
        let l = prism3_labeling([2, 5, 7]);
        let report = verify(&g, &l).unwrap();
        assert_eq!(report.duplicate_labels.len(), 1);
        assert_eq!(report.duplicate_labels[0].0, 2);
        assert!(!report.is_coprime());
    }

    #[test]
    fn verify_reports_gcd_violations() {
        let g = build(GraphFamily::Prism(3)).unwrap();
        let l = prism3_labeling([4, 6, 7]); // u1=4 adjacent to u2=6
        let report = verify(&g, &l).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.gcd == 2 && v.label_a.min(v.label_b) == 4));
    }

    #[test]
    fn verify_detects_prime_labeling() {
        let g = build(GraphFamily::Prism(4)).unwrap();
        // A prime labeling of the cube graph.
        let l = Labeling::from_u64_pairs([
            (VertexId::Outer(1), 1),
            (VertexId::Outer(2), 2),
            (VertexId::Outer(3), 3),
            (VertexId::Outer(4), 8),
            (VertexId::Inner(1), 6),
            (VertexId::Inner(2), 5),
            (VertexId::Inner(3), 4),
            (VertexId::Inner(4), 7),
        ]);
        let report = verify(&g, &l).unwrap();
        assert!(report.is_coprime());
        assert!(report.prime);
    }

    #[test]
    fn verify_errors_on_partial_labeling() {
        let g = build(GraphFamily::Prism(3)).unwrap();
        let l = Labeling::from_u64_pairs([(VertexId::Outer(1), 1)]);
        assert_eq!(
            verify(&g, &l),
            Err(VerifyError::MissingVertex(VertexId::Outer(2)))
        );
    }

    #[test]
    fn vertex_id_round_trip() {
        for v in [
            VertexId::Outer(17),
            VertexId::Inner(3),
            VertexId::Grid { layer: 4, pos: 2 },
        ] {
            assert_eq!(parse_vertex_id(&v.to_string()), Some(v));
        }
        assert_eq!(parse_vertex_id("w9"), None);
        assert_eq!(parse_vertex_id(""), None);
    }

    #[test]
    fn document_round_trip() {
        let g = build(GraphFamily::Prism(3)).unwrap();
        let l = prism3_labeling([4, 5, 7]);
        let doc = LabelingDocument::new(&g, &l, Certificate::new(TheoremId::T3_1, "n prime"), true);
        let json = serde_json::to_string(&doc).unwrap();
        let back: LabelingDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.graph_family(), Some(GraphFamily::Prism(3)));
        let l2 = back.labeling().unwrap();
        assert_eq!(l2, l);
        assert_eq!(back.certificate.theorem, TheoremId::T3_1);
    }
}
