//! Cofibration detection and the closure properties built on it.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::digraph::{gen_j, DiGraph, GraphMap, Heights, Vertex, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::pathhom::{homology_map_report, HomologyMapReport};

/// Heights over `A` together with the projection onto `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectingDecomposition {
    heights: Heights,
    projection: Vec<Option<Vertex>>,
}

impl ProjectingDecomposition {
    pub fn height(&self, v: Vertex) -> Option<usize> {
        self.heights.get(v)
    }

    pub fn heights(&self) -> &Heights {
        &self.heights
    }

    /// Closest vertex of `A`, defined on the vertices that reach `A`.
    pub fn project(&self, v: Vertex) -> Option<Vertex> {
        self.projection[v]
    }

    pub fn projection(&self) -> &[Option<Vertex>] {
        &self.projection
    }

    pub fn reaching(&self) -> VertexSubset {
        self.heights.reaching()
    }

    /// For each edge `x -> y` among vertices reaching `A` with
    /// `h(x) >= h(y)`: equal heights force `π x`, `π y` to be related, and
    /// `h(x) = h(y) + 1` forces `π x = π y`.
    pub fn edge_dichotomy_holds(&self, g: &DiGraph) -> bool {
        g.edges().all(|(x, y)| {
            let (Some(hx), Some(hy)) = (self.height(x), self.height(y)) else {
                return true;
            };
            let (px, py) = (self.projection[x].unwrap(), self.projection[y].unwrap());
            if hx == hy {
                g.related(px, py)
            } else if hx == hy + 1 {
                px == py
            } else {
                hx < hy
            }
        })
    }

    pub fn to_json(&self, g: &DiGraph) -> Value {
        let mut h = serde_json::Map::new();
        let mut p = serde_json::Map::new();
        for v in g.vertices() {
            if let Some(k) = self.height(v) {
                h.insert(g.label(v).into(), json!(k));
                p.insert(g.label(v).into(), json!(g.label(self.projection[v].unwrap())));
            }
        }
        json!({ "heights": h, "projection": p })
    }
}

/// Why an inclusion is not a cofibration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofibFailure {
    NotInduced { from: Vertex, to: Vertex },
    NotInjective { vertex: Vertex },
    EdgeOut { from: Vertex, to: Vertex },
    NoUniqueClosest { vertex: Vertex, candidates: Vec<Vertex> },
    MetricViolation { vertex: Vertex, target: Vertex },
}

impl CofibFailure {
    pub fn kind(&self) -> &'static str {
        match self {
            CofibFailure::NotInduced { .. } => "not-induced",
            CofibFailure::NotInjective { .. } => "not-injective",
            CofibFailure::EdgeOut { .. } => "edge-out",
            CofibFailure::NoUniqueClosest { .. } => "no-unique-closest",
            CofibFailure::MetricViolation { .. } => "metric-violation",
        }
    }

    /// Witness fields, with vertices named by their labels in `g`.
    pub fn to_json(&self, g: &DiGraph) -> Value {
        let l = |v: &Vertex| g.label(*v).to_string();
        match self {
            CofibFailure::NotInduced { from, to } | CofibFailure::EdgeOut { from, to } => {
                json!({ "kind": self.kind(), "from": l(from), "to": l(to) })
            }
            CofibFailure::NotInjective { vertex } => json!({ "kind": self.kind(), "vertex": l(vertex) }),
            CofibFailure::NoUniqueClosest { vertex, candidates } => json!({
                "kind": self.kind(),
                "vertex": l(vertex),
                "candidates": candidates.iter().map(l).collect::<Vec<_>>(),
            }),
            CofibFailure::MetricViolation { vertex, target } => {
                json!({ "kind": self.kind(), "vertex": l(vertex), "target": l(target) })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofibVerdict {
    pub failure: Option<CofibFailure>,
    pub decomposition: Option<ProjectingDecomposition>,
}

impl CofibVerdict {
    pub fn is_cofibration(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(f: CofibFailure) -> Self {
        CofibVerdict {
            failure: Some(f),
            decomposition: None,
        }
    }

    pub fn to_json(&self, g: &DiGraph) -> Value {
        json!({
            "is_cofibration": self.is_cofibration(),
            "failure": self.failure.as_ref().map_or(Value::Null, |f| f.to_json(g)),
            "decomposition": self.decomposition.as_ref().map_or(Value::Null, |d| d.to_json(g)),
        })
    }
}

/// An edge leaving `a`, if any.
pub fn edge_out_witness(g: &DiGraph, a: &VertexSubset) -> Option<(Vertex, Vertex)> {
    g.first_edge_out(a)
}

pub fn no_edges_out(g: &DiGraph, a: &VertexSubset) -> bool {
    g.first_edge_out(a).is_none()
}

/// Computes heights and the closest-vertex projection, then checks that a
/// minimal path to every reachable vertex of `A` can pass through the
/// projection.
pub fn projecting_decomposition(
    g: &DiGraph,
    a: &VertexSubset,
) -> Result<std::result::Result<ProjectingDecomposition, CofibFailure>> {
    let heights = g.heights(a)?;
    let mut projection = vec![None; g.vertex_count()];
    let mut from_a: HashMap<Vertex, Vec<Option<usize>>> = HashMap::new();
    for x in g.vertices() {
        let Some(h) = heights.get(x) else { continue };
        if h == 0 {
            projection[x] = Some(x);
            continue;
        }
        let dist = g.distances_from(x);
        let closest: Vec<Vertex> = a
            .members()
            .iter()
            .copied()
            .filter(|&b| dist[b] == Some(h))
            .collect();
        if closest.len() != 1 {
            return Ok(Err(CofibFailure::NoUniqueClosest {
                vertex: x,
                candidates: closest,
            }));
        }
        let p = closest[0];
        projection[x] = Some(p);
        let dp = from_a.entry(p).or_insert_with(|| g.distances_from(p));
        for &b in a.members() {
            let Some(d) = dist[b] else { continue };
            if dp[b].map(|e| h + e) != Some(d) {
                return Ok(Err(CofibFailure::MetricViolation { vertex: x, target: b }));
            }
        }
    }
    let pd = ProjectingDecomposition {
        heights,
        projection,
    };
    assert!(
        pd.edge_dichotomy_holds(g),
        "projecting decomposition violates the edge dichotomy"
    );
    Ok(Ok(pd))
}

/// Full cofibration test for the induced subgraph on `a`.
pub fn check_cofibration(g: &DiGraph, a: &VertexSubset) -> Result<CofibVerdict> {
    a.check_parent(g)?;
    if let Some((u, v)) = g.first_edge_out(a) {
        return Ok(CofibVerdict::fail(CofibFailure::EdgeOut { from: u, to: v }));
    }
    Ok(match projecting_decomposition(g, a)? {
        Ok(d) => CofibVerdict {
            failure: None,
            decomposition: Some(d),
        },
        Err(f) => CofibVerdict::fail(f),
    })
}

/// Image of an embedding as a vertex subset, or the reason it is not an
/// induced subgraph inclusion. With `coerce_induced`, missing edges are
/// ignored and the induced closure is used instead.
pub fn inclusion_subset(
    map: &GraphMap,
    coerce_induced: bool,
) -> std::result::Result<VertexSubset, CofibFailure> {
    let (dom, cod) = (map.domain(), map.codomain());
    let mut seen = vec![None; cod.vertex_count()];
    for v in dom.vertices() {
        let w = map.apply(v);
        if seen[w].is_some() {
            return Err(CofibFailure::NotInjective { vertex: w });
        }
        seen[w] = Some(v);
    }
    if !coerce_induced {
        for u in dom.vertices() {
            for v in dom.vertices() {
                if u != v && cod.has_edge(map.apply(u), map.apply(v)) && !dom.has_edge(u, v) {
                    return Err(CofibFailure::NotInduced {
                        from: map.apply(u),
                        to: map.apply(v),
                    });
                }
            }
        }
    }
    Ok(VertexSubset::from_mask(seen.iter().map(Option::is_some).collect()))
}

/// Cofibration test for an arbitrary map; non-embeddings fail early.
pub fn check_map_cofibration(map: &GraphMap, coerce_induced: bool) -> CofibVerdict {
    match inclusion_subset(map, coerce_induced) {
        Ok(a) => check_cofibration(map.codomain(), &a).expect("subset of the codomain"),
        Err(f) => CofibVerdict::fail(f),
    }
}

/// Verdict for the composite `A -> B -> X` of nested subsets of `X`.
pub fn compose_cofibrations(g: &DiGraph, a: &VertexSubset, b: &VertexSubset) -> Result<CofibVerdict> {
    if !a.is_subset_of(b) {
        return Err(Error::Diagram("inner subgraph is not contained in the middle one".into()));
    }
    check_cofibration(g, a)
}

/// A retract of `A -> X` onto `A' -> X'`: `section: X' -> X` and
/// `retraction: X -> X'` with `retraction ∘ section = id`, each carrying the
/// subgraphs into one another.
#[derive(Clone, Debug)]
pub struct RetractDiagram {
    pub outer_sub: VertexSubset,
    pub inner_sub: VertexSubset,
    pub section: GraphMap,
    pub retraction: GraphMap,
}

/// Checks the retract diagram and re-runs the cofibration test on the
/// retract leg.
pub fn verify_retract(d: &RetractDiagram) -> Result<CofibVerdict> {
    let comp = d.section.then(&d.retraction)?;
    if comp.vertex_map() != GraphMap::identity(d.section.domain()).vertex_map() {
        return Err(Error::Diagram("retraction does not split the section".into()));
    }
    let inner = d.section.domain();
    let outer = d.section.codomain();
    d.inner_sub.check_parent(inner)?;
    d.outer_sub.check_parent(outer)?;
    for &v in d.inner_sub.members() {
        if !d.outer_sub.contains(d.section.apply(v)) {
            return Err(Error::Diagram("section does not carry the subgraph into the subgraph".into()));
        }
    }
    for &v in d.outer_sub.members() {
        if !d.inner_sub.contains(d.retraction.apply(v)) {
            return Err(Error::Diagram("retraction does not carry the subgraph into the subgraph".into()));
        }
    }
    check_cofibration(inner, &d.inner_sub)
}

/// Subset `A □ B` of `X □ Y`, with vertex `(x, y)` at index `x * |Y| + y`.
pub fn box_subset(x: &DiGraph, a: &VertexSubset, y: &DiGraph, b: &VertexSubset) -> VertexSubset {
    let m = y.vertex_count();
    VertexSubset::from_mask(
        (0..x.vertex_count() * m)
            .map(|i| a.contains(i / m) && b.contains(i % m))
            .collect(),
    )
}

/// Whether the decomposition of a box product is the product of the factor
/// decompositions.
pub fn box_projection_is_product(
    prod: &ProjectingDecomposition,
    left: &ProjectingDecomposition,
    right: &ProjectingDecomposition,
    right_size: usize,
) -> bool {
    prod.projection().iter().enumerate().all(|(i, p)| {
        let (x, y) = (i / right_size, i % right_size);
        let expect = match (left.project(x), right.project(y)) {
            (Some(px), Some(py)) => Some(px * right_size + py),
            _ => None,
        };
        *p == expect
    })
}

/// The cylinder `X □ J` with its two ends and the collapse onto `X`.
#[derive(Clone, Debug)]
pub struct CodiagonalFactorization {
    pub base: DiGraph,
    pub cylinder: DiGraph,
    /// `X □ ∂J` inside the cylinder.
    pub ends: VertexSubset,
    pub collapse: GraphMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodiagonalReport {
    pub cutoff: usize,
    pub ends_are_two_copies: bool,
    pub inclusion_is_cofibration: bool,
    pub composite_is_codiagonal: bool,
    pub collapse: HomologyMapReport,
    pub verified: bool,
}

pub fn codiagonal_factorization(x: &DiGraph) -> CodiagonalFactorization {
    let j = gen_j();
    let cylinder = x.box_product(&j);
    let boundary = VertexSubset::from_labels(&j, &["-2", "2"]).expect("J has its ends");
    let ends = box_subset(x, &VertexSubset::full(x), &j, &boundary);
    let collapse = GraphMap::identity(x).box_product(&GraphMap::to_point(&j));
    let collapse = GraphMap::new(
        cylinder.clone(),
        x.clone(),
        collapse.vertex_map().to_vec(),
    )
    .expect("projection of a box product");
    CodiagonalFactorization {
        base: x.clone(),
        cylinder,
        ends,
        collapse,
    }
}

impl CodiagonalFactorization {
    pub fn verify<F: Field>(&self, cutoff: usize) -> Result<CodiagonalReport> {
        let ends_graph = self.cylinder.induced(&self.ends);
        let two = self.base.disjoint_union(&self.base);
        let ends_are_two_copies = crate::digraph::is_isomorphic(&ends_graph, &two);
        let inclusion_is_cofibration = check_cofibration(&self.cylinder, &self.ends)?.is_cofibration();
        // Each end vertex (x, ±2) must land on x.
        let j = self.cylinder.vertex_count() / self.base.vertex_count().max(1);
        let composite_is_codiagonal = self
            .ends
            .members()
            .iter()
            .all(|&v| self.collapse.apply(v) == v / j);
        let collapse = homology_map_report::<F>(&self.collapse, cutoff)?;
        let verified = ends_are_two_copies
            && inclusion_is_cofibration
            && composite_is_codiagonal
            && collapse.is_iso;
        Ok(CodiagonalReport {
            cutoff,
            ends_are_two_copies,
            inclusion_is_cofibration,
            composite_is_codiagonal,
            collapse,
            verified,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::*;
    use crate::field::Rational;

    #[test]
    fn interval_ends() {
        let j = gen_j();
        let bd = VertexSubset::from_labels(&j, &["-2", "2"]).unwrap();
        let v = check_cofibration(&j, &bd).unwrap();
        assert!(v.is_cofibration());
        let d = v.decomposition.unwrap();
        let p = |l: &str| j.label(d.project(j.vertex(l).unwrap()).unwrap()).to_string();
        assert_eq!(p("-1"), "-2");
        assert_eq!(p("1"), "2");
        assert_eq!(d.project(j.vertex("0").unwrap()), None);
    }

    #[test]
    fn the_two_run_cycle_fails_each_condition() {
        let g = gen_mn_cycle(3, 1).unwrap();
        let top = VertexSubset::from_labels(&g, &["2", "3"]).unwrap();
        assert!(no_edges_out(&g, &top));
        let v = check_cofibration(&g, &top).unwrap();
        assert_eq!(v.failure.as_ref().map(CofibFailure::kind), Some("metric-violation"));
        assert!(matches!(
            v.failure,
            Some(CofibFailure::MetricViolation { vertex: 0, .. })
        ));

        let bottom = VertexSubset::from_labels(&g, &["0", "1"]).unwrap();
        let (u, w) = edge_out_witness(&g, &bottom).unwrap();
        assert!(bottom.contains(u) && !bottom.contains(w));
        let v = check_cofibration(&g, &bottom).unwrap();
        assert_eq!(v.failure.as_ref().map(CofibFailure::kind), Some("edge-out"));
    }

    #[test]
    fn trivial_cases() {
        let g = gen_suspension_alt4();
        let all = VertexSubset::full(&g);
        assert!(no_edges_out(&g, &all));
        let v = check_cofibration(&g, &all).unwrap();
        let d = v.decomposition.unwrap();
        assert!(g.vertices().all(|x| d.project(x) == Some(x)));
        assert!(check_cofibration(&g, &VertexSubset::empty(&g)).unwrap().is_cofibration());
    }

    #[test]
    fn two_closest_vertices() {
        // x -> a, x -> b with A = {a, b}
        let g = DiGraph::from_indices(3, &[(0, 1), (0, 2)]);
        let a = VertexSubset::from_indices(&g, [1, 2]).unwrap();
        let v = check_cofibration(&g, &a).unwrap();
        assert_eq!(v.failure.as_ref().map(CofibFailure::kind), Some("no-unique-closest"));
    }

    #[test]
    fn embeddings() {
        let sq = gen_mn_cycle(2, 2).unwrap();
        let edgeless = DiGraph::from_indices(2, &[]);
        let f = GraphMap::new(edgeless.clone(), sq.clone(), vec![1, 2]).unwrap();
        assert!(matches!(
            check_map_cofibration(&f, false).failure,
            Some(CofibFailure::NotInduced { .. })
        ));
        assert!(check_map_cofibration(&f, true).is_cofibration());
        let g = GraphMap::new(edgeless, sq, vec![2, 2]).unwrap();
        assert!(matches!(
            check_map_cofibration(&g, false).failure,
            Some(CofibFailure::NotInjective { .. })
        ));
    }

    #[test]
    fn composite_and_retract() {
        let j = gen_j();
        let bd = VertexSubset::from_labels(&j, &["-2", "2"]).unwrap();
        let empty = VertexSubset::empty(&j);
        assert!(compose_cofibrations(&j, &empty, &bd).unwrap().is_cofibration());
        assert!(compose_cofibrations(&j, &bd, &empty).is_err());

        let id = GraphMap::identity(&j);
        let d = RetractDiagram {
            outer_sub: bd.clone(),
            inner_sub: bd.clone(),
            section: id.clone(),
            retraction: id,
        };
        assert!(verify_retract(&d).unwrap().is_cofibration());
    }

    #[test]
    fn box_of_cofibrations() {
        let j = gen_j();
        let bd = VertexSubset::from_labels(&j, &["-2", "2"]).unwrap();
        let i2 = gen_line(2);
        let end = VertexSubset::from_labels(&i2, &["2"]).unwrap();
        let prod = j.box_product(&i2);
        let sub = box_subset(&j, &bd, &i2, &end);
        let v = check_cofibration(&prod, &sub).unwrap();
        assert!(v.is_cofibration());
        let l = check_cofibration(&j, &bd).unwrap().decomposition.unwrap();
        let r = check_cofibration(&i2, &end).unwrap().decomposition.unwrap();
        assert!(box_projection_is_product(v.decomposition.as_ref().unwrap(), &l, &r, 3));
    }

    #[test]
    fn codiagonal_of_small_graphs() {
        let f = codiagonal_factorization(&gen_line(0));
        assert!(is_isomorphic(&f.cylinder, &gen_j()));
        for g in [gen_line(0), gen_line(1), gen_cycle(3).unwrap()] {
            let r = codiagonal_factorization(&g).verify::<Rational>(4).unwrap();
            assert!(r.verified, "{r:?}");
        }
    }
}
