//! Finite digraphs with an implicit reflexive relation.
//!
//! A [`DiGraph`] stores an irreflexive edge set; every vertex is understood to
//! carry a degenerate self-edge, so a vertex map is a digraph map when each
//! edge goes to an edge or collapses to a single vertex.

mod generators;
mod io;
mod iso;
mod pushout;

pub use generators::*;
pub use io::{parse_graph, parse_json, parse_map_json, parse_text, EdgePolicy, GraphJson};
pub use iso::{find_isomorphism, is_isomorphic};
pub use pushout::{pushout, PushoutSquare};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index into a [`DiGraph`].
pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct DiGraph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    out: Vec<Vec<Vertex>>,
    inc: Vec<Vec<Vertex>>,
    adj: Vec<bool>,
    edge_count: usize,
}

impl fmt::Debug for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}->{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("DiGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl DiGraph {
    /// Builds a graph from labels and index pairs, silently dropping
    /// self-pairs and collapsing repeated pairs.
    pub(crate) fn build<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut adj = vec![false; n * n];
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v || adj[u * n + v] {
                continue;
            }
            adj[u * n + v] = true;
            out[u].push(v);
            inc[v].push(u);
            edge_count += 1;
        }
        for l in out.iter_mut().chain(inc.iter_mut()) {
            l.sort_unstable();
        }
        Ok(DiGraph {
            labels,
            index,
            out,
            inc,
            adj,
            edge_count,
        })
    }

    /// Graph on vertices labelled `0..n` with the given index edges.
    pub fn from_indices(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::build(labels, edges.iter().copied()).expect("indices are in range")
    }

    /// Graph from string labels and labelled edges.
    ///
    /// Self-edges are dropped with a warning. Repeated edges are an error
    /// under [`EdgePolicy::Strict`] and are collapsed with a warning under
    /// [`EdgePolicy::Lenient`].
    pub fn from_labels<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        policy: EdgePolicy,
    ) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for (s, t) in edges {
            let (s, t) = (s.as_ref(), t.as_ref());
            let u = *index.get(s).ok_or_else(|| Error::UnknownVertex(s.to_string()))?;
            let v = *index.get(t).ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
            if u == v {
                log::warn!("dropping self-edge {s} -> {s}; self-loops are implicit");
                continue;
            }
            if !seen.insert((u, v)) {
                match policy {
                    EdgePolicy::Strict => {
                        return Err(Error::DuplicateEdge(s.to_string(), t.to_string()))
                    }
                    EdgePolicy::Lenient => {
                        log::warn!("collapsing repeated edge {s} -> {t}");
                        continue;
                    }
                }
            }
            pairs.push((u, v));
        }
        Self::build(labels, pairs)
    }

    /// The empty digraph.
    pub fn empty() -> Self {
        Self::from_indices(0, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// True when `u -> v` is a stored (non-degenerate) edge.
    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u * self.labels.len() + v]
    }

    /// The reflexive relation: an edge or equality.
    #[inline]
    pub fn related(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v]
    }

    /// Edges in lexicographic order of `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, ts)| ts.iter().map(move |&v| (u, v)))
    }

    /// Same graph with new labels (one per vertex, in order).
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Dimension(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        Self::build(labels, self.edges())
    }

    /// Induced subgraph on `subset`; vertex `i` of the result is
    /// `subset.members()[i]`.
    pub fn induced(&self, subset: &VertexSubset) -> DiGraph {
        debug_assert_eq!(subset.parent_size(), self.vertex_count());
        let members = subset.members();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let edges = members.iter().flat_map(|&u| {
            let pos = &pos;
            self.out[u]
                .iter()
                .filter(move |&&v| pos[v] != usize::MAX)
                .map(move |&v| (pos[u], pos[v]))
        });
        Self::build(labels, edges.collect::<Vec<_>>()).expect("labels of a subgraph are unique")
    }

    /// Induced subgraph on the vertices outside `a`.
    pub fn complement(&self, a: &VertexSubset) -> DiGraph {
        self.induced(&a.complement())
    }

    /// Shortest directed path lengths from `source`; `None` when unreachable.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.out[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Heights with respect to `a`: length of a shortest directed path into `a`.
    pub fn heights(&self, a: &VertexSubset) -> Result<Heights> {
        a.check_parent(self)?;
        let mut h = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &v in a.members() {
            h[v] = Some(0);
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            let d = h[u].unwrap();
            for &w in &self.inc[u] {
                if h[w].is_none() {
                    h[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(Heights { h })
    }

    /// Some edge from a vertex of `a` to a vertex outside it.
    pub fn first_edge_out(&self, a: &VertexSubset) -> Option<(Vertex, Vertex)> {
        a.members()
            .iter()
            .find_map(|&u| self.out[u].iter().find(|&&v| !a.contains(v)).map(|&v| (u, v)))
    }

    /// Coproduct; left vertices are tagged `L:` and right vertices `R:`.
    pub fn disjoint_union(&self, other: &DiGraph) -> DiGraph {
        let n = self.vertex_count();
        let labels = self
            .labels
            .iter()
            .map(|l| format!("L:{l}"))
            .chain(other.labels.iter().map(|l| format!("R:{l}")))
            .collect();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n, v + n)))
            .collect::<Vec<_>>();
        Self::build(labels, edges).expect("tagged labels are unique")
    }

    /// Box product. Vertex `(x, y)` has index `x * |Y| + y` and label `(x,y)`.
    pub fn box_product(&self, other: &DiGraph) -> DiGraph {
        let m = other.vertex_count();
        let mut labels = Vec::with_capacity(self.vertex_count() * m);
        for x in self.vertices() {
            for y in other.vertices() {
                labels.push(format!("({},{})", self.labels[x], other.labels[y]));
            }
        }
        let mut edges = Vec::new();
        for x in self.vertices() {
            for y in other.vertices() {
                for &x2 in &self.out[x] {
                    edges.push((x * m + y, x2 * m + y));
                }
                for &y2 in &other.out[y] {
                    edges.push((x * m + y, x * m + y2));
                }
            }
        }
        Self::build(labels, edges).expect("product labels are unique")
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn weak_component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &v in self.out[u].iter().chain(&self.inc[u]) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }
}

/// A set of vertices of a fixed parent graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    mask: Vec<bool>,
    members: Vec<Vertex>,
}

impl VertexSubset {
    pub fn from_indices<I: IntoIterator<Item = Vertex>>(parent: &DiGraph, vertices: I) -> Result<Self> {
        let n = parent.vertex_count();
        let mut mask = vec![false; n];
        for v in vertices {
            if v >= n {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            mask[v] = true;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn from_labels<S: AsRef<str>>(parent: &DiGraph, labels: &[S]) -> Result<Self> {
        let idx = labels
            .iter()
            .map(|l| parent.vertex(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(parent, idx)
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        VertexSubset { mask, members }
    }

    pub fn empty(parent: &DiGraph) -> Self {
        Self::from_mask(vec![false; parent.vertex_count()])
    }

    pub fn full(parent: &DiGraph) -> Self {
        Self::from_mask(vec![true; parent.vertex_count()])
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.mask[v]
    }

    /// Members in increasing index order.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_size(&self) -> usize {
        self.mask.len()
    }

    pub fn complement(&self) -> VertexSubset {
        Self::from_mask(self.mask.iter().map(|b| !b).collect())
    }

    pub fn intersection(&self, other: &VertexSubset) -> VertexSubset {
        Self::from_mask(self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Position of `v` within [`members`](Self::members).
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.members.binary_search(&v).ok()
    }

    pub fn labels<'g>(&self, parent: &'g DiGraph) -> Vec<&'g str> {
        self.members.iter().map(|&v| parent.label(v)).collect()
    }

    pub(crate) fn check_parent(&self, g: &DiGraph) -> Result<()> {
        if self.parent_size() != g.vertex_count() {
            return Err(Error::Dimension(format!(
                "subset of a {}-vertex graph used with a {}-vertex graph",
                self.parent_size(),
                g.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Result of a multi-source reverse BFS into a subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heights {
    h: Vec<Option<usize>>,
}

impl Heights {
    /// Height of `v`, or `None` when no directed path reaches the subgraph.
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.h[v]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.h
    }

    /// The vertices admitting a path into the subgraph.
    pub fn reaching(&self) -> VertexSubset {
        VertexSubset::from_mask(self.h.iter().map(Option::is_some).collect())
    }

    /// Vertices of height exactly `k`.
    pub fn level(&self, k: usize) -> VertexSubset {
        VertexSubset::from_mask(self.h.iter().map(|h| *h == Some(k)).collect())
    }
}

/// A vertex function preserving the reflexive edge relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMap {
    domain: DiGraph,
    codomain: DiGraph,
    vertex_map: Vec<Vertex>,
}

impl GraphMap {
    pub fn new(domain: DiGraph, codomain: DiGraph, vertex_map: Vec<Vertex>) -> Result<Self> {
        if vertex_map.len() != domain.vertex_count() {
            return Err(Error::Dimension(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                domain.vertex_count()
            )));
        }
        if let Some(&bad) = vertex_map.iter().find(|&&w| w >= codomain.vertex_count()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        for (u, v) in domain.edges() {
            if !codomain.related(vertex_map[u], vertex_map[v]) {
                return Err(Error::NotAGraphMap(
                    domain.label(u).to_string(),
                    domain.label(v).to_string(),
                ));
            }
        }
        Ok(GraphMap {
            domain,
            codomain,
            vertex_map,
        })
    }

    /// Map given as label pairs; every domain vertex must be assigned.
    pub fn from_label_map(
        domain: DiGraph,
        codomain: DiGraph,
        assignment: &HashMap<String, String>,
    ) -> Result<Self> {
        let mut map = Vec::with_capacity(domain.vertex_count());
        for v in domain.vertices() {
            let l = domain.label(v);
            let target = assignment
                .get(l)
                .ok_or_else(|| Error::PartialMap(l.to_string()))?;
            map.push(codomain.vertex(target)?);
        }
        if let Some(extra) = assignment.keys().find(|k| domain.index_of(k).is_none()) {
            return Err(Error::UnknownVertex(extra.clone()));
        }
        Self::new(domain, codomain, map)
    }

    pub fn identity(g: &DiGraph) -> Self {
        GraphMap {
            domain: g.clone(),
            codomain: g.clone(),
            vertex_map: g.vertices().collect(),
        }
    }

    /// The inclusion of the induced subgraph on `subset`.
    pub fn inclusion(parent: &DiGraph, subset: &VertexSubset) -> Self {
        GraphMap {
            domain: parent.induced(subset),
            codomain: parent.clone(),
            vertex_map: subset.members().to_vec(),
        }
    }

    /// The unique map to the one-vertex graph.
    pub fn to_point(g: &DiGraph) -> Self {
        GraphMap {
            domain: g.clone(),
            codomain: gen_line(0),
            vertex_map: vec![0; g.vertex_count()],
        }
    }

    pub fn domain(&self) -> &DiGraph {
        &self.domain
    }

    pub fn codomain(&self) -> &DiGraph {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &[Vertex] {
        &self.vertex_map
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.vertex_map[v]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMap) -> Result<GraphMap> {
        if self.codomain != other.domain {
            return Err(Error::Diagram("maps are not composable".into()));
        }
        Ok(GraphMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            vertex_map: self.vertex_map.iter().map(|&v| other.vertex_map[v]).collect(),
        })
    }

    /// Box product of two maps.
    pub fn box_product(&self, other: &GraphMap) -> GraphMap {
        let m = other.domain.vertex_count();
        let m2 = other.codomain.vertex_count();
        let mut vm = Vec::with_capacity(self.domain.vertex_count() * m);
        for x in self.domain.vertices() {
            for y in other.domain.vertices() {
                vm.push(self.vertex_map[x] * m2 + other.vertex_map[y]);
            }
        }
        GraphMap {
            domain: self.domain.box_product(&other.domain),
            codomain: self.codomain.box_product(&other.codomain),
            vertex_map: vm,
        }
    }

    pub fn label_map(&self) -> Vec<(String, String)> {
        self.domain
            .vertices()
            .map(|v| {
                (
                    self.domain.label(v).to_string(),
                    self.codomain.label(self.vertex_map[v]).to_string(),
                )
            })
            .collect()
    }
}
