use super::{DiGraph, GraphMap, Vertex, VertexSubset};
use crate::error::{Error, Result};

/// A pushout of an induced subgraph inclusion `A -> X` along `f: A -> B`.
///
/// The vertices of `Y` are those of `B` (labelled `B:<b>`, in `B` order)
/// followed by those of `X - A` (labelled `X:<x>`, in `X` order).
#[derive(Clone, Debug)]
pub struct PushoutSquare {
    pub x: DiGraph,
    pub a: VertexSubset,
    pub attaching: GraphMap,
    pub y: DiGraph,
    /// `B -> Y`.
    pub b_to_y: GraphMap,
    /// `X -> Y`.
    pub x_to_y: GraphMap,
}

impl PushoutSquare {
    /// The image of `B` in `Y`, as a subset.
    pub fn b_subset(&self) -> VertexSubset {
        let nb = self.attaching.codomain().vertex_count();
        VertexSubset::from_mask((0..self.y.vertex_count()).map(|v| v < nb).collect())
    }

    pub fn b(&self) -> &DiGraph {
        self.attaching.codomain()
    }

    /// Checks that the square commutes and both corner maps are digraph maps.
    pub fn validate(&self) -> Result<()> {
        let top = GraphMap::inclusion(&self.x, &self.a).then(&self.x_to_y)?;
        let bottom = self.attaching.then(&self.b_to_y)?;
        if top.vertex_map() != bottom.vertex_map() {
            return Err(Error::Diagram("pushout square does not commute".into()));
        }
        GraphMap::new(
            self.x.clone(),
            self.y.clone(),
            self.x_to_y.vertex_map().to_vec(),
        )?;
        GraphMap::new(
            self.b().clone(),
            self.y.clone(),
            self.b_to_y.vertex_map().to_vec(),
        )?;
        Ok(())
    }
}

/// Builds the pushout of `a -> x` along `f`.
///
/// `f.domain()` must be the induced subgraph of `x` on `a`; a domain with the
/// same vertices but fewer edges is reported as not induced.
pub fn pushout(x: &DiGraph, a: &VertexSubset, f: &GraphMap) -> Result<PushoutSquare> {
    a.check_parent(x)?;
    let induced = x.induced(a);
    let dom = f.domain();
    if dom.labels() != induced.labels() {
        return Err(Error::Diagram(
            "attaching map domain does not match the subgraph".into(),
        ));
    }
    if let Some((u, v)) = induced.edges().find(|&(u, v)| !dom.has_edge(u, v)) {
        return Err(Error::NotInduced(
            induced.label(u).to_string(),
            induced.label(v).to_string(),
        ));
    }
    if dom.edge_count() != induced.edge_count() {
        return Err(Error::Diagram(
            "attaching map domain has edges outside the subgraph".into(),
        ));
    }

    let b = f.codomain();
    let nb = b.vertex_count();
    // Position of every X-vertex in Y.
    let mut to_y: Vec<Vertex> = vec![0; x.vertex_count()];
    let mut labels: Vec<String> = b.labels().iter().map(|l| format!("B:{l}")).collect();
    for v in x.vertices() {
        if let Some(i) = a.position(v) {
            to_y[v] = f.apply(i);
        } else {
            to_y[v] = labels.len();
            labels.push(format!("X:{}", x.label(v)));
        }
    }

    let mut edges: Vec<(Vertex, Vertex)> = b.edges().collect();
    // Edges of X with at least one endpoint outside A, pushed forward.
    for (u, v) in x.edges() {
        if a.contains(u) && a.contains(v) {
            continue;
        }
        edges.push((to_y[u], to_y[v]));
    }
    let y = DiGraph::build(labels, edges)?;
    debug_assert!(y.vertex_count() == nb + x.vertex_count() - a.len());

    let b_to_y = GraphMap::new(b.clone(), y.clone(), (0..nb).collect())?;
    let x_to_y = GraphMap::new(x.clone(), y.clone(), to_y)?;
    Ok(PushoutSquare {
        x: x.clone(),
        a: a.clone(),
        attaching: f.clone(),
        y,
        b_to_y,
        x_to_y,
    })
}
