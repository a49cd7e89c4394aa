//! Path spaces, the Ω complex and (relative) path homology.
//!
//! All chains are expressed over vertex indices of the ambient graph, so the
//! complexes of a subgraph, its complement and the relative complexes can be
//! compared without relabelling.

mod chain;
mod complex;
mod maps;

pub use chain::{regular_boundary, Chain, RegularPath};
pub use complex::{space_at, AllowedBasis, OmegaBasis, PathComplex, PathFamily};
pub use maps::{homology_map_report, is_homology_iso, map_chain, HomologyMapReport};
pub(crate) use maps::{boundary_chains, cycle_chains, over_generators};

use serde::Serialize;

use crate::digraph::{DiGraph, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::LabeledMatrix;

/// Per-degree dimensions of a path complex below a cutoff `K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub cutoff: usize,
    pub omega_dims: Vec<usize>,
    /// `rank ∂_n`, with `rank ∂_0 = 0`.
    pub ranks: Vec<usize>,
    /// `nullity ∂_n`, with `nullity ∂_0 = dim Ω_0`.
    pub nullities: Vec<usize>,
    pub betti: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<String>>>,
}

impl HomologyTable {
    pub(crate) fn empty(cutoff: usize) -> Self {
        HomologyTable {
            cutoff,
            omega_dims: Vec::with_capacity(cutoff),
            ranks: Vec::with_capacity(cutoff),
            nullities: Vec::with_capacity(cutoff),
            betti: Vec::with_capacity(cutoff),
            generators: None,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

/// Allowed paths of degree `n`, lexicographic in vertex index order.
pub fn allowed_paths(g: &DiGraph, n: usize) -> AllowedBasis {
    space_at::<crate::field::F2>(g, &PathFamily::Full, n)
        .allowed()
        .clone()
}

fn complex<F: Field>(g: &DiGraph, family: PathFamily, top: usize) -> Result<PathComplex<F>> {
    PathComplex::build(g, family, top)
}

/// Basis of `Ω_n` as vectors over the allowed paths of degree `n`.
pub fn omega_basis<F: Field>(g: &DiGraph, n: usize) -> OmegaBasis<F> {
    space_at(g, &PathFamily::Full, n)
}

/// Matrix of `∂_n: Ω_n -> Ω_{n-1}` in the bases of [`omega_basis`].
pub fn omega_boundary_matrix<F: Field>(g: &DiGraph, n: usize) -> Result<LabeledMatrix<F>> {
    complex::<F>(g, PathFamily::Full, n)?.boundary_matrix(g, n)
}

/// Path homology of `g` in degrees `0..cutoff`.
pub fn homology<F: Field>(g: &DiGraph, cutoff: usize) -> Result<HomologyTable> {
    if cutoff == 0 {
        return Err(Error::Parameter("cutoff must be at least 1".into()));
    }
    Ok(complex::<F>(g, PathFamily::Full, cutoff)?.table(cutoff))
}

/// Like [`homology`], with representative cycles rendered as strings.
pub fn homology_with_generators<F: Field>(g: &DiGraph, cutoff: usize) -> Result<HomologyTable> {
    if cutoff == 0 {
        return Err(Error::Parameter("cutoff must be at least 1".into()));
    }
    let cx = complex::<F>(g, PathFamily::Full, cutoff)?;
    let mut t = cx.table(cutoff);
    t.generators = Some(
        (0..cutoff)
            .map(|n| cx.homology_generators(n).iter().map(|c| c.display(g)).collect())
            .collect(),
    );
    Ok(t)
}

/// Basis of the classes of `Ω_n(X)` supported on paths meeting `X - A`.
pub fn omega_hat_basis<F: Field>(g: &DiGraph, a: &VertexSubset, n: usize) -> Result<OmegaBasis<F>> {
    a.check_parent(g)?;
    Ok(space_at(g, &PathFamily::MeetsComplement(a.clone()), n))
}

/// Basis of the combinations of paths in `X - A` ending at height 1 whose
/// boundaries also end at height 1. Requires no edges out of `A`.
pub fn omega_hat1_basis<F: Field>(g: &DiGraph, a: &VertexSubset, n: usize) -> Result<OmegaBasis<F>> {
    require_no_edges_out(g, a)?;
    Ok(space_at(g, &PathFamily::ends_at_height_one(g, a)?, n))
}

pub(crate) fn require_no_edges_out(g: &DiGraph, a: &VertexSubset) -> Result<()> {
    a.check_parent(g)?;
    if let Some((u, v)) = g.first_edge_out(a) {
        return Err(Error::EdgeOut(g.label(u).to_string(), g.label(v).to_string()));
    }
    Ok(())
}

/// Relative homology of `A -> X` in degrees `0..cutoff`, computed from the
/// complex of paths meeting `X - A`. Requires no edges out of `A`.
pub fn relative_homology<F: Field>(g: &DiGraph, a: &VertexSubset, cutoff: usize) -> Result<HomologyTable> {
    if cutoff == 0 {
        return Err(Error::Parameter("cutoff must be at least 1".into()));
    }
    require_no_edges_out(g, a)?;
    Ok(complex::<F>(g, PathFamily::MeetsComplement(a.clone()), cutoff)?.table(cutoff))
}

#[cfg(test)]
mod tests;
