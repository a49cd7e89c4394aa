//! Mapping cone comparison and excision for cofibrations.
//!
//! For a cofibration `A -> X` the complex of paths meeting `X - A` is
//! compared with a cone built from paths inside `X - A`; the comparison map
//! sends a path `x_0 ... x_{n-1}` to an alternating sum of paths that run
//! along it and then drop into `A` along the projection.

mod cone;
mod les;
mod square;

pub use cone::{verify_e, verify_l_boundary, ConeChain, EReport, LBoundaryReport, MappingCone};
pub use les::{verify_les, LesReport};
pub use square::{omega_pushout_dims, verify_excision, ExcisionReport, OmegaPushoutReport};

use crate::cofib::ProjectingDecomposition;
use crate::digraph::{DiGraph, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::pathhom::{Chain, RegularPath};

fn projections(
    g: &DiGraph,
    a: &VertexSubset,
    pd: &ProjectingDecomposition,
    p: &RegularPath,
    inside_complement: bool,
) -> Result<Vec<usize>> {
    p.vertices()
        .iter()
        .map(|&v| match pd.project(v) {
            Some(t) if !(inside_complement && a.contains(v)) => Ok(t),
            _ => Err(Error::Domain(p.display(g))),
        })
        .collect()
}

/// `L^j` applied to a chain of paths inside `X - A` that reach `A`:
/// `x_0 ... x_{n-1}` goes to `Σ_{i=j}^{n-1} (-1)^i x_0 ... x_i a_i ... a_{n-1}`
/// with `a_i = π(x_i)`. Degenerate terms are dropped.
pub fn l_operator<F: Field>(
    g: &DiGraph,
    a: &VertexSubset,
    pd: &ProjectingDecomposition,
    j: usize,
    c: &Chain<F>,
) -> Result<Chain<F>> {
    let m = c.degree() + 1; // path length of inputs
    if j >= m {
        return Err(Error::Parameter(format!("index {j} out of range for degree {}", c.degree())));
    }
    let mut out = Chain::zero(m);
    for (p, x) in c.terms() {
        let proj = projections(g, a, pd, p, true)?;
        let xs = p.vertices();
        for i in j..m {
            let mut tuple = Vec::with_capacity(m + 1);
            tuple.extend_from_slice(&xs[..=i]);
            tuple.extend_from_slice(&proj[i..]);
            if let Some(q) = RegularPath::regular(tuple) {
                let coeff = if i % 2 == 0 { x.clone() } else { -x.clone() };
                out.add_term(q, coeff);
            }
        }
    }
    Ok(out)
}

/// Projection of a chain onto `A`, path by path; degenerate images vanish.
pub fn pi_linear<F: Field>(
    g: &DiGraph,
    a: &VertexSubset,
    pd: &ProjectingDecomposition,
    c: &Chain<F>,
) -> Result<Chain<F>> {
    let mut out = Chain::zero(c.degree());
    for (p, x) in c.terms() {
        let proj = projections(g, a, pd, p, false)?;
        if let Some(q) = RegularPath::regular(proj) {
            out.add_term(q, x.clone());
        }
    }
    Ok(out)
}

fn require_cofibration(g: &DiGraph, a: &VertexSubset) -> Result<ProjectingDecomposition> {
    let v = crate::cofib::check_cofibration(g, a)?;
    match (v.failure, v.decomposition) {
        (None, Some(d)) => Ok(d),
        (Some(f), _) => Err(Error::NotCofibration(f.to_json(g).to_string())),
        (None, None) => unreachable!("verdict without decomposition"),
    }
}

#[cfg(test)]
mod tests;
