use serde::Serialize;

use crate::cofib::check_cofibration;
use crate::digraph::{GraphMap, PushoutSquare, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::rank_of;
use crate::pathhom::{map_chain, PathComplex, PathFamily};

#[derive(Clone, Debug, Serialize)]
pub struct ExcisionReport {
    pub cutoff: usize,
    pub relative_source: Vec<usize>,
    pub relative_target: Vec<usize>,
    pub chain_map: Vec<bool>,
    pub bijective: Vec<bool>,
    pub verified: bool,
}

/// Relative complexes of both sides of a square and the map between them:
/// push a chain along `X -> Y`, then drop the terms lying in `B`.
struct RelativeMap<F> {
    source: PathComplex<F>,
    target: PathComplex<F>,
    map: GraphMap,
    b: VertexSubset,
}

impl<F: Field> RelativeMap<F> {
    fn push(&self, c: &crate::pathhom::Chain<F>) -> crate::pathhom::Chain<F> {
        map_chain(&self.map, c).filtered(|p| p.vertices().iter().any(|&v| !self.b.contains(v)))
    }
}

/// Checks that the pushout square induces an isomorphism of relative path
/// complexes in degrees `0..=cutoff` and equal relative Betti numbers below
/// the cutoff. Both vertical inclusions must be cofibrations.
pub fn verify_excision<F: Field>(sq: &PushoutSquare, cutoff: usize) -> Result<ExcisionReport> {
    if cutoff == 0 {
        return Err(Error::Parameter("cutoff must be at least 1".into()));
    }
    sq.validate()?;
    let b = sq.b_subset();
    for (g, s, side) in [(&sq.x, &sq.a, "source"), (&sq.y, &b, "target")] {
        let v = check_cofibration(g, s)?;
        if let Some(f) = v.failure {
            return Err(Error::NotCofibration(format!("{side} inclusion: {}", f.to_json(g))));
        }
    }
    let rm = RelativeMap {
        source: PathComplex::<F>::build(&sq.x, PathFamily::MeetsComplement(sq.a.clone()), cutoff)?,
        target: PathComplex::<F>::build(&sq.y, PathFamily::MeetsComplement(b.clone()), cutoff)?,
        map: sq.x_to_y.clone(),
        b,
    };
    let mut chain_map = Vec::new();
    let mut bijective = Vec::new();
    for n in 0..=cutoff {
        let (ssp, tsp) = (rm.source.space(n), rm.target.space(n));
        let mut images = Vec::new();
        let mut commutes = true;
        for c in ssp.chains() {
            let img = rm.push(&c);
            match tsp.chain_to_vector(&img) {
                Some(v) if tsp.coordinates(&img).is_ok() => images.push(v),
                _ => commutes = false,
            }
            if n > 0 {
                let lhs = rm.push(&rm.source.differential(&c)?);
                let rhs = rm.target.differential(&img)?;
                commutes &= lhs == rhs;
            }
        }
        chain_map.push(commutes);
        bijective.push(ssp.dim() == tsp.dim() && images.len() == ssp.dim() && rank_of(&images) == tsp.dim());
    }
    let relative_source = rm.source.table(cutoff).betti;
    let relative_target = rm.target.table(cutoff).betti;
    let verified = relative_source == relative_target
        && chain_map.iter().all(|&b| b)
        && bijective.iter().all(|&b| b);
    Ok(ExcisionReport {
        cutoff,
        relative_source,
        relative_target,
        chain_map,
        bijective,
        verified,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaPushoutReport {
    pub cutoff: usize,
    pub x: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub y: Vec<usize>,
    pub holds: bool,
}

/// Compares `dim Ω_n(Y)` with `dim Ω_n(X) + dim Ω_n(B) - dim Ω_n(A)` for
/// `n <= cutoff`.
pub fn omega_pushout_dims<F: Field>(sq: &PushoutSquare, cutoff: usize) -> Result<OmegaPushoutReport> {
    let dims = |g: &crate::digraph::DiGraph| -> Vec<usize> {
        (0..=cutoff)
            .map(|n| crate::pathhom::space_at::<F>(g, &PathFamily::Full, n).dim())
            .collect()
    };
    let (x, a, b, y) = (
        dims(&sq.x),
        dims(&sq.x.induced(&sq.a)),
        dims(sq.b()),
        dims(&sq.y),
    );
    let holds = (0..=cutoff).all(|n| y[n] + a[n] == x[n] + b[n]);
    Ok(OmegaPushoutReport {
        cutoff,
        x,
        a,
        b,
        y,
        holds,
    })
}
