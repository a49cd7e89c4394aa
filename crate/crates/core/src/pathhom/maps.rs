use serde::Serialize;

use crate::digraph::GraphMap;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{kernel, EchelonSpan, SparseVec};

use super::{Chain, OmegaBasis, PathComplex, PathFamily, RegularPath};

/// Pushes a chain forward along a vertex map, dropping degenerate images.
pub fn map_chain<F: Field>(f: &GraphMap, c: &Chain<F>) -> Chain<F> {
    let mut out = Chain::zero(c.degree());
    for (p, x) in c.terms() {
        let image: Vec<_> = p.vertices().iter().map(|&v| f.apply(v)).collect();
        if let Some(q) = RegularPath::regular(image) {
            out.add_term(q, x.clone());
        }
    }
    out
}

/// Effect of a digraph map on homology below a cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyMapReport {
    pub cutoff: usize,
    pub source_betti: Vec<usize>,
    pub target_betti: Vec<usize>,
    /// Rank of the induced map in each degree.
    pub ranks: Vec<usize>,
    pub is_iso: bool,
}

/// Sparse vector of `c` over the generator paths of `space`.
pub(crate) fn over_generators<F: Field>(space: &OmegaBasis<F>, c: &Chain<F>) -> SparseVec<F> {
    space
        .chain_to_vector(c)
        .expect("chain is supported on the space's generators")
}

/// Cycles of `∂_n` as chains.
pub(crate) fn cycle_chains<F: Field>(cx: &PathComplex<F>, n: usize) -> Vec<Chain<F>> {
    let sp = cx.space(n);
    if n == 0 {
        return sp.chains();
    }
    kernel(cx.boundary_columns(n))
        .basis
        .iter()
        .map(|z| sp.vector_to_chain(&sp.combine(z)))
        .collect()
}

/// Boundaries in degree `n` as chains.
pub(crate) fn boundary_chains<F: Field>(cx: &PathComplex<F>, n: usize) -> Result<Vec<Chain<F>>> {
    cx.space(n + 1)
        .chains()
        .iter()
        .map(|c| cx.differential(c))
        .collect()
}

/// Rank of the map on homology induced by `f` from `source` to `target`
/// in degree `n`, given a chain-level map `push`.
pub(crate) fn induced_rank<F: Field>(
    source: &PathComplex<F>,
    target: &PathComplex<F>,
    n: usize,
    push: impl Fn(&Chain<F>) -> Chain<F>,
) -> Result<usize> {
    let tsp = target.space(n);
    let mut span = EchelonSpan::new();
    for b in boundary_chains(target, n)? {
        span.insert(&over_generators(tsp, &b));
    }
    let base = span.dim();
    for z in cycle_chains(source, n) {
        span.insert(&over_generators(tsp, &push(&z)));
    }
    Ok(span.dim() - base)
}

/// Compares `H_n(X)` and `H_n(Y)` through `f` for `n < cutoff`.
pub fn homology_map_report<F: Field>(f: &GraphMap, cutoff: usize) -> Result<HomologyMapReport> {
    let src = PathComplex::<F>::build(f.domain(), PathFamily::Full, cutoff)?;
    let tgt = PathComplex::<F>::build(f.codomain(), PathFamily::Full, cutoff)?;
    let (st, tt) = (src.table(cutoff), tgt.table(cutoff));
    let ranks = (0..cutoff)
        .map(|n| induced_rank(&src, &tgt, n, |c| map_chain(f, c)))
        .collect::<Result<Vec<_>>>()?;
    let is_iso = (0..cutoff).all(|n| ranks[n] == st.betti[n] && ranks[n] == tt.betti[n]);
    Ok(HomologyMapReport {
        cutoff,
        source_betti: st.betti,
        target_betti: tt.betti,
        ranks,
        is_iso,
    })
}

pub fn is_homology_iso<F: Field>(f: &GraphMap, cutoff: usize) -> Result<bool> {
    Ok(homology_map_report::<F>(f, cutoff)?.is_iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::*;
    use crate::field::Rational;

    #[test]
    fn collapsing_a_tree_is_an_iso() {
        let f = GraphMap::to_point(&gen_line(3));
        assert!(is_homology_iso::<Rational>(&f, 3).unwrap());
    }

    #[test]
    fn collapsing_a_cycle_is_not() {
        let f = GraphMap::to_point(&gen_cycle(3).unwrap());
        let r = homology_map_report::<Rational>(&f, 3).unwrap();
        assert!(!r.is_iso);
        assert_eq!(r.ranks, [1, 0, 0]);
    }

    #[test]
    fn folding_the_triangle_onto_an_edge() {
        // 0 -> 1 -> 2, 0 -> 2; send 1 to 2
        let g = gen_mn_cycle(2, 1).unwrap();
        let f = GraphMap::new(g.clone(), gen_line(1), vec![0, 1, 1]).unwrap();
        assert!(is_homology_iso::<Rational>(&f, 3).unwrap());
    }

    #[test]
    fn inclusion_of_a_point_into_two_points() {
        let two = gen_line(0).disjoint_union(&gen_line(0));
        let f = GraphMap::new(gen_line(0), two, vec![0]).unwrap();
        let r = homology_map_report::<Rational>(&f, 2).unwrap();
        assert_eq!(r.ranks, [1, 0]);
        assert!(!r.is_iso);
    }
}
