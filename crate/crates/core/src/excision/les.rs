use serde::Serialize;

use crate::digraph::{DiGraph, VertexSubset};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::EchelonSpan;
use crate::pathhom::{
    boundary_chains, cycle_chains, over_generators, regular_boundary, require_no_edges_out, Chain,
    PathComplex, PathFamily,
};

/// Ranks and exactness of `... -> H_n(A) -> H_n(X) -> H_n(X,A) -> H_{n-1}(A) -> ...`.
#[derive(Clone, Debug, Serialize)]
pub struct LesReport {
    pub cutoff: usize,
    pub sub: Vec<usize>,
    pub whole: Vec<usize>,
    pub relative: Vec<usize>,
    /// Rank of `H_n(A) -> H_n(X)`.
    pub inclusion_ranks: Vec<usize>,
    /// Rank of `H_n(X) -> H_n(X,A)`.
    pub quotient_ranks: Vec<usize>,
    /// Rank of `H_n(X,A) -> H_{n-1}(A)`; zero for `n = 0`.
    pub connecting_ranks: Vec<usize>,
    pub failures: Vec<String>,
    pub exact: bool,
}

/// Homology of a complex in degree `n`, with the boundary span kept for
/// membership tests and ranks of maps into it.
struct Target<'a, F> {
    cx: &'a PathComplex<F>,
    n: usize,
    boundaries: EchelonSpan<F>,
}

impl<'a, F: Field> Target<'a, F> {
    fn new(cx: &'a PathComplex<F>, n: usize) -> Result<Self> {
        let mut boundaries = EchelonSpan::new();
        for b in boundary_chains(cx, n)? {
            boundaries.insert(&over_generators(cx.space(n), &b));
        }
        Ok(Target { cx, n, boundaries })
    }

    fn vector(&self, c: &Chain<F>) -> crate::linalg::SparseVec<F> {
        over_generators(self.cx.space(self.n), c)
    }

    fn rank_of_images(&self, images: &[Chain<F>]) -> usize {
        let mut span = self.boundaries.clone();
        let base = span.dim();
        for c in images {
            span.insert(&self.vector(c));
        }
        span.dim() - base
    }

    fn all_null(&self, images: &[Chain<F>]) -> bool {
        images.iter().all(|c| self.boundaries.contains(&self.vector(c)))
    }
}

/// Checks exactness at every node in degrees `0..cutoff` for an inclusion
/// with no edges out of `A`.
pub fn verify_les<F: Field>(g: &DiGraph, a: &VertexSubset, cutoff: usize) -> Result<LesReport> {
    require_no_edges_out(g, a)?;
    let top = cutoff + 1;
    let sub = PathComplex::<F>::build(g, PathFamily::Within(a.clone()), top)?;
    let whole = PathComplex::<F>::build(g, PathFamily::Full, top)?;
    let rel = PathComplex::<F>::build(g, PathFamily::MeetsComplement(a.clone()), top)?;
    let meets = |p: &crate::pathhom::RegularPath| p.vertices().iter().any(|&v| !a.contains(v));
    let quotient = |c: &Chain<F>| c.filtered(meets);

    let (ts, tw, tr) = (sub.table(cutoff + 1), whole.table(cutoff + 1), rel.table(cutoff + 1));
    let mut r = LesReport {
        cutoff,
        sub: ts.betti[..cutoff].to_vec(),
        whole: tw.betti[..cutoff].to_vec(),
        relative: tr.betti[..cutoff].to_vec(),
        inclusion_ranks: Vec::new(),
        quotient_ranks: Vec::new(),
        connecting_ranks: Vec::new(),
        failures: Vec::new(),
        exact: false,
    };

    // Ranks for degrees 0..=cutoff; the connecting map out of degree
    // `cutoff` is needed for exactness at H_{cutoff-1}(A).
    let mut inc = Vec::new();
    let mut quo = Vec::new();
    let mut con = Vec::new();
    for n in 0..=cutoff {
        let za = cycle_chains(&sub, n);
        let zx = cycle_chains(&whole, n);
        let zr = cycle_chains(&rel, n);
        let hx = Target::new(&whole, n)?;
        let hr = Target::new(&rel, n)?;
        inc.push(hx.rank_of_images(&za));
        let jz: Vec<Chain<F>> = zx.iter().map(quotient).collect();
        quo.push(hr.rank_of_images(&jz));
        if n == 0 {
            con.push(0);
        } else {
            let ha = Target::new(&sub, n - 1)?;
            let dz = zr.iter().map(regular_boundary).collect::<Result<Vec<_>>>()?;
            con.push(ha.rank_of_images(&dz));
            // connecting map after quotient vanishes
            let djz = jz.iter().map(regular_boundary).collect::<Result<Vec<_>>>()?;
            if !ha.all_null(&djz) {
                r.failures.push(format!("composite H_{n}(X) -> H_{}(A) is nonzero", n - 1));
            }
            // inclusion after connecting map vanishes
            let hx1 = Target::new(&whole, n - 1)?;
            if !hx1.all_null(&dz) {
                r.failures.push(format!("composite H_{n}(X,A) -> H_{}(X) is nonzero", n - 1));
            }
        }
        let ia: Vec<Chain<F>> = za.iter().map(quotient).collect();
        if !hr.all_null(&ia) {
            r.failures.push(format!("composite H_{n}(A) -> H_{n}(X,A) is nonzero"));
        }
    }
    for n in 0..cutoff {
        if inc[n] + quo[n] != tw.betti[n] {
            r.failures.push(format!("not exact at H_{n}(X)"));
        }
        if quo[n] + con[n] != tr.betti[n] {
            r.failures.push(format!("not exact at H_{n}(X,A)"));
        }
        if con[n + 1] + inc[n] != ts.betti[n] {
            r.failures.push(format!("not exact at H_{n}(A)"));
        }
    }
    r.inclusion_ranks = inc[..cutoff].to_vec();
    r.quotient_ranks = quo[..cutoff].to_vec();
    r.connecting_ranks = con[..cutoff].to_vec();
    r.exact = r.failures.is_empty();
    Ok(r)
}
