use serde::Serialize;

use crate::cofib::ProjectingDecomposition;
use crate::digraph::{DiGraph, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rank_of, LabeledMatrix};
use crate::pathhom::{regular_boundary, space_at, Chain, PathComplex, PathFamily};

use super::{l_operator, pi_linear, require_cofibration};

/// An element `(p, q)` of the cone in degree `n`: `p` has degree `n - 1`
/// (absent when `n = 0`) and `q` has degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeChain<F> {
    pub p: Option<Chain<F>>,
    pub q: Chain<F>,
}

/// The cone of the inclusion of height-one-ending paths into the complex of
/// the complement, in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct MappingCone<F> {
    graph: DiGraph,
    a: VertexSubset,
    pd: ProjectingDecomposition,
    top: usize,
    shifted: PathComplex<F>,
    inner: PathComplex<F>,
}

impl<F: Field> MappingCone<F> {
    /// Fails unless `A -> X` is a cofibration.
    pub fn build(g: &DiGraph, a: &VertexSubset, top: usize) -> Result<Self> {
        let pd = require_cofibration(g, a)?;
        let shifted = PathComplex::build(g, PathFamily::ends_at_height_one(g, a)?, top.saturating_sub(1))?;
        let inner = PathComplex::build(g, PathFamily::Within(a.complement()), top)?;
        Ok(MappingCone {
            graph: g.clone(),
            a: a.clone(),
            pd,
            top,
            shifted,
            inner,
        })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn decomposition(&self) -> &ProjectingDecomposition {
        &self.pd
    }

    fn shifted_dim(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.shifted.dim(n - 1)
        }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.shifted_dim(n) + self.inner.dim(n)
    }

    /// Basis element `k` of degree `n`; the shifted summand comes first.
    pub fn element(&self, n: usize, k: usize) -> ConeChain<F> {
        let sd = self.shifted_dim(n);
        let zero_p = (n > 0).then(|| Chain::zero(n - 1));
        if k < sd {
            ConeChain {
                p: Some(self.shifted.space(n - 1).chain(k)),
                q: Chain::zero(n),
            }
        } else {
            ConeChain {
                p: zero_p,
                q: self.inner.space(n).chain(k - sd),
            }
        }
    }

    /// `∂(p, q) = (-∂p, ∂q - p)`.
    pub fn boundary(&self, c: &ConeChain<F>) -> Result<ConeChain<F>> {
        let n = c.q.degree();
        if n == 0 {
            return Err(Error::Parameter("boundary of a degree 0 cone element".into()));
        }
        let p = match &c.p {
            Some(p) if n >= 2 => Some(regular_boundary(p)?.scaled(&-F::one())),
            _ if n >= 2 => Some(Chain::zero(n - 2)),
            _ => None,
        };
        let mut q = regular_boundary(&c.q)?;
        if let Some(p0) = &c.p {
            q.add_scaled(&-F::one(), p0);
        }
        Ok(ConeChain { p, q })
    }

    /// Coordinates in the degree-`n` basis, shifted summand first.
    pub fn coordinates(&self, c: &ConeChain<F>) -> Result<Vec<F>> {
        let n = c.q.degree();
        let mut out = match (&c.p, n) {
            (Some(p), n) if n > 0 => self.shifted.space(n - 1).coordinates(p)?,
            _ => Vec::new(),
        };
        out.extend(self.inner.space(n).coordinates(&c.q)?);
        Ok(out)
    }

    pub fn boundary_matrix(&self, n: usize) -> Result<LabeledMatrix<F>> {
        if n == 0 || n > self.top {
            return Err(Error::Parameter(format!("cone boundary degree {n} outside 1..={}", self.top)));
        }
        let rows = self.labels(n - 1);
        let cols = self.labels(n);
        let mut m = LabeledMatrix::zeros(rows, cols)?;
        for k in 0..self.dim(n) {
            let d = self.boundary(&self.element(n, k))?;
            for (i, x) in self.coordinates(&d)?.into_iter().enumerate() {
                m.set(i, k, x);
            }
        }
        Ok(m)
    }

    fn labels(&self, n: usize) -> Vec<String> {
        let g = &self.graph;
        let mut v: Vec<String> = Vec::new();
        if n > 0 {
            v.extend(self.shifted.space(n - 1).key_paths().map(|p| format!("p:{}", p.display(g))));
        }
        v.extend(self.inner.space(n).key_paths().map(|p| format!("q:{}", p.display(g))));
        v
    }

    /// `(p, q) -> L^0(p) + q`.
    pub fn e_image(&self, c: &ConeChain<F>) -> Result<Chain<F>> {
        let mut out = c.q.clone();
        if let Some(p) = &c.p {
            out.add_scaled(&F::one(), &l_operator(&self.graph, &self.a, &self.pd, 0, p)?);
        }
        Ok(out)
    }

    /// Matrix of the comparison map in degree `n`, into the basis of the
    /// complex of paths meeting `X - A`.
    pub fn e_matrix(&self, target: &PathComplex<F>, n: usize) -> Result<LabeledMatrix<F>> {
        let g = &self.graph;
        let rows: Vec<String> = target.space(n).key_paths().map(|p| p.display(g)).collect();
        let mut m = LabeledMatrix::zeros(rows, self.labels(n))?;
        for k in 0..self.dim(n) {
            let img = self.e_image(&self.element(n, k))?;
            for (i, x) in target.space(n).coordinates(&img)?.into_iter().enumerate() {
                m.set(i, k, x);
            }
        }
        Ok(m)
    }
}

/// Degree-wise results of comparing the cone with the relative complex.
#[derive(Clone, Debug, Serialize)]
pub struct EReport {
    pub cutoff: usize,
    pub cone_dims: Vec<usize>,
    pub relative_dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub commutes: Vec<bool>,
    pub bijective: Vec<bool>,
    pub cone_boundary_squares_to_zero: bool,
    pub verified: bool,
}

/// Checks that the comparison map commutes with the differentials and is
/// bijective in degrees `0..=cutoff`.
pub fn verify_e<F: Field>(g: &DiGraph, a: &VertexSubset, cutoff: usize) -> Result<EReport> {
    let cone = MappingCone::<F>::build(g, a, cutoff)?;
    let rel = PathComplex::<F>::build(g, PathFamily::MeetsComplement(a.clone()), cutoff)?;
    let mut report = EReport {
        cutoff,
        cone_dims: Vec::new(),
        relative_dims: Vec::new(),
        ranks: Vec::new(),
        commutes: Vec::new(),
        bijective: Vec::new(),
        cone_boundary_squares_to_zero: true,
        verified: false,
    };
    for n in 0..=cutoff {
        let sp = rel.space(n);
        let mut images = Vec::with_capacity(cone.dim(n));
        let mut commutes = true;
        for k in 0..cone.dim(n) {
            let el = cone.element(n, k);
            let img = cone.e_image(&el)?;
            match sp.chain_to_vector(&img) {
                Some(v) if sp.coordinates(&img).is_ok() => images.push(v),
                _ => commutes = false,
            }
            if n > 0 {
                let lhs = cone.e_image(&cone.boundary(&el)?)?;
                let rhs = rel.differential(&img)?;
                commutes &= lhs == rhs;
            }
        }
        let rank = rank_of(&images);
        report.cone_dims.push(cone.dim(n));
        report.relative_dims.push(sp.dim());
        report.ranks.push(rank);
        report.commutes.push(commutes);
        report
            .bijective
            .push(cone.dim(n) == sp.dim() && rank == sp.dim() && images.len() == cone.dim(n));
        if n >= 2 {
            let d1 = cone.boundary_matrix(n - 1)?;
            let d2 = cone.boundary_matrix(n)?;
            report.cone_boundary_squares_to_zero &= d1.mul(&d2)?.is_zero();
        }
    }
    report.verified = report.cone_boundary_squares_to_zero
        && report.commutes.iter().all(|&b| b)
        && report.bijective.iter().all(|&b| b);
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct LBoundaryReport {
    pub cutoff: usize,
    pub checked: usize,
    pub failures: Vec<String>,
    pub holds: bool,
}

/// Checks `∂L⁰(p) = -L⁰(∂p) - p + π(p)` on every allowed path `p` of
/// `X - A` ending at height one, of degree `< cutoff`; once in the full path
/// space and once after dropping the terms that lie in `A`.
pub fn verify_l_boundary<F: Field>(g: &DiGraph, a: &VertexSubset, cutoff: usize) -> Result<LBoundaryReport> {
    let pd = require_cofibration(g, a)?;
    let family = PathFamily::ends_at_height_one(g, a)?;
    let meets = |p: &crate::pathhom::RegularPath| p.vertices().iter().any(|&v| !a.contains(v));
    let mut checked = 0;
    let mut failures = Vec::new();
    for m in 0..cutoff {
        let sp = space_at::<F>(g, &family, m);
        for path in sp.allowed().paths() {
            let p = Chain::<F>::from_path(path.clone());
            let lp = l_operator(g, a, &pd, 0, &p)?;
            let lhs = regular_boundary(&lp)?;
            let mut rhs = pi_linear(g, a, &pd, &p)?.minus(&p);
            if m > 0 {
                let ldp = l_operator(g, a, &pd, 0, &regular_boundary(&p)?)?;
                rhs.add_scaled(&-F::one(), &ldp);
            }
            if lhs != rhs {
                failures.push(format!("full identity fails on {}", path.display(g)));
            }
            if lhs.filtered(meets) != rhs.filtered(meets) {
                failures.push(format!("truncated identity fails on {}", path.display(g)));
            }
            checked += 1;
        }
    }
    Ok(LBoundaryReport {
        cutoff,
        checked,
        holds: failures.is_empty(),
        failures,
    })
}
