use std::collections::{BTreeMap, HashMap};

use crate::digraph::{DiGraph, Vertex, VertexSubset};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::sparse::{axpy, from_map, rank_of, to_dense};
use crate::linalg::{kernel, EchelonSpan, Kernel, LabeledMatrix, SparseVec};

use super::chain::{Chain, RegularPath};

/// Lexicographically ordered list of generator paths of one degree.
#[derive(Clone, Debug)]
pub struct AllowedBasis {
    degree: usize,
    paths: Vec<RegularPath>,
    index: HashMap<RegularPath, usize>,
}

impl AllowedBasis {
    fn new(degree: usize, paths: Vec<RegularPath>) -> Self {
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        AllowedBasis {
            degree,
            paths,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn paths(&self) -> &[RegularPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn index_of(&self, p: &RegularPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &RegularPath) -> bool {
        self.index.contains_key(p)
    }
}

/// Which generators and which boundary convention a path complex uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathFamily {
    /// Allowed paths of the whole graph.
    Full,
    /// Allowed paths of the induced subgraph on a vertex set.
    Within(VertexSubset),
    /// Allowed paths meeting the complement of `A`; boundary terms lying
    /// entirely in `A` are dropped.
    MeetsComplement(VertexSubset),
    /// Allowed paths inside the complement of `A` whose last vertex has
    /// height 1 over `A`.
    EndsAtHeightOne {
        a: VertexSubset,
        level_one: VertexSubset,
    },
}

impl PathFamily {
    pub fn ends_at_height_one(g: &DiGraph, a: &VertexSubset) -> Result<Self> {
        let level_one = g.heights(a)?.level(1);
        Ok(PathFamily::EndsAtHeightOne {
            a: a.clone(),
            level_one,
        })
    }

    /// Vertices that may occur anywhere on a generator.
    fn vertex_ok(&self, v: Vertex) -> bool {
        match self {
            PathFamily::Full | PathFamily::MeetsComplement(_) => true,
            PathFamily::Within(s) => s.contains(v),
            PathFamily::EndsAtHeightOne { a, .. } => !a.contains(v),
        }
    }

    /// Generator test for a walk whose vertices all pass `vertex_ok`.
    fn is_generator(&self, p: &[Vertex]) -> bool {
        match self {
            PathFamily::MeetsComplement(a) => p.iter().any(|&v| !a.contains(v)),
            PathFamily::EndsAtHeightOne { level_one, .. } => level_one.contains(*p.last().unwrap()),
            _ => true,
        }
    }

    /// Boundary terms that survive the complex's differential.
    pub(crate) fn keeps(&self, p: &RegularPath) -> bool {
        match self {
            PathFamily::MeetsComplement(a) => p.vertices().iter().any(|&v| !a.contains(v)),
            _ => true,
        }
    }

    /// Whether a face of a generator may appear in the boundary of an
    /// element of the space.
    fn admissible_face(&self, g: &DiGraph, p: &RegularPath) -> bool {
        if !p.is_allowed(g) {
            return false;
        }
        match self {
            PathFamily::EndsAtHeightOne { .. } => self.is_generator(p.vertices()),
            _ => true,
        }
    }
}

/// Basis of a space of allowed-path combinations with admissible boundary,
/// stored as sparse vectors over its generator paths.
#[derive(Clone, Debug)]
pub struct OmegaBasis<F> {
    generators: AllowedBasis,
    kernel: Kernel<F>,
}

impl<F: Field> OmegaBasis<F> {
    pub fn degree(&self) -> usize {
        self.generators.degree
    }

    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// The generator paths the vectors are expressed over.
    pub fn allowed(&self) -> &AllowedBasis {
        &self.generators
    }

    pub fn vectors(&self) -> &[SparseVec<F>] {
        &self.kernel.basis
    }

    /// For each basis vector, the generator at which it has coefficient 1
    /// and every other basis vector has coefficient 0.
    pub fn key_paths(&self) -> impl Iterator<Item = &RegularPath> {
        self.kernel.keys.iter().map(|&k| &self.generators.paths[k])
    }

    pub fn chain(&self, i: usize) -> Chain<F> {
        self.vector_to_chain(&self.kernel.basis[i])
    }

    pub fn chains(&self) -> Vec<Chain<F>> {
        (0..self.dim()).map(|i| self.chain(i)).collect()
    }

    pub fn vector_to_chain(&self, v: &[(usize, F)]) -> Chain<F> {
        Chain::from_terms(
            self.degree(),
            v.iter().map(|(i, x)| (self.generators.paths[*i].clone(), x.clone())),
        )
        .expect("degrees agree")
    }

    /// Chain as a sparse vector over the generators, if it is supported on them.
    pub fn chain_to_vector(&self, c: &Chain<F>) -> Option<SparseVec<F>> {
        let mut v: Vec<(usize, F)> = c
            .terms()
            .map(|(p, x)| self.generators.index_of(p).map(|i| (i, x.clone())))
            .collect::<Option<_>>()?;
        v.sort_by_key(|(i, _)| *i);
        Some(v)
    }

    /// Combination of basis vectors: `Σ coords[i] * vector_i`.
    pub fn combine(&self, coords: &[(usize, F)]) -> SparseVec<F> {
        let mut acc = BTreeMap::new();
        for (i, c) in coords {
            axpy(&mut acc, c, &self.kernel.basis[*i]);
        }
        from_map(acc)
    }

    /// Coordinates of `c` in this basis.
    pub fn coordinates(&self, c: &Chain<F>) -> Result<Vec<F>> {
        let v = self
            .chain_to_vector(c)
            .ok_or_else(|| Error::NotInSpan(format!("degree {} chain has foreign paths", c.degree())))?;
        self.kernel
            .coordinates(&v)
            .ok_or_else(|| Error::NotInSpan(format!("degree {} chain", c.degree())))
    }

    pub fn contains(&self, c: &Chain<F>) -> bool {
        self.coordinates(c).is_ok()
    }
}

fn extend_walks(g: &DiGraph, family: &PathFamily, walks: &[RegularPath]) -> Vec<RegularPath> {
    let mut out = Vec::new();
    for w in walks {
        for &v in g.out_neighbors(w.last()) {
            if family.vertex_ok(v) {
                let mut p = w.vertices().to_vec();
                p.push(v);
                out.push(RegularPath::from_vec_unchecked(p));
            }
        }
    }
    out
}

fn build_space<F: Field>(
    g: &DiGraph,
    family: &PathFamily,
    degree: usize,
    walks: &[RegularPath],
) -> OmegaBasis<F> {
    let paths: Vec<RegularPath> = walks
        .iter()
        .filter(|p| family.is_generator(p.vertices()))
        .cloned()
        .collect();
    let mut rows: HashMap<RegularPath, usize> = HashMap::new();
    let columns: Vec<SparseVec<F>> = paths
        .iter()
        .map(|p| {
            let mut col = BTreeMap::new();
            for (face, sign) in p.faces() {
                if family.admissible_face(g, &face) {
                    continue;
                }
                let next = rows.len();
                let r = *rows.entry(face).or_insert(next);
                axpy(&mut col, &F::from_i64(sign), &[(r, F::one())]);
            }
            from_map(col)
        })
        .collect();
    OmegaBasis {
        generators: AllowedBasis::new(degree, paths),
        kernel: kernel(&columns),
    }
}

/// The degree-`n` space of a family without building any differentials.
pub fn space_at<F: Field>(g: &DiGraph, family: &PathFamily, n: usize) -> OmegaBasis<F> {
    let mut walks: Vec<RegularPath> = g
        .vertices()
        .filter(|&v| family.vertex_ok(v))
        .map(|v| RegularPath::from_vec_unchecked(vec![v]))
        .collect();
    for _ in 0..n {
        walks = extend_walks(g, family, &walks);
    }
    build_space(g, family, n, &walks)
}

/// A truncated path chain complex, degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct PathComplex<F> {
    family: PathFamily,
    spaces: Vec<OmegaBasis<F>>,
    /// `boundaries[n]`: columns of `∂_n` in basis coordinates (empty for n = 0).
    boundaries: Vec<Vec<SparseVec<F>>>,
    ranks: Vec<usize>,
}

impl<F: Field> PathComplex<F> {
    pub fn build(g: &DiGraph, family: PathFamily, top: usize) -> Result<Self> {
        if let PathFamily::Within(s) | PathFamily::MeetsComplement(s) = &family {
            s.check_parent(g)?;
        }
        if let PathFamily::EndsAtHeightOne { a, .. } = &family {
            a.check_parent(g)?;
        }
        let mut walks: Vec<RegularPath> = g
            .vertices()
            .filter(|&v| family.vertex_ok(v))
            .map(|v| RegularPath::from_vec_unchecked(vec![v]))
            .collect();
        let mut spaces = Vec::with_capacity(top + 1);
        for n in 0..=top {
            if n > 0 {
                walks = extend_walks(g, &family, &walks);
            }
            spaces.push(build_space(g, &family, n, &walks));
        }
        let mut boundaries = vec![Vec::new()];
        let mut ranks = vec![0];
        for n in 1..=top {
            let cols = (0..spaces[n].dim())
                .map(|i| {
                    let d = boundary_in(&family, &spaces[n].chain(i))?;
                    let coords = spaces[n - 1].coordinates(&d).map_err(|_| {
                        Error::NotInSpan(format!(
                            "boundary of a degree {n} basis element is not in the degree {} space",
                            n - 1
                        ))
                    })?;
                    Ok(crate::linalg::sparse::from_dense(&coords))
                })
                .collect::<Result<Vec<_>>>()?;
            ranks.push(rank_of(&cols));
            boundaries.push(cols);
        }
        Ok(PathComplex {
            family,
            spaces,
            boundaries,
            ranks,
        })
    }

    pub fn family(&self) -> &PathFamily {
        &self.family
    }

    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> &OmegaBasis<F> {
        &self.spaces[n]
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces.get(n).map_or(0, OmegaBasis::dim)
    }

    /// Rank of `∂_n`; zero in degree 0.
    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// Columns of `∂_n` in basis coordinates.
    pub fn boundary_columns(&self, n: usize) -> &[SparseVec<F>] {
        &self.boundaries[n]
    }

    /// The complex's differential applied to a chain.
    pub fn differential(&self, c: &Chain<F>) -> Result<Chain<F>> {
        boundary_in(&self.family, c)
    }

    /// `∂_n` as a labelled dense matrix; rows and columns are named by the
    /// key path of each basis element.
    pub fn boundary_matrix(&self, g: &DiGraph, n: usize) -> Result<LabeledMatrix<F>> {
        if n == 0 || n > self.top() {
            return Err(Error::Parameter(format!("boundary degree {n} outside 1..={}", self.top())));
        }
        let rows: Vec<String> = self.spaces[n - 1].key_paths().map(|p| p.display(g)).collect();
        let cols: Vec<String> = self.spaces[n].key_paths().map(|p| p.display(g)).collect();
        let mut m = LabeledMatrix::zeros(rows, cols)?;
        for (j, col) in self.boundaries[n].iter().enumerate() {
            for (i, x) in col {
                m.set(*i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Betti numbers and ranks for degrees below `cutoff` (at most `top`).
    pub fn table(&self, cutoff: usize) -> super::HomologyTable {
        assert!(cutoff <= self.top(), "complex too short for cutoff {cutoff}");
        let mut t = super::HomologyTable::empty(cutoff);
        for n in 0..cutoff {
            let nullity = self.dim(n) - self.rank(n);
            t.omega_dims.push(self.dim(n));
            t.ranks.push(self.rank(n));
            t.nullities.push(nullity);
            t.betti.push(nullity - self.rank(n + 1));
        }
        t
    }

    /// Cycle representatives of a basis of homology in degree `n < top`.
    pub fn homology_generators(&self, n: usize) -> Vec<Chain<F>> {
        let dim = self.dim(n);
        let cycles: Vec<SparseVec<F>> = if n == 0 {
            (0..dim).map(|i| vec![(i, F::one())]).collect()
        } else {
            kernel(&self.boundaries[n]).basis
        };
        let mut span = EchelonSpan::new();
        for b in &self.boundaries[n + 1] {
            span.insert(b);
        }
        cycles
            .into_iter()
            .filter(|z| span.insert(z))
            .map(|z| self.spaces[n].vector_to_chain(&self.spaces[n].combine(&z)))
            .collect()
    }

    /// Coordinates of a chain in the degree-`n` basis, densely.
    pub fn coordinates(&self, c: &Chain<F>) -> Result<Vec<F>> {
        self.spaces[c.degree()].coordinates(c)
    }

    pub fn dense_column(&self, n: usize, j: usize) -> Vec<F> {
        to_dense(&self.boundaries[n][j], self.dim(n - 1))
    }
}

fn boundary_in<F: Field>(family: &PathFamily, c: &Chain<F>) -> Result<Chain<F>> {
    Ok(super::regular_boundary(c)?.filtered(|p| family.keeps(p)))
}
