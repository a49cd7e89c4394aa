use std::collections::{BTreeMap, HashMap};

use crate::field::Field;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no
/// zero values.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `acc += c * v`, removing entries that cancel.
pub fn axpy<F: Field>(acc: &mut BTreeMap<usize, F>, c: &F, v: &[(usize, F)]) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        let add = c.clone() * x.clone();
        match acc.entry(*i) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + add;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if !add.is_zero() {
                    e.insert(add);
                }
            }
        }
    }
}

pub fn to_map<F: Field>(v: &[(usize, F)]) -> BTreeMap<usize, F> {
    v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect()
}

pub fn from_map<F: Field>(m: BTreeMap<usize, F>) -> SparseVec<F> {
    m.into_iter().collect()
}

pub fn scale<F: Field>(v: &mut SparseVec<F>, c: &F) {
    for (_, x) in v.iter_mut() {
        *x = x.clone() * c.clone();
    }
}

/// Value at `index`, or zero.
pub fn coeff<F: Field>(v: &[(usize, F)], index: usize) -> F {
    v.binary_search_by_key(&index, |(i, _)| *i)
        .map(|p| v[p].1.clone())
        .unwrap_or_else(|_| F::zero())
}

pub fn to_dense<F: Field>(v: &[(usize, F)], len: usize) -> Vec<F> {
    let mut d = vec![F::zero(); len];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

pub fn from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Incrementally built echelon basis of a subspace.
///
/// Each stored vector is normalised to a leading `1` at a distinct pivot
/// index, with no entries at earlier pivots' indices below its own lead.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan<F> {
    pivots: HashMap<usize, SparseVec<F>>,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new() -> Self {
        EchelonSpan {
            pivots: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Residual of `v` after elimination against the stored pivots.
    pub fn reduce(&self, v: &[(usize, F)]) -> BTreeMap<usize, F> {
        let mut work = to_map(v);
        let mut cursor = 0;
        while let Some((&r, c)) = work.range(cursor..).next() {
            if let Some(p) = self.pivots.get(&r) {
                let c = -c.clone();
                axpy(&mut work, &c, p);
            } else {
                cursor = r + 1;
            }
        }
        work
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let work = self.reduce(v);
        let Some((&lead, lc)) = work.iter().next() else {
            return false;
        };
        let inv = F::one() / lc.clone();
        let mut stored = from_map(work);
        scale(&mut stored, &inv);
        self.pivots.insert(lead, stored);
        true
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut span = EchelonSpan::new();
    vectors.iter().filter(|v| span.insert(v)).count()
}

/// Kernel of the linear map sending basis vector `j` to `columns[j]`.
///
/// `keys` are the free columns: `basis[k]` has coefficient `1` at `keys[k]`
/// and `0` at every other key, so the coordinates of a kernel element are
/// its values at the keys.
#[derive(Clone, Debug)]
pub struct Kernel<F> {
    pub basis: Vec<SparseVec<F>>,
    pub keys: Vec<usize>,
}

impl<F: Field> Kernel<F> {
    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    /// Coordinates of `v` in the kernel basis, or `None` when `v` is not in
    /// the kernel span.
    pub fn coordinates(&self, v: &[(usize, F)]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.keys.iter().map(|&k| coeff(v, k)).collect();
        let mut recon = BTreeMap::new();
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut recon, c, b);
        }
        let mut diff = to_map(v);
        axpy(&mut diff, &-F::one(), &from_map(recon));
        diff.is_empty().then_some(coords)
    }
}

pub fn kernel<F: Field>(columns: &[SparseVec<F>]) -> Kernel<F> {
    // pivot row -> (reduced column with leading 1, combination of inputs)
    let mut pivots: HashMap<usize, (SparseVec<F>, SparseVec<F>)> = HashMap::new();
    let mut basis = Vec::new();
    let mut keys = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut work = to_map(col);
        let mut combo: BTreeMap<usize, F> = BTreeMap::new();
        combo.insert(j, F::one());
        let mut cursor = 0;
        while let Some((&r, c)) = work.range(cursor..).next() {
            if let Some((pv, pc)) = pivots.get(&r) {
                let c = -c.clone();
                axpy(&mut work, &c, pv);
                axpy(&mut combo, &c, pc);
            } else {
                cursor = r + 1;
            }
        }
        match work.iter().next() {
            None => {
                basis.push(from_map(combo));
                keys.push(j);
            }
            Some((&lead, lc)) => {
                let inv = F::one() / lc.clone();
                let mut v = from_map(work);
                let mut cmb = from_map(combo);
                scale(&mut v, &inv);
                scale(&mut cmb, &inv);
                pivots.insert(lead, (v, cmb));
            }
        }
    }
    Kernel { basis, keys }
}
