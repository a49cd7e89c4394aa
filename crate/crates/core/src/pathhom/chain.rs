use std::collections::BTreeMap;
use std::fmt;

use crate::digraph::{DiGraph, Vertex};
use crate::error::{Error, Result};
use crate::field::Field;

/// A vertex tuple with no two consecutive entries equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularPath(Vec<Vertex>);

impl fmt::Debug for RegularPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl RegularPath {
    /// Fails when two consecutive vertices coincide or the tuple is empty.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Parameter("a path needs at least one vertex".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!("{vertices:?} repeats a vertex consecutively")));
        }
        Ok(RegularPath(vertices))
    }

    /// Returns `None` for degenerate tuples.
    pub fn regular(vertices: Vec<Vertex>) -> Option<Self> {
        let ok = !vertices.is_empty() && vertices.windows(2).all(|w| w[0] != w[1]);
        ok.then_some(RegularPath(vertices))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] != w[1]));
        RegularPath(vertices)
    }

    /// Parses vertex labels of `g`.
    pub fn from_labels<S: AsRef<str>>(g: &DiGraph, labels: &[S]) -> Result<Self> {
        let vs = labels
            .iter()
            .map(|l| g.vertex(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    /// Every consecutive pair is an edge of `g`.
    pub fn is_allowed(&self, g: &DiGraph) -> bool {
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// Regular boundary terms with signs; degenerate faces are omitted.
    pub fn faces(&self) -> impl Iterator<Item = (RegularPath, i64)> + '_ {
        let n = self.degree();
        (0..=n).filter_map(move |i| {
            if n == 0 {
                return None;
            }
            if i > 0 && i < n && self.0[i - 1] == self.0[i + 1] {
                return None;
            }
            let mut q = Vec::with_capacity(n);
            q.extend_from_slice(&self.0[..i]);
            q.extend_from_slice(&self.0[i + 1..]);
            Some((RegularPath(q), if i % 2 == 0 { 1 } else { -1 }))
        })
    }

    pub fn display(&self, g: &DiGraph) -> String {
        let labels: Vec<&str> = self.0.iter().map(|&v| g.label(v)).collect();
        if labels.iter().all(|l| l.chars().count() == 1) {
            labels.concat()
        } else {
            format!("[{}]", labels.join(","))
        }
    }
}

/// A finite linear combination of regular paths of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain<F> {
    degree: usize,
    terms: BTreeMap<RegularPath, F>,
}

impl<F: fmt::Debug> fmt::Debug for Chain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Chain<F> {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(path: RegularPath) -> Self {
        let mut c = Self::zero(path.degree());
        c.add_term(path, F::one());
        c
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RegularPath, F)>,
    {
        let mut c = Self::zero(degree);
        for (p, x) in terms {
            if p.degree() != degree {
                return Err(Error::Dimension(format!(
                    "path of degree {} in a degree {degree} chain",
                    p.degree()
                )));
            }
            c.add_term(p, x);
        }
        Ok(c)
    }

    /// Builds a chain from labelled paths and integer coefficients.
    pub fn from_labelled<S: AsRef<str>>(g: &DiGraph, terms: &[(i64, &[S])]) -> Result<Self> {
        let degree = terms.first().map_or(0, |(_, p)| p.len().saturating_sub(1));
        let parsed = terms
            .iter()
            .map(|(c, p)| Ok((RegularPath::from_labels(g, p)?, F::from_i64(*c))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(degree, parsed)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `coeff * path`; the path's degree is not rechecked.
    pub fn add_term(&mut self, path: RegularPath, coeff: F) {
        debug_assert_eq!(path.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn coefficient(&self, path: &RegularPath) -> F {
        self.terms.get(path).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RegularPath, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x.clone() * c.clone());
        }
        out
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &F, other: &Chain<F>) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), c.clone() * x.clone());
        }
    }

    pub fn plus(&self, other: &Chain<F>) -> Self {
        let mut out = self.clone();
        out.add_scaled(&F::one(), other);
        out
    }

    pub fn minus(&self, other: &Chain<F>) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-F::one(), other);
        out
    }

    /// Keeps only the terms whose path satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&RegularPath) -> bool) -> Self {
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, x)| (p.clone(), x.clone()))
                .collect(),
        }
    }

    /// True when `self` and `other` agree up to a nonzero scalar.
    pub fn proportional_to(&self, other: &Chain<F>) -> bool {
        let (Some((p, x)), false) = (self.terms.iter().next(), other.is_zero()) else {
            return self.is_zero() && other.is_zero();
        };
        let y = other.coefficient(p);
        if y.is_zero() {
            return false;
        }
        other.scaled(&(x.clone() / y)) == *self
    }

    pub fn display(&self, g: &DiGraph) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, x)) in self.terms.iter().enumerate() {
            let text = x.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push('*');
            }
            s.push_str(&p.display(g));
        }
        s
    }
}

/// Alternating-sum boundary with degenerate faces discarded.
pub fn regular_boundary<F: Field>(c: &Chain<F>) -> Result<Chain<F>> {
    if c.degree() == 0 {
        return Err(Error::Parameter("boundary of a degree 0 chain".into()));
    }
    let mut out = Chain::zero(c.degree() - 1);
    for (p, x) in c.terms() {
        for (q, s) in p.faces() {
            let coeff = if s > 0 { x.clone() } else { -x.clone() };
            out.add_term(q, coeff);
        }
    }
    Ok(out)
}
