use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix with labelled rows and columns.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledMatrix<F> {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<F>,
}

fn check_unique(labels: &[String], axis: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::Dimension(format!("duplicate {axis} label `{l}`")));
        }
    }
    Ok(())
}

impl<F: Field> LabeledMatrix<F> {
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, entries: Vec<F>) -> Result<Self> {
        if entries.len() != row_labels.len() * col_labels.len() {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                row_labels.len(),
                col_labels.len()
            )));
        }
        check_unique(&row_labels, "row")?;
        check_unique(&col_labels, "column")?;
        Ok(LabeledMatrix {
            row_labels,
            col_labels,
            entries,
        })
    }

    /// Matrix with rows and columns labelled by their indices.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(
            (0..r).map(|i| i.to_string()).collect(),
            (0..c).map(|i| i.to_string()).collect(),
            rows.into_iter().flatten().collect(),
        )
    }

    pub fn zeros(row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        let n = row_labels.len() * col_labels.len();
        Self::new(row_labels, col_labels, vec![F::zero(); n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::from_rows(vec![vec![F::zero(); n]; n]).expect("square");
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.ncols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F) {
        let n = self.ncols();
        self.entries[r * n + c] = value;
    }

    pub fn row(&self, r: usize) -> &[F] {
        let n = self.ncols();
        &self.entries[r * n..(r + 1) * n]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.nrows()).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.ncols() {
            for r in 0..self.nrows() {
                entries.push(self.get(r, c).clone());
            }
        }
        LabeledMatrix {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries,
        }
    }

    /// Matrix product `self * rhs`; inner dimensions must agree.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let (n, m) = (self.nrows(), rhs.ncols());
        let mut entries = vec![F::zero(); n * m];
        for i in 0..n {
            for k in 0..self.ncols() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * m + j] = entries[i * m + j].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: rhs.col_labels.clone(),
            entries,
        })
    }

    /// `self * v`.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.ncols() {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.ncols()
            )));
        }
        Ok((0..self.nrows())
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Reduced row echelon form and its pivot columns. Pivots are chosen as
    /// the first nonzero entry of each column, scanning rows top-down.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.nrows(), m.ncols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.entries.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = F::one() / m.get(r, c).clone();
            for j in c..cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let pv = m.get(r, j).clone();
                    if !pv.is_zero() {
                        let v = m.get(i, j).clone() - factor.clone() * pv;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one vector per free column: vector `k` is `1` at
    /// the `k`-th free column and `0` at every other free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let cols = self.ncols();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); cols];
                v[free] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, free).clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is
    /// inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.nrows() {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.nrows()
            )));
        }
        let cols = self.ncols();
        let mut aug_entries = Vec::with_capacity(self.nrows() * (cols + 1));
        for (r, x) in b.iter().enumerate() {
            aug_entries.extend_from_slice(self.row(r));
            aug_entries.push(x.clone());
        }
        let mut col_labels: Vec<String> = (0..cols).map(|i| i.to_string()).collect();
        col_labels.push("rhs".into());
        let aug = LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels,
            entries: aug_entries,
        };
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, cols).clone();
        }
        Ok(Some(x))
    }

    /// CSV dump with a header row of column labels and a leading label column.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("\"\"");
        for c in &self.col_labels {
            let _ = write!(s, ",{c}");
        }
        s.push('\n');
        for r in 0..self.nrows() {
            s.push_str(&self.row_labels[r]);
            for v in self.row(r) {
                let _ = write!(s, ",{v}");
            }
            s.push('\n');
        }
        s
    }
}

use num_traits::Zero;

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(m: &LabeledMatrix<F>) -> (LabeledMatrix<F>, Vec<usize>) {
    m.rref()
}

pub fn rank<F: Field>(m: &LabeledMatrix<F>) -> usize {
    m.rank()
}

pub fn nullspace_basis<F: Field>(m: &LabeledMatrix<F>) -> Vec<Vec<F>> {
    m.nullspace_basis()
}

pub fn solve<F: Field>(m: &LabeledMatrix<F>, b: &[F]) -> Result<Option<Vec<F>>> {
    m.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F2, F7};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn mat(rows: &[&[i64]]) -> LabeledMatrix<Rational> {
        LabeledMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
            .unwrap()
    }

    fn check_rank_nullity(m: &LabeledMatrix<Rational>) {
        let ns = m.nullspace_basis();
        assert_eq!(m.rank() + ns.len(), m.ncols());
        for v in &ns {
            assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn zero_and_identity() {
        let z = mat(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.rank(), 0);
        check_rank_nullity(&z);
        let i = LabeledMatrix::<Rational>::identity(3);
        assert_eq!(i.rank(), 3);
        assert!(i.nullspace_basis().is_empty());
        let b = vec![q(4), q(-1), q(2)];
        assert_eq!(i.solve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn boundary_of_the_triangle_cycle() {
        // columns 01, 12, 20; rows 0, 1, 2
        let d1 = mat(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        assert_eq!(d1.rank(), 2);
        let ns = d1.nullspace_basis();
        assert_eq!(ns, vec![vec![q(1), q(1), q(1)]]);
        check_rank_nullity(&d1);
    }

    #[test]
    fn single_row_kernel() {
        let m = mat(&[&[1, -1]]);
        assert_eq!(m.nullspace_basis(), vec![vec![q(1), q(1)]]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = mat(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4]]);
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
        assert_eq!(p, vec![0, 2]);
        check_rank_nullity(&m);
    }

    #[test]
    fn solve_inconsistent() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.solve(&[q(1), q(3)]).unwrap(), None);
        let x = m.solve(&[q(1), q(2)]).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), vec![q(1), q(2)]);
        assert!(m.solve(&[q(1)]).is_err());
    }

    #[test]
    fn characteristic_dependence() {
        // det = 2: invertible over Q and F_7, singular over F_2
        let rows = [[1i64, 1], [1, -1]];
        let f7 = LabeledMatrix::<F7>::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| F7::from_i64(v)).collect()).collect(),
        )
        .unwrap();
        let f2 = LabeledMatrix::<F2>::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| F2::from_i64(v)).collect()).collect(),
        )
        .unwrap();
        assert_eq!(f7.rank(), 2);
        assert_eq!(f2.rank(), 1);
    }

    #[test]
    fn product_and_csv() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let i = LabeledMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert!(a.mul(&mat(&[&[1, 2, 3]])).is_err());
        let csv = a.to_csv();
        assert_eq!(csv.lines().next().unwrap(), "\"\",0,1");
        assert_eq!(csv.lines().nth(2).unwrap(), "1,3,4");
        assert!(LabeledMatrix::<Rational>::new(vec!["a".into(), "a".into()], vec![], vec![]).is_err());
    }
}
