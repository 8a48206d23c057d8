use std::fmt;

use num_traits::{One, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// A vector of `Q^dim` stored as sorted `(index, value)` pairs without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit vector index {i} out of range {dim}");
        Self {
            dim,
            entries: vec![(i, Scalar::one())],
        }
    }

    /// Entries may be unsorted and repeated; repeats are summed.
    pub fn from_entries(dim: usize, mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range {dim}");
            match out.last_mut() {
                Some((j, w)) if *j == i => *w += v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Self { dim, entries: out }
    }

    /// Caller guarantees sorted, unique, nonzero entries.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        Self { dim, entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        Self {
            dim: values.len(),
            entries,
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        let dense: Vec<Scalar> = values.iter().map(|&v| super::int(v)).collect();
        Self::from_dense(&dense)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + c * y;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Scalar::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += x * y;
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Embed into `Q^new_dim` at offset `shift`.
    pub fn shifted(&self, shift: usize, new_dim: usize) -> SparseVec {
        assert!(shift + self.dim <= new_dim);
        SparseVec {
            dim: new_dim,
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (i + shift, v.clone()))
                .collect(),
        }
    }

    /// Coordinates `start..start+len` as a vector of `Q^len`.
    pub fn slice(&self, start: usize, len: usize) -> SparseVec {
        SparseVec {
            dim: len,
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, v)| (i - start, v.clone()))
                .collect(),
        }
    }

    /// `(self, other)` in `Q^{dim + other.dim}`.
    pub fn concat(&self, other: &SparseVec) -> SparseVec {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(i, v)| (i + self.dim, v.clone())));
        SparseVec {
            dim: self.dim + other.dim,
            entries,
        }
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {}", super::format_scalar(v))?;
        }
        write!(f, "]")
    }
}

/// Row-major sparse matrix. A matrix sends `Q^cols` to `Q^rows` by `v ↦ M v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::zero(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| SparseVec::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        assert!(data.iter().all(|r| r.dim() == cols), "row length mismatch");
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut triplets = Vec::new();
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.dim(), rows, "column length mismatch");
            for (i, v) in c.entries() {
                triplets.push((*i, j, v.clone()));
            }
        }
        Self::from_triplets(rows, columns.len(), triplets)
    }

    /// Repeated positions are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            assert!(
                i < rows && j < cols,
                "entry ({i},{j}) outside {rows}x{cols}"
            );
            buckets[i].push((j, v));
        }
        Self {
            rows,
            cols,
            data: buckets
                .into_iter()
                .map(|b| SparseVec::from_entries(cols, b))
                .collect(),
        }
    }

    pub fn from_dense(rows: usize, cols: usize, values: &[Vec<Scalar>]) -> Self {
        assert_eq!(values.len(), rows);
        Self {
            rows,
            cols,
            data: values
                .iter()
                .map(|r| {
                    assert_eq!(r.len(), cols);
                    SparseVec::from_dense(r)
                })
                .collect(),
        }
    }

    pub fn from_i64(values: &[Vec<i64>]) -> Self {
        let rows = values.len();
        let cols = values.first().map_or(0, |r| r.len());
        Self {
            rows,
            cols,
            data: values.iter().map(|r| SparseVec::from_i64(r)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r.entries() {
                buckets[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: buckets
                .into_iter()
                .map(|b| SparseVec::from_sorted_unchecked(self.rows, b))
                .collect(),
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    /// `M v`.
    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.dim() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let s = r.dot(v);
                (!s.is_zero()).then_some((i, s))
            })
            .collect();
        Ok(SparseVec::from_sorted_unchecked(self.rows, entries))
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: Vec<(usize, Scalar)> = Vec::new();
                for (k, v) in r.entries() {
                    for (j, w) in other.data[*k].entries() {
                        acc.push((*j, v * w));
                    }
                }
                SparseVec::from_entries(other.cols, acc)
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn add_scaled(&self, c: &Scalar, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_scaled(c, b))
                .collect(),
        })
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(SparseVec::to_dense).collect()
    }
}

impl SparseMatrix {
    /// Kronecker product: `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut triplets = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            for (j, a) in r.entries() {
                for (k, s) in other.data.iter().enumerate() {
                    for (l, b) in s.entries() {
                        triplets.push((i * other.rows + k, j * other.cols + l, a * b));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(self.rows * other.rows, self.cols * other.cols, triplets)
    }

    pub fn block_diag(&self, other: &SparseMatrix) -> SparseMatrix {
        let cols = self.cols + other.cols;
        let mut data: Vec<SparseVec> = self.data.iter().map(|r| r.shifted(0, cols)).collect();
        data.extend(other.data.iter().map(|r| r.shifted(self.cols, cols)));
        SparseMatrix {
            rows: self.rows + other.rows,
            cols,
            data,
        }
    }

    /// Exact inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let rows: Vec<SparseVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| r.concat(&SparseVec::unit(n, i)))
            .collect();
        let rref = super::elim::row_echelon(2 * n, &rows);
        if rref.pivots.len() != n || rref.pivots.iter().enumerate().any(|(k, &p)| k != p) {
            return None;
        }
        Some(SparseMatrix::from_rows(
            n,
            rref.rows.iter().map(|r| r.slice(n, n)).collect(),
        ))
    }
}
