//! Exact linear algebra over the rationals.
//!
//! Matrices are stored by sparse columns. Every elimination in this module
//! pivots on the *largest* nonzero index of a vector; as a consequence the
//! indices left without a pivot are exactly the ones a greedy scan in
//! ascending index order would pick as complement representatives.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

/// `v -= c * p`.
fn axpy(v: &mut SparseVec, c: &Rational, p: &SparseVec) {
    for (i, a) in p {
        let delta = c * a;
        match v.entry(*i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

fn normalize(v: &mut SparseVec) {
    let (_, lead) = v.iter().next_back().expect("nonzero vector");
    let inv = lead.recip();
    for a in v.values_mut() {
        *a *= &inv;
    }
}

/// A reduced spanning set of a subspace of `F^dim`, keyed by pivot (= largest index).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    dim: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates leading entries until the leading index is not a pivot.
    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((&lead, c)) = v.iter().next_back() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = c.clone();
                    axpy(&mut v, &c, p);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce_leading(v);
        if v.is_empty() {
            return false;
        }
        normalize(&mut v);
        let lead = *v.keys().next_back().unwrap();
        self.pivots.insert(lead, v);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v.clone()).is_empty()
    }

    /// Normal form of `v` modulo the span: the result has no entry at any pivot index.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut bound = usize::MAX;
        loop {
            let next = v
                .range(..bound)
                .rev()
                .find(|(i, _)| self.pivots.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match next {
                Some((i, c)) => {
                    axpy(&mut v, &c, &self.pivots[&i]);
                    bound = i;
                }
                None => return v,
            }
        }
    }

    pub fn pivot_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivots.contains_key(&i)
    }

    /// Indices without a pivot, ascending; their unit vectors span a complement.
    pub fn free_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.pivots.contains_key(i)).collect()
    }

    /// Fully reduced pivot rows, every row vanishing on every other pivot index.
    fn reduced_rows(&self) -> BTreeMap<usize, SparseVec> {
        let mut out = BTreeMap::new();
        for (&p, row) in &self.pivots {
            let mut r = row.clone();
            let lead = r.remove(&p).expect("pivot entry");
            let mut r = self.reduce(r);
            r.insert(p, lead);
            out.insert(p, r);
        }
        out
    }

    /// Basis of the orthogonal solution space `{x : <row, x> = 0 for all rows}`.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let rows = self.reduced_rows();
        let mut by_free: BTreeMap<usize, SparseVec> = self
            .free_indices()
            .into_iter()
            .map(|f| (f, SparseVec::from([(f, Rational::one())])))
            .collect();
        for (&p, row) in &rows {
            for (i, c) in row {
                if *i == p {
                    continue;
                }
                if let Some(v) = by_free.get_mut(i) {
                    v.insert(p, -c.clone());
                }
            }
        }
        by_free.into_values().collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.pivots.values()
    }
}

/// Exact rational matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            nrows: n,
            cols: (0..n).map(|i| SparseVec::from([(i, Rational::one())])).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < nrows)));
        Matrix { nrows, cols }
    }

    /// From row-major dense entries.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (c, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    m.cols[c].insert(r, a.clone());
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Rational {
        self.cols[c].get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols()]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, a) in col {
                out[*r][c] = a.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_empty)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ncols(), self.nrows);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, a) in col {
                t.cols[*r].insert(c, a.clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, a) in v {
            axpy(&mut out, &-a.clone(), &self.cols[*j]);
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch");
        Matrix {
            nrows: self.nrows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.nrows, self.ncols());
        }
        Matrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, a)| (*r, a * c)).collect())
                .collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.nrows, other.nrows, "row mismatch");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Matrix { nrows: self.nrows, cols }
    }

    /// Echelon form of the column space.
    pub fn column_echelon(&self) -> Echelon {
        Echelon::from_vectors(self.nrows, &self.cols)
    }

    pub fn rank(&self) -> usize {
        if self.nrows < self.ncols() {
            Echelon::from_vectors(self.ncols(), &self.transpose().cols).rank()
        } else {
            self.column_echelon().rank()
        }
    }

    /// Basis of `{v : M v = 0}`. Pivots sit on the last columns, so every
    /// basis vector has a single unit entry on a free (earlier) column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rows = self.transpose();
        Echelon::from_vectors(self.ncols(), &rows.cols).null_space()
    }

    pub fn nullity(&self) -> usize {
        self.ncols() - self.rank()
    }

    /// Columns that extend the span of the earlier columns; together they form a basis of the image.
    pub fn image_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new(self.nrows);
        self.cols
            .iter()
            .filter(|c| e.insert((*c).clone()))
            .cloned()
            .collect()
    }

    /// Target unit vectors spanning a complement of the image, chosen greedily in ascending index order.
    pub fn cokernel_representatives(&self) -> Vec<usize> {
        self.column_echelon().free_indices()
    }
}
