//! Sparse exact vectors and an incremental row-echelon basis.
//!
//! The graded pieces of enveloping algebras and resolutions have tens of
//! thousands of basis elements but only a handful of nonzeros per relation
//! row, so these computations run on sorted sparse vectors. Every echelon
//! row is normalized with its pivot (its largest index) equal to one.

use std::collections::HashMap;

use super::Rational;

/// A sparse vector: strictly increasing indices, no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: vec![(index, Rational::one())] }
    }

    /// Builds from unsorted, possibly repeated entries; duplicates are summed.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    /// Builds from entries already sorted by strictly increasing index.
    pub fn from_sorted(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let entries = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// The largest index with a nonzero entry.
    pub fn leading(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, factor: &Rational) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, c)| (*i, c * factor)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect() }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rational, other: &SparseVec) -> SparseVec {
        if factor.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                out.push(a[i].clone());
                i += 1;
            } else if a[i].0 > b[j].0 {
                out.push((b[j].0, factor * &b[j].1));
                j += 1;
            } else {
                let c = &a[i].1 + &(factor * &b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(k, c)| (*k, factor * c)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Rational::one(), other)
    }

    /// Applies `f` to every index. `f` must be injective.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, (i, c)| &acc + &(c * &dense[*i]))
    }
}

/// Incremental echelon basis of a subspace of `Q^ncols`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row.get(&col).map(|&r| &self.rows[r])
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Cancels the leading entry repeatedly until it is not a pivot column.
    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some(lead) = v.leading() {
            match self.pivot_row.get(&lead) {
                Some(&r) => {
                    let c = v.entries.last().unwrap().1.clone();
                    v = v.add_scaled(&-c, &self.rows[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot column from `v`; the result is the canonical
    /// remainder of `v` modulo the span, supported on non-pivot columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut bound = usize::MAX;
        loop {
            let next = v
                .entries
                .iter()
                .rev()
                .find(|(i, _)| *i < bound && self.pivot_row.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match next {
                Some((col, c)) => {
                    let r = self.pivot_row[&col];
                    v = v.add_scaled(&-c, &self.rows[r]);
                    bound = col;
                }
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v.clone()).is_zero()
    }

    /// Adds `v` to the span. Returns the new pivot column if `v` was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let v = self.reduce_leading(v);
        let lead = v.leading()?;
        let c = v.entries.last().unwrap().1.recip();
        let v = v.scale(&c);
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(v);
        Some(lead)
    }

    /// Back-substitutes so that every row is zero at every other pivot column.
    pub fn make_reduced(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].leading());
        for r in order {
            let row = std::mem::take(&mut self.rows[r]);
            let lead = row.leading().expect("echelon rows are nonzero");
            let (head, pivot) = row.entries.split_at(row.entries.len() - 1);
            let tail = self.reduce(SparseVec { entries: head.to_vec() });
            let mut entries = tail.entries;
            entries.push((lead, pivot[0].1.clone()));
            self.rows[r] = SparseVec { entries };
        }
    }
}

/// A sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn from_cols(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.leading().map_or(true, |l| l < nrows)));
        SparseMatrix { nrows, ncols: cols.len(), cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.entries() {
                rows[*i].push((j, c.clone()));
            }
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            cols: rows.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in v.entries() {
            acc = acc.add_scaled(c, &self.cols[*j]);
        }
        acc
    }

    /// `self * rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows);
        SparseMatrix::from_cols(self.nrows, rhs.cols.iter().map(|c| self.apply(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        // the shorter side keeps the echelon smaller
        if self.ncols <= self.nrows {
            for c in &self.cols {
                e.insert(c.clone());
            }
        } else {
            for r in self.transpose().cols {
                e.insert(r);
            }
        }
        e.rank()
    }

    /// A basis of the kernel, one vector per non-pivot column of the row space.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for r in self.transpose().cols {
            e.insert(r);
        }
        e.make_reduced();
        let mut by_col: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for row in e.rows() {
            let lead = row.leading().unwrap();
            for (i, c) in &row.entries()[..row.nnz() - 1] {
                by_col.entry(*i).or_default().push((lead, -c));
            }
        }
        (0..self.ncols)
            .filter(|j| !e.is_pivot(*j))
            .map(|j| {
                let mut entries = by_col.remove(&j).unwrap_or_default();
                entries.push((j, Rational::one()));
                SparseVec::from_entries(entries)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(i, c)| (i, Rational::from_int(c))).collect())
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[(0, 1), (3, 2)]);
        let b = v(&[(3, 1), (5, 1)]);
        assert_eq!(a.add_scaled(&Rational::from_int(-2), &b), v(&[(0, 1), (5, -2)]));
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, -1)])).is_some());
        assert!(e.insert(v(&[(1, 1), (2, -1)])).is_some());
        assert!(e.insert(v(&[(0, 1), (2, -1)])).is_none());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (2, -2)])));
        assert!(!e.contains(&v(&[(0, 1)])));
        // remainders are supported on non-pivot columns
        let r = e.reduce(v(&[(2, 1)]));
        assert!(r.entries().iter().all(|(i, _)| !e.is_pivot(*i)));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = SparseMatrix::from_cols(
            2,
            vec![v(&[(0, 1)]), v(&[(0, 1), (1, 1)]), v(&[(1, 2)]), v(&[])],
        );
        let k = m.kernel_basis();
        assert_eq!(k.len(), 4 - m.rank());
        for x in &k {
            assert!(m.apply(x).is_zero());
        }
    }
}
