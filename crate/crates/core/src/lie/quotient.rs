//! Enveloping algebras of arbitrary quadratic presentations, computed as
//! weight-graded quotients of the tensor algebra.
//!
//! Weight `r` of `T(V)/(R)` is `(UL(r−1) ⊗ V) / (UL(r−2) ⊗ R)`. Spanning
//! columns are pairs `(b, x)` of a basis element of weight `r − 1` and a
//! generator, ordered so that column order is lexicographic order on the
//! spelled words. Relation rows are eliminated with the largest column as
//! pivot; the surviving columns are the lexicographically least words and
//! form the basis of weight `r`. Expressing every pivot column through the
//! survivors yields right multiplication by generators.

use crate::config::Limits;
use crate::error::Result;
use crate::linalg::{Echelon, SparseVec};

use super::{check_generators, check_top, GradedAlgebra, GradedDims, WeightedPresentation};

#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    n: usize,
    /// `basis[w][b]` = `(parent, x)`; weight 0 holds a placeholder for `1`.
    basis: Vec<Vec<(u32, u8)>>,
    /// `table[w][b * n + x]` = `b · x` in the weight `w + 1` basis.
    table: Vec<Vec<SparseVec>>,
}

/// Result of eliminating relations in one weight.
struct Level {
    basis: Vec<(u32, u8)>,
    /// Right multiplication into this weight, when requested.
    table: Option<Vec<SparseVec>>,
}

fn relation_rows(p: &WeightedPresentation, n: usize, below: Option<&[SparseVec]>, prev_dim: usize) -> Echelon {
    let mut e = Echelon::new();
    let Some(below) = below else { return e };
    let q_count = below.len() / n.max(1);
    for q in 0..q_count {
        for rel in p.relations() {
            let mut entries = Vec::new();
            for ((x, y), c) in rel.terms() {
                for (b, a) in below[q * n + x].entries() {
                    debug_assert!(*b < prev_dim);
                    entries.push((b * n + y, c * a));
                }
            }
            e.insert(SparseVec::from_entries(entries));
        }
    }
    e
}

fn next_level(
    p: &WeightedPresentation,
    n: usize,
    below: Option<&[SparseVec]>,
    prev_dim: usize,
    with_table: bool,
    limits: &Limits,
) -> Result<Level> {
    let mut e = relation_rows(p, n, below, prev_dim);
    let cols = prev_dim * n;
    limits.check_basis(cols - e.rank(), "quotient weight piece")?;
    if !with_table {
        let basis = (0..cols)
            .filter(|c| !e.is_pivot(*c))
            .map(|c| ((c / n) as u32, (c % n) as u8))
            .collect();
        return Ok(Level { basis, table: None });
    }
    e.make_reduced();
    let mut new_index = vec![u32::MAX; cols];
    let mut basis = Vec::with_capacity(cols - e.rank());
    for (c, slot) in new_index.iter_mut().enumerate() {
        if !e.is_pivot(c) {
            *slot = basis.len() as u32;
            basis.push(((c / n) as u32, (c % n) as u8));
        }
    }
    let table = (0..cols)
        .map(|c| match e.pivot_row(c) {
            None => SparseVec::unit(new_index[c] as usize),
            Some(row) => {
                let head = &row.entries()[..row.nnz() - 1];
                SparseVec::from_sorted(
                    head.iter().map(|(j, a)| (new_index[*j] as usize, -a)).collect(),
                )
            }
        })
        .collect();
    Ok(Level { basis, table: Some(table) })
}

impl QuotientAlgebra {
    pub fn new(p: &WeightedPresentation, top: usize, limits: &Limits) -> Result<Self> {
        Self::build(p, top, true, limits)
    }

    fn build(p: &WeightedPresentation, top: usize, last_table: bool, limits: &Limits) -> Result<Self> {
        check_top(top, limits)?;
        let n = p.n_generators();
        check_generators(n, limits)?;
        let mut basis: Vec<Vec<(u32, u8)>> = vec![vec![(0, 0)]];
        let mut table: Vec<Vec<SparseVec>> = Vec::new();
        for r in 1..=top {
            let below = if r >= 2 { Some(table[r - 2].as_slice()) } else { None };
            let with_table = r < top || last_table;
            let level = next_level(p, n, below, basis[r - 1].len(), with_table, limits)?;
            basis.push(level.basis);
            if let Some(t) = level.table {
                table.push(t);
            }
        }
        Ok(QuotientAlgebra { n, basis, table })
    }
}

impl GradedAlgebra for QuotientAlgebra {
    fn n_generators(&self) -> usize {
        self.n
    }

    fn top_weight(&self) -> usize {
        self.basis.len() - 1
    }

    fn dim(&self, w: usize) -> usize {
        self.basis[w].len()
    }

    fn mul_generator(&self, w: usize, b: usize, x: usize) -> SparseVec {
        self.table[w][b * self.n + x].clone()
    }

    fn split_last(&self, w: usize, b: usize) -> (usize, usize) {
        let (parent, x) = self.basis[w][b];
        (parent as usize, x as usize)
    }
}

/// `dim UL(r)` for `r ≤ w_max`, by exact elimination in the tensor algebra.
pub fn ul_dims_quotient(p: &WeightedPresentation, w_max: usize, limits: &Limits) -> Result<GradedDims> {
    let a = QuotientAlgebra::build(p, w_max, false, limits)?;
    Ok(GradedDims::new(0, a.basis.iter().map(|b| b.len() as u64).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::lie::{normal_form, raag_presentation, surface_presentation, TraceAlgebra};

    fn dims(p: &WeightedPresentation, w: usize) -> Vec<u64> {
        ul_dims_quotient(p, w, &Limits::default()).unwrap().dims
    }

    #[test]
    fn examples() {
        assert_eq!(dims(&raag_presentation(&Graph::discrete(2)), 4), vec![1, 2, 4, 8, 16]);
        assert_eq!(dims(&raag_presentation(&Graph::complete(3)), 3), vec![1, 3, 6, 10]);
        assert_eq!(dims(&surface_presentation(2).unwrap(), 4), vec![1, 4, 15, 56, 209]);
        assert_eq!(dims(&raag_presentation(&Graph::cycle(4)), 5), vec![1, 4, 12, 32, 80, 192]);
    }

    #[test]
    fn torus_is_polynomial() {
        assert_eq!(dims(&surface_presentation(1).unwrap(), 5), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn standard_words_are_trace_normal_forms() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let q = QuotientAlgebra::new(&raag_presentation(&g), 4, &Limits::default()).unwrap();
        let t = TraceAlgebra::new(&g, 4, &Limits::default()).unwrap();
        for w in 0..=4 {
            assert_eq!(q.dim(w), t.dim(w));
            for b in 0..q.dim(w) {
                assert_eq!(q.basis_word(w, b), t.word(w, b));
            }
        }
        let word = [3, 2, 1, 0];
        let v = q.reduce_word(&word);
        assert_eq!(v.nnz(), 1);
        assert_eq!(q.basis_word(4, v.entries()[0].0), normal_form(&g, &word));
    }

    #[test]
    fn surface_relation_holds() {
        let s = QuotientAlgebra::new(&surface_presentation(2).unwrap(), 3, &Limits::default()).unwrap();
        // a1 b1 - b1 a1 + a2 b2 - b2 a2 = 0
        let terms = [([0, 1], 1), ([1, 0], -1), ([2, 3], 1), ([3, 2], -1)];
        let (mut acc, mut left) = (SparseVec::new(), SparseVec::new());
        for (w, c) in terms {
            let c = crate::linalg::Rational::from_int(c);
            acc = acc.add_scaled(&c, &s.reduce_word(&w));
            left = left.add_scaled(&c, &s.reduce_word(&[2, w[0], w[1]]));
        }
        assert!(acc.is_zero());
        assert!(left.is_zero());
        assert!(!s.reduce_word(&[2, 0, 1]).is_zero());
    }

    #[test]
    fn generator_cap() {
        let limits = Limits { max_generators: 3, ..Limits::default() };
        assert!(ul_dims_quotient(&surface_presentation(2).unwrap(), 2, &limits).is_err());
    }
}
