//! Weighted Lie algebras with quadratic presentations and their enveloping
//! algebras: normal forms, graded dimensions, Hilbert series and PBW
//! inversion.
//!
//! Everything is graded by weight, with generators in weight one. An
//! enveloping algebra is materialized weight by weight as a basis together
//! with right multiplication by generators, which is all the resolution code
//! needs.

mod lyndon;
mod presentation;
mod quotient;
mod series;
mod trace;

use std::sync::Arc;

use serde::Serialize;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::SparseVec;

pub use lyndon::{lie_dims_direct, lie_dims_direct_in, lyndon_words, standard_factorization};
pub use presentation::{raag_presentation, surface_presentation, QuadraticRelation, WeightedPresentation};
pub use quotient::{ul_dims_quotient, QuotientAlgebra};
pub use series::{clique_series_dims, lie_dims_pbw_inversion, necklace_count};
pub use trace::{normal_form, ul_dims_normal_form, TraceAlgebra};

/// Graded dimensions `dims[r - start]` for weights `start ..= cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub start: usize,
    pub dims: Vec<u64>,
}

impl GradedDims {
    pub fn new(start: usize, dims: Vec<u64>) -> Self {
        GradedDims { start, dims }
    }

    /// Dimension in weight `r`, if inside the computed range.
    pub fn get(&self, r: usize) -> Option<u64> {
        r.checked_sub(self.start).and_then(|k| self.dims.get(k)).copied()
    }

    /// Largest weight present.
    pub fn cutoff(&self) -> usize {
        (self.start + self.dims.len()).saturating_sub(1)
    }

    /// The `(weight, dim)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.dims.iter().enumerate().map(move |(k, d)| (self.start + k, *d))
    }

    /// The same series truncated at weight `cutoff`.
    pub fn truncate(&self, cutoff: usize) -> GradedDims {
        let keep = (cutoff + 1).saturating_sub(self.start).min(self.dims.len());
        GradedDims { start: self.start, dims: self.dims[..keep].to_vec() }
    }
}

/// A connected graded algebra generated in weight one, materialized through
/// a top weight.
///
/// Every basis element of weight `w ≥ 1` is `parent · x` for a basis element
/// `parent` of weight `w − 1` and a generator `x`, so basis elements are
/// words. Weight `0` has the single basis element `1`.
pub trait GradedAlgebra: Send + Sync {
    fn n_generators(&self) -> usize;

    /// Bases are known for weights `0 ..= top_weight`.
    fn top_weight(&self) -> usize;

    fn dim(&self, w: usize) -> usize;

    /// `b · x` for basis element `b` of weight `w < top_weight`, expanded in
    /// the weight `w + 1` basis.
    fn mul_generator(&self, w: usize, b: usize, x: usize) -> SparseVec;

    /// `(parent, x)` with `b = parent · x`, for `w ≥ 1`.
    fn split_last(&self, w: usize, b: usize) -> (usize, usize);

    /// The word spelling basis element `b` of weight `w`.
    fn basis_word(&self, w: usize, mut b: usize) -> Vec<usize> {
        let mut word = vec![0; w];
        for k in (0..w).rev() {
            let (parent, x) = self.split_last(k + 1, b);
            word[k] = x;
            b = parent;
        }
        word
    }

    /// `v · x` for `v` of weight `w`.
    fn mul_vec_generator(&self, w: usize, v: &SparseVec, x: usize) -> SparseVec {
        let mut acc = Vec::new();
        for (b, c) in v.entries() {
            for (b2, c2) in self.mul_generator(w, *b, x).into_entries() {
                acc.push((b2, c * &c2));
            }
        }
        SparseVec::from_entries(acc)
    }

    /// `v · x₁x₂⋯` for `v` of weight `w`.
    fn mul_vec_word(&self, w: usize, v: &SparseVec, word: &[usize]) -> SparseVec {
        let mut v = v.clone();
        for (k, &x) in word.iter().enumerate() {
            v = self.mul_vec_generator(w + k, &v, x);
        }
        v
    }

    /// The product `a · b` of elements of weights `wa` and `wb`; the result
    /// lives in weight `wa + wb`.
    fn mul(&self, wa: usize, a: &SparseVec, wb: usize, b: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in b.entries() {
            let word = self.basis_word(wb, *j);
            acc = acc.add_scaled(c, &self.mul_vec_word(wa, a, &word));
        }
        acc
    }

    /// The image of a word, in the basis of weight `word.len()`.
    fn reduce_word(&self, word: &[usize]) -> SparseVec {
        self.mul_vec_word(0, &SparseVec::unit(0), word)
    }

    fn dims(&self) -> GradedDims {
        GradedDims::new(0, (0..=self.top_weight()).map(|w| self.dim(w) as u64).collect())
    }
}

/// The enveloping algebra `UL` of a presentation: trace-monoid normal forms
/// for commutation presentations, a tensor-algebra quotient otherwise.
#[derive(Clone, Debug)]
pub enum NormalFormEngine {
    Trace(Arc<TraceAlgebra>),
    Quotient(Arc<QuotientAlgebra>),
}

impl NormalFormEngine {
    pub fn new(p: &WeightedPresentation, top: usize, limits: &Limits) -> Result<Self> {
        match p.commutation_graph() {
            Some(g) => Ok(NormalFormEngine::Trace(Arc::new(TraceAlgebra::new(g, top, limits)?))),
            None => Ok(NormalFormEngine::Quotient(Arc::new(QuotientAlgebra::new(p, top, limits)?))),
        }
    }

    pub fn for_graph(g: &Graph, top: usize, limits: &Limits) -> Result<Self> {
        Ok(NormalFormEngine::Trace(Arc::new(TraceAlgebra::new(g, top, limits)?)))
    }

    fn inner(&self) -> &dyn GradedAlgebra {
        match self {
            NormalFormEngine::Trace(a) => a.as_ref(),
            NormalFormEngine::Quotient(a) => a.as_ref(),
        }
    }
}

impl GradedAlgebra for NormalFormEngine {
    fn n_generators(&self) -> usize {
        self.inner().n_generators()
    }
    fn top_weight(&self) -> usize {
        self.inner().top_weight()
    }
    fn dim(&self, w: usize) -> usize {
        self.inner().dim(w)
    }
    fn mul_generator(&self, w: usize, b: usize, x: usize) -> SparseVec {
        self.inner().mul_generator(w, b, x)
    }
    fn split_last(&self, w: usize, b: usize) -> (usize, usize) {
        self.inner().split_last(w, b)
    }
    fn basis_word(&self, w: usize, b: usize) -> Vec<usize> {
        self.inner().basis_word(w, b)
    }
}

pub(crate) fn check_top(top: usize, limits: &Limits) -> Result<()> {
    limits.check_weight(top)
}

pub(crate) fn check_generators(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_generators {
        return Err(Error::CapExceeded(format!(
            "{n} generators exceed max_generators {}",
            limits.max_generators
        )));
    }
    Ok(())
}
