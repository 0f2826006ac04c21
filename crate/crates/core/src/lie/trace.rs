//! Lexicographic normal forms in the trace monoid of a commutation graph.
//!
//! A word over the vertices is identified with every word obtained from it by
//! swapping adjacent commuting letters. The lexicographically least word in
//! a class is produced greedily: append letters one at a time, placing each
//! new letter `x` as far left as it can legally travel (past the trailing run
//! of letters commuting with it) but only in front of letters larger than
//! `x`. A word is in normal form iff its last letter could not travel at all,
//! and prefixes of normal forms are normal forms, so the normal forms of
//! weight `r + 1` are exactly the legal one-letter extensions of those of
//! weight `r`.

use std::collections::HashMap;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::SparseVec;

use super::{check_top, GradedAlgebra, GradedDims};

/// Where `x` lands when appended to the normal form `word`.
fn insertion_point(g: &Graph, word: &[usize], x: usize) -> usize {
    let mut pos = word.len();
    for k in (0..word.len()).rev() {
        let a = word[k];
        if a == x || !g.has_edge(a, x) {
            break;
        }
        if a > x {
            pos = k;
        }
    }
    pos
}

/// True iff `word · x` is again in normal form, given that `word` is.
fn extends(g: &Graph, word: &[usize], x: usize) -> bool {
    insertion_point(g, word, x) == word.len()
}

/// The lexicographically least word commutation-equivalent to `word`.
pub fn normal_form(g: &Graph, word: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len());
    for &x in word {
        let pos = insertion_point(g, &out, x);
        out.insert(pos, x);
    }
    out
}

/// Number of normal forms of each length `0 ..= w_max`.
pub fn ul_dims_normal_form(g: &Graph, w_max: usize, limits: &Limits) -> Result<GradedDims> {
    check_top(w_max, limits)?;
    let n = g.n_vertices();
    let mut counts = vec![0u64; w_max + 1];
    counts[0] = 1;
    if w_max == 0 || n == 0 {
        return Ok(GradedDims::new(0, counts));
    }
    let cap = limits.max_basis as u64;
    // iterative depth-first walk over the prefix tree of normal forms
    let mut word: Vec<usize> = Vec::with_capacity(w_max);
    let mut next: Vec<usize> = vec![0];
    while let Some(x) = next.last_mut() {
        if *x == n {
            next.pop();
            word.pop();
            continue;
        }
        let letter = *x;
        *x += 1;
        if !extends(g, &word, letter) {
            continue;
        }
        word.push(letter);
        let r = word.len();
        counts[r] += 1;
        if counts[r] > cap {
            return Err(Error::CapExceeded(format!(
                "more than {cap} normal forms of weight {r}"
            )));
        }
        if r < w_max {
            next.push(0);
        } else {
            word.pop();
        }
    }
    Ok(GradedDims::new(0, counts))
}

/// The enveloping algebra of a right-angled Artin Lie algebra, on the basis
/// of normal-form words. Within each weight the basis is lexicographically
/// sorted.
#[derive(Clone, Debug)]
pub struct TraceAlgebra {
    graph: Graph,
    /// `words[w]` = normal forms of length `w`, flattened.
    words: Vec<Vec<u8>>,
    /// `parents[w][b]` = index of `b` with its last letter removed.
    parents: Vec<Vec<u32>>,
    /// `table[w][b * n + x]` = index of `nf(b · x)` in weight `w + 1`.
    table: Vec<Vec<u32>>,
}

impl TraceAlgebra {
    pub fn new(g: &Graph, top: usize, limits: &Limits) -> Result<Self> {
        check_top(top, limits)?;
        let n = g.n_vertices();
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut parents: Vec<Vec<u32>> = vec![vec![0]];
        let mut table: Vec<Vec<u32>> = Vec::new();
        for w in 0..top {
            let prev = &words[w];
            let count = if w == 0 { 1 } else { prev.len() / w };
            let mut level: Vec<u8> = Vec::new();
            let mut level_parents: Vec<u32> = Vec::new();
            let mut word = Vec::with_capacity(w + 1);
            for b in 0..count {
                word.clear();
                word.extend(prev[b * w..(b + 1) * w].iter().map(|&c| c as usize));
                for x in 0..n {
                    if extends(g, &word, x) {
                        level.extend(word.iter().map(|&c| c as u8));
                        level.push(x as u8);
                        level_parents.push(b as u32);
                    }
                }
            }
            limits.check_basis(level_parents.len(), &format!("UL({})", w + 1))?;
            let index: HashMap<&[u8], u32> =
                level.chunks(w + 1).enumerate().map(|(i, c)| (c, i as u32)).collect();
            let mut t = Vec::with_capacity(count * n);
            for b in 0..count {
                word.clear();
                word.extend(prev[b * w..(b + 1) * w].iter().map(|&c| c as usize));
                for x in 0..n {
                    let pos = insertion_point(g, &word, x);
                    let mut key: Vec<u8> = word.iter().map(|&c| c as u8).collect();
                    key.insert(pos, x as u8);
                    t.push(index[key.as_slice()]);
                }
            }
            drop(index);
            table.push(t);
            words.push(level);
            parents.push(level_parents);
        }
        Ok(TraceAlgebra { graph: g.clone(), words, parents, table })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The normal form spelling basis element `b` of weight `w`.
    pub fn word(&self, w: usize, b: usize) -> Vec<usize> {
        self.words[w][b * w..(b + 1) * w].iter().map(|&c| c as usize).collect()
    }

    /// Index of the basis element represented by `word`.
    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        let w = word.len();
        if w > self.top_weight() || word.iter().any(|&x| x >= self.graph.n_vertices()) {
            return None;
        }
        let mut b = 0usize;
        for (k, &x) in word.iter().enumerate() {
            b = self.table[k][b * self.graph.n_vertices() + x] as usize;
        }
        Some(b)
    }
}

impl GradedAlgebra for TraceAlgebra {
    fn n_generators(&self) -> usize {
        self.graph.n_vertices()
    }

    fn top_weight(&self) -> usize {
        self.parents.len() - 1
    }

    fn dim(&self, w: usize) -> usize {
        self.parents[w].len()
    }

    fn mul_generator(&self, w: usize, b: usize, x: usize) -> SparseVec {
        SparseVec::unit(self.table[w][b * self.graph.n_vertices() + x] as usize)
    }

    fn split_last(&self, w: usize, b: usize) -> (usize, usize) {
        (self.parents[w][b] as usize, self.words[w][b * w + w - 1] as usize)
    }

    fn basis_word(&self, w: usize, b: usize) -> Vec<usize> {
        self.word(w, b)
    }
}
