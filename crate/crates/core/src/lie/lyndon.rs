//! Lie dimensions computed directly: the standard bracketings of Lyndon
//! words span the free Lie algebra, so their images in `UL(r)` span `L(r)`.

use std::collections::HashMap;

use crate::config::Limits;
use crate::error::Result;
use crate::linalg::{Echelon, Rational, SparseVec};

use super::{GradedAlgebra, GradedDims, NormalFormEngine, WeightedPresentation};

/// Lyndon words of length exactly `len` over `k` letters, in lexicographic
/// order.
pub fn lyndon_words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || len == 0 {
        return out;
    }
    let mut w = vec![0usize];
    while !w.is_empty() {
        if w.len() == len {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w[i..] > *w)
}

/// `(u, v)` with `w = uv` and `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[usize]) -> Option<(&[usize], &[usize])> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| w.split_at(i))
}

/// Images in `UL` of standard bracketings, memoized by word.
struct Brackets<'a> {
    alg: &'a dyn GradedAlgebra,
    memo: HashMap<Vec<usize>, SparseVec>,
}

impl Brackets<'_> {
    fn get(&mut self, w: &[usize]) -> SparseVec {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let v = match standard_factorization(w) {
            None => self.alg.reduce_word(w),
            Some((u, v)) => {
                let (a, b) = (self.get(u), self.get(v));
                let ab = self.alg.mul(u.len(), &a, v.len(), &b);
                let ba = self.alg.mul(v.len(), &b, u.len(), &a);
                ab.add_scaled(&-Rational::one(), &ba)
            }
        };
        self.memo.insert(w.to_vec(), v.clone());
        v
    }
}

/// `dim L(r)` for `1 ≤ r ≤ min(w_max, top weight)` inside an already built
/// enveloping algebra.
pub fn lie_dims_direct_in(alg: &dyn GradedAlgebra, w_max: usize) -> GradedDims {
    let top = w_max.min(alg.top_weight());
    let mut brackets = Brackets { alg, memo: HashMap::new() };
    let mut dims = Vec::with_capacity(top);
    for r in 1..=top {
        let mut e = Echelon::new();
        for w in lyndon_words(alg.n_generators(), r) {
            e.insert(brackets.get(&w));
        }
        dims.push(e.rank() as u64);
    }
    GradedDims::new(1, dims)
}

/// `dim L(r)` for `1 ≤ r ≤ w_max`, as the rank of the Lyndon brackets of
/// weight `r` in `UL(r)`.
pub fn lie_dims_direct(p: &WeightedPresentation, w_max: usize, limits: &Limits) -> Result<GradedDims> {
    let alg = NormalFormEngine::new(p, w_max, limits)?;
    Ok(lie_dims_direct_in(&alg, w_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::lie::{necklace_count, raag_presentation, surface_presentation};

    #[test]
    fn lyndon_enumeration() {
        assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        assert_eq!(lyndon_words(2, 1), vec![vec![0], vec![1]]);
        for k in 1..4 {
            for n in 1..7 {
                let ws = lyndon_words(k, n);
                assert_eq!(ws.len() as u64, necklace_count(k as u64, n));
                assert!(ws.iter().all(|w| is_lyndon(w)));
                assert!(ws.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(standard_factorization(&[0, 0, 1]), Some((&[0][..], &[0, 1][..])));
        assert_eq!(standard_factorization(&[0, 1, 1]), Some((&[0, 1][..], &[1][..])));
        assert_eq!(standard_factorization(&[0, 0, 1, 0, 1]), Some((&[0, 0, 1][..], &[0, 1][..])));
        assert_eq!(standard_factorization(&[2]), None);
    }

    fn direct(p: &WeightedPresentation, w: usize) -> Vec<u64> {
        lie_dims_direct(p, w, &Limits::default()).unwrap().dims
    }

    #[test]
    fn free_lie_algebra() {
        assert_eq!(direct(&raag_presentation(&Graph::discrete(2)), 6), vec![2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn raag_examples() {
        assert_eq!(direct(&raag_presentation(&Graph::cycle(4)), 2), vec![4, 2]);
        assert_eq!(direct(&raag_presentation(&Graph::complete(3)), 4), vec![3, 0, 0, 0]);
    }

    #[test]
    fn surface_examples() {
        assert_eq!(direct(&surface_presentation(1).unwrap(), 4), vec![2, 0, 0, 0]);
        assert_eq!(direct(&surface_presentation(2).unwrap(), 2), vec![4, 5]);
    }
}
