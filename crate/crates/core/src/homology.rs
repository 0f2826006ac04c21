//! Augmented simplicial chain complexes of flag complexes and reduced
//! (co)homology dimensions over Q.
//!
//! The empty simplex sits in degree −1, so homology of the augmented complex
//! is reduced homology. Over a field cohomology has the same dimensions, so
//! no cochain complex is built. The complex with no vertices is assigned
//! zero reduced homology in every degree.

use std::collections::HashMap;

use crate::flag::{FlagComplex, Simplex};
use crate::graph::VertexSet;
use crate::linalg::{Rational, RationalMatrix};

/// Augmented chain complex with Q coefficients.
#[derive(Clone, Debug)]
pub struct ChainComplexQ {
    /// `dims[d + 1]` = dimension in degree `d`, for `d = -1 ..= top`.
    dims: Vec<usize>,
    /// `boundary[d]` maps degree `d` to degree `d - 1`, for `d = 0 ..= top`.
    boundary: Vec<RationalMatrix>,
}

impl ChainComplexQ {
    /// Dimension in degree `d`.
    pub fn dim(&self, d: i32) -> usize {
        usize::try_from(d + 1).ok().and_then(|k| self.dims.get(k)).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Top degree present.
    pub fn top(&self) -> i32 {
        self.dims.len() as i32 - 2
    }

    /// The boundary map out of degree `d >= 0`.
    pub fn boundary(&self, d: i32) -> Option<&RationalMatrix> {
        usize::try_from(d).ok().and_then(|k| self.boundary.get(k))
    }

    /// True iff every composite of consecutive boundaries vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.boundary.windows(2).all(|w| w[0].mul(&w[1]).map_or(false, |m| m.is_zero()))
    }

    /// Ranks of the boundary maps, `ranks[d]` for `∂_d`.
    pub fn boundary_ranks(&self) -> Vec<usize> {
        self.boundary.iter().map(RationalMatrix::rank).collect()
    }

    /// Reduced Betti numbers `b̃_d` for `d = -1 ..= top`, indexed by `d + 1`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        (0..self.dims.len())
            .map(|k| {
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                let into = ranks.get(k).copied().unwrap_or(0);
                self.dims[k] - out - into
            })
            .collect()
    }
}

fn index_of(simplices: &[Simplex]) -> HashMap<VertexSet, usize> {
    simplices.iter().enumerate().map(|(i, s)| (s.0, i)).collect()
}

/// The augmented chain complex of `p` with the alternating face formula.
pub fn augmented_chain_complex(p: &FlagComplex) -> ChainComplexQ {
    let top = p.dim();
    let dims: Vec<usize> = (-1..=top).map(|d| p.count(d)).collect();
    let mut boundary = Vec::new();
    for d in 0..=top {
        let faces = p.simplices(d - 1);
        let face_index = index_of(faces);
        let mut m = RationalMatrix::zeros(faces.len(), p.count(d));
        for (col, s) in p.simplices(d).iter().enumerate() {
            for (i, v) in s.0.iter().enumerate() {
                let row = face_index[&s.0.remove(v)];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(row, col, Rational::from_int(sign));
            }
        }
        boundary.push(m);
    }
    ChainComplexQ { dims, boundary }
}

/// Reduced Betti numbers `b̃_k` for `k = 0 ..= dim p`, trailing zeros kept.
/// Empty for the complex with no vertices, whose reduced homology vanishes.
pub fn reduced_cohomology_dims(p: &FlagComplex) -> Vec<usize> {
    if p.n_vertices() == 0 {
        return Vec::new();
    }
    let h = augmented_chain_complex(p).homology_dims();
    debug_assert_eq!(h[0], 0, "augmentation of a nonempty complex is onto");
    h[1..].to_vec()
}

/// Least `k` with nonzero reduced cohomology, if any.
pub fn first_nonvanishing(dims: &[usize]) -> Option<usize> {
    dims.iter().position(|&d| d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::graph::Graph;

    fn complex(g: &Graph) -> FlagComplex {
        FlagComplex::build(g, &Limits::default()).unwrap()
    }

    #[test]
    fn two_points() {
        let c = augmented_chain_complex(&complex(&Graph::discrete(2)));
        assert_eq!(c.dims(), &[1, 2]);
        assert_eq!(c.boundary(0).unwrap(), &RationalMatrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(reduced_cohomology_dims(&complex(&Graph::discrete(2))), vec![1]);
    }

    #[test]
    fn four_cycle() {
        let p = complex(&Graph::cycle(4));
        let c = augmented_chain_complex(&p);
        assert_eq!(c.dims(), &[1, 4, 4]);
        assert_eq!(c.boundary_ranks(), vec![1, 3]);
        assert!(c.boundary_squares_to_zero());
        assert_eq!(reduced_cohomology_dims(&p), vec![0, 1]);
    }

    #[test]
    fn empty_complex_convention() {
        let p = complex(&Graph::discrete(0));
        assert_eq!(augmented_chain_complex(&p).dims(), &[1]);
        assert!(reduced_cohomology_dims(&p).is_empty());
    }

    #[test]
    fn simplex_is_acyclic() {
        let h = reduced_cohomology_dims(&complex(&Graph::complete(3)));
        assert_eq!(h, vec![0, 0, 0]);
    }

    #[test]
    fn octahedron_is_a_sphere() {
        // complement of a perfect matching on 6 vertices: the 2-sphere
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    edges.push((i, j));
                }
            }
        }
        let p = complex(&Graph::new(6, &edges).unwrap());
        assert_eq!(reduced_cohomology_dims(&p), vec![0, 0, 1]);
    }
}
