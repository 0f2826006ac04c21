use std::collections::HashMap;

use crate::config::Limits;
use crate::error::Result;
use crate::flag::FlagComplex;
use crate::graph::{Graph, VertexSet};
use crate::lie::{GradedAlgebra, NormalFormEngine};
use crate::linalg::{Rational, SparseVec};

use super::{FreeModule, FreeResolutionTruncation, Image, ResolutionKind};

fn simplex_label(g: &Graph, s: VertexSet) -> String {
    if s.is_empty() {
        return "e".into();
    }
    let names: Vec<&str> = s.iter().map(|v| g.label(v)).collect();
    format!("<{}>", names.join(","))
}

/// The resolution whose degree `r` module is free on the `(r−1)`-simplices
/// of the flag complex, in weight `r`, with
/// `d<x_{i1},…,x_{ir}> = Σ_j (−1)^{j−1} <…x̂_{ij}…> ⊗ x_{ij}`.
pub fn froberg_complex(g: &Graph, w_max: usize, limits: &Limits) -> Result<FreeResolutionTruncation> {
    let p = FlagComplex::build(g, limits)?;
    let algebra = NormalFormEngine::for_graph(g, w_max, limits)?;
    let top = (p.dim() + 1) as usize;
    let mut modules = Vec::with_capacity(top + 1);
    let mut images: Vec<Vec<Image>> = vec![Vec::new()];
    modules.push(FreeModule { weights: vec![0], labels: vec!["e".into()] });
    let letters: Vec<SparseVec> = (0..g.n_vertices()).map(|x| algebra.reduce_word(&[x])).collect();
    for r in 1..=top {
        let faces = p.simplices(r as i32 - 2);
        let face_index: HashMap<VertexSet, usize> = faces.iter().enumerate().map(|(i, s)| (s.0, i)).collect();
        let cells = p.simplices(r as i32 - 1);
        let mut level = Vec::with_capacity(cells.len());
        for s in cells {
            let mut image: Image = s
                .0
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let sign = Rational::from_int(if j % 2 == 0 { 1 } else { -1 });
                    (face_index[&s.0.remove(v)], letters[v].scale(&sign))
                })
                .collect();
            image.sort_by_key(|(h, _)| *h);
            level.push(image);
        }
        modules.push(FreeModule {
            weights: vec![r; cells.len()],
            labels: cells.iter().map(|s| simplex_label(g, s.0)).collect(),
        });
        images.push(level);
    }
    Ok(FreeResolutionTruncation {
        kind: ResolutionKind::Froberg,
        algebra,
        modules,
        images,
        w_max,
        terminates: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::check_exactness;

    fn complex(g: &Graph, w: usize) -> FreeResolutionTruncation {
        froberg_complex(g, w, &Limits::default()).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(complex(&Graph::discrete(2), 3).ranks(), vec![1, 2]);
        assert_eq!(complex(&Graph::complete(2), 3).ranks(), vec![1, 2, 1]);
        assert_eq!(complex(&Graph::cycle(4), 3).ranks(), vec![1, 4, 4]);
    }

    #[test]
    fn differentials() {
        let f = complex(&Graph::discrete(2), 2);
        assert_eq!(f.image(1, 0), &vec![(0, SparseVec::unit(0))]);
        let k2 = complex(&Graph::complete(2), 2);
        // d<x0,x1> = <x1>⊗x0 − <x0>⊗x1
        let one = Rational::one();
        assert_eq!(
            k2.image(2, 0),
            &vec![
                (0, SparseVec::from_entries(vec![(1, -one.clone())])),
                (1, SparseVec::from_entries(vec![(0, one)])),
            ]
        );
    }

    #[test]
    fn exact_examples() {
        for g in [Graph::complete(2), Graph::cycle(4), Graph::discrete(3), Graph::path(4), Graph::complete(4)] {
            let r = check_exactness(&complex(&g, 6));
            assert!(r.is_exact(), "{:?}", r.first_failure());
            assert_eq!(r.homology[0][0], Some(1));
            assert!(r.euler[1..].iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn flipped_sign_is_caught() {
        let r = check_exactness(&complex(&Graph::complete(2), 4).with_flipped_sign(2, 0));
        let f = r.first_failure().unwrap();
        assert_eq!((f.degree, f.weight), (2, 2));
        assert_eq!(f.kind, "d∘d ≠ 0");
    }
}
