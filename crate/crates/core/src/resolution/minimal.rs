use crate::config::Limits;
use crate::error::{Error, Result};
use crate::lie::{GradedAlgebra, NormalFormEngine, WeightedPresentation};
use crate::linalg::{Echelon, SparseMatrix, SparseVec};

use super::{locate, BlockBuilder, FreeModule, FreeResolutionTruncation, Image, ResolutionKind};

/// Splits a vector of a weight block into per-generator components.
fn split(v: &SparseVec, off: &[usize]) -> Image {
    let mut out: Image = Vec::new();
    for (idx, c) in v.entries() {
        let h = locate(off, *idx);
        let entry = (idx - off[h], c.clone());
        match out.last_mut() {
            Some((last, comp)) if *last == h => {
                let mut e = comp.clone().into_entries();
                e.push(entry);
                *comp = SparseVec::from_sorted(e);
            }
            _ => out.push((h, SparseVec::from_sorted(vec![entry]))),
        }
    }
    out
}

/// A minimal free resolution of Q through homological degree `p_max` and
/// weight `w_max`: degree by degree and weight by weight, new generators
/// are the kernel vectors (in kernel-basis order) not yet in the image.
pub fn minimal_resolution(
    pres: &WeightedPresentation,
    p_max: usize,
    w_max: usize,
    limits: &Limits,
) -> Result<FreeResolutionTruncation> {
    let algebra = NormalFormEngine::new(pres, w_max, limits)?;
    let alg: &dyn GradedAlgebra = &algebra;
    let mut modules = vec![FreeModule { weights: vec![0], labels: vec!["e".into()] }];
    let mut images: Vec<Vec<Image>> = vec![Vec::new()];
    // blocks of the previous differential; `None` stands for the augmentation
    let mut prev_blocks: Option<Vec<SparseMatrix>> = None;
    let mut terminates = false;
    for p in 1..=p_max {
        let target = modules[p - 1].clone();
        let mut source = FreeModule::default();
        let mut level: Vec<Image> = Vec::new();
        let mut blocks = Vec::with_capacity(w_max + 1);
        let mut builder = BlockBuilder::new(alg, &target);
        for n in 0..=w_max {
            let block = builder.advance(&source, &level, n);
            let tgt_dim = target.block_dim(alg, n);
            let rank_prev = match &prev_blocks {
                None => usize::from(n == 0),
                Some(b) => b[n].rank(),
            };
            let kernel_dim = tgt_dim - rank_prev;
            let mut image = Echelon::new();
            for c in &block.cols {
                image.insert(c.clone());
            }
            let mut cols = block.cols;
            if image.rank() < kernel_dim {
                let kernel = match &prev_blocks {
                    None => (0..tgt_dim).map(SparseVec::unit).collect(),
                    Some(b) => b[n].kernel_basis(),
                };
                let off = target.layout(alg, n);
                for k in kernel {
                    if image.insert(k.clone()).is_some() {
                        let label = format!("g{}_{}", p, source.rank());
                        source.weights.push(n);
                        source.labels.push(label);
                        level.push(split(&k, &off));
                        builder.push_new_generator(k.clone());
                        cols.push(k);
                    }
                }
            }
            if image.rank() != kernel_dim {
                return Err(Error::Inconsistent(format!(
                    "degree {p}, weight {n}: image rank {} but kernel dimension {kernel_dim}",
                    image.rank()
                )));
            }
            blocks.push(SparseMatrix::from_cols(tgt_dim, cols));
        }
        let empty = source.rank() == 0;
        modules.push(source);
        images.push(level);
        prev_blocks = Some(blocks);
        if empty {
            terminates = true;
            break;
        }
    }
    Ok(FreeResolutionTruncation { kind: ResolutionKind::Minimal, algebra, modules, images, w_max, terminates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::lie::{raag_presentation, surface_presentation};
    use crate::resolution::{check_exactness, froberg_complex};

    fn minimal(p: &WeightedPresentation, p_max: usize, w: usize) -> FreeResolutionTruncation {
        minimal_resolution(p, p_max, w, &Limits::default()).unwrap()
    }

    #[test]
    fn free_algebra() {
        let r = minimal(&raag_presentation(&Graph::discrete(2)), 3, 5);
        assert_eq!(r.ranks(), vec![1, 2, 0]);
        assert!(r.terminates());
        assert!(check_exactness(&r).is_exact());
    }

    #[test]
    fn koszul_complex() {
        let r = minimal(&raag_presentation(&Graph::complete(3)), 4, 5);
        assert_eq!(r.ranks(), vec![1, 3, 3, 1, 0]);
        for (p, m) in r.modules().iter().enumerate() {
            assert!(m.weights.iter().all(|&w| w == p));
        }
    }

    #[test]
    fn surface_genus_two() {
        let r = minimal(&surface_presentation(2).unwrap(), 3, 5);
        assert_eq!(r.ranks(), vec![1, 4, 1, 0]);
        assert_eq!(r.module(2).unwrap().weights, vec![2]);
        assert!(check_exactness(&r).is_exact());
    }

    #[test]
    fn matches_froberg_counts() {
        for g in [Graph::cycle(4), Graph::path(4), Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()] {
            let f = froberg_complex(&g, 5, &Limits::default()).unwrap();
            let m = minimal(&raag_presentation(&g), 4, 5);
            for p in 0..=4 {
                let fc = f.module(p).map_or(vec![0; 6], |x| x.weight_counts(5));
                let mc = m.module(p).map_or(vec![0; 6], |x| x.weight_counts(5));
                assert_eq!(fc, mc, "degree {p}");
            }
        }
    }
}
