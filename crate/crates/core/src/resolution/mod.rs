//! Free resolutions of Q over enveloping algebras, their exactness, and
//! truncated Ext groups `Ext^p_{UL}(Q, UL)`.
//!
//! Modules are free right `UL`-modules `F = ⊕_g e_g·UL` on homogeneous
//! generators. A differential is fixed by the images `d(e_g)`, and
//! `d(e_g·u) = d(e_g)·u`. Everything splits by total weight: the weight `n`
//! block of `F` has basis the pairs `(g, b)` with `b` a basis element of
//! `UL(n − wt g)`, ordered by generator and then by `b`.

mod ext;
mod froberg;
mod minimal;

use serde::Serialize;

use crate::linalg::{SparseMatrix, SparseVec};
use crate::lie::{GradedAlgebra, NormalFormEngine};

pub use ext::{truncated_ext, ExtTruncation};
pub use froberg::froberg_complex;
pub use minimal::minimal_resolution;

/// `d(e_g)` as components `(h, c)` meaning `e_h · c`, with `c` in
/// `UL(wt g − wt h)`; sorted by `h`.
pub type Image = Vec<(usize, SparseVec)>;

/// A free module on weighted, labeled generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FreeModule {
    pub weights: Vec<usize>,
    pub labels: Vec<String>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Number of generators of each weight `0 ..= w_max`.
    pub fn weight_counts(&self, w_max: usize) -> Vec<usize> {
        let mut c = vec![0; w_max + 1];
        for &w in &self.weights {
            if w <= w_max {
                c[w] += 1;
            }
        }
        c
    }

    /// Offsets of each generator's part in the weight `n` block; the last
    /// entry is the block dimension.
    pub(crate) fn layout(&self, alg: &dyn GradedAlgebra, n: usize) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.rank() + 1);
        let mut total = 0;
        off.push(0);
        for &w in &self.weights {
            if n >= w {
                total += alg.dim(n - w);
            }
            off.push(total);
        }
        off
    }

    /// Dimension of the weight `n` block.
    pub fn block_dim(&self, alg: &dyn GradedAlgebra, n: usize) -> usize {
        *self.layout(alg, n).last().unwrap()
    }
}

/// Generator owning position `idx` of a block with offsets `off`.
pub(crate) fn locate(off: &[usize], idx: usize) -> usize {
    off.partition_point(|&o| o <= idx) - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionKind {
    Froberg,
    Minimal,
}

/// Degrees `0 ..= p_max` of a free resolution of Q, with generators known
/// through weight `w_max`.
#[derive(Clone, Debug)]
pub struct FreeResolutionTruncation {
    pub(crate) kind: ResolutionKind,
    pub(crate) algebra: NormalFormEngine,
    pub(crate) modules: Vec<FreeModule>,
    /// `images[p][g]` = `d(e_g)` for generators of degree `p ≥ 1`.
    pub(crate) images: Vec<Vec<Image>>,
    pub(crate) w_max: usize,
    /// True when every module beyond `p_max` is known to vanish through the
    /// weight window (always for the Fröberg complex).
    pub(crate) terminates: bool,
}

impl FreeResolutionTruncation {
    pub fn kind(&self) -> ResolutionKind {
        self.kind
    }

    pub fn algebra(&self) -> &NormalFormEngine {
        &self.algebra
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, p: usize) -> Option<&FreeModule> {
        self.modules.get(p)
    }

    pub fn p_max(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn w_max(&self) -> usize {
        self.w_max
    }

    pub fn terminates(&self) -> bool {
        self.terminates
    }

    /// Ranks of the free modules.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::rank).collect()
    }

    /// `d(e_g)` for generator `g` of degree `p ≥ 1`.
    pub fn image(&self, p: usize, g: usize) -> &Image {
        &self.images[p][g]
    }

    /// Replaces `d(e_g)` in degree `p` by the same image with the sign of its
    /// first component flipped.
    pub fn with_flipped_sign(mut self, p: usize, g: usize) -> Self {
        if let Some((_, c)) = self.images.get_mut(p).and_then(|d| d.get_mut(g)).and_then(|i| i.first_mut()) {
            *c = c.neg();
        }
        self
    }

    /// Matrices of `d_p` on the weight blocks `0 ..= w_max`.
    pub fn differential_blocks(&self, p: usize) -> Vec<SparseMatrix> {
        assert!(p >= 1 && p <= self.p_max(), "degree {p} outside 1..={}", self.p_max());
        let mut builder = BlockBuilder::new(&self.algebra, &self.modules[p - 1]);
        let mut out = Vec::with_capacity(self.w_max + 1);
        for n in 0..=self.w_max {
            out.push(builder.advance(&self.modules[p], &self.images[p], n));
        }
        out
    }
}

/// Builds the weight blocks of a differential one weight at a time, each
/// from the previous one by right multiplication with generators.
pub(crate) struct BlockBuilder<'a> {
    alg: &'a dyn GradedAlgebra,
    target: &'a FreeModule,
    prev_cols: Vec<SparseVec>,
    prev_src_off: Vec<usize>,
    prev_tgt_off: Vec<usize>,
}

impl<'a> BlockBuilder<'a> {
    pub(crate) fn new(alg: &'a dyn GradedAlgebra, target: &'a FreeModule) -> Self {
        BlockBuilder { alg, target, prev_cols: Vec::new(), prev_src_off: Vec::new(), prev_tgt_off: Vec::new() }
    }

    /// `v · x` for `v` in the weight `n − 1` block of the target.
    fn right_mul(&self, v: &SparseVec, x: usize, n: usize, tgt_off: &[usize]) -> SparseVec {
        let mut entries = Vec::new();
        for (idx, c) in v.entries() {
            let h = locate(&self.prev_tgt_off, *idx);
            let b = idx - self.prev_tgt_off[h];
            let k = n - 1 - self.target.weights[h];
            for (b2, c2) in self.alg.mul_generator(k, b, x).into_entries() {
                entries.push((tgt_off[h] + b2, c * &c2));
            }
        }
        SparseVec::from_entries(entries)
    }

    /// Embeds `d(e_g)` in the weight `wt g` block of the target.
    pub(crate) fn assemble(image: &Image, tgt_off: &[usize]) -> SparseVec {
        let mut entries = Vec::new();
        for (h, c) in image {
            entries.extend(c.entries().iter().map(|(b, a)| (tgt_off[*h] + b, a.clone())));
        }
        SparseVec::from_entries(entries)
    }

    /// The weight `n` block, given that the previous call was for `n − 1`.
    pub(crate) fn advance(&mut self, source: &FreeModule, images: &[Image], n: usize) -> SparseMatrix {
        let src_off = source.layout(self.alg, n);
        let tgt_off = self.target.layout(self.alg, n);
        let mut cols = Vec::with_capacity(*src_off.last().unwrap());
        for (g, &w) in source.weights.iter().enumerate() {
            if n < w {
                continue;
            }
            let k = n - w;
            if k == 0 {
                cols.push(Self::assemble(&images[g], &tgt_off));
                continue;
            }
            for b in 0..self.alg.dim(k) {
                let (parent, x) = self.alg.split_last(k, b);
                let prev = &self.prev_cols[self.prev_src_off[g] + parent];
                cols.push(self.right_mul(prev, x, n, &tgt_off));
            }
        }
        let m = SparseMatrix::from_cols(*tgt_off.last().unwrap(), cols);
        self.prev_cols = m.cols.clone();
        self.prev_src_off = src_off;
        self.prev_tgt_off = tgt_off;
        m
    }

    /// Adds a column for a generator of weight `n` just appended to the
    /// source, while the builder sits at weight `n`.
    pub(crate) fn push_new_generator(&mut self, col: SparseVec) {
        self.prev_cols.push(col);
        let last = *self.prev_src_off.last().unwrap();
        self.prev_src_off.push(last + 1);
    }
}

/// A `(degree, weight)` position where the resolution fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessFailure {
    pub degree: usize,
    pub weight: usize,
    /// `"d∘d ≠ 0"` or `"homology"`.
    pub kind: String,
    /// Homology dimension found, or the number of nonzero columns of `d∘d`.
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub w_max: usize,
    /// `homology[p][n]` for the unaugmented complex; `None` where the
    /// truncation cannot decide it.
    pub homology: Vec<Vec<Option<usize>>>,
    /// `Σ_p (−1)^p dim F_p(n)` per weight, over the degrees present.
    pub euler: Vec<i64>,
    pub failures: Vec<ExactnessFailure>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failure with the least weight, then least degree.
    pub fn first_failure(&self) -> Option<&ExactnessFailure> {
        self.failures.iter().min_by_key(|f| (f.weight, f.degree))
    }
}

/// Checks `d∘d = 0` and exactness weight by weight; homology must be Q at
/// `(0, 0)` and zero elsewhere.
pub fn check_exactness(res: &FreeResolutionTruncation) -> ExactnessReport {
    let alg = &res.algebra;
    let p_max = res.p_max();
    let w_max = res.w_max;
    let blocks: Vec<Vec<SparseMatrix>> =
        (1..=p_max).map(|p| res.differential_blocks(p)).collect();
    // ranks[p][n] = rank of d_p on weight n; d_0 and d_{p_max + 1} are zero
    let ranks: Vec<Vec<usize>> = (0..=p_max + 1)
        .map(|p| {
            (0..=w_max)
                .map(|n| if p == 0 || p > p_max { 0 } else { blocks[p - 1][n].rank() })
                .collect()
        })
        .collect();
    let mut failures = Vec::new();
    for p in 2..=p_max {
        for n in 0..=w_max {
            let dd = blocks[p - 2][n].compose(&blocks[p - 1][n]);
            let bad = dd.cols.iter().filter(|c| !c.is_zero()).count();
            if bad > 0 {
                failures.push(ExactnessFailure { degree: p, weight: n, kind: "d∘d ≠ 0".into(), value: bad });
            }
        }
    }
    let mut homology = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let decidable = p < p_max || res.terminates;
        let row: Vec<Option<usize>> = (0..=w_max)
            .map(|n| {
                decidable.then(|| {
                    let dim = res.modules[p].block_dim(alg, n);
                    dim.saturating_sub(ranks[p][n] + ranks[p + 1][n])
                })
            })
            .collect();
        for (n, h) in row.iter().enumerate() {
            let expected = usize::from(p == 0 && n == 0);
            if let Some(h) = h {
                if *h != expected {
                    failures.push(ExactnessFailure { degree: p, weight: n, kind: "homology".into(), value: *h });
                }
            }
        }
        homology.push(row);
    }
    let euler = (0..=w_max)
        .map(|n| {
            res.modules
                .iter()
                .enumerate()
                .map(|(p, m)| if p % 2 == 0 { 1 } else { -1 } * m.block_dim(alg, n) as i64)
                .sum()
        })
        .collect();
    failures.sort_by_key(|f| (f.weight, f.degree));
    ExactnessReport { w_max, homology, euler, failures }
}
