//! Depth of the group algebra of a right-angled Artin group, computed three
//! independent ways from the flag complex:
//!
//! * `n_P`: the greatest `m` such that every link `Lk σ` has vanishing
//!   reduced cohomology below degree `m - |σ| - 2`;
//! * the least nonzero row of the link-cohomology table
//!   `Σ_σ dim H̃^{p-|σ|-2}(Lk σ)`;
//! * the least `r + 2` over disconnecting `r`-simplices (the empty simplex
//!   has `r = -1`).
//!
//! A complete graph (abelian group) has depth equal to its vertex count and
//! the three formulas do not apply. The graph with no vertices is given
//! depth 0.

use serde::Serialize;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::flag::{DisconnectingSimplex, FlagComplex, Simplex};
use crate::graph::Graph;
use crate::homology::{first_nonvanishing, reduced_cohomology_dims};

/// Supplies reduced cohomology dimensions of links.
///
/// The exact implementation is [`ExactCohomology`]; the verification suite
/// substitutes a corrupted one as a negative control.
pub trait CohomologySource: Sync {
    fn reduced_dims(&self, link: &FlagComplex) -> Vec<usize>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExactCohomology;

impl CohomologySource for ExactCohomology {
    fn reduced_dims(&self, link: &FlagComplex) -> Vec<usize> {
        reduced_cohomology_dims(link)
    }
}

fn dim_at(dims: &[usize], k: i64) -> usize {
    usize::try_from(k).ok().and_then(|k| dims.get(k)).copied().unwrap_or(0)
}

/// `n_P` through an explicit cohomology source.
pub fn n_p_with(p: &FlagComplex, source: &dyn CohomologySource) -> Result<usize> {
    if p.is_simplex() {
        return Err(Error::SingleSimplex);
    }
    let mut best: Option<i64> = None;
    for s in p.all_simplices() {
        let link = p.link(s)?;
        let dims = source.reduced_dims(&link);
        if let Some(k) = first_nonvanishing(&dims) {
            let bound = s.dim() as i64 + 2 + k as i64;
            best = Some(best.map_or(bound, |b| b.min(bound)));
        }
    }
    let m = best.ok_or_else(|| {
        Error::Inconsistent("non-simplex complex with every link acyclic".into())
    })?;
    usize::try_from(m).map_err(|_| Error::Inconsistent(format!("negative n_P = {m}")))
}

/// The greatest `m` such that for every simplex σ (the empty one included),
/// `H̃^k(Lk σ) = 0` for all `k < m - |σ| - 2`.
pub fn n_p(p: &FlagComplex) -> Result<usize> {
    n_p_with(p, &ExactCohomology)
}

/// One row of the link-cohomology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtRow {
    pub p: usize,
    pub total: usize,
    /// Nonzero contributions `(σ, dim H̃^{p-|σ|-2}(Lk σ))`.
    pub contributions: Vec<(Vec<usize>, usize)>,
}

/// `Σ_σ dim H̃^{p-|σ|-2}(Lk σ)` for `p = 0 ..= p_max`.
///
/// Absolute dimensions are those of the plain direct sum of link
/// cohomologies; only the vanishing pattern is used for depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtIndicatorTable {
    pub rows: Vec<ExtRow>,
}

impl ExtIndicatorTable {
    pub fn least_nonzero(&self) -> Option<usize> {
        self.rows.iter().find(|r| r.total > 0).map(|r| r.p)
    }
}

pub fn ext_indicator_table_with(
    p: &FlagComplex,
    p_max: usize,
    source: &dyn CohomologySource,
) -> Result<ExtIndicatorTable> {
    if p.is_simplex() {
        return Err(Error::SingleSimplex);
    }
    let per_simplex: Vec<(Simplex, Vec<usize>)> = p
        .all_simplices()
        .map(|s| Ok((s, source.reduced_dims(&p.link(s)?))))
        .collect::<Result<_>>()?;
    let rows = (0..=p_max)
        .map(|row| {
            let contributions: Vec<(Vec<usize>, usize)> = per_simplex
                .iter()
                .filter_map(|(s, dims)| {
                    let d = dim_at(dims, row as i64 - s.dim() as i64 - 2);
                    (d > 0).then(|| (s.to_vec(), d))
                })
                .collect();
            ExtRow { p: row, total: contributions.iter().map(|c| c.1).sum(), contributions }
        })
        .collect();
    Ok(ExtIndicatorTable { rows })
}

pub fn ext_indicator_table(p: &FlagComplex, p_max: usize) -> Result<ExtIndicatorTable> {
    ext_indicator_table_with(p, p_max, &ExactCohomology)
}

/// Least `|σ| + 2` over disconnecting simplices, with the first witness
/// attaining it (simplices are scanned by dimension, then lexicographically).
pub fn disconnecting_depth(p: &FlagComplex) -> Option<(usize, DisconnectingSimplex)> {
    p.disconnecting_simplices()
        .into_iter()
        .map(|d| ((d.simplex.dim() + 2) as usize, d))
        .min_by_key(|(v, _)| *v)
}

/// Which of the three non-abelian methods to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Methods {
    pub n_p: bool,
    pub ext_table: bool,
    pub disconnecting: bool,
}

impl Methods {
    pub const ALL: Methods = Methods { n_p: true, ext_table: true, disconnecting: true };

    pub fn is_empty(&self) -> bool {
        !(self.n_p || self.ext_table || self.disconnecting)
    }
}

impl Default for Methods {
    fn default() -> Self {
        Methods::ALL
    }
}

/// Depth values by method, with the witness and the cross-check verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub abelian: bool,
    /// The graph has no vertices (trivial group, depth 0 by convention).
    pub trivial: bool,
    pub depth: usize,
    /// `None` when not applicable (abelian branch) or not requested.
    pub depth_n_p: Option<usize>,
    pub depth_ext_table: Option<usize>,
    pub depth_disconnecting: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub witness_split: Option<(Vec<usize>, Vec<usize>)>,
    pub agreement: bool,
}

/// Depth of the flag complex `p` viewed as the polyhedron of its own group.
pub fn depth_of_complex(p: &FlagComplex, methods: Methods, source: &dyn CohomologySource) -> Result<DepthReport> {
    let n = p.n_vertices();
    let graph = p.graph();
    let n_edges = graph.induced(p.support()).n_edges();
    if p.is_simplex() {
        return Ok(DepthReport {
            n_vertices: n,
            n_edges,
            abelian: true,
            trivial: n == 0,
            depth: n,
            depth_n_p: None,
            depth_ext_table: None,
            depth_disconnecting: None,
            witness: None,
            witness_split: None,
            agreement: true,
        });
    }
    let disc = if methods.disconnecting {
        Some(disconnecting_depth(p).ok_or_else(|| {
            Error::Inconsistent("non-complete graph without a disconnecting simplex".into())
        })?)
    } else {
        None
    };
    let np = if methods.n_p { Some(n_p_with(p, source)?) } else { None };
    let ext = if methods.ext_table {
        let table = ext_indicator_table_with(p, n + 1, source)?;
        Some(table.least_nonzero().ok_or_else(|| {
            Error::Inconsistent("link-cohomology table vanishes identically".into())
        })?)
    } else {
        None
    };
    let values: Vec<usize> = [disc.as_ref().map(|d| d.0), np, ext].into_iter().flatten().collect();
    let agreement = values.windows(2).all(|w| w[0] == w[1]);
    Ok(DepthReport {
        n_vertices: n,
        n_edges,
        abelian: false,
        trivial: false,
        depth: values[0],
        depth_n_p: np,
        depth_ext_table: ext,
        depth_disconnecting: disc.as_ref().map(|d| d.0),
        witness: disc.as_ref().map(|d| d.1.simplex.to_vec()),
        witness_split: disc.as_ref().map(|d| (d.1.side_a.to_vec(), d.1.side_b.to_vec())),
        agreement,
    })
}

/// Depth of `Q[A]` for the group with commutation graph `g`, all methods.
pub fn depth(g: &Graph) -> Result<DepthReport> {
    let p = FlagComplex::build(g, &Limits::default())?;
    depth_of_complex(&p, Methods::ALL, &ExactCohomology)
}

/// Depth by the disconnecting-simplex formula, with the abelian branch.
pub fn depth_value(p: &FlagComplex) -> Result<usize> {
    if p.is_simplex() {
        return Ok(p.n_vertices());
    }
    disconnecting_depth(p)
        .map(|d| d.0)
        .ok_or_else(|| Error::Inconsistent("non-complete graph without a disconnecting simplex".into()))
}

/// Both sides of a structural identity, for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub simplex: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
    /// Secondary inequality (`n_St ≥ n_P`) where the identity has one.
    pub bound: Option<(i64, i64)>,
    pub holds: bool,
}

/// depth(St σ) = (dim σ + 1) + depth(Lk σ), both as groups in their own right.
pub fn check_star_depth(p: &FlagComplex, s: Simplex) -> Result<IdentityCheck> {
    if s.is_empty() {
        return Err(Error::Precondition("the simplex must be nonempty".into()));
    }
    let star = p.closed_star(s)?;
    let link = p.link(s)?;
    let lhs = depth_value(&star)? as i64;
    let rhs = s.dim() as i64 + 1 + depth_value(&link)? as i64;
    Ok(IdentityCheck { simplex: s.to_vec(), lhs, rhs, bound: None, holds: lhs == rhs })
}

/// For a non-simplex closed star: n(St σ) = n(Lk σ) + dim σ + 1 and n(St σ) ≥ n_P.
pub fn check_star_shift_with(p: &FlagComplex, s: Simplex, source: &dyn CohomologySource) -> Result<IdentityCheck> {
    let star = p.closed_star(s)?;
    if star.is_simplex() {
        return Err(Error::Precondition(format!("closed star of {s:?} is a simplex")));
    }
    let link = p.link(s)?;
    let n_star = n_p_with(&star, source)? as i64;
    let n_link = n_p_with(&link, source)? as i64;
    let n_whole = n_p_with(p, source)? as i64;
    let rhs = n_link + s.dim() as i64 + 1;
    Ok(IdentityCheck {
        simplex: s.to_vec(),
        lhs: n_star,
        rhs,
        bound: Some((n_star, n_whole)),
        holds: n_star == rhs && n_star >= n_whole,
    })
}

pub fn check_star_shift(p: &FlagComplex, s: Simplex) -> Result<IdentityCheck> {
    check_star_shift_with(p, s, &ExactCohomology)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(g: &Graph) -> FlagComplex {
        FlagComplex::build(g, &Limits::default()).unwrap()
    }

    #[test]
    fn n_p_examples() {
        assert_eq!(n_p(&complex(&Graph::discrete(2))).unwrap(), 1);
        assert_eq!(n_p(&complex(&Graph::path(3))).unwrap(), 2);
        assert_eq!(n_p(&complex(&Graph::cycle(4))).unwrap(), 2);
        assert!(matches!(n_p(&complex(&Graph::complete(3))), Err(Error::SingleSimplex)));
    }

    #[test]
    fn ext_table_examples() {
        let t = ext_indicator_table(&complex(&Graph::discrete(2)), 3).unwrap();
        assert_eq!(t.rows.iter().map(|r| r.total).collect::<Vec<_>>(), vec![0, 1, 0, 0]);
        assert_eq!(t.rows[1].contributions, vec![(vec![], 1)]);

        let t = ext_indicator_table(&complex(&Graph::path(3)), 4).unwrap();
        assert_eq!(t.least_nonzero(), Some(2));
        assert_eq!(t.rows[2].contributions, vec![(vec![1], 1)]);

        let t = ext_indicator_table(&complex(&Graph::cycle(4)), 4).unwrap();
        assert_eq!(t.rows[2].total, 5);
        assert_eq!(t.least_nonzero(), Some(2));
    }

    #[test]
    fn depth_examples() {
        for n in 0..6 {
            let r = depth(&Graph::complete(n)).unwrap();
            assert!(r.abelian);
            assert_eq!(r.depth, n);
        }
        let r = depth(&Graph::cycle(4)).unwrap();
        assert_eq!((r.depth_disconnecting, r.depth_n_p, r.depth_ext_table), (Some(2), Some(2), Some(2)));
        assert!(r.agreement);
        assert_eq!(depth(&Graph::discrete(2)).unwrap().depth, 1);
    }

    #[test]
    fn central_generators_example() {
        // x0 central, y = {1, 2}, z = {3}; y and z do not commute
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let r = depth(&g).unwrap();
        assert_eq!(r.depth, 2);
        assert_eq!(r.witness, Some(vec![0]));
    }

    #[test]
    fn star_depth_examples() {
        let path = complex(&Graph::path(3));
        let c = check_star_depth(&path, Simplex::from_vertices(&[1])).unwrap();
        assert_eq!((c.lhs, c.rhs), (2, 2));
        let k3 = complex(&Graph::complete(3));
        let c = check_star_depth(&k3, Simplex::from_vertices(&[0])).unwrap();
        assert_eq!((c.lhs, c.rhs), (3, 3));
        let c4 = complex(&Graph::cycle(4));
        assert!(check_star_depth(&c4, Simplex::from_vertices(&[0])).unwrap().holds);
        assert!(check_star_depth(&c4, Simplex::EMPTY).is_err());
    }

    #[test]
    fn star_shift_examples() {
        let c4 = complex(&Graph::cycle(4));
        let c = check_star_shift(&c4, Simplex::EMPTY).unwrap();
        assert!(c.holds);
        assert_eq!(c.bound, Some((2, 2)));
        let c = check_star_shift(&c4, Simplex::from_vertices(&[0])).unwrap();
        assert_eq!((c.lhs, c.rhs), (2, 2));
        assert!(c.holds);
        let c5 = complex(&Graph::cycle(5));
        for v in 0..5 {
            assert!(check_star_shift(&c5, Simplex::from_vertices(&[v])).unwrap().holds);
        }
        let k3 = complex(&Graph::complete(3));
        assert!(matches!(check_star_shift(&k3, Simplex::from_vertices(&[0])), Err(Error::Precondition(_))));
    }
}
