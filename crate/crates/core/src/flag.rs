//! Flag complexes of commutation graphs, with link, closed star and
//! disconnecting-simplex queries.
//!
//! Every complex here is the flag complex of an induced subgraph of a parent
//! graph, so it is determined by its vertex support. Links and closed stars
//! are therefore again flag complexes, on the common neighbourhood of the
//! simplex (plus the simplex itself, for the star).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A simplex, possibly empty; its dimension is `|vertices| - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(pub VertexSet);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(VertexSet::EMPTY);

    pub fn from_vertices(v: &[usize]) -> Self {
        Simplex(VertexSet::from_indices(v))
    }

    pub fn vertices(self) -> VertexSet {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.len()
    }

    /// `-1` for the empty simplex.
    pub fn dim(self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.0.to_vec()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

/// Lexicographic order on the sorted vertex lists of equal-size sets.
pub(crate) fn lex_cmp(a: VertexSet, b: VertexSet) -> Ordering {
    let x = a.0 ^ b.0;
    if x == 0 {
        return Ordering::Equal;
    }
    if a.0 >> x.trailing_zeros() & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Every clique of `graph` inside `support`, the empty clique included.
pub(crate) fn enumerate_cliques(graph: &Graph, support: VertexSet, cap: usize) -> Result<Vec<VertexSet>> {
    fn extend(
        graph: &Graph,
        clique: VertexSet,
        candidates: VertexSet,
        out: &mut Vec<VertexSet>,
        cap: usize,
    ) -> Result<()> {
        out.push(clique);
        if out.len() > cap {
            return Err(Error::CapExceeded(format!("flag complex exceeds {cap} simplices")));
        }
        for v in candidates.iter() {
            let rest = VertexSet(candidates.0 & !(u64::MAX >> (63 - v))).intersection(graph.neighbors(v));
            extend(graph, clique.insert(v), rest, out, cap)?;
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(graph, VertexSet::EMPTY, support.intersection(graph.vertices()), &mut out, cap)?;
    Ok(out)
}

/// The flag polyhedron of the subgraph induced on `support`.
#[derive(Clone)]
pub struct FlagComplex {
    graph: Arc<Graph>,
    support: VertexSet,
    /// `by_dim[d + 1]` holds the `d`-simplices in lexicographic order.
    by_dim: Vec<Vec<Simplex>>,
}

impl FlagComplex {
    pub fn build(graph: &Graph, limits: &Limits) -> Result<Self> {
        graph.check_limits(limits)?;
        Self::on_support(Arc::new(graph.clone()), graph.vertices(), limits.max_simplices)
    }

    pub(crate) fn on_support(graph: Arc<Graph>, support: VertexSet, cap: usize) -> Result<Self> {
        let support = support.intersection(graph.vertices());
        let mut cliques = enumerate_cliques(&graph, support, cap)?;
        let top = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top + 1];
        cliques.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| lex_cmp(*a, *b)));
        for c in cliques {
            by_dim[c.len()].push(Simplex(c));
        }
        Ok(FlagComplex { graph, support, by_dim })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex set of the complex, in parent-graph indices.
    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn n_vertices(&self) -> usize {
        self.support.len()
    }

    /// Largest simplex dimension (`-1` when there are no vertices).
    pub fn dim(&self) -> i32 {
        self.by_dim.len() as i32 - 2
    }

    /// The `d`-simplices, `d >= -1`.
    pub fn simplices(&self, d: i32) -> &[Simplex] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.by_dim.get(k))
            .map_or(&[], Vec::as_slice)
    }

    /// Number of `d`-simplices.
    pub fn count(&self, d: i32) -> usize {
        self.simplices(d).len()
    }

    /// `c[r]` = number of simplices with `r` vertices (`c[0] = 1`).
    pub fn clique_counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.by_dim.iter().flatten().copied()
    }

    pub fn n_simplices(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        s.0.is_subset(self.support) && self.graph.is_clique(s.0)
    }

    fn require(&self, s: Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotASimplex(s.to_vec()))
        }
    }

    /// Vertices of the link: in the support, outside `s`, adjacent to all of `s`.
    pub fn link_vertices(&self, s: Simplex) -> VertexSet {
        self.graph.common_neighbors(s.0).intersection(self.support)
    }

    /// The link of `s`; the link of the empty simplex is the complex itself.
    pub fn link(&self, s: Simplex) -> Result<FlagComplex> {
        self.require(s)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        Self::on_support(self.graph.clone(), self.link_vertices(s), usize::MAX)
    }

    /// The closed star of `s`, i.e. the join of `s` with its link.
    pub fn closed_star(&self, s: Simplex) -> Result<FlagComplex> {
        self.require(s)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        Self::on_support(self.graph.clone(), self.link_vertices(s).union(s.0), usize::MAX)
    }

    /// True iff the vertex set is a clique (vacuously so when empty).
    pub fn is_simplex(&self) -> bool {
        self.graph.is_clique(self.support)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.graph.connected_components(self.support)
    }

    /// Simplices whose link has at least two components, each with a split of
    /// the link vertices into two nonempty sides with no edge between them.
    pub fn disconnecting_simplices(&self) -> Vec<DisconnectingSimplex> {
        self.all_simplices()
            .filter_map(|s| {
                let comps = self.graph.connected_components(self.link_vertices(s));
                (comps.len() >= 2).then(|| {
                    let rest = comps[1..].iter().fold(VertexSet::EMPTY, |a, c| a.union(*c));
                    DisconnectingSimplex { simplex: s, side_a: comps[0], side_b: rest }
                })
            })
            .collect()
    }
}

impl fmt::Debug for FlagComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagComplex")
            .field("support", &self.support)
            .field("counts", &self.clique_counts())
            .finish()
    }
}

/// A disconnecting simplex with its witness split of the link vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisconnectingSimplex {
    pub simplex: Simplex,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(g: &Graph) -> FlagComplex {
        FlagComplex::build(g, &Limits::default()).unwrap()
    }

    #[test]
    fn simplex_counts() {
        assert_eq!(build(&Graph::complete(3)).clique_counts(), vec![1, 3, 3, 1]);
        assert_eq!(build(&Graph::cycle(4)).clique_counts(), vec![1, 4, 4]);
        assert_eq!(build(&Graph::discrete(2)).clique_counts(), vec![1, 2]);
        assert_eq!(build(&Graph::discrete(0)).clique_counts(), vec![1]);
    }

    #[test]
    fn simplices_are_lex_sorted() {
        let p = build(&Graph::complete(4));
        let edges: Vec<Vec<usize>> = p.simplices(1).iter().map(|s| s.to_vec()).collect();
        assert_eq!(edges, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn links() {
        let c4 = build(&Graph::cycle(4));
        let l = c4.link(Simplex::from_vertices(&[0])).unwrap();
        assert_eq!(l.support(), VertexSet::from_indices(&[1, 3]));
        assert_eq!(l.clique_counts(), vec![1, 2]);
        assert_eq!(c4.link(Simplex::EMPTY).unwrap().support(), c4.support());
        let k3 = build(&Graph::complete(3));
        let l = k3.link(Simplex::from_vertices(&[0, 1])).unwrap();
        assert_eq!(l.support(), VertexSet::singleton(2));
        assert!(matches!(c4.link(Simplex::from_vertices(&[0, 2])), Err(Error::NotASimplex(_))));
    }

    #[test]
    fn closed_stars() {
        let p = build(&Graph::path(3));
        let st = p.closed_star(Simplex::from_vertices(&[1])).unwrap();
        assert_eq!(st.support(), p.support());
        let c4 = build(&Graph::cycle(4));
        let st = c4.closed_star(Simplex::from_vertices(&[0])).unwrap();
        assert_eq!(st.support(), VertexSet::from_indices(&[0, 1, 3]));
        assert_eq!(st.clique_counts(), vec![1, 3, 2]);
        assert_eq!(c4.closed_star(Simplex::EMPTY).unwrap().support(), c4.support());
    }

    #[test]
    fn simplex_test() {
        assert!(build(&Graph::complete(3)).is_simplex());
        assert!(!build(&Graph::cycle(4)).is_simplex());
        assert!(build(&Graph::discrete(0)).is_simplex());
    }

    #[test]
    fn disconnecting() {
        let p = build(&Graph::path(3));
        let d = p.disconnecting_simplices();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].simplex, Simplex::from_vertices(&[1]));
        assert_eq!((d[0].side_a, d[0].side_b), (VertexSet::singleton(0), VertexSet::singleton(2)));

        let two = build(&Graph::discrete(2));
        let d = two.disconnecting_simplices();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].simplex, Simplex::EMPTY);

        for n in 1..6 {
            assert!(build(&Graph::complete(n)).disconnecting_simplices().is_empty());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits { max_simplices: 10, ..Limits::default() };
        assert!(matches!(
            FlagComplex::build(&Graph::complete(4), &limits),
            Err(Error::CapExceeded(_))
        ));
    }
}
