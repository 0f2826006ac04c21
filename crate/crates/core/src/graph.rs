//! Commutation graphs: parsing, validation and connectivity.
//!
//! Vertices are `0..n` internally; labels are kept only for reporting.
//! Adjacency is stored as one 64-bit mask per vertex, so every vertex subset
//! used downstream is a [`VertexSet`] mask.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{Limits, VERTEX_CEILING};
use crate::error::{Error, Result};

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        VertexSet(indices.iter().fold(0u64, |m, &i| m | (1u64 << i)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph on labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices labeled `x0..x(n-1)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > VERTEX_CEILING {
            return Err(Error::CapExceeded(format!(
                "{n} vertices exceeds the {VERTEX_CEILING}-vertex ceiling"
            )));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Precondition(format!("duplicate label {l:?}")));
            }
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::Precondition(format!("edge ({i},{j}) out of range")));
            }
            if i == j {
                return Err(Error::Precondition(format!("self-loop at {i}")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Graph { labels, adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::new(n, &edges).expect("complete graph")
    }

    pub fn discrete(n: usize) -> Self {
        Graph::new(n, &[]).expect("discrete graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path graph")
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n_vertices())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i] >> j & 1 == 1
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices())
            .flat_map(|i| VertexSet(self.adj[i]).iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertices adjacent to every vertex of `s` (vertices of `s` excluded).
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.neighbors(v)))
            .difference(s)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.remove(v).is_subset(self.neighbors(v)))
    }

    /// True iff every vertex pair is an edge (the abelian case).
    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Partition of `restricted_to` into the vertex sets of the connected
    /// components of the induced subgraph, ordered by smallest vertex.
    pub fn connected_components(&self, restricted_to: VertexSet) -> Vec<VertexSet> {
        let mut remaining = restricted_to.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.intersection(remaining).difference(comp);
                comp = comp.union(frontier);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components(self.vertices()).len() <= 1
    }

    /// The induced subgraph on `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let keep = s.intersection(self.vertices()).to_vec();
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter_map(|(i, j)| Some((*index.get(&i)?, *index.get(&j)?)))
            .collect();
        Graph::with_labels(labels, &edges).expect("induced subgraph")
    }

    pub fn check_limits(&self, limits: &Limits) -> Result<()> {
        if self.n_vertices() > limits.max_vertices {
            return Err(Error::CapExceeded(format!(
                "graph has {} vertices, max_vertices is {}",
                self.n_vertices(),
                limits.max_vertices
            )));
        }
        Ok(())
    }

    /// Edge-list text: vertex count, then one `i j` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n_vertices());
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            labels: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(i, j)| [self.labels[i].clone(), self.labels[j].clone()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph document serializes")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n_vertices(), self.edges())
    }
}

/// The structured input format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub labels: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Parses either accepted format; a document whose first significant
/// character is `{` is read as JSON, anything else as an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('{') => parse_json(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut adj: Vec<u64> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(err(format!("expected vertex count, found {line:?}")));
                }
                let count: usize = fields[0]
                    .parse()
                    .map_err(|_| err(format!("invalid vertex count {:?}", fields[0])))?;
                if count > VERTEX_CEILING {
                    return Err(err(format!(
                        "{count} vertices exceeds the {VERTEX_CEILING}-vertex ceiling"
                    )));
                }
                n = Some(count);
                adj = vec![0; count];
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected two vertex indices, found {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| err(format!("invalid vertex index {f:?}")))?;
                    if *slot >= count {
                        return Err(err(format!("unknown vertex {slot} (graph has {count})")));
                    }
                }
                let [i, j] = ends;
                if i == j {
                    return Err(err(format!("self-loop at vertex {i}")));
                }
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let n = n.ok_or(Error::Parse { line: 1, message: "missing vertex count".into() })?;
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    Ok(Graph { labels, adj })
}

fn line_of(text: &str, needle: &str) -> usize {
    text.find(needle).map_or(1, |pos| text[..pos].matches('\n').count() + 1)
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line().max(1), message: e.to_string() })?;
    if doc.labels.len() > VERTEX_CEILING {
        return Err(Error::Parse {
            line: line_of(text, "\"labels\""),
            message: format!("{} vertices exceeds the {VERTEX_CEILING}-vertex ceiling", doc.labels.len()),
        });
    }
    let mut index = HashMap::new();
    for (i, l) in doc.labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::Parse {
                line: line_of(text, &format!("{l:?}")),
                message: format!("duplicate label {l:?}"),
            });
        }
    }
    // edge errors are located after the "edges" key
    let edges_at = text.find("\"edges\"").unwrap_or(0);
    let locate = |needle: String| {
        text[edges_at..]
            .find(&needle)
            .map_or(line_of(text, "\"edges\""), |p| text[..edges_at + p].matches('\n').count() + 1)
    };
    let mut adj = vec![0u64; doc.labels.len()];
    for [a, b] in &doc.edges {
        let lookup = |l: &String| {
            index.get(l.as_str()).copied().ok_or_else(|| Error::Parse {
                line: locate(format!("{l:?}")),
                message: format!("unknown label {l:?}"),
            })
        };
        let (i, j) = (lookup(a)?, lookup(b)?);
        if i == j {
            return Err(Error::Parse {
                line: locate(format!("{a:?}")),
                message: format!("self-loop at {a:?}"),
            });
        }
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    Ok(Graph { labels: doc.labels, adj })
}

/// Every labeled graph on `n` vertices, indexed by the bitmask over the
/// lexicographically ordered vertex pairs.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("enumerated graph")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_lists() {
        let g = parse_graph("3\n0 1\n1 2").unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        let g = parse_graph("2\n").unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert!(g.edges().is_empty());

        let g = parse_graph("4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g, Graph::cycle(4));
    }

    #[test]
    fn comments_and_duplicates() {
        let g = parse_graph("# a path\n3\n\n0 1\n1 0\n# again\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let e = parse_graph("3\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_graph("3\n0 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_graph("3\n0 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_graph("three\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
        let e = parse_graph("# only a comment\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }

    #[test]
    fn parses_documents() {
        let text = r#"{
  "labels": ["a", "b", "c"],
  "edges": [["a", "b"], ["c", "b"]]
}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn document_errors() {
        let unknown = "{\n\"labels\": [\"a\", \"b\"],\n\"edges\": [\n[\"a\", \"z\"]\n]}";
        let e = parse_graph(unknown).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
        let dup = "{\"labels\": [\"a\", \"a\"], \"edges\": []}";
        assert!(matches!(parse_graph(dup), Err(Error::Parse { .. })));
        let looped = "{\"labels\": [\"a\"], \"edges\": [[\"a\", \"a\"]]}";
        assert!(matches!(parse_graph(looped), Err(Error::Parse { .. })));
        let broken = "{\"labels\": [\"a\"],\n \"edges\": [[\"a\"]]}";
        assert!(matches!(parse_graph(broken), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn completeness() {
        assert!(Graph::complete(3).is_complete());
        assert!(!Graph::cycle(4).is_complete());
        assert!(Graph::discrete(1).is_complete());
        assert!(Graph::discrete(0).is_complete());
    }

    #[test]
    fn components() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.connected_components(c4.vertices()).len(), 1);
        let split = c4.connected_components(VertexSet::from_indices(&[0, 2]));
        assert_eq!(split, vec![VertexSet::singleton(0), VertexSet::singleton(2)]);
        assert!(c4.connected_components(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(0).count(), 1);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::path(4).induced(VertexSet::from_indices(&[1, 2, 3]));
        assert_eq!(g.labels(), &["x1", "x2", "x3"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }
}
