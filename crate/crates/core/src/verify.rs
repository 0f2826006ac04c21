//! Exhaustive and seeded verification sweeps.
//!
//! Each check returns a [`CheckOutcome`]; a failing outcome carries the
//! first offending graph (or presentation) as its witness. Checks that
//! depend on link cohomology take a [`CohomologySource`], and the Fröberg
//! sweep can corrupt one differential sign, so that the negative controls
//! exercise exactly the code paths the real sweeps use.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Limits;
use crate::depth::{depth_of_complex, n_p_with, CohomologySource, DepthReport, Methods};
use crate::error::Result;
use crate::flag::FlagComplex;
use crate::graph::{all_labeled_graphs, Graph, GraphDocument, VertexSet};
use crate::homology::reduced_cohomology_dims;
use crate::lie::{
    clique_series_dims, lie_dims_direct, lie_dims_pbw_inversion, raag_presentation, surface_presentation,
    ul_dims_normal_form, ul_dims_quotient, GradedAlgebra, GradedDims, NormalFormEngine,
};
use crate::linalg::{Echelon, Rational, SparseVec};
use crate::resolution::{check_exactness, froberg_complex, minimal_resolution, truncated_ext};

/// The offending input of a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph: Option<GraphDocument>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    pub summary: String,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    fn pass(id: &str, cases: usize, summary: String) -> Self {
        CheckOutcome { id: id.into(), passed: true, cases, summary, witness: None }
    }

    fn fail(id: &str, cases: usize, graph: Option<&Graph>, detail: String) -> Self {
        CheckOutcome {
            id: id.into(),
            passed: false,
            cases,
            summary: format!("failed after {cases} cases"),
            witness: Some(Witness { graph: graph.map(Graph::to_document), detail }),
        }
    }
}

/// A cohomology source that reports `H̃⁰` wrong (toggled between 0 and 1)
/// for every complex spanning its whole graph.
#[derive(Clone, Copy, Debug, Default)]
pub struct ToggledCohomology;

impl CohomologySource for ToggledCohomology {
    fn reduced_dims(&self, link: &FlagComplex) -> Vec<usize> {
        let mut dims = reduced_cohomology_dims(link);
        if link.n_vertices() > 0 && link.support() == link.graph().vertices() {
            dims[0] = usize::from(dims[0] == 0);
        }
        dims
    }
}

/// Deliberate corruptions for negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Faults {
    /// Use [`ToggledCohomology`] in every cohomology-based check.
    pub cohomology: bool,
    /// Flip one sign of the first degree-2 Fröberg differential.
    pub froberg: bool,
}

/// Sweep sizes and windows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Largest vertex count for the depth sweeps.
    pub max_vertices: usize,
    /// Largest vertex count for the algebra sweeps (resolutions and Hilbert
    /// series).
    pub algebra_vertices: usize,
    /// Weight through which enveloping algebra dimensions are compared.
    pub ul_weight: usize,
    /// Weight through which Lie dimensions and resolutions are computed.
    pub lie_weight: usize,
    pub seed: u64,
    pub faults: Faults,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_vertices: 6, algebra_vertices: 5, ul_weight: 8, lie_weight: 6, seed: 0, faults: Faults::default() }
    }
}

fn graphs_upto(max_vertices: usize) -> impl Iterator<Item = Graph> {
    (0..=max_vertices).flat_map(all_labeled_graphs)
}

fn counts_by_vertices(max_vertices: usize) -> String {
    let counts: Vec<String> = (0..=max_vertices)
        .map(|n| format!("{}@{n}", 1u64 << (n * n.saturating_sub(1) / 2)))
        .collect();
    format!("graphs by vertex count {}", counts.join(" "))
}

fn report_line(r: &DepthReport) -> String {
    format!(
        "depth {} (disconnecting {:?}, n_P {:?}, table {:?}), agreement {}",
        r.depth, r.depth_disconnecting, r.depth_n_p, r.depth_ext_table, r.agreement
    )
}

fn depth_report(g: &Graph, source: &dyn CohomologySource) -> Result<DepthReport> {
    let p = FlagComplex::build(g, &Limits::default())?;
    depth_of_complex(&p, Methods::ALL, source)
}

/// All three depth formulas agree on every labeled graph; complete graphs
/// take the abelian branch with depth equal to the vertex count.
pub fn method_equivalence(max_vertices: usize, source: &dyn CohomologySource) -> CheckOutcome {
    const ID: &str = "method-equivalence";
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        cases += 1;
        match depth_report(&g, source) {
            Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
            Ok(r) if !r.agreement => return CheckOutcome::fail(ID, cases, Some(&g), report_line(&r)),
            Ok(r) if r.abelian != g.is_complete() || (r.abelian && r.depth != g.n_vertices()) => {
                return CheckOutcome::fail(ID, cases, Some(&g), format!("abelian branch: {}", report_line(&r)))
            }
            Ok(_) => {}
        }
    }
    CheckOutcome::pass(ID, cases, counts_by_vertices(max_vertices))
}

/// `r` central generators, a block `y1 y2` of commuting generators and a
/// block `z1 z2` of non-commuting ones, with no `y`–`z` commutation.
pub fn central_generators_graph(r: usize) -> Graph {
    let mut labels: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
    labels.extend(["y1", "y2", "z1", "z2"].map(String::from));
    let n = labels.len();
    let mut edges: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    edges.push((r, r + 1));
    Graph::with_labels(labels, &edges).expect("valid graph")
}

/// Two simplices `ω ∪ {y1, y2}` and `ω ∪ {z1, z2}` glued along a simplex
/// `ω` of dimension `dim_omega` (`−1` for disjoint simplices).
pub fn glued_simplices_graph(dim_omega: i32) -> Graph {
    let k = (dim_omega + 1).max(0) as usize;
    let mut labels: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
    labels.extend(["y1", "y2", "z1", "z2"].map(String::from));
    let (y, z) = ([k, k + 1], [k + 2, k + 3]);
    let mut edges = Vec::new();
    for side in [y, z] {
        let block: Vec<usize> = (0..k).chain(side).collect();
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::with_labels(labels, &edges).expect("valid graph")
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if Graph::new(n, &edges).expect("valid graph").is_connected() {
            return edges;
        }
    }
}

/// A connected graph on generators `x1..xa`, `y1..yb` (`a, b ≥ 2`) whose
/// only commutation across the two sides is `x1 y1`.
pub fn cross_relation_instance(rng: &mut ChaCha8Rng) -> Graph {
    let a = rng.gen_range(2..=4);
    let b = rng.gen_range(2..=4);
    let mut labels: Vec<String> = (1..=a).map(|i| format!("x{i}")).collect();
    labels.extend((1..=b).map(|j| format!("y{j}")));
    let mut edges = random_connected(rng, a);
    edges.extend(random_connected(rng, b).into_iter().map(|(i, j)| (i + a, j + a)));
    edges.push((0, a));
    Graph::with_labels(labels, &edges).expect("valid graph")
}

/// `count` seeded cross-relation instances.
pub fn cross_relation_family(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| cross_relation_instance(&mut rng)).collect()
}

/// Central generators, glued simplices, the cross-relation family and
/// disconnected graphs, each with its known depth.
pub fn worked_examples(max_vertices: usize, seed: u64, source: &dyn CohomologySource) -> CheckOutcome {
    const ID: &str = "worked-examples";
    let mut cases = 0;
    let mut expect = |g: &Graph, ok: &dyn Fn(&DepthReport) -> bool, what: &str| -> Option<CheckOutcome> {
        cases += 1;
        match depth_report(g, source) {
            Err(e) => Some(CheckOutcome::fail(ID, cases, Some(g), format!("{what}: {e}"))),
            Ok(r) if !(r.agreement && ok(&r)) => {
                Some(CheckOutcome::fail(ID, cases, Some(g), format!("{what}: {}", report_line(&r))))
            }
            Ok(_) => None,
        }
    };
    for r in 1..=4 {
        let g = central_generators_graph(r);
        let x: Vec<usize> = (0..r).collect();
        let ok = |rep: &DepthReport| rep.depth == r + 1 && rep.witness.as_deref() == Some(&x[..]);
        if let Some(f) = expect(&g, &ok, &format!("{r} central generators, expected depth {}", r + 1)) {
            return f;
        }
    }
    for d in 0..=3 {
        let g = glued_simplices_graph(d);
        let omega: Vec<usize> = (0..=d as usize).collect();
        let want = d as usize + 2;
        let ok = |rep: &DepthReport| rep.depth == want && rep.witness.as_deref() == Some(&omega[..]);
        if let Some(f) = expect(&g, &ok, &format!("simplices glued along a {d}-simplex, expected depth {want}")) {
            return f;
        }
    }
    let family = cross_relation_family(seed, 10);
    for g in &family {
        let ok = |rep: &DepthReport| rep.depth <= 3;
        if let Some(f) = expect(g, &ok, "cross-relation instance, expected depth at most 3") {
            return f;
        }
    }
    let mut disconnected = 0;
    for g in graphs_upto(max_vertices).filter(|g| g.n_vertices() >= 2 && !g.is_connected()) {
        disconnected += 1;
        let ok = |rep: &DepthReport| rep.depth == 1;
        if let Some(f) = expect(&g, &ok, "disconnected, expected depth 1") {
            return f;
        }
    }
    CheckOutcome::pass(
        ID,
        cases,
        format!(
            "central r=1..4, glued dim ω=0..3, {} cross-relation instances (seed {seed}), {disconnected} disconnected graphs",
            family.len()
        ),
    )
}

/// For every simplex with non-simplex closed star:
/// `n(St σ) = n(Lk σ) + dim σ + 1` and `n(St σ) ≥ n_P`.
pub fn star_link_shift(max_vertices: usize, source: &dyn CohomologySource) -> CheckOutcome {
    const ID: &str = "star-link-shift";
    let limits = Limits::default();
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        let p = FlagComplex::build(&g, &limits).expect("small graph");
        if p.is_simplex() {
            continue;
        }
        let mut memo: HashMap<VertexSet, Result<usize>> = HashMap::new();
        let mut n_of = |c: &FlagComplex| memo.entry(c.support()).or_insert_with(|| n_p_with(c, source)).clone();
        let whole = n_of(&p);
        for s in p.all_simplices() {
            let star = p.closed_star(s).expect("simplex of p");
            if star.is_simplex() {
                continue;
            }
            cases += 1;
            let link = p.link(s).expect("simplex of p");
            let values = (|| -> Result<(usize, usize, usize)> { Ok((n_of(&star)?, n_of(&link)?, whole.clone()?)) })();
            match values {
                Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), format!("σ = {:?}: {e}", s.to_vec())),
                Ok((ns, nl, np)) => {
                    let shifted = nl as i64 + s.dim() as i64 + 1;
                    if ns as i64 != shifted || ns < np {
                        return CheckOutcome::fail(
                            ID,
                            cases,
                            Some(&g),
                            format!("σ = {:?}: n(St) = {ns}, n(Lk) + dim σ + 1 = {shifted}, n_P = {np}", s.to_vec()),
                        );
                    }
                }
            }
        }
    }
    CheckOutcome::pass(ID, cases, format!("{cases} (graph, simplex) pairs on ≤ {max_vertices} vertices"))
}

/// `d∘d = 0` and exactness in weights `1 ..= w_max` of the Fröberg complex.
pub fn froberg_exactness(max_vertices: usize, w_max: usize, corrupt: bool) -> CheckOutcome {
    const ID: &str = "froberg-exactness";
    let limits = Limits::default();
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        cases += 1;
        let mut res = match froberg_complex(&g, w_max, &limits) {
            Ok(r) => r,
            Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
        };
        if corrupt && res.p_max() >= 2 {
            res = res.with_flipped_sign(2, 0);
        }
        let report = check_exactness(&res);
        if let Some(f) = report.first_failure() {
            return CheckOutcome::fail(
                ID,
                cases,
                Some(&g),
                format!("{} at degree {}, weight {} (value {})", f.kind, f.degree, f.weight, f.value),
            );
        }
        if let Some(n) = (1..=w_max).find(|&n| report.euler[n] != 0) {
            return CheckOutcome::fail(ID, cases, Some(&g), format!("Euler characteristic {} at weight {n}", report.euler[n]));
        }
    }
    CheckOutcome::pass(ID, cases, format!("{cases} graphs on ≤ {max_vertices} vertices, weights 0..={w_max}"))
}

/// Enumeration, tensor quotient and clique series agree on `UL`; PBW
/// inversion agrees with Lyndon-bracket ranks on `L`.
pub fn hilbert_agreement(max_vertices: usize, ul_weight: usize, lie_weight: usize) -> CheckOutcome {
    const ID: &str = "hilbert-agreement";
    let limits = Limits::default();
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        cases += 1;
        let pres = raag_presentation(&g);
        let run = || -> Result<Option<String>> {
            let q = ul_dims_quotient(&pres, ul_weight, &limits)?;
            let nf = ul_dims_normal_form(&g, ul_weight, &limits)?;
            let cs = clique_series_dims(&g, ul_weight, &limits)?;
            if q != nf || q != cs {
                return Ok(Some(format!("UL dims: quotient {:?}, normal forms {:?}, clique series {:?}", q.dims, nf.dims, cs.dims)));
            }
            let pbw = lie_dims_pbw_inversion(&cs, lie_weight)?;
            let direct = lie_dims_direct(&pres, lie_weight, &limits)?;
            if pbw != direct {
                return Ok(Some(format!("L dims: PBW {:?}, Lyndon ranks {:?}", pbw.dims, direct.dims)));
            }
            Ok(None)
        };
        match run() {
            Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
            Ok(Some(d)) => return CheckOutcome::fail(ID, cases, Some(&g), d),
            Ok(None) => {}
        }
    }
    CheckOutcome::pass(
        ID,
        cases,
        format!("{cases} graphs on ≤ {max_vertices} vertices; UL through weight {ul_weight}, L through {lie_weight}"),
    )
}

/// The weight-two brackets listed as a basis of `L(2)` for the genus `g`
/// surface: `[a_i,a_j]`, `[b_i,b_j]` (`i<j`), `[a_i,b_j]` (`i≠j`) and
/// `[a_k,b_k] − [a_1,b_1]` (`k>1`). Generators are indexed as in
/// [`surface_presentation`]; each bracket is a list of `(coefficient, x, y)`
/// meaning `coefficient·[x, y]`.
pub fn surface_weight_two_brackets(genus: usize) -> Vec<(String, Vec<(i64, usize, usize)>)> {
    let (a, b) = (|i: usize| 2 * (i - 1), |i: usize| 2 * (i - 1) + 1);
    let mut out = Vec::new();
    for i in 1..=genus {
        for j in i + 1..=genus {
            out.push((format!("[a{i},a{j}]"), vec![(1, a(i), a(j))]));
            out.push((format!("[b{i},b{j}]"), vec![(1, b(i), b(j))]));
        }
    }
    for k in 1..=genus {
        for l in 1..=genus {
            if k + l <= 2 {
                continue;
            }
            if k != l {
                out.push((format!("[a{k},b{l}]"), vec![(1, a(k), b(l))]));
            } else {
                out.push((format!("[a{k},b{k}]-[a1,b1]"), vec![(1, a(k), b(k)), (-1, a(1), b(1))]));
            }
        }
    }
    out
}

/// Rank in `UL(2)` of the listed weight-two brackets.
fn bracket_rank(alg: &dyn GradedAlgebra, brackets: &[(String, Vec<(i64, usize, usize)>)]) -> usize {
    let mut e = Echelon::new();
    for (_, terms) in brackets {
        let mut v = SparseVec::new();
        for &(c, x, y) in terms {
            v = v.add_scaled(&Rational::from_int(c), &alg.reduce_word(&[x, y]));
            v = v.add_scaled(&Rational::from_int(-c), &alg.reduce_word(&[y, x]));
        }
        e.insert(v);
    }
    e.rank()
}

/// Graded data of the surface group of genus `genus` with its cross-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub genus: usize,
    pub weights: usize,
    /// `dim L(r)` for `r = 1 ..= weights`, from Lyndon-bracket ranks.
    pub lie_dims: GradedDims,
    /// `dim UL(r)` for `r = 0 ..= weights`.
    pub ul_dims: GradedDims,
    /// `2g² − g − 1`.
    pub l2_closed_form: usize,
    /// Size of the listed weight-two basis and its rank in `UL(2)`.
    pub v1_count: usize,
    pub v1_rank: usize,
    /// `u_r = 2g·u_{r−1} − u_{r−2}` for `2 ≤ r ≤ weights`.
    pub recurrence_holds: bool,
    /// `dim L(r)` recovered from `UL` by PBW inversion agrees with `lie_dims`.
    pub pbw_agrees: bool,
    pub ext: Option<crate::resolution::ExtTruncation>,
}

impl SurfaceReport {
    /// Every identity holds and, when Ext was computed, it is zero in rows 0
    /// and 1 and nonzero in row 2.
    pub fn passed(&self) -> bool {
        let g = self.genus as u64;
        let l = &self.lie_dims;
        let ext_ok = self.ext.as_ref().map_or(true, |e| {
            e.row_vanishes(0) && e.row_vanishes(1) && e.least_nonzero().map(|t| t.0) == Some(2)
        });
        l.get(1) == Some(2 * g)
            && (self.weights < 2 || l.get(2) == Some(self.l2_closed_form as u64))
            && self.v1_count == self.l2_closed_form
            && self.v1_rank == self.l2_closed_form
            && self.recurrence_holds
            && self.pbw_agrees
            && ext_ok
    }

    pub fn failure_detail(&self) -> Option<String> {
        if self.passed() {
            return None;
        }
        Some(format!(
            "genus {}: l = {:?}, l2 closed form {}, listed basis {} of rank {}, recurrence {}, PBW {}, Ext {}",
            self.genus,
            self.lie_dims.dims,
            self.l2_closed_form,
            self.v1_count,
            self.v1_rank,
            self.recurrence_holds,
            self.pbw_agrees,
            self.ext.as_ref().map_or("not computed".into(), |e| e.verdict())
        ))
    }
}

/// Computes a [`SurfaceReport`] through weight `weights` (at least 2);
/// truncated Ext is computed from a minimal resolution through degree
/// `p_max` when `p_max` is given.
pub fn surface_report(genus: usize, weights: usize, p_max: Option<usize>, limits: &Limits) -> Result<SurfaceReport> {
    if weights < 2 {
        return Err(crate::error::Error::Config(format!("surface reports need weights ≥ 2, got {weights}")));
    }
    let pres = surface_presentation(genus)?;
    let ul = ul_dims_quotient(&pres, weights, limits)?;
    let lie = lie_dims_direct(&pres, weights, limits)?;
    let pbw_agrees = lie_dims_pbw_inversion(&ul, weights).is_ok_and(|d| d == lie);
    let listed = surface_weight_two_brackets(genus);
    let alg = NormalFormEngine::new(&pres, 2, limits)?;
    let v1_rank = bracket_rank(&alg, &listed);
    let u = &ul.dims;
    let recurrence_holds =
        (2..u.len()).all(|r| u[r] as i128 == 2 * genus as i128 * u[r - 1] as i128 - u[r - 2] as i128);
    let ext = match p_max {
        Some(p) => Some(truncated_ext(&minimal_resolution(&pres, p, weights, limits)?, weights)?),
        None => None,
    };
    Ok(SurfaceReport {
        genus,
        weights,
        lie_dims: lie,
        ul_dims: ul,
        l2_closed_form: 2 * genus * genus - genus - 1,
        v1_count: listed.len(),
        v1_rank,
        recurrence_holds,
        pbw_agrees,
        ext,
    })
}

/// Surface-group identities for the given genera, with truncated Ext for
/// the genera in `ext_genera`.
pub fn surface_results(genera: &[usize], weights: usize, ext_genera: &[usize], p_max: usize) -> CheckOutcome {
    const ID: &str = "surface";
    let limits = Limits::default();
    let mut notes = Vec::new();
    for (i, &g) in genera.iter().enumerate() {
        let ext = ext_genera.contains(&g).then_some(p_max);
        match surface_report(g, weights, ext, &limits) {
            Err(e) => return CheckOutcome::fail(ID, i + 1, None, format!("genus {g}: {e}")),
            Ok(r) => match r.failure_detail() {
                Some(d) => return CheckOutcome::fail(ID, i + 1, None, d),
                None => {
                    let mut note = format!("g={g}: l1={} l2={} UL={:?}", 2 * g, r.l2_closed_form, r.ul_dims.dims);
                    if let Some(e) = &r.ext {
                        note.push_str(&format!(" Ext: {}", e.verdict()));
                    }
                    notes.push(note);
                }
            },
        }
    }
    CheckOutcome::pass(ID, notes.len(), notes.join("; "))
}

/// Isomorphism-invariant key: the least edge mask over vertex relabelings.
pub fn canonical_key(g: &Graph) -> (usize, u64) {
    let n = g.n_vertices();
    let pair = |i: usize, j: usize| {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * n - i * (i + 1) / 2 + (j - i - 1)
    };
    let edges = g.edges();
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut visit = |perm: &[usize]| {
        let mask = edges.iter().fold(0u64, |m, &(i, j)| m | 1 << pair(perm[i], perm[j]));
        best = best.min(mask);
    };
    // Heap's algorithm
    let mut c = vec![0; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (n, if edges.is_empty() { 0 } else { best })
}

/// Connected non-complete graphs have `dim L(r) > 0` for every `r ≤ w_max`;
/// complete graphs have `dim L(r) = 0` for `2 ≤ r ≤ w_max`. Lyndon ranks are
/// computed once per isomorphism class and compared with PBW inversion of
/// the clique series for every labeled graph.
pub fn nilpotency(max_vertices: usize, w_max: usize) -> CheckOutcome {
    const ID: &str = "nilpotency";
    let limits = Limits::default();
    let mut classes: HashMap<(usize, u64), GradedDims> = HashMap::new();
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        cases += 1;
        let key = canonical_key(&g);
        let direct = match classes.get(&key) {
            Some(d) => d.clone(),
            None => match lie_dims_direct(&raag_presentation(&g), w_max, &limits) {
                Ok(d) => classes.entry(key).or_insert(d).clone(),
                Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
            },
        };
        let pbw = match clique_series_dims(&g, w_max, &limits).and_then(|u| lie_dims_pbw_inversion(&u, w_max)) {
            Ok(d) => d,
            Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
        };
        if pbw != direct {
            return CheckOutcome::fail(ID, cases, Some(&g), format!("PBW {:?} vs Lyndon ranks {:?}", pbw.dims, direct.dims));
        }
        let n = g.n_vertices();
        let bad = if n >= 1 && g.is_complete() {
            direct.iter().any(|(r, d)| r >= 2 && d != 0)
        } else if n >= 1 && g.is_connected() {
            direct.iter().any(|(_, d)| d == 0)
        } else {
            false
        };
        if bad {
            return CheckOutcome::fail(ID, cases, Some(&g), format!("L dims {:?}", direct.dims));
        }
    }
    CheckOutcome::pass(
        ID,
        cases,
        format!("{cases} labeled graphs, {} isomorphism classes, weights ≤ {w_max}", classes.len()),
    )
}

/// Fröberg and minimal resolutions have the same generators and the same
/// truncated Ext, whose least nonzero degree is the depth for connected
/// non-complete graphs.
pub fn resolution_agreement(max_vertices: usize, w_max: usize) -> CheckOutcome {
    const ID: &str = "resolution-agreement";
    let limits = Limits::default();
    let mut cases = 0;
    for g in graphs_upto(max_vertices) {
        cases += 1;
        let run = || -> Result<Option<String>> {
            let f = froberg_complex(&g, w_max, &limits)?;
            let m = minimal_resolution(&raag_presentation(&g), f.p_max() + 1, w_max, &limits)?;
            for p in 0..=f.p_max() + 1 {
                let a = f.module(p).map_or(vec![0; w_max + 1], |x| x.weight_counts(w_max));
                let b = m.module(p).map_or(vec![0; w_max + 1], |x| x.weight_counts(w_max));
                if a != b {
                    return Ok(Some(format!("degree {p}: Fröberg generators {a:?}, minimal {b:?}")));
                }
            }
            let (ef, em) = (truncated_ext(&f, w_max)?, truncated_ext(&m, w_max)?);
            let shared = ef.rows.len().min(em.rows.len());
            let tail_zero = |e: &crate::resolution::ExtTruncation| (shared..e.rows.len()).all(|p| e.row_vanishes(p));
            if ef.rows[..shared] != em.rows[..shared] || !tail_zero(&ef) || !tail_zero(&em) {
                return Ok(Some("truncated Ext differs between the resolutions".into()));
            }
            if g.n_vertices() >= 1 && g.is_connected() && !g.is_complete() {
                let d = depth_report(&g, &crate::depth::ExactCohomology)?.depth;
                if ef.least_nonzero().map(|t| t.0) != Some(d) {
                    return Ok(Some(format!("depth {d} but {}", ef.verdict())));
                }
            }
            Ok(None)
        };
        match run() {
            Err(e) => return CheckOutcome::fail(ID, cases, Some(&g), e.to_string()),
            Ok(Some(d)) => return CheckOutcome::fail(ID, cases, Some(&g), d),
            Ok(None) => {}
        }
    }
    CheckOutcome::pass(ID, cases, format!("{cases} graphs on ≤ {max_vertices} vertices, weight window {w_max}"))
}

/// Every check, in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let toggled = ToggledCohomology;
    let exact = crate::depth::ExactCohomology;
    let source: &dyn CohomologySource = if cfg.faults.cohomology { &toggled } else { &exact };
    let av = cfg.algebra_vertices.min(cfg.max_vertices);
    vec![
        method_equivalence(cfg.max_vertices, source),
        worked_examples(cfg.max_vertices, cfg.seed, source),
        star_link_shift(cfg.max_vertices, source),
        froberg_exactness(av, cfg.lie_weight, cfg.faults.froberg),
        hilbert_agreement(av, cfg.ul_weight, cfg.lie_weight),
        surface_results(&[1, 2, 3, 4], cfg.lie_weight, &[1, 2], 3),
        nilpotency(cfg.max_vertices, cfg.lie_weight),
        resolution_agreement(av, cfg.lie_weight),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders() {
        let g = central_generators_graph(2);
        assert_eq!(g.n_vertices(), 6);
        assert!(g.has_edge(0, 5) && g.has_edge(2, 3) && !g.has_edge(2, 4) && !g.has_edge(4, 5));
        let g = glued_simplices_graph(1);
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.n_edges(), 6 + 6 - 1);
        let g = glued_simplices_graph(-1);
        assert!(!g.is_connected());
    }

    #[test]
    fn cross_relation_family_shape() {
        let a = cross_relation_family(7, 10);
        assert_eq!(a, cross_relation_family(7, 10));
        for g in &a {
            assert!(g.is_connected());
            let xs: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.label(v).starts_with('x')).collect();
            let ys: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.label(v).starts_with('y')).collect();
            assert!(xs.len() >= 2 && ys.len() >= 2);
            let cross: Vec<_> = g.edges().into_iter().filter(|&(i, j)| xs.contains(&i) != xs.contains(&j)).collect();
            assert_eq!(cross, vec![(0, xs.len())]);
        }
    }

    #[test]
    fn canonical_keys() {
        let p1 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let p2 = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(canonical_key(&p1), canonical_key(&p2));
        assert_ne!(canonical_key(&p1), canonical_key(&Graph::complete(3)));
        let classes: std::collections::HashSet<_> = all_labeled_graphs(4).map(|g| canonical_key(&g)).collect();
        assert_eq!(classes.len(), 11);
    }

    #[test]
    fn surface_bracket_lists() {
        for g in 1..=4 {
            assert_eq!(surface_weight_two_brackets(g).len(), 2 * g * g - g - 1);
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let exact = crate::depth::ExactCohomology;
        assert!(method_equivalence(4, &exact).passed);
        assert!(star_link_shift(4, &exact).passed);
        assert!(froberg_exactness(3, 4, false).passed);
        assert!(hilbert_agreement(3, 5, 4).passed);
        assert!(nilpotency(4, 4).passed);
        assert!(resolution_agreement(3, 4).passed);
    }

    #[test]
    fn faults_are_detected() {
        let bad = method_equivalence(3, &ToggledCohomology);
        assert!(!bad.passed);
        assert!(bad.witness.unwrap().graph.is_some());
        let bad = froberg_exactness(3, 4, true);
        assert!(!bad.passed);
        assert!(bad.witness.unwrap().detail.contains("degree 2"));
    }
}
