use proptest::prelude::*;

use raag_depth::depth::depth;
use raag_depth::homology::reduced_cohomology_dims;
use raag_depth::lie::{clique_series_dims, ul_dims_normal_form, GradedAlgebra, NormalFormEngine};
use raag_depth::{FlagComplex, Graph, Limits, Simplex};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn complex(g: &Graph) -> FlagComplex {
    FlagComplex::build(g, &Limits::default()).unwrap()
}

/// `g` plus one vertex adjacent to everything.
fn cone(g: &Graph) -> Graph {
    let n = g.n_vertices();
    let mut edges = g.edges();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::new(n + 1, &edges).unwrap()
}

/// Disjoint union of `a` and `b`.
fn disjoint(a: &Graph, b: &Graph) -> Graph {
    let n = a.n_vertices();
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(i, j)| (i + n, j + n)));
    Graph::new(n + b.n_vertices(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn faces_are_simplices(g in graph_strategy(8)) {
        let p = complex(&g);
        for s in p.all_simplices() {
            prop_assert!(g.is_clique(s.0));
            for v in s.0.iter() {
                prop_assert!(p.contains(Simplex(s.0.remove(v))));
            }
        }
    }

    #[test]
    fn euler_characteristic(g in graph_strategy(8)) {
        let p = complex(&g);
        let chi: i64 = (-1..=p.dim()).map(|d| if d % 2 == 0 { 1 } else { -1 } * p.count(d) as i64).sum();
        let betti: i64 = reduced_cohomology_dims(&p)
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { 1 } else { -1 } * b as i64)
            .sum();
        prop_assert_eq!(chi, betti);
    }

    #[test]
    fn degree_zero_counts_components(g in graph_strategy(8)) {
        let dims = reduced_cohomology_dims(&complex(&g));
        prop_assert_eq!(dims[0] + 1, g.connected_components(g.vertices()).len());
    }

    #[test]
    fn cones_are_acyclic(g in graph_strategy(7)) {
        prop_assert!(reduced_cohomology_dims(&complex(&cone(&g))).iter().all(|&b| b == 0));
    }

    #[test]
    fn depth_bounds(g in graph_strategy(7)) {
        let r = depth(&g).unwrap();
        prop_assert!(r.agreement);
        prop_assert!(1 <= r.depth && r.depth <= g.n_vertices());
        prop_assert_eq!(r.depth == g.n_vertices(), g.is_complete() || g.n_vertices() == 1);
    }

    #[test]
    fn central_factor_adds_one(g in graph_strategy(6)) {
        prop_assert_eq!(depth(&cone(&g)).unwrap().depth, depth(&g).unwrap().depth + 1);
    }

    #[test]
    fn free_products_have_depth_one(a in graph_strategy(4), b in graph_strategy(4)) {
        prop_assert_eq!(depth(&disjoint(&a, &b)).unwrap().depth, 1);
    }

    #[test]
    fn hilbert_series_by_enumeration(g in graph_strategy(6)) {
        let limits = Limits::default();
        prop_assert_eq!(
            ul_dims_normal_form(&g, 6, &limits).unwrap(),
            clique_series_dims(&g, 6, &limits).unwrap()
        );
    }

    #[test]
    fn products_add_weights(g in graph_strategy(5), a in proptest::collection::vec(0usize..5, 0..4), b in proptest::collection::vec(0usize..5, 0..4)) {
        let n = g.n_vertices();
        let (a, b): (Vec<usize>, Vec<usize>) = (a.into_iter().map(|x| x % n).collect(), b.into_iter().map(|x| x % n).collect());
        let alg = NormalFormEngine::for_graph(&g, 8, &Limits::default()).unwrap();
        let prod = alg.mul(a.len(), &alg.reduce_word(&a), b.len(), &alg.reduce_word(&b));
        let joined: Vec<usize> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(prod, alg.reduce_word(&joined));
    }
}
