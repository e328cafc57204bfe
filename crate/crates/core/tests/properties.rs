//! Property tests for the graph primitives and the text format.

use domset_core::format::{parse_instance, serialize_instance};
use domset_core::graph::{Graph, GraphError, VertexSet};
use domset_core::instances::{gen_planted, PlantedConfig, PlantedShape};
use domset_core::Variant;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn arb_subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(|mask| (0..mask.len()).filter(|&v| mask[v]).collect())
}

fn has_induced_p3(g: &Graph, s: &VertexSet) -> bool {
    let n = g.vertex_count();
    let alive: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    for (i, &a) in alive.iter().enumerate() {
        for (j, &b) in alive.iter().enumerate().skip(i + 1) {
            for &c in alive.iter().skip(j + 1) {
                let edges =
                    g.has_edge(a, b) as u8 + g.has_edge(a, c) as u8 + g.has_edge(b, c) as u8;
                if edges == 2 {
                    return true;
                }
            }
        }
    }
    false
}

fn has_split_obstruction(g: &Graph, s: &VertexSet) -> bool {
    let alive: Vec<usize> = (0..g.vertex_count()).filter(|&v| !s.contains(v)).collect();
    let n = alive.len();
    let idx = |q: &[usize]| -> Vec<usize> { q.iter().map(|&i| alive[i]).collect() };
    let count_edges = |vs: &[usize]| -> (usize, Vec<usize>) {
        let mut degs = vec![0; vs.len()];
        let mut edges = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if g.has_edge(vs[i], vs[j]) {
                    degs[i] += 1;
                    degs[j] += 1;
                    edges += 1;
                }
            }
        }
        (edges, degs)
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let (e, d) = count_edges(&idx(&[i, j, k, l]));
                    if (e == 2 && d.iter().all(|&x| x == 1))
                        || (e == 4 && d.iter().all(|&x| x == 2))
                    {
                        return true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    for m in l + 1..n {
                        let (e, d) = count_edges(&idx(&[i, j, k, l, m]));
                        if e == 5 && d.iter().all(|&x| x == 2) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

proptest! {
    /// The closed neighborhood minus the vertex is exactly its adjacency row.
    #[test]
    fn closed_neighborhood_is_row_plus_self(g in arb_graph(9)) {
        for v in g.vertices() {
            let closed = g.closed_neighborhood(v);
            prop_assert!(closed.contains(v));
            let row: Vec<usize> = closed.iter().filter(|&u| u != v).collect();
            prop_assert_eq!(row.as_slice(), g.neighbors(v));
        }
    }

    /// Distance-two vertices avoid N[S] and each touches N(S).
    #[test]
    fn n_equal_2_sits_between_rings(g in arb_graph(9), raw in arb_subset(9)) {
        let s: VertexSet = raw.iter().filter(|&v| v < g.vertex_count()).collect();
        let two = g.n_equal_2(&s);
        let closed = g.closed_neighborhood_of_set(&s);
        let ring = g.open_neighborhood_of_set(&s);
        prop_assert!(two.is_disjoint_from(&closed));
        for u in two.iter() {
            prop_assert!(g.neighbors(u).iter().any(|&w| ring.contains(w)));
        }
    }

    /// Cluster recognition agrees with brute-force induced-P3 search.
    #[test]
    fn cluster_partition_iff_no_p3(g in arb_graph(10), raw in arb_subset(10)) {
        let s: VertexSet = raw.iter().filter(|&v| v < g.vertex_count()).collect();
        let recognized = g.cluster_partition(&s);
        prop_assert_eq!(recognized.is_ok(), !has_induced_p3(&g, &s));
        match recognized {
            Ok(p) => {
                let union: usize = p.cliques().iter().map(VertexSet::len).sum();
                prop_assert_eq!(union + s.len(), g.vertex_count());
            }
            Err(GraphError::NotClusterGraph(a, b, c)) => {
                prop_assert!(g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c));
                prop_assert!(!s.contains(a) && !s.contains(b) && !s.contains(c));
            }
            Err(other) => prop_assert!(false, "unexpected error {:?}", other),
        }
    }

    /// Split recognition agrees with brute-force 2K2/C4/C5 search, and the
    /// returned partition is the lexicographically smallest clique side among
    /// the maximum-clique-side partitions, checked against enumerating all
    /// 2^n candidate partitions.
    #[test]
    fn split_partition_iff_no_obstruction(g in arb_graph(8), raw in arb_subset(8)) {
        let s: VertexSet = raw.iter().filter(|&v| v < g.vertex_count()).collect();
        let recognized = g.split_partition(&s);
        prop_assert_eq!(recognized.is_ok(), !has_split_obstruction(&g, &s));
        if let Ok(p) = recognized {
            prop_assert!(p.clique_side.is_disjoint_from(&p.independent_side));
            prop_assert_eq!(
                p.clique_side.len() + p.independent_side.len() + s.len(),
                g.vertex_count()
            );

            let alive: Vec<usize> =
                (0..g.vertex_count()).filter(|&v| !s.contains(v)).collect();
            let n = alive.len();
            let mut best: Option<Vec<usize>> = None;
            for mask in 0u32..1 << n {
                let c: Vec<usize> =
                    (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| alive[i]).collect();
                let i: Vec<usize> =
                    (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| alive[i]).collect();
                let c_ok = c.iter().enumerate().all(|(a, &u)| {
                    c[a + 1..].iter().all(|&v| g.has_edge(u, v))
                });
                let i_ok = i.iter().enumerate().all(|(a, &u)| {
                    i[a + 1..].iter().all(|&v| !g.has_edge(u, v))
                });
                if c_ok && i_ok {
                    let better = best.as_ref().is_none_or(|b| {
                        c.len() > b.len() || (c.len() == b.len() && c < *b)
                    });
                    if better {
                        best = Some(c);
                    }
                }
            }
            let expect: VertexSet = best.unwrap().into_iter().collect();
            prop_assert_eq!(p.clique_side, expect);
        }
    }

    /// Serialize/parse round trip over generated instances.
    #[test]
    fn format_round_trip(seed in 0u64..5000, k in 0usize..5, cvd in any::<bool>()) {
        let shape = if cvd {
            PlantedShape::Cliques(vec![1 + (seed % 3) as usize, 2])
        } else {
            PlantedShape::Split { clique: 2, independent: 2 }
        };
        let inst = gen_planted(seed, &PlantedConfig {
            shape,
            modulator_size: k,
            edge_density: 0.4,
            variant: Variant::Eds,
            budget: None,
            threshold: 1,
        });
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_instance(&back), text);
    }
}
