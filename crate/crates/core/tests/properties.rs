//! Property tests for the graph and line-graph kernels.

use pgline::graph::SimpleGraph;
use pgline::group::{make_abelian, make_cyclic, make_dihedral, make_generalized_quaternion};
use pgline::iso::{contains_induced, is_isomorphic};
use pgline::line::{krausz_recognize, line_graph, root_graph};
use pgline::power::{power_graph, proper_power_graph};
use proptest::prelude::*;

/// Arbitrary graph on up to `max_n` vertices as an edge mask.
fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            SimpleGraph::new(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    SimpleGraph::new(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_is_reflexive_and_permutation_invariant(
        g in arb_graph(10),
        seed in any::<u64>(),
    ) {
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        // scramble the labels with a seeded Fisher-Yates
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = relabel(&g, &perm);
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert!(is_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn isomorphism_respects_invariants(a in arb_graph(8), b in arb_graph(8)) {
        // one-way soundness: a claimed isomorphism implies matching counts
        if is_isomorphic(&a, &b).unwrap() {
            prop_assert_eq!(a.n(), b.n());
            prop_assert_eq!(a.edge_count(), b.edge_count());
            prop_assert_eq!(a.degree_sequence_sorted(), b.degree_sequence_sorted());
            let ca: Vec<usize> = a.components().iter().map(|c| c.len()).collect();
            let cb: Vec<usize> = b.components().iter().map(|c| c.len()).collect();
            let mut ca = ca; let mut cb = cb;
            ca.sort_unstable();
            cb.sort_unstable();
            prop_assert_eq!(ca, cb);
        }
    }

    #[test]
    fn induced_search_hits_are_genuine(g in arb_graph(9), p in arb_graph(5)) {
        if let Some(subset) = contains_induced(&g, &p).unwrap() {
            let ind = g.induced(&subset).unwrap();
            prop_assert!(is_isomorphic(&ind, &p).unwrap());
        }
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in arb_graph(10)) {
        let all: Vec<usize> = (0..g.n()).collect();
        let h = g.induced(&all).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn disjoint_union_preserves_counts(a in arb_graph(7), b in arb_graph(7)) {
        let u = SimpleGraph::disjoint_union(&[a.clone(), b.clone()]);
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(u.components().len(), a.components().len() + b.components().len());
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(12)) {
        let text = g.to_edge_list();
        let h = SimpleGraph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edges(), g.edges());
        // identical re-emission
        prop_assert_eq!(h.to_edge_list(), text);
    }

    #[test]
    fn line_graph_counts_and_recognition(g in arb_graph(9)) {
        let l = line_graph(&g);
        prop_assert_eq!(l.n(), g.edge_count());
        let expected: usize = (0..g.n())
            .map(|v| { let d = g.degree(v); d * d.saturating_sub(1) / 2 })
            .sum();
        prop_assert_eq!(l.edge_count(), expected);
        let partition = krausz_recognize(&l);
        prop_assert!(partition.is_some());
        prop_assert!(partition.unwrap().is_valid_for(&l));
    }

    #[test]
    fn root_reconstruction_counts(g in arb_graph(9)) {
        let l = line_graph(&g);
        let r = root_graph(&l).expect("line graphs have roots");
        // every vertex of the line graph corresponds to exactly one root edge
        prop_assert_eq!(r.root.edge_count(), l.n());
        prop_assert!(is_isomorphic(&line_graph(&r.root), &l).unwrap());
        prop_assert!(r.partition.is_valid_for(&l));
        // cells plus pendant vertices account for the whole root: one pendant
        // per line-graph vertex in a single cell, two fresh vertices per
        // isolated line-graph vertex
        let mut cell_hits = vec![0usize; l.n()];
        for cell in &r.partition.cells {
            for &v in cell {
                cell_hits[v] += 1;
            }
        }
        let pendants: usize = cell_hits
            .iter()
            .map(|&h| match h {
                0 => 2,
                1 => 1,
                _ => 0,
            })
            .sum();
        // the empty graph roots as a conventional K_1 with neither cells nor
        // pendants, so the census only applies to non-empty line graphs
        if l.n() > 0 {
            prop_assert_eq!(r.partition.cells.len() + pendants, r.root.n());
        }
    }

    #[test]
    fn dominating_vertices_are_adjacent_to_all(g in arb_graph(10)) {
        for v in g.dominating_vertices() {
            for u in 0..g.n() {
                if u != v {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }
}

#[test]
fn shared_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<pgline::FiniteGroup>();
    check::<pgline::SimpleGraph>();
    check::<pgline::KrauszPartition>();
    check::<pgline::PowerGraphBundle>();
    check::<pgline::classify::SweepReport>();
}

#[test]
fn isomorphism_transitivity_spot_check() {
    // three relabellings of the same base graph, pairwise checked
    let base = SimpleGraph::new(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 0),
            (0, 3),
        ],
    )
    .unwrap();
    let p1 = [2usize, 0, 1, 4, 3, 6, 5];
    let p2 = [6usize, 5, 4, 3, 2, 1, 0];
    let g1 = relabel(&base, &p1);
    let g2 = relabel(&base, &p2);
    assert!(is_isomorphic(&base, &g1).unwrap());
    assert!(is_isomorphic(&g1, &g2).unwrap());
    assert!(is_isomorphic(&base, &g2).unwrap());
}

#[test]
fn power_graph_of_z30_contains_a_claw() {
    // the identity together with elements of orders 2, 3 and 5 forms an
    // induced claw whenever the order has three distinct prime divisors
    use pgline::patterns::claw;
    let g = make_cyclic(30).unwrap();
    let p = power_graph(&g);
    let hit = contains_induced(&p, claw()).unwrap();
    assert!(hit.is_some());
}

#[test]
fn power_graph_adjacency_divisibility() {
    let groups = vec![
        make_cyclic(24).unwrap(),
        make_abelian(&[2, 4, 3]).unwrap(),
        make_dihedral(6).unwrap(),
        make_generalized_quaternion(4).unwrap(),
    ];
    for g in &groups {
        let p = power_graph(g);
        for (u, v) in p.edges() {
            assert!(p.has_edge(v, u));
            let (ou, ov) = (g.element_orders()[u], g.element_orders()[v]);
            assert!(
                ou % ov == 0 || ov % ou == 0,
                "adjacent elements with incomparable orders in {}",
                g.family()
            );
        }
    }
}

#[test]
fn proper_of_z4_x_z4_is_three_bowties() {
    let g = make_abelian(&[4, 4]).unwrap();
    let proper = proper_power_graph(&g).proper;
    assert_eq!(proper.n(), 15);
    let comps = proper.components();
    assert_eq!(comps.len(), 3);
    // two triangles sharing one vertex
    let bowtie = SimpleGraph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    for comp in comps {
        let sub = proper.induced(&comp).unwrap();
        assert!(is_isomorphic(&sub, &bowtie).unwrap());
    }
}

/// Two stars whose centers are joined: the root shape of a bowtie.
fn double_star(arms: usize) -> SimpleGraph {
    let mut edges = vec![(0usize, 1usize)];
    let mut next = 2;
    for center in [0usize, 1] {
        for _ in 0..arms {
            edges.push((center, next));
            next += 1;
        }
    }
    SimpleGraph::new(next, &edges).unwrap()
}

#[test]
fn root_shapes_of_the_two_special_abelian_2_groups() {
    // P**(Z_2 x Z_4): two triangles sharing a vertex plus two isolated
    // vertices; its root is a double star plus two lone edges
    let g = make_abelian(&[2, 4]).unwrap();
    let proper = proper_power_graph(&g).proper;
    let root = root_graph(&proper).expect("line graph");
    let expected = SimpleGraph::disjoint_union(&[
        double_star(2),
        SimpleGraph::complete(2),
        SimpleGraph::complete(2),
    ]);
    assert!(is_isomorphic(&root.root, &expected).unwrap());

    // P**(Z_4 x Z_4): three bowties; root is three double stars
    let g = make_abelian(&[4, 4]).unwrap();
    let proper = proper_power_graph(&g).proper;
    let root = root_graph(&proper).expect("line graph");
    let expected = SimpleGraph::disjoint_union(&[double_star(2), double_star(2), double_star(2)]);
    assert!(is_isomorphic(&root.root, &expected).unwrap());
}

#[test]
fn krausz_cells_of_z15_proper_graph() {
    let g = make_cyclic(15).unwrap();
    let proper = proper_power_graph(&g).proper;
    let partition = krausz_recognize(&proper).expect("K_2 + K_4 is a line graph");
    let mut sizes: Vec<usize> = partition.cells.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 4]);
    assert!(partition.is_valid_for(&proper));
}

#[test]
fn maximal_cyclic_partition_tracks_line_verdict_for_odd_p_groups() {
    use pgline::classify::cyclic_partition_check;
    use pgline::group::{make_heisenberg, make_modular_maximal_cyclic};

    // both directions: the partition condition holds exactly when the proper
    // power graph is a line graph
    for (g, expected) in [
        (make_heisenberg(3).unwrap(), true),
        (make_heisenberg(5).unwrap(), true),
        (make_modular_maximal_cyclic(3).unwrap(), false),
    ] {
        let check = cyclic_partition_check(&g).unwrap();
        let proper = proper_power_graph(&g).proper;
        let is_line = krausz_recognize(&proper).is_some();
        assert_eq!(check.holds, expected, "{}", g.family());
        assert_eq!(check.holds, is_line, "{}", g.family());
    }
}

#[test]
fn deleted_equals_proper_off_the_special_cases() {
    // when the group is neither cyclic nor generalized quaternion, the only
    // dominating vertex is the identity
    for g in [
        make_dihedral(5).unwrap(),
        make_abelian(&[2, 2]).unwrap(),
        make_abelian(&[3, 9]).unwrap(),
        make_abelian(&[2, 4]).unwrap(),
    ] {
        let b = proper_power_graph(&g);
        assert_eq!(b.dominating, vec![0], "{}", g.family());
        assert_eq!(b.deleted, b.proper, "{}", g.family());
    }
}
