//! Power graphs of finite groups: the full graph P(G), the deleted graph
//! P*(G) (identity removed), and the proper graph P**(G) (all dominating
//! vertices removed), plus the structural dominating-vertex prediction.

use crate::bits;
use crate::graph::SimpleGraph;
use crate::group::FiniteGroup;

/// The three power-graph variants of one group, with the vertex-to-element
/// maps tying graph vertices back to group elements.
#[derive(Debug, Clone)]
pub struct PowerGraphBundle {
    /// P(G): one vertex per group element, in element-index order.
    pub full: SimpleGraph,
    /// P*(G): the identity vertex removed.
    pub deleted: SimpleGraph,
    /// P**(G): all dominating vertices of P(G) removed.
    pub proper: SimpleGraph,
    /// Element indices removed to form the proper graph.
    pub dominating: Vec<usize>,
    /// Vertex -> element index for `full` (the identity map).
    pub full_elements: Vec<usize>,
    /// Vertex -> element index for `deleted`.
    pub deleted_elements: Vec<usize>,
    /// Vertex -> element index for `proper`.
    pub proper_elements: Vec<usize>,
}

/// P(G): distinct elements u, v are adjacent iff one is a positive power of
/// the other, i.e. u is in <v> or v is in <u>.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let n = g.order();
    let subgroups: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let s = g.cyclic_subgroup(x).unwrap();
            s.mask().to_vec()
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let member = bits::test_bit(&subgroups[v], u) || bits::test_bit(&subgroups[u], v);
            // membership and subgroup containment define the same relation
            let contain = bits::is_subset(&subgroups[u], &subgroups[v])
                || bits::is_subset(&subgroups[v], &subgroups[u]);
            assert_eq!(member, contain, "power-graph adjacency routes disagree");
            if member {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::with_labels(n, &edges, g.labels().to_vec()).expect("element indices are in range")
}

/// P*(G): the power graph with only the identity vertex removed.
pub fn deleted_power_graph(g: &FiniteGroup) -> SimpleGraph {
    let full = power_graph(g);
    let keep: Vec<usize> = (1..g.order()).collect();
    full.induced(&keep).unwrap()
}

/// Builds P(G), P*(G) and P**(G) together.
pub fn proper_power_graph(g: &FiniteGroup) -> PowerGraphBundle {
    let full = power_graph(g);
    let dominating = full.dominating_vertices();
    let deleted_elements: Vec<usize> = (1..g.order()).collect();
    let deleted = full.induced(&deleted_elements).unwrap();
    let proper_elements: Vec<usize> = (0..g.order()).filter(|v| !dominating.contains(v)).collect();
    let proper = full.induced(&proper_elements).unwrap();
    PowerGraphBundle {
        full,
        deleted,
        proper,
        dominating,
        full_elements: (0..g.order()).collect(),
        deleted_elements,
        proper_elements,
    }
}

/// Structural prediction of the dominating vertices of P(G): the identity;
/// every generator when G is cyclic; every element when G is a cyclic
/// p-group (or trivial); and the unique involution when G is generalized
/// quaternion.
pub fn predicted_dominating(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if g.is_cyclic_prime_power() {
        return (0..n).collect();
    }
    let mut out = vec![0usize];
    if g.is_cyclic() {
        out.extend((1..n).filter(|&x| g.element_orders()[x] == n));
    }
    if g.is_generalized_quaternion() {
        out.extend((1..n).filter(|&x| g.element_orders()[x] == 2));
    }
    out.sort_unstable();
    out.dedup();
    out
}
