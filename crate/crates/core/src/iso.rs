//! Small-graph isomorphism and induced-pattern search.
//!
//! Isomorphism is plain backtracking on top of a degree/colour refinement;
//! everything it is asked about here is tiny. Pattern search enumerates
//! vertex subsets of the pattern's size in colex order, pruning with edge
//! counts and sorted degree sequences before attempting an exact match.

use crate::bits;
use crate::error::GraphError;
use crate::graph::SimpleGraph;
use std::ops::ControlFlow;

/// Practical ceiling for the isomorphism backtracker.
pub const ISO_CAP: usize = 64;

/// Exact graph isomorphism for graphs of at most [`ISO_CAP`] vertices.
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool, GraphError> {
    for g in [a, b] {
        if g.n() > ISO_CAP {
            return Err(GraphError::SizeCapExceeded {
                n: g.n(),
                cap: ISO_CAP,
            });
        }
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.degree_sequence_sorted() != b.degree_sequence_sorted() {
        return Ok(false);
    }
    let n = a.n();
    if n == 0 {
        return Ok(true);
    }
    let (ca, cb) = if n <= 8 {
        // degrees alone are a fine seed for tiny graphs
        (
            (0..n).map(|v| a.degree(v)).collect::<Vec<_>>(),
            (0..n).map(|v| b.degree(v)).collect::<Vec<_>>(),
        )
    } else {
        match refine_colors(a, b) {
            Some(pair) => pair,
            None => return Ok(false),
        }
    };
    Ok(backtrack_iso(a, b, &ca, &cb))
}

/// Iterated neighbourhood-colour refinement shared across both graphs, so
/// equal colours mean comparable local structure. Returns `None` when the
/// colour multisets already separate the graphs.
fn refine_colors(a: &SimpleGraph, b: &SimpleGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.n();
    let mut ca: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    for _ in 0..n {
        let sig = |g: &SimpleGraph, c: &[usize], v: usize| {
            let mut s: Vec<usize> = g.neighbors(v).iter().map(|&u| c[u]).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let mut all: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| sig(a, &ca, v))
            .chain((0..n).map(|v| sig(b, &cb, v)))
            .collect();
        let per_graph: Vec<(usize, Vec<usize>)> = all.clone();
        all.sort();
        all.dedup();
        let index_of = |s: &(usize, Vec<usize>)| all.binary_search(s).unwrap();
        let next_a: Vec<usize> = (0..n).map(|v| index_of(&per_graph[v])).collect();
        let next_b: Vec<usize> = (0..n).map(|v| index_of(&per_graph[n + v])).collect();
        let mut ma = next_a.clone();
        let mut mb = next_b.clone();
        ma.sort_unstable();
        mb.sort_unstable();
        if ma != mb {
            return None;
        }
        let stable = next_a == ca && next_b == cb;
        ca = next_a;
        cb = next_b;
        if stable {
            break;
        }
    }
    Some((ca, cb))
}

struct IsoSearch<'a> {
    a: &'a SimpleGraph,
    b: &'a SimpleGraph,
    ca: &'a [usize],
    cb: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let u = self.order[pos];
        for v in 0..self.b.n() {
            if self.used[v] || self.cb[v] != self.ca[u] {
                continue;
            }
            let consistent = self.order[..pos].iter().all(|&w| {
                let mw = self.map[w];
                self.a.has_edge(u, w) == self.b.has_edge(v, mw)
            });
            if !consistent {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.run(pos + 1) {
                return true;
            }
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}

fn backtrack_iso(a: &SimpleGraph, b: &SimpleGraph, ca: &[usize], cb: &[usize]) -> bool {
    let n = a.n();
    // Map the most constrained vertices first: small colour classes, then
    // high degree.
    let mut class_size = std::collections::HashMap::new();
    for &c in ca {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], usize::MAX - a.degree(v), v));

    let mut search = IsoSearch {
        a,
        b,
        ca,
        cb,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.run(0)
}

/// A pattern prepared for subset matching.
struct PreparedPattern<'a> {
    idx: usize,
    graph: &'a SimpleGraph,
    edges: usize,
    degseq: Vec<usize>,
    connected: bool,
}

/// Search driver state: the active pattern set shrinks as hits are found so
/// the reported witness belongs to the earliest pattern in the given order
/// (ties broken by colex-first subset for that pattern).
struct SubsetSearch<'a> {
    g: &'a SimpleGraph,
    patterns: Vec<PreparedPattern<'a>>,
    /// Patterns with index < bound are still in play.
    bound: usize,
    best: Option<(usize, Vec<usize>)>,
    max_edges: usize,
    min_edges: usize,
}

impl SubsetSearch<'_> {
    fn refresh_edge_range(&mut self) {
        let active = self.patterns.iter().filter(|p| p.idx < self.bound);
        let (mut lo, mut hi) = (usize::MAX, 0usize);
        for p in active {
            lo = lo.min(p.edges);
            hi = hi.max(p.edges);
        }
        self.min_edges = lo;
        self.max_edges = hi;
    }
}

/// Searches `g` for an induced subgraph isomorphic to any of `patterns`
/// (all of which must have exactly `size` vertices), enumerating vertex
/// subsets in colex order. The returned witness is for the first pattern in
/// the given order that occurs at all, with the colex-least subset for it.
pub(crate) fn find_induced_of_size(
    g: &SimpleGraph,
    patterns: &[&SimpleGraph],
    size: usize,
) -> Option<(usize, Vec<usize>)> {
    debug_assert!(patterns.iter().all(|p| p.n() == size));
    if size > g.n() || size == 0 || patterns.is_empty() {
        return None;
    }
    let prepared: Vec<PreparedPattern> = patterns
        .iter()
        .enumerate()
        .map(|(idx, p)| PreparedPattern {
            idx,
            graph: p,
            edges: p.edge_count(),
            degseq: p.degree_sequence_sorted(),
            connected: p.components().len() <= 1,
        })
        .collect();
    let mut search = SubsetSearch {
        g,
        bound: prepared.len(),
        patterns: prepared,
        best: None,
        max_edges: 0,
        min_edges: 0,
    };
    search.refresh_edge_range();

    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    let mut mask = vec![0u64; g.words()];
    let mut edge_counts: Vec<usize> = Vec::with_capacity(size + 1);
    edge_counts.push(0);

    let _ = colex_rec(
        &mut search,
        size,
        g.n(),
        &mut chosen,
        &mut mask,
        &mut edge_counts,
    );
    search.best
}

fn colex_rec(
    search: &mut SubsetSearch,
    remaining: usize,
    limit: usize,
    chosen: &mut Vec<usize>,
    mask: &mut [u64],
    edge_counts: &mut Vec<usize>,
) -> ControlFlow<()> {
    if remaining == 0 {
        let edges = *edge_counts.last().unwrap();
        match_subset(search, chosen, edges);
        return if search.bound == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        };
    }
    let cur_edges = *edge_counts.last().unwrap();
    // Edges only accumulate, and each of the `remaining` picks can add at
    // most (|chosen| + picks so far) new ones.
    let chosen_len = chosen.len();
    let max_add = remaining * chosen_len + remaining * (remaining - 1) / 2;
    if cur_edges > search.max_edges || cur_edges + max_add < search.min_edges {
        return ControlFlow::Continue(());
    }
    // Colex: the largest element of the subset grows last in the outer loop.
    for v in (remaining - 1)..limit {
        let added = bits::and_count(search.g.row(v), mask);
        chosen.push(v);
        bits::set_bit(mask, v);
        edge_counts.push(cur_edges + added);
        let flow = colex_rec(search, remaining - 1, v, chosen, mask, edge_counts);
        edge_counts.pop();
        bits::clear_bit(mask, v);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn match_subset(search: &mut SubsetSearch, chosen: &[usize], edges: usize) {
    let any = search
        .patterns
        .iter()
        .any(|p| p.idx < search.bound && p.edges == edges);
    if !any {
        return;
    }
    let mut subset: Vec<usize> = chosen.to_vec();
    subset.sort_unstable();
    let induced = search
        .g
        .induced(&subset)
        .expect("subset vertices are in range");
    let degseq = induced.degree_sequence_sorted();
    let connected = induced.components().len() <= 1;
    for p in &search.patterns {
        if p.idx >= search.bound
            || p.edges != edges
            || p.degseq != degseq
            || (p.connected && !connected)
        {
            continue;
        }
        if is_isomorphic(&induced, p.graph).expect("pattern graphs are tiny") {
            search.best = Some((p.idx, subset));
            search.bound = p.idx;
            search.refresh_edge_range();
            return;
        }
    }
}

/// Finds a vertex subset of `g` inducing `pattern`, or `None`. Patterns are
/// limited to 6 vertices; that keeps the subset sweep polynomial and covers
/// every catalog pattern.
pub fn contains_induced(
    g: &SimpleGraph,
    pattern: &SimpleGraph,
) -> Result<Option<Vec<usize>>, GraphError> {
    if pattern.n() > 6 {
        return Err(GraphError::PatternTooLarge { n: pattern.n() });
    }
    if pattern.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    Ok(find_induced_of_size(g, &[pattern], pattern.n()).map(|(_, subset)| subset))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_basics() {
        let c3 = SimpleGraph::cycle(3).unwrap();
        let k3 = SimpleGraph::complete(3);
        assert!(is_isomorphic(&c3, &k3).unwrap());

        let claw = SimpleGraph::star(3);
        let p4 = SimpleGraph::path(4);
        assert!(!is_isomorphic(&claw, &p4).unwrap());

        let c5 = SimpleGraph::cycle(5).unwrap();
        let p5 = SimpleGraph::path(5);
        assert!(!is_isomorphic(&c5, &p5).unwrap());
    }

    #[test]
    fn iso_relabelled() {
        // same graph under a scrambled labelling
        let g =
            SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let perm = [3usize, 5, 0, 2, 4, 1];
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = SimpleGraph::new(6, &edges).unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn iso_same_degrees_different_graphs() {
        // C_6 vs 2K_3: both 2-regular on 6 vertices
        let c6 = SimpleGraph::cycle(6).unwrap();
        let two_k3 =
            SimpleGraph::disjoint_union(&[SimpleGraph::complete(3), SimpleGraph::complete(3)]);
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
    }

    #[test]
    fn iso_cap() {
        let big = SimpleGraph::empty(65);
        assert!(is_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn induced_search() {
        let k4 = SimpleGraph::complete(4);
        let k3 = SimpleGraph::complete(3);
        let hit = contains_induced(&k4, &k3).unwrap();
        assert!(hit.is_some());

        let c5 = SimpleGraph::cycle(5).unwrap();
        assert!(contains_induced(&c5, &k3).unwrap().is_none());

        // found subset really induces the pattern
        let claw = SimpleGraph::star(3);
        let g = SimpleGraph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (2, 4)]).unwrap();
        if let Some(subset) = contains_induced(&g, &claw).unwrap() {
            let ind = g.induced(&subset).unwrap();
            assert!(is_isomorphic(&ind, &claw).unwrap());
        } else {
            panic!("claw expected");
        }
    }

    #[test]
    fn induced_pattern_too_large() {
        let g = SimpleGraph::complete(8);
        let p = SimpleGraph::complete(7);
        assert!(contains_induced(&g, &p).is_err());
    }

    #[test]
    fn colex_order_is_respected() {
        // in K_4 the first triangle in colex order is {0,1,2}
        let k4 = SimpleGraph::complete(4);
        let k3 = SimpleGraph::complete(3);
        let hit = contains_induced(&k4, &k3).unwrap().unwrap();
        assert_eq!(hit, vec![0, 1, 2]);
    }
}
