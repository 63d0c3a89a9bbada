//! Line graphs: construction, two independent recognition algorithms, and
//! root-graph reconstruction.
//!
//! Recognition is deliberately done twice, once by forbidden-induced-pattern
//! search and once by Krausz clique partitioning, and the two verdicts are
//! compared wherever both run. Results downstream rest on that agreement, so
//! neither algorithm is allowed to be the sole authority.

use crate::bits;
use crate::error::GraphError;
use crate::graph::SimpleGraph;
use crate::iso::find_induced_of_size;
use crate::patterns::beineke_patterns;
use serde::Serialize;

/// Default vertex ceiling for the forbidden-pattern search. The subset sweep
/// is O(n^6); past this size callers fall back to the Krausz recognizer.
pub const DEFAULT_PATTERN_CAP: usize = 64;

/// An induced forbidden pattern found in a graph.
#[derive(Debug, Clone, Serialize)]
pub struct ForbiddenWitness {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

/// Verdict of the forbidden-pattern decider.
#[derive(Debug, Clone)]
pub struct ForbiddenVerdict {
    pub is_line: bool,
    pub witness: Option<ForbiddenWitness>,
}

/// Line graph L(g): one vertex per edge of `g` (in sorted edge order), two
/// vertices adjacent iff the underlying edges share an endpoint.
pub fn line_graph(g: &SimpleGraph) -> SimpleGraph {
    let edges = g.edges();
    let m = edges.len();
    let labels: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("({},{})", g.label(u), g.label(v)))
        .collect();
    let mut le = Vec::new();
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                le.push((i, j));
            }
        }
    }
    SimpleGraph::with_labels(m, &le, labels).expect("edge indices are in range")
}

/// Forbidden-pattern decider: `g` is a line graph iff no 4-6 vertex subset
/// induces a catalog pattern. Size-4 subsets (the claw) are swept first;
/// they catch most failures. Graphs above `cap` vertices are refused.
pub fn is_line_graph_forbidden(
    g: &SimpleGraph,
    cap: usize,
) -> Result<ForbiddenVerdict, GraphError> {
    if g.n() > cap {
        return Err(GraphError::SizeCapExceeded { n: g.n(), cap });
    }
    for size in [4usize, 5, 6] {
        let sized: Vec<(&str, &SimpleGraph)> = beineke_patterns()
            .iter()
            .filter(|p| p.graph.n() == size)
            .map(|p| (p.name, &p.graph))
            .collect();
        let graphs: Vec<&SimpleGraph> = sized.iter().map(|&(_, g)| g).collect();
        if let Some((idx, subset)) = find_induced_of_size(g, &graphs, size) {
            return Ok(ForbiddenVerdict {
                is_line: false,
                witness: Some(ForbiddenWitness {
                    pattern: sized[idx].0.to_string(),
                    vertices: subset,
                }),
            });
        }
    }
    Ok(ForbiddenVerdict {
        is_line: true,
        witness: None,
    })
}

/// A partition of a graph's edge set into cliques with every vertex in at
/// most two cells; existence is equivalent to being a line graph.
#[derive(Debug, Clone, Serialize)]
pub struct KrauszPartition {
    /// Cells as sorted vertex lists, in the order the search placed them.
    pub cells: Vec<Vec<usize>>,
}

impl KrauszPartition {
    /// Checks the three defining invariants against `g`.
    pub fn is_valid_for(&self, g: &SimpleGraph) -> bool {
        let mut covered = vec![0u64; g.n() * g.words()];
        let words = g.words();
        let mut cell_count = vec![0usize; g.n()];
        for cell in &self.cells {
            for (i, &u) in cell.iter().enumerate() {
                if u >= g.n() {
                    return false;
                }
                cell_count[u] += 1;
                for &v in &cell[i + 1..] {
                    if !g.has_edge(u, v) {
                        return false; // not a clique
                    }
                    if bits::test_bit(&covered[u * words..(u + 1) * words], v) {
                        return false; // edge in two cells
                    }
                    bits::set_bit(&mut covered[u * words..(u + 1) * words], v);
                    bits::set_bit(&mut covered[v * words..(v + 1) * words], u);
                }
            }
        }
        if cell_count.iter().any(|&c| c > 2) {
            return false;
        }
        // every edge covered
        g.edges()
            .iter()
            .all(|&(u, v)| bits::test_bit(&covered[u * words..(u + 1) * words], v))
    }
}

/// Krausz recognizer: returns a valid partition iff `g` is a line graph.
///
/// Works per connected component. The search repeatedly takes the lowest
/// uncovered edge and branches over the cliques that could be its cell:
/// maximal cliques of the still-feasible graph through that edge (any larger
/// cell is maximal, because a cell of size >= 3 is a maximal clique of a
/// line graph), then the bare two-vertex cell.
pub fn krausz_recognize(g: &SimpleGraph) -> Option<KrauszPartition> {
    let mut cells = Vec::new();
    for comp in g.components() {
        let comp_cells = krausz_component(g, &comp)?;
        cells.extend(comp_cells);
    }
    Some(KrauszPartition { cells })
}

struct KrauszState {
    words: usize,
    covered: Vec<u64>, // n * words, symmetric covered-edge matrix
    cell_count: Vec<u8>,
}

impl KrauszState {
    fn covered_edge(&self, u: usize, v: usize) -> bool {
        bits::test_bit(&self.covered[u * self.words..(u + 1) * self.words], v)
    }

    fn set_covered(&mut self, u: usize, v: usize, value: bool) {
        let w = self.words;
        if value {
            bits::set_bit(&mut self.covered[u * w..(u + 1) * w], v);
            bits::set_bit(&mut self.covered[v * w..(v + 1) * w], u);
        } else {
            bits::clear_bit(&mut self.covered[u * w..(u + 1) * w], v);
            bits::clear_bit(&mut self.covered[v * w..(v + 1) * w], u);
        }
    }
}

fn krausz_component(g: &SimpleGraph, comp: &[usize]) -> Option<Vec<Vec<usize>>> {
    let edges: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&u| {
            g.neighbors(u)
                .into_iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
        .collect();
    if edges.is_empty() {
        return Some(Vec::new());
    }
    let mut edges = edges;
    edges.sort_unstable();
    let mut state = KrauszState {
        words: g.words(),
        covered: vec![0u64; g.n() * g.words()],
        cell_count: vec![0u8; g.n()],
    };
    let mut cells = Vec::new();
    if krausz_rec(g, &edges, &mut state, &mut cells) {
        Some(cells)
    } else {
        None
    }
}

fn krausz_rec(
    g: &SimpleGraph,
    edges: &[(usize, usize)],
    state: &mut KrauszState,
    cells: &mut Vec<Vec<usize>>,
) -> bool {
    let pivot = edges
        .iter()
        .copied()
        .find(|&(u, v)| !state.covered_edge(u, v));
    let (u, v) = match pivot {
        None => return true,
        Some(e) => e,
    };
    if state.cell_count[u] == 2 || state.cell_count[v] == 2 {
        return false; // this edge can never be covered
    }
    for cell in candidate_cells(g, state, u, v) {
        place_cell(state, &cell, true);
        cells.push(cell.clone());
        if krausz_rec(g, edges, state, cells) {
            return true;
        }
        cells.pop();
        place_cell(state, &cell, false);
    }
    false
}

fn place_cell(state: &mut KrauszState, cell: &[usize], on: bool) {
    for (i, &a) in cell.iter().enumerate() {
        state.cell_count[a] = if on {
            state.cell_count[a] + 1
        } else {
            state.cell_count[a] - 1
        };
        for &b in &cell[i + 1..] {
            state.set_covered(a, b, on);
        }
    }
}

/// Cliques that could serve as the cell covering edge (u, v), largest first.
fn candidate_cells(g: &SimpleGraph, state: &KrauszState, u: usize, v: usize) -> Vec<Vec<usize>> {
    // vertices that could join: adjacent to both ends through uncovered
    // edges, and not already in two cells
    let pool: Vec<usize> = (0..g.n())
        .filter(|&w| {
            w != u
                && w != v
                && state.cell_count[w] < 2
                && g.has_edge(u, w)
                && g.has_edge(v, w)
                && !state.covered_edge(u, w)
                && !state.covered_edge(v, w)
        })
        .collect();
    let mut out = Vec::new();
    if !pool.is_empty() {
        let adj = |a: usize, b: usize| g.has_edge(a, b) && !state.covered_edge(a, b);
        let mut r = Vec::new();
        bron_kerbosch(&adj, &mut r, pool.clone(), Vec::new(), &mut out);
        for clique in &mut out {
            clique.extend([u, v]);
            clique.sort_unstable();
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    }
    out.push({
        let mut base = vec![u, v];
        base.sort_unstable();
        base
    });
    out
}

/// Classic Bron-Kerbosch with pivoting over an implicit feasible subgraph.
fn bron_kerbosch(
    adj: &dyn Fn(usize, usize) -> bool,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&cand| p.iter().filter(|&&w| adj(cand, w)).count())
        .unwrap();
    let branch: Vec<usize> = p.iter().copied().filter(|&w| !adj(pivot, w)).collect();
    let mut p = p;
    let mut x = x;
    for w in branch {
        let np: Vec<usize> = p.iter().copied().filter(|&y| adj(w, y)).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|&y| adj(w, y)).collect();
        r.push(w);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.retain(|&y| y != w);
        x.push(w);
    }
}

/// A reconstructed root graph: `line_graph(root)` is isomorphic to the graph
/// it was derived from. Components isomorphic to K_3 admit both K_3 and the
/// claw as roots; they are listed in `ambiguous_components` and rooted as
/// the star.
#[derive(Debug, Clone)]
pub struct RootGraphResult {
    pub root: SimpleGraph,
    /// Indices into `components()` of the input graph whose root choice is
    /// K_3-vs-K_{1,3}.
    pub ambiguous_components: Vec<usize>,
    /// Cells of the Krausz partition the root was built from.
    pub partition: KrauszPartition,
}

/// Reconstructs a root graph from a Krausz partition: one root vertex per
/// cell, a private pendant vertex for every graph vertex lying in a single
/// cell, and a fresh K_2 component for every isolated vertex. The empty
/// graph roots as K_1.
pub fn root_graph(g: &SimpleGraph) -> Option<RootGraphResult> {
    let partition = krausz_recognize(g)?;
    if g.n() == 0 {
        return Some(RootGraphResult {
            root: SimpleGraph::with_labels(1, &[], vec!["c0".to_string()]).unwrap(),
            ambiguous_components: Vec::new(),
            partition,
        });
    }
    let components = g.components();
    let ambiguous: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|(_, comp)| {
            comp.len() == 3 && g.induced(comp).map(|c| c.edge_count()).unwrap_or(0) == 3
        })
        .map(|(i, _)| i)
        .collect();

    // cell membership per vertex
    let mut member_cells: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (ci, cell) in partition.cells.iter().enumerate() {
        for &v in cell {
            member_cells[v].push(ci);
        }
    }

    let mut labels: Vec<String> = (0..partition.cells.len())
        .map(|i| format!("c{i}"))
        .collect();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.n());
    for (v, cells_of_v) in member_cells.iter().enumerate() {
        match cells_of_v.as_slice() {
            [a, b] => edges.push((*a, *b)),
            [a] => {
                let pendant = labels.len();
                labels.push(format!("t{}", g.label(v)));
                edges.push((*a, pendant));
            }
            [] => {
                // isolated vertex: it is the line graph of a lone edge
                let p = labels.len();
                labels.push(format!("t{}a", g.label(v)));
                labels.push(format!("t{}b", g.label(v)));
                edges.push((p, p + 1));
            }
            _ => unreachable!("a vertex lies in at most two cells"),
        }
    }
    let root = SimpleGraph::with_labels(labels.len(), &edges, labels)
        .expect("root edges are constructed in range");
    Some(RootGraphResult {
        root,
        ambiguous_components: ambiguous,
        partition,
    })
}

/// Outcome of the catalog minimality self-test.
#[derive(Debug, Clone)]
pub struct CatalogSelfTest {
    /// Human-readable violations; empty means the catalog checks out.
    pub violations: Vec<String>,
}

impl CatalogSelfTest {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that every catalog pattern is a minimal non-line graph: the
/// pattern itself must fail Krausz recognition and every single-vertex
/// deletion must pass. Any violation points at a transcription bug in the
/// pattern fixture.
pub fn beineke_catalog_selftest() -> CatalogSelfTest {
    let mut violations = Vec::new();
    for p in beineke_patterns() {
        if krausz_recognize(&p.graph).is_some() {
            violations.push(format!("{} is recognized as a line graph", p.name));
        }
        for v in 0..p.graph.n() {
            let rest: Vec<usize> = (0..p.graph.n()).filter(|&u| u != v).collect();
            let sub = p.graph.induced(&rest).unwrap();
            if krausz_recognize(&sub).is_none() {
                violations.push(format!(
                    "{} minus vertex {v} is still not a line graph",
                    p.name
                ));
            }
        }
    }
    CatalogSelfTest { violations }
}
