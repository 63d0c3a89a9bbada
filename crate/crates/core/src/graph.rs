//! Simple undirected graphs with bit-row adjacency.
//!
//! Vertices are `0..n`; adjacency rows are packed into 64-bit words so the
//! subset-enumeration kernels can test and count edges with a handful of
//! word operations. Graphs are immutable once built.

use crate::bits;
use crate::error::GraphError;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>, // n * words, row i = neighbours of i
    labels: Vec<String>,
}

impl SimpleGraph {
    /// Graph with the given edges and default numeric labels.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(n, edges, labels)
    }

    pub fn with_labels(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Self, GraphError> {
        assert_eq!(labels.len(), n, "one label per vertex");
        let words = bits::words_for(n).max(1);
        let mut g = SimpleGraph {
            n,
            words,
            rows: vec![0u64; n * words],
            labels,
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set_bit(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set_bit(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `u` as packed words.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test_bit(self.row(u), v)
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count_ones(self.row(u))
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits::iter_ones(self.row(u)) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        bits::iter_ones(self.row(u)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn degree_sequence_sorted(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced on `subset`, keeping the original labels. Vertex `i`
    /// of the result is `subset[i]`.
    pub fn induced(&self, subset: &[usize]) -> Result<SimpleGraph, GraphError> {
        for &v in subset {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let labels = subset.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::with_labels(subset.len(), &edges, labels)
    }

    /// All vertices adjacent to every other vertex. A 1-vertex graph's only
    /// vertex counts as dominating.
    pub fn dominating_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in bits::iter_ones(self.row(u)) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Disjoint union; parts are relabelled into consecutive ranges with no
    /// cross edges. Vertex labels are carried over.
    pub fn disjoint_union(parts: &[SimpleGraph]) -> SimpleGraph {
        let n: usize = parts.iter().map(|p| p.n).sum();
        let mut labels = Vec::with_capacity(n);
        let mut edges = Vec::new();
        let mut base = 0;
        for p in parts {
            labels.extend(p.labels.iter().cloned());
            edges.extend(p.edges().iter().map(|&(u, v)| (base + u, base + v)));
            base += p.n;
        }
        SimpleGraph::with_labels(n, &edges, labels).expect("parts are valid graphs")
    }

    // -- named generators ---------------------------------------------------

    pub fn empty(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, &[]).unwrap()
    }

    pub fn complete(k: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (0..k)
            .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
            .collect();
        SimpleGraph::new(k, &edges).unwrap()
    }

    /// Star with `k` arms on `k + 1` vertices; the center is vertex 0.
    pub fn star(k: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
        SimpleGraph::new(k + 1, &edges).unwrap()
    }

    /// Path on `k` vertices.
    pub fn path(k: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
        SimpleGraph::new(k, &edges).unwrap()
    }

    pub fn cycle(k: usize) -> Result<SimpleGraph, GraphError> {
        if k < 3 {
            return Err(GraphError::CycleTooSmall(k));
        }
        let mut edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
        edges.push((0, k - 1));
        SimpleGraph::new(k, &edges)
    }

    // -- serialization ------------------------------------------------------

    /// Plain edge-list format: header line `"n m"`, then one `"u v"` line
    /// per edge with `u < v`, sorted ascending.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::ParseError("missing header".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::ParseError("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::ParseError("bad edge count".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::ParseError(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::ParseError(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::ParseError(format!(
                "header promised {m} edges, found {}",
                edges.len()
            )));
        }
        SimpleGraph::new(n, &edges)
    }

    /// DOT emission with stable ordering: vertices ascending, then edges
    /// sorted, labels preserved.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", escape_dot(&self.labels[v]));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
