//! The nine minimal forbidden induced subgraphs characterising line graphs.
//!
//! The edge lists below are a hand transcription of the catalog drawings and
//! are therefore treated as a fixture, not as trusted input: the minimality
//! self-test in the line-graph module re-derives, for each pattern, that the
//! pattern itself is not a line graph while every single-vertex deletion is.
//! A transcription slip fails that test and names the offending pattern.

use crate::graph::SimpleGraph;
use std::sync::OnceLock;

/// Named pattern; `Gamma9` is the claw K_{1,3}.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub name: &'static str,
    pub graph: SimpleGraph,
}

type PatternFixture = (&'static str, usize, &'static [(usize, usize)]);

const PATTERN_EDGES: [PatternFixture; 9] = [
    (
        "Gamma1",
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 4), (3, 4)],
    ),
    (
        // K_5 minus one edge
        "Gamma2",
        5,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (4, 0),
            (4, 1),
            (4, 2),
            (4, 3),
        ],
    ),
    (
        "Gamma3",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 5),
            (2, 5),
            (0, 5),
        ],
    ),
    (
        "Gamma4",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (1, 4),
            (3, 5),
            (2, 5),
            (0, 5),
        ],
    ),
    (
        "Gamma5",
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (0, 4), (2, 5)],
    ),
    (
        "Gamma6",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (1, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    (
        "Gamma7",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (0, 4),
            (1, 4),
            (3, 5),
            (2, 5),
        ],
    ),
    (
        // the 5-wheel: a 5-cycle plus a hub
        "Gamma8",
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (1, 4),
            (3, 5),
            (2, 5),
            (2, 4),
            (5, 4),
        ],
    ),
    (
        // the claw K_{1,3}
        "Gamma9",
        4,
        &[(0, 1), (0, 2), (0, 3)],
    ),
];

/// The pattern catalog, in catalog order Gamma1..Gamma9.
pub fn beineke_patterns() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        PATTERN_EDGES
            .iter()
            .map(|&(name, n, edges)| Pattern {
                name,
                graph: SimpleGraph::new(n, edges).expect("fixture edges are valid"),
            })
            .collect()
    })
}

/// Look a pattern up by name.
pub fn pattern_by_name(name: &str) -> Option<&'static Pattern> {
    beineke_patterns().iter().find(|p| p.name == name)
}

/// The claw, used directly by the classifier predicates.
pub fn claw() -> &'static SimpleGraph {
    &pattern_by_name("Gamma9").unwrap().graph
}

/// The K_5-minus-an-edge pattern, used by the classifier predicates.
pub fn gamma2() -> &'static SimpleGraph {
    &pattern_by_name("Gamma2").unwrap().graph
}
