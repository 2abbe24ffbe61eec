//! Shared graphs for the integration suites: a handful of named cubic
//! graphs plus a fixed 200-graph random cubic corpus.

// each test binary compiles this module separately and uses its own subset
#![allow(dead_code)]

use franknum::oracle::random_cubic_3ec;
use franknum::Graph;
use std::sync::OnceLock;

pub fn k4() -> Graph {
    Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k5() -> Graph {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    Graph::new(5, edges).unwrap()
}

pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    Graph::new(6, edges).unwrap()
}

pub fn prism() -> Graph {
    Graph::new(
        6,
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    )
    .unwrap()
}

pub fn petersen() -> Graph {
    Graph::new(
        10,
        vec![
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ],
    )
    .unwrap()
}

/// The four named 3-edge-connected graphs the acceptance criteria call out.
pub fn named() -> Vec<(String, Graph)> {
    vec![
        ("K4".to_string(), k4()),
        ("K3,3".to_string(), k33()),
        ("prism".to_string(), prism()),
        ("Petersen".to_string(), petersen()),
    ]
}

/// 200 random cubic 3-edge-connected graphs on 4..=16 vertices, fixed
/// seeds. Built once and shared across tests in a binary.
pub fn corpus() -> &'static [(String, Graph)] {
    static CORPUS: OnceLock<Vec<(String, Graph)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (0..200u64)
            .map(|seed| {
                let n = 4 + 2 * (seed as usize % 7);
                let g = random_cubic_3ec(n, seed).expect("corpus generation is deterministic");
                (format!("cubic-n{n}-s{seed}"), g)
            })
            .collect()
    })
}

/// Named graphs followed by the random corpus.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut all = named();
    all.extend(corpus().iter().cloned());
    all
}
