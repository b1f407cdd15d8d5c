use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::ReductionError;

/// Simple undirected graph on vertices `0..n`. Edges are stored as `(u, v)`
/// with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, ReductionError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(ReductionError::MalformedInput(format!("edge {u} {v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(ReductionError::MalformedInput(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(ReductionError::MalformedInput(format!("duplicate edge {u} {v}")));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Reads the edge-list format: a header `n m`, then `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Graph, ReductionError> {
        let bad = |msg: String| ReductionError::MalformedInput(msg);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty graph file".into()))?;
        let nums = |line: &str| -> Result<(usize, usize), ReductionError> {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts[..] {
                [a, b] => Ok((
                    a.parse().map_err(|_| bad(format!("not a number: '{a}'")))?,
                    b.parse().map_err(|_| bad(format!("not a number: '{b}'")))?,
                )),
                _ => Err(bad(format!("expected two numbers, got '{line}'"))),
            }
        };
        let (n, m) = nums(header)?;
        let edges = lines.map(nums).collect::<Result<Vec<_>, _>>()?;
        if edges.len() != m {
            return Err(bad(format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|u| (u - 1, u))).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Indices of the edges at `v`, ascending.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].0 == v || self.edges[e].1 == v)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    /// The common degree D if every vertex has it.
    pub fn regular_degree(&self) -> Result<usize, ReductionError> {
        let expected = if self.n == 0 { 0 } else { self.degree(0) };
        for v in 0..self.n {
            let degree = self.degree(v);
            if degree != expected {
                return Err(ReductionError::NotRegular {
                    vertex: v,
                    degree,
                    expected,
                });
            }
        }
        Ok(expected)
    }
}
