//! Undirected, loop-free simple graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph. Adjacency lists are kept sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

/// Serialized form of a graph: `{"n":…, "k":…, "vertices":[…], "edges":[[a,b],…]}`.
///
/// `vertices` holds the vertex labels in id order; edges are `[a, b]` with
/// `a < b`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Edgeless graph on `order` vertices labelled by their ids.
    pub fn empty(order: usize) -> Self {
        Self {
            adj: vec![Vec::new(); order],
            labels: (0..order).map(|v| v.to_string()).collect(),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        Self {
            adj: vec![Vec::new(); labels.len()],
            labels,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Cycle `C_len` on vertices `0..len`.
    pub fn cycle(len: usize) -> Self {
        let edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        Self::from_edges(len, &edges).expect("cycle of length >= 3")
    }

    /// Complete graph `K_order`.
    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for a in 0..order {
            for b in a + 1..order {
                g.add_edge(a, b).expect("distinct endpoints");
            }
        }
        g
    }

    /// Inserts the edge `{a, b}`. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        let order = self.order();
        if a >= order || b >= order {
            return Err(Error::Domain(format!(
                "edge ({a},{b}) out of range for {order} vertices"
            )));
        }
        if a == b {
            return Err(Error::Domain(format!("loop at vertex {a}")));
        }
        match self.adj[a].binary_search(&b) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[a].insert(pos, b);
                let pos_b = self.adj[b].binary_search(&a).unwrap_err();
                self.adj[b].insert(pos_b, a);
                Ok(true)
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (a, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    /// Proper 2-colouring by BFS, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.order()];
        let mut queue = VecDeque::new();
        for s in 0..self.order() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::with_labels(
            vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        );
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edge");
                }
            }
        }
        g
    }

    pub fn to_json(&self, params: Option<(usize, usize)>) -> GraphJson {
        GraphJson {
            n: params.map(|p| p.0),
            k: params.map(|p| p.1),
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Undirected DOT rendering using the vertex labels as node names.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for label in &self.labels {
            let _ = writeln!(out, "  \"{label}\";");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.labels[a], self.labels[b]);
        }
        out.push_str("}\n");
        out
    }
}

impl TryFrom<&GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(json: &GraphJson) -> Result<Self> {
        let mut g = SimpleGraph::with_labels(json.vertices.clone());
        for e in &json.edges {
            g.add_edge(e[0], e[1])?;
        }
        Ok(g)
    }
}
