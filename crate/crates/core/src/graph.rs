//! Labeled simple undirected graphs on the vertex set `{1, ..., n}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple undirected graph with vertices `1..=n`, no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v]` for v in 1..=n; index 0 unused.
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph with `n >= 1` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidVertexCount);
        }
        Ok(Graph {
            n,
            adj: vec![BTreeSet::new(); n + 1],
        })
    }

    /// Builds a graph from an edge list. Edges are unordered pairs of
    /// distinct vertices in `1..=n`; duplicates are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return Err(GraphError::VertexOutOfRange(u.max(v), self.n));
        }
        if !self.adj[u].insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("n >= 1");
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("n >= 1");
        for u in 1..n {
            g.add_edge(u, u + 1).unwrap();
        }
        g
    }

    /// Cycle `1 - 2 - ... - n - 1` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n, 1).unwrap();
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `verts` (sorted, deduped by the caller being sane);
    /// returns the subgraph on `1..=k` and the map from new vertex to original.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::empty(vs.len()).expect("nonempty vertex list");
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1).unwrap();
                }
            }
        }
        (g, vs)
    }

    /// Applies a labeling: vertex `v` becomes `lab.perm[v]`.
    pub fn relabel(&self, lab: &Labeling) -> Graph {
        assert_eq!(lab.len(), self.n, "labeling size mismatch");
        let mut g = Graph::empty(self.n).unwrap();
        for (u, v) in self.edges() {
            g.add_edge(lab.apply(u), lab.apply(v)).unwrap();
        }
        g
    }

    /// Parses either the JSON object form or the plain edge-list form,
    /// auto-detected by the first non-whitespace byte.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        match text.trim_start().as_bytes().first() {
            Some(b'{') => Self::from_json(text),
            Some(_) => Self::from_edge_list(text),
            None => Err(GraphError::EmptyInput),
        }
    }

    /// JSON form: `{"n": 4, "edges": [[1,2],[2,3]]}`.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::new(file.n, &file.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            n: self.n,
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    /// Edge-list form: header `n <count>` followed by one `i j` line per edge.
    /// Blank lines and `#` comments are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(GraphError::EmptyInput)?;
        let mut toks = header.split_whitespace();
        let (Some("n"), Some(count)) = (toks.next(), toks.next()) else {
            return Err(GraphError::BadHeader(header.to_string()));
        };
        let n: usize = count
            .parse()
            .map_err(|_| GraphError::BadHeader(header.to_string()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut toks = line.split_whitespace();
            let (Some(a), Some(b), None) = (toks.next(), toks.next(), toks.next()) else {
                return Err(GraphError::BadEdgeLine(line.to_string()));
            };
            let u: usize = a.parse().map_err(|_| GraphError::BadEdgeLine(line.to_string()))?;
            let v: usize = b.parse().map_err(|_| GraphError::BadEdgeLine(line.to_string()))?;
            edges.push((u, v));
        }
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// A bijection `{1..n} -> {1..n}`: `perm[v]` is the new label of vertex `v`.
/// Serializes as the bare permutation array.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling {
    perm: Vec<usize>,
}

impl Labeling {
    pub fn identity(n: usize) -> Self {
        Labeling {
            perm: (1..=n).collect(),
        }
    }

    /// `perm[i]` = new label of vertex `i + 1`. Must be a permutation of `1..=n`.
    pub fn new(perm: Vec<usize>) -> Result<Self, GraphError> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p] {
                return Err(GraphError::NotAPermutation);
            }
            seen[p] = true;
        }
        Ok(Labeling { perm })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> Labeling {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p - 1] = i + 1;
        }
        Labeling { perm: inv }
    }
}
