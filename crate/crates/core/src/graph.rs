//! Finite simple undirected graphs, their text encodings, and graph powers.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex".into()));
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            name: None,
        };
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.adjacency[u * self.n + v] {
            return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
        }
        self.adjacency[u * self.n + v] = true;
        self.adjacency[v * self.n + u] = true;
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    fn finish(&mut self) {
        self.edges.sort_unstable();
        for (u, nb) in self.neighbors.iter_mut().enumerate() {
            nb.clear();
            nb.extend((0..self.n).filter(|&v| self.adjacency[u * self.n + v]));
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Number of triangles through `v`, counted by intersecting neighbor rows.
    pub fn triangles_at(&self, v: usize) -> usize {
        let nb = &self.neighbors[v];
        let mut count = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if self.has_edge(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn triangle_count(&self) -> usize {
        (0..self.n).map(|v| self.triangles_at(v)).sum::<usize>() / 3
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    /// Breadth-first distances from `source`; `None` marks other components.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The k-th power: same vertices, `u ~ v` iff `0 < dist(u, v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidArgument("graph power needs k >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                if dist[x] == k {
                    continue;
                }
                for &w in &self.neighbors[x] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[x] + 1;
                        queue.push_back(w);
                    }
                }
            }
            edges.extend((u + 1..self.n).filter(|&v| dist[v] <= k).map(|v| (u, v)));
        }
        let mut g = Graph::new(self.n, edges)?;
        g.name = self.name.clone();
        Ok(g)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// Standard graph6 encoding (short form for n <= 62, long form up to 258047).
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((self.n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = (acc << 1) | u8::from(self.has_edge(u, v));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge_list" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::InvalidArgument(format!("unknown graph format '{other}'"))),
        }
    }
}

pub fn parse_graph(source: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(source),
        GraphFormat::EdgeList => parse_edge_list(source),
    }
}

/// Guesses the format: an `n=` header means edge list, anything else graph6.
pub fn detect_format(source: &str) -> GraphFormat {
    let first = source
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("n=") || first.starts_with("n =") {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph6(source: &str) -> Result<Graph> {
    let mut text = source.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(">>graph6<<") {
        text = rest;
        base = ">>graph6<<".len();
    }
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse_byte(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse_byte(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::parse_byte(base, "unsupported graph6 size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 {
        return Err(Error::parse_byte(base, "graph6 encodes an empty vertex set"));
    }
    let bits = n * (n - 1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse_byte(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[header + bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn parse_edge_list(source: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(count) = n else {
            let value = line
                .strip_prefix("n")
                .map(str::trim_start)
                .and_then(|s| s.strip_prefix('='))
                .ok_or_else(|| Error::parse_line(line_no, "expected header 'n=<count>'"))?;
            let count: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::parse_line(line_no, format!("bad vertex count '{}'", value.trim())))?;
            if count == 0 {
                return Err(Error::parse_line(line_no, "vertex count must be positive"));
            }
            n = Some(count);
            continue;
        };
        let mut parts = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| Error::parse_line(line_no, "expected 'u v'"))?;
            tok.parse()
                .map_err(|_| Error::parse_line(line_no, format!("bad vertex index '{tok}'")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if parts.next().is_some() {
            return Err(Error::parse_line(line_no, "trailing tokens after 'u v'"));
        }
        if u >= count || v >= count {
            return Err(Error::parse_line(
                line_no,
                format!("vertex index out of range for n = {count}"),
            ));
        }
        if u == v {
            return Err(Error::parse_line(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse_line(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| Error::parse_line(1, "missing header 'n=<count>'"))?;
    Graph::new(n, edges)
}
