//! Undirected simple graphs over dense ids, fair-cost objectives and the
//! plain-text graph format.
//!
//! Graph text format:
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! label <name> <id> <id> ...   (labeled graphs only, after the edges)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::Bits;
use crate::error::{invalid, Error, Result};

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    ids: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.ids.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    /// Members of a 64-bit mask.
    pub fn from_mask(mask: u64) -> VertexSet {
        (0..64).filter(|i| mask >> i & 1 == 1).collect()
    }

    pub(crate) fn to_bits(&self, capacity: usize) -> Bits {
        Bits::from_iter(capacity, self.iter())
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.ids.last() {
            Some(&v) if v >= n => invalid(format!("vertex {v} out of range for n={n}")),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet { ids }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.ids {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    rows: Vec<Bits>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)`. Self-loops,
    /// out-of-range ids and repeated edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es = Vec::new();
        for (u, v) in edges {
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            if u >= n || v >= n {
                return invalid(format!("edge {{{u},{v}}} out of range for n={n}"));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge {{{},{}}}", w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, es))
    }

    /// Like [`Graph::new`] but silently drops repeated edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es.dedup();
        Graph::new(n, es)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![Bits::new(n); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj, rows }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
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

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub(crate) fn row(&self, v: usize) -> &Bits {
        &self.rows[v]
    }

    /// Fair cost: `max_v |N(v) ∩ w|`, zero for the empty set.
    pub fn fair_cost(&self, w: &VertexSet) -> Result<usize> {
        w.check_range(self.n)?;
        let bits = w.to_bits(self.n);
        Ok(self.fair_cost_bits(&bits))
    }

    pub(crate) fn fair_cost_bits(&self, w: &Bits) -> usize {
        self.rows
            .iter()
            .map(|r| r.intersection_len(w))
            .max()
            .unwrap_or(0)
    }

    /// `max_v max_i |N(v) ∩ ws[i]|`; an empty family costs 0.
    pub fn l_fair_cost(&self, ws: &[VertexSet]) -> Result<usize> {
        let mut best = 0;
        for w in ws {
            best = best.max(self.fair_cost(w)?);
        }
        Ok(best)
    }

    pub fn is_vertex_cover(&self, w: &VertexSet) -> Result<bool> {
        w.check_range(self.n)?;
        Ok(self
            .edges
            .iter()
            .all(|&(u, v)| w.contains(u) || w.contains(v)))
    }

    /// Disjoint union; returns the graph and the id offset of every part.
    pub fn disjoint_union(gs: &[Graph]) -> Result<(Graph, Vec<usize>)> {
        if gs.is_empty() {
            return invalid("disjoint union of an empty list");
        }
        let mut offsets = Vec::with_capacity(gs.len());
        let mut edges = Vec::new();
        let mut n = 0;
        for g in gs {
            offsets.push(n);
            edges.extend(g.edges.iter().map(|&(u, v)| (u + n, v + n)));
            n += g.n;
        }
        Ok((Self::from_sorted(n, edges), offsets))
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing id order.
    /// The returned map sends new ids back to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        s.check_range(self.n)?;
        let map: Vec<usize> = s.ids().to_vec();
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| inverse[u] != usize::MAX && inverse[v] != usize::MAX)
            .map(|&(u, v)| (inverse[u], inverse[v]))
            .collect();
        Ok((Self::from_sorted(map.len(), edges), map))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
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

    /// Renders the graph in the text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the text format; `label` lines are rejected (use
    /// [`LabeledGraph::parse`]).
    pub fn parse(text: &str) -> Result<Graph> {
        let lg = LabeledGraph::parse(text)?;
        if !lg.labels().is_empty() {
            return invalid("unexpected label lines in an unlabeled graph");
        }
        Ok(lg.graph)
    }
}

/// A graph with named vertex subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    labels: BTreeMap<String, VertexSet>,
}

impl LabeledGraph {
    pub fn unlabeled(graph: Graph) -> Self {
        LabeledGraph {
            graph,
            labels: BTreeMap::new(),
        }
    }

    pub fn new(graph: Graph, labels: BTreeMap<String, VertexSet>) -> Result<Self> {
        for (name, set) in &labels {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return invalid(format!("bad label name `{name}`"));
            }
            set.check_range(graph.n())?;
        }
        Ok(LabeledGraph { graph, labels })
    }

    pub fn with_label(mut self, name: &str, set: VertexSet) -> Result<Self> {
        set.check_range(self.graph.n())?;
        self.labels.insert(name.to_string(), set);
        Ok(self)
    }

    pub fn labels(&self) -> &BTreeMap<String, VertexSet> {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Option<&VertexSet> {
        self.labels.get(name)
    }

    /// Label membership vector of `v`, in label-name order.
    pub fn label_vector(&self, v: usize) -> Vec<bool> {
        self.labels.values().map(|s| s.contains(v)).collect()
    }

    /// Restriction to `s`; labels are restricted and relabelled alongside.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(LabeledGraph, Vec<usize>)> {
        let (graph, map) = self.graph.induced_subgraph(s)?;
        let labels = self
            .labels
            .iter()
            .map(|(name, set)| {
                let ids = map
                    .iter()
                    .enumerate()
                    .filter(|(_, &old)| set.contains(old))
                    .map(|(new, _)| new)
                    .collect();
                (name.clone(), ids)
            })
            .collect();
        Ok((LabeledGraph { graph, labels }, map))
    }

    pub fn to_text(&self) -> String {
        let mut s = self.graph.to_text();
        for (name, set) in &self.labels {
            s.push_str("label ");
            s.push_str(name);
            for v in set.iter() {
                s.push_str(&format!(" {v}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<LabeledGraph> {
        let syntax = |line: usize, message: String| Error::Syntax {
            line,
            column: 1,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hl, header) = lines
            .next()
            .ok_or_else(|| syntax(1, "missing `n m` header".into()))?;
        let nums = parse_usizes(header).map_err(|e| syntax(hl, e))?;
        let [n, m] = nums[..] else {
            return Err(syntax(hl, "header must be `n m`".into()));
        };

        let mut edges = Vec::with_capacity(m);
        let mut labels = BTreeMap::new();
        for (ln, line) in lines {
            if let Some(rest) = line.strip_prefix("label") {
                let mut toks = rest.split_whitespace();
                let name = toks
                    .next()
                    .ok_or_else(|| syntax(ln, "label without a name".into()))?;
                let ids = toks
                    .map(|t| t.parse::<usize>().map_err(|_| syntax(ln, format!("bad vertex id `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if labels.insert(name.to_string(), VertexSet::from(ids)).is_some() {
                    return Err(syntax(ln, format!("duplicate label `{name}`")));
                }
                continue;
            }
            if !labels.is_empty() {
                return Err(syntax(ln, "edge line after label lines".into()));
            }
            let nums = parse_usizes(line).map_err(|e| syntax(ln, e))?;
            let [u, v] = nums[..] else {
                return Err(syntax(ln, "edge line must be `u v`".into()));
            };
            if u >= v || v >= n {
                return Err(syntax(ln, format!("edge `{u} {v}` must satisfy 0 <= u < v < {n}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return invalid(format!("header declares {m} edges, found {}", edges.len()));
        }
        LabeledGraph::new(Graph::new(n, edges)?, labels)
    }
}

fn parse_usizes(line: &str) -> std::result::Result<Vec<usize>, String> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| format!("expected a non-negative integer, got `{t}`")))
        .collect()
}
