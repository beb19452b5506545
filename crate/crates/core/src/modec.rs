//! Modular decomposition trees.
//!
//! Every internal node substitutes its child graphs into a template graph:
//! child `i` and child `j` are completely joined when `ij` is a template
//! edge and completely non-adjacent otherwise.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::bits::Bits;
use crate::error::{invalid, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    /// Edgeless template.
    Parallel,
    /// Complete template.
    Series,
    Prime,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Parallel => "parallel",
            NodeKind::Series => "series",
            NodeKind::Prime => "prime",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ModNode {
    pub kind: NodeKind,
    /// Arena indices of the children, ordered by smallest contained vertex.
    pub children: Vec<usize>,
    /// Template on the children; the one-vertex graph for leaves.
    pub template: Graph,
    /// Original vertices below this node, sorted.
    pub vertices: Vec<usize>,
    /// Maximum degree of the graph expanded below this node.
    pub delta: usize,
}

impl ModNode {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }
}

/// A decomposition tree stored as an arena; children precede their parent.
#[derive(Clone, Debug)]
pub struct ModTree {
    nodes: Vec<ModNode>,
}

impl ModTree {
    pub fn leaf(v: usize) -> ModTree {
        ModTree {
            nodes: vec![ModNode {
                kind: NodeKind::Leaf,
                children: Vec::new(),
                template: Graph::empty(1),
                vertices: vec![v],
                delta: 0,
            }],
        }
    }

    /// `template(children[0], ..., children[r-1])`. Children are reordered by
    /// smallest vertex, permuting the template accordingly.
    pub fn substitute(template: &Graph, children: Vec<ModTree>) -> Result<ModTree> {
        let r = children.len();
        if r < 2 || template.n() != r {
            return invalid(format!(
                "template has {} vertices but {} children were given (need at least 2)",
                template.n(),
                r
            ));
        }
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by_key(|&i| children[i].root().vertices[0]);
        let mut pos = vec![0; r];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let template = Graph::new(r, template.edges().iter().map(|&(a, b)| (pos[a], pos[b])))?;

        let mut children: Vec<Option<ModTree>> = children.into_iter().map(Some).collect();
        let mut nodes = Vec::new();
        let mut roots = Vec::with_capacity(r);
        let mut vertices = Vec::new();
        for &i in &order {
            let child = children[i].take().expect("each child used once");
            let offset = nodes.len();
            for mut node in child.nodes {
                for c in &mut node.children {
                    *c += offset;
                }
                nodes.push(node);
            }
            roots.push(nodes.len() - 1);
            vertices.extend_from_slice(&nodes[nodes.len() - 1].vertices);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return invalid("children of a substitution must have disjoint vertex sets");
        }

        let size: Vec<usize> = roots.iter().map(|&c| nodes[c].n()).collect();
        let delta = (0..r)
            .map(|i| nodes[roots[i]].delta + template.neighbors(i).iter().map(|&j| size[j]).sum::<usize>())
            .max()
            .unwrap_or(0);
        let kind = if template.m() == 0 {
            NodeKind::Parallel
        } else if template.m() == r * (r - 1) / 2 {
            NodeKind::Series
        } else {
            NodeKind::Prime
        };
        nodes.push(ModNode { kind, children: roots, template, vertices, delta });
        Ok(ModTree { nodes })
    }

    pub fn root_index(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn root(&self) -> &ModNode {
        &self.nodes[self.root_index()]
    }

    pub fn node(&self, i: usize) -> &ModNode {
        &self.nodes[i]
    }

    /// All nodes in bottom-up order.
    pub fn nodes(&self) -> &[ModNode] {
        &self.nodes
    }

    /// Largest child count of an internal node; 0 for a single leaf.
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.children.len()).max().unwrap_or(0)
    }

    /// The graph the expression defines, on `max vertex + 1` vertices.
    pub fn expand(&self) -> Graph {
        let n = self.root().vertices.last().map_or(0, |&v| v + 1);
        let mut edges = Vec::new();
        for node in &self.nodes {
            for &(a, b) in node.template.edges() {
                if node.kind == NodeKind::Leaf {
                    continue;
                }
                for &u in &self.nodes[node.children[a]].vertices {
                    for &v in &self.nodes[node.children[b]].vertices {
                        edges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        Graph::new(n, edges).expect("children of a node are disjoint")
    }

    /// Equivalent tree in which every series and parallel node has exactly
    /// two children (nested left to right). Prime nodes are unchanged.
    pub fn binarize(&self) -> ModTree {
        self.rebuild(self.root_index(), true)
    }

    fn rebuild(&self, i: usize, binary: bool) -> ModTree {
        let node = &self.nodes[i];
        if node.kind == NodeKind::Leaf {
            return ModTree::leaf(node.vertices[0]);
        }
        let kids: Vec<ModTree> = node.children.iter().map(|&c| self.rebuild(c, binary)).collect();
        match node.kind {
            NodeKind::Series | NodeKind::Parallel if binary && kids.len() > 2 => {
                let t = if node.kind == NodeKind::Series { Graph::new(2, [(0, 1)]) } else { Ok(Graph::empty(2)) }
                    .expect("two-vertex template");
                let mut it = kids.into_iter();
                let first = it.next().expect("at least two children");
                it.fold(first, |acc, k| ModTree::substitute(&t, vec![acc, k]).expect("disjoint children"))
            }
            _ => ModTree::substitute(&node.template, kids).expect("disjoint children"),
        }
    }

    /// Indented text dump, one `node <kind> children=<r> n=<n_t>` line per node.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        self.dump_rec(self.root_index(), 0, &mut out);
        out
    }

    fn dump_rec(&self, i: usize, depth: usize, out: &mut String) {
        let node = &self.nodes[i];
        let _ = writeln!(
            out,
            "{:indent$}node {} children={} n={}",
            "",
            node.kind,
            node.children.len(),
            node.n(),
            indent = 2 * depth
        );
        for &c in &node.children {
            self.dump_rec(c, depth + 1, out);
        }
    }
}

/// Decomposition into maximal strong modules. `g` must have at least one
/// vertex.
pub fn decompose(g: &Graph) -> Result<ModTree> {
    if g.n() == 0 {
        return invalid("cannot decompose the empty graph");
    }
    let ids: Vec<usize> = (0..g.n()).collect();
    Ok(decompose_rec(g, &ids))
}

/// Width of the binarized decomposition: the minimum width of any
/// expression for `g`.
pub fn min_width(g: &Graph) -> Result<usize> {
    Ok(decompose(g)?.binarize().width())
}

fn decompose_rec(g: &Graph, ids: &[usize]) -> ModTree {
    if g.n() == 1 {
        return ModTree::leaf(ids[0]);
    }
    let comps = g.components();
    let (template, parts) = if comps.len() > 1 {
        (Graph::empty(comps.len()), comps)
    } else {
        let co = g.complement().components();
        if co.len() > 1 {
            (crate::families::complete(co.len()), co)
        } else {
            let parts = maximal_modules(g);
            let reps: Vec<usize> = parts.iter().map(|p| p[0]).collect();
            let r = parts.len();
            let edges = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j)));
            let quotient = Graph::new(r, edges.filter(|&(i, j)| g.has_edge(reps[i], reps[j]))).expect("quotient");
            (quotient, parts)
        }
    };
    let kids = parts
        .iter()
        .map(|part| {
            let (sub, map) = g.induced_subgraph(&part.iter().copied().collect()).expect("part in range");
            let sub_ids: Vec<usize> = map.iter().map(|&v| ids[v]).collect();
            decompose_rec(&sub, &sub_ids)
        })
        .collect();
    ModTree::substitute(&template, kids).expect("parts are disjoint")
}

/// Maximal proper modules of a graph that is connected and co-connected.
/// They partition the vertex set; two vertices share one exactly when the
/// smallest module containing both is proper.
fn maximal_modules(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut part: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part[v].is_some() {
            continue;
        }
        let idx = parts.len();
        let mut members = vec![v];
        part[v] = Some(idx);
        for (u, slot) in part.iter_mut().enumerate().skip(v + 1) {
            if slot.is_none() && module_closure(g, v, u).len() < n {
                *slot = Some(idx);
                members.push(u);
            }
        }
        parts.push(members);
    }
    parts
}

/// Smallest module containing `u` and `v`.
fn module_closure(g: &Graph, u: usize, v: usize) -> Bits {
    let n = g.n();
    let mut m = Bits::from_iter(n, [u, v]);
    let mut size = 2;
    loop {
        let splitter = (0..n).find(|&x| {
            if m.contains(x) {
                return false;
            }
            let k = g.row(x).intersection_len(&m);
            k > 0 && k < size
        });
        match splitter {
            Some(x) => {
                m.insert(x);
                size += 1;
            }
            None => return m,
        }
    }
}

/// Exhaustive minimum expression width over all partitions into modules,
/// memoized on vertex subsets. Exponential; intended for `n <= 10`.
pub fn min_width_exhaustive(g: &Graph) -> usize {
    assert!(g.n() <= 16, "exhaustive width oracle is limited to 16 vertices");
    let full = (1u32 << g.n()) - 1;
    let mut memo = HashMap::new();
    width_of_subset(g, full, &mut memo)
}

fn width_of_subset(g: &Graph, s: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if s.count_ones() <= 1 {
        return 0;
    }
    if let Some(&w) = memo.get(&s) {
        return w;
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
    let mut best = usize::MAX;
    let mut assign = vec![0usize; verts.len()];
    partitions(g, s, &verts, &mut assign, 0, 0, &mut best, memo);
    memo.insert(s, best);
    best
}

#[allow(clippy::too_many_arguments)]
fn partitions(
    g: &Graph,
    s: u32,
    verts: &[usize],
    assign: &mut Vec<usize>,
    i: usize,
    blocks: usize,
    best: &mut usize,
    memo: &mut HashMap<u32, usize>,
) {
    if blocks >= *best {
        return;
    }
    if i == verts.len() {
        if blocks < 2 {
            return;
        }
        let mut masks = vec![0u32; blocks];
        for (k, &v) in verts.iter().enumerate() {
            masks[assign[k]] |= 1 << v;
        }
        if !masks.iter().all(|&m| is_module_within(g, s, m)) {
            return;
        }
        let mut w = blocks;
        for &m in &masks {
            w = w.max(width_of_subset(g, m, memo));
            if w >= *best {
                return;
            }
        }
        *best = w;
        return;
    }
    for b in 0..=blocks {
        assign[i] = b;
        partitions(g, s, verts, assign, i + 1, blocks.max(b + 1), best, memo);
    }
}

fn is_module_within(g: &Graph, s: u32, m: u32) -> bool {
    let nbr_mask = |x: usize| g.neighbors(x).iter().fold(0u32, |acc, &y| acc | 1 << y);
    (0..g.n())
        .filter(|&x| s >> x & 1 == 1 && m >> x & 1 == 0)
        .all(|x| {
            let seen = nbr_mask(x) & m;
            seen == 0 || seen == m
        })
}
