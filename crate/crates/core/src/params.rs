//! Twin edges, twin classes, minimum twin cover and neighborhood diversity.

use std::collections::BTreeMap;

use crate::bits::Bits;
use crate::error::{invalid, Result};
use crate::graph::{Graph, LabeledGraph, VertexSet};

/// A component of `G \ K`: a clique of true twins together with its cover set
/// `N(v) ∩ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClique {
    pub vertices: Vec<usize>,
    pub cover_set: VertexSet,
}

impl TwinClique {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A twin cover `K` with the clique decomposition of `G \ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinCover {
    pub cover: VertexSet,
    /// Ordered by smallest vertex.
    pub cliques: Vec<TwinClique>,
}

impl TwinCover {
    /// Validates `cover` as a twin cover of `g` and decomposes the rest.
    pub fn from_cover(g: &Graph, cover: VertexSet) -> Result<TwinCover> {
        cover.check_range(g.n())?;
        for &(u, v) in g.edges() {
            if !cover.contains(u) && !cover.contains(v) && !closed_twins(g, u, v) {
                return invalid(format!("edge {{{u},{v}}} is neither covered nor a twin-edge"));
            }
        }
        let rest: VertexSet = (0..g.n()).filter(|&v| !cover.contains(v)).collect();
        let (sub, map) = g.induced_subgraph(&rest)?;
        let cliques = sub
            .components()
            .into_iter()
            .map(|comp| {
                let vertices: Vec<usize> = comp.iter().map(|&i| map[i]).collect();
                let cover_set = g.neighbors(vertices[0]).iter().copied().filter(|&w| cover.contains(w)).collect();
                TwinClique { vertices, cover_set }
            })
            .collect();
        Ok(TwinCover { cover, cliques })
    }

    pub fn size(&self) -> usize {
        self.cover.len()
    }
}

fn closed_row(g: &Graph, v: usize) -> Bits {
    let mut r = g.row(v).clone();
    r.insert(v);
    r
}

fn closed_twins(g: &Graph, u: usize, v: usize) -> bool {
    closed_row(g, u) == closed_row(g, v)
}

/// `N(u) \ {v} = N(v) \ {u}` for an edge `{u, v}`.
pub fn is_twin_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return invalid(format!("{{{u},{v}}} is not an edge"));
    }
    Ok(closed_twins(g, u, v))
}

/// Minimum twin cover, or `None` if every twin cover is larger than `budget`.
pub fn min_twin_cover(g: &Graph, budget: usize) -> Option<TwinCover> {
    let non_twin: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !closed_twins(g, u, v))
        .collect();
    let cover = min_vertex_cover(g.n(), &non_twin, budget)?;
    Some(TwinCover::from_cover(g, cover.into()).expect("vertex cover of the non-twin edges is a twin cover"))
}

/// Minimum vertex cover of size at most `budget` by branching on a maximum
/// degree vertex (take it, or take all its neighbours), with degree-one
/// folding and a matching lower bound.
pub fn min_vertex_cover(n: usize, edges: &[(usize, usize)], budget: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Bits::new(n); n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let greedy = greedy_cover(&adj);
    let mut best = if greedy.len() <= budget { Some(greedy) } else { None };
    let mut bound = best.as_ref().map_or(budget + 1, Vec::len);
    let active = Bits::from_iter(n, 0..n);
    branch(&adj, active, Vec::new(), &mut best, &mut bound);
    best.map(|mut c| {
        c.sort_unstable();
        c
    })
}

fn greedy_cover(adj: &[Bits]) -> Vec<usize> {
    let n = adj.len();
    let mut active = Bits::from_iter(n, 0..n);
    let mut cover = Vec::new();
    loop {
        let pick = (0..n)
            .filter(|&v| active.contains(v))
            .map(|v| (adj[v].intersection_len(&active), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match pick {
            Some((_, v)) => {
                active.remove(v);
                cover.push(v);
            }
            None => return cover,
        }
    }
}

fn matching_bound(adj: &[Bits], active: &Bits) -> usize {
    let mut free = active.clone();
    let mut size = 0;
    for u in active.iter() {
        if !free.contains(u) {
            continue;
        }
        if let Some(v) = adj[u].iter().find(|&v| free.contains(v)) {
            free.remove(u);
            free.remove(v);
            size += 1;
        }
    }
    size
}

fn branch(adj: &[Bits], mut active: Bits, mut cover: Vec<usize>, best: &mut Option<Vec<usize>>, bound: &mut usize) {
    // fold degree-0 and degree-1 vertices
    loop {
        let mut changed = false;
        for v in active.clone().iter() {
            if !active.contains(v) {
                continue;
            }
            let d = adj[v].intersection_len(&active);
            if d == 0 {
                active.remove(v);
                changed = true;
            } else if d == 1 {
                let u = adj[v].iter().find(|&u| active.contains(u)).expect("degree one");
                active.remove(u);
                active.remove(v);
                cover.push(u);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if cover.len() + matching_bound(adj, &active) >= *bound {
        return;
    }
    let pick = active
        .iter()
        .map(|v| (adj[v].intersection_len(&active), v))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let Some((_, v)) = pick else {
        *bound = cover.len();
        *best = Some(cover);
        return;
    };

    let mut with_v = active.clone();
    with_v.remove(v);
    let mut c1 = cover.clone();
    c1.push(v);
    branch(adj, with_v, c1, best, bound);

    let nbrs: Vec<usize> = adj[v].iter().filter(|&u| active.contains(u)).collect();
    if cover.len() + nbrs.len() < *bound {
        active.remove(v);
        for &u in &nbrs {
            active.remove(u);
        }
        cover.extend(nbrs);
        branch(adj, active, cover, best, bound);
    }
}

/// Classes of vertices with equal closed neighbourhood and equal label
/// membership, ordered by smallest member.
pub fn twin_classes(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<(Bits, Vec<bool>), Vec<usize>> = BTreeMap::new();
    for v in 0..g.graph.n() {
        groups
            .entry((closed_row(&g.graph, v), g.label_vector(v)))
            .or_default()
            .push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Neighborhood diversity: classes of the relation `N(u) \ {v} = N(v) \ {u}`
/// (true or false twins). Returns the class count and the classes.
pub fn neighborhood_diversity(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        match classes.iter_mut().find(|c| same_type(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    (classes.len(), classes)
}

fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.row(u).clone();
    let mut b = g.row(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    /// Smallest twin cover by trying every subset in order of size.
    fn brute_twin_cover_size(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&m| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1 || closed_twins(g, u, v))
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn twin_edge_examples() {
        let k3 = complete(3);
        for &(u, v) in k3.edges() {
            assert!(is_twin_edge(&k3, u, v).unwrap());
        }
        assert!(!is_twin_edge(&path(3), 0, 1).unwrap());
        assert!(is_twin_edge(&path(3), 0, 2).is_err());
        // K_4 minus {2,3}: 0 and 1 are adjacent to everything
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let twin: Vec<bool> = g.edges().iter().map(|&(u, v)| is_twin_edge(&g, u, v).unwrap()).collect();
        assert_eq!(twin, vec![true, false, false, false, false]);
    }

    #[test]
    fn twin_cover_examples() {
        let tc = min_twin_cover(&complete(5), 5).unwrap();
        assert_eq!(tc.size(), 0);
        assert_eq!(tc.cliques.len(), 1);
        assert_eq!(tc.cliques[0].vertices.len(), 5);
        assert!(tc.cliques[0].cover_set.is_empty());

        let tc = min_twin_cover(&star(4), 4).unwrap();
        assert_eq!(tc.cover, VertexSet::from([0]));
        assert_eq!(tc.cliques.len(), 4);
        assert!(tc.cliques.iter().all(|c| c.len() == 1 && c.cover_set == VertexSet::from([0])));

        assert_eq!(min_twin_cover(&path(4), 4).unwrap().size(), 2);
        assert_eq!(brute_twin_cover_size(&path(4)), 2);
        assert!(min_twin_cover(&path(4), 1).is_none());
    }

    #[test]
    fn twin_cover_is_minimal_and_valid() {
        use rand::{rngs::StdRng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for i in 0..150 {
            let n = 2 + i % 11;
            let p = [0.2, 0.5, 0.8][i % 3];
            let g = erdos_renyi(n, p, &mut rng);
            let tc = min_twin_cover(&g, n).unwrap();
            assert_eq!(tc.size(), brute_twin_cover_size(&g), "{}", g.to_text());
            for c in &tc.cliques {
                for (a, &u) in c.vertices.iter().enumerate() {
                    for &v in &c.vertices[a + 1..] {
                        assert!(g.has_edge(u, v));
                        assert!(closed_twins(&g, u, v));
                    }
                }
            }
            let covered: usize = tc.cliques.iter().map(TwinClique::len).sum();
            assert_eq!(covered + tc.size(), n);
        }
    }

    #[test]
    fn twin_class_examples() {
        assert_eq!(twin_classes(&LabeledGraph::unlabeled(complete(4))).len(), 1);
        // 0 and 2 share open neighbourhoods but are not adjacent
        assert_eq!(
            twin_classes(&LabeledGraph::unlabeled(cycle(4))),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let lg = LabeledGraph::unlabeled(complete(4)).with_label("a", [0].into()).unwrap();
        assert_eq!(twin_classes(&lg), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn twin_classes_are_interchangeable() {
        use rand::{rngs::StdRng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let g = erdos_renyi(7, 0.6, &mut rng);
            for class in twin_classes(&LabeledGraph::unlabeled(g.clone())) {
                if let [u, v, ..] = class[..] {
                    let mut perm: Vec<usize> = (0..g.n()).collect();
                    perm.swap(u, v);
                    assert_eq!(relabel(&g, &perm), g);
                }
            }
        }
    }

    #[test]
    fn neighborhood_diversity_examples() {
        assert_eq!(neighborhood_diversity(&complete(6)).0, 1);
        assert_eq!(neighborhood_diversity(&cycle(5)).0, 5);
        let (nd, classes) = neighborhood_diversity(&complete_bipartite(2, 3));
        assert_eq!(nd, 2);
        assert_eq!(classes, vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(neighborhood_diversity(&cycle(4)).0, 2);
    }
}
