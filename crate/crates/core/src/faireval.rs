//! Minimum fair-cost evaluation of a formula `φ(X)` with one free set
//! variable, parameterized by twin cover.
//!
//! Fix a twin cover `K`. The shape of `W` records `W ∩ K` and, for each
//! cover set `A`, how many cliques with cover set `A` have each
//! (selected, unselected) split. Splits are capped at `r + 1` and counts at
//! `α + 1`. Sets of equal shape satisfy `φ` alike, so the search runs over
//! realizable shapes: one model check and one cost minimisation per shape.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fairvc::FairSolution;
use crate::formula::{Formula, Interpretation};
use crate::graph::{Graph, LabeledGraph, VertexSet};
use crate::kernel::{kernelize, twin_threshold};
use crate::params::{min_twin_cover, TwinClique, TwinCover};

/// Largest twin cover whose subsets are enumerated.
pub const MAX_COVER: usize = 20;

const LABEL: &str = "X";

fn pow2_sat(e: u128) -> u128 {
    if e >= 127 {
        u128::MAX
    } else {
        1 << e
    }
}

fn to_usize(x: u128) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

/// Split cap `r` and count cap `α` of a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeParams {
    pub r: usize,
    pub alpha: usize,
}

impl ShapeParams {
    /// `r = 2^{q_S+2} q_v`, `α = 2^{r (q_S+1)} (q_v+1)`.
    pub fn for_quantifiers(q_s: usize, q_v: usize) -> ShapeParams {
        let r = to_usize(pow2_sat(q_s as u128 + 2).saturating_mul(q_v as u128));
        let e = (r as u128).saturating_mul(q_s as u128 + 1);
        let alpha = to_usize(pow2_sat(e).saturating_mul(q_v as u128 + 1));
        ShapeParams { r, alpha }
    }

    fn cell(&self, size: usize, sel: usize) -> (usize, usize) {
        (sel.min(self.r + 1), (size - sel).min(self.r + 1))
    }

    fn cap(&self, count: usize) -> usize {
        count.min(self.alpha.saturating_add(1))
    }

    fn is_capped(&self, count: usize) -> bool {
        count == self.alpha.saturating_add(1)
    }

    /// Fewest selected vertices of a clique of `size` placed in `cell`.
    fn min_sel(&self, size: usize, (i, j): (usize, usize)) -> Option<usize> {
        let cap = self.r + 1;
        let sel = if i < cap {
            i
        } else if j < cap {
            size.checked_sub(j)?
        } else {
            cap
        };
        (sel <= size && self.cell(size, sel) == (i, j)).then_some(sel)
    }
}

/// `(α(q_S, q_v))` of the clique rule, `2^{r q_S}(q_v+1)`.
pub fn lemma_alpha(r: usize, q_s: usize, q_v: usize) -> usize {
    crate::kernel::clique_threshold(r, q_s, q_v)
}

/// Capped clique counts per (selected, unselected) cell for one cover set.
/// Empty cells are absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AShape {
    pub cells: BTreeMap<(usize, usize), usize>,
}

impl AShape {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells.get(&(i, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, cell: (usize, usize), count: usize, p: &ShapeParams) {
        if count > 0 {
            let e = self.cells.entry(cell).or_insert(0);
            *e = p.cap(e.saturating_add(count));
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub wk: VertexSet,
    /// One table per cover set that some clique has.
    pub tables: BTreeMap<VertexSet, AShape>,
}

/// Cliques grouped by cover set, then by size.
fn groups(cover: &TwinCover) -> BTreeMap<VertexSet, BTreeMap<usize, Vec<&TwinClique>>> {
    let mut out: BTreeMap<VertexSet, BTreeMap<usize, Vec<&TwinClique>>> = BTreeMap::new();
    for c in &cover.cliques {
        out.entry(c.cover_set.clone()).or_default().entry(c.len()).or_default().push(c);
    }
    out
}

pub fn shape_of(cover: &TwinCover, w: &VertexSet, p: &ShapeParams) -> Shape {
    let mut tables: BTreeMap<VertexSet, AShape> = BTreeMap::new();
    for c in &cover.cliques {
        let sel = c.vertices.iter().filter(|&&v| w.contains(v)).count();
        tables.entry(c.cover_set.clone()).or_default().add(p.cell(c.len(), sel), 1, p);
    }
    Shape { wk: w.intersection(&cover.cover), tables }
}

/// Every shape of some `W` with `W ∩ K = wk`.
pub fn enumerate_realizable_shapes(cover: &TwinCover, wk: &VertexSet, p: &ShapeParams) -> Result<Vec<Shape>> {
    if !wk.is_subset(&cover.cover) {
        return Err(Error::InvalidInput(format!("{{{wk}}} is not a subset of the twin cover")));
    }
    let mut per_a: Vec<(VertexSet, Vec<AShape>)> = Vec::new();
    for (a, by_size) in groups(cover) {
        let mut partial: BTreeSet<AShape> = [AShape::default()].into();
        for (&size, cliques) in &by_size {
            let cells: BTreeSet<(usize, usize)> = (0..=size).map(|sel| p.cell(size, sel)).collect();
            let cells: Vec<_> = cells.into_iter().collect();
            let mut next = BTreeSet::new();
            let mut counts = vec![0; cells.len()];
            for_each_composition(cliques.len(), &mut counts, 0, &mut |counts| {
                for base in &partial {
                    let mut s = base.clone();
                    for (&cell, &k) in cells.iter().zip(counts) {
                        s.add(cell, k, p);
                    }
                    next.insert(s);
                }
            });
            partial = next;
        }
        per_a.push((a, partial.into_iter().collect()));
    }
    let mut shapes = vec![Shape { wk: wk.clone(), tables: BTreeMap::new() }];
    for (a, options) in per_a {
        shapes = shapes
            .into_iter()
            .flat_map(|s| {
                let a = &a;
                options.iter().map(move |o| {
                    let mut s = s.clone();
                    s.tables.insert(a.clone(), o.clone());
                    s
                })
            })
            .collect();
    }
    Ok(shapes)
}

/// Calls `f` with every vector of `counts.len()` non-negative parts summing
/// to `total`.
fn for_each_composition(total: usize, counts: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i + 1 == counts.len() {
        counts[i] = total;
        f(counts);
        return;
    }
    for k in 0..=total {
        counts[i] = k;
        for_each_composition(total - k, counts, i + 1, f);
    }
}

/// Small successive-shortest-path min-cost flow (Bellman-Ford, so negative
/// edge costs are allowed as long as the input has no negative cycle).
struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
    cost: Vec<i64>,
}

impl Flow {
    fn new(n: usize) -> Flow {
        Flow { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new(), cost: Vec::new() }
    }

    fn edge(&mut self, u: usize, v: usize, cap: usize, cost: i64) -> usize {
        let id = self.to.len();
        for (a, b, c, w) in [(u, v, cap, cost), (v, u, 0, -cost)] {
            self.head[a].push(self.to.len());
            self.to.push(b);
            self.cap.push(c);
            self.cost.push(w);
        }
        id
    }

    fn flow_on(&self, e: usize) -> usize {
        self.cap[e ^ 1]
    }

    /// Min-cost max-flow; returns the flow value.
    fn run(&mut self, s: usize, t: usize) -> usize {
        let n = self.head.len();
        let mut total = 0;
        loop {
            let mut dist = vec![i64::MAX; n];
            let mut via = vec![usize::MAX; n];
            dist[s] = 0;
            for _ in 0..n {
                let mut changed = false;
                for u in 0..n {
                    if dist[u] == i64::MAX {
                        continue;
                    }
                    for &e in &self.head[u] {
                        let v = self.to[e];
                        if self.cap[e] > 0 && dist[u] + self.cost[e] < dist[v] {
                            dist[v] = dist[u] + self.cost[e];
                            via[v] = e;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            if dist[t] == i64::MAX {
                return total;
            }
            let mut push = usize::MAX;
            let mut v = t;
            while v != s {
                push = push.min(self.cap[via[v]]);
                v = self.to[via[v] ^ 1];
            }
            let mut v = t;
            while v != s {
                self.cap[via[v]] -= push;
                self.cap[via[v] ^ 1] += push;
                v = self.to[via[v] ^ 1];
            }
            total += push;
        }
    }
}

/// Assignment of the cliques of one cover set: `(size, cell, selected per
/// clique, number of cliques)`, minimising the total selection. Only
/// placements whose clique-internal cost is at most `limit` are allowed.
fn assign_cover_set(
    by_size: &BTreeMap<usize, Vec<&TwinClique>>,
    table: &AShape,
    p: &ShapeParams,
    base: usize,
    limit: usize,
) -> Option<Vec<(usize, usize, usize)>> {
    let sizes: Vec<usize> = by_size.keys().copied().collect();
    let cells: Vec<((usize, usize), usize)> = table.cells.iter().map(|(&c, &k)| (c, k)).collect();
    let total: usize = by_size.values().map(Vec::len).sum();
    let required: usize = cells.iter().map(|&(_, k)| k).sum();
    if required > total || (required < total && !cells.iter().any(|&(_, k)| p.is_capped(k))) {
        return None;
    }
    let (src, sink) = (0, 1);
    let node_size = |i: usize| 2 + i;
    let node_cell = |j: usize| 2 + sizes.len() + j;
    let mut f = Flow::new(2 + sizes.len() + cells.len());
    let big = (total as i64 + 1) * (sizes.iter().max().copied().unwrap_or(0) as i64 + 1);
    for (i, &s) in sizes.iter().enumerate() {
        f.edge(src, node_size(i), by_size[&s].len(), 0);
    }
    let mut arcs = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        for (j, &(cell, _)) in cells.iter().enumerate() {
            let Some(sel) = p.min_sel(s, cell) else { continue };
            if base + sel - usize::from(sel == s) > limit {
                continue;
            }
            arcs.push((f.edge(node_size(i), node_cell(j), total, sel as i64), s, cell, sel));
        }
    }
    for (j, &(_, k)) in cells.iter().enumerate() {
        f.edge(node_cell(j), sink, k, -big);
        if p.is_capped(k) {
            f.edge(node_cell(j), sink, total, 0);
        }
    }
    if f.run(src, sink) != total {
        return None;
    }
    let mut into = vec![0; cells.len()];
    let mut plan = Vec::new();
    for &(e, s, cell, sel) in &arcs {
        let k = f.flow_on(e);
        if k > 0 {
            let j = cells.iter().position(|&(c, _)| c == cell).expect("cell of an arc");
            into[j] += k;
            plan.push((s, sel, k));
        }
    }
    cells.iter().zip(&into).all(|(&(_, k), &got)| got >= k).then_some(plan)
}

/// A minimum fair-cost `W` of the given shape, or `None` when no set has
/// that shape.
///
/// For a threshold `t` on the clique-internal cost (an unselected vertex of
/// clique `C` with cover set `A` sees `|A ∩ W| + |C ∩ W|` selected
/// vertices), each cover set independently minimises its total selection
/// by a min-cost flow from clique sizes to cells. Cover vertices see `W ∩ K`
/// plus the selections of their cover sets, both monotone in those totals,
/// so the best `t` gives the optimum.
pub fn min_cost_solution(g: &Graph, cover: &TwinCover, shape: &Shape, p: &ShapeParams) -> Option<(usize, VertexSet)> {
    if !shape.wk.is_subset(&cover.cover) {
        return None;
    }
    let grouped = groups(cover);
    if grouped.len() != shape.tables.len() || !grouped.keys().all(|a| shape.tables.contains_key(a)) {
        return None;
    }
    let base: BTreeMap<&VertexSet, usize> = grouped.keys().map(|a| (a, a.intersection(&shape.wk).len())).collect();
    let mut limits = BTreeSet::new();
    for (a, by_size) in &grouped {
        for &s in by_size.keys() {
            for &cell in shape.tables[a].cells.keys() {
                if let Some(sel) = p.min_sel(s, cell) {
                    limits.insert(base[a] + sel - usize::from(sel == s));
                }
            }
        }
    }
    if limits.is_empty() {
        limits.insert(0);
    }

    let mut best: Option<(usize, VertexSet)> = None;
    'limits: for limit in limits {
        let mut w: Vec<usize> = shape.wk.iter().collect();
        for (a, by_size) in &grouped {
            let Some(plan) = assign_cover_set(by_size, &shape.tables[a], p, base[a], limit) else {
                continue 'limits;
            };
            let mut next: BTreeMap<usize, usize> = BTreeMap::new();
            for (s, sel, k) in plan {
                let cliques = &by_size[&s];
                let at = next.entry(s).or_insert(0);
                for c in &cliques[*at..*at + k] {
                    w.extend_from_slice(&c.vertices[..sel]);
                }
                *at += k;
            }
        }
        let w = VertexSet::from(w);
        let cost = g.fair_cost(&w).expect("vertices of g");
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, w));
        }
    }
    best
}

/// `g ⊨ φ(W)`, decided on the kernel of `g` labeled with `W`.
fn holds(g: &Graph, f: &Formula, w: &VertexSet) -> Result<bool> {
    let (q_s, q_v) = f.count_quantifiers();
    let var = &f.free_vars()[0];
    let lg = LabeledGraph::unlabeled(g.clone()).with_label(LABEL, w.clone())?;
    let r = twin_threshold(q_s, q_v).saturating_mul(2);
    let report = kernelize(&lg, q_s, q_v, r)?;
    let x = report.reduced.label(LABEL).cloned().unwrap_or_default();
    let plain = LabeledGraph::unlabeled(report.reduced.graph.clone());
    f.evaluate(&plain, &Interpretation::from([(var.clone(), x)]))
}

fn check_arity(f: &Formula) -> Result<()> {
    if f.free_vars().len() != 1 {
        return Err(Error::InvalidInput(format!(
            "expected exactly one free set variable, found {}",
            f.free_vars().len()
        )));
    }
    Ok(())
}

/// Whether `g ⊨ φ(W)` for the sets `W` of this shape, checked on a minimum
/// cost representative.
pub fn holds_under_shape(g: &Graph, cover: &TwinCover, f: &Formula, shape: &Shape, p: &ShapeParams) -> Result<bool> {
    check_arity(f)?;
    let (_, w) = min_cost_solution(g, cover, shape, p)
        .ok_or_else(|| Error::InvalidInput("shape is not realizable in this graph".into()))?;
    holds(g, f, &w)
}

/// Minimum fair cost over all `W` with `g ⊨ φ(W)` and a witness, or `None`
/// if no set satisfies `φ`.
pub fn fair_evaluate(g: &Graph, f: &Formula) -> Result<Option<FairSolution>> {
    check_arity(f)?;
    let (q_s, q_v) = f.count_quantifiers();
    let p = ShapeParams::for_quantifiers(q_s, q_v);
    let cover = min_twin_cover(g, MAX_COVER)
        .ok_or_else(|| Error::ResourceLimit(format!("twin cover larger than {MAX_COVER}")))?;
    let k: Vec<usize> = cover.cover.iter().collect();
    let mut best: Option<FairSolution> = None;
    for mask in 0u64..1 << k.len() {
        let wk: VertexSet = (0..k.len()).filter(|&i| mask >> i & 1 == 1).map(|i| k[i]).collect();
        for shape in enumerate_realizable_shapes(&cover, &wk, &p)? {
            let Some((cost, w)) = min_cost_solution(g, &cover, &shape, &p) else { continue };
            if best.as_ref().is_some_and(|b| b.cost <= cost) {
                continue;
            }
            if holds(g, f, &w)? {
                best = Some(FairSolution { cost, cover: w });
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::fairvc::solve_brute;
    use crate::formula::vertex_cover_formula;
    use std::collections::HashMap;

    fn x_formula(text: &str) -> Formula {
        Formula::parse_with_free(text, &["X"]).unwrap()
    }

    /// One cover vertex 0 with pendant cliques of the given sizes.
    fn pendant_cliques(sizes: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &s in sizes {
            for a in next..next + s {
                edges.push((0, a));
                for b in a + 1..next + s {
                    edges.push((a, b));
                }
            }
            next += s;
        }
        Graph::new(next, edges).unwrap()
    }

    fn brute_min(g: &Graph, f: &Formula) -> Option<usize> {
        (0u64..1 << g.n())
            .map(VertexSet::from_mask)
            .filter(|w| f.evaluate(&LabeledGraph::unlabeled(g.clone()), &[("X".into(), w.clone())].into()).unwrap())
            .map(|w| g.fair_cost(&w).unwrap())
            .min()
    }

    #[test]
    fn parameters() {
        assert_eq!(ShapeParams::for_quantifiers(0, 1), ShapeParams { r: 4, alpha: 32 });
        assert_eq!(ShapeParams::for_quantifiers(1, 1).r, 8);
        assert_eq!(ShapeParams::for_quantifiers(1, 2).alpha, 3 << 32);
        assert_eq!(ShapeParams::for_quantifiers(2, 2).alpha, usize::MAX);
        assert_eq!(lemma_alpha(1, 0, 1), 2);
    }

    #[test]
    fn shape_examples() {
        let p = ShapeParams::for_quantifiers(0, 1);
        let g = pendant_cliques(&[2, 2, 2]);
        let cover = min_twin_cover(&g, 7).unwrap();
        assert_eq!(cover.cover, VertexSet::from([0]));
        let s = shape_of(&cover, &[1, 2].into(), &p);
        let t = &s.tables[&VertexSet::from([0])];
        assert_eq!((t.get(2, 0), t.get(0, 2), t.cells.len()), (1, 2, 2));

        let empty = shape_of(&cover, &VertexSet::new(), &p);
        assert!(empty.tables.values().all(|t| t.cells.keys().all(|&(i, _)| i == 0)));
        let all = shape_of(&cover, &(0..7).collect(), &p);
        assert!(all.tables.values().all(|t| t.cells.keys().all(|&(_, j)| j == 0)));
    }

    #[test]
    fn enumeration_examples() {
        let p = ShapeParams::for_quantifiers(0, 1);
        let k3 = complete(3);
        let full = TwinCover::from_cover(&k3, (0..3).collect()).unwrap();
        assert_eq!(enumerate_realizable_shapes(&full, &VertexSet::new(), &p).unwrap().len(), 1);

        let one = TwinCover::from_cover(&k3, [0].into()).unwrap();
        assert_eq!(enumerate_realizable_shapes(&one, &VertexSet::new(), &p).unwrap().len(), 3);

        let bowtie = pendant_cliques(&[2, 2]);
        let cover = min_twin_cover(&bowtie, 5).unwrap();
        let shapes = enumerate_realizable_shapes(&cover, &VertexSet::new(), &p).unwrap();
        assert_eq!(shapes.len(), 6);
        let hashed: BTreeSet<Shape> = (0u64..1 << 5)
            .map(VertexSet::from_mask)
            .filter(|w| !w.contains(0))
            .map(|w| shape_of(&cover, &w, &p))
            .collect();
        assert_eq!(hashed, shapes.into_iter().collect());
    }

    /// Brute-force minimum cost per shape over all subsets.
    fn check_min_cost(g: &Graph, cover: &TwinCover, p: &ShapeParams) {
        let mut best: HashMap<Shape, usize> = HashMap::new();
        for mask in 0u64..1 << g.n() {
            let w = VertexSet::from_mask(mask);
            let cost = g.fair_cost(&w).unwrap();
            let e = best.entry(shape_of(cover, &w, p)).or_insert(usize::MAX);
            *e = (*e).min(cost);
        }
        for (shape, cost) in best {
            let (got, w) = min_cost_solution(g, cover, &shape, p).expect("realizable");
            assert_eq!(shape_of(cover, &w, p), shape);
            assert_eq!(got, g.fair_cost(&w).unwrap());
            assert_eq!(got, cost, "{shape:?}");
        }
    }

    #[test]
    fn min_cost_matches_brute_force() {
        let g = pendant_cliques(&[3, 8]);
        let cover = min_twin_cover(&g, 12).unwrap();
        check_min_cost(&g, &cover, &ShapeParams::for_quantifiers(0, 1));
        // tight caps exercise capped cells and capped counts
        check_min_cost(&g, &cover, &ShapeParams { r: 1, alpha: 0 });
        let g = pendant_cliques(&[1, 1, 2, 2, 3, 4]);
        let cover = min_twin_cover(&g, 14).unwrap();
        check_min_cost(&g, &cover, &ShapeParams { r: 1, alpha: 1 });
        check_min_cost(&g, &cover, &ShapeParams { r: 2, alpha: 2 });
    }

    #[test]
    fn min_cost_random_graphs() {
        use rand::{rngs::StdRng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(17);
        for i in 0..30 {
            let g = erdos_renyi(9, [0.3, 0.6, 0.9][i % 3], &mut rng);
            let cover = min_twin_cover(&g, 9).unwrap();
            check_min_cost(&g, &cover, &ShapeParams { r: 1 + i % 3, alpha: i % 2 });
        }
    }

    #[test]
    fn invalid_shape() {
        let g = pendant_cliques(&[2]);
        let cover = TwinCover::from_cover(&g, [0].into()).unwrap();
        let mut shape = shape_of(&cover, &VertexSet::new(), &ShapeParams::for_quantifiers(0, 1));
        shape.tables.get_mut(&VertexSet::from([0])).unwrap().cells.insert((1, 1), 1);
        assert!(min_cost_solution(&g, &cover, &shape, &ShapeParams::for_quantifiers(0, 1)).is_none());
    }

    #[test]
    fn holds_examples() {
        let all = x_formula("(forall x (in x X))");
        let g = cycle(4);
        let cover = min_twin_cover(&g, 4).unwrap();
        let (q_s, q_v) = all.count_quantifiers();
        let p = ShapeParams::for_quantifiers(q_s, q_v);
        let full = shape_of(&cover, &(0..4).collect(), &p);
        assert!(holds_under_shape(&g, &cover, &all, &full, &p).unwrap());
        let partial = shape_of(&cover, &[0, 1, 2].into(), &p);
        assert!(!holds_under_shape(&g, &cover, &all, &partial, &p).unwrap());
    }

    #[test]
    fn evaluate_examples() {
        let empty = x_formula("(forall x (not (in x X)))");
        for g in [petersen(), star(3), complete(4)] {
            let s = fair_evaluate(&g, &empty).unwrap().unwrap();
            assert_eq!((s.cost, s.cover), (0, VertexSet::new()));
        }
        let vc = fair_evaluate(&star(4), &vertex_cover_formula()).unwrap().unwrap();
        assert_eq!(vc.cost, 1);
        assert_eq!(vc.cost, solve_brute(&star(4), 22).unwrap().cost);

        let all = fair_evaluate(&complete(3), &x_formula("(forall x (in x X))")).unwrap().unwrap();
        assert_eq!((all.cost, all.cover), (2, VertexSet::from([0, 1, 2])));

        let never = x_formula("(exists x (and (in x X) (not (in x X))))");
        assert_eq!(fair_evaluate(&cycle(5), &never).unwrap(), None);
        assert!(fair_evaluate(&cycle(5), &Formula::parse("true").unwrap()).is_err());
    }

    #[test]
    fn evaluate_matches_brute_force() {
        use rand::{rngs::StdRng, SeedableRng};
        let pool = [
            "(forall u (forall v (implies (adj u v) (or (in u X) (in v X)))))",
            "(forall u (or (in u X) (exists v (and (adj u v) (in v X)))))",
            "(exists u (and (in u X) (exists v (and (adj u v) (in v X)))))",
            "(forall u (implies (in u X) (forall v (implies (adj u v) (not (in v X))))))",
        ];
        let mut rng = StdRng::seed_from_u64(23);
        for i in 0..24 {
            let g = erdos_renyi(7, [0.3, 0.6, 0.85][i % 3], &mut rng);
            let f = x_formula(pool[i % pool.len()]);
            let got = fair_evaluate(&g, &f).unwrap();
            assert_eq!(got.as_ref().map(|s| s.cost), brute_min(&g, &f), "{}", g.to_text());
            if let Some(s) = got {
                assert_eq!(g.fair_cost(&s.cover).unwrap(), s.cost);
            }
        }
    }
}
