//! Fair Vertex Cover: minimise the largest number of cover vertices in any
//! neighbourhood.
//!
//! [`solve_dp`] runs a dynamic program over the modular decomposition,
//! [`solve_brute`] enumerates subsets and [`solve_bnb`] decides a fixed bound
//! by branch and bound.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modec::{decompose, ModTree, NodeKind};

pub const DEFAULT_BRUTE_CAP: usize = 22;
/// Largest template size the dynamic program enumerates covers for.
pub const MAX_DP_TEMPLATE: usize = 24;

const INF: usize = usize::MAX;

/// Children fully in the cover (bitmask) and the budget of every child.
type Choice = (u32, Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FairSolution {
    pub cost: usize,
    pub cover: VertexSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub nodes: usize,
    pub width: usize,
    pub table_entries: usize,
    pub types_checked: usize,
}

#[derive(Clone, Debug)]
pub struct DpSolution {
    pub cost: usize,
    pub cover: VertexSet,
    pub stats: DpStats,
}

/// Per node `t`, `table[p]` is the smallest vertex cover of the graph below
/// `t` with fair cost at most `p`, for `p` in `0..=delta_t` (the value is
/// constant beyond). `INF` marks infeasible budgets.
#[derive(Clone, Debug)]
pub struct FairTables {
    pub tree: ModTree,
    pub tables: Vec<Vec<usize>>,
    witness: Vec<Vec<Option<Choice>>>,
    stats: DpStats,
}

impl FairTables {
    pub fn build(tree: ModTree) -> Result<FairTables> {
        let width = tree.width();
        if width > MAX_DP_TEMPLATE {
            return Err(Error::ResourceLimit(format!(
                "template with {width} children exceeds the limit of {MAX_DP_TEMPLATE}"
            )));
        }
        let count = tree.nodes().len();
        let mut tables: Vec<Vec<usize>> = Vec::with_capacity(count);
        let mut witness = Vec::with_capacity(count);
        let mut stats = DpStats { nodes: count, width, ..DpStats::default() };
        for node in tree.nodes() {
            if node.kind == NodeKind::Leaf {
                tables.push(vec![0]);
                witness.push(vec![None]);
                stats.table_entries += 1;
                continue;
            }
            let kids = &node.children;
            let r = kids.len();
            let size: Vec<usize> = kids.iter().map(|&c| tree.node(c).n()).collect();
            let delta: Vec<usize> = kids.iter().map(|&c| tree.node(c).delta).collect();
            let nbr: Vec<u32> = (0..r)
                .map(|i| node.template.neighbors(i).iter().fold(0u32, |m, &j| m | 1 << j))
                .collect();
            let mass: Vec<usize> = (0..r).map(|i| node.template.neighbors(i).iter().map(|&j| size[j]).sum()).collect();
            let covers: Vec<u32> = (0..1u32 << r)
                .filter(|&c| (0..r).all(|i| c >> i & 1 == 1 || nbr[i] & !c == 0))
                .collect();

            let mut table = vec![INF; node.delta + 1];
            let mut wit = vec![None; node.delta + 1];
            let mut budgets = vec![0usize; r];
            let mut cost = vec![0usize; r];
            for p in 0..=node.delta {
                let mut best: Option<(usize, u32)> = None;
                'types: for &c in &covers {
                    stats.types_checked += 1;
                    for i in 0..r {
                        if c >> i & 1 == 1 {
                            cost[i] = size[i];
                            continue;
                        }
                        if mass[i] > p {
                            continue 'types;
                        }
                        budgets[i] = (p - mass[i]).min(delta[i]);
                        cost[i] = tables[kids[i]][budgets[i]];
                        if cost[i] == INF {
                            continue 'types;
                        }
                    }
                    for i in (0..r).filter(|&i| c >> i & 1 == 1) {
                        let seen: usize = node.template.neighbors(i).iter().map(|&j| cost[j]).sum();
                        if delta[i] + seen > p {
                            continue 'types;
                        }
                    }
                    let total: usize = cost.iter().sum();
                    let better = match best {
                        None => true,
                        Some((t, b)) => total < t || (total == t && type_less(c, b)),
                    };
                    if better {
                        best = Some((total, c));
                    }
                }
                if let Some((total, c)) = best {
                    table[p] = total;
                    let used = (0..r)
                        .map(|i| if c >> i & 1 == 1 { 0 } else { (p - mass[i]).min(delta[i]) })
                        .collect();
                    wit[p] = Some((c, used));
                }
            }
            stats.table_entries += table.len();
            tables.push(table);
            witness.push(wit);
        }
        Ok(FairTables { tree, tables, witness, stats })
    }

    /// Smallest `p` with a finite root entry.
    pub fn optimum(&self) -> usize {
        let root = self.tables.last().expect("non-empty tree");
        root.iter().position(|&s| s != INF).expect("covering everything is always feasible")
    }

    /// Cover of size `table_root[p]` and fair cost at most `p`.
    pub fn reconstruct(&self, p: usize) -> Option<VertexSet> {
        let root = self.tree.root_index();
        let p = p.min(self.tables[root].len() - 1);
        if self.tables[root][p] == INF {
            return None;
        }
        let mut out = Vec::new();
        self.collect(root, p, &mut out);
        Some(out.into())
    }

    fn collect(&self, t: usize, p: usize, out: &mut Vec<usize>) {
        let node = self.tree.node(t);
        if node.kind == NodeKind::Leaf {
            return;
        }
        let (c, budgets) = self.witness[t][p].as_ref().expect("finite entry has a witness");
        for (i, &child) in node.children.iter().enumerate() {
            if c >> i & 1 == 1 {
                out.extend_from_slice(&self.tree.node(child).vertices);
            } else {
                self.collect(child, budgets[i], out);
            }
        }
    }

    pub fn stats(&self) -> &DpStats {
        &self.stats
    }
}

/// Compares the sorted index lists of two types lexicographically.
fn type_less(a: u32, b: u32) -> bool {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, _) => return b != 0,
            (false, true) => return false,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x < y;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// Minimum fair cost vertex cover via the decomposition dynamic program.
/// Series and parallel nodes are binarized first.
pub fn solve_dp(g: &Graph) -> Result<DpSolution> {
    let tables = FairTables::build(decompose(g)?.binarize())?;
    let cost = tables.optimum();
    let cover = tables.reconstruct(cost).expect("optimum is feasible");
    Ok(DpSolution { cost, cover, stats: tables.stats().clone() })
}

/// Exhaustive search over all subsets. Ties: smaller cover, then the
/// lexicographically smallest one.
pub fn solve_brute(g: &Graph, cap: usize) -> Result<FairSolution> {
    let n = g.n();
    if n > cap.min(40) {
        return Err(Error::ResourceLimit(format!("brute force limited to {} vertices, graph has {n}", cap.min(40))));
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut best: Option<(usize, u32, u64)> = None;
    for mask in 0u64..1 << n {
        if !(0..n).all(|v| mask >> v & 1 == 1 || nbr[v] & !mask == 0) {
            continue;
        }
        let cost = nbr.iter().map(|&b| (b & mask).count_ones() as usize).max().unwrap_or(0);
        let size = mask.count_ones();
        let better = match best {
            None => true,
            Some((c, s, m)) => (cost, size) < (c, s) || ((cost, size) == (c, s) && mask & (mask ^ m) & (mask ^ m).wrapping_neg() != 0),
        };
        if better {
            best = Some((cost, size, mask));
        }
    }
    let (cost, _, mask) = best.expect("the full vertex set is a cover");
    Ok(FairSolution { cost, cover: VertexSet::from_mask(mask) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(VertexSet),
    No,
    /// The time budget ran out before the search finished.
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum State {
    Undecided,
    In,
    Out,
}

struct Bnb<'a> {
    g: &'a Graph,
    k: usize,
    deadline: Instant,
    ticks: u64,
    timed_out: bool,
}

#[derive(Clone)]
struct Search {
    state: Vec<State>,
    seen: Vec<usize>,
}

impl Bnb<'_> {
    /// Applies `v := s` and everything it forces. False on contradiction.
    fn assign(&self, st: &mut Search, v: usize, s: State) -> bool {
        let mut queue = vec![(v, s)];
        while let Some((v, s)) = queue.pop() {
            match (st.state[v], s) {
                (cur, want) if cur == want => continue,
                (State::Undecided, _) => {}
                _ => return false,
            }
            st.state[v] = s;
            match s {
                State::Out => {
                    for &u in self.g.neighbors(v) {
                        match st.state[u] {
                            State::Out => return false,
                            State::Undecided => queue.push((u, State::In)),
                            State::In => {}
                        }
                    }
                }
                State::In => {
                    for &u in self.g.neighbors(v) {
                        st.seen[u] += 1;
                        if st.seen[u] > self.k {
                            return false;
                        }
                        if st.seen[u] == self.k {
                            for &w in self.g.neighbors(u) {
                                if st.state[w] == State::Undecided {
                                    queue.push((w, State::Out));
                                }
                            }
                        }
                    }
                }
                State::Undecided => unreachable!(),
            }
        }
        true
    }

    fn search(&mut self, st: Search) -> Option<VertexSet> {
        self.ticks += 1;
        if self.ticks % 1024 == 1 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return None;
        }
        // branch on the undecided endpoint of an uncovered edge with most
        // undecided neighbours
        let undecided_degree =
            |v: usize| self.g.neighbors(v).iter().filter(|&&u| st.state[u] == State::Undecided).count();
        let pick = (0..self.g.n())
            .filter(|&v| st.state[v] == State::Undecided)
            .map(|v| (undecided_degree(v), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, v)) = pick else {
            return Some((0..self.g.n()).filter(|&v| st.state[v] == State::In).collect());
        };
        for s in [State::In, State::Out] {
            let mut next = st.clone();
            if self.assign(&mut next, v, s) {
                if let Some(found) = self.search(next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Decides whether `g` has a vertex cover of fair cost at most `k`.
pub fn solve_bnb(g: &Graph, k: usize, budget: Duration) -> Decision {
    let mut bnb = Bnb { g, k, deadline: Instant::now() + budget, ticks: 0, timed_out: false };
    let mut st = Search { state: vec![State::Undecided; g.n()], seen: vec![0; g.n()] };
    // excluding a vertex puts its whole neighbourhood in the cover
    for v in 0..g.n() {
        if g.degree(v) > k && !bnb.assign(&mut st, v, State::In) {
            return Decision::No;
        }
    }
    match bnb.search(st) {
        Some(cover) => Decision::Yes(cover),
        None if bnb.timed_out => Decision::Unknown,
        None => Decision::No,
    }
}
