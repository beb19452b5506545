//! Hardness constructions.
//!
//! * Multicolored Clique to Fair Vertex Cover: selection gadgets for colour
//!   classes and edge sets, tied together by incidence checks.
//! * Unary Bin Packing to fair evaluation with `ℓ` free set variables: one
//!   clique per item next to a universal vertex.
//!
//! Both come with brute-force oracles for the source problems.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::bits::Bits;
use crate::error::{invalid, Error, Result};
use crate::formula::{Formula, Interpretation, DEFAULT_ATOM_BUDGET};
use crate::graph::{Graph, LabeledGraph, VertexSet};

/// Largest `ℓ · n` the ℓ-fair brute-force oracle accepts.
pub const DEFAULT_LFAIR_CAP: usize = 20;

/// An `ℓ`-partite graph with colour classes of equal size `n` and the same
/// number `m` of edges between every two classes. Vertex `i` of class `a`
/// has global id `a * n + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MccInstance {
    l: usize,
    n: usize,
    /// For `a < b`: the edges `(i, j)` between vertex `i` of `V_a` and
    /// vertex `j` of `V_b`, sorted. Position in the list is the edge number.
    edges: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

impl MccInstance {
    /// Classes smaller than the largest are padded with isolated vertices.
    /// Edges are `(a, i, b, j)`; every pair of classes must get the same
    /// number of edges.
    pub fn new(class_sizes: &[usize], edges: &[(usize, usize, usize, usize)]) -> Result<MccInstance> {
        let l = class_sizes.len();
        if l < 2 {
            return invalid("need at least two colour classes");
        }
        let n = class_sizes.iter().copied().max().unwrap_or(0);
        if n == 0 {
            return invalid("colour classes must not all be empty");
        }
        let mut by_pair: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for a in 0..l {
            for b in a + 1..l {
                by_pair.insert((a, b), Vec::new());
            }
        }
        for &(a, i, b, j) in edges {
            if a >= l || b >= l || a == b {
                return invalid(format!("edge ({a},{i})-({b},{j}) must join two distinct classes below {l}"));
            }
            if i >= class_sizes[a] || j >= class_sizes[b] {
                return invalid(format!("edge ({a},{i})-({b},{j}) names a vertex outside its class"));
            }
            let (key, e) = if a < b { ((a, b), (i, j)) } else { ((b, a), (j, i)) };
            by_pair.get_mut(&key).expect("all pairs present").push(e);
        }
        for (pair, list) in &mut by_pair {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return invalid(format!("duplicate edge between classes {} and {}", pair.0, pair.1));
            }
        }
        let m = by_pair.values().next().map_or(0, Vec::len);
        if let Some((pair, list)) = by_pair.iter().find(|(_, list)| list.len() != m) {
            return invalid(format!(
                "classes {} and {} have {} edges but other pairs have {m}; every pair needs the same count",
                pair.0,
                pair.1,
                list.len()
            ));
        }
        Ok(MccInstance { l, n, edges: by_pair })
    }

    /// Spec file: `colors <l>`, then `class_size <n>` or `classes <n_1> ...`,
    /// then `edge <a> <i> <b> <j>` lines (0-based). `#` starts a comment.
    pub fn parse_spec(text: &str) -> Result<(MccInstance, GenOptions)> {
        let mut colors = None;
        let mut sizes: Option<Vec<usize>> = None;
        let mut uniform = None;
        let mut edges = Vec::new();
        let mut opts = GenOptions::default();
        for (ln, line) in spec_lines(text) {
            let (key, nums) = split_spec_line(ln, line)?;
            match (key, nums.as_slice()) {
                ("colors", &[l]) => colors = Some(l),
                ("class_size", &[n]) => uniform = Some(n),
                ("classes", list) => sizes = Some(list.to_vec()),
                ("edge", &[a, i, b, j]) => edges.push((a, i, b, j)),
                ("k", &[k]) => opts.k = Some(k),
                ("incidence_budget", &[c]) => opts.incidence_budget = Some(c),
                _ => return spec_error(ln, format!("unrecognised line `{line}`")),
            }
        }
        let l = colors.ok_or_else(|| Error::InvalidInput("missing `colors` line".into()))?;
        let sizes = sizes.or(uniform.map(|n| vec![n; l])).ok_or_else(|| Error::InvalidInput("missing `class_size` or `classes` line".into()))?;
        if sizes.len() != l {
            return invalid(format!("{} class sizes given for {l} colours", sizes.len()));
        }
        Ok((MccInstance::new(&sizes, &edges)?, opts))
    }

    pub fn colors(&self) -> usize {
        self.l
    }

    pub fn class_size(&self) -> usize {
        self.n
    }

    /// Edges between every two classes.
    pub fn m(&self) -> usize {
        self.edges.values().next().map_or(0, Vec::len)
    }

    pub fn edges_between(&self, a: usize, b: usize) -> &[(usize, usize)] {
        &self.edges[&(a.min(b), a.max(b))]
    }

    fn adjacent(&self, a: usize, i: usize, b: usize, j: usize) -> bool {
        let (key, e) = if a < b { ((a, b), (i, j)) } else { ((b, a), (j, i)) };
        self.edges[&key].binary_search(&e).is_ok()
    }

    /// The instance as a plain graph on `l * n` vertices.
    pub fn graph(&self) -> Graph {
        let n = self.n;
        let edges = self.edges.iter().flat_map(|(&(a, b), list)| list.iter().map(move |&(i, j)| (a * n + i, b * n + j)));
        Graph::new(self.l * n, edges).expect("edges between distinct classes")
    }

    /// Every multicolored clique, as global ids ordered by class.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(self.l);
        self.extend_clique(&mut pick, &mut out);
        out
    }

    fn extend_clique(&self, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let b = pick.len();
        if b == self.l {
            out.push(pick.iter().enumerate().map(|(a, &i)| a * self.n + i).collect());
            return;
        }
        for j in 0..self.n {
            if pick.iter().enumerate().all(|(a, &i)| self.adjacent(a, i, b, j)) {
                pick.push(j);
                self.extend_clique(pick, out);
                pick.pop();
            }
        }
    }
}

/// Overrides for [`gen_fairvc_from_mcc`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenOptions {
    /// Global fair-cost budget; default `max(m - 1, 2n + 1)`.
    pub k: Option<usize>,
    /// How many cover vertices an incidence vertex may see; default `n`.
    pub incidence_budget: Option<usize>,
}

/// Named vertex groups of a generated instance, in allocation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GadgetMap {
    roles: Vec<(String, Vec<usize>)>,
    index: HashMap<String, usize>,
}

impl GadgetMap {
    fn push(&mut self, name: String, ids: Vec<usize>) {
        self.index.insert(name.clone(), self.roles.len());
        self.roles.push((name, ids));
    }

    fn extend(&mut self, name: &str, ids: &[usize]) {
        match self.index.get(name) {
            Some(&i) => self.roles[i].1.extend_from_slice(ids),
            None => self.push(name.to_string(), ids.to_vec()),
        }
    }

    pub fn get(&self, name: &str) -> Option<&[usize]> {
        self.index.get(name).map(|&i| self.roles[i].1.as_slice())
    }

    pub fn roles(&self) -> &[(String, Vec<usize>)] {
        &self.roles
    }

    fn ids(&self, name: &str) -> &[usize] {
        self.get(name).unwrap_or_else(|| panic!("role {name} exists"))
    }
}

/// A generated Fair Vertex Cover instance.
#[derive(Clone, Debug)]
pub struct FairVcInstance {
    pub graph: Graph,
    pub k: usize,
    pub incidence_budget: usize,
    pub map: GadgetMap,
    /// Incidence vertices plus budget-lowering middles, by the closed formula
    /// `2ℓ(ℓ-1)(1 + μ(n_c)) + ℓ μ(n-1) + C(ℓ,2) μ(m-1)` with
    /// `μ(b) = max(0, k - b)` and `n_c` the incidence budget.
    pub modulator_size: usize,
}

impl FairVcInstance {
    /// Sidecar map file: `# k=` and `# modulator=` comments, then one
    /// `role <name> <id>...` line per group.
    pub fn map_text(&self) -> String {
        let mut s = format!("# k={}\n# modulator={}\n", self.k, self.modulator_size);
        for (name, ids) in self.map.roles() {
            s.push_str("role ");
            s.push_str(name);
            for id in ids {
                let _ = write!(s, " {id}");
            }
            s.push('\n');
        }
        s
    }

    /// Graph file with a leading `# k=` comment.
    pub fn graph_text(&self) -> String {
        format!("# k={}\n{}", self.k, self.graph.to_text())
    }

    /// Incidence vertices and all budget-lowering middles.
    pub fn modulator(&self) -> VertexSet {
        let mut ids = self.map.ids("check").to_vec();
        ids.extend_from_slice(self.map.ids("middle"));
        ids.into()
    }
}

fn lowering(k: usize, budget: i64) -> usize {
    (k as i64 - budget).max(0) as usize
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    map: GadgetMap,
}

impl Builder {
    fn fresh(&mut self, count: usize) -> Vec<usize> {
        let ids = (self.n..self.n + count).collect();
        self.n += count;
        ids
    }

    fn join(&mut self, u: usize, vs: &[usize]) {
        self.edges.extend(vs.iter().map(|&v| (u.min(v), u.max(v))));
    }

    /// `k + 1` pendant leaves force `v` into every cover of fair cost `<= k`.
    fn enforce(&mut self, v: usize, k: usize) {
        let leaves = self.fresh(k + 1);
        self.join(v, &leaves);
        self.map.extend("leaf", &leaves);
    }

    /// Forced middles leave `v` room for `budget` further cover neighbours.
    fn lower(&mut self, v: usize, role: &str, k: usize, budget: i64) {
        let middles = self.fresh(lowering(k, budget));
        self.join(v, &middles);
        for &w in &middles {
            self.enforce(w, k);
        }
        self.map.extend("middle", &middles);
        self.map.push(format!("middle_{role}"), middles);
    }
}

/// Builds the Fair Vertex Cover instance `(H, k)` of a Multicolored Clique
/// instance. Allocation order: per class its guard, choices and enumeration
/// parts; per pair `a < b` the same for the edge gadget; incidence vertices
/// for ordered pairs; then leaves and middles for the enforced vertices.
pub fn gen_fairvc_from_mcc(inst: &MccInstance, opts: GenOptions) -> FairVcInstance {
    let (l, n, m) = (inst.l, inst.n, inst.m());
    let k = opts.k.unwrap_or((m.saturating_sub(1)).max(2 * n + 1));
    let inc = opts.incidence_budget.unwrap_or(n);
    let mut b = Builder { n: 0, edges: Vec::new(), map: GadgetMap::default() };

    for a in 0..l {
        let guard = b.fresh(1);
        b.map.push(format!("guard_V{a}"), guard.clone());
        let choices = b.fresh(n);
        b.join(guard[0], &choices);
        for (i, &c) in choices.iter().enumerate() {
            b.map.push(format!("choice_V{a}_{i}"), vec![c]);
            let lower = b.fresh(i + 1);
            let upper = b.fresh(n - i - 1);
            b.join(c, &lower);
            b.join(c, &upper);
            b.map.push(format!("lower_V{a}_{i}"), lower);
            b.map.push(format!("upper_V{a}_{i}"), upper);
        }
    }
    for (&(a, c), list) in &inst.edges {
        let tag = format!("E{a}_{c}");
        let guard = b.fresh(1);
        b.map.push(format!("guard_{tag}"), guard.clone());
        let choices = b.fresh(m);
        b.join(guard[0], &choices);
        for (q, (&ch, &(i, j))) in choices.iter().zip(list).enumerate() {
            b.map.push(format!("choice_{tag}_{q}"), vec![ch]);
            for (side, x) in [("a", i), ("b", j)] {
                let lower = b.fresh(x + 1);
                let upper = b.fresh(n - x - 1);
                b.join(ch, &lower);
                b.join(ch, &upper);
                b.map.push(format!("lower_{side}_{tag}_{q}"), lower);
                b.map.push(format!("upper_{side}_{tag}_{q}"), upper);
            }
        }
    }
    for a in 0..l {
        for c in (0..l).filter(|&c| c != a) {
            let (lo, hi, side) = if a < c { (a, c, "a") } else { (c, a, "b") };
            let tag = format!("E{lo}_{hi}");
            let ids = b.fresh(2);
            b.map.extend("check", &ids);
            b.map.push(format!("check1_{a}_{c}"), vec![ids[0]]);
            b.map.push(format!("check2_{a}_{c}"), vec![ids[1]]);
            for i in 0..n {
                let lower = b.map.ids(&format!("lower_V{a}_{i}")).to_vec();
                let upper = b.map.ids(&format!("upper_V{a}_{i}")).to_vec();
                b.join(ids[0], &lower);
                b.join(ids[1], &upper);
            }
            for q in 0..m {
                let lower = b.map.ids(&format!("lower_{side}_{tag}_{q}")).to_vec();
                let upper = b.map.ids(&format!("upper_{side}_{tag}_{q}")).to_vec();
                b.join(ids[0], &upper);
                b.join(ids[1], &lower);
            }
        }
    }

    let mut enforced: Vec<(String, usize, i64)> = Vec::new();
    for a in 0..l {
        enforced.push((format!("guard_V{a}"), b.map.ids(&format!("guard_V{a}"))[0], n as i64 - 1));
    }
    for &(a, c) in inst.edges.keys() {
        let name = format!("guard_E{a}_{c}");
        enforced.push((name.clone(), b.map.ids(&name)[0], m as i64 - 1));
    }
    for a in 0..l {
        for c in (0..l).filter(|&c| c != a) {
            for t in [1, 2] {
                let name = format!("check{t}_{a}_{c}");
                enforced.push((name.clone(), b.map.ids(&name)[0], inc as i64));
            }
        }
    }
    b.map.push("leaf".into(), Vec::new());
    b.map.push("middle".into(), Vec::new());
    for (name, v, budget) in enforced {
        b.enforce(v, k);
        b.lower(v, &name, k, budget);
    }

    let pairs = l * (l - 1) / 2;
    let modulator_size = 2 * l * (l - 1) * (1 + lowering(k, inc as i64))
        + l * lowering(k, n as i64 - 1)
        + pairs * lowering(k, m as i64 - 1);
    let graph = Graph::new(b.n, b.edges).expect("gadget edges are simple");
    FairVcInstance { graph, k, incidence_budget: inc, map: b.map, modulator_size }
}

/// The cover `C_K` of a multicolored clique: all enforced vertices, every
/// choice vertex except the selected one, and the enumeration vertices of
/// the selected ones.
pub fn translate_clique_to_cover(inst: &MccInstance, clique: &[usize], h: &FairVcInstance) -> Result<VertexSet> {
    let n = inst.n;
    if clique.len() != inst.l {
        return invalid(format!("a multicolored clique has {} vertices, got {}", inst.l, clique.len()));
    }
    let mut pick = vec![0; inst.l];
    for (a, &v) in clique.iter().enumerate() {
        if v / n != a || v >= inst.l * n {
            return invalid(format!("vertex {v} is not in colour class {a}"));
        }
        pick[a] = v % n;
    }
    for a in 0..inst.l {
        for b in a + 1..inst.l {
            if !inst.adjacent(a, pick[a], b, pick[b]) {
                return invalid(format!("vertices {} and {} are not adjacent", clique[a], clique[b]));
            }
        }
    }
    let map = &h.map;
    let mut cover: Vec<usize> = map.ids("middle").to_vec();
    cover.extend_from_slice(map.ids("check"));
    for (name, ids) in map.roles() {
        if name.starts_with("guard_") {
            cover.extend_from_slice(ids);
        }
    }
    for (a, &i) in pick.iter().enumerate() {
        for t in (0..n).filter(|&t| t != i) {
            cover.extend_from_slice(map.ids(&format!("choice_V{a}_{t}")));
        }
        cover.extend_from_slice(map.ids(&format!("lower_V{a}_{i}")));
        cover.extend_from_slice(map.ids(&format!("upper_V{a}_{i}")));
    }
    for (&(a, b), list) in &inst.edges {
        let tag = format!("E{a}_{b}");
        let q = list.binary_search(&(pick[a], pick[b])).expect("clique edge exists");
        for t in (0..list.len()).filter(|&t| t != q) {
            cover.extend_from_slice(map.ids(&format!("choice_{tag}_{t}")));
        }
        for part in ["lower_a", "upper_a", "lower_b", "upper_b"] {
            cover.extend_from_slice(map.ids(&format!("{part}_{tag}_{q}")));
        }
    }
    Ok(cover.into())
}

/// Whether deleting the modulator leaves only isolated vertices and trees
/// of depth at most 3 rooted at a guard.
pub fn check_modulator(h: &FairVcInstance) -> bool {
    let modulator = h.modulator();
    let rest: VertexSet = (0..h.graph.n()).filter(|&v| !modulator.contains(v)).collect();
    let (sub, map) = h.graph.induced_subgraph(&rest).expect("subset");
    let guards: HashMap<usize, ()> = h
        .map
        .roles()
        .iter()
        .filter(|(name, _)| name.starts_with("guard_"))
        .map(|(_, ids)| (ids[0], ()))
        .collect();
    sub.components().into_iter().all(|comp| {
        if comp.len() == 1 {
            return true;
        }
        let edges: usize = comp.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
        let roots: Vec<usize> = comp.iter().copied().filter(|&v| guards.contains_key(&map[v])).collect();
        if edges + 1 != comp.len() || roots.len() != 1 {
            return false;
        }
        let mut depth = HashMap::from([(roots[0], 0usize)]);
        let mut queue = std::collections::VecDeque::from([roots[0]]);
        while let Some(v) = queue.pop_front() {
            for &u in sub.neighbors(v) {
                if !depth.contains_key(&u) {
                    depth.insert(u, depth[&v] + 1);
                    queue.push_back(u);
                }
            }
        }
        depth.values().all(|&d| d <= 3)
    })
}

/// Unary ℓ-Bin Packing: pack items of the given sizes into `bins` bins of
/// capacity `capacity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinPackingInstance {
    pub bins: usize,
    pub capacity: usize,
    pub sizes: Vec<usize>,
}

impl BinPackingInstance {
    pub fn new(bins: usize, capacity: usize, sizes: Vec<usize>) -> Result<BinPackingInstance> {
        if bins == 0 {
            return invalid("need at least one bin");
        }
        if sizes.is_empty() || sizes.contains(&0) {
            return invalid("need at least one item and every size must be positive");
        }
        Ok(BinPackingInstance { bins, capacity, sizes })
    }

    /// Spec file: `bins <l>`, `capacity <B>`, `sizes <s_1> ...`.
    pub fn parse_spec(text: &str) -> Result<BinPackingInstance> {
        let (mut bins, mut cap, mut sizes) = (None, None, None);
        for (ln, line) in spec_lines(text) {
            let (key, nums) = split_spec_line(ln, line)?;
            match (key, nums.as_slice()) {
                ("bins", &[l]) => bins = Some(l),
                ("capacity", &[c]) => cap = Some(c),
                ("sizes", list) => sizes = Some(list.to_vec()),
                _ => return spec_error(ln, format!("unrecognised line `{line}`")),
            }
        }
        let missing = |what: &str| Error::InvalidInput(format!("missing `{what}` line"));
        BinPackingInstance::new(
            bins.ok_or_else(|| missing("bins"))?,
            cap.ok_or_else(|| missing("capacity"))?,
            sizes.ok_or_else(|| missing("sizes"))?,
        )
    }

    pub fn to_spec(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        format!("bins {}\ncapacity {}\nsizes {}\n", self.bins, self.capacity, sizes.join(" "))
    }
}

/// Direct check over all `bins^items` assignments.
pub fn bin_packing_feasible(inst: &BinPackingInstance) -> bool {
    fn place(sizes: &[usize], load: &mut [usize], cap: usize) -> bool {
        let Some((&s, rest)) = sizes.split_first() else { return true };
        for j in 0..load.len() {
            if load[j] + s <= cap {
                load[j] += s;
                let ok = place(rest, load, cap);
                load[j] -= s;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    place(&inst.sizes, &mut vec![0; inst.bins], inst.capacity)
}

/// A generated ℓ-fair evaluation instance.
#[derive(Clone, Debug)]
pub struct LfairInstance {
    pub graph: Graph,
    pub formula: Formula,
    pub l: usize,
    pub k: usize,
}

/// `G` is a universal vertex `0` plus one clique per item; `φ(X1..Xℓ)` says
/// every non-universal vertex is in some `Xj` and adjacent non-universal
/// vertices agree on every `Xj`; `k = B`.
pub fn gen_lfair_from_binpacking(inst: &BinPackingInstance) -> LfairInstance {
    let mut edges = Vec::new();
    let mut next = 1;
    for &s in &inst.sizes {
        for a in next..next + s {
            edges.push((0, a));
            for b in a + 1..next + s {
                edges.push((a, b));
            }
        }
        next += s;
    }
    let graph = Graph::new(next, edges).expect("cliques plus universal vertex");
    let vars: Vec<String> = (1..=inst.bins).map(|j| format!("X{j}")).collect();
    let some = vars.iter().map(|x| format!("(in v {x})")).collect::<Vec<_>>().join(" ");
    let agree = vars.iter().map(|x| format!("(iff (in v {x}) (in w {x}))")).collect::<Vec<_>>().join(" ");
    let text = format!(
        "(exists u (and \
           (forall w (implies (not (= w u)) (adj w u))) \
           (forall v (implies (not (= v u)) (or {some}))) \
           (forall v (forall w (implies (and (not (= v u)) (not (= w u)) (adj v w)) (and {agree}))))))"
    );
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let formula = Formula::parse_with_free(&text, &names).expect("generated formula is well formed");
    LfairInstance { graph, formula, l: inst.bins, k: inst.capacity }
}

/// Whether some `W_1..W_ℓ` satisfy `φ` with ℓ-fair cost at most `k`, by
/// enumerating all `2^{ℓn}` tuples (limited to `ℓ n <= cap`).
pub fn lfair_brute_oracle(g: &Graph, f: &Formula, l: usize, k: usize, cap: usize) -> Result<bool> {
    if f.free_vars().len() != l {
        return invalid(format!("formula has {} free variables, expected {l}", f.free_vars().len()));
    }
    let n = g.n();
    let bits = l.saturating_mul(n);
    if bits > cap.min(63) {
        return Err(Error::ResourceLimit(format!("2^{bits} tuples exceed the cap of 2^{}", cap.min(63))));
    }
    if l == 0 {
        return f.evaluate(&LabeledGraph::unlabeled(g.clone()), &Interpretation::new());
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let full = (1u64 << n) - 1;
    let cheap = |w: u64| nbr.iter().all(|&b| (b & w).count_ones() as usize <= k);
    let ok_sets: Vec<u64> = (0..=full).filter(|&w| cheap(w)).collect();
    let mut idx = vec![0usize; l];
    loop {
        let sets = idx.iter().map(|&i| Bits::from_mask(n, ok_sets[i])).collect();
        if f.evaluate_bits(g, sets, DEFAULT_ATOM_BUDGET)? {
            return Ok(true);
        }
        let mut t = 0;
        loop {
            if t == l {
                return Ok(false);
            }
            idx[t] += 1;
            if idx[t] < ok_sets.len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

fn spec_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn split_spec_line(ln: usize, line: &str) -> Result<(&str, Vec<usize>)> {
    let mut toks = line.split_whitespace();
    let key = toks.next().unwrap_or("");
    let nums = toks
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Syntax {
                line: ln,
                column: 1,
                message: format!("expected a non-negative integer, got `{t}`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((key, nums))
}

fn spec_error<T>(line: usize, message: String) -> Result<T> {
    Err(Error::Syntax { line, column: 1, message })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fairvc::{solve_bnb, Decision};
    use std::time::Duration;

    const BUDGET: Duration = Duration::from_secs(60);

    #[test]
    fn single_edge_instance() {
        let inst = MccInstance::new(&[1, 1], &[(0, 0, 1, 0)]).unwrap();
        let h = gen_fairvc_from_mcc(&inst, GenOptions::default());
        assert_eq!(h.k, 3);
        let cliques = inst.cliques();
        assert_eq!(cliques, vec![vec![0, 1]]);
        let cover = translate_clique_to_cover(&inst, &cliques[0], &h).unwrap();
        assert!(h.graph.is_vertex_cover(&cover).unwrap());
        assert!(h.graph.fair_cost(&cover).unwrap() <= h.k);
        assert!(matches!(solve_bnb(&h.graph, h.k, BUDGET), Decision::Yes(_)));
        assert!(check_modulator(&h));
        assert_eq!(h.modulator().len(), h.modulator_size);
    }

    #[test]
    fn literal_budget_is_too_small() {
        // the translated cover leaves the selected edge's choice vertex out,
        // and it sees 2n enumeration vertices plus its guard
        let inst = MccInstance::new(&[1, 1], &[(0, 0, 1, 0)]).unwrap();
        let h = gen_fairvc_from_mcc(&inst, GenOptions { k: Some(2), incidence_budget: None });
        let cover = translate_clique_to_cover(&inst, &[0, 1], &h).unwrap();
        assert_eq!(h.graph.fair_cost(&cover).unwrap(), 3);
    }

    #[test]
    fn edgeless_instance_is_no() {
        let inst = MccInstance::new(&[2, 1], &[]).unwrap();
        assert_eq!(inst.class_size(), 2);
        assert!(inst.cliques().is_empty());
        let h = gen_fairvc_from_mcc(&inst, GenOptions::default());
        assert_eq!(solve_bnb(&h.graph, h.k, BUDGET), Decision::No);
        assert!(check_modulator(&h));
    }

    #[test]
    fn rejects_uneven_edge_counts() {
        assert!(MccInstance::new(&[1, 1, 1], &[(0, 0, 1, 0)]).is_err());
        assert!(MccInstance::new(&[1, 1], &[(0, 0, 0, 0)]).is_err());
        assert!(MccInstance::new(&[1, 1], &[(0, 1, 1, 0)]).is_err());
    }

    #[test]
    fn translation_rejects_non_cliques() {
        let inst = MccInstance::new(&[2, 2], &[(0, 0, 1, 0), (0, 1, 1, 1)]).unwrap();
        let h = gen_fairvc_from_mcc(&inst, GenOptions::default());
        assert!(translate_clique_to_cover(&inst, &[0, 3], &h).is_err());
        assert!(translate_clique_to_cover(&inst, &[0, 2], &h).is_ok());
        assert!(translate_clique_to_cover(&inst, &[2, 0], &h).is_err());
    }

    #[test]
    fn map_text_is_deterministic() {
        let inst = MccInstance::new(&[2, 2], &[(0, 0, 1, 1)]).unwrap();
        let a = gen_fairvc_from_mcc(&inst, GenOptions::default());
        let b = gen_fairvc_from_mcc(&inst, GenOptions::default());
        assert_eq!(a.map_text(), b.map_text());
        assert!(a.map_text().starts_with("# k=5\n"));
        assert!(a.map_text().contains("\nrole guard_V0 0\n"));
        assert_eq!(Graph::parse(&a.graph_text()).unwrap(), a.graph);
    }

    #[test]
    fn spec_files() {
        let (inst, opts) = MccInstance::parse_spec("colors 2\nclass_size 2\nedge 0 1 1 0  # one edge\nk 9\n").unwrap();
        assert_eq!((inst.colors(), inst.class_size(), inst.m()), (2, 2, 1));
        assert_eq!(opts.k, Some(9));
        assert!(MccInstance::parse_spec("colors 2\nedge 0 0 1 0\n").is_err());
        let bp = BinPackingInstance::parse_spec("bins 2\ncapacity 3\nsizes 1 2 2\n").unwrap();
        assert_eq!(BinPackingInstance::parse_spec(&bp.to_spec()).unwrap(), bp);
        assert!(matches!(BinPackingInstance::parse_spec("bins 2\nfoo 1\n"), Err(Error::Syntax { line: 2, .. })));
    }

    #[test]
    fn bin_packing_examples() {
        let cases = [(1, 1, vec![1], true), (1, 3, vec![2, 2], false), (2, 2, vec![2, 2], true)];
        for (bins, cap, sizes, expected) in cases {
            let inst = BinPackingInstance::new(bins, cap, sizes).unwrap();
            assert_eq!(bin_packing_feasible(&inst), expected);
            let lf = gen_lfair_from_binpacking(&inst);
            assert_eq!(lf.formula.count_quantifiers(), (0, 5));
            assert_eq!(lfair_brute_oracle(&lf.graph, &lf.formula, lf.l, lf.k, DEFAULT_LFAIR_CAP).unwrap(), expected);
        }
    }

    #[test]
    fn oracle_edge_cases() {
        let g = crate::families::cycle(5);
        let t = Formula::parse("true").unwrap();
        assert!(lfair_brute_oracle(&g, &t, 0, 0, 20).unwrap());
        let any = Formula::parse_with_free("true", &["X"]).unwrap();
        assert!(lfair_brute_oracle(&g, &any, 1, g.max_degree(), 20).unwrap());
        assert!(matches!(lfair_brute_oracle(&g, &any, 1, 0, 4), Err(Error::ResourceLimit(_))));
        assert!(lfair_brute_oracle(&g, &any, 2, 0, 20).is_err());
    }
}
