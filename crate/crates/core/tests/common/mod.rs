#![allow(dead_code)]

use fairvd::families::*;
use fairvd::formula::Node;
use fairvd::{Formula, Graph, Interpretation, LabeledGraph, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Blow-up of a small random base graph: every base vertex becomes a clique
/// or an independent set of 1 to 4 vertices. Rich in twins.
pub fn twin_rich(rng: &mut StdRng, max_n: usize) -> Graph {
    let base_n = rng.gen_range(2..=5);
    let base = erdos_renyi(base_n, 0.5, rng);
    let mut blocks: Vec<(Vec<usize>, bool)> = Vec::new();
    let mut n = 0;
    for _ in 0..base_n {
        let size = rng.gen_range(1..=4).min(max_n.saturating_sub(n + base_n - blocks.len() - 1).max(1));
        blocks.push(((n..n + size).collect(), rng.gen_bool(0.6)));
        n += size;
    }
    let mut edges = Vec::new();
    for (block, clique) in &blocks {
        if *clique {
            for (a, &u) in block.iter().enumerate() {
                edges.extend(block[a + 1..].iter().map(|&v| (u, v)));
            }
        }
    }
    for &(x, y) in base.edges() {
        for &u in &blocks[x].0 {
            edges.extend(blocks[y].0.iter().map(|&v| (u.min(v), u.max(v))));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// One vertex `0` with pendant cliques of the given sizes.
pub fn pendant_cliques(sizes: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &s in sizes {
        for a in next..next + s {
            edges.push((0, a));
            edges.extend((a + 1..next + s).map(|b| (a, b)));
        }
        next += s;
    }
    Graph::new(next, edges).unwrap()
}

/// Fixed pool of 20 graphs on at most 10 vertices.
pub fn graph_pool() -> Vec<Graph> {
    let mut pool = vec![
        cycle(5),
        cycle(6),
        path(6),
        star(5),
        complete(5),
        petersen(),
        complete_bipartite(2, 3),
        complete_multipartite(&[2, 2, 2]),
        pendant_cliques(&[1, 2, 3]),
        pendant_cliques(&[2, 2, 2, 1]),
        Graph::disjoint_union(&[complete(3), complete(3), complete(2)]).unwrap().0,
        Graph::empty(4),
    ];
    let mut r = rng(2024);
    while pool.len() < 16 {
        pool.push(twin_rich(&mut r, 10));
    }
    while pool.len() < 20 {
        let n = r.gen_range(6..=9);
        pool.push(erdos_renyi(n, 0.45, &mut r));
    }
    pool
}

/// Fixed sentences with `q_S <= 1` and `q_v <= 2`.
pub const SENTENCE_POOL: [&str; 8] = [
    "(exists x (exists y (adj x y)))",
    "(forall x (exists y (adj x y)))",
    "(exists x (forall y (implies (not (= x y)) (adj x y))))",
    "(existsS S (forall x (forall y (implies (adj x y) (not (iff (in x S) (in y S)))))))",
    "(exists x (exists y (and (not (= x y)) (not (adj x y)))))",
    "(forall x (forall y (or (= x y) (adj x y))))",
    "(existsS S (forall x (iff (in x S) (exists y (and (adj x y) (in y S))))))",
    "(existsS S (and (forall x (exists y (and (in y S) (or (= x y) (adj x y))))) (forall x (not (in x S)))))",
];

/// Fixed formulas in one free variable `X` with `q_S <= 1` and `q_v <= 2`.
pub const FORMULA_POOL: [&str; 10] = [
    "(forall u (forall v (implies (adj u v) (or (in u X) (in v X)))))",
    "(forall u (or (in u X) (exists v (and (adj u v) (in v X)))))",
    "(forall u (forall v (implies (and (in u X) (in v X)) (not (adj u v)))))",
    "(exists u (and (in u X) (forall v (implies (adj u v) (not (in v X))))))",
    "(forall u (in u X))",
    "(forall u (not (in u X)))",
    "(forall u (exists v (and (adj u v) (in v X))))",
    "(exists u (exists v (and (adj u v) (in u X) (in v X))))",
    "(existsS S (forall u (forall v (implies (and (adj u v) (in u X) (in v X)) (not (iff (in u S) (in v S)))))))",
    "(existsS S (and (forall u (iff (in u S) (not (in u X)))) (exists v (in v S))))",
];

pub fn x_formula(text: &str) -> Formula {
    Formula::parse_with_free(text, &["X"]).unwrap()
}

struct Gen<'a> {
    rng: &'a mut StdRng,
    vertex_left: usize,
    set_left: usize,
    fresh: usize,
}

impl Gen<'_> {
    fn node(&mut self, depth: usize, vs: &mut Vec<String>, ss: &mut Vec<String>) -> Node {
        let quantify = self.vertex_left + self.set_left > 0 && (vs.is_empty() || self.rng.gen_bool(0.4));
        if depth == 0 || (!quantify && self.rng.gen_bool(0.3)) {
            return self.atom(vs, ss);
        }
        if quantify {
            let set = self.set_left > 0 && (self.vertex_left == 0 || self.rng.gen_bool(0.3));
            self.fresh += 1;
            let name = format!("{}{}", if set { "S" } else { "x" }, self.fresh);
            let scope = if set { &mut *ss } else { &mut *vs };
            scope.push(name.clone());
            if set {
                self.set_left -= 1;
            } else {
                self.vertex_left -= 1;
            }
            let body = Box::new(self.node(depth - 1, vs, ss));
            if set { ss.pop() } else { vs.pop() };
            let exists = self.rng.gen_bool(0.5);
            return match (set, exists) {
                (false, true) => Node::Exists(name, body),
                (false, false) => Node::Forall(name, body),
                (true, true) => Node::ExistsSet(name, body),
                (true, false) => Node::ForallSet(name, body),
            };
        }
        let mut sub = |g: &mut Self| Box::new(g.node(depth - 1, vs, ss));
        match self.rng.gen_range(0..5) {
            0 => Node::Not(sub(self)),
            1 => Node::And(vec![*sub(self), *sub(self)]),
            2 => Node::Or(vec![*sub(self), *sub(self)]),
            3 => Node::Implies(sub(self), sub(self)),
            _ => Node::Iff(sub(self), sub(self)),
        }
    }

    fn atom(&mut self, vs: &[String], ss: &[String]) -> Node {
        if vs.is_empty() {
            return if self.rng.gen_bool(0.5) { Node::True } else { Node::False };
        }
        let pick = |rng: &mut StdRng, xs: &[String]| xs[rng.gen_range(0..xs.len())].clone();
        match self.rng.gen_range(0..3) {
            0 => Node::Adj(pick(self.rng, vs), pick(self.rng, vs)),
            1 if !ss.is_empty() => Node::In(pick(self.rng, vs), pick(self.rng, ss)),
            1 => Node::Adj(pick(self.rng, vs), pick(self.rng, vs)),
            _ => Node::Eq(pick(self.rng, vs), pick(self.rng, vs)),
        }
    }
}

/// Random formula of depth at most `depth` with at most `q_s` set and `q_v`
/// vertex quantifiers, free set variables `free`.
pub fn random_formula(rng: &mut StdRng, depth: usize, q_s: usize, q_v: usize, free: &[&str]) -> Formula {
    let mut g = Gen { rng, vertex_left: q_v, set_left: q_s, fresh: 0 };
    let mut ss: Vec<String> = free.iter().map(|s| s.to_string()).collect();
    let root = g.node(depth, &mut Vec::new(), &mut ss);
    Formula::new(root, free.iter().map(|s| s.to_string()).collect()).unwrap()
}

pub fn holds(g: &Graph, f: &Formula, w: &VertexSet) -> bool {
    let itp: Interpretation = f.free_vars().iter().map(|x| (x.clone(), w.clone())).collect();
    f.evaluate(&LabeledGraph::unlabeled(g.clone()), &itp).unwrap()
}

pub fn truth(g: &Graph, sentence: &Formula) -> bool {
    sentence.evaluate(&LabeledGraph::unlabeled(g.clone()), &Interpretation::new()).unwrap()
}

/// `n <= 12` random graphs at three densities plus structured families up to
/// 14 vertices.
pub fn dp_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    let mut out: Vec<Graph> = (0..count)
        .map(|i| erdos_renyi(1 + i % 12, [0.2, 0.5, 0.8][i % 3], &mut r))
        .collect();
    for n in 1..=14 {
        out.push(complete(n));
        out.push(path(n));
        out.push(star(n - 1));
        if n >= 3 {
            out.push(cycle(n));
        }
    }
    for parts in [&[1, 1][..], &[2, 3], &[3, 3, 3], &[1, 2, 3, 4], &[4, 5, 5], &[2, 2, 2, 2, 2, 2, 2]] {
        out.push(complete_multipartite(parts));
    }
    out
}

/// One status line on the real stdout, past the test harness capture.
pub fn report(name: &str, ok: bool, detail: &str) {
    use std::io::Write;
    let tag = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "[acceptance] {tag} {name}: {detail}");
    let _ = out.flush();
}
