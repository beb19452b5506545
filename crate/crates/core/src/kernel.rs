//! Twin-cover kernelization for MSO₁ model checking.
//!
//! Two rules shrink a labeled graph without changing the truth of any
//! formula with `q_S` set and `q_v` vertex quantifiers:
//!
//! * twin rule: a class of vertices with equal closed neighbourhood and equal
//!   labels keeps at most `2^{q_S} q_v` members;
//! * clique rule: among the cliques of `G \ K` for a twin cover `K`, a labeled
//!   type (size, cover set, labels) keeps at most `2^{r q_S} (q_v + 1)`
//!   cliques, where `r` bounds the clique size.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::formula::{Formula, Interpretation};
use crate::graph::{Graph, LabeledGraph, VertexSet};
use crate::params::{min_twin_cover, twin_classes, TwinCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Twin,
    Clique,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Twin => "twin-rule",
            Rule::Clique => "clique-rule",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Removal {
    /// Id in the graph the reduction started from.
    pub vertex: usize,
    pub rule: Rule,
}

/// One application of a rule: the reduced graph, its vertices' ids in the
/// input, and the removed input vertices.
#[derive(Clone, Debug)]
pub struct Step {
    pub reduced: LabeledGraph,
    pub surviving: Vec<usize>,
    pub removed: Vec<Removal>,
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub reduced: LabeledGraph,
    pub removed: Vec<Removal>,
    /// `surviving[i]` is the original id of kernel vertex `i`.
    pub surviving: Vec<usize>,
    /// Size of the minimum twin cover of the kernel.
    pub cover_size: usize,
    pub bound: u128,
}

impl KernelReport {
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in &self.removed {
            let _ = writeln!(out, "removed {} rule={}", r.vertex, r.rule);
        }
        let _ = writeln!(out, "kernel n={} bound={}", self.reduced.graph.n(), self.bound);
        out
    }
}

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

/// Largest twin class the twin rule leaves intact: `2^{q_S} q_v`.
pub fn twin_threshold(q_s: usize, q_v: usize) -> usize {
    to_usize(pow2_sat(q_s as u128).saturating_mul(q_v as u128))
}

/// Largest number of cliques of one labeled type the clique rule leaves
/// intact: `2^{r q_S} (q_v + 1)`.
pub fn clique_threshold(r: usize, q_s: usize, q_v: usize) -> usize {
    let e = (r as u128).saturating_mul(q_s as u128);
    to_usize(pow2_sat(e).saturating_mul(q_v as u128 + 1))
}

/// Kernel size bound `k + (q_v+1) q_v^2 2^{k + 2 q_S + 2^{q_S} q_S q_v}`,
/// saturating.
pub fn size_bound(k: usize, q_s: usize, q_v: usize) -> u128 {
    let (k, s, v) = (k as u128, q_s as u128, q_v as u128);
    let e = k
        .saturating_add(2 * s)
        .saturating_add(pow2_sat(s).saturating_mul(s).saturating_mul(v));
    let factor = (v + 1).saturating_mul(v).saturating_mul(v);
    k.saturating_add(factor.saturating_mul(pow2_sat(e)))
}

fn delete(g: &LabeledGraph, doomed: &[usize], rule: Rule) -> Step {
    let keep: VertexSet = (0..g.graph.n()).filter(|v| doomed.binary_search(v).is_err()).collect();
    let (reduced, surviving) = g.induced_subgraph(&keep).expect("subset of the vertex set");
    let removed = doomed.iter().map(|&vertex| Removal { vertex, rule }).collect();
    Step { reduced, surviving, removed }
}

/// Shrinks every twin class above `2^{q_S} q_v` members, dropping the
/// largest ids.
pub fn reduce_twins(g: &LabeledGraph, q_s: usize, q_v: usize) -> Step {
    let limit = twin_threshold(q_s, q_v);
    let mut doomed: Vec<usize> = twin_classes(g)
        .into_iter()
        .filter(|c| c.len() > limit)
        .flat_map(|c| c[limit..].to_vec())
        .collect();
    doomed.sort_unstable();
    delete(g, &doomed, Rule::Twin)
}

/// Shrinks every labeled clique type above `2^{r q_S} (q_v + 1)` members,
/// dropping the cliques with the largest smallest id. Fails if a clique has
/// more than `r` vertices.
pub fn reduce_cliques(g: &LabeledGraph, cover: &TwinCover, r: usize, q_s: usize, q_v: usize) -> Result<Step> {
    let alpha = clique_threshold(r, q_s, q_v);
    type LabeledType = (usize, VertexSet, Vec<Vec<bool>>);
    let mut types: BTreeMap<LabeledType, Vec<&[usize]>> = BTreeMap::new();
    for c in &cover.cliques {
        if c.len() > r {
            return Err(Error::InvalidState(format!(
                "clique of size {} exceeds the bound r = {r}; run the twin rule first",
                c.len()
            )));
        }
        let mut pattern: Vec<Vec<bool>> = c.vertices.iter().map(|&v| g.label_vector(v)).collect();
        pattern.sort_unstable();
        types.entry((c.len(), c.cover_set.clone(), pattern)).or_default().push(&c.vertices);
    }
    let mut doomed = Vec::new();
    for mut cliques in types.into_values() {
        if cliques.len() > alpha {
            cliques.sort_unstable_by_key(|c| c[0]);
            for c in &cliques[alpha..] {
                doomed.extend_from_slice(c);
            }
        }
    }
    doomed.sort_unstable();
    Ok(delete(g, &doomed, Rule::Clique))
}

/// Applies both rules until neither removes anything. `r` is the clique
/// size bound handed to the clique rule.
pub fn kernelize(g: &LabeledGraph, q_s: usize, q_v: usize, r: usize) -> Result<KernelReport> {
    let mut cur = g.clone();
    let mut surviving: Vec<usize> = (0..g.graph.n()).collect();
    let mut removed = Vec::new();
    let mut absorb = |step: Step, cur: &mut LabeledGraph, surviving: &mut Vec<usize>| {
        let changed = !step.removed.is_empty();
        removed.extend(step.removed.iter().map(|r| Removal { vertex: surviving[r.vertex], rule: r.rule }));
        *surviving = step.surviving.iter().map(|&i| surviving[i]).collect();
        *cur = step.reduced;
        changed
    };
    let cover = loop {
        let step = reduce_twins(&cur, q_s, q_v);
        if absorb(step, &mut cur, &mut surviving) {
            continue;
        }
        let cover = min_twin_cover(&cur.graph, cur.graph.n()).expect("the vertex set is a twin cover");
        let step = reduce_cliques(&cur, &cover, r, q_s, q_v)?;
        if !absorb(step, &mut cur, &mut surviving) {
            break cover;
        }
    };
    let bound = size_bound(cover.size(), q_s, q_v);
    Ok(KernelReport { reduced: cur, removed, surviving, cover_size: cover.size(), bound })
}

/// Decides `g ⊨ sentence` on the kernel. Fails if the kernel exceeds the
/// size bound or evaluation runs out of budget.
pub fn model_check(g: &Graph, sentence: &Formula) -> Result<(bool, KernelReport)> {
    if !sentence.is_sentence() {
        return Err(Error::InvalidInput("model checking needs a sentence without free variables".into()));
    }
    let (q_s, q_v) = sentence.count_quantifiers();
    let report = kernelize(&LabeledGraph::unlabeled(g.clone()), q_s, q_v, twin_threshold(q_s, q_v))?;
    if report.reduced.graph.n() as u128 > report.bound {
        return Err(Error::InvalidState(format!(
            "kernel has {} vertices, above the bound {}",
            report.reduced.graph.n(),
            report.bound
        )));
    }
    let truth = sentence.evaluate(&report.reduced, &Interpretation::new())?;
    Ok((truth, report))
}
