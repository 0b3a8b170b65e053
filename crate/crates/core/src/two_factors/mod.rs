//! 2-factors of cubic graphs, enumerated as complements of perfect matchings,
//! and the parity classifiers built on them.

mod matching;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph_core::io::to_graph6;
use crate::graph_core::{decompose, is_connected, CircuitDecomposition, Graph, GraphError};

use matching::Matcher;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoFactorError {
    #[error("edge set is not a perfect matching: {0}")]
    NotPerfectMatching(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Default matching budget for full enumeration.
pub const DEFAULT_FULL_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumMode {
    Full,
    EarlyExitParity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    /// `None` is unlimited.
    pub max_matchings: Option<u64>,
    pub mode: EnumMode,
}

impl EnumBudget {
    pub fn full() -> Self {
        EnumBudget {
            max_matchings: Some(DEFAULT_FULL_BUDGET),
            mode: EnumMode::Full,
        }
    }

    pub fn parity() -> Self {
        EnumBudget {
            max_matchings: None,
            mode: EnumMode::EarlyExitParity,
        }
    }

    pub fn with_max(mut self, max: Option<u64>) -> Self {
        self.max_matchings = max;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSummary {
    pub visited: u64,
    pub budget_exceeded: bool,
    pub stopped_by_visitor: bool,
}

/// Visits every perfect matching of `g` once, in reference order.
///
/// The visitor receives the matching's edge indices in the order they were
/// chosen and may stop the enumeration by returning `Break`.
pub fn enumerate_perfect_matchings<F>(g: &Graph, budget: &EnumBudget, mut visit: F) -> EnumSummary
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut summary = EnumSummary {
        visited: 0,
        budget_exceeded: false,
        stopped_by_visitor: false,
    };
    let Some(mut matcher) = Matcher::new(g) else {
        return summary;
    };
    let max = budget.max_matchings;
    let _ = matcher.search(0, &mut |m: &[usize]| {
        if max.is_some_and(|max| summary.visited >= max) {
            summary.budget_exceeded = true;
            return ControlFlow::Break(());
        }
        summary.visited += 1;
        let flow = visit(m);
        if flow.is_break() {
            summary.stopped_by_visitor = true;
        }
        flow
    });
    summary
}

/// A set of edges covering every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatching(Vec<usize>);

impl PerfectMatching {
    pub fn new(g: &Graph, edges: &[usize]) -> Result<Self, TwoFactorError> {
        let mut hit = vec![false; g.vertex_count()];
        for &e in edges {
            if e >= g.edge_count() {
                return Err(TwoFactorError::NotPerfectMatching(format!("edge {e} out of range")));
            }
            let (a, b) = g.edge(e);
            for v in [a, b] {
                if std::mem::replace(&mut hit[v], true) {
                    return Err(TwoFactorError::NotPerfectMatching(format!(
                        "vertex {v} covered twice"
                    )));
                }
            }
        }
        if let Some(v) = hit.iter().position(|h| !h) {
            return Err(TwoFactorError::NotPerfectMatching(format!("vertex {v} uncovered")));
        }
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        Ok(PerfectMatching(sorted))
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(count: usize) -> Parity {
        if count % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// A spanning 2-regular subgraph with its circuit decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    pub circuit_count: usize,
    pub parity: Parity,
    pub circuit_lengths: Vec<usize>,
    /// Edge indices, ascending.
    #[serde(skip)]
    pub edge_indices: Vec<usize>,
    /// Edges as vertex pairs, in edge-index order.
    pub edges: Vec<(usize, usize)>,
    pub circuits: Vec<Vec<usize>>,
}

impl TwoFactor {
    /// Builds a 2-factor from a spanning 2-regular edge subset.
    pub fn from_edges(g: &Graph, edges: &[usize]) -> Result<TwoFactor, GraphError> {
        let d: CircuitDecomposition = decompose(g, edges)?;
        let mut edge_indices = edges.to_vec();
        edge_indices.sort_unstable();
        edge_indices.dedup();
        Ok(TwoFactor {
            circuit_count: d.circuit_count(),
            parity: Parity::of(d.circuit_count()),
            circuit_lengths: d.lengths(),
            edges: edge_indices.iter().map(|&e| g.edge(e)).collect(),
            edge_indices,
            circuits: d.circuits,
        })
    }
}

/// The 2-factor `E(g) \ m` of a cubic graph.
pub fn two_factor_of(g: &Graph, m: &PerfectMatching) -> Result<TwoFactor, TwoFactorError> {
    g.check_cubic()?;
    let rest = complement(g, m.edges());
    Ok(TwoFactor::from_edges(g, &rest)?)
}

fn complement(g: &Graph, matching: &[usize]) -> Vec<usize> {
    let mut used = vec![false; g.edge_count()];
    for &e in matching {
        used[e] = true;
    }
    (0..g.edge_count()).filter(|&e| !used[e]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    /// Every 2-factor was enumerated.
    Complete,
    /// Both parities were witnessed and enumeration stopped.
    EarlyExit,
    /// The matching budget ran out; the verdict is inconclusive.
    BudgetExceeded,
}

/// Classification flags. `None` means the enumeration did not decide the flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub has_two_factor: Option<bool>,
    pub two_factor_hamiltonian: Option<bool>,
    pub two_factor_isomorphic: Option<bool>,
    pub pseudo_two_factor_isomorphic: Option<bool>,
}

impl Flags {
    /// 2FH ⇒ 2FI ⇒ pseudo-2FI ⇒ has a 2-factor, for every flag decided true.
    pub fn implications_hold(&self) -> bool {
        let t = |f: Option<bool>| f == Some(true);
        (!t(self.two_factor_hamiltonian) || t(self.two_factor_isomorphic))
            && (!t(self.two_factor_isomorphic) || t(self.pseudo_two_factor_isomorphic))
            && (!t(self.pseudo_two_factor_isomorphic) || t(self.has_two_factor))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    /// graph6 encoding of the classified graph.
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub mode: EnumMode,
    pub status: ReportStatus,
    pub total_two_factors: Option<u64>,
    /// Number of 2-factors per circuit count.
    pub by_circuit_count: Option<BTreeMap<usize, u64>>,
    /// Number of 2-factors per sorted circuit-length profile, keyed like `"6,6,6"`.
    pub by_circuit_lengths: Option<BTreeMap<String, u64>>,
    pub flags: Flags,
    /// The shared parity of all 2-factors when the graph is pseudo 2-factor isomorphic.
    pub constant_parity: Option<Parity>,
    /// Odd-parity witness first, then even-parity witness. Serialized as edge lists.
    #[serde(serialize_with = "witness_edges")]
    pub witnesses: Vec<TwoFactor>,
}

fn witness_edges<S: serde::Serializer>(w: &[TwoFactor], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(|f| &f.edges))
}

impl ClassificationReport {
    pub fn witness_pair(&self) -> Option<(&TwoFactor, &TwoFactor)> {
        match self.witnesses.as_slice() {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_pseudo_two_factor_isomorphic(&self) -> Option<bool> {
        self.flags.pseudo_two_factor_isomorphic
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Classifies a connected cubic graph, single-threaded.
pub fn classify(g: &Graph, budget: &EnumBudget) -> Result<ClassificationReport, ClassifyError> {
    classify_with_threads(g, budget, 1)
}

/// Classifies with up to `threads` workers. Output is identical for every thread count.
pub fn classify_with_threads(
    g: &Graph,
    budget: &EnumBudget,
    threads: usize,
) -> Result<ClassificationReport, ClassifyError> {
    g.check_cubic()?;
    if !is_connected(g) {
        return Err(GraphError::DisconnectedInput.into());
    }
    let tasks = task_prefixes(g, threads);
    let results: Vec<TaskResult> = if threads <= 1 || tasks.len() <= 1 {
        tasks.iter().map(|p| run_task(g, p, budget)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| tasks.par_iter().map(|p| run_task(g, p, budget)).collect())
    };
    Ok(merge(g, budget, results))
}

/// A pair of 2-factors with different circuit-count parity, if one exists.
pub fn find_parity_witnesses(g: &Graph) -> Option<(TwoFactor, TwoFactor)> {
    let report = classify(g, &EnumBudget::parity()).ok()?;
    let mut w = report.witnesses.into_iter();
    match (w.next(), w.next()) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    }
}

fn task_prefixes(g: &Graph, threads: usize) -> Vec<Vec<usize>> {
    if threads <= 1 {
        return vec![Vec::new()];
    }
    let Some(mut matcher) = Matcher::new(g) else {
        return vec![Vec::new()];
    };
    let mut depth = 1;
    loop {
        let f = matcher.frontier(depth);
        if f.len() >= 4 * threads || depth >= 12 || f.is_empty() {
            return if f.is_empty() { vec![Vec::new()] } else { f };
        }
        depth += 1;
    }
}

#[derive(Default)]
struct TaskResult {
    visited: u64,
    // enumerated the whole subtree
    complete: bool,
    exceeded: bool,
    by_count: BTreeMap<usize, u64>,
    by_profile: BTreeMap<Vec<usize>, u64>,
    first_odd: Option<(u64, Vec<usize>)>,
    first_even: Option<(u64, Vec<usize>)>,
}

fn run_task(g: &Graph, prefix: &[usize], budget: &EnumBudget) -> TaskResult {
    let mut r = TaskResult::default();
    let Some(mut matcher) = Matcher::new(g) else {
        r.complete = true;
        return r;
    };
    if !matcher.replay(prefix) {
        r.complete = true;
        return r;
    }
    let mut scratch = CircuitScratch::new(g);
    let flow = matcher.search(0, &mut |m: &[usize]| {
        if budget.max_matchings.is_some_and(|max| r.visited >= max) {
            r.exceeded = true;
            return ControlFlow::Break(());
        }
        let index = r.visited;
        r.visited += 1;
        let lengths = scratch.complement_circuits(m);
        let count = lengths.len();
        *r.by_count.entry(count).or_default() += 1;
        *r.by_profile.entry(lengths).or_default() += 1;
        let slot = match Parity::of(count) {
            Parity::Odd => &mut r.first_odd,
            Parity::Even => &mut r.first_even,
        };
        if slot.is_none() {
            let mut sorted = m.to_vec();
            sorted.sort_unstable();
            *slot = Some((index, sorted));
        }
        if budget.mode == EnumMode::EarlyExitParity && r.first_odd.is_some() && r.first_even.is_some()
        {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    r.complete = flow.is_continue();
    r
}

/// Replays the serial visiting order over task results taken in prefix order.
fn merge(g: &Graph, budget: &EnumBudget, results: Vec<TaskResult>) -> ClassificationReport {
    let max = budget.max_matchings;
    let mut pos: u64 = 0;
    let mut first_odd: Option<(u64, Vec<usize>)> = None;
    let mut first_even: Option<(u64, Vec<usize>)> = None;
    let mut by_count: BTreeMap<usize, u64> = BTreeMap::new();
    let mut by_profile: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut status = ReportStatus::Complete;
    for r in results {
        if first_odd.is_none() {
            first_odd = r.first_odd.map(|(i, m)| (pos + i, m));
        }
        if first_even.is_none() {
            first_even = r.first_even.map(|(i, m)| (pos + i, m));
        }
        if budget.mode == EnumMode::EarlyExitParity {
            if let (Some((i, _)), Some((j, _))) = (&first_odd, &first_even) {
                let stop = (*i).max(*j);
                status = if max.is_some_and(|max| stop >= max) {
                    ReportStatus::BudgetExceeded
                } else {
                    ReportStatus::EarlyExit
                };
                break;
            }
        }
        if r.exceeded || max.is_some_and(|max| pos + r.visited > max) {
            status = ReportStatus::BudgetExceeded;
            break;
        }
        debug_assert!(r.complete);
        pos += r.visited;
        for (k, c) in r.by_count {
            *by_count.entry(k).or_default() += c;
        }
        for (k, c) in r.by_profile {
            *by_profile.entry(k).or_default() += c;
        }
    }

    let factor = |m: &[usize]| {
        two_factor_of(g, &PerfectMatching::new(g, m).expect("enumerated matching"))
            .expect("complement of a perfect matching in a cubic graph")
    };
    let mut report = ClassificationReport {
        graph: to_graph6(g),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        mode: budget.mode,
        status,
        total_two_factors: None,
        by_circuit_count: None,
        by_circuit_lengths: None,
        flags: Flags {
            has_two_factor: None,
            two_factor_hamiltonian: None,
            two_factor_isomorphic: None,
            pseudo_two_factor_isomorphic: None,
        },
        constant_parity: None,
        witnesses: Vec::new(),
    };
    match status {
        ReportStatus::BudgetExceeded => {
            // more matchings exist than the budget allows, so at least one
            report.flags.has_two_factor = Some(true);
        }
        ReportStatus::EarlyExit => {
            report.flags = Flags {
                has_two_factor: Some(true),
                two_factor_hamiltonian: Some(false),
                two_factor_isomorphic: Some(false),
                pseudo_two_factor_isomorphic: Some(false),
            };
            report.witnesses = vec![
                factor(&first_odd.unwrap().1),
                factor(&first_even.unwrap().1),
            ];
        }
        ReportStatus::Complete => {
            let total = pos;
            let has = total > 0;
            let n = g.vertex_count();
            let both = first_odd.is_some() && first_even.is_some();
            report.flags = Flags {
                has_two_factor: Some(has),
                two_factor_hamiltonian: Some(has && by_profile.keys().all(|p| p == &[n])),
                two_factor_isomorphic: Some(has && by_profile.len() == 1),
                pseudo_two_factor_isomorphic: Some(has && !both),
            };
            if has && !both {
                report.constant_parity = Some(if first_odd.is_some() { Parity::Odd } else { Parity::Even });
            }
            if both {
                report.witnesses = vec![
                    factor(&first_odd.unwrap().1),
                    factor(&first_even.unwrap().1),
                ];
            }
            if budget.mode == EnumMode::Full || !both {
                report.total_two_factors = Some(total);
                report.by_circuit_count = Some(by_count);
                report.by_circuit_lengths = Some(
                    by_profile
                        .into_iter()
                        .map(|(p, c)| (profile_key(&p), c))
                        .collect(),
                );
            }
        }
    }
    report
}

fn profile_key(lengths: &[usize]) -> String {
    lengths
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Reusable buffers for measuring the circuits of a matching's complement.
struct CircuitScratch<'g> {
    g: &'g Graph,
    in_matching: Vec<bool>,
    visited: Vec<bool>,
}

impl<'g> CircuitScratch<'g> {
    fn new(g: &'g Graph) -> Self {
        CircuitScratch {
            g,
            in_matching: vec![false; g.edge_count()],
            visited: vec![false; g.vertex_count()],
        }
    }

    /// Sorted circuit lengths of `E(g) \ matching`; `g` must be cubic.
    fn complement_circuits(&mut self, matching: &[usize]) -> Vec<usize> {
        for &e in matching {
            self.in_matching[e] = true;
        }
        self.visited.fill(false);
        let mut lengths = Vec::new();
        for start in 0..self.g.vertex_count() {
            if self.visited[start] {
                continue;
            }
            let mut len = 0;
            let mut prev_edge = usize::MAX;
            let mut v = start;
            loop {
                self.visited[v] = true;
                len += 1;
                let &(w, e) = self
                    .g
                    .incident(v)
                    .iter()
                    .find(|&&(_, e)| !self.in_matching[e] && e != prev_edge)
                    .expect("two non-matching edges per vertex");
                prev_edge = e;
                v = w;
                if v == start {
                    break;
                }
            }
            lengths.push(len);
        }
        for &e in matching {
            self.in_matching[e] = false;
        }
        lengths.sort_unstable();
        lengths
    }
}

#[cfg(test)]
mod tests;
