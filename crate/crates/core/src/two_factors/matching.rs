//! Backtracking perfect-matching enumeration with forced-edge propagation.
//!
//! Branching always happens at the lowest-index uncovered vertex, over its
//! available incident edges in edge-index order. After every choice, any
//! uncovered vertex left with a single available edge takes it, and one left
//! with none prunes the branch. The resulting visiting order is the reference
//! order; parallel runs split the tree into prefixes taken in that same order.

use std::ops::ControlFlow;

use crate::graph_core::Graph;

pub(crate) struct Matcher<'g> {
    g: &'g Graph,
    covered: Vec<bool>,
    // uncovered-neighbor count, maintained for uncovered vertices
    avail: Vec<u32>,
    matching: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'g> Matcher<'g> {
    /// A matcher with the initial forced edges applied, or `None` if they already conflict.
    pub(crate) fn new(g: &'g Graph) -> Option<Self> {
        let n = g.vertex_count();
        let mut m = Matcher {
            g,
            covered: vec![false; n],
            avail: (0..n).map(|v| g.degree(v) as u32).collect(),
            matching: Vec::with_capacity(n / 2),
            trail: Vec::with_capacity(n),
            queue: Vec::new(),
        };
        if n % 2 == 1 {
            return None;
        }
        m.queue.extend((0..n).filter(|&v| g.degree(v) <= 1));
        m.propagate().then_some(m)
    }

    fn cover(&mut self, v: usize) {
        self.covered[v] = true;
        self.trail.push(v);
        for &(w, _) in self.g.incident(v) {
            if !self.covered[w] {
                self.avail[w] -= 1;
                if self.avail[w] <= 1 {
                    self.queue.push(w);
                }
            }
        }
    }

    fn uncover_to(&mut self, trail_len: usize, matching_len: usize) {
        while self.trail.len() > trail_len {
            let v = self.trail.pop().unwrap();
            self.covered[v] = false;
            for &(w, _) in self.g.incident(v) {
                if !self.covered[w] {
                    self.avail[w] += 1;
                }
            }
        }
        self.matching.truncate(matching_len);
    }

    fn take(&mut self, e: usize) {
        let (a, b) = self.g.edge(e);
        self.matching.push(e);
        self.cover(a);
        self.cover(b);
    }

    fn propagate(&mut self) -> bool {
        while let Some(w) = self.queue.pop() {
            if self.covered[w] {
                continue;
            }
            match self.avail[w] {
                0 => {
                    self.queue.clear();
                    return false;
                }
                1 => {
                    let &(_, e) = self
                        .g
                        .incident(w)
                        .iter()
                        .find(|&&(x, _)| !self.covered[x])
                        .expect("one available edge");
                    self.take(e);
                }
                _ => {}
            }
        }
        true
    }

    /// Applies a branching choice and its consequences. Returns false on conflict.
    fn choose(&mut self, e: usize) -> bool {
        self.queue.clear();
        self.take(e);
        self.propagate()
    }

    /// Replays a prefix of branching choices from the initial state.
    pub(crate) fn replay(&mut self, prefix: &[usize]) -> bool {
        prefix.iter().all(|&e| self.choose(e))
    }

    fn first_uncovered(&self, from: usize) -> Option<usize> {
        (from..self.covered.len()).find(|&v| !self.covered[v])
    }

    /// Depth-first enumeration below the current state.
    pub(crate) fn search<F>(&mut self, from: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(v) = self.first_uncovered(from) else {
            return visit(&self.matching);
        };
        let choices: Vec<usize> = self
            .g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| !self.covered[w])
            .map(|&(_, e)| e)
            .collect();
        for e in choices {
            let (t, m) = (self.trail.len(), self.matching.len());
            if self.choose(e) {
                let flow = self.search(v + 1, visit);
                if flow.is_break() {
                    self.uncover_to(t, m);
                    return flow;
                }
            }
            self.uncover_to(t, m);
        }
        ControlFlow::Continue(())
    }

    /// Branching prefixes at `depth` in reference order. Complete matchings
    /// reached at a shallower depth appear as their own (shorter) prefix.
    pub(crate) fn frontier(&mut self, depth: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_frontier(0, depth, &mut path, &mut out);
        out
    }

    fn collect_frontier(
        &mut self,
        from: usize,
        depth: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(v) = self.first_uncovered(from) else {
            out.push(path.clone());
            return;
        };
        if depth == 0 {
            out.push(path.clone());
            return;
        }
        let choices: Vec<usize> = self
            .g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| !self.covered[w])
            .map(|&(_, e)| e)
            .collect();
        for e in choices {
            let (t, m) = (self.trail.len(), self.matching.len());
            if self.choose(e) {
                path.push(e);
                self.collect_frontier(v + 1, depth - 1, path, out);
                path.pop();
            }
            self.uncover_to(t, m);
        }
    }
}
