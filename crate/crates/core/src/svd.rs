//! Split-modulator solvers: 2^k guess algorithms for IDS and EDS, and a
//! branch-and-reduce search for EDS whose measure is the number of blue
//! (still pickable) modulator vertices and whose branching rules each drop it
//! by two.

use crate::graph::{Graph, SplitPartition, Vertex, VertexSet};
use crate::modulator::ModulatorKind;
use crate::oracle::check_solution;
use crate::problem::{DomInstance, DomSolution, SolveStats, SolverError, Status, Variant};

fn split_of(inst: &DomInstance) -> Result<SplitPartition, SolverError> {
    if inst.modulator.kind != ModulatorKind::Svd {
        return Err(SolverError::UnsupportedCombination {
            variant: inst.variant,
            kind: inst.modulator.kind,
        });
    }
    crate::problem::check_modulator_size(inst.modulator.size())?;
    inst.graph
        .split_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))
}

fn finish(
    inst: &DomInstance,
    best: Option<(usize, VertexSet)>,
    stats: SolveStats,
) -> Result<DomSolution, SolverError> {
    match best {
        Some((size, vertices)) if size <= inst.budget => {
            let guess = vertices.intersection(&inst.modulator.vertices);
            Ok(DomSolution {
                status: Status::Feasible,
                size,
                vertices,
                guess_used: Some(guess),
                stats,
            })
        }
        _ => Ok(DomSolution::infeasible(stats)),
    }
}

fn offer(best: &mut Option<(usize, VertexSet)>, candidate: VertexSet) {
    let size = candidate.len();
    if best.as_ref().is_none_or(|(b, _)| size < *b) {
        *best = Some((size, candidate));
    }
}

/// Minimum independent dominating set with a split modulator. Per independent
/// guess S' there are |C|+1 completions: one clique vertex or none, plus all
/// surviving independent-side vertices.
pub fn solve_ids_svd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    assert_eq!(inst.variant, Variant::Ids);
    let split = split_of(inst)?;
    let g = &inst.graph;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let spec = inst.spec();
    let mut stats = SolveStats::default();
    let mut best = None;

    for mask in crate::cvd::guess_order(s.len()) {
        let s_prime: VertexSet = s
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if !crate::oracle::is_independent(g, &s_prime) {
            continue;
        }
        stats.guesses += 1;
        let dominated = g.closed_neighborhood_of_set(&s_prime);
        let i_alive = split.independent_side.difference(&dominated);
        let c_alive = split.clique_side.difference(&dominated);

        let candidate = s_prime.union(&i_alive);
        if check_solution(g, &candidate, spec) {
            offer(&mut best, candidate);
        }
        for v in c_alive.iter() {
            let picked = VertexSet::singleton(v);
            let candidate = s_prime
                .union(&picked)
                .union(&i_alive.difference(&g.closed_neighborhood(v)));
            if check_solution(g, &candidate, spec) {
                offer(&mut best, candidate);
            }
        }
    }
    finish(inst, best, stats)
}

/// Vertices at distance exactly two from v in the subgraph induced by
/// `alive`.
fn dist2_within(g: &Graph, v: Vertex, alive: &[bool]) -> Vec<Vertex> {
    let mut ring1 = vec![false; g.vertex_count()];
    for &u in g.neighbors(v) {
        if alive[u] {
            ring1[u] = true;
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    for u in 0..g.vertex_count() {
        if !ring1[u] {
            continue;
        }
        for &w in g.neighbors(u) {
            if alive[w] && w != v && !ring1[w] && !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Minimum efficient dominating set with a split modulator via plain
/// guessing: delete N[S'], redden the distance-two layer, try every clique
/// completion, force all surviving un-reddened independent vertices into the
/// solution, and keep whatever passes the full-graph checker.
pub fn solve_eds_svd_simple(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    assert_eq!(inst.variant, Variant::Eds);
    let split = split_of(inst)?;
    let g = &inst.graph;
    let n = g.vertex_count();
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let spec = inst.spec();
    let mut stats = SolveStats::default();
    let mut best = None;

    for mask in crate::cvd::guess_order(s.len()) {
        let s_prime: VertexSet = s
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        stats.guesses += 1;
        let red0 = g.n_equal_2(&s_prime);
        let deleted = g.closed_neighborhood_of_set(&s_prime);
        let mut alive0 = vec![true; n];
        for v in deleted.iter() {
            alive0[v] = false;
        }

        let surviving_i = |alive: &[bool], red: &dyn Fn(Vertex) -> bool| -> VertexSet {
            split
                .independent_side
                .iter()
                .filter(|&u| alive[u] && !red(u))
                .collect()
        };

        // No clique pick: surviving non-red independent vertices are forced.
        let candidate = s_prime.union(&surviving_i(&alive0, &|u| red0.contains(u)));
        if check_solution(g, &candidate, spec) {
            offer(&mut best, candidate);
        }

        for v in split.clique_side.iter() {
            if !alive0[v] || red0.contains(v) {
                continue;
            }
            let n2v = dist2_within(g, v, &alive0);
            let mut alive1 = alive0.clone();
            alive1[v] = false;
            for &u in g.neighbors(v) {
                alive1[u] = false;
            }
            let red1 = |u: Vertex| red0.contains(u) || n2v.binary_search(&u).is_ok();
            let candidate = s_prime
                .union(&VertexSet::singleton(v))
                .union(&surviving_i(&alive1, &red1));
            if check_solution(g, &candidate, spec) {
                offer(&mut best, candidate);
            }
        }
    }
    finish(inst, best, stats)
}

#[derive(Clone)]
struct SearchState {
    alive: Vec<bool>,
    red: Vec<bool>,
    solution: Vec<Vertex>,
    phase2_done: bool,
}

impl SearchState {
    fn fresh(n: usize) -> SearchState {
        SearchState {
            alive: vec![true; n],
            red: vec![false; n],
            solution: Vec::new(),
            phase2_done: false,
        }
    }

    fn blue(&self, v: Vertex) -> bool {
        self.alive[v] && !self.red[v]
    }

    /// Adds v to the partial solution, removes its closed neighborhood from
    /// the residual graph and reddens its distance-two layer (computed in the
    /// residual graph first, since deleted vertices cannot mediate
    /// domination).
    fn pick(&mut self, g: &Graph, v: Vertex) {
        assert!(self.blue(v), "picked vertex must be blue");
        self.solution.push(v);
        for w in dist2_within(g, v, &self.alive) {
            self.red[w] = true;
        }
        self.alive[v] = false;
        for &u in g.neighbors(v) {
            self.alive[u] = false;
        }
    }
}

struct BranchCtx<'a> {
    g: &'a Graph,
    in_s: Vec<bool>,
    in_c: Vec<bool>,
    in_i: Vec<bool>,
    spec: crate::problem::VariantSpec,
    best: Option<(usize, VertexSet)>,
    branch_nodes: u64,
}

impl BranchCtx<'_> {
    fn mu(&self, st: &SearchState) -> usize {
        (0..self.g.vertex_count())
            .filter(|&v| self.in_s[v] && st.blue(v))
            .count()
    }

    fn blue_neighbors(&self, st: &SearchState, v: Vertex) -> Vec<Vertex> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| st.blue(u))
            .collect()
    }

    /// Some residual path of length at most two joins x and y.
    fn within_dist2(&self, st: &SearchState, x: Vertex, y: Vertex) -> bool {
        self.g.has_edge(x, y)
            || self
                .g
                .neighbors(x)
                .iter()
                .any(|&m| st.alive[m] && self.g.has_edge(m, y))
    }

    fn explore(&mut self, mut st: SearchState) {
        loop {
            if st.alive.iter().all(|&a| !a) {
                let d: VertexSet = st.solution.iter().copied().collect();
                if check_solution(self.g, &d, self.spec) {
                    offer(&mut self.best, d);
                }
                return;
            }
            // A red vertex with no blue neighbor can never be dominated.
            let doomed = (0..self.g.vertex_count())
                .any(|v| st.alive[v] && st.red[v] && self.blue_neighbors(&st, v).is_empty());
            if doomed {
                return;
            }
            if let Some((x, y)) = self.find_blue_pair(&st) {
                self.branch_on_pair(st, x, y);
                return;
            }
            if !st.phase2_done {
                self.branch_on_clique(st);
                return;
            }
            if self.apply_reduction(&mut st) {
                continue;
            }
            if let Some((u, v)) = self.find_br2_case1(&st) {
                self.branch_case1(st, u, v);
                return;
            }
            if let Some((u, v)) = self.find_br2_case2(&st) {
                self.branch_case2(st, u, v);
                return;
            }
            if let Some((u, v)) = self.find_endgame_pair(&st) {
                // Remaining blue pairs have equal neighborhoods apart from
                // each other; either endpoint works, take the smaller id.
                st.pick(self.g, u.min(v));
                continue;
            }
            unreachable!("no rule applies to a live branch state");
        }
    }

    /// Smallest pair of blue modulator vertices at residual distance <= 2.
    fn find_blue_pair(&self, st: &SearchState) -> Option<(Vertex, Vertex)> {
        let blues: Vec<Vertex> = (0..self.g.vertex_count())
            .filter(|&v| self.in_s[v] && st.blue(v))
            .collect();
        for (i, &x) in blues.iter().enumerate() {
            for &y in &blues[i + 1..] {
                if self.within_dist2(st, x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    fn branch_on_pair(&mut self, st: SearchState, x: Vertex, y: Vertex) {
        self.branch_nodes += 1;
        let mu0 = self.mu(&st);
        for pick in [x, y] {
            let mut child = st.clone();
            child.pick(self.g, pick);
            assert!(
                self.mu(&child) + 2 <= mu0,
                "pair branch must drop the measure by two"
            );
            self.explore(child);
        }
        let mut child = st;
        child.red[x] = true;
        child.red[y] = true;
        assert!(self.mu(&child) + 2 <= mu0);
        self.explore(child);
    }

    /// One-time choice over the clique side: pick one blue clique vertex or
    /// redden the whole side.
    fn branch_on_clique(&mut self, st: SearchState) {
        let mu0 = self.mu(&st);
        let choices: Vec<Vertex> = (0..self.g.vertex_count())
            .filter(|&v| self.in_c[v] && st.blue(v))
            .collect();
        for v in choices {
            let mut child = st.clone();
            child.pick(self.g, v);
            child.phase2_done = true;
            assert!(
                self.mu(&child) <= mu0,
                "clique choice must not raise the measure"
            );
            self.explore(child);
        }
        let mut child = st;
        for v in 0..self.g.vertex_count() {
            if self.in_c[v] && child.alive[v] {
                child.red[v] = true;
            }
        }
        child.phase2_done = true;
        assert!(self.mu(&child) <= mu0);
        self.explore(child);
    }

    /// Reduction rules: a red vertex with a single blue neighbor forces that
    /// neighbor; a blue vertex with no blue neighbor forces itself; a blue
    /// modulator vertex with two blue independent-side neighbors forces
    /// itself. Returns true when something fired.
    fn apply_reduction(&mut self, st: &mut SearchState) -> bool {
        let mu0 = self.mu(st);
        let n = self.g.vertex_count();
        for v in 0..n {
            if st.alive[v] && st.red[v] {
                if let [y] = self.blue_neighbors(st, v)[..] {
                    st.pick(self.g, y);
                    assert!(self.mu(st) <= mu0);
                    return true;
                }
            }
        }
        for v in 0..n {
            if st.blue(v) && self.blue_neighbors(st, v).is_empty() {
                st.pick(self.g, v);
                assert!(self.mu(st) <= mu0);
                return true;
            }
        }
        for v in 0..n {
            if self.in_s[v] && st.blue(v) {
                let blue_i = self
                    .blue_neighbors(st, v)
                    .iter()
                    .filter(|&&u| self.in_i[u])
                    .count();
                if blue_i >= 2 {
                    st.pick(self.g, v);
                    assert!(self.mu(st) <= mu0);
                    return true;
                }
            }
        }
        false
    }

    /// Smallest red pivot with two blue independent-side neighbors.
    fn find_br2_case1(&self, st: &SearchState) -> Option<(Vertex, Vertex)> {
        for x in 0..self.g.vertex_count() {
            if !(st.alive[x] && st.red[x] && (self.in_s[x] || self.in_c[x])) {
                continue;
            }
            let blue_i: Vec<Vertex> = self
                .blue_neighbors(st, x)
                .into_iter()
                .filter(|&u| self.in_i[u])
                .collect();
            if blue_i.len() >= 2 {
                return Some((blue_i[0], blue_i[1]));
            }
        }
        None
    }

    /// Smallest red pivot with one blue independent-side neighbor and one
    /// non-adjacent blue modulator neighbor.
    fn find_br2_case2(&self, st: &SearchState) -> Option<(Vertex, Vertex)> {
        for x in 0..self.g.vertex_count() {
            if !(st.alive[x] && st.red[x] && (self.in_s[x] || self.in_c[x])) {
                continue;
            }
            let blues = self.blue_neighbors(st, x);
            let u = blues.iter().copied().find(|&u| self.in_i[u]);
            let v = blues.iter().copied().find(|&v| self.in_s[v]);
            if let (Some(u), Some(v)) = (u, v) {
                if !self.g.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// The unique blue neighbor a newly reddened vertex leaves as its only
    /// possible dominator; None when there is none and the branch dies.
    fn forced_dominator(&self, st: &SearchState, w: Vertex) -> Option<Vertex> {
        let blues = self.blue_neighbors(st, w);
        assert!(blues.len() <= 1, "forcing requires a unique blue neighbor");
        blues.first().copied()
    }

    /// Both u, v blue in I with a shared red pivot: branch on which of them
    /// is picked, forcing the unique dominator of the other.
    fn branch_case1(&mut self, st: SearchState, u: Vertex, v: Vertex) {
        self.branch_nodes += 1;
        let mu0 = self.mu(&st);
        for (first, other) in [(u, v), (v, u)] {
            let mut child = st.clone();
            child.pick(self.g, first);
            // The other endpoint sits at distance two, so the pick reddened it.
            assert!(!child.blue(other));
            if child.alive[other] {
                if let Some(z) = self.forced_dominator(&child, other) {
                    child.pick(self.g, z);
                    assert!(self.mu(&child) + 2 <= mu0);
                    self.explore(child);
                }
            }
        }
        let mut child = st;
        child.red[u] = true;
        child.red[v] = true;
        let Some(y) = self.forced_dominator(&child, u) else {
            return;
        };
        child.pick(self.g, y);
        if !child.alive[v] {
            // y also dominated v: the degenerate shared-dominator case.
            assert!(self.mu(&child) < mu0);
            self.explore(child);
            return;
        }
        let Some(z) = self.forced_dominator(&child, v) else {
            return;
        };
        child.pick(self.g, z);
        assert!(self.mu(&child) + 2 <= mu0);
        self.explore(child);
    }

    /// u blue in I, v blue in S, non-adjacent, sharing a red pivot.
    fn branch_case2(&mut self, st: SearchState, u: Vertex, v: Vertex) {
        self.branch_nodes += 1;
        let mu0 = self.mu(&st);
        {
            // u picked, v renounced: v's unique dominator is forced.
            let mut child = st.clone();
            child.pick(self.g, u);
            if child.alive[v] {
                child.red[v] = true;
                if let Some(z) = self.forced_dominator(&child, v) {
                    child.pick(self.g, z);
                    assert!(self.mu(&child) + 2 <= mu0);
                    self.explore(child);
                }
            }
        }
        {
            // u renounced: its unique dominator y and v itself are forced.
            let mut child = st.clone();
            child.red[u] = true;
            if let Some(y) = self.forced_dominator(&child, u) {
                child.pick(self.g, v);
                if child.blue(y) {
                    child.pick(self.g, y);
                    assert!(self.mu(&child) + 2 <= mu0);
                    self.explore(child);
                }
            }
        }
        {
            // Both renounced: both unique dominators are forced.
            let mut child = st;
            child.red[u] = true;
            child.red[v] = true;
            let Some(y) = self.forced_dominator(&child, u) else {
                return;
            };
            let Some(z) = self.forced_dominator(&child, v) else {
                return;
            };
            child.pick(self.g, z);
            if child.blue(y) {
                child.pick(self.g, y);
                assert!(self.mu(&child) + 2 <= mu0);
                self.explore(child);
            }
        }
    }

    /// Smallest adjacent blue pair across the modulator and the independent
    /// side; the equal-neighborhood endgame.
    fn find_endgame_pair(&self, st: &SearchState) -> Option<(Vertex, Vertex)> {
        for u in 0..self.g.vertex_count() {
            if !(self.in_s[u] && st.blue(u)) {
                continue;
            }
            if let Some(v) = self
                .blue_neighbors(st, u)
                .into_iter()
                .find(|&v| self.in_i[v])
            {
                return Some((u, v));
            }
        }
        None
    }
}

/// Minimum efficient dominating set with a split modulator by
/// branch-and-reduce. Matches `solve_eds_svd_simple` on every instance; the
/// number of branching-rule applications is bounded by
/// 3^ceil(k/2) * (|C|+1).
pub fn solve_eds_svd_branch(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    assert_eq!(inst.variant, Variant::Eds);
    let split = split_of(inst)?;
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut in_s = vec![false; n];
    for v in inst.modulator.vertices.iter() {
        in_s[v] = true;
    }
    let mut in_c = vec![false; n];
    for v in split.clique_side.iter() {
        in_c[v] = true;
    }
    let mut in_i = vec![false; n];
    for v in split.independent_side.iter() {
        in_i[v] = true;
    }

    let mut ctx = BranchCtx {
        g,
        in_s,
        in_c,
        in_i,
        spec: inst.spec(),
        best: None,
        branch_nodes: 0,
    };
    ctx.explore(SearchState::fresh(n));

    let k = inst.modulator.vertices.len();
    let bound = 3u64.pow(k.div_ceil(2) as u32) * (split.clique_side.len() as u64 + 1);
    assert!(
        ctx.branch_nodes <= bound,
        "branch nodes {} exceed 3^ceil(k/2)*(|C|+1) = {bound}",
        ctx.branch_nodes
    );

    let stats = SolveStats {
        branch_nodes: ctx.branch_nodes,
        ..SolveStats::default()
    };
    let best = ctx.best;
    finish(inst, best, stats)
}
