//! Guess-and-reduce solvers for cluster modulators: enumerate the solution's
//! intersection S' with the modulator S, reduce what remains to a partitioned
//! cover instance over the cliques of G∖S, and lift the cover witness back to
//! a vertex set.

use crate::cover::{
    solve_escp, solve_exact_one_scp, solve_scp, solve_set_cover, solve_wsmp_with_criticals,
    BlockMode, CoverInstance, CoverMode,
};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::modulator::ModulatorKind;
use crate::oracle::check_solution;
use crate::problem::{DomInstance, DomSolution, SolveStats, SolverError, Status, Variant};

/// All subsets of 0..k as bitmasks, ordered by ascending popcount and then
/// ascending encoding. The solvers keep the first optimum found, so this
/// order fixes `guess_used` deterministically.
pub(crate) fn guess_order(k: usize) -> Vec<u64> {
    assert!(k < 63);
    let mut masks: Vec<u64> = (0..1u64 << k).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
}

fn subset_from_mask(s: &[Vertex], mask: u64) -> VertexSet {
    s.iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// Dense universe indexing: position of each universe vertex, or None.
struct UniverseIndex {
    vertices: Vec<Vertex>,
}

impl UniverseIndex {
    fn new(universe: &VertexSet) -> UniverseIndex {
        UniverseIndex {
            vertices: universe.iter().collect(),
        }
    }

    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn mask_of_neighbors(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .filter_map(|&u| self.vertices.binary_search(&u).ok())
            .collect()
    }
}

fn require_kind(inst: &DomInstance, variant: &[Variant]) -> Result<(), SolverError> {
    if inst.modulator.kind != ModulatorKind::Cvd {
        return Err(SolverError::UnsupportedCombination {
            variant: inst.variant,
            kind: inst.modulator.kind,
        });
    }
    if !variant.contains(&inst.variant) {
        return Err(SolverError::Internal(format!(
            "cluster solver called with variant {}",
            inst.variant
        )));
    }
    crate::problem::check_modulator_size(inst.modulator.size())
}

struct Best {
    size: usize,
    vertices: VertexSet,
    guess: VertexSet,
}

/// Keeps the strictly smaller candidate, so the first optimum in guess order
/// wins ties.
fn offer(best: &mut Option<Best>, size: usize, vertices: VertexSet, guess: VertexSet) {
    if best.as_ref().is_none_or(|b| size < b.size) {
        *best = Some(Best {
            size,
            vertices,
            guess,
        });
    }
}

fn finish(
    inst: &DomInstance,
    best: Option<Best>,
    stats: SolveStats,
) -> Result<DomSolution, SolverError> {
    match best {
        Some(b) if b.size <= inst.budget => {
            if !check_solution(&inst.graph, &b.vertices, inst.spec()) {
                return Err(SolverError::Internal(format!(
                    "lifted witness {} fails the {} checker",
                    b.vertices, inst.variant
                )));
            }
            Ok(DomSolution {
                status: Status::Feasible,
                size: b.size,
                vertices: b.vertices,
                guess_used: Some(b.guess),
                stats,
            })
        }
        _ => Ok(DomSolution::infeasible(stats)),
    }
}

/// The cover instance a DS guess reduces to, plus the clique vertex behind
/// each family index.
pub struct DsReduction {
    pub cover: CoverInstance,
    pub candidates: Vec<Vertex>,
}

/// Builds the partitioned set-cover instance for one DS guess: universe
/// S∖N[S'], one block per clique holding the neighborhoods of its vertices,
/// flag 1 exactly on cliques with a vertex left undominated. Vertices already
/// dominated by S' stay in the family as candidate dominators.
pub fn reduce_ds_to_scp(g: &Graph, s: &VertexSet, s_prime: &VertexSet) -> DsReduction {
    let partition = g
        .cluster_partition(s)
        .expect("modulator must leave a cluster graph");
    let dominated = g.closed_neighborhood_of_set(s_prime);
    let universe = s.difference(&dominated);
    let index = UniverseIndex::new(&universe);

    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut candidates: Vec<Vertex> = Vec::new();
    let mut block_sizes = Vec::new();
    let mut flags = Vec::new();
    for clique in partition.cliques() {
        block_sizes.push(clique.len());
        flags.push(clique.iter().any(|v| !dominated.contains(v)));
        for v in clique.iter() {
            sets.push(index.mask_of_neighbors(g, v));
            candidates.push(v);
        }
    }
    let cover = CoverInstance::new(
        index.len(),
        &sets,
        &block_sizes,
        BlockMode::AtLeastFlag(flags),
        CoverMode::AtLeastOnce,
    )
    .expect("reduction builds a valid instance");
    DsReduction { cover, candidates }
}

/// Minimum dominating set with a cluster modulator, by guessing S' and
/// solving set cover with partition per guess.
pub fn solve_ds_cvd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    require_kind(inst, &[Variant::Ds])?;
    let g = &inst.graph;
    g.cluster_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))?;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let mut stats = SolveStats::default();
    let mut best: Option<Best> = None;

    for mask in guess_order(s.len()) {
        let s_prime = subset_from_mask(&s, mask);
        let red = reduce_ds_to_scp(g, &inst.modulator.vertices, &s_prime);
        let sol = solve_scp(&red.cover);
        stats.guesses += 1;
        stats.dp_states += sol.states;
        if sol.is_feasible() {
            let picked: VertexSet = sol.witness.iter().map(|&j| red.candidates[j]).collect();
            let vertices = picked.union(&s_prime);
            offer(&mut best, s_prime.len() + sol.size, vertices, s_prime);
        }
    }
    finish(inst, best, stats)
}

/// Outcome of preprocessing one EDS guess.
pub enum EdsPreprocess {
    /// No efficient dominating set extends this guess.
    Reject,
    Ready {
        /// Modulator vertices still needing their unique dominator.
        universe: VertexSet,
        /// Eligible vertices per surviving clique, in clique order.
        blocks: Vec<Vec<Vertex>>,
    },
}

/// Rejects a guess whose modulator picks sit at distance at most two, or that
/// strands a clique all of whose vertices are at distance exactly two from
/// the guess. Otherwise removes N[S'] and the distance-two layer from the
/// candidate side and reports the surviving cliques.
pub fn eds_guess_preprocess(g: &Graph, s: &VertexSet, s_prime: &VertexSet) -> EdsPreprocess {
    let picks: Vec<Vertex> = s_prime.iter().collect();
    for (i, &x) in picks.iter().enumerate() {
        let nx = g.closed_neighborhood(x);
        for &y in &picks[i + 1..] {
            if !nx.is_disjoint_from(&g.closed_neighborhood(y)) {
                return EdsPreprocess::Reject;
            }
        }
    }
    let partition = g
        .cluster_partition(s)
        .expect("modulator must leave a cluster graph");
    let open = g.open_neighborhood_of_set(s_prime);
    let dist2 = g.n_equal_2(s_prime);

    let mut blocks = Vec::new();
    for clique in partition.cliques() {
        let alive: Vec<Vertex> = clique.iter().filter(|&v| !open.contains(v)).collect();
        if alive.is_empty() {
            continue;
        }
        let eligible: Vec<Vertex> = alive
            .iter()
            .copied()
            .filter(|&v| !dist2.contains(v))
            .collect();
        if eligible.is_empty() {
            return EdsPreprocess::Reject;
        }
        blocks.push(eligible);
    }
    let universe = s.difference(&g.closed_neighborhood_of_set(s_prime));
    EdsPreprocess::Ready { universe, blocks }
}

/// Minimum efficient dominating set with a cluster modulator: per surviving
/// guess, exactly one pick per surviving clique covering the leftover
/// modulator vertices exactly once.
pub fn solve_eds_cvd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    require_kind(inst, &[Variant::Eds])?;
    let g = &inst.graph;
    g.cluster_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))?;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let mut stats = SolveStats::default();
    let mut best: Option<Best> = None;

    for mask in guess_order(s.len()) {
        let s_prime = subset_from_mask(&s, mask);
        stats.guesses += 1;
        let EdsPreprocess::Ready { universe, blocks } =
            eds_guess_preprocess(g, &inst.modulator.vertices, &s_prime)
        else {
            continue;
        };
        let index = UniverseIndex::new(&universe);
        let mut sets = Vec::new();
        let mut candidates = Vec::new();
        let block_sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        for block in &blocks {
            for &v in block {
                sets.push(index.mask_of_neighbors(g, v));
                candidates.push(v);
            }
        }
        let cover = CoverInstance::new(
            index.len(),
            &sets,
            &block_sizes,
            BlockMode::ExactlyOne,
            CoverMode::ExactlyOnce,
        )
        .expect("reduction builds a valid instance");
        let sol = solve_escp(&cover);
        stats.dp_states += sol.states;
        if sol.is_feasible() {
            let picked: VertexSet = sol.witness.iter().map(|&j| candidates[j]).collect();
            offer(
                &mut best,
                s_prime.len() + sol.size,
                picked.union(&s_prime),
                s_prime,
            );
        }
    }
    finish(inst, best, stats)
}

/// Minimum independent dominating set with a cluster modulator: independent
/// guesses only, fully dominated cliques dropped, exactly one pick per
/// remaining clique drawn from its vertices not adjacent to the guess.
pub fn solve_ids_cvd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    require_kind(inst, &[Variant::Ids])?;
    let g = &inst.graph;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let partition = g
        .cluster_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))?;
    let mut stats = SolveStats::default();
    let mut best: Option<Best> = None;

    for mask in guess_order(s.len()) {
        let s_prime = subset_from_mask(&s, mask);
        if !crate::oracle::is_independent(g, &s_prime) {
            continue;
        }
        stats.guesses += 1;
        let open = g.open_neighborhood_of_set(&s_prime);
        let universe = inst
            .modulator
            .vertices
            .difference(&g.closed_neighborhood_of_set(&s_prime));
        let index = UniverseIndex::new(&universe);

        let mut sets = Vec::new();
        let mut candidates = Vec::new();
        let mut block_sizes = Vec::new();
        for clique in partition.cliques() {
            let eligible: Vec<Vertex> = clique.iter().filter(|&v| !open.contains(v)).collect();
            if eligible.is_empty() {
                // Fully dominated clique: no independent pick possible.
                continue;
            }
            block_sizes.push(eligible.len());
            for &v in &eligible {
                sets.push(index.mask_of_neighbors(g, v));
                candidates.push(v);
            }
        }
        let cover = CoverInstance::new(
            index.len(),
            &sets,
            &block_sizes,
            BlockMode::ExactlyOne,
            CoverMode::AtLeastOnce,
        )
        .expect("reduction builds a valid instance");
        let sol = solve_exact_one_scp(&cover);
        stats.dp_states += sol.states;
        if sol.is_feasible() {
            let picked: VertexSet = sol.witness.iter().map(|&j| candidates[j]).collect();
            offer(
                &mut best,
                s_prime.len() + sol.size,
                picked.union(&s_prime),
                s_prime,
            );
        }
    }
    finish(inst, best, stats)
}

/// Minimum dominating clique with a cluster modulator. A guess must induce a
/// clique; at most one clique of G∖S may have undominated vertices, all picks
/// come from a single clique and must be adjacent to the whole guess.
pub fn solve_dc_cvd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    require_kind(inst, &[Variant::Dc])?;
    let g = &inst.graph;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let partition = g
        .cluster_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))?;
    let mut stats = SolveStats::default();
    let mut best: Option<Best> = None;

    for mask in guess_order(s.len()) {
        let s_prime = subset_from_mask(&s, mask);
        if !crate::oracle::is_clique(g, &s_prime) {
            continue;
        }
        stats.guesses += 1;
        let open = g.open_neighborhood_of_set(&s_prime);
        let universe = inst
            .modulator
            .vertices
            .difference(&g.closed_neighborhood_of_set(&s_prime));
        let index = UniverseIndex::new(&universe);

        let undominated: Vec<usize> = partition
            .cliques()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().any(|v| !open.contains(v)))
            .map(|(i, _)| i)
            .collect();
        if undominated.len() >= 2 {
            continue;
        }

        let adjacent_to_guess = |v: Vertex| s_prime.iter().all(|p| g.has_edge(v, p));
        let clique_candidates = |i: usize| -> Vec<Vertex> {
            partition.cliques()[i]
                .iter()
                .filter(|&v| adjacent_to_guess(v))
                .collect()
        };

        if let [i] = undominated[..] {
            // All picks must land in this clique to dominate it.
            let candidates = clique_candidates(i);
            let sets: Vec<Vec<usize>> = candidates
                .iter()
                .map(|&v| index.mask_of_neighbors(g, v))
                .collect();
            let cover = CoverInstance::new(
                index.len(),
                &sets,
                &[sets.len()],
                BlockMode::AtLeastFlag(vec![true]),
                CoverMode::AtLeastOnce,
            )
            .expect("reduction builds a valid instance");
            let sol = solve_scp(&cover);
            stats.dp_states += sol.states;
            if sol.is_feasible() {
                let picked: VertexSet = sol.witness.iter().map(|&j| candidates[j]).collect();
                offer(
                    &mut best,
                    s_prime.len() + sol.size,
                    picked.union(&s_prime),
                    s_prime,
                );
            }
        } else {
            // Every clique is dominated; the guess alone may already work.
            if universe.is_empty() && check_solution(g, &s_prime, inst.spec()) {
                offer(&mut best, s_prime.len(), s_prime.clone(), s_prime.clone());
            }
            if !universe.is_empty() {
                for i in 0..partition.cliques().len() {
                    let candidates = clique_candidates(i);
                    let sets: Vec<Vec<usize>> = candidates
                        .iter()
                        .map(|&v| index.mask_of_neighbors(g, v))
                        .collect();
                    let cover = CoverInstance::plain_set_cover(index.len(), &sets)
                        .expect("reduction builds a valid instance");
                    let sol = solve_set_cover(&cover);
                    stats.dp_states += sol.states;
                    if sol.is_feasible() && !sol.witness.is_empty() {
                        let picked: VertexSet =
                            sol.witness.iter().map(|&j| candidates[j]).collect();
                        offer(
                            &mut best,
                            s_prime.len() + sol.size,
                            picked.union(&s_prime),
                            s_prime.clone(),
                        );
                    }
                }
            }
        }
    }
    finish(inst, best, stats)
}

/// Minimum threshold-r dominating set (TDS is the r = 1 case) with a cluster
/// modulator. Residual demands after a guess feed a weighted multicover:
/// unsatisfied modulator vertices form the universe, every clique becomes a
/// block weighted by its largest demand, and a vertex whose own demand equals
/// the block weight is marked critical since picking it costs one extra
/// in-clique pick. The lifted witness is checker-verified; a failure falls
/// back to re-solving that guess with all block weights raised by one and is
/// counted in `stats.fallbacks`.
pub fn solve_thds_cvd(inst: &DomInstance) -> Result<DomSolution, SolverError> {
    require_kind(inst, &[Variant::Tds, Variant::Thds])?;
    let r = if inst.variant == Variant::Tds {
        1
    } else {
        inst.threshold
    };
    assert!(r >= 1, "threshold domination needs r >= 1");
    let g = &inst.graph;
    let s: Vec<Vertex> = inst.modulator.vertices.iter().collect();
    let partition = g
        .cluster_partition(&inst.modulator.vertices)
        .map_err(|e| SolverError::InvalidModulator(e.to_string()))?;
    let mut stats = SolveStats::default();
    let mut best: Option<Best> = None;

    let spec = inst.spec();
    for mask in guess_order(s.len()) {
        let s_prime = subset_from_mask(&s, mask);
        stats.guesses += 1;
        let demand = |v: Vertex| -> u32 {
            let have = g
                .neighbors(v)
                .iter()
                .filter(|&&u| s_prime.contains(u))
                .count() as u32;
            r.saturating_sub(have)
        };
        let universe: VertexSet = s.iter().copied().filter(|&v| demand(v) > 0).collect();
        let index = UniverseIndex::new(&universe);

        let mut sets = Vec::new();
        let mut candidates = Vec::new();
        let mut block_sizes = Vec::new();
        let mut block_weights = Vec::new();
        let mut criticals = Vec::new();
        for clique in partition.cliques() {
            let w_block = clique.iter().map(demand).max().unwrap_or(0);
            block_sizes.push(clique.len());
            block_weights.push(w_block);
            for v in clique.iter() {
                sets.push(index.mask_of_neighbors(g, v));
                candidates.push(v);
                criticals.push(w_block > 0 && demand(v) == w_block);
            }
        }
        let elem_weights: Vec<u32> = index.vertices.iter().map(|&v| demand(v)).collect();
        let cover = CoverInstance::new(
            index.len(),
            &sets,
            &block_sizes,
            BlockMode::AtLeastWeight(block_weights.clone()),
            CoverMode::Multicover(elem_weights.clone()),
        )
        .expect("reduction builds a valid instance");
        let sol = solve_wsmp_with_criticals(&cover, &criticals);
        stats.dp_states += sol.states;
        if !sol.is_feasible() {
            continue;
        }
        let picked: VertexSet = sol.witness.iter().map(|&j| candidates[j]).collect();
        let lifted = picked.union(&s_prime);
        if check_solution(g, &lifted, spec) {
            offer(&mut best, s_prime.len() + sol.size, lifted, s_prime);
            continue;
        }
        // Raised-weight fallback; the critical marking should make this
        // unreachable, and the counter flags any instance where it is not.
        stats.fallbacks += 1;
        let raised: Vec<u32> = block_weights.iter().map(|&w| w + 1).collect();
        let cover = CoverInstance::new(
            index.len(),
            &sets,
            &block_sizes,
            BlockMode::AtLeastWeight(raised),
            CoverMode::Multicover(elem_weights),
        )
        .expect("reduction builds a valid instance");
        let sol = solve_wsmp_with_criticals(&cover, &vec![false; candidates.len()]);
        stats.dp_states += sol.states;
        if sol.is_feasible() {
            let picked: VertexSet = sol.witness.iter().map(|&j| candidates[j]).collect();
            offer(
                &mut best,
                s_prime.len() + sol.size,
                picked.union(&s_prime),
                s_prime,
            );
        }
    }
    finish(inst, best, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulator::Modulator;
    use crate::oracle::brute_min;
    use crate::problem::VariantSpec;
    use rand::prelude::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    fn instance(g: Graph, modulator: Vec<usize>, variant: Variant, r: u32) -> DomInstance {
        let budget = g.vertex_count();
        DomInstance {
            graph: g,
            modulator: Modulator::new(ModulatorKind::Cvd, modulator.into()),
            variant,
            budget,
            threshold: r,
        }
    }

    #[test]
    fn guess_order_popcount_then_value() {
        assert_eq!(guess_order(2), vec![0b00, 0b01, 0b10, 0b11]);
        let order = guess_order(3);
        assert_eq!(order[0], 0);
        assert_eq!(&order[1..4], &[1, 2, 4]);
        assert_eq!(&order[4..7], &[3, 5, 6]);
    }

    #[test]
    fn ds_one_per_clique() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let sol = solve_ds_cvd(&instance(g, vec![], Variant::Ds, 1)).unwrap();
        assert_eq!(sol.size, 2);
    }

    #[test]
    fn ds_star_center() {
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut inst = instance(star, vec![0], Variant::Ds, 1);
        inst.budget = 1;
        let sol = solve_ds_cvd(&inst).unwrap();
        assert_eq!(sol.size, 1);
        assert_eq!(sol.vertices, VertexSet::singleton(0));
        assert_eq!(sol.guess_used, Some(VertexSet::singleton(0)));
    }

    #[test]
    fn ds_reduction_shape() {
        // One K2 clique with no edges into an isolated modulator vertex 2.
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        let s = VertexSet::singleton(2);
        let red = reduce_ds_to_scp(&g, &s, &VertexSet::new());
        assert_eq!(red.cover.universe_size(), 1);
        assert_eq!(red.cover.family(), &[0, 0]);
        assert_eq!(red.cover.block_mode(), &BlockMode::AtLeastFlag(vec![true]));
        assert!(!solve_scp(&red.cover).is_feasible());

        // Guessing all of S empties the universe.
        let red = reduce_ds_to_scp(&g, &s, &s);
        assert_eq!(red.cover.universe_size(), 0);
    }

    #[test]
    fn eds_preprocess_rejections() {
        // Adjacent guess vertices have intersecting closed neighborhoods.
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let s: VertexSet = vec![0, 1].into();
        assert!(matches!(
            eds_guess_preprocess(&g, &s, &s),
            EdsPreprocess::Reject
        ));

        // Opposite C4 vertices sit at distance two.
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s: VertexSet = vec![0, 2].into();
        assert!(matches!(
            eds_guess_preprocess(&c4, &s, &s),
            EdsPreprocess::Reject
        ));

        // P4 with S = {1}: the clique {3} ends up entirely at distance two.
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = VertexSet::singleton(1);
        assert!(matches!(
            eds_guess_preprocess(&p4, &s, &s),
            EdsPreprocess::Reject
        ));
    }

    #[test]
    fn eds_c4_infeasible_k3_single() {
        // C4 minus one vertex is a P3, so a cluster modulator needs two
        // opposite vertices; the 4-cycle still has no EDS.
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let sol = solve_eds_cvd(&instance(c4.clone(), vec![0, 2], Variant::Eds, 1)).unwrap();
        assert_eq!(sol.status, Status::Infeasible);

        let bad = solve_eds_cvd(&instance(c4, vec![0], Variant::Eds, 1));
        assert!(matches!(bad, Err(SolverError::InvalidModulator(_))));

        let sol = solve_eds_cvd(&instance(complete(3), vec![], Variant::Eds, 1)).unwrap();
        assert_eq!(sol.size, 1);
    }

    #[test]
    fn ids_p3_center() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let mut inst = instance(p3.clone(), vec![1], Variant::Ids, 1);
        inst.budget = 1;
        let sol = solve_ids_cvd(&inst).unwrap();
        assert_eq!(sol.size, 1);
        assert_eq!(sol.vertices, VertexSet::singleton(1));

        let mut inst2 = instance(p3, vec![1], Variant::Ids, 1);
        inst2.budget = 2;
        assert_eq!(solve_ids_cvd(&inst2).unwrap().size, 1);
    }

    #[test]
    fn dc_two_cliques_infeasible_single_feasible() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let sol = solve_dc_cvd(&instance(g, vec![], Variant::Dc, 1)).unwrap();
        assert_eq!(sol.status, Status::Infeasible);

        let sol = solve_dc_cvd(&instance(complete(3), vec![], Variant::Dc, 1)).unwrap();
        assert_eq!(sol.size, 1);
    }

    #[test]
    fn thds_examples() {
        let mut inst = instance(complete(3), vec![], Variant::Thds, 1);
        inst.budget = 2;
        let sol = solve_thds_cvd(&inst).unwrap();
        assert_eq!(sol.size, 2);
        assert_eq!(sol.stats.fallbacks, 0);

        let sol = solve_thds_cvd(&instance(complete(2), vec![], Variant::Thds, 2)).unwrap();
        assert_eq!(sol.status, Status::Infeasible);
    }

    fn random_planted_cvd(rng: &mut impl Rng, max_n: usize, max_k: usize) -> DomInstance {
        let q = rng.random_range(1..=3usize);
        let sizes: Vec<usize> = (0..q).map(|_| rng.random_range(1..=3usize)).collect();
        let base: usize = sizes.iter().sum();
        let k = rng.random_range(0..=max_k.min(max_n.saturating_sub(base)));
        let n = base + k;
        let mut edges = Vec::new();
        let mut at = 0;
        for &sz in &sizes {
            for u in at..at + sz {
                for v in u + 1..at + sz {
                    edges.push((u, v));
                }
            }
            at += sz;
        }
        let p = rng.random_range(0.2..0.8);
        for m in base..n {
            for v in 0..m {
                if rng.random_bool(p) {
                    edges.push((v, m));
                }
            }
        }
        let g = Graph::build(n, &edges).unwrap();
        instance(g, (base..n).collect(), Variant::Ds, 1)
    }

    /// The central correctness property at unit scale: every cluster solver
    /// matches the brute-force oracle on random planted instances.
    #[test]
    fn solvers_match_oracle_on_random_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1234);
        for round in 0..200 {
            let mut inst = random_planted_cvd(&mut rng, 10, 3);
            for (variant, r) in [
                (Variant::Ds, 1),
                (Variant::Eds, 1),
                (Variant::Ids, 1),
                (Variant::Dc, 1),
                (Variant::Tds, 1),
                (Variant::Thds, 2),
            ] {
                inst.variant = variant;
                inst.threshold = r;
                let sol = match variant {
                    Variant::Ds => solve_ds_cvd(&inst),
                    Variant::Eds => solve_eds_cvd(&inst),
                    Variant::Ids => solve_ids_cvd(&inst),
                    Variant::Dc => solve_dc_cvd(&inst),
                    _ => solve_thds_cvd(&inst),
                }
                .unwrap();
                let brute = brute_min(&inst.graph, inst.spec()).unwrap();
                assert_eq!(sol.status, brute.status, "round {round} {variant} {inst:?}");
                if sol.is_feasible() {
                    assert_eq!(sol.size, brute.size, "round {round} {variant} {inst:?}");
                    assert!(check_solution(&inst.graph, &sol.vertices, inst.spec()));
                    assert_eq!(sol.stats.fallbacks, 0);
                }
            }
        }
    }

    /// DS witnesses restricted to the cliques plus the guess dominate G.
    #[test]
    fn ds_witness_decomposition() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
        for _ in 0..50 {
            let inst = random_planted_cvd(&mut rng, 10, 3);
            let sol = solve_ds_cvd(&inst).unwrap();
            if !sol.is_feasible() {
                continue;
            }
            let guess = sol.guess_used.clone().unwrap();
            let outside = sol.vertices.difference(&inst.modulator.vertices);
            assert_eq!(outside.union(&guess), sol.vertices);
            assert!(check_solution(
                &inst.graph,
                &sol.vertices,
                VariantSpec::new(Variant::Ds)
            ));
        }
    }
}
