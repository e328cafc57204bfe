//! Ground truth: definitional checkers for every variant, brute-force
//! minimizers over vertex subsets and subfamilies, and the split-graph
//! normalization and vertex-cover complement transformations.
//!
//! Everything here favors directness over speed; the brute-force routines
//! refuse inputs beyond a hard cap.

use crate::cover::{CoverInstance, CoverSolution, CoverStatus};
use crate::graph::{Graph, SplitPartition, VertexSet};
use crate::problem::{DomSolution, SolveStats, Status, Variant, VariantSpec};
use thiserror::Error;

/// Largest vertex count (or family size) the brute-force routines accept.
pub const BRUTE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force refused: size {actual} exceeds cap {cap}")]
    TooLarge { actual: usize, cap: usize },
    #[error("contract violated: {0}")]
    Contract(String),
}

/// True iff D satisfies the variant's definition on G.
pub fn check_solution(g: &Graph, d: &VertexSet, spec: VariantSpec) -> bool {
    match spec.variant {
        Variant::Ds => dominates_all(g, d),
        Variant::Eds => g.vertices().all(|v| {
            let hits = g.closed_neighborhood(v).intersection(d).len();
            hits == 1
        }),
        Variant::Ids => dominates_all(g, d) && is_independent(g, d),
        Variant::Dc => dominates_all(g, d) && is_clique(g, d),
        Variant::Tds | Variant::Thds => {
            let r = if spec.variant == Variant::Tds {
                1
            } else {
                spec.threshold
            } as usize;
            g.vertices()
                .all(|v| g.neighbors(v).iter().filter(|&&u| d.contains(u)).count() >= r)
        }
    }
}

fn dominates_all(g: &Graph, d: &VertexSet) -> bool {
    g.vertices()
        .all(|v| d.contains(v) || g.neighbors(v).iter().any(|&u| d.contains(u)))
}

pub fn is_independent(g: &Graph, d: &VertexSet) -> bool {
    d.iter()
        .all(|u| g.neighbors(u).iter().all(|&v| !d.contains(v)))
}

pub fn is_clique(g: &Graph, d: &VertexSet) -> bool {
    let items = d.as_slice();
    items
        .iter()
        .enumerate()
        .all(|(i, &u)| items[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Mask-based variant check used inside the subset enumeration; kept in sync
/// with `check_solution` by the `mask_checker_matches_set_checker` property.
fn check_mask(closed: &[u32], open: &[u32], d: u32, spec: VariantSpec) -> bool {
    let n = closed.len();
    match spec.variant {
        Variant::Ds => (0..n).all(|v| closed[v] & d != 0),
        Variant::Eds => (0..n).all(|v| (closed[v] & d).count_ones() == 1),
        Variant::Ids => {
            (0..n).all(|v| closed[v] & d != 0)
                && (0..n)
                    .filter(|&v| d >> v & 1 == 1)
                    .all(|v| open[v] & d == 0)
        }
        Variant::Dc => {
            (0..n).all(|v| closed[v] & d != 0)
                && (0..n)
                    .filter(|&v| d >> v & 1 == 1)
                    .all(|v| d & !closed[v] == 0)
        }
        Variant::Tds | Variant::Thds => {
            let r = if spec.variant == Variant::Tds {
                1
            } else {
                spec.threshold
            };
            (0..n).all(|v| (open[v] & d).count_ones() >= r)
        }
    }
}

fn neighborhood_masks(g: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = g.vertex_count();
    let mut closed = vec![0u32; n];
    let mut open = vec![0u32; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            open[v] |= 1 << u;
        }
        closed[v] = open[v] | 1 << v;
    }
    (closed, open)
}

/// Exact minimum by enumerating vertex subsets smallest-size-first, in
/// lexicographic order within each size, returning the first valid subset.
pub fn brute_min(g: &Graph, spec: VariantSpec) -> Result<DomSolution, OracleError> {
    let n = g.vertex_count();
    if n > BRUTE_CAP {
        return Err(OracleError::TooLarge {
            actual: n,
            cap: BRUTE_CAP,
        });
    }
    let (closed, open) = neighborhood_masks(g);
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &v| m | 1 << v);
            if check_mask(&closed, &open, mask, spec) {
                let vertices: VertexSet = combo.iter().copied().collect();
                debug_assert!(check_solution(g, &vertices, spec));
                return Ok(DomSolution {
                    status: Status::Feasible,
                    size,
                    vertices,
                    guess_used: None,
                    stats: SolveStats::default(),
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(DomSolution::infeasible(SolveStats::default()))
}

/// Advances `combo` to the next k-combination of 0..n in lexicographic
/// order; false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact cover optimum by enumerating all subfamilies; the oracle for every
/// DP mode. Witnesses are the lexicographically smallest among minimum size.
pub fn brute_cover(inst: &CoverInstance) -> Result<CoverSolution, OracleError> {
    let m = inst.family().len();
    if m > BRUTE_CAP {
        return Err(OracleError::TooLarge {
            actual: m,
            cap: BRUTE_CAP,
        });
    }
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << m {
        let picks: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
        if !inst.is_satisfied_by(&picks) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => picks.len() < b.len() || (picks.len() == b.len() && picks < *b),
        };
        if better {
            best = Some(picks);
        }
    }
    Ok(match best {
        Some(witness) => CoverSolution {
            status: CoverStatus::Feasible,
            size: witness.len(),
            witness,
            states: 0,
        },
        None => CoverSolution {
            status: CoverStatus::Infeasible,
            size: 0,
            witness: Vec::new(),
            states: 0,
        },
    })
}

/// Moves a dominating set (or dominating clique, or total dominating set) of
/// a connected split graph out of the independent side by swapping each
/// independent vertex for its smallest clique neighbor. For TDS a second
/// clique vertex is added if the swaps collapse the set to a singleton.
pub fn normalize_split_dominating(
    g: &Graph,
    p: &SplitPartition,
    d: &VertexSet,
    spec: VariantSpec,
) -> Result<VertexSet, OracleError> {
    if !matches!(spec.variant, Variant::Ds | Variant::Dc | Variant::Tds) {
        return Err(OracleError::Contract(format!(
            "normalization applies to ds/dc/tds, got {}",
            spec.variant
        )));
    }
    let contract = |msg: &str| Err(OracleError::Contract(msg.to_string()));
    if p.clique_side.union(&p.independent_side).len() != g.vertex_count() {
        return contract("partition must cover the whole graph");
    }
    if g.components_within(&vec![true; g.vertex_count()]).len() > 1 {
        return contract("graph must be connected");
    }
    if !check_solution(g, d, spec) {
        return contract("input set fails the variant checker");
    }
    if spec.variant == Variant::Tds && (p.clique_side.len() < 2 || d.len() < 2) {
        return contract("tds normalization needs |C| >= 2 and |D| >= 2");
    }

    let mut out = VertexSet::new();
    for v in d.iter() {
        if p.clique_side.contains(v) {
            out.insert(v);
        } else {
            let swap = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| p.clique_side.contains(u));
            match swap {
                Some(u) => out.insert(u),
                None => return contract("independent vertex with no clique neighbor"),
            }
        }
    }
    if spec.variant == Variant::Tds && out.len() == 1 {
        let extra = p.clique_side.iter().find(|&u| !out.contains(u));
        match extra {
            Some(u) => out.insert(u),
            None => return contract("tds normalization needs a second clique vertex"),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementDirection {
    MinimalVcToIds,
    IdsToMinimalVc,
}

/// Complement of a minimal vertex cover is an independent dominating set and
/// vice versa; both directions are the plain set complement.
pub fn mmvc_from_ids(g: &Graph, set: &VertexSet, _direction: ComplementDirection) -> VertexSet {
    g.vertices().filter(|&v| !set.contains(v)).collect()
}

pub fn is_vertex_cover(g: &Graph, t: &VertexSet) -> bool {
    g.edges().all(|(u, v)| t.contains(u) || t.contains(v))
}

pub fn is_minimal_vertex_cover(g: &Graph, t: &VertexSet) -> bool {
    is_vertex_cover(g, t)
        && t.iter().all(|v| {
            let mut smaller = t.clone();
            smaller.remove(v);
            !is_vertex_cover(g, &smaller)
        })
}
