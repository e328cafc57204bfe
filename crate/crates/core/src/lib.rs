//! Exact solvers for six dominating-set variants (DS, EDS, IDS, DC, TDS,
//! ThDS) on graphs supplied with a small modulator to a cluster graph or a
//! split graph.
//!
//! The cluster-side solvers enumerate the solution's intersection with the
//! modulator and reduce each guess to a partitioned cover problem solved by
//! dynamic programming over universe subsets. The split-side solvers use the
//! same guessing for IDS and EDS, plus a branch-and-reduce search for EDS
//! whose branching measure is the number of pickable modulator vertices.
//! Brute-force oracles, instance generators and hardness-reduction gadget
//! factories round out the crate for cross-validation.

pub mod cover;
pub mod cvd;
pub mod format;
pub mod graph;
pub mod instances;
pub mod modulator;
pub mod oracle;
pub mod problem;
pub mod svd;

pub use graph::{Graph, VertexSet};
pub use modulator::{Modulator, ModulatorKind};
pub use problem::{DomInstance, DomSolution, SolveStats, Status, Variant, VariantSpec};

use problem::SolverError;

/// Which solver to run on an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    /// Guess-and-reduce with the cover DP (cluster-side solvers).
    Dp,
    /// The 2^k guess algorithms for IDS/EDS on split modulators.
    Simple,
    /// Branch-and-reduce for EDS on split modulators.
    Branch,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Dp => "dp",
            Algo::Simple => "simple",
            Algo::Branch => "branch",
        }
    }
}

/// Routes an instance to the matching solver.
///
/// A vertex cover is both a cluster and a split modulator, so VC-kind
/// instances run on the cluster-side solvers for `Dp` and on the split-side
/// solvers for `Simple`/`Branch`.
pub fn solve_instance(inst: &DomInstance, algo: Algo) -> Result<DomSolution, SolverError> {
    let kind = inst.modulator.kind;
    match algo {
        Algo::Dp => {
            if kind == ModulatorKind::Svd {
                return Err(SolverError::UnsupportedCombination {
                    variant: inst.variant,
                    kind,
                });
            }
            let as_cvd = reinterpret(inst, ModulatorKind::Cvd);
            match inst.variant {
                Variant::Ds => cvd::solve_ds_cvd(&as_cvd),
                Variant::Eds => cvd::solve_eds_cvd(&as_cvd),
                Variant::Ids => cvd::solve_ids_cvd(&as_cvd),
                Variant::Dc => cvd::solve_dc_cvd(&as_cvd),
                Variant::Tds | Variant::Thds => cvd::solve_thds_cvd(&as_cvd),
            }
        }
        Algo::Simple | Algo::Branch => {
            if kind == ModulatorKind::Cvd {
                return Err(SolverError::UnsupportedCombination {
                    variant: inst.variant,
                    kind,
                });
            }
            let as_svd = reinterpret(inst, ModulatorKind::Svd);
            match (inst.variant, algo) {
                (Variant::Ids, Algo::Simple) => svd::solve_ids_svd(&as_svd),
                (Variant::Eds, Algo::Simple) => svd::solve_eds_svd_simple(&as_svd),
                (Variant::Eds, Algo::Branch) => svd::solve_eds_svd_branch(&as_svd),
                _ => Err(SolverError::UnsupportedCombination {
                    variant: inst.variant,
                    kind,
                }),
            }
        }
    }
}

/// Default algorithm per variant and modulator kind, if any exists.
pub fn default_algo(variant: Variant, kind: ModulatorKind) -> Option<Algo> {
    match kind {
        ModulatorKind::Cvd | ModulatorKind::Vc => Some(Algo::Dp),
        ModulatorKind::Svd => match variant {
            Variant::Ids => Some(Algo::Simple),
            Variant::Eds => Some(Algo::Branch),
            _ => None,
        },
    }
}

fn reinterpret(inst: &DomInstance, kind: ModulatorKind) -> DomInstance {
    let mut out = inst.clone();
    out.modulator.kind = kind;
    out
}
