//! Shared problem vocabulary: the six dominating-set variants, solver
//! instances and solutions.

use crate::graph::{Graph, VertexSet};
use crate::modulator::Modulator;
use std::fmt;
use thiserror::Error;

/// The six dominating-set variants handled by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Ds,
    Eds,
    Ids,
    Dc,
    Tds,
    Thds,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Ds => "ds",
            Variant::Eds => "eds",
            Variant::Ids => "ids",
            Variant::Dc => "dc",
            Variant::Tds => "tds",
            Variant::Thds => "thds",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Some(match s {
            "ds" => Variant::Ds,
            "eds" => Variant::Eds,
            "ids" => Variant::Ids,
            "dc" => Variant::Dc,
            "tds" => Variant::Tds,
            "thds" => Variant::Thds,
            _ => return None,
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A variant plus its threshold. The threshold is 1 for every variant except
/// THDS, where it is the required number of open neighbors r >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariantSpec {
    pub variant: Variant,
    pub threshold: u32,
}

impl VariantSpec {
    pub fn new(variant: Variant) -> VariantSpec {
        assert!(variant != Variant::Thds, "THDS needs an explicit threshold");
        VariantSpec {
            variant,
            threshold: 1,
        }
    }

    pub fn thds(r: u32) -> VariantSpec {
        assert!(r >= 1, "threshold domination needs r >= 1");
        VariantSpec {
            variant: Variant::Thds,
            threshold: r,
        }
    }

    pub fn for_variant(variant: Variant, r: u32) -> VariantSpec {
        match variant {
            Variant::Thds => VariantSpec::thds(r),
            v => VariantSpec::new(v),
        }
    }
}

/// One solver instance: a graph, a modulator into the target class, the
/// variant to optimize, a budget, and the THDS threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomInstance {
    pub graph: Graph,
    pub modulator: Modulator,
    pub variant: Variant,
    pub budget: usize,
    pub threshold: u32,
}

impl DomInstance {
    pub fn spec(&self) -> VariantSpec {
        VariantSpec::for_variant(self.variant, self.threshold)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Feasible,
    Infeasible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Feasible => "FEASIBLE",
            Status::Infeasible => "INFEASIBLE",
        })
    }
}

/// Instrumentation counters exposed by every solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Number of modulator guesses examined.
    pub guesses: u64,
    /// Total dynamic-programming states touched across all guesses.
    pub dp_states: u64,
    /// Branching-rule applications in the branch-and-reduce search.
    pub branch_nodes: u64,
    /// Times the threshold solver had to retry a guess with a raised block
    /// weight; expected to stay zero.
    pub fallbacks: u64,
}

/// Solver output: an optimal witness within budget, or infeasibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomSolution {
    pub status: Status,
    pub vertices: VertexSet,
    pub size: usize,
    /// The modulator subset the winning guess assumed, when the algorithm is
    /// guess-based.
    pub guess_used: Option<VertexSet>,
    pub stats: SolveStats,
}

impl DomSolution {
    pub fn infeasible(stats: SolveStats) -> DomSolution {
        DomSolution {
            status: Status::Infeasible,
            vertices: VertexSet::new(),
            size: 0,
            guess_used: None,
            stats,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("modulator does not have the declared property: {0}")]
    InvalidModulator(String),
    #[error("modulator of size {size} exceeds the guess-loop limit {limit}")]
    ModulatorTooLarge { size: usize, limit: usize },
    #[error("no algorithm for variant {variant} with modulator kind {kind}")]
    UnsupportedCombination {
        variant: Variant,
        kind: crate::modulator::ModulatorKind,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Largest modulator the 2^k guess loops accept.
pub const MAX_MODULATOR: usize = 26;

pub(crate) fn check_modulator_size(size: usize) -> Result<(), SolverError> {
    if size > MAX_MODULATOR {
        Err(SolverError::ModulatorTooLarge {
            size,
            limit: MAX_MODULATOR,
        })
    } else {
        Ok(())
    }
}
