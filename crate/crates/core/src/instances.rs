//! Instance factories: seeded planted-modulator generators and the two
//! hardness reductions repurposed as hard-instance builders. The set-cover
//! reduction attaches the element side as a cluster modulator over a single
//! clique of set vertices; the 3-SAT reduction builds per-clause gadgets
//! whose efficient dominating sets encode satisfying assignments.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::modulator::{verify_modulator, Modulator, ModulatorKind};
use crate::oracle::check_solution;
use crate::problem::{DomInstance, Variant};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("contract violated: {0}")]
    Contract(String),
}

fn contract<T>(msg: impl Into<String>) -> Result<T, InstanceError> {
    Err(InstanceError::Contract(msg.into()))
}

/// Base-graph shape for planted generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlantedShape {
    /// A cluster graph with these clique sizes.
    Cliques(Vec<usize>),
    /// A split graph with a clique side and an independent side.
    Split { clique: usize, independent: usize },
}

impl PlantedShape {
    pub fn kind(&self) -> ModulatorKind {
        match self {
            PlantedShape::Cliques(_) => ModulatorKind::Cvd,
            PlantedShape::Split { .. } => ModulatorKind::Svd,
        }
    }

    fn base_size(&self) -> usize {
        match self {
            PlantedShape::Cliques(sizes) => sizes.iter().sum(),
            PlantedShape::Split {
                clique,
                independent,
            } => clique + independent,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedConfig {
    pub shape: PlantedShape,
    pub modulator_size: usize,
    pub edge_density: f64,
    pub variant: Variant,
    /// Defaults to the vertex count when None, which never excludes an
    /// existing solution.
    pub budget: Option<usize>,
    pub threshold: u32,
}

/// Builds a graph whose last `modulator_size` vertices form the planted
/// modulator: deleting them leaves exactly the base shape. Same seed, same
/// instance.
pub fn gen_planted(seed: u64, config: &PlantedConfig) -> DomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = config.shape.base_size();
    let k = config.modulator_size;
    let n = base + k;
    let p = config.edge_density.clamp(0.0, 1.0);

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    match &config.shape {
        PlantedShape::Cliques(sizes) => {
            let mut at = 0;
            for &sz in sizes {
                for u in at..at + sz {
                    for v in u + 1..at + sz {
                        edges.push((u, v));
                    }
                }
                at += sz;
            }
        }
        PlantedShape::Split {
            clique,
            independent: _,
        } => {
            for u in 0..*clique {
                for v in u + 1..*clique {
                    edges.push((u, v));
                }
            }
            for u in 0..*clique {
                for v in *clique..base {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    // Modulator vertices attach anywhere, including to each other.
    for m in base..n {
        for v in 0..m {
            if rng.random_bool(p) {
                edges.push((v, m));
            }
        }
    }

    let graph = Graph::build(n, &edges).expect("generated edges are valid");
    let modulator = Modulator::new(config.shape.kind(), (base..n).collect());
    debug_assert!(verify_modulator(&graph, &modulator));
    DomInstance {
        graph,
        modulator,
        variant: config.variant,
        budget: config.budget.unwrap_or(n),
        threshold: config.threshold,
    }
}

/// Set cover as a split-graph domination instance: element vertices form an
/// independent side and a cluster modulator, set vertices form one clique,
/// membership becomes adjacency. A cover of size l exists iff a dominating
/// set (equally: dominating clique, total dominating set) of size l does.
///
/// Every element must appear in some set. An uncoverable element makes set
/// cover infeasible while its isolated graph vertex can still dominate
/// itself, so the equivalence would not survive it.
pub fn reduce_setcover_to_split(
    universe_size: usize,
    family: &[Vec<usize>],
    budget: usize,
) -> Result<DomInstance, InstanceError> {
    if budget < 2 {
        return contract("the equivalence needs budget >= 2");
    }
    if family.is_empty() {
        return contract("empty family is degenerate");
    }
    let m = family.len();
    let n = universe_size + m;
    let mut covered = vec![false; universe_size];
    let mut edges = Vec::new();
    for (j, set) in family.iter().enumerate() {
        for &e in set {
            if e >= universe_size {
                return contract(format!(
                    "element {e} outside universe of size {universe_size}"
                ));
            }
            covered[e] = true;
            edges.push((e, universe_size + j));
        }
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return contract(format!("element {e} appears in no set"));
    }
    for a in 0..m {
        for b in a + 1..m {
            edges.push((universe_size + a, universe_size + b));
        }
    }
    let mut labels: Vec<String> = (0..universe_size).map(|e| format!("u{e}")).collect();
    labels.extend((0..m).map(|j| format!("s{j}")));
    let graph = Graph::build(n, &edges)
        .expect("reduction edges are valid")
        .with_labels(labels);
    Ok(DomInstance {
        graph,
        modulator: Modulator::new(ModulatorKind::Cvd, (0..universe_size).collect()),
        variant: Variant::Ds,
        budget,
        threshold: 1,
    })
}

/// A CNF formula with at most three literals per clause. Literals are signed
/// 1-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, InstanceError> {
        for clause in &clauses {
            if clause.is_empty() {
                return contract("empty clause");
            }
            if clause.len() > 3 {
                return contract("clause with more than three literals");
            }
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > variable_count {
                    return contract(format!("literal {lit} outside 1..={variable_count}"));
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.variable_count);
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// Satisfiability by enumerating all assignments; the test oracle.
    pub fn brute_satisfiable(&self) -> Option<Vec<bool>> {
        assert!(self.variable_count <= 20);
        (0u32..1 << self.variable_count)
            .map(|mask| {
                (0..self.variable_count)
                    .map(|i| mask >> i & 1 == 1)
                    .collect::<Vec<bool>>()
            })
            .find(|a| self.is_satisfied_by(a))
    }
}

/// Offsets of the ten clause-gadget vertices from the gadget base.
const C1: usize = 0;
const C2: usize = 1;
const C3: usize = 2;
const D0: usize = 3;
const D1: usize = 4;
const D2: usize = 5;
const D3: usize = 6;
const D12: usize = 7;
const D23: usize = 8;
const D13: usize = 9;

/// The 3-SAT reduction output: the instance plus the maps needed to read an
/// assignment back out of an efficient dominating set.
#[derive(Debug, Clone)]
pub struct SatReduction {
    pub instance: DomInstance,
    pub formula: CnfFormula,
    /// (positive, negative) literal vertex per variable.
    pub variable_vertices: Vec<(Vertex, Vertex)>,
    /// First vertex of each clause gadget.
    pub clause_bases: Vec<Vertex>,
}

/// Encodes a 3-CNF formula as an EDS instance with a recorded vertex cover:
/// two adjacent vertices per variable, a ten-vertex gadget per clause, and a
/// c-vertex per literal occurrence wired to that literal's vertex. The
/// formula is satisfiable iff the graph has an efficient dominating set of
/// size n + m. Clauses with fewer than three literals are padded by
/// repeating a literal, each occurrence getting its own gadget edge.
pub fn reduce_3sat_to_eds(formula: &CnfFormula) -> Result<SatReduction, InstanceError> {
    let n = formula.variable_count;
    let m = formula.clauses.len();
    let padded: Vec<Vec<i32>> = formula
        .clauses
        .iter()
        .map(|clause| {
            let mut c = clause.clone();
            while c.len() < 3 {
                c.push(c[0]);
            }
            c
        })
        .collect();
    let padded_formula = CnfFormula::new(n, padded.clone())?;

    let vertex_count = 2 * n + 10 * m;
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); vertex_count];

    let mut variable_vertices = Vec::with_capacity(n);
    for i in 0..n {
        let pos = 2 * i;
        let neg = 2 * i + 1;
        variable_vertices.push((pos, neg));
        labels[pos] = format!("v{}", i + 1);
        labels[neg] = format!("~v{}", i + 1);
        edges.push((pos, neg));
    }

    let literal_vertex = |lit: i32| -> Vertex {
        let (pos, neg) = variable_vertices[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            pos
        } else {
            neg
        }
    };

    let mut clause_bases = Vec::with_capacity(m);
    for (j, clause) in padded.iter().enumerate() {
        let base = 2 * n + 10 * j;
        clause_bases.push(base);
        for (off, name) in [
            (C1, "c1"),
            (C2, "c2"),
            (C3, "c3"),
            (D0, "d0"),
            (D1, "d1"),
            (D2, "d2"),
            (D3, "d3"),
            (D12, "d12"),
            (D23, "d23"),
            (D13, "d13"),
        ] {
            labels[base + off] = format!("{name}.{j}");
        }
        edges.push((base + C1, base + D1));
        edges.push((base + C1, base + D12));
        edges.push((base + C1, base + D13));
        edges.push((base + C2, base + D2));
        edges.push((base + C2, base + D12));
        edges.push((base + C2, base + D23));
        edges.push((base + C3, base + D3));
        edges.push((base + C3, base + D23));
        edges.push((base + C3, base + D13));
        let clique = [D0, D1, D2, D3, D12, D23, D13];
        for (a, &x) in clique.iter().enumerate() {
            for &y in &clique[a + 1..] {
                edges.push((base + x, base + y));
            }
        }
        for (slot, &lit) in clause.iter().enumerate() {
            edges.push((literal_vertex(lit), base + [C1, C2, C3][slot]));
        }
    }

    let graph = Graph::build(vertex_count, &edges)
        .expect("reduction edges are valid")
        .with_labels(labels);

    let mut cover: Vec<Vertex> = (0..2 * n).collect();
    for &base in &clause_bases {
        cover.extend([D1, D2, D3, D12, D23, D13].iter().map(|&off| base + off));
    }
    let modulator = Modulator::new(ModulatorKind::Vc, cover.into_iter().collect());
    debug_assert!(verify_modulator(&graph, &modulator));

    let instance = DomInstance {
        graph,
        modulator,
        variant: Variant::Eds,
        budget: n + m,
        threshold: 1,
    };
    Ok(SatReduction {
        instance,
        formula: padded_formula,
        variable_vertices,
        clause_bases,
    })
}

/// Reads the satisfying assignment off an efficient dominating set of size
/// n + m in a reduction output: variable i is true iff its positive literal
/// vertex was picked.
pub fn extract_assignment(
    reduction: &SatReduction,
    d: &VertexSet,
) -> Result<Vec<bool>, InstanceError> {
    let n = reduction.formula.variable_count;
    let m = reduction.formula.clauses().len();
    if d.len() != n + m {
        return contract(format!("witness has size {}, expected {}", d.len(), n + m));
    }
    if !check_solution(&reduction.instance.graph, d, reduction.instance.spec()) {
        return contract("witness is not an efficient dominating set");
    }
    let mut assignment = Vec::with_capacity(n);
    for &(pos, neg) in &reduction.variable_vertices {
        match (d.contains(pos), d.contains(neg)) {
            (true, false) => assignment.push(true),
            (false, true) => assignment.push(false),
            _ => return contract("witness must pick exactly one literal vertex per variable"),
        }
    }
    Ok(assignment)
}
