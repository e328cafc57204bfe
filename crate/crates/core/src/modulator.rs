//! Modulator verification and elementary branching finders.
//!
//! The solvers expect a modulator to be supplied with the instance; the
//! finders here are fallbacks that branch on the smallest forbidden induced
//! subgraph (P3 for cluster graphs, 2K2/C4/C5 for split graphs).

use crate::graph::{Graph, Vertex, VertexSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModulatorKind {
    Cvd,
    Svd,
    Vc,
}

impl ModulatorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModulatorKind::Cvd => "cvd",
            ModulatorKind::Svd => "svd",
            ModulatorKind::Vc => "vc",
        }
    }

    pub fn parse(s: &str) -> Option<ModulatorKind> {
        Some(match s {
            "cvd" => ModulatorKind::Cvd,
            "svd" => ModulatorKind::Svd,
            "vc" => ModulatorKind::Vc,
            _ => return None,
        })
    }
}

impl fmt::Display for ModulatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A vertex set whose deletion leaves a cluster graph (CVD), a split graph
/// (SVD), or an edgeless graph (VC).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulator {
    pub kind: ModulatorKind,
    pub vertices: VertexSet,
}

impl Modulator {
    pub fn new(kind: ModulatorKind, vertices: VertexSet) -> Modulator {
        Modulator { kind, vertices }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// True iff deleting the modulator leaves a graph with the kind's property.
pub fn verify_modulator(g: &Graph, m: &Modulator) -> bool {
    match m.kind {
        ModulatorKind::Cvd => g.cluster_partition(&m.vertices).is_ok(),
        ModulatorKind::Svd => g.split_partition(&m.vertices).is_ok(),
        ModulatorKind::Vc => g
            .edges()
            .all(|(u, v)| m.vertices.contains(u) || m.vertices.contains(v)),
    }
}

/// Lexicographically smallest vertex triple inducing a P3 in G minus
/// `deleted`, as a sorted triple.
#[allow(clippy::needless_range_loop)]
fn smallest_induced_p3(g: &Graph, deleted: &[bool]) -> Option<[Vertex; 3]> {
    let n = g.vertex_count();
    for a in 0..n {
        if deleted[a] {
            continue;
        }
        for b in a + 1..n {
            if deleted[b] {
                continue;
            }
            for c in b + 1..n {
                if deleted[c] {
                    continue;
                }
                let edges =
                    g.has_edge(a, b) as u8 + g.has_edge(a, c) as u8 + g.has_edge(b, c) as u8;
                if edges == 2 {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn find_cvd_rec(g: &Graph, deleted: &mut Vec<bool>, chosen: &mut Vec<Vertex>, k: usize) -> bool {
    match smallest_induced_p3(g, deleted) {
        None => true,
        Some(_) if k == 0 => false,
        Some(triple) => {
            for v in triple {
                deleted[v] = true;
                chosen.push(v);
                if find_cvd_rec(g, deleted, chosen, k - 1) {
                    return true;
                }
                chosen.pop();
                deleted[v] = false;
            }
            false
        }
    }
}

/// A cluster vertex deletion set of size at most k, or None when no such set
/// exists. Branches on the smallest induced P3, first vertex first.
pub fn find_cvd(g: &Graph, k: usize) -> Option<Modulator> {
    let mut deleted = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    find_cvd_rec(g, &mut deleted, &mut chosen, k)
        .then(|| Modulator::new(ModulatorKind::Cvd, chosen.into_iter().collect()))
}

/// Smallest forbidden structure for split graphs. 4-vertex obstructions
/// (2K2, C4) are scanned before C5s, each in lexicographic subset order.
fn smallest_split_obstruction(g: &Graph, deleted: &[bool]) -> Option<Vec<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().filter(|&v| !deleted[v]).collect();
    let n = verts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let q = [verts[i], verts[j], verts[k], verts[l]];
                    if induces_2k2_or_c4(g, q) {
                        return Some(q.to_vec());
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    for m in l + 1..n {
                        let q = [verts[i], verts[j], verts[k], verts[l], verts[m]];
                        if induces_c5(g, q) {
                            return Some(q.to_vec());
                        }
                    }
                }
            }
        }
    }
    None
}

fn induces_2k2_or_c4(g: &Graph, q: [Vertex; 4]) -> bool {
    let mut degs = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i], q[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    // 2K2: two edges, all degrees 1. C4: four edges, all degrees 2.
    (edges == 2 && degs.iter().all(|&d| d == 1)) || (edges == 4 && degs.iter().all(|&d| d == 2))
}

fn induces_c5(g: &Graph, q: [Vertex; 5]) -> bool {
    let mut degs = [0usize; 5];
    let mut edges = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            if g.has_edge(q[i], q[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    edges == 5 && degs.iter().all(|&d| d == 2)
}

fn find_svd_rec(g: &Graph, deleted: &mut Vec<bool>, chosen: &mut Vec<Vertex>, k: usize) -> bool {
    match smallest_split_obstruction(g, deleted) {
        None => true,
        Some(_) if k == 0 => false,
        Some(obstruction) => {
            for v in obstruction {
                deleted[v] = true;
                chosen.push(v);
                if find_svd_rec(g, deleted, chosen, k - 1) {
                    return true;
                }
                chosen.pop();
                deleted[v] = false;
            }
            false
        }
    }
}

/// A split vertex deletion set of size at most k, or None.
pub fn find_svd(g: &Graph, k: usize) -> Option<Modulator> {
    let mut deleted = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    find_svd_rec(g, &mut deleted, &mut chosen, k)
        .then(|| Modulator::new(ModulatorKind::Svd, chosen.into_iter().collect()))
}
