//! Simple undirected graphs with the neighborhood and partition primitives
//! the solvers are built on.

use std::fmt;
use thiserror::Error;

/// Vertex ids are dense indices `0..vertex_count`.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("not a cluster graph: vertices {0}-{1}-{2} induce a path")]
    NotClusterGraph(Vertex, Vertex, Vertex),
    #[error("not a split graph: {0}")]
    NotSplitGraph(SplitObstruction),
}

/// One of the three forbidden induced subgraphs of split graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitObstruction {
    /// Two disjoint edges (a,b) and (c,d) with no edge between them.
    TwoKTwo([Vertex; 4]),
    /// An induced 4-cycle, in cyclic order.
    FourCycle([Vertex; 4]),
    /// An induced 5-cycle, in cyclic order.
    FiveCycle([Vertex; 5]),
}

impl fmt::Display for SplitObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitObstruction::TwoKTwo([a, b, c, d]) => {
                write!(f, "induced 2K2 on edges ({a},{b}) and ({c},{d})")
            }
            SplitObstruction::FourCycle([a, b, c, d]) => {
                write!(f, "induced C4 {a}-{b}-{c}-{d}")
            }
            SplitObstruction::FiveCycle([a, b, c, d, e]) => {
                write!(f, "induced C5 {a}-{b}-{c}-{d}-{e}")
            }
        }
    }
}

/// A set of vertex ids with ascending iteration order.
///
/// Backed by a sorted, deduplicated vector; all set algebra is linear merges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    items: Vec<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { items: Vec::new() }
    }

    pub fn from_sorted(items: Vec<Vertex>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        VertexSet { items }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet { items: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.items.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(pos) = self.items.binary_search(&v) {
            self.items.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: Vertex) {
        if let Ok(pos) = self.items.binary_search(&v) {
            self.items.remove(pos);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.items
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            match self.items[i].cmp(&other.items[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.items[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.items[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.items[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.items[i..]);
        out.extend_from_slice(&other.items[j..]);
        VertexSet { items: out }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            items: self
                .items
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            items: self
                .items
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.items.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.items.iter().all(|&v| !other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut items: Vec<Vertex> = iter.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        VertexSet { items }
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(items: Vec<Vertex>) -> Self {
        items.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph in canonical form: neighbor lists are
/// strictly ascending and symmetric, no self-loops.
///
/// Two graphs are equal iff their vertex counts and adjacency lists are equal;
/// the optional labels carry gadget provenance only and do not take part in
/// equality or serialization.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a canonical graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn build(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for row in &mut adjacency {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.vertex_count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut items = self.adjacency[v].clone();
        let pos = items.binary_search(&v).unwrap_err();
        items.insert(pos, v);
        VertexSet::from_sorted(items)
    }

    /// N(S): neighbors of S outside S.
    pub fn open_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s.iter() {
            for &u in self.neighbors(v) {
                if !s.contains(u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        self.open_neighborhood_of_set(s).union(s)
    }

    /// Vertices at distance exactly two from the set S.
    pub fn n_equal_2(&self, s: &VertexSet) -> VertexSet {
        let closed = self.closed_neighborhood_of_set(s);
        let mut out = VertexSet::new();
        for v in self.open_neighborhood_of_set(s).iter() {
            for &u in self.neighbors(v) {
                if !closed.contains(u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    /// Connected components of the subgraph induced by `alive`, each returned
    /// as an ascending vertex list; components ordered by minimum vertex.
    pub fn components_within(&self, alive: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        assert_eq!(alive.len(), n);
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if !alive[start] || seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in self.neighbors(v) {
                    if alive[u] && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn alive_mask_without(&self, removed: &VertexSet) -> Vec<bool> {
        let mut alive = vec![true; self.vertex_count()];
        for v in removed.iter() {
            alive[v] = false;
        }
        alive
    }

    /// Partitions G∖S into its clique components, ordered by minimum vertex
    /// id. Fails with a witnessing induced P3 if some component is not a
    /// clique.
    pub fn cluster_partition(&self, s: &VertexSet) -> Result<ClusterPartition, GraphError> {
        let alive = self.alive_mask_without(s);
        let comps = self.components_within(&alive);
        for comp in &comps {
            for (i, &u) in comp.iter().enumerate() {
                for &v in &comp[i + 1..] {
                    if !self.has_edge(u, v) {
                        let (a, b, c) = self.induced_p3_between(u, v, &alive);
                        return Err(GraphError::NotClusterGraph(a, b, c));
                    }
                }
            }
        }
        Ok(ClusterPartition {
            cliques: comps.into_iter().map(VertexSet::from_sorted).collect(),
        })
    }

    /// u, v non-adjacent in the same component: three consecutive vertices of
    /// a shortest u-v path induce a P3.
    fn induced_p3_between(&self, u: Vertex, v: Vertex, alive: &[bool]) -> (Vertex, Vertex, Vertex) {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in self.neighbors(x) {
                if alive[y] && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mid = parent[v];
        let first = parent[mid];
        debug_assert!(!self.has_edge(first, v));
        (first, mid, v)
    }

    /// Splits G∖S into a clique side and an independent side.
    ///
    /// Among all valid partitions the one with the largest clique side is
    /// returned, with the lexicographically smallest clique side on ties.
    /// Fails with a witnessing induced 2K2, C4 or C5 when G∖S is not split.
    pub fn split_partition(&self, s: &VertexSet) -> Result<SplitPartition, GraphError> {
        let alive = self.alive_mask_without(s);
        let verts: Vec<Vertex> = self.vertices().filter(|&v| alive[v]).collect();

        // Hammer-Simeone: sort by degree within the induced subgraph; the
        // split partition, if any, takes a degree-maximal prefix as clique.
        let deg = |v: Vertex| self.neighbors(v).iter().filter(|&&u| alive[u]).count();
        let mut by_deg = verts.clone();
        by_deg.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));

        let mut m = 0;
        while m < by_deg.len() && deg(by_deg[m]) >= m {
            m += 1;
        }
        let clique: VertexSet = by_deg[..m].iter().copied().collect();
        let indep: VertexSet = by_deg[m..].iter().copied().collect();

        if self.is_clique(&clique) && self.is_independent(&indep) {
            return Ok(self.best_split_partition(&verts, clique, indep));
        }
        Err(GraphError::NotSplitGraph(
            self.split_obstruction(&alive, &verts),
        ))
    }

    fn is_clique(&self, set: &VertexSet) -> bool {
        let items = set.as_slice();
        items
            .iter()
            .enumerate()
            .all(|(i, &u)| items[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    fn is_independent(&self, set: &VertexSet) -> bool {
        let items = set.as_slice();
        items
            .iter()
            .enumerate()
            .all(|(i, &u)| items[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// All split partitions differ from a valid one by moving at most one
    /// vertex per side, so enumerating those moves finds the maximum clique
    /// side and breaks ties lexicographically. The incoming and outgoing
    /// vertex of a swap may be adjacent, so each side is re-checked against
    /// the swapped sets rather than gated on the intermediate ones.
    fn best_split_partition(
        &self,
        verts: &[Vertex],
        clique: VertexSet,
        indep: VertexSet,
    ) -> SplitPartition {
        let mut candidates: Vec<VertexSet> = vec![clique.clone()];
        for u in indep.iter() {
            let grown = clique.union(&VertexSet::singleton(u));
            if self.is_clique(&grown) {
                candidates.push(grown);
            }
        }
        for v in clique.iter() {
            let mut shrunk = clique.clone();
            shrunk.remove(v);
            let mut moved = indep.clone();
            moved.insert(v);
            if self.is_independent(&moved) {
                candidates.push(shrunk.clone());
            }
            for u in indep.iter() {
                let cand_clique = shrunk.union(&VertexSet::singleton(u));
                let mut cand_indep = moved.clone();
                cand_indep.remove(u);
                if self.is_clique(&cand_clique) && self.is_independent(&cand_indep) {
                    candidates.push(cand_clique);
                }
            }
        }
        let best = candidates
            .into_iter()
            .max_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then_with(|| b.as_slice().cmp(a.as_slice()))
            })
            .unwrap();
        let indep: VertexSet = verts
            .iter()
            .copied()
            .filter(|&v| !best.contains(v))
            .collect();
        SplitPartition {
            clique_side: best,
            independent_side: indep,
        }
    }

    fn split_obstruction(&self, alive: &[bool], verts: &[Vertex]) -> SplitObstruction {
        // 2K2: disjoint edge pair with no cross edge.
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .filter(|&(u, v)| alive[u] && alive[v])
            .collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a != c
                    && a != d
                    && b != c
                    && b != d
                    && !self.has_edge(a, c)
                    && !self.has_edge(a, d)
                    && !self.has_edge(b, c)
                    && !self.has_edge(b, d)
                {
                    return SplitObstruction::TwoKTwo([a, b, c, d]);
                }
            }
        }
        // C4: non-adjacent pair with two non-adjacent common neighbors.
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if self.has_edge(u, v) {
                    continue;
                }
                let common: Vec<Vertex> = self
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| alive[w] && self.has_edge(v, w))
                    .collect();
                for (j, &x) in common.iter().enumerate() {
                    for &y in &common[j + 1..] {
                        if !self.has_edge(x, y) {
                            return SplitObstruction::FourCycle([u, x, v, y]);
                        }
                    }
                }
            }
        }
        // C5: at this point one must exist; scan induced 5-cycles.
        for &a in verts {
            for &b in self.neighbors(a) {
                if !alive[b] || b < a {
                    continue;
                }
                for &c in self.neighbors(b) {
                    if !alive[c] || c == a || self.has_edge(a, c) {
                        continue;
                    }
                    for &d in self.neighbors(c) {
                        if !alive[d]
                            || d == a
                            || d == b
                            || self.has_edge(a, d)
                            || self.has_edge(b, d)
                        {
                            continue;
                        }
                        for &e in self.neighbors(d) {
                            if alive[e]
                                && e != b
                                && e != c
                                && self.has_edge(a, e)
                                && !self.has_edge(b, e)
                                && !self.has_edge(c, e)
                            {
                                return SplitObstruction::FiveCycle([a, b, c, d, e]);
                            }
                        }
                    }
                }
            }
        }
        unreachable!("graph failed split recognition but has no 2K2/C4/C5 obstruction");
    }
}

/// The cliques of G∖S, in ascending order of minimum vertex id. The order is
/// fixed here because it defines the block order of every downstream cover
/// instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterPartition {
    cliques: Vec<VertexSet>,
}

impl ClusterPartition {
    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// A clique/independent-set partition of G∖S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique_side: VertexSet,
    pub independent_side: VertexSet,
}
