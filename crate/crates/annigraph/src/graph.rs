//! The two ideal graphs on the vertex set `A(R)*` (nonzero annihilating
//! ideals) and their invariants.
//!
//! Annihilating-ideal graph: `I -- J` iff `IJ = (0)`.
//! Annihilator-ideal graph: `I -- J` iff `Ann(IJ) != Ann(I) ∪ Ann(J)`
//! (set union), equivalently iff some element kills every product `ab`
//! without killing all of `I` or all of `J`. The first edge set is always
//! contained in the second.
//!
//! Adjacency is computed once into a symmetric matrix; connectivity,
//! diameter, girth and shape classification all read the matrix.

use std::fmt;

use thiserror::Error;

use crate::ideal::{Ideal, IdealLattice};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Annihilating-ideal graph, edges `IJ = (0)`.
    Ag,
    /// Annihilator-ideal graph, edges `Ann(IJ) != Ann(I) ∪ Ann(J)`.
    Ai,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Ag => write!(f, "AG"),
            GraphKind::Ai => write!(f, "A_I"),
        }
    }
}

/// A natural number or infinity; girth and diameter values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(usize),
    Infinite,
}

impl ExtNat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

/// Named graph families the theorems compare against. `Star(n)` is
/// `K_{1,n}`; part sizes in `CompleteBipartite` are sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphShape {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Other,
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::Complete(n) => write!(f, "K{n}"),
            GraphShape::Cycle(n) => write!(f, "C{n}"),
            GraphShape::Path(n) => write!(f, "P{n}"),
            GraphShape::Star(n) => write!(f, "K_{{1,{n}}}"),
            GraphShape::CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            GraphShape::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("adjacency requires distinct ideals")]
    NotDistinct,
    #[error("{0} is not a vertex of this graph")]
    UnknownVertex(String),
    #[error("ideal of {0} used with ring {1}")]
    RingMismatch(String, String),
}

/// Tests the annihilating-ideal adjacency `IJ = (0)` for distinct ideals.
pub fn ag_adjacent(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<bool, GraphError> {
    check_pair(ring, i, j)?;
    Ok(products_all_zero(ring, i.elements(), j.elements()))
}

/// Tests the annihilator-ideal adjacency for distinct ideals by scanning for
/// a witness `r` with `r·IJ = 0`, `r·I != 0`, `r·J != 0`. Equivalent to the
/// definitional inequality because `Ann(I) ∪ Ann(J) ⊆ Ann(IJ)` always holds.
pub fn ai_adjacent(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<bool, GraphError> {
    check_pair(ring, i, j)?;
    Ok(ai_adjacent_scan(ring, i.elements(), j.elements()))
}

fn check_pair(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<(), GraphError> {
    for id in [i, j] {
        if id.ring_label() != ring.label() {
            return Err(GraphError::RingMismatch(
                id.ring_label().to_string(),
                ring.label().to_string(),
            ));
        }
    }
    if i == j {
        return Err(GraphError::NotDistinct);
    }
    Ok(())
}

fn products_all_zero(ring: &FiniteRing, a: &[usize], b: &[usize]) -> bool {
    a.iter()
        .all(|&x| b.iter().all(|&y| ring.mul(x, y) == ring.zero()))
}

fn ai_adjacent_scan(ring: &FiniteRing, a: &[usize], b: &[usize]) -> bool {
    let zero = ring.zero();
    // generators of IJ suffice: r kills the product ideal iff it kills all ab
    'witness: for r in ring.elements() {
        for &x in a {
            for &y in b {
                if ring.mul(r, ring.mul(x, y)) != zero {
                    continue 'witness;
                }
            }
        }
        let kills_i = a.iter().all(|&x| ring.mul(r, x) == zero);
        let kills_j = b.iter().all(|&y| ring.mul(r, y) == zero);
        if !kills_i && !kills_j {
            return true;
        }
    }
    false
}

/// One of the two ideal graphs, with vertices in canonical lattice order.
/// An `Ai` graph also carries the `Ag` adjacency on the same vertices so
/// the extra edges `E(A_I) \ E(AG)` can be reported and styled.
#[derive(Debug, Clone)]
pub struct IdealGraph {
    ring: String,
    kind: GraphKind,
    vertices: Vec<Ideal>,
    adj: Vec<bool>,
    ag_adj: Option<Vec<bool>>,
}

impl IdealGraph {
    /// Builds the graph of the requested kind over `A(R)*`.
    pub fn build(ring: &FiniteRing, lattice: &IdealLattice, kind: GraphKind) -> Self {
        let vertices: Vec<Ideal> = lattice
            .annihilating_vertices(ring)
            .into_iter()
            .map(|k| lattice.get(k).clone())
            .collect();
        let n = vertices.len();
        let mut ag = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if products_all_zero(ring, vertices[i].elements(), vertices[j].elements()) {
                    ag[i * n + j] = true;
                    ag[j * n + i] = true;
                }
            }
        }
        match kind {
            GraphKind::Ag => IdealGraph {
                ring: ring.label().to_string(),
                kind,
                vertices,
                adj: ag,
                ag_adj: None,
            },
            GraphKind::Ai => {
                let mut ai = ag.clone();
                for i in 0..n {
                    for j in (i + 1)..n {
                        if !ai[i * n + j]
                            && ai_adjacent_scan(
                                ring,
                                vertices[i].elements(),
                                vertices[j].elements(),
                            )
                        {
                            ai[i * n + j] = true;
                            ai[j * n + i] = true;
                        }
                    }
                }
                IdealGraph {
                    ring: ring.label().to_string(),
                    kind,
                    vertices,
                    adj: ai,
                    ag_adj: Some(ag),
                }
            }
        }
    }

    /// Builds both graphs of a ring in one pass.
    pub fn build_pair(ring: &FiniteRing, lattice: &IdealLattice) -> (IdealGraph, IdealGraph) {
        let ai = Self::build(ring, lattice, GraphKind::Ai);
        let ag = IdealGraph {
            ring: ai.ring.clone(),
            kind: GraphKind::Ag,
            vertices: ai.vertices.clone(),
            adj: ai.ag_adj.clone().unwrap(),
            ag_adj: None,
        };
        (ag, ai)
    }

    /// Test/experimentation constructor: an abstract graph whose vertex `i`
    /// is displayed as `{i}`. Not tied to any ring.
    #[doc(hidden)]
    pub fn synthetic(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![false; n * n];
        for &(a, b) in edges {
            assert!(a < n && b < n && a != b);
            adj[a * n + b] = true;
            adj[b * n + a] = true;
        }
        IdealGraph {
            ring: "synthetic".into(),
            kind: GraphKind::Ag,
            vertices: (0..n)
                .map(|i| Ideal::raw("synthetic".into(), vec![i]))
                .collect(),
            adj,
            ag_adj: None,
        }
    }

    pub fn ring_label(&self) -> &str {
        &self.ring
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Ideal] {
        &self.vertices
    }

    pub fn vertex_index(&self, ideal: &Ideal) -> Option<usize> {
        self.vertices.iter().position(|v| v == ideal)
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.vertices.len() + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.vertices.len()).filter(|&j| self.adjacent(i, j)).count()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Adjacent vertices of a given vertex ideal.
    pub fn neighborhood(&self, ideal: &Ideal) -> Result<Vec<&Ideal>, GraphError> {
        let i = self
            .vertex_index(ideal)
            .ok_or_else(|| GraphError::UnknownVertex(ideal.to_string()))?;
        Ok((0..self.vertices.len())
            .filter(|&j| self.adjacent(i, j))
            .map(|j| &self.vertices[j])
            .collect())
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let n = self.vertices.len();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if self.adjacent(u, v) && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connectivity; the empty and one-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        n <= 1 || self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Maximum eccentricity. `None` for the empty graph (not applicable);
    /// `Finite(0)` for one vertex; `Infinite` when disconnected.
    pub fn diameter(&self) -> Option<ExtNat> {
        let n = self.vertices.len();
        if n == 0 {
            return None;
        }
        let mut max = 0usize;
        for src in 0..n {
            for &d in &self.bfs_distances(src) {
                if d == usize::MAX {
                    return Some(ExtNat::Infinite);
                }
                max = max.max(d);
            }
        }
        Some(ExtNat::Finite(max))
    }

    /// Length of the shortest cycle, or infinity if acyclic. BFS from every
    /// vertex; a non-tree edge `(u, w)` seen from root `r` closes a walk of
    /// length `d(u) + d(w) + 1` through `r`, and the minimum over all roots
    /// and edges is exactly the girth.
    pub fn girth(&self) -> ExtNat {
        let n = self.vertices.len();
        let mut best = usize::MAX;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in 0..n {
                    if !self.adjacent(u, w) {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(best)
        }
    }

    /// All distinct pairs adjacent (vacuously true below two vertices).
    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| ((i + 1)..n).all(|j| self.adjacent(i, j)))
    }

    /// Part sizes `(m, n)` with `m <= n` when the graph is complete
    /// bipartite with two nonempty parts, i.e. when the complement is a
    /// disjoint union of exactly two cliques.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        if n < 2 {
            return None;
        }
        // components of the complement graph
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(u) = stack.pop() {
                for (v, slot) in comp.iter_mut().enumerate() {
                    if u != v && !self.adjacent(u, v) && *slot == usize::MAX {
                        *slot = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        if count != 2 {
            return None;
        }
        // each complement component must be a complement-clique
        for i in 0..n {
            for j in (i + 1)..n {
                if comp[i] == comp[j] && self.adjacent(i, j) {
                    return None;
                }
            }
        }
        let m = comp.iter().filter(|&&c| c == 0).count();
        Some((m.min(n - m), m.max(n - m)))
    }

    /// Star graph `K_{1,n}` for some `n >= 1`; includes `K_{1,1} = K2`.
    pub fn is_star(&self) -> bool {
        matches!(self.complete_bipartite_parts(), Some((1, _)))
    }

    /// Vertices of maximal degree `|V| - 1` in a star graph. A unique center
    /// for `K_{1,n}` with `n >= 2`; both vertices for `K_{1,1}`.
    pub fn star_centers(&self) -> Vec<usize> {
        let n = self.vertices.len();
        if !self.is_star() {
            return Vec::new();
        }
        (0..n).filter(|&i| self.degree(i) == n - 1).collect()
    }

    fn is_path_graph(&self) -> bool {
        let n = self.vertices.len();
        if n < 2 || !self.is_connected() || self.edge_count() != n - 1 {
            return false;
        }
        let ones = (0..n).filter(|&i| self.degree(i) == 1).count();
        let twos = (0..n).filter(|&i| self.degree(i) == 2).count();
        ones == 2 && ones + twos == n
    }

    fn is_cycle_graph(&self) -> bool {
        let n = self.vertices.len();
        n >= 3 && self.is_connected() && (0..n).all(|i| self.degree(i) == 2)
    }

    /// Classifies against the named families, most specific tag first:
    /// Complete > Cycle > Path > Star > CompleteBipartite > Other. The Path
    /// arm applies at order >= 4 (P2 is K2, P3 is the star K_{1,2}).
    pub fn classify(&self) -> GraphShape {
        let n = self.vertices.len();
        if n == 0 {
            return GraphShape::Other;
        }
        if self.is_complete() {
            return GraphShape::Complete(n);
        }
        if self.is_cycle_graph() {
            return GraphShape::Cycle(n);
        }
        if n >= 4 && self.is_path_graph() {
            return GraphShape::Path(n);
        }
        if let Some((m, k)) = self.complete_bipartite_parts() {
            if m == 1 {
                return GraphShape::Star(k);
            }
            return GraphShape::CompleteBipartite(m, k);
        }
        GraphShape::Other
    }

    /// The induced subgraph on vertices that are nilpotent ideals.
    pub fn induced_on_nilpotent(&self, ring: &FiniteRing) -> IdealGraph {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| {
                crate::ideal::is_nilpotent_ideal(ring, &self.vertices[i]).unwrap()
            })
            .collect();
        self.induced(&keep)
    }

    fn induced(&self, keep: &[usize]) -> IdealGraph {
        let n = keep.len();
        let mut adj = vec![false; n * n];
        let mut ag_adj = self.ag_adj.as_ref().map(|_| vec![false; n * n]);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                adj[a * n + b] = self.adjacent(i, j);
                if let Some(ag) = ag_adj.as_mut() {
                    ag[a * n + b] = self.ag_adj.as_ref().unwrap()[i * self.vertices.len() + j];
                }
            }
        }
        IdealGraph {
            ring: self.ring.clone(),
            kind: self.kind,
            vertices: keep.iter().map(|&i| self.vertices[i].clone()).collect(),
            adj,
            ag_adj,
        }
    }

    /// DOT rendering. Vertices are emitted in canonical order and labelled
    /// by their element sets; on an `A_I` graph the edges missing from the
    /// `AG` graph are styled dashed.
    pub fn to_dot(&self) -> String {
        let mut out = format!("// {}({})\n", self.kind, self.ring);
        if self.vertices.is_empty() {
            out.push_str("graph { }\n");
            return out;
        }
        out.push_str("graph {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (i, j) in self.edges() {
            let dashed = match &self.ag_adj {
                Some(ag) => !ag[i * self.vertices.len() + j],
                None => false,
            };
            let style = if dashed { " [style=dashed]" } else { "" };
            out.push_str(&format!(
                "  \"{}\" -- \"{}\"{style};\n",
                self.vertices[i], self.vertices[j]
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// `E(A_I) \ E(AG)` as canonical index pairs over the common vertex order.
/// Both graphs must come from the same ring (same vertex list).
pub fn extra_edges(ag: &IdealGraph, ai: &IdealGraph) -> Vec<(usize, usize)> {
    assert_eq!(ag.vertices, ai.vertices, "graphs over different vertex sets");
    ai.edges()
        .into_iter()
        .filter(|&(i, j)| !ag.adjacent(i, j))
        .collect()
}
