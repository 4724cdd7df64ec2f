//! Finite simple undirected graphs on the vertex set `0..n`.
//!
//! Adjacency is a dense boolean matrix. Graphs in this crate are small
//! (closures are cubic in `n`), so the matrix is the simplest representation
//! that keeps every query O(1).

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Graph with exactly the given undirected edges.
    ///
    /// Loops, out-of-range endpoints and repeated edges (in either
    /// orientation) are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if g.adjacent(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if f(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("complete graph needs n >= 1".into()));
        }
        Ok(Graph::from_fn(n, |_, _| true))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters("cycle needs n >= 3".into()));
        }
        Ok(Graph::from_fn(n, |u, v| v - u == 1 || v - u == n - 1))
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Graph::from_fn(n, |u, v| v - u == 1))
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_fn(leaves + 1, |u, _| u == 0)
    }

    pub fn petersen() -> Self {
        // outer 5-cycle 0..5, inner pentagram 5..10, spokes i - i+5
        Graph::from_fn(10, |u, v| {
            if v < 5 {
                (v - u) % 5 == 1 || (v - u) % 5 == 4
            } else if u >= 5 {
                (v - u) % 5 == 2 || (v - u) % 5 == 3
            } else {
                v == u + 5
            }
        })
    }

    /// The elementary circular-arc graph `C_{n,k}`: the Cayley graph of
    /// `Z_n` with connection set `{±1, …, ±k}`. Requires `2k + 1 < n`.
    pub fn elementary_caw(n: usize, k: usize) -> Result<Self> {
        if 2 * k + 1 >= n {
            return Err(Error::InvalidParameters(format!(
                "C_{{n,k}} needs 2k+1 < n, got n={n}, k={k}"
            )));
        }
        Ok(Graph::from_fn(n, |u, v| circular_distance(u, v, n) <= k))
    }

    /// Disjoint union of `m` copies of `K_r`.
    pub fn disjoint_cliques(m: usize, r: usize) -> Result<Self> {
        if m == 0 || r == 0 {
            return Err(Error::InvalidParameters("mK_r needs m, r >= 1".into()));
        }
        Ok(Graph::lex_product(&Graph::empty(m), &Graph::complete(r)?))
    }

    /// Lexicographic product `outer[inner]`. Vertex `(a, b)` with `a` from
    /// `outer` and `b` from `inner` is encoded as `a * inner.n() + b`.
    pub fn lex_product(outer: &Graph, inner: &Graph) -> Self {
        let r = inner.n;
        Graph::from_fn(outer.n * r, |u, v| {
            let (a1, b1) = (u / r, u % r);
            let (a2, b2) = (v / r, v % r);
            outer.adjacent(a1, a2) || (a1 == a2 && inner.adjacent(b1, b2))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub(crate) fn row(&self, u: usize) -> &[bool] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u)
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().filter(|&&a| a).count()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .filter(|(&a, &b)| a && b)
            .count()
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        Graph::from_fn(vertices.len(), |i, j| {
            self.adjacent(vertices[i], vertices[j])
        })
    }

    /// True twins: adjacent with equal closed neighborhoods.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        u != v
            && self.adjacent(u, v)
            && (0..self.n).all(|w| w == u || w == v || self.adjacent(u, w) == self.adjacent(v, w))
    }
}

/// Distance between `i` and `j` on the cycle `Z_n`.
pub fn circular_distance(i: usize, j: usize, n: usize) -> usize {
    let d = (j + n - i) % n;
    d.min(n - d)
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidParameters(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
    }
    Ok(())
}

/// A partition of `0..n` into nonempty classes.
///
/// Classes are kept sorted internally and ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl VertexPartition {
    pub fn from_classes(n: usize, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; n];
        for c in classes.iter_mut() {
            if c.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            c.sort_unstable();
        }
        classes.sort_by_key(|c| c[0]);
        for (i, c) in classes.iter().enumerate() {
            for &v in c {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two classes")));
                }
                class_of[v] = i;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(VertexPartition { classes, class_of })
    }

    /// Groups `0..keys.len()` by equal key.
    pub(crate) fn from_keys<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::new();
        for (v, key) in keys.into_iter().enumerate() {
            let next = classes.len();
            let c = *index.entry(key).or_insert(next);
            if c == next {
                classes.push(Vec::new());
            }
            classes[c].push(v);
            class_of.push(c);
        }
        VertexPartition { classes, class_of }
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            classes: (0..n).map(|v| vec![v]).collect(),
            class_of: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Partition of the vertices into classes of pairwise twins.
///
/// Only adjacent vertices can be twins, so equal closed neighborhoods
/// decide the relation; non-adjacent vertices with equal open
/// neighborhoods stay apart.
pub fn twin_relation(g: &Graph) -> VertexPartition {
    VertexPartition::from_keys((0..g.n).map(|v| {
        let mut closed = g.row(v).to_vec();
        closed[v] = true;
        closed
    }))
}

/// `Γ_{V/E}`: classes are adjacent when some pair across them is.
pub fn quotient_graph(g: &Graph, p: &VertexPartition) -> Result<Graph> {
    if p.n() != g.n {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n
        )));
    }
    let mut q = Graph::empty(p.len());
    for (u, v) in g.edges() {
        let (a, b) = (p.class_of(u), p.class_of(v));
        if a != b {
            q.set(a, b);
        }
    }
    Ok(q)
}

/// Splits the edge set by the number of common neighbors of the endpoints.
/// Each level holds unordered edges `(u, v)`, `u < v`; since `|uR ∩ vR|` is
/// symmetric in `u, v` every level is a symmetric relation.
pub fn edge_level_partition(g: &Graph) -> BTreeMap<usize, Vec<(usize, usize)>> {
    let mut levels: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v) in g.edges() {
        levels.entry(g.common_neighbors(u, v)).or_default().push((u, v));
    }
    levels
}
