//! Coherent closure by two-dimensional Weisfeiler-Leman refinement.
//!
//! Pairs start colored by `(u = v, memberships of (u,v), memberships of
//! (v,u))`. Each round recolors `(u, v)` by its old color together with the
//! sorted multiset `{(color(u,w), color(w,v)) : w ∈ V}`. The new partition
//! refines the old one, so the loop stops as soon as the number of colors
//! stops growing. The stable partition is the coarsest coherent
//! configuration in which every input relation is a union of colors.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scheme::CoherentConfiguration;

pub const DEFAULT_CLOSURE_LIMIT: usize = 200;

/// Relations on `0..n` whose coherent closure is requested.
#[derive(Debug, Clone)]
pub struct RelationSet {
    n: usize,
    relations: Vec<Vec<bool>>,
}

impl RelationSet {
    pub fn new(n: usize) -> Self {
        RelationSet {
            n,
            relations: Vec::new(),
        }
    }

    /// Adds a relation given as a row-major `n * n` membership matrix.
    pub fn push(&mut self, relation: Vec<bool>) -> Result<()> {
        if relation.len() != self.n * self.n {
            return Err(Error::InvalidParameters(format!(
                "relation has {} entries, expected {}",
                relation.len(),
                self.n * self.n
            )));
        }
        self.relations.push(relation);
        Ok(())
    }

    pub fn push_pairs(&mut self, pairs: &[(usize, usize)]) -> Result<()> {
        let n = self.n;
        let mut rel = vec![false; n * n];
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            rel[u * n + v] = true;
        }
        self.relations.push(rel);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

/// Smallest scheme in which every relation of `rs` is a union of colors.
pub fn coherent_closure(rs: &RelationSet) -> Result<CoherentConfiguration> {
    let n = rs.n;
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut initial: HashMap<(bool, Vec<bool>, Vec<bool>), usize> = HashMap::new();
    let mut colors = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let fwd: Vec<bool> = rs.relations.iter().map(|r| r[u * n + v]).collect();
            let back: Vec<bool> = rs.relations.iter().map(|r| r[v * n + u]).collect();
            let next = initial.len();
            colors.push(*initial.entry((u == v, fwd, back)).or_insert(next));
        }
    }
    let mut rank = initial.len();
    loop {
        let (next, next_rank) = refine(n, &colors);
        colors = next;
        if next_rank == rank {
            break;
        }
        rank = next_rank;
    }
    Ok(CoherentConfiguration::from_verified(n, &colors))
}

/// One refinement round. New ids follow first appearance in row-major order.
fn refine(n: usize, colors: &[usize]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<(usize, Vec<u64>), usize> = HashMap::new();
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let mut sig: Vec<u64> = (0..n)
                .map(|w| ((colors[u * n + w] as u64) << 32) | colors[w * n + v] as u64)
                .collect();
            sig.sort_unstable();
            let next = ids.len();
            out.push(*ids.entry((colors[u * n + v], sig)).or_insert(next));
        }
    }
    let rank = ids.len();
    (out, rank)
}

/// The scheme of a graph: closure of its (symmetric) edge relation.
pub fn closure_of_graph(g: &Graph) -> CoherentConfiguration {
    let n = g.n();
    let mut rs = RelationSet::new(n);
    let edges: Vec<bool> = (0..n * n).map(|i| g.adjacent(i / n, i % n)).collect();
    rs.push(edges).expect("edge matrix has n*n entries");
    coherent_closure(&rs).expect("graphs have at least one vertex")
}

/// Like [`closure_of_graph`] but refuses graphs above `limit` vertices.
pub fn closure_of_graph_with_limit(g: &Graph, limit: usize) -> Result<CoherentConfiguration> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "closure",
            size: g.n(),
            limit,
        });
    }
    Ok(closure_of_graph(g))
}
