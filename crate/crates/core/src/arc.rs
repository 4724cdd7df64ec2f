//! Discrete arc models of circular-arc graphs.
//!
//! An arc on the circle `Z_m` is a run `{start, start+1, …, start+size-1}`
//! with `1 <= size <= m - 1`; its end-points are `start` and
//! `start + size - 1`. An [`ArcFunction`] assigns one arc to each vertex and
//! additionally requires every circle point to be an end-point of some arc
//! and every arc to have at least two points.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::error::{ArcCondition, Error, Result};
use crate::graph::{twin_relation, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub start: usize,
    pub size: usize,
}

impl Arc {
    pub fn new(start: usize, size: usize) -> Self {
        Arc { start, size }
    }

    pub fn end(&self, m: usize) -> usize {
        (self.start + self.size - 1) % m
    }

    pub fn points(&self, m: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (0..self.size).map(move |i| (start + i) % m)
    }

    pub fn contains(&self, m: usize, p: usize) -> bool {
        (p + m - self.start) % m < self.size
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcFunction {
    m: usize,
    arcs: Vec<Arc>,
}

fn arc_err(condition: ArcCondition, detail: String) -> Error {
    Error::Arc { condition, detail }
}

impl ArcFunction {
    pub fn new(m: usize, arcs: Vec<Arc>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for (v, a) in arcs.iter().enumerate() {
            if a.start >= m || a.size == 0 || a.size >= m {
                return Err(arc_err(
                    ArcCondition::Bounds,
                    format!("arc of vertex {v} (start {}, size {}) on Z_{m}", a.start, a.size),
                ));
            }
            if a.size < 2 {
                return Err(arc_err(ArcCondition::MinSize, format!("arc of vertex {v} has one point")));
            }
        }
        let f = ArcFunction { m, arcs };
        let counts = f.endpoint_counts();
        if let Some(p) = counts.iter().position(|&c| c == 0) {
            return Err(arc_err(
                ArcCondition::EndpointCover,
                format!("point {p} is not an end-point of any arc"),
            ));
        }
        Ok(f)
    }

    /// Arcs `{i, …, i+k}` on `Z_n`, whose intersection graph is `C_{n,k}`.
    pub fn standard_model(n: usize, k: usize) -> Result<Self> {
        if k < 1 || 2 * k + 1 >= n {
            return Err(Error::InvalidParameters(format!(
                "standard model needs 1 <= k and 2k+1 < n, got n={n}, k={k}"
            )));
        }
        ArcFunction::new(n, (0..n).map(|i| Arc::new(i, k + 1)).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_vertices(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Number of arcs having each point as an end-point.
    pub fn endpoint_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m];
        for a in &self.arcs {
            counts[a.start] += 1;
            counts[a.end(self.m)] += 1;
        }
        counts
    }

    fn membership(&self) -> Vec<Vec<bool>> {
        self.arcs
            .iter()
            .map(|a| (0..self.m).map(|p| a.contains(self.m, p)).collect())
            .collect()
    }

    /// Vertices adjacent iff their arcs share a point.
    pub fn intersection_graph(&self) -> Graph {
        let member = self.membership();
        Graph::from_fn(self.arcs.len(), |u, v| {
            member[u].iter().zip(&member[v]).any(|(&a, &b)| a && b)
        })
    }

    /// Violations of the reduced-model conditions: no containment, length
    /// equal to the vertex count, every point an end-point of exactly two
    /// arcs. At most one error per condition, in that order.
    pub fn reduced_violations(&self) -> Vec<Error> {
        let m = self.m;
        let mut out = Vec::new();
        let containment = self.arcs.iter().enumerate().find_map(|(u, a)| {
            self.arcs
                .iter()
                .enumerate()
                .find(|&(v, b)| u != v && b.size >= a.size && a.points(m).all(|p| b.contains(m, p)))
                .map(|(v, _)| (u, v))
        });
        if let Some((u, v)) = containment {
            out.push(arc_err(
                ArcCondition::NoContainment,
                format!("arc of {u} is contained in arc of {v}"),
            ));
        }
        if m != self.n_vertices() {
            out.push(arc_err(
                ArcCondition::LengthEqualsOrder,
                format!("length {m} but {} vertices", self.n_vertices()),
            ));
        }
        if let Some((p, c)) = self.endpoint_counts().into_iter().enumerate().find(|&(_, c)| c != 2) {
            out.push(arc_err(
                ArcCondition::ExactlyTwoEndpoints,
                format!("point {p} is an end-point of {c} arcs"),
            ));
        }
        out
    }

    /// Collapses points that lie in exactly the same arcs, producing a
    /// reduced model with the same intersection graph.
    ///
    /// Requires a graph with edges satisfying the neighborhood condition
    /// (see [`check_neighborhood_condition`]).
    pub fn reduce(&self) -> Result<ReducedArcFunction> {
        let g = self.intersection_graph();
        if g.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        if let NeighborhoodCheck::Violated(u, v) = check_neighborhood_condition(&g) {
            return Err(Error::NeighborhoodCondition(u, v));
        }
        let m = self.m;
        let member = self.membership();
        let signature = |p: usize| -> Vec<bool> { member.iter().map(|row| row[p]).collect() };

        // start the walk at a class boundary so no class wraps around
        let first = (0..m)
            .find(|&p| signature(p) != signature((p + m - 1) % m))
            .ok_or_else(|| Error::Reduction("every point lies in the same arcs".into()))?;
        let mut class_of = vec![0usize; m];
        let mut seen_signatures: Vec<Vec<bool>> = Vec::new();
        for i in 0..m {
            let p = (first + i) % m;
            let sig = signature(p);
            if seen_signatures.last() != Some(&sig) {
                if seen_signatures.contains(&sig) {
                    return Err(Error::Reduction(format!(
                        "class of point {p} is not a circular interval"
                    )));
                }
                seen_signatures.push(sig);
            }
            class_of[p] = seen_signatures.len() - 1;
        }
        let reduced_m = seen_signatures.len();
        let arcs = self
            .arcs
            .iter()
            .map(|a| {
                let start = class_of[a.start];
                let end = class_of[a.end(m)];
                Arc::new(start, (end + reduced_m - start) % reduced_m + 1)
            })
            .collect();
        let f = ArcFunction::new(reduced_m, arcs)
            .map_err(|e| Error::Reduction(format!("collapsed model invalid: {e}")))?;
        if f.intersection_graph() != g {
            return Err(Error::Reduction("intersection graph changed".into()));
        }
        ReducedArcFunction::certify(f).map_err(|e| Error::Reduction(e.to_string()))
    }

    /// Random valid arc model with `n >= 2` arcs. Arcs are drawn on a circle
    /// of `4n` positions, each with two distinct end-points, and then
    /// compressed to the set of end-points so that every point is an
    /// end-point. Samples where an arc would cover the whole compressed
    /// circle are redrawn.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self::random_with_lengths(n, 2..=4 * n - 1, rng)
    }

    /// Like [`ArcFunction::random`] with arc lengths on the `4n` circle drawn
    /// from `lengths` (clamped to `2..=4n-1`). Narrow ranges give models
    /// with few containments.
    pub fn random_with_lengths<R: Rng + ?Sized>(n: usize, lengths: RangeInclusive<usize>, rng: &mut R) -> Self {
        assert!(n >= 2, "a single arc always covers its compressed circle");
        let big = 4 * n;
        let lo = (*lengths.start()).clamp(2, big - 1);
        let hi = (*lengths.end()).clamp(lo, big - 1);
        loop {
            let arcs: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let s = rng.gen_range(0..big);
                    let len = rng.gen_range(lo..=hi);
                    (s, (s + len - 1) % big)
                })
                .collect();
            if let Ok(f) = Self::compress(&arcs) {
                return f;
            }
        }
    }

    /// A random model with the same intersection graph and arc order. Each
    /// point becomes a run of one to three points; arcs starting there start
    /// in the first part of the run and arcs ending there end in the rest,
    /// so every pair that met still meets.
    pub fn random_expansion<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let m = self.m;
        let mut offset = Vec::with_capacity(m);
        let mut split = Vec::with_capacity(m);
        let mut len = Vec::with_capacity(m);
        let mut total = 0;
        for _ in 0..m {
            let t = rng.gen_range(1..=3);
            offset.push(total);
            split.push(rng.gen_range(1..=t));
            len.push(t);
            total += t;
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|a| {
                let (p, q) = (a.start, a.end(m));
                let s = offset[p] + rng.gen_range(0..split[p]);
                let e = offset[q] + rng.gen_range(split[q] - 1..len[q]);
                (s, e)
            })
            .collect();
        Self::compress(&arcs).expect("expansion keeps every arc proper")
    }

    /// Arcs given by end-points `(first, last)` on a circle of any length,
    /// compressed to the used end-points. Pairs of arcs meet in an end-point
    /// of one of them, so the intersection graph is unchanged.
    fn compress(arcs: &[(usize, usize)]) -> Result<Self> {
        let mut ends: Vec<usize> = arcs.iter().flat_map(|&(s, e)| [s, e]).collect();
        ends.sort_unstable();
        ends.dedup();
        let m = ends.len();
        let idx = |p: usize| ends.binary_search(&p).unwrap();
        let compressed = arcs
            .iter()
            .map(|&(s, e)| {
                let (a, b) = (idx(s), idx(e));
                Arc::new(a, (b + m - a) % m + 1)
            })
            .collect();
        ArcFunction::new(m, compressed)
    }
}

/// An arc function with no containments, circle length equal to the vertex
/// count, and every point an end-point of exactly two arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedArcFunction(ArcFunction);

impl ReducedArcFunction {
    pub fn certify(f: ArcFunction) -> Result<Self> {
        if let Some(e) = f.reduced_violations().into_iter().next() {
            return Err(e);
        }
        Ok(ReducedArcFunction(f))
    }

    pub fn arc_function(&self) -> &ArcFunction {
        &self.0
    }

    pub fn into_inner(self) -> ArcFunction {
        self.0
    }

    /// Every degree equals `2|f(v)| - 2`; on a regular graph of degree `d`
    /// this also means `|f(v)| = (d + 2) / 2`.
    pub fn degree_check(&self) -> bool {
        let g = self.0.intersection_graph();
        let per_vertex = self
            .0
            .arcs
            .iter()
            .enumerate()
            .all(|(v, a)| g.degree(v) == 2 * a.size - 2);
        let regular = match g.regular_degree() {
            Some(d) => self.0.arcs.iter().all(|a| 2 * a.size == d + 2),
            None => true,
        };
        per_vertex && regular
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodCheck {
    Holds,
    /// `uR ⊆ {v} ∪ vR` for the adjacent pair `(u, v)`.
    Violated(usize, usize),
}

impl NeighborhoodCheck {
    pub fn holds(&self) -> bool {
        matches!(self, NeighborhoodCheck::Holds)
    }
}

/// For every ordered adjacent pair `(u, v)`, `u` has a neighbor other than
/// `v` outside `vR`.
pub fn check_neighborhood_condition(g: &Graph) -> NeighborhoodCheck {
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            let escapes = g.neighbors(u).any(|w| w != v && !g.adjacent(v, w));
            if !escapes {
                return NeighborhoodCheck::Violated(u, v);
            }
        }
    }
    NeighborhoodCheck::Holds
}

/// For a twin-free circular-arc graph with edges: regularity is equivalent
/// to the neighborhood condition. Both sides are evaluated; disagreement
/// means the input was not a circular-arc graph. Returns whether `g` is
/// regular.
pub fn is_regular_equivalent(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let twins = twin_relation(g);
    if let Some(c) = twins.classes().iter().find(|c| c.len() > 1) {
        return Err(Error::HasTwins(c[0], c[1]));
    }
    let regular = g.regular_degree().is_some();
    if regular != check_neighborhood_condition(g).holds() {
        return Err(Error::Biconditional { regular });
    }
    Ok(regular)
}
