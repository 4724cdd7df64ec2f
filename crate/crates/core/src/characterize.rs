//! Recognition of circular-arc graphs with an association scheme.
//!
//! Such a graph is `C_{m,k}[K_r]`: its twin classes all have size `r` and
//! the twin quotient is the elementary graph `C_{m,k}`. The scheme is then
//! `K_r ≀ X` with `X` of rank 2, a wreath of two rank-2 schemes (the
//! `K_{2k+2}` minus a perfect matching case) or dihedral.

use std::fmt;

use crate::closure::closure_of_graph;
use crate::error::{Error, Result};
use crate::graph::{circular_distance, edge_level_partition, quotient_graph, twin_relation, Graph};
use crate::scheme::{schemes_isomorphic_with_limit, CoherentConfiguration, Verdict};

/// `labels[v]` is the position of vertex `v` on `Z_n`; adjacency is
/// circular distance at most `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryWitness {
    pub n: usize,
    pub k: usize,
    pub labels: Vec<usize>,
}

/// Returns a witness that `g` is `C_{n,k}` up to relabeling, or `None`.
///
/// In the generic case `n > 2k + 2` the pairs at circular distance one are
/// exactly the edges whose ends share `2k - 2` neighbors, so that level
/// of [`edge_level_partition`] is a Hamiltonian cycle giving the order.
pub fn is_elementary_caw(g: &Graph) -> Option<ElementaryWitness> {
    let n = g.n();
    let degree = g.regular_degree()?;
    if degree == 0 {
        return (n >= 2).then(|| ElementaryWitness {
            n,
            k: 0,
            labels: (0..n).collect(),
        });
    }
    if degree % 2 == 1 || twin_relation(g).len() != n {
        return None;
    }
    let k = degree / 2;
    if n <= 2 * k + 1 {
        return None;
    }
    let labels = if n == 2 * k + 2 {
        matching_labels(g, k)?
    } else {
        cycle_labels(g, k)?
    };
    let witness = ElementaryWitness { n, k, labels };
    witness.check(g).then_some(witness)
}

impl ElementaryWitness {
    /// Edge-exact comparison against `C_{n,k}`.
    pub fn check(&self, g: &Graph) -> bool {
        let n = self.n;
        if g.n() != n || self.labels.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &l in &self.labels {
            if l >= n || std::mem::replace(&mut seen[l], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                g.adjacent(u, v) == (circular_distance(self.labels[u], self.labels[v], n) <= self.k)
            })
        })
    }
}

// K_{2k+2} minus a perfect matching: the j-th matched pair goes to j, j+k+1.
fn matching_labels(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if labels[v] != usize::MAX {
            continue;
        }
        let mut missing = (0..n).filter(|&u| u != v && !g.adjacent(u, v));
        let mate = missing.next()?;
        if missing.next().is_some() || labels[mate] != usize::MAX {
            return None;
        }
        labels[v] = next;
        labels[mate] = next + k + 1;
        next += 1;
    }
    Some(labels)
}

fn cycle_labels(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let level = edge_level_partition(g).remove(&(2 * k - 2))?;
    if level.len() != n {
        return None;
    }
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in level {
        next[u].push(v);
        next[v].push(u);
    }
    if next.iter().any(|ns| ns.len() != 2) {
        return None;
    }
    let mut labels = vec![usize::MAX; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for i in 0..n {
        if labels[cur] != usize::MAX {
            return None;
        }
        labels[cur] = i;
        let step = if next[cur][0] == prev { next[cur][1] } else { next[cur][0] };
        prev = cur;
        cur = step;
    }
    // a single cycle returns to the start after n steps
    (cur == 0).then_some(labels)
}

/// First stage at which recognition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedStage {
    NonAssociation,
    UnequalTwinClasses,
    TwinClassStructure,
    QuotientNotElementary,
    RelabelingMismatch,
    SchemeMismatch,
}

impl FailedStage {
    pub fn label(&self) -> &'static str {
        match self {
            FailedStage::NonAssociation => "non-association",
            FailedStage::UnequalTwinClasses => "unequal-twin-classes",
            FailedStage::TwinClassStructure => "twin-class-structure",
            FailedStage::QuotientNotElementary => "quotient-not-elementary",
            FailedStage::RelabelingMismatch => "relabeling-mismatch",
            FailedStage::SchemeMismatch => "scheme-mismatch",
        }
    }
}

impl fmt::Display for FailedStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Certificate `g ≅ C_{m,k}[K_r]`.
///
/// `relabeling[v] = (i, j)` sends `v` to vertex `j` of the clique at
/// position `i` of `Z_m`. Complete graphs get `m = 1, k = 0, r = n`, the
/// only certificate with `2k + 1 >= m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    pub k: usize,
    pub r: usize,
    pub relabeling: Vec<(usize, usize)>,
}

impl Decomposition {
    /// The relabeling as a permutation into [`Graph::lex_product`] order.
    pub fn permutation(&self) -> Vec<usize> {
        self.relabeling.iter().map(|&(i, j)| i * self.r + j).collect()
    }

    /// `C_{m,k}[K_r]`, or `K_r` when `m = 1`.
    pub fn model_graph(&self) -> Result<Graph> {
        let outer = if self.m == 1 {
            Graph::empty(1)
        } else {
            Graph::elementary_caw(self.m, self.k)?
        };
        Ok(Graph::lex_product(&outer, &Graph::complete(self.r)?))
    }

    /// Edge-exact check that the relabeling is an isomorphism onto the model.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(model) = self.model_graph() else {
            return false;
        };
        if model.n() != g.n() || self.relabeling.len() != g.n() {
            return false;
        }
        let perm = self.permutation();
        let mut seen = vec![false; g.n()];
        for &p in &perm {
            if p >= g.n() || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.adjacent(u, v) == model.adjacent(perm[u], perm[v])))
    }
}

pub fn decompose_caw(g: &Graph) -> std::result::Result<Decomposition, FailedStage> {
    if !closure_of_graph(g).is_association() {
        return Err(FailedStage::NonAssociation);
    }
    decompose_association(g)
}

// Everything after the scheme test, so callers holding a closure skip
// recomputing it.
fn decompose_association(g: &Graph) -> std::result::Result<Decomposition, FailedStage> {
    let n = g.n();
    let twins = twin_relation(g);
    let r = twins.classes()[0].len();
    if twins.classes().iter().any(|c| c.len() != r) {
        return Err(FailedStage::UnequalTwinClasses);
    }
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (twins.class_of(u), twins.class_of(v));
            let rep = (twins.classes()[a][0], twins.classes()[b][0]);
            let expect = if a == b { true } else { g.adjacent(rep.0, rep.1) };
            if g.adjacent(u, v) != expect {
                return Err(FailedStage::TwinClassStructure);
            }
        }
    }
    let quotient = quotient_graph(g, &twins).expect("twin partition covers the graph");
    let (m, k, labels) = if quotient.n() == 1 {
        (1, 0, vec![0])
    } else {
        let w = is_elementary_caw(&quotient).ok_or(FailedStage::QuotientNotElementary)?;
        (w.n, w.k, w.labels)
    };
    let relabeling = (0..n)
        .map(|v| {
            let class = twins.class_of(v);
            let j = twins.classes()[class].iter().position(|&u| u == v).unwrap();
            (labels[class], j)
        })
        .collect();
    let d = Decomposition { m, k, r, relabeling };
    if !d.verify(g) {
        return Err(FailedStage::RelabelingMismatch);
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterKind {
    /// `k = 0`: rank 2 (or a single point).
    Rank2,
    /// `m = 2k + 2`: rank-2 on two points wreathed with rank-2 on `k + 1`.
    ForestalMatching,
    /// `m > 2k + 2`, `k >= 1`.
    Dihedral,
}

impl OuterKind {
    pub fn label(&self) -> &'static str {
        match self {
            OuterKind::Rank2 => "rank2",
            OuterKind::ForestalMatching => "forestal-matching",
            OuterKind::Dihedral => "dihedral",
        }
    }

    pub fn of(m: usize, k: usize) -> Self {
        if k == 0 {
            OuterKind::Rank2
        } else if m == 2 * k + 2 {
            OuterKind::ForestalMatching
        } else {
            OuterKind::Dihedral
        }
    }

    /// The outer factor scheme on `m` points.
    pub fn scheme(&self, m: usize, k: usize) -> Result<CoherentConfiguration> {
        match self {
            OuterKind::Rank2 => Ok(CoherentConfiguration::trivial(m)),
            OuterKind::ForestalMatching => Ok(CoherentConfiguration::wreath_product(
                &CoherentConfiguration::rank2(2)?,
                &CoherentConfiguration::trivial(k + 1),
            )),
            OuterKind::Dihedral => CoherentConfiguration::dihedral(m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeDecomposition {
    pub decomposition: Decomposition,
    pub outer_kind: OuterKind,
    pub inner_size: usize,
    pub outer_size: usize,
    /// Never upgraded: `AlgebraicOnly` above the search limit.
    pub verdict: Verdict,
}

/// `K_r ≀ X` for a certificate.
pub fn predicted_scheme(d: &Decomposition) -> Result<CoherentConfiguration> {
    let outer = OuterKind::of(d.m, d.k).scheme(d.m, d.k)?;
    Ok(CoherentConfiguration::wreath_product(
        &CoherentConfiguration::trivial(d.r),
        &outer,
    ))
}

/// Decomposes `g` and compares its scheme with the predicted wreath product.
/// A definitive non-isomorphism is reported as [`FailedStage::SchemeMismatch`].
pub fn scheme_decomposition(g: &Graph, iso_limit: usize) -> std::result::Result<SchemeDecomposition, FailedStage> {
    let closure = closure_of_graph(g);
    if !closure.is_association() {
        return Err(FailedStage::NonAssociation);
    }
    let d = decompose_association(g)?;
    let predicted = predicted_scheme(&d).map_err(|_| FailedStage::SchemeMismatch)?;
    let verdict = schemes_isomorphic_with_limit(&closure, &predicted, iso_limit);
    if verdict == Verdict::NotIsomorphic {
        return Err(FailedStage::SchemeMismatch);
    }
    Ok(SchemeDecomposition {
        outer_kind: OuterKind::of(d.m, d.k),
        inner_size: d.r,
        outer_size: d.m,
        decomposition: d,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathReport {
    /// Scheme of `outer[K_r]` is a fusion of `closure(K_r) ≀ closure(outer)`.
    pub fusion: bool,
    /// Outer is twin-free with an association scheme, so the two schemes
    /// must be isomorphic.
    pub iso_required: bool,
    pub verdict: Verdict,
    pub passed: bool,
}

/// Checks the wreath theorem for `outer[K_r]`. Both schemes live on the
/// same points since lex and wreath products use the same encoding.
pub fn verify_wreath_theorem(r: usize, outer: &Graph, limit: usize) -> Result<WreathReport> {
    let size = outer.n() * r;
    if size > limit {
        return Err(Error::SizeLimit {
            what: "wreath check",
            size,
            limit,
        });
    }
    let inner = Graph::complete(r)?;
    let lex = closure_of_graph(&Graph::lex_product(outer, &inner));
    let outer_scheme = closure_of_graph(outer);
    let wreath = CoherentConfiguration::wreath_product(&closure_of_graph(&inner), &outer_scheme);
    let fusion = CoherentConfiguration::is_fusion_of(&lex, &wreath)?;
    let iso_required = twin_relation(outer).len() == outer.n() && outer_scheme.is_association();
    let verdict = schemes_isomorphic_with_limit(&lex, &wreath, limit);
    let passed = fusion && (!iso_required || verdict.is_isomorphic());
    Ok(WreathReport {
        fusion,
        iso_required,
        verdict,
        passed,
    })
}

/// `|Aut(C_{m,k}[K_r])| = (r!)^m |G|` with `G = Sym(m)` for `k = 0`,
/// `Sym(2) ≀ Sym(m/2)` for `m = 2k + 2` and `D_{2m}` otherwise.
pub fn predicted_aut_order(m: usize, k: usize, r: usize) -> Result<u128> {
    if r == 0 || m == 0 || !(2 * k + 1 < m || (m == 1 && k == 0)) {
        return Err(Error::InvalidParameters(format!(
            "no elementary certificate with m={m}, k={k}, r={r}"
        )));
    }
    let overflow = || Error::InvalidParameters(format!("automorphism order overflows for m={m}, r={r}"));
    let factorial = |x: usize| (1..=x as u128).try_fold(1u128, |acc, i| acc.checked_mul(i));
    let outer = match OuterKind::of(m, k) {
        OuterKind::Rank2 => factorial(m),
        OuterKind::ForestalMatching => factorial(m / 2).and_then(|f| f.checked_mul(1u128.checked_shl((m / 2) as u32)?)),
        OuterKind::Dihedral => Some(2 * m as u128),
    }
    .ok_or_else(overflow)?;
    let fiber = factorial(r).ok_or_else(overflow)?;
    (0..m)
        .try_fold(outer, |acc, _| acc.checked_mul(fiber))
        .ok_or_else(overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::count_automorphisms;

    #[test]
    fn elementary_recognition() {
        let w = is_elementary_caw(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!((w.n, w.k), (7, 1));
        assert!(w.check(&Graph::cycle(7).unwrap()));

        // permuted C_{9,2}
        let perm = [4, 7, 0, 2, 8, 1, 5, 3, 6];
        let g = Graph::elementary_caw(9, 2).unwrap().relabel(&perm).unwrap();
        let w = is_elementary_caw(&g).unwrap();
        assert_eq!((w.n, w.k), (9, 2));
        assert!(w.check(&g));

        assert_eq!(is_elementary_caw(&Graph::petersen()), None);
        assert_eq!(is_elementary_caw(&Graph::path(4).unwrap()), None);
        assert_eq!(is_elementary_caw(&Graph::complete(5).unwrap()), None);
        let e = is_elementary_caw(&Graph::empty(4)).unwrap();
        assert_eq!((e.n, e.k, e.labels), (4, 0, vec![0, 1, 2, 3]));
        assert_eq!(is_elementary_caw(&Graph::empty(1)), None);

        let w = is_elementary_caw(&Graph::elementary_caw(6, 2).unwrap()).unwrap();
        assert_eq!((w.n, w.k), (6, 2));
    }

    #[test]
    fn decomposition_examples() {
        let c51 = Graph::elementary_caw(5, 1).unwrap();
        let g = Graph::lex_product(&c51, &Graph::complete(2).unwrap());
        let d = decompose_caw(&g).unwrap();
        assert_eq!((d.m, d.k, d.r), (5, 1, 2));
        assert!(d.verify(&g));

        assert_eq!(decompose_caw(&Graph::path(4).unwrap()), Err(FailedStage::NonAssociation));
        assert_eq!(decompose_caw(&Graph::star(3)), Err(FailedStage::NonAssociation));
        assert_eq!(decompose_caw(&Graph::petersen()), Err(FailedStage::QuotientNotElementary));

        let d = decompose_caw(&Graph::complete(6).unwrap()).unwrap();
        assert_eq!((d.m, d.k, d.r), (1, 0, 6));
        assert!(d.verify(&Graph::complete(6).unwrap()));

        let d = decompose_caw(&Graph::disjoint_cliques(3, 2).unwrap()).unwrap();
        assert_eq!((d.m, d.k, d.r), (3, 0, 2));
    }

    #[test]
    fn unequal_twin_classes() {
        // K_2 plus an isolated vertex: scheme is not association anyway,
        // so build the check directly
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(decompose_association(&g), Err(FailedStage::UnequalTwinClasses));
    }

    #[test]
    fn scheme_examples() {
        let g = Graph::lex_product(&Graph::elementary_caw(7, 2).unwrap(), &Graph::complete(2).unwrap());
        let s = scheme_decomposition(&g, 14).unwrap();
        assert_eq!((s.outer_kind, s.outer_size, s.inner_size), (OuterKind::Dihedral, 7, 2));
        assert!(s.verdict.is_isomorphic());
        let s = scheme_decomposition(&g, 12).unwrap();
        assert_eq!(s.verdict, Verdict::AlgebraicOnly);

        let s = scheme_decomposition(&Graph::elementary_caw(6, 2).unwrap(), 12).unwrap();
        assert_eq!((s.outer_kind, s.inner_size), (OuterKind::ForestalMatching, 1));
        assert!(s.verdict.is_isomorphic());

        let g = Graph::lex_product(&Graph::empty(3), &Graph::complete(2).unwrap());
        let s = scheme_decomposition(&g, 12).unwrap();
        assert_eq!((s.outer_kind, s.outer_size, s.inner_size), (OuterKind::Rank2, 3, 2));
        assert!(s.verdict.is_isomorphic());

        let s = scheme_decomposition(&Graph::complete(4).unwrap(), 12).unwrap();
        assert_eq!((s.outer_kind, s.outer_size, s.inner_size), (OuterKind::Rank2, 1, 4));
    }

    #[test]
    fn wreath_theorem_examples() {
        let rep = verify_wreath_theorem(2, &Graph::cycle(5).unwrap(), 12).unwrap();
        assert!(rep.fusion && rep.iso_required && rep.verdict.is_isomorphic() && rep.passed);

        let rep = verify_wreath_theorem(2, &Graph::path(3).unwrap(), 12).unwrap();
        assert!(rep.fusion && !rep.iso_required && rep.passed);

        // K_2[K_3] = K_6 has rank 2, the wreath product rank 3
        let rep = verify_wreath_theorem(3, &Graph::complete(2).unwrap(), 12).unwrap();
        assert!(rep.fusion && !rep.iso_required);
        assert_eq!(rep.verdict, Verdict::NotIsomorphic);

        assert!(verify_wreath_theorem(3, &Graph::cycle(5).unwrap(), 12).is_err());
    }

    #[test]
    fn aut_orders() {
        assert_eq!(predicted_aut_order(5, 1, 2).unwrap(), 320);
        assert_eq!(predicted_aut_order(6, 2, 1).unwrap(), 48);
        assert_eq!(predicted_aut_order(3, 0, 2).unwrap(), 48);
        assert_eq!(predicted_aut_order(7, 1, 1).unwrap(), 14);
        assert_eq!(predicted_aut_order(1, 0, 5).unwrap(), 120);
        assert!(predicted_aut_order(4, 2, 1).is_err());
        assert!(predicted_aut_order(0, 0, 1).is_err());
        assert!(predicted_aut_order(200, 0, 50).is_err());

        for (m, k, r) in [(5, 1, 2), (6, 2, 1), (3, 0, 2), (7, 1, 1), (4, 1, 3), (2, 0, 5)] {
            let d = Decomposition {
                m,
                k,
                r,
                relabeling: Vec::new(),
            };
            let g = d.model_graph().unwrap();
            assert_eq!(
                count_automorphisms(&g, 12).unwrap(),
                predicted_aut_order(m, k, r).unwrap(),
                "m={m} k={k} r={r}"
            );
        }
    }
}
