//! Scheme isomorphism: an algebraic filter followed by a backtracking search
//! for a point bijection that induces a bijection of colors.

use super::{run_lengths, CoherentConfiguration};

pub const DEFAULT_ISO_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `points[u]` is the image of point `u`; `colors[c]` of color `c`.
    Isomorphic {
        points: Vec<usize>,
        colors: Vec<usize>,
    },
    NotIsomorphic,
    /// Intersection numbers agree but the point count exceeds the search
    /// limit. Inconclusive.
    AlgebraicOnly,
}

impl Verdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Verdict::Isomorphic { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Isomorphic { .. } => "iso",
            Verdict::NotIsomorphic => "not-iso",
            Verdict::AlgebraicOnly => "algebraic-only",
        }
    }
}

/// Per-color data that any isomorphism preserves: diagonal flag, symmetry,
/// size, and the multiset of nonzero intersection numbers `c_rs^t` for
/// fixed `t`. Sorted, so independent of color names.
pub fn algebraic_invariant(cfg: &CoherentConfiguration) -> Vec<(bool, bool, usize, Vec<usize>)> {
    let n = cfg.n();
    let rank = cfg.rank();
    let mut keys = Vec::with_capacity(n);
    let mut out: Vec<_> = (0..rank)
        .map(|t| {
            let (v, u) = cfg.representative(t);
            keys.clear();
            keys.extend((0..n).map(|w| cfg.color(v, w) * rank + cfg.color(w, u)));
            let mut counts: Vec<usize> = run_lengths(&mut keys).into_iter().map(|e| e.1).collect();
            counts.sort_unstable();
            (cfg.is_diagonal_color(t), cfg.pairing(t) == t, cfg.color_size(t), counts)
        })
        .collect();
    out.sort();
    out
}

pub fn schemes_isomorphic(a: &CoherentConfiguration, b: &CoherentConfiguration) -> Verdict {
    schemes_isomorphic_with_limit(a, b, DEFAULT_ISO_LIMIT)
}

/// Definitive verdict when `n <= limit`; `AlgebraicOnly` above the limit if
/// the algebraic invariants match.
pub fn schemes_isomorphic_with_limit(
    a: &CoherentConfiguration,
    b: &CoherentConfiguration,
    limit: usize,
) -> Verdict {
    if a.n() != b.n() || a.rank() != b.rank() || algebraic_invariant(a) != algebraic_invariant(b) {
        return Verdict::NotIsomorphic;
    }
    if a.n() > limit {
        return Verdict::AlgebraicOnly;
    }
    let mut search = Search::new(a, b);
    if search.extend(0) {
        Verdict::Isomorphic {
            points: search.points,
            colors: search.fwd,
        }
    } else {
        Verdict::NotIsomorphic
    }
}

struct Search<'a> {
    a: &'a CoherentConfiguration,
    b: &'a CoherentConfiguration,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    points: Vec<usize>,
    used: Vec<bool>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    trail: Vec<usize>,
}

const UNSET: usize = usize::MAX;

fn point_signature(cfg: &CoherentConfiguration, x: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = (0..cfg.n())
        .flat_map(|w| [2 * cfg.color_size(cfg.color(x, w)), 2 * cfg.color_size(cfg.color(w, x)) + 1])
        .collect();
    sig.sort_unstable();
    sig.push(cfg.color_size(cfg.color(x, x)));
    sig
}

impl<'a> Search<'a> {
    fn new(a: &'a CoherentConfiguration, b: &'a CoherentConfiguration) -> Self {
        let n = a.n();
        Search {
            a,
            b,
            sig_a: (0..n).map(|x| point_signature(a, x)).collect(),
            sig_b: (0..n).map(|x| point_signature(b, x)).collect(),
            points: vec![UNSET; n],
            used: vec![false; n],
            fwd: vec![UNSET; a.rank()],
            bwd: vec![UNSET; b.rank()],
            trail: Vec::new(),
        }
    }

    fn assign(&mut self, ca: usize, cb: usize) -> bool {
        if self.fwd[ca] == cb {
            return true;
        }
        if self.fwd[ca] != UNSET || self.bwd[cb] != UNSET || self.a.color_size(ca) != self.b.color_size(cb) {
            return false;
        }
        self.fwd[ca] = cb;
        self.bwd[cb] = ca;
        self.trail.push(ca);
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let ca = self.trail.pop().unwrap();
            self.bwd[self.fwd[ca]] = UNSET;
            self.fwd[ca] = UNSET;
        }
    }

    fn extend(&mut self, x: usize) -> bool {
        let n = self.a.n();
        if x == n {
            return true;
        }
        for y in 0..n {
            if self.used[y] || self.sig_a[x] != self.sig_b[y] {
                continue;
            }
            let mark = self.trail.len();
            self.points[x] = y;
            let ok = (0..=x).all(|w| {
                let yw = self.points[w];
                self.assign(self.a.color(x, w), self.b.color(y, yw))
                    && self.assign(self.a.color(w, x), self.b.color(yw, y))
            });
            if ok {
                self.used[y] = true;
                if self.extend(x + 1) {
                    return true;
                }
                self.used[y] = false;
            }
            self.undo(mark);
            self.points[x] = UNSET;
        }
        false
    }
}
