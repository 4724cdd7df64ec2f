//! Coherent configurations ("schemes") stored as a color matrix on `V²`.
//!
//! Colors are canonical: they are numbered by first occurrence in a
//! row-major scan of `V²`, so color 0 is always the color of `(0, 0)`.
//! Every constructor verifies the scheme axioms before returning.

mod construct;
mod equivalence;
mod iso;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::check_permutation;

pub use equivalence::{SchemeEquivalence, DEFAULT_EQUIVALENCE_RANK_LIMIT};
pub use iso::{algebraic_invariant, schemes_isomorphic, schemes_isomorphic_with_limit, Verdict, DEFAULT_ISO_LIMIT};

/// A failed scheme axiom together with the pairs that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A color contains both a diagonal and an off-diagonal pair.
    DiagonalMixed {
        color: usize,
        diagonal: (usize, usize),
        off_diagonal: (usize, usize),
    },
    /// Two pairs of one color whose transposes have different colors.
    Transpose {
        color: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
    /// `c_rs^t` differs between two pairs of color `t`.
    IntersectionNumber {
        r: usize,
        s: usize,
        t: usize,
        first: (usize, usize),
        first_count: usize,
        second: (usize, usize),
        second_count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DiagonalMixed {
                color,
                diagonal,
                off_diagonal,
            } => write!(
                f,
                "color {color} holds diagonal pair {diagonal:?} and off-diagonal pair {off_diagonal:?}"
            ),
            Violation::Transpose {
                color,
                first,
                second,
            } => write!(
                f,
                "color {color}: transposes of {first:?} and {second:?} have different colors"
            ),
            Violation::IntersectionNumber {
                r,
                s,
                t,
                first,
                first_count,
                second,
                second_count,
            } => write!(
                f,
                "c[{r},{s}]^{t} is {first_count} at {first:?} but {second_count} at {second:?}"
            ),
        }
    }
}

/// Renumbers colors by first occurrence. Returns the new matrix and rank.
fn canonicalize(colors: &[usize]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let out = colors
        .iter()
        .map(|&c| {
            let next = ids.len();
            *ids.entry(c).or_insert(next)
        })
        .collect();
    (out, ids.len())
}

/// Checks the scheme axioms on an arbitrary coloring of `V²` (row-major,
/// `n * n` entries, any color labels). Runs in `O(n³ log n)`.
pub fn verify_coloring(n: usize, colors: &[usize]) -> std::result::Result<(), Violation> {
    assert_eq!(colors.len(), n * n, "coloring must have n*n entries");
    let (colors, rank) = canonicalize(colors);
    let at = |u: usize, v: usize| colors[u * n + v];

    let mut diag_rep: Vec<Option<(usize, usize)>> = vec![None; rank];
    let mut off_rep: Vec<Option<(usize, usize)>> = vec![None; rank];
    let mut transpose: Vec<Option<((usize, usize), usize)>> = vec![None; rank];
    for u in 0..n {
        for v in 0..n {
            let c = at(u, v);
            if u == v {
                diag_rep[c].get_or_insert((u, v));
            } else {
                off_rep[c].get_or_insert((u, v));
            }
            if let (Some(d), Some(o)) = (diag_rep[c], off_rep[c]) {
                return Err(Violation::DiagonalMixed {
                    color: c,
                    diagonal: d,
                    off_diagonal: o,
                });
            }
            let tc = at(v, u);
            match transpose[c] {
                None => transpose[c] = Some(((u, v), tc)),
                Some((first, t0)) if t0 != tc => {
                    return Err(Violation::Transpose {
                        color: c,
                        first,
                        second: (u, v),
                    })
                }
                Some(_) => {}
            }
        }
    }

    // per color: first pair seen and its sorted color-path profile
    type Profile = ((usize, usize), Vec<(usize, usize)>);
    let mut profiles: Vec<Option<Profile>> = vec![None; rank];
    let mut keys = Vec::with_capacity(n);
    for v in 0..n {
        for u in 0..n {
            let t = at(v, u);
            keys.clear();
            keys.extend((0..n).map(|w| at(v, w) * rank + at(w, u)));
            let profile = run_lengths(&mut keys);
            match &profiles[t] {
                None => profiles[t] = Some(((v, u), profile)),
                Some((first, p0)) if *p0 != profile => {
                    let (key, c0, c1) = first_difference(p0, &profile);
                    return Err(Violation::IntersectionNumber {
                        r: key / rank,
                        s: key % rank,
                        t,
                        first: *first,
                        first_count: c0,
                        second: (v, u),
                        second_count: c1,
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(())
}

fn run_lengths(keys: &mut [usize]) -> Vec<(usize, usize)> {
    keys.sort_unstable();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &k in keys.iter() {
        match out.last_mut() {
            Some((last, c)) if *last == k => *c += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

fn first_difference(a: &[(usize, usize)], b: &[(usize, usize)]) -> (usize, usize, usize) {
    let lookup = |p: &[(usize, usize)], k: usize| {
        p.binary_search_by_key(&k, |e| e.0).map(|i| p[i].1).unwrap_or(0)
    };
    let mut keys: Vec<usize> = a.iter().chain(b).map(|e| e.0).collect();
    keys.sort_unstable();
    keys.into_iter()
        .map(|k| (k, lookup(a, k), lookup(b, k)))
        .find(|(_, x, y)| x != y)
        .expect("profiles differ")
}

#[derive(Clone, PartialEq, Eq)]
pub struct CoherentConfiguration {
    n: usize,
    rank: usize,
    colors: Vec<usize>,
    pairing: Vec<usize>,
    diagonal_colors: Vec<usize>,
    sizes: Vec<usize>,
    reps: Vec<(usize, usize)>,
}

impl fmt::Debug for CoherentConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoherentConfiguration")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("diagonal_colors", &self.diagonal_colors)
            .finish_non_exhaustive()
    }
}

impl CoherentConfiguration {
    /// Builds a scheme from a row-major color matrix with arbitrary labels.
    /// Colors are renumbered canonically and every axiom is checked.
    pub fn from_colors(n: usize, colors: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if colors.len() != n * n {
            return Err(Error::InvalidParameters(format!(
                "color matrix has {} entries, expected {}",
                colors.len(),
                n * n
            )));
        }
        verify_coloring(n, colors).map_err(Error::Incoherent)?;
        Ok(Self::from_verified(n, colors))
    }

    /// Caller guarantees coherence.
    pub(crate) fn from_verified(n: usize, colors: &[usize]) -> Self {
        let (colors, rank) = canonicalize(colors);
        let mut pairing = vec![0; rank];
        let mut sizes = vec![0; rank];
        let mut reps = vec![(usize::MAX, usize::MAX); rank];
        let mut is_diag = vec![false; rank];
        for u in 0..n {
            for v in 0..n {
                let c = colors[u * n + v];
                if sizes[c] == 0 {
                    reps[c] = (u, v);
                    pairing[c] = colors[v * n + u];
                }
                sizes[c] += 1;
                if u == v {
                    is_diag[c] = true;
                }
            }
        }
        let diagonal_colors = (0..rank).filter(|&c| is_diag[c]).collect();
        CoherentConfiguration {
            n,
            rank,
            colors,
            pairing,
            diagonal_colors,
            sizes,
            reps,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[u * self.n + v]
    }

    /// The row-major color matrix.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The color `r*` holding the transposes of the pairs of `r`.
    pub fn pairing(&self, r: usize) -> usize {
        self.pairing[r]
    }

    pub fn diagonal_colors(&self) -> &[usize] {
        &self.diagonal_colors
    }

    pub fn is_diagonal_color(&self, c: usize) -> bool {
        self.diagonal_colors.binary_search(&c).is_ok()
    }

    /// Number of ordered pairs of color `c`.
    pub fn color_size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn representative(&self, c: usize) -> (usize, usize) {
        self.reps[c]
    }

    /// Re-runs the full axiom check.
    pub fn verify(&self) -> std::result::Result<(), Violation> {
        verify_coloring(self.n, &self.colors)
    }

    /// Homogeneous: the diagonal is a single basic relation.
    pub fn is_association(&self) -> bool {
        self.diagonal_colors.len() == 1
    }

    /// `c_rs^t = |{w : color(v,w) = r, color(w,u) = s}|` for any `(v,u)` of color `t`.
    pub fn intersection_number(&self, r: usize, s: usize, t: usize) -> Result<usize> {
        for c in [r, s, t] {
            if c >= self.rank {
                return Err(Error::BadColor(c));
            }
        }
        let (v, u) = self.reps[t];
        Ok((0..self.n)
            .filter(|&w| self.color(v, w) == r && self.color(w, u) == s)
            .count())
    }

    /// `|vr|` for the start point of any pair of `r`, i.e. the row size.
    pub fn valency(&self, r: usize) -> usize {
        let (v, _) = self.reps[r];
        (0..self.n).filter(|&w| self.color(v, w) == r).count()
    }

    /// Whether every color of `coarse` is a union of colors of `fine`.
    pub fn is_fusion_of(coarse: &Self, fine: &Self) -> Result<bool> {
        if coarse.n != fine.n {
            return Err(Error::PointCountMismatch(coarse.n, fine.n));
        }
        let mut image: Vec<Option<usize>> = vec![None; fine.rank];
        for (&f, &c) in fine.colors.iter().zip(&coarse.colors) {
            match image[f] {
                None => image[f] = Some(c),
                Some(prev) if prev != c => return Ok(false),
                Some(_) => {}
            }
        }
        Ok(true)
    }

    /// The scheme with point `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let n = self.n;
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                colors[perm[u] * n + perm[v]] = self.color(u, v);
            }
        }
        Ok(Self::from_verified(n, &colors))
    }

    /// `(r, s) ↦ {t : c_rs^t > 0}`, sparse.
    pub(crate) fn composition_support(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut support: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for t in 0..self.rank {
            let (v, u) = self.reps[t];
            for w in 0..self.n {
                let e = support.entry((self.color(v, w), self.color(w, u))).or_default();
                if e.last() != Some(&t) {
                    e.push(t);
                }
            }
        }
        support
    }

    /// The scheme restricted to `class`, which must be a class of some
    /// scheme equivalence. Points are renumbered in increasing order.
    pub fn restriction(&self, class: &[usize]) -> Result<Self> {
        let mut class = class.to_vec();
        class.sort_unstable();
        class.dedup();
        if class.is_empty() || class.iter().any(|&v| v >= self.n) {
            return Err(Error::NotEquivalenceClass);
        }
        let seed: Vec<usize> = class
            .iter()
            .flat_map(|&u| class.iter().map(move |&v| (u, v)))
            .map(|(u, v)| self.color(u, v))
            .collect();
        let closed = self.equivalence_closure(&seed);
        let generated: Vec<usize> = (0..self.n)
            .filter(|&u| closed[self.color(class[0], u)])
            .collect();
        if generated != class {
            return Err(Error::NotEquivalenceClass);
        }
        let k = class.len();
        let colors: Vec<usize> = (0..k * k)
            .map(|i| self.color(class[i / k], class[i % k]))
            .collect();
        Self::from_colors(k, &colors)
    }

    /// Quotient modulo a scheme equivalence: points are the classes and
    /// `(X, Y)` is colored by the set of colors meeting `X × Y`.
    pub fn quotient(&self, e: &SchemeEquivalence) -> Result<Self> {
        e.check_against(self)?;
        let classes = e.partition().classes();
        let m = classes.len();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut colors = Vec::with_capacity(m * m);
        for x in classes {
            for y in classes {
                let mut sig: Vec<usize> = x
                    .iter()
                    .flat_map(|&u| y.iter().map(move |&v| (u, v)))
                    .map(|(u, v)| self.color(u, v))
                    .collect();
                sig.sort_unstable();
                sig.dedup();
                let next = ids.len();
                colors.push(*ids.entry(sig).or_insert(next));
            }
        }
        Self::from_colors(m, &colors)
    }

    /// Smallest color set containing `seed` and the diagonal colors that is
    /// closed under pairing and composition, as a membership vector.
    pub(crate) fn equivalence_closure(&self, seed: &[usize]) -> Vec<bool> {
        let support = self.composition_support();
        let mut member = vec![false; self.rank];
        let mut list: Vec<usize> = Vec::new();
        let add = |c: usize, member: &mut Vec<bool>, list: &mut Vec<usize>| {
            if !member[c] {
                member[c] = true;
                list.push(c);
            }
        };
        for &c in seed.iter().chain(&self.diagonal_colors) {
            add(c, &mut member, &mut list);
        }
        let mut i = 0;
        while i < list.len() {
            let r = list[i];
            add(self.pairing[r], &mut member, &mut list);
            for j in 0..=i {
                let s = list[j];
                for key in [(r, s), (s, r)] {
                    if let Some(ts) = support.get(&key) {
                        for &t in ts {
                            add(t, &mut member, &mut list);
                        }
                    }
                }
            }
            i += 1;
        }
        member
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn graph_coloring(g: &Graph) -> Vec<usize> {
        let n = g.n();
        (0..n * n)
            .map(|i| {
                let (u, v) = (i / n, i % n);
                if u == v {
                    0
                } else if g.adjacent(u, v) {
                    1
                } else {
                    2
                }
            })
            .collect()
    }

    #[test]
    fn verify_examples() {
        assert_eq!(CoherentConfiguration::rank2(3).unwrap().verify(), Ok(()));
        let p4 = Graph::path(4).unwrap();
        let err = verify_coloring(4, &graph_coloring(&p4)).unwrap_err();
        assert!(matches!(err, Violation::IntersectionNumber { .. }), "{err}");
        assert_eq!(CoherentConfiguration::dihedral(5).unwrap().verify(), Ok(()));
        // strongly regular: Petersen's equal/edge/non-edge coloring is coherent
        assert_eq!(verify_coloring(10, &graph_coloring(&Graph::petersen())), Ok(()));
    }

    #[test]
    fn verify_reports_each_axiom() {
        // diagonal color reused off the diagonal
        let mixed = [0, 0, 1, 0];
        assert!(matches!(
            verify_coloring(2, &mixed),
            Err(Violation::DiagonalMixed { .. })
        ));
        // (0,1) and (1,2) share a color but their transposes do not
        let colors = [0, 1, 2, 3, 0, 1, 2, 4, 0];
        assert!(matches!(
            verify_coloring(3, &colors),
            Err(Violation::Transpose { .. })
        ));
    }

    #[test]
    fn intersection_numbers() {
        let d5 = CoherentConfiguration::dihedral(5).unwrap();
        assert_eq!(d5.intersection_number(1, 1, 2).unwrap(), 1);
        for s in 0..d5.rank() {
            assert_eq!(d5.intersection_number(0, s, s).unwrap(), 1);
        }
        let k6 = CoherentConfiguration::rank2(6).unwrap();
        assert_eq!(k6.intersection_number(1, 1, 1).unwrap(), 4);
        assert!(matches!(k6.intersection_number(0, 0, 2), Err(Error::BadColor(2))));
    }

    #[test]
    fn association_flag() {
        assert!(CoherentConfiguration::dihedral(7).unwrap().is_association());
        assert!(CoherentConfiguration::rank2(4).unwrap().is_association());
        // P_3: center and leaves separated on the diagonal
        let n = 3;
        let colors = [0, 1, 2, 3, 4, 3, 2, 1, 0];
        let p3 = CoherentConfiguration::from_colors(n, &colors).unwrap();
        assert!(!p3.is_association());
        assert_eq!(p3.rank(), 5);
    }

    #[test]
    fn fusion_order() {
        let d6 = CoherentConfiguration::dihedral(6).unwrap();
        let k6 = CoherentConfiguration::rank2(6).unwrap();
        assert!(CoherentConfiguration::is_fusion_of(&k6, &d6).unwrap());
        assert!(CoherentConfiguration::is_fusion_of(&d6, &d6).unwrap());
        assert!(!CoherentConfiguration::is_fusion_of(&d6, &k6).unwrap());
        assert!(matches!(
            CoherentConfiguration::is_fusion_of(&k6, &CoherentConfiguration::rank2(5).unwrap()),
            Err(Error::PointCountMismatch(6, 5))
        ));
    }

    #[test]
    fn canonical_colors() {
        let colors = [7, 3, 3, 7];
        let s = CoherentConfiguration::from_colors(2, &colors).unwrap();
        assert_eq!(s.colors(), &[0, 1, 1, 0]);
        assert_eq!(s, CoherentConfiguration::rank2(2).unwrap());
    }

    #[test]
    fn restriction_and_quotient_of_wreath() {
        let k2 = CoherentConfiguration::rank2(2).unwrap();
        let k5 = CoherentConfiguration::rank2(5).unwrap();
        let w = CoherentConfiguration::wreath_product(&k2, &k5);
        assert_eq!(w.restriction(&[4, 5]).unwrap(), k2);
        assert!(matches!(w.restriction(&[0, 2]), Err(Error::NotEquivalenceClass)));
        assert!(matches!(w.restriction(&[0]), Ok(ref s) if s.rank() == 1));

        let eqs = w.equivalences(20).unwrap();
        let fiber = eqs.iter().find(|e| e.partition().len() == 5).unwrap();
        assert_eq!(w.quotient(fiber).unwrap(), k5);

        let identity = eqs.iter().find(|e| e.partition().len() == 10).unwrap();
        assert_eq!(w.quotient(identity).unwrap(), w);
    }

    #[test]
    fn relabel_is_isomorphic() {
        let d5 = CoherentConfiguration::dihedral(5).unwrap();
        let r = d5.relabel(&[0, 2, 4, 1, 3]).unwrap();
        assert!(matches!(schemes_isomorphic(&d5, &r), Verdict::Isomorphic { .. }));
    }
}
