//! Exact automorphism group orders for small graphs.
//!
//! The order is computed along a stabilizer chain: with base points
//! `0, 1, …, n-1`, `|Aut| = ∏ |orbit of i under the pointwise stabilizer of
//! 0..i|`. Each orbit is found by asking, for every candidate image, whether
//! some automorphism extends the fixed prefix. That keeps the work polynomial
//! in the number of orbit queries instead of enumerating all `|Aut|`
//! permutations (which is 12! for the edgeless graph at the default limit).
//!
//! Extension queries individualize the mapped vertices on both sides and
//! refine by neighbor colors; a mismatch of color classes prunes the branch.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_AUT_LIMIT: usize = 12;

/// Order of `Aut(g)`. Errors when `g.n() > limit`.
pub fn count_automorphisms(g: &Graph, limit: usize) -> Result<u128> {
    let n = g.n();
    if n > limit {
        return Err(Error::SizeLimit {
            what: "automorphism count",
            size: n,
            limit,
        });
    }
    let mut order: u128 = 1;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n);
    for base in 0..n {
        let mut orbit = 0u128;
        for image in 0..n {
            if pairs.iter().any(|&(_, b)| b == image) {
                continue;
            }
            pairs.push((base, image));
            if extends(g, &mut pairs) {
                orbit += 1;
            }
            pairs.pop();
        }
        // `base` always maps to itself, so the orbit is never empty
        order *= orbit;
        pairs.push((base, base));
    }
    Ok(order)
}

/// Whether some automorphism sends `a` to `b` for every `(a, b)` in
/// `pairs`. `pairs` is restored before returning.
fn extends(g: &Graph, pairs: &mut Vec<(usize, usize)>) -> bool {
    let n = g.n();
    let mut left = vec![0; n];
    let mut right = vec![0; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        left[a] = i + 1;
        right[b] = i + 1;
    }
    let Some((left, right)) = refine_pair(g, left, right) else {
        return false;
    };
    // smallest nontrivial cell on the left; singletons everywhere means the
    // map is forced
    let mut size = vec![0usize; n];
    for &c in &left {
        size[c] += 1;
    }
    let pick = (0..n).filter(|&v| size[left[v]] > 1).min_by_key(|&v| (size[left[v]], v));
    let Some(x) = pick else {
        let mut map = vec![0; n];
        for v in 0..n {
            map[v] = right.iter().position(|&c| c == left[v]).expect("same cells");
        }
        return (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) == g.adjacent(map[u], map[v])));
    };
    for y in (0..n).filter(|&y| right[y] == left[x]) {
        pairs.push((x, y));
        let found = extends(g, pairs);
        pairs.pop();
        if found {
            return true;
        }
    }
    false
}

/// Refines two colorings of `g` in lockstep by neighbor-color counts,
/// naming new colors by their sorted signatures so the names agree on
/// both sides. `None` when the color class sizes diverge.
fn refine_pair(g: &Graph, mut left: Vec<usize>, mut right: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let signature = |colors: &[usize], v: usize| {
        let mut s: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
        s.sort_unstable();
        (colors[v], s)
    };
    let mut classes = usize::MAX;
    loop {
        let ls: Vec<_> = (0..n).map(|v| signature(&left, v)).collect();
        let rs: Vec<_> = (0..n).map(|v| signature(&right, v)).collect();
        let mut counts: BTreeMap<&(usize, Vec<usize>), (usize, usize)> = BTreeMap::new();
        for s in &ls {
            counts.entry(s).or_default().0 += 1;
        }
        for s in &rs {
            counts.entry(s).or_default().1 += 1;
        }
        if counts.values().any(|&(a, b)| a != b) {
            return None;
        }
        let ids: BTreeMap<&(usize, Vec<usize>), usize> = counts.keys().enumerate().map(|(i, &s)| (s, i)).collect();
        let next = counts.len();
        left = ls.iter().map(|s| ids[s]).collect();
        right = rs.iter().map(|s| ids[s]).collect();
        if next == classes {
            return Some((left, right));
        }
        classes = next;
    }
}

/// Exhaustive permutation count; test oracle for tiny graphs only.
#[cfg(test)]
pub(crate) fn brute_force_automorphisms(g: &Graph) -> u128 {
    fn go(g: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> u128 {
        let n = g.n();
        if map.len() == n {
            let ok = (0..n).all(|u| (0..n).all(|v| g.adjacent(u, v) == g.adjacent(map[u], map[v])));
            return ok as u128;
        }
        let mut total = 0;
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                map.push(y);
                total += go(g, map, used);
                map.pop();
                used[y] = false;
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_orders() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(brute_force_automorphisms(&c5), 10);
        assert_eq!(count_automorphisms(&c5, 12).unwrap(), 10);
        assert_eq!(count_automorphisms(&Graph::complete(4).unwrap(), 12).unwrap(), 24);
        let lex = Graph::lex_product(&c5, &Graph::complete(2).unwrap());
        assert_eq!(count_automorphisms(&lex, 12).unwrap(), 320);
        assert_eq!(count_automorphisms(&Graph::empty(12), 12).unwrap(), 479_001_600);
        assert_eq!(count_automorphisms(&Graph::petersen(), 12).unwrap(), 120);
    }

    #[test]
    fn cycles_are_dihedral() {
        for n in 3..=12 {
            let g = Graph::cycle(n).unwrap();
            assert_eq!(count_automorphisms(&g, 12).unwrap(), 2 * n as u128, "n={n}");
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            Graph::path(5).unwrap(),
            Graph::star(4),
            Graph::elementary_caw(6, 2).unwrap(),
            Graph::disjoint_cliques(3, 2).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(count_automorphisms(g, 12).unwrap(), brute_force_automorphisms(g), "{g:?}");
        }
    }

    proptest::proptest! {
        #[test]
        fn random_graphs_match_brute_force(n in 1usize..=7, mask in proptest::prelude::any::<u32>()) {
            let g = Graph::from_fn(n, |u, v| mask >> ((u * 7 + v) % 32) & 1 == 1);
            proptest::prop_assert_eq!(count_automorphisms(&g, 12).unwrap(), brute_force_automorphisms(&g));
        }
    }

    #[test]
    fn larger_products() {
        // (r!)^m times the outer group
        let g = Graph::lex_product(&Graph::elementary_caw(8, 3).unwrap(), &Graph::complete(3).unwrap());
        assert_eq!(count_automorphisms(&g, 24).unwrap(), 6u128.pow(8) * 16 * 24);
        assert_eq!(count_automorphisms(&Graph::empty(24), 24).unwrap(), (1..=24u128).product::<u128>());
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(
            count_automorphisms(&Graph::empty(13), 12),
            Err(Error::SizeLimit { .. })
        ));
        assert!(count_automorphisms(&Graph::empty(13), 13).is_ok());
    }
}
