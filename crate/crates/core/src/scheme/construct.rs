use std::collections::HashMap;

use super::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::graph::circular_distance;

impl CoherentConfiguration {
    /// The rank-2 scheme `{1_V, V² \ 1_V}`. Needs `n >= 2`.
    pub fn rank2(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(format!(
                "rank 2 scheme needs at least 2 points, got {n}"
            )));
        }
        Ok(Self::trivial(n))
    }

    /// The minimal scheme on `n >= 1` points: rank 1 for a single point,
    /// rank 2 otherwise.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "trivial scheme needs a point");
        let colors: Vec<usize> = (0..n * n).map(|i| (i / n != i % n) as usize).collect();
        Self::from_verified(n, &colors)
    }

    /// Orbit scheme of the dihedral group `D_{2n}` on `Z_n`: the color of
    /// `(i, j)` is their circular distance, so color `d` is distance `d`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!(
                "dihedral scheme needs n >= 3, got {n}"
            )));
        }
        let colors: Vec<usize> = (0..n * n)
            .map(|i| circular_distance(i / n, i % n, n))
            .collect();
        Ok(Self::from_verified(n, &colors))
    }

    /// Wreath product `inner ≀ outer` on `inner.n() * outer.n()` points;
    /// point `(a, b)` (`a` inner, `b` outer) is `b * inner.n() + a`.
    ///
    /// Pairs inside one fiber keep their inner color, tagged with the
    /// outer diagonal color of the fiber; pairs across fibers take the outer
    /// color, tagged with the inner diagonal colors of both ends. For
    /// association schemes both tags are constant and this is the usual
    /// `{V₁² ⊗ r : r ∈ S₂ \ 1} ∪ {s ⊗ 1 : s ∈ S₁}`, of rank
    /// `rank(inner) + rank(outer) - 1`.
    pub fn wreath_product(inner: &Self, outer: &Self) -> Self {
        let (n1, n2) = (inner.n, outer.n);
        let n = n1 * n2;
        let mut ids: HashMap<(bool, usize, usize, usize), usize> = HashMap::new();
        let mut colors = Vec::with_capacity(n * n);
        for p in 0..n {
            let (a, b) = (p % n1, p / n1);
            for q in 0..n {
                let (a2, b2) = (q % n1, q / n1);
                let key = if b == b2 {
                    (false, inner.color(a, a2), outer.color(b, b), 0)
                } else {
                    (true, inner.color(a, a), inner.color(a2, a2), outer.color(b, b2))
                };
                let next = ids.len();
                colors.push(*ids.entry(key).or_insert(next));
            }
        }
        Self::from_colors(n, &colors).expect("wreath product of schemes is coherent")
    }
}
