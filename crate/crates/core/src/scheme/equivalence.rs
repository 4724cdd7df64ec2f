use std::collections::{BTreeSet, HashSet, VecDeque};

use super::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::graph::VertexPartition;

pub const DEFAULT_EQUIVALENCE_RANK_LIMIT: usize = 20;

/// An equivalence relation on all of `V` that is a union of basic relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeEquivalence {
    colors: Vec<usize>,
    partition: VertexPartition,
}

impl SchemeEquivalence {
    /// Validates that the union of `colors` is an equivalence relation on `V`.
    pub fn from_colors(cfg: &CoherentConfiguration, colors: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = colors.iter().copied().collect();
        if set.iter().any(|&c| c >= cfg.rank()) {
            return Err(Error::NotEquivalence);
        }
        let closed = cfg.equivalence_closure(&set.iter().copied().collect::<Vec<_>>());
        if closed.iter().filter(|&&b| b).count() != set.len() {
            return Err(Error::NotEquivalence);
        }
        Ok(Self::build(cfg, set.into_iter().collect()))
    }

    fn build(cfg: &CoherentConfiguration, colors: Vec<usize>) -> Self {
        let n = cfg.n();
        let member: HashSet<usize> = colors.iter().copied().collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for v in 0..n {
            if class_of[v] != usize::MAX {
                continue;
            }
            let class: Vec<usize> = (0..n).filter(|&u| member.contains(&cfg.color(v, u))).collect();
            for &u in &class {
                class_of[u] = classes.len();
            }
            classes.push(class);
        }
        let partition = VertexPartition::from_classes(n, classes)
            .expect("closed color set induces a partition");
        SchemeEquivalence { colors, partition }
    }

    /// Sorted colors whose union is the relation.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    pub(crate) fn check_against(&self, cfg: &CoherentConfiguration) -> Result<()> {
        if self.partition.n() != cfg.n() {
            return Err(Error::PointCountMismatch(self.partition.n(), cfg.n()));
        }
        let fresh = Self::from_colors(cfg, &self.colors)?;
        if fresh != *self {
            return Err(Error::NotEquivalence);
        }
        Ok(())
    }
}

impl CoherentConfiguration {
    /// All equivalence relations on `V` that are unions of basic relations,
    /// ordered by number of colors and then lexicographically. Always contains
    /// `1_V` and `V²`.
    ///
    /// Closed color sets form a lattice generated from the diagonal by adding
    /// one color at a time and closing under pairing and composition; the
    /// search walks that lattice. Errors when `rank > limit`.
    pub fn equivalences(&self, limit: usize) -> Result<Vec<SchemeEquivalence>> {
        if self.rank() > limit || self.rank() > 64 {
            return Err(Error::SizeLimit {
                what: "equivalence search rank",
                size: self.rank(),
                limit: limit.min(64),
            });
        }
        let rank = self.rank();
        let support = self.composition_support();
        let mut table = vec![0u64; rank * rank];
        for (&(r, s), ts) in &support {
            table[r * rank + s] = ts.iter().fold(0, |m, &t| m | (1 << t));
        }
        let close = |mut mask: u64| loop {
            let mut next = mask;
            for r in 0..rank {
                if mask >> r & 1 == 0 {
                    continue;
                }
                next |= 1 << self.pairing(r);
                for s in 0..rank {
                    if mask >> s & 1 == 1 {
                        next |= table[r * rank + s];
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        };

        let start = close(self.diagonal_colors().iter().fold(0, |m, &c| m | (1 << c)));
        let mut seen: HashSet<u64> = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(mask) = queue.pop_front() {
            for c in 0..rank {
                if mask >> c & 1 == 0 {
                    let next = close(mask | 1 << c);
                    if seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut sets: Vec<Vec<usize>> = seen.into_iter().map(|m| Self::bits(m, rank)).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(sets
            .into_iter()
            .map(|colors| SchemeEquivalence::build(self, colors))
            .collect())
    }

    fn bits(mask: u64, rank: usize) -> Vec<usize> {
        (0..rank).filter(|&c| mask >> c & 1 == 1).collect()
    }
}
