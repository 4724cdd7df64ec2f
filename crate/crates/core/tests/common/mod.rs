#![allow(dead_code)]

use caw_core::{ArcFunction, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Named graphs on at most 12 vertices used across the integration tests.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=12 {
        out.push((format!("cycle {n}"), Graph::cycle(n).unwrap()));
    }
    for n in 1..=12 {
        out.push((format!("path {n}"), Graph::path(n).unwrap()));
        out.push((format!("complete {n}"), Graph::complete(n).unwrap()));
        out.push((format!("empty {n}"), Graph::empty(n)));
    }
    for leaves in 1..=8 {
        out.push((format!("star {leaves}"), Graph::star(leaves)));
    }
    out.push(("petersen".into(), Graph::petersen()));
    for n in 4..=12 {
        for k in 1..n {
            if 2 * k + 1 < n {
                out.push((format!("cnk {n} {k}"), Graph::elementary_caw(n, k).unwrap()));
            }
        }
    }
    let k2 = Graph::complete(2).unwrap();
    out.push(("lex cnk 5 1, complete 2".into(), Graph::lex_product(&Graph::cycle(5).unwrap(), &k2)));
    out.push(("lex path 3, complete 2".into(), Graph::lex_product(&Graph::path(3).unwrap(), &k2)));
    out.push(("lex cycle 4, complete 3".into(), Graph::lex_product(&Graph::cycle(4).unwrap(), &Graph::complete(3).unwrap())));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..20 {
        let n = rng.gen_range(2..=12);
        out.push((format!("random graph {i}"), random_graph(n, 0.4, &mut rng)));
        let arcs = rng.gen_range(2..=10);
        out.push((format!("random arc model {i}"), ArcFunction::random(arcs, &mut rng).intersection_graph()));
    }
    out
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Graph from the low bits of `mask`, one bit per unordered pair.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> (bit % 64) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arc_model(seed: u64, n: usize) -> ArcFunction {
    ArcFunction::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random model passing the neighborhood condition: a standard model of a
/// random `C_{n,k}` with `n <= max_n`, arcs shuffled, expanded once or twice.
pub fn reducible_arc_model(seed: u64, max_n: usize) -> ArcFunction {
    use caw_core::Arc;
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(4..=max_n);
    let k = rng.gen_range(1..=(n - 2) / 2);
    let base = ArcFunction::standard_model(n, k).unwrap();
    let mut arcs: Vec<Arc> = base.arcs().to_vec();
    arcs.shuffle(&mut rng);
    let mut f = ArcFunction::new(n, arcs).unwrap();
    for _ in 0..rng.gen_range(1..=2) {
        f = f.random_expansion(&mut rng);
    }
    f
}
