//! Verification sweeps behind `caw verify`.

use caw_core::{
    closure_of_graph, count_automorphisms, predicted_aut_order, schemes_isomorphic_with_limit, verify_wreath_theorem,
    CoherentConfiguration, Decomposition, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub suite: &'static str,
    pub case: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

/// Closure of every `C_{n,k}` with `2k + 2 < n <= bound` against the
/// dihedral scheme; the search limit is the bound so verdicts are definitive.
pub fn dihedral(bound: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 5..=bound {
        for k in (1..n).take_while(|&k| 2 * k + 2 < n) {
            let cfg = closure_of_graph(&Graph::elementary_caw(n, k).expect("2k+2 < n"));
            let d = CoherentConfiguration::dihedral(n).expect("n >= 5");
            let verdict = schemes_isomorphic_with_limit(&cfg, &d, bound);
            let expected = format!("rank {} iso", n / 2 + 1);
            let observed = format!("rank {} {}", cfg.rank(), verdict.label());
            cases.push(Case {
                suite: "dihedral",
                case: format!("cnk {n} {k}"),
                passed: expected == observed,
                expected,
                observed,
            });
        }
    }
    cases
}

/// Wreath theorem on fixed families plus `bound` seeded random graphs.
pub fn wreath(bound: usize, seed: u64) -> Vec<Case> {
    let mut outers: Vec<(String, Graph)> = Vec::new();
    for n in 1..=bound.min(8) {
        outers.push((format!("complete {n}"), Graph::complete(n).expect("n >= 1")));
        outers.push((format!("empty {n}"), Graph::empty(n)));
        outers.push((format!("path {n}"), Graph::path(n).expect("n >= 1")));
        if n >= 3 {
            outers.push((format!("cycle {n}"), Graph::cycle(n).expect("n >= 3")));
        }
        for k in (2..n).take_while(|&k| 2 * k + 1 < n) {
            outers.push((format!("cnk {n} {k}"), Graph::elementary_caw(n, k).expect("2k+1 < n")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..bound {
        let n = rng.gen_range(1..=bound.min(8));
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        outers.push((format!("random {i}"), Graph::from_edges(n, &edges).expect("simple graph")));
    }

    let mut cases = Vec::new();
    for (name, outer) in &outers {
        for r in 1..=3 {
            if outer.n() * r > bound {
                continue;
            }
            let rep = verify_wreath_theorem(r, outer, bound).expect("size checked");
            // complete outer and inner: the lex product is complete, rank 2
            let counterexample = name.starts_with("complete") && outer.n() >= 2 && r >= 2;
            let expected = match (rep.iso_required, counterexample) {
                (true, _) => "fusion iso",
                (false, true) => "fusion not-iso",
                (false, false) => "fusion",
            };
            let observed = format!(
                "{} {}",
                if rep.fusion { "fusion" } else { "no-fusion" },
                rep.verdict.label()
            );
            let passed = rep.passed && (!counterexample || rep.verdict.label() == "not-iso");
            cases.push(Case {
                suite: "wreath",
                case: format!("{name}, r {r}"),
                expected: expected.into(),
                observed,
                passed,
            });
        }
    }
    cases
}

/// Counted against predicted automorphism orders of `C_{m,k}[K_r]` for
/// every certificate on at most `bound` vertices.
pub fn aut(bound: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for m in 1..=bound {
        for r in 1..=bound / m {
            for k in (0..m).take_while(|&k| 2 * k + 1 < m || (m == 1 && k == 0)) {
                let d = Decomposition {
                    m,
                    k,
                    r,
                    relabeling: Vec::new(),
                };
                let g = d.model_graph().expect("valid parameters");
                let predicted = predicted_aut_order(m, k, r).expect("valid parameters");
                let observed = match count_automorphisms(&g, bound) {
                    Ok(c) => c.to_string(),
                    Err(e) => e.to_string(),
                };
                cases.push(Case {
                    suite: "aut",
                    case: format!("m {m} k {k} r {r}"),
                    passed: observed == predicted.to_string(),
                    expected: predicted.to_string(),
                    observed,
                });
            }
        }
    }
    cases
}
