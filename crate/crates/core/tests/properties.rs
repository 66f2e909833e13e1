use birkhoff::acceptance::properties::{run_suite, SUITES};
use birkhoff::graph::graph_from_predicate;
use birkhoff::solvers::{max_clique, max_independent_set};
use birkhoff::{adjacent, parse_cycles, BitGraph, Parity, PermSet, Permutation};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const CASES: u32 = 10_000;
const SEED: [u8; 32] = *b"birkhoff-polytope-graph-props-01";

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn perm() -> impl Strategy<Value = Permutation> {
    (1..=12usize).prop_flat_map(perm_of)
}

fn perms(k: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=12usize).prop_flat_map(move |n| prop::collection::vec(perm_of(n), k))
}

// Oracles on plain 1-based image vectors.

fn images(p: &Permutation) -> Vec<usize> {
    (1..=p.degree()).map(|i| p.apply(i)).collect()
}

fn nontrivial_orbits(img: &[usize]) -> usize {
    let mut seen = vec![false; img.len()];
    let mut count = 0;
    for start in 0..img.len() {
        if seen[start] || img[start] == start + 1 {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = img[x] - 1;
        }
    }
    count
}

fn quotient(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x - 1] = i + 1;
    }
    b.iter().map(|&x| inv[x - 1]).collect()
}

fn inversions(img: &[usize]) -> usize {
    (0..img.len())
        .flat_map(|i| (i + 1..img.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| img[i] > img[j])
        .count()
}

#[test]
fn text_round_trip() {
    runner(CASES)
        .run(&perm(), |p| {
            let text = p.to_string();
            prop_assert_eq!(parse_cycles(&text, p.degree()).unwrap(), p.clone());
            prop_assert_eq!(birkhoff::format_cycles(&p), text);
            Ok(())
        })
        .unwrap();
}

#[test]
fn json_round_trip() {
    runner(CASES / 10)
        .run(&perms(6), |v| {
            let set = PermSet::from_iter_dedup(v[0].degree(), v).unwrap();
            let back = PermSet::from_json(&set.to_json()).unwrap();
            prop_assert_eq!(back.to_strings(), set.to_strings());
            Ok(())
        })
        .unwrap();
}

#[test]
fn group_laws() {
    runner(CASES)
        .run(&perms(3), |v| {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            let id = Permutation::identity(a.degree());
            let left = a.compose(&b.compose(c).unwrap()).unwrap();
            let right = a.compose(b).unwrap().compose(c).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
            prop_assert_eq!(a.inverse().compose(a).unwrap(), id.clone());
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            for x in 1..=a.degree() {
                prop_assert_eq!(a.compose(b).unwrap().apply(x), a.apply(b.apply(x)));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn adjacency_matches_orbit_count() {
    runner(CASES)
        .run(&perms(3), |v| {
            let (a, b, g) = (&v[0], &v[1], &v[2]);
            let want = nontrivial_orbits(&quotient(&images(a), &images(b))) == 1;
            let got = adjacent(a, b).unwrap();
            prop_assert_eq!(got, want);
            prop_assert_eq!(adjacent(b, a).unwrap(), got);
            let ga = g.compose(a).unwrap();
            let gb = g.compose(b).unwrap();
            prop_assert_eq!(adjacent(&ga, &gb).unwrap(), got);
            Ok(())
        })
        .unwrap();
}

#[test]
fn conjugation_and_parity() {
    runner(CASES)
        .run(&perms(3), |v| {
            let (a, b, g) = (&v[0], &v[1], &v[2]);
            let ca = a.conjugate(g).unwrap();
            prop_assert_eq!(ca.clone(), g.compose(a).unwrap().compose(&g.inverse()).unwrap());
            prop_assert_eq!(ca.cycle_type(), a.cycle_type());
            prop_assert_eq!(ca.parity(), a.parity());
            let cb = b.conjugate(g).unwrap();
            prop_assert_eq!(adjacent(&ca, &cb).unwrap(), adjacent(a, b).unwrap());
            let even = inversions(&images(a)) % 2 == 0;
            prop_assert_eq!(a.parity() == Parity::Even, even);
            prop_assert_eq!(a.compose(b).unwrap().parity(), a.parity() * b.parity());
            Ok(())
        })
        .unwrap();
}

#[test]
fn direct_sum_parity_and_action() {
    let pair = (1..=8usize, 1..=8usize).prop_flat_map(|(m, k)| (perm_of(m), perm_of(k)));
    runner(CASES)
        .run(&pair, |(a, b)| {
            let s = a.direct_sum(&b).unwrap();
            let m = a.degree();
            prop_assert_eq!(s.degree(), m + b.degree());
            prop_assert_eq!(s.parity(), a.parity() * b.parity());
            for x in 1..=m {
                prop_assert_eq!(s.apply(x), a.apply(x));
            }
            for x in 1..=b.degree() {
                prop_assert_eq!(s.apply(m + x), m + b.apply(x));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn half_swap_matches_block_matrix() {
    runner(CASES)
        .run(&perm(), |w| {
            let n = w.degree();
            // [[0, W], [I, 0]] with row i holding its one in column σ(i)
            let mut m = vec![vec![0u8; 2 * n]; 2 * n];
            for i in 0..n {
                m[i][n + w.apply(i + 1) - 1] = 1;
                m[n + i][i] = 1;
            }
            let h = w.half_swap().unwrap();
            for (r, row) in m.iter().enumerate() {
                let col = row.iter().position(|&x| x == 1).unwrap();
                prop_assert_eq!(h.apply(r + 1), col + 1);
            }
            Ok(())
        })
        .unwrap();
}

fn naive_clique(g: &BitGraph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

fn random_graph() -> impl Strategy<Value = BitGraph> {
    (0..=14usize).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| graph_from_predicate(n, |u, v| bits[u.min(v) * n + u.max(v)]))
    })
}

#[test]
fn solver_matches_naive_enumeration() {
    runner(CASES)
        .run(&random_graph(), |g| {
            let want = naive_clique(&g);
            let r = max_clique(&g, false);
            prop_assert_eq!(r.best_size, want);
            prop_assert!(r.optimal);
            for (i, &u) in r.witness.iter().enumerate() {
                for &v in &r.witness[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
            let c = g.complement();
            prop_assert_eq!(max_independent_set(&g, false).best_size, naive_clique(&c));
            prop_assert_eq!(
                max_independent_set(&g, false).best_size,
                max_clique(&c, false).best_size
            );
            Ok(())
        })
        .unwrap();
}

#[test]
fn randomized_suites() {
    for name in SUITES {
        let r = run_suite(name, CASES as usize, 2024).unwrap();
        assert_eq!(r.failures, 0, "{name}: {:?}", r.first_failure);
        assert_eq!(r.cases, CASES as usize);
    }
}
