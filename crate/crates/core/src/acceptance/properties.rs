//! Randomized property suites with a fixed seed, independent of any test
//! harness so the CLI can run them too.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{adjacent, build_graph, symmetric_group, BitGraph};
use crate::perm::{parse_cycles, Permutation};
use crate::permset::PermSet;
use crate::solvers::clique::{max_clique, max_independent_set};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Description of the first failing case.
    pub first_failure: Option<String>,
}

pub const SUITES: [&str; 4] = [
    "two-common-point-products",
    "cycle-quotient-patterns",
    "conjugation-and-parity",
    "solver-vs-exhaustive",
];

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut img: Vec<u8> = (0..n as u8).collect();
    img.shuffle(rng);
    Permutation::from_raw(img)
}

fn cycle(n: usize, parts: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, parts).expect("valid cycles")
}

/// `σ = (1,J₁,2,L₁)`, `τ = (1,J₂,2,L₂)` with disjoint runs: `σ∘τ` is a cycle
/// iff `J₂, L₁` are empty or `J₁, L₂` are.
fn two_common_points(rng: &mut ChaCha8Rng) -> Option<String> {
    let n = rng.gen_range(5..=12);
    let mut pts: Vec<usize> = (3..=n).collect();
    pts.shuffle(rng);
    let mut cuts: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=pts.len())).collect();
    cuts.sort_unstable();
    let j1 = &pts[..cuts[0]];
    let j2 = &pts[cuts[0]..cuts[1]];
    let l1 = &pts[cuts[1]..cuts[2]];
    let l2 = &pts[cuts[2]..cuts[3]];
    if j1.len() + l1.len() == 0 || j2.len() + l2.len() == 0 {
        return None;
    }
    let run = |j: &[usize], l: &[usize]| -> Vec<usize> { [&[1][..], j, &[2][..], l].concat() };
    let s = cycle(n, &[&run(j1, l1)]);
    let t = cycle(n, &[&run(j2, l2)]);
    let want = (j2.is_empty() && l1.is_empty()) || (j1.is_empty() && l2.is_empty());
    let got = s.compose_unchecked(&t).is_cycle();
    (got != want).then(|| format!("{s} ∘ {t}: cycle = {got}, expected {want}"))
}

/// Four pair shapes whose quotient `δ⁻¹τ` is always a cycle.
fn quotient_patterns(rng: &mut ChaCha8Rng, case: usize) -> Option<String> {
    let n = rng.gen_range(6..=12);
    let mut pts: Vec<usize> = (1..=n).collect();
    pts.shuffle(rng);
    let (i, j, k, s, t) = (pts[0], pts[1], pts[2], pts[3], pts[4]);
    let (d, tau) = match case % 4 {
        0 => {
            let mut tri = [i, j, k];
            tri.shuffle(rng);
            let (a, b) = (tri[0], tri[1]);
            let mut rest = [tri[2], s, t];
            rest.shuffle(rng);
            (cycle(n, &[&[i, j, k], &[s, t]]), cycle(n, &[&rest, &[a, b]]))
        }
        1 => {
            let mut tri = [i, j, k];
            tri.shuffle(rng);
            let (u, v) = (tri[0], tri[1]);
            let mut rest = [tri[2], s, t];
            rest.shuffle(rng);
            (cycle(n, &[&[i, j, k], &[s, t]]), cycle(n, &[&[u, v], &rest[..2]]))
        }
        2 => (cycle(n, &[&[i, j, k], &[s, t]]), cycle(n, &[&[s, k, j], &[i, t]])),
        _ => {
            let (u, v, w) = (k, s, t);
            (cycle(n, &[&[i, u], &[j, v]]), cycle(n, &[&[i, w], &[j, u]]))
        }
    };
    let q = d.inverse().compose_unchecked(&tau);
    (!q.is_cycle()).then(|| format!("pattern {}: {d}⁻¹ ∘ {tau} = {q}", case % 4 + 1))
}

fn conjugation_and_parity(rng: &mut ChaCha8Rng) -> Option<String> {
    let n = rng.gen_range(1..=12);
    let a = random_perm(rng, n);
    let b = random_perm(rng, n);
    let g = random_perm(rng, n);
    let ca = a.conjugate_unchecked(&g);
    let cb = b.conjugate_unchecked(&g);
    let adj = adjacent(&a, &b).expect("same degree");
    if adjacent(&ca, &cb).expect("same degree") != adj {
        return Some(format!("conjugating {a}, {b} by {g} changes adjacency"));
    }
    if adjacent(&g.compose_unchecked(&a), &g.compose_unchecked(&b)).expect("same degree") != adj {
        return Some(format!("left translation of {a}, {b} by {g} changes adjacency"));
    }
    if adjacent(&b, &a).expect("same degree") != adj {
        return Some(format!("adjacency of {a}, {b} is not symmetric"));
    }
    if ca.parity() != a.parity() || ca.cycle_type() != a.cycle_type() {
        return Some(format!("conjugating {a} by {g} changes its class"));
    }
    if a.compose_unchecked(&b).parity() != a.parity() * b.parity() {
        return Some(format!("parity of {a} ∘ {b} is not multiplicative"));
    }
    let sum = a.direct_sum(&b).expect("degree in range");
    if sum.parity() != a.parity() * b.parity() {
        return Some(format!("parity of {a} ⊕ {b} is not multiplicative"));
    }
    if parse_cycles(&a.to_string(), n).ok().as_ref() != Some(&a) {
        return Some(format!("{a} does not survive a text round trip"));
    }
    None
}

fn exhaustive_clique(g: &BitGraph) -> usize {
    fn grow(g: &BitGraph, clique: &mut Vec<usize>, from: usize) -> usize {
        let mut best = clique.len();
        for v in from..g.order() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                best = best.max(grow(g, clique, v + 1));
                clique.pop();
            }
        }
        best
    }
    grow(g, &mut Vec::new(), 0)
}

fn solver_vs_exhaustive(rng: &mut ChaCha8Rng, pools: &[PermSet; 2]) -> Option<String> {
    let pool = &pools[rng.gen_range(0..2)];
    let size = rng.gen_range(1..=24);
    let picked: Vec<Permutation> = pool.to_vec().choose_multiple(rng, size).cloned().collect();
    let set = PermSet::from_vec(pool.degree(), picked).expect("distinct");
    let g = build_graph(&set).expect("small graph");
    let got = max_clique(&g, false);
    let want = exhaustive_clique(&g);
    if got.best_size != want {
        return Some(format!("clique on {set:?}: solver {} vs {want}", got.best_size));
    }
    let got = max_independent_set(&g, false).best_size;
    let want = exhaustive_clique(&g.complement());
    (got != want).then(|| format!("independent set on {set:?}: solver {got} vs {want}"))
}

/// Runs suite `name` for `cases` cases from `seed`.
pub fn run_suite(name: &str, cases: usize, seed: u64) -> Option<SuiteReport> {
    let idx = SUITES.iter().position(|&s| s == name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64) << 32);
    let pools = if idx == 3 {
        Some([symmetric_group(4).expect("small"), symmetric_group(5).expect("small")])
    } else {
        None
    };
    let mut failures = 0;
    let mut first_failure = None;
    for case in 0..cases {
        let outcome = match idx {
            0 => two_common_points(&mut rng),
            1 => quotient_patterns(&mut rng, case),
            2 => conjugation_and_parity(&mut rng),
            _ => solver_vs_exhaustive(&mut rng, pools.as_ref().expect("pools")),
        };
        if let Some(msg) = outcome {
            failures += 1;
            first_failure.get_or_insert(msg);
        }
    }
    Some(SuiteReport {
        name: SUITES[idx],
        cases,
        failures,
        first_failure,
    })
}

pub fn run_all(cases: usize, seed: u64) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, cases, seed).expect("known suite"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_briefly() {
        for r in run_all(300, 11) {
            assert_eq!(r.failures, 0, "{}: {:?}", r.name, r.first_failure);
        }
        assert!(run_suite("nope", 1, 0).is_none());
    }
}
