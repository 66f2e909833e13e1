//! The adjacency predicate, vertex families, and explicit bit-row graphs.

use std::io::{BufRead, Write};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation, MAX_DEGREE};
use crate::permset::PermSet;

/// True iff `a⁻¹ ∘ b` is a single cycle.
pub fn adjacent(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(quotient_is_cycle(&inverse_raw(a.raw()), b.raw()))
}

pub(crate) fn inverse_raw(a: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Is `a⁻¹ ∘ b` a cycle, given the image array of `a⁻¹`.
#[inline]
pub(crate) fn quotient_is_cycle(inv_a: &[u8], b: &[u8]) -> bool {
    let mut q = [0u8; MAX_DEGREE + 1];
    let mut moved = 0usize;
    let mut first = usize::MAX;
    for (x, &bx) in b.iter().enumerate() {
        let y = inv_a[bx as usize];
        q[x] = y;
        if y as usize != x {
            moved += 1;
            if first == usize::MAX {
                first = x;
            }
        }
    }
    if moved < 2 {
        return false;
    }
    let mut len = 1;
    let mut x = q[first] as usize;
    while x != first {
        len += 1;
        x = q[x] as usize;
    }
    len == moved
}

/// Is the raw image array a single cycle.
#[inline]
pub(crate) fn raw_is_cycle(q: &[u8]) -> bool {
    let mut moved = 0usize;
    let mut first = usize::MAX;
    for (x, &y) in q.iter().enumerate() {
        if y as usize != x {
            moved += 1;
            if first == usize::MAX {
                first = x;
            }
        }
    }
    if moved < 2 {
        return false;
    }
    let mut len = 1;
    let mut x = q[first] as usize;
    while x != first {
        len += 1;
        x = q[x] as usize;
    }
    len == moved
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Valency of the graph: `Σ_{k=2}^{n} C(n,k)·(k−1)!`.
pub fn degree_formula(n: usize) -> BigUint {
    (2..=n)
        .map(|k| binomial(n, k) * factorial(k - 1))
        .fold(BigUint::zero(), |a, b| a + b)
}

fn count_as_usize(v: &BigUint) -> Option<usize> {
    usize::try_from(v).ok()
}

fn check_elements(count: &BigUint, budget: &Budget, what: &str) -> Result<usize> {
    match count_as_usize(count) {
        Some(c) if c <= budget.max_elements => Ok(c),
        _ => Err(Error::Budget(format!(
            "{what} has {count} elements, above the limit of {}",
            budget.max_elements
        ))),
    }
}

/// The k-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n - (k - cur.len()) {
            cur.push(x as u8);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Next lexicographic permutation in place; false when wrapped around.
pub(crate) fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A unit of cycle enumeration: a support set and a fixed prefix of the
/// orbit after its minimum point.
struct CycleJob {
    support: Vec<u8>,
    prefix: Vec<u8>,
}

fn cycle_jobs(n: usize, k: usize) -> Vec<CycleJob> {
    let mut jobs = Vec::new();
    for s in subsets(n, k) {
        let rest = &s[1..];
        let depth = (k - 1).min(2);
        // ordered selections of `depth` elements from rest
        let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..depth {
            stack = stack
                .into_iter()
                .flat_map(|p| {
                    rest.iter()
                        .filter(|x| !p.contains(x))
                        .map(|&x| {
                            let mut q = p.clone();
                            q.push(x);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        for prefix in stack {
            jobs.push(CycleJob {
                support: s.clone(),
                prefix,
            });
        }
    }
    jobs
}

impl CycleJob {
    /// Calls `f` on each cycle of the job in lexicographic orbit order;
    /// stops early when `f` returns `Some`.
    fn run<T>(&self, n: usize, mut f: impl FnMut(&[u8]) -> Option<T>) -> Option<T> {
        let start = self.support[0];
        let mut tail: Vec<u8> = self.support[1..]
            .iter()
            .copied()
            .filter(|x| !self.prefix.contains(x))
            .collect();
        let mut img: Vec<u8> = (0..n as u8).collect();
        let mut orbit = Vec::with_capacity(self.support.len());
        loop {
            orbit.clear();
            orbit.push(start);
            orbit.extend_from_slice(&self.prefix);
            orbit.extend_from_slice(&tail);
            for i in 0..orbit.len() {
                img[orbit[i] as usize] = orbit[(i + 1) % orbit.len()];
            }
            if let Some(t) = f(&img) {
                return Some(t);
            }
            if !next_permutation(&mut tail) {
                return None;
            }
        }
    }
}

/// First cycle (by length, then support, then orbit order) satisfying `pred`.
pub fn find_cycle<F>(n: usize, lengths: std::ops::RangeInclusive<usize>, pred: F) -> Option<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    for k in lengths {
        if k < 2 || k > n {
            continue;
        }
        let hit = cycle_jobs(n, k).par_iter().find_map_first(|job| {
            job.run(n, |img| {
                let p = Permutation::from_raw(img.to_vec());
                pred(&p).then_some(p)
            })
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Calls `f` on every cycle of length `k`, in parallel.
pub fn par_for_each_cycle<F>(n: usize, k: usize, f: F)
where
    F: Fn(&Permutation) + Sync,
{
    if k < 2 || k > n {
        return;
    }
    cycle_jobs(n, k).par_iter().for_each(|job| {
        job.run::<()>(n, |img| {
            f(&Permutation::from_raw(img.to_vec()));
            None
        });
    });
}

/// All k-cycles in `Sym(n)`, canonical text order.
pub fn cycles_of_length(n: usize, k: usize) -> Result<PermSet> {
    cycles_of_length_with(n, k, &Budget::default())
}

pub fn cycles_of_length_with(n: usize, k: usize, budget: &Budget) -> Result<PermSet> {
    if !(2..=MAX_DEGREE).contains(&n) || k < 2 || k > n {
        return Err(Error::Domain(format!("cycle length {k} must lie in 2..={n}")));
    }
    let count = binomial(n, k) * factorial(k - 1);
    let count = check_elements(&count, budget, &format!("the set of {k}-cycles in Sym({n})"))?;
    let mut all = Vec::with_capacity(count);
    for job in cycle_jobs(n, k) {
        job.run::<()>(n, |img| {
            all.push(Permutation::from_raw(img.to_vec()));
            None
        });
    }
    all.sort();
    PermSet::from_vec(n, all)
}

/// Every cycle in `Sym(n)`, canonical text order.
pub fn all_cycles(n: usize) -> Result<PermSet> {
    all_cycles_with(n, &Budget::default())
}

pub fn all_cycles_with(n: usize, budget: &Budget) -> Result<PermSet> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(Error::Domain(format!("all_cycles needs n ≥ 2, got {n}")));
    }
    check_elements(&degree_formula(n), budget, &format!("the set of cycles in Sym({n})"))?;
    let mut all = Vec::new();
    for k in 2..=n {
        all.extend(cycles_of_length_with(n, k, budget)?.to_vec());
    }
    all.sort();
    PermSet::from_vec(n, all)
}

/// All of `Sym(n)` in canonical text order.
pub fn symmetric_group(n: usize) -> Result<PermSet> {
    symmetric_group_with(n, &Budget::default())
}

pub fn symmetric_group_with(n: usize, budget: &Budget) -> Result<PermSet> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree(n));
    }
    let count = check_elements(&factorial(n), budget, &format!("Sym({n})"))?;
    let mut all = Vec::with_capacity(count);
    let mut img: Vec<u8> = (0..n as u8).collect();
    loop {
        all.push(Permutation::from_raw(img.clone()));
        if !next_permutation(&mut img) {
            break;
        }
    }
    all.par_sort();
    PermSet::from_vec(n, all)
}

pub fn alternating_only(s: &PermSet) -> PermSet {
    s.filter(|p| p.parity().is_even())
}

/// Undirected graph with bit-row adjacency and optional permutation labels.
#[derive(Clone, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<PermSet>,
}

impl std::fmt::Debug for BitGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitGraph(V={}, E={})", self.n, self.edge_count())
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl BitGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn labels(&self) -> Option<&PermSet> {
        self.labels.as_ref()
    }

    pub fn label(&self, v: usize) -> Option<&Permutation> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        crate::bits::iter_ones(self.row(v))
    }

    /// Same vertices, complementary edges.
    pub fn complement(&self) -> BitGraph {
        let mut rows = self.rows.clone();
        for v in 0..self.n {
            let row = &mut rows[v * self.words..(v + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            crate::bits::trim(row, self.n);
            row[v / 64] &= !(1 << (v % 64));
        }
        BitGraph {
            n: self.n,
            words: self.words,
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> BitGraph {
        let mut g = BitGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let mut l = PermSet::with_capacity(labels.degree(), vertices.len());
            for &v in vertices {
                l.insert(labels[v].clone()).expect("same degree");
            }
            g.labels = Some(l);
        }
        g
    }

    pub fn set_labels(&mut self, labels: PermSet) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::Domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Writes DIMACS `edge` format with `c v <id> <cycle>` label comments.
    pub fn write_dimacs(&self, mut out: impl Write) -> Result<()> {
        if let Some(labels) = &self.labels {
            writeln!(out, "c degree {}", labels.degree())?;
            for (i, p) in labels.iter().enumerate() {
                writeln!(out, "c v {} {}", i + 1, p)?;
            }
        }
        writeln!(out, "p edge {} {}", self.n, self.edge_count())?;
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                writeln!(out, "e {} {}", u + 1, v + 1)?;
            }
        }
        Ok(())
    }

    pub fn to_dimacs_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_dimacs(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii")
    }

    /// Reads DIMACS `edge` format. Label comments are kept when every vertex
    /// has one; the permutation degree comes from a `c degree` line or, failing
    /// that, the largest point mentioned.
    pub fn read_dimacs(input: impl BufRead) -> Result<BitGraph> {
        let mut graph: Option<BitGraph> = None;
        let mut declared_edges = 0usize;
        let mut seen_edges = 0usize;
        let mut degree: Option<usize> = None;
        let mut label_text: Vec<(usize, String)> = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let bad = |message: String| Error::Dimacs { line: lineno, message };
            let mut parts = line.split_whitespace();
            match parts.next() {
                None => {}
                Some("c") => match parts.next() {
                    Some("degree") => {
                        let d = parts
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| bad("malformed degree comment".into()))?;
                        degree = Some(d);
                    }
                    Some("v") => {
                        let id: usize = parts
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| bad("malformed vertex label".into()))?;
                        let text: String = parts.collect::<Vec<_>>().join("");
                        label_text.push((id, text));
                    }
                    _ => {}
                },
                Some("p") => {
                    if graph.is_some() {
                        return Err(bad("second problem line".into()));
                    }
                    if parts.next() != Some("edge") {
                        return Err(bad("expected `p edge V E`".into()));
                    }
                    let v: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| bad("missing vertex count".into()))?;
                    declared_edges = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| bad("missing edge count".into()))?;
                    graph = Some(BitGraph::empty(v));
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or_else(|| bad("edge before problem line".into()))?;
                    let mut endpoint = || -> Result<usize> {
                        let x: usize = parts
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| bad("malformed edge".into()))?;
                        if x == 0 || x > g.n {
                            return Err(bad(format!("vertex {x} outside 1..={}", g.n)));
                        }
                        Ok(x - 1)
                    };
                    let u = endpoint()?;
                    let v = endpoint()?;
                    if u == v {
                        return Err(bad(format!("self-loop at {}", u + 1)));
                    }
                    if !g.has_edge(u, v) {
                        seen_edges += 1;
                    }
                    g.add_edge(u, v);
                }
                Some(other) => return Err(bad(format!("unknown line type `{other}`"))),
            }
        }
        let mut g = graph.ok_or_else(|| Error::Dimacs {
            line: 0,
            message: "missing problem line".into(),
        })?;
        if seen_edges != declared_edges {
            return Err(Error::Dimacs {
                line: 0,
                message: format!("declared {declared_edges} edges, found {seen_edges}"),
            });
        }
        if !label_text.is_empty() && label_text.len() == g.n {
            label_text.sort_by_key(|(id, _)| *id);
            let degree = match degree {
                Some(d) => d,
                None => label_text
                    .iter()
                    .flat_map(|(_, t)| {
                        t.split(|c: char| !c.is_ascii_digit())
                            .filter_map(|d| d.parse::<usize>().ok())
                    })
                    .max()
                    .unwrap_or(1),
            };
            let mut labels = PermSet::with_capacity(degree, g.n);
            for (expected, (id, text)) in label_text.iter().enumerate() {
                if *id != expected + 1 {
                    return Err(Error::Dimacs {
                        line: 0,
                        message: format!("vertex labels are not exactly 1..={}", g.n),
                    });
                }
                let p = parse_cycles(text, degree)?;
                if !labels.insert(p)? {
                    return Err(Error::Duplicate(text.clone()));
                }
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }
}

/// Bytes needed for the adjacency rows of a graph on `n` vertices.
pub fn graph_bytes(n: usize) -> usize {
    n * words_for(n) * 8
}

/// The induced subgraph of `G(Ω_n)` on `vertices`, in input order.
pub fn build_graph(vertices: &PermSet) -> Result<BitGraph> {
    build_graph_with(vertices, &Budget::default())
}

pub fn build_graph_with(vertices: &PermSet, budget: &Budget) -> Result<BitGraph> {
    let bytes = graph_bytes(vertices.len());
    if bytes > budget.mem_bytes {
        return Err(Error::Budget(format!(
            "a graph on {} vertices needs {bytes} bytes of adjacency rows, above the limit of {}",
            vertices.len(),
            budget.mem_bytes
        )));
    }
    let n = vertices.len();
    let words = words_for(n);
    let elems: Vec<&Permutation> = vertices.iter().collect();
    let mut rows = vec![0u64; n * words];
    if n > 0 {
        budget.install(|| {
            rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
                let inv = inverse_raw(elems[i].raw());
                for (j, b) in elems.iter().enumerate() {
                    if j != i && quotient_is_cycle(&inv, b.raw()) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
            })
        });
    }
    Ok(BitGraph {
        n,
        words,
        rows,
        labels: Some(vertices.clone()),
    })
}

/// Graph on `n` vertices with `u ~ v` iff `edge(u, v)`; `edge` must be symmetric.
pub fn graph_from_predicate<F>(n: usize, edge: F) -> BitGraph
where
    F: Fn(usize, usize) -> bool + Sync,
{
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    if n > 0 {
        rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
            for j in 0..n {
                if j != i && edge(i, j) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        });
    }
    BitGraph {
        n,
        words,
        rows,
        labels: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&p("(1,5)", 5), &p("(2,5)", 5)).unwrap());
        assert!(!adjacent(&Permutation::identity(4), &p("(1,2)(3,4)", 4)).unwrap());
        let a = p("(1,3,2)(4,5)", 5);
        assert!(!adjacent(&a, &a).unwrap());
        assert!(adjacent(&a, &Permutation::identity(6)).is_err());
    }

    #[test]
    fn degree_formula_values() {
        assert_eq!(degree_formula(4), BigUint::from(20u32));
        assert_eq!(degree_formula(2), BigUint::from(1u32));
        assert_eq!(degree_formula(1), BigUint::from(0u32));
        assert_eq!(degree_formula(7), BigUint::from(all_cycles(7).unwrap().len()));
    }

    #[test]
    fn cycle_families() {
        assert_eq!(cycles_of_length(4, 2).unwrap().len(), 6);
        assert_eq!(cycles_of_length(5, 5).unwrap().len(), 24);
        let four = cycles_of_length(4, 4).unwrap();
        let listed = PermSet::parse(
            4,
            &[
                "(1,2,3,4)",
                "(1,2,4,3)",
                "(1,3,2,4)",
                "(1,3,4,2)",
                "(1,4,2,3)",
                "(1,4,3,2)",
            ],
        )
        .unwrap();
        assert!(four.same_elements(&listed));
        assert_eq!(all_cycles(4).unwrap().len(), 20);
        assert_eq!(all_cycles(2).unwrap().len(), 1);
        assert!(all_cycles(6).unwrap().iter().all(Permutation::is_cycle));
        assert!(cycles_of_length(4, 5).is_err());
        assert!(cycles_of_length(4, 1).is_err());
    }

    #[test]
    fn cycle_search_order_is_deterministic() {
        let first = find_cycle(5, 2..=5, |c| c.cycle_length() == Some(3)).unwrap();
        assert_eq!(first, p("(1,2,3)", 5));
        assert!(find_cycle(4, 2..=4, |_| false).is_none());
        let count = std::sync::atomic::AtomicUsize::new(0);
        par_for_each_cycle(7, 4, |_| {
            count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        });
        assert_eq!(count.into_inner(), 35 * 6);
    }

    #[test]
    fn symmetric_groups() {
        let s5 = symmetric_group(5).unwrap();
        assert_eq!(s5.len(), 120);
        assert!(s5[0].is_identity());
        assert_eq!(alternating_only(&s5).len(), 60);
        let small = Budget {
            max_elements: 1000,
            ..Budget::default()
        };
        assert!(symmetric_group_with(7, &small).unwrap_err().is_budget());
    }

    #[test]
    fn small_full_graphs() {
        let g3 = build_graph(&symmetric_group(3).unwrap()).unwrap();
        assert_eq!(g3.edge_count(), 15);
        let g4 = build_graph(&symmetric_group(4).unwrap()).unwrap();
        assert!((0..24).all(|v| g4.degree(v) == 20));
        let one = build_graph(&PermSet::parse(3, &["()"]).unwrap()).unwrap();
        assert_eq!((one.order(), one.edge_count()), (1, 0));
        let c = g4.complement();
        assert!((0..24).all(|v| c.degree(v) == 3 && !c.has_edge(v, v)));
    }

    #[test]
    fn graph_budget_fails_loudly() {
        let tiny = Budget {
            mem_bytes: 1024,
            ..Budget::default()
        };
        let s5 = symmetric_group(5).unwrap();
        assert!(build_graph_with(&s5, &tiny).unwrap_err().is_budget());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = build_graph(&cycles_of_length(5, 3).unwrap()).unwrap();
        let text = g.to_dimacs_string();
        assert!(text.contains("p edge 20 "));
        assert!(text.contains("c v 1 (1,2,3)"));
        let back = BitGraph::read_dimacs(text.as_bytes()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn dimacs_errors() {
        assert!(BitGraph::read_dimacs("e 1 2\n".as_bytes()).is_err());
        assert!(BitGraph::read_dimacs("p edge 2 1\ne 1 3\n".as_bytes()).is_err());
        assert!(BitGraph::read_dimacs("p edge 2 2\ne 1 2\n".as_bytes()).is_err());
        let g = BitGraph::read_dimacs("p edge 3 1\ne 3 1\n".as_bytes()).unwrap();
        assert!(g.has_edge(0, 2) && g.labels().is_none());
    }

    #[test]
    fn induced_keeps_labels() {
        let g = build_graph(&symmetric_group(4).unwrap()).unwrap();
        let h = g.induced(&[0, 5, 7]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.label(1), g.label(5));
        assert_eq!(h.has_edge(0, 1), g.has_edge(0, 5));
    }
}
