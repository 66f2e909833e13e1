//! Exact maximum clique search on [`BitGraph`]s.
//!
//! The optimization pass is a bitset branch-and-bound with greedy coloring
//! bounds (vertices renumbered by decreasing degree) and parallel branching
//! near the root. A second, sequential pass recovers the lexicographically
//! smallest maximum clique, so the witness does not depend on scheduling.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::graph::BitGraph;
use crate::permset::PermSet;

/// Branch in parallel while the clique under construction is this small.
const PAR_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_size: usize,
    /// Vertex indices of the witness, ascending.
    pub witness: Vec<usize>,
    /// Witness permutations when the graph is labeled.
    pub witness_set: Option<PermSet>,
    pub node_count: u64,
    pub elapsed: Duration,
    /// Set when the search ran to completion.
    pub optimal: bool,
    /// Every maximum clique, each ascending, sorted, when requested.
    pub all_optima: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct SearchResultJson {
    best_size: usize,
    witness: Vec<String>,
    node_count: u64,
    elapsed_ms: u128,
    optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    optimum_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_optima: Option<Vec<Vec<String>>>,
}

impl SearchResult {
    fn names(&self, graph: Option<&BitGraph>, clique: &[usize]) -> Vec<String> {
        match graph.and_then(BitGraph::labels) {
            Some(l) => clique.iter().map(|&v| l[v].to_string()).collect(),
            None => clique.iter().map(|v| (v + 1).to_string()).collect(),
        }
    }

    /// JSON with witnesses in cycle notation (1-based vertex ids when the
    /// graph is unlabeled).
    pub fn to_json(&self, graph: Option<&BitGraph>, include_optima: bool) -> String {
        let j = SearchResultJson {
            best_size: self.best_size,
            witness: self.names(graph, &self.witness),
            node_count: self.node_count,
            elapsed_ms: self.elapsed.as_millis(),
            optimal: self.optimal,
            optimum_count: self.all_optima.as_ref().map(Vec::len),
            all_optima: if include_optima {
                self.all_optima
                    .as_ref()
                    .map(|all| all.iter().map(|c| self.names(graph, c)).collect())
            } else {
                None
            },
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CliqueOptions {
    pub enumerate_all: bool,
    /// Only cliques strictly larger than this are of interest.
    pub floor: usize,
}

/// The graph renumbered by decreasing degree.
struct Engine {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    /// new index → original index
    order: Vec<usize>,
    nodes: AtomicU64,
}

impl Engine {
    fn new(g: &BitGraph) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let words = g.words();
        let mut adj = vec![0u64; n * words];
        for (i, &v) in order.iter().enumerate() {
            for u in g.neighbors(v) {
                bits::set(&mut adj[i * words..(i + 1) * words], pos[u]);
            }
        }
        Engine {
            n,
            words,
            adj,
            order,
            nodes: AtomicU64::new(0),
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Greedy sequential coloring of `p`. Returns the vertices whose color
    /// is at least `kmin`, ordered by color, with their colors.
    fn color_sort(&self, p: &[u64], kmin: usize) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.to_vec();
        let mut q = vec![0u64; self.words];
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut k = 0;
        while !bits::is_empty(&uncolored) {
            k += 1;
            q.copy_from_slice(&uncolored);
            let mut wi = 0;
            while wi < self.words {
                let w = q[wi];
                if w == 0 {
                    wi += 1;
                    continue;
                }
                let v = wi * 64 + w.trailing_zeros() as usize;
                bits::clear(&mut q, v);
                bits::clear(&mut uncolored, v);
                let row = self.row(v);
                for (x, &r) in q.iter_mut().zip(row).skip(wi) {
                    *x &= !r;
                }
                if k >= kmin {
                    verts.push(v);
                    colors.push(k);
                }
            }
        }
        (verts, colors)
    }

    /// Size of the largest clique, or `floor` when nothing larger exists.
    fn max_size(&self, floor: usize) -> usize {
        let best = AtomicUsize::new(floor.max(self.greedy()));
        let p = bits::full(self.n);
        self.expand_max(0, &p, &best);
        best.into_inner()
    }

    /// Quick lower bound from greedy descents.
    fn greedy(&self) -> usize {
        let mut best = 0;
        for start in 0..self.n.min(32) {
            let mut p = self.row(start).to_vec();
            let mut size = 1;
            while let Some(u) = bits::first_one(&p) {
                size += 1;
                let row = self.row(u);
                for (x, &r) in p.iter_mut().zip(row) {
                    *x &= r;
                }
            }
            best = best.max(size);
        }
        best
    }

    fn expand_max(&self, depth: usize, p: &[u64], best: &AtomicUsize) {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let kmin = (best.load(Ordering::Relaxed) + 1).saturating_sub(depth);
        let (verts, colors) = self.color_sort(p, kmin);
        if depth < PAR_DEPTH && verts.len() > 1 {
            // branch i may use only the vertices ordered before it
            (0..verts.len()).into_par_iter().rev().for_each(|i| {
                if depth + colors[i] <= best.load(Ordering::Relaxed) {
                    return;
                }
                let v = verts[i];
                let mut np = p.to_vec();
                for &u in &verts[i..] {
                    bits::clear(&mut np, u);
                }
                self.branch_max(depth, v, &np, best);
            });
        } else {
            let mut p = p.to_vec();
            for i in (0..verts.len()).rev() {
                if depth + colors[i] <= best.load(Ordering::Relaxed) {
                    return;
                }
                let v = verts[i];
                bits::clear(&mut p, v);
                self.branch_max(depth, v, &p, best);
            }
        }
    }

    fn branch_max(&self, depth: usize, v: usize, p: &[u64], best: &AtomicUsize) {
        let mut np = vec![0u64; self.words];
        bits::and_into(&mut np, p, self.row(v));
        if bits::is_empty(&np) {
            best.fetch_max(depth + 1, Ordering::Relaxed);
        } else {
            self.expand_max(depth + 1, &np, best);
        }
    }

    /// Every clique of exactly `target` vertices, in new numbering.
    fn enumerate(&self, target: usize) -> Vec<Vec<usize>> {
        let out = Mutex::new(Vec::new());
        if target == 0 {
            return vec![Vec::new()];
        }
        let p = bits::full(self.n);
        self.expand_all(&mut Vec::new(), &p, target, &out);
        out.into_inner().unwrap()
    }

    fn expand_all(&self, clique: &mut Vec<usize>, p: &[u64], target: usize, out: &Mutex<Vec<Vec<usize>>>) {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let depth = clique.len();
        let (verts, colors) = self.color_sort(p, target - depth);
        let visit = |i: usize, np_base: &[u64], clique: &mut Vec<usize>| {
            let v = verts[i];
            clique.push(v);
            if clique.len() == target {
                out.lock().unwrap().push(clique.clone());
            } else {
                let mut np = vec![0u64; self.words];
                bits::and_into(&mut np, np_base, self.row(v));
                if !bits::is_empty(&np) {
                    self.expand_all(clique, &np, target, out);
                }
            }
            clique.pop();
        };
        if depth < PAR_DEPTH && verts.len() > 1 {
            (0..verts.len()).into_par_iter().for_each(|i| {
                if depth + colors[i] < target {
                    return;
                }
                let mut np = p.to_vec();
                for &u in &verts[i..] {
                    bits::clear(&mut np, u);
                }
                let mut local = clique.clone();
                visit(i, &np, &mut local);
            });
        } else {
            let mut p = p.to_vec();
            for i in (0..verts.len()).rev() {
                if depth + colors[i] < target {
                    return;
                }
                bits::clear(&mut p, verts[i]);
                visit(i, &p, clique);
            }
        }
    }
}

/// Lexicographically least clique of size `target` in the original numbering.
struct LexSearch<'a> {
    g: &'a BitGraph,
    nodes: u64,
}

impl LexSearch<'_> {
    fn bound(&self, p: &[u64]) -> usize {
        // greedy coloring count
        let mut uncolored = p.to_vec();
        let mut k = 0;
        while !bits::is_empty(&uncolored) {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = bits::first_one(&q) {
                bits::clear(&mut q, v);
                bits::clear(&mut uncolored, v);
                for (x, &r) in q.iter_mut().zip(self.g.row(v)) {
                    *x &= !r;
                }
            }
        }
        k
    }

    fn find(&mut self, clique: &mut Vec<usize>, p: &[u64], target: usize) -> bool {
        self.nodes += 1;
        if clique.len() == target {
            return true;
        }
        let need = target - clique.len();
        if bits::count(p) < need || self.bound(p) < need {
            return false;
        }
        let candidates: Vec<usize> = bits::iter_ones(p).collect();
        for (idx, &v) in candidates.iter().enumerate() {
            if candidates.len() - idx < need {
                return false;
            }
            let mut np = vec![0u64; p.len()];
            bits::and_into(&mut np, p, self.g.row(v));
            for &u in &candidates[..=idx] {
                bits::clear(&mut np, u);
            }
            clique.push(v);
            if self.find(clique, &np, target) {
                return true;
            }
            clique.pop();
        }
        false
    }
}

fn lexmin_clique(g: &BitGraph, target: usize) -> (Option<Vec<usize>>, u64) {
    let mut s = LexSearch { g, nodes: 0 };
    let mut clique = Vec::new();
    let found = s.find(&mut clique, &bits::full(g.order()), target);
    (found.then_some(clique), s.nodes)
}

fn labels_of(g: &BitGraph, clique: &[usize]) -> Option<PermSet> {
    g.labels().map(|l| {
        PermSet::from_vec(l.degree(), clique.iter().map(|&v| l[v].clone()).collect()).expect("distinct labels")
    })
}

/// Maximum clique of `g`, or `None` when no clique exceeds `opts.floor`.
pub fn max_clique_above(g: &BitGraph, opts: CliqueOptions) -> Option<SearchResult> {
    let start = Instant::now();
    let engine = Engine::new(g);
    let size = engine.max_size(opts.floor);
    if size <= opts.floor && !(size == 0 && opts.floor == 0) {
        return None;
    }
    let (witness, lex_nodes) = lexmin_clique(g, size);
    let witness = witness.expect("a clique of the optimal size exists");
    let all_optima = opts.enumerate_all.then(|| {
        let mut all: Vec<Vec<usize>> = engine
            .enumerate(size)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| engine.order[v]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        all.sort();
        all
    });
    Some(SearchResult {
        best_size: size,
        witness_set: labels_of(g, &witness),
        witness,
        node_count: engine.nodes.load(Ordering::Relaxed) + lex_nodes,
        elapsed: start.elapsed(),
        optimal: true,
        all_optima,
    })
}

pub fn max_clique(g: &BitGraph, enumerate_all: bool) -> SearchResult {
    max_clique_above(
        g,
        CliqueOptions {
            enumerate_all,
            floor: 0,
        },
    )
    .expect("floor 0 always yields a result")
}

/// Maximum independent set, as a maximum clique of the complement.
pub fn max_independent_set(g: &BitGraph, enumerate_all: bool) -> SearchResult {
    max_clique(&g.complement(), enumerate_all)
}

/// All cliques of exactly `size` vertices, each ascending, sorted.
pub fn cliques_of_size(g: &BitGraph, size: usize) -> Vec<Vec<usize>> {
    let engine = Engine::new(g);
    let mut all: Vec<Vec<usize>> = engine
        .enumerate(size)
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|v| engine.order[v]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    all.sort();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, cycles_of_length, graph_from_predicate, symmetric_group};

    fn naive(g: &BitGraph) -> usize {
        let n = g.order();
        assert!(n <= 20);
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = graph_from_predicate(6, |a, b| (a + b) % 2 == 0);
        let r = max_clique(&g, true);
        assert_eq!(r.best_size, 3);
        assert_eq!(r.witness, vec![0, 2, 4]);
        assert_eq!(r.all_optima.unwrap(), vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert_eq!(naive(&g), 3);
        let one = BitGraph::empty(1);
        assert_eq!(max_clique(&one, false).best_size, 1);
        let none = BitGraph::empty(0);
        assert_eq!(max_clique(&none, false).best_size, 0);
    }

    #[test]
    fn full_group_values() {
        let s4 = build_graph(&symmetric_group(4).unwrap()).unwrap();
        assert_eq!(max_clique(&s4, false).best_size, 6);
        let ind = max_independent_set(&s4, true);
        assert_eq!(ind.best_size, 4);
        assert_eq!(ind.all_optima.unwrap().len(), 6);
        let s5 = build_graph(&symmetric_group(5).unwrap()).unwrap();
        let r = max_clique(&s5, false);
        assert_eq!(r.best_size, 13);
        assert!(crate::solvers::verify::verify_clique(r.witness_set.as_ref().unwrap()));
        assert_eq!(max_independent_set(&s5, false).best_size, 4);
    }

    #[test]
    fn three_cycle_graph() {
        let g = build_graph(&cycles_of_length(7, 3).unwrap()).unwrap();
        let r = max_clique(&g, false);
        assert_eq!(r.best_size, 14);
    }

    #[test]
    fn floor_suppresses_small_results() {
        let s4 = build_graph(&symmetric_group(4).unwrap()).unwrap();
        let opts = CliqueOptions {
            enumerate_all: false,
            floor: 6,
        };
        assert!(max_clique_above(&s4, opts).is_none());
        let opts = CliqueOptions {
            enumerate_all: false,
            floor: 5,
        };
        assert_eq!(max_clique_above(&s4, opts).unwrap().best_size, 6);
    }

    #[test]
    fn witness_is_worker_independent() {
        let g = build_graph(&cycles_of_length(6, 3).unwrap()).unwrap();
        let a = max_clique(&g, true);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| max_clique(&g, true));
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.all_optima, b.all_optima);
    }
}
