//! Clique and independence numbers of `G(Ω_n)` and of its cycle-class
//! subgraphs, with the search split into orbits of the symmetry group.
//!
//! `G(Ω_n)` is vertex-transitive and conjugation preserves adjacency, so an
//! optimum may be assumed to contain the identity and the canonical member
//! of some conjugacy class. The remaining freedom is the centralizer of that
//! member, whose orbits on the candidates give the second level of the
//! split. Earlier orbits are excluded from later subproblems.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::graph::{all_cycles_with, build_graph_with, cycles_of_length_with, symmetric_group_with, BitGraph};
use crate::perm::Permutation;
use crate::permset::PermSet;
use crate::solvers::clique::{cliques_of_size, max_clique, max_clique_above, CliqueOptions};
use crate::solvers::conjugacy::{classify_up_to_similarity, SimilarityClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Relation {
    Adjacent,
    NonAdjacent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricResult {
    pub size: usize,
    pub witness: PermSet,
    /// Subgraphs handed to the clique search.
    pub subproblems: usize,
    pub node_count: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct SymmetricResultJson {
    best_size: usize,
    witness: Vec<String>,
    subproblems: usize,
    node_count: u64,
    elapsed_ms: u128,
    optimal: bool,
}

impl SymmetricResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SymmetricResultJson {
            best_size: self.size,
            witness: self.witness.to_strings(),
            subproblems: self.subproblems,
            node_count: self.node_count,
            elapsed_ms: self.elapsed.as_millis(),
            optimal: true,
        })
        .expect("serializable")
    }
}

/// Raw cycle `(p₀,…,p_k)` on 0-based points.
fn raw_cycle(n: usize, pts: &[usize]) -> Permutation {
    let mut img: Vec<u8> = (0..n as u8).collect();
    for (i, &p) in pts.iter().enumerate() {
        img[p] = pts[(i + 1) % pts.len()] as u8;
    }
    Permutation::from_raw(img)
}

/// The member of the class with cycle type `ty` whose cycles are runs of
/// consecutive points, longest first.
fn class_rep(n: usize, ty: &[usize]) -> Permutation {
    let mut img: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &l in ty {
        for i in 0..l {
            img[start + i] = (start + (i + 1) % l) as u8;
        }
        start += l;
    }
    Permutation::from_raw(img)
}

/// Generators of the centralizer of `p`: each cycle, and swaps of
/// consecutive orbits of equal length (fixed points included).
pub fn centralizer_generators(p: &Permutation) -> Vec<Permutation> {
    let n = p.degree();
    let raw = p.raw();
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut y = raw[x] as usize;
        while y != x {
            seen[y] = true;
            orbit.push(y);
            y = raw[y] as usize;
        }
        orbits.push(orbit);
    }
    let mut gens: Vec<Permutation> = orbits.iter().filter(|o| o.len() > 1).map(|o| raw_cycle(n, o)).collect();
    let mut by_len: HashMap<usize, Vec<&Vec<usize>>> = HashMap::new();
    for o in &orbits {
        by_len.entry(o.len()).or_default().push(o);
    }
    let mut lens: Vec<usize> = by_len.keys().copied().collect();
    lens.sort_unstable();
    for l in lens {
        for pair in by_len[&l].windows(2) {
            let mut img: Vec<u8> = (0..n as u8).collect();
            for (&a, &b) in pair[0].iter().zip(pair[1].iter()) {
                img[a] = b as u8;
                img[b] = a as u8;
            }
            gens.push(Permutation::from_raw(img));
        }
    }
    gens
}

/// Orbits of `gens` acting on `pool` by conjugation, each ascending, listed
/// by least member. `pool` must be closed under the action.
pub fn conjugation_orbits(pool: &PermSet, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let len = pool.len();
    let mut parent: Vec<usize> = (0..len).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for i in 0..len {
            let j = pool
                .index_of(&pool[i].conjugate_unchecked(g))
                .expect("pool closed under the centralizer");
            let (a, b) = (root(&mut parent, i), root(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..len {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    orbits
}

fn related(rel: Relation, a: &Permutation, b: &Permutation) -> bool {
    let q = a.left_divide(b);
    q.is_cycle() == (rel == Relation::Adjacent)
}

struct Staged<'a> {
    rel: Relation,
    budget: &'a Budget,
    best: usize,
    witness: Vec<Permutation>,
    subproblems: usize,
    nodes: u64,
}

impl Staged<'_> {
    fn offer(&mut self, size: usize, witness: Vec<Permutation>) {
        if size > self.best {
            self.best = size;
            self.witness = witness;
        }
    }

    fn graph(&self, vertices: &PermSet) -> Result<BitGraph> {
        let g = build_graph_with(vertices, self.budget)?;
        Ok(match self.rel {
            Relation::Adjacent => g,
            Relation::NonAdjacent => {
                let mut c = g.complement();
                c.set_labels(vertices.clone())?;
                c
            }
        })
    }

    /// Best set containing `fixed`, drawn from `pool` (already compatible
    /// with `fixed`), split by the orbits of `gens` on `pool`.
    fn split(&mut self, fixed: &[Permutation], pool: &PermSet, gens: &[Permutation]) -> Result<()> {
        self.offer(fixed.len(), fixed.to_vec());
        let orbits = conjugation_orbits(pool, gens);
        let mut excluded = vec![false; pool.len()];
        for orbit in &orbits {
            let d = &pool[orbit[0]];
            let sub = pool.filter(|x| {
                let i = pool.index_of(x).expect("member");
                !excluded[i] && x != d && related(self.rel, d, x)
            });
            for &i in orbit {
                excluded[i] = true;
            }
            let base = fixed.len() + 1;
            if base + sub.len() <= self.best {
                continue;
            }
            let mut chosen = fixed.to_vec();
            chosen.push(d.clone());
            if sub.is_empty() {
                self.offer(base, chosen);
                continue;
            }
            self.subproblems += 1;
            let g = self.graph(&sub)?;
            let floor = self.best.saturating_sub(base);
            let found = self.budget.install(|| {
                max_clique_above(
                    &g,
                    CliqueOptions {
                        enumerate_all: false,
                        floor,
                    },
                )
            });
            if let Some(r) = found {
                self.nodes += r.node_count;
                chosen.extend(r.witness_set.expect("labeled graph").iter().cloned());
                self.offer(base + r.best_size, chosen);
            }
        }
        Ok(())
    }

    fn finish(self, degree: usize, start: Instant) -> Result<SymmetricResult> {
        Ok(SymmetricResult {
            size: self.best,
            witness: PermSet::from_vec(degree, self.witness)?,
            subproblems: self.subproblems,
            node_count: self.nodes,
            elapsed: start.elapsed(),
        })
    }
}

fn direct(n: usize, rel: Relation, budget: &Budget) -> Result<SymmetricResult> {
    let start = Instant::now();
    let all = symmetric_group_with(n, budget)?;
    let mut g = build_graph_with(&all, budget)?;
    if rel == Relation::NonAdjacent {
        g = g.complement();
        g.set_labels(all)?;
    }
    let r = budget.install(|| max_clique(&g, false));
    Ok(SymmetricResult {
        size: r.best_size,
        witness: r.witness_set.expect("labeled graph"),
        subproblems: 1,
        node_count: r.node_count,
        elapsed: start.elapsed(),
    })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > 12 {
        return Err(Error::Domain(format!("degree {n} is outside 1..=12")));
    }
    Ok(())
}

/// `ω(n)`, the clique number of `G(Ω_n)`.
pub fn clique_number(n: usize, budget: &Budget) -> Result<SymmetricResult> {
    check_n(n)?;
    if n <= 3 {
        return direct(n, Relation::Adjacent, budget);
    }
    staged_clique(n, budget)
}

fn staged_clique(n: usize, budget: &Budget) -> Result<SymmetricResult> {
    let start = Instant::now();
    let id = Permutation::identity(n);
    let cycles = all_cycles_with(n, budget)?;
    let mut st = Staged {
        rel: Relation::Adjacent,
        budget,
        best: 0,
        witness: Vec::new(),
        subproblems: 0,
        nodes: 0,
    };
    for k in 2..=n {
        let c = class_rep(n, &[k]);
        let pool = cycles.filter(|x| x.cycle_length() >= Some(k) && *x != c && related(Relation::Adjacent, &c, x));
        st.split(&[id.clone(), c.clone()], &pool, &centralizer_generators(&c))?;
    }
    st.finish(n, start)
}

/// Cycle types with at least two nontrivial cycles, longest parts first.
fn non_cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn parts(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (2..=max.min(rest)).rev() {
            cur.push(p);
            parts(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for moved in 4..=n {
        parts(moved, moved, &mut Vec::new(), &mut out);
    }
    out.retain(|t| t.len() >= 2);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `α(n)`, the independence number of `G(Ω_n)`.
pub fn independence_number(n: usize, budget: &Budget) -> Result<SymmetricResult> {
    check_n(n)?;
    if n <= 3 {
        return direct(n, Relation::NonAdjacent, budget);
    }
    staged_independence(n, budget)
}

fn staged_independence(n: usize, budget: &Budget) -> Result<SymmetricResult> {
    let start = Instant::now();
    let id = Permutation::identity(n);
    let all = symmetric_group_with(n, budget)?;
    let others = all.filter(|x| !x.is_identity() && !x.is_cycle());
    let types = non_cycle_types(n);
    let mut st = Staged {
        rel: Relation::NonAdjacent,
        budget,
        best: 0,
        witness: Vec::new(),
        subproblems: 0,
        nodes: 0,
    };
    for (t, ty) in types.iter().enumerate() {
        let r = class_rep(n, ty);
        let earlier = &types[..t];
        let pool =
            others.filter(|x| *x != r && !earlier.contains(&x.cycle_type()) && related(Relation::NonAdjacent, &r, x));
        st.split(&[id.clone(), r.clone()], &pool, &centralizer_generators(&r))?;
    }
    st.finish(n, start)
}

fn k_cycle_anchor(n: usize, k: usize, budget: &Budget) -> Result<(Permutation, PermSet)> {
    check_n(n)?;
    let ck = cycles_of_length_with(n, k, budget)?;
    let c = class_rep(n, &[k]);
    let pool = ck.filter(|x| *x != c && related(Relation::Adjacent, &c, x));
    Ok((c, pool))
}

/// `ω(G(C_k(n)))`, the largest clique of `k`-cycles in `Sym(n)`.
pub fn k_cycle_clique_number(n: usize, k: usize, budget: &Budget) -> Result<SymmetricResult> {
    let start = Instant::now();
    let (c, pool) = k_cycle_anchor(n, k, budget)?;
    let mut st = Staged {
        rel: Relation::Adjacent,
        budget,
        best: 0,
        witness: Vec::new(),
        subproblems: 0,
        nodes: 0,
    };
    st.split(std::slice::from_ref(&c), &pool, &centralizer_generators(&c))?;
    st.finish(n, start)
}

/// Every maximum clique of `G(C_k(n))` through `(1,…,k)`, each sorted. Every
/// maximum clique is conjugate to one of these.
pub fn maximum_k_cycle_cliques(n: usize, k: usize, budget: &Budget) -> Result<Vec<PermSet>> {
    let size = k_cycle_clique_number(n, k, budget)?.size;
    let (c, pool) = k_cycle_anchor(n, k, budget)?;
    if size == 1 {
        return Ok(vec![PermSet::from_vec(n, vec![c])?]);
    }
    let g = build_graph_with(&pool, budget)?;
    let found = budget.install(|| cliques_of_size(&g, size - 1));
    found
        .into_iter()
        .map(|clique| {
            let mut members = vec![c.clone()];
            members.extend(clique.iter().map(|&v| pool[v].clone()));
            Ok(PermSet::from_vec(n, members)?.sorted())
        })
        .collect()
}

/// Maximum `k`-cycle cliques grouped up to similarity, with and without
/// identifying a set with its inverses.
#[derive(Clone, Debug)]
pub struct KCycleClasses {
    pub size: usize,
    pub cliques: Vec<PermSet>,
    pub classes: Vec<SimilarityClass>,
    pub classes_with_inversion: Vec<SimilarityClass>,
}

pub fn k_cycle_clique_classes(n: usize, k: usize, budget: &Budget) -> Result<KCycleClasses> {
    let cliques = maximum_k_cycle_cliques(n, k, budget)?;
    let size = cliques.first().map_or(0, PermSet::len);
    let classes = classify_up_to_similarity(&cliques, false);
    let classes_with_inversion = classify_up_to_similarity(&cliques, true);
    Ok(KCycleClasses {
        size,
        cliques,
        classes,
        classes_with_inversion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::verify::{verify_clique, verify_independent};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn centralizers() {
        let p = class_rep(7, &[3, 2]);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        let gens = centralizer_generators(&p);
        assert!(gens.iter().all(|g| p.conjugate(g).unwrap() == p));
        let c = class_rep(5, &[5]);
        assert_eq!(centralizer_generators(&c).len(), 1);
        assert_eq!(
            non_cycle_types(6),
            vec![vec![4, 2], vec![3, 3], vec![3, 2], vec![2, 2, 2], vec![2, 2]]
        );
    }

    #[test]
    fn small_clique_numbers() {
        for (n, w) in [(1, 1), (2, 2), (3, 6), (4, 6), (5, 13)] {
            let r = clique_number(n, &b()).unwrap();
            assert_eq!(r.size, w, "n = {n}");
            assert!(verify_clique(&r.witness));
            assert_eq!(r.witness.len(), w);
        }
    }

    #[test]
    fn reduction_agrees_with_direct_search() {
        for n in [4, 5] {
            assert_eq!(
                staged_independence(n, &b()).unwrap().size,
                direct(n, Relation::NonAdjacent, &b()).unwrap().size
            );
            assert_eq!(
                staged_clique(n, &b()).unwrap().size,
                direct(n, Relation::Adjacent, &b()).unwrap().size
            );
        }
    }

    #[test]
    fn small_independence_numbers() {
        for (n, a) in [(1, 1), (2, 1), (3, 1), (4, 4), (5, 4)] {
            let r = independence_number(n, &b()).unwrap();
            assert_eq!(r.size, a, "n = {n}");
            assert!(verify_independent(&r.witness));
        }
    }

    #[test]
    fn three_cycle_cliques() {
        for (n, w) in [(3, 2), (4, 2), (5, 5), (6, 8), (7, 14)] {
            let r = k_cycle_clique_number(n, 3, &b()).unwrap();
            assert_eq!(r.size, w, "n = {n}");
            assert!(verify_clique(&r.witness));
        }
        let cls = k_cycle_clique_classes(7, 3, &b()).unwrap();
        assert_eq!(cls.size, 14);
        assert_eq!(cls.classes.len(), 1);
    }

    #[test]
    fn transposition_cliques() {
        for n in 5..=7 {
            let cls = k_cycle_clique_classes(n, 2, &b()).unwrap();
            assert_eq!(cls.size, n - 1);
            assert_eq!(cls.classes.len(), 1);
        }
    }
}
