//! Explicit cliques, independent sets and independent subgroups, plus
//! subgroup closure and left-coset enumeration.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::config::Budget;
use crate::data;
use crate::error::{Error, Result};
use crate::graph::{factorial, next_permutation};
use crate::perm::{parse_cycles, Permutation, MAX_DEGREE};
use crate::permset::{PermSet, PermSetDocument};

/// A permutation group given by generators and its full element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub degree: usize,
    pub generators: PermSet,
    pub elements: PermSet,
    pub name: String,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Checks identity membership, closure under left multiplication by the
    /// generators (which suffices for a finite set), and that the order
    /// divides `degree!`.
    pub fn is_closed(&self) -> bool {
        if !self.elements.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        if !self.generators.iter().all(|g| self.elements.contains(g)) {
            return false;
        }
        let closed = self.elements.iter().collect::<Vec<_>>().par_iter().all(|x| {
            self.generators
                .iter()
                .all(|g| self.elements.contains(&g.compose_unchecked(x)))
        });
        closed && (factorial(self.degree) % self.order()).to_u64() == Some(0)
    }

    /// The same group acting on `{1..m}`, fixing the new points.
    pub fn extend(&self, m: usize) -> Result<Subgroup> {
        Ok(Subgroup {
            degree: m,
            generators: self.generators.extend(m)?,
            elements: self.elements.extend(m)?,
            name: self.name.clone(),
        })
    }

    pub fn to_document(&self) -> PermSetDocument {
        PermSetDocument {
            degree: self.degree,
            elements: self.elements.to_strings(),
            generators: Some(self.generators.to_strings()),
            name: Some(self.name.clone()),
        }
    }
}

/// The pairing `j ↔ j + k` of `{1..2k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionPair {
    pub half: usize,
}

impl PartitionPair {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || n % 2 == 1 {
            return Err(Error::Domain(format!("pairing needs an even degree, got {n}")));
        }
        Ok(PartitionPair { half: n / 2 })
    }

    pub fn degree(&self) -> usize {
        2 * self.half
    }

    pub fn partner(&self, j: usize) -> usize {
        if j <= self.half {
            j + self.half
        } else {
            j - self.half
        }
    }

    /// The involution swapping every pair.
    pub fn as_permutation(&self) -> Permutation {
        let images: Vec<usize> = (1..=self.degree()).map(|j| self.partner(j)).collect();
        Permutation::from_images(&images).expect("pairing is a bijection")
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn cycle(n: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[points]).expect("valid cycle")
}

/// The transpositions `(k, n)` for `1 ≤ k < n`.
pub fn transposition_star(n: usize) -> Result<PermSet> {
    need((3..=MAX_DEGREE).contains(&n), || {
        format!("transposition star needs n ≥ 3, got {n}")
    })?;
    PermSet::from_vec(n, (1..n).map(|k| cycle(n, &[k, n])).collect())
}

/// `(i, j, tail…)` with `i` in the lower half and `j` in the upper half of
/// `{1..n−len(tail)}`.
fn split_cycles(n: usize, k: usize) -> Result<PermSet> {
    let free = n - k + 2;
    let half = free / 2;
    let tail: Vec<usize> = (free + 1..=n).collect();
    let mut out = Vec::with_capacity(half * (free - half));
    for i in 1..=half {
        for j in half + 1..=free {
            let mut pts = vec![i, j];
            pts.extend_from_slice(&tail);
            out.push(cycle(n, &pts));
        }
    }
    PermSet::from_vec(n, out)
}

/// The 3-cycles `(i, j, n)` with `i ≤ ⌊n/2⌋ < j < n`; a maximum 3-cycle clique.
pub fn apex_three_cycles(n: usize) -> Result<PermSet> {
    need((4..=MAX_DEGREE).contains(&n), || {
        format!("apex 3-cycles need n ≥ 4, got {n}")
    })?;
    split_cycles(n, 3)
}

/// `{I} ∪` [`transposition_star`] `∪` [`apex_three_cycles`], a maximal clique.
pub fn star_clique(n: usize) -> Result<PermSet> {
    need((4..=MAX_DEGREE).contains(&n), || {
        format!("star clique needs n ≥ 4, got {n}")
    })?;
    let mut s = PermSet::new(n);
    s.insert(Permutation::identity(n))?;
    let s = s.union(&transposition_star(n)?)?;
    s.union(&apex_three_cycles(n)?)
}

/// k-cycles `(i, j, n−k+3, …, n)` with `i ≤ ⌊(n−k+2)/2⌋ < j ≤ n−k+2`.
pub fn k_cycle_clique(n: usize, k: usize) -> Result<PermSet> {
    need(k >= 4 && k <= n && n <= MAX_DEGREE, || {
        format!("k-cycle clique needs n ≥ k ≥ 4, got n = {n}, k = {k}")
    })?;
    split_cycles(n, k)
}

/// The identity plus both orientations of every Fano-plane line.
pub fn fano_clique() -> PermSet {
    PermSet::parse(7, data::FANO_CLIQUE).expect("embedded data")
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Lines of the projective plane over `Z/qZ` as sorted 1-based point lists.
///
/// Points and lines are the nonzero triples whose first nonzero coordinate
/// is 1, numbered in lexicographic order.
pub fn projective_plane_lines(q: usize) -> Result<Vec<Vec<usize>>> {
    if !is_prime(q) {
        return Err(Error::Unsupported(format!("projective plane order {q} is not prime")));
    }
    let n = q * q + q + 1;
    if n > MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "projective plane of order {q} has {n} points, above {MAX_DEGREE}"
        )));
    }
    let mut triples = Vec::with_capacity(n);
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let first = [x, y, z].into_iter().find(|&c| c != 0);
                if first == Some(1) {
                    triples.push([x, y, z]);
                }
            }
        }
    }
    debug_assert_eq!(triples.len(), n);
    Ok(triples
        .iter()
        .map(|l| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, p)| (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0)
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect())
}

/// For each line `l`, the cycle through its points in increasing order and
/// its inverse.
///
/// Two such cycles share one point or are mutually inverse; the quotient is
/// a cycle only when the line size `q + 1` is odd, so the result is a clique
/// for `q = 2` and not for odd primes.
pub fn projective_plane_clique(q: usize) -> Result<PermSet> {
    let lines = projective_plane_lines(q)?;
    let n = q * q + q + 1;
    let mut out = PermSet::with_capacity(n, 2 * n);
    for l in &lines {
        let c = cycle(n, l);
        out.insert(c.inverse())?;
        out.insert(c)?;
    }
    Ok(out.sorted())
}

/// Smallest group containing `gens`, elements in canonical text order.
pub fn close_generators(degree: usize, gens: &PermSet, budget: &Budget) -> Result<Subgroup> {
    close_named(degree, gens, budget, "closure")
}

fn close_named(degree: usize, gens: &PermSet, budget: &Budget, name: &str) -> Result<Subgroup> {
    if gens.degree() != degree {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: gens.degree(),
        });
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut order = vec![id];
    let mut head = 0;
    while head < order.len() {
        let x = order[head].clone();
        head += 1;
        for g in gens.iter() {
            let y = g.compose_unchecked(&x);
            if seen.insert(y.clone()) {
                if order.len() >= budget.max_elements {
                    return Err(Error::Budget(format!(
                        "closure exceeds {} elements",
                        budget.max_elements
                    )));
                }
                order.push(y);
            }
        }
    }
    order.sort();
    Ok(Subgroup {
        degree,
        generators: gens.clone(),
        elements: PermSet::from_vec(degree, order)?,
        name: name.to_string(),
    })
}

fn check_even_degree(n: usize, what: &str) -> Result<usize> {
    need(n >= 4 && n % 2 == 0 && n <= MAX_DEGREE, || {
        format!("{what} needs an even degree n ≥ 4, got {n}")
    })?;
    Ok(n / 2)
}

/// Raw images of all of `Sym(k)` in lexicographic image order.
fn all_arrangements(k: usize) -> Vec<Vec<u8>> {
    let mut img: Vec<u8> = (0..k as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(img.clone());
        if !next_permutation(&mut img) {
            return out;
        }
    }
}

/// `P ⊕ P` on raw images.
fn doubled(p: &[u8]) -> Vec<u8> {
    let k = p.len() as u8;
    p.iter().copied().chain(p.iter().map(|&x| x + k)).collect()
}

/// Product of the swaps `(j, j+k)` selected by `bits`, on raw images.
fn swaps(k: usize, bits: u64) -> Vec<u8> {
    let mut img: Vec<u8> = (0..2 * k as u8).collect();
    for j in 0..k {
        if bits >> j & 1 == 1 {
            img.swap(j, j + k);
        }
    }
    img
}

fn check_order(n: usize, count: usize, budget: &Budget) -> Result<()> {
    if count > budget.max_elements {
        return Err(Error::Budget(format!(
            "group on {n} points has {count} elements, above {}",
            budget.max_elements
        )));
    }
    Ok(())
}

/// `{P ⊕ P : P ∈ Sym(n/2)}`.
pub fn diagonal_copies(n: usize) -> Result<Subgroup> {
    diagonal_copies_with(n, &Budget::default())
}

pub fn diagonal_copies_with(n: usize, budget: &Budget) -> Result<Subgroup> {
    let k = check_even_degree(n, "the diagonal copy group")?;
    check_order(n, factorial(k).to_usize().unwrap_or(usize::MAX), budget)?;
    let mut elements: Vec<Permutation> = all_arrangements(k)
        .iter()
        .map(|p| Permutation::from_raw(doubled(p)))
        .collect();
    elements.sort();
    let gens = diagonal_generators(k);
    Ok(Subgroup {
        degree: n,
        generators: PermSet::from_vec(n, gens)?,
        elements: PermSet::from_vec(n, elements)?,
        name: format!("diagonal-copies({n})"),
    })
}

fn diagonal_generators(k: usize) -> Vec<Permutation> {
    let mut t: Vec<u8> = (0..k as u8).collect();
    t.swap(0, 1);
    let rot: Vec<u8> = (0..k as u8).map(|i| (i + 1) % k as u8).collect();
    let mut gens = vec![Permutation::from_raw(doubled(&t))];
    if k > 2 {
        gens.push(Permutation::from_raw(doubled(&rot)));
    }
    gens
}

fn pair_swap_generators(k: usize) -> Vec<Permutation> {
    (1..k).map(|j| Permutation::from_raw(swaps(k, 1 | 1 << j))).collect()
}

/// Even-size products of the pair swaps `(j, j + n/2)`, by increasing bit
/// pattern.
pub fn pair_swaps(n: usize) -> Result<Subgroup> {
    let k = check_even_degree(n, "the pair-swap group")?;
    need(k < 64, || format!("pair-swap group on {n} points is too large"))?;
    let elements: Vec<Permutation> = (0u64..1 << k)
        .filter(|b| b.count_ones() % 2 == 0)
        .map(|b| Permutation::from_raw(swaps(k, b)))
        .collect();
    Ok(Subgroup {
        degree: n,
        generators: PermSet::from_vec(n, pair_swap_generators(k))?,
        elements: PermSet::from_vec(n, elements)?,
        name: format!("pair-swaps({n})"),
    })
}

/// Products of [`diagonal_copies`] and [`pair_swaps`]: the even permutations
/// preserving the pairing `{j, j + n/2}`, of order `(n/2)!·2^{n/2−1}`.
pub fn even_pairing_stabilizer(n: usize) -> Result<Subgroup> {
    even_pairing_stabilizer_with(n, &Budget::default())
}

pub fn even_pairing_stabilizer_with(n: usize, budget: &Budget) -> Result<Subgroup> {
    let k = check_even_degree(n, "the even pairing stabilizer")?;
    let order = factorial(k) << (k - 1);
    check_order(n, order.to_usize().unwrap_or(usize::MAX), budget)?;
    let ds: Vec<Vec<u8>> = (0u64..1 << k)
        .filter(|b| b.count_ones() % 2 == 0)
        .map(|b| swaps(k, b))
        .collect();
    let mut elements: Vec<Permutation> = all_arrangements(k)
        .par_iter()
        .flat_map_iter(|p| {
            let h = doubled(p);
            ds.iter()
                .map(move |d| Permutation::from_raw(d.iter().map(|&x| h[x as usize]).collect()))
        })
        .collect();
    elements.par_sort();
    let mut gens = diagonal_generators(k);
    gens.extend(pair_swap_generators(k));
    Ok(Subgroup {
        degree: n,
        generators: PermSet::from_vec(n, gens)?,
        elements: PermSet::from_vec(n, elements)?,
        name: format!("even-pairing-stabilizer({n})"),
    })
}

/// The printed 40-element maximum independent set of `Sym(7)`.
///
/// It is an independent set but not closed under composition.
pub fn seven_point_independent_set() -> PermSet {
    PermSet::parse(7, data::SEVEN_POINT_INDEPENDENT_SET).expect("embedded data")
}

/// 0-1 matrix with a one at `(i, σ(i))`.
type Matrix = Vec<Vec<u8>>;

fn perm_matrix(p: &Permutation) -> Matrix {
    let n = p.degree();
    let mut m = vec![vec![0u8; n]; n];
    for i in 1..=n {
        m[i - 1][p.apply(i) - 1] = 1;
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut c = vec![vec![0u8; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

fn matrix_perm(m: &Matrix) -> Permutation {
    let images: Vec<usize> = m
        .iter()
        .map(|row| row.iter().position(|&x| x == 1).expect("permutation matrix") + 1)
        .collect();
    Permutation::from_images(&images).expect("permutation matrix")
}

fn block_sum(blocks: &[&Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut m = vec![vec![0u8; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    m
}

/// The 40-element set on seven points rebuilt from its block-matrix
/// description: `(P ⊕ [1] ⊕ Pᵗ)(Q ⊕ I₃)` and `[[0, R·C], [I₃, 0]](Q ⊕ I₃)`
/// with `R, Q` in the Klein group, `P ∈ Sym(3)` and `C` the 4-cycle matrix.
pub fn seven_point_matrix_form() -> PermSet {
    let klein: Vec<Permutation> = data::KLEIN.iter().map(|s| parse_cycles(s, 4).unwrap()).collect();
    let sym3: Vec<Permutation> = all_arrangements(3).into_iter().map(Permutation::from_raw).collect();
    let one = vec![vec![1u8]];
    let id3 = perm_matrix(&Permutation::identity(3));
    let c = perm_matrix(&cycle(4, &[1, 2, 3, 4]));
    let mut out = PermSet::new(7);
    for q in &klein {
        let right = block_sum(&[&perm_matrix(q), &id3]);
        for p in &sym3 {
            let pm = perm_matrix(p);
            let pt = perm_matrix(&p.inverse());
            let left = block_sum(&[&pm, &one, &pt]);
            out.insert(matrix_perm(&mat_mul(&left, &right))).unwrap();
        }
        for r in &klein {
            let rc = mat_mul(&perm_matrix(r), &c);
            let mut left = vec![vec![0u8; 7]; 7];
            for i in 0..4 {
                for j in 0..4 {
                    left[i][3 + j] = rc[i][j];
                }
            }
            for i in 0..3 {
                left[4 + i][i] = 1;
            }
            out.insert(matrix_perm(&mat_mul(&left, &right))).unwrap();
        }
    }
    out
}

/// Closure of the four printed generators: an independent subgroup of
/// `Sym(9)` of order 216.
pub fn order_216_group() -> Subgroup {
    let gens = PermSet::parse(9, data::ORDER_216_GENERATORS).expect("embedded data");
    close_named(9, &gens, &Budget::default(), "order-216 (SmallGroup(216,153))").expect("small closure")
}

/// `{I, (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)}` on 4 or 5 points.
pub fn klein_four(degree: usize) -> Result<Subgroup> {
    need(degree == 4 || degree == 5, || {
        format!("Klein four-group is provided on 4 or 5 points, not {degree}")
    })?;
    let elements = PermSet::parse(degree, data::KLEIN)?;
    let generators = PermSet::parse(degree, &["(1,2)(3,4)", "(1,3)(2,4)"])?;
    Ok(Subgroup {
        degree,
        generators,
        elements,
        name: "klein-four".into(),
    })
}

/// The five conjugates `σᵏ H σ⁻ᵏ` of the Klein group in `Sym(5)`, `σ = (1,…,5)`.
pub fn klein_conjugates() -> Vec<Subgroup> {
    let h = klein_four(5).expect("degree 5");
    let sigma = cycle(5, &[1, 2, 3, 4, 5]);
    let mut power = Permutation::identity(5);
    let mut out = Vec::with_capacity(5);
    for k in 0..5 {
        out.push(Subgroup {
            degree: 5,
            generators: h.generators.conjugate_set(&power).unwrap().sorted(),
            elements: h.elements.conjugate_set(&power).unwrap().sorted(),
            name: format!("klein-four-conjugate-{k}"),
        });
        power = sigma.compose_unchecked(&power);
    }
    out
}

/// Lexicographically least image array in the left coset `t·G`.
fn coset_key(t: &[u8], group: &[Vec<u8>]) -> Vec<u8> {
    let m = t.len();
    let mut cand: Vec<usize> = (0..group.len()).collect();
    let mut key = Vec::with_capacity(m);
    for x in 0..m {
        let best = cand.iter().map(|&i| t[group[i][x] as usize]).min().unwrap();
        key.push(best);
        if cand.len() > 1 {
            cand.retain(|&i| t[group[i][x] as usize] == best);
        }
    }
    key
}

/// Left cosets `σG` of `group` in `Sym(m)`, each given by its least image
/// array, identity coset first, then in discovery order.
pub(crate) fn left_coset_keys(group: &Subgroup, m: usize, budget: &Budget) -> Result<Vec<Vec<u8>>> {
    if group.degree > m || m > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "ambient degree {m} is below the group degree {}",
            group.degree
        )));
    }
    let (count, rem) = factorial(m).div_rem(&num_bigint::BigUint::from(group.order()));
    if rem != num_bigint::BigUint::from(0u32) {
        return Err(Error::Domain(format!(
            "{} elements cannot form a subgroup of Sym({m})",
            group.order()
        )));
    }
    let count = match count.to_usize() {
        Some(c) if c <= budget.max_cosets => c,
        _ => {
            return Err(Error::Budget(format!(
                "{count} cosets in Sym({m}), above the limit of {}",
                budget.max_cosets
            )))
        }
    };
    let elems: Vec<Vec<u8>> = group.elements.extend(m)?.iter().map(|p| p.raw().to_vec()).collect();
    let mut gens: Vec<Vec<u8>> = Vec::new();
    if m >= 2 {
        gens.push(cycle(m, &[1, 2]).raw().to_vec());
        if m >= 3 {
            gens.push(cycle(m, &(1..=m).collect::<Vec<_>>()).raw().to_vec());
        }
    }
    let start = coset_key(&(0..m as u8).collect::<Vec<_>>(), &elems);
    let mut seen: HashSet<Vec<u8>> = HashSet::from([start.clone()]);
    let mut keys = vec![start.clone()];
    let mut frontier = VecDeque::from([start]);
    while !frontier.is_empty() {
        let level: Vec<Vec<u8>> = frontier.drain(..).collect();
        let next: Vec<Vec<u8>> = budget.install(|| {
            level
                .par_iter()
                .flat_map_iter(|r| {
                    gens.iter().map(|s| {
                        let t: Vec<u8> = r.iter().map(|&x| s[x as usize]).collect();
                        coset_key(&t, &elems)
                    })
                })
                .collect()
        });
        for key in next {
            if seen.insert(key.clone()) {
                keys.push(key.clone());
                frontier.push_back(key);
            }
        }
    }
    debug_assert_eq!(keys.len(), count);
    Ok(keys)
}

/// One representative per left coset `σG` in `Sym(m)`: the least element of
/// each coset in canonical text order, sorted, identity first.
pub fn coset_reps(group: &Subgroup, m: usize) -> Result<Vec<Permutation>> {
    coset_reps_with(group, m, &Budget::default())
}

pub fn coset_reps_with(group: &Subgroup, m: usize, budget: &Budget) -> Result<Vec<Permutation>> {
    let keys = left_coset_keys(group, m, budget)?;
    let elems: Vec<Permutation> = group.elements.extend(m)?.to_vec();
    let mut reps: Vec<Permutation> = budget.install(|| {
        keys.par_iter()
            .map(|k| {
                let r = Permutation::from_raw(k.clone());
                elems
                    .iter()
                    .map(|g| r.compose_unchecked(g))
                    .min_by(|a, b| a.text_cmp(b))
                    .expect("nonempty group")
            })
            .collect()
    });
    reps.sort();
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn star_families() {
        assert_eq!(transposition_star(9).unwrap().len(), 8);
        assert_eq!(transposition_star(3).unwrap().to_strings(), vec!["(1,3)", "(2,3)"]);
        assert!(transposition_star(2).is_err());
        assert_eq!(apex_three_cycles(9).unwrap().len(), 16);
        assert_eq!(apex_three_cycles(10).unwrap().len(), 20);
        assert!(apex_three_cycles(3).is_err());
        for (n, size) in [(10, 30), (11, 36), (12, 42)] {
            assert_eq!(star_clique(n).unwrap().len(), size);
        }
        let t2 = apex_three_cycles(8).unwrap();
        for c in t2.iter() {
            assert!(!t2.contains(&c.inverse()));
            assert_eq!(c.apply(8), c.support()[0]);
        }
    }

    #[test]
    fn k_cycle_family() {
        let k = k_cycle_clique(10, 4).unwrap();
        assert_eq!(k.len(), 16);
        assert!(k.iter().all(|c| c.cycle_length() == Some(4)));
        assert!(k_cycle_clique(5, 3).is_err());
        assert!(k_cycle_clique(4, 5).is_err());
    }

    #[test]
    fn fano_and_planes() {
        let f = fano_clique();
        assert_eq!(f.len(), 15);
        assert!(f.contains(&p("(1,2,4)", 7)) && f.contains(&p("(1,4,2)", 7)));
        let lines = projective_plane_lines(3).unwrap();
        assert_eq!(lines.len(), 13);
        for (i, a) in lines.iter().enumerate() {
            assert_eq!(a.len(), 4);
            for b in &lines[i + 1..] {
                assert_eq!(a.iter().filter(|x| b.contains(x)).count(), 1);
            }
        }
        let q3 = projective_plane_clique(3).unwrap();
        assert_eq!((q3.degree(), q3.len()), (13, 26));
        assert!(q3.iter().all(|c| c.cycle_length() == Some(4)));
        assert_eq!(projective_plane_clique(2).unwrap().len(), 14);
        assert!(matches!(projective_plane_clique(4), Err(Error::Unsupported(_))));
        assert!(matches!(projective_plane_clique(1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn pairing() {
        let pp = PartitionPair::new(6).unwrap();
        assert_eq!((pp.partner(1), pp.partner(6)), (4, 3));
        let inv = pp.as_permutation();
        assert!(inv.compose(&inv).unwrap().is_identity());
        assert_eq!(inv.support().len(), 6);
        assert!(PartitionPair::new(5).is_err());
    }

    #[test]
    fn pairing_groups() {
        for (n, order) in [(4, 4), (6, 24), (8, 192), (10, 1920)] {
            let g = even_pairing_stabilizer(n).unwrap();
            assert_eq!(g.order(), order);
            assert!(g.is_closed(), "n = {n}");
            assert!(g.elements.iter().all(|x| x.parity().is_even()));
        }
        assert_eq!(diagonal_copies(8).unwrap().order(), 24);
        assert!(diagonal_copies(8).unwrap().is_closed());
        assert_eq!(pair_swaps(8).unwrap().order(), 8);
        assert!(pair_swaps(8).unwrap().is_closed());
        assert!(even_pairing_stabilizer(7).is_err());
        let g6 = even_pairing_stabilizer(6).unwrap();
        let h = diagonal_copies(6).unwrap();
        let k = pair_swaps(6).unwrap();
        for a in h.elements.iter() {
            for b in k.elements.iter() {
                assert!(g6.elements.contains(&a.compose(b).unwrap()));
            }
        }
        let pairing = PartitionPair::new(6).unwrap().as_permutation();
        assert!(g6.elements.iter().all(|x| x.conjugate(&pairing).unwrap() == *x));
    }

    #[test]
    fn seven_point_set_matches_its_matrix_form() {
        let s = seven_point_independent_set();
        assert_eq!(s.len(), 40);
        assert!(s[0].is_identity());
        let m = seven_point_matrix_form();
        assert!(s.same_elements(&m));
        assert_eq!(s.filter(|x| x.parity().is_even()).len(), 24);
        let closed = s.iter().all(|a| s.iter().all(|b| s.contains(&(a * b))));
        assert!(!closed);
    }

    #[test]
    fn order_216() {
        let g = order_216_group();
        assert_eq!(g.order(), 216);
        assert!(g.is_closed());
        assert!(g.elements.contains(&p("(2,4,3,7)(5,9,8,6)", 9)));
        assert!(g.elements.iter().all(|x| !x.is_cycle()));
    }

    #[test]
    fn closures() {
        let b = Budget::default();
        let t = close_generators(3, &PermSet::parse(3, &["(1,2)"]).unwrap(), &b).unwrap();
        assert_eq!(t.elements.to_strings(), vec!["()", "(1,2)"]);
        let e = close_generators(4, &PermSet::new(4), &b).unwrap();
        assert_eq!(e.order(), 1);
        let small = Budget {
            max_elements: 100,
            ..Budget::default()
        };
        let s5 = PermSet::parse(5, &["(1,2)", "(1,2,3,4,5)"]).unwrap();
        assert!(close_generators(5, &s5, &small).unwrap_err().is_budget());
        assert_eq!(close_generators(5, &s5, &b).unwrap().order(), 120);
    }

    #[test]
    fn klein_groups() {
        let h = klein_four(4).unwrap();
        assert_eq!(h.order(), 4);
        assert!(h.is_closed());
        let conj = klein_conjugates();
        assert_eq!(conj.len(), 5);
        assert!(conj[0].elements.same_elements(&klein_four(5).unwrap().elements));
        for c in &conj {
            assert!(c.is_closed());
        }
        assert!(klein_four(6).is_err());
    }

    #[test]
    fn cosets_partition_the_ambient_group() {
        let h = klein_four(4).unwrap();
        let reps = coset_reps(&h, 4).unwrap();
        assert_eq!(reps.len(), 6);
        assert!(reps[0].is_identity());
        let g6 = even_pairing_stabilizer(6).unwrap();
        let reps = coset_reps(&g6, 7).unwrap();
        assert_eq!(reps.len(), 210);
        let ext = g6.extend(7).unwrap();
        let mut all = HashSet::new();
        for r in &reps {
            for g in ext.elements.iter() {
                assert!(all.insert(r.compose(g).unwrap()));
            }
        }
        assert_eq!(all.len(), 5040);
        let s4 = close_generators(
            4,
            &PermSet::parse(4, &["(1,2)", "(1,2,3,4)"]).unwrap(),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(coset_reps(&s4, 4).unwrap().len(), 1);
        let tight = Budget {
            max_cosets: 100,
            ..Budget::default()
        };
        assert!(coset_reps_with(&g6, 7, &tight).unwrap_err().is_budget());
    }
}
