//! Recursive constructions of large independent sets.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::config::Budget;
use crate::constructions::{even_pairing_stabilizer, klein_four};
use crate::error::{Error, Result};
use crate::graph::{factorial, next_permutation};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::permset::PermSet;
use crate::solvers::verify::{check_independent, VerifyMode};

fn arrangements(k: usize) -> Vec<Permutation> {
    let mut img: Vec<u8> = (0..k as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_raw(img.clone()));
        if !next_permutation(&mut img) {
            return out;
        }
    }
}

fn check_size(size: &BigUint, budget: &Budget) -> Result<usize> {
    match size.to_usize() {
        Some(s) if s <= budget.max_elements => Ok(s),
        _ => Err(Error::Budget(format!(
            "construction would have {size} elements, above the limit of {}",
            budget.max_elements
        ))),
    }
}

fn require_independent(seed: &PermSet, budget: &Budget) -> Result<()> {
    let v = check_independent(seed, VerifyMode::Auto, budget);
    match v.violation {
        Some((a, b)) => Err(Error::NotIndependent(a.to_string(), b.to_string())),
        None => Ok(()),
    }
}

fn require_even(seed: &PermSet) -> Result<()> {
    match seed.iter().find(|p| !p.parity().is_even()) {
        Some(p) => Err(Error::Parity(format!("seed element {p} is odd"))),
        None => Ok(()),
    }
}

/// `{P∘(Q ⊕ I_{n−k}) ⊕ Q : P ∈ seed, Q ∈ Sym(k)}` on `n + k` points, of size
/// `|seed|·k!`.
pub fn extend_by_block(seed: &PermSet, k: usize, budget: &Budget) -> Result<PermSet> {
    let n = seed.degree();
    if k == 0 || k > n || n + k > MAX_DEGREE {
        return Err(Error::Domain(format!(
            "block size {k} must lie in 1..={n} for a seed on {n} points"
        )));
    }
    check_size(&(factorial(k) * seed.len()), budget)?;
    require_independent(seed, budget)?;
    let ident = Permutation::identity(n - k);
    let qs = arrangements(k);
    let padded: Vec<Permutation> = qs
        .iter()
        .map(|q| q.direct_sum(&ident).expect("degree in range"))
        .collect();
    let elems: Vec<Permutation> = seed
        .to_vec()
        .par_iter()
        .flat_map_iter(|p| {
            qs.iter()
                .zip(&padded)
                .map(move |(q, qp)| p.compose_unchecked(qp).direct_sum(q).expect("degree in range"))
        })
        .collect();
    PermSet::from_vec(n + k, elems)
}

/// The default twist: the identity for even `n`, `(1,2)` for odd `n`.
pub fn default_twist(n: usize) -> Result<Permutation> {
    if n % 2 == 0 {
        Ok(Permutation::identity(n))
    } else if n >= 3 {
        Permutation::from_cycles(n, &[&[1, 2]])
    } else {
        Err(Error::Domain("no odd twist exists on one point".into()))
    }
}

/// `L ∪ R` on `2n` points, with `L = {P∘Q ⊕ Q}` over `P ∈ seed`,
/// `Q ∈ Sym(n)`, and `R = {X ∘ half_swap(w) : X ∈ L}`; size `2·n!·|seed|`.
///
/// The seed must be independent and all-even, and `w` must be even exactly
/// when `n` is even.
pub fn double_even(seed: &PermSet, w: &Permutation, budget: &Budget) -> Result<PermSet> {
    let n = seed.degree();
    if w.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: w.degree(),
        });
    }
    if 2 * n > MAX_DEGREE {
        return Err(Error::InvalidDegree(2 * n));
    }
    require_even(seed)?;
    if w.parity().is_even() != (n % 2 == 0) {
        return Err(Error::Parity(format!(
            "twist {w} is {} but must be {} on {n} points",
            w.parity(),
            if n % 2 == 0 { "even" } else { "odd" }
        )));
    }
    check_size(&(factorial(n) * seed.len() * 2u32), budget)?;
    require_independent(seed, budget)?;
    let swap = w.half_swap()?;
    let qs = arrangements(n);
    let left: Vec<Permutation> = seed
        .to_vec()
        .par_iter()
        .flat_map_iter(|p| {
            qs.iter()
                .map(move |q| p.compose_unchecked(q).direct_sum(q).expect("degree in range"))
        })
        .collect();
    let right: Vec<Permutation> = left.par_iter().map(|x| x.compose_unchecked(&swap)).collect();
    let mut all = left;
    all.extend(right);
    PermSet::from_vec(2 * n, all)
}

/// Applies [`double_even`] `m` times with the default twist.
pub fn iterate_doubling(seed: &PermSet, m: usize, budget: &Budget) -> Result<PermSet> {
    let mut cur = seed.clone();
    for _ in 0..m {
        let w = default_twist(cur.degree())?;
        cur = double_even(&cur, &w, budget)?;
    }
    Ok(cur)
}

/// Predicted size of [`iterate_doubling`]: `|seed|·2^m·Π_{k<m} (r·2^k)!`.
pub fn iterate_doubling_size(seed_len: usize, r: usize, m: usize) -> BigUint {
    let mut size = BigUint::from(seed_len) << m;
    for k in 0..m {
        size *= factorial(r << k);
    }
    size
}

/// An even independent set in `Sym(n)` of size `g(n)`.
///
/// Bases: the Klein group for 4 and 5 points, the 6-point even pairing
/// stabilizer for 6 and 7 points. Larger `n` double the `⌊n/2⌋` set and, for
/// odd `n`, fix the last point.
pub fn build_g_set(n: usize, budget: &Budget) -> Result<PermSet> {
    if n < 4 {
        return Err(Error::Domain(format!("build_g_set needs n ≥ 4, got {n}")));
    }
    if n > budget.g_set_cap {
        return Err(Error::Budget(format!(
            "build_g_set({n}) is above the configured cap of {}",
            budget.g_set_cap
        )));
    }
    let set = match n {
        4 => klein_four(4)?.elements,
        5 => klein_four(5)?.elements,
        6 => even_pairing_stabilizer(6)?.elements,
        7 => even_pairing_stabilizer(6)?.elements.extend(7)?,
        _ => {
            let half = build_g_set(n / 2, budget)?;
            let doubled = double_even(&half, &default_twist(n / 2)?, budget)?;
            if n % 2 == 1 {
                doubled.extend(n)?
            } else {
                doubled
            }
        }
    };
    if n <= 7 {
        require_even(&set)?;
        require_independent(&set, budget)?;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_g;
    use crate::perm::parse_cycles;
    use crate::solvers::verify::verify_independent;

    #[test]
    fn block_extension() {
        let b = Budget::default();
        let h = klein_four(4).unwrap().elements;
        let e = extend_by_block(&h, 1, &b).unwrap();
        assert_eq!((e.degree(), e.len()), (5, 4));
        assert!(verify_independent(&e));
        let g6 = even_pairing_stabilizer(6).unwrap().elements;
        let e = extend_by_block(&g6, 5, &b).unwrap();
        assert_eq!((e.degree(), e.len()), (11, 2880));
        let bad = PermSet::parse(3, &["()", "(1,2)"]).unwrap();
        assert!(matches!(extend_by_block(&bad, 1, &b), Err(Error::NotIndependent(_, _))));
        assert!(extend_by_block(&h, 5, &b).is_err());
    }

    #[test]
    fn doubling() {
        let b = Budget::default();
        let id2 = PermSet::parse(2, &["()"]).unwrap();
        let k = double_even(&id2, &Permutation::identity(2), &b).unwrap();
        assert!(k.same_elements(&klein_four(4).unwrap().elements));
        let odd = parse_cycles("(1,2)", 2).unwrap();
        assert!(matches!(double_even(&id2, &odd, &b), Err(Error::Parity(_))));
        let odd_seed = PermSet::parse(4, &["()", "(1,2)"]).unwrap();
        let err = double_even(&odd_seed, &Permutation::identity(4), &b).unwrap_err();
        assert!(err.to_string().contains("(1,2)"), "{err}");
        let g6 = even_pairing_stabilizer(6).unwrap().elements;
        let d = double_even(&g6, &Permutation::identity(6), &b).unwrap();
        assert_eq!((d.degree(), d.len()), (12, 34560));
        assert!(d.iter().all(|x| x.parity().is_even()));
    }

    #[test]
    fn iterated() {
        let b = Budget::default();
        let h = klein_four(4).unwrap().elements;
        assert_eq!(iterate_doubling(&h, 0, &b).unwrap(), h);
        let s = iterate_doubling(&h, 1, &b).unwrap();
        assert_eq!(s.len(), 192);
        assert_eq!(iterate_doubling_size(4, 4, 1), BigUint::from(192u32));
        assert_eq!(iterate_doubling_size(24, 6, 1), BigUint::from(34560u32));
        assert!(verify_independent(&s));
    }

    #[test]
    fn g_sets() {
        let b = Budget::default();
        for n in 4..=10 {
            let s = build_g_set(n, &b).unwrap();
            assert_eq!(BigUint::from(s.len()), bound_g(n).unwrap(), "n = {n}");
            assert!(s.iter().all(|x| x.parity().is_even()));
        }
        assert!(build_g_set(14, &b).unwrap_err().is_budget());
        assert!(build_g_set(3, &b).is_err());
    }
}
