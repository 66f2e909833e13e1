//! Maximality certificates for cliques and independent sets.

use std::collections::HashSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Budget;
use crate::constructions::{close_generators, left_coset_keys, Subgroup};
use crate::error::{Error, Result};
use crate::graph::{degree_formula, find_cycle, inverse_raw, next_permutation, quotient_is_cycle, raw_is_cycle};
use crate::perm::Permutation;
use crate::permset::PermSet;
use crate::solvers::verify::{check_clique, check_independent, VerifyMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaximalityMethod {
    /// Every nontrivial left coset of the subgroup was checked for a cycle.
    CosetCycle,
    /// Every permutation of the ambient group was tried as an extension.
    Scan,
    /// Every product of a fixed member with a cycle was tried.
    CycleNeighbors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub maximal: bool,
    /// A permutation that can be added, when not maximal.
    pub extension: Option<Permutation>,
    pub method: MaximalityMethod,
    /// Cosets or candidates examined before the answer was known.
    pub checked: u64,
}

/// The subgroup formed by `s`, if `s` is closed under composition.
pub fn as_subgroup(s: &PermSet, budget: &Budget) -> Option<Subgroup> {
    let n = s.degree();
    if !s.contains_identity() {
        return None;
    }
    let tight = Budget {
        max_elements: s.len(),
        ..budget.clone()
    };
    let mut gens = PermSet::new(n);
    let mut group = close_generators(n, &gens, &tight).ok()?;
    for x in s.iter() {
        if group.elements.contains(x) {
            continue;
        }
        gens.insert(x.clone()).ok()?;
        group = close_generators(n, &gens, &tight).ok()?;
        if !group.elements.iter().all(|g| s.contains(g)) {
            return None;
        }
    }
    (group.order() == s.len()).then(|| Subgroup {
        name: "subgroup".into(),
        ..group
    })
}

fn require_independent(s: &PermSet, budget: &Budget) -> Result<()> {
    match check_independent(s, VerifyMode::Auto, budget).violation {
        Some((a, b)) => Err(Error::NotIndependent(a.to_string(), b.to_string())),
        None => Ok(()),
    }
}

/// Whether no permutation of `Sym(m)` can join the independent set `s`
/// (its members extended to fix the points up to `m`).
///
/// Subgroups use the coset-cycle criterion: `s` is maximal iff every
/// nontrivial left coset `σ·s` contains a cycle. Other sets are scanned
/// against all of `Sym(m)`.
pub fn is_maximal_independent(s: &PermSet, m: usize, budget: &Budget) -> Result<MaximalityReport> {
    if m < s.degree() {
        return Err(Error::Domain(format!(
            "ambient degree {m} is below the set degree {}",
            s.degree()
        )));
    }
    require_independent(s, budget)?;
    match as_subgroup(s, budget) {
        Some(g) => coset_cycle(&g, m, budget),
        None => scan(&s.extend(m)?, budget),
    }
}

fn coset_cycle(group: &Subgroup, m: usize, budget: &Budget) -> Result<MaximalityReport> {
    if m > budget.subgroup_ambient_cap {
        return Err(Error::Budget(format!(
            "coset enumeration in Sym({m}) is above the configured cap of Sym({})",
            budget.subgroup_ambient_cap
        )));
    }
    let keys = left_coset_keys(group, m, budget)?;
    let elems: Vec<Vec<u8>> = group.elements.extend(m)?.iter().map(|p| p.raw().to_vec()).collect();
    let bad = budget.install(|| {
        keys[1..].par_iter().position_first(|r| {
            let mut buf = vec![0u8; m];
            !elems.iter().any(|g| {
                for (b, &x) in buf.iter_mut().zip(g) {
                    *b = r[x as usize];
                }
                raw_is_cycle(&buf)
            })
        })
    });
    Ok(match bad {
        Some(i) => MaximalityReport {
            maximal: false,
            extension: Some(Permutation::from_raw(inverse_raw(&keys[i + 1]))),
            method: MaximalityMethod::CosetCycle,
            checked: i as u64 + 2,
        },
        None => MaximalityReport {
            maximal: true,
            extension: None,
            method: MaximalityMethod::CosetCycle,
            checked: keys.len() as u64,
        },
    })
}

fn scan(s: &PermSet, budget: &Budget) -> Result<MaximalityReport> {
    let m = s.degree();
    if m > budget.scan_ambient_cap {
        return Err(Error::Budget(format!(
            "scanning Sym({m}) is above the configured cap of Sym({})",
            budget.scan_ambient_cap
        )));
    }
    let members: HashSet<&[u8]> = s.iter().map(|p| p.raw()).collect();
    let inverses: Vec<Vec<u8>> = s.iter().map(|p| inverse_raw(p.raw())).collect();
    let extends = |t: &[u8]| !members.contains(t) && inverses.iter().all(|i| !quotient_is_cycle(i, t));
    let hit = budget.install(|| {
        (0..m as u8).into_par_iter().find_map_first(|first| {
            let mut img: Vec<u8> = std::iter::once(first)
                .chain((0..m as u8).filter(|&x| x != first))
                .collect();
            loop {
                if extends(&img) {
                    return Some(img);
                }
                if !next_permutation(&mut img[1..]) {
                    return None;
                }
            }
        })
    });
    let total = crate::graph::factorial(m).to_u64().unwrap_or(u64::MAX);
    Ok(MaximalityReport {
        maximal: hit.is_none(),
        extension: hit.map(Permutation::from_raw),
        method: MaximalityMethod::Scan,
        checked: total,
    })
}

/// Whether no permutation of `Sym(m)` can join the clique `s`.
///
/// An extension must be adjacent to the first member `σ`, so only the
/// products `σ∘c` over all cycles `c` of `Sym(m)` are tried.
pub fn is_maximal_clique(s: &PermSet, m: usize, budget: &Budget) -> Result<MaximalityReport> {
    if m < s.degree() {
        return Err(Error::Domain(format!(
            "ambient degree {m} is below the set degree {}",
            s.degree()
        )));
    }
    if let Some((a, b)) = check_clique(s, VerifyMode::Auto, budget).violation {
        return Err(Error::Domain(format!("not a clique: {a} and {b} are not adjacent")));
    }
    let s = s.extend(m)?;
    let Some(sigma) = s.get(0).cloned() else {
        return Ok(MaximalityReport {
            maximal: false,
            extension: Some(Permutation::identity(m)),
            method: MaximalityMethod::CycleNeighbors,
            checked: 1,
        });
    };
    let inverses: Vec<Vec<u8>> = s.iter().skip(1).map(|p| inverse_raw(p.raw())).collect();
    let hit = budget.install(|| {
        find_cycle(m, 2..=m, |c| {
            let t = sigma.compose_unchecked(c);
            !s.contains(&t) && inverses.iter().all(|i| quotient_is_cycle(i, t.raw()))
        })
    });
    Ok(MaximalityReport {
        maximal: hit.is_none(),
        extension: hit.map(|c| sigma.compose_unchecked(&c)),
        method: MaximalityMethod::CycleNeighbors,
        checked: degree_formula(m).to_u64().unwrap_or(u64::MAX),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::graph::adjacent;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn subgroup_detection() {
        let k = klein_four(4).unwrap();
        assert_eq!(as_subgroup(&k.elements, &b()).unwrap().order(), 4);
        assert!(as_subgroup(&seven_point_independent_set(), &b()).is_none());
        assert!(as_subgroup(&PermSet::parse(4, &["(1,2)(3,4)"]).unwrap(), &b()).is_none());
    }

    #[test]
    fn independent_sets() {
        let g6 = even_pairing_stabilizer(6).unwrap().elements;
        for m in [6, 7] {
            let r = is_maximal_independent(&g6, m, &b()).unwrap();
            assert!(r.maximal && r.method == MaximalityMethod::CosetCycle, "m = {m}");
        }
        let id = PermSet::parse(4, &["()"]).unwrap();
        let r = is_maximal_independent(&id, 4, &b()).unwrap();
        assert!(!r.maximal);
        let ext = r.extension.unwrap();
        assert!(!ext.is_identity() && !ext.is_cycle());
        let g8 = even_pairing_stabilizer(8).unwrap().elements;
        assert!(is_maximal_independent(&g8, 9, &b()).unwrap().maximal);
        let bad = PermSet::parse(3, &["()", "(1,2)"]).unwrap();
        assert!(is_maximal_independent(&bad, 3, &b()).is_err());
    }

    #[test]
    fn coset_criterion_matches_scan() {
        let k = klein_four(4).unwrap();
        for m in [4, 5] {
            let fast = is_maximal_independent(&k.elements, m, &b()).unwrap();
            let slow = scan(&k.elements.extend(m).unwrap(), &b()).unwrap();
            assert_eq!(fast.maximal, slow.maximal, "m = {m}");
        }
        let g7 = seven_point_independent_set();
        let r = is_maximal_independent(&g7, 7, &b()).unwrap();
        assert_eq!(r.method, MaximalityMethod::Scan);
        if let Some(t) = r.extension {
            assert!(g7.iter().all(|x| !adjacent(x, &t).unwrap()));
        }
    }

    #[test]
    fn cliques() {
        assert!(is_maximal_clique(&star_clique(10).unwrap(), 10, &b()).unwrap().maximal);
        let mut s = transposition_star(9).unwrap();
        s.insert(Permutation::identity(9)).unwrap();
        let r = is_maximal_clique(&s, 9, &b()).unwrap();
        assert!(!r.maximal);
        let t = r.extension.unwrap();
        assert!(s.iter().all(|x| adjacent(x, &t).unwrap()));
        assert!(is_maximal_clique(&fano_clique(), 7, &b()).unwrap().maximal);
        assert!(!is_maximal_clique(&PermSet::new(3), 3, &b()).unwrap().maximal);
        let not = PermSet::parse(4, &["()", "(1,2)(3,4)"]).unwrap();
        assert!(is_maximal_clique(&not, 4, &b()).is_err());
    }
}
