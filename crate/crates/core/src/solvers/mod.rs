//! Exact searches, verification, maximality certificates and classification
//! up to permutation similarity.

pub mod clique;
pub mod conjugacy;
pub mod maximal;
pub mod symmetric;
pub mod verify;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::config::Budget;
use crate::constructions::Subgroup;
use crate::error::{Error, Result};
use crate::graph::factorial;

pub use clique::{cliques_of_size, max_clique, max_clique_above, max_independent_set, CliqueOptions, SearchResult};
pub use conjugacy::{classify_up_to_similarity, conjugacy_map, SimilarityClass};
pub use maximal::{is_maximal_clique, is_maximal_independent, MaximalityMethod, MaximalityReport};
pub use verify::{check_clique, check_independent, verify_clique, verify_independent, Verification, VerifyMode};

/// `n!/|G|` for an independent subgroup `G`: cliques meet each left coset
/// at most once.
pub fn omega_upper_bound(subgroup: &Subgroup) -> Result<BigUint> {
    omega_upper_bound_with(subgroup, &Budget::default())
}

pub fn omega_upper_bound_with(subgroup: &Subgroup, budget: &Budget) -> Result<BigUint> {
    if !subgroup.is_closed() {
        return Err(Error::Domain(format!(
            "{} is not closed under composition",
            subgroup.name
        )));
    }
    let v = check_independent(&subgroup.elements, VerifyMode::Auto, budget);
    if let Some((a, b)) = v.violation {
        return Err(Error::NotIndependent(a.to_string(), b.to_string()));
    }
    let (q, r) = factorial(subgroup.degree).div_rem(&BigUint::from(subgroup.order()));
    debug_assert!(r == BigUint::from(0u32));
    Ok(q)
}
