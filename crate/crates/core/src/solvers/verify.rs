//! Pairwise clique and independence checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Budget;
use crate::graph::{inverse_raw, quotient_is_cycle};
use crate::perm::Permutation;
use crate::permset::PermSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Exhaustive up to the budget's `exhaustive_limit`, sampled beyond.
    Auto,
    Exhaustive,
    Sampled {
        pairs: u64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairProperty {
    Adjacent,
    NonAdjacent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// First pair breaking the property: lexicographic by index when
    /// exhaustive, in sample order when sampled.
    pub violation: Option<(Permutation, Permutation)>,
    pub pairs_checked: u64,
    pub exhaustive: bool,
}

struct Prepared {
    images: Vec<Vec<u8>>,
    inverses: Vec<Vec<u8>>,
}

impl Prepared {
    fn new(s: &PermSet) -> Self {
        let images: Vec<Vec<u8>> = s.iter().map(|p| p.raw().to_vec()).collect();
        let inverses = images.iter().map(|x| inverse_raw(x)).collect();
        Prepared { images, inverses }
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        quotient_is_cycle(&self.inverses[i], &self.images[j])
    }
}

/// Checks `want` on every pair (or a sample of pairs) of `s`.
pub fn check_pairs(s: &PermSet, want: PairProperty, mode: VerifyMode, budget: &Budget) -> Verification {
    let len = s.len();
    let total = (len as u64) * (len.saturating_sub(1) as u64) / 2;
    let mode = match mode {
        VerifyMode::Auto if len <= budget.exhaustive_limit => VerifyMode::Exhaustive,
        VerifyMode::Auto => VerifyMode::Sampled {
            pairs: budget.sample_pairs,
            seed: budget.seed,
        },
        m => m,
    };
    let prep = Prepared::new(s);
    let bad = |i: usize, j: usize| prep.adjacent(i, j) != (want == PairProperty::Adjacent);
    let (hit, checked, exhaustive) = match mode {
        VerifyMode::Exhaustive | VerifyMode::Auto => {
            let hit = budget.install(|| {
                (0..len)
                    .into_par_iter()
                    .find_map_first(|i| (i + 1..len).find(|&j| bad(i, j)).map(|j| (i, j)))
            });
            (hit, total, true)
        }
        VerifyMode::Sampled { pairs, seed } => {
            if len < 2 {
                (None, 0, true)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let sample: Vec<(usize, usize)> = (0..pairs)
                    .map(|_| {
                        let i = rng.gen_range(0..len);
                        let mut j = rng.gen_range(0..len - 1);
                        if j >= i {
                            j += 1;
                        }
                        (i, j)
                    })
                    .collect();
                let hit = budget.install(|| sample.par_iter().find_first(|&&(i, j)| bad(i, j)).copied());
                (hit, pairs, false)
            }
        }
    };
    Verification {
        ok: hit.is_none(),
        violation: hit.map(|(i, j)| (s[i].clone(), s[j].clone())),
        pairs_checked: checked,
        exhaustive,
    }
}

pub fn check_clique(s: &PermSet, mode: VerifyMode, budget: &Budget) -> Verification {
    check_pairs(s, PairProperty::Adjacent, mode, budget)
}

pub fn check_independent(s: &PermSet, mode: VerifyMode, budget: &Budget) -> Verification {
    check_pairs(s, PairProperty::NonAdjacent, mode, budget)
}

/// Every pair adjacent, checked exhaustively.
pub fn verify_clique(s: &PermSet) -> bool {
    check_clique(s, VerifyMode::Exhaustive, &Budget::default()).ok
}

/// No pair adjacent, checked exhaustively.
pub fn verify_independent(s: &PermSet) -> bool {
    check_independent(s, VerifyMode::Exhaustive, &Budget::default()).ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::data;
    use crate::perm::parse_cycles;

    #[test]
    fn examples() {
        assert!(verify_independent(&klein_four(4).unwrap().elements));
        let s = PermSet::parse(3, &["()", "(1,2)"]).unwrap();
        let v = check_independent(&s, VerifyMode::Exhaustive, &Budget::default());
        assert!(!v.ok);
        let (a, b) = v.violation.unwrap();
        assert!(a.is_identity() && b == parse_cycles("(1,2)", 3).unwrap());
        assert!(verify_independent(&PermSet::parse(5, data::MIXED_PARITY_SET).unwrap()));
        assert!(verify_clique(&fano_clique()));
        assert!(verify_clique(&transposition_star(5).unwrap()));
        assert!(verify_clique(&apex_three_cycles(12).unwrap()));
        assert!(verify_clique(&star_clique(10).unwrap()));
        assert!(verify_clique(&k_cycle_clique(9, 5).unwrap()));
    }

    #[test]
    fn odd_planes_fail_on_inverse_pairs() {
        let q3 = projective_plane_clique(3).unwrap();
        let v = check_clique(&q3, VerifyMode::Exhaustive, &Budget::default());
        let (a, b) = v.violation.unwrap();
        assert_eq!(a.inverse(), b);
        let half = q3.filter(|c| c.images()[c.support()[0] - 1] == c.support()[1]);
        assert_eq!(half.len(), 13);
        assert!(verify_clique(&half));
        assert!(verify_clique(&projective_plane_clique(2).unwrap()));
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let g = even_pairing_stabilizer(8).unwrap().elements;
        let mode = VerifyMode::Sampled { pairs: 5000, seed: 7 };
        let v = check_independent(&g, mode, &Budget::default());
        assert!(v.ok && !v.exhaustive && v.pairs_checked == 5000);
        let bad = g.union(&PermSet::parse(8, &["(1,2)"]).unwrap()).unwrap();
        let a = check_independent(
            &bad,
            VerifyMode::Sampled {
                pairs: 100_000,
                seed: 3,
            },
            &Budget::default(),
        );
        let b = check_independent(
            &bad,
            VerifyMode::Sampled {
                pairs: 100_000,
                seed: 3,
            },
            &Budget::default(),
        );
        assert!(!a.ok);
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_sets() {
        assert!(verify_clique(&PermSet::new(3)));
        assert!(verify_independent(&PermSet::parse(3, &["()"]).unwrap()));
    }
}
