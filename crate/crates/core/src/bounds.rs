//! Exact lower bounds for the independence number `α(n)`.
//!
//! Throughout, `n = 2^m + q` with `0 ≤ q < 2^m`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, factorial};

/// `(m, q)` with `n = 2^m + q`, `0 ≤ q < 2^m`.
pub fn split_power(n: usize) -> (u32, usize) {
    assert!(n >= 1);
    let m = usize::BITS - 1 - n.leading_zeros();
    (m, n - (1 << m))
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        Err(Error::Domain(format!("bounds are defined for n ≥ 4, got {n}")))
    } else {
        Ok(())
    }
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e
}

/// `Π_{i=1}^{m−1} (2^i)!`.
fn doubling_product(m: u32) -> BigUint {
    (1..m).map(|i| factorial(1 << i)).product()
}

/// `f(n) = Π_{i=1}^{⌊log₂ n⌋} ⌊n/2^i⌋!`.
pub fn bound_f(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let (m, _) = split_power(n);
    Ok((1..=m).map(|i| factorial(n >> i)).product())
}

/// `g(n) = 2^{m−1}·f(n)` if `q < 2^{m−1}`, else `2^m·f(n)`.
pub fn bound_g(n: usize) -> Result<BigUint> {
    let f = bound_f(n)?;
    let (m, q) = split_power(n);
    Ok(if q < 1 << (m - 1) { f * pow2(m - 1) } else { f * pow2(m) })
}

/// `h(n) = q!·2^{m−1}·Π_{i=1}^{m−1} (2^i)!`.
pub fn bound_h(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let (m, q) = split_power(n);
    Ok(factorial(q) * pow2(m - 1) * doubling_product(m))
}

/// `(n/2)·Π_{i=1}^{m−1} (2^i)!`, defined for powers of two.
pub fn bound_cj(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let (m, q) = split_power(n);
    if q != 0 {
        return Err(Error::Domain(format!("{n} is not a power of two")));
    }
    Ok(BigUint::from(n / 2) * doubling_product(m))
}

/// Which of the sufficient criteria for comparing `g` and `h` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GhCase {
    /// `q ∈ {0, 1}`.
    Equal,
    /// `(2^{m−1}+1)⋯(2^{m−1}+⌊q/2⌋) > q!`.
    GWins,
    /// `(2^m−t+1)⋯(2^m−⌈t/2⌉) < 2^{m−1}⋯4` with `t = 2^m − q`.
    HWins,
    IncomparableByCriteria,
}

impl std::fmt::Display for GhCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GhCase::Equal => "equal",
            GhCase::GWins => "g_wins",
            GhCase::HWins => "h_wins",
            GhCase::IncomparableByCriteria => "incomparable-by-criteria",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhComparison {
    pub case: GhCase,
    /// `g(n).cmp(h(n))`.
    pub direct: Ordering,
}

impl GhComparison {
    /// Whether the criterion, if one fired, matches the direct comparison.
    pub fn consistent(&self) -> bool {
        match self.case {
            GhCase::Equal => self.direct == Ordering::Equal,
            GhCase::GWins => self.direct == Ordering::Greater,
            GhCase::HWins => self.direct == Ordering::Less,
            GhCase::IncomparableByCriteria => true,
        }
    }
}

fn range_product(lo: usize, hi: usize) -> BigUint {
    (lo..=hi).fold(BigUint::one(), |acc, x| acc * x)
}

pub fn compare_gh(n: usize) -> Result<GhComparison> {
    let g = bound_g(n)?;
    let h = bound_h(n)?;
    let (m, q) = split_power(n);
    let half = 1usize << (m - 1);
    let full = 1usize << m;
    let case = if q <= 1 {
        GhCase::Equal
    } else if range_product(half + 1, half + q / 2) > factorial(q) {
        GhCase::GWins
    } else {
        let t = full - q;
        let lhs = range_product(full - t + 1, full - t.div_ceil(2));
        let rhs: BigUint = (2..m).map(pow2).product();
        if lhs < rhs {
            GhCase::HWins
        } else {
            GhCase::IncomparableByCriteria
        }
    };
    Ok(GhComparison {
        case,
        direct: g.cmp(&h),
    })
}

/// Exact size of the power-of-two family and the floor of its analytic
/// lower estimate `2·n^{(6+log₂ n)/4}·n!/4^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmEstimate {
    pub exact: BigUint,
    pub estimate_floor: BigUint,
}

pub fn bound_bm_estimate(n: usize) -> Result<BmEstimate> {
    check_n(n)?;
    let (m, q) = split_power(n);
    if q != 0 {
        return Err(Error::Domain(format!("{n} is not a power of two")));
    }
    let denom: BigUint = (1..=m).map(|i| binomial(1 << i, 1 << (i - 1))).product();
    let nf = factorial(n);
    let exact = BigUint::from(n / 2) * &nf / denom;
    // estimate = n!·2^{e/4} with e = 4 + m(6+m) − 8n
    let e = 4 + (m as i64) * (6 + m as i64) - 8 * n as i64;
    let fourth = nf.pow(4u32);
    let radicand = if e >= 0 {
        fourth << e as u64
    } else {
        fourth >> (-e) as u64
    };
    Ok(BmEstimate {
        exact,
        estimate_floor: radicand.nth_root(4),
    })
}

/// All bounds for one `n`, with the best construction known for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: u32,
    pub q: usize,
    pub f: BigUint,
    pub g: BigUint,
    pub h: BigUint,
    pub cj: Option<BigUint>,
    pub best_known: BigUint,
    pub provenance: String,
}

/// JSON form: every number as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReportJson {
    pub n: String,
    pub m: String,
    pub q: String,
    pub f: String,
    pub g: String,
    pub h: String,
    pub cj: Option<String>,
    pub best_known: String,
    pub provenance: String,
}

impl BoundReport {
    pub fn to_json_value(&self) -> BoundReportJson {
        BoundReportJson {
            n: self.n.to_string(),
            m: self.m.to_string(),
            q: self.q.to_string(),
            f: self.f.to_string(),
            g: self.g.to_string(),
            h: self.h.to_string(),
            cj: self.cj.as_ref().map(|c| c.to_string()),
            best_known: self.best_known.to_string(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

/// Best lower bounds for 4 ≤ n ≤ 19 with the construction behind each.
const TABLE: &[(usize, u64, u64, &str)] = &[
    (4, 4, 1, "exact optimum: cosets of the Klein four-group"),
    (5, 4, 1, "exact optimum: the Klein four-group"),
    (6, 24, 1, "exact optimum: the even pairing stabilizer"),
    (7, 40, 1, "exact optimum: the printed 40-element set"),
    (
        8,
        192,
        1,
        "even pairing stabilizer, or iterated doubling of the Klein group",
    ),
    (9, 216, 1, "the order-216 subgroup of Sym(9)"),
    (10, 1920, 1, "the even pairing stabilizer"),
    (11, 24, 120, "extend-by-block of the 6-point subgroup (24·5!)"),
    (12, 48, 720, "doubling of the 6-point subgroup (2·24·6!)"),
    (13, 48, 720, "the 12-point set fixing 13, or the g bound (2·24·6!)"),
    (14, 48, 5040, "the g bound (48·7!)"),
    (15, 192, 5040, "extend-by-block of the 8-point subgroup (192·7!)"),
    (16, 384, 40320, "iterated doubling (2·192·8!)"),
    (17, 384, 40320, "the 16-point set fixing 17, or the g bound (2·192·8!)"),
    (18, 384, 362880, "the g bound (384·9!)"),
    (19, 1920, 362880, "extend-by-block of the 10-point subgroup (1920·9!)"),
];

fn table_entry(n: usize) -> Option<(BigUint, String)> {
    TABLE
        .iter()
        .find(|e| e.0 == n)
        .map(|&(_, a, b, why)| (BigUint::from(a) * b, why.to_string()))
}

/// Best known lower bound on `α(n)` and its construction.
///
/// Beyond the tabulated range this is the largest of `g(n)`, `h(n)` and the
/// block extensions `best(n−k)·k!` for `k ≤ n/2`.
pub fn best_known(n: usize) -> Result<(BigUint, String)> {
    check_n(n)?;
    let mut best: Vec<(BigUint, String)> = Vec::with_capacity(n + 1);
    for _ in 0..4 {
        best.push((BigUint::zero(), String::new()));
    }
    for size in 4..=n {
        if let Some(entry) = table_entry(size) {
            best.push(entry);
            continue;
        }
        let mut cur = (bound_g(size)?, "the g bound".to_string());
        let h = bound_h(size)?;
        if h > cur.0 {
            cur = (h, "the h bound".to_string());
        }
        for k in 1..=size / 2 {
            if size - k < 4 {
                continue;
            }
            let cand = &best[size - k].0 * factorial(k);
            if cand > cur.0 {
                cur = (
                    cand,
                    format!("extend-by-block of the best {}-point set with k = {k}", size - k),
                );
            }
        }
        best.push(cur);
    }
    Ok(best.swap_remove(n))
}

pub fn bound_report(n: usize) -> Result<BoundReport> {
    let (m, q) = split_power(n);
    let (best_known, provenance) = best_known(n)?;
    Ok(BoundReport {
        n,
        m,
        q,
        f: bound_f(n)?,
        g: bound_g(n)?,
        h: bound_h(n)?,
        cj: if q == 0 { Some(bound_cj(n)?) } else { None },
        best_known,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn spot_values() {
        assert_eq!(bound_g(8).unwrap(), big(192));
        assert_eq!(bound_h(8).unwrap(), big(192));
        assert_eq!(bound_g(12).unwrap(), big(34560));
        assert_eq!(bound_h(12).unwrap(), big(4608));
        assert_eq!(bound_g(10).unwrap(), big(960));
        assert_eq!(bound_g(11).unwrap(), big(960));
        assert_eq!(bound_g(14).unwrap(), big(241920));
        assert_eq!(bound_cj(16).unwrap(), bound_g(16).unwrap());
        assert_eq!(bound_h(16).unwrap(), bound_g(16).unwrap());
        assert!(bound_cj(12).is_err());
        assert!(bound_f(3).is_err());
    }

    #[test]
    fn split() {
        assert_eq!(split_power(4), (2, 0));
        assert_eq!(split_power(12), (3, 4));
        assert_eq!(split_power(127), (6, 63));
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare_gh(16).unwrap().case, GhCase::Equal);
        let c = compare_gh(12).unwrap();
        assert_eq!((c.case, c.direct), (GhCase::GWins, Ordering::Greater));
        for n in 4..=128 {
            assert!(compare_gh(n).unwrap().consistent(), "n = {n}");
        }
    }

    #[test]
    fn estimates() {
        let e = bound_bm_estimate(4).unwrap();
        assert_eq!((e.exact, e.estimate_floor), (big(4), big(3)));
        assert!(bound_bm_estimate(6).is_err());
        for n in [8, 16, 32] {
            let e = bound_bm_estimate(n).unwrap();
            assert!(e.exact >= e.estimate_floor);
        }
    }

    #[test]
    fn reports() {
        let r = bound_report(12).unwrap();
        assert_eq!(r.best_known, big(34560));
        assert!(r.provenance.contains("doubling"));
        assert!(r.cj.is_none());
        let j = bound_report(16).unwrap().to_json_value();
        assert_eq!(j.cj.as_deref(), Some(j.g.as_str()));
        for n in 4..=64 {
            let r = bound_report(n).unwrap();
            assert!(r.best_known >= r.g.clone().max(r.h.clone()), "n = {n}");
        }
        assert_eq!(bound_report(19).unwrap().best_known, big(1920 * 362880));
    }
}
