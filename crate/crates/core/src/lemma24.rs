//! Prime powers `q^r` with `q^r − 1 | 2^a · 3² · 5 · 7`.
//!
//! The 2-part is free, so the condition is that the odd part of `q^r − 1`
//! divides 315.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub const ODD_BOUND: u64 = 315;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DivisibilityPair {
    pub q: u64,
    pub r: u32,
}

pub fn odd_part(n: &BigUint) -> BigUint {
    assert!(!n.is_zero(), "odd part of zero");
    n >> n.trailing_zeros().unwrap_or(0)
}

fn power_minus_one(q: u64, r: u32) -> BigUint {
    BigUint::from(q).pow(r) - BigUint::one()
}

pub fn is_admissible(q: u64, r: u32) -> bool {
    (BigUint::from(ODD_BOUND) % odd_part(&power_minus_one(q, r))).is_zero()
}

/// Primes up to `n` by sieving.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// All admissible `(q, r)` with `q ≤ q_max` prime and `2 ≤ r ≤ r_max`.
pub fn admissible_pairs(q_max: u64, r_max: u32) -> BTreeSet<DivisibilityPair> {
    primes_up_to(q_max)
        .into_par_iter()
        .flat_map_iter(|q| {
            (2..=r_max).filter(move |&r| is_admissible(q, r)).map(move |r| DivisibilityPair { q, r })
        })
        .collect()
}

/// `q^r − 1` divides `2^a · 315` with `a` its own 2-adic valuation,
/// checked by direct division.
pub fn literal_divisibility(pair: DivisibilityPair) -> bool {
    let n = power_minus_one(pair.q, pair.r);
    let a = n.trailing_zeros().unwrap_or(0);
    let m = (BigUint::one() << a) * BigUint::from(ODD_BOUND);
    m.is_multiple_of(&n)
}

/// The published classification: exponents allowed for each prime.
pub fn expected_table() -> BTreeMap<u64, Vec<u32>> {
    let mut t = BTreeMap::from([(2, vec![2, 3, 4, 6]), (3, vec![2, 4])]);
    for q in [5, 7, 11, 13, 17, 19, 29, 31, 41, 71, 127] {
        t.insert(q, vec![2]);
    }
    t
}

pub fn to_table(pairs: &BTreeSet<DivisibilityPair>) -> BTreeMap<u64, Vec<u32>> {
    let mut t: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in pairs {
        t.entry(p.q).or_default().push(p.r);
    }
    t
}

/// Machine-checked reasons why a finite scan finds every admissible pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessCertificate {
    /// `2·315 + 1`: for odd `q` one of `q ± 1` is twice an odd number that
    /// must divide 315, so `(q, 2)` admissible forces `q ≤ 631`.
    pub bound: u64,
    /// No admissible `(q, 2)` for `bound < q ≤ extended_limit`.
    pub extended_limit: u64,
    pub extended_scan_clear: bool,
    /// `q²−1 | q^r−1` for even `r`, so admissible `(q, r)` with `r` even
    /// forces `(q, 2)` admissible; for odd `r` the odd cofactor
    /// `1 + q + … + q^{r−1} > q²` must divide 315, so `q ≤ 17`. Either way
    /// `q ≤ bound`;
    /// checked over all primes up to the extended limit.
    pub prime_bound_holds: bool,
    /// For odd `q`, `v_2(q^r − 1) ≤ v_2(q² − 1) + v_2(r)`, so the odd part
    /// is at least `(q^r − 1) / (r (q² − 1))`; beyond this exponent that
    /// exceeds 315 for every odd prime `q ≤ bound`. For `q = 2` the number
    /// is odd and `2^r − 1 > 315` once `r ≥ 9`.
    pub exponent_cutoff: u32,
    /// No admissible pair with `r ≥ 3` and `3 < q ≤ 1000`, `r ≤ 20`.
    pub no_large_exponent_for_q_above_3: bool,
    /// No admissible pair with odd `q` and `r ≥ 5`, scanned to the cutoff.
    pub no_odd_q_with_r_at_least_5: bool,
}

impl CompletenessCertificate {
    pub fn holds(&self) -> bool {
        self.extended_scan_clear
            && self.prime_bound_holds
            && self.no_large_exponent_for_q_above_3
            && self.no_odd_q_with_r_at_least_5
            && self.exponent_cutoff <= 20
    }
}

pub fn completeness_bound() -> u64 {
    2 * ODD_BOUND + 1
}

fn two_adic(n: u64) -> u32 {
    n.trailing_zeros()
}

/// Least `r0` with `(q^r − 1) / (r (q² − 1)) > 315` for all `r ≥ r0`.
fn exponent_cutoff_for(q: u64) -> u32 {
    if q == 2 {
        return (1..).find(|&r| (1u64 << r) - 1 > ODD_BOUND).unwrap();
    }
    // the ratio is increasing in r for q ≥ 3
    (2u32..)
        .find(|&r| {
            let lhs = power_minus_one(q, r);
            let rhs = BigUint::from(r) * BigUint::from(q * q - 1) * BigUint::from(ODD_BOUND);
            lhs > rhs
        })
        .unwrap()
}

pub fn completeness_certificate(extended_limit: u64) -> CompletenessCertificate {
    let bound = completeness_bound();
    let primes = primes_up_to(extended_limit.max(bound));
    let extended_scan_clear =
        primes.par_iter().filter(|&&q| q > bound).all(|&q| !is_admissible(q, 2));
    // odd-q 2-part bound: v2(q^2 − 1) + v2(r) dominates v2(q^r − 1)
    let valuation_ok = primes.iter().filter(|&&q| q > 2 && q <= bound).all(|&q| {
        (2..=20u32).all(|r| {
            let v = power_minus_one(q, r).trailing_zeros().unwrap_or(0);
            v <= u64::from(two_adic(q * q - 1) + two_adic(r as u64))
        })
    });
    let exponent_cutoff = primes
        .iter()
        .filter(|&&q| q <= bound)
        .map(|&q| exponent_cutoff_for(q))
        .max()
        .unwrap_or(2);
    let odd_cofactor_ok = primes.iter().filter(|&&q| q > 2).all(|&q| {
        // the odd cofactor for r = 3 is the smallest one over odd r ≥ 3
        let cofactor = q * q + q + 1;
        cofactor % 2 == 1 && (q <= 17 || cofactor > ODD_BOUND)
    });
    let prime_bound_holds = valuation_ok && odd_cofactor_ok;
    let pairs = admissible_pairs(1000, 20);
    let no_large_exponent_for_q_above_3 = pairs.iter().all(|p| p.r < 3 || p.q <= 3);
    let no_odd_q_with_r_at_least_5 = admissible_pairs(bound, exponent_cutoff.max(20))
        .iter()
        .all(|p| p.q == 2 || p.r < 5);
    CompletenessCertificate {
        bound,
        extended_limit,
        extended_scan_clear,
        prime_bound_holds,
        exponent_cutoff,
        no_large_exponent_for_q_above_3,
        no_odd_q_with_r_at_least_5,
    }
}

/// Outcome of comparing a scan with [`expected_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma24Report {
    pub q_max: u64,
    pub r_max: u32,
    pub table: BTreeMap<u64, Vec<u32>>,
    pub expected: BTreeMap<u64, Vec<u32>>,
    pub matches_expected: bool,
    pub literal_divisibility: bool,
    pub certificate: CompletenessCertificate,
}

pub fn run(q_max: u64, r_max: u32) -> Lemma24Report {
    let pairs = admissible_pairs(q_max, r_max);
    let table = to_table(&pairs);
    let expected = expected_table();
    Lemma24Report {
        q_max,
        r_max,
        matches_expected: table == expected,
        literal_divisibility: pairs.iter().all(|&p| literal_divisibility(p)),
        table,
        expected,
        certificate: completeness_certificate(10_000),
    }
}

impl Lemma24Report {
    pub fn passed(&self) -> bool {
        self.matches_expected && self.literal_divisibility && self.certificate.holds()
    }
}

/// `odd_part` for machine integers.
pub fn odd_part_u64(n: u64) -> u64 {
    odd_part(&BigUint::from(n)).to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn odd_parts() {
        assert_eq!(odd_part_u64(1), 1);
        assert_eq!(odd_part_u64(48), 3);
        assert_eq!(odd_part_u64(16128), 63);
        assert_eq!(127u64 * 127 - 1, 16128);
    }

    #[test]
    fn small_primes() {
        let pairs = admissible_pairs(3, 20);
        let t = to_table(&pairs);
        assert_eq!(t[&2], vec![2, 3, 4, 6]);
        assert_eq!(t[&3], vec![2, 4]);
        assert!(!is_admissible(23, 2));
        assert_eq!(odd_part_u64(23 * 23 - 1), 33);
    }

    #[test]
    fn full_scan_matches_expected_table() {
        let pairs = admissible_pairs(1000, 20);
        assert_eq!(pairs.len(), 17);
        assert_eq!(to_table(&pairs), expected_table());
        assert!(pairs.iter().all(|&p| literal_divisibility(p)));
    }

    #[test]
    fn certificate() {
        assert_eq!(completeness_bound(), 631);
        let c = completeness_certificate(10_000);
        assert!(c.holds(), "{c:?}");
        assert!(c.exponent_cutoff <= 20);
    }

    #[test]
    fn brute_force_over_exponent_a() {
        // independent of the odd-part shortcut: search a directly
        for q in [2u64, 3, 5, 7, 11, 13, 23, 127] {
            for r in 2..=6u32 {
                let n = power_minus_one(q, r);
                let found = (0..=64u32).any(|a| {
                    ((BigUint::one() << a) * BigUint::from(315u32)).is_multiple_of(&n)
                });
                assert_eq!(found, is_admissible(q, r), "q={q} r={r}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn monotone_in_bounds(q1 in 2u64..200, dq in 0u64..200, r1 in 2u32..10, dr in 0u32..6) {
            let small = admissible_pairs(q1, r1);
            let large = admissible_pairs(q1 + dq, r1 + dr);
            prop_assert!(small.is_subset(&large));
        }

        #[test]
        fn odd_part_is_odd_divisor(n in 1u64..1_000_000) {
            let o = odd_part_u64(n);
            prop_assert!(o % 2 == 1 && n % o == 0 && (n / o).is_power_of_two());
        }
    }
}
