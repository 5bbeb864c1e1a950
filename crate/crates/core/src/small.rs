//! Baker's criterion for closed essential surfaces in the exterior of the
//! knot `[b1, ..., bk]` on the trefoil fiber.
//!
//! When `|b1| >= 3` and `|bi| >= 2` for `i >= 2`, closed essential surfaces
//! correspond to pairs of index sets `I, J ⊆ {1..k}` with
//!
//! 1. `1 ∉ I ∩ J`,
//! 2. no two consecutive indices in `I`, nor in `J`,
//! 3. `Σ_J b - Σ_I b = 0` if `1 ∈ I`, and `Σ_J b - (Σ_I b + 1) = 0` otherwise.
//!
//! The knot is small exactly when no such pair exists.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::arith::ContinuedFraction;
use crate::error::{Error, Result};

/// Coefficients meeting the criterion's bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallnessProblem {
    coefficients: Vec<BigInt>,
}

impl SmallnessProblem {
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        for (i, b) in coefficients.iter().enumerate() {
            let bound = if i == 0 { 3 } else { 2 };
            if b.abs() < BigInt::from(bound) {
                return Err(Error::CriterionInapplicable { index: i + 1, value: b.to_string() });
            }
        }
        Ok(Self { coefficients })
    }

    pub fn from_ints<I, T>(coefficients: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(coefficients.into_iter().map(Into::into).collect())
    }

    pub fn from_cf(cf: &ContinuedFraction) -> Result<Self> {
        Self::new(cf.coefficients().to_vec())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    fn sum(&self, indices: &[usize]) -> BigInt {
        indices.iter().map(|&i| &self.coefficients[i - 1]).sum()
    }
}

/// Which sum equation applies, selected by whether `1 ∈ I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumCondition {
    /// `Σ_J b - Σ_I b`
    OneInI,
    /// `Σ_J b - (Σ_I b + 1)`
    OneNotInI,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceWitness {
    /// 1-based, ascending.
    pub i: Vec<usize>,
    /// 1-based, ascending.
    pub j: Vec<usize>,
    pub condition: SumCondition,
    pub sum_value: BigInt,
}

fn has_consecutive(indices: &[usize]) -> bool {
    indices.windows(2).any(|w| w[1] == w[0] + 1)
}

fn is_ascending_in_range(indices: &[usize], k: usize) -> bool {
    indices.windows(2).all(|w| w[0] < w[1]) && indices.iter().all(|&i| (1..=k).contains(&i))
}

/// The criterion's sum for `(I, J)`, together with the condition used.
pub fn criterion_sum(p: &SmallnessProblem, i: &[usize], j: &[usize]) -> (SumCondition, BigInt) {
    if i.contains(&1) {
        (SumCondition::OneInI, p.sum(j) - p.sum(i))
    } else {
        (SumCondition::OneNotInI, p.sum(j) - (p.sum(i) + 1))
    }
}

impl SurfaceWitness {
    /// Re-checks every condition of the criterion against `p`.
    pub fn is_valid_for(&self, p: &SmallnessProblem) -> bool {
        let k = p.len();
        if !is_ascending_in_range(&self.i, k) || !is_ascending_in_range(&self.j, k) {
            return false;
        }
        if self.i.contains(&1) && self.j.contains(&1) {
            return false;
        }
        if has_consecutive(&self.i) || has_consecutive(&self.j) {
            return false;
        }
        let (condition, sum) = criterion_sum(p, &self.i, &self.j);
        condition == self.condition && sum.is_zero() && self.sum_value.is_zero()
    }
}

/// All subsets of `{1..k}` without consecutive indices, as ascending index
/// lists in lexicographic order (the empty set first).
pub fn non_consecutive_subsets(k: usize) -> Vec<Vec<usize>> {
    fn walk(next: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for i in next..=k {
            current.push(i);
            walk(i + 2, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    walk(1, k, &mut Vec::new(), &mut out);
    out
}

/// Every witness `(I, J)`, ordered lexicographically by `(I, J)`.
pub fn enumerate_witnesses(p: &SmallnessProblem) -> Vec<SurfaceWitness> {
    let subsets = non_consecutive_subsets(p.len());
    let sums: Vec<BigInt> = subsets.iter().map(|s| p.sum(s)).collect();

    // J candidates bucketed by their sum; buckets stay in lexicographic order
    let mut by_sum: HashMap<&BigInt, Vec<usize>> = HashMap::new();
    for (idx, sum) in sums.iter().enumerate() {
        by_sum.entry(sum).or_default().push(idx);
    }

    let mut witnesses = Vec::new();
    for (ii, i) in subsets.iter().enumerate() {
        let one_in_i = i.first() == Some(&1);
        let (condition, target) = if one_in_i {
            (SumCondition::OneInI, sums[ii].clone())
        } else {
            (SumCondition::OneNotInI, &sums[ii] + 1)
        };
        let Some(bucket) = by_sum.get(&target) else {
            continue;
        };
        for &jj in bucket {
            let j = &subsets[jj];
            if one_in_i && j.first() == Some(&1) {
                continue;
            }
            witnesses.push(SurfaceWitness {
                i: i.clone(),
                j: j.clone(),
                condition,
                sum_value: BigInt::zero(),
            });
        }
    }
    witnesses
}

pub fn is_small(p: &SmallnessProblem) -> bool {
    enumerate_witnesses(p).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanEntry {
    Verdict { small: bool, witnesses: Vec<SurfaceWitness> },
    Inapplicable { reason: String },
}

impl ScanEntry {
    pub fn is_not_small(&self) -> bool {
        matches!(self, ScanEntry::Verdict { small: false, .. })
    }
}

/// Smallness of `[r, -s, n]` for every `n` in `n_range`, keyed by `n`.
///
/// Values of `n` with `|n| < 2` are recorded as inapplicable rather than
/// failing the scan.
pub fn family_smallness_scan(r: i64, s: i64, n_range: RangeInclusive<i64>) -> Result<BTreeMap<i64, ScanEntry>> {
    if r < 3 || s < 2 {
        return Err(crate::error::precondition(format!("scan needs r >= 3, s >= 2, got ({r}, {s})")));
    }
    Ok(n_range
        .into_par_iter()
        .map(|n| {
            let entry = match SmallnessProblem::from_ints([r, -s, n]) {
                Ok(p) => {
                    let witnesses = enumerate_witnesses(&p);
                    ScanEntry::Verdict { small: witnesses.is_empty(), witnesses }
                }
                Err(e) => ScanEntry::Inapplicable { reason: e.to_string() },
            };
            (n, entry)
        })
        .collect())
}

/// Compares a scan with the expected pattern: for `n >= 2`, `[r, -s, n]`
/// fails to be small exactly when `n ∈ {r - 1, r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub not_small: Vec<i64>,
    pub expected_not_small: Vec<i64>,
    pub matches_pattern: bool,
}

pub fn summarize_scan(r: i64, scan: &BTreeMap<i64, ScanEntry>) -> ScanSummary {
    let not_small: Vec<i64> = scan
        .iter()
        .filter(|(&n, e)| n >= 2 && e.is_not_small())
        .map(|(&n, _)| n)
        .collect();
    let expected_not_small: Vec<i64> =
        [r - 1, r].into_iter().filter(|n| *n >= 2 && scan.contains_key(n)).collect();
    let matches_pattern = not_small == expected_not_small;
    ScanSummary { not_small, expected_not_small, matches_pattern }
}
