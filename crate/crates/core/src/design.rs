//! t-designs formed by fixed-weight codewords, the incidence identity for
//! 1-designs, design strength predicted from the dual weight count, and the
//! MacWilliams transform.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::codebook::{Codeword, WeightDistribution};
use crate::error::{Error, Result};

/// Above this many t-subsets the design check samples instead of enumerating.
pub const EXHAUSTIVE_SUBSET_CAP: u64 = 100_000_000;
pub const SAMPLED_SUBSETS: u64 = 1_000_000;
const SAMPLE_SEED: u64 = 0x006b_6572_646f_636b;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub n: usize,
    pub block_weight: usize,
    pub block_count: u64,
    /// Largest verified `t` (at most the requested maximum).
    pub strength: usize,
    /// `lambdas[t - 1]` is the number of blocks through any t-set.
    pub lambdas: Vec<u64>,
    /// Set when some level was checked on random t-sets only.
    pub sampled: bool,
    /// Weights of the dual code other than 0 and n, when known.
    pub nontrivial_weight_count: Option<usize>,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Colex rank of a strictly increasing subset.
fn colex_rank(subset: &[usize], table: &[Vec<u64>]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| table[c][i + 1] as usize)
        .sum()
}

fn for_each_subset(support: &[usize], t: usize, f: &mut impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..t).collect();
    let mut chosen = vec![0; t];
    let j = support.len();
    if t > j {
        return;
    }
    loop {
        for (c, &i) in chosen.iter_mut().zip(&idx) {
            *c = support[i];
        }
        f(&chosen);
        let mut pos = t;
        while pos > 0 && idx[pos - 1] == pos - 1 + j - t {
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        pos -= 1;
        idx[pos] += 1;
        for q in pos + 1..t {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn block_weight(blocks: &[Codeword]) -> Result<usize> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::InvalidArgument("no blocks".into()))?;
    let j = first.weight();
    let n = first.len();
    for b in blocks {
        if b.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: b.len(),
            });
        }
        if b.weight() != j {
            return Err(Error::MixedWeights {
                first: j,
                other: b.weight(),
            });
        }
    }
    Ok(j)
}

/// Counts of blocks through each t-subset, or `None` if they differ.
fn uniform_level(blocks: &[Codeword], n: usize, t: usize) -> Option<u64> {
    let table: Vec<Vec<u64>> = (0..=n)
        .map(|a| (0..=t).map(|b| binomial(a as u64, b as u64)).collect())
        .collect();
    let mut counts = vec![0u32; binomial(n as u64, t as u64) as usize];
    for b in blocks {
        let support = b.support();
        for_each_subset(&support, t, &mut |s| counts[colex_rank(s, &table)] += 1);
    }
    let first = counts[0];
    counts.iter().all(|&c| c == first).then_some(first as u64)
}

fn sampled_level(blocks: &[Codeword], n: usize, t: usize, rng: &mut ChaCha8Rng) -> Option<u64> {
    let mut first = None;
    let mut mask = vec![0u64; bits::limbs_for(n)];
    for _ in 0..SAMPLED_SUBSETS {
        mask.iter_mut().for_each(|l| *l = 0);
        let mut picked = 0;
        while picked < t {
            let c = rng.gen_range(0..n);
            if !bits::get(&mask, c) {
                bits::set(&mut mask, c, true);
                picked += 1;
            }
        }
        let count = blocks
            .iter()
            .filter(|b| b.limbs().iter().zip(&mask).all(|(w, m)| w & m == *m))
            .count() as u64;
        match first {
            None => first = Some(count),
            Some(f) if f != count => return None,
            _ => {}
        }
    }
    first
}

/// Largest `t <= max_t` for which the blocks form a t-design, with the
/// index at every level up to it.
pub fn design_strength(blocks: &[Codeword], max_t: usize) -> Result<DesignReport> {
    let j = block_weight(blocks)?;
    let n = blocks[0].len();
    if max_t > j {
        return Err(Error::InvalidArgument(format!(
            "max_t = {max_t} exceeds block weight {j}"
        )));
    }
    let mut report = DesignReport {
        n,
        block_weight: j,
        block_count: blocks.len() as u64,
        strength: 0,
        lambdas: Vec::new(),
        sampled: false,
        nontrivial_weight_count: None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for t in 1..=max_t {
        let level = if binomial(n as u64, t as u64) <= EXHAUSTIVE_SUBSET_CAP {
            uniform_level(blocks, n, t)
        } else {
            report.sampled = true;
            sampled_level(blocks, n, t, &mut rng)
        };
        match level {
            Some(lambda) => {
                report.strength = t;
                report.lambdas.push(lambda);
            }
            None => break,
        }
    }
    Ok(report)
}

/// Outcome of the double-counting identity
/// `sum_k delta_k (i + j - k) / 2 = i * lambda_1` for a word of weight `i`
/// against a 1-design of block weight `j`, where `delta_k` counts blocks at
/// distance `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceIdentity {
    pub holds: bool,
    /// Left side minus right side.
    pub residual: i64,
    pub lambda1: u64,
    pub distance_counts: BTreeMap<usize, u64>,
}

pub fn incidence_identity(x: &Codeword, blocks: &[Codeword]) -> Result<IncidenceIdentity> {
    let design = design_strength(blocks, 1)?;
    if design.strength < 1 {
        return Err(Error::NotOneDesign);
    }
    if x.len() != design.n {
        return Err(Error::LengthMismatch {
            expected: design.n,
            actual: x.len(),
        });
    }
    let lambda1 = design.lambdas[0];
    let (i, j) = (x.weight() as i64, design.block_weight as i64);
    let mut distance_counts = BTreeMap::new();
    for b in blocks {
        *distance_counts.entry(x.distance(b)).or_insert(0u64) += 1;
    }
    let lhs: i64 = distance_counts
        .iter()
        .map(|(&k, &count)| count as i64 * (i + j - k as i64) / 2)
        .sum();
    let residual = lhs - i * lambda1 as i64;
    Ok(IncidenceIdentity {
        holds: residual == 0,
        residual,
        lambda1,
        distance_counts,
    })
}

/// `d - s`, where `s` counts the weights of `dual` other than `0` and `n`:
/// the design strength guaranteed for each fixed-weight class of the dual
/// code of a code with minimum distance `d`.
pub fn predicted_design_strength(dual: &WeightDistribution, n: usize, primal_distance: usize) -> i64 {
    primal_distance as i64 - dual.nontrivial_weight_count(n) as i64
}

/// A weight distribution with rational entries (the formal dual of a
/// nonlinear code need not be integral).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalDistribution(pub BTreeMap<usize, BigRational>);

impl RationalDistribution {
    pub fn from_integral(wd: &WeightDistribution) -> Self {
        Self(
            wd.0.iter()
                .map(|(&w, &c)| (w, BigRational::from_integer(BigInt::from(c))))
                .collect(),
        )
    }

    pub fn total(&self) -> BigRational {
        self.0.values().fold(BigRational::zero(), |acc, v| acc + v)
    }

    /// The distribution as exact integer counts, if every entry is a
    /// nonnegative integer.
    pub fn to_integral(&self) -> Option<WeightDistribution> {
        let mut out = BTreeMap::new();
        for (&w, v) in &self.0 {
            if !v.is_integer() || v.is_negative() {
                return None;
            }
            let c = v.to_integer().to_u64()?;
            if c > 0 {
                out.insert(w, c);
            }
        }
        Some(WeightDistribution(out))
    }
}

/// Binary Krawtchouk values `K_k(i; n)` for `k = 0..=n`, from the
/// three-term recurrence
/// `(k+1) K_{k+1} = (n - 2i) K_k - (n - k + 1) K_{k-1}`.
pub fn krawtchouk_row(i: usize, n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    if n == 0 {
        return row;
    }
    let a = BigInt::from(n as i64 - 2 * i as i64);
    row.push(a.clone());
    for k in 1..n {
        let next = (&a * &row[k] - BigInt::from((n - k + 1) as i64) * &row[k - 1]) / BigInt::from((k + 1) as i64);
        row.push(next);
    }
    row
}

/// `W'_k = (1 / sum W) * sum_i W_i K_k(i; n)`.
pub fn macwilliams_rational(wd: &RationalDistribution, n: usize) -> RationalDistribution {
    let size = wd.total();
    let mut acc = vec![BigRational::zero(); n + 1];
    for (&i, count) in &wd.0 {
        for (k, kr) in krawtchouk_row(i, n).into_iter().enumerate() {
            acc[k] += count * BigRational::from_integer(kr);
        }
    }
    RationalDistribution(
        acc.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v / &size))
            .collect(),
    )
}

/// MacWilliams transform of the weight distribution of a code of length `n`
/// and the given size.
pub fn macwilliams_transform(wd: &WeightDistribution, n: usize, size: u64) -> Result<RationalDistribution> {
    let sum = wd.total();
    if sum != size {
        return Err(Error::InconsistentSize { sum, size });
    }
    if let Some(w) = wd.weights().find(|&w| w > n) {
        return Err(Error::InvalidArgument(format!("weight {w} exceeds length {n}")));
    }
    Ok(macwilliams_rational(&RationalDistribution::from_integral(wd), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_binomial(n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
    }

    /// Krawtchouk values from the defining alternating sum.
    fn krawtchouk_direct(k: usize, i: usize, n: usize) -> BigInt {
        (0..=k)
            .map(|l| {
                let term = big_binomial(i, l) * big_binomial(n - i, k - l);
                if l % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn krawtchouk_recurrence_matches_definition() {
        for n in [1, 2, 7, 16, 31] {
            for i in 0..=n {
                let row = krawtchouk_row(i, n);
                for (k, v) in row.iter().enumerate() {
                    assert_eq!(*v, krawtchouk_direct(k, i, n), "K_{k}({i}; {n})");
                }
            }
        }
    }

    #[test]
    fn subsets_enumeration_count() {
        let support: Vec<usize> = (0..7).collect();
        for t in 0..=7 {
            let mut count = 0;
            for_each_subset(&support, t, &mut |_| count += 1);
            assert_eq!(count, binomial(7, t as u64), "t = {t}");
        }
    }

    #[test]
    fn complete_design() {
        let n = 7;
        let blocks: Vec<Codeword> = (0u64..1 << n)
            .filter(|w| w.count_ones() == 3)
            .map(|w| Codeword::from_limbs(n, vec![w]))
            .collect();
        let r = design_strength(&blocks, 3).unwrap();
        assert_eq!(r.strength, 3);
        assert_eq!(r.lambdas, vec![15, 5, 1]);
    }

    #[test]
    fn design_errors() {
        let a: Codeword = "1100".parse().unwrap();
        let b: Codeword = "1110".parse().unwrap();
        assert!(matches!(design_strength(&[a.clone(), b], 1), Err(Error::MixedWeights { .. })));
        assert!(design_strength(&[a.clone()], 3).is_err());
        // a single block is not a 1-design
        let x: Codeword = "1000".parse().unwrap();
        assert!(matches!(incidence_identity(&x, &[a]), Err(Error::NotOneDesign)));
    }

    #[test]
    fn prediction_examples() {
        let single = WeightDistribution::from_pairs([(0, 1), (4, 7)]);
        assert_eq!(predicted_design_strength(&single, 8, 3), 2);
    }

    #[test]
    fn full_space_and_repetition_duals() {
        let n = 6;
        let full = WeightDistribution::from_pairs((0..=n).map(|k| (k, binomial(n as u64, k as u64))));
        let dual = macwilliams_transform(&full, n, 64).unwrap().to_integral().unwrap();
        assert_eq!(dual, WeightDistribution::from_pairs([(0, 1)]));

        let rep = WeightDistribution::from_pairs([(0, 1), (n, 1)]);
        let dual = macwilliams_transform(&rep, n, 2).unwrap().to_integral().unwrap();
        let even = WeightDistribution::from_pairs(
            (0..=n).filter(|k| k % 2 == 0).map(|k| (k, binomial(n as u64, k as u64))),
        );
        assert_eq!(dual, even);
        assert!(matches!(
            macwilliams_transform(&rep, n, 3),
            Err(Error::InconsistentSize { sum: 2, size: 3 })
        ));
    }
}
