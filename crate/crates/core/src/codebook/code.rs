use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Codeword;
use crate::bits;
use crate::error::{Error, Result};
use crate::gf2::SpanBasis;

/// Where a code came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Rm1 { m: u32 },
    Kerdock { m: u32 },
    Bch13 { m: u32 },
    TraceDual { m: u32, e: u32 },
    Derived,
}

impl Family {
    /// Families that are linear by construction.
    pub fn is_linear(self) -> bool {
        matches!(
            self,
            Family::Rm1 { .. } | Family::Bch13 { .. } | Family::TraceDual { .. }
        )
    }
}

/// Exact weight enumerator: weight -> number of codewords.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightDistribution(pub BTreeMap<usize, u64>);

impl WeightDistribution {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u64)>) -> Self {
        Self(pairs.into_iter().filter(|&(_, c)| c > 0).collect())
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    /// Smallest nonzero weight, the minimum distance of a linear code.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.weights().find(|&w| w > 0)
    }

    /// Number of weights other than `0` and `n`.
    pub fn nontrivial_weight_count(&self, n: usize) -> usize {
        self.weights().filter(|&w| w != 0 && w != n).count()
    }
}

/// `I(C)`: the set of distances realized between codewords.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DistanceSet(pub BTreeSet<usize>);

impl DistanceSet {
    pub fn contains(&self, d: usize) -> bool {
        self.0.contains(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for DistanceSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// An immutable binary code: canonically sorted (as little-endian integers),
/// duplicate-free, stored as a flat array of `stride` limbs per word.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    stride: usize,
    data: Vec<u64>,
    family: Family,
    min_distance: OnceLock<Option<usize>>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data
    }
}

impl Eq for Code {}

/// Cap for pairwise distance enumeration.
pub const PAIRWISE_CAP: usize = 1 << 20;

impl Code {
    /// Canonicalizes `data` (`limbs_for(n)` limbs per word) into a code.
    pub fn from_flat(n: usize, data: Vec<u64>, family: Family) -> Self {
        let stride = bits::limbs_for(n).max(1);
        debug_assert_eq!(data.len() % stride, 0);
        let data = canonicalize(stride, data);
        Self {
            n,
            stride,
            data,
            family,
            min_distance: OnceLock::new(),
        }
    }

    pub fn from_words(n: usize, words: impl IntoIterator<Item = Codeword>, family: Family) -> Result<Self> {
        let stride = bits::limbs_for(n).max(1);
        let mut data = Vec::new();
        for w in words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: w.len(),
                });
            }
            data.extend_from_slice(w.limbs());
            data.resize(data.len().div_ceil(stride) * stride, 0);
        }
        Ok(Self::from_flat(n, data, family))
    }

    /// Builds a code from data already in canonical order. Used by the file
    /// reader, which validates ordering itself.
    pub(crate) fn from_sorted_flat(n: usize, data: Vec<u64>, family: Family) -> Self {
        Self {
            n,
            stride: bits::limbs_for(n).max(1),
            data,
            family,
            min_distance: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.stride
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn flat(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn word(&self, index: usize) -> &[u64] {
        &self.data[index * self.stride..(index + 1) * self.stride]
    }

    pub fn codeword(&self, index: usize) -> Codeword {
        Codeword::from_limbs(self.n, self.word(index).to_vec())
    }

    pub fn words(&self) -> impl ExactSizeIterator<Item = &[u64]> + '_ {
        self.data.chunks_exact(self.stride)
    }

    pub fn codewords(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words()
            .map(move |w| Codeword::from_limbs(self.n, w.to_vec()))
    }

    /// Position of `word` in the canonical order.
    pub fn index_of(&self, word: &[u64]) -> Option<usize> {
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match bits::cmp(self.word(mid), word) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, word: &[u64]) -> bool {
        self.index_of(word).is_some()
    }

    pub fn contains_codeword(&self, word: &Codeword) -> bool {
        word.len() == self.n && self.contains(word.limbs())
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_empty() && self.word(0).iter().all(|&l| l == 0)
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        let counts = self
            .data
            .par_chunks_exact(self.stride)
            .fold(
                || vec![0u64; self.n + 1],
                |mut acc, w| {
                    acc[bits::weight(w)] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; self.n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        WeightDistribution::from_pairs(counts.into_iter().enumerate())
    }

    /// Words of a given weight, in canonical order.
    pub fn words_of_weight(&self, weight: usize) -> Vec<Codeword> {
        self.words()
            .filter(|w| bits::weight(w) == weight)
            .map(|w| Codeword::from_limbs(self.n, w.to_vec()))
            .collect()
    }

    /// Whether the code is a GF(2)-linear subspace: it contains zero and its
    /// size equals `2^rank`.
    pub fn is_linear(&self) -> bool {
        if !self.contains_zero() || !self.len().is_power_of_two() {
            return false;
        }
        let dim = self.len().trailing_zeros() as usize;
        let mut basis = SpanBasis::new(self.n);
        for w in self.words() {
            basis.insert(w);
            if basis.rank() > dim {
                return false;
            }
        }
        basis.rank() == dim
    }

    fn linear_shortcut(&self) -> bool {
        self.family.is_linear() || (self.len() > 4096 && self.is_linear())
    }

    /// Minimum distance (cached); `None` for codes with fewer than two words.
    pub fn min_distance(&self) -> Option<usize> {
        *self.min_distance.get_or_init(|| {
            if self.len() < 2 {
                return None;
            }
            if self.linear_shortcut() {
                return self.weight_distribution().min_nonzero_weight();
            }
            (0..self.len())
                .into_par_iter()
                .map(|a| {
                    let x = self.word(a);
                    (a + 1..self.len())
                        .map(|b| bits::distance(x, self.word(b)))
                        .min()
                        .unwrap_or(usize::MAX)
                })
                .min()
        })
    }

    /// `I(C)`. Linear codes use `{0} U nonzero weights`; other codes enumerate
    /// all pairs, up to [`PAIRWISE_CAP`] words.
    pub fn distance_set(&self) -> Result<DistanceSet> {
        if self.is_empty() {
            return Ok(DistanceSet::default());
        }
        if self.linear_shortcut() {
            return Ok(self.weight_distribution().weights().collect());
        }
        if self.len() > PAIRWISE_CAP {
            return Err(Error::SizeCap {
                operation: "distance_set",
                size: self.len(),
                cap: PAIRWISE_CAP,
            });
        }
        let n = self.n;
        let seen = (0..self.len())
            .into_par_iter()
            .fold(
                || vec![false; n + 1],
                |mut seen, a| {
                    let x = self.word(a);
                    for b in a..self.len() {
                        seen[bits::distance(x, self.word(b))] = true;
                    }
                    seen
                },
            )
            .reduce(
                || vec![false; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                    a
                },
            );
        Ok(seen
            .into_iter()
            .enumerate()
            .filter_map(|(d, s)| s.then_some(d))
            .collect())
    }
}

fn canonicalize(stride: usize, mut data: Vec<u64>) -> Vec<u64> {
    if stride == 1 {
        data.par_sort_unstable();
        data.dedup();
        return data;
    }
    let count = data.len() / stride;
    let mut order: Vec<u32> = (0..count as u32).collect();
    let word = |i: u32| &data[i as usize * stride..(i as usize + 1) * stride];
    order.par_sort_unstable_by(|&a, &b| bits::cmp(word(a), word(b)));
    let mut out = Vec::with_capacity(data.len());
    let mut last: Option<u32> = None;
    for i in order {
        if let Some(prev) = last {
            if word(prev) == word(i) {
                continue;
            }
        }
        out.extend_from_slice(word(i));
        last = Some(i);
    }
    out
}
