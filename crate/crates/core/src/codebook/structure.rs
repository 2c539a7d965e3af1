//! Structural checks of Kerdock codes: the partition into cosets of
//! RM(1, m), the distance sets between and within cosets, and closure under
//! sums at distance `n/2`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{build_rm1, Code, Sampling};
use crate::bits;
use crate::error::{Error, Result};

/// A partition of a code into cosets of a linear subcode.
#[derive(Debug, Clone, Serialize)]
pub struct CosetPartition {
    /// Coset id of each codeword (by canonical index).
    #[serde(skip)]
    pub coset_of: Vec<u32>,
    /// Index of the first codeword found in each coset.
    pub representatives: Vec<usize>,
}

impl CosetPartition {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Partitions `code` into cosets `x + sub`, or returns `None` when some
/// translate leaves the code (then `code` is not a union of such cosets).
pub fn coset_partition(code: &Code, sub: &Code) -> Option<CosetPartition> {
    const UNSEEN: u32 = u32::MAX;
    let mut coset_of = vec![UNSEEN; code.len()];
    let mut representatives = Vec::new();
    let mut buf = vec![0u64; code.stride()];
    for x in 0..code.len() {
        if coset_of[x] != UNSEEN {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(x);
        for s in sub.words() {
            buf.copy_from_slice(code.word(x));
            bits::xor_into(&mut buf, s);
            let y = code.index_of(&buf)?;
            coset_of[y] = id;
        }
    }
    Some(CosetPartition {
        coset_of,
        representatives,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CosetDistances {
    /// Distances between words of different cosets.
    pub inter: BTreeSet<usize>,
    /// Nonzero distances between words of the same coset.
    pub intra: BTreeSet<usize>,
    pub pairs_checked: u64,
}

fn pair_stream(len: usize, sampling: Sampling) -> Box<dyn Iterator<Item = (usize, usize)>> {
    match sampling {
        Sampling::Exhaustive => Box::new((0..len).flat_map(move |a| (a + 1..len).map(move |b| (a, b)))),
        Sampling::Random { seed, pairs } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pairs = if len < 2 { 0 } else { pairs };
            Box::new((0..pairs).map(move |_| {
                let a = rng.gen_range(0..len);
                let mut b = rng.gen_range(0..len - 1);
                if b >= a {
                    b += 1;
                }
                (a, b)
            }))
        }
    }
}

/// Inter- and intra-coset distances from codeword pairs.
pub fn coset_distances(code: &Code, partition: &CosetPartition, sampling: Sampling) -> CosetDistances {
    let mut out = CosetDistances::default();
    for (a, b) in pair_stream(code.len(), sampling) {
        let d = bits::distance(code.word(a), code.word(b));
        if partition.coset_of[a] == partition.coset_of[b] {
            out.intra.insert(d);
        } else {
            out.inter.insert(d);
        }
        out.pairs_checked += 1;
    }
    out
}

/// Inter- and intra-coset distances from coset representatives: the
/// differences between cosets `a + S` and `b + S` are exactly `a + b + S`.
pub fn coset_distances_from_representatives(code: &Code, partition: &CosetPartition, sub: &Code) -> CosetDistances {
    let reps = &partition.representatives;
    let per_pair = |(i, j): (usize, usize)| {
        let mut diff = code.word(reps[i]).to_vec();
        bits::xor_into(&mut diff, code.word(reps[j]));
        sub.words()
            .map(|s| bits::distance(&diff, s))
            .filter(|&d| i != j || d != 0)
            .collect::<BTreeSet<usize>>()
    };
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (i..reps.len()).map(move |j| (i, j)))
        .collect();
    let sets: Vec<((usize, usize), BTreeSet<usize>)> =
        pairs.par_iter().map(|&p| (p, per_pair(p))).collect();
    let mut out = CosetDistances::default();
    for ((i, j), set) in sets {
        out.pairs_checked += 1;
        if i == j {
            out.intra.extend(set);
        } else {
            out.inter.extend(set);
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub pairs_checked: u64,
    pub half_weight_pairs: u64,
    pub violations: u64,
}

/// For pairs `x, y` with `w(x + y) = n/2`, counts how often `x + y` is not a
/// codeword.
pub fn half_weight_closure(code: &Code, sampling: Sampling) -> ClosureReport {
    let half = code.n() / 2;
    let mut out = ClosureReport::default();
    let mut buf = vec![0u64; code.stride()];
    for (a, b) in pair_stream(code.len(), sampling) {
        out.pairs_checked += 1;
        buf.copy_from_slice(code.word(a));
        bits::xor_into(&mut buf, code.word(b));
        if bits::weight(&buf) == half {
            out.half_weight_pairs += 1;
            if !code.contains(&buf) {
                out.violations += 1;
            }
        }
    }
    out
}

/// Construction-time check of a Kerdock code of length `n = 2^m`.
pub fn kerdock_self_check(code: &Code, m: u32) -> Result<()> {
    let n = 1usize << m;
    let root = 1usize << (m / 2);
    let d = (n - root) / 2;
    let fail = |msg: String| Err(Error::SelfCheck(msg));
    if code.len() != n * n {
        return fail(format!("size {} instead of {}", code.len(), n * n));
    }
    if !code.contains_zero() {
        return fail("zero word missing".into());
    }
    let rm = build_rm1(m)?;
    let Some(partition) = coset_partition(code, &rm) else {
        return fail("not a union of RM(1, m) cosets".into());
    };
    if partition.count() != n / 2 {
        return fail(format!("{} cosets instead of {}", partition.count(), n / 2));
    }
    let half_or_trivial: Vec<u64> = code
        .words()
        .filter(|w| matches!(bits::weight(w), 0) || bits::weight(w) == n / 2 || bits::weight(w) == n)
        .flat_map(|w| w.iter().copied())
        .collect();
    if half_or_trivial != rm.flat() {
        return fail("weight-n/2 words plus 0 and 1 differ from RM(1, m)".into());
    }
    let distances = coset_distances_from_representatives(code, &partition, &rm);
    if !distances.inter.iter().all(|&x| x == d || x == n - d) {
        return fail(format!("inter-coset distances {:?}", distances.inter));
    }
    if !distances.intra.iter().all(|&x| x == n / 2 || x == n) {
        return fail(format!("intra-coset distances {:?}", distances.intra));
    }
    Ok(())
}
