//! Whether a code's distance relations, restricted to the code, form an
//! association scheme, and the intersection numbers when they do.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::codebook::Code;
use crate::error::{Error, Result};

/// Largest code checked over all pairs.
pub const FULL_MODE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum SchemeMode {
    Full,
    Sampled { seed: u64, trials: u64 },
}

/// `count` codewords `z` with `d(x, z) = j` and `d(y, z) = k`, for any
/// `x, y` at distance `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Delta {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub count: u64,
}

/// Two pairs at the same distance whose counts disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub distance: usize,
    pub first_pair: (usize, usize),
    pub pair: (usize, usize),
    pub j: usize,
    pub k: usize,
    pub first_count: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTensor {
    pub n: usize,
    /// Distances realised in the code, including 0.
    pub relations: Vec<usize>,
    /// Nonzero intersection numbers sorted by `(i, j, k)`, for the relations
    /// `i` on which every checked pair agreed.
    pub entries: Vec<Delta>,
    /// True when every relation is pair-independent.
    pub consistent: bool,
    /// Relations whose counts depend on the pair.
    pub inconsistent_relations: Vec<usize>,
    /// The first disagreement found.
    pub witness: Option<Witness>,
    pub mode: SchemeMode,
    pub pairs_checked: u64,
}

impl IntersectionTensor {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries
            .binary_search_by(|e| (e.i, e.j, e.k).cmp(&(i, j, k)))
            .map(|p| self.entries[p].count)
            .unwrap_or(0)
    }

    pub fn is_relation(&self, d: usize) -> bool {
        self.relations.binary_search(&d).is_ok()
    }

    /// Whether the numbers `delta_{i,*}^*` are well defined.
    pub fn relation_consistent(&self, i: usize) -> bool {
        self.is_relation(i) && !self.inconsistent_relations.contains(&i)
    }
}

struct Checker {
    relations: Vec<usize>,
    index_of: Vec<u8>,
    reference: Vec<Option<((usize, usize), Vec<u32>)>>,
    broken: Vec<bool>,
    witness: Option<Witness>,
}

impl Checker {
    fn new(n: usize, relations: Vec<usize>) -> Result<Self> {
        if relations.len() > 255 {
            return Err(Error::SizeCap {
                operation: "relation count",
                size: relations.len(),
                cap: 255,
            });
        }
        let mut index_of = vec![u8::MAX; n + 1];
        for (r, &d) in relations.iter().enumerate() {
            index_of[d] = r as u8;
        }
        let r = relations.len();
        Ok(Self {
            relations,
            index_of,
            reference: vec![None; r],
            broken: vec![false; r],
            witness: None,
        })
    }

    fn r(&self) -> usize {
        self.relations.len()
    }

    fn all_broken(&self) -> bool {
        self.broken.iter().all(|&b| b)
    }

    fn mark(&mut self, rel: usize, witness: Witness) {
        self.broken[rel] = true;
        self.witness.get_or_insert(witness);
    }

    /// Compares a pair's count vector against the first one seen at the same
    /// distance.
    fn offer(&mut self, rel: usize, pair: (usize, usize), counts: Vec<u32>) {
        if self.broken[rel] {
            return;
        }
        match &self.reference[rel] {
            None => self.reference[rel] = Some((pair, counts)),
            Some((first, reference)) => {
                if let Some(p) = reference.iter().zip(&counts).position(|(a, b)| a != b) {
                    let r = self.r();
                    let w = Witness {
                        distance: self.relations[rel],
                        first_pair: *first,
                        pair,
                        j: self.relations[p / r],
                        k: self.relations[p % r],
                        first_count: reference[p] as u64,
                        count: counts[p] as u64,
                    };
                    self.mark(rel, w);
                }
            }
        }
    }

    /// Each relation's count matrix must equal its transpose, since the
    /// reversed pair lies in the same relation.
    fn check_transpose(&mut self) {
        let r = self.r();
        for rel in 0..r {
            if self.broken[rel] {
                continue;
            }
            let Some((pair, counts)) = &self.reference[rel] else { continue };
            let asym = (0..r * r).find(|&p| counts[p] != counts[(p % r) * r + p / r]);
            if let Some(p) = asym {
                let (j, k) = (p / r, p % r);
                let w = Witness {
                    distance: self.relations[rel],
                    first_pair: *pair,
                    pair: (pair.1, pair.0),
                    j: self.relations[j],
                    k: self.relations[k],
                    first_count: counts[j * r + k] as u64,
                    count: counts[k * r + j] as u64,
                };
                self.mark(rel, w);
            }
        }
    }

    fn finish(self, n: usize, mode: SchemeMode, pairs_checked: u64) -> IntersectionTensor {
        let r = self.r();
        let mut entries = Vec::new();
        for (ri, slot) in self.reference.iter().enumerate() {
            if self.broken[ri] {
                continue;
            }
            let Some((_, counts)) = slot else { continue };
            for j in 0..r {
                for k in 0..r {
                    let c = counts[j * r + k];
                    if c > 0 {
                        entries.push(Delta {
                            i: self.relations[ri],
                            j: self.relations[j],
                            k: self.relations[k],
                            count: c as u64,
                        });
                    }
                }
            }
        }
        let inconsistent_relations: Vec<usize> = (0..r).filter(|&ri| self.broken[ri]).map(|ri| self.relations[ri]).collect();
        IntersectionTensor {
            n,
            consistent: inconsistent_relations.is_empty(),
            relations: self.relations,
            entries,
            inconsistent_relations,
            witness: self.witness,
            mode,
            pairs_checked,
        }
    }
}

/// Decides whether the distance relations restricted to `code` form an
/// association scheme. `Full` looks at every pair and is exact; `Sampled`
/// only looks for a counterexample among random pairs. Relations found
/// inconsistent are reported, and the remaining ones still get their
/// intersection numbers.
pub fn restriction_scheme_check(code: &Code, mode: SchemeMode) -> Result<IntersectionTensor> {
    if code.is_empty() {
        return Err(Error::InvalidArgument("empty code".into()));
    }
    let relations: Vec<usize> = code.distance_set()?.iter().collect();
    let mut checker = Checker::new(code.n(), relations)?;
    match mode {
        SchemeMode::Full => full(code, checker),
        SchemeMode::Sampled { seed, trials } => {
            let r = checker.r();
            let len = code.len();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut checked = 0;
            for _ in 0..trials {
                if checker.all_broken() {
                    break;
                }
                let x = rng.gen_range(0..len);
                let y = rng.gen_range(0..len);
                let (wx, wy) = (code.word(x), code.word(y));
                let mut counts = vec![0u32; r * r];
                for z in code.words() {
                    let j = checker.index_of[bits::distance(wx, z)] as usize;
                    let k = checker.index_of[bits::distance(wy, z)] as usize;
                    counts[j * r + k] += 1;
                }
                checked += 1;
                let rel = checker.index_of[bits::distance(wx, wy)] as usize;
                checker.offer(rel, (x, y), counts);
            }
            Ok(checker.finish(code.n(), mode, checked))
        }
    }
}

fn full(code: &Code, mut checker: Checker) -> Result<IntersectionTensor> {
    let len = code.len();
    if len > FULL_MODE_CAP {
        return Err(Error::SizeCap {
            operation: "full scheme check",
            size: len,
            cap: FULL_MODE_CAP,
        });
    }
    let r = checker.r();
    let index_of = &checker.index_of;
    let matrix: Vec<u8> = (0..len)
        .into_par_iter()
        .flat_map_iter(|x| {
            let wx = code.word(x);
            code.words().map(move |z| index_of[bits::distance(wx, z)])
        })
        .collect();

    // Per row: the first count vector of each relation, plus the first
    // vector that disagrees with it.
    type RowResult = Vec<(usize, usize, Vec<u32>)>;
    let row = |x: usize| -> RowResult {
        let mx = &matrix[x * len..(x + 1) * len];
        let scaled: Vec<u16> = mx.iter().map(|&v| v as u16 * r as u16).collect();
        let mut out: RowResult = Vec::new();
        let mut first = vec![usize::MAX; r];
        let mut differs = vec![false; r];
        let mut counts = vec![0u32; r * r];
        for y in x..len {
            let rel = mx[y] as usize;
            if differs[rel] {
                continue;
            }
            let my = &matrix[y * len..(y + 1) * len];
            counts.iter_mut().for_each(|c| *c = 0);
            for (s, &v) in scaled.iter().zip(my) {
                counts[*s as usize + v as usize] += 1;
            }
            match first[rel] {
                usize::MAX => {
                    first[rel] = out.len();
                    out.push((y, rel, counts.clone()));
                }
                at if out[at].2 != counts => {
                    differs[rel] = true;
                    out.push((y, rel, counts.clone()));
                }
                _ => {}
            }
        }
        out
    };

    // Rows run in parallel blocks and are merged in order, so the witness
    // does not depend on scheduling.
    let mut pairs = 0u64;
    let block = 64usize.max(rayon::current_num_threads() * 4);
    for start in (0..len).step_by(block) {
        let end = (start + block).min(len);
        let rows: Vec<RowResult> = (start..end).into_par_iter().map(row).collect();
        for (x, results) in (start..end).zip(rows) {
            pairs += (len - x) as u64;
            for (y, rel, counts) in results {
                checker.offer(rel, (x, y), counts);
            }
        }
    }
    checker.check_transpose();
    Ok(checker.finish(code.n(), SchemeMode::Full, pairs))
}

fn isqrt(v: u64) -> u64 {
    let mut s = (v as f64).sqrt() as u64;
    while s * s > v {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= v {
        s += 1;
    }
    s
}

/// Closed-form values of `delta_{d-2, n/2}^{d-2}` and
/// `delta_{d-2, n/2}^{n-d-2}` for the doubly shortened, complement-extended
/// Kerdock code of length `n - 2`, where `n = 4^k` and `d = (n - sqrt n)/2`:
/// `(n^2 - 6n - 2nd + 8d) / (4(n - 2d))` and `(n^2 - 2nd + 2n) / (4(n - 2d))`.
pub fn predicted_kerdock_deltas(n: u64, d: u64) -> Result<(u64, u64)> {
    let bad = || Error::BadKerdockParameters { n, d };
    if n < 16 || !n.is_power_of_two() || n.trailing_zeros() % 2 != 0 {
        return Err(bad());
    }
    let root = isqrt(n);
    if 2 * d != n - root {
        return Err(bad());
    }
    let (ni, di) = (n as i128, d as i128);
    let num_a = ni * ni - 6 * ni - 2 * ni * di + 8 * di;
    let num_b = ni * ni - 2 * ni * di + 2 * ni;
    let (den_a, den_b) = (4 * (ni - 2 * di), 4 * (ni - 2 * di));
    if den_a == 0 || den_b == 0 || num_a % den_a != 0 || num_b % den_b != 0 {
        return Err(Error::NonIntegral { n, d });
    }
    let (a, b) = (num_a / den_a, num_b / den_b);
    if a < 0 || b < 0 {
        return Err(Error::NonIntegral { n, d });
    }
    Ok((a as u64, b as u64))
}

/// Result of comparing a scheme's intersection numbers with those of its
/// complement extension `C ∪ (1 + C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRelation {
    pub holds: bool,
    pub checked: u64,
    pub mismatch: Option<String>,
}

/// With `p(x) = n - x`, checks for all `i, j, k` in the base relations that
/// `delta_{i,j}^k(C)` equals the extension's `delta` at
/// `(p i, p j, k)`, `(p i, j, p k)`, `(i, p j, p k)` and `(i, j, k)`, and
/// that the extension vanishes at `(p i, j, k)`, `(i, p j, k)`,
/// `(i, j, p k)` and `(p i, p j, p k)`. Requires `I(C)` and `n - I(C)` to
/// be disjoint.
pub fn extension_relation_check(base: &IntersectionTensor, ext: &IntersectionTensor) -> Result<ExtensionRelation> {
    if base.n != ext.n {
        return Err(Error::LengthMismatch {
            expected: base.n,
            actual: ext.n,
        });
    }
    let n = base.n;
    let overlap: Vec<usize> = base
        .relations
        .iter()
        .copied()
        .filter(|&d| d <= n && base.is_relation(n - d))
        .collect();
    if !overlap.is_empty() {
        return Err(Error::PreconditionViolation { overlap });
    }
    if !base.consistent || !ext.consistent {
        return Err(Error::NotAScheme);
    }
    compare_extension(base, ext)
}

/// The comparison of [`extension_relation_check`] without the precondition.
pub fn compare_extension(base: &IntersectionTensor, ext: &IntersectionTensor) -> Result<ExtensionRelation> {
    if !base.consistent || !ext.consistent {
        return Err(Error::NotAScheme);
    }
    let n = base.n;
    let p = |x: usize| n - x;
    let mut checked = 0;
    for &i in &base.relations {
        for &j in &base.relations {
            for &k in &base.relations {
                let v = base.get(i, j, k);
                let equal = [(p(i), p(j), k), (p(i), j, p(k)), (i, p(j), p(k)), (i, j, k)];
                let zero = [(p(i), j, k), (i, p(j), k), (i, j, p(k)), (p(i), p(j), p(k))];
                for (a, b, c) in equal {
                    checked += 1;
                    let e = ext.get(a, b, c);
                    if e != v {
                        return Ok(ExtensionRelation {
                            holds: false,
                            checked,
                            mismatch: Some(format!("delta_{i},{j}^{k} = {v} but extension delta_{a},{b}^{c} = {e}")),
                        });
                    }
                }
                for (a, b, c) in zero {
                    checked += 1;
                    let e = ext.get(a, b, c);
                    if e != 0 {
                        return Ok(ExtensionRelation {
                            holds: false,
                            checked,
                            mismatch: Some(format!("extension delta_{a},{b}^{c} = {e}, expected 0")),
                        });
                    }
                }
            }
        }
    }
    Ok(ExtensionRelation {
        holds: true,
        checked,
        mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::{build_rm1, Codeword, Family};

    fn code(words: &[&str]) -> Code {
        let ws: Vec<Codeword> = words.iter().map(|w| w.parse().unwrap()).collect();
        Code::from_words(ws[0].len(), ws, Family::Derived).unwrap()
    }

    #[test]
    fn four_word_counterexample() {
        let c = code(&["0000", "1100", "1010", "0111"]);
        let t = restriction_scheme_check(&c, SchemeMode::Full).unwrap();
        assert!(!t.consistent);
        let w = t.witness.clone().unwrap();
        assert_ne!(w.first_count, w.count);
        assert!(!t.inconsistent_relations.is_empty());
        for e in &t.entries {
            assert!(t.relation_consistent(e.i));
        }
    }

    #[test]
    fn rm_is_a_scheme() {
        let rm = build_rm1(4).unwrap();
        let t = restriction_scheme_check(&rm, SchemeMode::Full).unwrap();
        assert!(t.consistent);
        assert_eq!(t.relations, vec![0, 8, 16]);
        // valency of each relation
        assert_eq!(t.get(0, 8, 8), 30);
        assert_eq!(t.get(0, 16, 16), 1);
        assert_eq!(t.get(16, 8, 8), 30);
        assert_eq!(t.get(8, 8, 8), 28);
        assert_eq!(t.pairs_checked, 32 * 33 / 2);
        let s = restriction_scheme_check(&rm, SchemeMode::Sampled { seed: 1, trials: 200 }).unwrap();
        assert!(s.consistent);
        assert_eq!(s.get(8, 8, 8), 28);
    }

    #[test]
    fn kerdock_predictions() {
        assert_eq!(predicted_kerdock_deltas(16, 6).unwrap(), (1, 6));
        assert_eq!(predicted_kerdock_deltas(64, 28).unwrap(), (11, 20));
        assert!(matches!(predicted_kerdock_deltas(32, 13), Err(Error::BadKerdockParameters { .. })));
        assert!(matches!(predicted_kerdock_deltas(16, 5), Err(Error::BadKerdockParameters { .. })));
        assert!(predicted_kerdock_deltas(256, 120).is_ok());
    }

    #[test]
    fn two_word_code() {
        let t = restriction_scheme_check(&code(&["00000", "11111"]), SchemeMode::Full).unwrap();
        assert!(t.consistent);
        assert_eq!(t.relations, vec![0, 5]);
        assert_eq!(t.get(5, 5, 0), 1);
    }

    #[test]
    fn extension_precondition() {
        let base = restriction_scheme_check(&code(&["000", "110"]), SchemeMode::Full).unwrap();
        let ext = restriction_scheme_check(&code(&["000", "110", "111", "001"]), SchemeMode::Full).unwrap();
        let r = extension_relation_check(&base, &ext).unwrap();
        assert!(r.holds, "{r:?}");

        let base = restriction_scheme_check(&code(&["0000", "1100"]), SchemeMode::Full).unwrap();
        assert!(matches!(
            extension_relation_check(&base, &base),
            Err(Error::PreconditionViolation { overlap }) if overlap == vec![2]
        ));
    }

    #[test]
    fn size_cap() {
        let words: Vec<Codeword> = (0u64..5000).map(|v| Codeword::from_limbs(13, vec![v])).collect();
        let c = Code::from_words(13, words, Family::Derived).unwrap();
        assert!(matches!(
            restriction_scheme_check(&c, SchemeMode::Full),
            Err(Error::SizeCap { .. })
        ));
    }
}
