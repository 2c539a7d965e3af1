//! Claim registry: every structural statement the workbench checks, bound
//! to an executable check and reported as pass, fail or skipped.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::codebook::structure::{
    coset_distances_from_representatives, coset_partition, half_weight_closure,
};
use crate::codebook::{
    build_bch_c13, build_kerdock, build_rm1, build_trace_dual, extend_complement, kernel_contains, puncture,
    shorten, BchCode, Code, Codeword, Sampling, WeightDistribution,
};
use crate::components::{parity_classification_sweep, LinearView, MinDistanceGraph, ParityView, switching_check};
use crate::design::{
    binomial, design_strength, incidence_identity, macwilliams_transform, predicted_design_strength,
};
use crate::error::{Error, Result};
use crate::gf2;
use crate::scheme::{
    extension_relation_check, predicted_kerdock_deltas, restriction_scheme_check, IntersectionTensor, SchemeMode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Effort {
    /// Kerdock at m = 4 and the BCH family at m = 5.
    Quick,
    /// Everything up to the sizes that still run on a desk machine.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// The mathematical statement being checked.
    pub anchor: String,
    pub params: Value,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub runtime_ms: u64,
    pub mode: String,
}

/// The outcome of a registry run, serialized as a JSON array of claims.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report(pub Vec<Claim>);

impl Report {
    pub fn claims(&self) -> &[Claim] {
        &self.0
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.0.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.0.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// The report with every runtime zeroed; identical across runs with the
    /// same effort.
    pub fn without_timings(&self) -> Report {
        Report(
            self.0
                .iter()
                .cloned()
                .map(|mut c| {
                    c.runtime_ms = 0;
                    c
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type KerdockSource = dyn Fn(u32) -> Result<Code> + Sync;
type DualSource = dyn Fn(u32, u32) -> Result<Code> + Sync;

/// Where the registry gets its codes; replaced in tests to inject faults.
pub struct Sources {
    pub kerdock: Box<KerdockSource>,
    pub trace_dual: Box<DualSource>,
}

impl Default for Sources {
    fn default() -> Self {
        Self {
            kerdock: Box::new(build_kerdock),
            trace_dual: Box::new(build_trace_dual),
        }
    }
}

const SWITCHING_SEED: u64 = 0x5157_4954_4348;
const IDENTITY_SEED: u64 = 0x1de7_7177;
const CLOSURE_SEED: u64 = 0x00c1_050e;
const SCHEME_SEED: u64 = 1;
pub const IDENTITY_TRIALS: usize = 1000;
pub const SAMPLED_PAIRS: u64 = 100_000;

fn shared_error(e: &Error) -> Error {
    Error::SelfCheck(e.to_string())
}

struct Outcome {
    pass: bool,
    computed: Value,
    expected: Value,
}

fn compare<T: Serialize + PartialEq>(computed: T, expected: T) -> Outcome {
    Outcome {
        pass: computed == expected,
        computed: json!(computed),
        expected: json!(expected),
    }
}

struct Registry {
    claims: Vec<Claim>,
}

impl Registry {
    fn run(&mut self, id: String, anchor: &str, params: Value, mode: &str, check: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let result = check();
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (status, computed, expected) = match result {
            Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.computed, o.expected),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() }), Value::Null),
        };
        self.claims.push(Claim {
            id,
            anchor: anchor.to_string(),
            params,
            status,
            computed,
            expected,
            runtime_ms,
            mode: mode.to_string(),
        });
    }

    fn skip(&mut self, id: String, anchor: &str, params: Value, reason: &str) {
        self.claims.push(Claim {
            id,
            anchor: anchor.to_string(),
            params,
            status: Status::Skipped(reason.to_string()),
            computed: Value::Null,
            expected: Value::Null,
            runtime_ms: 0,
            mode: "skipped".into(),
        });
    }
}

/// Weight distribution of the Kerdock code of length `n = 4^k`.
pub fn expected_kerdock_distribution(m: u32) -> WeightDistribution {
    let n = 1u64 << m;
    let root = 1u64 << (m / 2);
    WeightDistribution::from_pairs([
        (0, 1),
        (((n - root) / 2) as usize, n * (n - 2) / 2),
        ((n / 2) as usize, 2 * n - 2),
        (((n + root) / 2) as usize, n * (n - 2) / 2),
        (n as usize, 1),
    ])
}

/// Weight distribution of the dual of `C(1,3)` for odd `m`: weights
/// `2^(m-1)` and `2^(m-1) ± 2^((m-1)/2)`.
pub fn expected_bch_dual_distribution(m: u32) -> WeightDistribution {
    assert!(m % 2 == 1 && m >= 3);
    let n = (1u64 << m) - 1;
    let half = 1u64 << (m - 1);
    let s = 1u64 << ((m - 1) / 2);
    let t = 1u64 << ((m - 3) / 2);
    let quarter = 1u64 << (m - 2);
    WeightDistribution::from_pairs([
        (0, 1),
        ((half - s) as usize, n * (quarter + t)),
        (half as usize, n * (half + 1)),
        ((half + s) as usize, n * (quarter - t)),
    ])
}

fn nontrivial_classes(code: &Code) -> Vec<(usize, Vec<Codeword>)> {
    let n = code.n();
    code.weight_distribution()
        .weights()
        .filter(|&w| w != 0 && w != n)
        .map(|w| (w, code.words_of_weight(w)))
        .collect()
}

fn error_outcome(e: &Error) -> Outcome {
    Outcome {
        pass: false,
        computed: json!({ "error": e.to_string() }),
        expected: Value::Null,
    }
}

/// Design claims for every nontrivial weight class of `code`: each class is
/// a t-design with `t` at least `level` and at least `d' - s`, where `d'` is
/// the minimum distance of the dual (or formal dual) and `s` counts the
/// nontrivial weights of `code`. The index at `level` must equal
/// `count * C(j, level) / C(n, level)`.
fn design_outcome(code: &Code, dual_distance: usize, level: usize) -> Result<Outcome> {
    let n = code.n();
    let wd = code.weight_distribution();
    let prediction = predicted_design_strength(&wd, n, dual_distance);
    let mut computed = BTreeMap::new();
    let mut expected = BTreeMap::new();
    let mut pass = true;
    for (w, blocks) in nontrivial_classes(code) {
        let max_t = (level + 1).min(w);
        let r = design_strength(&blocks, max_t)?;
        let count = blocks.len() as u64;
        let lambda = count * binomial(w as u64, level as u64) / binomial(n as u64, level as u64);
        let got = r.lambdas.get(level - 1).copied();
        pass &= r.strength >= level && r.strength as i64 >= prediction && got == Some(lambda);
        computed.insert(w.to_string(), json!({ "strength": r.strength, "lambdas": r.lambdas, "sampled": r.sampled }));
        expected.insert(w.to_string(), json!({ "min_strength": level.max(prediction.max(0) as usize), "lambda": lambda }));
    }
    Ok(Outcome {
        pass,
        computed: json!({ "classes": computed, "predicted_strength": prediction }),
        expected: json!(expected),
    })
}

fn kerdock_claims(reg: &mut Registry, sources: &Sources, m: u32) {
    let code = match (sources.kerdock)(m) {
        Ok(c) => c,
        Err(e) => {
            reg.run(format!("kerdock/build/m={m}"), "Kerdock code construction", json!({ "m": m }), "exhaustive", || {
                Ok(error_outcome(&e))
            });
            return;
        }
    };
    let n = code.n();
    let params = json!({ "family": "kerdock", "m": m, "n": n });
    let exhaustive = m <= 4;
    let d = (n - (1 << (m / 2))) / 2;

    reg.run(
        format!("kerdock/weight-distribution/m={m}"),
        "weights 0, (n - sqrt n)/2, n/2, (n + sqrt n)/2, n occur 1, n(n-2)/2, 2n-2, n(n-2)/2, 1 times",
        params.clone(),
        "exhaustive",
        || Ok(compare(code.weight_distribution(), expected_kerdock_distribution(m))),
    );

    let rm = build_rm1(m);
    reg.run(
        format!("kerdock/rm-cosets/m={m}"),
        "K is a union of n/2 cosets of RM(1, m)",
        params.clone(),
        "exhaustive",
        || {
            let rm = rm.as_ref().map_err(shared_error)?;
            let count = coset_partition(&code, rm).map(|p| p.count());
            Ok(compare(count, Some(n / 2)))
        },
    );
    reg.run(
        format!("kerdock/half-weight-words/m={m}"),
        "the words of weight n/2 together with 0 and 1 are exactly RM(1, m)",
        params.clone(),
        "exhaustive",
        || {
            let rm = rm.as_ref().map_err(shared_error)?;
            let words = code
                .codewords()
                .filter(|w| [0, n / 2, n].contains(&w.weight()));
            let ours = Code::from_words(n, words, crate::codebook::Family::Derived)?;
            Ok(Outcome {
                pass: &ours == rm,
                computed: json!({ "words": ours.len() }),
                expected: json!({ "words": rm.len() }),
            })
        },
    );
    reg.run(
        format!("kerdock/coset-distances/m={m}"),
        "distances between cosets are d or n - d; nonzero distances within a coset are n/2 or n",
        params.clone(),
        "exhaustive",
        || {
            let rm = rm.as_ref().map_err(shared_error)?;
            let partition = coset_partition(&code, rm).ok_or(Error::SelfCheck("not a union of RM cosets".into()))?;
            let got = coset_distances_from_representatives(&code, &partition, rm);
            Ok(compare(
                json!({ "inter": got.inter, "intra": got.intra }),
                json!({ "inter": [d, n - d], "intra": [n / 2, n] }),
            ))
        },
    );
    reg.run(
        format!("kerdock/rm-in-kernel/m={m}"),
        "RM(1, m) is contained in the kernel of K",
        params.clone(),
        "exhaustive",
        || {
            let rm = rm.as_ref().map_err(shared_error)?;
            let mut outside = 0u64;
            for v in rm.codewords() {
                outside += !kernel_contains(&code, &v)? as u64;
            }
            Ok(compare(json!({ "rm_words_outside_kernel": outside }), json!({ "rm_words_outside_kernel": 0 })))
        },
    );
    let sampling = if exhaustive {
        Sampling::Exhaustive
    } else {
        Sampling::Random {
            seed: CLOSURE_SEED,
            pairs: SAMPLED_PAIRS,
        }
    };
    reg.run(
        format!("kerdock/half-weight-closure/m={m}"),
        "if x, y in K and w(x + y) = n/2 then x + y is in K",
        params.clone(),
        if exhaustive { "exhaustive" } else { "sampled" },
        || {
            let r = half_weight_closure(&code, sampling);
            Ok(Outcome {
                pass: r.violations == 0 && r.half_weight_pairs > 0,
                computed: json!(r),
                expected: json!({ "violations": 0 }),
            })
        },
    );
    reg.run(
        format!("kerdock/designs/m={m}"),
        "each nontrivial weight class of K is a 3-design, as forced by the minimum distance of the formal dual and the number of nonzero weights",
        params.clone(),
        "exhaustive",
        || {
            let wd = code.weight_distribution();
            let dual = macwilliams_transform(&wd, n, code.len() as u64)?;
            let dual_d = dual
                .0
                .keys()
                .copied()
                .find(|&w| w > 0)
                .ok_or(Error::SelfCheck("empty formal dual".into()))?;
            design_outcome(&code, dual_d, 3)
        },
    );
    if m == 4 {
        reg.run(
            format!("kerdock/formal-self-duality/m={m}"),
            "the MacWilliams transform fixes the weight distribution of the length-16 Kerdock code",
            params.clone(),
            "exact rational",
            || {
                let wd = code.weight_distribution();
                let dual = macwilliams_transform(&wd, n, code.len() as u64)?.to_integral();
                Ok(compare(dual, Some(wd)))
            },
        );
    }

    // Scheme claims share the two tensors.
    let double_shortened = OnceCell::new();
    let tensors: OnceCell<Result<(IntersectionTensor, IntersectionTensor)>> = OnceCell::new();
    let get_tensors = || {
        tensors
            .get_or_init(|| {
                let kpp = double_shortened.get_or_init(|| shorten(&code, n - 1).and_then(|k| shorten(&k, n - 2)));
                let kpp = kpp.as_ref().map_err(shared_error)?;
                let base = restriction_scheme_check(kpp, SchemeMode::Full)?;
                let ext = extend_complement(kpp)?;
                let ext = restriction_scheme_check(&ext.code, SchemeMode::Full)?;
                Ok((base, ext))
            })
            .as_ref()
            .map_err(shared_error)
    };
    reg.run(
        format!("kerdock/doubly-shortened-scheme/m={m}"),
        "the restriction of the Hamming scheme to the doubly shortened Kerdock code is an association scheme",
        params.clone(),
        "full",
        || {
            let (base, _) = get_tensors()?;
            Ok(Outcome {
                pass: base.consistent,
                computed: json!({
                    "consistent": base.consistent,
                    "words": double_shortened.get().and_then(|c| c.as_ref().ok()).map(Code::len),
                    "relations": base.relations,
                    "pairs_checked": base.pairs_checked,
                    "witness": base.witness,
                }),
                expected: json!({ "consistent": true }),
            })
        },
    );
    reg.run(
        format!("kerdock/extended-intersection-numbers/m={m}"),
        "for K'' extended by complements, delta_{d-2,n/2}^{d-2} = (n^2-6n-2nd+8d)/(4(n-2d)) and delta_{d-2,n/2}^{n-d-2} = (n^2-2nd+2n)/(4(n-2d))",
        params.clone(),
        "full",
        || {
            let (base, ext) = get_tensors()?;
            let (a, b) = predicted_kerdock_deltas(n as u64, d as u64)?;
            let (i, j) = (d - 2, n / 2);
            let got = [ext.get(i, j, d - 2), ext.get(i, j, n - d - 2)];
            let well_defined = ext.relation_consistent(i);
            Ok(Outcome {
                pass: well_defined && got == [a, b],
                computed: json!({
                    "deltas": got,
                    "relation_well_defined": well_defined,
                    "extension_is_scheme": ext.consistent,
                    "inconsistent_relations": ext.inconsistent_relations,
                    "doubly_shortened_route": [base.get(n - d, j, n - d), base.get(n - d, j, d)],
                }),
                expected: json!({ "deltas": [a, b] }),
            })
        },
    );
    reg.run(
        format!("kerdock/extension-identities/m={m}"),
        "intersection numbers of C and C extended by complements agree under i -> n - i on two indices and vanish under an odd number of flips",
        params.clone(),
        "full",
        || {
            let (base, ext) = get_tensors()?;
            match extension_relation_check(base, ext) {
                Ok(r) => Ok(Outcome {
                    pass: r.holds,
                    computed: json!(r),
                    expected: json!({ "holds": true }),
                }),
                Err(e) => Ok(error_outcome(&e)),
            }
        },
    );

    reg.run(
        format!("kerdock/punctured-components/m={m}"),
        "a punctured Kerdock code has two i-components, the words whose weight off coordinate i is even and those where it is odd",
        json!({ "family": "kerdock", "m": m, "punctured": if exhaustive { json!("all") } else { json!(n - 1) } }),
        "exhaustive",
        || {
            let positions: Vec<usize> = if exhaustive { (0..n).collect() } else { vec![n - 1] };
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for p in positions {
                for r in parity_classification_sweep(&code, p)? {
                    checked += 1;
                    if r.classification != Some(true) {
                        failures.push((p, r.coordinate));
                    }
                }
            }
            Ok(Outcome {
                pass: failures.is_empty(),
                computed: json!({ "checked": checked, "failures": failures }),
                expected: json!({ "failures": [] }),
            })
        },
    );
    reg.run(
        format!("kerdock/single-component/m={m}"),
        "the Kerdock code itself is a single i-component for every i",
        params.clone(),
        "exhaustive",
        || {
            let graph = MinDistanceGraph::new(&code)?;
            let counts: Vec<u64> = (0..n).map(|i| graph.components(i).map(|r| r.component_count)).collect::<Result<_>>()?;
            Ok(compare(counts, vec![1; n]))
        },
    );
    if exhaustive {
        reg.run(
            format!("kerdock/switching/m={m}"),
            "switching the half of K with unequal bits at p, q by a pattern-01 RM word gives K with p and q transposed",
            params.clone(),
            "seeded",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(SWITCHING_SEED);
                let mut pairs = vec![(n - 2, n - 1)];
                while pairs.len() < 11 {
                    let p = rng.gen_range(0..n);
                    let q = rng.gen_range(0..n);
                    if p != q {
                        pairs.push((p, q));
                    }
                }
                let mut failures = Vec::new();
                for &(p, q) in &pairs {
                    if !switching_check(&code, p, q)?.holds {
                        failures.push((p, q));
                    }
                }
                Ok(Outcome {
                    pass: failures.is_empty(),
                    computed: json!({ "pairs": pairs, "failures": failures }),
                    expected: json!({ "failures": [] }),
                })
            },
        );
    }
}

fn components_outcome(reports: Vec<crate::ComponentReport>, count: u64, rank: usize) -> Outcome {
    let bad: Vec<usize> = reports
        .iter()
        .filter(|r| r.component_count != count || r.rank != Some(rank))
        .map(|r| r.coordinate)
        .collect();
    let ranks: std::collections::BTreeSet<_> = reports.iter().filter_map(|r| r.rank).collect();
    Outcome {
        pass: bad.is_empty() && !reports.is_empty(),
        computed: json!({ "coordinates": reports.len(), "ranks": ranks, "mismatched": bad }),
        expected: json!({ "component_count": count, "rank": rank }),
    }
}

fn dual_claims(reg: &mut Registry, sources: &Sources, m: u32, effort: Effort) {
    let params = json!({ "family": "bch13-dual", "m": m });
    let dual = (sources.trace_dual)(m, 3);
    let dual = match dual {
        Ok(c) => c,
        Err(e) => {
            reg.run(format!("bch-dual/build/m={m}"), "trace code construction", params, "exhaustive", || {
                Ok(error_outcome(&e))
            });
            return;
        }
    };
    let n = dual.n();
    if m % 2 == 1 {
        reg.run(
            format!("bch-dual/weight-distribution/m={m}"),
            "for odd m the dual of C(1,3) has weights 2^(m-1) and 2^(m-1) ± 2^((m-1)/2) with the standard multiplicities",
            params.clone(),
            "exhaustive",
            || Ok(compare(dual.weight_distribution(), expected_bch_dual_distribution(m))),
        );
    }
    reg.run(
        format!("bch-dual/single-component/m={m}"),
        "the dual of C(1,3) is a single i-component for every i: its minimum-weight words through i span the whole 2m-dimensional code",
        params.clone(),
        "span",
        || {
            let view = LinearView::new(&dual)?;
            let reports = (0..n).map(|i| view.components(i)).collect::<Result<Vec<_>>>()?;
            Ok(components_outcome(reports, 1, 2 * m as usize))
        },
    );
    if m == 5 || (m == 7 && effort == Effort::Full) {
        reg.run(
            format!("bch-dual/min-weight-span/m={m}"),
            "the minimum-weight words of the dual of C(1,3) span the code",
            params.clone(),
            "exhaustive",
            || {
                let d = dual.min_distance().unwrap_or(0);
                let words = dual.words_of_weight(d);
                let rank = gf2::rank(n, words.iter().map(Codeword::limbs));
                Ok(compare(rank, 2 * m as usize))
            },
        );
    }
    if m != 5 {
        return;
    }
    reg.run(
        format!("bch-dual/designs/m={m}"),
        "each nontrivial weight class of the dual of C(1,3) is a 2-design, as forced by distance 5 and three nonzero weights",
        params.clone(),
        "exhaustive",
        || {
            let bch = build_bch_c13(m)?;
            let d = bch
                .code()
                .and_then(Code::min_distance)
                .ok_or(Error::SelfCheck("C(1,3) not enumerated".into()))?;
            design_outcome(&dual, d, 2)
        },
    );
    reg.run(
        format!("bch-dual/scheme-sampled/m={m}"),
        "the restriction of the Hamming scheme to the dual of C(1,3) is an association scheme",
        params.clone(),
        "sampled",
        || {
            let t = restriction_scheme_check(
                &dual,
                SchemeMode::Sampled {
                    seed: SCHEME_SEED,
                    trials: SAMPLED_PAIRS,
                },
            )?;
            Ok(Outcome {
                pass: t.consistent,
                computed: json!({ "consistent": t.consistent, "pairs_checked": t.pairs_checked, "witness": t.witness }),
                expected: json!({ "consistent": true }),
            })
        },
    );
    reg.run(
        format!("bch-dual/graph-cross-check/m={m}"),
        "union-find over the minimum-distance graph agrees with the span method on the dual of C(1,3)",
        params.clone(),
        "exhaustive",
        || {
            let graph = MinDistanceGraph::new(&dual)?;
            let view = LinearView::new(&dual)?;
            let mut mismatched = Vec::new();
            for i in 0..n {
                if graph.components(i)?.component_count != view.components(i)?.component_count {
                    mismatched.push(i);
                }
            }
            Ok(compare(mismatched, Vec::new()))
        },
    );
    reg.run(
        format!("bch-dual/punctured-neighbours/m={m}"),
        "in the dual of C(1,3) punctured once, every word of weight 12 lies at distance 11 from a word of weight 11",
        params.clone(),
        "exhaustive",
        || {
            let p = puncture(&dual, n - 1)?;
            let heavy = p.words_of_weight(12);
            let light = p.words_of_weight(11);
            let lonely = heavy
                .iter()
                .filter(|x| !light.iter().any(|y| x.distance(y) == 11))
                .count();
            Ok(Outcome {
                pass: lonely == 0 && !heavy.is_empty(),
                computed: json!({ "weight_12": heavy.len(), "weight_11": light.len(), "without_neighbour": lonely }),
                expected: json!({ "without_neighbour": 0 }),
            })
        },
    );
    reg.run(
        format!("gold-dual/single-component/m={m}"),
        "the trace code of x and the Gold power x^5 is a single i-component for every i",
        json!({ "family": "gold-dual", "m": m, "e": 5 }),
        "span",
        || {
            let gold = (sources.trace_dual)(m, 5)?;
            let view = LinearView::new(&gold)?;
            let reports = (0..n).map(|i| view.components(i)).collect::<Result<Vec<_>>>()?;
            Ok(components_outcome(reports, 1, 2 * m as usize))
        },
    );
}

fn bch_claims(reg: &mut Registry, m: u32, coordinates: Option<Vec<usize>>) {
    let params = json!({ "family": "bch13", "m": m, "coordinates": coordinates.clone().map_or(json!("all"), |c| json!(c)) });
    let anchor = "C(1,3) has exactly two i-components for every i: the weight-5 words through i span a hyperplane";
    reg.run(format!("bch/two-components/m={m}"), anchor, params, if m == 5 { "span, enumerated" } else { "span, syndrome search" }, || {
        let bch = build_bch_c13(m)?;
        let n = bch.parity().n();
        let coords = coordinates.unwrap_or_else(|| (0..n).collect());
        let (reports, dim) = match &bch {
            BchCode::Enumerated { code, .. } => {
                let view = LinearView::new(code)?;
                (coords.iter().map(|&i| view.components(i)).collect::<Result<Vec<_>>>()?, view.dimension())
            }
            BchCode::Described(parity) => {
                let view = ParityView::new(parity)?;
                (coords.iter().map(|&i| view.components(i)).collect::<Result<Vec<_>>>()?, view.dimension())
            }
        };
        let mut o = components_outcome(reports, 2, dim - 1);
        o.computed["dimension"] = json!(dim);
        Ok(o)
    });
}

fn identity_claim(reg: &mut Registry, sources: &Sources) {
    reg.run(
        "design/incidence-identity".into(),
        "for x of weight i and a 1-design of weight-j blocks with index lambda_1, the sum over blocks of (i + j - d(x, B))/2 equals i lambda_1",
        json!({ "trials": IDENTITY_TRIALS, "seed": IDENTITY_SEED }),
        "seeded",
        || {
            let k4 = (sources.kerdock)(4)?;
            let dual = (sources.trace_dual)(5, 3)?;
            let rm = build_rm1(4)?;
            let mut classes: Vec<(&Code, Vec<Codeword>)> = Vec::new();
            for (_, blocks) in nontrivial_classes(&k4) {
                classes.push((&k4, blocks));
            }
            for (_, blocks) in nontrivial_classes(&dual) {
                classes.push((&dual, blocks));
            }
            classes.push((&k4, rm.words_of_weight(8)));
            let mut rng = ChaCha8Rng::seed_from_u64(IDENTITY_SEED);
            let mut failures = 0u64;
            for _ in 0..IDENTITY_TRIALS {
                let (source, blocks) = classes.choose(&mut rng).expect("classes");
                let x = source.codeword(rng.gen_range(0..source.len()));
                if !incidence_identity(&x, blocks)?.holds {
                    failures += 1;
                }
            }
            Ok(compare(json!({ "trials": IDENTITY_TRIALS, "failures": failures }), json!({ "trials": IDENTITY_TRIALS, "failures": 0 })))
        },
    );
}

/// Runs every claim in scope for `effort` against codes from `sources`.
pub fn verify_with(effort: Effort, sources: &Sources) -> Report {
    let mut reg = Registry { claims: Vec::new() };
    let full = effort == Effort::Full;
    kerdock_claims(&mut reg, sources, 4);
    if full {
        kerdock_claims(&mut reg, sources, 6);
    }
    reg.skip(
        "kerdock/doubly-shortened-scheme/m=8".into(),
        "the restriction of the Hamming scheme to the doubly shortened Kerdock code is an association scheme",
        json!({ "family": "kerdock", "m": 8 }),
        "16384 words exceeds the full-mode cap of 4096; sampled mode cannot establish consistency",
    );
    let dual_ms: &[u32] = if full { &[5, 6, 7, 8, 9, 10] } else { &[5] };
    for &m in dual_ms {
        dual_claims(&mut reg, sources, m, effort);
    }
    bch_claims(&mut reg, 5, None);
    if full {
        bch_claims(&mut reg, 6, None);
        bch_claims(&mut reg, 7, None);
        bch_claims(&mut reg, 8, None);
    } else {
        reg.skip(
            "bch/two-components/m=8".into(),
            "C(1,3) has exactly two i-components for every i: the weight-5 words through i span a hyperplane",
            json!({ "family": "bch13", "m": 8 }),
            "runs with full effort only",
        );
    }
    identity_claim(&mut reg, sources);
    Report(reg.claims)
}

pub fn verify_all(effort: Effort) -> Report {
    verify_with(effort, &Sources::default())
}
