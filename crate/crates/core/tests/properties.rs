use kerdocklab::codebook::{build_kerdock, build_rm1, build_trace_dual};
use kerdocklab::design::{
    binomial, design_strength, incidence_identity, macwilliams_rational, macwilliams_transform, RationalDistribution,
};
use kerdocklab::harness::{verify_with, Effort, Sources, Status};
use kerdocklab::{Code, Codeword, Family, WeightDistribution};
use num::{BigInt, BigRational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn span(n: usize, gens: &[u64]) -> Code {
    let words = (0..1u64 << gens.len()).map(|mask| {
        let w = (0..gens.len()).filter(|b| mask >> b & 1 == 1).fold(0, |acc, b| acc ^ gens[b]);
        Codeword::from_limbs(n, vec![w])
    });
    Code::from_words(n, words, Family::Derived).unwrap()
}

fn twice(wd: &WeightDistribution, n: usize, size: u64) -> RationalDistribution {
    let once = macwilliams_transform(wd, n, size).unwrap();
    let expected_size = BigRational::new(BigInt::from(1u64) << n, BigInt::from(size));
    assert_eq!(once.total(), expected_size);
    macwilliams_rational(&once, n)
}

proptest! {
    #[test]
    fn macwilliams_is_an_involution(n in 2usize..16, gens in prop::collection::vec(1u64..u64::MAX, 1..6)) {
        let gens: Vec<u64> = gens.iter().map(|g| g & ((1 << n) - 1)).collect();
        let code = span(n, &gens);
        let wd = code.weight_distribution();
        prop_assert_eq!(twice(&wd, n, code.len() as u64), RationalDistribution::from_integral(&wd));
        // the transform of a linear code is the dual's distribution, so integral
        prop_assert!(macwilliams_transform(&wd, n, code.len() as u64).unwrap().to_integral().is_some());
    }

    #[test]
    fn reported_lambdas_are_consistent(m in 3u32..=5) {
        let rm = build_rm1(m).unwrap();
        let n = rm.n();
        let blocks = rm.words_of_weight(n / 2);
        let r = design_strength(&blocks, 3).unwrap();
        prop_assert_eq!(r.strength, 3);
        for t in 1..=r.strength {
            let lhs = r.lambdas[t - 1] * binomial(n as u64, t as u64);
            prop_assert_eq!(lhs, r.block_count * binomial((n / 2) as u64, t as u64));
            if t > 1 {
                prop_assert_eq!(r.lambdas[t - 2] * (n / 2 - t + 1) as u64, r.lambdas[t - 1] * (n - t + 1) as u64);
            }
        }
    }
}

#[test]
fn macwilliams_involution_on_nonlinear_codes() {
    let k = build_kerdock(6).unwrap();
    let wd = k.weight_distribution();
    assert_eq!(twice(&wd, 64, k.len() as u64), RationalDistribution::from_integral(&wd));
}

#[test]
fn incidence_identity_on_seeded_instances() {
    let codes = [build_kerdock(4).unwrap(), build_trace_dual(5, 3).unwrap(), build_kerdock(6).unwrap()];
    let classes: Vec<(usize, Vec<Codeword>)> = codes
        .iter()
        .enumerate()
        .flat_map(|(c, code)| {
            let n = code.n();
            code.weight_distribution()
                .weights()
                .filter(move |&w| w != 0 && w != n)
                .map(move |w| (c, code.words_of_weight(w)))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut trials = 0;
    while trials < 1200 {
        let (c, blocks) = &classes[rng.gen_range(0..classes.len())];
        let code = &codes[*c];
        // both codewords and arbitrary words
        let x = if rng.gen_bool(0.5) {
            code.codeword(rng.gen_range(0..code.len()))
        } else {
            let mut x = Codeword::zeros(code.n());
            for i in 0..code.n() {
                x.set(i, rng.gen_bool(0.5));
            }
            x
        };
        let r = incidence_identity(&x, blocks).unwrap();
        assert!(r.holds, "residual {}", r.residual);
        assert_eq!(r.distance_counts.values().sum::<u64>(), blocks.len() as u64);
        trials += 1;
    }
}

#[test]
fn zero_word_identity() {
    let rm = build_rm1(4).unwrap();
    let blocks = rm.words_of_weight(8);
    let r = incidence_identity(&Codeword::zeros(16), &blocks).unwrap();
    assert!(r.holds);
    assert_eq!(r.lambda1, 15);
    assert_eq!(r.distance_counts.keys().copied().collect::<Vec<_>>(), vec![8]);
}

#[test]
fn quick_report_is_deterministic() {
    let a = verify_with(Effort::Quick, &Sources::default());
    let b = verify_with(Effort::Quick, &Sources::default());
    assert_eq!(
        serde_json::to_string(&a.without_timings()).unwrap(),
        serde_json::to_string(&b.without_timings()).unwrap()
    );
    let mut ids: Vec<&str> = a.claims().iter().map(|c| c.id.as_str()).collect();
    let total = ids.len();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), total, "claim ids are unique");
    assert!(a.claims().iter().all(|c| !c.anchor.is_empty()));
}

#[test]
fn corrupted_code_fails_weight_claim() {
    let sources = Sources {
        kerdock: Box::new(|m| {
            let k = build_kerdock(m)?;
            let mut words: Vec<Codeword> = k.codewords().collect();
            let bit = words[17].get(3);
            words[17].set(3, !bit);
            Code::from_words(k.n(), words, Family::Derived)
        }),
        ..Sources::default()
    };
    let report = verify_with(Effort::Quick, &sources);
    let claim = report.get("kerdock/weight-distribution/m=4").unwrap();
    assert_eq!(claim.status, Status::Fail);
    assert_ne!(claim.computed, claim.expected);
    assert_eq!(report.get("bch-dual/weight-distribution/m=5").unwrap().status, Status::Pass);
}
