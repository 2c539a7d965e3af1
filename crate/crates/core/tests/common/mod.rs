//! Oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use kerdocklab::{Code, Codeword, Family};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Connected components by BFS over the explicit edge definition.
pub fn bfs_components(words: &[u64], i: usize) -> usize {
    let dist = |a: u64, b: u64| (a ^ b).count_ones();
    let d = words
        .iter()
        .enumerate()
        .flat_map(|(x, &a)| words[x + 1..].iter().map(move |&b| dist(a, b)))
        .min();
    let Some(d) = d else { return words.len() };
    let mut seen = vec![false; words.len()];
    let mut count = 0;
    for start in 0..words.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in 0..words.len() {
                let flips = (words[x] ^ words[y]) >> i & 1 == 1;
                if !seen[y] && flips && dist(words[x], words[y]) == d {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    count
}

pub fn random_linear(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Code {
    let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(1..1u64 << n)).collect();
    let words = (0..1u64 << k).map(|mask| {
        let w = (0..k).filter(|b| mask >> b & 1 == 1).fold(0, |acc, b| acc ^ gens[b]);
        Codeword::from_limbs(n, vec![w])
    });
    Code::from_words(n, words, Family::Derived).unwrap()
}

