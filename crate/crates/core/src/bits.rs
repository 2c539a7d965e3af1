//! Operations on bit-packed words: coordinate `i` lives in limb `i / 64`,
//! bit `i % 64`.

use std::cmp::Ordering;

#[inline]
pub fn limbs_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn get(word: &[u64], i: usize) -> bool {
    (word[i >> 6] >> (i & 63)) & 1 == 1
}

#[inline]
pub fn set(word: &mut [u64], i: usize, value: bool) {
    let mask = 1u64 << (i & 63);
    if value {
        word[i >> 6] |= mask;
    } else {
        word[i >> 6] &= !mask;
    }
}

#[inline]
pub fn flip(word: &mut [u64], i: usize) {
    word[i >> 6] ^= 1u64 << (i & 63);
}

#[inline]
pub fn weight(word: &[u64]) -> usize {
    word.iter().map(|l| l.count_ones() as usize).sum()
}

#[inline]
pub fn distance(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones() as usize)
        .sum()
}

#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Numeric order of words read as little-endian integers.
#[inline]
pub fn cmp(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// All-one word of length `n` in `limbs_for(n)` limbs.
pub fn ones(n: usize) -> Vec<u64> {
    let mut w = vec![u64::MAX; limbs_for(n)];
    mask_tail(&mut w, n);
    w
}

/// Clears bits at positions `>= n`.
pub fn mask_tail(word: &mut [u64], n: usize) {
    if n % 64 != 0 {
        if let Some(last) = word.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
}

/// Deletes coordinate `i` from a word of length `n`, shifting higher
/// coordinates down by one. Writes `limbs_for(n - 1)` limbs into `out`.
pub fn delete_coordinate(word: &[u64], n: usize, i: usize, out: &mut [u64]) {
    debug_assert!(i < n);
    let out_len = limbs_for(n - 1);
    for (k, o) in out.iter_mut().enumerate().take(out_len) {
        let lo = word[k];
        let hi = word.get(k + 1).copied().unwrap_or(0);
        // whole limb after the deleted position: shift down by one
        let shifted = (lo >> 1) | (hi << 63);
        let base = k * 64;
        *o = if i >= base + 64 {
            lo
        } else if i < base {
            shifted
        } else {
            let below = i - base;
            let keep = if below == 0 { 0 } else { lo & ((1u64 << below) - 1) };
            keep | (shifted & !((1u64 << below).wrapping_sub(1)))
        };
    }
    mask_tail(&mut out[..out_len], n - 1);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_delete(word: &[u64], n: usize, i: usize) -> Vec<u64> {
        let mut out = vec![0u64; limbs_for(n - 1)];
        let mut j = 0;
        for k in 0..n {
            if k == i {
                continue;
            }
            set(&mut out, j, get(word, k));
            j += 1;
        }
        out
    }

    #[test]
    fn delete_matches_naive() {
        let word = [0xdead_beef_1234_5678u64, 0x0f0f_f0f0_aaaa_5555, 0x3];
        let n = 130;
        for i in 0..n {
            let mut out = vec![0u64; limbs_for(n - 1)];
            delete_coordinate(&word, n, i, &mut out);
            assert_eq!(out, naive_delete(&word, n, i), "coordinate {i}");
        }
    }

    #[test]
    fn ordering_is_numeric() {
        assert_eq!(cmp(&[5, 0], &[1, 1]), Ordering::Less);
        assert_eq!(cmp(&[5, 1], &[1, 1]), Ordering::Greater);
        assert_eq!(cmp(&[7], &[7]), Ordering::Equal);
    }

    #[test]
    fn ones_masks_tail() {
        assert_eq!(ones(3), vec![0b111]);
        assert_eq!(ones(64), vec![u64::MAX]);
        assert_eq!(weight(&ones(100)), 100);
    }
}
