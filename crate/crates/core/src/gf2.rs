//! Linear algebra over GF(2) on bit-packed rows.

use crate::bits;

/// Incrementally built basis of a GF(2) row space. Every stored row has a
/// distinct pivot (its lowest set coordinate) and is zero at the pivots of
/// the rows inserted before it.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    /// `pivot_row[c]` is the row whose pivot is coordinate `c`.
    pivot_row: Vec<Option<u32>>,
}

impl SpanBasis {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the
    /// span.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        r
    }

    fn reduce_in_place(&self, r: &mut [u64]) {
        // a row only has bits at or above its pivot, so one ascending pass
        // clears every pivot position
        let mut cursor = 0;
        while let Some(c) = next_set(r, cursor) {
            if let Some(row) = self.pivot_row[c] {
                bits::xor_into(r, &self.rows[row as usize]);
            }
            cursor = c + 1;
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&l| l == 0)
    }

    /// Adds `v`; returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut r = v.to_vec();
        self.reduce_in_place(&mut r);
        let Some(pivot) = first_set(&r) else {
            return false;
        };
        self.pivot_row[pivot] = Some(self.rows.len() as u32);
        self.pivots.push(pivot);
        self.rows.push(r);
        true
    }
}

fn next_set(v: &[u64], from: usize) -> Option<usize> {
    let mut k = from >> 6;
    if k >= v.len() {
        return None;
    }
    let mut limb = v[k] & (u64::MAX << (from & 63));
    loop {
        if limb != 0 {
            return Some(k * 64 + limb.trailing_zeros() as usize);
        }
        k += 1;
        if k == v.len() {
            return None;
        }
        limb = v[k];
    }
}

fn first_set(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &l)| l != 0)
        .map(|(k, l)| k * 64 + l.trailing_zeros() as usize)
}

/// Rank of a set of rows of length `n`.
pub fn rank<'a>(n: usize, rows: impl IntoIterator<Item = &'a [u64]>) -> usize {
    let mut basis = SpanBasis::new(n);
    for r in rows {
        basis.insert(r);
        if basis.rank() == n {
            break;
        }
    }
    basis.rank()
}

/// Rank of vectors of at most 64 bits.
pub fn rank_u64(vectors: impl IntoIterator<Item = u64>, max_rank: usize) -> usize {
    let mut by_pivot = [0u64; 64];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let p = 63 - v.leading_zeros() as usize;
            if by_pivot[p] == 0 {
                by_pivot[p] = v;
                rank += 1;
                break;
            }
            v ^= by_pivot[p];
        }
        if rank == max_rank {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let rows: Vec<Vec<u64>> = vec![vec![0b011], vec![0b101], vec![0b110]];
        assert_eq!(rank(3, rows.iter().map(|r| r.as_slice())), 2);
        assert_eq!(rank_u64([0b011, 0b101, 0b110], 3), 2);
        assert_eq!(rank_u64([1, 2, 4, 8], 64), 4);
    }

    #[test]
    fn reduced_rows_are_zero_at_later_pivots() {
        let mut b = SpanBasis::new(8);
        for v in [0b1111_0000u64, 0b0011_0011, 0b1000_0001] {
            b.insert(&[v]);
        }
        assert_eq!(b.rank(), 3);
        assert!(b.contains(&[0b1111_0000 ^ 0b1000_0001]));
        assert!(!b.contains(&[0b0000_0100]));
    }

    proptest! {
        #[test]
        fn multi_limb_rank_matches_u64_route(rows in proptest::collection::vec(any::<u64>(), 0..80)) {
            let packed: Vec<Vec<u64>> = rows.iter().map(|&r| vec![r]).collect();
            prop_assert_eq!(rank(64, packed.iter().map(|r| r.as_slice())), rank_u64(rows.iter().copied(), 64));
        }

        #[test]
        fn span_membership_of_sums(rows in proptest::collection::vec((any::<u64>(), any::<u64>()), 1..20), mask in any::<u32>()) {
            let mut b = SpanBasis::new(128);
            for (a, c) in &rows {
                b.insert(&[*a, *c]);
            }
            let mut sum = [0u64; 2];
            for (k, (a, c)) in rows.iter().enumerate() {
                if (mask >> (k % 32)) & 1 == 1 {
                    sum[0] ^= a;
                    sum[1] ^= c;
                }
            }
            prop_assert!(b.contains(&sum));
        }
    }
}
