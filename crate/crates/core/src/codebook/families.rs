use super::structure;
use super::{Code, Family};
use crate::bits;
use crate::error::{Error, Result};
use crate::field::{gcd, GaloisField};
use crate::ring::{gray_symbol, GaloisRing, RingElement};

/// All `2^k` GF(2) combinations of `rows`, in Gray-code order, as a flat
/// array of `limbs_for(n)` limbs per word.
pub(crate) fn span_words(n: usize, rows: &[Vec<u64>]) -> Vec<u64> {
    let stride = bits::limbs_for(n).max(1);
    let k = rows.len();
    let mut out = Vec::with_capacity(stride << k);
    let mut acc = vec![0u64; stride];
    out.extend_from_slice(&acc);
    for step in 1u64..(1u64 << k) {
        bits::xor_into(&mut acc, &rows[step.trailing_zeros() as usize]);
        out.extend_from_slice(&acc);
    }
    out
}

fn check_degree(m: u32, range: std::ops::RangeInclusive<u32>, allowed: &'static str) -> Result<()> {
    if range.contains(&m) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree { m, allowed })
    }
}

/// First-order Reed-Muller code RM(1, m): coordinate `j` is the point of
/// F2^m whose bit `k` is bit `k` of `j`, and the codewords are the affine
/// functions `<a, v> + e`.
pub fn build_rm1(m: u32) -> Result<Code> {
    check_degree(m, 3..=10, "3..=10")?;
    let n = 1usize << m;
    let mut rows = Vec::with_capacity(m as usize + 1);
    for k in 0..m as usize {
        let mut row = vec![0u64; bits::limbs_for(n)];
        for j in (0..n).filter(|j| (j >> k) & 1 == 1) {
            bits::set(&mut row, j, true);
        }
        rows.push(row);
    }
    rows.push(bits::ones(n));
    Ok(Code::from_flat(n, span_words(n, &rows), Family::Rm1 { m }))
}

/// Kerdock code of length `2^m` (m even, 4..=8) as the Gray image of the
/// quaternary code `{ e*1 + (T(lambda * u))_u }` over GR(4, m-1), with `u`
/// running over the Teichmueller set ordered by residue. In this coordinate
/// order the code contains [`build_rm1`] verbatim.
///
/// The construction is checked before it is returned: size `n^2`, a
/// partition into `n/2` cosets of RM(1, m), the weight-`n/2` words, and the
/// inter- and intra-coset distance sets.
pub fn build_kerdock(m: u32) -> Result<Code> {
    if m % 2 == 1 {
        return Err(Error::UnsupportedDegree {
            m,
            allowed: "even 4..=8",
        });
    }
    check_degree(m, 4..=8, "even 4..=8")?;
    let ring = GaloisRing::new(m - 1)?;
    let t = ring.t();
    let symbols = 1usize << t;
    let n = 2 * symbols;
    let stride = bits::limbs_for(n);

    // quaternary words for lambda = xi^k; the code is Z4-linear in lambda
    let mut basis: Vec<Vec<u8>> = Vec::with_capacity(t);
    let mut xi_k = RingElement::one(t);
    for _ in 0..t {
        basis.push(
            ring.teichmueller()
                .iter()
                .map(|u| ring.trace(&ring.mul(&xi_k, u)))
                .collect(),
        );
        xi_k = ring.mul(&xi_k, &ring.xi());
    }

    let mut data = Vec::with_capacity((1usize << (2 * t + 2)) * stride);
    let mut quaternary = vec![0u8; symbols];
    for lambda in 0..1usize << (2 * t) {
        quaternary.iter_mut().for_each(|s| *s = 0);
        for (k, row) in basis.iter().enumerate() {
            let digit = ((lambda >> (2 * k)) & 3) as u8;
            if digit != 0 {
                for (s, &r) in quaternary.iter_mut().zip(row) {
                    *s = (*s + digit * r) & 3;
                }
            }
        }
        for eps in 0..4u8 {
            let mut word = vec![0u64; stride];
            for (i, &s) in quaternary.iter().enumerate() {
                let (b0, b1) = gray_symbol(s + eps);
                bits::set(&mut word, 2 * i, b0);
                bits::set(&mut word, 2 * i + 1, b1);
            }
            data.extend_from_slice(&word);
        }
    }
    let code = Code::from_flat(n, data, Family::Kerdock { m });
    structure::kerdock_self_check(&code, m)?;
    Ok(code)
}

/// Whether `e = 2^j + 1` for some `j` with `gcd(j, m) = 1`.
pub fn gold_exponent_ok(m: u32, e: u32) -> bool {
    (1..m).any(|j| e == (1 << j) + 1 && gcd(j as u64, m as u64) == 1)
}

/// The code `{ (Tr(a x + b x^e))_x : a, b in GF(2^m) }` with `x` running over
/// `alpha^0, ..., alpha^(2^m - 2)`. For `e = 3` this is the dual of the BCH
/// code `C(1,3)`. The map `(a, b) -> codeword` must be injective, so the code
/// has `4^m` words.
pub fn build_trace_dual(m: u32, e: u32) -> Result<Code> {
    check_degree(m, 3..=10, "3..=10")?;
    let field = GaloisField::new(m)?;
    let n = field.order();
    let mut rows = Vec::with_capacity(2 * m as usize);
    for exponent in [1u64, e as u64] {
        for r in 0..m {
            let coefficient = 1u32 << r;
            let mut row = vec![0u64; bits::limbs_for(n)];
            for j in 0..n {
                let x = field.alpha_pow(exponent * j as u64);
                if field.trace(field.mul(coefficient, x)) == 1 {
                    bits::set(&mut row, j, true);
                }
            }
            rows.push(row);
        }
    }
    let code = Code::from_flat(n, span_words(n, &rows), Family::TraceDual { m, e });
    if code.len() != 1 << (2 * m) {
        return Err(Error::NonInjective { m, e });
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::WeightDistribution;

    #[test]
    fn rm1_small() {
        let rm3 = build_rm1(3).unwrap();
        assert_eq!(rm3.len(), 16);
        assert_eq!(
            rm3.weight_distribution(),
            WeightDistribution::from_pairs([(0, 1), (4, 14), (8, 1)])
        );
        let rm4 = build_rm1(4).unwrap();
        assert_eq!(
            rm4.weight_distribution(),
            WeightDistribution::from_pairs([(0, 1), (8, 30), (16, 1)])
        );
        assert!(rm4.contains(&bits::ones(16)));
        assert!(rm4.is_linear());
    }

    #[test]
    fn kerdock_16() {
        let k = build_kerdock(4).unwrap();
        assert_eq!(k.len(), 256);
        assert_eq!(
            k.weight_distribution(),
            WeightDistribution::from_pairs([(0, 1), (6, 112), (8, 30), (10, 112), (16, 1)])
        );
        let rm = build_rm1(4).unwrap();
        assert!(rm.words().all(|w| k.contains(w)));
        assert_eq!(k.min_distance(), Some(6));
    }

    #[test]
    fn kerdock_rejects_odd_and_out_of_range() {
        assert!(build_kerdock(5).is_err());
        assert!(build_kerdock(2).is_err());
        assert!(build_kerdock(10).is_err());
    }

    #[test]
    fn trace_dual_m5() {
        let c = build_trace_dual(5, 3).unwrap();
        assert_eq!(c.n(), 31);
        assert_eq!(c.len(), 1024);
        assert_eq!(
            c.weight_distribution(),
            WeightDistribution::from_pairs([(0, 1), (12, 310), (16, 527), (20, 186)])
        );
        let gold = build_trace_dual(5, 5).unwrap();
        assert_eq!(gold.weight_distribution(), c.weight_distribution());
    }

    #[test]
    fn trace_dual_matches_direct_evaluation() {
        let m = 5;
        let f = GaloisField::new(m).unwrap();
        let n = f.order();
        let direct: Vec<_> = (0..32u32)
            .flat_map(|a| (0..32u32).map(move |b| (a, b)))
            .map(|(a, b)| {
                let mut w = crate::Codeword::zeros(n);
                for j in 0..n {
                    let x = f.alpha_pow(j as u64);
                    let v = f.mul(a, x) ^ f.mul(b, f.pow(x, 3));
                    w.set(j, f.trace(v) == 1);
                }
                w
            })
            .collect();
        let direct = Code::from_words(n, direct, Family::Derived).unwrap();
        assert_eq!(direct, build_trace_dual(m, 3).unwrap());
    }

    #[test]
    fn non_injective_exponent_rejected() {
        // x^2 is the Frobenius image of x, so Tr(a x + b x^2) collapses
        assert!(matches!(build_trace_dual(5, 2), Err(Error::NonInjective { .. })));
    }

    #[test]
    fn gold_exponents() {
        assert!(gold_exponent_ok(5, 3));
        assert!(gold_exponent_ok(5, 5));
        assert!(gold_exponent_ok(7, 9));
        assert!(!gold_exponent_ok(6, 5)); // j = 2 shares a factor with 6
        assert!(!gold_exponent_ok(5, 7));
    }
}
