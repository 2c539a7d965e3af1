//! Arithmetic in GF(2^m), 3 <= m <= 10, in the polynomial basis.
//!
//! Elements are integers in `[0, 2^m)`; bit `k` is the coefficient of `X^k`.
//! Each degree uses one fixed primitive modulus so every construction built on
//! top of this module is reproducible bit for bit.

use crate::error::{Error, Result};

pub type FieldElement = u32;

/// Primitive moduli indexed by degree, as bitmasks including the leading term.
pub const PRIMITIVE_MODULI: [(u32, u32); 8] = [
    (3, 0b1011),          // X^3 + X + 1
    (4, 0b1_0011),        // X^4 + X + 1
    (5, 0b10_0101),       // X^5 + X^2 + 1
    (6, 0b100_0011),      // X^6 + X + 1
    (7, 0b1000_1001),     // X^7 + X^3 + 1
    (8, 0b1_0001_1101),   // X^8 + X^4 + X^3 + X^2 + 1
    (9, 0b10_0001_0001),  // X^9 + X^4 + 1
    (10, 0b100_0000_1001), // X^10 + X^3 + 1
];

pub fn primitive_modulus(m: u32) -> Result<u32> {
    PRIMITIVE_MODULI
        .iter()
        .find(|(deg, _)| *deg == m)
        .map(|(_, p)| *p)
        .ok_or(Error::UnsupportedDegree {
            m,
            allowed: "3..=10",
        })
}

/// Carry-less product of two polynomials over GF(2).
#[inline]
pub fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= (a as u64) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of `a` modulo `modulus` over GF(2).
#[inline]
pub fn poly_rem(mut a: u64, modulus: u32) -> u32 {
    let deg = 31 - modulus.leading_zeros();
    let modulus = modulus as u64;
    while a >> deg != 0 {
        let top = 63 - a.leading_zeros();
        a ^= modulus << (top - deg);
    }
    a as u32
}

/// Multiplicative order of X modulo `modulus`, or `None` if X^k never
/// returns to 1 within `2^deg - 1` steps (modulus reducible with X | f, etc.).
pub fn order_of_x(modulus: u32) -> Option<u64> {
    let deg = 31 - modulus.leading_zeros();
    if deg == 0 || modulus & 1 == 0 {
        return None;
    }
    let limit = (1u64 << deg) - 1;
    let mut acc = 1u32;
    for k in 1..=limit {
        acc = poly_rem(clmul(acc, 2), modulus);
        if acc == 1 {
            return Some(k);
        }
    }
    None
}

/// Whether a binary polynomial (bitmask) is primitive.
pub fn is_primitive(modulus: u32) -> bool {
    let deg = 31 - modulus.leading_zeros();
    order_of_x(modulus) == Some((1u64 << deg) - 1)
}

#[derive(Debug, Clone)]
pub struct GaloisField {
    m: u32,
    modulus: u32,
    /// `exp[k] = X^k` for `k < 2^m - 1`.
    exp: Vec<FieldElement>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

impl GaloisField {
    pub fn new(m: u32) -> Result<Self> {
        let modulus = primitive_modulus(m)?;
        let order = (1usize << m) - 1;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; order + 1];
        let mut acc = 1u32;
        for k in 0..order {
            exp.push(acc);
            log[acc as usize] = k as u32;
            acc = poly_rem(clmul(acc, 2), modulus);
        }
        if acc != 1 || exp[1..].contains(&1) {
            return Err(Error::NotPrimitive { poly: modulus });
        }
        Ok(Self {
            m,
            modulus,
            exp,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> usize {
        self.exp.len()
    }

    /// The primitive element: the class of X.
    pub fn generator(&self) -> FieldElement {
        2
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        poly_rem(clmul(a, b), self.modulus)
    }

    /// `alpha^k` for any integer exponent `k`.
    #[inline]
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        self.exp[(k % self.exp.len() as u64) as usize]
    }

    /// Discrete logarithm base alpha; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return 1;
        }
        match self.log(a) {
            None => 0,
            Some(l) => self.alpha_pow(l as u64 * e),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        self.log(a)
            .map(|l| self.exp[(self.order() - l as usize) % self.order()])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.order() as u64;
        Some(n / gcd(n, l))
    }

    /// Absolute trace `Tr(a) = a + a^2 + ... + a^(2^(m-1))`.
    pub fn trace(&self, a: FieldElement) -> u8 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.m {
            acc ^= x;
            x = self.mul(x, x);
        }
        debug_assert!(acc <= 1, "trace left the prime field");
        acc as u8
    }

    /// Minimal polynomial of `alpha^k` over GF(2), as a bitmask.
    pub fn minimal_polynomial(&self, k: u64) -> u32 {
        let coset = cyclotomic_coset(k, self.order() as u64);
        // product of (X - alpha^j) over the coset, coefficients in GF(2^m)
        let mut poly: Vec<FieldElement> = vec![1];
        for j in coset {
            let root = self.alpha_pow(j);
            let mut next = vec![0; poly.len() + 1];
            for (deg, &c) in poly.iter().enumerate() {
                next[deg + 1] ^= c;
                next[deg] ^= self.mul(c, root);
            }
            poly = next;
        }
        poly.iter().enumerate().fold(0u32, |acc, (deg, &c)| {
            debug_assert!(c <= 1, "minimal polynomial coefficient outside GF(2)");
            acc | (c << deg)
        })
    }
}

/// The 2-cyclotomic coset of `k` modulo `n`, in generation order.
pub fn cyclotomic_coset(k: u64, n: u64) -> Vec<u64> {
    let start = k % n;
    let mut coset = vec![start];
    let mut j = (start * 2) % n;
    while j != start {
        coset.push(j);
        j = (j * 2) % n;
    }
    coset
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_are_primitive() {
        for (m, p) in PRIMITIVE_MODULI {
            assert!(is_primitive(p), "m = {m}");
            let f = GaloisField::new(m).unwrap();
            assert_eq!(f.element_order(f.generator()), Some((1 << m) - 1));
        }
    }

    #[test]
    fn unsupported_degrees_rejected() {
        assert!(matches!(
            GaloisField::new(2),
            Err(Error::UnsupportedDegree { m: 2, .. })
        ));
        assert!(GaloisField::new(11).is_err());
    }

    #[test]
    fn gf5_generator_order_by_exhaustion() {
        let f = GaloisField::new(5).unwrap();
        assert_eq!(f.modulus(), 0b100101);
        let mut x = 1;
        for k in 1..31 {
            x = f.mul(x, 2);
            assert_ne!(x, 1, "X^{k} = 1");
        }
        assert_eq!(f.mul(x, 2), 1);
    }

    #[test]
    fn gf8_small_products() {
        let f = GaloisField::new(3).unwrap();
        assert_eq!(f.mul(2, 2), 4);
        assert_eq!(f.mul(4, 2), 3);
        for b in 0..8 {
            assert_eq!(f.mul(1, b), b);
        }
    }

    #[test]
    fn group_order_annihilates() {
        for m in [3, 4, 5, 8] {
            let f = GaloisField::new(m).unwrap();
            for a in 1..f.size() as u32 {
                assert_eq!(f.pow(a, f.order() as u64), 1);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for m in 3..=5 {
            let f = GaloisField::new(m).unwrap();
            let q = f.size() as u32;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                        assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn trace_properties() {
        for m in 3..=5 {
            let f = GaloisField::new(m).unwrap();
            let q = f.size() as u32;
            assert_eq!(f.trace(0), 0);
            assert_eq!(f.trace(1), (m % 2) as u8);
            for a in 0..q {
                assert_eq!(f.trace(f.mul(a, a)), f.trace(a));
                for b in 0..q {
                    assert_eq!(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
                }
            }
            let ones = (0..q).filter(|&a| f.trace(a) == 1).count();
            assert_eq!(ones, 1 << (m - 1));
        }
        let f5 = GaloisField::new(5).unwrap();
        assert_eq!((0..32).filter(|&a| f5.trace(a) == 1).count(), 16);
    }

    #[test]
    fn minimal_polynomials() {
        let f = GaloisField::new(4).unwrap();
        assert_eq!(f.minimal_polynomial(1), 0b10011);
        // alpha^3 in GF(16) with X^4+X+1: X^4+X^3+X^2+X+1
        assert_eq!(f.minimal_polynomial(3), 0b11111);
        let f5 = GaloisField::new(5).unwrap();
        assert_eq!(f5.minimal_polynomial(1), f5.modulus());
        assert_eq!(31 - f5.minimal_polynomial(3).leading_zeros(), 5);
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_coset(3, 15), vec![3, 6, 12, 9]);
        assert_eq!(cyclotomic_coset(5, 15), vec![5, 10]);
        assert_eq!(cyclotomic_coset(0, 7), vec![0]);
    }
}
