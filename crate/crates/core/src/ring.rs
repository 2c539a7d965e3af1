//! The Galois ring GR(4, t) = Z4[X]/(h(X)) and the Gray map.
//!
//! `h` is the Hensel lift of the degree-`t` primitive polynomial from
//! [`crate::field`], so the residue field of the ring is exactly the
//! [`GaloisField`] of degree `t`. Kerdock codes are built from the ring trace
//! evaluated on the Teichmueller set, followed by the Gray map.

use crate::codebook::Codeword;
use crate::error::{Error, Result};
use crate::field::{self, GaloisField};

/// Element of GR(4, t): coordinates mod 4 in the basis 1, xi, ..., xi^(t-1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement(pub Vec<u8>);

impl RingElement {
    pub fn zero(t: usize) -> Self {
        Self(vec![0; t])
    }

    pub fn one(t: usize) -> Self {
        let mut c = vec![0; t];
        c[0] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[u8] {
        &self.0
    }

    /// Reduction modulo 2 as a residue-field element.
    pub fn residue(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &c)| acc | (((c & 1) as u32) << k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + b) & 3)
                .collect(),
        )
    }

    pub fn scale(&self, s: u8) -> Self {
        Self(self.0.iter().map(|a| (a * (s & 3)) & 3).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Index of this element in the enumeration order of
    /// [`GaloisRing::elements`].
    pub fn index(&self) -> usize {
        self.0
            .iter()
            .rev()
            .fold(0usize, |acc, &c| (acc << 2) | c as usize)
    }
}

/// Graeffe-style Hensel lift of a binary polynomial of odd degree `t`:
/// `h(X^2) = -f(X) f(-X) mod 4`. Coefficients are returned low to high,
/// including the leading 1.
pub fn hensel_lift(f: u32) -> Result<Vec<u8>> {
    let t = (31 - f.leading_zeros()) as usize;
    if t % 2 == 0 || !field::is_primitive(f) {
        return Err(Error::NotPrimitive { poly: f });
    }
    let coeff = |k: usize| ((f >> k) & 1) as i64;
    let mut product = vec![0i64; 2 * t + 1];
    for a in 0..=t {
        for b in 0..=t {
            let sign = if b % 2 == 0 { 1 } else { -1 };
            product[a + b] += coeff(a) * coeff(b) * sign;
        }
    }
    // odd-degree terms cancel in f(X) f(-X)
    debug_assert!(product.iter().skip(1).step_by(2).all(|&c| c == 0));
    let h: Vec<u8> = (0..=t)
        .map(|k| (-product[2 * k]).rem_euclid(4) as u8)
        .collect();
    Ok(h)
}

#[derive(Debug, Clone)]
pub struct GaloisRing {
    t: usize,
    h: Vec<u8>,
    residue_field: GaloisField,
    /// Teichmueller representatives indexed by their residue.
    teichmueller: Vec<RingElement>,
    /// `T(xi^k)` for `k < t`; the trace is Z4-linear in the coordinates.
    trace_of_basis: Vec<u8>,
}

impl GaloisRing {
    /// GR(4, t) for odd `t` in `3..=9`, lifted from the fixed primitive
    /// polynomial of degree `t`.
    pub fn new(t: u32) -> Result<Self> {
        if t % 2 == 0 || !(3..=9).contains(&t) {
            return Err(Error::UnsupportedDegree {
                m: t,
                allowed: "odd 3..=9",
            });
        }
        let residue_field = GaloisField::new(t)?;
        let h = hensel_lift(residue_field.modulus())?;
        let t = t as usize;
        let mut ring = Self {
            t,
            h,
            residue_field,
            teichmueller: Vec::new(),
            trace_of_basis: Vec::new(),
        };

        let order = (1usize << t) - 1;
        let xi = ring.xi();
        let mut slots: Vec<Option<RingElement>> = vec![None; 1 << t];
        slots[0] = Some(RingElement::zero(t));
        let mut power = RingElement::one(t);
        for k in 0..order {
            let r = power.residue() as usize;
            if slots[r].is_some() {
                return Err(Error::SelfCheck(format!(
                    "xi^{k} repeats a residue in GR(4, {t})"
                )));
            }
            slots[r] = Some(power.clone());
            power = ring.mul(&power, &xi);
        }
        if power != RingElement::one(t) {
            return Err(Error::SelfCheck(format!(
                "xi does not have order {order} in GR(4, {t})"
            )));
        }
        ring.teichmueller = slots.into_iter().map(Option::unwrap).collect();

        let mut traces = Vec::with_capacity(t);
        let mut basis = RingElement::one(t);
        for _ in 0..t {
            traces.push(ring.trace_by_frobenius(&basis));
            basis = ring.mul(&basis, &xi);
        }
        ring.trace_of_basis = traces;
        Ok(ring)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// The basic irreducible polynomial, coefficients low to high.
    pub fn modulus(&self) -> &[u8] {
        &self.h
    }

    pub fn residue_field(&self) -> &GaloisField {
        &self.residue_field
    }

    pub fn xi(&self) -> RingElement {
        let mut c = vec![0; self.t];
        c[1] = 1;
        RingElement(c)
    }

    /// The Teichmueller set, ordered by residue: entry `r` reduces to the
    /// field element `r`.
    pub fn teichmueller(&self) -> &[RingElement] {
        &self.teichmueller
    }

    /// All `4^t` elements; element `k` has coordinate `j` equal to base-4
    /// digit `j` of `k`.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..1usize << (2 * self.t)).map(move |k| {
            RingElement((0..self.t).map(|j| ((k >> (2 * j)) & 3) as u8).collect())
        })
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let t = self.t;
        let mut acc = vec![0u32; 2 * t - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                acc[i + j] += (x * y) as u32;
            }
        }
        // h is monic: X^t = -(h_0 + ... + h_{t-1} X^(t-1))
        for deg in (t..2 * t - 1).rev() {
            let c = acc[deg] & 3;
            if c == 0 {
                continue;
            }
            for k in 0..t {
                acc[deg - t + k] += 4 * 4 - c * self.h[k] as u32;
            }
        }
        RingElement(acc[..t].iter().map(|&c| (c & 3) as u8).collect())
    }

    /// Writes `a = u + 2v` with `u, v` in the Teichmueller set.
    pub fn two_adic(&self, a: &RingElement) -> (RingElement, RingElement) {
        let u = self.teichmueller[a.residue() as usize].clone();
        let diff = a.add(&u.scale(3));
        debug_assert!(diff.0.iter().all(|c| c % 2 == 0));
        let v_residue = diff
            .0
            .iter()
            .enumerate()
            .fold(0u32, |acc, (k, &c)| acc | ((((c >> 1) & 1) as u32) << k));
        (u, self.teichmueller[v_residue as usize].clone())
    }

    /// Frobenius automorphism `u + 2v -> u^2 + 2v^2`.
    pub fn frobenius(&self, a: &RingElement) -> RingElement {
        let (u, v) = self.two_adic(a);
        self.mul(&u, &u).add(&self.mul(&v, &v).scale(2))
    }

    /// Ring trace to Z4 from its definition as the sum of the Frobenius
    /// conjugates.
    pub fn trace_by_frobenius(&self, a: &RingElement) -> u8 {
        let mut sum = RingElement::zero(self.t);
        let mut conj = a.clone();
        for _ in 0..self.t {
            sum = sum.add(&conj);
            conj = self.frobenius(&conj);
        }
        debug_assert!(
            sum.0[1..].iter().all(|&c| c == 0),
            "trace not in Z4: {sum:?}"
        );
        sum.0[0]
    }

    /// Ring trace via its Z4-linearity.
    #[inline]
    pub fn trace(&self, a: &RingElement) -> u8 {
        a.0.iter()
            .zip(&self.trace_of_basis)
            .fold(0u8, |acc, (&c, &tr)| (acc + c * tr) & 3)
    }

    pub fn trace_of_basis(&self) -> &[u8] {
        &self.trace_of_basis
    }
}

/// Gray map Z4^N -> F2^(2N): 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, symbol `i`
/// occupying bits `2i` and `2i + 1`.
pub fn gray_map(word: &[u8]) -> Codeword {
    let mut out = Codeword::zeros(2 * word.len());
    for (i, &s) in word.iter().enumerate() {
        let (b0, b1) = gray_symbol(s);
        out.set(2 * i, b0);
        out.set(2 * i + 1, b1);
    }
    out
}

#[inline]
pub fn gray_symbol(s: u8) -> (bool, bool) {
    match s & 3 {
        0 => (false, false),
        1 => (false, true),
        2 => (true, true),
        _ => (true, false),
    }
}

pub fn lee_weight(word: &[u8]) -> usize {
    word.iter()
        .map(|&s| match s & 3 {
            0 => 0,
            2 => 2,
            _ => 1,
        })
        .sum()
}
