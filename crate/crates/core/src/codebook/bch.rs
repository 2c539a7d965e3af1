use serde::{Deserialize, Serialize};

use super::families::span_words;
use super::{Code, Codeword, Family};
use crate::bits;
use crate::error::{Error, Result};
use crate::field::{clmul, cyclotomic_coset, GaloisField};
use crate::gf2;

/// Largest dimension that is enumerated word by word.
pub const ENUMERATION_DIMENSION_CAP: usize = 24;

/// The BCH code `C(1,3)` of length `2^m - 1`, either enumerated or, when the
/// dimension exceeds [`ENUMERATION_DIMENSION_CAP`], described by its
/// parity-check matrix only.
#[derive(Debug, Clone)]
pub enum BchCode {
    Enumerated { code: Code, parity: ParityCheck },
    Described(ParityCheck),
}

impl BchCode {
    pub fn parity(&self) -> &ParityCheck {
        match self {
            BchCode::Enumerated { parity, .. } | BchCode::Described(parity) => parity,
        }
    }

    pub fn code(&self) -> Option<&Code> {
        match self {
            BchCode::Enumerated { code, .. } => Some(code),
            BchCode::Described(_) => None,
        }
    }
}

/// Parity-check description of `C(1,3)`: column `j` is the syndrome
/// `alpha^j | alpha^(3j) << m`, i.e. rows are the bits of `alpha^j` and
/// `alpha^(3j)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityCheck {
    n: usize,
    m: u32,
    columns: Vec<u32>,
    #[serde(skip)]
    position_of: Vec<u32>,
}

const NO_POSITION: u32 = u32::MAX;

impl ParityCheck {
    pub fn c13(field: &GaloisField) -> Self {
        let m = field.m();
        let columns: Vec<u32> = (0..field.order() as u64)
            .map(|j| field.alpha_pow(j) | (field.alpha_pow(3 * j) << m))
            .collect();
        Self::from_columns(m, columns)
    }

    fn from_columns(m: u32, columns: Vec<u32>) -> Self {
        let mut position_of = vec![NO_POSITION; 1 << (2 * m)];
        for (j, &c) in columns.iter().enumerate() {
            position_of[c as usize] = j as u32;
        }
        Self {
            n: columns.len(),
            m,
            columns,
            position_of,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// The `2m` parity-check rows.
    pub fn rows(&self) -> Vec<Codeword> {
        (0..2 * self.m)
            .map(|r| {
                let mut row = Codeword::zeros(self.n);
                for (j, &c) in self.columns.iter().enumerate() {
                    row.set(j, (c >> r) & 1 == 1);
                }
                row
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let rows = self.rows();
        gf2::rank(self.n, rows.iter().map(|r| r.limbs()))
    }

    pub fn dimension(&self) -> usize {
        self.n - self.rank()
    }

    pub fn syndrome(&self, word: &[u64]) -> u32 {
        let mut s = 0;
        for (k, &limb) in word.iter().enumerate() {
            let mut l = limb;
            while l != 0 {
                let b = l.trailing_zeros() as usize;
                l &= l - 1;
                s ^= self.columns[k * 64 + b];
            }
        }
        s
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        word.len() == self.n && self.syndrome(word.limbs()) == 0
    }

    fn position(&self, syndrome: u32) -> Option<usize> {
        match self.position_of[syndrome as usize] {
            NO_POSITION => None,
            p => Some(p as usize),
        }
    }

    /// Whether the code has no nonzero word of weight below 5, checked from
    /// the columns: nonzero and distinct (weights 1, 2), no column equal to
    /// the sum of two others (3), no two disjoint pairs with equal sums (4).
    pub fn has_distance_at_least_5(&self) -> bool {
        if self.columns.contains(&0) {
            return false;
        }
        let distinct = self
            .columns
            .iter()
            .enumerate()
            .all(|(j, &c)| self.position(c) == Some(j));
        if !distinct {
            return false;
        }
        let mut pair_sum = vec![NO_POSITION; 1 << (2 * self.m)];
        for a in 0..self.n {
            for b in a + 1..self.n {
                let s = self.columns[a] ^ self.columns[b];
                if self.position(s).is_some() {
                    return false;
                }
                if pair_sum[s as usize] != NO_POSITION {
                    // s = c_a + c_b = c_x + c_y with {a, b} != {x, y}; the
                    // pairs are disjoint since the columns are distinct
                    return false;
                }
                pair_sum[s as usize] = (a * self.n + b) as u32;
            }
        }
        true
    }

    /// All codewords of weight `w` with a 1 in coordinate `i`, found by
    /// enumerating `(w-2)`-subsets of the other coordinates and completing
    /// each with the unique column that zeroes the syndrome.
    pub fn words_of_weight_through(&self, i: usize, w: usize) -> Vec<Codeword> {
        assert!(w >= 2);
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(w);
        self.extend_subsets(i, w - 2, 0, self.columns[i], &mut chosen, &mut |support| {
            let mut word = Codeword::from_support(self.n, support);
            word.set(i, true);
            out.push(word);
        });
        out
    }

    /// All codewords of weight `w`.
    pub fn words_of_weight(&self, w: usize) -> Vec<Codeword> {
        assert!(w >= 1);
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(w);
        self.extend_subsets(usize::MAX, w - 1, 0, 0, &mut chosen, &mut |support| {
            out.push(Codeword::from_support(self.n, support));
        });
        out
    }

    /// Chooses `remaining` more coordinates from `start..` (skipping
    /// `excluded`), then completes with the coordinate whose column equals the
    /// accumulated syndrome, provided it is larger than every chosen one.
    fn extend_subsets(
        &self,
        excluded: usize,
        remaining: usize,
        start: usize,
        syndrome: u32,
        chosen: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            if let Some(last) = self.position(syndrome) {
                let above = chosen.last().is_none_or(|&c| last > c);
                if above && last != excluded {
                    chosen.push(last);
                    emit(chosen);
                    chosen.pop();
                }
            }
            return;
        }
        for c in start..self.n {
            if c == excluded {
                continue;
            }
            chosen.push(c);
            self.extend_subsets(excluded, remaining - 1, c + 1, syndrome ^ self.columns[c], chosen, emit);
            chosen.pop();
        }
    }
}

/// Builds `C(1,3)` with zeros `alpha` and `alpha^3`, generator polynomial
/// `m_1(X) m_3(X)`. Rejects `m = 3`, where the two cyclotomic cosets cover
/// every nonzero exponent and the code collapses to the repetition code.
pub fn build_bch_c13(m: u32) -> Result<BchCode> {
    if !(3..=10).contains(&m) {
        return Err(Error::UnsupportedDegree {
            m,
            allowed: "4..=10",
        });
    }
    let field = GaloisField::new(m)?;
    let n = field.order();
    let c1 = cyclotomic_coset(1, n as u64);
    let c3 = cyclotomic_coset(3, n as u64);
    if c3.len() < m as usize {
        return Err(Error::DegenerateBch {
            m,
            reason: format!("minimal polynomial of alpha^3 has degree {}", c3.len()),
        });
    }
    if c1.len() + c3.len() >= n - 1 {
        return Err(Error::DegenerateBch {
            m,
            reason: "cosets of 1 and 3 cover all nonzero exponents".into(),
        });
    }
    let parity = ParityCheck::c13(&field);
    let k = n - 2 * m as usize;
    if parity.dimension() != k {
        return Err(Error::DegenerateBch {
            m,
            reason: format!("dimension {} instead of {k}", parity.dimension()),
        });
    }
    if k > ENUMERATION_DIMENSION_CAP {
        return Ok(BchCode::Described(parity));
    }
    let g = clmul(field.minimal_polynomial(1), field.minimal_polynomial(3));
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|shift| {
            let mut row = vec![0u64; bits::limbs_for(n)];
            for deg in 0..=2 * m as usize {
                if (g >> deg) & 1 == 1 {
                    bits::set(&mut row, deg + shift, true);
                }
            }
            row
        })
        .collect();
    let code = Code::from_flat(n, span_words(n, &rows), Family::Bch13 { m });
    Ok(BchCode::Enumerated { code, parity })
}
