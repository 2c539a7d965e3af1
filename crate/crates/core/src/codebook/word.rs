use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::error::{Error, Result};

/// A binary word of fixed length, coordinate `i` at bit `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    n: usize,
    limbs: Vec<u64>,
}

impl Codeword {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            limbs: vec![0; bits::limbs_for(n)],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self {
            n,
            limbs: bits::ones(n),
        }
    }

    pub fn from_limbs(n: usize, mut limbs: Vec<u64>) -> Self {
        limbs.resize(bits::limbs_for(n), 0);
        bits::mask_tail(&mut limbs, n);
        Self { n, limbs }
    }

    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut w = Self::zeros(n);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn get(&self, i: usize) -> bool {
        bits::get(&self.limbs, i)
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.n, "coordinate {i} out of range for length {}", self.n);
        bits::set(&mut self.limbs, i, value);
    }

    pub fn weight(&self) -> usize {
        bits::weight(&self.limbs)
    }

    pub fn distance(&self, other: &Self) -> usize {
        bits::distance(&self.limbs, &other.limbs)
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        bits::xor_into(&mut out.limbs, &other.limbs);
        out
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i)).collect()
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| bits::cmp(&self.limbs, &other.limbs))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coordinate 0 first.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Self::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(i, true),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "invalid bit character {other:?}"
                    )))
                }
            }
        }
        Ok(w)
    }
}
