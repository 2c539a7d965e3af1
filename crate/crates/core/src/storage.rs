//! Binary code files.
//!
//! Layout: magic `KCDK`, version byte `1`, `n` as u16 LE, word count as u64
//! LE, then one record of `ceil(n/8)` bytes per codeword, coordinate `i` at
//! byte `i >> 3`, bit `i & 7`. Records appear in canonical order, strictly
//! increasing.

use std::cmp::Ordering;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::bits;
use crate::codebook::{Code, Family};
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"KCDK";
pub const VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 2 + 8;

fn record_len(n: usize) -> usize {
    n.div_ceil(8)
}

pub fn encode(code: &Code) -> Result<Vec<u8>> {
    let n = code.n();
    let n16 = u16::try_from(n).map_err(|_| Error::SizeCap {
        operation: "code file length",
        size: n,
        cap: u16::MAX as usize,
    })?;
    let rec = record_len(n);
    let mut out = Vec::with_capacity(HEADER_LEN + rec * code.len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.extend_from_slice(&n16.to_le_bytes());
    out.extend_from_slice(&(code.len() as u64).to_le_bytes());
    for w in code.words() {
        let bytes = w.iter().flat_map(|l| l.to_le_bytes());
        out.extend(bytes.take(rec));
    }
    Ok(out)
}

pub fn decode(bytes: &[u8]) -> Result<Code> {
    if bytes.len() < 4 || &bytes[..4] != MAGIC {
        return Err(Error::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(Error::Truncated {
            expected: HEADER_LEN as u64,
            actual: bytes.len() as u64,
        });
    }
    if bytes[4] != VERSION {
        return Err(Error::VersionMismatch(bytes[4]));
    }
    let n = u16::from_le_bytes([bytes[5], bytes[6]]) as usize;
    let count = u64::from_le_bytes(bytes[7..15].try_into().expect("8 bytes"));
    let rec = record_len(n);
    let payload = &bytes[HEADER_LEN..];
    let expected = (rec as u128) * count as u128;
    if (payload.len() as u128) < expected {
        return Err(Error::Truncated {
            expected: (HEADER_LEN as u128 + expected).min(u64::MAX as u128) as u64,
            actual: bytes.len() as u64,
        });
    }
    if payload.len() as u128 > expected {
        return Err(Error::TrailingBytes(payload.len() as u64 - expected as u64));
    }
    let stride = bits::limbs_for(n).max(1);
    let mut data = vec![0u64; stride * count as usize];
    for (index, (record, word)) in payload
        .chunks_exact(rec.max(1))
        .take(if rec == 0 { 0 } else { count as usize })
        .zip(data.chunks_exact_mut(stride))
        .enumerate()
    {
        for (b, &byte) in record.iter().enumerate() {
            word[b / 8] |= (byte as u64) << (8 * (b % 8));
        }
        let mut masked = word.to_vec();
        bits::mask_tail(&mut masked, n);
        if masked != word {
            return Err(Error::PaddingBits { index: index as u64, n });
        }
    }
    if rec == 0 && count > 1 {
        return Err(Error::OrderViolation { index: 1 });
    }
    for (index, pair) in data.chunks_exact(stride).collect::<Vec<_>>().windows(2).enumerate() {
        if bits::cmp(pair[0], pair[1]) != Ordering::Less {
            return Err(Error::OrderViolation { index: index as u64 + 1 });
        }
    }
    Ok(Code::from_sorted_flat(n, data, Family::Derived))
}

pub fn write_code(code: &Code, path: impl AsRef<Path>) -> Result<()> {
    let bytes = encode(code)?;
    let mut file = fs::File::create(path)?;
    file.write_all(&bytes)?;
    Ok(())
}

pub fn read_code(path: impl AsRef<Path>) -> Result<Code> {
    decode(&fs::read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::Codeword;

    #[test]
    fn header_layout() {
        let c = Code::from_words(10, ["1000000001".parse::<Codeword>().unwrap()], Family::Derived).unwrap();
        let bytes = encode(&c).unwrap();
        assert_eq!(&bytes[..5], b"KCDK\x01");
        assert_eq!(&bytes[5..7], &[10, 0]);
        assert_eq!(&bytes[7..15], &[1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(&bytes[15..], &[0b0000_0001, 0b0000_0010]);
    }

    #[test]
    fn distinct_errors() {
        let c = Code::from_words(
            5,
            ["00000", "11000", "00111"].iter().map(|s| s.parse::<Codeword>().unwrap()),
            Family::Derived,
        )
        .unwrap();
        let good = encode(&c).unwrap();
        assert_eq!(decode(&good).unwrap(), c);

        let mut bad = good.clone();
        bad[0] = b'X';
        assert!(matches!(decode(&bad), Err(Error::BadMagic)));
        let mut bad = good.clone();
        bad[4] = 2;
        assert!(matches!(decode(&bad), Err(Error::VersionMismatch(2))));
        assert!(matches!(decode(&good[..good.len() - 1]), Err(Error::Truncated { .. })));
        let mut bad = good.clone();
        bad.push(0);
        assert!(matches!(decode(&bad), Err(Error::TrailingBytes(1))));
        let mut bad = good.clone();
        bad.swap(16, 17);
        assert!(matches!(decode(&bad), Err(Error::OrderViolation { index: 2 })));
        let mut bad = good;
        bad[15] = 0x80;
        assert!(matches!(decode(&bad), Err(Error::PaddingBits { index: 0, n: 5 })));
    }
}
