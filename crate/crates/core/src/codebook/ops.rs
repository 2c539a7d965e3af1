use serde::Serialize;

use super::{Code, Codeword, Family};
use crate::bits;
use crate::error::{Error, Result};

fn check_coordinate(code: &Code, i: usize) -> Result<()> {
    if i >= code.n() {
        return Err(Error::CoordinateOutOfRange { index: i, n: code.n() });
    }
    Ok(())
}

fn check_length(code: &Code, v: &Codeword) -> Result<()> {
    if v.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: v.len(),
        });
    }
    Ok(())
}

fn delete_from<'a>(code: &Code, i: usize, words: impl Iterator<Item = &'a [u64]>) -> Code {
    let n = code.n() - 1;
    let stride = bits::limbs_for(n).max(1);
    let mut data = Vec::with_capacity(code.len() * stride);
    let mut buf = vec![0u64; stride];
    for w in words {
        bits::delete_coordinate(w, code.n(), i, &mut buf);
        data.extend_from_slice(&buf);
    }
    Code::from_flat(n, data, Family::Derived)
}

/// Deletes coordinate `i`; words that become equal are merged.
pub fn puncture(code: &Code, i: usize) -> Result<Code> {
    check_coordinate(code, i)?;
    Ok(delete_from(code, i, code.words()))
}

/// Keeps the words with a 0 in coordinate `i` and deletes that coordinate.
pub fn shorten(code: &Code, i: usize) -> Result<Code> {
    check_coordinate(code, i)?;
    Ok(delete_from(code, i, code.words().filter(|w| !bits::get(w, i))))
}

pub fn translate(code: &Code, v: &Codeword) -> Result<Code> {
    check_length(code, v)?;
    let mut data = code.flat().to_vec();
    for w in data.chunks_exact_mut(code.stride()) {
        bits::xor_into(w, v.limbs());
    }
    Ok(Code::from_flat(code.n(), data, Family::Derived))
}

/// Whether `v + C = C`.
pub fn kernel_contains(code: &Code, v: &Codeword) -> Result<bool> {
    check_length(code, v)?;
    let mut buf = vec![0u64; code.stride()];
    Ok(code.words().all(|w| {
        buf.copy_from_slice(w);
        bits::xor_into(&mut buf, v.limbs());
        code.contains(&buf)
    }))
}

/// `Ker(C)`. Every kernel vector maps the first codeword onto some codeword,
/// so the candidates are `c_0 + C`.
pub fn kernel(code: &Code) -> Result<Code> {
    if code.family().is_linear() {
        return Ok(code.clone().with_family(Family::Derived));
    }
    let Some(first) = code.codewords().next() else {
        return Ok(code.clone());
    };
    let mut members = Vec::new();
    for c in code.codewords() {
        let v = c.xor(&first);
        if kernel_contains(code, &v)? {
            members.push(v);
        }
    }
    Code::from_words(code.n(), members, Family::Derived)
}

/// Result of [`extend_complement`].
#[derive(Debug, Clone, Serialize)]
pub struct Extension {
    #[serde(skip)]
    pub code: Code,
    /// `I(C)` and `{n - i : i in I(C)}` are disjoint.
    pub precondition_holds: bool,
    pub overlap: Vec<usize>,
}

/// `C U (1 + C)`, together with the disjointness check of `I(C)` and its
/// complement distances.
pub fn extend_complement(code: &Code) -> Result<Extension> {
    let n = code.n();
    let ones = Codeword::ones(n);
    let mut data = code.flat().to_vec();
    for w in code.words() {
        let mut c = w.to_vec();
        bits::xor_into(&mut c, ones.limbs());
        data.extend_from_slice(&c);
    }
    let extended = Code::from_flat(n, data, Family::Derived);
    let distances = code.distance_set()?;
    let overlap: Vec<usize> = distances
        .iter()
        .filter(|&i| distances.contains(n - i))
        .collect();
    Ok(Extension {
        code: extended,
        precondition_holds: overlap.is_empty(),
        overlap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::{build_kerdock, build_rm1};

    fn code(words: &[&str]) -> Code {
        let n = words[0].len();
        Code::from_words(n, words.iter().map(|w| w.parse().unwrap()), Family::Derived).unwrap()
    }

    #[test]
    fn puncture_and_shorten_small() {
        let c = code(&["000", "111"]);
        assert_eq!(puncture(&c, 0).unwrap(), code(&["00", "11"]));
        assert_eq!(shorten(&c, 0).unwrap(), code(&["00"]));
        assert!(matches!(puncture(&c, 3), Err(Error::CoordinateOutOfRange { .. })));
        assert!(matches!(shorten(&c, 7), Err(Error::CoordinateOutOfRange { .. })));
    }

    #[test]
    fn puncturing_commutes() {
        let k = build_kerdock(4).unwrap();
        for (a, b) in [(0, 5), (3, 15), (9, 10)] {
            // deleting a < b: delete b first, then a; or a first, then b - 1
            let one = puncture(&puncture(&k, b).unwrap(), a).unwrap();
            let two = puncture(&puncture(&k, a).unwrap(), b - 1).unwrap();
            assert_eq!(one, two);
        }
    }

    #[test]
    fn kerdock_derivations() {
        let k = build_kerdock(4).unwrap();
        assert_eq!(puncture(&k, 15).unwrap().len(), 256);
        let k1 = shorten(&k, 15).unwrap();
        assert_eq!(k1.len(), 128);
        let k2 = shorten(&k1, 14).unwrap();
        assert_eq!(k2.len(), 64);
        assert_eq!(k2.distance_set().unwrap(), [0, 6, 8, 10].into_iter().collect());
        assert_eq!(k.distance_set().unwrap(), [0, 6, 8, 10, 16].into_iter().collect());

        let ext = extend_complement(&k2).unwrap();
        assert_eq!(ext.code.len(), 128);
        // 14 - {0, 6, 8, 10} = {14, 8, 6, 4} meets {0, 6, 8, 10}
        assert!(!ext.precondition_holds);
        assert_eq!(ext.overlap, vec![6, 8]);
    }

    #[test]
    fn extension_examples() {
        let z = code(&["0000"]);
        let ext = extend_complement(&z).unwrap();
        assert_eq!(ext.code, code(&["0000", "1111"]));
        assert!(ext.precondition_holds);
        let twice = extend_complement(&ext.code).unwrap();
        assert_eq!(twice.code.len(), ext.code.len());
    }

    #[test]
    fn translation_and_kernel() {
        let k = build_kerdock(4).unwrap();
        let zero = Codeword::zeros(16);
        assert_eq!(translate(&k, &zero).unwrap(), k);
        assert!(kernel_contains(&k, &zero).unwrap());
        let rm = build_rm1(4).unwrap();
        for v in rm.codewords() {
            assert!(kernel_contains(&k, &v).unwrap());
            assert_eq!(translate(&k, &v).unwrap(), k);
        }
        for v in k.words_of_weight(6) {
            assert!(!kernel_contains(&k, &v).unwrap());
            assert_ne!(translate(&k, &v).unwrap(), k);
        }
        assert_eq!(kernel(&k).unwrap(), rm);
        assert!(matches!(
            kernel_contains(&k, &Codeword::zeros(15)),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
