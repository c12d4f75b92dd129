//! Fixed-length bit vectors and explicit binary codes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A binary word; bit `i` is the `i`-th character of its string form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: usize,
    limbs: Vec<u64>,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        BitWord {
            len,
            limbs: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = BitWord::zeros(len);
        for i in 0..len {
            w.set(i, true);
        }
        w
    }

    /// The low `len` bits of `value`, bit `i` of `value` at position `i`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut w = BitWord::zeros(len);
        if len > 0 {
            let mask = if len == 64 { u64::MAX } else { (1 << len) - 1 };
            w.limbs[0] = value & mask;
        }
        w
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = BitWord::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            w.set(i, b);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len);
        if b {
            self.limbs[i / 64] |= 1 << (i % 64);
        } else {
            self.limbs[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.limbs[i / 64] ^= 1 << (i % 64);
    }

    /// Bits `[start, start + len)` packed into a `u64`, `len <= 64`.
    pub fn block(&self, start: usize, len: usize) -> u64 {
        debug_assert!(len <= 64 && start + len <= self.len);
        let mut v = 0u64;
        for i in 0..len {
            if self.get(start + i) {
                v |= 1 << i;
            }
        }
        v
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn distance(&self, other: &BitWord) -> u32 {
        debug_assert_eq!(self.len, other.len);
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    pub fn xor(&self, other: &BitWord) -> BitWord {
        debug_assert_eq!(self.len, other.len);
        BitWord {
            len: self.len,
            limbs: self
                .limbs
                .iter()
                .zip(&other.limbs)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn complement(&self) -> BitWord {
        self.xor(&BitWord::ones(self.len))
    }

    /// Concatenation.
    pub fn concat(&self, other: &BitWord) -> BitWord {
        let mut out = BitWord::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a BitWord>) -> BitWord {
        let parts: Vec<&BitWord> = parts.into_iter().collect();
        let len = parts.iter().map(|p| p.len).sum();
        let mut out = BitWord::zeros(len);
        let mut pos = 0;
        for p in parts {
            for i in 0..p.len {
                if p.get(i) {
                    out.set(pos + i, true);
                }
            }
            pos += p.len;
        }
        out
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = BitWord::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                other => return Err(Error::Invalid(format!("bad bit character {other:?}"))),
            }
        }
        Ok(w)
    }
}

/// An explicit set of binary words of one length, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    len: usize,
    words: Vec<BitWord>,
}

impl BinaryCode {
    pub fn new(len: usize, mut words: Vec<BitWord>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != len) {
            return Err(Error::LengthMismatch {
                expected: len,
                found: w.len(),
            });
        }
        words.sort();
        words.dedup();
        Ok(BinaryCode { len, words })
    }

    pub fn parse_words(words: &[&str]) -> Result<Self> {
        let parsed: Vec<BitWord> = words.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let len = parsed.first().map_or(0, |w| w.len());
        BinaryCode::new(len, parsed)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[BitWord] {
        &self.words
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Minimum distance between distinct words, `None` below two words.
    pub fn min_distance(&self) -> Option<u32> {
        self.min_distance_pair().map(|(d, _, _)| d)
    }

    /// Minimum distance with a pair of word indices achieving it.
    pub fn min_distance_pair(&self) -> Option<(u32, usize, usize)> {
        let words = &self.words;
        (0..words.len())
            .into_par_iter()
            .filter_map(|i| {
                (i + 1..words.len())
                    .map(|j| (words[i].distance(&words[j]), i, j))
                    .min()
            })
            .min()
    }

    /// Sorted set of all pairwise distances between distinct words.
    pub fn distance_set(&self) -> Vec<u32> {
        let words = &self.words;
        let mut seen: Vec<u32> = (0..words.len())
            .into_par_iter()
            .fold(Vec::new, |mut acc, i| {
                for j in i + 1..words.len() {
                    let d = words[i].distance(&words[j]);
                    if !acc.contains(&d) {
                        acc.push(d);
                    }
                }
                acc
            })
            .reduce(Vec::new, |mut a, b| {
                for d in b {
                    if !a.contains(&d) {
                        a.push(d);
                    }
                }
                a
            });
        seen.sort_unstable();
        seen
    }

    /// Cartesian product of codes, concatenating one word from each.
    pub fn product(factors: &[&BinaryCode]) -> Result<BinaryCode> {
        let len = factors.iter().map(|c| c.len).sum();
        let mut acc = vec![BitWord::zeros(0)];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.words.len());
            for a in &acc {
                for w in &f.words {
                    next.push(a.concat(w));
                }
            }
            acc = next;
        }
        BinaryCode::new(len, acc)
    }
}
