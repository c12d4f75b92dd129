//! The `B_I` family of check/generator matrices and the two fixed `Z_24`
//! examples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::Modulus;
use crate::zcode::{syndrome_image_size, LinearZCode, ZMatrix, DEFAULT_BUDGET};

/// Largest `r` (so `n = 2^r` columns) accepted by [`build_bi`].
pub const MAX_R: u32 = 16;

/// `I = (i_1, …, i_k)`: `i_j` generator rows of additive order `2^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeProfile {
    k: u32,
    counts: Vec<u32>,
}

impl TypeProfile {
    pub fn new(k: u32, counts: Vec<u32>) -> Result<Self> {
        Modulus::power_of_two(k)?;
        if counts.len() != k as usize {
            return Err(Error::InvalidProfile(format!(
                "{} counts given for k = {k}",
                counts.len()
            )));
        }
        let p = TypeProfile { k, counts };
        if p.r_u64() > MAX_R as u64 {
            return Err(Error::InvalidProfile(format!(
                "r = {} exceeds {MAX_R}",
                p.r_u64()
            )));
        }
        Ok(p)
    }

    /// Parse `"i1,i2,…,ik"`.
    pub fn parse(k: u32, s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidProfile(format!("bad count {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        TypeProfile::new(k, counts)
    }

    /// Every profile for this `k` with `r <= max_r`.
    pub fn all(k: u32, max_r: u32) -> Result<Vec<TypeProfile>> {
        Modulus::power_of_two(k)?;
        let mut out = Vec::new();
        let mut counts = vec![0u32; k as usize];
        fn rec(j: usize, left: u32, counts: &mut Vec<u32>, k: u32, out: &mut Vec<TypeProfile>) {
            if j == counts.len() {
                out.push(TypeProfile {
                    k,
                    counts: counts.clone(),
                });
                return;
            }
            let weight = j as u32 + 1;
            for c in 0..=left / weight {
                counts[j] = c;
                rec(j + 1, left - c * weight, counts, k, out);
            }
            counts[j] = 0;
        }
        rec(0, max_r.min(MAX_R), &mut counts, k, &mut out);
        out.sort_by_key(|p| (p.r(), p.counts.clone()));
        Ok(out)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::power_of_two(self.k).expect("validated on construction")
    }

    fn r_u64(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(j, &c)| (j as u64 + 1) * c as u64)
            .sum()
    }

    /// `r = Σ j·i_j`.
    pub fn r(&self) -> u32 {
        self.r_u64() as u32
    }

    /// `n = 2^r`.
    pub fn n(&self) -> usize {
        1 << self.r()
    }

    /// Number of rows of `B_I`, `1 + Σ i_j`.
    pub fn rows(&self) -> usize {
        1 + self.counts.iter().map(|&c| c as usize).sum::<usize>()
    }
}

impl fmt::Display for TypeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for TypeProfile {
    type Err = Error;

    /// Parse `"i1,…,ik"` with `k` taken from the number of entries.
    fn from_str(s: &str) -> Result<Self> {
        let k = s.split(',').count() as u32;
        TypeProfile::parse(k, s)
    }
}

/// `B_I`: columns are all of `{1} × (2^{k-1}Z)^{i_1} × … × (2^0 Z)^{i_k}`,
/// sorted lexicographically with the top row most significant.
pub fn build_bi(profile: &TypeProfile) -> ZMatrix {
    let md = profile.modulus();
    let k = profile.k;
    // step and radix of each row below the first
    let mut steps: Vec<u32> = Vec::new();
    for (j, &c) in profile.counts.iter().enumerate() {
        let order = 1u32 << (j + 1);
        let step = 1u32 << (k - (j as u32 + 1));
        for _ in 0..c {
            steps.push(step);
            debug_assert_eq!(step * order, md.two_m());
        }
    }
    let n = profile.n();
    let mut rows = vec![vec![0u32; n]; 1 + steps.len()];
    rows[0] = vec![1; n];
    for col in 0..n {
        // mixed-radix digits of col, last row least significant
        let mut rest = col;
        for t in (0..steps.len()).rev() {
            let radix = (md.two_m() / steps[t]) as usize;
            rows[t + 1][col] = (rest % radix) as u32 * steps[t];
            rest /= radix;
        }
    }
    ZMatrix::from_raw(md, n, rows)
}

/// `H_I = ker B_I`, of size `2^{kn} / (n·2^k)`.
pub fn code_hi(profile: &TypeProfile) -> Result<LinearZCode> {
    let check = build_bi(profile);
    let code = LinearZCode::from_check(check.clone());
    let n = profile.n();
    let total = BigUint::from(2u8).pow(profile.k * n as u32);
    let expected = &total / (BigUint::from(n) << profile.k);
    if code.cardinality() != expected {
        return Err(Error::SoundnessAlarm(format!(
            "|H_I| = {}, expected {expected}",
            code.cardinality()
        )));
    }
    if let Ok(image) = syndrome_image_size(&check, DEFAULT_BUDGET) {
        if BigUint::from(image) * &expected != total {
            return Err(Error::SoundnessAlarm(format!(
                "syndrome image {image} disagrees with |H_I| = {expected}"
            )));
        }
    }
    Ok(code)
}

/// `D_I`, the row span of `B_I`, of size `n·2^k`.
pub fn code_di(profile: &TypeProfile) -> Result<LinearZCode> {
    let code = LinearZCode::from_generators(build_bi(profile))?;
    let expected = BigUint::from(profile.n()) << profile.k;
    if code.cardinality() != expected {
        return Err(Error::SoundnessAlarm(format!(
            "|D_I| = {}, expected {expected}",
            code.cardinality()
        )));
    }
    Ok(code)
}

/// The two fixed check matrices over `Z_24`: `B′` (3×8) and `B″` (2×6).
pub fn z24_examples() -> (ZMatrix, ZMatrix) {
    let md = Modulus::new(24).expect("24 is a valid modulus");
    let bprime = ZMatrix::from_ints(
        md,
        &[
            &[1, 1, 1, 1, 1, 1, 1, 1],
            &[0, 0, 0, 0, 12, 12, 12, 12],
            &[0, 6, 12, 18, 0, 6, 12, 18],
        ],
    )
    .expect("fixed matrix");
    let bdoubleprime = ZMatrix::from_ints(md, &[&[1, 1, 1, 1, 1, 1], &[0, 4, 8, 12, 16, 20]])
        .expect("fixed matrix");
    (bprime, bdoubleprime)
}
