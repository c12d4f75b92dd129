//! Exact weight enumerators and the transforms that relate them.
//!
//! A homogeneous polynomial `Σ A_w X^{L-w} Y^w` is stored as the coefficient
//! vector `A_0..A_L`, so products of homogeneous polynomials are plain
//! convolutions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bits::BinaryCode;
use crate::error::{Error, Result};
use crate::ring::Modulus;
use crate::zcode::{space_size, LinearZCode, ZMatrix};

/// Hamming weight enumerator `W(X, Y)` of a code of length `L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HammingWe {
    coeffs: Vec<BigInt>,
}

impl HammingWe {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "an enumerator has L + 1 >= 1 coefficients"
        );
        HammingWe { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        HammingWe::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `X^L`.
    pub fn x_power(len: usize) -> Self {
        let mut c = vec![BigInt::zero(); len + 1];
        c[0] = BigInt::one();
        HammingWe::new(c)
    }

    pub fn length(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, w: usize) -> &BigInt {
        &self.coeffs[w]
    }

    /// `W(1, 1)`.
    pub fn mass(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &HammingWe) -> HammingWe {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HammingWe::new(out)
    }

    /// Successive powers `1, p, p^2, …, p^max`.
    fn powers(&self, max: usize) -> Vec<HammingWe> {
        let mut out = vec![HammingWe::x_power(0)];
        for i in 0..max {
            let next = out[i].mul(self);
            out.push(next);
        }
        out
    }

    fn add_scaled(&mut self, other: &HammingWe, factor: &BigInt) {
        assert_eq!(self.length(), other.length());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * factor;
        }
    }

    fn div_exact(mut self, divisor: &BigInt) -> Result<HammingWe> {
        if divisor.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        for (w, c) in self.coeffs.iter_mut().enumerate() {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    degree: w,
                    coefficient: c.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            *c = q;
        }
        Ok(self)
    }
}

impl fmt::Display for HammingWe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.length();
        let mut first = true;
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut mono = String::new();
            match l - w {
                0 => {}
                1 => mono.push('X'),
                e => mono.push_str(&format!("X^{e}")),
            }
            match w {
                0 => {}
                1 => mono.push('Y'),
                e => mono.push_str(&format!("Y^{e}")),
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Weight histogram of an explicit binary code.
pub fn hamming_we(code: &BinaryCode) -> HammingWe {
    let mut counts = vec![0u64; code.len() + 1];
    for w in code.words() {
        counts[w.weight() as usize] += 1;
    }
    HammingWe::new(counts.into_iter().map(BigInt::from).collect())
}

/// Number of zero, odd and nonzero even symbols in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolCounts {
    pub zero: usize,
    pub odd: usize,
    pub even: usize,
}

impl SymbolCounts {
    pub fn of(word: &[u32]) -> Self {
        let mut c = SymbolCounts {
            zero: 0,
            odd: 0,
            even: 0,
        };
        for &s in word {
            if s == 0 {
                c.zero += 1;
            } else if s % 2 == 1 {
                c.odd += 1;
            } else {
                c.even += 1;
            }
        }
        c
    }
}

/// Symmetrized enumerator `SW(X, Z, T)`: the complete enumerator with the odd
/// symbols merged into `Z` and the nonzero even ones into `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedWe {
    n: usize,
    coeffs: BTreeMap<SymbolCounts, BigUint>,
}

impl SymmetrizedWe {
    pub fn new(n: usize, coeffs: BTreeMap<SymbolCounts, BigUint>) -> Result<Self> {
        for key in coeffs.keys() {
            if key.zero + key.odd + key.even != n {
                return Err(Error::Invalid(format!("{key:?} does not sum to n = {n}")));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(SymmetrizedWe { n, coeffs })
    }

    fn from_counts(n: usize, counts: HashMap<SymbolCounts, u128>) -> Self {
        SymmetrizedWe {
            n,
            coeffs: counts
                .into_iter()
                .filter(|(_, v)| *v > 0)
                .map(|(k, v)| (k, BigUint::from(v)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<SymbolCounts, BigUint> {
        &self.coeffs
    }

    pub fn coeff(&self, zero: usize, odd: usize, even: usize) -> BigUint {
        self.coeffs
            .get(&SymbolCounts { zero, odd, even })
            .cloned()
            .unwrap_or_default()
    }

    pub fn mass(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// `SW(p_x, p_z, p_t)`, expanded.
    pub fn substitute(&self, px: &HammingWe, pz: &HammingWe, pt: &HammingWe) -> Result<HammingWe> {
        let m = px.length();
        if pz.length() != m || pt.length() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                found: if pz.length() != m {
                    pz.length()
                } else {
                    pt.length()
                },
            });
        }
        let (xs, zs, ts) = (px.powers(self.n), pz.powers(self.n), pt.powers(self.n));
        let mut out = HammingWe::new(vec![BigInt::zero(); m * self.n + 1]);
        for (key, c) in &self.coeffs {
            let term = xs[key.zero].mul(&zs[key.odd]).mul(&ts[key.even]);
            out.add_scaled(&term, &BigInt::from_biguint(Sign::Plus, c.clone()));
        }
        Ok(out)
    }
}

/// Symmetrized enumerator of an arbitrary list of words of length `n`.
pub fn symmetrized_we_of_words<'a>(
    n: usize,
    words: impl IntoIterator<Item = &'a [u32]>,
) -> SymmetrizedWe {
    let mut counts: HashMap<SymbolCounts, u128> = HashMap::new();
    for w in words {
        debug_assert_eq!(w.len(), n);
        *counts.entry(SymbolCounts::of(w)).or_default() += 1;
    }
    SymmetrizedWe::from_counts(n, counts)
}

/// Symmetrized enumerator by enumerating the code.
pub fn symmetrized_we(code: &LinearZCode) -> Result<SymmetrizedWe> {
    let mut counts: HashMap<SymbolCounts, u128> = HashMap::new();
    code.for_each_word(|w| *counts.entry(SymbolCounts::of(w)).or_default() += 1)?;
    Ok(SymmetrizedWe::from_counts(code.len(), counts))
}

/// Symmetrized enumerator of `ker check` without enumerating the kernel.
///
/// Dynamic programming over coordinates; the state is the partial syndrome
/// together with the zero/odd counts so far.
pub fn symmetrized_we_of_kernel(check: &ZMatrix, budget: u64) -> Result<SymmetrizedWe> {
    let md = check.modulus();
    let q = md.two_m() as u64;
    let s = check.n_rows();
    let n = check.n_cols();
    if space_size(q, s, budget).is_none() {
        return Err(Error::budget("syndrome DP", format!("{q}^{s}"), budget));
    }
    let encode = |syn: &[u32]| syn.iter().fold(0u64, |acc, &x| acc * q + x as u64);
    let cols = check.columns();
    // (syndrome, zeros, odds) -> count
    let mut states: HashMap<(u64, usize, usize), u128> = HashMap::new();
    states.insert((0, 0, 0), 1);
    let mut syn_cache: HashMap<u64, Vec<u32>> = HashMap::new();
    syn_cache.insert(0, vec![0; s]);
    for col in &cols {
        let mut next: HashMap<(u64, usize, usize), u128> = HashMap::with_capacity(states.len() * 2);
        let mut next_cache: HashMap<u64, Vec<u32>> = HashMap::new();
        for (&(code, zeros, odds), &count) in &states {
            let syn = &syn_cache[&code];
            for x in 0..md.two_m() {
                let new_syn: Vec<u32> = syn
                    .iter()
                    .zip(col)
                    .map(|(&a, &c)| md.add(a, md.mul(x, c)))
                    .collect();
                let key = encode(&new_syn);
                let (z, o) = match x {
                    0 => (zeros + 1, odds),
                    x if x % 2 == 1 => (zeros, odds + 1),
                    _ => (zeros, odds),
                };
                *next.entry((key, z, o)).or_default() += count;
                next_cache.entry(key).or_insert(new_syn);
            }
        }
        states = next;
        syn_cache = next_cache;
    }
    let mut counts: HashMap<SymbolCounts, u128> = HashMap::new();
    for ((code, zero, odd), count) in states {
        if code == 0 {
            let key = SymbolCounts {
                zero,
                odd,
                even: n - zero - odd,
            };
            *counts.entry(key).or_default() += count;
        }
    }
    Ok(SymmetrizedWe::from_counts(n, counts))
}

/// `(1/divisor)·W(X+Y, X-Y)`, coefficient-exact.
pub fn macwilliams_binary(we: &HammingWe, divisor: &BigUint) -> Result<HammingWe> {
    let l = we.length();
    let binom = binomials(l);
    let mut out = vec![BigInt::zero(); l + 1];
    for (w, a) in we.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // (X+Y)^{L-w} (X-Y)^w
        for i in 0..=w {
            let sign = if i % 2 == 1 { -1 } else { 1 };
            let left = &binom[w][i] * BigInt::from(sign);
            for j in 0..=(l - w) {
                out[i + j] += a * &left * &binom[l - w][j];
            }
        }
    }
    HammingWe::new(out).div_exact(&BigInt::from_biguint(Sign::Plus, divisor.clone()))
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Which kind of extended perfect class a partition member is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassCase {
    ContainsZero,
    OddWeight,
    EvenNoZero,
}

impl ClassCase {
    pub fn of_index(j: usize) -> Self {
        match j {
            0 => ClassCase::ContainsZero,
            j if j % 2 == 1 => ClassCase::OddWeight,
            _ => ClassCase::EvenNoZero,
        }
    }
}

/// The transformed enumerator `(1/|H|)·W_H(X+Y, X-Y)` of an extended
/// 1-perfect code of length `m`, by case:
/// `X^m + Y^m + (2m-2)(XY)^{m/2}`, `X^m - Y^m`, `X^m + Y^m - 2(XY)^{m/2}`.
pub fn class_transform_closed_form(m: usize, case: ClassCase) -> Result<HammingWe> {
    if m < 2 || !m.is_power_of_two() {
        return Err(Error::OutOfRange(format!(
            "m = {m}, need a power of two >= 2"
        )));
    }
    let mut c = vec![BigInt::zero(); m + 1];
    c[0] = BigInt::one();
    match case {
        ClassCase::ContainsZero => {
            c[m] = BigInt::one();
            c[m / 2] += BigInt::from(2 * m as i64 - 2);
        }
        ClassCase::OddWeight => c[m] = BigInt::from(-1),
        ClassCase::EvenNoZero => {
            c[m] = BigInt::one();
            c[m / 2] -= BigInt::from(2);
        }
    }
    Ok(HammingWe::new(c))
}

/// `W_{φ(C)}` from the symmetrized enumerator of `C⊥` over `Z_{2^k}`:
/// substitute the three closed forms for `X, Z, T` and divide by `|C⊥|`.
pub fn carlet_transform(sw: &SymmetrizedWe, k: u32, card_dual: &BigUint) -> Result<HammingWe> {
    let m = 1usize << (Modulus::power_of_two(k)?.require_k()? - 1);
    let px = class_transform_closed_form(m, ClassCase::ContainsZero)?;
    let pz = class_transform_closed_form(m, ClassCase::OddWeight)?;
    let pt = class_transform_closed_form(m, ClassCase::EvenNoZero)?;
    sw.substitute(&px, &pz, &pt)?
        .div_exact(&BigInt::from_biguint(Sign::Plus, card_dual.clone()))
}

/// `W_{Φ(C)} = SW_C(W_{H_0}, W_{H_1}, W_{H_2})`.
pub fn compose_sw(
    sw: &SymmetrizedWe,
    wh0: &HammingWe,
    wh1: &HammingWe,
    wh2: &HammingWe,
) -> Result<HammingWe> {
    sw.substitute(wh0, wh1, wh2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::{image, GrayMap, OrderedHadamard, PerfectPartition};
    use crate::zcode::DEFAULT_BUDGET;

    fn z(two_m: u32) -> Modulus {
        Modulus::new(two_m).unwrap()
    }

    fn ints(we: &HammingWe) -> Vec<i64> {
        we.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn hamming_enumerators() {
        let c = BinaryCode::parse_words(&["0000", "1111"]).unwrap();
        assert_eq!(ints(&hamming_we(&c)), [1, 0, 0, 0, 1]);
        let a = OrderedHadamard::sylvester(2).unwrap();
        let di =
            LinearZCode::from_generators(ZMatrix::from_ints(z(4), &[&[1, 1], &[0, 2]]).unwrap())
                .unwrap();
        assert_eq!(
            ints(&hamming_we(&image(&di, GrayMap::Phi(&a)).unwrap())),
            [1, 0, 6, 0, 1]
        );
    }

    #[test]
    fn extended_hamming_8() {
        // kernel of [1^8; position bits] over GF(2) by brute force
        let words: Vec<_> = (0u64..256)
            .filter(|&w| {
                w.count_ones() % 2 == 0
                    && (0..8).filter(|y| (w >> y) & 1 == 1).fold(0, |a, y| a ^ y) == 0
            })
            .map(|w| crate::bits::BitWord::from_u64(w, 8))
            .collect();
        let c = BinaryCode::new(8, words).unwrap();
        assert_eq!(ints(&hamming_we(&c)), [1, 0, 0, 0, 14, 0, 0, 0, 1]);
    }

    #[test]
    fn symmetrized_examples() {
        let zero = LinearZCode::zero(z(8), 3);
        let sw = symmetrized_we(&zero).unwrap();
        assert_eq!(sw.coeff(3, 0, 0), BigUint::from(1u8));
        assert_eq!(sw.mass(), BigUint::from(1u8));

        let check = ZMatrix::from_ints(z(8), &[&[1, 1], &[0, 4]]).unwrap();
        let hi = LinearZCode::from_check(check.clone());
        let sw = symmetrized_we(&hi).unwrap();
        assert_eq!(sw.coeff(2, 0, 0), BigUint::from(1u8));
        assert_eq!(sw.coeff(0, 0, 2), BigUint::from(3u8));
        assert_eq!(sw.coeffs().len(), 2);
        assert_eq!(
            symmetrized_we_of_kernel(&check, DEFAULT_BUDGET).unwrap(),
            sw
        );

        let di = LinearZCode::from_generators(check).unwrap();
        assert_eq!(symmetrized_we(&di).unwrap().mass(), BigUint::from(16u8));
    }

    #[test]
    fn macwilliams_examples() {
        let two = BigUint::from(2u8);
        let rep2 = HammingWe::from_i64(&[1, 0, 1]);
        assert_eq!(macwilliams_binary(&rep2, &two).unwrap(), rep2);
        let rep4 = HammingWe::from_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(
            ints(&macwilliams_binary(&rep4, &two).unwrap()),
            [1, 0, 6, 0, 1]
        );
        let full1 = HammingWe::from_i64(&[1, 1]);
        assert_eq!(ints(&macwilliams_binary(&full1, &two).unwrap()), [1, 0]);
        assert!(matches!(
            macwilliams_binary(&rep4, &BigUint::from(3u8)),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            ints(&class_transform_closed_form(4, ClassCase::ContainsZero).unwrap()),
            [1, 0, 6, 0, 1]
        );
        assert_eq!(
            ints(&class_transform_closed_form(4, ClassCase::OddWeight).unwrap()),
            [1, 0, 0, 0, -1]
        );
        assert_eq!(
            ints(&class_transform_closed_form(4, ClassCase::EvenNoZero).unwrap()),
            [1, 0, -2, 0, 1]
        );
        assert!(class_transform_closed_form(6, ClassCase::OddWeight).is_err());
        assert!(class_transform_closed_form(1, ClassCase::OddWeight).is_err());
    }

    fn sw_from(n: usize, entries: &[((usize, usize, usize), u64)]) -> SymmetrizedWe {
        SymmetrizedWe::new(
            n,
            entries
                .iter()
                .map(|&((zero, odd, even), c)| (SymbolCounts { zero, odd, even }, BigUint::from(c)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn carlet_small_cases() {
        // C = 0 in Z_4, C⊥ = Z_4
        let sw = sw_from(1, &[((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), 1)]);
        assert_eq!(
            ints(&carlet_transform(&sw, 2, &BigUint::from(4u8)).unwrap()),
            [1, 0, 0]
        );
        // C = Z_4, C⊥ = 0
        let sw = sw_from(1, &[((1, 0, 0), 1)]);
        assert_eq!(
            ints(&carlet_transform(&sw, 2, &BigUint::from(1u8)).unwrap()),
            [1, 2, 1]
        );
        // C = {0, 2}, C⊥ = {0, 2}
        let sw = sw_from(1, &[((1, 0, 0), 1), ((0, 0, 1), 1)]);
        assert_eq!(
            ints(&carlet_transform(&sw, 2, &BigUint::from(2u8)).unwrap()),
            [1, 0, 1]
        );
    }

    #[test]
    fn compose_small_cases() {
        let p = PerfectPartition::standard(3).unwrap();
        let w: Vec<HammingWe> = (0..3).map(|j| hamming_we(&p.class(j).unwrap())).collect();
        let sw = sw_from(2, &[((2, 0, 0), 1)]);
        assert_eq!(
            compose_sw(&sw, &w[0], &w[1], &w[2]).unwrap(),
            w[0].mul(&w[0])
        );
        let sw = sw_from(1, &[((0, 1, 0), 1)]);
        let out = compose_sw(&sw, &w[0], &w[1], &w[2]).unwrap();
        assert_eq!(ints(&out), [0, 1, 0, 1, 0]);
        assert!(compose_sw(&sw, &w[0], &HammingWe::from_i64(&[1, 1]), &w[2]).is_err());
    }

    #[test]
    fn display() {
        let p = class_transform_closed_form(4, ClassCase::EvenNoZero).unwrap();
        assert_eq!(p.to_string(), "X^4 - 2X^2Y^2 + Y^4");
        assert_eq!(HammingWe::from_i64(&[0, 0]).to_string(), "0");
    }
}
