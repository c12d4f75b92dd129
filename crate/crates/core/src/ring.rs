//! Arithmetic, weights and distances on `Z_2m` and `Z_2m^n`.
//!
//! Residues are plain `u32` values kept reduced to `[0, 2m)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest supported ring size.
pub const MAX_RING_SIZE: u32 = 1 << 16;

/// The ring `Z_2m`, `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus {
    two_m: u32,
}

impl Modulus {
    pub fn new(two_m: u32) -> Result<Self> {
        if two_m < 4 || two_m % 2 != 0 || two_m > MAX_RING_SIZE {
            return Err(Error::InvalidModulus(two_m as u64));
        }
        Ok(Modulus { two_m })
    }

    /// `Z_{2^k}`.
    pub fn power_of_two(k: u32) -> Result<Self> {
        if !(2..=16).contains(&k) {
            return Err(Error::OutOfRange(format!("k = {k}, need 2 <= k <= 16")));
        }
        Modulus::new(1 << k)
    }

    pub fn two_m(self) -> u32 {
        self.two_m
    }

    pub fn m(self) -> u32 {
        self.two_m / 2
    }

    /// `k` with `2m = 2^k`, if the ring size is a power of two.
    pub fn k(self) -> Option<u32> {
        self.two_m
            .is_power_of_two()
            .then(|| self.two_m.trailing_zeros())
    }

    pub fn require_k(self) -> Result<u32> {
        self.k().ok_or(Error::NotPowerOfTwo(self.two_m))
    }

    /// Factor by which [`wt_star`] values are scaled. It is 1 when `m` is even
    /// and 2 when `m` is odd, where `m/2` would not be an integer.
    pub fn star_scale(self) -> u64 {
        if self.m() % 2 == 0 {
            1
        } else {
            2
        }
    }

    pub fn contains(self, x: u64) -> bool {
        x < self.two_m as u64
    }

    pub fn check(self, x: u64) -> Result<u32> {
        if self.contains(x) {
            Ok(x as u32)
        } else {
            Err(Error::ResidueOutOfRange {
                value: x,
                modulus: self.two_m,
            })
        }
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.two_m as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.two_m as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.two_m as u64 - b as u64) % self.two_m as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.two_m as u64) as u32
    }

    pub fn is_unit(self, x: u32) -> bool {
        x.gcd(&self.two_m) == 1
    }

    /// All units of the ring in increasing order.
    pub fn units(self) -> Vec<u32> {
        (1..self.two_m).filter(|&x| self.is_unit(x)).collect()
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.two_m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Homogeneous-type weight `wt*`.
    Star,
    /// `wt⋄`: 1 on odd residues, 2 on nonzero even residues.
    Diamond,
}

impl Metric {
    pub fn weight(self, x: u32, modulus: Modulus) -> u64 {
        match self {
            Metric::Star => wt_star(x, modulus),
            Metric::Diamond => wt_diamond(x, modulus),
        }
    }

    pub fn word_weight(self, symbols: &[u32], modulus: Modulus) -> u64 {
        symbols.iter().map(|&x| self.weight(x, modulus)).sum()
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Star => f.write_str("star"),
            Metric::Diamond => f.write_str("diamond"),
        }
    }
}

/// `wt*(x)`: 0 at 0, `m` at `m`, `m/2` elsewhere, multiplied by
/// [`Modulus::star_scale`].
pub fn wt_star(x: u32, modulus: Modulus) -> u64 {
    debug_assert!(modulus.contains(x as u64));
    let m = modulus.m() as u64;
    let scale = modulus.star_scale();
    if x == 0 {
        0
    } else if x as u64 == m {
        m * scale
    } else {
        m * scale / 2
    }
}

pub fn wt_diamond(x: u32, modulus: Modulus) -> u64 {
    debug_assert!(modulus.contains(x as u64));
    if x == 0 {
        0
    } else if x % 2 == 1 {
        1
    } else {
        2
    }
}

pub fn unit_inverse(x: u32, modulus: Modulus) -> Result<u32> {
    let n = modulus.two_m() as i64;
    let e = (x as i64).extended_gcd(&n);
    if e.gcd != 1 {
        return Err(Error::NotAUnit {
            value: x,
            modulus: modulus.two_m(),
        });
    }
    Ok(modulus.reduce(e.x))
}

/// Smallest `t >= 1` with `t·x = 0`.
pub fn additive_order(x: u32, modulus: Modulus) -> u32 {
    modulus.two_m() / x.gcd(&modulus.two_m())
}

/// A word of `Z_2m^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingWord {
    modulus: Modulus,
    symbols: Vec<u32>,
}

impl RingWord {
    pub fn new(modulus: Modulus, symbols: Vec<u32>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Invalid("ring words must have length >= 1".into()));
        }
        for &s in &symbols {
            modulus.check(s as u64)?;
        }
        Ok(RingWord { modulus, symbols })
    }

    /// Build from arbitrary integers, reducing each modulo `2m`.
    pub fn from_ints(modulus: Modulus, values: &[i64]) -> Result<Self> {
        RingWord::new(modulus, values.iter().map(|&v| modulus.reduce(v)).collect())
    }

    pub(crate) fn from_raw(modulus: Modulus, symbols: Vec<u32>) -> Self {
        debug_assert!(symbols.iter().all(|&s| modulus.contains(s as u64)));
        RingWord { modulus, symbols }
    }

    pub fn zero(modulus: Modulus, n: usize) -> Self {
        RingWord::from_raw(modulus, vec![0; n])
    }

    pub fn all_ones(modulus: Modulus, n: usize) -> Self {
        RingWord::from_raw(modulus, vec![1; n])
    }

    /// `e_i`.
    pub fn unit_vector(modulus: Modulus, n: usize, i: usize) -> Self {
        let mut symbols = vec![0; n];
        symbols[i] = 1;
        RingWord::from_raw(modulus, symbols)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    pub fn weight(&self, metric: Metric) -> u64 {
        metric.word_weight(&self.symbols, self.modulus)
    }

    fn compatible(&self, other: &RingWord) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus.two_m(),
                found: other.modulus.two_m(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingWord) -> Result<RingWord> {
        self.compatible(other)?;
        let m = self.modulus;
        Ok(RingWord::from_raw(
            m,
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| m.add(a, b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &RingWord) -> Result<RingWord> {
        self.compatible(other)?;
        let m = self.modulus;
        Ok(RingWord::from_raw(
            m,
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| m.sub(a, b))
                .collect(),
        ))
    }

    pub fn scale(&self, c: u32) -> RingWord {
        let m = self.modulus;
        RingWord::from_raw(m, self.symbols.iter().map(|&a| m.mul(a, c)).collect())
    }

    /// Coordinatewise product `z ∘ x`.
    pub fn hadamard_product(&self, other: &RingWord) -> Result<RingWord> {
        self.compatible(other)?;
        let m = self.modulus;
        Ok(RingWord::from_raw(
            m,
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(&a, &b)| m.mul(a, b))
                .collect(),
        ))
    }

    /// Inner product modulo `2m`.
    pub fn dot(&self, other: &RingWord) -> Result<u32> {
        self.compatible(other)?;
        Ok(dot(self.modulus, &self.symbols, &other.symbols))
    }

    pub fn additive_order(&self) -> u32 {
        let two_m = self.modulus.two_m();
        let g = self.symbols.iter().fold(two_m, |g, &s| g.gcd(&s));
        two_m / g
    }

    /// Parity of the coordinate sum, i.e. the side of the bipartite `d⋄` graph.
    pub fn is_odd(&self) -> bool {
        self.symbols.iter().map(|&s| s as u64).sum::<u64>() % 2 == 1
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn dot(modulus: Modulus, a: &[u32], b: &[u32]) -> u32 {
    let n = modulus.two_m() as u64;
    (a.iter()
        .zip(b)
        .map(|(&x, &y)| x as u64 * y as u64 % n)
        .sum::<u64>()
        % n) as u32
}

pub fn dist(u: &RingWord, v: &RingWord, metric: Metric) -> Result<u64> {
    Ok(v.sub(u)?.weight(metric))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(two_m: u32) -> Modulus {
        Modulus::new(two_m).unwrap()
    }

    fn word(two_m: u32, s: &[u32]) -> RingWord {
        RingWord::new(z(two_m), s.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        for bad in [0, 1, 2, 3, 7, 65538] {
            assert!(Modulus::new(bad).is_err(), "{bad}");
        }
        assert_eq!(z(8).k(), Some(3));
        assert_eq!(z(24).k(), None);
        assert!(matches!(z(24).require_k(), Err(Error::NotPowerOfTwo(24))));
    }

    #[test]
    fn star_weight_values() {
        assert_eq!(wt_star(0, z(8)), 0);
        assert_eq!(wt_star(4, z(8)), 4);
        assert_eq!(wt_star(3, z(8)), 2);
        assert_eq!(wt_star(12, z(24)), 12);
        assert_eq!(wt_star(5, z(24)), 6);
    }

    #[test]
    fn odd_m_star_weight_is_doubled() {
        // Z_6: m = 3, wt* takes the value 3/2 off {0, 3}
        let z6 = z(6);
        assert_eq!(z6.star_scale(), 2);
        assert_eq!(wt_star(3, z6), 6);
        assert_eq!(wt_star(1, z6), 3);
    }

    #[test]
    fn diamond_weight_values() {
        assert_eq!(wt_diamond(0, z(8)), 0);
        assert_eq!(wt_diamond(7, z(8)), 1);
        assert_eq!(wt_diamond(6, z(24)), 2);
    }

    #[test]
    fn distances() {
        assert_eq!(
            dist(&word(8, &[0, 0]), &word(8, &[0, 0]), Metric::Star).unwrap(),
            0
        );
        assert_eq!(
            dist(&word(8, &[0, 0]), &word(8, &[6, 2]), Metric::Diamond).unwrap(),
            4
        );
        assert_eq!(
            dist(&word(4, &[1, 1]), &word(4, &[2, 2]), Metric::Star).unwrap(),
            2
        );
        assert!(dist(&word(4, &[1, 1]), &word(4, &[2]), Metric::Star).is_err());
        assert!(dist(&word(4, &[1, 1]), &word(8, &[2, 2]), Metric::Star).is_err());
    }

    #[test]
    fn inverses_and_orders() {
        assert_eq!(unit_inverse(1, z(8)).unwrap(), 1);
        assert_eq!(unit_inverse(3, z(8)).unwrap(), 3);
        assert_eq!(unit_inverse(5, z(24)).unwrap(), 5);
        assert!(matches!(unit_inverse(4, z(8)), Err(Error::NotAUnit { .. })));
        assert_eq!(additive_order(0, z(8)), 1);
        assert_eq!(additive_order(4, z(8)), 2);
        assert_eq!(additive_order(1, z(8)), 8);
    }

    #[test]
    fn unit_inverse_matches_multiplication_table() {
        for two_m in [4, 8, 24, 6, 12] {
            let md = z(two_m);
            for x in md.units() {
                let brute = (0..two_m).find(|&y| md.mul(x, y) == 1).unwrap();
                assert_eq!(unit_inverse(x, md).unwrap(), brute);
                assert_eq!(unit_inverse(brute, md).unwrap(), x);
            }
        }
    }

    #[test]
    fn order_matches_iteration() {
        for two_m in [4, 8, 24] {
            let md = z(two_m);
            for x in 0..two_m {
                let mut t = 1;
                while md.mul(t, x) != 0 {
                    t += 1;
                }
                assert_eq!(additive_order(x, md), t);
            }
        }
    }

    #[test]
    fn weights_are_symmetric() {
        for two_m in [4, 8, 16, 24] {
            let md = z(two_m);
            for x in 0..two_m {
                assert_eq!(wt_star(x, md), wt_star(md.neg(x), md));
                assert_eq!(wt_diamond(x, md), wt_diamond(md.neg(x), md));
                assert!(wt_diamond(x, md) <= 2);
                if md.k().is_some() {
                    assert_eq!(wt_star(x, md) == md.m() as u64, x == md.m());
                }
            }
        }
    }

    #[test]
    fn word_helpers() {
        let w = word(8, &[1, 2, 4]);
        assert_eq!(w.additive_order(), 8);
        assert_eq!(word(8, &[2, 4]).additive_order(), 4);
        assert!(w.is_odd());
        assert_eq!(w.to_string(), "(1,2,4)");
        assert!(RingWord::new(z(8), vec![8]).is_err());
        assert!(RingWord::new(z(8), vec![]).is_err());
        assert_eq!(
            RingWord::from_ints(z(8), &[-1, 9]).unwrap().symbols(),
            &[7, 1]
        );
    }
}
