//! Verification and classification: 1'-perfect tests, binary parameter
//! checks, the duality pipeline, canonical forms of `(n, n2^k, n2^{k-2})*`
//! codes and the census of linear isometries.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bits::{BinaryCode, BitWord};
use crate::constructions::{build_bi, code_di, code_hi, TypeProfile};
use crate::error::{Error, Result};
use crate::gray::{
    image, member_of_phi_cap_image, phi_cap_image_size, GrayMap, OrderedHadamard, PerfectPartition,
};
use crate::ring::{unit_inverse, Metric, Modulus, RingWord};
use crate::weights::{
    compose_sw, hamming_we, macwilliams_binary, symmetrized_we, symmetrized_we_of_kernel,
};
use crate::zcode::{
    lightest_kernel_word, odometer_step, row_canonical_rows, space_size, syndrome_image_size,
    LinearZCode, ZMatrix,
};

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Every vertex of the relevant space was checked.
    Definition,
    /// Cardinality certificate plus a bounded low-weight search.
    Criterion,
    /// Search limited to words up to some weight.
    Bounded,
    /// Full enumeration of the objects involved.
    Exhaustive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Definition => "definition",
            Method::Criterion => "criterion",
            Method::Bounded => "bounded",
            Method::Exhaustive => "exhaustive",
        })
    }
}

/// Outcome of one verification, printable as `key: value` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub verdict: bool,
    pub method: Method,
    pub length: usize,
    pub cardinality: BigUint,
    pub distance: Option<u64>,
    pub witnesses: Vec<String>,
    pub details: Vec<(String, String)>,
}

impl VerificationReport {
    fn new(claim: impl Into<String>, method: Method, length: usize, cardinality: BigUint) -> Self {
        VerificationReport {
            claim: claim.into(),
            verdict: false,
            method,
            length,
            cardinality,
            distance: None,
            witnesses: Vec::new(),
            details: Vec::new(),
        }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.details.push((key.to_string(), value.to_string()));
    }

    pub fn detail(&self, key: &str) -> Option<&str> {
        self.details
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "method: {}", self.method)?;
        writeln!(f, "length: {}", self.length)?;
        writeln!(f, "cardinality: {}", self.cardinality)?;
        match self.distance {
            Some(d) => writeln!(f, "distance: {d}")?,
            None => writeln!(f, "distance: -")?,
        }
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        for (k, v) in &self.details {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

fn symbols_string(w: &[u32]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn mixed_index(w: &[u32], q: u64) -> usize {
    w.iter().fold(0u64, |acc, &x| acc * q + x as u64) as usize
}

/// Degree of the graph on `Z_2m^n` whose edges change one coordinate by an
/// odd residue.
pub fn diamond_degree(modulus: Modulus, n: usize) -> u64 {
    n as u64 * modulus.m() as u64
}

/// The 1'-perfect test straight from the definition: the code lies in the
/// even-sum part and every odd-sum word has exactly one codeword neighbor.
pub fn one_prime_perfect_definition(code: &LinearZCode) -> Result<VerificationReport> {
    let md = code.modulus();
    let n = code.len();
    let q = md.two_m() as u64;
    let size = space_size(q, n, code.budget())
        .ok_or_else(|| Error::budget("odd-word scan", format!("{q}^{n}"), code.budget()))?;
    let mut report = VerificationReport::new(
        "1'-perfect (definition)",
        Method::Definition,
        n,
        code.cardinality(),
    );
    report.note("modulus", q);
    report.note("degree", diamond_degree(md, n));

    let mut neighbors = vec![0u8; size as usize];
    let mut odd_codeword: Option<Vec<u32>> = None;
    let weights: Vec<u64> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
    code.for_each_word(|c| {
        if c.iter().map(|&x| x as u64).sum::<u64>() % 2 == 1 {
            if odd_codeword.is_none() {
                odd_codeword = Some(c.to_vec());
            }
            return;
        }
        let base = mixed_index(c, q) as u64;
        for (i, &ci) in c.iter().enumerate() {
            for o in (1..md.two_m()).step_by(2) {
                let moved = md.add(ci, o) as u64;
                let idx = base + moved * weights[i] - ci as u64 * weights[i];
                let slot = &mut neighbors[idx as usize];
                *slot = slot.saturating_add(1);
            }
        }
    })?;
    if let Some(c) = odd_codeword {
        report.witnesses.push(symbols_string(&c));
        report.note("failure", "codeword with odd coordinate sum");
        return Ok(report);
    }
    let bad = (0..size).into_par_iter().find_first(|&idx| {
        let mut rest = idx;
        let mut parity = 0;
        for _ in 0..n {
            parity ^= (rest % q) & 1;
            rest /= q;
        }
        parity == 1 && neighbors[idx as usize] != 1
    });
    match bad {
        None => report.verdict = true,
        Some(idx) => {
            let mut w = vec![0u32; n];
            let mut rest = idx;
            for i in (0..n).rev() {
                w[i] = (rest % q) as u32;
                rest /= q;
            }
            report.witnesses.push(symbols_string(&w));
            report.note(
                "failure",
                format!(
                    "odd word with {} codeword neighbors",
                    neighbors[idx as usize]
                ),
            );
        }
    }
    Ok(report)
}

/// The 1'-perfect test for `ker check` through the cardinality criterion:
/// the syndrome image has size `2·n·m`, and no nonzero kernel word has
/// `wt⋄ <= 3`.
pub fn one_prime_perfect_criterion(check: &ZMatrix, budget: u64) -> Result<VerificationReport> {
    let md = check.modulus();
    let n = check.n_cols();
    let q = BigUint::from(md.two_m());
    let image = syndrome_image_size(check, budget)?;
    let total = q.pow(n as u32);
    let cardinality = &total / image;
    let mut report =
        VerificationReport::new("1'-perfect (criterion)", Method::Criterion, n, cardinality);
    let r = diamond_degree(md, n);
    report.note("modulus", md.two_m());
    report.note("degree", r);
    report.note("syndrome_image", image);
    report.note("expected_image", 2 * r);
    let size_ok = image == 2 * r;
    let light = lightest_kernel_word(check, Metric::Diamond, 3);
    report.distance = light.as_ref().map(|w| Metric::Diamond.word_weight(w, md));
    report.note("distance_at_least_4", light.is_none());
    if let Some(w) = &light {
        report.witnesses.push(symbols_string(w));
    }
    if !size_ok {
        report.note("failure", "syndrome image size differs from 2r");
    }
    report.verdict = size_ok && light.is_none();
    Ok(report)
}

fn extended_perfect_size(len: usize) -> Option<BigUint> {
    if len == 0 {
        return None;
    }
    let total = BigUint::from(2u8).pow(len as u32);
    let denom = BigUint::from(2 * len);
    (&total % &denom).is_zero().then(|| total / denom)
}

/// Largest materialized code checked pairwise.
pub const PAIRWISE_MAX_WORDS: usize = 1 << 16;

/// `(L, 2^L/2L, 4)` check of an explicit code, distances checked pairwise.
pub fn is_extended_one_perfect(code: &BinaryCode) -> Result<VerificationReport> {
    let len = code.len();
    let mut report = VerificationReport::new(
        "extended 1-perfect",
        Method::Exhaustive,
        len,
        BigUint::from(code.cardinality()),
    );
    if code.cardinality() > PAIRWISE_MAX_WORDS {
        return Err(Error::budget(
            "pairwise distances",
            code.cardinality(),
            PAIRWISE_MAX_WORDS as u64,
        ));
    }
    let expected = extended_perfect_size(len);
    report.note(
        "expected_cardinality",
        expected.as_ref().map_or("-".to_string(), |e| e.to_string()),
    );
    let size_ok = expected.as_ref() == Some(&BigUint::from(code.cardinality()));
    let pair = code.min_distance_pair();
    report.distance = pair.map(|(d, _, _)| d as u64);
    let dist_ok = pair.is_none_or(|(d, _, _)| d >= 4);
    if let Some((d, i, j)) = pair.filter(|_| !dist_ok) {
        report.witnesses.push(code.words()[i].to_string());
        report.witnesses.push(code.words()[j].to_string());
        report.note("failure", format!("two codewords at distance {d}"));
    }
    if !size_ok {
        report.note("failure", "cardinality is not 2^L/2L");
    }
    report.verdict = size_ok && dist_ok;
    Ok(report)
}

/// `(L, 2^L/2L, 4)` check through a membership oracle: the cardinality is
/// given, and every odd-weight word of length `L` must have exactly one
/// neighbor in the code.
pub fn is_extended_one_perfect_oracle(
    len: usize,
    cardinality: &BigUint,
    member: impl Fn(&BitWord) -> bool + Sync,
    budget: u64,
) -> Result<VerificationReport> {
    let size = space_size(2, len, budget)
        .filter(|_| len < 64)
        .ok_or_else(|| Error::budget("odd-word scan", format!("2^{len}"), budget))?;
    let mut report = VerificationReport::new(
        "extended 1-perfect",
        Method::Definition,
        len,
        cardinality.clone(),
    );
    let expected = extended_perfect_size(len);
    let size_ok = expected.as_ref() == Some(cardinality);
    if !size_ok {
        report.note("failure", "cardinality is not 2^L/2L");
        return Ok(report);
    }
    let bad = (0..size).into_par_iter().find_first(|&v| {
        if v.count_ones() % 2 == 0 {
            return false;
        }
        let mut w = BitWord::from_u64(v, len);
        let mut hits = 0;
        for i in 0..len {
            w.flip(i);
            if member(&w) {
                hits += 1;
            }
            w.flip(i);
        }
        hits != 1
    });
    match bad {
        None => {
            report.verdict = true;
            report.distance = Some(4);
        }
        Some(v) => {
            report.witnesses.push(BitWord::from_u64(v, len).to_string());
            report.note("failure", "odd word without exactly one code neighbor");
        }
    }
    Ok(report)
}

/// `Φ(code)` is extended 1-perfect: materialized and checked pairwise when
/// small enough, otherwise scanned through the membership oracle.
pub fn phi_cap_extended_perfect(
    code: &LinearZCode,
    partition: &PerfectPartition,
) -> Result<VerificationReport> {
    let size = phi_cap_image_size(code, partition)?;
    if size <= PAIRWISE_MAX_WORDS as u128 {
        return is_extended_one_perfect(&image(code, GrayMap::PhiCap(partition))?);
    }
    let len = partition.m() * code.len();
    let check = code.check_matrix();
    is_extended_one_perfect_oracle(
        len,
        &BigUint::from(size),
        |w| member_of_phi_cap_image(w, check, partition).unwrap_or(false),
        code.budget(),
    )
}

/// `(L, 2L, L/2)` check; also records whether all distances lie in
/// `{L/2, L}`.
pub fn is_hadamard(code: &BinaryCode) -> VerificationReport {
    let len = code.len();
    let mut report = VerificationReport::new(
        "hadamard",
        Method::Exhaustive,
        len,
        BigUint::from(code.cardinality()),
    );
    let size_ok = code.cardinality() == 2 * len;
    let pair = code.min_distance_pair();
    report.distance = pair.map(|(d, _, _)| d as u64);
    let dist_ok = len % 2 == 0 && pair.is_some_and(|(d, _, _)| 2 * d as usize >= len);
    let set = code.distance_set();
    let two_distance = set
        .iter()
        .all(|&d| 2 * d as usize == len || d as usize == len);
    report.note("bound", len as f64 / 2.0);
    report.note(
        "distance_set",
        set.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    report.note("two_distance", two_distance);
    if !size_ok {
        report.note("failure", "cardinality is not 2L");
    }
    if let Some((d, i, j)) = pair.filter(|_| !dist_ok) {
        report.witnesses.push(code.words()[i].to_string());
        report.witnesses.push(code.words()[j].to_string());
        report.note("failure", format!("two codewords at distance {d}"));
    }
    report.verdict = size_ok && dist_ok;
    report
}

/// Largest `n` for which the symmetrized enumerator of `H_I` is taken by
/// enumeration; beyond it the syndrome recursion is used.
pub const SW_ENUMERATION_MAX_N: usize = 4;

/// `W_{φ(D_I)} = (1/|Φ(H_I)|)·W_{Φ(H_I)}(X+Y, X-Y)`, both sides computed
/// independently and compared coefficient by coefficient.
pub fn verify_duality(profile: &TypeProfile) -> Result<VerificationReport> {
    let k = profile.k();
    let di = code_di(profile)?;
    let hi = code_hi(profile)?;
    let hadamard = OrderedHadamard::sylvester(k)?;
    let partition = PerfectPartition::standard(k)?;
    let lhs = hamming_we(&image(&di, GrayMap::Phi(&hadamard))?);

    let (sw, route) = if profile.n() <= SW_ENUMERATION_MAX_N {
        (symmetrized_we(&hi)?, "enumeration")
    } else {
        (
            symmetrized_we_of_kernel(hi.check_matrix(), hi.budget())?,
            "syndrome-dp",
        )
    };
    let wh: Vec<_> = (0..3)
        .map(|j| partition.class(j).map(|c| hamming_we(&c)))
        .collect::<Result<_>>()?;
    let w_cap = compose_sw(&sw, &wh[0], &wh[1], &wh[2])?;
    let card = BigUint::from(phi_cap_image_size(&hi, &partition)?);
    if w_cap.mass() != BigInt::from(card.clone()) {
        return Err(Error::SoundnessAlarm(format!(
            "enumerator mass {} differs from |Φ(H_I)| = {card}",
            w_cap.mass()
        )));
    }
    let rhs = macwilliams_binary(&w_cap, &card)?;

    let mut report = VerificationReport::new(
        format!("formal duality of φ(D_I) and Φ(H_I), k={k}, I={profile}"),
        Method::Exhaustive,
        lhs.length(),
        di.cardinality(),
    );
    report.note("sw_route", route);
    report.note("phi_cap_cardinality", &card);
    report.note("lhs", &lhs);
    report.note("rhs", &rhs);
    report.verdict = lhs == rhs;
    if !report.verdict {
        for w in 0..=lhs.length() {
            if lhs.coeff(w) != rhs.coeff(w) {
                report
                    .witnesses
                    .push(format!("Y^{w}: {} vs {}", lhs.coeff(w), rhs.coeff(w)));
            }
        }
    }
    Ok(report)
}

/// The lexicographically smallest codeword with every coordinate odd.
pub fn find_unit_codeword(code: &LinearZCode) -> Result<Option<RingWord>> {
    let mut best: Option<Vec<u32>> = None;
    code.for_each_word(|w| {
        if w.iter().all(|&x| x % 2 == 1) && best.as_deref().is_none_or(|b| w < b) {
            best = Some(w.to_vec());
        }
    })?;
    Ok(best.map(|w| RingWord::new(code.modulus(), w).expect("codeword symbols are in range")))
}

/// `(I, z, π)` with `apply_monomial(code_di(I), z, π) = code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub profile: TypeProfile,
    pub z: RingWord,
    pub perm: Vec<usize>,
}

/// Whether `code` has parameters `(n, n·2^k, n·2^{k-2})*` with `n` a power
/// of two.
pub fn has_di_parameters(code: &LinearZCode) -> Result<bool> {
    let k = code.modulus().require_k()?;
    let n = code.len();
    if !n.is_power_of_two() {
        return Ok(false);
    }
    if code.cardinality() != BigUint::from(n) << k {
        return Ok(false);
    }
    let d = code.min_distance(Metric::Star)?;
    Ok(d == Some((n as u64) << (k - 2)))
}

/// Recover the profile and monomial transform of a code equivalent to some
/// `D_I`.
pub fn canonicalize(code: &LinearZCode) -> Result<Canonical> {
    let md = code.modulus();
    let k = md.require_k()?;
    let n = code.len();
    if !has_di_parameters(code)? {
        return Err(Error::ParameterMismatch(format!(
            "code of length {n} and size {} is not an (n, n2^k, n2^(k-2))* code",
            code.cardinality()
        )));
    }
    let c = find_unit_codeword(code)?.ok_or_else(|| {
        Error::SoundnessAlarm("an (n, n2^k, n2^(k-2))* code without an all-odd codeword".into())
    })?;
    let inv: Vec<u32> = c
        .symbols()
        .iter()
        .map(|&x| unit_inverse(x, md))
        .collect::<Result<_>>()?;
    let identity: Vec<usize> = (0..n).collect();
    let scaled = code.apply_monomial(&RingWord::new(md, inv)?, &identity)?;

    // 1̄ first, then a canonical basis of the codewords vanishing at 0
    let rest: Vec<Vec<u32>> = scaled
        .generators()
        .rows()
        .iter()
        .map(|g| g.iter().map(|&x| md.sub(x, g[0])).collect())
        .collect();
    let (rest, orders) = if rest.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        row_canonical_rows(md, rest)?
    };
    let mut counts = vec![0u32; k as usize];
    let mut layered: Vec<(u32, Vec<u32>)> = Vec::new();
    for (row, &ord) in rest.into_iter().zip(&orders) {
        let j = ord.trailing_zeros();
        counts[j as usize - 1] += 1;
        layered.push((ord, row));
    }
    layered.sort_by_key(|(ord, _)| *ord);
    let profile = TypeProfile::new(k, counts)?;
    if profile.n() != n {
        return Err(Error::SoundnessAlarm(format!(
            "recovered profile {profile} has n = {}, code length {n}",
            profile.n()
        )));
    }

    let bi = build_bi(&profile);
    let position: HashMap<Vec<u32>, usize> = bi
        .columns()
        .into_iter()
        .enumerate()
        .map(|(i, col)| (col, i))
        .collect();
    let mut perm = Vec::with_capacity(n);
    for i in 0..n {
        let col: Vec<u32> = std::iter::once(1)
            .chain(layered.iter().map(|(_, row)| row[i]))
            .collect();
        let j = *position.get(&col).ok_or_else(|| {
            Error::SoundnessAlarm(format!(
                "column {i} of the reduced basis is not a column of B_I"
            ))
        })?;
        perm.push(j);
    }
    if perm.iter().collect::<HashSet<_>>().len() != n {
        return Err(Error::SoundnessAlarm(
            "reduced basis has repeated columns".into(),
        ));
    }
    let out = Canonical {
        profile,
        z: c,
        perm,
    };
    let rebuilt = code_di(&out.profile)?.apply_monomial(&out.z, &out.perm)?;
    if !rebuilt.same_code(code) {
        return Err(Error::SoundnessAlarm(
            "canonical transform does not reproduce the code".into(),
        ));
    }
    Ok(out)
}

/// Every linear code of `Z_2m^n`, each once. Every subgroup needs at most
/// `n` generators, so all `n`-tuples of words are tried.
pub fn all_linear_codes(modulus: Modulus, n: usize, budget: u64) -> Result<Vec<LinearZCode>> {
    let q = modulus.two_m() as u64;
    let words = space_size(q, n, budget)
        .ok_or_else(|| Error::budget("code census", format!("{q}^{n}"), budget))?;
    space_size(words, n, budget)
        .ok_or_else(|| Error::budget("code census", format!("{words}^{n}"), budget))?;
    let all_words: Vec<Vec<u32>> = {
        let mut out = Vec::with_capacity(words as usize);
        let mut x = vec![0u32; n];
        for _ in 0..words {
            out.push(x.clone());
            odometer_step(&mut x, q as u32);
        }
        out
    };
    let mut seen: HashSet<BTreeSet<Vec<u32>>> = HashSet::new();
    let mut out = Vec::new();
    let mut pick = vec![0u32; n];
    for _ in 0..words.pow(n as u32) {
        let gens: Vec<Vec<u32>> = pick
            .iter()
            .map(|&i| all_words[i as usize].clone())
            .collect();
        let code = LinearZCode::from_generators(ZMatrix::new(modulus, n, gens)?)?;
        let set: BTreeSet<Vec<u32>> = code.enumerate_raw()?.into_iter().collect();
        if seen.insert(set) {
            out.push(code);
        }
        odometer_step(&mut pick, words as u32);
    }
    Ok(out)
}

/// A linear bijection `x ↦ x·M` of `Z_2m^n` preserving a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearIsometry {
    pub matrix: Vec<Vec<u32>>,
    /// `(z, π)` with `x·M = z ∘ π(x)`, when `M` is monomial.
    pub monomial: Option<(RingWord, Vec<usize>)>,
}

#[derive(Debug, Clone)]
pub struct IsometryCensus {
    pub n: usize,
    pub modulus: Modulus,
    pub metric: Metric,
    pub isometries: Vec<LinearIsometry>,
}

impl IsometryCensus {
    /// `n!·|units|^n`.
    pub fn monomial_count(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        fact * (self.modulus.units().len() as u64).pow(self.n as u32)
    }

    pub fn all_monomial(&self) -> bool {
        self.isometries.iter().all(|g| g.monomial.is_some())
    }

    pub fn non_monomial(&self) -> impl Iterator<Item = &LinearIsometry> {
        self.isometries.iter().filter(|g| g.monomial.is_none())
    }
}

fn as_monomial(m: &[Vec<u32>], modulus: Modulus) -> Option<(RingWord, Vec<usize>)> {
    let n = m.len();
    let mut perm = vec![usize::MAX; n];
    let mut z = vec![0u32; n];
    for (i, row) in m.iter().enumerate() {
        let nz: Vec<usize> = (0..n).filter(|&j| row[j] != 0).collect();
        if nz.len() != 1 || !modulus.is_unit(row[nz[0]]) || perm[nz[0]] != usize::MAX {
            return None;
        }
        perm[nz[0]] = i;
        z[nz[0]] = row[nz[0]];
    }
    Some((RingWord::new(modulus, z).ok()?, perm))
}

/// All `n×n` matrices over `Z_2m` whose action preserves `metric`.
pub fn isometry_census(
    n: usize,
    modulus: Modulus,
    metric: Metric,
    budget: u64,
) -> Result<IsometryCensus> {
    let q = modulus.two_m() as u64;
    let count = space_size(q, n * n, budget)
        .ok_or_else(|| Error::budget("matrix census", format!("{q}^{}", n * n), budget))?;
    let words: Vec<(Vec<u32>, u64)> = {
        let total = q.pow(n as u32);
        let mut out = Vec::with_capacity(total as usize);
        let mut x = vec![0u32; n];
        for _ in 0..total {
            out.push((x.clone(), metric.word_weight(&x, modulus)));
            odometer_step(&mut x, q as u32);
        }
        out
    };
    let decode = |mut idx: u64| -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; n]; n];
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                m[i][j] = (idx % q) as u32;
                idx /= q;
            }
        }
        m
    };
    let mut found: Vec<(u64, Vec<Vec<u32>>)> = (0..count)
        .into_par_iter()
        .filter_map(|idx| {
            let m = decode(idx);
            let preserves = words.iter().all(|(x, wt)| {
                let y: Vec<u32> = (0..n)
                    .map(|j| (0..n).fold(0, |acc, i| modulus.add(acc, modulus.mul(x[i], m[i][j]))))
                    .collect();
                metric.word_weight(&y, modulus) == *wt
            });
            preserves.then_some((idx, m))
        })
        .collect();
    found.sort_by_key(|(idx, _)| *idx);
    let isometries = found
        .into_iter()
        .map(|(_, m)| LinearIsometry {
            monomial: as_monomial(&m, modulus),
            matrix: m,
        })
        .collect();
    Ok(IsometryCensus {
        n,
        modulus,
        metric,
        isometries,
    })
}

/// Apply a census entry to a word.
pub fn apply_matrix(m: &[Vec<u32>], x: &[u32], modulus: Modulus) -> Vec<u32> {
    let n = m.len();
    (0..n)
        .map(|j| (0..n).fold(0, |acc, i| modulus.add(acc, modulus.mul(x[i], m[i][j]))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zcode::DEFAULT_BUDGET;

    fn z(two_m: u32) -> Modulus {
        Modulus::new(two_m).unwrap()
    }

    fn profile(k: u32, c: &[u32]) -> TypeProfile {
        TypeProfile::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn definition_examples() {
        let r = one_prime_perfect_definition(&code_hi(&profile(3, &[1, 0, 0])).unwrap()).unwrap();
        assert!(r.verdict, "{r}");
        let r = one_prime_perfect_definition(&code_hi(&profile(2, &[0, 1])).unwrap()).unwrap();
        assert!(r.verdict, "{r}");
        let zero = LinearZCode::zero(z(8), 2);
        let r = one_prime_perfect_definition(&zero).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.detail("failure").unwrap().contains("0 codeword"));
    }

    #[test]
    fn definition_rejects_odd_codewords() {
        let code =
            LinearZCode::from_generators(ZMatrix::from_ints(z(4), &[&[1, 0]]).unwrap()).unwrap();
        let r = one_prime_perfect_definition(&code).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses, ["(1,0)"]);
    }

    #[test]
    fn criterion_examples() {
        let r = one_prime_perfect_criterion(&build_bi(&profile(3, &[1, 1, 0])), DEFAULT_BUDGET)
            .unwrap();
        assert!(r.verdict, "{r}");
        assert_eq!(r.detail("syndrome_image"), Some("64"));
        let r = one_prime_perfect_criterion(
            &ZMatrix::from_ints(z(8), &[&[1, 1]]).unwrap(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(!r.verdict);
    }

    #[test]
    fn extended_perfect_examples() {
        let p3 = PerfectPartition::standard(3).unwrap();
        let hi = code_hi(&profile(3, &[1, 0, 0])).unwrap();
        let img = image(&hi, GrayMap::PhiCap(&p3)).unwrap();
        let r = is_extended_one_perfect(&img).unwrap();
        assert!(r.verdict, "{r}");
        assert_eq!((r.length, r.distance), (8, Some(4)));

        let oracle = phi_cap_extended_perfect(&hi, &p3).unwrap();
        assert!(oracle.verdict);
        let r = is_extended_one_perfect_oracle(
            8,
            &BigUint::from(16u8),
            |w| member_of_phi_cap_image(w, hi.check_matrix(), &p3).unwrap(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(r.verdict, "{r}");

        let p2 = PerfectPartition::standard(2).unwrap();
        let img = image(
            &code_hi(&profile(2, &[1, 0])).unwrap(),
            GrayMap::PhiCap(&p2),
        )
        .unwrap();
        let words: Vec<String> = img.words().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["0000", "1111"]);
        assert!(is_extended_one_perfect(&img).unwrap().verdict);

        let mut short: Vec<BitWord> = image(&hi, GrayMap::PhiCap(&p3)).unwrap().words().to_vec();
        short.pop();
        let r = is_extended_one_perfect(&BinaryCode::new(8, short).unwrap()).unwrap();
        assert!(!r.verdict);
    }

    #[test]
    fn oracle_finds_holes() {
        let r = is_extended_one_perfect_oracle(
            4,
            &BigUint::from(2u8),
            |w| w.weight() == 0,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn hadamard_examples() {
        let a2 = OrderedHadamard::sylvester(2).unwrap();
        let img = image(&code_di(&profile(2, &[1, 0])).unwrap(), GrayMap::Phi(&a2)).unwrap();
        let r = is_hadamard(&img);
        assert!(r.verdict, "{r}");
        assert_eq!(r.distance, Some(2));
        assert_eq!(r.detail("two_distance"), Some("true"));

        let a3 = OrderedHadamard::sylvester(3).unwrap();
        let img = image(
            &code_di(&profile(3, &[2, 1, 0])).unwrap(),
            GrayMap::Phi(&a3),
        )
        .unwrap();
        let r = is_hadamard(&img);
        assert!(r.verdict);
        assert_eq!((r.length, r.distance), (64, Some(32)));
    }

    #[test]
    fn duality_small() {
        for p in [
            profile(3, &[1, 0, 0]),
            profile(2, &[1, 0]),
            profile(3, &[0, 0, 0]),
        ] {
            let r = verify_duality(&p).unwrap();
            assert!(r.verdict, "{r}");
        }
    }

    #[test]
    fn unit_codewords() {
        let di = code_di(&profile(3, &[1, 0, 0])).unwrap();
        let c = find_unit_codeword(&di).unwrap().unwrap();
        assert_eq!(c.symbols(), [1, 1]);
        assert!(find_unit_codeword(&LinearZCode::zero(z(8), 3))
            .unwrap()
            .is_none());
        let c = find_unit_codeword(&code_di(&profile(2, &[0, 1])).unwrap())
            .unwrap()
            .unwrap();
        assert!(c.symbols().iter().all(|&x| x % 2 == 1));
    }

    #[test]
    fn canonicalize_examples() {
        let code =
            LinearZCode::from_generators(ZMatrix::from_ints(z(4), &[&[1, 3], &[0, 2]]).unwrap())
                .unwrap();
        let c = canonicalize(&code).unwrap();
        assert_eq!(c.profile, profile(2, &[1, 0]));
        // (1,1) = (1,3) + (0,2) is the smallest all-odd codeword
        assert_eq!(c.z.symbols(), [1, 1]);
        assert_eq!(c.perm, [0, 1]);
        let d = code_di(&c.profile).unwrap();
        let z13 = RingWord::from_ints(z(4), &[1, 3]).unwrap();
        assert!(d.apply_monomial(&z13, &[0, 1]).unwrap().same_code(&code));

        let di = code_di(&profile(3, &[2, 1, 0])).unwrap();
        let c = canonicalize(&di).unwrap();
        assert_eq!(c.profile, profile(3, &[2, 1, 0]));
        assert!(c.z.symbols().iter().all(|&x| x == 1));
        assert_eq!(c.perm, (0..16).collect::<Vec<_>>());

        let one = LinearZCode::full(z(8), 1);
        assert_eq!(canonicalize(&one).unwrap().profile, profile(3, &[0, 0, 0]));

        let bad = LinearZCode::full(z(4), 2);
        assert!(matches!(
            canonicalize(&bad),
            Err(Error::ParameterMismatch(_))
        ));
    }

    #[test]
    fn census_small() {
        let c = isometry_census(2, z(4), Metric::Star, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.isometries.len(), 8);
        assert!(c.all_monomial());
        assert_eq!(c.monomial_count(), 8);
        let c = isometry_census(1, z(8), Metric::Diamond, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.isometries.len(), 4);
        for g in &c.isometries {
            let (zw, perm) = g.monomial.as_ref().unwrap();
            assert_eq!(perm, &[0]);
            assert_eq!(apply_matrix(&g.matrix, &[1], z(8)), zw.symbols());
        }
    }

    #[test]
    fn code_census_z4_2() {
        let codes = all_linear_codes(z(4), 2, DEFAULT_BUDGET).unwrap();
        // subgroups of Z_4 × Z_4
        assert_eq!(codes.len(), 15);
    }
}
