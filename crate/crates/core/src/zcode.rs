//! Linear codes over `Z_2m`.
//!
//! A [`LinearZCode`] always carries both a generator matrix and a check
//! matrix, plus a decomposition of the code into a direct sum of cyclic
//! subgroups. Kernels and duals are computed exactly from a diagonal form of
//! the defining matrix; the exhaustive routes ([`ZMatrix::kernel_scan`],
//! [`LinearZCode::dual_by_scan`], [`syndrome_image_size`]) are kept alongside
//! and serve as cross-checks.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::ring::{dot, unit_inverse, Metric, Modulus, RingWord};

/// Default cap on the number of words any single enumeration may produce.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// A rectangular matrix over `Z_2m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZMatrix {
    modulus: Modulus,
    cols: usize,
    rows: Vec<Vec<u32>>,
}

impl ZMatrix {
    pub fn new(modulus: Modulus, cols: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::Invalid("matrices need at least one column".into()));
        }
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for &x in row {
                modulus.check(x as u64)?;
            }
        }
        Ok(ZMatrix {
            modulus,
            cols,
            rows,
        })
    }

    /// Build from signed integers, reducing modulo `2m`.
    pub fn from_ints(modulus: Modulus, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| modulus.reduce(x)).collect())
            .collect();
        ZMatrix::new(modulus, cols, rows)
    }

    pub fn from_words(modulus: Modulus, cols: usize, words: &[RingWord]) -> Result<Self> {
        for w in words {
            if w.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    expected: modulus.two_m(),
                    found: w.modulus().two_m(),
                });
            }
        }
        ZMatrix::new(
            modulus,
            cols,
            words.iter().map(|w| w.symbols().to_vec()).collect(),
        )
    }

    pub(crate) fn from_raw(modulus: Modulus, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        ZMatrix {
            modulus,
            cols,
            rows,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> RingWord {
        RingWord::from_raw(self.modulus, self.rows[i].clone())
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// `H·x^T`.
    pub fn syndrome(&self, x: &[u32]) -> Vec<u32> {
        self.rows.iter().map(|r| dot(self.modulus, r, x)).collect()
    }

    pub fn annihilates(&self, x: &[u32]) -> bool {
        self.rows.iter().all(|r| dot(self.modulus, r, x) == 0)
    }

    /// Kernel by exhaustive scan of `Z_2m^n`.
    ///
    /// Independent solutions are collected greedily: a scanned solution
    /// becomes a generator only when it is outside the span of the ones
    /// already kept.
    pub fn kernel_scan(&self, budget: u64) -> Result<LinearZCode> {
        let words = self.kernel_words_scan(budget)?;
        let mut span: HashSet<Vec<u32>> = HashSet::new();
        span.insert(vec![0; self.cols]);
        let mut gens = Vec::new();
        for w in &words {
            if !span.contains(w) {
                extend_closure(self.modulus, &mut span, w);
                gens.push(w.clone());
            }
        }
        debug_assert_eq!(span.len(), words.len());
        let code = LinearZCode::from_generators(ZMatrix::from_raw(self.modulus, self.cols, gens))?;
        Ok(code.with_budget(budget))
    }

    /// Every word of `Z_2m^n` annihilated by this matrix, in lexicographic order.
    pub fn kernel_words_scan(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        let q = self.modulus.two_m() as u64;
        let total = space_size(q, self.cols, budget)
            .ok_or_else(|| Error::budget("kernel scan", format!("{q}^{}", self.cols), budget))?;
        let mut out = Vec::new();
        let mut x = vec![0u32; self.cols];
        for _ in 0..total {
            if self.annihilates(&x) {
                out.push(x.clone());
            }
            odometer_step(&mut x, self.modulus.two_m());
        }
        Ok(out)
    }
}

/// Size of the subgroup of `Z_2m^s` generated by the columns of `check`.
///
/// The kernel of `check` then has `(2m)^n / size` elements.
pub fn syndrome_image_size(check: &ZMatrix, budget: u64) -> Result<u64> {
    let q = check.modulus.two_m() as u64;
    let s = check.n_rows();
    if space_size(q, s, budget).is_none() {
        return Err(Error::budget("syndrome image", format!("{q}^{s}"), budget));
    }
    let mut group: HashSet<Vec<u32>> = HashSet::new();
    group.insert(vec![0; s]);
    for col in check.columns() {
        extend_closure(check.modulus, &mut group, &col);
    }
    Ok(group.len() as u64)
}

/// Kernel of `check` as a code (exact, structural).
pub fn kernel(check: &ZMatrix) -> LinearZCode {
    LinearZCode::from_check(check.clone())
}

/// `q^n` when it does not exceed `budget`.
pub fn space_size(q: u64, n: usize, budget: u64) -> Option<u64> {
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.checked_mul(q)?;
        if total > budget {
            return None;
        }
    }
    Some(total)
}

pub(crate) fn odometer_step(x: &mut [u32], q: u32) {
    for d in x.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return;
        }
        *d = 0;
    }
}

/// Replace `group` (a subgroup) by the subgroup generated by it and `g`.
fn extend_closure(modulus: Modulus, group: &mut HashSet<Vec<u32>>, g: &[u32]) {
    if group.contains(g) {
        return;
    }
    let base: Vec<Vec<u32>> = group.iter().cloned().collect();
    let mut multiple = g.to_vec();
    while multiple.iter().any(|&x| x != 0) {
        if !group.contains(&multiple) {
            for x in &base {
                group.insert(add_raw(modulus, x, &multiple));
            }
        }
        multiple = add_raw(modulus, &multiple, g);
    }
}

pub(crate) fn add_raw(modulus: Modulus, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| modulus.add(x, y)).collect()
}

/// A diagonal form `P·A·V = D` over `Z_N`; only `V` and the diagonal are kept.
struct DiagonalForm {
    diag: Vec<u32>,
    /// `v[i][t]` is entry `i` of column `t` of `V`.
    v: Vec<Vec<u32>>,
}

fn diagonalize(modulus: Modulus, rows: &[Vec<u32>], cols: usize) -> DiagonalForm {
    let n = modulus.two_m() as i64;
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    let s = a.len();
    let mut v: Vec<Vec<i64>> = (0..cols)
        .map(|i| (0..cols).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut diag = Vec::new();

    let red = |x: i64| x.rem_euclid(n);

    for t in 0..s.min(cols) {
        // pivot: the entry generating the largest ideal
        let mut best: Option<(i64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &e) in row.iter().enumerate().skip(t) {
                if e != 0 {
                    let g = e.gcd(&n);
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            for i in t + 1..s {
                let (p, b) = (a[t][t], a[i][t]);
                if b == 0 {
                    continue;
                }
                if p != 0 && b % p == 0 {
                    let q = b / p;
                    for j in 0..cols {
                        a[i][j] = red(a[i][j] - q * a[t][j]);
                    }
                } else {
                    let e = p.extended_gcd(&b);
                    let (pg, bg) = (p / e.gcd, b / e.gcd);
                    for j in 0..cols {
                        let (x, y) = (a[t][j], a[i][j]);
                        a[t][j] = red(e.x * x + e.y * y);
                        a[i][j] = red(-bg * x + pg * y);
                    }
                }
            }
            for j in t + 1..cols {
                let (p, b) = (a[t][t], a[t][j]);
                if b == 0 {
                    continue;
                }
                if p != 0 && b % p == 0 {
                    let q = b / p;
                    for row in a.iter_mut() {
                        row[j] = red(row[j] - q * row[t]);
                    }
                    for row in v.iter_mut() {
                        row[j] = red(row[j] - q * row[t]);
                    }
                } else {
                    let e = p.extended_gcd(&b);
                    let (pg, bg) = (p / e.gcd, b / e.gcd);
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        let (x, y) = (row[t], row[j]);
                        row[t] = red(e.x * x + e.y * y);
                        row[j] = red(-bg * x + pg * y);
                    }
                }
            }
            if (t + 1..s).all(|i| a[i][t] == 0) {
                break;
            }
        }
        diag.push(a[t][t] as u32);
    }

    DiagonalForm {
        diag,
        v: v.into_iter()
            .map(|r| r.into_iter().map(|x| x as u32).collect())
            .collect(),
    }
}

/// Independent cyclic generators `(word, order)` of the kernel of a matrix.
/// The kernel is the direct sum of the cyclic groups they generate.
fn kernel_decomposition(modulus: Modulus, rows: &[Vec<u32>], cols: usize) -> Vec<(Vec<u32>, u32)> {
    let n = modulus.two_m();
    let form = diagonalize(modulus, rows, cols);
    let mut out = Vec::new();
    for t in 0..cols {
        let order = match form.diag.get(t) {
            Some(&d) => d.gcd(&n),
            None => n,
        };
        if order == 1 {
            continue;
        }
        let scale = n / order;
        let w: Vec<u32> = (0..cols)
            .map(|i| modulus.mul(form.v[i][t], scale))
            .collect();
        out.push((w, order));
    }
    out
}

/// Configuration for [`LinearZCode::min_distance_bounded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedSearch {
    pub radius: u64,
}

/// A linear code in `Z_2m^n`.
#[derive(Debug, Clone)]
pub struct LinearZCode {
    modulus: Modulus,
    len: usize,
    generators: ZMatrix,
    check: ZMatrix,
    basis: Vec<(Vec<u32>, u32)>,
    budget: u64,
}

impl LinearZCode {
    /// The row span of `generators`.
    pub fn from_generators(generators: ZMatrix) -> Result<Self> {
        let modulus = generators.modulus();
        let len = generators.n_cols();
        let check_rows: Vec<Vec<u32>> = kernel_decomposition(modulus, generators.rows(), len)
            .into_iter()
            .map(|(w, _)| w)
            .collect();
        let check = ZMatrix::from_raw(modulus, len, check_rows);
        let basis = kernel_decomposition(modulus, check.rows(), len);
        Ok(LinearZCode {
            modulus,
            len,
            generators,
            check,
            basis,
            budget: DEFAULT_BUDGET,
        })
    }

    /// `{x : check·x^T = 0}`.
    pub fn from_check(check: ZMatrix) -> Self {
        let modulus = check.modulus();
        let len = check.n_cols();
        let basis = kernel_decomposition(modulus, check.rows(), len);
        let generators =
            ZMatrix::from_raw(modulus, len, basis.iter().map(|(w, _)| w.clone()).collect());
        LinearZCode {
            modulus,
            len,
            generators,
            check,
            basis,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn zero(modulus: Modulus, n: usize) -> Self {
        LinearZCode::from_generators(ZMatrix::from_raw(modulus, n, vec![]))
            .expect("empty generator set is valid")
    }

    pub fn full(modulus: Modulus, n: usize) -> Self {
        LinearZCode::from_check(ZMatrix::from_raw(modulus, n, vec![]))
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn generators(&self) -> &ZMatrix {
        &self.generators
    }

    pub fn check_matrix(&self) -> &ZMatrix {
        &self.check
    }

    /// Independent cyclic generators and their additive orders.
    pub fn cyclic_decomposition(&self) -> &[(Vec<u32>, u32)] {
        &self.basis
    }

    pub fn cardinality(&self) -> BigUint {
        self.basis
            .iter()
            .fold(BigUint::one(), |acc, &(_, ord)| acc * BigUint::from(ord))
    }

    pub fn cardinality_u64(&self) -> Option<u64> {
        self.cardinality().to_u64()
    }

    pub fn contains(&self, word: &RingWord) -> bool {
        word.modulus() == self.modulus
            && word.len() == self.len
            && self.check.annihilates(word.symbols())
    }

    pub(crate) fn contains_raw(&self, word: &[u32]) -> bool {
        self.check.annihilates(word)
    }

    /// Set equality, decided from generators and check matrices.
    pub fn same_code(&self, other: &LinearZCode) -> bool {
        self.modulus == other.modulus
            && self.len == other.len
            && self.generators.rows().iter().all(|g| other.contains_raw(g))
            && other.generators.rows().iter().all(|g| self.contains_raw(g))
    }

    fn require_enumerable(&self) -> Result<u64> {
        match self.cardinality_u64() {
            Some(c) if c <= self.budget => Ok(c),
            _ => Err(Error::budget(
                "code enumeration",
                self.cardinality(),
                self.budget,
            )),
        }
    }

    /// Visit every codeword once.
    pub fn for_each_word(&self, mut f: impl FnMut(&[u32])) -> Result<()> {
        self.require_enumerable()?;
        let mut word = vec![0u32; self.len];
        let mut digits = vec![0u32; self.basis.len()];
        loop {
            f(&word);
            let mut t = 0;
            loop {
                if t == self.basis.len() {
                    return Ok(());
                }
                let (g, ord) = &self.basis[t];
                for (x, &y) in word.iter_mut().zip(g) {
                    *x = self.modulus.add(*x, y);
                }
                digits[t] += 1;
                if digits[t] < *ord {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
        }
    }

    pub fn enumerate_raw(&self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::with_capacity(self.require_enumerable()? as usize);
        self.for_each_word(|w| out.push(w.to_vec()))?;
        Ok(out)
    }

    /// All codewords, each exactly once.
    pub fn enumerate(&self) -> Result<Vec<RingWord>> {
        Ok(self
            .enumerate_raw()?
            .into_iter()
            .map(|w| RingWord::from_raw(self.modulus, w))
            .collect())
    }

    /// The dual code. Its generators are this code's check rows.
    pub fn dual(&self) -> LinearZCode {
        LinearZCode {
            modulus: self.modulus,
            len: self.len,
            basis: kernel_decomposition(self.modulus, self.generators.rows(), self.len),
            generators: self.check.clone(),
            check: self.generators.clone(),
            budget: self.budget,
        }
    }

    /// The dual code by exhaustive scan of `Z_2m^n`.
    pub fn dual_by_scan(&self) -> Result<LinearZCode> {
        self.generators.kernel_scan(self.budget)
    }

    /// Minimum weight of a nonzero codeword; `None` for the zero code.
    pub fn min_distance(&self, metric: Metric) -> Result<Option<u64>> {
        let mut best: Option<u64> = None;
        self.for_each_word(|w| {
            let wt = metric.word_weight(w, self.modulus);
            if wt > 0 && best.is_none_or(|b| wt < b) {
                best = Some(wt);
            }
        })?;
        Ok(best)
    }

    /// `min(d, radius + 1)` found by testing every word of weight at most
    /// `radius` against the check matrix. The code is never enumerated.
    pub fn min_distance_bounded(&self, metric: Metric, search: BoundedSearch) -> u64 {
        match lightest_kernel_word(&self.check, metric, search.radius) {
            Some(w) => metric.word_weight(&w, self.modulus),
            None => search.radius + 1,
        }
    }

    /// `{z ∘ π(c)}` where `π(c)_i = c_{perm[i]}`.
    pub fn apply_monomial(&self, z: &RingWord, perm: &[usize]) -> Result<LinearZCode> {
        if z.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus.two_m(),
                found: z.modulus().two_m(),
            });
        }
        if z.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: z.len(),
            });
        }
        check_permutation(perm, self.len)?;
        let md = self.modulus;
        let zs = z.symbols();
        let inv: Vec<u32> = zs
            .iter()
            .map(|&c| unit_inverse(c, md))
            .collect::<Result<_>>()?;
        let fwd = |row: &[u32]| -> Vec<u32> {
            (0..self.len).map(|i| md.mul(zs[i], row[perm[i]])).collect()
        };
        let back = |row: &[u32]| -> Vec<u32> {
            (0..self.len)
                .map(|i| md.mul(inv[i], row[perm[i]]))
                .collect()
        };
        let map_rows = |m: &ZMatrix, f: &dyn Fn(&[u32]) -> Vec<u32>| {
            ZMatrix::from_raw(md, self.len, m.rows().iter().map(|r| f(r)).collect())
        };
        Ok(LinearZCode {
            modulus: md,
            len: self.len,
            generators: map_rows(&self.generators, &fwd),
            check: map_rows(&self.check, &back),
            basis: self.basis.iter().map(|(w, o)| (fwd(w), *o)).collect(),
            budget: self.budget,
        })
    }

    /// Echelon generating set over `Z_{2^k}`, with the additive order of each
    /// row. Rows come sorted by decreasing order and the code is the direct
    /// sum of the cyclic groups they generate.
    ///
    /// Pivots are chosen by minimum 2-adic valuation over the remaining rows,
    /// ties going to the leftmost column. Each pivot is scaled to a power of
    /// two and cleared from every other row (reduced modulo the pivot above).
    pub fn row_canonical(&self) -> Result<(ZMatrix, Vec<u32>)> {
        let (rows, orders) = row_canonical_rows(self.modulus, self.generators.rows().to_vec())?;
        Ok((ZMatrix::from_raw(self.modulus, self.len, rows), orders))
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

fn valuation(x: u32, k: u32) -> u32 {
    if x == 0 {
        k
    } else {
        x.trailing_zeros()
    }
}

pub(crate) fn row_canonical_rows(
    modulus: Modulus,
    mut rows: Vec<Vec<u32>>,
) -> Result<(Vec<Vec<u32>>, Vec<u32>)> {
    let k = modulus.require_k()?;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut done = 0usize;
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate().skip(done) {
            for (j, &x) in row.iter().enumerate() {
                let v = valuation(x, k);
                if v < k && best.is_none_or(|(bv, _, bj)| (v, j) < (bv, bj)) {
                    best = Some((v, j, i));
                }
            }
        }
        let Some((v, col, i)) = best else { break };
        rows.swap(done, i);
        let unit = rows[done][col] >> v;
        let inv = unit_inverse(unit, modulus)?;
        for x in rows[done].iter_mut() {
            *x = modulus.mul(*x, inv);
        }
        let pivot = rows[done].clone();
        let step = 1u32 << v;
        for (r, row) in rows.iter_mut().enumerate() {
            if r == done || row[col] == 0 {
                continue;
            }
            let q = row[col] / step;
            for (x, &p) in row.iter_mut().zip(&pivot) {
                *x = modulus.sub(*x, modulus.mul(q, p));
            }
        }
        pivots.push((col, v));
        done += 1;
    }
    rows.truncate(done);
    let orders = pivots.iter().map(|&(_, v)| 1u32 << (k - v)).collect();
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    Ok((rows, orders))
}

/// A nonzero word of least weight among those of weight at most `radius`
/// annihilated by `check`, if any.
pub(crate) fn lightest_kernel_word(
    check: &ZMatrix,
    metric: Metric,
    radius: u64,
) -> Option<Vec<u32>> {
    struct Search<'a> {
        check: &'a ZMatrix,
        cols: Vec<Vec<u32>>,
        metric: Metric,
        best: Option<(u64, Vec<u32>)>,
    }
    impl Search<'_> {
        fn go(
            &mut self,
            pos: usize,
            budget: u64,
            used: u64,
            word: &mut Vec<u32>,
            syn: &mut Vec<u32>,
        ) {
            if used > 0 && syn.iter().all(|&s| s == 0) {
                if self.best.as_ref().is_none_or(|(b, _)| used < *b) {
                    self.best = Some((used, word.clone()));
                }
                return;
            }
            if pos == word.len() {
                return;
            }
            let md = self.check.modulus();
            self.go(pos + 1, budget, used, word, syn);
            for x in 1..md.two_m() {
                let w = self.metric.weight(x, md);
                if used + w > budget {
                    continue;
                }
                word[pos] = x;
                for (s, &c) in syn.iter_mut().zip(&self.cols[pos]) {
                    *s = md.add(*s, md.mul(x, c));
                }
                self.go(pos + 1, budget, used + w, word, syn);
                for (s, &c) in syn.iter_mut().zip(&self.cols[pos]) {
                    *s = md.sub(*s, md.mul(x, c));
                }
                word[pos] = 0;
            }
        }
    }
    let mut search = Search {
        check,
        cols: check.columns(),
        metric,
        best: None,
    };
    let mut word = vec![0; check.n_cols()];
    let mut syn = vec![0; check.n_rows()];
    search.go(0, radius, 0, &mut word, &mut syn);
    search.best.map(|(_, w)| w)
}
