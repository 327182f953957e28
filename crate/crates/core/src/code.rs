//! Binary linear codes held by a parity-check matrix, with the structural
//! queries needed for locality bounds: distance, weight enumerators, the
//! MacWilliams transform, local parity checks, covers and shortening.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

pub const MAX_EXHAUSTIVE_DIM: usize = 28;
pub const MAX_ENUMERATOR_DIM: usize = 24;
pub const MAX_SEARCH_WEIGHT: usize = 7;
pub const MAX_LOCAL_CHECK_WEIGHT: usize = 8;
pub const MAX_SPAN_DIM: usize = 24;

const MAX_TABLE_ENTRIES: u128 = 40_000_000;
const MAX_SOLUTIONS: usize = 5_000_000;
const EXACT_COVER_BUDGET: usize = 2_000_000;

/// A binary linear code `{x : H x^T = 0}`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    pcheck: BitMatrix,
    k: usize,
    generator: OnceLock<BitMatrix>,
    distance: OnceLock<Option<usize>>,
    enumerator: OnceLock<WeightEnumerator>,
}

impl LinearCode {
    /// The parity-check rows may be linearly dependent.
    pub fn from_pcheck(pcheck: BitMatrix) -> Result<Self> {
        let n = pcheck.cols();
        if n == 0 {
            return Err(Error::InvalidParameter("a code needs at least one coordinate".into()));
        }
        let k = n - pcheck.rank();
        Ok(LinearCode {
            n,
            pcheck,
            k,
            generator: OnceLock::new(),
            distance: OnceLock::new(),
            enumerator: OnceLock::new(),
        })
    }

    /// The code spanned by the rows of `generator`.
    pub fn from_generator(generator: BitMatrix) -> Result<Self> {
        if generator.cols() == 0 {
            return Err(Error::InvalidParameter("a code needs at least one coordinate".into()));
        }
        let code = Self::from_pcheck(generator.null_space())?;
        let _ = code.generator.set(generator.row_basis());
        Ok(code)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Number of independent parity checks, `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn pcheck(&self) -> &BitMatrix {
        &self.pcheck
    }

    /// A basis of the code, one codeword per row (`k` rows).
    pub fn generator(&self) -> &BitMatrix {
        self.generator.get_or_init(|| self.pcheck.null_space())
    }

    pub fn dual(&self) -> LinearCode {
        let dual = Self::from_pcheck(self.generator().clone()).expect("n >= 1");
        let _ = dual.generator.set(self.pcheck.row_basis());
        dual
    }

    pub fn contains(&self, word: &BitVector) -> bool {
        word.len() == self.n && self.pcheck.mul_vec(word).is_ok_and(|s| s.is_zero())
    }

    /// Calls `f` on every nonzero codeword, in Gray-code order.
    fn for_each_nonzero_codeword(&self, mut f: impl FnMut(&BitVector)) {
        let gen = self.generator();
        let mut cur = BitVector::zeros(self.n);
        for i in 1u64..(1u64 << gen.rows()) {
            cur.xor_assign(gen.row(i.trailing_zeros() as usize));
            f(&cur);
        }
    }

    /// Exact minimum distance by enumerating all `2^k` codewords.
    /// `None` means the code has no nonzero codeword.
    pub fn min_distance_exhaustive(&self) -> Result<Option<usize>> {
        if self.k > MAX_EXHAUSTIVE_DIM {
            return Err(Error::Infeasible(format!(
                "exhaustive distance needs k <= {MAX_EXHAUSTIVE_DIM}, got k = {}",
                self.k
            )));
        }
        Ok(*self.distance.get_or_init(|| {
            let mut best: Option<usize> = None;
            self.for_each_nonzero_codeword(|c| {
                let w = c.weight();
                if best.is_none_or(|b| w < b) {
                    best = Some(w);
                }
            });
            best
        }))
    }

    /// Smallest-weight nonzero codeword of weight at most `w`, if any.
    ///
    /// Returns the support of the lexicographically smallest such codeword
    /// of minimum weight, found by a meet-in-the-middle search over
    /// column syndromes of the row-reduced parity-check matrix.
    pub fn has_codeword_of_weight_at_most(&self, w: usize) -> Result<Option<Vec<usize>>> {
        if !(1..=MAX_SEARCH_WEIGHT).contains(&w) {
            return Err(Error::InvalidParameter(format!(
                "search weight must be in 1..={MAX_SEARCH_WEIGHT}, got {w}"
            )));
        }
        let index = ColumnIndex::new(&self.pcheck.row_basis());
        for v in 1..=w.min(self.n) {
            if let Some(found) = index.zero_sum_subsets(v, true)?.into_iter().next() {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Distance as far as the budget allows: exhaustive for small `k`,
    /// otherwise a low-weight search up to `max_weight`.
    pub fn distance_status(&self, max_weight: usize) -> Result<DistanceStatus> {
        if self.k == 0 {
            return Ok(DistanceStatus::NoCodewords);
        }
        if self.k <= 20 {
            let d = self.min_distance_exhaustive()?.expect("k >= 1");
            return Ok(DistanceStatus::Exact(d));
        }
        match self.has_codeword_of_weight_at_most(max_weight)? {
            Some(support) => Ok(DistanceStatus::Exact(support.len())),
            None => Ok(DistanceStatus::AtLeast(max_weight + 1)),
        }
    }

    /// Weight distribution by enumerating all codewords.
    pub fn weight_enumerator_enum(&self) -> Result<WeightEnumerator> {
        if self.k > MAX_ENUMERATOR_DIM {
            return Err(Error::Infeasible(format!(
                "weight enumeration needs k <= {MAX_ENUMERATOR_DIM}, got k = {}",
                self.k
            )));
        }
        Ok(self
            .enumerator
            .get_or_init(|| {
                let mut counts = vec![0u64; self.n + 1];
                counts[0] = 1;
                self.for_each_nonzero_codeword(|c| counts[c.weight()] += 1);
                WeightEnumerator::from_counts(&counts)
            })
            .clone())
    }

    /// Dual codewords of weight at most `max_weight`, sorted by weight
    /// and then by support.
    pub fn low_weight_dual_words(&self, max_weight: usize) -> Result<Vec<BitVector>> {
        let mut words = if max_weight <= MAX_LOCAL_CHECK_WEIGHT {
            let index = ColumnIndex::new(self.generator());
            let mut out = Vec::new();
            for v in 1..=max_weight.min(self.n) {
                for support in index.zero_sum_subsets(v, false)? {
                    out.push(BitVector::from_support(self.n, &support));
                }
            }
            out
        } else {
            self.low_weight_dual_words_by_span(max_weight)?
        };
        words.sort_by(support_order);
        Ok(words)
    }

    /// Same set as [`low_weight_dual_words`](Self::low_weight_dual_words),
    /// found by enumerating the whole dual code.
    pub fn low_weight_dual_words_by_span(&self, max_weight: usize) -> Result<Vec<BitVector>> {
        let basis = self.pcheck.row_basis();
        if basis.rows() > MAX_SPAN_DIM {
            return Err(Error::Infeasible(format!(
                "dual has dimension {} > {MAX_SPAN_DIM}",
                basis.rows()
            )));
        }
        let mut out = Vec::new();
        let mut cur = BitVector::zeros(self.n);
        for i in 1u64..(1u64 << basis.rows()) {
            cur.xor_assign(basis.row(i.trailing_zeros() as usize));
            if cur.weight() <= max_weight {
                out.push(cur.clone());
            }
        }
        out.sort_by(support_order);
        Ok(out)
    }

    /// Smallest locality `r <= r_max`, with one local check per coordinate.
    pub fn locality_profile(&self, r_max: usize) -> Result<Option<LocalityProfile>> {
        let use_span = r_max + 1 > MAX_LOCAL_CHECK_WEIGHT;
        if use_span && self.redundancy() > MAX_SPAN_DIM {
            return Err(Error::Infeasible(format!(
                "local checks of weight {} with dual dimension {}",
                r_max + 1,
                self.redundancy()
            )));
        }
        let mut witnesses: Vec<Option<BitVector>> = vec![None; self.n];
        let mut uncovered = self.n;
        let mut checks = Vec::new();
        let all = if use_span {
            Some(self.low_weight_dual_words_by_span(r_max + 1)?)
        } else {
            None
        };
        let index = ColumnIndex::new(self.generator());
        for v in 1..=(r_max + 1).min(self.n) {
            let layer: Vec<BitVector> = match &all {
                Some(words) => words.iter().filter(|h| h.weight() == v).cloned().collect(),
                None => index
                    .zero_sum_subsets(v, false)?
                    .iter()
                    .map(|s| BitVector::from_support(self.n, s))
                    .collect(),
            };
            for h in &layer {
                for i in h.iter_ones() {
                    if witnesses[i].is_none() {
                        witnesses[i] = Some(h.clone());
                        uncovered -= 1;
                    }
                }
            }
            checks.extend(layer);
            if uncovered == 0 {
                let r = v - 1;
                let disjoint_groups = exact_cover(self.n, &checks);
                return Ok(Some(LocalityProfile {
                    r,
                    witnesses: witnesses.into_iter().map(|w| w.expect("covered")).collect(),
                    disjoint_groups,
                }));
            }
        }
        Ok(None)
    }

    /// A minimal set of dual codewords of weight at most `r + 1` whose
    /// supports cover every coordinate.
    pub fn find_l_cover(&self, r: usize) -> Result<LCover> {
        let candidates = self.low_weight_dual_words(r + 1)?;
        let mut covered = BitVector::zeros(self.n);
        let mut chosen: Vec<BitVector> = Vec::new();
        while covered.weight() < self.n {
            let gain = |h: &BitVector| h.iter_ones().filter(|&i| !covered.get(i)).count();
            let best = candidates
                .iter()
                .filter(|h| gain(h) > 0)
                .max_by(|a, b| gain(a).cmp(&gain(b)).then_with(|| support_order(b, a)));
            let Some(best) = best else {
                let missing = (0..self.n).find(|&i| !covered.get(i)).expect("uncovered");
                return Err(Error::NotApplicable(format!(
                    "coordinate {missing} lies in no dual codeword of weight <= {}",
                    r + 1
                )));
            };
            for i in best.iter_ones() {
                covered.set(i, true);
            }
            chosen.push(best.clone());
        }
        // Drop members, latest first, while the rest still covers.
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let rest: Vec<&BitVector> = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h)
                .collect();
            if covers(self.n, rest.into_iter()) {
                chosen.remove(i);
            }
        }
        Ok(LCover {
            n: self.n,
            r,
            checks: chosen,
        })
    }

    /// Shortens the code on every coordinate covered more than once by
    /// `cover`, leaving a code whose induced cover is disjoint.
    pub fn shorten_to_disjoint(&self, cover: &LCover) -> Result<Shortening> {
        if cover.n != self.n {
            return Err(Error::DimensionMismatch(format!(
                "cover has length {}, code has length {}",
                cover.n, self.n
            )));
        }
        let l_matrix = cover.matrix();
        let kept: Vec<usize> = (0..self.n)
            .filter(|&j| cover.checks.iter().filter(|h| h.get(j)).count() == 1)
            .collect();
        if kept.is_empty() {
            return Err(Error::NotApplicable(
                "every coordinate is covered at least twice".into(),
            ));
        }
        let code = LinearCode::from_pcheck(self.pcheck.select_columns(&kept))?;
        let restricted = l_matrix.select_columns(&kept);
        let nonzero: Vec<BitVector> = restricted
            .row_vectors()
            .iter()
            .filter(|h| !h.is_zero())
            .cloned()
            .collect();
        let zero_rows = restricted.rows() - nonzero.len();
        let l_prime_code = LinearCode::from_pcheck(BitMatrix::from_rows(kept.len(), nonzero.clone())?)?;
        Ok(Shortening {
            code,
            l_prime_code,
            cover: LCover {
                n: kept.len(),
                r: cover.r,
                checks: nonzero,
            },
            zero_rows,
            weight_one_columns: kept.len(),
            kept,
        })
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] binary linear code", self.n, self.k)
    }
}

/// Outcome of a budgeted distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceStatus {
    NoCodewords,
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for DistanceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceStatus::NoCodewords => f.write_str("no nonzero codewords"),
            DistanceStatus::Exact(d) => write!(f, "{d}"),
            DistanceStatus::AtLeast(d) => write!(f, ">= {d}"),
        }
    }
}

fn support_order(a: &BitVector, b: &BitVector) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| a.iter_ones().cmp(b.iter_ones()))
}

fn covers<'a>(n: usize, sets: impl Iterator<Item = &'a BitVector>) -> bool {
    let mut acc = BitVector::zeros(n);
    for h in sets {
        for i in h.iter_ones() {
            acc.set(i, true);
        }
    }
    acc.weight() == n
}

/// Partition of `[n]` into supports drawn from `checks`, by backtracking
/// on the lowest uncovered coordinate. Gives up after a fixed budget.
fn exact_cover(n: usize, checks: &[BitVector]) -> Option<Vec<BitVector>> {
    let mut by_coord: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, h) in checks.iter().enumerate() {
        for i in h.iter_ones() {
            by_coord[i].push(idx);
        }
    }
    let mut used = BitVector::zeros(n);
    let mut chosen = Vec::new();
    let mut budget = EXACT_COVER_BUDGET;

    fn search(
        checks: &[BitVector],
        by_coord: &[Vec<usize>],
        used: &mut BitVector,
        chosen: &mut Vec<usize>,
        budget: &mut usize,
    ) -> bool {
        let Some(first) = (0..used.len()).find(|&i| !used.get(i)) else {
            return true;
        };
        for &idx in &by_coord[first] {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            let h = &checks[idx];
            if h.intersects(used) {
                continue;
            }
            used.xor_assign(h);
            chosen.push(idx);
            if search(checks, by_coord, used, chosen, budget) {
                return true;
            }
            chosen.pop();
            used.xor_assign(h);
        }
        false
    }

    search(checks, &by_coord, &mut used, &mut chosen, &mut budget)
        .then(|| chosen.into_iter().map(|i| checks[i].clone()).collect())
}

/// Column syndromes of a matrix, keyed by their first 128 bits.
struct ColumnIndex {
    keys: Vec<u128>,
    columns: Vec<BitVector>,
    wide: bool,
}

impl ColumnIndex {
    fn new(m: &BitMatrix) -> Self {
        let columns = m.columns();
        let keys = columns
            .iter()
            .map(|c| {
                let w = c.words();
                let lo = w.first().copied().unwrap_or(0) as u128;
                let hi = w.get(1).copied().unwrap_or(0) as u128;
                lo | (hi << 64)
            })
            .collect();
        ColumnIndex {
            keys,
            columns,
            wide: m.rows() > 128,
        }
    }

    fn is_zero_sum(&self, idx: &[usize]) -> bool {
        if !self.wide {
            return true;
        }
        let mut acc = BitVector::zeros(self.columns.first().map_or(0, |c| c.len()));
        for &i in idx {
            acc.xor_assign(&self.columns[i]);
        }
        acc.is_zero()
    }

    /// All `v`-subsets of columns summing to zero, in lexicographic order.
    ///
    /// A sorted subset is split into its first `floor(v/2)` indices `T`
    /// and last `ceil(v/2)` indices `S`; the `S` halves are tabulated by
    /// syndrome and looked up for every `T`.
    fn zero_sum_subsets(&self, v: usize, first_only: bool) -> Result<Vec<Vec<usize>>> {
        let n = self.keys.len();
        let a = v.div_ceil(2);
        let b = v / 2;
        if a > 4 {
            return Err(Error::InvalidParameter(format!(
                "subset size {v} exceeds {MAX_LOCAL_CHECK_WEIGHT}"
            )));
        }
        let table_size = binomial_u128(n, a);
        if table_size > MAX_TABLE_ENTRIES {
            return Err(Error::Infeasible(format!(
                "{table_size} half-subsets for weight {v} at length {n}"
            )));
        }
        let mut table: Vec<(u128, [u16; 4])> = Vec::with_capacity(table_size as usize);
        for_each_subset(n, a, |s| {
            let key = s.iter().fold(0u128, |acc, &i| acc ^ self.keys[i]);
            let mut packed = [u16::MAX; 4];
            for (slot, &i) in packed.iter_mut().zip(s) {
                *slot = i as u16;
            }
            table.push((key, packed));
            true
        });
        table.sort_unstable();

        let mut out = Vec::new();
        let mut err = None;
        for_each_subset(n, b, |t| {
            let key = t.iter().fold(0u128, |acc, &i| acc ^ self.keys[i]);
            let floor = t.last().map_or(0, |&i| i + 1);
            let start = table.partition_point(|e| e.0 < key);
            for (k, s) in &table[start..] {
                if *k != key {
                    break;
                }
                if (s[0] as usize) < floor {
                    continue;
                }
                let mut subset: Vec<usize> = t.to_vec();
                subset.extend(s[..a].iter().map(|&i| i as usize));
                if !self.is_zero_sum(&subset) {
                    continue;
                }
                out.push(subset);
                if first_only {
                    return false;
                }
                if out.len() > MAX_SOLUTIONS {
                    err = Some(Error::Infeasible(format!(
                        "more than {MAX_SOLUTIONS} zero-sum subsets of size {v}"
                    )));
                    return false;
                }
            }
            true
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Visits the `k`-subsets of `0..n` in lexicographic order until `f`
/// returns false.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Weight distribution `A_0, ..., A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        WeightEnumerator { coeffs }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Code length `n` (one less than the number of coefficients).
    pub fn length(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn get(&self, u: usize) -> BigUint {
        self.coeffs.get(u).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `A_0 + ... + A_radius`, the size of a Hamming ball intersected
    /// with the code.
    pub fn ball(&self, radius: usize) -> BigUint {
        self.coeffs.iter().take(radius + 1).sum()
    }

    /// Smallest nonzero weight with a codeword.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&u| !self.coeffs[u].is_zero())
    }

    /// `u,A_u` rows under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,A_u\n");
        for (u, a) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{u},{a}\n"));
        }
        out
    }
}

/// Weight enumerator of the dual of a length-`n`, dimension-`dim_in`
/// code: `B_j = 2^-dim_in * sum_u A_u K_j(u)` with Krawtchouk
/// polynomials `K_j`, evaluated in exact integer arithmetic.
pub fn macwilliams(w: &WeightEnumerator, n: usize, dim_in: usize) -> Result<WeightEnumerator> {
    if w.coeffs.len() != n + 1 {
        return Err(Error::Inconsistent(format!(
            "{} coefficients for length {n}",
            w.coeffs.len()
        )));
    }
    if w.total() != BigUint::one() << dim_in {
        return Err(Error::Inconsistent(format!(
            "coefficients sum to {}, expected 2^{dim_in}",
            w.total()
        )));
    }
    let binom: Vec<Vec<BigInt>> = (0..=n as u64)
        .map(|a| (0..=n as u64).map(|b| BigInt::from(binomial(a, b))).collect())
        .collect();
    let divisor = BigInt::one() << dim_in;
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (u, a_u) in w.coeffs.iter().enumerate() {
            if a_u.is_zero() {
                continue;
            }
            let mut kraw = BigInt::zero();
            for i in 0..=j.min(u) {
                if j - i > n - u {
                    continue;
                }
                let term = &binom[u][i] * &binom[n - u][j - i];
                if i % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from(a_u.clone()) * kraw;
        }
        if (&acc % &divisor) != BigInt::zero() || acc.is_negative() {
            return Err(Error::Inconsistent(format!(
                "input is not the enumerator of a linear code (coefficient {j})"
            )));
        }
        out.push((acc / &divisor).to_biguint().expect("nonnegative"));
    }
    Ok(WeightEnumerator::new(out))
}

/// Result of a locality search.
#[derive(Clone, Debug)]
pub struct LocalityProfile {
    pub r: usize,
    /// For each coordinate, a local check of weight at most `r + 1`
    /// containing it.
    pub witnesses: Vec<BitVector>,
    /// Local checks whose supports partition the coordinates, if found.
    pub disjoint_groups: Option<Vec<BitVector>>,
}

/// A minimal family of local parity checks covering every coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCover {
    n: usize,
    r: usize,
    checks: Vec<BitVector>,
}

impl LCover {
    /// Wraps checks without validating them; see [`LCover::validate`].
    pub fn new(n: usize, r: usize, checks: Vec<BitVector>) -> Self {
        LCover { n, r, checks }
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn code_length(&self) -> usize {
        self.n
    }

    pub fn checks(&self) -> &[BitVector] {
        &self.checks
    }

    pub fn matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n, self.checks.clone()).expect("checks have length n")
    }

    pub fn is_disjoint(&self) -> bool {
        self.checks.iter().map(|h| h.weight()).sum::<usize>() == self.n && covers(self.n, self.checks.iter())
    }

    /// Checks membership in the dual, weights, coverage and minimality.
    pub fn validate(&self, code: &LinearCode) -> Result<()> {
        let gen = code.generator();
        for (i, h) in self.checks.iter().enumerate() {
            if h.len() != self.n || self.n != code.len() {
                return Err(Error::DimensionMismatch(format!("check {i} has length {}", h.len())));
            }
            if !gen.mul_vec(h)?.is_zero() {
                return Err(Error::Verification(format!("check {i} is not a dual codeword")));
            }
            if h.weight() > self.r + 1 || h.is_zero() {
                return Err(Error::Verification(format!(
                    "check {i} has weight {} outside 1..={}",
                    h.weight(),
                    self.r + 1
                )));
            }
        }
        if !covers(self.n, self.checks.iter()) {
            return Err(Error::Verification("supports do not cover every coordinate".into()));
        }
        for skip in 0..self.checks.len() {
            let rest = self
                .checks
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, h)| h);
            if covers(self.n, rest) {
                return Err(Error::Verification(format!("check {skip} is redundant")));
            }
        }
        Ok(())
    }

    /// The code whose parity checks are exactly the cover; it contains
    /// the covered code.
    pub fn l_space(&self) -> LinearCode {
        LinearCode::from_pcheck(self.matrix()).expect("n >= 1")
    }

    /// Span of the checks, as a code in its own right.
    pub fn span(&self) -> LinearCode {
        LinearCode::from_generator(self.matrix()).expect("n >= 1")
    }
}

/// Output of [`LinearCode::shorten_to_disjoint`].
#[derive(Clone, Debug)]
pub struct Shortening {
    /// The original code shortened on the multiply-covered coordinates.
    pub code: LinearCode,
    /// The code with the restricted cover rows as parity checks; a
    /// supercode of `code`.
    pub l_prime_code: LinearCode,
    /// Restricted cover rows that stay nonzero, with disjoint supports.
    pub cover: LCover,
    /// Number of cover rows that vanish on the kept coordinates.
    pub zero_rows: usize,
    /// Number of coordinates covered exactly once, `N`.
    pub weight_one_columns: usize,
    /// The kept coordinates of the original code, increasing.
    pub kept: Vec<usize>,
}
