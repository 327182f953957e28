//! Upper bounds on the dimension of binary linear codes with locality.
//!
//! Everything here is exact: logarithms only ever appear through integer
//! comparisons against powers of two.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::code::{binomial, macwilliams, LCover, LinearCode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SingletonLike,
    Cm,
    Disjoint,
    Theorem2,
    Theorem3,
    Prop1,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::SingletonLike => "singleton_like",
            Method::Cm => "cm",
            Method::Disjoint => "disjoint",
            Method::Theorem2 => "theorem2",
            Method::Theorem3 => "theorem3",
            Method::Prop1 => "prop1",
        })
    }
}

/// Which term of the explicit bound's minimum was smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveTerm {
    /// `log2(1 + rn/2)`
    Logarithmic,
    /// `rn/((r+1)(r+2))`
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Cm {
        t: usize,
        kopt: usize,
    },
    Disjoint {
        l: usize,
        ball: String,
    },
    Partition {
        l: usize,
        parts: Vec<usize>,
        phi: String,
    },
    /// No `l` satisfies the range constraint; the bound falls back to
    /// `n - floor(2n/(r+2))`.
    EmptyRange {
        l_max: usize,
    },
    Explicit {
        active: ActiveTerm,
        simplified_regime: bool,
    },
    Ball {
        dim_v: usize,
        radius: usize,
        ball: String,
    },
}

/// One bound evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub method: Method,
    pub k_upper: i64,
    pub witness: Option<Witness>,
    pub exact: bool,
}

impl BoundReport {
    fn new(method: Method, k_upper: i64, witness: Option<Witness>) -> Self {
        BoundReport {
            method,
            k_upper,
            witness,
            exact: true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `ceil(log2(b))` for `b >= 1`.
pub fn ceil_log2(b: &BigUint) -> u64 {
    if b.is_zero() {
        panic!("log of zero");
    }
    (b - 1u32).bits()
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Largest `d` allowed by `d <= n - k - ceil(k/r) + 2`.
pub fn singleton_like_max_d(n: usize, k: usize, r: usize) -> Result<i64> {
    if !(1..=n).contains(&r) || !(1..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= r <= n and 1 <= k <= n, got n={n} k={k} r={r}"
        )));
    }
    Ok(n as i64 - k as i64 - ceil_div(k, r) as i64 + 2)
}

/// Largest `k` compatible with the Singleton-like bound.
pub fn singleton_like(n: usize, d: usize, r: usize) -> Result<BoundReport> {
    if !(1..=n).contains(&r) {
        return Err(Error::InvalidParameter(format!("need 1 <= r <= n, got r={r}")));
    }
    let best = (1..=n)
        .rev()
        .find(|&k| singleton_like_max_d(n, k, r).is_ok_and(|m| m >= d as i64))
        .ok_or_else(|| Error::InvalidParameter(format!("no k >= 1 allows d={d} at n={n}")))?;
    Ok(BoundReport::new(Method::SingletonLike, best as i64, None))
}

pub fn singleton_kopt(n: usize, d: usize) -> usize {
    (n + 1).saturating_sub(d)
}

/// Largest `k` with `2^k * V(n, floor((d-1)/2)) <= 2^n`.
pub fn hamming_kopt(n: usize, d: usize) -> usize {
    let radius = (d.max(1) - 1) / 2;
    let ball: BigUint = (0..=radius.min(n)).map(|i| binomial(n as u64, i as u64)).sum();
    n - ceil_log2(&ball) as usize
}

/// Largest `k` with `sum_{i<k} ceil(d/2^i) <= n`.
pub fn griesmer_kopt(n: usize, d: usize) -> usize {
    let mut k = 0usize;
    let mut len = 0usize;
    loop {
        let term = if k >= usize::BITS as usize {
            1
        } else {
            d.div_ceil(1usize << k)
        };
        if len + term > n {
            return k;
        }
        len += term;
        k += 1;
    }
}

/// Upper bounds on `k_opt(n, d)`: a table of known values backed by the
/// Singleton, sphere-packing and Griesmer bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KOptProvider {
    table: BTreeMap<(usize, usize), usize>,
}

pub const BUNDLED_DELSARTE: &str = include_str!("../data/kopt_delsarte.csv");
pub const BUNDLED_REFINED: &str = include_str!("../data/kopt_refined.csv");

impl KOptProvider {
    /// Fallback bounds only.
    pub fn fallback() -> Self {
        Self::default()
    }

    pub fn from_csv_str(text: &str) -> Result<Self> {
        Self::from_reader(text.as_bytes())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_reader(file)
    }

    /// Reads `n,d,k_upper` rows; `#` starts a comment line.
    pub fn from_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .has_headers(false)
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(reader);
        let mut table = BTreeMap::new();
        let mut header_seen = false;
        for record in rdr.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if !header_seen {
                header_seen = true;
                let fields: Vec<&str> = record.iter().collect();
                if fields != ["n", "d", "k_upper"] {
                    return Err(Error::Parse {
                        line,
                        message: "expected header n,d,k_upper".into(),
                    });
                }
                continue;
            }
            if record.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 3 fields, found {}", record.len()),
                });
            }
            let field = |i: usize| -> Result<usize> {
                record[i].parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a nonnegative integer: {:?}", &record[i]),
                })
            };
            let (n, d, k) = (field(0)?, field(1)?, field(2)?);
            if d == 0 {
                return Err(Error::Parse {
                    line,
                    message: "distance must be at least 1".into(),
                });
            }
            let conventional = if n < d {
                Some(0)
            } else if d == 1 {
                Some(n)
            } else {
                None
            };
            if let Some(expected) = conventional {
                if k != expected {
                    return Err(Error::Inconsistent(format!(
                        "line {line}: k_opt({n},{d}) must be {expected}"
                    )));
                }
            } else if k > singleton_kopt(n, d) {
                return Err(Error::Inconsistent(format!(
                    "line {line}: k_upper {k} exceeds the Singleton bound {} at n={n}, d={d}",
                    singleton_kopt(n, d)
                )));
            }
            if table.insert((n, d), k).is_some() {
                return Err(Error::Inconsistent(format!(
                    "line {line}: duplicate entry for n={n}, d={d}"
                )));
            }
        }
        let provider = KOptProvider { table };
        provider.check_monotone()?;
        Ok(provider)
    }

    fn check_monotone(&self) -> Result<()> {
        let mut prev: Option<(usize, usize, usize)> = None;
        for (&(n, d), &k) in &self.table {
            if let Some((pn, pd, pk)) = prev {
                if pn == n && k > pk {
                    return Err(Error::Inconsistent(format!(
                        "k_upper increases with distance at n={n}: {pk} at d={pd}, {k} at d={d}"
                    )));
                }
            }
            prev = Some((n, d, k));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table_value(&self, n: usize, d: usize) -> Option<usize> {
        self.table.get(&(n, d)).copied()
    }

    pub fn fallback_value(n: usize, d: usize) -> usize {
        if n < d {
            return 0;
        }
        if d <= 1 {
            return n;
        }
        singleton_kopt(n, d).min(hamming_kopt(n, d)).min(griesmer_kopt(n, d))
    }

    /// Best available upper bound on `k_opt(n, d)`.
    pub fn kopt_upper(&self, n: usize, d: usize) -> usize {
        let fallback = Self::fallback_value(n, d);
        match self.table_value(n, d) {
            Some(k) => k.min(fallback),
            None => fallback,
        }
    }
}

/// `min_t [t r + k_opt(n - (r+1) t, d)]` over `1 <= t <= floor(n/(r+1))`.
pub fn cm_bound(n: usize, d: usize, r: usize, provider: &KOptProvider) -> Result<BoundReport> {
    if d == 0 || n < r + 1 {
        return Err(Error::InvalidParameter(format!(
            "need d >= 1 and n >= r+1, got n={n} d={d} r={r}"
        )));
    }
    let (t, kopt, value) = (1..=n / (r + 1))
        .map(|t| {
            let kopt = provider.kopt_upper(n - (r + 1) * t, d);
            (t, kopt, t * r + kopt)
        })
        .min_by_key(|&(t, _, v)| (v, t))
        .expect("t = 1 is in range");
    Ok(BoundReport::new(
        Method::Cm,
        value as i64,
        Some(Witness::Cm { t, kopt }),
    ))
}

/// `dim_v - ceil(log2 ball)`.
pub fn prop1_bound(dim_v: usize, ball: &BigUint) -> Result<i64> {
    if ball.is_zero() {
        return Err(Error::InvalidParameter("ball size must be at least 1".into()));
    }
    Ok(dim_v as i64 - ceil_log2(ball) as i64)
}

/// Sphere-packing bound inside the L-space of `cover`, for a code of
/// minimum distance `d`.
pub fn prop1_for_code(code: &LinearCode, cover: &LCover, d: usize) -> Result<BoundReport> {
    if cover.code_length() != code.len() {
        return Err(Error::DimensionMismatch("cover and code lengths differ".into()));
    }
    let span = cover.span();
    let span_enum = span.weight_enumerator_enum()?;
    let v_enum = macwilliams(&span_enum, code.len(), span.dimension())?;
    let dim_v = code.len() - span.dimension();
    let radius = d.saturating_sub(1) / 2;
    let ball = v_enum.ball(radius);
    let k = prop1_bound(dim_v, &ball)?;
    Ok(BoundReport::new(
        Method::Prop1,
        k,
        Some(Witness::Ball {
            dim_v,
            radius,
            ball: ball.to_string(),
        }),
    ))
}

/// `p_rho(x) = sum_i C(rho+1, 2i) x^i`, truncated after `x^t`.
fn part_poly(rho: usize, t: usize) -> Vec<BigUint> {
    (0..=t).map(|i| binomial(rho as u64 + 1, 2 * i as u64)).collect()
}

fn trunc_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let t = a.len();
    let mut out = vec![BigUint::zero(); t];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(t - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn trunc_pow(p: &[BigUint], mut e: usize) -> Vec<BigUint> {
    let mut acc = vec![BigUint::zero(); p.len()];
    acc[0] = BigUint::one();
    let mut base = p.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = trunc_mul(&acc, &base);
        }
        base = trunc_mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Truncation degree `floor((d-1)/4)`.
pub fn truncation_degree(d: usize) -> usize {
    d.saturating_sub(1) / 4
}

/// `Phi_l(r_1, ..., r_l)`: the coefficient sum up to `x^T` of
/// `prod_j p_{r_j}(x)`, with `T = floor((d-1)/4)`.
pub fn phi(parts: &[usize], d: usize) -> BigUint {
    let t = truncation_degree(d);
    let mut acc = vec![BigUint::zero(); t + 1];
    acc[0] = BigUint::one();
    for &rho in parts {
        acc = trunc_mul(&acc, &part_poly(rho, t));
    }
    acc.iter().sum()
}

/// Sphere-packing bound for disjoint repair groups, `(r+1) | n`.
pub fn disjoint_bound(n: usize, d: usize, r: usize) -> Result<BoundReport> {
    if r == 0 || d == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "need n, d, r >= 1, got n={n} d={d} r={r}"
        )));
    }
    if !n.is_multiple_of(r + 1) {
        return Err(Error::NotApplicable(format!("needs (r+1) | n, got n = {n}, r = {r}")));
    }
    let l = n / (r + 1);
    let t = truncation_degree(d);
    let ball: BigUint = trunc_pow(&part_poly(r, t), l).iter().sum();
    let k = (r * l) as i64 - ceil_log2(&ball) as i64;
    Ok(BoundReport::new(
        Method::Disjoint,
        k,
        Some(Witness::Disjoint {
            l,
            ball: ball.to_string(),
        }),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Enumerate every admissible partition.
    Exhaustive,
    /// Dynamic program over Pareto-minimal truncated coefficient vectors.
    Dp,
    /// Balanced parts when `T <= 1`, the dynamic program otherwise.
    Auto,
}

/// A minimizer `(l, parts)` of `2^l * Phi_l(parts)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiValue {
    pub l: usize,
    pub parts: Vec<usize>,
    pub phi: BigUint,
}

impl PhiValue {
    fn scaled(&self) -> BigUint {
        &self.phi << self.l
    }

    fn better_than(&self, other: &PhiValue) -> bool {
        (self.scaled(), self.l, &self.parts) < (other.scaled(), other.l, &other.parts)
    }
}

/// Admissible range `ceil(n/(r+1)) <= l <= floor(2n/(r+2))`.
pub fn l_range(n: usize, r: usize) -> std::ops::RangeInclusive<usize> {
    ceil_div(n, r + 1)..=(2 * n) / (r + 2)
}

/// Exact minimizer of `2^l * Phi_l` over the admissible `(l, parts)`, or
/// `None` when the `l` range is empty.
pub fn theorem2_optimum(n: usize, d: usize, r: usize, strategy: Strategy) -> Option<PhiValue> {
    let mut best: Option<PhiValue> = None;
    for l in l_range(n, r) {
        let sum = 2 * n - l * (r + 2);
        let cand = match strategy {
            Strategy::Exhaustive => best_parts_exhaustive(l, sum, r, d),
            Strategy::Dp => best_parts_dp(l, sum, r, d),
            Strategy::Auto if truncation_degree(d) <= 1 => best_parts_balanced(l, sum, d),
            Strategy::Auto => best_parts_dp(l, sum, r, d),
        };
        if best.as_ref().is_none_or(|b| cand.better_than(b)) {
            best = Some(cand);
        }
    }
    best
}

pub fn theorem2_bound(n: usize, d: usize, r: usize, strategy: Strategy) -> Result<BoundReport> {
    if r == 0 || n < r + 1 {
        return Err(Error::InvalidParameter(format!("need n >= r+1 >= 2, got n={n} r={r}")));
    }
    match theorem2_optimum(n, d, r, strategy) {
        Some(best) => {
            let k = n as i64 - best.l as i64 - ceil_log2(&best.phi) as i64;
            Ok(BoundReport::new(
                Method::Theorem2,
                k,
                Some(Witness::Partition {
                    l: best.l,
                    phi: best.phi.to_string(),
                    parts: best.parts,
                }),
            ))
        }
        None => {
            let l_max = 2 * n / (r + 2);
            Ok(BoundReport::new(
                Method::Theorem2,
                (n - l_max) as i64,
                Some(Witness::EmptyRange { l_max }),
            ))
        }
    }
}

fn best_parts_balanced(l: usize, sum: usize, d: usize) -> PhiValue {
    let q = sum / l;
    let extra = sum % l;
    let parts: Vec<usize> = (0..l).map(|j| if j < extra { q + 1 } else { q }).collect();
    PhiValue {
        l,
        phi: phi(&parts, d),
        parts,
    }
}

fn best_parts_exhaustive(l: usize, sum: usize, r: usize, d: usize) -> PhiValue {
    fn rec(parts: &mut Vec<usize>, left: usize, remaining: usize, cap: usize, d: usize, best: &mut Option<PhiValue>) {
        if left == 0 {
            if remaining == 0 {
                let cand = PhiValue {
                    l: parts.len(),
                    parts: parts.clone(),
                    phi: phi(parts, d),
                };
                if best.as_ref().is_none_or(|b| cand.better_than(b)) {
                    *best = Some(cand);
                }
            }
            return;
        }
        for rho in 0..=cap.min(remaining) {
            if remaining - rho > (left - 1) * rho {
                continue;
            }
            parts.push(rho);
            rec(parts, left - 1, remaining - rho, rho, d, best);
            parts.pop();
        }
    }
    let mut best = None;
    rec(&mut Vec::with_capacity(l), l, sum, r, d, &mut best);
    best.expect("sum <= l * r admits a partition")
}

/// Coefficient arithmetic for the dynamic program: machine words with
/// overflow detection, or big integers.
trait Coef: Clone + Ord + Sized {
    fn from_big(b: &BigUint) -> Option<Self>;
    fn to_big(&self) -> BigUint;
    fn c_zero() -> Self;
    fn c_one() -> Self;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
}

impl Coef for u128 {
    fn from_big(b: &BigUint) -> Option<Self> {
        num_traits::ToPrimitive::to_u128(b)
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
    fn c_zero() -> Self {
        0
    }
    fn c_one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
}

impl Coef for BigUint {
    fn from_big(b: &BigUint) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
    fn c_zero() -> Self {
        Zero::zero()
    }
    fn c_one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

fn checked_trunc_mul<C: Coef>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let t = a.len();
    let mut out = vec![C::c_zero(); t];
    for (i, x) in a.iter().enumerate() {
        if *x == C::c_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(t - i) {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some(out)
}

fn checked_sum<C: Coef>(v: &[C]) -> Option<C> {
    v.iter().try_fold(C::c_zero(), |acc, x| acc.add(x))
}

/// Pareto-minimal coefficient vectors, each with the multiplicities of
/// the part values used (largest value first).
struct Front<C> {
    entries: Vec<(Vec<C>, Vec<u32>)>,
}

impl<C: Coef> Front<C> {
    fn new() -> Self {
        Front { entries: Vec::new() }
    }

    /// Equal vectors keep the lexicographically smaller parts; for
    /// nonincreasing sequences of one length that is the smaller count list.
    fn insert(&mut self, vec: Vec<C>, counts: Vec<u32>) {
        let dominates = |a: &[C], b: &[C]| a.iter().zip(b).all(|(x, y)| x <= y);
        for (v, c) in &mut self.entries {
            if *v == vec {
                if counts < *c {
                    *c = counts;
                }
                return;
            }
            if dominates(v, &vec) {
                return;
            }
        }
        self.entries.retain(|(v, _)| !dominates(&vec, v));
        self.entries.push((vec, counts));
    }
}

fn best_parts_dp(l: usize, sum: usize, r: usize, d: usize) -> PhiValue {
    dp_with::<u128>(l, sum, r, d)
        .unwrap_or_else(|| dp_with::<BigUint>(l, sum, r, d).expect("big integers do not overflow"))
}

/// Places part values from `r` down to 0 over states
/// `(parts placed, sum placed)`, one part at a time. `None` on overflow.
fn dp_with<C: Coef>(l: usize, sum: usize, r: usize, d: usize) -> Option<PhiValue> {
    let t = truncation_degree(d);
    let width = sum + 1;
    let idx = |placed: usize, acc: usize| placed * width + acc;
    let mut unit = vec![C::c_zero(); t + 1];
    unit[0] = C::c_one();
    let mut fronts: Vec<Option<Front<C>>> = (0..(l + 1) * width).map(|_| None).collect();
    fronts[idx(0, 0)] = Some(Front {
        entries: vec![(unit, Vec::new())],
    });
    for rho in (0..=r).rev() {
        let poly: Vec<C> = part_poly(rho, t).iter().map(C::from_big).collect::<Option<_>>()?;
        for front in fronts.iter_mut().flatten() {
            for (_, counts) in &mut front.entries {
                counts.push(0);
            }
        }
        if rho <= sum {
            for placed in 0..l {
                for acc in 0..=sum - rho {
                    let i = idx(placed, acc);
                    let Some(front) = fronts[i].as_ref() else { continue };
                    if acc + (l - placed) * rho < sum {
                        continue;
                    }
                    let grown: Vec<_> = front
                        .entries
                        .iter()
                        .map(|(v, counts)| {
                            let mut counts = counts.clone();
                            *counts.last_mut().expect("pushed above") += 1;
                            checked_trunc_mul(v, &poly).map(|w| (w, counts))
                        })
                        .collect::<Option<_>>()?;
                    let slot = fronts[idx(placed + 1, acc + rho)].get_or_insert_with(Front::new);
                    for (w, counts) in grown {
                        slot.insert(w, counts);
                    }
                }
            }
        }
        for placed in 0..=l {
            for acc in 0..=sum {
                let left = l - placed;
                let viable = if rho == 0 {
                    left == 0 && acc == sum
                } else {
                    acc + left * (rho - 1) >= sum
                };
                if !viable {
                    fronts[idx(placed, acc)] = None;
                }
            }
        }
    }
    let front = fronts[idx(l, sum)].take().expect("sum <= l * r admits a partition");
    let mut best: Option<(C, Vec<u32>)> = None;
    for (v, counts) in front.entries {
        let total = checked_sum(&v)?;
        if best.as_ref().is_none_or(|(b, bc)| (&total, &counts) < (b, bc)) {
            best = Some((total, counts));
        }
    }
    let (total, counts) = best.expect("nonempty front");
    let parts = counts
        .iter()
        .zip((0..=r).rev())
        .flat_map(|(&c, rho)| std::iter::repeat_n(rho, c as usize))
        .collect();
    Some(PhiValue {
        l,
        parts,
        phi: total.to_big(),
    })
}

/// Exact rational `num / den` with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Ratio {
    num: u128,
    den: u128,
}

impl Ratio {
    fn new(num: u128, den: u128) -> Self {
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `floor(a - log2(b))` for rationals `a >= 0`, `b >= 1`.
fn floor_sub_log2(a: Ratio, b: Ratio) -> i64 {
    // m <= a - log2 b  <=>  b^q <= 2^(p - m q)  with a = p/q.
    let (p, q) = (a.num, a.den);
    let bq_num = BigUint::from(b.num).pow(q as u32);
    let bq_den = BigUint::from(b.den).pow(q as u32);
    let holds = |m: i64| -> bool {
        let exp = p as i128 - m as i128 * q as i128;
        if exp >= 0 {
            bq_num <= &bq_den << (exp as usize)
        } else {
            (&bq_num << ((-exp) as usize)) <= bq_den
        }
    };
    // log2 b >= floor(log2 floor(b)), so this start is never too small.
    let floor_log = (127 - (b.num / b.den).leading_zeros()) as i64;
    let mut m = (p / q) as i64 - floor_log;
    while !holds(m) {
        m -= 1;
    }
    m
}

/// `floor(x - y)` for rationals.
fn floor_sub(x: Ratio, y: Ratio) -> i64 {
    let num = x.num as i128 * y.den as i128 - y.num as i128 * x.den as i128;
    num.div_euclid((x.den * y.den) as i128) as i64
}

/// Explicit bound
/// `k <= rn/(r+1) - min{log2(1 + rn/2), rn/((r+1)(r+2))}`,
/// valid for `d >= 5` and `2 <= r <= n/2 - 2`.
pub fn theorem3_bound(n: usize, d: usize, r: usize) -> Result<BoundReport> {
    if d < 5 {
        return Err(Error::NotApplicable(format!("needs d >= 5, got d = {d}")));
    }
    if r < 2 || 2 * r + 4 > n {
        return Err(Error::NotApplicable(format!(
            "needs 2 <= r <= n/2 - 2, got n = {n}, r = {r}"
        )));
    }
    let (n128, r128) = (n as u128, r as u128);
    let a = Ratio::new(r128 * n128, r128 + 1);
    let b = Ratio::new(2 + r128 * n128, 2);
    let c = Ratio::new(r128 * n128, (r128 + 1) * (r128 + 2));
    let by_log = floor_sub_log2(a, b);
    let by_linear = floor_sub(a, c);
    // log2(b) <= c  <=>  b^den(c) <= 2^num(c)
    let floor_log = (127 - (b.num / b.den).leading_zeros()) as u128;
    let log_is_min = if c.num >= (floor_log + 1) * c.den {
        true
    } else if c.num < floor_log * c.den {
        false
    } else {
        let lhs = BigUint::from(b.num).pow(c.den as u32);
        let rhs = BigUint::from(b.den).pow(c.den as u32) << (c.num as usize);
        lhs <= rhs
    };
    let active = if log_is_min {
        ActiveTerm::Logarithmic
    } else {
        ActiveTerm::Linear
    };
    Ok(BoundReport::new(
        Method::Theorem3,
        by_log.max(by_linear),
        Some(Witness::Explicit {
            active,
            simplified_regime: n >= 5 * (r + 1) * (r + 2),
        }),
    ))
}

/// Discrete concavity of the relaxed objective
/// `f(l) = l + log2(1 + (2n - l(r+1))(2n - l(r+2)) / (2l))`
/// at `l`: `2 f(l) >= f(l-1) + f(l+1)`, decided exactly.
pub fn relaxed_objective_concave_at(n: usize, r: usize, l: usize) -> bool {
    // g(l) = N(l) / (2l) with N(l) = 2l + (2n - l(r+1))(2n - l(r+2)).
    let num = |l: usize| -> i128 {
        let (n, r, l) = (n as i128, r as i128, l as i128);
        2 * l + (2 * n - l * (r + 1)) * (2 * n - l * (r + 2))
    };
    let (lm, l0, lp) = (l as i128 - 1, l as i128, l as i128 + 1);
    // g(l)^2 >= g(l-1) g(l+1)  <=>  N(l)^2 (l-1)(l+1) >= N(l-1) N(l+1) l^2
    num(l).pow(2) * lm * lp >= num(l - 1) * num(l + 1) * l0 * l0
}

/// Every bound applicable at `(n, d, r)`, in a fixed order, with the
/// reason for each inapplicable one.
pub fn all_bounds(n: usize, d: usize, r: usize, provider: &KOptProvider) -> Vec<(Method, Result<BoundReport>)> {
    vec![
        (Method::SingletonLike, singleton_like(n, d, r)),
        (Method::Cm, cm_bound(n, d, r, provider)),
        (Method::Disjoint, disjoint_bound(n, d, r)),
        (Method::Theorem2, theorem2_bound(n, d, r, Strategy::Auto)),
        (Method::Theorem3, theorem3_bound(n, d, r)),
    ]
}
