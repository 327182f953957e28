//! A family of binary LRCs with locality `r = 2^t` and distance at least 6.
//!
//! The parity-check matrix has one all-one local check per repair group
//! of size `2^t + 1`, stacked over `s` global rows built from a matrix `A`
//! (any four columns independent) and the parity-check matrix `B` of a
//! `2^(2t)`-ary Hamming code.

use std::fmt;

use crate::bounds::{cm_bound, theorem3_bound, KOptProvider};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::gf2m::{FieldCtx, Poly2};

pub const MAX_T: u32 = 4;
pub const MAX_S: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    s: u32,
    t: u32,
}

impl ConstructionParams {
    pub fn new(s: u32, t: u32) -> Result<Self> {
        if t == 0 || s == 0 {
            return Err(Error::InvalidParameter("s and t must be positive".into()));
        }
        if !s.is_multiple_of(2 * t) || s / (2 * t) < 2 {
            return Err(Error::InvalidParameter(format!(
                "need 2t | s and s/(2t) >= 2, got s={s} t={t}"
            )));
        }
        if t > MAX_T || s > MAX_S {
            return Err(Error::InvalidParameter(format!(
                "supported sizes are t <= {MAX_T} and s <= {MAX_S}, got s={s} t={t}"
            )));
        }
        Ok(ConstructionParams { s, t })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Number of repair groups, `(2^s - 1)/(2^(2t) - 1)`.
    pub fn l(&self) -> usize {
        ((1usize << self.s) - 1) / ((1usize << (2 * self.t)) - 1)
    }

    /// Code length, `(2^s - 1)/(2^t - 1)`.
    pub fn n(&self) -> usize {
        ((1usize << self.s) - 1) / ((1usize << self.t) - 1)
    }

    pub fn r(&self) -> usize {
        1 << self.t
    }
}

/// The nonprimitive cyclic code behind `A` for `t >= 3`, and its
/// punctured form.
#[derive(Clone, Debug)]
pub struct CyclicSource {
    pub field: FieldCtx,
    /// Packed coordinates of the chosen element of order `2^t + 1`.
    pub beta: u64,
    pub minimal_polynomial: Poly2,
    /// `(x + 1) M(x)`.
    pub generator_polynomial: Poly2,
    /// Length `2^t + 1`.
    pub cyclic: LinearCode,
    /// The cyclic code with its last coordinate deleted.
    pub punctured: LinearCode,
}

/// Builds the length-`2^t + 1` cyclic code with generator `(x+1) M(x)`,
/// where `M` is the minimal polynomial of an element of order `2^t + 1`
/// in GF(2^(2t)).
pub fn cyclic_source(t: u32) -> Result<CyclicSource> {
    if !(1..=MAX_T).contains(&t) {
        return Err(Error::InvalidParameter(format!("t must be in 1..={MAX_T}")));
    }
    let field = FieldCtx::new(2 * t)?;
    let len = (1usize << t) + 1;
    let beta = field.element_of_order(len as u64)?;
    let m = beta.minimal_polynomial();
    if m.degree() != Some(2 * t as usize) {
        return Err(Error::Verification(format!(
            "minimal polynomial {m} does not have degree {}",
            2 * t
        )));
    }
    let g = Poly2::from_exponents(&[1, 0]).mul(&m);
    let inv = beta.inv()?;
    for (i, root) in [inv * inv, inv, field.one(), beta, beta * beta].into_iter().enumerate() {
        if !g.eval(root).is_zero() {
            return Err(Error::Verification(format!(
                "beta^{} is not a root of the generator polynomial",
                i as i64 - 2
            )));
        }
    }
    let xn1 = Poly2::from_exponents(&[len, 0]);
    if !g.divides(&xn1)? {
        return Err(Error::Verification(format!("{g} does not divide x^{len} + 1")));
    }
    let deg = g.degree().expect("nonzero");
    let rows: Vec<BitVector> = (0..len - deg)
        .map(|shift| {
            let mut v = BitVector::zeros(len);
            for i in 0..=deg {
                if g.coeff(i) {
                    v.set(i + shift, true);
                }
            }
            v
        })
        .collect();
    let gen = BitMatrix::from_rows(len, rows)?;
    let cyclic = LinearCode::from_generator(gen.clone())?;
    let kept: Vec<usize> = (0..len - 1).collect();
    let punctured = LinearCode::from_generator(gen.select_columns(&kept))?;
    Ok(CyclicSource {
        beta: beta.bits(),
        minimal_polynomial: m,
        generator_polynomial: g,
        cyclic,
        punctured,
        field,
    })
}

/// A `2t x 2^t` binary matrix whose every four columns are independent.
pub fn build_matrix_a(t: u32) -> Result<BitMatrix> {
    if !(1..=MAX_T).contains(&t) {
        return Err(Error::InvalidParameter(format!("t must be in 1..={MAX_T}")));
    }
    if t <= 2 {
        return Ok(BitMatrix::identity(2 * t as usize));
    }
    let src = cyclic_source(t)?;
    let a = src.punctured.pcheck().row_basis();
    if a.rows() != 2 * t as usize || a.cols() != 1 << t {
        return Err(Error::Verification(format!(
            "parity-check matrix has shape {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if let Some(dep) = LinearCode::from_pcheck(a.clone())?.has_codeword_of_weight_at_most(4)? {
        return Err(Error::Verification(format!("columns {dep:?} of A are dependent")));
    }
    Ok(a)
}

/// Columns of `B`: every nonzero tuple over GF(2^(2t)) of length
/// `s/(2t)` whose first nonzero entry is 1, in decreasing order of the
/// tuple's integer encoding (first coordinate most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixB {
    pub rows: usize,
    pub columns: Vec<Vec<u64>>,
}

pub fn build_matrix_b(p: ConstructionParams) -> MatrixB {
    let width = 2 * p.t;
    let rows = (p.s / width) as usize;
    let q = 1u64 << width;
    let total = 1u64 << (width as usize * rows);
    let mut columns = Vec::with_capacity(p.l());
    for code in (1..total).rev() {
        let tuple: Vec<u64> = (0..rows)
            .map(|i| (code >> (width as usize * (rows - 1 - i))) & (q - 1))
            .collect();
        if tuple.iter().find(|&&x| x != 0) == Some(&1) {
            columns.push(tuple);
        }
    }
    MatrixB { rows, columns }
}

#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    pub params: ConstructionParams,
    pub field: FieldCtx,
    pub a: BitMatrix,
    pub b: MatrixB,
    /// The `(l + s) x n` parity-check matrix.
    pub h: BitMatrix,
    pub code: LinearCode,
}

impl ConstructionOutput {
    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn l(&self) -> usize {
        self.params.l()
    }

    pub fn r(&self) -> usize {
        self.params.r()
    }

    /// The first `l` rows of `H`: one all-one check per repair group.
    pub fn local_checks(&self) -> Vec<BitVector> {
        self.h.row_vectors()[..self.l()].to_vec()
    }
}

pub fn construct_lrc(p: ConstructionParams) -> Result<ConstructionOutput> {
    let a = build_matrix_a(p.t)?;
    let b = build_matrix_b(p);
    let field = FieldCtx::new(2 * p.t)?;
    let (l, n, group) = (p.l(), p.n(), p.r() + 1);
    if b.columns.len() != l || l * group != n {
        return Err(Error::Verification(format!(
            "B has {} columns, expected l = {l} with l(2^t+1) = n = {n}",
            b.columns.len()
        )));
    }
    let a_elems: Vec<_> = a.columns().iter().map(|c| field.pack_bits(c)).collect::<Result<_>>()?;
    let width = 2 * p.t as usize;
    let mut h = BitMatrix::zeros(l + p.s as usize, n);
    for (i, beta) in b.columns.iter().enumerate() {
        let base = i * group;
        for j in 0..group {
            h.set(i, base + j, true);
        }
        for (j, aj) in a_elems.iter().enumerate() {
            let col = base + 1 + j;
            for (blk, &coord) in beta.iter().enumerate() {
                let prod = *aj * field.elem(coord);
                for bit in prod.expand_bits().iter_ones() {
                    h.set(l + blk * width + bit, col, true);
                }
            }
        }
    }
    let code = LinearCode::from_pcheck(h.clone())?;
    Ok(ConstructionOutput {
        params: p,
        field,
        a,
        b,
        h,
        code,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimality {
    /// The explicit bound at `(n, 6, r)` equals the achieved dimension.
    Explicit { bound: i64 },
    /// `(s, t) = (4, 1)`: measured against the C-M bound instead.
    ExcludedCase { cm_bound: i64 },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Exact distance when a weight-6 codeword was found, otherwise the
    /// proven lower bound.
    pub distance: usize,
    pub distance_exact: bool,
    pub optimality: Optimality,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}: {} ({})",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.evidence
            )?;
        }
        let d = if self.distance_exact {
            format!("d={}", self.distance)
        } else {
            format!("d>={}", self.distance)
        };
        let verdict = match (&self.optimality, self.passed()) {
            (_, false) => "certification failed".to_string(),
            (Optimality::Explicit { .. }, true) => format!("optimal, k={}=bound", self.k),
            (Optimality::ExcludedCase { cm_bound }, true) => {
                format!(
                    "excluded case for the explicit bound; C-M optimal, k={}={cm_bound}",
                    self.k
                )
            }
        };
        write!(f, "n={} k={} {d} r={}: {verdict}", self.n, self.k, self.r)
    }
}

fn check(name: &'static str, passed: bool, evidence: String) -> Check {
    Check { name, passed, evidence }
}

/// Verifies parameters, distance and optimality of a constructed code.
pub fn certify_construction(out: &ConstructionOutput) -> Result<Certificate> {
    let p = out.params;
    let (n, l, r, s) = (out.n(), out.l(), out.r(), p.s as usize);
    let k = out.code.dimension();
    let mut checks = Vec::new();

    let q = 1usize << p.t;
    checks.push(check(
        "parameters",
        n == ((1 << s) - 1) / (q - 1) && l == ((1 << s) - 1) / (q * q - 1) && r == q && n == l * (q + 1),
        format!("n={n} l={l} r={r}"),
    ));

    let groups = out.local_checks();
    let mut covered = BitVector::zeros(n);
    let mut disjoint = true;
    for g in &groups {
        disjoint &= !g.intersects(&covered) && g.weight() == r + 1;
        covered.xor_assign(g);
    }
    checks.push(check(
        "locality",
        disjoint && covered.weight() == n,
        format!("{l} disjoint checks of weight {}", r + 1),
    ));

    // k >= rn/(r+1) - s, i.e. (r+1)(k + s) >= rn.
    checks.push(check(
        "dimension",
        (r + 1) * (k + s) >= r * n,
        format!("k={k}, rank(H)={}, rn/(r+1)-s={}", n - k, r * n / (r + 1) - s),
    ));

    let low = out.code.has_codeword_of_weight_at_most(5)?;
    checks.push(check(
        "no_dependency_up_to_5",
        low.is_none(),
        match &low {
            None => "every 5 columns independent".into(),
            Some(w) => format!("columns {w:?} sum to zero"),
        },
    ));

    let all_one = BitVector::ones(n);
    checks.push(check(
        "even_weights",
        out.h.row_space_contains(&all_one),
        "all-one vector is a parity check".into(),
    ));

    let six = out.code.has_codeword_of_weight_at_most(6)?;
    let (distance, distance_exact) = match &six {
        Some(w) if w.len() == 6 => (6, true),
        _ => (6, false),
    };
    if let Some(w) = &six {
        checks.push(check(
            "weight_6_codeword",
            w.len() == 6 && out.code.contains(&BitVector::from_support(n, w)),
            format!("support {w:?}"),
        ));
    }

    let optimality = if (p.s, p.t) == (4, 1) {
        let cm = cm_bound(n, 6, r, &KOptProvider::fallback())?.k_upper;
        checks.push(check(
            "cm_optimal",
            cm == k as i64,
            format!("C-M bound {cm}, achieved {k}"),
        ));
        Optimality::ExcludedCase { cm_bound: cm }
    } else {
        let bound = theorem3_bound(n, 6, r)?.k_upper;
        checks.push(check(
            "explicit_bound_attained",
            bound == k as i64,
            format!("bound {bound}, achieved {k}"),
        ));
        // ceil(log2(1 + rn/2)) = s, with rn/2 an integer.
        let half = r * n / 2;
        let log_term = (usize::BITS - half.leading_zeros()) as usize;
        checks.push(check(
            "log_term_equals_s",
            log_term == s,
            format!("ceil(log2(1+{half}))={log_term}"),
        ));
        let lin = (r * n).div_ceil((r + 1) * (r + 2));
        checks.push(check(
            "linear_term_at_least_s",
            lin >= s,
            format!("ceil({}/{})={lin}", r * n, (r + 1) * (r + 2)),
        ));
        Optimality::Explicit { bound }
    };

    Ok(Certificate {
        n,
        k,
        r,
        distance,
        distance_exact,
        optimality,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(ConstructionParams::new(4, 1).is_ok());
        assert!(ConstructionParams::new(5, 1).is_err());
        assert!(ConstructionParams::new(2, 1).is_err());
        assert!(ConstructionParams::new(4, 2).is_err());
        assert!(ConstructionParams::new(0, 1).is_err());
        assert!(ConstructionParams::new(18, 1).is_err());
        assert!(ConstructionParams::new(20, 5).is_err());
        let p = ConstructionParams::new(8, 2).unwrap();
        assert_eq!((p.n(), p.l(), p.r()), (85, 17, 4));
    }

    #[test]
    fn small_a_is_identity() {
        assert_eq!(build_matrix_a(1).unwrap(), BitMatrix::identity(2));
        assert_eq!(build_matrix_a(2).unwrap(), BitMatrix::identity(4));
    }

    #[test]
    fn a_for_t3_and_t4() {
        for t in [3u32, 4] {
            let a = build_matrix_a(t).unwrap();
            assert_eq!((a.rows(), a.cols()), (2 * t as usize, 1 << t));
            assert_eq!(a.rank(), 2 * t as usize);
        }
        let src = cyclic_source(3).unwrap();
        assert_eq!(src.cyclic.len(), 9);
        assert_eq!(src.cyclic.dimension(), 2);
        assert_eq!(src.generator_polynomial.degree(), Some(7));
    }

    #[test]
    fn b_for_example() {
        let b = build_matrix_b(ConstructionParams::new(4, 1).unwrap());
        // 0, 1, w, w^2 are encoded as 0, 1, 2, 3.
        assert_eq!(
            b.columns,
            vec![vec![1, 3], vec![1, 2], vec![1, 1], vec![1, 0], vec![0, 1]]
        );
        let b = build_matrix_b(ConstructionParams::new(8, 2).unwrap());
        assert_eq!(b.columns.len(), 17);
        for col in &b.columns {
            assert_eq!(col.iter().find(|&&x| x != 0), Some(&1));
        }
    }

    #[test]
    fn example_construction_matches_fixture() {
        let out = construct_lrc(ConstructionParams::new(4, 1).unwrap()).unwrap();
        let fixture = BitMatrix::parse_text(include_str!("../data/example_h.txt")).unwrap();
        assert_eq!(out.h, fixture);
        assert_eq!(out.code.dimension(), 6);
        let cert = certify_construction(&out).unwrap();
        assert!(cert.passed(), "{cert}");
        assert_eq!(cert.optimality, Optimality::ExcludedCase { cm_bound: 6 });
        assert!(cert.distance_exact);
    }
}
