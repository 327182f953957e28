//! Comparison tables and sweeps between the C-M bound and the local
//! sphere-packing bounds.

use crate::bounds::{cm_bound, disjoint_bound, theorem3_bound, KOptProvider};
use crate::error::Result;

pub const TABLE2_N_MAX: usize = 250;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub r: usize,
    pub n: usize,
    pub disjoint: i64,
    pub cm: i64,
}

/// Rows `r = 3..=10` at `n = 3(r+1)`, `d = 5`.
pub fn table1(provider: &KOptProvider) -> Result<Vec<Table1Row>> {
    (3..=10)
        .map(|r| {
            let n = 3 * (r + 1);
            Ok(Table1Row {
                r,
                n,
                disjoint: disjoint_bound(n, 5, r)?.k_upper,
                cm: cm_bound(n, 5, r, provider)?.k_upper,
            })
        })
        .collect()
}

/// How the explicit bound must compare with C-M for `n` to count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Dominance {
    /// explicit <= C-M
    #[default]
    AtMost,
    /// explicit < C-M
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table2Cell {
    pub d: usize,
    pub r: usize,
    /// Smallest `n0` such that the explicit bound is applicable and
    /// dominates C-M for every `n0 <= n <= 250`; `None` if it fails at 250.
    pub tipping_point: Option<usize>,
}

pub fn tipping_point(d: usize, r: usize, provider: &KOptProvider, rule: Dominance) -> Option<usize> {
    let mut first_good = None;
    for n in (2..=TABLE2_N_MAX).rev() {
        let ok = match (theorem3_bound(n, d, r), cm_bound(n, d, r, provider)) {
            (Ok(t3), Ok(cm)) => match rule {
                Dominance::AtMost => t3.k_upper <= cm.k_upper,
                Dominance::Strict => t3.k_upper < cm.k_upper,
            },
            _ => false,
        };
        if !ok {
            break;
        }
        first_good = Some(n);
    }
    first_good
}

/// Cells for `d = 5..=8`, `r = 2..=5`, row-major in `d`.
pub fn table2(provider: &KOptProvider, rule: Dominance) -> Vec<Table2Cell> {
    let mut out = Vec::new();
    for d in 5..=8 {
        for r in 2..=5 {
            out.push(Table2Cell {
                d,
                r,
                tipping_point: tipping_point(d, r, provider, rule),
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub cm: Option<i64>,
    pub theorem3: Option<i64>,
}

pub fn sweep(r: usize, d: usize, n_min: usize, n_max: usize, provider: &KOptProvider) -> Vec<SweepRow> {
    (n_min..=n_max)
        .map(|n| SweepRow {
            n,
            cm: cm_bound(n, d, r, provider).ok().map(|b| b.k_upper),
            theorem3: theorem3_bound(n, d, r).ok().map(|b| b.k_upper),
        })
        .collect()
}
