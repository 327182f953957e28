mod common;

use binlrc::bounds::{
    ceil_log2, cm_bound, disjoint_bound, griesmer_kopt, hamming_kopt, l_range, phi, relaxed_objective_concave_at,
    singleton_like, theorem2_bound, theorem3_bound, KOptProvider, Strategy, Witness,
};
use binlrc::code::{binomial, macwilliams, WeightEnumerator};
use binlrc::gf2::BitMatrix;
use binlrc::gf2m::FieldCtx;
use num_bigint::BigUint;
use proptest::prelude::*;

use common::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn u128_binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn macwilliams_is_an_involution(seed in any::<u64>(), n in 1usize..=12, k in 0usize..=12) {
        let mut rng = rng(seed);
        let code = random_code(&mut rng, n, k.min(n));
        let a = WeightEnumerator::from_counts(&brute_enumerator(&code));
        let b = macwilliams(&a, n, code.dimension()).unwrap();
        prop_assert_eq!(&b, &WeightEnumerator::from_counts(&brute_enumerator(&code.dual())));
        let back = macwilliams(&b, n, n - code.dimension()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn weight_search_agrees_with_brute_force(seed in any::<u64>(), n in 2usize..=16, k in 1usize..=8) {
        let mut rng = rng(seed);
        let code = random_code(&mut rng, n, k.min(n));
        let d = brute_distance(&code);
        prop_assert_eq!(code.min_distance_exhaustive().unwrap(), d);
        for w in 1..=7 {
            let found = code.has_codeword_of_weight_at_most(w).unwrap();
            prop_assert_eq!(found.is_some(), d.is_some_and(|d| d <= w));
            if let Some(support) = found {
                prop_assert!(support.len() <= w && !support.is_empty());
                let word = binlrc::gf2::BitVector::from_support(n, &support);
                prop_assert!(code.contains(&word));
            }
        }
    }

    #[test]
    fn greedy_cover_is_valid_and_minimal(seed in any::<u64>(), n in 4usize..=14, r in 1usize..=5, overlap: bool) {
        let r = r.min(n - 1);
        let mut rng = rng(seed);
        let lrc = random_lrc(&mut rng, n, r, overlap);
        let cover = lrc.code.find_l_cover(r).unwrap();
        prop_assert!(cover.validate(&lrc.code).is_ok());
        prop_assert!(cover.checks().iter().all(|h| h.weight() <= r + 1));
        prop_assert!(cover.len() >= n.div_ceil(r + 1));
    }

    #[test]
    fn shortening_inequalities(seed in any::<u64>(), n in 4usize..=14, r in 1usize..=5) {
        let r = r.min(n - 1);
        let mut rng = rng(seed);
        let lrc = random_lrc(&mut rng, n, r, true);
        let code = &lrc.code;
        let cover = code.find_l_cover(r).unwrap();
        let l = cover.len() as i64;
        match code.shorten_to_disjoint(&cover) {
            Ok(sh) => {
                let big_n = sh.weight_one_columns as i64;
                prop_assert!(big_n >= 2 * n as i64 - l * (r as i64 + 1));
                prop_assert!(sh.code.dimension() as i64 >= big_n - (n - code.dimension()) as i64);
                prop_assert!(sh.cover.is_disjoint());
                prop_assert_eq!(sh.cover.len() + sh.zero_rows, cover.len());
                if let (Some(d), Some(big_d)) = (brute_distance(code), brute_distance(&sh.code)) {
                    prop_assert!(big_d >= d);
                }
            }
            Err(_) => prop_assert!(2 * n as i64 - l * (r as i64 + 1) <= 0),
        }
    }

    #[test]
    fn bounds_hold_for_random_lrcs(seed in any::<u64>(), n in 4usize..=14, r in 1usize..=5, overlap: bool) {
        let r = r.min(n - 1);
        let mut rng = rng(seed);
        let lrc = random_lrc(&mut rng, n, r, overlap);
        let Some(d) = brute_distance(&lrc.code) else { return Ok(()) };
        let k = lrc.code.dimension() as i64;
        let provider = KOptProvider::fallback();
        prop_assert!(k <= singleton_like(n, d, r).unwrap().k_upper);
        prop_assert!(k <= cm_bound(n, d, r, &provider).unwrap().k_upper);
        prop_assert!(k <= theorem2_bound(n, d, r, Strategy::Auto).unwrap().k_upper);
        if let Ok(t3) = theorem3_bound(n, d, r) {
            prop_assert!(k <= t3.k_upper);
        }
    }

    #[test]
    fn optimizers_agree(n in 2usize..=30, r in 1usize..=5, d in 5usize..=13) {
        prop_assume!(n > r);
        let ex = theorem2_bound(n, d, r, Strategy::Exhaustive).unwrap();
        let dp = theorem2_bound(n, d, r, Strategy::Dp).unwrap();
        let auto = theorem2_bound(n, d, r, Strategy::Auto).unwrap();
        prop_assert_eq!(ex.k_upper, dp.k_upper);
        prop_assert_eq!(ex.k_upper, auto.k_upper);
    }

    #[test]
    fn theorem2_witness_reproduces_value(n in 2usize..=200, r in 1usize..=12, d in 1usize..=13) {
        prop_assume!(n > r);
        let rep = theorem2_bound(n, d, r, Strategy::Auto).unwrap();
        let Some(Witness::Partition { l, parts, phi: value }) = rep.witness else {
            return Err(TestCaseError::fail("missing partition witness"));
        };
        prop_assert!(l_range(n, r).contains(&l));
        prop_assert_eq!(parts.len(), l);
        prop_assert!(parts.iter().all(|&p| p <= r));
        prop_assert_eq!(parts.iter().sum::<usize>(), 2 * n - l * (r + 2));
        let recomputed = phi(&parts, d);
        prop_assert_eq!(recomputed.to_string(), value);
        prop_assert_eq!(rep.k_upper, n as i64 - l as i64 - ceil_log2(&recomputed) as i64);
    }

    #[test]
    fn theorem2_is_below_theorem3_beyond_the_grid(n in 121usize..=400, r in 2usize..=40, d in 5usize..=8) {
        let Ok(t3) = theorem3_bound(n, d, r) else { return Ok(()) };
        prop_assert!(theorem2_bound(n, d, r, Strategy::Auto).unwrap().k_upper <= t3.k_upper);
    }

    #[test]
    fn theorem3_matches_floating_point(n in 8usize..=5000, r in 2usize..=60) {
        prop_assume!(2 * r + 4 <= n);
        let (nf, rf) = (n as f64, r as f64);
        let value = rf * nf / (rf + 1.0) - (1.0 + rf * nf / 2.0).log2().min(rf * nf / ((rf + 1.0) * (rf + 2.0)));
        prop_assume!((value - value.round()).abs() > 1e-9);
        prop_assert_eq!(theorem3_bound(n, 5, r).unwrap().k_upper, value.floor() as i64);
    }

    #[test]
    fn cm_matches_direct_minimum(n in 2usize..=120, r in 1usize..=20, d in 1usize..=12) {
        prop_assume!(n > r);
        let provider = KOptProvider::fallback();
        let direct = (1..=n / (r + 1))
            .map(|t| t * r + provider.kopt_upper(n - t * (r + 1), d))
            .min()
            .unwrap();
        prop_assert_eq!(cm_bound(n, d, r, &provider).unwrap().k_upper, direct as i64);
    }

    #[test]
    fn kopt_fallbacks_match_definitions(n in 1usize..=120, d in 1usize..=20) {
        let radius = (d - 1) / 2;
        let ball: u128 = (0..=radius.min(n)).map(|i| u128_binomial(n as u128, i as u128)).sum();
        let hamming = (0..=n).rev().find(|&k| ball <= 1u128 << (n - k).min(127)).unwrap();
        prop_assert_eq!(hamming_kopt(n, d), hamming);
        let griesmer = (0..=n)
            .take_while(|&k| (0..k).map(|i| if i >= 32 { 1 } else { d.div_ceil(1 << i) }).sum::<usize>() <= n)
            .last()
            .unwrap();
        prop_assert_eq!(griesmer_kopt(n, d), griesmer);
    }

    #[test]
    fn singleton_like_is_tight(n in 2usize..=80, r in 1usize..=10, d in 1usize..=20) {
        prop_assume!(n > r);
        let allowed = |k: usize| n as i64 - k as i64 - k.div_ceil(r) as i64 + 2 >= d as i64;
        match singleton_like(n, d, r) {
            Ok(rep) => {
                let k = rep.k_upper as usize;
                prop_assert!(allowed(k));
                prop_assert!(k == n || !allowed(k + 1));
            }
            Err(_) => prop_assert!(!allowed(1)),
        }
    }

    #[test]
    fn null_space_is_orthogonal(seed in any::<u64>(), rows in 1usize..=10, cols in 1usize..=20) {
        let mut rng = rng(seed);
        let m = BitMatrix::from_rows(cols, (0..rows).map(|_| random_vector(&mut rng, cols)).collect()).unwrap();
        let null = m.null_space();
        prop_assert_eq!(null.rows() + m.rank(), cols);
        for v in null.row_vectors() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn field_inverses(m in 1u32..=16, seed in any::<u64>()) {
        let field = FieldCtx::new(m).unwrap();
        let bits = seed % (1u64 << m);
        let a = field.elem(bits);
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((a * a.inv().unwrap()).is_one());
            prop_assert!(a.pow(field.group_order()).is_one());
        }
    }
}

#[test]
fn disjoint_ball_equals_macwilliams_count() {
    for r in 1..=6usize {
        for l in 1..=6usize {
            let n = l * (r + 1);
            // span of l disjoint all-one blocks: (x^(r+1) + y^(r+1))^l
            let mut span = vec![BigUint::from(0u32); n + 1];
            for j in 0..=l {
                span[j * (r + 1)] = binomial(l as u64, j as u64);
            }
            let v = macwilliams(&WeightEnumerator::new(span), n, l).unwrap();
            for d in 1..=13usize {
                let rep = disjoint_bound(n, d, r).unwrap();
                let Some(Witness::Disjoint { ball, .. }) = rep.witness else {
                    panic!("no witness")
                };
                assert_eq!(ball, v.ball((d - 1) / 2).to_string(), "r={r} l={l} d={d}");
            }
        }
    }
}

#[test]
fn relaxed_objective_is_concave_on_grid() {
    let mut checked = 0;
    for n in 8..=200usize {
        for r in 2..=(n / 2 - 2) {
            let range = l_range(n, r);
            for l in range.start() + 1..*range.end() {
                assert!(relaxed_objective_concave_at(n, r, l), "n={n} r={r} l={l}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn theorem2_dominated_by_theorem3_on_small_grid() {
    for n in 8..=60usize {
        for r in 2..=n / 2 - 2 {
            for d in 5..=8 {
                let t3 = theorem3_bound(n, d, r).unwrap().k_upper;
                assert!(
                    theorem2_bound(n, d, r, Strategy::Auto).unwrap().k_upper <= t3,
                    "n={n} d={d} r={r}"
                );
            }
        }
    }
}
