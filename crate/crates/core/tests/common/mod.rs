#![allow(dead_code)]

use binlrc::code::LinearCode;
use binlrc::gf2::{BitMatrix, BitVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> BitVector {
    let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    BitVector::from_bits(&bits)
}

/// A code with a random `k x n` generator (rank may drop below `k`).
pub fn random_code(rng: &mut impl Rng, n: usize, k: usize) -> LinearCode {
    let rows = (0..k).map(|_| random_vector(rng, n)).collect();
    LinearCode::from_generator(BitMatrix::from_rows(n, rows).unwrap()).unwrap()
}

/// A random code with locality at most `r`.
pub struct RandomLrc {
    pub code: LinearCode,
    pub r: usize,
    /// Local checks planted into the parity-check matrix.
    pub local: Vec<BitVector>,
}

/// Plants local checks of weight at most `r + 1` that cover `[n]`,
/// either as a partition or with overlaps, then adds a few random
/// global checks.
pub fn random_lrc(rng: &mut impl Rng, n: usize, r: usize, overlapping: bool) -> RandomLrc {
    assert!(n > r && r >= 1);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut local = Vec::new();
    let mut i = 0;
    while i < n {
        let size = rng.gen_range(2..=r + 1).min(n - i).max(1);
        let mut support: Vec<usize> = perm[i..i + size].to_vec();
        if support.len() == 1 || (overlapping && rng.gen_bool(0.5)) {
            // borrow coordinates from elsewhere so the group has weight >= 2
            let want = rng.gen_range(2..=r + 1);
            while support.len() < want {
                let j = rng.gen_range(0..n);
                if !support.contains(&j) {
                    support.push(j);
                }
            }
        }
        local.push(BitVector::from_support(n, &support));
        i += size;
    }
    let globals = rng.gen_range(0..=3);
    let mut rows = local.clone();
    for _ in 0..globals {
        rows.push(random_vector(rng, n));
    }
    let code = LinearCode::from_pcheck(BitMatrix::from_rows(n, rows).unwrap()).unwrap();
    RandomLrc { code, r, local }
}

/// All codewords, by enumerating combinations of generator rows.
pub fn codewords(code: &LinearCode) -> Vec<BitVector> {
    let g = code.generator();
    let k = g.rows();
    (0u64..1 << k)
        .map(|mask| {
            let mut w = BitVector::zeros(code.len());
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    w.xor_assign(g.row(i));
                }
            }
            w
        })
        .collect()
}

/// Weight distribution by brute force over all codewords.
pub fn brute_enumerator(code: &LinearCode) -> Vec<u64> {
    let mut counts = vec![0u64; code.len() + 1];
    for w in codewords(code) {
        counts[w.weight()] += 1;
    }
    counts
}

/// Minimum nonzero weight by brute force.
pub fn brute_distance(code: &LinearCode) -> Option<usize> {
    codewords(code).iter().map(|w| w.weight()).filter(|&w| w > 0).min()
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
