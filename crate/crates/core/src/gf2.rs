//! Dense vectors and matrices over GF(2).
//!
//! Rows are packed into 64-bit words. Every operation that eliminates
//! works on a copy, so a `BitMatrix` never changes after construction
//! unless the caller explicitly mutates an owned value.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Vector of length `len` with ones exactly at `support`.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    /// In-place sum over GF(2).
    ///
    /// # Panics
    ///
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// True when the supports intersect.
    pub fn intersects(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Keep only the listed coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> BitVector {
        let mut out = BitVector::zeros(coords.len());
        for (j, &c) in coords.iter().enumerate() {
            if self.get(c) {
                out.set(j, true);
            }
        }
        out
    }

    /// Raw packed words, least significant bit first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// A dense `rows x cols` matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    /// Build from rows that all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has length {}, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Build from `0`/`1` strings; convenient in tests.
    ///
    /// # Panics
    ///
    /// Panics on ragged input or characters other than `0` and `1`.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                let bits: Vec<bool> = r
                    .chars()
                    .map(|c| match c {
                        '0' => false,
                        '1' => true,
                        other => panic!("bad matrix character {other:?}"),
                    })
                    .collect();
                BitVector::from_bits(&bits)
            })
            .collect();
        BitMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn columns(&self) -> Vec<BitVector> {
        self.transpose().into_rows()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// Submatrix made of the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: self.rows,
            cols: cols.len(),
            data: self.data.iter().map(|r| r.select(cols)).collect(),
        }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    ///
    /// The returned matrix keeps the original row count; rows past the
    /// rank are zero.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&i| m.data[i].get(col)) else {
                continue;
            };
            m.data.swap(lead, p);
            let pivot_row = m.data[lead].clone();
            for i in 0..m.rows {
                if i != lead && m.data[i].get(col) {
                    m.data[i].xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; cheaper than the full rref.
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Nonzero rows of the rref: a basis of the row space.
    pub fn row_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        BitMatrix {
            rows: rank,
            cols: self.cols,
            data: r.data.into_iter().take(rank).collect(),
        }
    }

    /// Basis of `{v : M v^T = 0}`, one basis vector per row.
    pub fn null_space(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.data[i].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix {
            rows: basis.len(),
            cols: self.cols,
            data: basis,
        }
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `M v^T`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// True when `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        let basis = self.row_basis();
        let extended = BitMatrix {
            rows: basis.rows + 1,
            cols: self.cols,
            data: basis.data.iter().cloned().chain([v.clone()]).collect(),
        };
        extended.rank() == basis.rows
    }

    /// Serialize in the repository matrix text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for row in &self.data {
            s.push_str(&row.to_string());
            s.push('\n');
        }
        s
    }

    /// Parse the repository matrix text format: a `<rows> <cols>` header,
    /// then one line of exactly `cols` characters from `{0,1}` per row.
    pub fn parse_text(text: &str) -> Result<BitMatrix> {
        let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
        let header = lines.next().unwrap_or("");
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str, what: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("{what} count {s:?} is not a nonnegative integer"),
            })
        };
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                message: "expected header `<rows> <cols>`".into(),
            });
        }
        let rows = parse_dim(dims[0], "row")?;
        let cols = parse_dim(dims[1], "column")?;
        let mut data = Vec::with_capacity(rows);
        for i in 0..rows {
            let line_no = i + 2;
            let line = lines.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected row {} of {rows}, found end of input", i + 1),
            })?;
            if line.len() != cols {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {cols} characters, found {}", line.len()),
                });
            }
            let mut v = BitVector::zeros(cols);
            for (j, ch) in line.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => v.set(j, true),
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("invalid character {:?} at column {}", other as char, j + 1),
                        })
                    }
                }
            }
            data.push(v);
        }
        for (offset, rest) in lines.enumerate() {
            if !rest.trim().is_empty() {
                return Err(Error::Parse {
                    line: rows + 2 + offset,
                    message: "unexpected content after the last row".into(),
                });
            }
        }
        Ok(BitMatrix { rows, cols, data })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
        (0..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
                BitMatrix::from_rows(c, rows.iter().map(|b| BitVector::from_bits(b)).collect()).unwrap()
            })
        })
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(2).rank(), 2);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn null_space_of_parity_row() {
        let m = BitMatrix::from_strs(&["111"]);
        let k = m.null_space();
        assert_eq!(k.rows(), 2);
        for v in k.row_vectors() {
            assert_eq!(v.weight() % 2, 0);
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
        assert_eq!(BitMatrix::identity(6).null_space().rows(), 0);
    }

    #[test]
    fn rref_examples() {
        let id = BitMatrix::identity(4);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2, 3]);

        let dup = BitMatrix::from_strs(&["11", "11"]);
        let (r, p) = dup.rref();
        assert_eq!(r, BitMatrix::from_strs(&["11", "00"]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = BitMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(a.mul_vec(&BitVector::zeros(2)).is_err());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let m = BitMatrix::from_strs(&["101", "011"]);
        let text = m.to_text();
        assert_eq!(text, "2 3\n101\n011\n");
        assert_eq!(BitMatrix::parse_text(&text).unwrap(), m);

        match BitMatrix::parse_text("3 3\n101\n011\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match BitMatrix::parse_text("2 3\n101\n0110\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match BitMatrix::parse_text("2 3\n101\n0x1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            BitMatrix::parse_text("a 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn vector_helpers() {
        let v = BitVector::from_support(70, &[0, 5, 64, 69]);
        assert_eq!(v.weight(), 4);
        assert_eq!(v.support(), vec![0, 5, 64, 69]);
        assert_eq!(v.select(&[69, 1, 64]).support(), vec![0, 2]);
        assert!(v.dot(&BitVector::from_support(70, &[5, 6])));
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix(8, 12)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_dimension_and_membership(m in arb_matrix(8, 12)) {
            let k = m.null_space();
            prop_assert_eq!(k.rows() + m.rank(), m.cols());
            for v in k.row_vectors() {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(k.rank(), k.rows());
        }

        #[test]
        fn rref_is_idempotent_and_keeps_row_space(m in arb_matrix(8, 12)) {
            let (r, p) = m.rref();
            let (rr, pp) = r.rref();
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(p.len(), m.rank());
            prop_assert_eq!(pp, p);
            prop_assert_eq!(m.vstack(&r).unwrap().rank(), m.rank());
        }

        #[test]
        fn identity_is_neutral(m in arb_matrix(6, 9)) {
            let id = BitMatrix::identity(m.rows());
            prop_assert_eq!(id.mul(&m).unwrap(), m.clone());
            let z = BitMatrix::zeros(m.cols(), 3);
            prop_assert_eq!(m.mul(&z).unwrap(), BitMatrix::zeros(m.rows(), 3));
        }
    }
}
