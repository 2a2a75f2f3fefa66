//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors and matrices are stored as little-endian `u64` words, row-major for
//! matrices. Elimination uses partial pivoting by first set bit (lowest column
//! index wins), and free variables are completed with zeros, so every solver
//! in this module is deterministic given its inputs.

use thiserror::Error;

const WORD_BITS: usize = 64;

/// Support sets larger than this are rejected by [`BitMatrix::enumerate_solutions`].
pub const MAX_ENUMERATION_SUPPORT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("support of size {size} exceeds enumeration limit {limit}")]
    SupportTooLarge { size: usize, limit: usize },
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
///
/// Bits past `len` in the last word are kept zero, which lets XOR and
/// popcount-based dot products run whole words without masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector of length `len` with ones exactly at `support`.
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
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// XOR `other` into `self`. Lengths must match.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Indices of set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        out
    }

    fn dot_words(&self, other: &[u64]) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(other) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }
}

impl std::fmt::Display for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl std::str::FromStr for BitVector {
    type Err = String;

    /// Parses an ASCII bit string such as `01101`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(format!("invalid bit character {other:?} at position {i}")),
            }
        }
        Ok(v)
    }
}

/// A dense matrix over GF(2), row-major bit-packed.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from explicit rows of booleans. All rows must have the
    /// same length.
    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &b) in row.iter().enumerate() {
                if b {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds an `rows x cols` matrix whose set positions are given as
    /// `(row, col)` pairs.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            m.set(r, c, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        let w = self.data[row * self.words_per_row + col / WORD_BITS];
        (w >> (col % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        let mask = 1u64 << (col % WORD_BITS);
        let w = &mut self.data[row * self.words_per_row + col / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    pub fn row(&self, row: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.row_words(row).to_vec(),
        }
    }

    /// Number of set entries.
    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Syndrome-style product: returns `s` of length `rows` with
    /// `s_i = <row_i, v> mod 2`, i.e. `M v` for a column vector `v`
    /// (equivalently `v Mᵀ` for a row vector).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let mut s = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if v.dot_words(self.row_words(r)) {
                s.set(r, true);
            }
        }
        Ok(s)
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.words_per_row, dst * self.words_per_row);
        for k in 0..self.words_per_row {
            let w = self.data[a + k];
            self.data[b + k] ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    /// GF(2) rank, computed on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) {
                    m.xor_row_into(pivot_row, r);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        pivot_row
    }

    /// Solves `x Mᵀ = s` for an `x` supported on `support`, or returns `None`
    /// when the restricted system is inconsistent.
    ///
    /// Only the columns in `support` are materialized, so the cost is governed
    /// by `|support|` rather than the full width. The returned solution is
    /// deterministic: columns are pivoted in ascending index order and free
    /// variables are set to zero.
    pub fn solve_restricted(
        &self,
        s: &BitVector,
        support: &[usize],
    ) -> Result<Option<BitVector>, Gf2Error> {
        if s.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                actual: s.len(),
            });
        }
        let cols = self.canonical_support(support)?;
        let local = self.solve_local(s, &cols);
        Ok(local.map(|bits| {
            let mut x = BitVector::zeros(self.cols);
            for (j, &c) in cols.iter().enumerate() {
                if bits.get(j) {
                    x.set(c, true);
                }
            }
            x
        }))
    }

    fn canonical_support(&self, support: &[usize]) -> Result<Vec<usize>, Gf2Error> {
        let mut cols = support.to_vec();
        cols.sort_unstable();
        cols.dedup();
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Gf2Error::ColumnOutOfRange {
                index: bad,
                cols: self.cols,
            });
        }
        Ok(cols)
    }

    /// Reduced solve over the selected columns; returns the solution in local
    /// (support) coordinates.
    fn solve_local(&self, s: &BitVector, cols: &[usize]) -> Option<BitVector> {
        let w = cols.len();
        // Augmented system [A | s] with A = self restricted to `cols`.
        let mut a = BitMatrix::zeros(self.rows, w + 1);
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    a.set(r, j, true);
                }
            }
            if s.get(r) {
                a.set(r, w, true);
            }
        }
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..w {
            let Some(r) = (pivot_row..a.rows).find(|&r| a.get(r, col)) else {
                continue;
            };
            a.swap_rows(pivot_row, r);
            for r in 0..a.rows {
                if r != pivot_row && a.get(r, col) {
                    a.xor_row_into(pivot_row, r);
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == a.rows {
                break;
            }
        }
        // Inconsistent iff some pivot-free row has a set right-hand side.
        for r in pivot_row..a.rows {
            if a.get(r, w) {
                return None;
            }
        }
        let mut x = BitVector::zeros(w);
        for &(r, c) in &pivots {
            if a.get(r, w) {
                x.set(c, true);
            }
        }
        Some(x)
    }

    /// True iff `v` is a GF(2) linear combination of the rows of `self`.
    pub fn rowspace_member(&self, v: &BitVector) -> Result<bool, Gf2Error> {
        RowSpace::new(self).member(v)
    }

    /// All `x` with support inside `support` and `x Mᵀ = s`, by exhaustive
    /// enumeration, up to `limit` results. Intended as a brute-force oracle.
    pub fn enumerate_solutions(
        &self,
        s: &BitVector,
        support: &[usize],
        limit: usize,
    ) -> Result<Vec<BitVector>, Gf2Error> {
        if s.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                actual: s.len(),
            });
        }
        let cols = self.canonical_support(support)?;
        if cols.len() > MAX_ENUMERATION_SUPPORT {
            return Err(Gf2Error::SupportTooLarge {
                size: cols.len(),
                limit: MAX_ENUMERATION_SUPPORT,
            });
        }
        // Syndrome of each support column, so a candidate's syndrome is the
        // XOR of its selected columns.
        let col_syndromes: Vec<BitVector> = cols
            .iter()
            .map(|&c| {
                let mut s = BitVector::zeros(self.rows);
                for r in 0..self.rows {
                    if self.get(r, c) {
                        s.set(r, true);
                    }
                }
                s
            })
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << cols.len()) {
            let mut acc = BitVector::zeros(self.rows);
            for (j, cs) in col_syndromes.iter().enumerate() {
                if (mask >> j) & 1 == 1 {
                    acc.xor_assign(cs);
                }
            }
            if acc == *s {
                let mut x = BitVector::zeros(self.cols);
                for (j, &c) in cols.iter().enumerate() {
                    if (mask >> j) & 1 == 1 {
                        x.set(c, true);
                    }
                }
                out.push(x);
                if out.len() >= limit {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, right.rows, "hstack row mismatch");
        let mut m = BitMatrix::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(r, c, true);
                }
            }
            for c in 0..right.cols {
                if right.get(r, c) {
                    m.set(r, self.cols + c, true);
                }
            }
        }
        m
    }

    pub fn transposed(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(c, r, true);
                }
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                if !self.get(r1, c1) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        if other.get(r2, c2) {
                            m.set(r1 * other.rows + r2, c1 * other.cols + c2, true);
                        }
                    }
                }
            }
        }
        m
    }

    /// Product `self · otherᵀ`, used to test orthogonality of check matrices.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "mul_transpose width mismatch");
        let mut m = BitMatrix::zeros(self.rows, other.rows);
        for r in 0..self.rows {
            for c in 0..other.rows {
                let mut acc = 0u64;
                for (a, b) in self.row_words(r).iter().zip(other.row_words(c)) {
                    acc ^= a & b;
                }
                if acc.count_ones() % 2 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

/// Row space of a matrix in reduced echelon form, for repeated membership
/// queries against the same matrix.
pub struct RowSpace {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    cols: usize,
}

impl RowSpace {
    pub fn new(m: &BitMatrix) -> Self {
        let mut rows: Vec<BitVector> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for r in 0..m.rows() {
            let mut v = m.row(r);
            for (row, &p) in rows.iter().zip(&pivots) {
                if v.get(p) {
                    v.xor_assign(row);
                }
            }
            if let Some(p) = v.support().first().copied() {
                // Back-reduce existing rows so pivot columns stay unique.
                for (row, _) in rows.iter_mut().zip(&pivots) {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                rows.push(v);
                pivots.push(p);
            }
        }
        Self {
            rows,
            pivots,
            cols: m.cols(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn member(&self, v: &BitVector) -> Result<bool, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        Ok(v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::stopping_set_h1;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn mul_vec_identity() {
        let m = BitMatrix::identity(3);
        let v = BitVector::from_bools(&[true, false, true]);
        assert_eq!(m.mul_vec(&v).unwrap(), v);
    }

    #[test]
    fn mul_vec_parity_row() {
        let m = BitMatrix::from_rows(&[vec![true, true, true, true]]);
        let v = BitVector::from_bools(&[true, true, false, true]);
        assert_eq!(m.mul_vec(&v).unwrap(), BitVector::from_bools(&[true]));
    }

    #[test]
    fn mul_vec_stopping_set_instance() {
        // Erase variables 3 and 4; expected syndrome computed by a naive
        // per-row parity count over the explicit adjacency.
        let m = stopping_set_h1();
        let v = BitVector::from_support(8, &[3, 4]);
        let mut expected = BitVector::zeros(6);
        for r in 0..6 {
            let parity = (0..8).filter(|&c| m.get(r, c) && v.get(c)).count() % 2;
            expected.set(r, parity == 1);
        }
        // Check 1 sees one erased neighbor; checks 2 and 3 each see both and
        // cancel.
        assert_eq!(expected, BitVector::from_support(6, &[1]));
        assert_eq!(m.mul_vec(&v).unwrap(), expected);
    }

    #[test]
    fn mul_vec_dimension_mismatch() {
        let m = BitMatrix::identity(3);
        let v = BitVector::zeros(4);
        assert!(matches!(m.mul_vec(&v), Err(Gf2Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rank_identity_and_duplicates() {
        assert_eq!(BitMatrix::identity(4).rank(), 4);
        let dup = BitMatrix::from_rows(&[vec![true, false, true], vec![true, false, true]]);
        assert_eq!(dup.rank(), 1);
    }

    #[test]
    fn rank_invariant_under_row_ops() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..12);
            let mut m = BitMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.4) {
                        m.set(r, c, true);
                    }
                }
            }
            let rank = m.rank();
            let mut t = m.clone();
            for _ in 0..10 {
                let a = rng.gen_range(0..rows);
                let b = rng.gen_range(0..rows);
                if rng.gen_bool(0.5) {
                    t.swap_rows(a, b);
                } else if a != b {
                    t.xor_row_into(a, b);
                }
            }
            assert_eq!(t.rank(), rank);
        }
    }

    #[test]
    fn solve_restricted_empty_support() {
        let m = BitMatrix::from_rows(&[vec![true, true, false]]);
        let s = BitVector::zeros(1);
        let x = m.solve_restricted(&s, &[]).unwrap().unwrap();
        assert!(x.is_zero());
        assert_eq!(x.len(), 3);
    }

    #[test]
    fn solve_restricted_diagonal() {
        let m = BitMatrix::identity(3);
        let s = BitVector::from_bools(&[false, true, true]);
        let x = m.solve_restricted(&s, &[1, 2]).unwrap().unwrap();
        assert_eq!(x, BitVector::from_bools(&[false, true, true]));
    }

    #[test]
    fn solve_restricted_single_row() {
        let m = BitMatrix::from_rows(&[vec![true, true, true, false]]);
        let s = BitVector::from_bools(&[true]);
        let x = m.solve_restricted(&s, &[0]).unwrap().unwrap();
        assert_eq!(x, BitVector::from_support(4, &[0]));
        assert_eq!(m.solve_restricted(&s, &[3]).unwrap(), None);
    }

    #[test]
    fn solve_restricted_matches_enumeration() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..14);
            let mut m = BitMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.35) {
                        m.set(r, c, true);
                    }
                }
            }
            let mut s = BitVector::zeros(rows);
            for r in 0..rows {
                if rng.gen_bool(0.5) {
                    s.set(r, true);
                }
            }
            let support: Vec<usize> = (0..cols).filter(|_| rng.gen_bool(0.6)).collect();
            let all = m.enumerate_solutions(&s, &support, usize::MAX).unwrap();
            match m.solve_restricted(&s, &support).unwrap() {
                Some(x) => assert!(all.contains(&x), "solver output missing from enumeration"),
                None => assert!(all.is_empty(), "solver missed an existing solution"),
            }
        }
    }

    #[test]
    fn rowspace_member_examples() {
        let m = BitMatrix::from_rows(&[
            vec![true, true, false],
            vec![false, true, true],
        ]);
        assert!(m.rowspace_member(&BitVector::zeros(3)).unwrap());
        assert!(m.rowspace_member(&BitVector::from_bools(&[true, false, true])).unwrap());
        assert!(!m.rowspace_member(&BitVector::from_bools(&[true, false, false])).unwrap());
    }

    #[test]
    fn rowspace_member_closed_under_xor() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..10);
            let mut m = BitMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.5) {
                        m.set(r, c, true);
                    }
                }
            }
            let space = RowSpace::new(&m);
            // Two random combinations of rows are members; so is their XOR.
            let comb = |rng: &mut StdRng| {
                let mut v = BitVector::zeros(cols);
                for r in 0..rows {
                    if rng.gen_bool(0.5) {
                        v.xor_assign(&m.row(r));
                    }
                }
                v
            };
            let v1 = comb(&mut rng);
            let v2 = comb(&mut rng);
            assert!(space.member(&v1).unwrap());
            assert!(space.member(&v2).unwrap());
            assert!(space.member(&v1.xor(&v2)).unwrap());
        }
    }

    #[test]
    fn enumerate_trivial_and_pairs() {
        let m = BitMatrix::from_rows(&[vec![true, true]]);
        let zero = BitVector::zeros(1);
        assert_eq!(
            m.enumerate_solutions(&zero, &[], usize::MAX).unwrap(),
            vec![BitVector::zeros(2)]
        );
        let sols = m.enumerate_solutions(&zero, &[0, 1], usize::MAX).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.contains(&BitVector::zeros(2)));
        assert!(sols.contains(&BitVector::from_bools(&[true, true])));
    }

    #[test]
    fn enumerate_single_check_of_stopping_set() {
        // The cluster-local system of check 0 from the worked instance: one
        // check row over variables 0 and 1. With its syndrome bit set,
        // exactly the odd-parity assignments survive.
        let h1 = stopping_set_h1();
        let internal = BitMatrix::from_rows(&[(0..8).map(|c| h1.get(0, c)).collect()]);
        let s = BitVector::from_support(1, &[0]);
        let sols = internal.enumerate_solutions(&s, &[0, 1], usize::MAX).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.contains(&BitVector::from_support(8, &[0])));
        assert!(sols.contains(&BitVector::from_support(8, &[1])));
    }

    #[test]
    fn enumerate_guard() {
        let m = BitMatrix::zeros(1, 30);
        let s = BitVector::zeros(1);
        let support: Vec<usize> = (0..25).collect();
        assert!(matches!(
            m.enumerate_solutions(&s, &support, 10),
            Err(Gf2Error::SupportTooLarge { .. })
        ));
    }

    #[test]
    fn bitstring_round_trip() {
        let v: BitVector = "0110010".parse().unwrap();
        assert_eq!(v.to_string(), "0110010");
        assert_eq!(v.weight(), 3);
        assert!("01x".parse::<BitVector>().is_err());
    }
}
