//! CSS code representation, construction, and file interchange.
//!
//! A CSS code is a pair of parity-check matrices `(h1, h2)` over the same
//! qubit set with `h2 h1ᵀ = 0`: `h1` holds the Z-type checks that detect
//! Pauli-X errors, `h2` the X-type checks. Codes are built either with the
//! hypergraph product of two classical matrices or loaded from a directory of
//! alist files plus a small JSON manifest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::gf2::BitMatrix;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("check matrices disagree on qubit count: h1 has {h1_cols} columns, h2 has {h2_cols}")]
    ColumnMismatch { h1_cols: usize, h2_cols: usize },
    #[error("checks do not commute: h2·h1ᵀ has a nonzero entry at ({row},{col})")]
    NonCommuting { row: usize, col: usize },
    #[error("manifest declares k = {declared} but rank computation gives k = {computed}")]
    WrongK { declared: usize, computed: usize },
    #[error("manifest declares n = {declared} but matrices have {computed} columns")]
    WrongN { declared: usize, computed: usize },
    #[error("variable degree sum {edges} is not divisible by check degree {row_deg}")]
    DegreeMismatch { edges: usize, row_deg: usize },
    #[error("{path}: {source}")]
    Alist { path: PathBuf, source: AlistError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid manifest: {source}")]
    Manifest { path: PathBuf, source: serde_json::Error },
}

/// A CSS quantum code. Immutable after construction; `k` is always the
/// computed value `n - rank(h1) - rank(h2)`.
#[derive(Clone)]
pub struct CssCode {
    name: String,
    h1: BitMatrix,
    h2: BitMatrix,
    n: usize,
    k: usize,
}

impl CssCode {
    /// Validates the pair and computes `k`. Fails on the first violated
    /// invariant: equal column counts, then `h2 h1ᵀ = 0`.
    pub fn new(name: impl Into<String>, h1: BitMatrix, h2: BitMatrix) -> Result<Self, CodeError> {
        validate_pair(&h1, &h2)?;
        let n = h1.cols();
        let k = n - h1.rank() - h2.rank();
        Ok(Self {
            name: name.into(),
            h1,
            h2,
            n,
            k,
        })
    }

    /// Standard hypergraph product of two classical parity-check matrices.
    ///
    /// With `a` of size `ma x na` and `b` of size `mb x nb`, the code has
    /// `n = na·nb + ma·mb` qubits with
    /// `h1 = [I_na ⊗ b | aᵀ ⊗ I_mb]` and `h2 = [a ⊗ I_nb | I_ma ⊗ bᵀ]`.
    /// The product is orthogonal by construction, so this cannot fail.
    pub fn hypergraph_product(name: impl Into<String>, a: &BitMatrix, b: &BitMatrix) -> CssCode {
        assert!(a.rows() > 0 && a.cols() > 0 && b.rows() > 0 && b.cols() > 0, "empty factor");
        let h1 = BitMatrix::identity(a.cols())
            .kron(b)
            .hstack(&a.transposed().kron(&BitMatrix::identity(b.rows())));
        let h2 = a
            .kron(&BitMatrix::identity(b.cols()))
            .hstack(&BitMatrix::identity(a.rows()).kron(&b.transposed()));
        CssCode::new(name, h1, h2).expect("hypergraph product is orthogonal by construction")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Z-type checks (rows check Pauli-X errors).
    pub fn h1(&self) -> &BitMatrix {
        &self.h1
    }

    /// X-type checks (rows check Pauli-Z errors).
    pub fn h2(&self) -> &BitMatrix {
        &self.h2
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The same code with the roles of the two check matrices exchanged.
    /// Decoding Pauli-Z errors is decoding Pauli-X errors on this code.
    pub fn role_swapped(&self) -> CssCode {
        CssCode {
            name: format!("{}-zside", self.name),
            h1: self.h2.clone(),
            h2: self.h1.clone(),
            n: self.n,
            k: self.k,
        }
    }

    /// Hex digest over dimensions and row data of both matrices; identifies a
    /// code independently of its name.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        for m in [&self.h1, &self.h2] {
            hasher.update((m.rows() as u64).to_le_bytes());
            hasher.update((m.cols() as u64).to_le_bytes());
            for r in 0..m.rows() {
                let row = m.row(r);
                let support: Vec<u64> = row.support().iter().map(|&c| c as u64).collect();
                for s in support {
                    hasher.update(s.to_le_bytes());
                }
                hasher.update(u64::MAX.to_le_bytes());
            }
        }
        hasher
            .finalize()
            .iter()
            .fold(String::new(), |mut acc, byte| {
                let _ = write!(acc, "{byte:02x}");
                acc
            })
    }

    /// Writes `h1.alist`, `h2.alist`, and `code.json` into `dir`.
    pub fn save_dir(&self, dir: &Path) -> Result<(), CodeError> {
        std::fs::create_dir_all(dir).map_err(|source| CodeError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        write_alist_file(&self.h1, &dir.join("h1.alist"))?;
        write_alist_file(&self.h2, &dir.join("h2.alist"))?;
        let manifest = CodeManifest {
            name: self.name.clone(),
            n: self.n,
            k: self.k,
            h1_path: "h1.alist".into(),
            h2_path: "h2.alist".into(),
        };
        let path = dir.join("code.json");
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        std::fs::write(&path, text).map_err(|source| CodeError::Io { path, source })
    }

    /// Loads a code saved with [`save_dir`](Self::save_dir), revalidating all
    /// invariants including the declared `n` and `k`.
    pub fn load_dir(dir: &Path) -> Result<CssCode, CodeError> {
        let manifest_path = dir.join("code.json");
        let text = std::fs::read_to_string(&manifest_path).map_err(|source| CodeError::Io {
            path: manifest_path.clone(),
            source,
        })?;
        let manifest: CodeManifest =
            serde_json::from_str(&text).map_err(|source| CodeError::Manifest {
                path: manifest_path,
                source,
            })?;
        let h1 = read_alist_file(&dir.join(&manifest.h1_path))?;
        let h2 = read_alist_file(&dir.join(&manifest.h2_path))?;
        let code = CssCode::new(manifest.name, h1, h2)?;
        if code.n != manifest.n {
            return Err(CodeError::WrongN {
                declared: manifest.n,
                computed: code.n,
            });
        }
        if code.k != manifest.k {
            return Err(CodeError::WrongK {
                declared: manifest.k,
                computed: code.k,
            });
        }
        Ok(code)
    }
}

impl std::fmt::Debug for CssCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CssCode({} [[{},{}]])", self.name, self.n, self.k)
    }
}

/// Checks the CSS invariants on a raw matrix pair, reporting the first
/// violation.
pub fn validate_pair(h1: &BitMatrix, h2: &BitMatrix) -> Result<(), CodeError> {
    if h1.cols() != h2.cols() {
        return Err(CodeError::ColumnMismatch {
            h1_cols: h1.cols(),
            h2_cols: h2.cols(),
        });
    }
    let product = h2.mul_transpose(h1);
    for r in 0..product.rows() {
        for c in 0..product.cols() {
            if product.get(r, c) {
                return Err(CodeError::NonCommuting { row: r, col: c });
            }
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CodeManifest {
    name: String,
    n: usize,
    k: usize,
    h1_path: String,
    h2_path: String,
}

/// Parity-check matrix of the length-`n` repetition code: `n-1` rows with two
/// adjacent ones each.
pub fn repetition_code(n: usize) -> BitMatrix {
    assert!(n >= 2, "repetition code needs length >= 2");
    let mut m = BitMatrix::zeros(n - 1, n);
    for r in 0..n - 1 {
        m.set(r, r, true);
        m.set(r, r + 1, true);
    }
    m
}

/// Seeded `(col_deg, row_deg)`-biregular matrix of size
/// `(n0·col_deg/row_deg) x n0`, built with configuration-model edge matching.
/// The whole matching restarts whenever the permutation produces a repeated
/// edge, so the result is simple and deterministic given the seed.
pub fn regular_ldpc(
    n0: usize,
    col_deg: usize,
    row_deg: usize,
    seed: u64,
) -> Result<BitMatrix, CodeError> {
    let edges = n0 * col_deg;
    if row_deg == 0 || !edges.is_multiple_of(row_deg) {
        return Err(CodeError::DegreeMismatch { edges, row_deg });
    }
    let m0 = edges / row_deg;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let var_stubs: Vec<usize> = (0..n0).flat_map(|v| std::iter::repeat_n(v, col_deg)).collect();
    let mut check_stubs: Vec<usize> =
        (0..m0).flat_map(|c| std::iter::repeat_n(c, row_deg)).collect();
    'restart: loop {
        check_stubs.shuffle(&mut rng);
        let mut matrix = BitMatrix::zeros(m0, n0);
        for (&v, &c) in var_stubs.iter().zip(&check_stubs) {
            if matrix.get(c, v) {
                continue 'restart;
            }
            matrix.set(c, v, true);
        }
        return Ok(matrix);
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlistError {
    #[error("line {line}: expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: index {index} out of range 1..={max} (entries are 1-based)")]
    IndexOutOfRange { line: usize, index: isize, max: usize },
    #[error("line {line}: degree {degree} exceeds declared maximum {max}")]
    DegreeTooLarge { line: usize, degree: usize, max: usize },
    #[error("column and row lists disagree on entry (row {row}, col {col})")]
    ListDisagreement { row: usize, col: usize },
    #[error("line {line}: duplicate index {index}")]
    Duplicate { line: usize, index: usize },
}

/// Serializes to the sparse alist interchange layout: `n m`, the maximum
/// column/row degrees, per-column and per-row degree lists, then 1-based
/// neighbor lists (one line per column, one per row). Lists are written
/// without zero padding; a degree-0 node yields an empty line.
pub fn write_alist(m: &BitMatrix) -> String {
    let (rows, cols) = (m.rows(), m.cols());
    let mut col_lists: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut row_lists: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (r, row_list) in row_lists.iter_mut().enumerate() {
        for c in m.row(r).support() {
            col_lists[c].push(r + 1);
            row_list.push(c + 1);
        }
    }
    let max_col = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let join = |l: &[usize]| l.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "{cols} {rows}");
    let _ = writeln!(out, "{max_col} {max_row}");
    let _ = writeln!(out, "{}", join(&col_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    let _ = writeln!(out, "{}", join(&row_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    for l in &col_lists {
        let _ = writeln!(out, "{}", join(l));
    }
    for l in &row_lists {
        let _ = writeln!(out, "{}", join(l));
    }
    out
}

/// Parses the alist layout produced by [`write_alist`]. Errors carry 1-based
/// line numbers. Zero entries are rejected: the format here is unpadded and
/// all indices are 1-based.
pub fn parse_alist(text: &str) -> Result<BitMatrix, AlistError> {
    let lines: Vec<&str> = text.lines().collect();
    let ints_at = |idx: usize, expected: &'static str| -> Result<Vec<isize>, AlistError> {
        let line = lines.get(idx).copied().unwrap_or("");
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<isize>().map_err(|_| AlistError::Malformed {
                    line: idx + 1,
                    expected,
                })
            })
            .collect()
    };
    let header = ints_at(0, "two integers: n m")?;
    let [cols, rows] = header[..] else {
        return Err(AlistError::Malformed {
            line: 1,
            expected: "two integers: n m",
        });
    };
    if cols < 0 || rows < 0 {
        return Err(AlistError::Malformed {
            line: 1,
            expected: "nonnegative n m",
        });
    }
    let (cols, rows) = (cols as usize, rows as usize);
    let maxima = ints_at(1, "two integers: max column and row degree")?;
    let [max_col, max_row] = maxima[..] else {
        return Err(AlistError::Malformed {
            line: 2,
            expected: "two integers: max column and row degree",
        });
    };
    let degrees = |idx: usize, count: usize, expected: &'static str| {
        let v = ints_at(idx, expected)?;
        if v.len() != count || v.iter().any(|&d| d < 0) {
            return Err(AlistError::Malformed { line: idx + 1, expected });
        }
        Ok(v.into_iter().map(|d| d as usize).collect::<Vec<_>>())
    };
    let col_degs = degrees(2, cols, "one degree per column")?;
    let row_degs = degrees(3, rows, "one degree per row")?;
    for &d in &col_degs {
        if d as isize > max_col {
            return Err(AlistError::DegreeTooLarge {
                line: 3,
                degree: d,
                max: max_col.max(0) as usize,
            });
        }
    }
    for &d in &row_degs {
        if d as isize > max_row {
            return Err(AlistError::DegreeTooLarge {
                line: 4,
                degree: d,
                max: max_row.max(0) as usize,
            });
        }
    }

    let read_list = |idx: usize, degree: usize, max_index: usize| -> Result<Vec<usize>, AlistError> {
        let entries = ints_at(idx, "whitespace-separated 1-based indices")?;
        if entries.len() != degree {
            return Err(AlistError::Malformed {
                line: idx + 1,
                expected: "as many indices as the declared degree",
            });
        }
        let mut seen = Vec::with_capacity(degree);
        for &e in &entries {
            if e < 1 || e as usize > max_index {
                return Err(AlistError::IndexOutOfRange {
                    line: idx + 1,
                    index: e,
                    max: max_index,
                });
            }
            let e = e as usize - 1;
            if seen.contains(&e) {
                return Err(AlistError::Duplicate {
                    line: idx + 1,
                    index: e + 1,
                });
            }
            seen.push(e);
        }
        Ok(seen)
    };

    let mut matrix = BitMatrix::zeros(rows, cols);
    for (c, &deg) in col_degs.iter().enumerate() {
        for r in read_list(4 + c, deg, rows)? {
            matrix.set(r, c, true);
        }
    }
    // The row lists are redundant; parse them and demand exact agreement.
    let mut from_rows = BitMatrix::zeros(rows, cols);
    for (r, &deg) in row_degs.iter().enumerate() {
        for c in read_list(4 + cols + r, deg, cols)? {
            from_rows.set(r, c, true);
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            if matrix.get(r, c) != from_rows.get(r, c) {
                return Err(AlistError::ListDisagreement { row: r + 1, col: c + 1 });
            }
        }
    }
    Ok(matrix)
}

pub fn write_alist_file(m: &BitMatrix, path: &Path) -> Result<(), CodeError> {
    std::fs::write(path, write_alist(m)).map_err(|source| CodeError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_alist_file(path: &Path) -> Result<BitMatrix, CodeError> {
    let text = std::fs::read_to_string(path).map_err(|source| CodeError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_alist(&text).map_err(|source| CodeError::Alist {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVector;

    #[test]
    fn validate_accepts_orthogonal_pair() {
        let h1 = BitMatrix::from_rows(&[
            vec![true, true, false, false],
            vec![false, false, true, true],
        ]);
        let h2 = BitMatrix::from_rows(&[vec![true, true, true, true]]);
        assert!(validate_pair(&h1, &h2).is_ok());
        let code = CssCode::new("toy", h1, h2).unwrap();
        assert_eq!((code.n(), code.k()), (4, 1));
    }

    #[test]
    fn validate_rejects_odd_overlap() {
        let h1 = BitMatrix::from_rows(&[vec![true, false]]);
        let h2 = BitMatrix::from_rows(&[vec![true, false]]);
        match CssCode::new("bad", h1, h2) {
            Err(CodeError::NonCommuting { row: 0, col: 0 }) => {}
            other => panic!("expected NonCommuting, got {other:?}"),
        }
    }

    #[test]
    fn validate_rejects_column_mismatch() {
        let h1 = BitMatrix::zeros(1, 3);
        let h2 = BitMatrix::zeros(1, 4);
        assert!(matches!(
            validate_pair(&h1, &h2),
            Err(CodeError::ColumnMismatch { .. })
        ));
    }

    #[test]
    fn product_of_length_two_repetition() {
        let rep2 = BitMatrix::from_rows(&[vec![true, true]]);
        let code = CssCode::hypergraph_product("surface-ish", &rep2, &rep2);
        assert_eq!((code.n(), code.k()), (5, 1));
    }

    #[test]
    fn product_of_length_three_repetition() {
        let rep3 = repetition_code(3);
        let code = CssCode::hypergraph_product("hgp-rep3", &rep3, &rep3);
        assert_eq!((code.n(), code.k()), (13, 1));
        assert_eq!(code.h1().rank(), 6);
        assert_eq!(code.h2().rank(), 6);
    }

    #[test]
    fn square_product_k_is_square_of_classical_k() {
        // Full-row-rank factors: k = (na - ma)^2.
        for n in [3usize, 4, 5] {
            let rep = repetition_code(n);
            assert_eq!(rep.rank(), n - 1);
            let code = CssCode::hypergraph_product("rep", &rep, &rep);
            assert_eq!(code.k(), 1);
        }
        let m = regular_ldpc(8, 2, 4, 11).unwrap();
        if m.rank() == m.rows() {
            let k0 = m.cols() - m.rows();
            let code = CssCode::hypergraph_product("reg", &m, &m);
            assert_eq!(code.k(), k0 * k0);
        }
    }

    #[test]
    fn regular_ldpc_degree_profile() {
        let m = regular_ldpc(32, 3, 4, 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (24, 32));
        for c in 0..32 {
            let weight = (0..24).filter(|&r| m.get(r, c)).count();
            assert_eq!(weight, 3, "column {c}");
        }
        for r in 0..24 {
            assert_eq!(m.row(r).weight(), 4, "row {r}");
        }
        // Deterministic per seed.
        assert_eq!(regular_ldpc(32, 3, 4, 0).unwrap(), m);
        assert_ne!(regular_ldpc(32, 3, 4, 1).unwrap(), m);
    }

    #[test]
    fn regular_ldpc_forced_single_row() {
        let m = regular_ldpc(4, 1, 4, 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 4));
        assert_eq!(m.row(0), BitVector::from_bools(&[true; 4]));
    }

    #[test]
    fn regular_ldpc_divisibility() {
        assert!(matches!(
            regular_ldpc(5, 2, 4, 0),
            Err(CodeError::DegreeMismatch { edges: 10, row_deg: 4 })
        ));
    }

    #[test]
    fn alist_round_trip_identity() {
        let m = BitMatrix::identity(3);
        assert_eq!(parse_alist(&write_alist(&m)).unwrap(), m);
    }

    #[test]
    fn alist_column_list_example() {
        let text = "4 2\n2 3\n1 2 1 0\n2 2\n1\n1 2\n2\n\n1 2\n2 3\n";
        let m = parse_alist(text).unwrap();
        let expected = BitMatrix::from_rows(&[
            vec![true, true, false, false],
            vec![false, true, true, false],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn alist_zero_index_is_error() {
        let text = "2 1\n1 2\n1 1\n2\n0\n1\n1 2\n";
        match parse_alist(text) {
            Err(AlistError::IndexOutOfRange { line: 5, index: 0, .. }) => {}
            other => panic!("expected IndexOutOfRange at line 5, got {other:?}"),
        }
    }

    #[test]
    fn alist_list_disagreement() {
        // Column lists describe [[1,0],[0,1]] but row lists describe the
        // anti-diagonal.
        let text = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n";
        assert!(matches!(
            parse_alist(text),
            Err(AlistError::ListDisagreement { .. })
        ));
    }

    #[test]
    fn alist_malformed_header() {
        assert!(matches!(
            parse_alist("banana\n"),
            Err(AlistError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn save_and_load_dir() {
        let dir = tempfile::tempdir().unwrap();
        let code = CssCode::hypergraph_product("hgp-rep3", &repetition_code(3), &repetition_code(3));
        code.save_dir(dir.path()).unwrap();
        let loaded = CssCode::load_dir(dir.path()).unwrap();
        assert_eq!(loaded.name(), "hgp-rep3");
        assert_eq!((loaded.n(), loaded.k()), (13, 1));
        assert_eq!(loaded.h1(), code.h1());
        assert_eq!(loaded.h2(), code.h2());
        assert_eq!(loaded.fingerprint(), code.fingerprint());
    }

    #[test]
    fn role_swap_exchanges_matrices() {
        let code = CssCode::hypergraph_product("hgp-rep3", &repetition_code(3), &repetition_code(3));
        let swapped = code.role_swapped();
        assert_eq!(swapped.h1(), code.h2());
        assert_eq!(swapped.h2(), code.h1());
        assert_eq!(swapped.k(), code.k());
    }
}
