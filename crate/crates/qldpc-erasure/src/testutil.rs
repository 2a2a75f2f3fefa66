//! Fixtures shared across unit tests: two small worked instances and random
//! matrix sampling.

use rand::rngs::StdRng;
use rand::Rng;
use std::ops::Range;

use crate::gf2::BitMatrix;

/// Four checks over seven variables; variables {1,2,5} form a stopping set.
pub(crate) fn example_tanner_h() -> BitMatrix {
    let adj: [&[usize]; 4] = [&[0, 1, 2, 4], &[1, 2, 3, 5], &[2, 4, 5, 6], &[3, 4, 6]];
    matrix_from_adjacency(7, &adj)
}

/// Check matrix of the worked stopping-set instance used throughout the test
/// suite: six checks over eight variables, all of which form a stopping set.
/// Its residual graph decomposes into five clusters joined by cut nodes
/// (check 1, variable 5, check 5).
pub(crate) fn stopping_set_h1() -> BitMatrix {
    let adj: [&[usize]; 6] = [
        &[0, 1],
        &[0, 1, 2, 3, 5],
        &[3, 4],
        &[3, 4, 5],
        &[5, 6],
        &[5, 6, 7],
    ];
    matrix_from_adjacency(8, &adj)
}

/// Eleven-node graph with two articulation points and five biconnected
/// components, including two bridges.
pub(crate) fn block_example_edges() -> Vec<(usize, usize)> {
    vec![
        (0, 1),
        (1, 4),
        (4, 0),
        (2, 3),
        (3, 6),
        (6, 2),
        (2, 4),
        (4, 6),
        (4, 5),
        (5, 8),
        (8, 7),
        (7, 4),
        (7, 9),
        (7, 10),
    ]
}

pub(crate) fn matrix_from_adjacency(n_vars: usize, check_adj: &[&[usize]]) -> BitMatrix {
    let mut entries = Vec::new();
    for (c, vars) in check_adj.iter().enumerate() {
        for &v in *vars {
            entries.push((c, v));
        }
    }
    BitMatrix::from_entries(check_adj.len(), n_vars, &entries)
}

pub(crate) fn sample_sparse_matrix(
    rng: &mut StdRng,
    rows: Range<usize>,
    cols: Range<usize>,
    density: f64,
) -> BitMatrix {
    let rows = rng.gen_range(rows);
    let cols = rng.gen_range(cols);
    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                m.set(r, c, true);
            }
        }
    }
    m
}
