//! Deterministic inputs for the benchmarks in `benches/`.

use doiko_core::{Field, Matrix, Q};

/// A dense `rows x cols` rational matrix of rank `min(rows, cols, rank)`,
/// built as a product of two integer matrices with small fractional entries.
pub fn low_rank(rows: usize, cols: usize, rank: usize) -> Matrix<Q> {
    let entry = |i: usize, j: usize, salt: i64| {
        let v = ((i as i64 + 1) * 7 + (j as i64 + 3) * 13 + salt) % 11 - 5;
        Q::new(v, (j as i64 % 3) + 1)
    };
    let left = Matrix::from_rows(rows, rank, (0..rows).map(|i| (0..rank).map(|k| entry(i, k, 1)).collect()).collect())
        .expect("left factor");
    let right = Matrix::from_rows(rank, cols, (0..rank).map(|k| (0..cols).map(|j| entry(k, j, 4)).collect()).collect())
        .expect("right factor");
    left.mul(&right)
}

/// The same matrix with its integer numerators reduced modulo `P`.
pub fn reduced<const P: u64>(m: &Matrix<Q>) -> Matrix<doiko_core::Fp<P>> {
    let rows = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.reduce_mod::<P>().unwrap_or_else(doiko_core::Fp::zero)).collect())
        .collect();
    Matrix::from_rows(m.rows(), m.cols(), rows).expect("same shape")
}
