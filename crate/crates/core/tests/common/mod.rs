//! Shared test utilities: independent oracles and a deterministic generator.
//!
//! The oracles deliberately avoid the library's elimination and spectral
//! code paths so they can serve as ground truth.

#![allow(dead_code)]

use bimat_core::matrix::Matrix;
use bimat_core::scalar::{rat, Rational, Ring, Scalar};
use bimat_core::BiMatrix;

/// Determinant by the signed permutation sum (Leibniz formula), built from
/// explicit permutation enumeration. Exponential; for small orders only.
pub fn leibniz_det(m: &Matrix<Rational>) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    let mut indices: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut indices, 0, 1, &mut |perm, sign| {
        let mut prod = if sign > 0 { rat(1) } else { rat(-1) };
        for (row, &col) in perm.iter().enumerate() {
            prod = &prod * m.get(row, col);
        }
        total = &total + &prod;
    });
    total
}

fn permute(
    indices: &mut Vec<usize>,
    start: usize,
    sign: i32,
    visit: &mut impl FnMut(&[usize], i32),
) {
    let n = indices.len();
    if start == n {
        visit(indices, sign);
        return;
    }
    for i in start..n {
        indices.swap(start, i);
        let s = if i == start { sign } else { -sign };
        permute(indices, start + 1, s, visit);
        indices.swap(start, i);
    }
}

/// Brute-force diagonalizability over Q for one component: gather the
/// eigenspace bases of every rational root, stack them into a square matrix,
/// and test invertibility with the permutation-sum determinant.
pub fn brute_force_diagonalizable(m: &Matrix<Rational>) -> bool {
    let n = m.rows();
    let char_poly = bimat_core::operator::char_polynomial(m).unwrap();
    let (roots, _) = char_poly.rational_roots();
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for (root, _) in roots {
        let mut shifted = m.clone();
        for i in 0..n {
            shifted.set(i, i, shifted.get(i, i) - &root);
        }
        cols.extend(shifted.nullspace());
    }
    if cols.len() != n {
        return false;
    }
    let basis = Matrix::from_fn(n, n, |r, c| cols[c][r].clone());
    !leibniz_det(&basis).is_zero()
}

/// Small deterministic xorshift generator; keeps test runs reproducible
/// without pulling in an RNG crate.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.int_in(lo as i64, hi as i64) as usize
    }

    pub fn rational(&mut self) -> Rational {
        Rational::new(self.int_in(-5, 5), self.int_in(1, 3))
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        let mut rng_cell = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            rng_cell.push(rat(self.int_in(-4, 4)));
        }
        Matrix::new(rows, cols, rng_cell)
    }

    pub fn rat_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            entries.push(self.rational());
        }
        Matrix::new(rows, cols, entries)
    }

    /// A valid (non-degenerate) bimatrix with integer entries.
    pub fn bimatrix(&mut self, dims1: (usize, usize), dims2: (usize, usize)) -> BiMatrix<Rational> {
        loop {
            let m1 = self.int_matrix(dims1.0, dims1.1);
            let m2 = self.int_matrix(dims2.0, dims2.1);
            if let Ok(b) = BiMatrix::new(m1, m2) {
                return b;
            }
        }
    }

    /// A square uniform bimatrix of the given order.
    pub fn square_bimatrix(&mut self, n: usize) -> BiMatrix<Rational> {
        self.bimatrix((n, n), (n, n))
    }

    pub fn nonsingular_matrix(&mut self, n: usize) -> Matrix<Rational> {
        loop {
            let m = self.int_matrix(n, n);
            if !m.det().unwrap().is_zero() {
                return m;
            }
        }
    }

    /// A bimatrix whose components are both invertible.
    pub fn nonsingular_bimatrix(&mut self, n1: usize, n2: usize) -> BiMatrix<Rational> {
        loop {
            let m1 = self.nonsingular_matrix(n1);
            let m2 = self.nonsingular_matrix(n2);
            if let Ok(b) = BiMatrix::new(m1, m2) {
                return b;
            }
        }
    }
}
