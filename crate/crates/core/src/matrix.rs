//! Dense matrices over an exact [`Field`] and the elimination routines built on them.
//!
//! Row operations skip zero entries, which keeps the intertwiner systems
//! (mostly 0/±1 coefficients) cheap even with arbitrary-precision rationals.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    /// Builds from row vectors; all rows must share the length `cols`.
    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    /// Builds the matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns<F: Field<Elem = E>>(f: &F, rows: usize, columns: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(f, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.cols * rows.len());
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag<F: Field<Elem = E>>(f: &F, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(f, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

pub fn is_zero_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.data.iter().all(|x| f.is_zero(x))
}

pub fn mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix shapes do not compose");
    let mut out = Matrix::zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = &a[(i, k)];
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = &b[(k, j)];
                if f.is_zero(bkj) {
                    continue;
                }
                let t = f.mul(aik, bkj);
                out[(i, j)] = f.add(&out[(i, j)], &t);
            }
        }
    }
    out
}

pub fn mul_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            let mut acc = f.zero();
            for (k, x) in v.iter().enumerate() {
                if f.is_zero(x) || f.is_zero(&a[(i, k)]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(&a[(i, k)], x));
            }
            acc
        })
        .collect()
}

pub fn sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape());
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect(),
    }
}

pub fn add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape());
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect(),
    }
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().map(|x| f.mul(c, x)).collect(),
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref_in_place<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[(i, c)])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&m[(r, c)]).expect("pivot is nonzero");
        let support: Vec<usize> = (c..cols).filter(|&j| !f.is_zero(&m[(r, j)])).collect();
        for &j in &support {
            m[(r, j)] = f.mul(&m[(r, j)], &inv);
        }
        for i in 0..rows {
            if i == r || f.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = m[(i, c)].clone();
            for &j in &support {
                let t = f.mul(&factor, &m[(r, j)]);
                m[(i, j)] = f.sub(&m[(i, j)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut out = m.clone();
    let piv = rref_in_place(f, &mut out);
    (out, piv)
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    rref(f, m).1.len()
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &p) in pivots.iter().enumerate() {
            let e = &r[(row, free)];
            if !f.is_zero(e) {
                v[p] = f.neg(e);
            }
        }
        basis.push(v);
    }
    basis
}

/// Kernel basis as the columns of a `cols x k` matrix.
pub fn kernel_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let basis = nullspace(f, m);
    Matrix::from_columns(f, m.cols, &basis)
}

/// Indices of a maximal linearly independent subset of the columns, chosen greedily left to right.
pub fn independent_columns<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<usize> {
    if m.rows == 0 {
        return Vec::new();
    }
    rref(f, m).1
}

/// Columns spanning the column space of `m` (a subset of the original columns).
pub fn column_space<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let idx = independent_columns(f, m);
    m.select_columns(&idx)
}

/// Solves `a x = b`; `None` when inconsistent. Free variables are set to zero.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    assert_eq!(a.rows, b.rows);
    let aug = a.hstack(b);
    let (r, pivots) = rref(f, &aug);
    if pivots.iter().any(|&p| p >= a.cols) {
        return None;
    }
    let mut x = Matrix::zeros(f, a.cols, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(p, j)] = r[(row, a.cols + j)].clone();
        }
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if a.rows != a.cols {
        return None;
    }
    let n = a.rows;
    let aug = a.hstack(&Matrix::identity(f, n));
    let (r, pivots) = rref(f, &aug);
    if pivots.len() < n || !pivots.iter().take(n).copied().eq(0..n) {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select_columns(&cols).select_rows(&(0..n).collect::<Vec<_>>()))
}

pub fn is_invertible<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.rows == a.cols && (a.rows == 0 || rank(f, a) == a.rows)
}

/// Extends the (independent) columns of `basis` by standard basis vectors to a basis of
/// the ambient space; returns the indices of the added standard vectors.
pub fn complement_standard<F: Field>(f: &F, basis: &Matrix<F::Elem>) -> Vec<usize> {
    let n = basis.rows;
    let aug = basis.hstack(&Matrix::identity(f, n));
    let pivots = independent_columns(f, &aug);
    pivots
        .into_iter()
        .filter(|&p| p >= basis.cols)
        .map(|p| p - basis.cols)
        .collect()
}

/// Basis (as columns) of the intersection of the column spaces of `a` and `b`.
pub fn intersect_spaces<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.rows, b.rows);
    let n = a.rows;
    if a.cols == 0 || b.cols == 0 {
        return Matrix::zeros(f, n, 0);
    }
    // a x = b y  <=>  [a | -b] (x, y) = 0
    let neg_b = scale(f, &f.neg(&f.one()), b);
    let ker = nullspace(f, &a.hstack(&neg_b));
    let vecs: Vec<Vec<F::Elem>> = ker
        .iter()
        .map(|v| mul_vec(f, a, &v[..a.cols]))
        .collect();
    column_space(f, &Matrix::from_columns(f, n, &vecs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: Vec<Vec<i64>>) -> Matrix<num_rational::BigRational> {
        let f = Rationals;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.from_i64(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_kernel() {
        let f = Rationals;
        let m = q(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&f, &m), 2);
        let ker = nullspace(&f, &m);
        assert_eq!(ker.len(), 1);
        assert!(mul_vec(&f, &m, &ker[0]).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn solve_and_inverse() {
        let f = Rationals;
        let a = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mul(&f, &a, &inv), Matrix::identity(&f, 2));
        let b = q(vec![vec![3], vec![2]]);
        let x = solve(&f, &a, &b).unwrap();
        assert_eq!(mul(&f, &a, &x), b);
        assert!(inverse(&f, &q(vec![vec![1, 2], vec![2, 4]])).is_none());
        assert!(solve(&f, &q(vec![vec![1], vec![1]]), &q(vec![vec![1], vec![2]])).is_none());
    }

    #[test]
    fn intersection_and_complement() {
        let f = PrimeField::new(101).unwrap();
        let a = Matrix::from_rows(vec![vec![1, 0], vec![0, 1], vec![0, 0]], 2);
        let b = Matrix::from_rows(vec![vec![1, 0], vec![0, 0], vec![0, 1]], 2);
        let i = intersect_spaces(&f, &a, &b);
        assert_eq!(i.cols(), 1);
        let comp = complement_standard(&f, &a);
        assert_eq!(comp, vec![2]);
    }
}
