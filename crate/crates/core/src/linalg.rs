//! Dense exact linear algebra over a [`Scalar`] field.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose j-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<S>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged matrix");
            for (i, v) in col.iter().enumerate() {
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

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<Matrix<T>, E> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_, _>>()? })
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix shapes");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shapes");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns (first-nonzero pivoting).
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = m[(r, j)].clone() * inv.clone();
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column in column order.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            out.push(v);
        }
        out
    }

    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Some solution of `self · x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// True when the row spaces spanned by `a` and `b` coincide.
pub fn same_span<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>], dim: usize) -> bool {
    let to_matrix = |vs: &[Vec<S>]| {
        if vs.is_empty() {
            Matrix::zeros(0, dim)
        } else {
            Matrix::from_rows(vs.to_vec())
        }
    };
    let ra = to_matrix(a).rank();
    let rb = to_matrix(b).rank();
    let both: Vec<Vec<S>> = a.iter().chain(b).cloned().collect();
    ra == rb && to_matrix(&both).rank() == ra
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatFn;
    use crate::scalar::{int, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), int(0));
    }

    #[test]
    fn kernel_uses_free_columns_in_order() {
        // nilpotent shift: columns (x·1, x·x, x·x²) in Q[x]/(x³)
        let a = m(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(a.kernel(), vec![vec![int(0), int(0), int(1)]]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[int(1), int(2)]).is_none());
        assert_eq!(a.solve(&[int(3), int(3)]).unwrap(), vec![int(3), int(0)]);
    }

    #[test]
    fn determinant_over_rational_functions() {
        let q = RatFn::q();
        let a = Matrix::from_rows(vec![vec![RatFn::zero(), q.clone()], vec![RatFn::from_i64(1), RatFn::zero()]]);
        assert_eq!(a.det(), -q);
    }

    proptest! {
        #[test]
        fn det_multiplicative(xs in prop::collection::vec(-4i64..5, 9), ys in prop::collection::vec(-4i64..5, 9)) {
            let a = Matrix::from_rows(xs.chunks(3).map(|r| r.iter().map(|&x| int(x)).collect()).collect());
            let b = Matrix::from_rows(ys.chunks(3).map(|r| r.iter().map(|&x| int(x)).collect()).collect());
            prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        }

        #[test]
        fn kernel_vectors_annihilate(xs in prop::collection::vec(-2i64..3, 12)) {
            let a = Matrix::from_rows(xs.chunks(4).map(|r| r.iter().map(|&x| int(x)).collect()).collect());
            let ker = a.kernel();
            prop_assert_eq!(ker.len() + a.rank(), 4);
            for v in ker {
                prop_assert!(a.mul_vec(&v).iter().all(Zero::is_zero));
            }
        }
    }
}
