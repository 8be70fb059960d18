use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::Scalar;

/// Dense row-major matrix over a [`Scalar`].
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
    }

    pub fn diag(entries: &[F]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[F] {
        &self.data
    }
    pub fn to_rows(&self) -> Vec<Vec<F>> {
        self.data.chunks(self.cols.max(1)).map(<[F]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(F::conj)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.to_c64().norm()).fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.approx_eq(&self.adjoint(), tol)
    }

    /// Gaussian elimination to row-echelon form; returns (echelon, pivot columns, sign).
    fn eliminate(&self) -> (Self, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let best = (row..m.rows)
                .filter(|&r| !m[(r, col)].is_zero())
                .max_by(|&a, &b| {
                    m[(a, col)].to_c64().norm().total_cmp(&m[(b, col)].to_c64().norm())
                });
            let Some(p) = best else { continue };
            if p != row {
                m.swap_rows(p, row);
                flipped = !flipped;
            }
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for r in row + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone() * inv.clone();
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - f.clone() * m[(row, c)].clone();
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, flipped)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "det of non-square matrix");
        let (m, pivots, flipped) = self.eliminate();
        if pivots.len() < self.rows {
            return F::zero();
        }
        let d = (0..self.rows).fold(F::one(), |acc, i| acc * m[(i, i)].clone());
        if flipped {
            -d
        } else {
            d
        }
    }

    /// Rank, exact on the exact backend; on floats entries that cancel to
    /// exactly zero are the only ones dropped.
    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        for col in 0..n {
            let p = (col..n)
                .filter(|&r| !aug[(r, col)].is_zero())
                .max_by(|&a, &b| {
                    aug[(a, col)].to_c64().norm().total_cmp(&aug[(b, col)].to_c64().norm())
                })?;
            aug.swap_rows(p, col);
            let inv = aug[(col, col)].inv()?;
            for c in 0..2 * n {
                let v = aug[(col, c)].clone() * inv.clone();
                aug[(col, c)] = v;
            }
            for r in 0..n {
                if r == col || aug[(r, col)].is_zero() {
                    continue;
                }
                let f = aug[(r, col)].clone();
                for c in 0..2 * n {
                    let v = aug[(r, c)].clone() - f.clone() * aug[(col, c)].clone();
                    aug[(r, c)] = v;
                }
            }
        }
        Some(Self::from_fn(n, n, |r, c| aug[(r, c + n)].clone()))
    }

    /// Kronecker-style block matrix `[[a, b], [c, d]]` from equal square blocks.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        Self::from_fn(2 * n, 2 * n, |r, col| {
            let blk = match (r < n, col < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk[(r % n, col % n)].clone()
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(F::zero(), |acc, c| acc + self[(r, c)].clone() * v[c].clone())
            })
            .collect()
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Scalar> Mul for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out: Mat<F> = Mat::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let v = out[(r, c)].clone() + a.clone() * o[(k, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<F: Scalar> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Scalar> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Scalar> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        self.map(|v| -v.clone())
    }
}
