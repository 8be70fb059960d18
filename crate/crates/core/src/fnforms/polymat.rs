use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::numeric::Rational;
use crate::poly::{Poly, Var};

/// Dense matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMat { rows, cols, data: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        PolyMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn depends_on_fiber(&self) -> bool {
        self.data.iter().any(|p| p.depends_on(|v| matches!(v, Var::Y(_))))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> PolyMat {
        PolyMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|p| p.scale(s)).collect() }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMat {
        PolyMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn derivative(&self, v: Var) -> PolyMat {
        self.map(|p| p.derivative(v))
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn commutator(&self, o: &PolyMat) -> PolyMat {
        &(self * o) - &(o * self)
    }

    /// Determinant by cofactor expansion over column subsets, memoized.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut memo: HashMap<u32, Poly> = HashMap::new();
        self.minor_det(0, (1u32 << n) - 1, &mut memo)
    }

    // Determinant of rows `row..n` against the columns in `mask`.
    fn minor_det(&self, row: usize, mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if row == self.rows {
            return Poly::one();
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Poly::zero();
        let mut sign = 1i64;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let e = &self[(row, c)];
            if !e.is_zero() {
                let sub = self.minor_det(row + 1, mask & !(1 << c), memo);
                acc.add_assign_ref(&(e * &sub).scale_i64(sign));
            }
            sign = -sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    fn without(&self, r0: usize, c0: usize) -> PolyMat {
        PolyMat::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            self[(if r < r0 { r } else { r + 1 }, if c < c0 { c } else { c + 1 })].clone()
        })
    }

    /// Classical adjugate: `A adj(A) = det(A) I`.
    pub fn adjugate(&self) -> PolyMat {
        let n = self.rows;
        if n == 1 {
            return PolyMat::identity(1);
        }
        PolyMat::from_fn(n, n, |r, c| {
            let m = self.without(c, r).det();
            if (r + c) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    /// Inverse when the determinant is a nonzero constant.
    pub fn inverse_unimodular(&self) -> Option<PolyMat> {
        let d = self.det().as_constant()?;
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.adjugate().scale(&num_traits::Inv::inv(d)))
    }
}

impl Index<(usize, usize)> for PolyMat {
    type Output = Poly;
    fn index(&self, (r, c): (usize, usize)) -> &Poly {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for PolyMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Poly {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &PolyMat {
    type Output = PolyMat;
    fn mul(self, o: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, o.rows, "matrix shapes do not chain");
        let mut out = PolyMat::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = &self[(r, m)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(m, c)];
                    if !b.is_zero() {
                        out[(r, c)].add_assign_ref(&(a * b));
                    }
                }
            }
        }
        out
    }
}

impl Add for &PolyMat {
    type Output = PolyMat;
    fn add(self, o: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        PolyMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &PolyMat {
    type Output = PolyMat;
    fn sub(self, o: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        PolyMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &PolyMat {
    type Output = PolyMat;
    fn neg(self) -> PolyMat {
        self.map(|p| -p)
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
