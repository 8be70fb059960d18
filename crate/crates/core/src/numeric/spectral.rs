use std::cmp::Ordering;

use num_complex::Complex64;
use serde::Serialize;

use super::{Mat, Scalar};

/// Inertia counts of a Hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Signature { plus, minus, zero }
    }
    pub fn is_degenerate(&self) -> bool {
        self.zero > 0
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

/// Coefficients `c[0..=n]` of `det(x I - A)` by Faddeev-LeVerrier.
pub fn charpoly<F: Scalar>(a: &Mat<F>) -> Vec<F> {
    assert!(a.is_square(), "charpoly of non-square matrix");
    let n = a.rows();
    let mut c = vec![F::zero(); n + 1];
    c[n] = F::one();
    let mut m = Mat::<F>::zeros(n, n);
    let id = Mat::<F>::identity(n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(&c[n - k + 1]);
        let am = a * &m;
        let kinv = F::from_i64(k as i64).inv().expect("k > 0");
        c[n - k] = -(am.trace() * kinv);
    }
    c
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = None;
    let mut count = 0;
    for s in signs {
        if let Some(l) = last {
            if l != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Positive, negative and zero root counts of a polynomial known to have only
/// real roots (Descartes' rule is exact in that case).
pub fn count_real_roots_by_sign<F: Scalar>(coeffs: &[F], tol: f64) -> Signature {
    let signs: Vec<Option<Ordering>> = coeffs.iter().map(|c| c.real_sign(tol)).collect();
    let zero = signs.iter().position(Option::is_some).unwrap_or(coeffs.len());
    let plus = sign_changes(signs.iter().filter_map(|s| *s));
    let minus = sign_changes(signs.iter().enumerate().filter_map(|(i, s)| {
        s.map(|o| if i % 2 == 1 { o.reverse() } else { o })
    }));
    Signature { plus, minus, zero }
}

/// Real symmetric `[[A, -B], [B, A]]` for a Hermitian `A + iB`; each
/// eigenvalue of the input appears twice.
pub fn realify_hermitian(h: &Mat<Complex64>) -> Vec<Vec<f64>> {
    let n = h.rows();
    let mut out = vec![vec![0.0; 2 * n]; 2 * n];
    for r in 0..n {
        for c in 0..n {
            let z = h[(r, c)];
            out[r][c] = z.re;
            out[r + n][c + n] = z.re;
            out[r][c + n] = -z.im;
            out[r + n][c] = z.im;
        }
    }
    out
}

/// Cyclic Jacobi rotations for a real symmetric matrix; eigenvalues ascending.
pub fn jacobi_eigenvalues(sym: &[Vec<f64>]) -> Vec<f64> {
    let n = sym.len();
    let mut a: Vec<Vec<f64>> = sym.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum();
        let scale: f64 = a.iter().flatten().map(|v| v * v).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}
