//! Scalar rings used throughout: exact rationals, the exact field Q(i, sqrt 2),
//! and binary64 complex numbers, plus a small dense matrix type.

mod exact;
mod mat;
mod spectral;

pub use exact::{Exact, Q2};
pub use mat::Mat;
pub use spectral::{
    charpoly, count_real_roots_by_sign, jacobi_eigenvalues, realify_hermitian, Signature,
};

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Which arithmetic a tensor or check runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

/// Field operations shared by [`Exact`] and [`Complex64`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
    /// The imaginary unit.
    fn i() -> Self;
    fn sqrt2() -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Exact zero test on the exact backend; `== 0` on floats.
    fn is_zero(&self) -> bool;
    /// Zero up to `tol` (ignored on the exact backend).
    fn near_zero(&self, tol: f64) -> bool;
    fn to_c64(&self) -> Complex64;
    /// Sign of the real part; `None` when it is zero (or below `tol` on floats).
    fn real_sign(&self, tol: f64) -> Option<Ordering>;
    /// Imaginary part is zero (exactly, or below `tol`).
    fn is_real(&self, tol: f64) -> bool;
    /// Square root of a nonnegative real value, when representable.
    fn sqrt_real(&self) -> Option<Self>;
    /// `[re, im]`; exact parts are strings (`"p/q"`, with `r2` marking sqrt 2).
    fn to_json(&self) -> serde_json::Value;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|v| self.clone() * v)
    }
    fn scale_i64(&self, n: i64) -> Self {
        self.clone() * Self::from_i64(n)
    }
    fn abs2(&self) -> Self {
        self.clone() * self.conj()
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).near_zero(tol)
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn sqrt2() -> Self {
        Complex64::new(std::f64::consts::SQRT_2, 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        if self.norm_sqr() == 0.0 {
            None
        } else {
            Some(Complex64::inv(self))
        }
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn near_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn real_sign(&self, tol: f64) -> Option<Ordering> {
        if self.re.abs() <= tol {
            None
        } else if self.re > 0.0 {
            Some(Ordering::Greater)
        } else {
            Some(Ordering::Less)
        }
    }
    fn is_real(&self, tol: f64) -> bool {
        self.im.abs() <= tol
    }
    fn sqrt_real(&self) -> Option<Self> {
        (self.re >= 0.0).then(|| Complex64::new(self.re.sqrt(), 0.0))
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.re, self.im])
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge operands: scale both down by the same power of two.
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
            let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Prints in lowest terms, `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_sign(q: &Rational) -> Option<Ordering> {
    if q.is_zero() {
        None
    } else if q.is_positive() {
        Some(Ordering::Greater)
    } else {
        Some(Ordering::Less)
    }
}
