use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::{rat_int, rational_sign, rational_to_f64, Backend, Rational, Scalar};

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

/// Real element `a + b*sqrt(2)` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Q2 {
    pub a: Rational,
    pub b: Rational,
}

impl Q2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Q2 { a, b }
    }
    pub fn rational(a: Rational) -> Self {
        Q2 { a, b: Rational::zero() }
    }
    pub fn zero() -> Self {
        Q2::default()
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    /// Exact sign, deciding `a` against `-b*sqrt 2` by comparing squares.
    pub fn sign(&self) -> Option<Ordering> {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (None, s) | (s, None) => s,
            (Some(x), Some(y)) if x == y => Some(x),
            (Some(x), Some(_)) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * rat_int(2);
                match a2.cmp(&b2) {
                    Ordering::Greater => Some(x),
                    Ordering::Less => Some(x.reverse()),
                    Ordering::Equal => None,
                }
            }
        }
    }

    pub fn inv(&self) -> Option<Q2> {
        let n = &self.a * &self.a - &self.b * &self.b * rat_int(2);
        if n.is_zero() {
            return None;
        }
        Some(Q2 {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }
}

impl fmt::Display for Q2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use super::format_rational as fr;
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fr(&self.a)),
            (true, false) => write!(f, "{} r2", fr(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {} r2", fr(&self.a), sign, fr(&self.b.abs()))
            }
        }
    }
}

impl Add for Q2 {
    type Output = Q2;
    fn add(self, o: Q2) -> Q2 {
        Q2 { a: self.a + o.a, b: self.b + o.b }
    }
}
impl Sub for Q2 {
    type Output = Q2;
    fn sub(self, o: Q2) -> Q2 {
        Q2 { a: self.a - o.a, b: self.b - o.b }
    }
}
impl Neg for Q2 {
    type Output = Q2;
    fn neg(self) -> Q2 {
        Q2 { a: -self.a, b: -self.b }
    }
}
impl Mul for Q2 {
    type Output = Q2;
    fn mul(self, o: Q2) -> Q2 {
        let a = &self.a * &o.a + &self.b * &o.b * rat_int(2);
        let b = &self.a * &o.b + &self.b * &o.a;
        Q2 { a, b }
    }
}

/// Exact element of Q(i, sqrt 2): `re + i*im` with `re`, `im` in Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Exact {
    pub re: Q2,
    pub im: Q2,
}

impl Exact {
    pub fn new(re: Q2, im: Q2) -> Self {
        Exact { re, im }
    }
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Exact { re: Q2::rational(re), im: Q2::rational(im) }
    }
    pub fn int(re: i64, im: i64) -> Self {
        Exact::gaussian(rat_int(re), rat_int(im))
    }
    /// `(a + b sqrt2) + i (c + d sqrt2)`.
    pub fn from_parts(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Exact { re: Q2::new(a, b), im: Q2::new(c, d) }
    }
    /// The Gaussian-rational part when no sqrt 2 component is present.
    pub fn as_gaussian(&self) -> Option<(Rational, Rational)> {
        if self.re.b.is_zero() && self.im.b.is_zero() {
            Some((self.re.a.clone(), self.im.a.clone()))
        } else {
            None
        }
    }
}

impl fmt::Debug for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({}) + ({})i", self.re, self.im)
        }
    }
}

impl Add for Exact {
    type Output = Exact;
    fn add(self, o: Exact) -> Exact {
        Exact { re: self.re + o.re, im: self.im + o.im }
    }
}
impl Sub for Exact {
    type Output = Exact;
    fn sub(self, o: Exact) -> Exact {
        Exact { re: self.re - o.re, im: self.im - o.im }
    }
}
impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact { re: -self.re, im: -self.im }
    }
}
impl Mul for Exact {
    type Output = Exact;
    fn mul(self, o: Exact) -> Exact {
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        Exact { re, im }
    }
}

impl Scalar for Exact {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Exact::default()
    }
    fn one() -> Self {
        Exact::int(1, 0)
    }
    fn from_rational(q: &Rational) -> Self {
        Exact::gaussian(q.clone(), Rational::zero())
    }
    fn i() -> Self {
        Exact::int(0, 1)
    }
    fn sqrt2() -> Self {
        Exact { re: Q2::new(Rational::zero(), rat_int(1)), im: Q2::zero() }
    }
    fn conj(&self) -> Self {
        Exact { re: self.re.clone(), im: -self.im.clone() }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let ni = n.inv()?;
        Some(Exact { re: self.re.clone() * ni.clone(), im: -(self.im.clone() * ni) })
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn near_zero(&self, _tol: f64) -> bool {
        self.is_zero()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
    fn real_sign(&self, _tol: f64) -> Option<Ordering> {
        self.re.sign()
    }
    fn is_real(&self, _tol: f64) -> bool {
        self.im.is_zero()
    }
    /// Exact only for `q^2` and `2 q^2` with rational `q`.
    fn sqrt_real(&self) -> Option<Self> {
        if !self.im.is_zero() || !self.re.b.is_zero() || self.re.a.is_negative() {
            return None;
        }
        let v = &self.re.a;
        if let Some(r) = rational_sqrt(v) {
            return Some(Exact::from_rational(&r));
        }
        let half = v / rat_int(2);
        rational_sqrt(&half).map(|r| Exact { re: Q2::new(Rational::zero(), r), im: Q2::zero() })
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.re.to_string(), self.im.to_string()])
    }
}
