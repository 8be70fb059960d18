//! Unit-space exponents over the time, length and mass units, scaled values,
//! and reduction to powers of length.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{format_rational, parse_rational, rat, rat_int, Rational, Scalar};

/// Exponents `(d_T, d_L, d_M)` of `T^d_T L^d_L M^d_M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ScaleDim {
    pub t: Rational,
    pub l: Rational,
    pub m: Rational,
}

impl ScaleDim {
    pub fn new(t: Rational, l: Rational, m: Rational) -> Self {
        ScaleDim { t, l, m }
    }

    /// Integer-ratio shorthand: `ScaleDim::ratios((-1, 1), (3, 2), (1, 2))`.
    pub fn ratios(t: (i64, i64), l: (i64, i64), m: (i64, i64)) -> Self {
        ScaleDim::new(rat(t.0, t.1), rat(l.0, l.1), rat(m.0, m.1))
    }

    pub fn ints(t: i64, l: i64, m: i64) -> Self {
        ScaleDim::new(rat_int(t), rat_int(l), rat_int(m))
    }

    pub fn dimensionless() -> Self {
        ScaleDim::default()
    }

    /// `L^p`.
    pub fn length(p: Rational) -> Self {
        ScaleDim::new(Rational::zero(), p, Rational::zero())
    }

    pub fn length_int(p: i64) -> Self {
        ScaleDim::length(rat_int(p))
    }

    pub fn is_dimensionless(&self) -> bool {
        self.t.is_zero() && self.l.is_zero() && self.m.is_zero()
    }
}

/// Tensor product of scale spaces: exponents add.
pub fn dim_combine(a: &ScaleDim, b: &ScaleDim) -> ScaleDim {
    ScaleDim::new(&a.t + &b.t, &a.l + &b.l, &a.m + &b.m)
}

/// Rational power of a scale space; `r = -1` is the semi-dual.
pub fn dim_power(d: &ScaleDim, r: &Rational) -> ScaleDim {
    ScaleDim::new(&d.t * r, &d.l * r, &d.m * r)
}

/// Sum of several dims.
pub fn dim_product<'a>(dims: impl IntoIterator<Item = &'a ScaleDim>) -> ScaleDim {
    dims.into_iter().fold(ScaleDim::dimensionless(), |acc, d| dim_combine(&acc, d))
}

/// Length exponent after identifying `T` with `L` through `c` and `M` with
/// `L^-1` through `hbar`.
pub fn to_natural_units(d: &ScaleDim) -> Rational {
    &d.l + &d.t - &d.m
}

impl fmt::Display for ScaleDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("T", &self.t), ("L", &self.l), ("M", &self.m)]
            .into_iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(s, e)| format!("{s}^{}", format_rational(e)))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl FromStr for ScaleDim {
    type Err = Error;

    /// Accepts `"T^-1 L^3/2 M^1/2"`, any subset of the three factors in any
    /// order, `"L"` for `L^1`, and `"1"` for the dimensionless space.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut out = ScaleDim::default();
        if t == "1" {
            return Ok(out);
        }
        if t.is_empty() {
            return Err(Error::Parse("empty dimension literal".into()));
        }
        let mut seen = [false; 3];
        for tok in t.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, parse_rational(e)?),
                None => (tok, Rational::one()),
            };
            let slot = match base {
                "T" => 0,
                "L" => 1,
                "M" => 2,
                _ => return Err(Error::Parse(format!("unknown unit {base:?} in {s:?}"))),
            };
            if std::mem::replace(&mut seen[slot], true) {
                return Err(Error::Parse(format!("repeated unit {base:?} in {s:?}")));
            }
            *[&mut out.t, &mut out.l, &mut out.m][slot] = exp;
        }
        Ok(out)
    }
}

impl Serialize for ScaleDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ScaleDim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A value tagged with its scale dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledQuantity<F> {
    pub value: F,
    pub dim: ScaleDim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaledOpKind {
    Add,
    Mul,
}

impl<F: Scalar> ScaledQuantity<F> {
    pub fn new(value: F, dim: ScaleDim) -> Self {
        ScaledQuantity { value, dim }
    }
}

/// Adds (equal dims only) or multiplies scaled values.
pub fn scaled_op<F: Scalar>(
    a: &ScaledQuantity<F>,
    b: &ScaledQuantity<F>,
    kind: ScaledOpKind,
) -> Result<ScaledQuantity<F>> {
    match kind {
        ScaledOpKind::Add => {
            if a.dim != b.dim {
                return Err(Error::DimensionMismatch(a.dim.to_string(), b.dim.to_string()));
            }
            Ok(ScaledQuantity::new(a.value.clone() + b.value.clone(), a.dim.clone()))
        }
        ScaledOpKind::Mul => Ok(ScaledQuantity::new(
            a.value.clone() * b.value.clone(),
            dim_combine(&a.dim, &b.dim),
        )),
    }
}

/// Named physical constants and their dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coupling {
    SpeedOfLight,
    Planck,
    Gravitational,
    PositronCharge,
    Mass,
}

impl Coupling {
    pub const ALL: [Coupling; 5] = [
        Coupling::SpeedOfLight,
        Coupling::Planck,
        Coupling::Gravitational,
        Coupling::PositronCharge,
        Coupling::Mass,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Coupling::SpeedOfLight => "c",
            Coupling::Planck => "hbar",
            Coupling::Gravitational => "G",
            Coupling::PositronCharge => "e",
            Coupling::Mass => "m",
        }
    }

    pub fn dim(self) -> ScaleDim {
        match self {
            Coupling::SpeedOfLight => ScaleDim::ints(-1, 1, 0),
            Coupling::Planck => ScaleDim::ints(-1, 2, 1),
            Coupling::Gravitational => ScaleDim::ints(-2, 3, -1),
            Coupling::PositronCharge => ScaleDim::ratios((-1, 1), (3, 2), (1, 2)),
            Coupling::Mass => ScaleDim::ints(0, 0, 1),
        }
    }
}
