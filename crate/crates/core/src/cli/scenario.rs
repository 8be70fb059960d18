//! Scenario files: strict JSON, `"schema": 1`.
//!
//! Scalars are numbers or `"p/q"` strings; complex values are `[re, im]` or a
//! bare real. Field jets are either a bare value (constant field) or
//! `{"value": …, "d": [∂1, ∂2, ∂3, ∂4]}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ewsector::audit::FieldScales;
use crate::ewsector::{EWGaugeFields, EwPoint, FermionValue, HiggsValue};
use crate::numeric::{format_rational, parse_rational, rational_to_f64, Backend, Mat, Rational, Scalar};
use crate::scales::ScaleDim;
use crate::tetrad::{EcmdPoint, FieldJet, FiberForm, Tetrad};
use crate::twospinor::DiracSpinor;

pub const SCHEMA_VERSION: u32 = 1;

/// Built-in scenario used when no `--scenario` is given.
pub const DEFAULT_SCENARIO: &str = include_str!("../../scenarios/default.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Float(f64),
    Text(String),
}

impl Num {
    pub fn rational(&self) -> Result<Rational> {
        match self {
            Num::Float(x) => Rational::from_float(*x).ok_or_else(|| Error::Parse(format!("not finite: {x}"))),
            Num::Text(s) => parse_rational(s),
        }
    }

    pub fn to_f64(&self) -> Result<f64> {
        self.rational().map(|q| rational_to_f64(&q))
    }

    fn scalar<F: Scalar>(&self) -> Result<F> {
        self.rational().map(|q| F::from_rational(&q))
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.rational() {
            Ok(q) => f.write_str(&format_rational(&q)),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cx {
    Pair([Num; 2]),
    Real(Num),
}

impl Cx {
    pub fn scalar<F: Scalar>(&self) -> Result<F> {
        match self {
            Cx::Real(r) => r.scalar(),
            Cx::Pair([re, im]) => Ok(re.scalar::<F>()? + F::i() * im.scalar::<F>()?),
        }
    }

    pub fn c64(&self) -> Result<Complex64> {
        self.scalar()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetFull<T> {
    pub value: T,
    pub d: [T; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Jet<T> {
    Full(JetFull<T>),
    Const(T),
}

impl<T: Clone> Jet<T> {
    fn convert<U: Clone>(&self, f: impl Fn(&T) -> Result<U>, zero: U) -> Result<FieldJet<U>> {
        match self {
            Jet::Const(v) => Ok(FieldJet::constant(f(v)?, zero)),
            Jet::Full(j) => Ok(FieldJet {
                value: f(&j.value)?,
                d: [f(&j.d[0])?, f(&j.d[1])?, f(&j.d[2])?, f(&j.d[3])?],
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FermionInput {
    #[serde(rename = "R")]
    pub r: [Cx; 2],
    /// Row `α`, column `Ȧ`.
    #[serde(rename = "L")]
    pub l: [[Cx; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeInput {
    #[serde(rename = "A")]
    pub a: [Num; 4],
    #[serde(rename = "Z")]
    pub z: [Num; 4],
    #[serde(rename = "Wp")]
    pub wp: [Cx; 4],
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalesInput {
    pub psi: Option<ScaleDim>,
    pub phi: Option<ScaleDim>,
    pub m: Option<ScaleDim>,
}

/// One component of `R_{λμ ab}`; the antisymmetric partners are filled in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvatureEntry {
    pub fiber: [usize; 2],
    pub base: [usize; 2],
    pub value: Cx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EcmdInput {
    pub m: Num,
    pub inv_grav: Num,
    /// `Y_a`; derivatives are `∂_b Y_a` as `d[b][a]`.
    pub y: Jet<[Num; 4]>,
    /// `F_{λμ}` with lower fiber indices.
    pub f: [[Num; 4]; 4],
    /// Natural components `(u¹, u², χ₁, χ₂)`.
    pub psi: Jet<[Cx; 4]>,
    #[serde(default)]
    pub curvature: Vec<CurvatureEntry>,
    #[serde(default)]
    pub gamma_tilde: Option<[[[Cx; 2]; 2]; 4]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassShellInput {
    pub m: Num,
    /// Lower-index momentum `p_λ`.
    pub p: [Num; 4],
}

type Mat2 = [[Cx; 2]; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema: u32,
    pub name: String,
    #[serde(default = "default_backend")]
    pub backend: Backend,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Empty means every suite.
    #[serde(default)]
    pub suites: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    pub theta_w: f64,
    pub mu: Num,
    pub lambda: Num,
    /// Fermion mass used in the Yukawa-free EW evaluation; defaults to `mu`.
    #[serde(default)]
    pub mass: Option<Num>,
    pub phi: Jet<[Cx; 2]>,
    pub psi: Jet<FermionInput>,
    /// Isospin connection `X_a`; zero when absent.
    #[serde(default)]
    pub x: Option<Jet<[Mat2; 4]>>,
    pub gauge: GaugeInput,
    pub tetrad: [[Num; 4]; 4],
    #[serde(default)]
    pub scales: ScalesInput,
    #[serde(default)]
    pub ecmd: Option<EcmdInput>,
    #[serde(default)]
    pub mass_shell: Option<MassShellInput>,
}

fn default_backend() -> Backend {
    Backend::Exact
}

fn default_tolerance() -> f64 {
    1e-12
}

fn default_samples() -> usize {
    40
}

fn mat2<F: Scalar>(m: &Mat2) -> Result<Mat<F>> {
    Ok(Mat::from_rows(vec![
        vec![m[0][0].scalar()?, m[0][1].scalar()?],
        vec![m[1][0].scalar()?, m[1][1].scalar()?],
    ]))
}

fn fermion<F: Scalar>(f: &FermionInput) -> Result<FermionValue<F>> {
    Ok(FermionValue {
        psi_r: [f.r[0].scalar()?, f.r[1].scalar()?],
        psi_l: [[f.l[0][0].scalar()?, f.l[0][1].scalar()?], [f.l[1][0].scalar()?, f.l[1][1].scalar()?]],
    })
}

fn pair<F: Scalar>(v: &[Cx; 2]) -> Result<[F; 2]> {
    Ok([v[0].scalar()?, v[1].scalar()?])
}

fn quad<F: Scalar>(v: &[Num; 4]) -> Result<[F; 4]> {
    Ok([v[0].scalar()?, v[1].scalar()?, v[2].scalar()?, v[3].scalar()?])
}

fn mat4<F: Scalar>(rows: &[[Num; 4]; 4]) -> Result<Mat<F>> {
    let rows = rows.iter().map(|r| quad::<F>(r).map(Vec::from)).collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(rows))
}

fn zero_mats<F: Scalar>() -> [Mat<F>; 4] {
    std::array::from_fn(|_| Mat::zeros(2, 2))
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let sc: Scenario = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if sc.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", sc.schema)));
        }
        if !(sc.tolerance.is_finite() && sc.tolerance >= 0.0) {
            return Err(Error::Parse(format!("bad tolerance {}", sc.tolerance)));
        }
        Ok(sc)
    }

    pub fn default_scenario() -> Scenario {
        Scenario::parse(DEFAULT_SCENARIO).expect("built-in scenario parses")
    }

    pub fn field_scales(&self) -> FieldScales {
        let d = FieldScales::default();
        FieldScales {
            psi: self.scales.psi.clone().unwrap_or(d.psi),
            phi: self.scales.phi.clone().unwrap_or(d.phi),
            m: self.scales.m.clone().unwrap_or(d.m),
        }
    }

    pub fn tetrad<F: Scalar>(&self) -> Result<Tetrad<F>> {
        Tetrad::new(mat4(&self.tetrad)?)
    }

    pub fn higgs<F: Scalar>(&self) -> Result<HiggsValue<F>> {
        let phi = match &self.phi {
            Jet::Const(v) => v,
            Jet::Full(j) => &j.value,
        };
        HiggsValue::new(pair(phi)?, self.mu.scalar()?, self.lambda.scalar()?)
    }

    pub fn gauge_fields(&self) -> Result<EWGaugeFields> {
        let g = &self.gauge;
        let wp = [g.wp[0].c64()?, g.wp[1].c64()?, g.wp[2].c64()?, g.wp[3].c64()?];
        let f = |v: &[Num; 4]| -> Result<[f64; 4]> {
            Ok([v[0].to_f64()?, v[1].to_f64()?, v[2].to_f64()?, v[3].to_f64()?])
        };
        EWGaugeFields::new(f(&g.a)?, f(&g.z)?, wp, self.theta_w)
    }

    pub fn ew_point<F: Scalar>(&self) -> Result<EwPoint<F>> {
        let x = match &self.x {
            None => FieldJet::constant(zero_mats(), zero_mats()),
            Some(j) => j.convert(
                |slices| {
                    Ok([mat2(&slices[0])?, mat2(&slices[1])?, mat2(&slices[2])?, mat2(&slices[3])?])
                },
                zero_mats(),
            )?,
        };
        Ok(EwPoint {
            theta: self.tetrad()?,
            psi: self.psi.convert(fermion, FermionValue::zero())?,
            phi: self.phi.convert(pair, [F::zero(), F::zero()])?,
            x,
            m: self.mass.as_ref().unwrap_or(&self.mu).scalar()?,
            lambda: self.lambda.scalar()?,
        })
    }

    pub fn ecmd_point<F: Scalar>(&self) -> Result<Option<EcmdPoint<F>>> {
        let Some(e) = &self.ecmd else { return Ok(None) };
        let mut curvature = FiberForm::zero(2);
        for c in &e.curvature {
            let [l, m] = c.fiber;
            let [a, b] = c.base;
            if [l, m, a, b].iter().any(|&i| i > 3) || l == m || a == b {
                return Err(Error::Parse(format!("bad curvature index {:?} {:?}", c.fiber, c.base)));
            }
            let v: F = c.value.scalar()?;
            curvature.set(&[l, m], &[a, b], v.clone());
            curvature.set(&[m, l], &[a, b], -v.clone());
            curvature.set(&[l, m], &[b, a], -v.clone());
            curvature.set(&[m, l], &[b, a], v);
        }
        let gamma_tilde = match &e.gamma_tilde {
            None => None,
            Some(g) => Some([mat2(&g[0])?, mat2(&g[1])?, mat2(&g[2])?, mat2(&g[3])?]),
        };
        let spinor = |v: &[Cx; 4]| -> Result<DiracSpinor<F>> {
            Ok(DiracSpinor::new([v[0].scalar()?, v[1].scalar()?], [v[2].scalar()?, v[3].scalar()?]))
        };
        Ok(Some(EcmdPoint {
            theta: self.tetrad()?,
            curvature,
            y: e.y.convert(quad, [F::zero(), F::zero(), F::zero(), F::zero()])?,
            f: mat4(&e.f)?,
            psi: e.psi.convert(spinor, DiracSpinor::zero())?,
            gamma_tilde,
            m: e.m.scalar()?,
            inv_grav: e.inv_grav.scalar()?,
        }))
    }
}
