//! The named verification suites. Each returns flat check records; the
//! caller sorts them by id.

mod algebra;
mod electroweak;
mod spinor;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::Check;
use super::scenario::Scenario;
use crate::error::{Error, Result};
use crate::numeric::{Backend, Mat, Scalar};

pub const SUITES: [&str; 8] = [
    "fn-identities",
    "spinor-clifford",
    "signatures",
    "gauge-algebra",
    "ew-breaking",
    "lagrangian-audit",
    "ecmd-point",
    "mass-shell",
];

/// Everything a suite may read.
pub struct Ctx<'a> {
    pub sc: &'a Scenario,
    pub backend: Backend,
    pub tol: f64,
}

impl Ctx<'_> {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.sc.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }

    fn samples(&self) -> usize {
        self.sc.samples.max(1)
    }
}

/// Expands `all` and checks names; keeps the canonical order.
pub fn resolve_suites(requested: &[String]) -> Result<Vec<String>> {
    if requested.is_empty() || requested.iter().any(|s| s == "all") {
        return Ok(SUITES.iter().map(|s| s.to_string()).collect());
    }
    if let Some(bad) = requested.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(Error::UnknownSuite(bad.clone()));
    }
    Ok(SUITES.iter().filter(|s| requested.iter().any(|r| r == *s)).map(|s| s.to_string()).collect())
}

macro_rules! on_backend {
    ($f:ident, $ctx:expr) => {
        match $ctx.backend {
            Backend::Exact => $f::<crate::numeric::Exact>($ctx),
            Backend::Float => $f::<num_complex::Complex64>($ctx),
        }
    };
}
pub(crate) use on_backend;

pub fn run_suite(name: &str, ctx: &Ctx) -> Result<Vec<Check>> {
    Ok(match name {
        "fn-identities" => algebra::fn_identities(ctx),
        "gauge-algebra" => algebra::gauge_algebra(ctx),
        "spinor-clifford" => spinor::clifford(ctx),
        "signatures" => spinor::signatures(ctx),
        "mass-shell" => spinor::mass_shell(ctx),
        "ew-breaking" => electroweak::breaking(ctx),
        "lagrangian-audit" => electroweak::audit(ctx),
        "ecmd-point" => electroweak::ecmd(ctx),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

fn tol_for<F: Scalar>(tol: f64) -> f64 {
    match F::BACKEND {
        Backend::Exact => 0.0,
        Backend::Float => tol,
    }
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn show<F: Scalar>(x: &F) -> String {
    x.to_json().to_string()
}

fn resid<F: Scalar>(a: &Mat<F>, b: &Mat<F>) -> f64 {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return f64::INFINITY;
    }
    (a - b).max_abs()
}

/// A check that could not be evaluated.
fn broken(id: &str, anchor: &str, backend: Backend, e: &Error) -> Check {
    Check::new(id, false, anchor, backend).values(format!("error: {e}"), "a value")
}

/// Compares matrices exactly (exact backend) or within `tol`.
fn mat_check<F: Scalar>(id: &str, anchor: &str, got: &Mat<F>, want: &Mat<F>, tol: f64) -> Check {
    let t = tol_for::<F>(tol);
    let ok = got.rows() == want.rows() && got.cols() == want.cols() && got.approx_eq(want, t);
    Check::new(id, ok, anchor, F::BACKEND).values(format!("max residual {}", sci(resid(got, want))), "0").tol(t)
}

/// Counts failures over sampled cases.
fn count_check(id: &str, anchor: &str, backend: Backend, bad: usize, total: usize, tol: f64) -> Check {
    Check::new(id, bad == 0, anchor, backend)
        .values(format!("{bad} of {total} cases violate"), "0 violations")
        .tol(tol)
}
