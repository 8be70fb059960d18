//! Batch front end: scenario files in, deterministic reports out.
//!
//! The `ewgeom` binary is a thin clap wrapper over [`verify`], [`eval`] and
//! [`dump::dump`].

pub mod dump;
pub mod report;
pub mod scenario;
pub mod suites;

use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ewsector::audit::full_audit;
use crate::ewsector::{
    assemble_w, ew_lagrangian_point, hat_w, higgs_polar, higgs_potential, potential_stationary, w_components,
    IsospinFrame, StationaryKind,
};
use crate::numeric::{Backend, Exact, Scalar};
use crate::scales::ScaledQuantity;
use crate::tetrad::{det_theta, ecmd_lagrangian_point};

pub use report::{Check, Report, Status};
pub use scenario::Scenario;
pub use suites::SUITES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Text,
    Json,
}

/// Overrides coming from the command line; `None` keeps the scenario's value.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub suites: Vec<String>,
    pub backend: Option<Backend>,
    pub tol: Option<f64>,
}

/// Reads a scenario file, or the built-in default when `path` is `None`.
pub fn load_scenario(path: Option<&Path>) -> Result<Scenario> {
    match path {
        None => Ok(Scenario::default_scenario()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Scenario::parse(&text)
        }
    }
}

/// Runs the requested suites concurrently and merges by check id.
pub fn verify(sc: &Scenario, ov: &Overrides) -> Result<Report> {
    let requested = if ov.suites.is_empty() { &sc.suites } else { &ov.suites };
    let names = suites::resolve_suites(requested)?;
    let tol = ov.tol.unwrap_or(sc.tolerance);
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::Parse(format!("bad tolerance {tol}")));
    }
    let backend = ov.backend.unwrap_or(sc.backend);
    let ctx = suites::Ctx { sc, backend, tol };
    let results: Vec<Result<Vec<Check>>> = std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(|| suites::run_suite(n, &ctx))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(Report::new(&sc.name, backend, tol, names, checks))
}

fn quantity<F: Scalar>(q: &ScaledQuantity<F>) -> Value {
    json!({ "value": q.value.to_json(), "dim": q.dim.to_string() })
}

fn or_error<T>(r: Result<T>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(v) => f(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn eval_on<F: Scalar>(sc: &Scenario) -> Value {
    let scales = sc.field_scales();
    let higgs = or_error(sc.higgs::<F>(), |hv| {
        let st = potential_stationary(&hv);
        json!({
            "norm2": quantity(&hv.norm2()),
            "potential": quantity(&higgs_potential(&hv)),
            "stationary": {
                "s": quantity(&st.s_star),
                "value": quantity(&st.value),
                "slope": st.slope.to_json(),
                "kind": match st.kind { StationaryKind::Minimum => "minimum", StationaryKind::Maximum => "maximum" },
            },
            "polar": or_error(higgs_polar(&hv), |p| json!({ "f": quantity(&p.f), "S": dump::mat_json(&p.s) })),
        })
    });
    let ew = or_error(sc.ew_point::<F>().and_then(|p| ew_lagrangian_point(&p, &scales)), |t| {
        json!({
            "l_psi": quantity(&t.l_psi),
            "l_phi": quantity(&t.l_phi),
            "l_X": quantity(&t.l_x),
            "l_int": quantity(&t.l_int),
        })
    });
    let ecmd = match sc.ecmd_point::<F>() {
        Ok(None) => Value::Null,
        Ok(Some(p)) => or_error(ecmd_lagrangian_point(&p, &scales), |t| {
            json!({ "l_g": quantity(&t.l_g), "l_em": quantity(&t.l_em), "l_D": quantity(&t.l_d) })
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "det_theta": or_error(sc.tetrad::<F>(), |t| quantity(&det_theta(&t))),
        "higgs": higgs,
        "ew_lagrangian": ew,
        "ecmd_lagrangian": ecmd,
    })
}

#[derive(Serialize)]
struct EvalHeader<'a> {
    schema: u32,
    scenario: &'a str,
    backend: Backend,
}

/// Pointwise values for the scenario: Higgs data, gauge components (float,
/// since they depend on the Weinberg angle), Lagrangian terms and the audit.
pub fn eval(sc: &Scenario, backend: Option<Backend>) -> Result<Value> {
    let backend = backend.unwrap_or(sc.backend);
    let mut body = match backend {
        Backend::Exact => eval_on::<Exact>(sc),
        Backend::Float => eval_on::<Complex64>(sc),
    };
    let frame = IsospinFrame::<Complex64>::standard();
    body["gauge"] = or_error(sc.gauge_fields().and_then(|g| assemble_w(&g, &frame)), |w| {
        let comps = w_components(&w, &frame);
        json!({
            "backend": "float",
            "W": comps.iter().map(|row| row.iter().map(Scalar::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "hat_W": hat_w(&w, &frame).iter().map(Scalar::to_json).collect::<Vec<_>>(),
        })
    });
    body["audit"] = serde_json::to_value(full_audit(&sc.field_scales()).entries).expect("audit serializes");
    let mut out = serde_json::to_value(EvalHeader { schema: scenario::SCHEMA_VERSION, scenario: &sc.name, backend })
        .expect("header serializes");
    out["values"] = body;
    Ok(out)
}

/// `path = value` lines, one per JSON leaf, in key order.
pub fn flatten_text(v: &Value) -> String {
    fn walk(v: &Value, path: &str, out: &mut String) {
        let leaf_array = |a: &[Value]| a.iter().all(|x| !x.is_object() && !x.is_array());
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                    walk(x, &p, out);
                }
            }
            Value::Array(a) if !leaf_array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{path}[{i}]"), out);
                }
            }
            other => {
                out.push_str(path);
                out.push_str(" = ");
                out.push_str(&other.to_string());
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

pub fn render(v: &Value, emit: Emit) -> String {
    match emit {
        Emit::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("value serializes");
            s.push('\n');
            s
        }
        Emit::Text => flatten_text(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_verify_passes_and_is_stable() {
        let sc = Scenario::default_scenario();
        let a = verify(&sc, &Overrides::default()).unwrap();
        assert!(a.all_passed(), "{}", a.to_text());
        let b = verify(&sc, &Overrides::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.suites.len(), SUITES.len());
    }

    #[test]
    fn mis_scaled_psi_names_the_term() {
        let mut sc = Scenario::default_scenario();
        sc.scales.psi = Some(crate::scales::ScaleDim::length_int(-1));
        let ov = Overrides { suites: vec!["lagrangian-audit".into()], ..Default::default() };
        let r = verify(&sc, &ov).unwrap();
        assert!(!r.all_passed());
        let ids: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert!(ids.contains(&"audit/l_psi.kinetic"), "{ids:?}");
        // Only terms with a fermion factor move.
        assert!(ids.iter().all(|i| ["l_psi", "l_int", "l_D"].iter().any(|t| i.contains(t))), "{ids:?}");
    }

    #[test]
    fn unknown_suite_is_an_error() {
        let sc = Scenario::default_scenario();
        let ov = Overrides { suites: vec!["bogus".into()], ..Default::default() };
        assert_eq!(verify(&sc, &ov).unwrap_err(), Error::UnknownSuite("bogus".into()));
    }

    #[test]
    fn eval_reports_terms() {
        let sc = Scenario::default_scenario();
        let v = eval(&sc, None).unwrap();
        assert_eq!(v["backend"], "exact");
        assert_eq!(v["values"]["ew_lagrangian"]["l_phi"]["dim"], "1");
        assert_eq!(v["values"]["higgs"]["stationary"]["kind"], "maximum");
        assert!(v["values"]["gauge"]["W"].is_array());
        let text = flatten_text(&v);
        assert!(text.contains("values.higgs.stationary.kind = \"maximum\""));
    }
}
