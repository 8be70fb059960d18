use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ewsector::{iota_frame, IsospinFrame};
use crate::gaugealg::{orthonormalize, rational_structure_constants, structure_constants, su2_generators};
use crate::cxmulti::HermitianForm;
use crate::numeric::{format_rational, Exact, Mat, Scalar};
use crate::twospinor::{gammas, minkowski, SpinorBasis, TwoSpinorFrame};

pub const DUMP_KINDS: [&str; 4] = ["gamma-weyl", "gamma-dirac", "iota-frame", "structure-constants-su2"];

pub fn mat_json<F: Scalar>(m: &Mat<F>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
}

fn gamma_tables(basis: SpinorBasis, name: &str) -> Value {
    let lower = gammas::<Exact>(basis, &TwoSpinorFrame::standard());
    let eta = minkowski::<Exact>();
    let upper: Vec<Value> = lower.iter().enumerate().map(|(l, g)| mat_json(&g.scale(&eta[(l, l)]))).collect();
    json!({
        "kind": format!("gamma-{name}"),
        "basis": name,
        "backend": "exact",
        "lower": lower.iter().map(mat_json).collect::<Vec<_>>(),
        "upper": upper,
    })
}

/// Constant tables as JSON, for external diffing.
pub fn dump(kind: &str) -> Result<Value> {
    match kind {
        "gamma-weyl" => Ok(gamma_tables(SpinorBasis::Weyl, "weyl")),
        "gamma-dirac" => Ok(gamma_tables(SpinorBasis::Dirac, "dirac")),
        "iota-frame" => {
            let io = iota_frame(&IsospinFrame::<Exact>::standard());
            Ok(json!({
                "kind": kind,
                "backend": "exact",
                "layout": "row = conjugate isospin index",
                "iota": io.iter().map(mat_json).collect::<Vec<_>>(),
            }))
        }
        "structure-constants-su2" => {
            let frame = orthonormalize(&su2_generators::<Exact>(), &HermitianForm::identity(2))?;
            let c = rational_structure_constants(&structure_constants(&frame)?)
                .ok_or_else(|| Error::NotExact("structure constants".into()))?;
            let table: Vec<Vec<Vec<String>>> =
                c.iter().map(|p| p.iter().map(|q| q.iter().map(format_rational).collect()).collect()).collect();
            Ok(json!({
                "kind": kind,
                "backend": "exact",
                "convention": "[l_h, l_j] = c[h][j][k] l_k",
                "generators": frame.generators().iter().map(mat_json).collect::<Vec<_>>(),
                "c": table,
            }))
        }
        other => Err(Error::UnknownKind(other.to_string())),
    }
}
