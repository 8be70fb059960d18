//! Electroweak symmetry breaking at a point: the Higgs potential and its
//! stationary value, the polar decomposition of the doublet, and the split of
//! the isospin gauge field into A, Z and W±.

use num_complex::Complex64;

use ewgeom::ewsector::{
    assemble_w, extract_fields, higgs_polar, higgs_potential, potential_stationary, EWGaugeFields, HiggsValue,
    IsospinFrame,
};
use ewgeom::numeric::{rat, Exact, Scalar};

fn main() -> ewgeom::Result<()> {
    let hv = HiggsValue::new([Exact::int(3, 0), Exact::int(0, 4)], Exact::int(2, 0), Exact::from_rational(&rat(1, 8)))?;
    println!("|phi|^2 = {}, V = {}", hv.norm2().value, higgs_potential(&hv).value);
    let st = potential_stationary(&hv);
    println!("stationary at s = {} ({:?}), V = {}", st.s_star.value, st.kind, st.value.value);
    let polar = higgs_polar(&hv)?;
    println!("f = |phi| - mu = {}", polar.f.value);
    println!("S = {:?}", polar.s.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());

    let c = |re: f64, im: f64| Complex64::new(re, im);
    let fields = EWGaugeFields::new(
        [0.1, 0.0, -0.3, 0.2],
        [0.5, 0.25, 0.0, -1.0],
        [c(0.2, 0.1), c(0.0, -0.4), c(1.0, 0.0), c(0.3, 0.3)],
        0.5,
    )?;
    let frame = IsospinFrame::standard();
    let w = assemble_w(&fields, &frame)?;
    let back = extract_fields(&w, fields.theta_w, &frame)?;
    for r in w[0].to_rows() {
        println!("  W_0 row: {}", r.iter().map(|z| format!("{z:.4}")).collect::<Vec<_>>().join("  "));
    }
    let worst = (0..4).map(|l| (back.a[l] - fields.a[l]).abs().max((back.z[l] - fields.z[l]).abs())).fold(0.0, f64::max);
    println!("round trip error on A, Z: {worst:.1e}");
    Ok(())
}
