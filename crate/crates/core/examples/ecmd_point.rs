//! Tetrad quantities and the pointwise Einstein–Cartan–Maxwell–Dirac terms
//! for the built-in scenario.

use ewgeom::cli::Scenario;
use ewgeom::numeric::Exact;
use ewgeom::tetrad::{det_theta, ecmd_lagrangian_point, pullback_metric, theta_breve, FiberForm};

fn main() -> ewgeom::Result<()> {
    let sc = Scenario::default_scenario();
    let theta = sc.tetrad::<Exact>()?;
    println!("det Theta = {}", det_theta(&theta).value);
    println!("Theta^* eta diagonal: {:?}", (0..4).map(|i| pullback_metric(&theta).value[(i, i)].to_string()).collect::<Vec<_>>());
    println!("breve(Theta) = {}", theta_breve(&theta, &FiberForm::from_tetrad(&theta))?.value);

    let pt = sc.ecmd_point::<Exact>()?.expect("default scenario has an ECMD point");
    let t = ecmd_lagrangian_point(&pt, &sc.field_scales())?;
    for (name, q) in [("l_g", &t.l_g), ("l_em", &t.l_em), ("l_D", &t.l_d)] {
        println!("{name:<5} = {} [{}]", q.value, q.dim);
    }
    Ok(())
}
