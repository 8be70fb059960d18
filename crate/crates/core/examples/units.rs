//! Scale dimensions, scaled arithmetic and the reduction to powers of length.

use ewgeom::numeric::{rat, Exact, Scalar};
use ewgeom::scales::{dim_power, scaled_op, to_natural_units, Coupling, ScaleDim, ScaledOpKind, ScaledQuantity};

fn main() -> ewgeom::Result<()> {
    for cp in Coupling::ALL {
        println!("{:>5}  {:<16} natural: L^{}", cp.symbol(), cp.dim().to_string(), to_natural_units(&cp.dim()));
    }

    // A fermion bilinear (L^-3) under the 1-form density map (L^3).
    let psi = ScaledQuantity::new(Exact::from_rational(&rat(1, 2)), ScaleDim::length(rat(-3, 2)));
    let bilinear = scaled_op(&psi, &psi, ScaledOpKind::Mul)?;
    let vol = ScaledQuantity::new(Exact::one(), ScaleDim::length_int(3));
    let density = scaled_op(&bilinear, &vol, ScaledOpKind::Mul)?;
    println!("psi psi Theta^3 = {} [{}]", density.value, density.dim);

    let g_inv = dim_power(&Coupling::Gravitational.dim(), &rat(-1, 1));
    println!("1/G: {g_inv} -> L^{}", to_natural_units(&g_inv));

    match scaled_op(&psi, &vol, ScaledOpKind::Add) {
        Err(e) => println!("adding mismatched scales: {e}"),
        Ok(_) => unreachable!("dimensions differ"),
    }
    Ok(())
}
