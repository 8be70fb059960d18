//! su(2) frame, structure constants, the Killing-type form and the charge
//! expansion of the gauge Lagrangian.

use ewgeom::cxmulti::HermitianForm;
use ewgeom::gaugealg::{
    gauge_lagrangian_expansion, minkowski_inverse, orthonormalize, rational_structure_constants,
    structure_constants, su2_generators,
};
use ewgeom::numeric::{format_rational, Exact};
use ewgeom::poly::Poly;

fn main() -> ewgeom::Result<()> {
    let frame = orthonormalize(&su2_generators::<Exact>(), &HermitianForm::identity(2))?;
    let c = rational_structure_constants(&structure_constants(&frame)?).expect("rational");
    for (h, j) in [(0, 1), (1, 2), (2, 0)] {
        let row: Vec<String> = c[h][j].iter().map(format_rational).collect();
        println!("[l_{h}, l_{j}] = ({}) . l", row.join(", "));
    }

    let x: Vec<Vec<Poly>> = [["x2", "1", "0"], ["0", "x1", "2"], ["x3", "0", "1"], ["0", "x4", "x4"]]
        .iter()
        .map(|r| r.iter().map(|s| Poly::parse(s).expect("literal")).collect())
        .collect();
    let exp = gauge_lagrangian_expansion(&x, &c, &minkowski_inverse())?;
    println!("powers of q present: {:?}", exp.degrees());
    println!("kinetic (q^0) part: {}", exp.coeffs[0]);
    Ok(())
}
