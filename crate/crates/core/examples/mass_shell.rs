//! Positive and negative energy projectors on the mass shell.

use ewgeom::numeric::{Exact, Mat, Scalar};
use ewgeom::tetrad::{mass_shell_projectors, MassShellPoint};
use ewgeom::twospinor::SpinorBasis;

fn main() -> ewgeom::Result<()> {
    // p = (5/4, 3/4, 0, 0) with m = 1.
    let q = |n, d| Exact::from_rational(&ewgeom::numeric::rat(n, d));
    let pt = MassShellPoint::new([q(5, 4), q(3, 4), Exact::zero(), Exact::zero()], Exact::one(), 0.0)?;
    let (pp, pm) = mass_shell_projectors(&pt, SpinorBasis::Dirac)?;
    for r in pp.to_rows() {
        println!("  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    println!("P+^2 = P+: {}", &pp * &pp == pp);
    println!("P+ + P- = 1: {}", &pp + &pm == Mat::identity(4));
    println!("tr P+ = {}", pp.trace());

    let light = MassShellPoint { p: [Exact::one(), Exact::one(), Exact::zero(), Exact::zero()], m: Exact::zero() };
    println!("massless: {}", mass_shell_projectors(&light, SpinorBasis::Dirac).unwrap_err());
    Ok(())
}
