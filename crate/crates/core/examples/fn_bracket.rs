//! Frölicher–Nijenhuis bracket of polynomial tangent-valued forms.

use ewgeom::fnforms::{fn_bracket, TVForm};
use ewgeom::poly::{Poly, Var};

fn main() -> ewgeom::Result<()> {
    let (n, k) = (2, 1);
    let x = |i| Poly::var(Var::coord(i, n));

    // u = x1 ∂_y, v = y ∂_x2: vector fields on the total space R^2 × R.
    let u = TVForm::vector_field(n, k, vec![Poly::zero(), Poly::zero(), x(0)]);
    let v = TVForm::vector_field(n, k, vec![Poly::zero(), x(2), Poly::zero()]);
    println!("[u, v] = {}", fn_bracket(&u, &v)?);

    // A vertical-valued 1-form against a vector field.
    let mut w = TVForm::zero(n, k, 1);
    w.set(2, &[0], &x(2) * &x(1));
    let b = fn_bracket(&w, &u)?;
    println!("[w, u] = {b}");
    println!("[u, w] = {}", fn_bracket(&u, &w)?);
    println!("antisymmetric: {}", b == fn_bracket(&u, &w)?.scale(&ewgeom::numeric::rat_int(-1)));
    Ok(())
}
