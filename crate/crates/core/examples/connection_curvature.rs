//! Curvature of a linear connection as `-[γ, γ]`, and its behaviour under a
//! change of gauge.

use ewgeom::fnforms::{curvature, curvature_matrix, gauge_transform, Connection, PolyMat};
use ewgeom::poly::Poly;

fn p(s: &str) -> Poly {
    Poly::parse(s).expect("literal polynomial")
}

fn main() -> ewgeom::Result<()> {
    // Γ_1 = [[0, x2], [0, 0]], Γ_2 = [[x1, 0], [1, 0]] on a rank-2 bundle over R^2.
    let tables = vec![
        PolyMat::from_rows(vec![vec![p("0"), p("x2")], vec![p("0"), p("0")]]),
        PolyMat::from_rows(vec![vec![p("x1"), p("0")], vec![p("1"), p("0")]]),
    ];
    let gamma = Connection::linear(2, 2, tables)?;
    let r = curvature(&gamma);
    println!("R_12 =\n{}", curvature_matrix(&r, 0, 1));

    let s = PolyMat::from_rows(vec![vec![p("1"), p("x1^2")], vec![p("0"), p("1")]]);
    let rotated = curvature(&gauge_transform(&gamma, &s)?);
    let sinv = s.inverse_unimodular().expect("det S = 1");
    let conj = &(&s * &curvature_matrix(&r, 0, 1)) * &sinv;
    println!("R'_12 == S R_12 S^-1: {}", curvature_matrix(&rotated, 0, 1) == conj);
    Ok(())
}
