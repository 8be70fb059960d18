use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;

use super::{count_check, sci, Ctx};
use crate::cli::report::Check;
use crate::cxmulti::{h_contract_mat, HermitianForm};
use crate::fnforms::sample::{random_form, random_linear_tables, random_poly, random_unimodular, base_vars};
use crate::fnforms::{
    curvature, curvature_matrix, decompose_alpha, fn_bracket, gauge_transform, reconstruct, Connection, PolyMat,
    TVForm,
};
use crate::gaugealg::{
    charged_curvature, gauge_lagrangian, gauge_lagrangian_expansion, killing_form_gl, killing_like, levi_civita3,
    minkowski_inverse, orthonormalize, rational_structure_constants, structure_constants, su2_generators,
    ChargedField,
};
use crate::numeric::{rat, rat_int, Backend, Exact, Mat, Rational, Scalar};
use crate::poly::{Poly, Var};

const EX: Backend = Backend::Exact;

fn sign(e: usize) -> Rational {
    rat_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// `[u, v]^b = u^c ∂_c v^b - v^c ∂_c u^b` on the total space.
fn lie_oracle(u: &[Poly], v: &[Poly], n: usize) -> Vec<Poly> {
    (0..u.len())
        .map(|b| {
            let mut acc = Poly::zero();
            for c in 0..u.len() {
                let x = Var::coord(c, n);
                acc = &acc + &(&(&u[c] * &v[b].derivative(x)) - &(&v[c] * &u[b].derivative(x)));
            }
            acc
        })
        .collect()
}

/// `-∂_aΓ_b + ∂_bΓ_a + Γ_aΓ_b - Γ_bΓ_a`.
fn closed_form_curvature(t: &[PolyMat], a: usize, b: usize) -> PolyMat {
    let d = |m: &PolyMat, c: usize| m.derivative(Var::X(c as u8 + 1));
    &(&(&d(&t[a], b) - &d(&t[b], a)) + &(&t[a] * &t[b])) - &(&t[b] * &t[a])
}

pub fn fn_identities(ctx: &Ctx) -> Vec<Check> {
    let n_cases = ctx.samples();
    let mut rng = ctx.rng(11);
    let mut out = Vec::new();

    let mut bad = 0;
    for _ in 0..n_cases {
        let (n, k) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let (r, s) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = random_form(&mut rng, n, k, r, 3);
        let b = random_form(&mut rng, n, k, s, 3);
        let ok = match (fn_bracket(&a, &b), fn_bracket(&b, &a)) {
            (Ok(x), Ok(y)) => x == y.scale(&-sign(r * s)),
            _ => false,
        };
        bad += usize::from(!ok);
    }
    out.push(count_check("fn/graded-antisymmetry", "FN bracket is graded antisymmetric", EX, bad, n_cases, 0.0));

    let triples = n_cases.div_ceil(2);
    let mut bad = 0;
    for _ in 0..triples {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let (r, s, t) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=1));
        let a = random_form(&mut rng, n, k, r, 2);
        let b = random_form(&mut rng, n, k, s, 2);
        let c = random_form(&mut rng, n, k, t, 2);
        let jac = || -> crate::Result<TVForm> {
            let br = |x: &TVForm, y: &TVForm| fn_bracket(x, y);
            br(&br(&a, &b)?, &c)?
                .scale(&sign(r * t))
                .add(&br(&br(&b, &c)?, &a)?.scale(&sign(s * r)))?
                .add(&br(&br(&c, &a)?, &b)?.scale(&sign(t * s)))
        };
        bad += usize::from(!matches!(jac(), Ok(z) if z.is_zero()));
    }
    out.push(count_check("fn/graded-jacobi", "FN bracket satisfies the graded Jacobi identity", EX, bad, triples, 0.0));

    let mut bad = 0;
    for _ in 0..n_cases {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let u = random_form(&mut rng, n, k, 0, 3);
        let v = random_form(&mut rng, n, k, 0, 3);
        let comps = |f: &TVForm| (0..f.dim()).map(|b| f.get(b, &[])).collect::<Vec<_>>();
        let ok = fn_bracket(&u, &v).is_ok_and(|w| comps(&w) == lie_oracle(&comps(&u), &comps(&v), n));
        bad += usize::from(!ok);
    }
    out.push(count_check("fn/lie-bracket", "degree-0 FN bracket is the Lie bracket", EX, bad, n_cases, 0.0));

    let mut bad = 0;
    for _ in 0..n_cases {
        let (n, k) = (rng.gen_range(2..=4), rng.gen_range(1..=3));
        let t = random_linear_tables(&mut rng, n, k);
        let ok = Connection::linear(n, k, t.clone()).is_ok_and(|g| {
            let r = curvature(&g);
            (0..n).all(|a| (0..n).all(|b| curvature_matrix(&r, a, b) == closed_form_curvature(&t, a, b)))
        });
        bad += usize::from(!ok);
    }
    out.push(count_check("fn/curvature-closed-form", "-[g,g] equals the linear curvature formula", EX, bad, n_cases, 0.0));

    let few = n_cases.div_ceil(4);
    let mut bad = 0;
    for _ in 0..few {
        let (n, k) = (rng.gen_range(2..=3), rng.gen_range(1..=2));
        let s = random_unimodular(&mut rng, n, k);
        let tables = random_linear_tables(&mut rng, n, k);
        let ok = (|| -> crate::Result<bool> {
            let g0 = gauge_transform(&Connection::flat(n, k), &s)?;
            let g = Connection::linear(n, k, tables)?;
            let alpha = decompose_alpha(&g, &g0)?;
            let rhs = fn_bracket(g0.form(), &alpha)?.scale(&rat_int(-2)).sub(&fn_bracket(&alpha, &alpha)?)?;
            Ok(curvature(&g0).is_zero() && reconstruct(&g0, &alpha)? == g && curvature(&g) == rhs)
        })();
        bad += usize::from(!matches!(ok, Ok(true)));
    }
    out.push(count_check("fn/alpha-decomposition", "R = -2[g0,a] - [a,a] for flat g0", EX, bad, few, 0.0));

    let mut bad = 0;
    for _ in 0..few {
        let (n, k) = (rng.gen_range(2..=3), rng.gen_range(1..=3));
        let s = random_unimodular(&mut rng, n, k);
        let tables = random_linear_tables(&mut rng, n, k);
        let ok = (|| -> crate::Result<bool> {
            let g = Connection::linear(n, k, tables)?;
            let sinv = s.inverse_unimodular().ok_or(crate::Error::NonConstantDeterminant)?;
            let (r, r2) = (curvature(&g), curvature(&gauge_transform(&g, &s)?));
            Ok((0..n).all(|a| {
                (0..n).all(|b| curvature_matrix(&r2, a, b) == &(&s * &curvature_matrix(&r, a, b)) * &sinv)
            }))
        })();
        bad += usize::from(!matches!(ok, Ok(true)));
    }
    out.push(count_check("fn/gauge-conjugation", "curvature conjugates under gauge change", EX, bad, few, 0.0));
    out
}

fn random_anti_hermitian(rng: &mut impl Rng, n: usize) -> Mat<Complex64> {
    let a = Mat::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    (&a - &a.adjoint()).scale(&Complex64::new(0.5, 0.0))
}

/// `Tr(ad_A ∘ ad_B)` with `ad` written on the matrix-unit basis.
fn adjoint_trace(a: &Mat<Exact>, b: &Mat<Exact>) -> Exact {
    let n = a.rows();
    let ad = |x: &Mat<Exact>| {
        Mat::from_fn(n * n, n * n, |row, col| {
            let mut e = Mat::zeros(n, n);
            e[(col / n, col % n)] = Exact::one();
            x.commutator(&e)[(row / n, row % n)].clone()
        })
    };
    (&ad(a) * &ad(b)).trace()
}

fn su2_constants() -> crate::Result<Vec<Vec<Vec<Rational>>>> {
    let frame = orthonormalize(&su2_generators::<Exact>(), &HermitianForm::identity(2))?;
    rational_structure_constants(&structure_constants(&frame)?)
        .ok_or_else(|| crate::Error::NotExact("structure constants".into()))
}

pub fn gauge_algebra(ctx: &Ctx) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = ctx.rng(23);

    let anchor = "K-orthonormal su(2) frame has c = -epsilon";
    let c = su2_constants();
    let ok = c.as_ref().is_ok_and(|c| {
        (0..3).all(|h| (0..3).all(|j| (0..3).all(|k| c[h][j][k] == rat_int(-levi_civita3(h, j, k)))))
    });
    let measured = match &c {
        Ok(c) => format!("c_012 = {}", crate::numeric::format_rational(&c[0][1][2])),
        Err(e) => format!("error: {e}"),
    };
    out.push(Check::new("gauge/su2-structure-constants", ok, anchor, EX).values(measured, "c_012 = -1, totally antisymmetric"));

    let n = ctx.samples().max(200);
    let (id2, id3) = (HermitianForm::identity(2), HermitianForm::identity(3));
    let tol = ctx.tol;
    let (mut worst, mut bad_pos) = (0.0f64, 0);
    for i in 0..n {
        let d = 2 + i % 2;
        let (x, y) = (random_anti_hermitian(&mut rng, d), random_anti_hermitian(&mut rng, d));
        let h = if d == 2 { &id2 } else { &id3 };
        let lhs = h_contract_mat(&x, &y, h).unwrap_or(Complex64::new(f64::NAN, 0.0));
        let rhs = killing_like(&x, &y).unwrap_or(Complex64::new(f64::NAN, 0.0)) * 0.5;
        worst = worst.max(if (lhs - rhs).norm().is_nan() { f64::INFINITY } else { (lhs - rhs).norm() });
        let kxx = killing_like(&x, &x).unwrap_or(Complex64::new(-1.0, 0.0));
        bad_pos += usize::from(!(kxx.re > 0.0 && kxx.im.abs() <= tol));
    }
    out.push(
        Check::new("gauge/h-contraction-half-killing", worst <= tol, "<X,Y> = K(X,Y)/2 on anti-Hermitian pairs", Backend::Float)
            .values(format!("max residual {} over {n} pairs", sci(worst)), "0")
            .tol(tol),
    );
    out.push(count_check("gauge/killing-positive", "K is positive on anti-Hermitian matrices", Backend::Float, bad_pos, n, tol));

    let cases = ctx.samples();
    let mut bad = 0;
    for _ in 0..cases {
        let m = |rng: &mut dyn rand::RngCore| {
            Mat::from_fn(2, 2, |_, _| Exact::int(rng.gen_range(-3..=3), rng.gen_range(-3..=3)))
        };
        let (a, b) = (m(&mut rng), m(&mut rng));
        bad += usize::from(killing_form_gl(&a, &b).ok() != Some(adjoint_trace(&a, &b)));
    }
    out.push(count_check("gauge/gl-killing-adjoint-trace", "Killing form of gl(n) equals Tr(ad A ad B)", EX, bad, cases, 0.0));

    let mut bad = 0;
    let xs = base_vars(4);
    let zero_c = vec![vec![vec![rat_int(0)]]];
    for _ in 0..cases {
        let x: Vec<Vec<Poly>> = (0..4).map(|_| vec![random_poly(&mut rng, &xs, 2, 2)]).collect();
        let q = [rat_int(1), rat(3, 2), rat_int(-2), rat(-1, 3)][rng.gen_range(0..4)].clone();
        let ok = (|| -> crate::Result<bool> {
            let r = charged_curvature(&ChargedField::new(q.clone(), x.clone())?, &zero_c)?;
            let tables = x.iter().map(|row| PolyMat::from_rows(vec![vec![row[0].scale(&q)]])).collect();
            let line = curvature(&Connection::linear(4, 1, tables)?);
            Ok((0..4).all(|a| (0..4).all(|b| r[a][b][0] == curvature_matrix(&line, a, b)[(0, 0)])))
        })();
        bad += usize::from(!matches!(ok, Ok(true)));
    }
    out.push(count_check("gauge/abelian-line-bundle", "abelian charged curvature is the line-bundle curvature", EX, bad, cases, 0.0));

    let few = ctx.samples().div_ceil(4);
    let g_inv = minkowski_inverse();
    let (mut bad_deg, mut bad_kin) = (0, 0);
    let su2 = c.unwrap_or_default();
    let zero3 = vec![vec![vec![rat_int(0); 3]; 3]; 3];
    for _ in 0..few {
        // A fixed non-abelian part keeps the q² term generically alive.
        let base = [["x2", "1", "0"], ["0", "x1", "2"], ["x3", "0", "1"], ["0", "x4", "x4"]];
        let x: Vec<Vec<Poly>> = base
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| &Poly::parse(s).expect("literal") + &random_poly(&mut rng, &xs, 2, 1))
                    .collect()
            })
            .collect();
        match gauge_lagrangian_expansion(&x, &su2, &g_inv) {
            Ok(exp) => {
                bad_deg += usize::from(exp.degrees() != BTreeSet::from([0, 1, 2]));
                let kinetic_ok = [rat_int(1), rat(2, 3), rat_int(-3)].iter().all(|q| {
                    ChargedField::new(q.clone(), x.clone())
                        .and_then(|f| charged_curvature(&f, &zero3))
                        .and_then(|r| gauge_lagrangian(q, &r, &g_inv))
                        .is_ok_and(|l| l == exp.coeffs[0])
                });
                bad_kin += usize::from(!kinetic_ok);
            }
            Err(_) => {
                bad_deg += 1;
                bad_kin += 1;
            }
        }
    }
    out.push(count_check("gauge/q-grading-degrees", "l[X] is a polynomial of degrees {0,1,2} in q", EX, bad_deg, few, 0.0));
    out.push(count_check("gauge/q-grading-kinetic", "kinetic part of l[X] does not depend on q", EX, bad_kin, few, 0.0));
    out
}
