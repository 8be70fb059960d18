use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sample::*;
use super::*;
use crate::numeric::{rat, rat_int};

fn p(s: &str) -> Poly {
    Poly::parse(s).unwrap()
}

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

fn vf_components(f: &TVForm) -> Vec<Poly> {
    (0..f.dim()).map(|b| f.get(b, &[])).collect()
}

#[test]
fn degree_zero_example() {
    let u = TVForm::vector_field(1, 1, vec![p("0"), p("x1")]);
    let v = TVForm::vector_field(1, 1, vec![p("y1"), p("0")]);
    let w = fn_bracket(&u, &v).unwrap();
    assert_eq!(vf_components(&w), vec![p("x1"), p("-y1")]);
    assert!(fn_bracket(&u, &u).unwrap().is_zero());
}

#[test]
fn degree_zero_matches_lie_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..40 {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let u = random_form(&mut rng, n, k, 0, 3);
        let v = random_form(&mut rng, n, k, 0, 3);
        let w = fn_bracket(&u, &v).unwrap();
        assert_eq!(vf_components(&w), lie_oracle(&vf_components(&u), &vf_components(&v), n));
    }
}

#[test]
fn chart_mismatch() {
    let u = TVForm::zero(2, 1, 0);
    let v = TVForm::zero(1, 1, 0);
    assert!(matches!(fn_bracket(&u, &v), Err(Error::ChartMismatch(_))));
}

fn graded_sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

#[test]
fn graded_antisymmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let (n, k) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let (r, s) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let phi = random_form(&mut rng, n, k, r, 3);
        let psi = random_form(&mut rng, n, k, s, 3);
        let lhs = fn_bracket(&phi, &psi).unwrap();
        let rhs = fn_bracket(&psi, &phi).unwrap().scale(&-graded_sign(r * s));
        assert_eq!(lhs, rhs, "r={r} s={s}");
    }
}

#[test]
fn graded_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..25 {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let (r, s, t) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=1));
        let a = random_form(&mut rng, n, k, r, 2);
        let b = random_form(&mut rng, n, k, s, 2);
        let c = random_form(&mut rng, n, k, t, 2);
        let br = |x: &TVForm, y: &TVForm| fn_bracket(x, y).unwrap();
        let total = br(&br(&a, &b), &c)
            .scale(&graded_sign(r * t))
            .add(&br(&br(&b, &c), &a).scale(&graded_sign(s * r)))
            .unwrap()
            .add(&br(&br(&c, &a), &b).scale(&graded_sign(t * s)))
            .unwrap();
        assert!(total.is_zero(), "r={r} s={s} t={t}");
    }
}

/// Ordinary differential forms in increasing-basis coefficients, with the
/// wedge `dx^1∧dx^2 = dx^1⊗dx^2 - dx^2⊗dx^1`.
mod forms {
    use super::*;

    pub type Form = BTreeMap<Vec<usize>, Poly>;

    pub fn add_into(f: &mut Form, idx: &[usize], q: &Poly, c: i64) {
        if let Some((sorted, s)) = sort_signed(idx) {
            let e = f.entry(sorted).or_insert_with(Poly::zero);
            *e = &*e + &q.scale_i64(c * s);
        }
    }

    pub fn clean(f: Form) -> Form {
        f.into_iter().filter(|(_, q)| !q.is_zero()).collect()
    }

    pub fn wedge(a: &Form, b: &Form) -> Form {
        let mut out = Form::new();
        for (i, p) in a {
            for (j, q) in b {
                let idx: Vec<usize> = i.iter().chain(j).copied().collect();
                add_into(&mut out, &idx, &(p * q), 1);
            }
        }
        clean(out)
    }

    pub fn d(a: &Form, n: usize, dim: usize) -> Form {
        let mut out = Form::new();
        for (i, p) in a {
            for c in 0..dim {
                let idx: Vec<usize> = std::iter::once(c).chain(i.iter().copied()).collect();
                add_into(&mut out, &idx, &p.derivative(Var::coord(c, n)), 1);
            }
        }
        clean(out)
    }

    pub fn interior(v: &[Poly], a: &Form) -> Form {
        let mut out = Form::new();
        for (i, p) in a {
            for (pos, &c) in i.iter().enumerate() {
                let rest: Vec<usize> = i.iter().copied().filter(|&x| x != c).collect();
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                add_into(&mut out, &rest, &(&v[c] * p), sign);
            }
        }
        clean(out)
    }

    pub fn lie(v: &[Poly], a: &Form, n: usize, dim: usize) -> Form {
        let mut out = interior(v, &d(a, n, dim));
        for (i, p) in d(&interior(v, a), n, dim) {
            add_into(&mut out, &i, &p, 1);
        }
        clean(out)
    }

    pub fn scale(a: &Form, c: i64) -> Form {
        clean(a.iter().map(|(i, p)| (i.clone(), p.scale_i64(c))).collect())
    }

    /// TVForm `Σ f_I dx^I ⊗ u` in full-sum components `f_I u^b / r!`.
    pub fn to_tv(f: &Form, u: &[Poly], n: usize, k: usize, r: usize) -> TVForm {
        let fact: i64 = (1..=r as i64).product();
        let inv = Rational::new(1.into(), fact.into());
        let mut out = TVForm::zero(n, k, r);
        for (i, c) in f {
            for (b, ub) in u.iter().enumerate() {
                let cur = out.get(b, i);
                out.set(b, i, &cur + &(c * ub).scale(&inv));
            }
        }
        out
    }
}

fn random_scalar_form(rng: &mut ChaCha8Rng, n: usize, k: usize, r: usize) -> forms::Form {
    let dim = n + k;
    let vars = chart_vars(n, k);
    let mut f = forms::Form::new();
    for _ in 0..2 {
        let mut idx: Vec<usize> = (0..dim).collect();
        rand::seq::SliceRandom::shuffle(idx.as_mut_slice(), rng);
        idx.truncate(r);
        forms::add_into(&mut f, &idx, &random_poly(rng, &vars, 2, 2), 1);
    }
    forms::clean(f)
}

#[test]
fn decomposable_bracket_matches_coordinate_free_formula() {
    use forms::*;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let dim = n + k;
        let (r, s) = (rng.gen_range(0..=2.min(dim)), rng.gen_range(0..=2.min(dim)));
        let alpha = random_scalar_form(&mut rng, n, k, r);
        let beta = random_scalar_form(&mut rng, n, k, s);
        let u = vf_components(&random_form(&mut rng, n, k, 0, 2));
        let v = vf_components(&random_form(&mut rng, n, k, 0, 2));
        let lhs = fn_bracket(&to_tv(&alpha, &u, n, k, r), &to_tv(&beta, &v, n, k, s)).unwrap();

        let deg = r + s;
        let sgn = if r % 2 == 0 { 1 } else { -1 };
        let uv = lie_oracle(&u, &v, n);
        let mut rhs = to_tv(&wedge(&alpha, &beta), &uv, n, k, deg);
        let mut acc = |f: Form, w: &[Poly]| {
            rhs = rhs.add(&to_tv(&f, w, n, k, deg)).unwrap();
        };
        acc(wedge(&alpha, &lie(&u, &beta, n, dim)), &v);
        acc(scale(&wedge(&lie(&v, &alpha, n, dim), &beta), -1), &u);
        acc(scale(&wedge(&interior(&v, &alpha), &d(&beta, n, dim)), sgn), &u);
        acc(scale(&wedge(&d(&alpha, n, dim), &interior(&u, &beta)), sgn), &v);
        assert_eq!(lhs, rhs, "n={n} k={k} r={r} s={s}");
    }
}

#[test]
fn projectable_and_linear_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let (n, k) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let (r, s) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = random_projectable(&mut rng, n, k, r, 3);
        let b = random_projectable(&mut rng, n, k, s, 3);
        assert!(a.is_projectable() && b.is_projectable());
        assert!(fn_bracket(&a, &b).unwrap().is_projectable());
        let a = random_linear_form(&mut rng, n, k, r, 3);
        let b = random_linear_form(&mut rng, n, k, s, 3);
        assert!(a.is_linear() && b.is_linear());
        let c = fn_bracket(&a, &b).unwrap();
        assert!(c.is_linear(), "{a}\n--\n{b}\n=>\n{c}");
    }
}

/// `R_ab = -∂_aΓ_b + ∂_bΓ_a + Γ_aΓ_b - Γ_bΓ_a`.
fn closed_form_curvature(t: &[PolyMat], a: usize, b: usize) -> PolyMat {
    let d = |m: &PolyMat, c: usize| m.derivative(Var::X(c as u8 + 1));
    &(&(&d(&t[a], b) - &d(&t[b], a)) + &(&t[a] * &t[b])) - &(&t[b] * &t[a])
}

#[test]
fn line_bundle_curvature() {
    let a = vec![PolyMat::zeros(1, 1), PolyMat::from_rows(vec![vec![p("x1")]])];
    let gamma = Connection::linear(2, 1, a).unwrap();
    let r = curvature(&gamma);
    assert!(r.is_basic() && r.is_vertical_valued());
    assert_eq!(curvature_matrix(&r, 0, 1)[(0, 0)], p("-1"));
    assert!(curvature(&Connection::flat(3, 2)).is_zero());
}

#[test]
fn curvature_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let (n, k) = (rng.gen_range(2..=4), rng.gen_range(1..=3));
        let t = random_linear_tables(&mut rng, n, k);
        let r = curvature(&Connection::linear(n, k, t.clone()).unwrap());
        assert!(r.is_basic() && r.is_vertical_valued() && r.is_linear());
        for a in 0..n {
            for b in 0..n {
                assert_eq!(curvature_matrix(&r, a, b), closed_form_curvature(&t, a, b));
            }
        }
    }
}

#[test]
fn covariant_differential_examples() {
    let flat = Connection::flat(2, 1);
    let d = covariant_differential(&flat, &[p("x1 x2")]).unwrap();
    assert_eq!(d, vec![vec![p("x2")], vec![p("x1")]]);
    let g = Connection::linear(2, 1, vec![PolyMat::identity(1), PolyMat::zeros(1, 1)]).unwrap();
    let d = covariant_differential(&g, &[p("1")]).unwrap();
    assert_eq!(d, vec![vec![p("-1")], vec![p("0")]]);
    assert!(covariant_differential(&flat, &[p("3")]).unwrap().iter().flatten().all(Poly::is_zero));
    assert!(covariant_differential(&flat, &[p("y1")]).is_err());
    // Nonlinear connection: γ_1^1 = y1^2, section s = x2.
    let nl = Connection::new(2, 1, vec![vec![p("y1^2")], vec![p("0")]]).unwrap();
    assert_eq!(covariant_differential(&nl, &[p("x2")]).unwrap()[0][0], p("-x2^2"));
}

#[test]
fn gauge_transform_examples() {
    let s = PolyMat::from_rows(vec![vec![p("1"), p("x1")], vec![p("0"), p("1")]]);
    let g = gauge_transform(&Connection::flat(2, 2), &s).unwrap();
    let t = g.tables().unwrap();
    assert_eq!(t[0], PolyMat::from_rows(vec![vec![p("0"), p("1")], vec![p("0"), p("0")]]));
    assert!(t[1].is_zero());
    assert!(curvature(&g).is_zero());
    let id = gauge_transform(&g, &PolyMat::identity(2)).unwrap();
    assert_eq!(id, g);
    let bad = PolyMat::from_rows(vec![vec![p("x1"), p("0")], vec![p("0"), p("1")]]);
    assert_eq!(gauge_transform(&g, &bad), Err(Error::NonConstantDeterminant));
}

#[test]
fn curvature_conjugates_under_gauge() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..15 {
        let (n, k) = (rng.gen_range(2..=3), rng.gen_range(1..=3));
        let g = Connection::linear(n, k, random_linear_tables(&mut rng, n, k)).unwrap();
        let s = random_unimodular(&mut rng, n, k);
        let sinv = s.inverse_unimodular().unwrap();
        let r = curvature(&g);
        let r2 = curvature(&gauge_transform(&g, &s).unwrap());
        for a in 0..n {
            for b in a + 1..n {
                let want = &(&s * &curvature_matrix(&r, a, b)) * &sinv;
                assert_eq!(curvature_matrix(&r2, a, b), want);
            }
        }
    }
}

#[test]
fn alpha_decomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10 {
        let (n, k) = (rng.gen_range(2..=3), rng.gen_range(1..=2));
        let g0 = gauge_transform(&Connection::flat(n, k), &random_unimodular(&mut rng, n, k)).unwrap();
        assert!(curvature(&g0).is_zero());
        let g = Connection::linear(n, k, random_linear_tables(&mut rng, n, k)).unwrap();
        let alpha = decompose_alpha(&g, &g0).unwrap();
        assert!(alpha.is_basic() && alpha.is_vertical_valued() && alpha.degree() == 1);
        assert_eq!(reconstruct(&g0, &alpha).unwrap(), g);
        let two = rat_int(2);
        let rhs = fn_bracket(g0.form(), &alpha)
            .unwrap()
            .scale(&-two)
            .sub(&fn_bracket(&alpha, &alpha).unwrap())
            .unwrap();
        assert_eq!(curvature(&g), rhs);
    }
    let g = Connection::flat(2, 1);
    assert!(decompose_alpha(&g, &g).unwrap().is_zero());
}

#[test]
fn form_storage_is_antisymmetric() {
    let mut f = TVForm::zero(2, 1, 2);
    f.set(2, &[1, 0], p("x1"));
    assert_eq!(f.get(2, &[0, 1]), p("-x1"));
    assert!(f.get(2, &[1, 1]).is_zero());
    assert_eq!(f.scale(&rat(1, 2)).get(2, &[1, 0]), p("1/2 x1"));
    f.set(2, &[0, 1], Poly::zero());
    assert!(f.is_zero());
}
