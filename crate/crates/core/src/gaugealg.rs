//! Anti-Hermitian matrix Lie algebras with the form `K(X, Y) = -2 Tr(XY)`:
//! orthonormal frames, structure constants, charged curvature and the
//! gauge Lagrangian with its dependence on the charge.

use std::collections::BTreeSet;

use crate::cxmulti::{h_adjoint, HermitianForm};
use crate::error::{Error, Result};
use crate::numeric::{Exact, Mat, Rational, Scalar};
use crate::poly::{Poly, Var};

fn same_square(x: &Mat<impl Scalar>, y: &Mat<impl Scalar>) -> Result<()> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(())
}

/// `K(X, Y) = -2 Tr(X Y)`.
pub fn killing_like<F: Scalar>(x: &Mat<F>, y: &Mat<F>) -> Result<F> {
    same_square(x, y)?;
    Ok((x * y).trace().scale_i64(-2))
}

/// Killing form of `gl(n)`: `Tr(ad_A ad_B) = 2n Tr(AB) - 2 Tr A Tr B`.
pub fn killing_form_gl<F: Scalar>(a: &Mat<F>, b: &Mat<F>) -> Result<F> {
    same_square(a, b)?;
    let n = a.rows() as i64;
    Ok((a * b).trace().scale_i64(2 * n) - (a.trace() * b.trace()).scale_i64(2))
}

/// A `K`-orthonormal frame of anti-Hermitian generators.
#[derive(Debug, Clone, PartialEq)]
pub struct LieFrame<F> {
    generators: Vec<Mat<F>>,
    h: HermitianForm<F>,
}

impl<F: Scalar> LieFrame<F> {
    pub fn generators(&self) -> &[Mat<F>] {
        &self.generators
    }

    pub fn metric(&self) -> &HermitianForm<F> {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Matrix `K(l_i, l_j)`.
    pub fn gram(&self) -> Mat<F> {
        let g = &self.generators;
        Mat::from_fn(g.len(), g.len(), |i, j| killing_like(&g[i], &g[j]).expect("same shape"))
    }
}

fn is_anti_hermitian<F: Scalar>(x: &Mat<F>, h: &HermitianForm<F>) -> Result<bool> {
    let adj = h_adjoint(x, h)?;
    Ok((&adj + x).approx_eq(&Mat::zeros(x.rows(), x.cols()), 1e-12))
}

/// Gram–Schmidt with respect to `K`, with generators checked to be
/// anti-Hermitian for `h`.
pub fn orthonormalize<F: Scalar>(generators: &[Mat<F>], h: &HermitianForm<F>) -> Result<LieFrame<F>> {
    let mut out: Vec<Mat<F>> = Vec::new();
    for g in generators {
        if g.rows() != h.dim() || !g.is_square() {
            return Err(Error::ShapeMismatch("generator size differs from the metric".into()));
        }
        if !is_anti_hermitian(g, h)? {
            return Err(Error::SignatureError("generator is not anti-Hermitian".into()));
        }
        let scale = killing_like(g, g)?.to_c64().re.abs().max(1.0);
        let mut v = g.clone();
        for e in &out {
            let c = killing_like(e, g)?;
            v = &v - &e.scale(&c);
        }
        let norm2 = killing_like(&v, &v)?;
        if norm2.near_zero(1e-10 * scale) {
            return Err(Error::DependentGenerators);
        }
        let norm = norm2
            .sqrt_real()
            .ok_or_else(|| Error::NotExact("K-norm has no exact square root".into()))?;
        out.push(v.scale(&norm.inv().expect("nonzero norm")));
    }
    Ok(LieFrame { generators: out, h: h.clone() })
}

/// `c[h][j][k]` with `[l_h, l_j] = c_{hj}{}^k l_k`.
pub type StructureConstants<F> = Vec<Vec<Vec<F>>>;

/// Structure constants of a `K`-orthonormal frame, `c_{hj}{}^k = K(l_k, [l_h, l_j])`,
/// after checking that the commutators close on the frame.
pub fn structure_constants<F: Scalar>(frame: &LieFrame<F>) -> Result<StructureConstants<F>> {
    let g = &frame.generators;
    let n = g.len();
    let scale = g.iter().map(Mat::max_abs).fold(0.0, f64::max).max(1.0);
    let mut c = vec![vec![vec![F::zero(); n]; n]; n];
    for h in 0..n {
        for j in 0..n {
            let br = g[h].commutator(&g[j]);
            let mut residual = br.clone();
            for k in 0..n {
                let ck = killing_like(&g[k], &br)?;
                residual = &residual - &g[k].scale(&ck);
                c[h][j][k] = ck;
            }
            let closed = match F::BACKEND {
                crate::numeric::Backend::Exact => residual.is_zero(),
                crate::numeric::Backend::Float => residual.max_abs() < 1e-10 * scale,
            };
            if !closed {
                return Err(Error::NotClosed);
            }
        }
    }
    Ok(c)
}

/// Exact structure constants as rationals, when they are rational.
pub fn rational_structure_constants(c: &StructureConstants<Exact>) -> Option<Vec<Vec<Vec<Rational>>>> {
    c.iter()
        .map(|row| {
            row.iter()
                .map(|col| {
                    col.iter()
                        .map(|v| {
                            let (re, im) = v.as_gaussian()?;
                            num_traits::Zero::is_zero(&im).then_some(re)
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Real field strengths `X_a^i` of a connection `X_a = q X_a^i l_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedField {
    pub q: Rational,
    /// `x[a][i]`, polynomials in the base coordinates.
    pub x: Vec<Vec<Poly>>,
}

impl ChargedField {
    pub fn new(q: Rational, x: Vec<Vec<Poly>>) -> Result<Self> {
        let dim = x.first().map_or(0, Vec::len);
        if x.iter().any(|row| row.len() != dim) {
            return Err(Error::ShapeMismatch("ragged field table".into()));
        }
        Ok(ChargedField { q, x })
    }

    pub fn base_dim(&self) -> usize {
        self.x.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.x.first().map_or(0, Vec::len)
    }
}

/// `R[a][b][i]`.
pub type CurvatureTable = Vec<Vec<Vec<Poly>>>;

fn dx(p: &Poly, a: usize) -> Poly {
    p.derivative(Var::X(a as u8 + 1))
}

fn check_constants(c: &[Vec<Vec<Rational>>], m: usize) -> Result<()> {
    if c.len() != m || c.iter().any(|r| r.len() != m || r.iter().any(|s| s.len() != m)) {
        return Err(Error::ShapeMismatch(format!("structure constants must be {m}x{m}x{m}")));
    }
    Ok(())
}

/// Linear and quadratic parts `(L, Q)` with `R = -q L + q² Q`,
/// `L_ab = ∂_a X_b - ∂_b X_a` and `Q_ab^i = X_a^h X_b^j c_{hj}{}^i`.
fn curvature_parts(x: &[Vec<Poly>], c: &[Vec<Vec<Rational>>]) -> Result<(CurvatureTable, CurvatureTable)> {
    let n = x.len();
    let m = x.first().map_or(0, Vec::len);
    check_constants(c, m)?;
    let mut lin = vec![vec![vec![Poly::zero(); m]; n]; n];
    let mut quad = vec![vec![vec![Poly::zero(); m]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for i in 0..m {
                lin[a][b][i] = &dx(&x[b][i], a) - &dx(&x[a][i], b);
                let mut acc = Poly::zero();
                for h in 0..m {
                    for j in 0..m {
                        if !num_traits::Zero::is_zero(&c[h][j][i]) {
                            acc.add_scaled(&(&x[a][h] * &x[b][j]), &c[h][j][i]);
                        }
                    }
                }
                quad[a][b][i] = acc;
            }
        }
    }
    Ok((lin, quad))
}

/// `R_ab^i = -q (∂_a X_b^i - ∂_b X_a^i) + q² X_a^h X_b^j c_{hj}{}^i`.
pub fn charged_curvature(f: &ChargedField, c: &[Vec<Vec<Rational>>]) -> Result<CurvatureTable> {
    let (lin, quad) = curvature_parts(&f.x, c)?;
    let q2 = &f.q * &f.q;
    Ok(lin
        .iter()
        .zip(&quad)
        .map(|(la, qa)| {
            la.iter()
                .zip(qa)
                .map(|(lab, qab)| lab.iter().zip(qab).map(|(l, q)| &l.scale(&-f.q.clone()) + &q.scale(&q2)).collect())
                .collect()
        })
        .collect())
}

fn contract(r1: &CurvatureTable, r2: &CurvatureTable, g_inv: &[Vec<Rational>]) -> Poly {
    let n = r1.len();
    let mut acc = Poly::zero();
    for a in 0..n {
        for c in 0..n {
            if num_traits::Zero::is_zero(&g_inv[a][c]) {
                continue;
            }
            for b in 0..n {
                for d in 0..n {
                    let w = &g_inv[a][c] * &g_inv[b][d];
                    if num_traits::Zero::is_zero(&w) {
                        continue;
                    }
                    for (x, y) in r1[a][b].iter().zip(&r2[c][d]) {
                        acc.add_scaled(&(x * y), &w);
                    }
                }
            }
        }
    }
    acc
}

fn check_metric(g_inv: &[Vec<Rational>], n: usize) -> Result<()> {
    if g_inv.len() != n || g_inv.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch(format!("inverse metric must be {n}x{n}")));
    }
    Ok(())
}

/// `ℓ[X] = -(1/2q²) g^{ac} g^{bd} δ_ij R_ab^i R_cd^j`.
pub fn gauge_lagrangian(q: &Rational, r: &CurvatureTable, g_inv: &[Vec<Rational>]) -> Result<Poly> {
    if num_traits::Zero::is_zero(q) {
        return Err(Error::ZeroCharge);
    }
    check_metric(g_inv, r.len())?;
    let w = -(Rational::from_integer(2.into()) * q * q).recip();
    Ok(contract(r, r, g_inv).scale(&w))
}

/// `ℓ[X]` as a polynomial in the charge: `coeffs[d]` multiplies `q^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeExpansion {
    pub coeffs: Vec<Poly>,
}

impl ChargeExpansion {
    /// Powers of `q` with a nonzero coefficient.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.coeffs.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(d, _)| d).collect()
    }

    pub fn eval(&self, q: &Rational) -> Poly {
        let mut acc = Poly::zero();
        let mut qp = Rational::from_integer(1.into());
        for c in &self.coeffs {
            acc.add_scaled(c, &qp);
            qp = &qp * q;
        }
        acc
    }
}

/// `ℓ[X] = -½(L·L - 2q L·Q + q² Q·Q)`; the `q⁰` part is the kinetic term.
pub fn gauge_lagrangian_expansion(
    x: &[Vec<Poly>],
    c: &[Vec<Vec<Rational>>],
    g_inv: &[Vec<Rational>],
) -> Result<ChargeExpansion> {
    check_metric(g_inv, x.len())?;
    let (lin, quad) = curvature_parts(x, c)?;
    let half = -Rational::new(1.into(), 2.into());
    let ll = contract(&lin, &lin, g_inv).scale(&half);
    let lq = contract(&lin, &quad, g_inv).scale(&Rational::from_integer(1.into()));
    let qq = contract(&quad, &quad, g_inv).scale(&half);
    Ok(ChargeExpansion { coeffs: vec![ll, lq, qq] })
}

/// Coefficients on the `p`-th tensor power of a line bundle: `p Y_a`.
pub fn charge_power(y: &[Poly], p: i64) -> Vec<Poly> {
    y.iter().map(|c| c.scale_i64(p)).collect()
}

/// `diag(1, -1, -1, -1)` as rationals.
pub fn minkowski_inverse() -> Vec<Vec<Rational>> {
    (0..4)
        .map(|a| {
            (0..4)
                .map(|b| match (a, b) {
                    (0, 0) => Rational::from_integer(1.into()),
                    (a, b) if a == b => Rational::from_integer((-1).into()),
                    _ => Rational::from_integer(0.into()),
                })
                .collect()
        })
        .collect()
}

/// `{i σ_1, i σ_2, i σ_3}`.
pub fn su2_generators<F: Scalar>() -> Vec<Mat<F>> {
    crate::twospinor::pauli_matrices::<F>()[1..].iter().map(|s| s.scale(&F::i())).collect()
}

/// `ε_{hjk}` on three indices.
pub fn levi_civita3(h: usize, j: usize, k: usize) -> i64 {
    if h == j || j == k || h == k {
        0
    } else {
        crate::fnforms::perm_sign(&[h, j, k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cxmulti::h_contract_mat;
    use crate::fnforms::{curvature, curvature_matrix, Connection, PolyMat};
    use crate::numeric::{rat, rat_int};
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type E = Exact;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn random_anti_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Mat<Complex64> {
        let a = Mat::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        (&a - &a.adjoint()).scale(&Complex64::new(0.5, 0.0))
    }

    #[test]
    fn killing_examples() {
        let g = su2_generators::<E>();
        assert_eq!(killing_like(&g[0], &g[0]).unwrap(), E::int(4, 0));
        let half = E::gaussian(rat(1, 2), rat_int(0));
        for j in 0..3 {
            for k in 0..3 {
                let v = killing_like(&g[j].scale(&half), &g[k].scale(&half)).unwrap();
                assert_eq!(v, E::int((j == k) as i64, 0));
            }
        }
        assert_eq!(killing_like(&g[0], &Mat::zeros(2, 2)).unwrap(), E::zero());
        assert!(killing_like(&g[0], &Mat::<E>::zeros(3, 3)).is_err());
    }

    #[test]
    fn killing_positive_on_anti_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for i in 0..1000 {
            let x = random_anti_hermitian(&mut rng, 2 + i % 2);
            let k = killing_like(&x, &x).unwrap();
            assert!(k.re > 0.0 && k.im.abs() < 1e-12);
        }
    }

    #[test]
    fn h_contraction_is_half_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let id2 = HermitianForm::identity(2);
        let id3 = HermitianForm::identity(3);
        for i in 0..1000 {
            let n = 2 + i % 2;
            let (x, y) = (random_anti_hermitian(&mut rng, n), random_anti_hermitian(&mut rng, n));
            let h = if n == 2 { &id2 } else { &id3 };
            let lhs = h_contract_mat(&x, &y, h).unwrap();
            let rhs = killing_like(&x, &y).unwrap() * 0.5;
            assert!((lhs - rhs).norm() < 1e-12);
        }
        let g = su2_generators::<E>();
        assert_eq!(h_contract_mat(&g[0], &g[0], &HermitianForm::identity(2)).unwrap(), E::int(2, 0));
    }

    #[test]
    fn gl_killing_matches_adjoint_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let n = 2;
        let unit = |i: usize, j: usize| Mat::from_fn(n, n, |r, c| Complex64::new((r == i && c == j) as u8 as f64, 0.0));
        for _ in 0..50 {
            let rnd = |rng: &mut ChaCha8Rng| Mat::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let (a, b) = (rnd(&mut rng), rnd(&mut rng));
            // Tr(ad_A ad_B) = Σ_{ij} coefficient of E_ij in [A, [B, E_ij]].
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..n {
                for j in 0..n {
                    tr += a.commutator(&b.commutator(&unit(i, j)))[(i, j)];
                }
            }
            assert!((killing_form_gl(&a, &b).unwrap() - tr).norm() < 1e-12);
        }
    }

    #[test]
    fn su2_orthonormalization_and_constants() {
        let h = HermitianForm::identity(2);
        let frame = orthonormalize(&su2_generators::<E>(), &h).unwrap();
        let half = E::gaussian(rat(1, 2), rat_int(0));
        for (l, g) in frame.generators().iter().zip(su2_generators::<E>()) {
            assert_eq!(*l, g.scale(&half));
        }
        assert_eq!(frame.gram(), Mat::identity(3));
        let c = structure_constants(&frame).unwrap();
        for hh in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(c[hh][j][k], E::from_i64(-levi_civita3(hh, j, k)));
                }
            }
        }
        // Already orthonormal input is unchanged.
        let again = orthonormalize(frame.generators(), &h).unwrap();
        assert_eq!(again, frame);
    }

    #[test]
    fn u2_frame() {
        let mut gens = vec![Mat::<E>::identity(2).scale(&E::i())];
        gens.extend(su2_generators::<E>());
        let frame = orthonormalize(&gens, &HermitianForm::identity(2)).unwrap();
        assert_eq!(frame.generators()[0], Mat::identity(2).scale(&E::gaussian(rat_int(0), rat(1, 2))));
        let c = structure_constants(&frame).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert!(c[0][a][b].is_zero() && c[a][0][b].is_zero() && c[a][b][0].is_zero());
            }
        }
    }

    #[test]
    fn frame_errors() {
        let h = HermitianForm::identity(2);
        let g = su2_generators::<E>();
        let dep = vec![g[0].clone(), g[0].scale(&E::int(3, 0))];
        assert_eq!(orthonormalize(&dep, &h), Err(Error::DependentGenerators));
        assert!(matches!(orthonormalize(&[Mat::identity(2)], &h), Err(Error::SignatureError(_))));
        // span{iσ1, iσ2} alone does not close.
        let frame = orthonormalize(&g[..2], &h).unwrap();
        assert_eq!(structure_constants(&frame), Err(Error::NotClosed));
    }

    #[test]
    fn abelian_frame_has_zero_constants() {
        let gens = vec![Mat::<E>::diag(&[E::i(), E::zero()]), Mat::diag(&[E::zero(), E::i()])];
        let frame = orthonormalize(&gens, &HermitianForm::identity(2)).unwrap_or_else(|e| panic!("{e}"));
        let c = structure_constants(&frame).unwrap();
        assert!(c.iter().flatten().flatten().all(Scalar::is_zero));
    }

    #[test]
    fn abelian_curvature_matches_line_bundle() {
        let x = vec![vec![p("0")], vec![p("x1")], vec![p("0")], vec![p("0")]];
        let zero_c = vec![vec![vec![rat_int(0)]]];
        for q in [rat_int(1), rat(3, 2), rat_int(-2)] {
            let f = ChargedField::new(q.clone(), x.clone()).unwrap();
            let r = charged_curvature(&f, &zero_c).unwrap();
            let tables = x.iter().map(|row| PolyMat::from_rows(vec![vec![row[0].scale(&q)]])).collect();
            let line = curvature(&Connection::linear(4, 1, tables).unwrap());
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(r[a][b][0], curvature_matrix(&line, a, b)[(0, 0)]);
                }
            }
            assert_eq!(r[0][1][0], Poly::constant(-q.clone()));
        }
    }

    #[test]
    fn charge_power_curvature_is_linear() {
        let y = vec![p("x2"), p("x1^2 - x3"), p("0"), p("x1 x4")];
        let line = |coeffs: &[Poly]| {
            let t = coeffs.iter().map(|c| PolyMat::from_rows(vec![vec![c.clone()]])).collect();
            curvature(&Connection::linear(4, 1, t).unwrap())
        };
        assert_eq!(charge_power(&y, 1), y);
        assert_eq!(charge_power(&y, -1), y.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(charge_power(&y, 0).iter().all(Poly::is_zero));
        let base = line(&y);
        for pw in [-2i64, 3] {
            assert_eq!(line(&charge_power(&y, pw)), base.scale(&rat_int(pw)));
        }
    }

    #[test]
    fn curvature_q_scaling() {
        let su2 = rational_structure_constants(
            &structure_constants(&orthonormalize(&su2_generators::<E>(), &HermitianForm::identity(2)).unwrap()).unwrap(),
        )
        .unwrap();
        let x = vec![
            vec![p("x2"), p("1"), p("0")],
            vec![p("0"), p("x1"), p("2")],
            vec![p("x3"), p("0"), p("1")],
            vec![p("0"), p("0"), p("x4")],
        ];
        let r1 = charged_curvature(&ChargedField::new(rat_int(1), x.clone()).unwrap(), &su2).unwrap();
        let r2 = charged_curvature(&ChargedField::new(rat_int(2), x.clone()).unwrap(), &su2).unwrap();
        let (lin, quad) = curvature_parts(&x, &su2).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                for i in 0..3 {
                    assert_eq!(r1[a][b][i], &r1[b][a][i].scale(&rat_int(-1)) + &Poly::zero());
                    assert_eq!(r2[a][b][i], &lin[a][b][i].scale(&rat_int(-2)) + &quad[a][b][i].scale(&rat_int(4)));
                }
            }
        }
        let zero_c = vec![vec![vec![rat_int(0); 3]; 3]; 3];
        let consts = vec![vec![p("1"), p("2"), p("3")]; 4];
        let r = charged_curvature(&ChargedField::new(rat_int(1), consts).unwrap(), &zero_c).unwrap();
        assert!(r.iter().flatten().flatten().all(Poly::is_zero));
    }

    #[test]
    fn lagrangian_charge_grading() {
        let g_inv = minkowski_inverse();
        let ab = vec![vec![p("0")], vec![p("x1")], vec![p("0")], vec![p("0")]];
        let zero_c = vec![vec![vec![rat_int(0)]]];
        let mut values = Vec::new();
        for q in [rat_int(1), rat(1, 3), rat_int(-5)] {
            let r = charged_curvature(&ChargedField::new(q.clone(), ab.clone()).unwrap(), &zero_c).unwrap();
            values.push(gauge_lagrangian(&q, &r, &g_inv).unwrap());
        }
        assert!(values.windows(2).all(|w| w[0] == w[1]));
        // Only R_01 = -R_10 = -q survives; g^00 g^11 = -1, so ℓ = -(1/2q²)(-2q²) = 1.
        assert_eq!(values[0], p("1"));
        assert_eq!(gauge_lagrangian(&rat_int(0), &vec![vec![vec![]; 4]; 4], &g_inv), Err(Error::ZeroCharge));

        let su2 = rational_structure_constants(
            &structure_constants(&orthonormalize(&su2_generators::<E>(), &HermitianForm::identity(2)).unwrap()).unwrap(),
        )
        .unwrap();
        let x = vec![
            vec![p("x2"), p("1"), p("0")],
            vec![p("0"), p("x1"), p("2")],
            vec![p("x3"), p("0"), p("1")],
            vec![p("0"), p("x4"), p("x4")],
        ];
        let exp = gauge_lagrangian_expansion(&x, &su2, &g_inv).unwrap();
        assert_eq!(exp.degrees(), BTreeSet::from([0, 1, 2]));
        for q in [rat_int(1), rat(2, 3), rat_int(-3)] {
            let r = charged_curvature(&ChargedField::new(q.clone(), x.clone()).unwrap(), &su2).unwrap();
            assert_eq!(gauge_lagrangian(&q, &r, &g_inv).unwrap(), exp.eval(&q));
        }
        // The q⁰ part only involves derivatives of X.
        let (lin, _) = curvature_parts(&x, &su2).unwrap();
        assert_eq!(exp.coeffs[0], contract(&lin, &lin, &g_inv).scale(&rat(-1, 2)));
    }
}
