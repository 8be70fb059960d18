use super::*;
use crate::fnforms::sample::{random_linear_tables, random_unimodular};
use crate::numeric::{rat, Exact};
use crate::poly::{Poly, Var};
use crate::tetrad::{ecmd_lagrangian_point, EcmdPoint, FiberForm};
use crate::twospinor::DiracSpinor;
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_4;

fn c(x: f64) -> C {
    C::new(x, 0.0)
}

fn rand_c(rng: &mut ChaCha8Rng) -> C {
    C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn rand_real(rng: &mut ChaCha8Rng) -> C {
    c(rng.gen_range(-1.0..1.0))
}

/// Frame `Ξ = B` for the metric `h = (B B†)⁻¹`.
fn random_frame(rng: &mut ChaCha8Rng) -> IsospinFrame<C> {
    let b = Mat::from_fn(2, 2, |r, k| if r == k { c(1.2) } else { c(0.0) } + rand_c(rng));
    let h = (&b * &b.adjoint()).inverse().unwrap();
    let h = Mat::from_fn(2, 2, |r, k| (h[(r, k)] + h[(k, r)].conj()) * 0.5);
    IsospinFrame::new(b, HermitianForm::new(h).unwrap(), 1e-10).unwrap()
}

fn random_fields(rng: &mut ChaCha8Rng) -> EWGaugeFields {
    let theta = rng.gen_range(0.05..1.5);
    let r = |rng: &mut ChaCha8Rng| [0; 4].map(|_| rng.gen_range(-2.0..2.0));
    let (a, z) = (r(rng), r(rng));
    EWGaugeFields::new(a, z, [0; 4].map(|_| rand_c(rng)), theta).unwrap()
}

#[test]
fn iota_zero_is_identity_in_frame() {
    let f = IsospinFrame::<Exact>::standard();
    assert_eq!(iota_frame(&f)[0], Mat::identity(2));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rf = random_frame(&mut rng);
    assert!(rf.to_frame(&iota_frame(&rf)[0]).approx_eq(&Mat::identity(2), 1e-12));
    assert!((rf.omega_norm2() - 1.0).norm() < 1e-12);
}

#[test]
fn iota_metric_is_twice_minkowski() {
    let f = IsospinFrame::<Exact>::standard();
    let io = iota_frame(&f);
    let eta = minkowski::<Exact>();
    for l in 0..4 {
        for m in 0..4 {
            assert_eq!(iota_metric(&io[l], &io[m], &f), eta[(l, m)].scale_i64(2));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let rf = random_frame(&mut rng);
        let io = iota_frame(&rf);
        for l in 0..4 {
            for m in 0..4 {
                let want = c(2.0) * minkowski::<C>()[(l, m)];
                assert!((iota_metric(&io[l], &io[m], &rf) - want).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn iota_prime_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let t = rng.gen_range(1e-3..std::f64::consts::FRAC_PI_2 - 1e-3);
        let a = iota_prime(t).unwrap();
        let b = iota_prime_diagonal(t).unwrap();
        assert!((&a - &b).max_abs() < 1e-14);
    }
    let q = iota_prime(FRAC_PI_4).unwrap();
    assert!(q.approx_eq(&Mat::diag(&[c(-0.5), c(0.0)]), 1e-15));
    let s = pauli_matrices::<C>();
    assert!(q.approx_eq(&(&s[0] + &s[3]).scale(&c(-0.25)), 1e-15));
    assert!(matches!(iota_prime(0.0), Err(Error::BadAngle(_))));
    assert!(matches!(iota_prime_diagonal(2.0), Err(Error::BadAngle(_))));
}

#[test]
fn diagonal_units_use_iota_zero() {
    let r = projector_identity_report();
    assert!(r.computed_holds);
    assert!(!r.alternative_holds);
    let [u1, u2] = diagonal_units_in_iota::<Exact>();
    let s = pauli_matrices::<Exact>();
    let build = |u: &[Exact; 4]| {
        s.iter().zip(u).fold(Mat::zeros(2, 2), |acc, (m, x)| &acc + &m.scale(x))
    };
    assert_eq!(build(&u1), Mat::diag(&[Exact::one(), Exact::zero()]));
    assert_eq!(build(&u2), Mat::diag(&[Exact::zero(), Exact::one()]));
}

fn exact_higgs(p1: (i64, i64), p2: (i64, i64), mu: i64) -> HiggsValue<Exact> {
    HiggsValue::new([Exact::int(p1.0, p1.1), Exact::int(p2.0, p2.1)], Exact::from_i64(mu), Exact::from_rational(&rat(1, 3)))
        .unwrap()
}

#[test]
fn potential_values_and_stationarity() {
    let hv = exact_higgs((0, 0), (2, 0), 2);
    let v = higgs_potential(&hv);
    assert_eq!(v.value, Exact::from_rational(&rat(16, 3)));
    assert_eq!(v.dim, ScaleDim::length_int(-4));
    assert_eq!(hv.norm2().dim, ScaleDim::length_int(-2));
    let st = potential_stationary(&hv);
    assert_eq!(st.s_star.value, Exact::from_i64(4));
    assert_eq!(st.value.value, Exact::from_rational(&rat(16, 3)));
    assert!(st.slope.is_zero());
    assert_eq!(st.kind, StationaryKind::Maximum);
    assert!(higgs_potential(&exact_higgs((0, 0), (0, 0), 2)).value.is_zero());
    // Finite-difference check of the slope formula on floats.
    let f = HiggsValue::new([c(0.3), c(0.1)], c(1.3), c(0.7)).unwrap();
    let s = f.norm2().value;
    let v = |s: C| f.lambda * (f.mu * f.mu * 2.0 * s - s * s);
    let h = 1e-6;
    assert!(((v(s + h) - v(s - h)) / (2.0 * h) - potential_slope(&f, &s)).norm() < 1e-8);
    assert!(HiggsValue::new([c(0.0), c(0.0)], c(-1.0), c(1.0)).is_err());
}

#[test]
fn polar_examples() {
    let hv = exact_higgs((0, 0), (6, 0), 2);
    let p = higgs_polar(&hv).unwrap();
    assert_eq!(p.f.value, Exact::from_i64(4));
    assert_eq!(p.s, Mat::identity(2));
    let hv = exact_higgs((5, 0), (0, 0), 2);
    let p = higgs_polar(&hv).unwrap();
    let want = Mat::from_rows(vec![vec![Exact::zero(), Exact::one()], vec![-Exact::one(), Exact::zero()]]);
    assert_eq!(p.s, want);
    assert_eq!(higgs_polar(&exact_higgs((0, 0), (0, 0), 1)), Err(Error::ZeroHiggs));
    // (3, 4i) has norm 5: exact reconstruction.
    let hv = exact_higgs((3, 0), (0, 4), 1);
    let p = higgs_polar(&hv).unwrap();
    assert_eq!(p.s.mul_vec(&[Exact::zero(), Exact::from_i64(5)]), hv.phi.to_vec());
    assert_eq!(p.s.det(), Exact::one());
    assert_eq!(&p.s.adjoint() * &p.s, Mat::identity(2));
    // √2 is in the field, √5 is not.
    let p = higgs_polar(&exact_higgs((1, 0), (1, 0), 1)).unwrap();
    assert_eq!(p.s.det(), Exact::one());
    assert!(matches!(higgs_polar(&exact_higgs((1, 0), (2, 0), 1)), Err(Error::NotExact(_))));
}

#[test]
fn polar_random_is_special_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let hv = HiggsValue::new([rand_c(&mut rng), rand_c(&mut rng)], c(0.8), c(0.5)).unwrap();
        let p = higgs_polar(&hv).unwrap();
        let n = hv.norm2().value.sqrt();
        assert!((&p.s.adjoint() * &p.s).approx_eq(&Mat::identity(2), 1e-12));
        assert!((p.s.det() - 1.0).norm() < 1e-12);
        let back = p.s.mul_vec(&[c(0.0), n]);
        assert!((back[0] - hv.phi[0]).norm() < 1e-12 && (back[1] - hv.phi[1]).norm() < 1e-12);
        assert!((p.f.value - (n - 0.8)).norm() < 1e-12);
    }
}

/// `S(θ, α, β) = [[cosθ e^{iα}, -sinθ e^{-iβ}], [sinθ e^{iβ}, cosθ e^{-iα}]]`
/// covers SU(2); every grid point that reproduces `φ` is the closed form.
#[test]
fn polar_is_unique_on_su2_grid() {
    let su2 = |t: f64, a: f64, b: f64| {
        Mat::from_rows(vec![
            vec![C::from_polar(t.cos(), a), -C::from_polar(t.sin(), -b)],
            vec![C::from_polar(t.sin(), b), C::from_polar(t.cos(), -a)],
        ])
    };
    let n = 24;
    let step = |k: usize, span: f64| span * k as f64 / n as f64;
    let (t0, a0, b0) = (step(7, std::f64::consts::FRAC_PI_2), step(5, std::f64::consts::TAU), step(17, std::f64::consts::TAU));
    let s0 = su2(t0, a0, b0);
    let phi = s0.mul_vec(&[c(0.0), c(1.7)]);
    let hv = HiggsValue::new([phi[0], phi[1]], c(1.0), c(1.0)).unwrap();
    let closed = higgs_polar(&hv).unwrap().s;
    let mut hits = 0;
    for i in 1..n {
        for j in 0..n {
            for k in 0..n {
                let s = su2(step(i, std::f64::consts::FRAC_PI_2), step(j, std::f64::consts::TAU), step(k, std::f64::consts::TAU));
                let v = s.mul_vec(&[c(0.0), c(1.7)]);
                if (v[0] - phi[0]).norm() + (v[1] - phi[1]).norm() < 1e-9 {
                    hits += 1;
                    assert!((&s - &closed).max_abs() < 1e-9);
                }
            }
        }
    }
    assert_eq!(hits, 1);
}

/// `R_ab = -∂_a X_b + ∂_b X_a + X_a X_b - X_b X_a` on polynomial tables.
fn poly_curvature(x: &[PolyMat], a: usize, b: usize) -> PolyMat {
    let d = |m: &PolyMat, i: usize| m.derivative(Var::X(i as u8 + 1));
    &(&(&d(&x[a], b) - &d(&x[b], a)) + &(&x[a] * &x[b])) - &(&x[b] * &x[a])
}

#[test]
fn rotate_connection_conjugates_curvature() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(2..=3);
        let x = random_linear_tables(&mut rng, n, 2);
        let s = random_unimodular(&mut rng, n, 2);
        let sinv = s.inverse_unimodular().unwrap();
        let xr = rotate_connection(&x, &s).unwrap();
        for a in 0..n {
            for b in 0..n {
                let lhs = poly_curvature(&xr, a, b);
                let rhs = &(&s * &poly_curvature(&x, a, b)) * &sinv;
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn rotate_connection_trivial_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let x = random_linear_tables(&mut rng, 3, 2);
    assert_eq!(rotate_connection(&x, &PolyMat::identity(2)).unwrap(), x);
    let zero = vec![PolyMat::zeros(2, 2); 3];
    let s = PolyMat::from_rows(vec![vec![Poly::int(1), Poly::int(2)], vec![Poly::int(0), Poly::int(1)]]);
    assert!(rotate_connection(&zero, &s).unwrap().iter().all(PolyMat::is_zero));
    let bad = PolyMat::from_rows(vec![vec![Poly::var(Var::X(1)), Poly::int(0)], vec![Poly::int(0), Poly::int(1)]]);
    assert_eq!(rotate_connection(&x, &bad), Err(Error::NonConstantDeterminant));
}

#[test]
fn assemble_a_only_is_half_iota0_minus_iota3() {
    let f = IsospinFrame::standard();
    let fields = EWGaugeFields::new([1.0, 0.0, 0.0, 0.0], [0.0; 4], [c(0.0); 4], 0.5).unwrap();
    let w = assemble_w(&fields, &f).unwrap();
    let comps = w_components(&w, &f);
    let want = [c(0.5), c(0.0), c(0.0), c(-0.5)];
    for (g, e) in comps[0].iter().zip(want) {
        assert!((g - e).norm() < 1e-15);
    }
    assert!(comps[1..].iter().flatten().all(|v| v.norm() == 0.0));
    let zero = EWGaugeFields::new([0.0; 4], [0.0; 4], [c(0.0); 4], 0.5).unwrap();
    assert!(assemble_w(&zero, &f).unwrap().iter().all(|m| m.max_abs() == 0.0));
    assert!(matches!(EWGaugeFields::new([0.0; 4], [0.0; 4], [c(0.0); 4], 1.6), Err(Error::BadAngle(_))));
}

#[test]
fn assemble_extract_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..500 {
        let f = if i % 2 == 0 { IsospinFrame::standard() } else { random_frame(&mut rng) };
        let fields = random_fields(&mut rng);
        let w = assemble_w(&fields, &f).unwrap();
        let back = extract_fields(&w, fields.theta_w, &f).unwrap();
        let err = (0..4)
            .map(|l| {
                (back.a[l] - fields.a[l]).abs() + (back.z[l] - fields.z[l]).abs() + (back.wp[l] - fields.wp[l]).norm()
            })
            .fold(0.0, f64::max);
        assert!(err < 1e-12, "error {err}");
    }
}

#[test]
fn extract_rejects_non_physical_w() {
    let f = IsospinFrame::standard();
    let mut w: GaugeW<C> = std::array::from_fn(|_| Mat::zeros(2, 2));
    w[0][(0, 0)] = C::new(0.0, 1.0);
    assert!(matches!(extract_fields(&w, 0.5, &f), Err(Error::ShapeMismatch(_))));
}

#[test]
fn sectors_are_h_tilde_orthogonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let f = random_frame(&mut rng);
        let units: Vec<Mat<C>> = [(0, 0), (1, 1), (0, 1), (1, 0)]
            .iter()
            .map(|&(r, k)| {
                let mut m = Mat::zeros(2, 2);
                m[(r, k)] = c(1.0);
                f.from_frame(&m)
            })
            .collect();
        for (i, u) in units.iter().enumerate() {
            for (j, v) in units.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((h_tilde(u, v, &f) - want).norm() < 1e-10);
            }
        }
        // The W⁺ and W⁻ pieces sit in single sectors, orthogonal to A and Z.
        let fields = random_fields(&mut rng);
        let only = |a: bool, z: bool, wp: bool| {
            let g = EWGaugeFields {
                a: if a { fields.a } else { [0.0; 4] },
                z: if z { fields.z } else { [0.0; 4] },
                wp: if wp { fields.wp } else { [c(0.0); 4] },
                theta_w: fields.theta_w,
            };
            assemble_w(&g, &f).unwrap()
        };
        let (neutral, charged) = (only(true, true, false), only(false, false, true));
        for l in 0..4 {
            let sc = sector_components(&charged[l], &f);
            assert!(sc[0].norm() < 1e-10 && sc[1].norm() < 1e-10);
            assert!((sc[2] - fields.wp[l]).norm() < 1e-10 && (sc[3] - fields.wp[l].conj()).norm() < 1e-10);
            let sn = sector_components(&neutral[l], &f);
            assert!(sn[2].norm() < 1e-10 && sn[3].norm() < 1e-10);
            assert!(h_tilde(&neutral[l], &charged[l], &f).norm() < 1e-10);
        }
    }
}

#[test]
fn hat_w_and_induced_connection() {
    let f = IsospinFrame::<Exact>::standard();
    let mut w: GaugeW<Exact> = std::array::from_fn(|_| Mat::zeros(2, 2));
    w[0] = iota_frame(&f)[0].clone();
    let hat = hat_w(&w, &f);
    assert_eq!(hat[0], Exact::from_i64(2));
    assert!(hat[1..].iter().all(Exact::is_zero));

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let fr = random_frame(&mut rng);
        let io = iota_frame(&fr);
        let comps: [[C; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rand_real(&mut rng)));
        let w: GaugeW<C> = std::array::from_fn(|l| io.iter().zip(comps[l]).fold(Mat::zeros(2, 2), |acc, (m, x)| &acc + &m.scale(&x)));
        let q = rand_real(&mut rng);
        let (x, xh) = induced_connection(&w, &q, &fr);
        let hw = hat_w(&w, &fr);
        for l in 0..4 {
            assert!((hw[l] - comps[l][0] * 2.0).norm() < 1e-10);
            assert!((xh[l] - x[l].trace()).norm() < 1e-10);
            assert!((&x[l] + &x[l].adjoint()).max_abs() < 1e-10);
        }
        // Traceless W gives X̂ = 0.
        let w0: GaugeW<C> = std::array::from_fn(|l| io[1..].iter().zip(&comps[l][1..]).fold(Mat::zeros(2, 2), |acc, (m, x)| &acc + &m.scale(x)));
        assert!(induced_connection(&w0, &q, &fr).1.iter().all(|v| v.norm() < 1e-10));
    }
}

#[test]
fn fermion_frame_rotation_respects_lambda2_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let psi = FermionValue { psi_r: [rand_c(&mut rng), rand_c(&mut rng)], psi_l: [[rand_c(&mut rng), rand_c(&mut rng)], [rand_c(&mut rng), rand_c(&mut rng)]] };
    let phase = C::from_polar(1.0, 0.7);
    let s = Mat::from_rows(vec![vec![phase, c(0.0)], vec![c(0.0), c(1.0)]]);
    let r = psi.in_rotated_frame(&s).unwrap();
    // ω′⁻¹ = det S · ω⁻¹ so ψ′^A det S = ψ^A.
    for k in 0..2 {
        assert!((r.psi_r[k] * phase - psi.psi_r[k]).norm() < 1e-12);
        assert!((r.psi_l[0][k] * phase - psi.psi_l[0][k]).norm() < 1e-12);
        assert!((r.psi_l[1][k] - psi.psi_l[1][k]).norm() < 1e-12);
    }
    assert_eq!((LAMBDA2I_POWER_R, LAMBDA2I_POWER_L), (1, 0));
}

fn zero_ew() -> EwPoint<C> {
    let z = || std::array::from_fn(|_| Mat::zeros(2, 2));
    EwPoint {
        theta: Tetrad::identity(),
        psi: FieldJet::constant(FermionValue::zero(), FermionValue::zero()),
        phi: FieldJet::constant([c(0.0); 2], [c(0.0); 2]),
        x: FieldJet { value: z(), d: std::array::from_fn(|_| z()) },
        m: c(1.0),
        lambda: c(0.5),
    }
}

fn random_ew(rng: &mut ChaCha8Rng) -> EwPoint<C> {
    let rf = |rng: &mut ChaCha8Rng| FermionValue {
        psi_r: [rand_c(rng), rand_c(rng)],
        psi_l: [[rand_c(rng), rand_c(rng)], [rand_c(rng), rand_c(rng)]],
    };
    let anti = |rng: &mut ChaCha8Rng| {
        let m = Mat::from_fn(2, 2, |_, _| rand_c(rng));
        (&m - &m.adjoint()).scale(&c(0.5))
    };
    let theta = Tetrad::new(Mat::from_fn(4, 4, |r, k| if r == k { c(1.5) } else { c(0.0) } + rand_real(rng))).unwrap();
    EwPoint {
        theta,
        psi: FieldJet { value: rf(rng), d: std::array::from_fn(|_| rf(rng)) },
        phi: FieldJet { value: [rand_c(rng), rand_c(rng)], d: std::array::from_fn(|_| [rand_c(rng), rand_c(rng)]) },
        x: FieldJet { value: std::array::from_fn(|_| anti(rng)), d: std::array::from_fn(|_| std::array::from_fn(|_| anti(rng))) },
        m: c(0.9),
        lambda: c(0.4),
    }
}

#[test]
fn ew_zero_fields() {
    let t = ew_lagrangian_point(&zero_ew(), &FieldScales::default()).unwrap();
    for q in [&t.l_psi, &t.l_phi, &t.l_x, &t.l_int] {
        assert_eq!(q.value, c(0.0));
        assert!(q.dim.is_dimensionless());
    }
}

#[test]
fn ew_vacuum_potential() {
    let mu = 1.3;
    let mut pt = zero_ew();
    pt.phi = FieldJet::constant([c(0.0), c(mu)], [c(0.0); 2]);
    pt.m = c(mu);
    let t = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap();
    assert!((t.l_phi.value - 0.5 * mu.powi(4)).norm() < 1e-12);
}

#[test]
fn ew_terms_are_real() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let pt = random_ew(&mut rng);
        let t = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap();
        for q in [&t.l_psi, &t.l_phi, &t.l_x, &t.l_int] {
            assert!(q.value.im.abs() < 1e-12 * q.value.norm().max(1.0));
        }
    }
}

/// With one isospin component and no connection, the right-handed part and
/// the surviving left-handed row form a Dirac spinor `(ψ^A, ψ_Ȧ)`, and
/// `ℓ_ψ` is the kinetic part of `ℓ_D`.
#[test]
fn ew_fermion_term_matches_dirac_kinetic_term() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let mut pt = random_ew(&mut rng);
        pt.x = zero_ew().x;
        let mut psi = pt.psi.clone();
        psi.value.psi_l[1] = [c(0.0); 2];
        for d in psi.d.iter_mut() {
            d.psi_l[1] = [c(0.0); 2];
        }
        pt.psi = psi.clone();
        let ew = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap().l_psi.value;
        let dirac = |v: &FermionValue<C>| DiracSpinor::new(v.psi_r, v.psi_l[0]);
        let z = c(0.0);
        let e = EcmdPoint {
            theta: pt.theta.clone(),
            curvature: FiberForm::zero(2),
            y: FieldJet { value: [z; 4], d: [[z; 4]; 4] },
            f: Mat::zeros(4, 4),
            psi: FieldJet { value: dirac(&psi.value), d: std::array::from_fn(|a| dirac(&psi.d[a])) },
            gamma_tilde: None,
            m: z,
            inv_grav: z,
        };
        let d = ecmd_lagrangian_point(&e, &FieldScales::default()).unwrap().l_d.value;
        assert!((ew - d).norm() < 1e-10, "{ew} vs {d}");
    }
}

/// Abelian check: `X_a = i A_a ξ̄_2⊗ξ_2` gives `ℓ_X = -F_ab F^ab det Θ`.
#[test]
fn ew_gauge_term_abelian() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut pt = zero_ew();
    let e22 = Mat::diag(&[c(0.0), C::new(0.0, 1.0)]);
    let da: [[f64; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
    pt.x.value = std::array::from_fn(|_| e22.scale(&c(rng.gen_range(-1.0..1.0))));
    pt.x.d = std::array::from_fn(|b| std::array::from_fn(|a| e22.scale(&c(da[b][a]))));
    let f = |a: usize, b: usize| -da[a][b] + da[b][a];
    let eta = [1.0, -1.0, -1.0, -1.0];
    let mut want = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            want -= eta[a] * eta[b] * f(a, b) * f(a, b);
        }
    }
    let t = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap();
    assert!((t.l_x.value - want).norm() < 1e-12);
}

/// `ℓ_int` is the negative `h`-pairing of `ψ_L` with `φ ⊗ ψ_R`, plus its conjugate.
#[test]
fn ew_interaction_term() {
    let mut pt = zero_ew();
    pt.psi.value.psi_r = [c(1.0), c(0.0)];
    pt.psi.value.psi_l = [[c(0.0), c(0.0)], [c(2.0), c(0.0)]];
    pt.phi.value = [c(0.0), C::new(0.0, 3.0)];
    let t = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap();
    // t1 = conj(2)·3i·1 = 6i, t2 = conj(1)·conj(3i)·2 = -6i.
    assert!(t.l_int.value.norm() < 1e-15);
    pt.phi.value = [c(0.0), c(3.0)];
    let t = ew_lagrangian_point(&pt, &FieldScales::default()).unwrap();
    assert!((t.l_int.value + 12.0).norm() < 1e-15);
}

#[test]
fn ew_singular_tetrad() {
    let mut pt = zero_ew();
    pt.theta = Tetrad::new(Mat::diag(&[c(1.0), c(1.0), c(0.0), c(1.0)])).unwrap();
    assert_eq!(ew_lagrangian_point(&pt, &FieldScales::default()), Err(Error::SingularTetrad));
}

#[test]
fn ew_dims_follow_scales() {
    let bad = FieldScales { psi: ScaleDim::length_int(-1), ..FieldScales::default() };
    let t = ew_lagrangian_point(&zero_ew(), &bad).unwrap();
    assert_eq!(t.l_psi.dim, ScaleDim::length_int(1));
    assert!(t.l_phi.dim.is_dimensionless() && t.l_x.dim.is_dimensionless());
}

#[test]
fn dilaton_value_and_dim() {
    let mut dg = [[c(0.0); 4]; 4];
    dg[0][1] = c(2.0);
    let v = dilaton_term(&Tetrad::identity(), &dg).unwrap();
    // g^{00} g^{11} (∂_0 G_1)² = -4.
    assert!((v.value + 4.0).norm() < 1e-15);
    assert!(v.dim.is_dimensionless());
    let t = Tetrad::new(Mat::diag(&[c(2.0); 4])).unwrap();
    assert!((dilaton_term(&t, &dg).unwrap().value + 4.0).norm() < 1e-12);
}
