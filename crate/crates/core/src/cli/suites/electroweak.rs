use num_complex::Complex64;
use rand::Rng;

use super::{broken, count_check, mat_check, on_backend, sci, show, tol_for, Ctx};
use crate::cli::report::Check;
use crate::cxmulti::HermitianForm;
use crate::error::Error;
use crate::ewsector::audit::full_audit;
use crate::ewsector::{
    assemble_w, diagonal_units_in_iota, ew_lagrangian_point, extract_fields, h_tilde, hat_w, higgs_polar,
    higgs_potential, iota_frame, iota_metric, iota_prime, iota_prime_diagonal, potential_stationary,
    projector_identity_report, w_components, EWGaugeFields, HiggsValue, IsospinFrame, StationaryKind,
};
use crate::numeric::{Backend, Exact, Mat, Scalar};
use crate::scales::{to_natural_units, Coupling, ScaleDim, ScaledQuantity};
use crate::tetrad::{
    ecmd_lagrangian_point, interaction_clone, lower_clone, theta_breve, theta_breve_kernel, FiberForm, Tetrad,
};
use crate::twospinor::minkowski;

const FL: Backend = Backend::Float;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rand_c(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// `ξ = B`, `h = (BB†)⁻¹`, which makes `ξ` orthonormal.
fn random_frame(rng: &mut impl Rng) -> Option<IsospinFrame<Complex64>> {
    let b = Mat::from_fn(2, 2, |r, k| if r == k { c(1.2) } else { c(0.0) } + rand_c(rng) * 0.5);
    let h = (&b * &b.adjoint()).inverse()?;
    let h = Mat::from_fn(2, 2, |r, k| (h[(r, k)] + h[(k, r)].conj()) * 0.5);
    IsospinFrame::new(b, HermitianForm::new(h).ok()?, 1e-9).ok()
}

fn random_fields(rng: &mut impl Rng) -> EWGaugeFields {
    let theta = rng.gen_range(0.05..1.5);
    let r = |rng: &mut dyn rand::RngCore| [0; 4].map(|_| rng.gen_range(-2.0..2.0));
    let (a, z) = (r(rng), r(rng));
    EWGaugeFields::new(a, z, [0; 4].map(|_| rand_c(rng)), theta).expect("angle in range")
}

fn field_distance(x: &EWGaugeFields, y: &EWGaugeFields) -> f64 {
    let mut d = 0.0f64;
    for l in 0..4 {
        d = d.max((x.a[l] - y.a[l]).abs()).max((x.z[l] - y.z[l]).abs()).max((x.wp[l] - y.wp[l]).norm());
    }
    d
}

fn iota_gram<F: Scalar>(frame: &IsospinFrame<F>) -> Mat<F> {
    let io = iota_frame(frame);
    Mat::from_fn(4, 4, |l, m| iota_metric(&io[l], &io[m], frame))
}

pub fn breaking(ctx: &Ctx) -> Vec<Check> {
    let mut out = on_backend!(breaking_on, ctx);
    let tol = ctx.tol;
    let mut rng = ctx.rng(31);
    let n = ctx.samples().max(100);

    let two_eta = minkowski::<Complex64>().scale(&c(2.0));
    let mut bad = 0;
    for _ in 0..n {
        bad += usize::from(!random_frame(&mut rng).is_some_and(|f| iota_gram(&f).approx_eq(&two_eta, 1e-10)));
    }
    out.push(count_check("ew/iota-metric-random-frames", "iota frame metric is 2 eta in any orthonormal frame", FL, bad, n, 1e-10));

    let mut worst = 0.0f64;
    for k in 1..=100 {
        let th = k as f64 * std::f64::consts::FRAC_PI_2 / 101.0;
        worst = match (iota_prime(th), iota_prime_diagonal(th)) {
            (Ok(a), Ok(b)) => worst.max(super::resid(&a, &b)),
            _ => f64::INFINITY,
        };
    }
    out.push(
        Check::new("ew/iota-prime-forms", worst <= 1e-14, "two expressions of iota' agree", FL)
            .values(format!("max residual {} over 100 angles", sci(worst)), "0")
            .tol(1e-14),
    );

    let frame = IsospinFrame::<Complex64>::standard();
    let anchor = "assemble then extract recovers A, Z, W+";
    match ctx.sc.gauge_fields().and_then(|g| {
        let w = assemble_w(&g, &frame)?;
        Ok((field_distance(&extract_fields(&w, g.theta_w, &frame)?, &g), g, w))
    }) {
        Ok((d, g, w)) => {
            out.push(
                Check::new("ew/assemble-extract-scenario", d <= tol, anchor, FL)
                    .values(format!("max residual {}", sci(d)), "0")
                    .tol(tol),
            );
            let comps = w_components(&w, &frame);
            let hw = hat_w(&w, &frame);
            let dev = (0..4).map(|l| (hw[l] - comps[l][0] * 2.0).norm()).fold(0.0, f64::max);
            out.push(
                Check::new("ew/hat-w", dev <= tol, "h-contraction of W is 2 W^0", FL)
                    .values(format!("max residual {}", sci(dev)), "0")
                    .tol(tol),
            );
            let only = |neutral: bool| {
                let z4 = [0.0; 4];
                let fields = if neutral {
                    EWGaugeFields { wp: [c(0.0); 4], ..g.clone() }
                } else {
                    EWGaugeFields { a: z4, z: z4, ..g.clone() }
                };
                assemble_w(&fields, &frame)
            };
            let orth = match (only(true), only(false)) {
                (Ok(nw), Ok(cw)) => (0..4).map(|l| h_tilde(&nw[l], &cw[l], &frame).norm()).fold(0.0, f64::max),
                _ => f64::INFINITY,
            };
            out.push(
                Check::new("ew/sector-orthogonality", orth <= tol, "neutral and charged sectors are orthogonal", FL)
                    .values(format!("max |h(neutral, charged)| {}", sci(orth)), "0")
                    .tol(tol),
            );
        }
        Err(e) => out.push(broken("ew/assemble-extract-scenario", anchor, FL, &e)),
    }

    let mut bad = 0;
    let mut worst = 0.0f64;
    for _ in 0..n {
        let g = random_fields(&mut rng);
        let Some(f) = random_frame(&mut rng) else {
            bad += 1;
            continue;
        };
        let d = assemble_w(&g, &f)
            .and_then(|w| extract_fields(&w, g.theta_w, &f))
            .map_or(f64::INFINITY, |back| field_distance(&back, &g));
        worst = worst.max(d);
        bad += usize::from(d > tol);
    }
    out.push(
        count_check("ew/assemble-extract-random", anchor, FL, bad, n, tol)
            .values(format!("{bad} of {n} cases violate, max residual {}", sci(worst)), "0 violations"),
    );
    out
}

fn breaking_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let b = F::BACKEND;
    let t = tol_for::<F>(ctx.tol);
    let mut out = Vec::new();
    let frame = IsospinFrame::<F>::standard();
    let two_eta = minkowski::<F>().scale(&F::from_i64(2));
    out.push(mat_check("ew/iota-metric", "iota frame metric is 2 eta", &iota_gram(&frame), &two_eta, ctx.tol));

    // ξ̄_1⊗ξ_1 and ξ̄_2⊗ξ_2 rebuilt from their ι coefficients.
    let io = iota_frame(&frame);
    let units = diagonal_units_in_iota::<F>();
    let rebuilt: Vec<Mat<F>> =
        units.iter().map(|cs| cs.iter().zip(&io).fold(Mat::zeros(2, 2), |acc, (x, m)| &acc + &m.scale(x))).collect();
    let mut want = [Mat::zeros(2, 2), Mat::zeros(2, 2)];
    want[0][(0, 0)] = F::one();
    want[1][(1, 1)] = F::one();
    let ok = (0..2).all(|i| frame.to_frame(&rebuilt[i]).approx_eq(&want[i], t));
    let rep = projector_identity_report();
    out.push(
        Check::new("ew/diagonal-units", ok && rep.computed_holds, "diagonal matrix units are (iota0 +- iota3)/2", b)
            .values(
                format!("computed form holds: {}, iota1 variant holds: {}", ok && rep.computed_holds, rep.alternative_holds),
                "computed form holds",
            )
            .tol(t),
    );

    match ctx.sc.higgs::<F>() {
        Ok(hv) => {
            out.push(potential_checks(&hv, t));
            out.push(stationary_check(&hv, t));
            match higgs_polar(&hv) {
                Ok(p) => out.push(polar_check(&hv, &p.s, &p.f, t)),
                Err(Error::NotExact(_)) if b == Backend::Exact => match ctx.sc.higgs::<Complex64>() {
                    Ok(hf) => match higgs_polar(&hf) {
                        Ok(p) => out.push(polar_check(&hf, &p.s, &p.f, ctx.tol)),
                        Err(e) => out.push(broken("ew/higgs-polar", POLAR, FL, &e)),
                    },
                    Err(e) => out.push(broken("ew/higgs-polar", POLAR, FL, &e)),
                },
                Err(e) => out.push(broken("ew/higgs-polar", POLAR, b, &e)),
            }
        }
        Err(e) => out.push(broken("ew/higgs", "Higgs inputs", b, &e)),
    }
    out
}

const POLAR: &str = "phi = S(|phi| xi_2) with S in SU(2)";

fn polar_check<F: Scalar>(hv: &HiggsValue<F>, s: &Mat<F>, f: &ScaledQuantity<F>, tol: f64) -> Check {
    let t = tol_for::<F>(tol);
    let id = Mat::<F>::identity(2);
    let unitary = super::resid(&(s * &s.adjoint()), &id);
    let det = (s.det() - F::one()).to_c64().norm();
    let norm = f.value.clone() + hv.mu.clone();
    let back = [s[(0, 1)].clone() * norm.clone(), s[(1, 1)].clone() * norm];
    let recon = back.iter().zip(&hv.phi).map(|(x, y)| (x.clone() - y.clone()).to_c64().norm()).fold(0.0, f64::max);
    let ok = (s * &s.adjoint()).approx_eq(&id, t)
        && s.det().approx_eq(&F::one(), t)
        && back.iter().zip(&hv.phi).all(|(x, y)| x.approx_eq(y, t));
    Check::new("ew/higgs-polar", ok, POLAR, F::BACKEND)
        .values(format!("|SS*-1| {}, |det S-1| {}, reconstruction {}", sci(unitary), sci(det), sci(recon)), "0, 0, 0")
        .tol(t)
}

fn potential_checks<F: Scalar>(hv: &HiggsValue<F>, t: f64) -> Check {
    let s = hv.phi[0].abs2() + hv.phi[1].abs2();
    let mu2 = hv.mu.clone() * hv.mu.clone();
    let want = hv.lambda.clone() * (mu2.scale_i64(2) * s.clone() - s.clone() * s);
    let got = higgs_potential(hv);
    let ok = got.value.approx_eq(&want, t) && got.dim == ScaleDim::length_int(-4);
    Check::new("ew/higgs-potential", ok, "V = lambda(2 mu^2 |phi|^2 - |phi|^4)", F::BACKEND)
        .values(format!("{} [{}]", show(&got.value), got.dim), format!("{} [L^-4]", show(&want)))
        .tol(t)
}

fn stationary_check<F: Scalar>(hv: &HiggsValue<F>, t: f64) -> Check {
    let st = potential_stationary(hv);
    let kind = match st.kind {
        StationaryKind::Minimum => "minimum",
        StationaryKind::Maximum => "maximum",
    };
    let want_s = hv.mu.clone() * hv.mu.clone();
    let ok = st.slope.approx_eq(&F::zero(), t) && st.s_star.value.approx_eq(&want_s, t);
    Check::new("ew/potential-stationary", ok, "dV/ds vanishes at |phi| = mu", F::BACKEND)
        .values(format!("slope {} at s = {} ({kind})", show(&st.slope), show(&st.s_star.value)), "slope 0 at s = mu^2")
        .tol(t)
}

pub fn audit(ctx: &Ctx) -> Vec<Check> {
    let scales = ctx.sc.field_scales();
    let mut out: Vec<Check> = full_audit(&scales)
        .entries
        .iter()
        .map(|e| {
            Check::new(&format!("audit/{}", e.term), e.ok, "term is conformally invariant", Backend::Exact)
                .values(dim_label(&e.dim), "L^0")
        })
        .collect();

    for (cp, want) in [(Coupling::PositronCharge, 0), (Coupling::Mass, -1), (Coupling::Gravitational, 2)] {
        let got = to_natural_units(&cp.dim());
        out.push(
            Check::new(
                &format!("audit/natural-units.{}", cp.symbol()),
                got == crate::numeric::rat_int(want),
                "natural units reduce couplings to powers of length",
                Backend::Exact,
            )
            .values(format!("L^{}", crate::numeric::format_rational(&got)), format!("L^{want}")),
        );
    }
    out.extend(on_backend!(ew_point_on, ctx));
    out
}

fn dim_label(d: &ScaleDim) -> String {
    if d.is_dimensionless() {
        "L^0".into()
    } else {
        d.to_string()
    }
}

fn term_check<F: Scalar>(id: &str, anchor: &str, q: &ScaledQuantity<F>, t: f64) -> Check {
    let ok = q.dim.is_dimensionless() && q.value.is_real(t);
    Check::new(id, ok, anchor, F::BACKEND)
        .values(format!("{} [{}]", show(&q.value), dim_label(&q.dim)), "real [L^0]")
        .tol(t)
}

fn ew_point_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let t = tol_for::<F>(ctx.tol);
    let anchor = "pointwise electroweak Lagrangian is a real density";
    match ctx.sc.ew_point::<F>().and_then(|p| ew_lagrangian_point(&p, &ctx.sc.field_scales())) {
        Ok(terms) => vec![
            term_check("audit/ew-point.l_psi", anchor, &terms.l_psi, t),
            term_check("audit/ew-point.l_phi", anchor, &terms.l_phi, t),
            term_check("audit/ew-point.l_X", anchor, &terms.l_x, t),
            term_check("audit/ew-point.l_int", anchor, &terms.l_int, t),
        ],
        Err(e) => vec![broken("audit/ew-point", anchor, F::BACKEND, &e)],
    }
}

pub fn ecmd(ctx: &Ctx) -> Vec<Check> {
    let mut out = on_backend!(ecmd_on, ctx);
    let b = ctx.backend;
    let base = match b {
        Backend::Exact => clone_roundtrip::<Exact>(),
        Backend::Float => clone_roundtrip::<Complex64>(),
    };
    out.push(
        Check::new("ecmd/interaction-clones", base == 0, "clones of l_int lower back to l_int", b)
            .values(format!("{base} of 8 masks fail"), "0"),
    );
    out
}

fn clone_roundtrip<F: Scalar>() -> usize {
    let base = interaction_clone::<F>(0);
    (0u8..8).filter(|&m| !lower_clone(&interaction_clone::<F>(m), m).approx_eq(&base, 1e-12)).count()
}

fn ecmd_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let b = F::BACKEND;
    let t = tol_for::<F>(ctx.tol);
    let mut out = Vec::new();
    match ctx.sc.tetrad::<F>() {
        Ok(th) => out.extend(breve_checks(&th, ctx.tol)),
        Err(e) => out.push(broken("ecmd/theta-breve-volume", "tetrad", b, &e)),
    }
    let anchor = "pointwise ECMD Lagrangian is a real density";
    match ctx.sc.ecmd_point::<F>() {
        Ok(None) => {}
        Ok(Some(p)) => match ecmd_lagrangian_point(&p, &ctx.sc.field_scales()) {
            Ok(terms) => {
                out.push(term_check("ecmd/l_g", anchor, &terms.l_g, t));
                out.push(term_check("ecmd/l_em", anchor, &terms.l_em, t));
                out.push(term_check("ecmd/l_D", anchor, &terms.l_d, t));
            }
            Err(e) => out.push(broken("ecmd/point", anchor, b, &e)),
        },
        Err(e) => out.push(broken("ecmd/point", anchor, b, &e)),
    }
    out
}

fn breve_checks<F: Scalar>(th: &Tetrad<F>, tol: f64) -> Vec<Check> {
    let b = F::BACKEND;
    let t = tol_for::<F>(tol);
    let det = th.matrix().det();
    let vol = theta_breve(th, &FiberForm::from_tetrad(th));
    let want = det.scale_i64(4);
    let vol_check = match vol {
        Ok(v) => Check::new("ecmd/theta-breve-volume", v.value.approx_eq(&want, t), "contraction of the tetrad is 4 det", b)
            .values(show(&v.value), show(&want))
            .tol(t),
        Err(e) => broken("ecmd/theta-breve-volume", "contraction of the tetrad is 4 det", b, &e),
    };
    let kernel = match th.inverse() {
        Ok(inv) => mat_check("ecmd/theta-breve-kernel", "density kernel is det times inverse tetrad", &theta_breve_kernel(th), &inv.scale(&det), tol),
        Err(e) => broken("ecmd/theta-breve-kernel", "density kernel is det times inverse tetrad", b, &e),
    };
    vec![vol_check, kernel]
}
