use num_complex::Complex64;
use rand::Rng;

use super::{broken, count_check, mat_check, on_backend, sci, show, tol_for, Ctx};
use crate::cli::report::Check;
use crate::cxmulti::{signature, HermitianForm};
use crate::error::Error;
use crate::numeric::{jacobi_eigenvalues, realify_hermitian, Backend, Mat, Scalar, Signature};
use crate::tetrad::{mass_shell_projectors, pullback_metric, slash, MassShellPoint};
use crate::twospinor::{
    charge_conjugation, gammas, k_form, k_hermitian_form, minkowski, observer_metric, pauli_basis, spinor_metric,
    DiracSpinor, SpinorBasis, TwoSpinorFrame, CHARGE_CONJUGATION_SQUARE,
};

const BASES: [(SpinorBasis, &str); 3] =
    [(SpinorBasis::Natural, "natural"), (SpinorBasis::Weyl, "weyl"), (SpinorBasis::Dirac, "dirac")];

fn lit<F: Scalar>(rows: [[(i64, i64); 2]; 2]) -> Mat<F> {
    Mat::from_rows(
        rows.iter().map(|r| r.iter().map(|&(re, im)| F::from_i64(re) + F::i() * F::from_i64(im)).collect()).collect(),
    )
}

/// Textbook `γ^μ`: Dirac (Bjorken–Drell) or chiral; `γ_μ = η_μμ γ^μ`.
pub(crate) fn reference_upper<F: Scalar>(basis: SpinorBasis) -> [Mat<F>; 4] {
    let zero = Mat::<F>::zeros(2, 2);
    let id = Mat::<F>::identity(2);
    let sigma = [
        lit::<F>([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        lit::<F>([[(0, 0), (0, -1)], [(0, 1), (0, 0)]]),
        lit::<F>([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
    ];
    let g0 = match basis {
        SpinorBasis::Dirac => Mat::block2(&id, &zero, &zero, &-&id),
        _ => Mat::block2(&zero, &-&id, &-&id, &zero),
    };
    let mut out = [g0.clone(), g0.clone(), g0.clone(), g0];
    for k in 0..3 {
        out[k + 1] = Mat::block2(&zero, &sigma[k], &-&sigma[k], &zero);
    }
    out
}

fn test_spinor<F: Scalar>(ctx: &Ctx) -> DiracSpinor<F> {
    let fallback = || DiracSpinor::new([F::one(), F::i()], [F::from_i64(2), -F::one()]);
    match ctx.sc.ecmd_point::<F>() {
        Ok(Some(p)) if p.psi.value != DiracSpinor::zero() => p.psi.value,
        _ => fallback(),
    }
}

pub fn clifford(ctx: &Ctx) -> Vec<Check> {
    on_backend!(clifford_on, ctx)
}

fn clifford_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let frame = TwoSpinorFrame::<F>::standard();
    let eta = minkowski::<F>();
    let tau = pauli_basis::<F>();
    let mut out = Vec::new();

    let g = Mat::from_fn(4, 4, |l, m| spinor_metric(&tau[l], &tau[m], &frame));
    out.push(mat_check("spinor/pauli-orthonormal", "Pauli frame is Lorentz-orthonormal", &g, &eta, ctx.tol));

    for (basis, name) in BASES {
        let gs = gammas(basis, &frame);
        let mut got = Mat::zeros(16, 16);
        let mut want = Mat::zeros(16, 16);
        for l in 0..4 {
            for m in 0..4 {
                let ac = gs[l].anticommutator(&gs[m]);
                for i in 0..4 {
                    for j in 0..4 {
                        got[(4 * l + i, 4 * m + j)] = ac[(i, j)].clone();
                    }
                    want[(4 * l + i, 4 * m + i)] = eta[(l, m)].scale_i64(2);
                }
            }
        }
        out.push(mat_check(&format!("spinor/clifford-{name}"), "Dirac map is a Clifford map", &got, &want, ctx.tol));
    }

    for (basis, name) in [(SpinorBasis::Weyl, "weyl"), (SpinorBasis::Dirac, "dirac")] {
        let gs = gammas(basis, &frame);
        let up = reference_upper::<F>(basis);
        let got = Mat::from_fn(4, 16, |i, c| gs[c / 4][(i, c % 4)].clone());
        let want = Mat::from_fn(4, 16, |i, c| up[c / 4][(i, c % 4)].clone() * eta[(c / 4, c / 4)].clone());
        out.push(mat_check(
            &format!("spinor/gamma-table-{name}"),
            "gamma matrices match the standard representation",
            &got,
            &want,
            ctx.tol,
        ));
    }

    let base = gammas(SpinorBasis::Natural, &frame);
    let worst = [F::i(), -F::one(), -F::i()]
        .into_iter()
        .map(|ph| {
            let f = TwoSpinorFrame::new(ph, "phase").expect("unit phase");
            let gs = gammas(SpinorBasis::Natural, &f);
            let got = Mat::from_fn(4, 16, |i, c| gs[c / 4][(i, c % 4)].clone());
            let want = Mat::from_fn(4, 16, |i, c| base[c / 4][(i, c % 4)].clone());
            mat_check("spinor/phase-invariance", "Dirac map is independent of the phase of epsilon", &got, &want, ctx.tol)
        })
        .find(|c| !c.passed());
    out.push(worst.unwrap_or_else(|| {
        Check::new("spinor/phase-invariance", true, "Dirac map is independent of the phase of epsilon", F::BACKEND)
            .values("max residual 0.000e0 over phases i, -1, -i", "0")
            .tol(tol_for::<F>(ctx.tol))
    }));

    let psi = test_spinor::<F>(ctx);
    let cc = charge_conjugation(&charge_conjugation(&psi, &frame), &frame);
    let want = psi.scale(&F::from_i64(CHARGE_CONJUGATION_SQUARE));
    let nat = |s: &DiracSpinor<F>| Mat::from_rows(vec![s.natural().to_vec()]);
    out.push(mat_check("spinor/charge-conjugation-square", "charge conjugation squares to -1", &nat(&cc), &nat(&want), ctx.tol));

    let k = k_form(&psi, &psi);
    out.push(
        Check::new("spinor/k-real", k.is_real(tol_for::<F>(ctx.tol)), "Dirac adjunction is Hermitian", F::BACKEND)
            .values(show(&k), "real")
            .tol(tol_for::<F>(ctx.tol)),
    );
    out
}

pub fn signatures(ctx: &Ctx) -> Vec<Check> {
    on_backend!(signatures_on, ctx)
}

fn sig_check(id: &str, anchor: &str, backend: Backend, got: Signature, want: Signature) -> Check {
    Check::new(id, got == want, anchor, backend).values(got, want)
}

fn signatures_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let b = F::BACKEND;
    let mut out = Vec::new();
    for (basis, name) in BASES {
        out.push(sig_check(
            &format!("signatures/k-{name}"),
            "k has signature (++--)",
            b,
            signature(&k_hermitian_form::<F>(basis)),
            Signature::new(2, 2, 0),
        ));
    }
    let eta = HermitianForm::new(minkowski::<F>()).expect("real symmetric");
    out.push(sig_check("signatures/lorentz", "Lorentz metric", b, signature(&eta), Signature::new(1, 3, 0)));
    let tau = pauli_basis::<F>();
    match observer_metric(&tau[0], &TwoSpinorFrame::standard()) {
        Ok(h) => out.push(sig_check(
            "signatures/observer",
            "observer metric on U is positive",
            b,
            signature(&h),
            Signature::new(2, 0, 0),
        )),
        Err(e) => out.push(broken("signatures/observer", "observer metric on U is positive", b, &e)),
    }
    let anchor = "tetrad pullback of the Lorentz metric";
    match ctx.sc.tetrad::<F>() {
        Ok(t) => {
            let g = pullback_metric(&t).value;
            match HermitianForm::new(g) {
                Ok(h) => {
                    let got = signature(&h);
                    let c = if t.is_invertible() {
                        sig_check("signatures/pullback", anchor, b, got, Signature::new(1, 3, 0))
                    } else {
                        Check::new("signatures/pullback", got.zero >= 1, anchor, b).values(got, "degenerate")
                    };
                    out.push(c);
                }
                Err(e) => out.push(broken("signatures/pullback", anchor, b, &e)),
            }
        }
        Err(e) => out.push(broken("signatures/pullback", anchor, b, &e)),
    }
    out
}

fn numeric_rank(m: &Mat<Complex64>) -> usize {
    let gram = &m.adjoint() * m;
    jacobi_eigenvalues(&realify_hermitian(&gram)).iter().filter(|v| **v > 1e-8).count() / 2
}

fn projector_defect(pp: &Mat<Complex64>, pm: &Mat<Complex64>, tol: f64) -> bool {
    let id = Mat::<Complex64>::identity(4);
    !((pp * pp).approx_eq(pp, tol)
        && (pm * pm).approx_eq(pm, tol)
        && (pp * pm).approx_eq(&Mat::zeros(4, 4), tol)
        && (pp + pm).approx_eq(&id, tol)
        && numeric_rank(pp) == 2
        && numeric_rank(pm) == 2)
}

fn random_shell(rng: &mut impl Rng) -> MassShellPoint<Complex64> {
    let m = rng.gen_range(0.1..5.0);
    MassShellPoint::<Complex64>::on_shell(m, [0; 3].map(|_| rng.gen_range(-3.0..3.0)))
}

pub fn mass_shell(ctx: &Ctx) -> Vec<Check> {
    let mut out = on_backend!(mass_shell_on, ctx);
    let fl = Backend::Float;
    let tol = 1e-10;
    let mut rng = ctx.rng(41);
    let n = ctx.samples().max(100);
    let mut bad = 0;
    for i in 0..n {
        let pt = random_shell(&mut rng);
        let (pp, pm) = mass_shell_projectors(&pt, BASES[i % 3].0).expect("massive");
        bad += usize::from(projector_defect(&pp, &pm, tol));
    }
    out.push(count_check("mass/projector-algebra", "P+ and P- are complementary rank-2 projectors", fl, bad, n, tol));

    let mut bad = 0;
    let samples = ctx.samples();
    for _ in 0..samples {
        let pt = random_shell(&mut rng);
        let g = gammas::<Complex64>(SpinorBasis::Dirac, &TwoSpinorFrame::standard());
        let k = &g[0] * &g[1];
        let eta: f64 = rng.gen_range(-2.0..2.0);
        let c = |x: f64| Complex64::new(x, 0.0);
        let s = &Mat::identity(4).scale(&c((eta / 2.0).cosh())) + &k.scale(&c((eta / 2.0).sinh()));
        let sinv = s.inverse().expect("boost is invertible");
        let up = pt.raised();
        let (ch, sh) = (eta.cosh(), eta.sinh());
        let lowered = [up[0] * ch - up[1] * sh, -(up[1] * ch - up[0] * sh), -up[2], -up[3]];
        let ok = MassShellPoint::new(lowered, pt.m, 1e-8).and_then(|q| {
            let (pp, _) = mass_shell_projectors(&pt, SpinorBasis::Dirac)?;
            let (bp, _) = mass_shell_projectors(&q, SpinorBasis::Dirac)?;
            Ok((&(&s * &pp) * &sinv).approx_eq(&bp, 1e-8))
        });
        bad += usize::from(!matches!(ok, Ok(true)));
    }
    out.push(count_check("mass/boost-covariance", "projectors transform covariantly under boosts", fl, bad, samples, 1e-8));
    out
}

fn mass_shell_on<F: Scalar>(ctx: &Ctx) -> Vec<Check> {
    let b = F::BACKEND;
    let mut out = Vec::new();
    let m = F::from_i64(2);
    let z = F::zero;
    let rest = MassShellPoint::new([m.clone(), z(), z(), z()], m, 0.0).and_then(|p| mass_shell_projectors(&p, SpinorBasis::Dirac));
    match rest {
        Ok((pp, _)) => {
            let want = Mat::diag(&[F::one(), F::one(), z(), z()]);
            out.push(mat_check("mass/rest-frame", "rest-frame P+ is diag(1,1,0,0) in the Dirac basis", &pp, &want, ctx.tol));
        }
        Err(e) => out.push(broken("mass/rest-frame", "rest-frame P+ is diag(1,1,0,0) in the Dirac basis", b, &e)),
    }

    let light = MassShellPoint { p: [F::one(), F::one(), z(), z()], m: z() };
    let rejected = mass_shell_projectors(&light, SpinorBasis::Dirac);
    out.push(
        Check::new("mass/massless-rejected", rejected == Err(Error::MasslessShell), "projectors need m > 0", b)
            .values(if rejected.is_err() { "rejected" } else { "accepted" }, "rejected"),
    );

    if let Some(ms) = &ctx.sc.mass_shell {
        let anchor = "scenario momentum: projector identities and slash squared";
        let t = tol_for::<F>(ctx.tol);
        let parsed = (|| -> crate::Result<MassShellPoint<F>> {
            let p = [ms.p[0].rational()?, ms.p[1].rational()?, ms.p[2].rational()?, ms.p[3].rational()?];
            MassShellPoint::new(p.map(|q| F::from_rational(&q)), F::from_rational(&ms.m.rational()?), t)
        })();
        match parsed.and_then(|pt| mass_shell_projectors(&pt, SpinorBasis::Dirac).map(|pr| (pt, pr))) {
            Ok((pt, (pp, pm))) => {
                let id = Mat::<F>::identity(4);
                let g = slash(&pt.raised(), SpinorBasis::Dirac);
                let ok = (&pp * &pp).approx_eq(&pp, t)
                    && (&pp * &pm).approx_eq(&Mat::zeros(4, 4), t)
                    && (&pp + &pm).approx_eq(&id, t)
                    && (&g * &g).approx_eq(&id.scale(&(pt.m.clone() * pt.m.clone())), t)
                    && pp.trace().approx_eq(&F::from_i64(2), t);
                let resid = super::resid(&(&pp * &pp), &pp).max(super::resid(&(&g * &g), &id.scale(&(pt.m.clone() * pt.m))));
                out.push(Check::new("mass/scenario-point", ok, anchor, b).values(format!("max residual {}", sci(resid)), "0").tol(t));
            }
            Err(e) => out.push(broken("mass/scenario-point", anchor, b, &e)),
        }
    }
    out
}
