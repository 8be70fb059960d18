//! Electroweak geometry over one point: isospin frames, the `ι` frame of
//! `Ī⊗I`, the Higgs potential and polar form, the neutral/charged split of
//! the gauge field, induced connections and the pointwise Lagrangian.
//!
//! Elements of `Ī⊗I` are 2x2 matrices `w[i][j]` with the row on the
//! conjugate factor. With this reading `ι_λ` is `σ_λ` in an orthonormal
//! frame and `ξ̄_1⊗ξ_2 = ½(ι_1 + iι_2)`.

pub mod audit;

use num_complex::Complex64;
use serde::Serialize;

use crate::cxmulti::HermitianForm;
use crate::error::{Error, Result};
use crate::fnforms::{gauge_transform, Connection, PolyMat};
use crate::numeric::{Mat, Scalar};
use crate::scales::{ScaleDim, ScaledQuantity};
use crate::tetrad::{pullback_metric, theta_breve_kernel, FieldJet, Tetrad};
use crate::twospinor::{minkowski, pauli_matrices, TwoSpinorFrame};
use audit::{ew_term_descriptors, term_dim, FieldScales};

/// An `h`-orthonormal frame `(ξ_1, ξ_2)` of the isospin space, stored as
/// the columns of `xi`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsospinFrame<F> {
    xi: Mat<F>,
    h: HermitianForm<F>,
}

impl<F: Scalar> IsospinFrame<F> {
    pub fn new(xi: Mat<F>, h: HermitianForm<F>, tol: f64) -> Result<Self> {
        if xi.rows() != 2 || xi.cols() != 2 || h.dim() != 2 {
            return Err(Error::ShapeMismatch("isospin frames are 2x2".into()));
        }
        let gram = &(&xi.adjoint() * h.matrix()) * &xi;
        if !gram.approx_eq(&Mat::identity(2), tol) {
            return Err(Error::SignatureError("frame is not h-orthonormal".into()));
        }
        Ok(IsospinFrame { xi, h })
    }

    pub fn standard() -> Self {
        IsospinFrame { xi: Mat::identity(2), h: HermitianForm::identity(2) }
    }

    pub fn xi(&self) -> &Mat<F> {
        &self.xi
    }

    pub fn h(&self) -> &HermitianForm<F> {
        &self.h
    }

    /// `ĥ(ω, ω)` for `ω = ξ¹∧ξ²`; equals one for an orthonormal frame.
    pub fn omega_norm2(&self) -> F {
        let d = self.xi.det();
        let dinv = d.inv().expect("frame is invertible");
        dinv.clone() * dinv.conj() * self.h.matrix().det().inv().expect("h is positive")
    }

    /// Reference-basis matrix of `Σ m[α̇][α] ξ̄_α̇⊗ξ_α`.
    pub fn from_frame(&self, m: &Mat<F>) -> Mat<F> {
        &(&self.xi.conj() * m) * &self.xi.transpose()
    }

    /// Inverse of [`Self::from_frame`].
    pub fn to_frame(&self, w: &Mat<F>) -> Mat<F> {
        let a = self.xi.conj().inverse().expect("frame is invertible");
        let b = self.xi.transpose().inverse().expect("frame is invertible");
        &(&a * w) * &b
    }
}

/// `ι_λ = σ_λ^{α̇α} ξ̄_α̇⊗ξ_α`, in the reference basis.
pub fn iota_frame<F: Scalar>(frame: &IsospinFrame<F>) -> [Mat<F>; 4] {
    pauli_matrices().map(|s| frame.from_frame(&s))
}

/// Metric on `Ī⊗I` induced by the isospin `ε`-forms: the polarized
/// `2·det`, normalized by `h` so that `⟨ι_λ, ι_μ⟩ = 2η_λμ`.
pub fn iota_metric<F: Scalar>(a: &Mat<F>, b: &Mat<F>, frame: &IsospinFrame<F>) -> F {
    let pol = (a + b).det() - a.det() - b.det();
    pol * frame.h.matrix().det()
}

/// `h̃ = h̄⊗h` on `Ī⊗I`: `tr(a† hᵀ b hᵀ)`.
pub fn h_tilde<F: Scalar>(a: &Mat<F>, b: &Mat<F>, frame: &IsospinFrame<F>) -> F {
    let ht = frame.h.matrix().transpose();
    (&(&(&a.adjoint() * &ht) * b) * &ht).trace()
}

/// `ι′ = -½[sin²θ_W ι_0 + cos²θ_W ι_3]`, in the frame.
pub fn iota_prime(theta_w: f64) -> Result<Mat<Complex64>> {
    check_angle(theta_w)?;
    let s = pauli_matrices::<Complex64>();
    let (sn, cs) = (theta_w.sin().powi(2), theta_w.cos().powi(2));
    Ok((&s[0].scale(&c(sn)) + &s[3].scale(&c(cs))).scale(&c(-0.5)))
}

/// The other displayed form, `-½ξ̄_1⊗ξ_1 + ½cos(2θ_W) ξ̄_2⊗ξ_2`.
pub fn iota_prime_diagonal(theta_w: f64) -> Result<Mat<Complex64>> {
    check_angle(theta_w)?;
    Ok(Mat::diag(&[c(-0.5), c(0.5 * (2.0 * theta_w).cos())]))
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_angle(theta_w: f64) -> Result<()> {
    if theta_w > 0.0 && theta_w < std::f64::consts::FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::BadAngle(theta_w))
    }
}

/// Matrix units `ξ̄_α⊗ξ_β` in terms of the `ι` frame, as computed.
/// Returns `(ξ̄_1⊗ξ_1, ξ̄_2⊗ξ_2)` coefficient vectors on `(ι_0..ι_3)`.
pub fn diagonal_units_in_iota<F: Scalar>() -> [[F; 4]; 2] {
    let half = F::from_i64(2).inv().expect("nonzero");
    let z = F::zero;
    [[half.clone(), z(), z(), half.clone()], [half.clone(), z(), z(), -half]]
}

/// Outcome of comparing the computed diagonal units against a reading
/// with `ι_1` in place of `ι_0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectorIdentityReport {
    pub computed_holds: bool,
    pub alternative_holds: bool,
}

pub fn projector_identity_report() -> ProjectorIdentityReport {
    let s = pauli_matrices::<crate::numeric::Exact>();
    let frame = IsospinFrame::standard();
    let e11 = Mat::diag(&[Scalar::one(), Scalar::zero()]);
    let e22 = Mat::diag(&[Scalar::zero(), Scalar::one()]);
    let half = crate::numeric::Exact::from_i64(2).inv().unwrap();
    let holds = |k: usize| {
        let p = (&s[k] + &s[3]).scale(&half);
        let m = (&s[k] - &s[3]).scale(&half);
        frame.from_frame(&e11) == p && frame.from_frame(&e22) == m
    };
    ProjectorIdentityReport { computed_holds: holds(0), alternative_holds: holds(1) }
}

/// A Higgs value `φ^α` in an orthonormal frame, with `μ` and `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct HiggsValue<F> {
    pub phi: [F; 2],
    pub mu: F,
    pub lambda: F,
}

impl<F: Scalar> HiggsValue<F> {
    pub const DIM: i64 = -1;

    pub fn new(phi: [F; 2], mu: F, lambda: F) -> Result<Self> {
        for (v, what) in [(&mu, "mu"), (&lambda, "lambda")] {
            if !v.is_real(1e-12) || v.real_sign(0.0) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::ShapeMismatch(format!("{what} must be positive real")));
            }
        }
        Ok(HiggsValue { phi, mu, lambda })
    }

    /// `‖φ‖² = ⟨φ̄, φ⟩`, scaled by `L⁻²`.
    pub fn norm2(&self) -> ScaledQuantity<F> {
        let v = self.phi[0].abs2() + self.phi[1].abs2();
        ScaledQuantity { value: v, dim: ScaleDim::length_int(-2) }
    }
}

/// `V(s) = λ(2μ²s - s²)` at `s = ‖φ‖²`.
fn potential_at<F: Scalar>(lambda: &F, mu: &F, s: &F) -> F {
    let mu2 = mu.clone() * mu.clone();
    lambda.clone() * (mu2.scale_i64(2) * s.clone() - s.clone() * s.clone())
}

/// `V[φ]`, scaled by `L⁻⁴`.
pub fn higgs_potential<F: Scalar>(hv: &HiggsValue<F>) -> ScaledQuantity<F> {
    ScaledQuantity { value: potential_at(&hv.lambda, &hv.mu, &hv.norm2().value), dim: ScaleDim::length_int(-4) }
}

/// `dV/ds` at `s`.
pub fn potential_slope<F: Scalar>(hv: &HiggsValue<F>, s: &F) -> F {
    hv.lambda.clone() * (hv.mu.clone() * hv.mu.clone() - s.clone()).scale_i64(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StationaryKind {
    Minimum,
    Maximum,
}

/// The critical point of `V` as a function of `s = ‖φ‖²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Stationary<F> {
    pub s_star: ScaledQuantity<F>,
    pub value: ScaledQuantity<F>,
    pub slope: F,
    pub kind: StationaryKind,
}

/// `s* = μ²`, `V(s*) = λμ⁴`. Since `d²V/ds² = -2λ < 0` it is a maximum in `s`.
pub fn potential_stationary<F: Scalar>(hv: &HiggsValue<F>) -> Stationary<F> {
    let s = hv.mu.clone() * hv.mu.clone();
    let curvature = -hv.lambda.scale_i64(2);
    let kind = match curvature.real_sign(0.0) {
        Some(std::cmp::Ordering::Greater) => StationaryKind::Minimum,
        _ => StationaryKind::Maximum,
    };
    Stationary {
        value: ScaledQuantity { value: potential_at(&hv.lambda, &hv.mu, &s), dim: ScaleDim::length_int(-4) },
        slope: potential_slope(hv, &s),
        s_star: ScaledQuantity { value: s, dim: ScaleDim::length_int(-2) },
        kind,
    }
}

/// `φ = S_φ(‖φ‖ ξ_2)` with `S_φ ∈ SU(2)`, and `f = ‖φ‖ - μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct HiggsPolar<F> {
    pub f: ScaledQuantity<F>,
    pub s: Mat<F>,
}

/// Closed form `S = (1/‖φ‖)[[φ̄², φ¹], [-φ̄¹, φ²]]`.
pub fn higgs_polar<F: Scalar>(hv: &HiggsValue<F>) -> Result<HiggsPolar<F>> {
    let n2 = hv.norm2().value;
    if n2.near_zero(0.0) {
        return Err(Error::ZeroHiggs);
    }
    let n = n2.sqrt_real().ok_or_else(|| Error::NotExact("‖φ‖ is irrational".into()))?;
    let ninv = n.inv().ok_or(Error::ZeroHiggs)?;
    let [p1, p2] = hv.phi.clone();
    let s = Mat::from_rows(vec![vec![p2.conj(), p1], vec![-hv.phi[0].conj(), p2]]).scale(&ninv);
    Ok(HiggsPolar { f: ScaledQuantity { value: n - hv.mu.clone(), dim: ScaleDim::length_int(-1) }, s })
}

/// `X′_a = S X_a S⁻¹ + (∂_a S) S⁻¹`; the curvature of `X′` is `S R[X] S⁻¹`.
pub fn rotate_connection(x: &[PolyMat], s: &PolyMat) -> Result<Vec<PolyMat>> {
    let k = s.rows();
    let gamma = Connection::linear(x.len(), k, x.to_vec())?;
    let rotated = gauge_transform(&gamma, s)?;
    Ok(rotated.tables().expect("linear stays linear").to_vec())
}

/// Neutral and charged gauge fields with the Weinberg angle.
/// `W⁻ = W̄⁺` is never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct EWGaugeFields {
    pub a: [f64; 4],
    pub z: [f64; 4],
    pub wp: [Complex64; 4],
    pub theta_w: f64,
}

impl EWGaugeFields {
    pub fn new(a: [f64; 4], z: [f64; 4], wp: [Complex64; 4], theta_w: f64) -> Result<Self> {
        check_angle(theta_w)?;
        Ok(EWGaugeFields { a, z, wp, theta_w })
    }

    pub fn wm(&self) -> [Complex64; 4] {
        self.wp.map(|w| w.conj())
    }
}

/// The gauge field `W = W^μ_λ ι_μ⊗τ^λ` as its four `Ī⊗I` slices `w_λ`
/// (reference basis), one per `τ^λ`.
pub type GaugeW<F> = [Mat<F>; 4];

/// `A ξ̄_2⊗ξ_2 + Z ι′ + W⁺ ξ̄_1⊗ξ_2 + W⁻ ξ̄_2⊗ξ_1`, slice by slice.
pub fn assemble_w(fields: &EWGaugeFields, frame: &IsospinFrame<Complex64>) -> Result<GaugeW<Complex64>> {
    let ip = iota_prime(fields.theta_w)?;
    let wm = fields.wm();
    Ok(std::array::from_fn(|l| {
        let mut m = ip.scale(&c(fields.z[l]));
        m[(1, 1)] += fields.a[l];
        m[(0, 1)] += fields.wp[l];
        m[(1, 0)] += wm[l];
        frame.from_frame(&m)
    }))
}

/// `W^μ_λ = ½ η^{μν} ⟨ι_ν, w_λ⟩`, indexed `[λ][μ]`.
pub fn w_components<F: Scalar>(w: &GaugeW<F>, frame: &IsospinFrame<F>) -> [[F; 4]; 4] {
    let iota = iota_frame(frame);
    let eta = minkowski::<F>();
    let half = F::from_i64(2).inv().expect("nonzero");
    std::array::from_fn(|l| {
        std::array::from_fn(|mu| eta[(mu, mu)].clone() * half.clone() * iota_metric(&iota[mu], &w[l], frame))
    })
}

/// Inverse of [`assemble_w`]. Fails with `ShapeMismatch` if `W` has parts
/// outside the span of `A`, `Z`, `W±` (for instance a non-real `A`).
pub fn extract_fields(w: &GaugeW<Complex64>, theta_w: f64, frame: &IsospinFrame<Complex64>) -> Result<EWGaugeFields> {
    check_angle(theta_w)?;
    let comps = w_components(w, frame);
    let s = pauli_matrices::<Complex64>();
    let cos2 = (2.0 * theta_w).cos();
    let mut out = EWGaugeFields { a: [0.0; 4], z: [0.0; 4], wp: [c(0.0); 4], theta_w };
    for l in 0..4 {
        let mut m = Mat::zeros(2, 2);
        for (mu, sm) in s.iter().enumerate() {
            m = &m + &sm.scale(&comps[l][mu]);
        }
        let z = m[(0, 0)] * -2.0;
        let a = m[(1, 1)] - z * 0.5 * cos2;
        let scale = m.max_abs().max(1.0);
        if z.im.abs() > 1e-12 * scale || a.im.abs() > 1e-12 * scale || (m[(1, 0)] - m[(0, 1)].conj()).norm() > 1e-12 * scale {
            return Err(Error::ShapeMismatch("W is not an A/Z/W± combination".into()));
        }
        out.a[l] = a.re;
        out.z[l] = z.re;
        out.wp[l] = m[(0, 1)];
    }
    Ok(out)
}

/// Coefficients of a slice on `ξ̄_1⊗ξ_1, ξ̄_2⊗ξ_2, ξ̄_1⊗ξ_2, ξ̄_2⊗ξ_1`.
pub fn sector_components<F: Scalar>(w: &Mat<F>, frame: &IsospinFrame<F>) -> [F; 4] {
    let m = frame.to_frame(w);
    [m[(0, 0)].clone(), m[(1, 1)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone()]
}

/// `Ŵ_λ`: contraction of each slice with `h`, which is `2W⁰_λ`.
pub fn hat_w<F: Scalar>(w: &GaugeW<F>, frame: &IsospinFrame<F>) -> [F; 4] {
    let h = frame.h.matrix();
    std::array::from_fn(|l| {
        let mut acc = F::zero();
        for i in 0..2 {
            for j in 0..2 {
                acc = acc + h[(i, j)].clone() * w[l][(i, j)].clone();
            }
        }
        acc
    })
}

/// `X_λ = iq W^μ_λ σ_μ` (frame components) and `X̂_λ = 2iq W⁰_λ`.
pub fn induced_connection<F: Scalar>(w: &GaugeW<F>, q: &F, frame: &IsospinFrame<F>) -> ([Mat<F>; 4], [F; 4]) {
    let comps = w_components(w, frame);
    let s = pauli_matrices::<F>();
    let iq = F::i() * q.clone();
    let x = std::array::from_fn(|l| {
        let mut m = Mat::zeros(2, 2);
        for (mu, sm) in s.iter().enumerate() {
            m = &m + &sm.scale(&comps[l][mu]);
        }
        m.scale(&iq)
    });
    let hat = std::array::from_fn(|l| iq.clone() * comps[l][0].scale_i64(2));
    (x, hat)
}

/// Fermion value `ψ = ψ^A ω⁻¹⊗ζ_A + ψ^α_Ȧ ξ_α⊗ζ̄^Ȧ`.
///
/// The right-handed part carries one power of `Λ²I` (through `ω⁻¹`), which
/// is what makes `Λ²U*` match `Λ²I⊗Λ²I`.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionValue<F> {
    /// `ψ^A`.
    pub psi_r: [F; 2],
    /// `ψ^α_Ȧ`, row `α`.
    pub psi_l: [[F; 2]; 2],
}

/// `Λ²I` powers of the right- and left-handed components.
pub const LAMBDA2I_POWER_R: i32 = 1;
pub const LAMBDA2I_POWER_L: i32 = 0;

impl<F: Scalar> FermionValue<F> {
    pub const DIM: (i64, i64) = (-3, 2);

    pub fn zero() -> Self {
        FermionValue { psi_r: [F::zero(), F::zero()], psi_l: [[F::zero(), F::zero()], [F::zero(), F::zero()]] }
    }

    /// Components in the frame `ξ′_α = S ξ_α`: `ψ′_L = S⁻¹ψ_L` and
    /// `ψ′^A = det(S)^{-p} ψ^A` with `p` the `Λ²I` power.
    pub fn in_rotated_frame(&self, s: &Mat<F>) -> Result<Self> {
        let sinv = s.inverse().ok_or(Error::SingularTetrad)?;
        let dinv = s.det().inv().ok_or(Error::SingularTetrad)?;
        let mut w = F::one();
        for _ in 0..LAMBDA2I_POWER_R {
            w = w * dinv.clone();
        }
        let mut out = self.clone();
        out.psi_r = self.psi_r.clone().map(|v| v * w.clone());
        for a in 0..2 {
            let col = sinv.mul_vec(&[self.psi_l[0][a].clone(), self.psi_l[1][a].clone()]);
            out.psi_l[0][a] = col[0].clone();
            out.psi_l[1][a] = col[1].clone();
        }
        Ok(out)
    }
}

/// Inputs of the electroweak Lagrangian at one point, in an orthonormal
/// isospin frame.
#[derive(Debug, Clone, PartialEq)]
pub struct EwPoint<F> {
    pub theta: Tetrad<F>,
    pub psi: FieldJet<FermionValue<F>>,
    pub phi: FieldJet<[F; 2]>,
    /// `X_a` and `∂_b X_a` (`x.d[b][a]`), `∇ = ∂ - X`.
    pub x: FieldJet<[Mat<F>; 4]>,
    pub m: F,
    pub lambda: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EwTerms<F> {
    pub l_psi: ScaledQuantity<F>,
    pub l_phi: ScaledQuantity<F>,
    pub l_x: ScaledQuantity<F>,
    pub l_int: ScaledQuantity<F>,
}

/// `R_ab = -∂_a X_b + ∂_b X_a + [X_a, X_b]`.
pub fn isospin_curvature<F: Scalar>(x: &FieldJet<[Mat<F>; 4]>) -> [[Mat<F>; 4]; 4] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| &(&x.d[b][a] - &x.d[a][b]) + &x.value[a].commutator(&x.value[b]))
    })
}

fn trace_of_x<F: Scalar>(x: &Mat<F>) -> F {
    x.trace()
}

/// Evaluates `ℓ_ψ, ℓ_φ, ℓ_X, ℓ_int` (coefficients of `d⁴x`).
pub fn ew_lagrangian_point<F: Scalar>(pt: &EwPoint<F>, scales: &FieldScales) -> Result<EwTerms<F>> {
    let theta = &pt.theta;
    let theta_inv = theta.inverse()?;
    let det = theta.matrix().det();
    let g_up = {
        let eta = minkowski::<F>();
        &(&theta_inv * &eta) * &theta_inv.transpose()
    };
    debug_assert!(pullback_metric(theta).value.inverse().is_some());
    let descs = ew_term_descriptors(scales);
    let dim = |n: &str| term_dim(&descs, n);
    let xv = &pt.x.value;

    // Covariant derivatives.
    let psi = &pt.psi.value;
    let nabla_psi: [FermionValue<F>; 4] = std::array::from_fn(|a| {
        let d = &pt.psi.d[a];
        let xh = trace_of_x(&xv[a]);
        let mut out = d.clone();
        for k in 0..2 {
            out.psi_r[k] = d.psi_r[k].clone() - xh.clone() * psi.psi_r[k].clone();
            for al in 0..2 {
                let mut acc = d.psi_l[al][k].clone();
                for be in 0..2 {
                    acc = acc - xv[a][(al, be)].clone() * psi.psi_l[be][k].clone();
                }
                out.psi_l[al][k] = acc;
            }
        }
        out
    });
    let phi = &pt.phi.value;
    let nabla_phi: [[F; 2]; 4] = std::array::from_fn(|a| {
        let xh = trace_of_x(&xv[a]).conj();
        std::array::from_fn(|al| {
            let mut acc = pt.phi.d[a][al].clone() - xh.clone() * phi[al].clone();
            for be in 0..2 {
                acc = acc - xv[a][(al, be)].clone() * phi[be].clone();
            }
            acc
        })
    });

    // ℓ_ψ.
    let kern = theta_breve_kernel(theta);
    let sig = pauli_matrices::<F>();
    let inv_r2 = F::sqrt2().inv().expect("nonzero");
    let eps = TwoSpinorFrame::<F>::standard().eps_upper();
    let mut kin = F::zero();
    for a in 0..4 {
        let np = &nabla_psi[a];
        for ua in 0..2 {
            for da in 0..2 {
                // Θ̆^a_{AȦ} = Θ̆^a_λ σ_λ[Ȧ][A] / √2
                let mut tb = F::zero();
                for (l, s) in sig.iter().enumerate() {
                    tb = tb + kern[(a, l)].clone() * s[(da, ua)].clone();
                }
                let tb = tb * inv_r2.clone();
                let mut inner = np.psi_r[ua].clone() * psi.psi_r[da].conj() - psi.psi_r[ua].clone() * np.psi_r[da].conj();
                for ub in 0..2 {
                    for db in 0..2 {
                        let e = eps[(ua, ub)].clone() * eps[(da, db)].conj();
                        if e.is_zero() {
                            continue;
                        }
                        let mut l = F::zero();
                        for al in 0..2 {
                            l = l + psi.psi_l[al][ub].conj() * np.psi_l[al][db].clone()
                                - np.psi_l[al][ub].conj() * psi.psi_l[al][db].clone();
                        }
                        inner = inner + e * l;
                    }
                }
                kin = kin + tb * inner;
            }
        }
    }
    let l_psi = F::i() * inv_r2 * kin;

    // ℓ_φ.
    let mut grad = F::zero();
    for a in 0..4 {
        for b in 0..4 {
            if g_up[(a, b)].is_zero() {
                continue;
            }
            for al in 0..2 {
                grad = grad + g_up[(a, b)].clone() * nabla_phi[a][al].conj() * nabla_phi[b][al].clone();
            }
        }
    }
    let n2 = phi[0].abs2() + phi[1].abs2();
    let m2 = pt.m.clone() * pt.m.clone();
    let pot = pt.lambda.clone() * (m2.scale_i64(2) * n2.clone() - n2.clone() * n2);
    let l_phi = (grad + pot) * det.clone();

    // ℓ_X.
    let r = isospin_curvature(&pt.x);
    let mut rr = F::zero();
    for a in 0..4 {
        for b in 0..4 {
            for cc in 0..4 {
                if g_up[(a, cc)].is_zero() {
                    continue;
                }
                for dd in 0..4 {
                    if g_up[(b, dd)].is_zero() {
                        continue;
                    }
                    let w = g_up[(a, cc)].clone() * g_up[(b, dd)].clone();
                    rr = rr + w * (&r[a][b].adjoint() * &r[cc][dd]).trace();
                }
            }
        }
    }
    let l_x = -rr * det.clone();

    // ℓ_int.
    let mut t1 = F::zero();
    let mut t2 = F::zero();
    for ua in 0..2 {
        for al in 0..2 {
            t1 = t1 + psi.psi_l[al][ua].conj() * phi[al].clone() * psi.psi_r[ua].clone();
            t2 = t2 + psi.psi_r[ua].conj() * phi[al].conj() * psi.psi_l[al][ua].clone();
        }
    }
    let l_int = -(t1 + t2) * det;

    Ok(EwTerms {
        l_psi: ScaledQuantity { value: l_psi, dim: dim("l_psi") },
        l_phi: ScaledQuantity { value: l_phi, dim: dim("l_phi") },
        l_x: ScaledQuantity { value: l_x, dim: dim("l_X") },
        l_int: ScaledQuantity { value: l_int, dim: dim("l_int") },
    })
}

/// `g^{ac} g^{bd} ∂_a G_b ∂_c G_d det Θ` with `dg[a][b] = ∂_a G_b`.
pub fn dilaton_term<F: Scalar>(theta: &Tetrad<F>, dg: &[[F; 4]; 4]) -> Result<ScaledQuantity<F>> {
    let inv = theta.inverse()?;
    let g_up = &(&inv * &minkowski::<F>()) * &inv.transpose();
    let mut acc = F::zero();
    for a in 0..4 {
        for b in 0..4 {
            for cc in 0..4 {
                for dd in 0..4 {
                    acc = acc
                        + g_up[(a, cc)].clone() * g_up[(b, dd)].clone() * dg[a][b].clone() * dg[cc][dd].clone();
                }
            }
        }
    }
    Ok(ScaledQuantity { value: acc * theta.matrix().det(), dim: audit::dilaton_descriptor().total() })
}

#[cfg(test)]
mod tests;
