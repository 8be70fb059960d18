//! Spacetime side: the tetrad `Θ: TM → L⊗H`, its pullback metric, the
//! density contraction `Θ̆`, mass-shell projectors, the QED interaction
//! contraction and the pointwise ECMD Lagrangian.
//!
//! Fiber components are taken in the Pauli basis `τ_λ` of `H`; spacetime
//! components in a chart `x^1..x^4` (array positions `0..4`).

use crate::cxmulti::{IndexKind, MixedTensor};
use crate::error::{Error, Result};
use crate::ewsector::audit::{ecmd_term_descriptors, FieldScales};
use crate::fnforms::perm_sign;
use crate::numeric::{Mat, Scalar};
use crate::scales::{ScaleDim, ScaledQuantity};
use crate::twospinor::{
    dirac_map, gammas, k_form, k_matrix, minkowski, DiracSpinor, SpinorBasis, TwoSpinorFrame,
};

/// Components `Θ^λ_a` (row `λ`, column `a`), carrying one power of length.
#[derive(Debug, Clone, PartialEq)]
pub struct Tetrad<F> {
    theta: Mat<F>,
}

impl<F: Scalar> Tetrad<F> {
    pub fn new(theta: Mat<F>) -> Result<Self> {
        if theta.rows() != 4 || theta.cols() != 4 {
            return Err(Error::ShapeMismatch("a tetrad is 4x4".into()));
        }
        if !theta.entries().iter().all(|v| v.is_real(1e-12)) {
            return Err(Error::ShapeMismatch("tetrad components are real".into()));
        }
        Ok(Tetrad { theta })
    }

    pub fn identity() -> Self {
        Tetrad { theta: Mat::identity(4) }
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.theta
    }

    pub fn is_invertible(&self) -> bool {
        !self.theta.det().near_zero(1e-12)
    }

    /// `Θ̌^a_λ`, the inverse morphism.
    pub fn inverse(&self) -> Result<Mat<F>> {
        if !self.is_invertible() {
            return Err(Error::SingularTetrad);
        }
        self.theta.inverse().ok_or(Error::SingularTetrad)
    }
}

/// `(Θ*g)_ab = g_λμ Θ^λ_a Θ^μ_b`, scaled by `L²`.
pub fn pullback_metric<F: Scalar>(t: &Tetrad<F>) -> ScaledQuantity<Mat<F>> {
    let m = &(&t.theta.transpose() * &minkowski()) * &t.theta;
    ScaledQuantity { value: m, dim: ScaleDim::length_int(2) }
}

/// `det Θ`, the coefficient of `η = det Θ d⁴x`, scaled by `L⁴`.
pub fn det_theta<F: Scalar>(t: &Tetrad<F>) -> ScaledQuantity<F> {
    ScaledQuantity { value: t.theta.det(), dim: ScaleDim::length_int(4) }
}

/// An `r`-form on spacetime valued in `Λ^r H`, with dense components
/// `ξ^{λ_1..λ_r}_{a_1..a_r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberForm<F> {
    r: usize,
    data: Vec<F>,
}

impl<F: Scalar> FiberForm<F> {
    pub fn zero(r: usize) -> Self {
        FiberForm { r, data: vec![F::zero(); 1 << (4 * r)] }
    }

    pub fn from_fn(r: usize, mut f: impl FnMut(&[usize], &[usize]) -> F) -> Self {
        let mut out = FiberForm::zero(r);
        for flat in 0..out.data.len() {
            let (l, a) = Self::split(r, flat);
            out.data[flat] = f(&l, &a);
        }
        out
    }

    fn split(r: usize, mut flat: usize) -> (Vec<usize>, Vec<usize>) {
        let mut idx = vec![0; 2 * r];
        for slot in idx.iter_mut().rev() {
            *slot = flat % 4;
            flat /= 4;
        }
        let a = idx.split_off(r);
        (idx, a)
    }

    fn flat(lams: &[usize], xs: &[usize]) -> usize {
        lams.iter().chain(xs).fold(0, |acc, &i| acc * 4 + i)
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn get(&self, lams: &[usize], xs: &[usize]) -> &F {
        &self.data[Self::flat(lams, xs)]
    }

    pub fn set(&mut self, lams: &[usize], xs: &[usize], v: F) {
        let i = Self::flat(lams, xs);
        self.data[i] = v;
    }

    pub fn scale(&self, s: &F) -> Self {
        FiberForm { r: self.r, data: self.data.iter().map(|v| v.clone() * s.clone()).collect() }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.r != o.r {
            return Err(Error::ShapeMismatch("fiber forms of different degree".into()));
        }
        Ok(FiberForm { r: self.r, data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    /// `ξ^λ_a = Θ^λ_a`.
    pub fn from_tetrad(t: &Tetrad<F>) -> Self {
        FiberForm::from_fn(1, |l, a| t.theta[(l[0], a[0])].clone())
    }

    /// `ω_ab F^{λμ}` for a spacetime 2-form `ω` and `F ∈ Λ²H`.
    pub fn two_form_tensor(omega: &Mat<F>, f_upper: &Mat<F>) -> Self {
        FiberForm::from_fn(2, |l, a| omega[(a[0], a[1])].clone() * f_upper[(l[0], l[1])].clone())
    }
}

fn permutations4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push((p, perm_sign(&p)));
                    }
                }
            }
        }
    }
    out
}

/// `Θ̆(ξ) = (1/(4-r)!) ε_{λ_1..λ_4} ε^{a_1..a_4} Θ^{λ_1}_{a_1}..Θ^{λ_{4-r}}_{a_{4-r}}
/// ξ^{λ_{5-r}..λ_4}_{a_{5-r}..a_4}` with `ε_{0123} = ε^{1234} = 1`; scaled by
/// `L^{4-r}`. With this normalization `Θ̆(Θ) = 4 det Θ`.
pub fn theta_breve<F: Scalar>(t: &Tetrad<F>, xi: &FiberForm<F>) -> Result<ScaledQuantity<F>> {
    let r = xi.r;
    if r > 4 {
        return Err(Error::ShapeMismatch(format!("form degree {r} exceeds 4")));
    }
    let perms = permutations4();
    let k = 4 - r;
    let mut acc = F::zero();
    for (lp, ls) in &perms {
        for (ap, as_) in &perms {
            let mut term = xi.get(&lp[k..], &ap[k..]).clone();
            if term.is_zero() {
                continue;
            }
            for i in 0..k {
                term = term * t.theta[(lp[i], ap[i])].clone();
            }
            acc = acc + term.scale_i64(ls * as_);
        }
    }
    let fact: i64 = (1..=k as i64).product();
    let value = acc * F::from_i64(fact).inv().expect("nonzero factorial");
    Ok(ScaledQuantity { value, dim: ScaleDim::length_int(k as i64) })
}

/// Kernel `Θ̆^a_λ` of `Θ̆` on 1-forms: `Θ̆(ξ) = Θ̆^a_λ ξ^λ_a`.
pub fn theta_breve_kernel<F: Scalar>(t: &Tetrad<F>) -> Mat<F> {
    Mat::from_fn(4, 4, |a, l| {
        let mut e = FiberForm::zero(1);
        e.set(&[l], &[a], F::one());
        theta_breve(t, &e).expect("degree 1").value
    })
}

/// A covector `p` on the mass shell `g#(p, p) = m²`, future oriented.
#[derive(Debug, Clone, PartialEq)]
pub struct MassShellPoint<F> {
    pub p: [F; 4],
    pub m: F,
}

impl<F: Scalar> MassShellPoint<F> {
    pub fn new(p: [F; 4], m: F, tol: f64) -> Result<Self> {
        let norm = p[0].clone() * p[0].clone()
            - p[1].clone() * p[1].clone()
            - p[2].clone() * p[2].clone()
            - p[3].clone() * p[3].clone();
        let res = (norm - m.clone() * m.clone()).to_c64().norm();
        if res > tol || p[0].real_sign(1e-15) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::OffShell(res));
        }
        Ok(MassShellPoint { p, m })
    }

    /// Point with spatial momentum `k` and `p_0 = √(m² + |k|²)`.
    pub fn on_shell(m: f64, k: [f64; 3]) -> MassShellPoint<num_complex::Complex64> {
        let e = (m * m + k.iter().map(|v| v * v).sum::<f64>()).sqrt();
        let c = |v: f64| num_complex::Complex64::new(v, 0.0);
        MassShellPoint { p: [c(e), c(k[0]), c(k[1]), c(k[2])], m: c(m) }
    }

    /// `p# = g#(p)`.
    pub fn raised(&self) -> [F; 4] {
        [self.p[0].clone(), -self.p[1].clone(), -self.p[2].clone(), -self.p[3].clone()]
    }
}

/// `γ[p#] = p^λ γ_λ` in `basis`.
pub fn slash<F: Scalar>(p_upper: &[F; 4], basis: SpinorBasis) -> Mat<F> {
    let g = gammas::<F>(basis, &TwoSpinorFrame::standard());
    let mut out = Mat::zeros(4, 4);
    for (c, gl) in p_upper.iter().zip(&g) {
        out = &out + &gl.scale(c);
    }
    out
}

/// `P± = ½(1 ± γ[p#]/m)`, projecting onto `Ker(γ[p#] ∓ m)`.
pub fn mass_shell_projectors<F: Scalar>(pt: &MassShellPoint<F>, basis: SpinorBasis) -> Result<(Mat<F>, Mat<F>)> {
    if pt.m.near_zero(0.0) {
        return Err(Error::MasslessShell);
    }
    let minv = pt.m.inv().ok_or(Error::MasslessShell)?;
    let g = slash(&pt.raised(), basis).scale(&minv);
    let half = F::from_i64(2).inv().expect("two is invertible");
    let id = Mat::identity(4);
    Ok(((&id + &g).scale(&half), (&id - &g).scale(&half)))
}

/// `⟨ℓ_int, φ̄⊗A⊗ψ⟩ = -k(φ, γ[A]ψ)` with `A` given by its `U⊗Ū` components.
pub fn interaction_contraction<F: Scalar>(phi: &DiracSpinor<F>, a: &Mat<F>, psi: &DiracSpinor<F>) -> F {
    -k_form(phi, &psi.apply(&dirac_map(a, &TwoSpinorFrame::standard())))
}

/// Which slots of `ℓ_int` are raised: bit 0 the `W̄*` slot (to `W`), bit 1
/// the `H*` slot (to `H`), bit 2 the `W*` slot (to `W̄`).
pub type CloneMask = u8;

/// `ℓ_int` as a tensor in `W̄*⊗H*⊗W*` (Pauli components on `H`), or one of
/// its eight clones with indices raised by `k` and `g`.
pub fn interaction_clone<F: Scalar>(mask: CloneMask) -> MixedTensor<F> {
    let k = k_matrix::<F>();
    let kinv = k.inverse().expect("k is non-degenerate");
    let g = minkowski::<F>();
    let gam = gammas::<F>(SpinorBasis::Natural, &TwoSpinorFrame::standard());
    // T_{ᾱλβ} = -(K γ_λ)_{αβ}.
    let base: Vec<Mat<F>> = gam.iter().map(|gl| (&k * gl).scale(&-F::one())).collect();
    let kinds = [
        if mask & 1 != 0 { IndexKind::Vec } else { IndexKind::ConjDual },
        if mask & 2 != 0 { IndexKind::Vec } else { IndexKind::Dual },
        if mask & 4 != 0 { IndexKind::Conj } else { IndexKind::Dual },
    ];
    let dims = vec![(kinds[0], 4), (kinds[1], 4), (kinds[2], 4)];
    let mut out = MixedTensor::zeros(dims);
    for i in 0..4 {
        for l in 0..4 {
            for j in 0..4 {
                let mut acc = F::zero();
                for i2 in 0..4 {
                    let wi = if mask & 1 != 0 { kinv[(i, i2)].clone() } else if i == i2 { F::one() } else { continue };
                    for l2 in 0..4 {
                        let wl = if mask & 2 != 0 { g[(l, l2)].clone() } else if l == l2 { F::one() } else { continue };
                        for j2 in 0..4 {
                            let wj = if mask & 4 != 0 { kinv[(j2, j)].conj() } else if j == j2 { F::one() } else { continue };
                            acc = acc + wi.clone() * wl.clone() * wj * base[l2][(i2, j2)].clone();
                        }
                    }
                }
                out.set(&[i, l, j], acc);
            }
        }
    }
    out
}

/// Lowers the raised slots of a clone back with `k` and `g`.
pub fn lower_clone<F: Scalar>(t: &MixedTensor<F>, mask: CloneMask) -> MixedTensor<F> {
    let k = k_matrix::<F>();
    let g = minkowski::<F>();
    let dims = vec![(IndexKind::ConjDual, 4), (IndexKind::Dual, 4), (IndexKind::Dual, 4)];
    let mut out = MixedTensor::zeros(dims);
    for i in 0..4 {
        for l in 0..4 {
            for j in 0..4 {
                let mut acc = F::zero();
                for i2 in 0..4 {
                    let wi = if mask & 1 != 0 { k[(i, i2)].clone() } else if i == i2 { F::one() } else { continue };
                    for l2 in 0..4 {
                        let wl = if mask & 2 != 0 { g[(l, l2)].clone() } else if l == l2 { F::one() } else { continue };
                        for j2 in 0..4 {
                            let wj = if mask & 4 != 0 { k[(j2, j)].conj() } else if j == j2 { F::one() } else { continue };
                            acc = acc + wi.clone() * wl.clone() * wj * t.get(&[i2, l2, j2]).clone();
                        }
                    }
                }
                out.set(&[i, l, j], acc);
            }
        }
    }
    out
}

/// Value and first partial derivatives `∂_1..∂_4` at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldJet<T> {
    pub value: T,
    pub d: [T; 4],
}

impl<T: Clone> FieldJet<T> {
    pub fn constant(value: T, zero: T) -> Self {
        FieldJet { value, d: [zero.clone(), zero.clone(), zero.clone(), zero] }
    }
}

/// Inputs of the ECMD Lagrangian at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct EcmdPoint<F> {
    pub theta: Tetrad<F>,
    /// `R[Γ̃]` as a 2-form valued in `Λ²H`.
    pub curvature: FiberForm<F>,
    /// `Y_a` and `∂_b Y_a` (`y.d[b][a]`).
    pub y: FieldJet<[F; 4]>,
    /// `F_{λμ}`, scaled by `L⁻²`.
    pub f: Mat<F>,
    pub psi: FieldJet<DiracSpinor<F>>,
    /// Optional traceless `Γ̃_a` acting on `U`.
    pub gamma_tilde: Option<[Mat<F>; 4]>,
    pub m: F,
    /// `1/𝔾` in natural units.
    pub inv_grav: F,
}

/// Values of `ℓ_g`, `ℓ_em`, `ℓ_D` (coefficients of `d⁴x`) with their dims.
#[derive(Debug, Clone, PartialEq)]
pub struct EcmdTerms<F> {
    pub l_g: ScaledQuantity<F>,
    pub l_em: ScaledQuantity<F>,
    pub l_d: ScaledQuantity<F>,
}

/// `∇_a ψ = ∂_a ψ - i Y_a ψ - Γ̃_a ψ`, with `Γ̃` acting on `Ū*` by `-Γ̃̄ᵀ`.
pub fn spinor_covariant_derivative<F: Scalar>(
    psi: &FieldJet<DiracSpinor<F>>,
    y: &[F; 4],
    gamma_tilde: Option<&[Mat<F>; 4]>,
) -> [DiracSpinor<F>; 4] {
    std::array::from_fn(|a| {
        let mut out = DiracSpinor::from_natural(
            &psi.d[a]
                .natural()
                .iter()
                .zip(psi.value.natural())
                .map(|(d, v)| d.clone() - F::i() * y[a].clone() * v)
                .collect::<Vec<_>>(),
        );
        if let Some(gt) = gamma_tilde {
            let u = gt[a].mul_vec(&psi.value.u);
            let chi = gt[a].conj().transpose().mul_vec(&psi.value.chi);
            for i in 0..2 {
                out.u[i] = out.u[i].clone() - u[i].clone();
                out.chi[i] = out.chi[i].clone() + chi[i].clone();
            }
        }
        out
    })
}

/// Evaluates the three ECMD terms.
///
/// * `ℓ_g = (1/𝔾) Θ̆(R[Γ̃])`
/// * `ℓ_em = ¼ F_{λμ}F^{λμ} det Θ - ½ Θ̆(dY⊗F#)`, with `(dY)_ab = ∂_a Y_b - ∂_b Y_a`
/// * `ℓ_D = (i/√2) Θ̆(⟨ψ̄,∇ψ⟩ - ⟨∇ψ̄,ψ⟩) - m k(ψ,ψ) det Θ`, where
///   `⟨ψ̄,∇_aψ⟩^λ = k(ψ, γ^λ ∇_aψ)/√2`
pub fn ecmd_lagrangian_point<F: Scalar>(pt: &EcmdPoint<F>, scales: &FieldScales) -> Result<EcmdTerms<F>> {
    if pt.curvature.degree() != 2 {
        return Err(Error::ShapeMismatch("R[Γ̃] is a 2-form".into()));
    }
    let theta = &pt.theta;
    let dims = ecmd_term_descriptors(scales);
    let dim_of = |name: &str| dims.iter().find(|d| d.name == name).expect("known term").total();
    let det = theta.theta.det();
    let g = minkowski::<F>();

    let l_g = pt.inv_grav.clone() * theta_breve(theta, &pt.curvature)?.value;

    let f_upper = &(&g * &pt.f) * &g;
    let mut f2 = F::zero();
    for l in 0..4 {
        for m in 0..4 {
            f2 = f2 + pt.f[(l, m)].clone() * f_upper[(l, m)].clone();
        }
    }
    let dy = Mat::from_fn(4, 4, |a, b| pt.y.d[a][b].clone() - pt.y.d[b][a].clone());
    let cross = theta_breve(theta, &FiberForm::two_form_tensor(&dy, &f_upper))?.value;
    let quarter = F::from_i64(4).inv().expect("nonzero");
    let half = F::from_i64(2).inv().expect("nonzero");
    let l_em = f2 * quarter * det.clone() - half.clone() * cross;

    if !theta.is_invertible() {
        return Err(Error::SingularTetrad);
    }
    let nabla = spinor_covariant_derivative(&pt.psi, &pt.y.value, pt.gamma_tilde.as_ref());
    let gam = gammas::<F>(SpinorBasis::Natural, &TwoSpinorFrame::standard());
    let inv_r2 = F::sqrt2().inv().expect("nonzero");
    let psi = &pt.psi.value;
    let xi = FiberForm::from_fn(1, |l, a| {
        let gl = gam[l[0]].scale(&g[(l[0], l[0])]);
        let fwd = k_form(psi, &nabla[a[0]].apply(&gl));
        let bwd = k_form(&nabla[a[0]], &psi.apply(&gl));
        (fwd - bwd) * inv_r2.clone()
    });
    let kinetic = F::i() * inv_r2 * theta_breve(theta, &xi)?.value;
    let l_d = kinetic - pt.m.clone() * k_form(psi, psi) * det;

    Ok(EcmdTerms {
        l_g: ScaledQuantity { value: l_g, dim: dim_of("l_g") },
        l_em: ScaledQuantity { value: l_em, dim: dim_of("l_em") },
        l_d: ScaledQuantity { value: l_d, dim: dim_of("l_D") },
    })
}
