//! Two-spinor constructions: the ε-form and its index maps, the Lorentz
//! metric on Hermitian 2×2 tensors, the Pauli basis, the Dirac map on
//! `W = U ⊕ Ū*`, Weyl and Dirac bases, Dirac adjunction, charge conjugation
//! and observer-dependent structures.
//!
//! Dirac spinors are stored in natural components `(u^1, u^2, χ_1, χ_2)`.
//! The Weyl basis is `(ζ_1, ζ_2, -z̄^1, -z̄^2)`, so Weyl coordinates negate the
//! `χ` block.

use serde::Serialize;

use crate::cxmulti::HermitianForm;
use crate::error::{Error, Result};
use crate::numeric::{Mat, Scalar};

/// A spinor frame, remembered through the phase of `ε_12`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSpinorFrame<F> {
    phase: F,
    pub label: String,
}

impl<F: Scalar> TwoSpinorFrame<F> {
    /// `phase` must have unit modulus (exactly on the exact backend).
    pub fn new(phase: F, label: impl Into<String>) -> Result<Self> {
        if !(phase.abs2() - F::one()).near_zero(1e-12) {
            return Err(Error::SignatureError("epsilon phase is not unimodular".into()));
        }
        Ok(TwoSpinorFrame { phase, label: label.into() })
    }

    pub fn standard() -> Self {
        TwoSpinorFrame { phase: F::one(), label: "standard".into() }
    }

    pub fn phase(&self) -> &F {
        &self.phase
    }

    /// `ε_{AB}` with `ε_12 = phase`.
    pub fn eps_lower(&self) -> Mat<F> {
        let p = self.phase.clone();
        Mat::from_rows(vec![vec![F::zero(), p.clone()], vec![-p, F::zero()]])
    }

    /// `ε^{AB}` with `ε^12 = conj(phase)`.
    pub fn eps_upper(&self) -> Mat<F> {
        let p = self.phase.conj();
        Mat::from_rows(vec![vec![F::zero(), p.clone()], vec![-p, F::zero()]])
    }
}

/// `(u♭)_B = ε_{AB} u^A`.
pub fn eps_flat<F: Scalar>(u: &[F; 2], frame: &TwoSpinorFrame<F>) -> [F; 2] {
    let e = frame.eps_lower();
    [0, 1].map(|b| (0..2).fold(F::zero(), |acc, a| acc + e[(a, b)].clone() * u[a].clone()))
}

/// `(λ#)^B = ε^{AB} λ_A`.
pub fn eps_sharp<F: Scalar>(l: &[F; 2], frame: &TwoSpinorFrame<F>) -> [F; 2] {
    let e = frame.eps_upper();
    [0, 1].map(|b| (0..2).fold(F::zero(), |acc, a| acc + e[(a, b)].clone() * l[a].clone()))
}

/// Sign `s` with `eps_sharp ∘ eps_flat = s · id` under this crate's convention.
pub const SHARP_FLAT_SIGN: i64 = -1;

/// `g(w1, w2) = ε_{AB} ε̄_{ȦḂ} w1^{AȦ} w2^{BḂ}`; `g(w, w) = 2 det w`.
pub fn spinor_metric<F: Scalar>(w1: &Mat<F>, w2: &Mat<F>, frame: &TwoSpinorFrame<F>) -> F {
    let e = frame.eps_lower();
    let eb = e.conj();
    let mut acc = F::zero();
    for a in 0..2 {
        for b in 0..2 {
            if e[(a, b)].is_zero() {
                continue;
            }
            for ad in 0..2 {
                for bd in 0..2 {
                    acc = acc
                        + e[(a, b)].clone()
                            * eb[(ad, bd)].clone()
                            * w1[(a, ad)].clone()
                            * w2[(b, bd)].clone();
                }
            }
        }
    }
    acc
}

/// The Pauli matrices `σ_0 .. σ_3`.
pub fn pauli_matrices<F: Scalar>() -> [Mat<F>; 4] {
    let (o, z, i) = (F::one(), F::zero(), F::i());
    [
        Mat::identity(2),
        Mat::from_rows(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]]),
        Mat::from_rows(vec![vec![z.clone(), -i.clone()], vec![i, z.clone()]]),
        Mat::from_rows(vec![vec![o.clone(), z.clone()], vec![z, -o]]),
    ]
}

/// `τ_λ = σ_λ / √2` as components `w^{AȦ}`.
pub fn pauli_basis<F: Scalar>() -> [Mat<F>; 4] {
    let s = F::sqrt2().inv().expect("sqrt 2 is invertible");
    pauli_matrices::<F>().map(|m| m.scale(&s))
}

/// Lorentz metric `diag(1, -1, -1, -1)`.
pub fn minkowski<F: Scalar>() -> Mat<F> {
    Mat::diag(&[F::one(), -F::one(), -F::one(), -F::one()])
}

/// An element of `H(U⊗Ū)`, checked Hermitian on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianVector<F>(Mat<F>);

impl<F: Scalar> HermitianVector<F> {
    pub fn new(w: Mat<F>) -> Result<Self> {
        if w.rows() != 2 || w.cols() != 2 || !w.is_hermitian(1e-12) {
            return Err(Error::SignatureError("not a Hermitian 2x2 tensor".into()));
        }
        Ok(HermitianVector(w))
    }

    /// `Σ x^λ τ_λ`.
    pub fn from_components(x: &[F; 4]) -> Self {
        let t = pauli_basis::<F>();
        let mut m = Mat::zeros(2, 2);
        for (c, tl) in x.iter().zip(&t) {
            m = &m + &tl.scale(c);
        }
        HermitianVector(m)
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.0
    }

    pub fn norm2(&self) -> F {
        spinor_metric(&self.0, &self.0, &TwoSpinorFrame::standard())
    }
}

/// Basis used to present endomorphisms and coordinates of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpinorBasis {
    /// `(u^1, u^2, χ_1, χ_2)`.
    Natural,
    Weyl,
    Dirac,
}

/// `γ(y)` on natural components: `√2 (y χ, ε̄ᵀ yᵀ ε u)`.
pub fn dirac_map<F: Scalar>(y: &Mat<F>, frame: &TwoSpinorFrame<F>) -> Mat<F> {
    let r2 = F::sqrt2();
    let e = frame.eps_lower();
    let eb = e.conj();
    let lower = &(&eb.transpose() * &y.transpose()) * &e;
    Mat::block2(&Mat::zeros(2, 2), &y.scale(&r2), &lower.scale(&r2), &Mat::zeros(2, 2))
}

/// Columns are the chosen basis vectors in natural components.
pub fn basis_matrix<F: Scalar>(basis: SpinorBasis) -> Mat<F> {
    let weyl = Mat::diag(&[F::one(), F::one(), -F::one(), -F::one()]);
    match basis {
        SpinorBasis::Natural => Mat::identity(4),
        SpinorBasis::Weyl => weyl,
        SpinorBasis::Dirac => &weyl * &weyl_to_dirac_columns(),
    }
}

/// `ζ'_j = Σ_i ζ_i P_ij` with `P = (1/√2)[[I, I], [-I, I]]`.
fn weyl_to_dirac_columns<F: Scalar>() -> Mat<F> {
    let s = F::sqrt2().inv().expect("sqrt 2 is invertible");
    let i = Mat::<F>::identity(2);
    Mat::block2(&i, &i, &-&i, &i).scale(&s)
}

/// Matrix of a natural-component endomorphism in `basis`.
pub fn in_basis<F: Scalar>(a: &Mat<F>, basis: SpinorBasis) -> Mat<F> {
    let b = basis_matrix::<F>(basis);
    let binv = b.inverse().expect("basis matrix is invertible");
    &(&binv * a) * &b
}

/// `γ_λ = γ(τ_λ)` in `basis`.
pub fn gammas<F: Scalar>(basis: SpinorBasis, frame: &TwoSpinorFrame<F>) -> [Mat<F>; 4] {
    pauli_basis::<F>().map(|t| in_basis(&dirac_map(&t, frame), basis))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisDirection {
    WeylToDirac,
    DiracToWeyl,
}

/// Re-expresses Dirac-spinor coordinates between the Weyl and Dirac bases.
pub fn change_basis_weyl_dirac<F: Scalar>(coords: &[F; 4], dir: BasisDirection) -> [F; 4] {
    let p = weyl_to_dirac_columns::<F>();
    let m = match dir {
        BasisDirection::WeylToDirac => p.inverse().expect("invertible"),
        BasisDirection::DiracToWeyl => p,
    };
    let v = m.mul_vec(coords);
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

/// `ψ = (u, χ)` with `u ∈ U`, `χ ∈ Ū*`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor<F> {
    pub u: [F; 2],
    pub chi: [F; 2],
}

impl<F: Scalar> DiracSpinor<F> {
    pub fn new(u: [F; 2], chi: [F; 2]) -> Self {
        DiracSpinor { u, chi }
    }

    pub fn zero() -> Self {
        DiracSpinor { u: [F::zero(), F::zero()], chi: [F::zero(), F::zero()] }
    }

    pub fn from_natural(v: &[F]) -> Self {
        assert_eq!(v.len(), 4, "Dirac spinor has four components");
        DiracSpinor::new([v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()])
    }

    pub fn natural(&self) -> [F; 4] {
        [self.u[0].clone(), self.u[1].clone(), self.chi[0].clone(), self.chi[1].clone()]
    }

    pub fn coords(&self, basis: SpinorBasis) -> [F; 4] {
        let binv = basis_matrix::<F>(basis).inverse().expect("invertible");
        let v = binv.mul_vec(&self.natural());
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }

    pub fn from_coords(c: &[F; 4], basis: SpinorBasis) -> Self {
        Self::from_natural(&basis_matrix::<F>(basis).mul_vec(c))
    }

    pub fn apply(&self, m: &Mat<F>) -> Self {
        Self::from_natural(&m.mul_vec(&self.natural()))
    }

    pub fn scale(&self, s: &F) -> Self {
        DiracSpinor::new(
            self.u.clone().map(|v| v * s.clone()),
            self.chi.clone().map(|v| v * s.clone()),
        )
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        self.natural().iter().zip(o.natural().iter()).all(|(a, b)| a.approx_eq(b, tol))
    }
}

/// Element of `W* = U* ⊕ Ū`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoDiracSpinor<F> {
    /// `U*` part.
    pub lambda: [F; 2],
    /// `Ū` part.
    pub ubar: [F; 2],
}

impl<F: Scalar> CoDiracSpinor<F> {
    pub fn pair(&self, psi: &DiracSpinor<F>) -> F {
        (0..2).fold(F::zero(), |acc, a| {
            acc + self.lambda[a].clone() * psi.u[a].clone() + psi.chi[a].clone() * self.ubar[a].clone()
        })
    }
}

/// `(u, χ) ↦ (χ̄, ū)`.
pub fn dirac_adjoint<F: Scalar>(psi: &DiracSpinor<F>) -> CoDiracSpinor<F> {
    CoDiracSpinor { lambda: psi.chi.clone().map(|v| v.conj()), ubar: psi.u.clone().map(|v| v.conj()) }
}

/// `k(φ, ψ) = ⟨φ̄-adjoint, ψ⟩`.
pub fn k_form<F: Scalar>(phi: &DiracSpinor<F>, psi: &DiracSpinor<F>) -> F {
    dirac_adjoint(phi).pair(psi)
}

/// Matrix `K` with `k(φ, ψ) = φ† K ψ` in natural components.
pub fn k_matrix<F: Scalar>() -> Mat<F> {
    let i = Mat::identity(2);
    Mat::block2(&Mat::zeros(2, 2), &i, &i, &Mat::zeros(2, 2))
}

/// `k` as a Hermitian form in `basis`.
pub fn k_hermitian_form<F: Scalar>(basis: SpinorBasis) -> HermitianForm<F> {
    let b = basis_matrix::<F>(basis);
    HermitianForm::new(&(&b.adjoint() * &k_matrix()) * &b).expect("k is Hermitian")
}

/// `C(u, χ) = (ε# χ̄, ε̄♭ ū)`.
pub fn charge_conjugation<F: Scalar>(psi: &DiracSpinor<F>, frame: &TwoSpinorFrame<F>) -> DiracSpinor<F> {
    let chibar = psi.chi.clone().map(|v| v.conj());
    let ubar = psi.u.clone().map(|v| v.conj());
    let conj_frame = TwoSpinorFrame { phase: frame.phase.conj(), label: frame.label.clone() };
    DiracSpinor::new(eps_sharp(&chibar, frame), eps_flat(&ubar, &conj_frame))
}

/// Sign `s` with `C ∘ C = s · id`.
pub const CHARGE_CONJUGATION_SQUARE: i64 = -1;

fn check_observer<F: Scalar>(o: &Mat<F>) -> Result<F> {
    if o.rows() != 2 || o.cols() != 2 || !o.is_hermitian(1e-12) {
        return Err(Error::NotTimelike);
    }
    let g = spinor_metric(o, o, &TwoSpinorFrame::standard());
    let timelike = g.real_sign(1e-14) == Some(std::cmp::Ordering::Greater);
    let future = o.trace().real_sign(1e-14) == Some(std::cmp::Ordering::Greater);
    if !(timelike && future) {
        return Err(Error::NotTimelike);
    }
    Ok(g)
}

/// Positive Hermitian metric on `U` from an observer `o ∈ H`:
/// `h_{ȦB} = √2 ε̄_{ȦḂ} ε_{BA} o^{AḂ}`; `o = τ_0` gives the identity.
pub fn observer_metric<F: Scalar>(o: &Mat<F>, frame: &TwoSpinorFrame<F>) -> Result<HermitianForm<F>> {
    check_observer(o)?;
    let e = frame.eps_lower();
    let h = (&(&e.conj() * &o.transpose()) * &e.transpose()).scale(&F::sqrt2());
    HermitianForm::new(h)
}

fn unit_observer_gamma<F: Scalar>(o: &Mat<F>, frame: &TwoSpinorFrame<F>) -> Result<Mat<F>> {
    let g = check_observer(o)?;
    let n = g
        .sqrt_real()
        .ok_or_else(|| Error::NotExact("observer norm has no exact square root".into()))?;
    Ok(dirac_map(o, frame).scale(&n.inv().expect("timelike norm is nonzero")))
}

/// Parity `γ(o)/√g(o,o)` on natural components.
pub fn parity<F: Scalar>(o: &Mat<F>, frame: &TwoSpinorFrame<F>) -> Result<Mat<F>> {
    unit_observer_gamma(o, frame)
}

/// Positive metric on `W`: `ψ ↦ k(ψ, P_o ψ)`.
pub fn observer_metric_dirac<F: Scalar>(o: &Mat<F>, frame: &TwoSpinorFrame<F>) -> Result<HermitianForm<F>> {
    let p = parity(o, frame)?;
    HermitianForm::new(&k_matrix() * &p)
}

/// Time reversal: parity after charge conjugation.
pub fn time_reversal<F: Scalar>(
    psi: &DiracSpinor<F>,
    o: &Mat<F>,
    frame: &TwoSpinorFrame<F>,
) -> Result<DiracSpinor<F>> {
    Ok(charge_conjugation(psi, frame).apply(&parity(o, frame)?))
}
