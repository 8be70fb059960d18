//! Index-typed complex tensors, the dagger involution, Hermitian forms and
//! their signatures, and the h-contraction of endomorphisms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{
    charpoly, count_real_roots_by_sign, jacobi_eigenvalues, realify_hermitian, Backend, Mat,
    Scalar, Signature,
};

/// The four index types: vector, dual, conjugate, conjugate dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    Vec,
    Dual,
    Conj,
    ConjDual,
}

impl IndexKind {
    /// Dotted indices only pair with dotted ones.
    pub fn contracts_with(self, other: IndexKind) -> bool {
        use IndexKind::*;
        matches!((self, other), (Vec, Dual) | (Dual, Vec) | (Conj, ConjDual) | (ConjDual, Conj))
    }

    /// Kind after complex conjugation of the space.
    pub fn conjugate(self) -> IndexKind {
        use IndexKind::*;
        match self {
            Vec => Conj,
            Dual => ConjDual,
            Conj => Vec,
            ConjDual => Dual,
        }
    }
}

/// Dense complex tensor with typed indices, row-major components.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedTensor<F> {
    dims: Vec<(IndexKind, usize)>,
    comps: Vec<F>,
}

impl<F: Scalar> MixedTensor<F> {
    pub fn new(dims: Vec<(IndexKind, usize)>, comps: Vec<F>) -> Result<Self> {
        let n: usize = dims.iter().map(|d| d.1).product();
        if n != comps.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} components for shape of size {n}",
                comps.len()
            )));
        }
        Ok(MixedTensor { dims, comps })
    }

    pub fn zeros(dims: Vec<(IndexKind, usize)>) -> Self {
        let n = dims.iter().map(|d| d.1).product();
        MixedTensor { dims, comps: vec![F::zero(); n] }
    }

    /// Rank-2 tensor from a matrix; row index first.
    pub fn from_matrix(kinds: [IndexKind; 2], m: &Mat<F>) -> Self {
        MixedTensor {
            dims: vec![(kinds[0], m.rows()), (kinds[1], m.cols())],
            comps: m.entries().to_vec(),
        }
    }

    /// `u ⊗ v̄` as a tensor of type V⊗V̄.
    pub fn decomposable(u: &[F], v: &[F]) -> Self {
        let m = Mat::from_fn(u.len(), v.len(), |r, c| u[r].clone() * v[c].conj());
        Self::from_matrix([IndexKind::Vec, IndexKind::Conj], &m)
    }

    pub fn dims(&self) -> &[(IndexKind, usize)] {
        &self.dims
    }
    pub fn components(&self) -> &[F] {
        &self.comps
    }
    pub fn rank(&self) -> usize {
        self.dims.len()
    }
    pub fn backend(&self) -> Backend {
        F::BACKEND
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "tensor index arity");
        idx.iter().zip(&self.dims).fold(0, |acc, (i, (_, n))| {
            assert!(i < n, "tensor index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &F {
        &self.comps[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: F) {
        let o = self.offset(idx);
        self.comps[o] = v;
    }

    pub fn to_matrix(&self) -> Result<Mat<F>> {
        if self.rank() != 2 {
            return Err(Error::SignatureError(format!("rank {} is not 2", self.rank())));
        }
        let (r, c) = (self.dims[0].1, self.dims[1].1);
        Ok(Mat::from_fn(r, c, |i, j| self.comps[i * c + j].clone()))
    }

    pub fn scale(&self, s: &F) -> Self {
        MixedTensor {
            dims: self.dims.clone(),
            comps: self.comps.iter().map(|v| v.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.dims != o.dims {
            return Err(Error::SignatureError("sum of tensors of different type".into()));
        }
        Ok(MixedTensor {
            dims: self.dims.clone(),
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        self.dims == o.dims && self.comps.iter().zip(&o.comps).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Tensor product, indices of `self` first.
    pub fn outer(&self, o: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&o.dims);
        let mut comps = Vec::with_capacity(self.comps.len() * o.comps.len());
        for a in &self.comps {
            for b in &o.comps {
                comps.push(a.clone() * b.clone());
            }
        }
        MixedTensor { dims, comps }
    }

    /// Contracts index `i` against index `j`; only vector/dual or
    /// conjugate/conjugate-dual pairs are legal.
    pub fn contract(&self, i: usize, j: usize) -> Result<Self> {
        let r = self.rank();
        if i == j || i >= r || j >= r {
            return Err(Error::SignatureError(format!("cannot contract slots {i},{j}")));
        }
        let (ki, ni) = self.dims[i];
        let (kj, nj) = self.dims[j];
        if !ki.contracts_with(kj) || ni != nj {
            return Err(Error::SignatureError(format!("{ki:?} does not contract with {kj:?}")));
        }
        let keep: Vec<usize> = (0..r).filter(|&s| s != i && s != j).collect();
        let dims: Vec<_> = keep.iter().map(|&s| self.dims[s]).collect();
        let mut out = MixedTensor::zeros(dims);
        let total: usize = out.dims.iter().map(|d| d.1).product();
        for flat in 0..total {
            let mut rest = vec![0; keep.len()];
            let mut f = flat;
            for (slot, (_, n)) in rest.iter_mut().zip(&out.dims).rev() {
                *slot = f % n;
                f /= n;
            }
            let mut full = vec![0; r];
            for (k, &s) in keep.iter().enumerate() {
                full[s] = rest[k];
            }
            let mut acc = F::zero();
            for t in 0..ni {
                full[i] = t;
                full[j] = t;
                acc = acc + self.get(&full).clone();
            }
            out.comps[flat] = acc;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn nest<F: Scalar>(dims: &[(IndexKind, usize)], comps: &[F]) -> serde_json::Value {
            match dims.split_first() {
                None => comps[0].to_json(),
                Some(((_, n), rest)) => {
                    let stride = comps.len() / n.max(&1);
                    serde_json::Value::Array(
                        comps.chunks(stride.max(1)).map(|c| nest(rest, c)).collect(),
                    )
                }
            }
        }
        nest(&self.dims, &self.comps)
    }
}

fn check_v_vbar<F: Scalar>(w: &MixedTensor<F>) -> Result<()> {
    match w.dims() {
        [(IndexKind::Vec, a), (IndexKind::Conj, b)] if a == b => Ok(()),
        other => Err(Error::SignatureError(format!("expected V⊗V̄ of equal size, got {other:?}"))),
    }
}

/// `(u⊗v̄)† = v⊗ū`, extended antilinearly: the conjugate transpose.
pub fn dagger<F: Scalar>(w: &MixedTensor<F>) -> Result<MixedTensor<F>> {
    check_v_vbar(w)?;
    let m = w.to_matrix()?;
    Ok(MixedTensor::from_matrix([IndexKind::Vec, IndexKind::Conj], &m.adjoint()))
}

/// `w = H + A` with `H† = H`, `A† = -A`.
pub fn hermitian_split<F: Scalar>(
    w: &MixedTensor<F>,
) -> Result<(MixedTensor<F>, MixedTensor<F>)> {
    let d = dagger(w)?;
    let half = F::from_i64(2).inv().expect("2 is invertible");
    let h = w.add(&d)?.scale(&half);
    let a = w.add(&d.scale(&-F::one()))?.scale(&half);
    Ok((h, a))
}

/// A Hermitian form `h_{ȧa}`, stored as the matrix `h[ȧ][a]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm<F> {
    matrix: Mat<F>,
}

impl<F: Scalar> HermitianForm<F> {
    /// Rejects non-Hermitian input (exactly on the exact backend, to 1e-12
    /// relative on floats).
    pub fn new(matrix: Mat<F>) -> Result<Self> {
        let tol = 1e-12 * matrix.max_abs().max(1.0);
        if !matrix.is_hermitian(tol) {
            return Err(Error::SignatureError("matrix is not Hermitian".into()));
        }
        Ok(HermitianForm { matrix })
    }

    pub fn identity(n: usize) -> Self {
        HermitianForm { matrix: Mat::identity(n) }
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `h(ū, v) = conj(u)^ȧ h_{ȧa} v^a`.
    pub fn eval(&self, u: &[F], v: &[F]) -> F {
        let hv = self.matrix.mul_vec(v);
        u.iter().zip(hv).fold(F::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    /// Basis change `S† h S`.
    pub fn congruent(&self, s: &Mat<F>) -> Self {
        HermitianForm { matrix: &(&s.adjoint() * &self.matrix) * s }
    }
}

/// Inertia of a Hermitian form. Exact backend: characteristic polynomial and
/// Descartes' rule (exact for real-rooted polynomials). Float backend: Jacobi
/// on the realified matrix with zero threshold `1e-10 * max|entry|`.
pub fn signature<F: Scalar>(form: &HermitianForm<F>) -> Signature {
    let m = form.matrix();
    match F::BACKEND {
        Backend::Exact => count_real_roots_by_sign(&charpoly(m), 0.0),
        Backend::Float => {
            let cm = Mat::from_fn(m.rows(), m.cols(), |r, k| m[(r, k)].to_c64());
            let ev = jacobi_eigenvalues(&realify_hermitian(&cm));
            let thr = 1e-10 * m.max_abs();
            let count = |f: &dyn Fn(f64) -> bool| ev.iter().filter(|&&x| f(x)).count() / 2;
            Signature {
                plus: count(&|x| x > thr),
                minus: count(&|x| x < -thr),
                zero: count(&|x| x.abs() <= thr),
            }
        }
    }
}

/// `⟨X̄,Y⟩ = X̄^ȧ_ḃ Y^a_b h_{ȧa} h^{ḃb}` for endomorphisms given as matrices
/// `X[a][b] = X^a_b`.
pub fn h_contract_mat<F: Scalar>(x: &Mat<F>, y: &Mat<F>, h: &HermitianForm<F>) -> Result<F> {
    let n = h.dim();
    if x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n {
        return Err(Error::ShapeMismatch("h-contraction operands".into()));
    }
    let hm = h.matrix();
    let hinv = hm.inverse().ok_or(Error::DegenerateMetric)?;
    // h^{ḃb} is the transpose of the inverse matrix.
    let mut acc = F::zero();
    for ad in 0..n {
        for bd in 0..n {
            let xb = x[(ad, bd)].conj();
            if xb.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    acc = acc
                        + xb.clone() * y[(a, b)].clone() * hm[(ad, a)].clone() * hinv[(b, bd)].clone();
                }
            }
        }
    }
    Ok(acc)
}

/// Tensor form of [`h_contract_mat`]; operands must be of type V⊗V*.
pub fn h_contract<F: Scalar>(
    x: &MixedTensor<F>,
    y: &MixedTensor<F>,
    h: &HermitianForm<F>,
) -> Result<F> {
    for t in [x, y] {
        if !matches!(t.dims(), [(IndexKind::Vec, _), (IndexKind::Dual, _)]) {
            return Err(Error::SignatureError("h-contraction needs V⊗V* operands".into()));
        }
    }
    h_contract_mat(&x.to_matrix()?, &y.to_matrix()?, h)
}

/// The h-adjoint of an endomorphism: `h^{-1} X† h`.
pub fn h_adjoint<F: Scalar>(x: &Mat<F>, h: &HermitianForm<F>) -> Result<Mat<F>> {
    let hinv = h.matrix().inverse().ok_or(Error::DegenerateMetric)?;
    Ok(&(&hinv * &x.adjoint()) * h.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Exact};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(re: i64, im: i64) -> Exact {
        Exact::int(re, im)
    }

    fn vv(m: Mat<Exact>) -> MixedTensor<Exact> {
        MixedTensor::from_matrix([IndexKind::Vec, IndexKind::Conj], &m)
    }

    #[test]
    fn dagger_examples() {
        let w = vv(Mat::from_rows(vec![vec![e(1, 0), e(0, 1)], vec![e(0, 0), e(0, 0)]]));
        let want = vv(Mat::from_rows(vec![vec![e(1, 0), e(0, 0)], vec![e(0, -1), e(0, 0)]]));
        assert_eq!(dagger(&w).unwrap(), want);
        let id = vv(Mat::identity(2));
        assert_eq!(dagger(&id).unwrap(), id);
        let uv = MixedTensor::decomposable(&[e(1, 0), e(0, 0)], &[e(0, 0), e(1, 0)]);
        let vu = MixedTensor::decomposable(&[e(0, 0), e(1, 0)], &[e(1, 0), e(0, 0)]);
        assert_eq!(dagger(&uv).unwrap(), vu);
        assert_eq!(vu.to_matrix().unwrap(), Mat::from_i64(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn dagger_rejects_wrong_signature() {
        let t = MixedTensor::from_matrix([IndexKind::Vec, IndexKind::Dual], &Mat::<Exact>::identity(2));
        assert!(matches!(dagger(&t), Err(Error::SignatureError(_))));
    }

    #[test]
    fn split_examples() {
        let h = rat(1, 2);
        let w = vv(Mat::from_i64(&[&[0, 1], &[0, 0]]));
        let (hh, aa) = hermitian_split(&w).unwrap();
        let half = Exact::from_rational(&h);
        let want_h = vv(Mat::from_rows(vec![
            vec![e(0, 0), half.clone()],
            vec![half.clone(), e(0, 0)],
        ]));
        let want_a = vv(Mat::from_rows(vec![vec![e(0, 0), half.clone()], vec![-half, e(0, 0)]]));
        assert_eq!((hh, aa), (want_h, want_a));
        let iid = vv(Mat::identity(2).scale(&Exact::i()));
        let (hh, aa) = hermitian_split(&iid).unwrap();
        assert!(hh.components().iter().all(Scalar::is_zero));
        assert_eq!(aa, iid);
    }

    #[test]
    fn signature_examples_exact() {
        let d = HermitianForm::new(Mat::<Exact>::diag(&[e(1, 0), e(-1, 0), e(-1, 0), e(-1, 0)]));
        assert_eq!(signature(&d.unwrap()), Signature::new(1, 3, 0));
        let k = Mat::<Exact>::block2(
            &Mat::zeros(2, 2),
            &Mat::identity(2),
            &Mat::identity(2),
            &Mat::zeros(2, 2),
        );
        assert_eq!(signature(&HermitianForm::new(k).unwrap()), Signature::new(2, 2, 0));
        let z = HermitianForm::new(Mat::<Exact>::diag(&[e(1, 0), e(0, 0)])).unwrap();
        assert_eq!(signature(&z), Signature::new(1, 0, 1));
    }

    #[test]
    fn signature_float_matches_exact() {
        let h = Mat::from_rows(vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(0.0, 3.0)],
            vec![Complex64::new(0.0, -3.0), Complex64::new(1.0, 0.0)],
        ]);
        assert_eq!(signature(&HermitianForm::new(h).unwrap()), Signature::new(1, 1, 0));
        assert!(HermitianForm::new(Mat::from_i64(&[&[0, 1], &[0, 0]]).map(|v: &Complex64| *v)).is_err());
    }

    #[test]
    fn h_contract_examples() {
        let i_s3 = Mat::<Exact>::from_rows(vec![vec![e(0, 1), e(0, 0)], vec![e(0, 0), e(0, -1)]]);
        let i_s1 = Mat::<Exact>::from_rows(vec![vec![e(0, 0), e(0, 1)], vec![e(0, 1), e(0, 0)]]);
        let h = HermitianForm::identity(2);
        assert_eq!(h_contract_mat(&i_s3, &i_s3, &h).unwrap(), e(2, 0));
        assert_eq!(h_contract_mat(&i_s1, &i_s1, &h).unwrap(), e(2, 0));
        assert_eq!(h_contract_mat(&Mat::zeros(2, 2), &i_s1, &h).unwrap(), e(0, 0));
        let deg = HermitianForm::new(Mat::<Exact>::diag(&[e(1, 0), e(0, 0)])).unwrap();
        assert_eq!(h_contract_mat(&i_s1, &i_s1, &deg), Err(Error::DegenerateMetric));
    }

    #[test]
    fn h_contract_is_minus_trace_for_h_antihermitian() {
        // Non-identity positive h; X = A h^{-1}-skew built as h^{-1}K with K anti-Hermitian.
        let h = HermitianForm::new(Mat::<Exact>::from_rows(vec![
            vec![e(2, 0), e(1, 1)],
            vec![e(1, -1), e(3, 0)],
        ]))
        .unwrap();
        let hinv = h.matrix().inverse().unwrap();
        let k1 = Mat::from_rows(vec![vec![e(0, 1), e(2, 1)], vec![e(-2, 1), e(0, -3)]]);
        let k2 = Mat::from_rows(vec![vec![e(0, -2), e(1, 0)], vec![e(-1, 0), e(0, 5)]]);
        let x = &hinv * &k1;
        let y = &hinv * &k2;
        assert_eq!(h_adjoint(&x, &h).unwrap(), -&x);
        let lhs = h_contract_mat(&x, &y, &h).unwrap();
        assert_eq!(lhs, -(&x * &y).trace());
    }

    #[test]
    fn contraction_rules() {
        let t = MixedTensor::from_matrix([IndexKind::Vec, IndexKind::Dual], &Mat::<Exact>::from_i64(&[&[1, 2], &[3, 4]]));
        assert_eq!(t.contract(0, 1).unwrap().components(), &[e(5, 0)]);
        let bad = MixedTensor::from_matrix([IndexKind::Vec, IndexKind::ConjDual], &Mat::<Exact>::identity(2));
        assert!(bad.contract(0, 1).is_err());
        let o = t.outer(&t);
        assert_eq!(o.rank(), 4);
        // Contract slot 1 with slot 2: matrix product.
        let p = o.contract(1, 2).unwrap();
        let m = t.to_matrix().unwrap();
        assert_eq!(p.to_matrix().unwrap(), &m * &m);
    }

    fn random_c(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }

    #[test]
    fn sylvester_invariance_float() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4 {
            let d: Vec<Complex64> = (0..n)
                .map(|k| Complex64::new([3.0, -2.0, 0.5, -0.25][k], 0.0))
                .collect();
            let h = HermitianForm::new(Mat::diag(&d)).unwrap();
            let base = signature(&h);
            for _ in 0..20 {
                let s = Mat::from_fn(n, n, |_, _| random_c(&mut rng));
                if s.det().norm() < 1e-3 {
                    continue;
                }
                assert_eq!(signature(&h.congruent(&s)), base);
            }
        }
    }

    fn arb_exact() -> impl Strategy<Value = Exact> {
        (-9i64..9, -9i64..9, 1i64..5).prop_map(|(a, b, d)| Exact::gaussian(rat(a, d), rat(b, d)))
    }

    proptest! {
        #[test]
        fn dagger_is_antilinear_involution(
            c in proptest::collection::vec(arb_exact(), 9),
            s in arb_exact(),
        ) {
            let w = vv(Mat::from_fn(3, 3, |r, k| c[r * 3 + k].clone()));
            prop_assert_eq!(dagger(&dagger(&w).unwrap()).unwrap(), w.clone());
            prop_assert_eq!(
                dagger(&w.scale(&s)).unwrap(),
                dagger(&w).unwrap().scale(&s.conj())
            );
            let (h, a) = hermitian_split(&w).unwrap();
            prop_assert_eq!(dagger(&h).unwrap(), h.clone());
            prop_assert_eq!(dagger(&a).unwrap(), a.scale(&-Exact::one()));
            prop_assert_eq!(h.add(&a).unwrap(), w);
        }
    }
}
