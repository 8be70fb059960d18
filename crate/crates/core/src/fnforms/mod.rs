//! Tangent-valued forms on a fibered chart `R^n × R^k` with exact polynomial
//! components, and the Frölicher–Nijenhuis bracket.
//!
//! Components follow the full-sum convention
//! `φ = φ^b_{a1..ar} dx^{a1}∧…∧dx^{ar} ⊗ ∂_b`, summed over all index tuples
//! and totally antisymmetric in the `a`'s, so the coefficient of the basis
//! element `dx^I` (`I` increasing) is `r! φ^b_I`. Chart coordinates are
//! numbered `0..n` (base, `x1..xn`) then `n..n+k` (fiber, `y1..yk`).

mod connection;
mod polymat;
pub mod sample;

pub use connection::{
    covariant_differential, curvature, curvature_matrix, decompose_alpha, gauge_transform,
    reconstruct, Connection,
};
pub use polymat::PolyMat;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::poly::{Poly, Var};

/// Sign of the permutation sorting `seq` (entries must be distinct).
pub fn perm_sign(seq: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorts an index tuple, returning the permutation sign, or `None` on a repeat.
pub(crate) fn sort_signed(seq: &[usize]) -> Option<(Vec<usize>, i64)> {
    let s = perm_sign(seq);
    let mut v = seq.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, s))
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// A tangent-valued `r`-form with sparse antisymmetric components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TVForm {
    n: usize,
    k: usize,
    r: usize,
    comps: BTreeMap<(usize, Vec<usize>), Poly>,
}

impl TVForm {
    pub fn zero(n: usize, k: usize, r: usize) -> Self {
        TVForm { n, k, r, comps: BTreeMap::new() }
    }

    /// A vector field `Σ v^b ∂_b`.
    pub fn vector_field(n: usize, k: usize, v: Vec<Poly>) -> Self {
        assert_eq!(v.len(), n + k, "vector field needs one component per coordinate");
        let mut f = TVForm::zero(n, k, 0);
        for (b, p) in v.into_iter().enumerate() {
            f.set(b, &[], p);
        }
        f
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    pub fn fiber_dim(&self) -> usize {
        self.k
    }

    /// Total chart dimension `n + k`.
    pub fn dim(&self) -> usize {
        self.n + self.k
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    /// Sets `φ^b_{idx}`; `idx` may be in any order and the antisymmetric
    /// partner components follow.
    pub fn set(&mut self, b: usize, idx: &[usize], p: Poly) {
        assert_eq!(idx.len(), self.r, "wrong number of form indices");
        assert!(b < self.dim() && idx.iter().all(|&a| a < self.dim()), "index out of range");
        let Some((sorted, s)) = sort_signed(idx) else {
            assert!(p.is_zero(), "repeated form index with nonzero component");
            return;
        };
        let key = (b, sorted);
        if p.is_zero() {
            self.comps.remove(&key);
        } else {
            self.comps.insert(key, p.scale_i64(s));
        }
    }

    /// `φ^b_{idx}` for any index order.
    pub fn get(&self, b: usize, idx: &[usize]) -> Poly {
        match sort_signed(idx) {
            Some((sorted, s)) => {
                self.comps.get(&(b, sorted)).map(|p| p.scale_i64(s)).unwrap_or_else(Poly::zero)
            }
            None => Poly::zero(),
        }
    }

    fn accumulate(&mut self, b: usize, sorted: Vec<usize>, p: &Poly, c: &Rational) {
        if p.is_zero() || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.comps.entry((b, sorted)) {
            Entry::Vacant(e) => {
                e.insert(p.scale(c));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled(p, c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Nonzero components `(b, increasing I, φ^b_I)`.
    pub fn components(&self) -> impl Iterator<Item = (usize, &[usize], &Poly)> {
        self.comps.iter().map(|((b, i), p)| (*b, i.as_slice(), p))
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    fn same_shape(&self, o: &TVForm) -> Result<()> {
        if (self.n, self.k, self.r) != (o.n, o.k, o.r) {
            return Err(Error::ChartMismatch(format!(
                "({}, {}, degree {}) vs ({}, {}, degree {})",
                self.n, self.k, self.r, o.n, o.k, o.r
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &TVForm) -> Result<TVForm> {
        self.same_shape(o)?;
        let mut out = self.clone();
        for ((b, i), p) in &o.comps {
            out.accumulate(*b, i.clone(), p, &Rational::one());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &TVForm) -> Result<TVForm> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> TVForm {
        let mut out = TVForm::zero(self.n, self.k, self.r);
        if !s.is_zero() {
            out.comps = self.comps.iter().map(|(key, p)| (key.clone(), p.scale(s))).collect();
        }
        out
    }

    /// Form indices only along base directions.
    pub fn is_basic(&self) -> bool {
        self.comps.keys().all(|(_, i)| i.iter().all(|&a| a < self.n))
    }

    /// Values only along fiber directions.
    pub fn is_vertical_valued(&self) -> bool {
        self.comps.keys().all(|(b, _)| *b >= self.n)
    }

    /// Base-valued part is a form on the base: base form indices and no
    /// dependence on fiber coordinates.
    pub fn is_projectable(&self) -> bool {
        self.comps.iter().all(|((b, i), p)| {
            *b >= self.n || (i.iter().all(|&a| a < self.n) && !p.depends_on(|v| matches!(v, Var::Y(_))))
        })
    }

    /// Projectable, with fiber-valued components linear in `y` along base
    /// form indices and `y`-free with one fiber form index.
    pub fn is_linear(&self) -> bool {
        if !self.is_projectable() {
            return false;
        }
        self.comps.iter().all(|((b, i), p)| {
            if *b < self.n {
                return true;
            }
            let fiber_slots = i.iter().filter(|&&a| a >= self.n).count();
            match fiber_slots {
                0 => p.terms().all(|(m, _)| {
                    m.factors().iter().filter(|(v, _)| matches!(v, Var::Y(_))).map(|(_, e)| e).sum::<u32>() == 1
                }),
                1 => !p.depends_on(|v| matches!(v, Var::Y(_))),
                _ => false,
            }
        })
    }

    fn derivative_table(&self) -> BTreeMap<(usize, Vec<usize>), Vec<Poly>> {
        let d = self.dim();
        self.comps
            .iter()
            .map(|(key, p)| (key.clone(), (0..d).map(|c| p.derivative(Var::coord(c, self.n))).collect()))
            .collect()
    }

    fn by_value(&self) -> BTreeMap<usize, Vec<(&[usize], &Poly)>> {
        let mut m: BTreeMap<usize, Vec<(&[usize], &Poly)>> = BTreeMap::new();
        for ((b, i), p) in &self.comps {
            m.entry(*b).or_default().push((i.as_slice(), p));
        }
        m
    }
}

impl fmt::Display for TVForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (j, ((b, i), p)) in self.comps.iter().enumerate() {
            if j > 0 {
                writeln!(f)?;
            }
            let idx: Vec<String> = i.iter().map(|&a| Var::coord(a, self.n).to_string()).collect();
            write!(f, "[{}; {}] {}", Var::coord(*b, self.n), idx.join(" "), p)?;
        }
        Ok(())
    }
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// `[φ, ψ]` of an `r`-form and an `s`-form, componentwise
/// `(1/(r+s)!) Σ_π sgn π T(a_π)` with the four-term expression `T`.
/// Terms are accumulated over shuffles, each contributing `r!s!/(r+s)!`.
pub fn fn_bracket(phi: &TVForm, psi: &TVForm) -> Result<TVForm> {
    if (phi.n, phi.k) != (psi.n, psi.k) {
        return Err(Error::ChartMismatch(format!(
            "chart ({}, {}) vs ({}, {})",
            phi.n, phi.k, psi.n, psi.k
        )));
    }
    let (n, k, r, s) = (phi.n, phi.k, phi.r, psi.r);
    let dim = n + k;
    let mut out = TVForm::zero(n, k, r + s);
    if r + s > dim {
        return Ok(out);
    }
    let w = Rational::new(1.into(), binomial(r + s, r).into());
    let rs_sign: i64 = if (r * s) % 2 == 0 { 1 } else { -1 };
    let dphi = phi.derivative_table();
    let dpsi = psi.derivative_table();

    // φ^c_A ∂_c ψ^b_B and -(-1)^{rs} ψ^c_B ∂_c φ^b_A.
    let lie_like = |first: &TVForm, dsecond: &BTreeMap<(usize, Vec<usize>), Vec<Poly>>, coef: Rational, out: &mut TVForm| {
        for ((c, a), p) in &first.comps {
            for ((b, bi), dq) in dsecond {
                if !disjoint(a, bi) || dq[*c].is_zero() {
                    continue;
                }
                let joined: Vec<usize> = a.iter().chain(bi.iter()).copied().collect();
                let (sorted, sg) = sort_signed(&joined).expect("disjoint");
                out.accumulate(*b, sorted, &(p * &dq[*c]), &(&coef * Rational::from_integer(sg.into())));
            }
        }
    };
    lie_like(phi, &dpsi, w.clone(), &mut out);
    lie_like(psi, &dphi, -&w * Rational::from_integer(rs_sign.into()), &mut out);

    // -r φ^b_{A'c} ∂_d ψ^c_B and +(-1)^{rs} s ψ^b_{B'c} ∂_d φ^c_A, laid out as
    // (outer free indices, d, inner indices).
    let contraction = |outer: &TVForm,
                           inner: &TVForm,
                           dinner: &BTreeMap<(usize, Vec<usize>), Vec<Poly>>,
                           coef: Rational,
                           out: &mut TVForm| {
        let inner_by_value = inner.by_value();
        for ((b, full), p) in &outer.comps {
            for (pos, &c) in full.iter().enumerate() {
                let Some(list) = inner_by_value.get(&c) else { continue };
                let rest: Vec<usize> = full.iter().copied().filter(|&x| x != c).collect();
                let move_sign: i64 = if (full.len() - 1 - pos) % 2 == 0 { 1 } else { -1 };
                for (ib, _) in list {
                    if !disjoint(&rest, ib) {
                        continue;
                    }
                    let dq = &dinner[&(c, ib.to_vec())];
                    for d in 0..dim {
                        if dq[d].is_zero() || rest.contains(&d) || ib.contains(&d) {
                            continue;
                        }
                        let seq: Vec<usize> = rest.iter().copied().chain([d]).chain(ib.iter().copied()).collect();
                        let (sorted, sg) = sort_signed(&seq).expect("distinct");
                        let c2 = &coef * Rational::from_integer((sg * move_sign).into());
                        out.accumulate(*b, sorted, &(p * &dq[d]), &c2);
                    }
                }
            }
        }
    };
    if r > 0 {
        contraction(phi, psi, &dpsi, -w.clone(), &mut out);
    }
    if s > 0 {
        contraction(psi, phi, &dphi, &w * Rational::from_integer(rs_sign.into()), &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
