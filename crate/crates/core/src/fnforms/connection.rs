use super::{fn_bracket, PolyMat, TVForm};
use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::poly::{Poly, Var};

/// A connection `dx^a ⊗ (∂_a + γ_a^i ∂_{y_i})` of the trivial bundle
/// `R^n × R^k → R^n`. Linear connections also keep their coefficient tables
/// `Γ_a` with `γ_a^i = Γ_a{}^i{}_j y^j` and covariant differential `∂ - Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    form: TVForm,
    tables: Option<Vec<PolyMat>>,
}

impl Connection {
    /// From `coeffs[a][i] = γ_a^i(x, y)`.
    pub fn new(n: usize, k: usize, coeffs: Vec<Vec<Poly>>) -> Result<Self> {
        if coeffs.len() != n || coeffs.iter().any(|c| c.len() != k) {
            return Err(Error::ShapeMismatch(format!("connection needs {n}x{k} coefficients")));
        }
        let mut form = TVForm::zero(n, k, 1);
        for (a, row) in coeffs.into_iter().enumerate() {
            form.set(a, &[a], Poly::one());
            for (i, p) in row.into_iter().enumerate() {
                form.set(n + i, &[a], p);
            }
        }
        Ok(Connection { form, tables: None })
    }

    /// Linear connection from `k × k` tables `Γ_a` with entries in `x` only.
    pub fn linear(n: usize, k: usize, tables: Vec<PolyMat>) -> Result<Self> {
        if tables.len() != n || tables.iter().any(|t| t.rows() != k || t.cols() != k) {
            return Err(Error::ShapeMismatch(format!("linear connection needs {n} tables of size {k}x{k}")));
        }
        if tables.iter().any(PolyMat::depends_on_fiber) {
            return Err(Error::ShapeMismatch("linear coefficients must not depend on fiber coordinates".into()));
        }
        let coeffs = tables
            .iter()
            .map(|t| {
                (0..k)
                    .map(|i| {
                        let mut acc = Poly::zero();
                        for j in 0..k {
                            acc.add_assign_ref(&(&t[(i, j)] * &Poly::var(Var::Y(j as u8 + 1))));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut c = Connection::new(n, k, coeffs)?;
        c.tables = Some(tables);
        Ok(c)
    }

    /// Reads a degree-1 form as a connection, checking the identity base block.
    pub fn from_form(form: TVForm) -> Result<Self> {
        let (n, k) = (form.base_dim(), form.fiber_dim());
        if form.degree() != 1 {
            return Err(Error::ShapeMismatch("a connection is a 1-form".into()));
        }
        for a in 0..n + k {
            for b in 0..n {
                let want = if a == b { Poly::one() } else { Poly::zero() };
                if form.get(b, &[a]) != want {
                    return Err(Error::ShapeMismatch("not projectable over the identity".into()));
                }
            }
            if a >= n && (n..n + k).any(|i| !form.get(i, &[a]).is_zero()) {
                return Err(Error::ShapeMismatch("connection has fiber form components".into()));
            }
        }
        let coeffs = (0..n).map(|a| (0..k).map(|i| form.get(n + i, &[a])).collect()).collect();
        Connection::new(n, k, coeffs)
    }

    /// The trivial flat connection of the product chart.
    pub fn flat(n: usize, k: usize) -> Self {
        Connection::linear(n, k, vec![PolyMat::zeros(k, k); n]).expect("zero tables are valid")
    }

    pub fn form(&self) -> &TVForm {
        &self.form
    }

    pub fn base_dim(&self) -> usize {
        self.form.base_dim()
    }

    pub fn fiber_dim(&self) -> usize {
        self.form.fiber_dim()
    }

    /// `γ_a^i`.
    pub fn coefficient(&self, a: usize, i: usize) -> Poly {
        self.form.get(self.base_dim() + i, &[a])
    }

    pub fn tables(&self) -> Option<&[PolyMat]> {
        self.tables.as_deref()
    }

    pub fn is_linear(&self) -> bool {
        self.tables.is_some()
    }
}

/// `R[γ] = -[γ, γ]`.
pub fn curvature(gamma: &Connection) -> TVForm {
    fn_bracket(&gamma.form, &gamma.form).expect("same chart").scale(&-Rational::from_integer(1.into()))
}

/// Matrix `R_ab{}^i{}_j` of a curvature form that is linear in the fiber.
pub fn curvature_matrix(r: &TVForm, a: usize, b: usize) -> PolyMat {
    let (n, k) = (r.base_dim(), r.fiber_dim());
    let at_zero = |p: &Poly| (1..=k).fold(p.clone(), |q, j| q.substitute(Var::Y(j as u8), &Poly::zero()));
    PolyMat::from_fn(k, k, |i, j| at_zero(&r.get(n + i, &[a, b]).derivative(Var::Y(j as u8 + 1))))
}

/// `∇_a s^i = ∂_a s^i - γ_a^i ∘ s` for a section `y = s(x)`.
pub fn covariant_differential(gamma: &Connection, s: &[Poly]) -> Result<Vec<Vec<Poly>>> {
    let (n, k) = (gamma.base_dim(), gamma.fiber_dim());
    if s.len() != k {
        return Err(Error::ShapeMismatch(format!("section has {} components, fiber has {k}", s.len())));
    }
    if s.iter().any(|p| p.depends_on(|v| matches!(v, Var::Y(_)))) {
        return Err(Error::ShapeMismatch("a section depends on base coordinates only".into()));
    }
    Ok((0..n)
        .map(|a| {
            (0..k)
                .map(|i| {
                    let mut g = gamma.coefficient(a, i);
                    for (j, sj) in s.iter().enumerate() {
                        g = g.substitute(Var::Y(j as u8 + 1), sj);
                    }
                    &s[i].derivative(Var::X(a as u8 + 1)) - &g
                })
                .collect()
        })
        .collect())
}

/// `Γ'_a = S Γ_a S⁻¹ + (∂_a S) S⁻¹` for `S` with constant nonzero determinant.
pub fn gauge_transform(gamma: &Connection, s: &PolyMat) -> Result<Connection> {
    let tables = gamma
        .tables()
        .ok_or_else(|| Error::ShapeMismatch("gauge transforms act on linear connections".into()))?;
    let (n, k) = (gamma.base_dim(), gamma.fiber_dim());
    if s.rows() != k || s.cols() != k {
        return Err(Error::ShapeMismatch(format!("gauge matrix must be {k}x{k}")));
    }
    if s.depends_on_fiber() {
        return Err(Error::ShapeMismatch("gauge matrix must depend on base coordinates only".into()));
    }
    let sinv = s.inverse_unimodular().ok_or(Error::NonConstantDeterminant)?;
    let new_tables = tables
        .iter()
        .enumerate()
        .map(|(a, g)| &(&(s * g) * &sinv) + &(&s.derivative(Var::X(a as u8 + 1)) * &sinv))
        .collect();
    Connection::linear(n, k, new_tables)
}

/// `α = γ - γ₀`, a basic vertical-valued 1-form.
pub fn decompose_alpha(gamma: &Connection, gamma0: &Connection) -> Result<TVForm> {
    gamma.form.sub(&gamma0.form)
}

/// `γ₀ + α`.
pub fn reconstruct(gamma0: &Connection, alpha: &TVForm) -> Result<Connection> {
    if !alpha.is_basic() || !alpha.is_vertical_valued() || alpha.degree() != 1 {
        return Err(Error::ShapeMismatch("α must be a basic vertical-valued 1-form".into()));
    }
    match gamma0.tables() {
        Some(t0) if alpha.is_linear() => {
            let (n, k) = (gamma0.base_dim(), gamma0.fiber_dim());
            let tables = (0..n)
                .map(|a| {
                    PolyMat::from_fn(k, k, |i, j| {
                        &t0[a][(i, j)] + &alpha.get(n + i, &[a]).derivative(Var::Y(j as u8 + 1))
                    })
                })
                .collect();
            Connection::linear(n, k, tables)
        }
        _ => Connection::from_form(gamma0.form.add(alpha)?),
    }
}
