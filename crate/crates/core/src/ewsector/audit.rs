//! Conformal-weight bookkeeping: each Lagrangian piece is a product of
//! scaled factors, and an unscaled Lagrangian needs every product at `L⁰`
//! in natural units.

use std::fmt;

use serde::Serialize;

use crate::numeric::{rat, rat_int};
use crate::scales::{dim_power, dim_product, to_natural_units, Coupling, ScaleDim};

/// Scalings assigned to the matter fields and the mass parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldScales {
    pub psi: ScaleDim,
    pub phi: ScaleDim,
    pub m: ScaleDim,
}

impl Default for FieldScales {
    fn default() -> Self {
        FieldScales {
            psi: ScaleDim::length(rat(-3, 2)),
            phi: ScaleDim::length_int(-1),
            m: ScaleDim::length_int(-1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Factor {
    pub symbol: &'static str,
    pub dim: ScaleDim,
}

fn f(symbol: &'static str, dim: ScaleDim) -> Factor {
    Factor { symbol, dim }
}

/// One monomial piece of a Lagrangian term.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermDescriptor {
    pub name: &'static str,
    pub piece: &'static str,
    pub factors: Vec<Factor>,
}

impl TermDescriptor {
    /// Total dimension reduced to a power of length.
    pub fn total(&self) -> ScaleDim {
        ScaleDim::length(to_natural_units(&dim_product(self.factors.iter().map(|x| &x.dim))))
    }
}

fn metric_inv() -> ScaleDim {
    ScaleDim::length_int(-2)
}

fn volume() -> ScaleDim {
    ScaleDim::length_int(4)
}

/// `Θ̆` applied to an `r`-form: `L^{4-r}`.
fn breve(r: i64) -> ScaleDim {
    ScaleDim::length_int(4 - r)
}

fn d(name: &'static str, piece: &'static str, factors: Vec<Factor>) -> TermDescriptor {
    TermDescriptor { name, piece, factors }
}

/// Pieces of `ℓ_ψ`, `ℓ_φ`, `ℓ_X`, `ℓ_int`.
pub fn ew_term_descriptors(s: &FieldScales) -> Vec<TermDescriptor> {
    let one = ScaleDim::dimensionless;
    vec![
        d("l_psi", "kinetic", vec![f("Θ̆", breve(1)), f("ψ", s.psi.clone()), f("∇ψ", s.psi.clone())]),
        d(
            "l_phi",
            "kinetic",
            vec![f("g#", metric_inv()), f("∇φ̄", s.phi.clone()), f("∇φ", s.phi.clone()), f("det Θ", volume())],
        ),
        d(
            "l_phi",
            "mass",
            vec![
                f("λ", one()),
                f("m", s.m.clone()),
                f("m", s.m.clone()),
                f("φ̄", s.phi.clone()),
                f("φ", s.phi.clone()),
                f("det Θ", volume()),
            ],
        ),
        d(
            "l_phi",
            "quartic",
            vec![f("λ", one()), f("‖φ‖⁴", dim_power(&s.phi, &rat_int(4))), f("det Θ", volume())],
        ),
        d(
            "l_X",
            "curvature",
            vec![f("g#", metric_inv()), f("g#", metric_inv()), f("R̄", one()), f("R", one()), f("det Θ", volume())],
        ),
        d(
            "l_int",
            "yukawa",
            vec![f("ψ̄", s.psi.clone()), f("φ", s.phi.clone()), f("ψ", s.psi.clone()), f("det Θ", volume())],
        ),
    ]
}

/// Pieces of `ℓ_g`, `ℓ_em`, `ℓ_D`.
pub fn ecmd_term_descriptors(s: &FieldScales) -> Vec<TermDescriptor> {
    let one = ScaleDim::dimensionless;
    let field = ScaleDim::length_int(-2);
    vec![
        d(
            "l_g",
            "curvature",
            vec![
                f("1/𝔾", dim_power(&Coupling::Gravitational.dim(), &rat_int(-1))),
                f("Θ̆", breve(2)),
                f("R[Γ̃]", one()),
            ],
        ),
        d("l_em", "F²", vec![f("F", field.clone()), f("F", field.clone()), f("η", volume())]),
        d("l_em", "cross", vec![f("Θ̆", breve(2)), f("dY", one()), f("F", field)]),
        d("l_D", "kinetic", vec![f("Θ̆", breve(1)), f("ψ̄", s.psi.clone()), f("∇ψ", s.psi.clone())]),
        d(
            "l_D",
            "mass",
            vec![f("m", s.m.clone()), f("ψ̄", s.psi.clone()), f("ψ", s.psi.clone()), f("η", volume())],
        ),
    ]
}

/// `g^{ac} g^{bd} ∂_a G_b ∂_c G_d det Θ` with `G` unscaled.
pub fn dilaton_descriptor() -> TermDescriptor {
    let one = ScaleDim::dimensionless;
    d(
        "dilaton",
        "kinetic",
        vec![f("g#", metric_inv()), f("g#", metric_inv()), f("∂G", one()), f("∂G", one()), f("det Θ", volume())],
    )
}

/// Common dimension of all pieces of `name` (the first piece if they differ).
pub fn term_dim(descs: &[TermDescriptor], name: &str) -> ScaleDim {
    descs.iter().find(|x| x.name == name).map(TermDescriptor::total).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditEntry {
    pub term: String,
    pub dim: ScaleDim,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> Vec<&AuditEntry> {
        self.entries.iter().filter(|e| !e.ok).collect()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let dim = if e.dim.is_dimensionless() { "L^0".to_string() } else { e.dim.to_string() };
            writeln!(out, "{:<22} {:<8} {}", e.term, dim, if e.ok { "ok" } else { "MIS-SCALED" })?;
        }
        Ok(())
    }
}

/// Flags every piece whose total is not `L⁰`.
pub fn conformal_weight_audit(descs: &[TermDescriptor]) -> AuditReport {
    AuditReport {
        entries: descs
            .iter()
            .map(|x| {
                let dim = x.total();
                AuditEntry { term: format!("{}.{}", x.name, x.piece), ok: dim.is_dimensionless(), dim }
            })
            .collect(),
    }
}

/// Audit of the electroweak, ECMD and dilaton terms together.
pub fn full_audit(s: &FieldScales) -> AuditReport {
    let mut all = ew_term_descriptors(s);
    all.extend(ecmd_term_descriptors(s));
    all.push(dilaton_descriptor());
    conformal_weight_audit(&all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    #[test]
    fn default_scalings_are_balanced() {
        let r = full_audit(&FieldScales::default());
        assert_eq!(r.entries.len(), 12);
        assert!(r.all_ok(), "{r}");
    }

    #[test]
    fn potential_piece_sums_to_zero() {
        let s = FieldScales::default();
        let descs = ew_term_descriptors(&s);
        let quartic = descs.iter().find(|x| x.piece == "quartic").unwrap();
        let exps: Vec<Rational> = quartic.factors.iter().map(|x| x.dim.l.clone()).collect();
        assert_eq!(exps, vec![rat(0, 1), rat(-4, 1), rat(4, 1)]);
    }

    #[test]
    fn mis_scaled_spinor_is_flagged() {
        let s = FieldScales { psi: ScaleDim::length_int(-1), ..FieldScales::default() };
        let r = conformal_weight_audit(&ew_term_descriptors(&s));
        let bad: Vec<_> = r.failures().iter().map(|e| (e.term.clone(), e.dim.clone())).collect();
        assert!(bad.contains(&("l_psi.kinetic".to_string(), ScaleDim::length_int(1))));
        assert!(bad.iter().all(|(t, _)| t.starts_with("l_psi") || t.starts_with("l_int")));
    }

    #[test]
    fn gravitational_piece_uses_natural_units() {
        let descs = ecmd_term_descriptors(&FieldScales::default());
        let g = &descs[0];
        assert!(!dim_product(g.factors.iter().map(|x| &x.dim)).is_dimensionless());
        assert!(g.total().is_dimensionless());
    }
}
