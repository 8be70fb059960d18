//! Seeded random inputs for property checks and demonstrations.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{PolyMat, TVForm};
use crate::numeric::Rational;
use crate::poly::{Poly, Var};

/// Small nonzero rational with denominator 1 or 2.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    Rational::new(num.into(), (*[1i64, 1, 2].choose(rng).expect("nonempty")).into())
}

/// Polynomial in `vars` with at most `max_terms` terms of total degree `≤ max_deg`.
pub fn random_poly(rng: &mut impl Rng, vars: &[Var], max_terms: usize, max_deg: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let deg = rng.gen_range(0..=max_deg);
        let mut m = Poly::one();
        for _ in 0..deg {
            if let Some(v) = vars.choose(rng) {
                m = &m * &Poly::var(*v);
            }
        }
        p.add_assign_ref(&m.scale(&small_rational(rng)));
    }
    p
}

pub fn base_vars(n: usize) -> Vec<Var> {
    (1..=n as u8).map(Var::X).collect()
}

pub fn chart_vars(n: usize, k: usize) -> Vec<Var> {
    (0..n + k).map(|c| Var::coord(c, n)).collect()
}

/// Random `r`-form with up to `max_comps` nonzero components.
pub fn random_form(rng: &mut impl Rng, n: usize, k: usize, r: usize, max_comps: usize) -> TVForm {
    let dim = n + k;
    let vars = chart_vars(n, k);
    let mut f = TVForm::zero(n, k, r);
    if r > dim {
        return f;
    }
    for _ in 0..rng.gen_range(1..=max_comps.max(1)) {
        let b = rng.gen_range(0..dim);
        let mut idx: Vec<usize> = (0..dim).collect();
        idx.shuffle(rng);
        idx.truncate(r);
        f.set(b, &idx, random_poly(rng, &vars, 2, 2));
    }
    f
}

/// Random projectable `r`-form: base-valued part is a form on the base.
pub fn random_projectable(rng: &mut impl Rng, n: usize, k: usize, r: usize, max_comps: usize) -> TVForm {
    let dim = n + k;
    let mut f = TVForm::zero(n, k, r);
    for _ in 0..rng.gen_range(1..=max_comps.max(1)) {
        let base_valued = rng.gen_bool(0.5);
        let b = if base_valued { rng.gen_range(0..n) } else { rng.gen_range(n..dim) };
        let pool = if base_valued { n } else { dim };
        if r > pool {
            continue;
        }
        let mut idx: Vec<usize> = (0..pool).collect();
        idx.shuffle(rng);
        idx.truncate(r);
        let vars = if base_valued { base_vars(n) } else { chart_vars(n, k) };
        f.set(b, &idx, random_poly(rng, &vars, 2, 2));
    }
    f
}

/// Random linear projectable `r`-form.
pub fn random_linear_form(rng: &mut impl Rng, n: usize, k: usize, r: usize, max_comps: usize) -> TVForm {
    let dim = n + k;
    let xs = base_vars(n);
    let mut f = TVForm::zero(n, k, r);
    for _ in 0..rng.gen_range(1..=max_comps.max(1)) {
        let kind = rng.gen_range(0..3);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(rng);
        match kind {
            0 if r <= n => {
                idx.truncate(r);
                f.set(rng.gen_range(0..n), &idx, random_poly(rng, &xs, 2, 2));
            }
            1 if r <= n => {
                idx.truncate(r);
                let y = Poly::var(Var::Y(rng.gen_range(1..=k as u8)));
                f.set(rng.gen_range(n..dim), &idx, &random_poly(rng, &xs, 2, 2) * &y);
            }
            2 if r >= 1 && r - 1 <= n => {
                idx.truncate(r - 1);
                idx.push(rng.gen_range(n..dim));
                f.set(rng.gen_range(n..dim), &idx, random_poly(rng, &xs, 2, 2));
            }
            _ => {}
        }
    }
    f
}

/// `n` random `k × k` coefficient tables in the base coordinates.
pub fn random_linear_tables(rng: &mut impl Rng, n: usize, k: usize) -> Vec<PolyMat> {
    let xs = base_vars(n);
    (0..n)
        .map(|_| {
            PolyMat::from_fn(k, k, |_, _| {
                if rng.gen_bool(0.6) {
                    random_poly(rng, &xs, 2, 2)
                } else {
                    Poly::zero()
                }
            })
        })
        .collect()
}

/// Product of elementary polynomial matrices and a constant diagonal, so the
/// determinant is a nonzero constant.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, k: usize) -> PolyMat {
    let xs = base_vars(n);
    let diag = PolyMat::from_fn(k, k, |i, j| {
        if i == j {
            Poly::constant(small_rational(rng))
        } else {
            Poly::zero()
        }
    });
    let mut s = diag;
    if k > 1 {
        for _ in 0..2 {
            let i = rng.gen_range(0..k);
            let j = (i + rng.gen_range(1..k)) % k;
            let mut e = PolyMat::identity(k);
            e[(i, j)] = random_poly(rng, &xs, 2, 1);
            s = &s * &e;
        }
    }
    s
}

