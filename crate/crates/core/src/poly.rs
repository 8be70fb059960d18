//! Sparse multivariate polynomials with exact rational coefficients over the
//! chart variables `x1..xn` (base) and `y1..yk` (fiber).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{format_rational, parse_rational, rational_to_f64, Rational};

/// A chart variable; indices are 1-based as in `x1`, `y2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u8),
    Y(u8),
}

impl Var {
    /// Chart coordinate `c` (0-based) on a chart with `n` base directions.
    pub fn coord(c: usize, n: usize) -> Var {
        if c < n {
            Var::X((c + 1) as u8)
        } else {
            Var::Y((c - n + 1) as u8)
        }
    }

    /// Inverse of [`Var::coord`].
    pub fn chart_index(self, n: usize) -> usize {
        match self {
            Var::X(i) => i as usize - 1,
            Var::Y(i) => n + i as usize - 1,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Sorted variable/exponent pairs with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            let (a, b) = (self.0[i], o.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        Monomial(out)
    }

    /// Lowers the exponent of `v` by one; `None` if `v` is absent.
    fn lower(&self, v: Var) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(w, _)| *w == v)?;
        let e = self.0[pos].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some((e, Monomial(out)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn depends_on(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|(v, _)| pred(*v)))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += s * o`.
    pub fn add_scaled(&mut self, o: &Poly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn scale_i64(&self, s: i64) -> Poly {
        self.scale(&Rational::from_integer(s.into()))
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(v) {
                out.add_term(lowered, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Replaces `v` by `p` everywhere.
    pub fn substitute(&self, v: Var, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial(m.0.iter().copied().filter(|(w, _)| *w != v).collect());
            let t = Poly::term(c.clone(), rest);
            out.add_assign_ref(&(&t * &p.pow(e)));
        }
        out
    }

    pub fn eval(&self, at: impl Fn(Var) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                t *= num_traits::pow(at(*v), *e as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, at: impl Fn(Var) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().fold(rational_to_f64(c), |t, (v, e)| t * at(*v).powi(*e as i32))
            })
            .sum()
    }

    /// Parses literals such as `"3/2 x1^2 y1 - x2"`.
    pub fn parse(s: &str) -> Result<Poly> {
        Parser { src: s, chars: s.char_indices().peekable() }.parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("polynomial {:?}: {what}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace() || *c == '*').is_some() {}
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
        }
        s
    }

    fn parse(mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        self.skip_ws();
        if self.chars.peek().is_none() {
            return Err(self.err("empty"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let Some(&(_, c)) = self.chars.peek() else { break };
            let mut sign = Rational::one();
            if c == '+' || c == '-' {
                self.chars.next();
                if c == '-' {
                    sign = -sign;
                }
            } else if !first {
                return Err(self.err("expected + or -"));
            }
            first = false;
            let (coef, mono) = self.term()?;
            out.add_term(mono, coef * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        self.skip_ws();
        let mut coef = Rational::one();
        let mut saw_any = false;
        if matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            let n = self.digits();
            let mut lit = n;
            if self.chars.next_if(|(_, c)| *c == '/').is_some() {
                let d = self.digits();
                if d.is_empty() {
                    return Err(self.err("missing denominator"));
                }
                lit = format!("{lit}/{d}");
            }
            coef = parse_rational(&lit)?;
            saw_any = true;
        }
        let mut mono = Monomial::one();
        loop {
            self.skip_ws();
            let Some(&(_, c)) = self.chars.peek() else { break };
            if c != 'x' && c != 'y' {
                break;
            }
            self.chars.next();
            let idx = self.digits();
            let idx: u8 = idx.parse().map_err(|_| self.err("bad variable index"))?;
            if idx == 0 {
                return Err(self.err("variable indices start at 1"));
            }
            let v = if c == 'x' { Var::X(idx) } else { Var::Y(idx) };
            let mut e = 1u32;
            if self.chars.next_if(|(_, c)| *c == '^').is_some() {
                e = self.digits().parse().map_err(|_| self.err("bad exponent"))?;
            }
            mono = mono.mul(&Monomial::var(v, e));
            saw_any = true;
        }
        if !saw_any {
            return Err(self.err("expected a term"));
        }
        Ok((coef, mono))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join(" "))?;
            } else {
                write!(f, "{} {}", format_rational(&a), vars.join(" "))?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly {
                (&self).$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn literal_round_trip() {
        for s in ["3/2 x1^2 y1 - x2", "0", "-7/3", "x1 y2 + y2^3 - 1/2", "-x1"] {
            let q = p(s);
            assert_eq!(p(&q.to_string()), q, "{s}");
        }
        assert_eq!(p("3/2 x1^2 y1 - x2").to_string(), "3/2 x1^2 y1 - x2");
        assert_eq!(p("2*x1*x1"), p("2 x1^2"));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "x", "x0", "3/ x1", "x1 ^", "x1 x2 )"] {
            assert!(Poly::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn derivative_and_substitution() {
        let f = p("x1^3 y1 - 2 x1 x2 + 5");
        assert_eq!(f.derivative(Var::X(1)), p("3 x1^2 y1 - 2 x2"));
        assert_eq!(f.derivative(Var::Y(2)), Poly::zero());
        let g = f.substitute(Var::X(1), &p("x2 + 1"));
        assert_eq!(g, p("x2^3 y1 + 3 x2^2 y1 + 3 x2 y1 + y1 - 2 x2^2 - 2 x2 + 5"));
    }

    #[test]
    fn evaluation_exact_and_float() {
        let f = p("1/2 x1^2 - y1");
        let at = |v: Var| match v {
            Var::X(_) => rat(3, 1),
            Var::Y(_) => rat(1, 4),
        };
        assert_eq!(f.eval(at), rat(17, 4));
        let fl = f.eval_f64(|v| if matches!(v, Var::X(_)) { 3.0 } else { 0.25 });
        assert!((fl - 4.25).abs() < 1e-15);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let f = &p("x1 + y1") - &p("x1");
        assert_eq!(f.num_terms(), 1);
        assert!((&f - &f).is_zero());
    }
}
