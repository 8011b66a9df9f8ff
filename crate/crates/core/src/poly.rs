//! Dense-exponent multivariate monomials and sparse polynomials over an
//! exact field.

use std::fmt::Write as _;

use crate::error::GbError;
use crate::field::Field;
use crate::order::TermOrder;

/// Exponent vector indexed by ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
        }
    }

    pub fn var(n_vars: usize, v: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[v] = 1;
        Monomial { exps }
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True iff only variables from `keep` occur.
    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.exps.iter().enumerate().all(|(v, &e)| e == 0 || keep[v])
    }

    /// Extends with zero exponents for `extra` new trailing variables.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }
}

/// The ambient ring: named variables plus the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    vars: Vec<String>,
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(vars: Vec<String>, field: F) -> Self {
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), vars.len(), "variable names must be unique");
        PolyRing { vars, field }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.vars[v]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|n| n == name)
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { terms: Vec::new() }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        self.term(m, self.field.one())
    }

    pub fn var_poly(&self, v: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.n_vars(), v))
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        assert_eq!(m.n_vars(), self.n_vars());
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        let mut sorted = terms;
        sorted.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(sorted.len());
        for (m, c) in sorted {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }
}

/// A polynomial: terms sorted descending by the intrinsic exponent order,
/// no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among terms; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn leading_term<'a>(&'a self, order: &TermOrder) -> Option<(&'a Monomial, &'a F::Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn add(&self, ring: &PolyRing<F>, other: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ring.from_terms(terms)
    }

    pub fn sub(&self, ring: &PolyRing<F>, other: &Polynomial<F>) -> Polynomial<F> {
        self.add(ring, &other.neg(ring))
    }

    pub fn neg(&self, ring: &PolyRing<F>) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.field().neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &PolyRing<F>, c: &F::Elem) -> Polynomial<F> {
        if ring.field().is_zero(c) {
            return ring.zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), ring.field().mul(k, c)))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, ring: &PolyRing<F>, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        if ring.field().is_zero(c) {
            return ring.zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), ring.field().mul(tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, ring: &PolyRing<F>, other: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                terms.push((am.mul(bm), ring.field().mul(ac, bc)));
            }
        }
        ring.from_terms(terms)
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, ring: &PolyRing<F>, order: &TermOrder) -> Polynomial<F> {
        match self.leading_term(order) {
            None => ring.zero(),
            Some((_, c)) => {
                if ring.field().is_one(c) {
                    self.clone()
                } else {
                    let inv = ring.field().inv(c);
                    self.scale(ring, &inv)
                }
            }
        }
    }

    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_on(keep))
    }

    /// True iff the polynomial is `m1 - m2` up to sign (or a single monomial,
    /// or zero) with unit coefficients.
    pub fn is_pure_difference(&self, ring: &PolyRing<F>) -> bool {
        let f = ring.field();
        let unit = |c: &F::Elem| f.is_one(c) || f.is_one(&f.neg(c));
        match self.terms.len() {
            0 | 1 => self.terms.iter().all(|(_, c)| unit(c)),
            2 => {
                unit(&self.terms[0].1)
                    && self.terms[1].1 == f.neg(&self.terms[0].1)
            }
            _ => false,
        }
    }

    /// Maps into a ring with `extra` additional trailing variables.
    pub fn extended(&self, extra: usize) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(extra), c.clone()))
                .collect(),
        }
    }

    /// Restricts to a smaller ring given by `keep[v]`; caller guarantees the
    /// support fits.
    pub fn restricted(&self, keep: &[bool]) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(m.supported_on(keep));
                    let exps = m
                        .exps()
                        .iter()
                        .zip(keep)
                        .filter(|(_, &k)| k)
                        .map(|(&e, _)| e)
                        .collect();
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Text form, terms descending under `order`.
    pub fn to_text(&self, ring: &PolyRing<F>, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<&(Monomial, F::Elem)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let (negative, mag) = ring.field().render(c);
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff_is_one = mag == "1";
            if m.is_one() {
                out.push_str(&mag);
                continue;
            }
            if !coeff_is_one {
                let _ = write!(out, "{mag}*");
            }
            let mut first = true;
            for v in 0..m.n_vars() {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(ring.var_name(v));
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }
}

/// Parses the fixture syntax: terms like `x[1,2]*x[3,1] - 2*x[1,1]^2`,
/// variables by their ring names, integer coefficients.
pub fn parse_poly<F: Field>(ring: &PolyRing<F>, text: &str) -> Result<Polynomial<F>, GbError> {
    let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(GbError::Parse("empty polynomial".into()));
    }
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if !first || rest.starts_with(['+', '-']) {
            let (s, r) = rest.split_at(1);
            match s {
                "+" => sign = 1,
                "-" => sign = -1,
                _ => return Err(GbError::Parse(format!("expected sign at `{rest}`"))),
            }
            rest = r.trim_start();
        }
        first = false;
        let (m, c, r) = parse_term(ring, rest)?;
        terms.push((m, ring.field().from_i64(sign * c)));
        rest = r.trim_start();
    }
    Ok(ring.from_terms(terms))
}

fn parse_term<'a, F: Field>(
    ring: &PolyRing<F>,
    mut rest: &'a str,
) -> Result<(Monomial, i64, &'a str), GbError> {
    let mut exps = vec![0u32; ring.n_vars()];
    let mut coeff = 1i64;
    loop {
        rest = rest.trim_start();
        if let Some(stripped) = rest.strip_prefix(|ch: char| ch.is_ascii_digit()) {
            let digits_len = rest.len() - stripped.trim_start_matches(|ch: char| ch.is_ascii_digit()).len();
            let (num, r) = rest.split_at(digits_len);
            coeff = coeff
                .checked_mul(
                    num.parse::<i64>()
                        .map_err(|_| GbError::Parse(format!("bad integer `{num}`")))?,
                )
                .ok_or_else(|| GbError::Parse("coefficient overflow".into()))?;
            rest = r;
        } else {
            // longest variable name match
            let var = ring
                .var_names()
                .iter()
                .enumerate()
                .filter(|(_, name)| rest.starts_with(name.as_str()))
                .max_by_key(|(_, name)| name.len());
            let Some((v, name)) = var else {
                return Err(GbError::Parse(format!("expected a term at `{rest}`")));
            };
            rest = &rest[name.len()..];
            let mut e = 1u32;
            if let Some(r) = rest.strip_prefix('^') {
                let digits_len = r.len() - r.trim_start_matches(|ch: char| ch.is_ascii_digit()).len();
                if digits_len == 0 {
                    return Err(GbError::Parse(format!("missing exponent at `{rest}`")));
                }
                let (num, r2) = r.split_at(digits_len);
                e = num
                    .parse()
                    .map_err(|_| GbError::Parse(format!("bad exponent `{num}`")))?;
                rest = r2;
            }
            exps[v] += e;
        }
        let trimmed = rest.trim_start();
        if let Some(r) = trimmed.strip_prefix('*') {
            rest = r;
        } else {
            rest = trimmed;
            break;
        }
    }
    Ok((Monomial::new(exps), coeff, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::new(
            vec!["x[1,1]".into(), "x[1,2]".into(), "x[2,1]".into(), "x[2,2]".into()],
            PrimeField::new(32003).unwrap(),
        )
    }

    #[test]
    fn arithmetic_and_normalization() {
        let r = ring();
        let x11 = r.var_poly(0);
        let x22 = r.var_poly(3);
        let p = x11.mul(&r, &x22);
        let q = p.sub(&r, &p);
        assert!(q.is_zero());
        let s = p.add(&r, &p);
        assert_eq!(s.n_terms(), 1);
        assert_eq!(s.terms()[0].1, 2);
    }

    #[test]
    fn parse_round_trip() {
        let r = ring();
        let lex = TermOrder::lex(4);
        let p = parse_poly(&r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").unwrap();
        assert_eq!(p.n_terms(), 2);
        assert!(p.is_pure_difference(&r));
        let text = p.to_text(&r, &lex);
        assert_eq!(text, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        let q = parse_poly(&r, &text).unwrap();
        assert_eq!(p, q);
        let c = parse_poly(&r, "3*x[1,1]^2 + 1").unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(c.to_text(&r, &lex), "3*x[1,1]^2 + 1");
    }

    #[test]
    fn parse_rejects_garbage() {
        let r = ring();
        assert!(parse_poly(&r, "x[9,9]").is_err());
        assert!(parse_poly(&r, "x[1,1] +").is_err());
        assert!(parse_poly(&r, "").is_err());
    }
}
