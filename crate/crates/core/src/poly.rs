//! Sparse multivariate polynomials over a finite field, keyed by exponent
//! vectors. The term order is supplied externally (see [`crate::order`]).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Gf};

/// Exponent vector of a monomial; length equals the ambient variable count.
pub type Exps = Vec<u32>;

/// Sparse polynomial: exponent vector -> nonzero coefficient.
///
/// Stored in a BTreeMap so iteration order (plain lexicographic on exponent
/// vectors) is deterministic; the *term order* used for leading terms is
/// always passed in explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Exps, Gf>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Gf, nvars: usize) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(Gf::ONE, nvars)
    }

    pub fn monomial(e: Exps, c: Gf) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| e.len())
    }

    pub fn coeff(&self, e: &Exps) -> Gf {
        self.terms.get(e).copied().unwrap_or(Gf::ZERO)
    }

    /// Total degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, field: &FieldSpec, e: Exps, c: Gf) {
        if c.is_zero() {
            return;
        }
        let cur = self.coeff(&e);
        let s = field.add(cur, c);
        if s.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, field: &FieldSpec, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(field, e.clone(), c);
        }
        out
    }

    pub fn sub(&self, field: &FieldSpec, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(field, e.clone(), field.neg(c));
        }
        out
    }

    pub fn scale(&self, field: &FieldSpec, c: Gf) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, &v)| (e.clone(), field.mul(v, c)))
                .collect(),
        }
    }

    /// Multiply by c * X^shift.
    pub fn mul_term(&self, field: &FieldSpec, shift: &Exps, c: Gf) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, &v)| {
                    let ne: Exps = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                    (ne, field.mul(v, c))
                })
                .collect(),
        }
    }

    pub fn mul(&self, field: &FieldSpec, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e, &c) in &other.terms {
            let part = self.mul_term(field, e, c);
            out = out.add(field, &part);
        }
        out
    }

    /// Evaluate at a point (one coordinate per variable).
    pub fn eval(&self, field: &FieldSpec, point: &[Gf]) -> Result<Gf> {
        let mut acc = Gf::ZERO;
        for (e, &c) in &self.terms {
            if e.len() != point.len() {
                return Err(Error::DimensionMismatch(format!(
                    "point has {} coordinates, monomial has {} variables",
                    point.len(),
                    e.len()
                )));
            }
            let mut t = c;
            for (&u, &a) in e.iter().zip(point) {
                if u > 0 {
                    t = field.mul(t, field.pow(a, u as u64));
                }
            }
            acc = field.add(acc, t);
        }
        Ok(acc)
    }

    /// Formal derivative with respect to variable `i`; exponents act as
    /// field scalars reduced mod p.
    pub fn derivative(&self, field: &FieldSpec, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, &c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let k = e[i] as u64 % field.p as u64;
            if k == 0 {
                continue;
            }
            // k as a field scalar: k * 1
            let mut scalar = Gf::ZERO;
            for _ in 0..k {
                scalar = field.add(scalar, Gf::ONE);
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(field, ne, field.mul(c, scalar));
        }
        out
    }

    /// Render in the ASCII grammar: terms joined by `+`, each
    /// `<code>*V1^e1*V2^e2...` with unit coefficients omitted.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        // display highest plain-lex exponent first for readability
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            if c.0 != 1 || e.iter().all(|&x| x == 0) {
                factors.push(format!("{}", c.0));
            }
            for (name, &x) in names.iter().zip(e) {
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{}^{}", name, x)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// Parse the ASCII polynomial grammar.
///
/// Terms joined by `+`; a term is `<coef>*V1^e1*V2^e2...` where `<coef>` is
/// an integer element code (omitted when 1). Whitespace is insignificant.
pub fn parse_poly(field: &FieldSpec, names: &[String], text: &str) -> Result<Poly> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let nvars = names.len();
    let mut poly = Poly::zero();
    for term in cleaned.split('+') {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in '{}'", text)));
        }
        let mut coeff = Gf::ONE;
        let mut exps: Exps = vec![0; nvars];
        for (k, factor) in term.split('*').enumerate() {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in '{}'", term)));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                if k != 0 {
                    return Err(Error::Parse(format!(
                        "coefficient must come first in '{}'",
                        term
                    )));
                }
                let code: u32 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{}'", factor)))?;
                coeff = field.element(code)?;
            } else {
                let (var, exp) = match factor.find('^') {
                    Some(i) => {
                        let e: u32 = factor[i + 1..]
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in '{}'", factor)))?;
                        (&factor[..i], e)
                    }
                    None => (factor, 1),
                };
                let idx = names
                    .iter()
                    .position(|n| n == var)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{}'", var)))?;
                exps[idx] += exp;
            }
        }
        poly.add_term(field, exps, coeff);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{gf16, gf8};

    fn names() -> Vec<String> {
        vec!["X".into(), "Y".into()]
    }

    #[test]
    fn parses_curve_equation() {
        let f = gf16();
        let p = parse_poly(&f, &names(), "X^5 + Y^4 + Y").unwrap();
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.coeff(&vec![5, 0]), Gf::ONE);
        assert_eq!(p.coeff(&vec![0, 4]), Gf::ONE);
        assert_eq!(p.coeff(&vec![0, 1]), Gf::ONE);
    }

    #[test]
    fn parses_coefficient_term() {
        let f = gf8();
        let p = parse_poly(&f, &names(), "6*X*Y^2").unwrap();
        assert_eq!(p.coeff(&vec![1, 2]), Gf(6));
    }

    #[test]
    fn parse_render_round_trip() {
        let f = gf16();
        let txt = "X^2*Y + 13*X^3 + 12*Y^2 + 3*X*Y + 6*Y + 14*X";
        let p = parse_poly(&f, &names(), txt).unwrap();
        let q = parse_poly(&f, &names(), &p.render(&names())).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_unknown_variable() {
        let f = gf16();
        assert!(parse_poly(&f, &names(), "Z^2").is_err());
    }

    #[test]
    fn char2_terms_cancel() {
        let f = gf16();
        let p = parse_poly(&f, &names(), "X + X").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn derivative_in_char_two() {
        let f = gf16();
        // d/dX (X^2) = 0 in char 2
        let p = parse_poly(&f, &names(), "X^2").unwrap();
        assert!(p.derivative(&f, 0).is_zero());
        // d/dY (Y^2 + Y) = 1
        let q = parse_poly(&f, &names(), "Y^2 + Y").unwrap();
        assert_eq!(q.derivative(&f, 1), Poly::one(2));
    }

    #[test]
    fn eval_curve_at_point() {
        let f = gf16();
        let curve = parse_poly(&f, &names(), "X^5 + Y^4 + Y").unwrap();
        // (beta, beta^6) = codes (2, 12) is on the Hermitian curve
        assert_eq!(curve.eval(&f, &[Gf(2), Gf(12)]).unwrap(), Gf::ZERO);
        assert_eq!(Poly::one(2).eval(&f, &[Gf(5), Gf(7)]).unwrap(), Gf::ONE);
    }
}
