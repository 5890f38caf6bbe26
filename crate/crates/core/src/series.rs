//! Truncated Macaulay inverse systems: window-bounded tables standing in
//! for series in the inverse variables, the contraction module action,
//! point generators h_P, syndrome series, and purely positive parts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Gf};
use crate::poly::{Exps, Poly};

/// A truncated series sum c_u X^{-u} with 0 <= u_i <= window_i.
/// Absent keys are zero. Equality is window-aware: comparing entries
/// outside a common window is refused rather than silently truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSeries {
    pub window: Vec<u32>,
    pub coeffs: BTreeMap<Exps, Gf>,
}

impl InverseSeries {
    pub fn zero(window: Vec<u32>) -> InverseSeries {
        InverseSeries {
            window,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.window.len()
    }

    pub fn coeff(&self, u: &Exps) -> Gf {
        self.coeffs.get(u).copied().unwrap_or(Gf::ZERO)
    }

    pub fn set(&mut self, u: Exps, c: Gf) {
        debug_assert!(self.in_window(&u));
        if c.is_zero() {
            self.coeffs.remove(&u);
        } else {
            self.coeffs.insert(u, c);
        }
    }

    fn in_window(&self, u: &Exps) -> bool {
        u.iter().zip(&self.window).all(|(a, b)| a <= b)
    }

    /// Compare on the intersection of windows; error if either side holds a
    /// nonzero coefficient outside the common window.
    pub fn eq_windowed(&self, other: &InverseSeries) -> Result<bool> {
        let common: Vec<u32> = self
            .window
            .iter()
            .zip(&other.window)
            .map(|(&a, &b)| a.min(b))
            .collect();
        for (u, _) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if u.iter().zip(&common).any(|(a, b)| a > b) {
                return Err(Error::WindowExhausted(
                    u.iter().zip(&common).position(|(a, b)| a > b).unwrap(),
                ));
            }
        }
        let keys: std::collections::BTreeSet<&Exps> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        Ok(keys.into_iter().all(|u| self.coeff(u) == other.coeff(u)))
    }

    /// Debug dump: one `u_1 .. u_s : code` line per stored coefficient.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (u, c) in &self.coeffs {
            let idx: Vec<String> = u.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{} : {}\n", idx.join(" "), c.0));
        }
        out
    }
}

/// Contraction product f . g: the coefficient of X^{-r} in the result is
/// sum_m f_m g_{m+r}. The window shrinks by the degree of f in each
/// variable; a negative window is an error.
pub fn contract(field: &FieldSpec, f: &Poly, g: &InverseSeries) -> Result<InverseSeries> {
    let s = g.nvars();
    let mut window = Vec::with_capacity(s);
    for i in 0..s {
        let d = f.degree_in(i);
        if d > g.window[i] {
            return Err(Error::WindowExhausted(i));
        }
        window.push(g.window[i] - d);
    }
    let mut out = InverseSeries::zero(window.clone());
    // iterate stored coefficients of g and scatter into r = u - m
    for (u, &gc) in &g.coeffs {
        for (m, &fc) in &f.terms {
            if m.iter().zip(u).all(|(a, b)| a <= b) {
                let r: Exps = u.iter().zip(m).map(|(a, b)| a - b).collect();
                if r.iter().zip(&window).all(|(a, b)| a <= b) {
                    let cur = out.coeff(&r);
                    out.set(r, field.add(cur, field.mul(fc, gc)));
                }
            }
        }
    }
    Ok(out)
}

/// Generator of the inverse system of a point's maximal ideal, truncated:
/// the coefficient at u is the monomial value P^u (with 0^0 = 1 so the
/// constant term is 1).
pub fn h_point(field: &FieldSpec, point: &[Gf], window: &[u32]) -> InverseSeries {
    let mut out = InverseSeries::zero(window.to_vec());
    let mut u = vec![0u32; window.len()];
    loop {
        let mut v = Gf::ONE;
        for (&a, &e) in point.iter().zip(&u) {
            if e > 0 {
                v = field.mul(v, field.pow(a, e as u64));
            }
        }
        out.set(u.clone(), v);
        let mut i = 0;
        loop {
            if i == u.len() {
                return out;
            }
            u[i] += 1;
            if u[i] <= window[i] {
                break;
            }
            u[i] = 0;
            i += 1;
        }
    }
}

/// Truncated syndrome series of an error vector: sum of e_P h_P. The
/// coefficient at u is the syndrome E_u.
pub fn syndrome_series(
    field: &FieldSpec,
    error: &[(Vec<Gf>, Gf)],
    window: &[u32],
) -> InverseSeries {
    let mut out = InverseSeries::zero(window.to_vec());
    for (p, v) in error {
        if v.is_zero() {
            continue;
        }
        let h = h_point(field, p, window);
        for (u, c) in h.coeffs {
            let cur = out.coeff(&u);
            out.set(u, field.add(cur, field.mul(c, *v)));
        }
    }
    out
}

/// Truncated product of two series on the intersection window: exact there
/// because every contributing index stays inside both input windows.
pub fn series_product(
    field: &FieldSpec,
    f: &InverseSeries,
    g: &InverseSeries,
) -> InverseSeries {
    let window: Vec<u32> = f
        .window
        .iter()
        .zip(&g.window)
        .map(|(&a, &b)| a.min(b))
        .collect();
    let mut out = InverseSeries::zero(window.clone());
    for (a, &fc) in &f.coeffs {
        for (b, &gc) in &g.coeffs {
            let u: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if u.iter().zip(&window).all(|(x, y)| x <= y) {
                let cur = out.coeff(&u);
                out.set(u, field.add(cur, field.mul(fc, gc)));
            }
        }
    }
    out
}

/// The purely positive part of a polynomial-times-series product, with its
/// validity window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivePartPolynomial {
    pub poly: Poly,
    /// Coefficients at exponents >= this vector (componentwise) are complete
    /// sums; below it the truncated series may have dropped contributions.
    pub valid_from: Exps,
}

impl PositivePartPolynomial {
    pub fn is_fully_valid(&self) -> bool {
        self.valid_from.iter().all(|&x| x <= 1)
    }
}

/// (f g)_+ : terms of the Laurent product with every exponent nonnegative
/// and at least one strictly positive. Mixed terms are dropped by
/// construction. The coefficient at v is sum over m >= v of f_m g_{m-v}.
pub fn positive_part(
    field: &FieldSpec,
    f: &Poly,
    g: &InverseSeries,
) -> PositivePartPolynomial {
    let s = g.nvars();
    let mut poly = Poly::zero();
    for (m, &fc) in &f.terms {
        // u ranges over stored coefficients with u <= m (v = m - u >= 0)
        for (u, &gc) in &g.coeffs {
            if u.iter().zip(m).all(|(a, b)| a <= b) {
                let v: Exps = m.iter().zip(u).map(|(a, b)| a - b).collect();
                if v.iter().any(|&x| x > 0) {
                    poly.add_term(field, v, field.mul(fc, gc));
                }
            }
        }
    }
    // the sum at v is complete when m - v stays inside the window for every
    // monomial m of f, i.e. v_i >= deg_i(f) - window_i
    let valid_from: Exps = (0..s)
        .map(|i| f.degree_in(i).saturating_sub(g.window[i]).max(1))
        .collect();
    PositivePartPolynomial { poly, valid_from }
}

/// Truncated key equation: true iff every complete contraction coefficient
/// of f . syn lying outside the exempt region vanishes. `exempt(r)` mirrors
/// the congruence modulo a tail subspace W: coefficients at exempt r are
/// not required to vanish.
pub fn key_eq_check(
    field: &FieldSpec,
    f: &Poly,
    syn: &InverseSeries,
    exempt: &dyn Fn(&Exps) -> bool,
) -> Result<bool> {
    let c = contract(field, f, syn)?;
    let mut r = vec![0u32; c.nvars()];
    loop {
        if !exempt(&r) && !c.coeff(&r).is_zero() {
            return Ok(false);
        }
        let mut i = 0;
        loop {
            if i == r.len() {
                return Ok(true);
            }
            r[i] += 1;
            if r[i] <= c.window[i] {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{gf16, gf4, gf8};
    use crate::poly::parse_poly;

    #[test]
    fn contract_by_one_is_identity() {
        let f = gf8();
        let g = h_point(&f, &[Gf(3), Gf(5)], &[4, 4]);
        let c = contract(&f, &Poly::one(2), &g).unwrap();
        assert_eq!(c, g);
    }

    #[test]
    fn contract_scales_h_point() {
        // f . h_P = f(P) h_P on the shrunken window
        let field = gf16();
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let f = parse_poly(&field, &names, "X^2*Y + 3*X + 7").unwrap();
        let p = vec![Gf(2), Gf(12)];
        let h = h_point(&field, &p, &[8, 8]);
        let lhs = contract(&field, &f, &h).unwrap();
        let fp = f.eval(&field, &p).unwrap();
        let rhs_full = h_point(&field, &p, &[6, 7]);
        let mut rhs = InverseSeries::zero(vec![6, 7]);
        for (u, c) in rhs_full.coeffs {
            rhs.set(u, field.mul(c, fp));
        }
        assert!(lhs.eq_windowed(&rhs).unwrap());
    }

    #[test]
    fn contract_coefficient_at_zero_is_monomial_value() {
        let field = gf16();
        let p = vec![Gf(2), Gf(12)];
        let h = h_point(&field, &p, &[5, 5]);
        let m = Poly::monomial(vec![2, 3], Gf::ONE);
        let c = contract(&field, &m, &h).unwrap();
        let expect = field.mul(
            field.pow(Gf(2), 2),
            field.pow(Gf(12), 3),
        );
        assert_eq!(c.coeff(&vec![0, 0]), expect);
    }

    #[test]
    fn window_exhaustion_detected() {
        let field = gf8();
        let h = h_point(&field, &[Gf(1)], &[2]);
        let big = Poly::monomial(vec![3], Gf::ONE);
        assert!(matches!(
            contract(&field, &big, &h),
            Err(Error::WindowExhausted(0))
        ));
    }

    #[test]
    fn h_point_of_origin() {
        let field = gf8();
        let h = h_point(&field, &[Gf::ZERO, Gf::ZERO], &[3, 3]);
        assert_eq!(h.coeffs.len(), 1);
        assert_eq!(h.coeff(&vec![0, 0]), Gf::ONE);
    }

    #[test]
    fn h_point_factors_into_hyperplane_series() {
        // h_P = product of the univariate h_{L_i}, as truncated series
        let field = gf4();
        let p = vec![Gf(2), Gf(1)];
        let w = vec![3, 3];
        let h = h_point(&field, &p, &w);
        let mut l1 = InverseSeries::zero(w.clone());
        for j in 0..=3u32 {
            l1.set(vec![j, 0], field.pow(p[0], j as u64));
        }
        let mut l2 = InverseSeries::zero(w.clone());
        for j in 0..=3u32 {
            l2.set(vec![0, j], field.pow(p[1], j as u64));
        }
        let prod = series_product(&field, &l1, &l2);
        assert!(prod.eq_windowed(&h).unwrap());
        // spot value: coefficient at (2,3) = alpha^2
        assert_eq!(h.coeff(&vec![2, 3]), field.pow(Gf(2), 2));
    }

    #[test]
    fn syndrome_series_of_zero_error() {
        let field = gf8();
        let s = syndrome_series(&field, &[], &[4, 4]);
        assert!(s.coeffs.is_empty());
    }

    #[test]
    fn syndrome_series_linearity() {
        use rand::{Rng, SeedableRng};
        let field = gf8();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let pts: Vec<Vec<Gf>> = (0..3)
                .map(|_| vec![Gf(rng.gen_range(0..8)), Gf(rng.gen_range(0..8))])
                .collect();
            let v1: Vec<Gf> = (0..3).map(|_| Gf(rng.gen_range(0..8))).collect();
            let v2: Vec<Gf> = (0..3).map(|_| Gf(rng.gen_range(0..8))).collect();
            let e1: Vec<(Vec<Gf>, Gf)> = pts.iter().cloned().zip(v1.clone()).collect();
            let e2: Vec<(Vec<Gf>, Gf)> = pts.iter().cloned().zip(v2.clone()).collect();
            let esum: Vec<(Vec<Gf>, Gf)> = pts
                .iter()
                .cloned()
                .zip(v1.iter().zip(&v2).map(|(&a, &b)| field.add(a, b)))
                .collect();
            let s1 = syndrome_series(&field, &e1, &[5, 5]);
            let s2 = syndrome_series(&field, &e2, &[5, 5]);
            let ss = syndrome_series(&field, &esum, &[5, 5]);
            let mut s12 = InverseSeries::zero(vec![5, 5]);
            for (u, c) in s1.coeffs.iter().chain(s2.coeffs.iter()) {
                let cur = s12.coeff(u);
                s12.set(u.clone(), field.add(cur, *c));
            }
            assert!(s12.eq_windowed(&ss).unwrap());
        }
    }

    #[test]
    fn positive_part_of_vanishing_univariate() {
        // univariate f with f(P) = 0: (f h_P)_+ = X_i g with g(P) = f'(P)
        let field = gf16();
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let a = Gf(7);
        let p = vec![a, Gf(9)];
        // f = (X - a)(X - 1) as a polynomial in X alone
        let f = parse_poly(&field, &names, "X^2 + 6*X + 7").unwrap(); // roots 7 and 1: (X+7)(X+1)
        assert!(f.eval(&field, &p).unwrap().is_zero());
        let h = h_point(&field, &p, &[6, 6]);
        let pp = positive_part(&field, &f, &h);
        // every term divisible by X (it is univariate in X)
        for e in pp.poly.terms.keys() {
            assert!(e[0] >= 1 && e[1] == 0);
        }
        // g = pp / X evaluated at P equals f'(P)
        let g = Poly {
            terms: pp
                .poly
                .terms
                .iter()
                .map(|(e, &c)| (vec![e[0] - 1, e[1]], c))
                .collect(),
        };
        let fp = f.derivative(&field, 0).eval(&field, &p).unwrap();
        assert_eq!(g.eval(&field, &p).unwrap(), fp);
    }

    #[test]
    fn positive_part_of_constant_against_origin_series() {
        let field = gf8();
        let h = h_point(&field, &[Gf::ZERO, Gf::ZERO], &[3, 3]);
        let pp = positive_part(&field, &Poly::one(2), &h);
        assert!(pp.poly.is_zero());
    }

    #[test]
    fn key_eq_detects_nonlocator() {
        let field = gf8();
        let e = vec![(vec![Gf(1), Gf(1)], Gf(3))];
        let s = syndrome_series(&field, &e, &[6, 6]);
        // f = 1 cannot annihilate a nonzero syndrome series
        let ok = key_eq_check(&field, &Poly::one(2), &s, &|_| false).unwrap();
        assert!(!ok);
        // f = (X - 1) vanishes on the support
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let f = parse_poly(&field, &names, "X + 1").unwrap();
        assert!(key_eq_check(&field, &f, &s, &|_| false).unwrap());
    }
}
