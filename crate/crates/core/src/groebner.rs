//! Multivariate division and Buchberger's algorithm for the weight orders
//! used by the code constructions. Instances are tiny, so the only pair
//! optimization is Buchberger's coprime-leading-term criterion.

use std::cmp::Ordering;

use crate::field::{FieldSpec, Gf};
use crate::order::WeightOrder;
use crate::poly::{Exps, Poly};

/// Leading exponent of a nonzero polynomial under `ord`.
pub fn leading_exp(p: &Poly, ord: &WeightOrder) -> Option<Exps> {
    p.terms
        .keys()
        .max_by(|a, b| ord.cmp(a, b))
        .cloned()
}

pub fn leading_coeff(p: &Poly, ord: &WeightOrder) -> Gf {
    match leading_exp(p, ord) {
        Some(e) => p.coeff(&e),
        None => Gf::ZERO,
    }
}

pub fn make_monic(field: &FieldSpec, p: &Poly, ord: &WeightOrder) -> Poly {
    let lc = leading_coeff(p, ord);
    if lc.is_zero() || lc == Gf::ONE {
        return p.clone();
    }
    p.scale(field, field.inv(lc).expect("nonzero leading coefficient"))
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Remainder of multivariate division of `f` by the list `basis`.
///
/// The first divisor (in stored order) whose leading term divides the
/// current term is used, so the result is deterministic; when `basis` is a
/// Groebner basis the remainder is unique regardless of that choice.
pub fn normal_form(field: &FieldSpec, f: &Poly, basis: &[Poly], ord: &WeightOrder) -> Poly {
    let leads: Vec<(Exps, Gf)> = basis
        .iter()
        .map(|g| {
            let e = leading_exp(g, ord).expect("basis polynomials must be nonzero");
            let c = g.coeff(&e);
            (e, c)
        })
        .collect();
    let mut work = f.clone();
    let mut remainder = Poly::zero();
    while !work.is_zero() {
        let e = leading_exp(&work, ord).unwrap();
        let c = work.coeff(&e);
        let mut reduced = false;
        for (g, (le, lc)) in basis.iter().zip(&leads) {
            if divides(le, &e) {
                let shift: Exps = e.iter().zip(le).map(|(x, y)| x - y).collect();
                let factor = field.div(c, *lc).expect("leading coefficient nonzero");
                work = work.sub(field, &g.mul_term(field, &shift, factor));
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder.add_term(field, e.clone(), c);
            work.terms.remove(&e);
        }
    }
    remainder
}

fn exp_lcm(a: &Exps, b: &Exps) -> Exps {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn s_poly(field: &FieldSpec, f: &Poly, g: &Poly, ord: &WeightOrder) -> Poly {
    let lf = leading_exp(f, ord).unwrap();
    let lg = leading_exp(g, ord).unwrap();
    let l = exp_lcm(&lf, &lg);
    let cf = field.inv(f.coeff(&lf)).unwrap();
    let cg = field.inv(g.coeff(&lg)).unwrap();
    let sf: Exps = l.iter().zip(&lf).map(|(x, y)| x - y).collect();
    let sg: Exps = l.iter().zip(&lg).map(|(x, y)| x - y).collect();
    f.mul_term(field, &sf, cf)
        .sub(field, &g.mul_term(field, &sg, cg))
}

/// True when the leading exponents share no variable.
fn coprime(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// Compute the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(field: &FieldSpec, gens: &[Poly], ord: &WeightOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    if basis.is_empty() {
        return vec![];
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let li = leading_exp(&basis[i], ord).unwrap();
        let lj = leading_exp(&basis[j], ord).unwrap();
        if coprime(&li, &lj) {
            continue;
        }
        let s = s_poly(field, &basis[i], &basis[j], ord);
        let r = normal_form(field, &s, &basis, ord);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            pairs.extend((0..k).map(|t| (k, t)));
        }
    }
    reduce_basis(field, basis, ord)
}

/// Autoreduce: drop redundant members, reduce tails, normalize monic, sort
/// by leading monomial. The result is the unique reduced basis of the span.
pub fn reduce_basis(field: &FieldSpec, basis: Vec<Poly>, ord: &WeightOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = basis.into_iter().filter(|p| !p.is_zero()).collect();
    // drop members whose leading term is divisible by another's
    loop {
        let mut removed = false;
        'outer: for i in 0..basis.len() {
            let li = leading_exp(&basis[i], ord).unwrap();
            for (j, other) in basis.iter().enumerate() {
                if i != j {
                    let lj = leading_exp(other, ord).unwrap();
                    if divides(&lj, &li) && !(lj == li && j > i) {
                        basis.remove(i);
                        removed = true;
                        break 'outer;
                    }
                }
            }
        }
        if !removed {
            break;
        }
    }
    // reduce each tail against the others until stable
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let rest: Vec<Poly> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            if rest.is_empty() {
                break;
            }
            let r = normal_form(field, &basis[i], &rest, ord);
            if r != basis[i] {
                changed = true;
                if r.is_zero() {
                    basis.remove(i);
                } else {
                    basis[i] = r;
                }
                break;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Poly> = basis
        .into_iter()
        .map(|p| make_monic(field, &p, ord))
        .collect();
    out.sort_by(|a, b| {
        let la = leading_exp(a, ord).unwrap();
        let lb = leading_exp(b, ord).unwrap();
        ord.cmp(&la, &lb)
    });
    out
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner(field: &FieldSpec, basis: &[Poly], ord: &WeightOrder) -> bool {
    let basis: Vec<Poly> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..basis.len() {
        for j in 0..i {
            let s = s_poly(field, &basis[i], &basis[j], ord);
            if !normal_form(field, &s, &basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Footprint (standard monomials) of the leading-term ideal of `basis`,
/// when finite: all exponent vectors not divisible by any leading term.
/// Returns None when the footprint is infinite.
pub fn finite_footprint(basis: &[Poly], ord: &WeightOrder) -> Option<Vec<Exps>> {
    if basis.is_empty() {
        return None;
    }
    let s = ord.nvars();
    let leads: Vec<Exps> = basis
        .iter()
        .map(|g| leading_exp(g, ord).expect("nonzero basis"))
        .collect();
    // finite iff for each variable some pure power X_i^k is a leading term
    let mut bound = vec![0u32; s];
    for i in 0..s {
        let b = leads
            .iter()
            .filter(|e| e.iter().enumerate().all(|(j, &x)| j == i || x == 0))
            .map(|e| e[i])
            .min()?;
        bound[i] = b;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    loop {
        if !leads.iter().any(|l| divides(l, &cur)) {
            out.push(cur.clone());
        }
        // odometer over the finite box
        let mut i = 0;
        loop {
            if i == s {
                out.sort_by(|a, b| ord.cmp(a, b));
                return Some(out);
            }
            cur[i] += 1;
            if cur[i] < bound[i].max(1) {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Convenience: compare two polynomials' leading monomials.
pub fn cmp_by_lead(a: &Poly, b: &Poly, ord: &WeightOrder) -> Ordering {
    match (leading_exp(a, ord), leading_exp(b, ord)) {
        (Some(la), Some(lb)) => ord.cmp(&la, &lb),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{gf16, Gf};
    use crate::order::SemigroupOrder;
    use crate::poly::parse_poly;

    fn hord() -> WeightOrder {
        WeightOrder::new(vec![vec![4, 5]], SemigroupOrder::Integer, vec![0, 1]).unwrap()
    }

    fn names() -> Vec<String> {
        vec!["X".into(), "Y".into()]
    }

    fn p(t: &str) -> Poly {
        parse_poly(&gf16(), &names(), t).unwrap()
    }

    #[test]
    fn nf_reduces_curve_lead() {
        let f = gf16();
        let curve = p("X^5 + Y^4 + Y");
        let r = normal_form(&f, &p("X^5"), &[curve], &hord());
        assert_eq!(r, p("Y^4 + Y"));
    }

    #[test]
    fn nf_of_reduced_is_identity() {
        let f = gf16();
        let curve = p("X^5 + Y^4 + Y");
        let g = p("X^2*Y + 3*X");
        assert_eq!(normal_form(&f, &g, &[curve], &hord()), g);
    }

    #[test]
    fn nf_of_multiple_is_zero() {
        let f = gf16();
        let curve = p("X^5 + Y^4 + Y");
        let prod = curve.mul(&f, &p("7*X^2*Y + X + 9"));
        assert!(normal_form(&f, &prod, &[curve], &hord()).is_zero());
    }

    #[test]
    fn single_generator_is_groebner() {
        let f = gf16();
        let curve = p("X^5 + Y^4 + Y");
        assert!(is_groebner(&f, &[curve.clone()], &hord()));
        let out = buchberger(&f, &[curve.clone()], &hord());
        assert_eq!(out, vec![curve]);
    }

    #[test]
    fn two_coprime_linear_gens() {
        let f = gf16();
        let gens = vec![p("X + 1"), p("Y + 1")];
        let out = buchberger(&f, &gens, &hord());
        assert_eq!(out, gens);
    }

    #[test]
    fn detects_non_groebner() {
        let f = gf16();
        // under lex with X > Y, the S-pair of {X + Y, X} reduces to Y
        let lex = WeightOrder::new(
            vec![vec![1, 0], vec![0, 1]],
            SemigroupOrder::Lex,
            vec![0, 1],
        )
        .unwrap();
        assert!(!is_groebner(&f, &[p("X + Y"), p("X")], &lex));
        // under the curve's weight order the same pair is already a basis
        assert!(is_groebner(&f, &[p("X + Y"), p("X")], &hord()));
    }

    #[test]
    fn buchberger_output_is_groebner_and_order_independent() {
        let f = gf16();
        let gens = vec![p("X^5 + Y^4 + Y"), p("X^16 + X"), p("Y^16 + Y")];
        let out = buchberger(&f, &gens, &hord());
        assert!(is_groebner(&f, &out, &hord()));
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(buchberger(&f, &rev, &hord()), out);
        // footprint counts the rational points of the Hermitian curve
        let fp = finite_footprint(&out, &hord()).unwrap();
        assert_eq!(fp.len(), 64);
    }

    #[test]
    fn nf_unique_for_groebner_basis_reordering() {
        let f = gf16();
        let basis = buchberger(&f, &[p("X^5 + Y^4 + Y"), p("X^16 + X"), p("Y^16 + Y")], &hord());
        let probe = p("X^7*Y^3 + 5*X^2 + Y");
        let a = normal_form(&f, &probe, &basis, &hord());
        let mut rev = basis.clone();
        rev.reverse();
        assert_eq!(a, normal_form(&f, &probe, &rev, &hord()));
    }

    #[test]
    fn footprint_of_unit_ideal_is_empty() {
        let f = gf16();
        let one = Poly::constant(Gf::ONE, 2);
        assert_eq!(finite_footprint(&[one], &hord()).unwrap().len(), 0);
    }
}
