//! Evaluation codes Ev_l, their duals C_l, encoding, known syndromes, and
//! the Feng-Rao distance bound.

use crate::domain::{min_nu_beyond, DeltaBasis, Presentation};
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::groebner::{leading_exp, reduce_basis};
use crate::linalg;
use crate::order::WeightOrder;
use crate::poly::{Exps, Poly};

/// The F_q-rational points of the presentation variety, in a fixed order
/// (lexicographic by element codes) that pins codeword coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPointSet {
    pub points: Vec<Vec<Gf>>,
}

impl RationalPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Exhaustive scan of F_q^s for common zeros of the generators.
pub fn rational_points(pres: &Presentation) -> Result<RationalPointSet> {
    let s = pres.nvars();
    let q = pres.field.q as u64;
    let total = q.checked_pow(s as u32).ok_or_else(|| {
        Error::TooLarge("point scan overflow".into())
    })?;
    if total > (1 << 24) {
        return Err(Error::TooLarge(format!(
            "q^s = {} exceeds the 2^24 scan budget",
            total
        )));
    }
    let mut points = Vec::new();
    let mut point = vec![Gf::ZERO; s];
    'outer: for mut idx in 0..total {
        for c in point.iter_mut() {
            *c = Gf((idx % q) as u16);
            idx /= q;
        }
        for g in &pres.generators {
            if !g.eval(&pres.field, &point)?.is_zero() {
                continue 'outer;
            }
        }
        points.push(point.clone());
    }
    // lexicographic by element codes, most significant first coordinate
    points.sort();
    Ok(RationalPointSet { points })
}

/// An evaluation code Ev_l together with the dual view C_l = Ev_l^perp.
#[derive(Debug, Clone)]
pub struct EvaluationCode {
    pub pres: Presentation,
    pub ell: usize,
    pub points: RationalPointSet,
    /// Row i = evaluation of the i-th basis monomial at all points.
    pub eval_matrix: Vec<Vec<Gf>>,
    /// The first `ell` basis monomials.
    pub monomials: Vec<Exps>,
    pub rank: usize,
    /// Deterministic basis of the dual code (null space of eval_matrix).
    pub dual_basis: Vec<Vec<Gf>>,
    /// Reduced Groebner basis of I + the field equations; the syndrome
    /// derivation basis.
    pub pointwise_basis: Vec<Poly>,
}

impl EvaluationCode {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Dimension of the dual code C_l.
    pub fn dual_dim(&self) -> usize {
        self.n() - self.rank
    }
}

/// Build Ev_l / C_l from the first `ell` standard monomials.
pub fn build_code(pres: &Presentation, ell: usize) -> Result<EvaluationCode> {
    if ell == 0 {
        return Err(Error::TooLarge("ell must be at least 1".into()));
    }
    let points = rational_points(pres)?;
    if points.is_empty() {
        return Err(Error::TooLarge("variety has no rational points".into()));
    }
    let mut basis = DeltaBasis::new(pres);
    basis.ensure_count(ell, false)?;
    let monomials: Vec<Exps> = basis.monos[..ell].to_vec();
    let mut eval_matrix = Vec::with_capacity(ell);
    for e in &monomials {
        let row: Vec<Gf> = points
            .points
            .iter()
            .map(|p| {
                Poly::monomial(e.clone(), Gf::ONE)
                    .eval(&pres.field, p)
                    .expect("point arity matches")
            })
            .collect();
        eval_matrix.push(row);
    }
    let rank = linalg::rank(&pres.field, &eval_matrix);
    let dual_basis = linalg::kernel_basis(&pres.field, &eval_matrix, points.len());
    let pointwise_basis = pres.pointwise_basis();
    Ok(EvaluationCode {
        pres: pres.clone(),
        ell,
        points,
        eval_matrix,
        monomials,
        rank,
        dual_basis,
        pointwise_basis,
    })
}

/// Encode a message as a C_l codeword using the deterministic null-space
/// basis: codeword = sum m_i * b_i.
pub fn encode(code: &EvaluationCode, message: &[Gf]) -> Result<Vec<Gf>> {
    let k = code.dual_dim();
    if message.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: message.len(),
        });
    }
    let f = &code.pres.field;
    let mut word = vec![Gf::ZERO; code.n()];
    for (m, b) in message.iter().zip(&code.dual_basis) {
        for (w, &x) in word.iter_mut().zip(b) {
            *w = f.add(*w, f.mul(*m, x));
        }
    }
    Ok(word)
}

/// Known syndromes of a received word: E_u = <received, ev(X^u)> for the
/// first `ell` basis monomials. Codewords of C_l are orthogonal to the
/// rows, so this equals the error syndrome.
pub fn syndromes_known(code: &EvaluationCode, received: &[Gf]) -> Result<Vec<(Exps, Gf)>> {
    if received.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: received.len(),
        });
    }
    let f = &code.pres.field;
    Ok(code
        .monomials
        .iter()
        .zip(&code.eval_matrix)
        .map(|(e, row)| {
            let dot = row
                .iter()
                .zip(received)
                .fold(Gf::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            (e.clone(), dot)
        })
        .collect())
}

/// Feng-Rao lower bound for d(C_l): min over later basis indices m of the
/// number of semigroup factorizations of the m-th weight.
pub fn feng_rao_distance(pres: &Presentation, ell: usize) -> Result<usize> {
    let mut basis = DeltaBasis::new(pres);
    min_nu_beyond(&mut basis, ell)
}

/// Guaranteed correction radius of C_l.
pub fn decoding_radius(pres: &Presentation, ell: usize) -> Result<usize> {
    Ok((feng_rao_distance(pres, ell)? - 1) / 2)
}

/// Reduced Groebner basis of the vanishing ideal of a point set, computed
/// by evaluation linear algebra alone (the Buchberger-Moller scan). Serves
/// as the independent locator oracle built from a known error support.
pub fn vanishing_ideal(
    pres: &Presentation,
    points: &[Vec<Gf>],
    ord: &WeightOrder,
) -> Result<Vec<Poly>> {
    let field = &pres.field;
    if points.is_empty() {
        return Ok(vec![Poly::one(ord.nvars())]);
    }
    // enumerate all monomials of Z^s in increasing order via a frontier
    let s = ord.nvars();
    let mut frontier: std::collections::BTreeSet<(Vec<i64>, Vec<u32>, Exps)> =
        std::collections::BTreeSet::new();
    let mut seen: std::collections::HashSet<Exps> = std::collections::HashSet::new();
    let key = |e: &Exps| {
        let w = ord.weight(e);
        let wkey = crate::domain::weight_sort_key(ord, &w);
        let tkey: Vec<u32> = ord.tiebreak.iter().map(|&i| e[i]).collect();
        (wkey, tkey, e.clone())
    };
    let one = vec![0u32; s];
    frontier.insert(key(&one));
    seen.insert(one);
    let mut std_monos: Vec<Exps> = Vec::new();
    let mut evals: Vec<Vec<Gf>> = Vec::new();
    let mut basis: Vec<Poly> = Vec::new();
    let mut lts: Vec<Exps> = Vec::new();
    let divides = |a: &Exps, b: &Exps| a.iter().zip(b).all(|(x, y)| x <= y);
    for _ in 0..100_000 {
        let Some(entry) = frontier.iter().next().cloned() else {
            break;
        };
        frontier.remove(&entry);
        let e = entry.2;
        for i in 0..s {
            let mut ne = e.clone();
            ne[i] += 1;
            if !seen.contains(&ne) && !lts.iter().any(|l| divides(l, &ne)) {
                seen.insert(ne.clone());
                frontier.insert(key(&ne));
            }
        }
        if lts.iter().any(|l| divides(l, &e)) {
            continue;
        }
        let vec_e: Vec<Gf> = points
            .iter()
            .map(|p| Poly::monomial(e.clone(), Gf::ONE).eval(field, p).unwrap())
            .collect();
        match linalg::solve_columns(field, &evals, &vec_e) {
            Some(sol) => {
                let mut g = Poly::monomial(e.clone(), Gf::ONE);
                for (c, se) in sol.iter().zip(&std_monos) {
                    g.add_term(field, se.clone(), field.neg(*c));
                }
                lts.push(e);
                basis.push(g);
            }
            None => {
                std_monos.push(e);
                evals.push(vec_e);
            }
        }
        if std_monos.len() == points.len() {
            // done once every corner of the footprint has a basis element
            let corners = corner_monomials(&std_monos, s);
            if corners.iter().all(|c| lts.contains(c)) {
                return Ok(reduce_basis(field, basis, ord));
            }
        }
    }
    Err(Error::TooLarge("vanishing ideal scan did not close".into()))
}

/// Minimal exponent vectors outside an order ideal of monomials.
pub fn corner_monomials(ideal: &[Exps], s: usize) -> Vec<Exps> {
    let set: std::collections::HashSet<&Exps> = ideal.iter().collect();
    let mut cand: std::collections::BTreeSet<Exps> = std::collections::BTreeSet::new();
    let zero = vec![0u32; s];
    if !set.contains(&zero) {
        cand.insert(zero);
    }
    for e in ideal {
        for i in 0..s {
            let mut ne = e.clone();
            ne[i] += 1;
            if !set.contains(&ne) {
                cand.insert(ne);
            }
        }
    }
    cand.into_iter()
        .filter(|c| {
            (0..s).all(|i| {
                if c[i] == 0 {
                    return true;
                }
                let mut d = c.clone();
                d[i] -= 1;
                set.contains(&d)
            })
        })
        .collect()
}

/// The footprint (standard monomials) determined by a basis's leading terms,
/// ordered by `ord`; None when infinite.
pub fn basis_footprint(basis: &[Poly], ord: &WeightOrder) -> Option<Vec<Exps>> {
    crate::groebner::finite_footprint(basis, ord)
}

#[allow(unused)]
fn leading(p: &Poly, ord: &WeightOrder) -> Exps {
    leading_exp(p, ord).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{gf16, gf8};
    use crate::order::SemigroupOrder;
    use crate::poly::parse_poly;

    fn hermitian() -> Presentation {
        let f = gf16();
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let ord = WeightOrder::new(vec![vec![4, 5]], SemigroupOrder::Integer, vec![0, 1]).unwrap();
        let curve = parse_poly(&f, &names, "X^5 + Y^4 + Y").unwrap();
        Presentation::new(f, names, ord, vec![curve]).unwrap()
    }

    fn plane8() -> Presentation {
        let f = gf8();
        let names: Vec<String> = vec!["X".into(), "Y".into()];
        let ord = WeightOrder::new(
            vec![vec![1, 0], vec![0, 1]],
            SemigroupOrder::GradedLex,
            vec![0, 1],
        )
        .unwrap();
        Presentation::new(f, names, ord, vec![]).unwrap()
    }

    #[test]
    fn hermitian_has_64_points() {
        let p = hermitian();
        let pts = rational_points(&p).unwrap();
        assert_eq!(pts.len(), 64);
        // re-check membership
        for pt in &pts.points {
            for g in &p.generators {
                assert!(g.eval(&p.field, pt).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn plane_has_all_64_points() {
        let p = plane8();
        assert_eq!(rational_points(&p).unwrap().len(), 64);
    }

    #[test]
    fn empty_variety() {
        // I = <1>: the constant 1 never vanishes. Validation rejects a unit
        // generator, so scan the variety directly through a raw Presentation.
        let p = hermitian();
        let mut raw = p.clone();
        raw.generators = vec![Poly::one(2)];
        assert_eq!(rational_points(&raw).unwrap().len(), 0);
    }

    #[test]
    fn hermitian_code_shape() {
        let p = hermitian();
        let code = build_code(&p, 20).unwrap();
        assert_eq!(code.eval_matrix.len(), 20);
        assert_eq!(code.n(), 64);
        assert_eq!(code.rank, 20);
        assert_eq!(code.dual_dim(), 44);
        // monomial list runs 1 .. Y^5
        assert_eq!(code.monomials[0], vec![0, 0]);
        assert_eq!(code.monomials[19], vec![0, 5]);
    }

    #[test]
    fn ell_one_row_is_all_ones() {
        let p = plane8();
        let code = build_code(&p, 1).unwrap();
        assert!(code.eval_matrix[0].iter().all(|&x| x == Gf::ONE));
    }

    #[test]
    fn encode_orthogonal_to_rows() {
        let p = plane8();
        let code = build_code(&p, 10).unwrap();
        let f = &code.pres.field;
        let zeros = vec![Gf::ZERO; code.dual_dim()];
        assert!(encode(&code, &zeros).unwrap().iter().all(|x| x.is_zero()));
        let mut msg = vec![Gf::ZERO; code.dual_dim()];
        for (i, m) in msg.iter_mut().enumerate() {
            *m = Gf(((i * 3 + 1) % 8) as u16);
        }
        let w = encode(&code, &msg).unwrap();
        for row in &code.eval_matrix {
            let dot = row
                .iter()
                .zip(&w)
                .fold(Gf::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            assert!(dot.is_zero());
        }
        let syn = syndromes_known(&code, &w).unwrap();
        assert!(syn.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn feng_rao_golden_values() {
        assert_eq!(feng_rao_distance(&hermitian(), 20).unwrap(), 15);
        assert_eq!(feng_rao_distance(&plane8(), 10).unwrap(), 5);
    }

    #[test]
    fn feng_rao_monotone_in_ell() {
        let p = plane8();
        let mut prev = 0;
        for ell in 1..=12 {
            let d = feng_rao_distance(&p, ell).unwrap();
            assert!(d >= prev);
            prev = d;
        }
    }

    #[test]
    fn rs_single_parity_distance() {
        // s = 1, I = 0, q points, ell = 1: single parity check, distance 2
        let f = gf16();
        let ord = WeightOrder::new(vec![vec![1]], SemigroupOrder::Integer, vec![0]).unwrap();
        let p = Presentation::new(f, vec!["X".into()], ord, vec![]).unwrap();
        assert_eq!(feng_rao_distance(&p, 1).unwrap(), 2);
    }

    #[test]
    fn vanishing_ideal_of_golden_points() {
        let p = hermitian();
        let pts: Vec<Vec<Gf>> = vec![
            vec![Gf(2), Gf(12)],
            vec![Gf(4), Gf(9)],
            vec![Gf(3), Gf(12)],
            vec![Gf(6), Gf(9)],
            vec![Gf(5), Gf(8)],
            vec![Gf(14), Gf(15)],
            vec![Gf(0), Gf(0)],
        ];
        let gb = vanishing_ideal(&p, &pts, &p.order).unwrap();
        assert_eq!(gb.len(), 4);
        let fp = basis_footprint(&gb, &p.order).unwrap();
        assert_eq!(fp.len(), 7);
        for g in &gb {
            for pt in &pts {
                assert!(g.eval(&p.field, pt).unwrap().is_zero());
            }
        }
        assert!(crate::groebner::is_groebner(&p.field, &gb, &p.order));
    }

    #[test]
    fn syndromes_match_planted_error() {
        // single-point error at (1,1) with value 1 over the plane code:
        // E_u = 1 for every u
        let p = plane8();
        let code = build_code(&p, 10).unwrap();
        let mut received = vec![Gf::ZERO; code.n()];
        let idx = code
            .points
            .points
            .iter()
            .position(|pt| pt == &vec![Gf(1), Gf(1)])
            .unwrap();
        received[idx] = Gf::ONE;
        for (_, v) in syndromes_known(&code, &received).unwrap() {
            assert_eq!(v, Gf::ONE);
        }
    }
}
