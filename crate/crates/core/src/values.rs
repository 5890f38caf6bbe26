//! Error locations and values from a locator ideal: exhaustive variety
//! scan, elimination polynomials by normal-form linear algebra, and the
//! generalized Forney formula through purely positive parts.

use std::collections::BTreeMap;

use crate::codes::EvaluationCode;
use crate::decoder::{bms_run, BmsOutcome, LocatorIdeal, SyndromeTable, DEFAULT_T_MAX};
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::groebner::normal_form;
use crate::linalg;
use crate::poly::{Exps, Poly};
use crate::series::{positive_part, InverseSeries};

/// Sparse error vector over the code's point set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ErrorVector {
    /// point index -> nonzero value
    pub entries: BTreeMap<usize, Gf>,
}

impl ErrorVector {
    pub fn weight(&self) -> usize {
        self.entries.len()
    }

    pub fn as_word(&self, n: usize) -> Vec<Gf> {
        let mut w = vec![Gf::ZERO; n];
        for (&i, &v) in &self.entries {
            w[i] = v;
        }
        w
    }
}

/// Full decoding product.
#[derive(Debug, Clone)]
pub struct DecodeResult {
    pub corrected: Vec<Gf>,
    pub error: ErrorVector,
    pub locator: LocatorIdeal,
    pub outcome: BmsOutcome,
    pub radius: usize,
    pub within_radius: bool,
}

/// Code points where every basis polynomial vanishes. The cardinality must
/// match the footprint (radical split ideal), else decoding is beyond the
/// guarantee and aborts.
pub fn variety(code: &EvaluationCode, locator: &LocatorIdeal) -> Result<Vec<usize>> {
    let field = &code.pres.field;
    let mut hits = Vec::new();
    'points: for (i, p) in code.points.points.iter().enumerate() {
        for g in &locator.basis {
            if !g.eval(field, p)?.is_zero() {
                continue 'points;
            }
        }
        hits.push(i);
    }
    if hits.len() != locator.footprint.len() {
        return Err(Error::CardinalityMismatch {
            expected: locator.footprint.len(),
            found: hits.len(),
        });
    }
    Ok(hits)
}

/// Monic generator of the elimination ideal I_E intersected with F_q[X_i]:
/// the least k making the normal forms of 1, X_i, ..., X_i^k linearly
/// dependent over the footprint coordinates.
pub fn elimination_poly(
    code: &EvaluationCode,
    locator: &LocatorIdeal,
    var: usize,
) -> Result<Poly> {
    let pres = &code.pres;
    let field = &pres.field;
    let s = pres.nvars();
    let coords = &locator.footprint;
    let coord_index: BTreeMap<&Exps, usize> =
        coords.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut columns: Vec<Vec<Gf>> = Vec::new();
    for k in 0..=coords.len() {
        let mut e = vec![0u32; s];
        e[var] = k as u32;
        let nf = normal_form(
            field,
            &Poly::monomial(e, Gf::ONE),
            &locator.basis,
            &pres.order,
        );
        let mut vec = vec![Gf::ZERO; coords.len()];
        for (m, &c) in &nf.terms {
            let idx = *coord_index.get(m).ok_or(Error::DecodeFailure {
                stage: "elimination",
                detail: "normal form left the footprint".into(),
            })?;
            vec[idx] = c;
        }
        if let Some(sol) = linalg::solve_columns(field, &columns, &vec) {
            // X_i^k = sum sol_j X_i^j  in the quotient
            let mut f = Poly::zero();
            let mut top = vec![0u32; s];
            top[var] = k as u32;
            f.add_term(field, top, Gf::ONE);
            for (j, c) in sol.into_iter().enumerate() {
                let mut e = vec![0u32; s];
                e[var] = j as u32;
                f.add_term(field, e, field.neg(c));
            }
            return Ok(f);
        }
        columns.push(vec);
    }
    Err(Error::DecodeFailure {
        stage: "elimination",
        detail: "no univariate dependence found".into(),
    })
}

/// Resolve a syndrome through the table, falling back to normal-form
/// propagation modulo the locator basis (valid because the true error
/// satisfies every locator recurrence).
pub fn resolve_via_locator(
    table: &mut SyndromeTable,
    locator: &LocatorIdeal,
    e: &Exps,
) -> Result<Gf> {
    if let Ok(v) = table.resolve(e) {
        return Ok(v);
    }
    let pres = table.pres.clone();
    let field = pres.field.clone();
    let nf = normal_form(
        &field,
        &Poly::monomial(e.clone(), Gf::ONE),
        &locator.basis,
        &pres.order,
    );
    if nf.terms.len() == 1 && nf.terms.contains_key(e) {
        return Err(Error::NeedSyndrome(
            Poly::monomial(e.clone(), Gf::ONE).render(&pres.names),
        ));
    }
    let mut acc = Gf::ZERO;
    for (sub, &c) in &nf.terms {
        let v = resolve_via_locator(table, locator, sub)?;
        acc = field.add(acc, field.mul(c, v));
    }
    Ok(acc)
}

/// Truncated syndrome series on the window needed by the product of the
/// elimination polynomials.
fn syndrome_window(
    table: &mut SyndromeTable,
    locator: &LocatorIdeal,
    window: &[u32],
) -> Result<InverseSeries> {
    let mut out = InverseSeries::zero(window.to_vec());
    let s = window.len();
    let mut u = vec![0u32; s];
    loop {
        let v = resolve_via_locator(table, locator, &u)?;
        out.set(u.clone(), v);
        let mut i = 0;
        loop {
            if i == s {
                return Ok(out);
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

/// Error values by the generalized Forney formula: with f_1..f_s the
/// elimination polynomials and sigma their product, g is the positive part
/// (sigma S_e)_+ divided by X_1...X_s, and e_P = g(P) / prod f_l'(P).
pub fn error_values(
    code: &EvaluationCode,
    locator: &LocatorIdeal,
    table: &mut SyndromeTable,
    support: &[usize],
    elim: &[Poly],
) -> Result<ErrorVector> {
    let pres = &code.pres;
    let field = &pres.field;
    let s = pres.nvars();
    let mut sigma = Poly::one(s);
    for f in elim {
        sigma = sigma.mul(field, f);
    }
    let window: Vec<u32> = (0..s)
        .map(|i| sigma.degree_in(i).saturating_sub(1))
        .collect();
    let series = syndrome_window(table, locator, &window)?;
    let pp = positive_part(field, &sigma, &series);
    // keep the fully-valid region and divide by X_1...X_s
    let mut g = Poly::zero();
    for (e, &c) in &pp.poly.terms {
        if e.iter().all(|&x| x >= 1) {
            g.add_term(field, e.iter().map(|&x| x - 1).collect(), c);
        }
    }
    let derivs: Vec<Poly> = (0..s).map(|i| elim[i].derivative(field, i)).collect();
    let mut entries = BTreeMap::new();
    for &idx in support {
        let p = &code.points.points[idx];
        let mut denom = Gf::ONE;
        for d in &derivs {
            denom = field.mul(denom, d.eval(field, p)?);
        }
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(idx));
        }
        let val = field.div(g.eval(field, p)?, denom)?;
        if val.is_zero() {
            return Err(Error::DecodeFailure {
                stage: "values",
                detail: format!("computed error value 0 at support point {}", idx),
            });
        }
        entries.insert(idx, val);
    }
    Ok(ErrorVector { entries })
}

/// Sum of error values sharing the i-th coordinate `a`, via the univariate
/// positive part of the elimination polynomial in that variable.
pub fn aggregate_values(
    code: &EvaluationCode,
    locator: &LocatorIdeal,
    table: &mut SyndromeTable,
    var: usize,
    a: Gf,
    elim_i: &Poly,
) -> Result<Gf> {
    let pres = &code.pres;
    let field = &pres.field;
    let s = pres.nvars();
    let mut window = vec![0u32; s];
    window[var] = elim_i.degree_in(var).saturating_sub(1);
    let series = syndrome_window(table, locator, &window)?;
    let pp = positive_part(field, elim_i, &series);
    let mut g = Poly::zero();
    for (e, &c) in &pp.poly.terms {
        if e[var] >= 1 {
            let mut ne = e.clone();
            ne[var] -= 1;
            g.add_term(field, ne, c);
        }
    }
    let mut point = vec![Gf::ZERO; s];
    point[var] = a;
    let denom = elim_i.derivative(field, var).eval(field, &point)?;
    if denom.is_zero() {
        return Err(Error::ZeroDenominator(0));
    }
    field.div(g.eval(field, &point)?, denom)
}

/// Full decoding pipeline: syndromes, locator via the voting iteration,
/// variety scan, elimination polynomials, error values, correction, and a
/// final syndrome re-check of the corrected word.
pub fn decode(code: &EvaluationCode, received: &[Gf]) -> Result<DecodeResult> {
    decode_with_cap(code, received, DEFAULT_T_MAX)
}

pub fn decode_with_cap(
    code: &EvaluationCode,
    received: &[Gf],
    t_max: usize,
) -> Result<DecodeResult> {
    let field = &code.pres.field;
    let radius = crate::codes::decoding_radius(&code.pres, code.ell)?;
    let mut table = SyndromeTable::init(code, received)?;
    let outcome = bms_run(code, &mut table, radius, t_max)?;
    let locator = outcome.locator.clone();
    let support = variety(code, &locator)?;
    let error = if support.is_empty() {
        ErrorVector::default()
    } else {
        let elim: Vec<Poly> = (0..code.pres.nvars())
            .map(|i| elimination_poly(code, &locator, i))
            .collect::<Result<Vec<_>>>()?;
        error_values(code, &locator, &mut table, &support, &elim)?
    };
    let mut corrected = received.to_vec();
    for (&i, &v) in &error.entries {
        corrected[i] = field.sub(corrected[i], v);
    }
    // the corrected word must clear every known syndrome
    for (_, v) in crate::codes::syndromes_known(code, &corrected)? {
        if !v.is_zero() {
            return Err(Error::DecodeFailure {
                stage: "verify",
                detail: "corrected word has a nonzero known syndrome".into(),
            });
        }
    }
    let within = error.weight() <= radius;
    Ok(DecodeResult {
        corrected,
        error,
        locator,
        outcome,
        radius,
        within_radius: within,
    })
}
