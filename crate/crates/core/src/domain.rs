//! Order-domain presentations R = F_q[X_1..X_s]/I with a weight order whose
//! standard monomials carry pairwise distinct weights, the ordered basis
//! Delta of the quotient, and the value-semigroup arithmetic built on it.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{self, is_groebner, leading_exp, normal_form};
use crate::order::{Weight, WeightOrder};
use crate::poly::{Exps, Poly};

/// Cap on basis enumeration; anything needing more is out of desk scale.
const MAX_ENUM: usize = 200_000;
/// Cap on the distinct-weight validation scan when the weight bound alone
/// does not make it finite (possible for lex-type semigroup orders).
const MAX_VALIDATE_SCAN: usize = 20_000;

/// A validated presentation of an order domain.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: FieldSpec,
    pub names: Vec<String>,
    pub order: WeightOrder,
    /// Reduced-basis generators of I; empty for a polynomial ring.
    pub generators: Vec<Poly>,
}

impl Presentation {
    /// Validate and construct. Checks, per the presentation theorem:
    /// the generators form a Groebner basis, every generator has exactly
    /// two monomials of maximal weight, and standard monomials have
    /// pairwise distinct weights (exhaustively, within twice the largest
    /// generator weight or the scan cap).
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        order: WeightOrder,
        generators: Vec<Poly>,
    ) -> Result<Presentation> {
        let s = order.nvars();
        if names.len() != s {
            return Err(Error::DimensionMismatch(format!(
                "{} variable names for {} matrix columns",
                names.len(),
                s
            )));
        }
        for g in &generators {
            if g.is_zero() {
                return Err(Error::Parse("zero generator".into()));
            }
            if g.nvars() != Some(s) {
                return Err(Error::DimensionMismatch(
                    "generator exponent length differs from variable count".into(),
                ));
            }
        }
        if !is_groebner(&field, &generators, &order) {
            return Err(Error::NotGroebner);
        }
        let pres = Presentation {
            field,
            names,
            order,
            generators,
        };
        pres.check_two_maximal_monomials()?;
        pres.check_distinct_weights()?;
        Ok(pres)
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    fn check_two_maximal_monomials(&self) -> Result<()> {
        for (idx, g) in self.generators.iter().enumerate() {
            let top = leading_exp(g, &self.order).unwrap();
            let top_w = self.order.weight(&top);
            let count = g
                .terms
                .keys()
                .filter(|e| self.order.weight(e) == top_w)
                .count();
            if count != 2 {
                return Err(Error::WrongTopShape(idx));
            }
        }
        Ok(())
    }

    fn check_distinct_weights(&self) -> Result<()> {
        // Bound: twice the largest generator weight. Additivity of weights
        // makes a collision below the bound out of any collision at all,
        // except for the free ring, where injectivity of the weight map is
        // exactly "square matrix" (rows are already independent).
        if self.generators.is_empty() {
            if self.order.rank() == self.order.nvars() {
                return Ok(());
            }
            // a collision exists; find a small witness for the report
            let mut seen: HashMap<Weight, Exps> = HashMap::new();
            let mut basis = DeltaBasis::new(self);
            for k in 0..MAX_VALIDATE_SCAN {
                if basis.ensure_count(k + 1, true).is_err() {
                    break;
                }
                let e = basis.monos[k].clone();
                let w = self.order.weight(&e);
                if let Some(prev) = seen.get(&w) {
                    return Err(Error::WeightCollision(
                        render_mono(prev, &self.names),
                        render_mono(&e, &self.names),
                    ));
                }
                seen.insert(w, e);
            }
            return Err(Error::WeightCollision(
                "<some standard monomial>".into(),
                "<another of equal weight: weight matrix is not injective>".into(),
            ));
        }
        let mut bound = self.order.zero_weight();
        for g in &self.generators {
            let w = self.order.weight(&leading_exp(g, &self.order).unwrap());
            if self.order.cmp_weights(&w, &bound) == std::cmp::Ordering::Greater {
                bound = w;
            }
        }
        let bound = WeightOrder::add_weights(&bound, &bound);
        let mut seen: HashMap<Weight, Exps> = HashMap::new();
        let mut basis = DeltaBasis::new(self);
        for k in 0..MAX_VALIDATE_SCAN {
            if basis.ensure_count(k + 1, true).is_err() {
                break;
            }
            let e = basis.monos[k].clone();
            let w = self.order.weight(&e);
            if self.order.cmp_weights(&w, &bound) == std::cmp::Ordering::Greater {
                break;
            }
            if let Some(prev) = seen.get(&w) {
                return Err(Error::WeightCollision(
                    render_mono(prev, &self.names),
                    render_mono(&e, &self.names),
                ));
            }
            seen.insert(w, e);
        }
        Ok(())
    }

    pub fn is_standard(&self, e: &Exps) -> bool {
        !self.generators.iter().any(|g| {
            let le = leading_exp(g, &self.order).unwrap();
            le.iter().zip(e).all(|(a, b)| a <= b)
        })
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        if self.generators.is_empty() {
            f.clone()
        } else {
            normal_form(&self.field, f, &self.generators, &self.order)
        }
    }

    /// Weight of the residue class of `f`: the maximal weight in the support
    /// of its normal form; None encodes negative infinity (f in I).
    pub fn rho(&self, f: &Poly) -> Option<Weight> {
        let nf = self.normal_form(f);
        let lead = leading_exp(&nf, &self.order)?;
        Some(self.order.weight(&lead))
    }

    /// The field equations X_i^q - X_i.
    pub fn field_equations(&self) -> Vec<Poly> {
        let s = self.nvars();
        let q = self.field.q;
        (0..s)
            .map(|i| {
                let mut hi = vec![0u32; s];
                hi[i] = q;
                let mut lo = vec![0u32; s];
                lo[i] = 1;
                let mut p = Poly::monomial(hi, crate::field::Gf::ONE);
                p.add_term(&self.field, lo, self.field.neg(crate::field::Gf::ONE));
                p
            })
            .collect()
    }

    /// Reduced Groebner basis of I + the field equations: the vanishing
    /// ideal of the rational point set, used as the syndrome derivation basis.
    pub fn pointwise_basis(&self) -> Vec<Poly> {
        let mut gens = self.generators.clone();
        gens.extend(self.field_equations());
        groebner::buchberger(&self.field, &gens, &self.order)
    }
}

fn render_mono(e: &Exps, names: &[String]) -> String {
    Poly::monomial(e.clone(), crate::field::Gf::ONE).render(names)
}

/// The ordered basis of standard monomials, materialized lazily in
/// increasing >_{M,tau} order, with weight lookup for semigroup arithmetic.
#[derive(Debug, Clone)]
pub struct DeltaBasis<'a> {
    pres: &'a Presentation,
    pub monos: Vec<Exps>,
    pub weights: Vec<Weight>,
    index_by_weight: HashMap<Weight, usize>,
    frontier: BTreeSet<(Vec<i64>, Vec<u32>, Exps)>,
    seen: HashSet<Exps>,
}

impl<'a> DeltaBasis<'a> {
    pub fn new(pres: &'a Presentation) -> DeltaBasis<'a> {
        let s = pres.nvars();
        let one = vec![0u32; s];
        let mut frontier = BTreeSet::new();
        frontier.insert(Self::key(pres, &one));
        let mut seen = HashSet::new();
        seen.insert(one);
        DeltaBasis {
            pres,
            monos: Vec::new(),
            weights: Vec::new(),
            index_by_weight: HashMap::new(),
            frontier,
            seen,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        self.pres
    }

    /// Sort key mirroring the full monomial order so a BTreeSet pops minima.
    fn key(pres: &Presentation, e: &Exps) -> (Vec<i64>, Vec<u32>, Exps) {
        let w = pres.order.weight(e);
        let wkey = weight_sort_key(&pres.order, &w);
        let tkey: Vec<u32> = pres.order.tiebreak.iter().map(|&i| e[i]).collect();
        (wkey, tkey, e.clone())
    }

    fn pop_next(&mut self) -> Option<Exps> {
        loop {
            let entry = self.frontier.iter().next().cloned()?;
            self.frontier.remove(&entry);
            let e = entry.2;
            // extend the frontier by one step in each variable
            for i in 0..e.len() {
                let mut ne = e.clone();
                ne[i] += 1;
                if self.pres.is_standard(&ne) && !self.seen.contains(&ne) {
                    self.seen.insert(ne.clone());
                    self.frontier.insert(Self::key(self.pres, &ne));
                }
            }
            if self.pres.is_standard(&e) {
                return Some(e);
            }
        }
    }

    fn push_mono(&mut self, e: Exps) {
        let w = self.pres.order.weight(&e);
        self.index_by_weight.insert(w.clone(), self.monos.len());
        self.weights.push(w);
        self.monos.push(e);
    }

    /// Materialize at least `n` basis monomials.
    pub fn ensure_count(&mut self, n: usize, quiet: bool) -> Result<()> {
        if n > MAX_ENUM {
            return Err(Error::TooLarge(format!("basis request {} exceeds cap", n)));
        }
        while self.monos.len() < n {
            match self.pop_next() {
                Some(e) => self.push_mono(e),
                None => {
                    if quiet {
                        return Err(Error::TooLarge("basis exhausted".into()));
                    }
                    return Err(Error::TooLarge(
                        "standard monomial basis is finite and exhausted".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Materialize every basis monomial of weight <= w (in the semigroup
    /// order). Errors out at the enumeration cap.
    pub fn ensure_weight(&mut self, w: &Weight) -> Result<()> {
        loop {
            if let Some(last) = self.weights.last() {
                if self.pres.order.cmp_weights(last, w) == std::cmp::Ordering::Greater {
                    return Ok(());
                }
            }
            if self.monos.len() >= MAX_ENUM {
                return Err(Error::TooLarge("basis enumeration cap reached".into()));
            }
            match self.pop_next() {
                Some(e) => self.push_mono(e),
                None => return Ok(()), // finite basis fully enumerated
            }
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    /// 0-based index of the weight in the enumerated prefix.
    pub fn index_of_weight(&mut self, w: &Weight) -> Result<Option<usize>> {
        if w.iter().any(|&x| x < 0) {
            return Ok(None);
        }
        self.ensure_weight(w)?;
        Ok(self.index_by_weight.get(w).copied())
    }

    pub fn in_gamma(&mut self, w: &Weight) -> Result<bool> {
        Ok(self.index_of_weight(w)?.is_some())
    }

    pub fn mono_of_weight(&mut self, w: &Weight) -> Result<Option<Exps>> {
        Ok(self.index_of_weight(w)?.map(|i| self.monos[i].clone()))
    }

    /// All semigroup divisors of `w`: u in Gamma with w - u in Gamma.
    pub fn divisors(&mut self, w: &Weight) -> Result<Vec<Weight>> {
        self.ensure_weight(w)?;
        let mut out = Vec::new();
        for u in self.weights.clone() {
            if self.pres.order.cmp_weights(&u, w) == std::cmp::Ordering::Greater {
                break;
            }
            let diff = WeightOrder::sub_weights(w, &u);
            if self.in_gamma(&diff)? {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// Number of ordered factorizations of `w` in the value semigroup.
    pub fn nu(&mut self, w: &Weight) -> Result<usize> {
        Ok(self.divisors(w)?.len())
    }

    /// o(X^a * X^b): 1-based index of the product's weight.
    pub fn oplus(&mut self, i: usize, j: usize) -> Result<usize> {
        // i, j are 1-based basis indices
        self.ensure_count(i.max(j), false)?;
        let w = WeightOrder::add_weights(&self.weights[i - 1], &self.weights[j - 1]);
        match self.index_of_weight(&w)? {
            Some(k) => Ok(k + 1),
            None => Err(Error::TooLarge(
                "product weight outside enumerable basis".into(),
            )),
        }
    }

    /// 1-based index of f's leading standard monomial; None for f in I
    /// (the paper writes o(0) = -1).
    pub fn o_index(&mut self, f: &Poly) -> Result<Option<usize>> {
        let nf = self.pres.normal_form(f);
        let Some(lead) = leading_exp(&nf, &self.pres.order) else {
            return Ok(None);
        };
        let w = self.pres.order.weight(&lead);
        match self.index_of_weight(&w)? {
            Some(i) => Ok(Some(i + 1)),
            None => Err(Error::TooLarge("leading weight beyond enumeration".into())),
        }
    }
}

/// Encode a weight so plain lexicographic comparison of the key agrees with
/// the semigroup order.
pub fn weight_sort_key(ord: &WeightOrder, w: &Weight) -> Vec<i64> {
    use crate::order::SemigroupOrder::*;
    match ord.sem {
        Integer | Lex => w.clone(),
        GradedLex => {
            let mut k = vec![w.iter().sum()];
            k.extend(w.iter().copied());
            k
        }
        GradedRevLex => {
            let mut k = vec![w.iter().sum()];
            k.extend(w.iter().rev().map(|&x| -x));
            k
        }
    }
}

/// Scan-based minimum of nu over weights strictly beyond the first `ell`
/// basis indices, with a provable stopping bound where one is available.
///
/// Sound horizons: r = 1 (conductor bound for numerical semigroups) and
/// permutation weight matrices under graded orders (nu >= 1 + total degree).
/// Other shapes fall back to a wide fixed scan window.
pub fn min_nu_beyond(basis: &mut DeltaBasis<'_>, ell: usize) -> Result<usize> {
    basis.ensure_count(ell + 1, false)?;
    let ord = basis.presentation().order.clone();
    let r1 = ord.rank() == 1;
    let perm = is_permutation_matrix(&ord)
        && matches!(
            ord.sem,
            crate::order::SemigroupOrder::GradedLex | crate::order::SemigroupOrder::GradedRevLex
        );
    let conductor = if r1 { numerical_conductor(basis)? } else { None };

    let mut best: Option<usize> = None;
    let mut k = ell; // 0-based index of the next weight to inspect
    let fallback_cap = ell + 4 * (ell + 64);
    loop {
        basis.ensure_count(k + 2, false)?;
        let w = basis.weights[k].clone();
        let n = basis.nu(&w)?;
        best = Some(best.map_or(n, |b| b.min(n)));
        let b = best.unwrap();
        // provable tail bounds
        if r1 {
            if let Some((d, c)) = conductor {
                let scaled = w[0] / d;
                if scaled >= 2 * c && (scaled - 2 * c + 1) as usize > b {
                    return Ok(b);
                }
            }
        }
        if perm && ord.rank() > 1 {
            let total: i64 = w.iter().sum();
            if (total + 1) as usize > b {
                return Ok(b);
            }
        }
        if k > fallback_cap {
            return Ok(b); // documented heuristic window for exotic shapes
        }
        k += 1;
    }
}

/// Largest weight whose divisor count stays within `t`: every footprint of a
/// locator ideal for at most `t` errors lies (weight-wise) at or below it.
pub fn max_weight_with_nu_at_most(basis: &mut DeltaBasis<'_>, t: usize) -> Result<Weight> {
    let ord = basis.presentation().order.clone();
    let r1 = ord.rank() == 1;
    let perm = is_permutation_matrix(&ord)
        && matches!(
            ord.sem,
            crate::order::SemigroupOrder::GradedLex | crate::order::SemigroupOrder::GradedRevLex
        );
    let conductor = if r1 { numerical_conductor(basis)? } else { None };
    let mut last = basis.presentation().order.zero_weight();
    let mut k = 0usize;
    let fallback_cap = 4 * (t + 64);
    loop {
        basis.ensure_count(k + 2, false)?;
        let w = basis.weights[k].clone();
        let n = basis.nu(&w)?;
        if n <= t {
            last = w.clone();
        }
        if r1 {
            if let Some((d, c)) = conductor {
                let scaled = w[0] / d;
                if scaled >= 2 * c && (scaled - 2 * c + 1) as usize > t {
                    return Ok(last);
                }
            }
        }
        if perm && ord.rank() > 1 {
            let total: i64 = w.iter().sum();
            if (total + 1) as usize > t {
                return Ok(last);
            }
        }
        if k > fallback_cap {
            return Ok(last);
        }
        k += 1;
    }
}

fn is_permutation_matrix(ord: &WeightOrder) -> bool {
    let r = ord.rank();
    let s = ord.nvars();
    if r != s {
        return false;
    }
    let mut used = vec![false; s];
    for row in &ord.matrix {
        let ones: Vec<usize> = row
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect();
        if ones.len() != 1 || row[ones[0]] != 1 || used[ones[0]] {
            return false;
        }
        used[ones[0]] = true;
    }
    true
}

/// For r = 1: gcd of the generating weights and the conductor of the scaled
/// numerical semigroup (least c with all integers >= c in the semigroup).
fn numerical_conductor(basis: &mut DeltaBasis<'_>) -> Result<Option<(i64, i64)>> {
    let ord = basis.presentation().order.clone();
    if ord.rank() != 1 {
        return Ok(None);
    }
    let gens: Vec<i64> = ord.matrix[0].iter().map(|&x| x as i64).collect();
    if gens.iter().any(|&g| g <= 0) {
        return Ok(None);
    }
    let mut d = 0i64;
    for &g in &gens {
        d = gcd(d, g);
    }
    let min_gen = *gens.iter().min().unwrap() / d;
    // scan membership of the scaled semigroup until min_gen consecutive hits
    let mut run = 0i64;
    let mut w = 0i64;
    let mut conductor = 0i64;
    while run < min_gen {
        let member = basis.in_gamma(&vec![w * d])?;
        if member {
            if run == 0 {
                conductor = w;
            }
            run += 1;
        } else {
            run = 0;
        }
        w += 1;
        if w > 100_000 {
            return Ok(None);
        }
    }
    Ok(Some((d, conductor)))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
