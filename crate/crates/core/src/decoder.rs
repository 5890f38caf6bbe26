//! Locator-ideal computation from syndromes: the Berlekamp-Massey-Sakata
//! iteration over the value semigroup with majority voting for unknown
//! syndromes, plus a direct linear-algebra locator oracle used as
//! cross-check.
//!
//! Throughout, basis elements are indexed by their weights (all standard
//! monomials of the presentation have pairwise distinct weights), so the
//! semigroup operation is weight addition and semigroup division is weight
//! subtraction plus a membership test.

use std::collections::{BTreeMap, BTreeSet};

use crate::codes::{corner_monomials, EvaluationCode};
use crate::domain::{max_weight_with_nu_at_most, DeltaBasis, Presentation};
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::groebner::{buchberger, finite_footprint, leading_exp, normal_form};
use crate::linalg;
use crate::order::{Weight, WeightOrder};
use crate::poly::{Exps, Poly};

/// Provenance of a syndrome table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyndromeStatus {
    Known,
    Voted,
    Derived,
}

/// The decoder's view of the syndrome series: values for standard monomials
/// of I plus the field equations, with normal-form propagation for
/// everything else.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    pub pres: Presentation,
    /// Reduced Groebner basis of I + <X_i^q - X_i>.
    pub derivation_basis: Vec<Poly>,
    entries: BTreeMap<Exps, (Gf, SyndromeStatus)>,
}

impl SyndromeTable {
    /// Known entries from a received word: E_u = <received, ev(X^u)> for the
    /// first ell basis monomials.
    pub fn init(code: &EvaluationCode, received: &[Gf]) -> Result<SyndromeTable> {
        let known = crate::codes::syndromes_known(code, received)?;
        let mut entries = BTreeMap::new();
        for (e, v) in known {
            entries.insert(e, (v, SyndromeStatus::Known));
        }
        Ok(SyndromeTable {
            pres: code.pres.clone(),
            derivation_basis: code.pointwise_basis.clone(),
            entries,
        })
    }

    /// Full table from a known error vector: every pointwise-standard
    /// monomial gets its true syndrome. Test and cross-check scenarios.
    pub fn from_error(code: &EvaluationCode, error: &[(Vec<Gf>, Gf)]) -> SyndromeTable {
        let pres = &code.pres;
        let field = &pres.field;
        let basis = code.pointwise_basis.clone();
        let monos = finite_footprint(&basis, &pres.order).expect("pointwise footprint finite");
        let mut entries = BTreeMap::new();
        for e in monos {
            let mut acc = Gf::ZERO;
            for (p, v) in error {
                let m = Poly::monomial(e.clone(), Gf::ONE).eval(field, p).unwrap();
                acc = field.add(acc, field.mul(m, *v));
            }
            entries.insert(e, (acc, SyndromeStatus::Known));
        }
        SyndromeTable {
            pres: pres.clone(),
            derivation_basis: basis,
            entries,
        }
    }

    pub fn status(&self, e: &Exps) -> Option<SyndromeStatus> {
        self.entries.get(e).map(|&(_, s)| s)
    }

    pub fn value(&self, e: &Exps) -> Option<Gf> {
        self.entries.get(e).map(|&(v, _)| v)
    }

    pub fn all_known_zero(&self) -> bool {
        self.entries
            .values()
            .all(|&(v, s)| s != SyndromeStatus::Known || v.is_zero())
    }

    pub fn record_vote(&mut self, e: Exps, v: Gf) {
        self.entries.insert(e, (v, SyndromeStatus::Voted));
    }

    /// Value of E at a monomial, deriving non-standard monomials through the
    /// derivation basis. Err carries the first standard monomial whose value
    /// is missing.
    pub fn resolve(&mut self, e: &Exps) -> std::result::Result<Gf, Exps> {
        if let Some(&(v, _)) = self.entries.get(e) {
            return Ok(v);
        }
        let field = self.pres.field.clone();
        let nf = normal_form(
            &field,
            &Poly::monomial(e.clone(), Gf::ONE),
            &self.derivation_basis,
            &self.pres.order,
        );
        if nf.terms.len() == 1 && nf.terms.contains_key(e) && nf.terms[e] == Gf::ONE {
            return Err(e.clone()); // standard and unknown
        }
        let mut acc = Gf::ZERO;
        for (sub, &c) in &nf.terms.clone() {
            let v = self.resolve(sub)?;
            acc = field.add(acc, field.mul(c, v));
        }
        self.entries.insert(e.clone(), (acc, SyndromeStatus::Derived));
        Ok(acc)
    }

    /// Syndrome of a polynomial: reduce to the pointwise-standard basis and
    /// sum table values. Err carries the first missing standard monomial.
    pub fn syn_raw(&mut self, f: &Poly) -> std::result::Result<Gf, Exps> {
        if f.is_zero() {
            return Ok(Gf::ZERO);
        }
        let field = self.pres.field.clone();
        let nf = normal_form(&field, f, &self.derivation_basis, &self.pres.order);
        let mut acc = Gf::ZERO;
        for (e, &c) in &nf.terms {
            let v = self.resolve(e)?;
            acc = field.add(acc, field.mul(c, v));
        }
        Ok(acc)
    }

    /// Public syndrome mapping; missing values become NeedSyndrome.
    pub fn syn(&mut self, f: &Poly) -> Result<Gf> {
        self.syn_raw(f)
            .map_err(|e| Error::NeedSyndrome(Poly::monomial(e, Gf::ONE).render(&self.pres.names)))
    }
}

/// One majority-vote record: the weight voted on, the tallies, the winner.
#[derive(Debug, Clone)]
pub struct VoteRecord {
    pub monomial: Exps,
    pub weight: Weight,
    pub tallies: BTreeMap<u16, usize>,
    pub winner: Gf,
}

/// Per-step trace line data.
#[derive(Debug, Clone)]
pub struct StepTrace {
    pub index: usize,
    pub monomial: Exps,
    pub footprint_size: usize,
    pub ext_corners: Vec<Exps>,
    pub int_corners: Vec<Exps>,
    pub vote: Option<VoteRecord>,
    pub failures: usize,
}

/// The running state of the iteration at step m.
#[derive(Debug, Clone)]
pub struct BmsState {
    /// Number of basis indices processed so far.
    pub step: usize,
    /// Footprint estimate as a set of weights (keys are deterministic).
    pub footprint: BTreeSet<Weight>,
    /// Exterior corner weight -> locator candidate f with o(f) = corner and
    /// fail(f) beyond every processed index.
    pub locators: BTreeMap<Weight, Poly>,
    /// Interior corner weight -> witness g with span(g) = corner, plus its
    /// nonzero span value.
    pub witnesses: BTreeMap<Weight, (Poly, Gf)>,
    /// Weight of the last witnessed failure.
    pub last_fail: Option<Weight>,
}

impl BmsState {
    fn new(nvars: usize, zero_w: Weight) -> BmsState {
        let mut locators = BTreeMap::new();
        locators.insert(zero_w, Poly::one(nvars));
        BmsState {
            step: 0,
            footprint: BTreeSet::new(),
            locators,
            witnesses: BTreeMap::new(),
            last_fail: None,
        }
    }
}

/// The decoder's product: a reduced Groebner basis of the error-locator
/// ideal and its footprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorIdeal {
    pub basis: Vec<Poly>,
    pub footprint: Vec<Exps>,
}

impl LocatorIdeal {
    pub fn error_count(&self) -> usize {
        self.footprint.len()
    }
}

/// Locator ideal plus run diagnostics.
#[derive(Debug, Clone)]
pub struct BmsOutcome {
    pub locator: LocatorIdeal,
    pub votes: Vec<VoteRecord>,
    pub trace: Vec<StepTrace>,
    pub steps: usize,
}

/// Default iteration cap.
pub const DEFAULT_T_MAX: usize = 512;

/// Driver context owning the basis enumeration and the table borrow.
pub struct BmsRun<'a, 'b> {
    pub pres: &'a Presentation,
    pub basis: DeltaBasis<'a>,
    pub table: &'b mut SyndromeTable,
    pub state: BmsState,
    pub trace: Vec<StepTrace>,
    pub votes: Vec<VoteRecord>,
    gen_weights: Vec<Weight>,
}

impl<'a, 'b> BmsRun<'a, 'b> {
    pub fn new(pres: &'a Presentation, table: &'b mut SyndromeTable) -> BmsRun<'a, 'b> {
        let basis = DeltaBasis::new(pres);
        let gen_weights = (0..pres.nvars())
            .map(|i| {
                let mut e = vec![0u32; pres.nvars()];
                e[i] = 1;
                pres.order.weight(&e)
            })
            .collect();
        let zero = pres.order.zero_weight();
        BmsRun {
            pres,
            basis,
            table,
            state: BmsState::new(pres.nvars(), zero),
            trace: Vec::new(),
            votes: Vec::new(),
            gen_weights,
        }
    }

    fn wcmp(&self, a: &Weight, b: &Weight) -> std::cmp::Ordering {
        self.pres.order.cmp_weights(a, b)
    }

    fn mono_of(&mut self, w: &Weight) -> Result<Exps> {
        self.basis
            .mono_of_weight(w)?
            .ok_or_else(|| Error::TooLarge(format!("no standard monomial of weight {:?}", w)))
    }

    /// Exterior corners: minimal weights outside the footprint.
    fn ext_corners(&mut self, fp: &BTreeSet<Weight>) -> Result<Vec<Weight>> {
        let zero = self.pres.order.zero_weight();
        let mut cand: BTreeSet<Weight> = BTreeSet::new();
        if !fp.contains(&zero) {
            cand.insert(zero);
        }
        let gens = self.gen_weights.clone();
        for d in fp {
            for g in &gens {
                let w = WeightOrder::add_weights(d, g);
                if !fp.contains(&w) {
                    cand.insert(w);
                }
            }
        }
        let mut out = Vec::new();
        'cand: for c in cand {
            for d in self.basis.divisors(&c)? {
                if d != c && !fp.contains(&d) {
                    continue 'cand;
                }
            }
            out.push(c);
        }
        out.sort_by(|a, b| self.pres.order.cmp_weights(a, b));
        Ok(out)
    }

    /// Interior corners: maximal footprint weights under semigroup division.
    fn int_corners(&mut self, fp: &BTreeSet<Weight>) -> Result<Vec<Weight>> {
        let all: Vec<Weight> = fp.iter().cloned().collect();
        let mut out = Vec::new();
        'outer: for c in &all {
            for d in &all {
                if d != c {
                    let diff = WeightOrder::sub_weights(d, c);
                    if self.basis.in_gamma(&diff)? {
                        continue 'outer;
                    }
                }
            }
            out.push(c.clone());
        }
        out.sort_by(|a, b| self.pres.order.cmp_weights(a, b));
        Ok(out)
    }

    /// Shifted locator with leading weight `target`, built from the corner
    /// polynomial that divides it; monic by construction.
    fn shifted_locator(&mut self, target: &Weight) -> Result<Poly> {
        let field = self.pres.field.clone();
        let corners: Vec<Weight> = self.state.locators.keys().cloned().collect();
        for s in corners {
            let diff = WeightOrder::sub_weights(target, &s);
            if self.basis.in_gamma(&diff)? {
                let shift = self.mono_of(&diff)?;
                let f = self.state.locators[&s].clone();
                let shifted = self.pres.normal_form(&f.mul_term(&field, &shift, Gf::ONE));
                return Ok(crate::groebner::make_monic(&field, &shifted, &self.pres.order));
            }
        }
        Err(Error::DecodeFailure {
            stage: "bms",
            detail: "no corner divides the requested shift target".into(),
        })
    }

    /// Majority vote for the unknown syndrome at weight `w`.
    ///
    /// Votes are cast by ordered pairs (u, v) of semigroup elements with
    /// u + v = w and neither in the current footprint; each casts the value
    /// that keeps the shifted locator at u from failing against v.
    pub fn majority_vote(&mut self, w: &Weight) -> Result<VoteRecord> {
        let field = self.pres.field.clone();
        let mono = self.mono_of(w)?;
        let mut tallies: BTreeMap<u16, usize> = BTreeMap::new();
        for u in self.basis.divisors(w)? {
            let v = WeightOrder::sub_weights(w, &u);
            if self.state.footprint.contains(&u) || self.state.footprint.contains(&v) {
                continue;
            }
            let fu = self.shifted_locator(&u)?;
            let bv = self.mono_of(&v)?;
            let prod = self
                .pres
                .normal_form(&fu.mul_term(&field, &bv, Gf::ONE));
            // prod = lam * b_w + lower; the candidate zeroes the discrepancy
            let lam = prod.coeff(&mono);
            if lam.is_zero() {
                return Err(Error::DecodeFailure {
                    stage: "voting",
                    detail: "check product lost its top term".into(),
                });
            }
            let mut rest = Gf::ZERO;
            for (e, &c) in &prod.terms {
                if e == &mono {
                    continue;
                }
                let val = self.table.syn_raw(&Poly::monomial(e.clone(), c)).map_err(|m| {
                    Error::NeedSyndrome(Poly::monomial(m, Gf::ONE).render(&self.pres.names))
                })?;
                rest = field.add(rest, val);
            }
            let cand = field.neg(field.div(rest, lam)?);
            *tallies.entry(cand.0).or_insert(0) += 1;
        }
        let mut best: Option<(Gf, usize)> = None;
        let mut tied = false;
        for (&v, &n) in &tallies {
            match best {
                None => best = Some((Gf(v), n)),
                Some((_, bn)) if n > bn => {
                    best = Some((Gf(v), n));
                    tied = false;
                }
                Some((_, bn)) if n == bn => tied = true,
                _ => {}
            }
        }
        let name = Poly::monomial(mono.clone(), Gf::ONE).render(&self.pres.names);
        let Some((winner, _)) = best else {
            return Err(Error::NoMajority(name));
        };
        if tied {
            return Err(Error::NoMajority(name));
        }
        self.table.record_vote(mono.clone(), winner);
        let rec = VoteRecord {
            monomial: mono,
            weight: w.clone(),
            tallies,
            winner,
        };
        self.votes.push(rec.clone());
        Ok(rec)
    }

    /// Process the next basis index, restoring the state invariants.
    pub fn step(&mut self) -> Result<()> {
        let field = self.pres.field.clone();
        let idx = self.state.step;
        self.basis.ensure_count(idx + 1, false)?;
        let w = self.basis.weights[idx].clone();
        let mono = self.basis.monos[idx].clone();

        // resolve the syndrome at this weight, voting when it is unknown
        let mut vote = None;
        if self.table.resolve(&mono).is_err() {
            vote = Some(self.majority_vote(&w)?);
        }

        // discrepancies of the current corner polynomials
        let sigma: Vec<Weight> = self.state.locators.keys().cloned().collect();
        let mut failing: BTreeMap<Weight, Gf> = BTreeMap::new();
        for s in &sigma {
            let j = WeightOrder::sub_weights(&w, s);
            if !self.basis.in_gamma(&j)? {
                continue;
            }
            let bj = self.mono_of(&j)?;
            let f = self.state.locators[s].clone();
            let d = self.table.syn(&f.mul_term(&field, &bj, Gf::ONE))?;
            if !d.is_zero() {
                failing.insert(s.clone(), d);
            }
        }
        if !failing.is_empty() {
            self.state.last_fail = Some(w.clone());
        }

        // footprint growth: spans of failing polynomials and their divisors
        let mut new_fp = self.state.footprint.clone();
        for s in failing.keys() {
            let js = WeightOrder::sub_weights(&w, s);
            for u in self.basis.divisors(&js)? {
                new_fp.insert(u);
            }
        }
        let sigma2 = self.ext_corners(&new_fp)?;
        let delta2 = self.int_corners(&new_fp)?;

        // witness update: keep old interior-corner witnesses, recruit the
        // failed polynomials at the new corners (their span is exact there)
        let mut witnesses2: BTreeMap<Weight, (Poly, Gf)> = BTreeMap::new();
        for c in &delta2 {
            if let Some(gd) = self.state.witnesses.get(c) {
                witnesses2.insert(c.clone(), gd.clone());
                continue;
            }
            let mut found = None;
            for (s, d) in &failing {
                if &WeightOrder::sub_weights(&w, s) == c {
                    found = Some((self.state.locators[s].clone(), *d));
                }
            }
            let Some(fd) = found else {
                return Err(Error::DecodeFailure {
                    stage: "bms",
                    detail: "new interior corner without a failure witness".into(),
                });
            };
            witnesses2.insert(c.clone(), fd);
        }

        // locator update per new exterior corner
        let mut locators2: BTreeMap<Weight, Poly> = BTreeMap::new();
        for s2 in &sigma2 {
            if let Some(f) = self.state.locators.get(s2) {
                if !failing.contains_key(s2) {
                    locators2.insert(s2.clone(), f.clone());
                    continue;
                }
            }
            let f0 = self.shifted_locator(s2)?;
            let jp = WeightOrder::sub_weights(&w, s2);
            if !self.basis.in_gamma(&jp)? {
                locators2.insert(s2.clone(), f0);
                continue;
            }
            let bjp = self.mono_of(&jp)?;
            let dstar = self.table.syn(&f0.mul_term(&field, &bjp, Gf::ONE))?;
            if dstar.is_zero() {
                locators2.insert(s2.clone(), f0);
                continue;
            }
            // correct with a witness of span exactly jp
            let mut candidates: Vec<Weight> = Vec::new();
            for c in witnesses2.keys() {
                let diff = WeightOrder::sub_weights(c, &jp);
                if self.basis.in_gamma(&diff)? {
                    candidates.push(c.clone());
                }
            }
            candidates.sort_by(|a, b| self.pres.order.cmp_weights(a, b));
            let corrected = if let Some(c) = candidates.first() {
                let (g, _) = witnesses2[c].clone();
                let gamma = WeightOrder::sub_weights(c, &jp);
                let shift = self.mono_of(&gamma)?;
                let h = self.pres.normal_form(&g.mul_term(&field, &shift, Gf::ONE));
                let dh = self.table.syn(&h.mul_term(&field, &bjp, Gf::ONE))?;
                if dh.is_zero() {
                    None
                } else {
                    let coef = field.div(dstar, dh)?;
                    let fnew = f0.sub(&field, &h.scale(&field, coef));
                    let target_mono = self.mono_of(s2)?;
                    let lead = leading_exp(&fnew, &self.pres.order);
                    if lead.as_ref() == Some(&target_mono) {
                        Some(crate::groebner::make_monic(&field, &fnew, &self.pres.order))
                    } else {
                        None // leading coefficient cancelled
                    }
                }
            } else {
                None
            };
            let fnew = match corrected {
                Some(f) => f,
                None => self.direct_solve(s2, &jp)?,
            };
            locators2.insert(s2.clone(), fnew);
        }

        self.state.footprint = new_fp;
        self.state.locators = locators2;
        self.state.witnesses = witnesses2;
        self.state.step += 1;

        let fp_monos = self.footprint_monos()?;
        let ext = sigma2
            .iter()
            .map(|s| self.mono_of(s))
            .collect::<Result<Vec<_>>>()?;
        let int = delta2
            .iter()
            .map(|c| self.mono_of(c))
            .collect::<Result<Vec<_>>>()?;
        self.trace.push(StepTrace {
            index: idx + 1,
            monomial: mono,
            footprint_size: fp_monos.len(),
            ext_corners: ext,
            int_corners: int,
            vote,
            failures: failing.len(),
        });
        Ok(())
    }

    /// Solve directly for a monic polynomial with leading weight `s2` whose
    /// checks vanish through `jp`. Fallback when the incremental update
    /// degenerates.
    fn direct_solve(&mut self, s2: &Weight, jp: &Weight) -> Result<Poly> {
        let field = self.pres.field.clone();
        let top = self.mono_of(s2)?;
        let top_idx = self
            .basis
            .index_of_weight(s2)?
            .expect("target weight enumerated");
        let support: Vec<Exps> = self.basis.monos[..top_idx].to_vec();
        let mut gammas: Vec<Exps> = Vec::new();
        for k in 0.. {
            self.basis.ensure_count(k + 1, false)?;
            let g = self.basis.weights[k].clone();
            let total = WeightOrder::add_weights(s2, &g);
            if self.wcmp(&total, &WeightOrder::add_weights(s2, jp)) == std::cmp::Ordering::Greater
            {
                break;
            }
            gammas.push(self.basis.monos[k].clone());
        }
        let mut columns = Vec::new();
        for u in &support {
            let mut col = Vec::new();
            for g in &gammas {
                let prod: Exps = u.iter().zip(g).map(|(a, b)| a + b).collect();
                col.push(self.table.syn(&Poly::monomial(prod, Gf::ONE))?);
            }
            columns.push(col);
        }
        let mut target = Vec::new();
        for g in &gammas {
            let prod: Exps = top.iter().zip(g).map(|(a, b)| a + b).collect();
            target.push(field.neg(self.table.syn(&Poly::monomial(prod, Gf::ONE))?));
        }
        let sol = linalg::solve_columns(&field, &columns, &target).ok_or(Error::DecodeFailure {
            stage: "bms",
            detail: "corner update system is unsolvable".into(),
        })?;
        let mut f = Poly::monomial(top, Gf::ONE);
        for (c, u) in sol.into_iter().zip(support) {
            f.add_term(&field, u, c);
        }
        Ok(f)
    }

    fn footprint_monos(&mut self) -> Result<Vec<Exps>> {
        let fp: Vec<Weight> = self.state.footprint.iter().cloned().collect();
        let mut out = Vec::new();
        for w in fp {
            out.push(self.mono_of(&w)?);
        }
        out.sort_by(|a, b| self.pres.order.cmp(a, b));
        Ok(out)
    }

    /// Sound stopping horizon: every corner polynomial checked through
    /// (corner + W_t) lies in the locator ideal when at most t errors
    /// occurred, where W_t caps footprint weights of t-error ideals.
    fn horizon(&mut self, w_cap: &Weight) -> Weight {
        let max_corner = self
            .state
            .locators
            .keys()
            .cloned()
            .max_by(|a, b| self.pres.order.cmp_weights(a, b))
            .unwrap_or_else(|| self.pres.order.zero_weight());
        WeightOrder::add_weights(&max_corner, w_cap)
    }

    /// Completion: the corner polynomials together with the presentation
    /// ideal generate the locator ideal; reduce to its Groebner basis.
    pub fn finalize(&mut self) -> Result<LocatorIdeal> {
        let field = self.pres.field.clone();
        let mut gens: Vec<Poly> = self.state.locators.values().cloned().collect();
        gens.extend(self.pres.generators.iter().cloned());
        let basis = buchberger(&field, &gens, &self.pres.order);
        let footprint = finite_footprint(&basis, &self.pres.order).ok_or(Error::DecodeFailure {
            stage: "bms",
            detail: "locator footprint is not finite".into(),
        })?;
        Ok(LocatorIdeal { basis, footprint })
    }
}

/// Run the iteration with voting until the stopping horizon passes, then
/// return the reduced locator basis.
pub fn bms_run(
    code: &EvaluationCode,
    table: &mut SyndromeTable,
    t_fr: usize,
    t_max: usize,
) -> Result<BmsOutcome> {
    let pres = &code.pres;
    if table.all_known_zero() {
        // weight-0 error within the decoding radius
        return Ok(BmsOutcome {
            locator: LocatorIdeal {
                basis: vec![Poly::one(pres.nvars())],
                footprint: vec![],
            },
            votes: vec![],
            trace: vec![],
            steps: 0,
        });
    }
    let mut run = BmsRun::new(pres, table);
    let w_cap = {
        let mut b = DeltaBasis::new(pres);
        max_weight_with_nu_at_most(&mut b, t_fr.max(1))?
    };
    loop {
        if run.state.step >= t_max {
            return Err(Error::DecodeFailure {
                stage: "bms",
                detail: format!("no stabilization within {} steps", t_max),
            });
        }
        run.basis.ensure_count(run.state.step + 1, false)?;
        let w = run.basis.weights[run.state.step].clone();
        let hor = run.horizon(&w_cap);
        if run.pres.order.cmp_weights(&w, &hor) == std::cmp::Ordering::Greater {
            break;
        }
        run.step()?;
    }
    let locator = run.finalize()?;
    Ok(BmsOutcome {
        locator,
        votes: run.votes,
        trace: run.trace,
        steps: run.state.step,
    })
}

/// span(f) = least basis index whose check is nonzero, fail(f) = o(f) (+)
/// span(f); both None when f annihilates everything the table can see.
pub fn span_fail(
    pres: &Presentation,
    table: &mut SyndromeTable,
    f: &Poly,
    scan: usize,
) -> Result<(Option<usize>, Option<usize>)> {
    if f.is_zero() {
        return Err(Error::Parse("span of the zero polynomial".into()));
    }
    let field = pres.field.clone();
    let mut basis = DeltaBasis::new(pres);
    basis.ensure_count(scan, false)?;
    let o = basis
        .o_index(f)?
        .expect("nonzero polynomial has an index");
    for ell in 1..=scan {
        let b = Poly::monomial(basis.monos[ell - 1].clone(), Gf::ONE);
        let v = table.syn(&f.mul(&field, &b))?;
        if !v.is_zero() {
            let fail = basis.oplus(o, ell)?;
            return Ok((Some(ell), Some(fail)));
        }
    }
    Ok((None, None))
}

/// Direct locator oracle: scan monomials in increasing order, keep those
/// whose syndrome recurrence system is solvable as locator leading terms,
/// grow the footprint otherwise. Needs a table that can resolve every
/// requested syndrome (built from a known error in test scenarios).
pub fn locator_oracle(table: &mut SyndromeTable, bound: usize) -> Result<LocatorIdeal> {
    let pres = table.pres.clone();
    let field = pres.field.clone();
    let ord = pres.order.clone();
    let s = pres.nvars();
    // constraint monomials: the full pointwise-standard footprint
    let gammas = finite_footprint(&table.derivation_basis, &ord).ok_or(Error::RankDeficient)?;
    let syn_vec = |table: &mut SyndromeTable, e: &Exps| -> Result<Vec<Gf>> {
        let mut v = Vec::with_capacity(gammas.len());
        for g in &gammas {
            let prod: Exps = e.iter().zip(g).map(|(a, b)| a + b).collect();
            v.push(table.syn(&Poly::monomial(prod, Gf::ONE))?);
        }
        Ok(v)
    };
    let divides = |a: &Exps, b: &Exps| a.iter().zip(b).all(|(x, y)| x <= y);
    let key = |e: &Exps| {
        let w = ord.weight(e);
        (
            crate::domain::weight_sort_key(&ord, &w),
            ord.tiebreak.iter().map(|&i| e[i]).collect::<Vec<u32>>(),
            e.clone(),
        )
    };
    let mut frontier: BTreeSet<(Vec<i64>, Vec<u32>, Exps)> = BTreeSet::new();
    let mut seen: std::collections::HashSet<Exps> = std::collections::HashSet::new();
    let one = vec![0u32; s];
    frontier.insert(key(&one));
    seen.insert(one);
    let mut footprint: Vec<Exps> = Vec::new();
    let mut columns: Vec<Vec<Gf>> = Vec::new();
    let mut basis: Vec<Poly> = Vec::new();
    let mut lts: Vec<Exps> = Vec::new();
    while let Some(entry) = frontier.iter().next().cloned() {
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
        let v = syn_vec(table, &e)?;
        match linalg::solve_columns(&field, &columns, &v) {
            Some(sol) => {
                let mut g = Poly::monomial(e.clone(), Gf::ONE);
                for (c, u) in sol.iter().zip(&footprint) {
                    g.add_term(&field, u.clone(), field.neg(*c));
                }
                lts.push(e);
                basis.push(g);
            }
            None => {
                if footprint.len() >= bound {
                    return Err(Error::RankDeficient);
                }
                footprint.push(e);
                columns.push(v);
            }
        }
        if !footprint.is_empty() || !lts.is_empty() {
            let corners = corner_monomials(&footprint, s);
            if corners.iter().all(|c| lts.contains(c)) {
                let basis = crate::groebner::reduce_basis(&field, basis, &ord);
                let fp = finite_footprint(&basis, &ord).ok_or(Error::RankDeficient)?;
                return Ok(LocatorIdeal {
                    basis,
                    footprint: fp,
                });
            }
        }
    }
    Err(Error::RankDeficient)
}
