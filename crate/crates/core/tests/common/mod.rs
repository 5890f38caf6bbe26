//! Shared builders for the integration suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordercodes::codes::{build_code, EvaluationCode};
use ordercodes::domain::Presentation;
use ordercodes::field::{gf16, gf8, FieldSpec, Gf};
use ordercodes::order::{SemigroupOrder, WeightOrder};
use ordercodes::poly::parse_poly;
use ordercodes::values::ErrorVector;

pub fn hermitian_presentation() -> Presentation {
    let f = gf16();
    let names: Vec<String> = vec!["X".into(), "Y".into()];
    let ord = WeightOrder::new(vec![vec![4, 5]], SemigroupOrder::Integer, vec![0, 1]).unwrap();
    let curve = parse_poly(&f, &names, "X^5 + Y^4 + Y").unwrap();
    Presentation::new(f, names, ord, vec![curve]).unwrap()
}

pub fn hermitian_code() -> EvaluationCode {
    build_code(&hermitian_presentation(), 20).unwrap()
}

pub fn plane8_presentation() -> Presentation {
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

pub fn plane8_code() -> EvaluationCode {
    build_code(&plane8_presentation(), 10).unwrap()
}

pub fn plane4_presentation() -> Presentation {
    let f = ordercodes::field::gf4();
    let names: Vec<String> = vec!["X".into(), "Y".into()];
    let ord = WeightOrder::new(
        vec![vec![1, 0], vec![0, 1]],
        SemigroupOrder::GradedLex,
        vec![0, 1],
    )
    .unwrap();
    Presentation::new(f, names, ord, vec![]).unwrap()
}

pub fn rs16_presentation() -> Presentation {
    let f = gf16();
    let ord = WeightOrder::new(vec![vec![1]], SemigroupOrder::Integer, vec![0]).unwrap();
    Presentation::new(f, vec!["X".into()], ord, vec![]).unwrap()
}

/// beta^k in GF(16) (beta = code 2).
pub fn b16(k: u64) -> Gf {
    gf16().pow(Gf(2), k)
}

/// alpha^k in GF(8) (alpha = code 2).
pub fn a8(k: u64) -> Gf {
    gf8().pow(Gf(2), k)
}

/// The seven error positions and values of the Hermitian worked example.
pub fn hermitian_golden_error() -> Vec<(Vec<Gf>, Gf)> {
    vec![
        (vec![b16(1), b16(6)], b16(1)),
        (vec![b16(2), b16(14)], b16(4)),
        (vec![b16(4), b16(6)], b16(12)),
        (vec![b16(5), b16(14)], Gf(1)),
        (vec![b16(8), b16(3)], Gf(1)),
        (vec![b16(11), b16(12)], b16(1)),
        (vec![Gf(0), Gf(0)], b16(1)),
    ]
}

/// The two-point error of the extended-cyclic worked example.
pub fn plane8_golden_error() -> Vec<(Vec<Gf>, Gf)> {
    let f = gf8();
    vec![
        (vec![Gf(1), Gf(1)], Gf(1)),
        (vec![a8(1), a8(2)], f.add(a8(2), Gf(1))),
    ]
}

/// Turn a point/value error list into (sparse vector, received word).
pub fn plant(code: &EvaluationCode, error: &[(Vec<Gf>, Gf)]) -> (ErrorVector, Vec<Gf>) {
    let mut ev = ErrorVector::default();
    for (p, v) in error {
        let i = code
            .points
            .points
            .iter()
            .position(|q| q == p)
            .expect("error point must be a code point");
        ev.entries.insert(i, *v);
    }
    (ev.clone(), ev.as_word(code.n()))
}

/// Seeded random error of the given weight.
pub fn random_error(rng: &mut ChaCha8Rng, code: &EvaluationCode, weight: usize) -> ErrorVector {
    let n = code.n();
    let q = code.pres.field.q;
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..weight.min(n) {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut ev = ErrorVector::default();
    for &i in idx.iter().take(weight.min(n)) {
        ev.entries.insert(i, Gf(rng.gen_range(1..q) as u16));
    }
    ev
}

/// Error list (points + values) from a sparse vector.
pub fn error_points(code: &EvaluationCode, ev: &ErrorVector) -> Vec<(Vec<Gf>, Gf)> {
    ev.entries
        .iter()
        .map(|(&i, &v)| (code.points.points[i].clone(), v))
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Textbook one-variable Berlekamp-Massey + Chien + Forney decoder, used as
/// the independent Reed-Solomon regression oracle. Works in the classical
/// convention Lambda(x) = prod (1 - P x), so error positions must be
/// nonzero field elements.
pub struct ClassicRs {
    pub field: FieldSpec,
    pub t: usize,
}

impl ClassicRs {
    /// Decode from the syndrome sequence S_0..S_{2t-1}; returns (position,
    /// value) pairs or None when the instance is inconsistent.
    pub fn decode(&self, synd: &[Gf]) -> Option<Vec<(Gf, Gf)>> {
        let f = &self.field;
        let n2 = 2 * self.t;
        assert_eq!(synd.len(), n2);
        // Massey iteration for the connection polynomial C(x), C(0) = 1
        let mut c = vec![Gf::ZERO; n2 + 1];
        let mut b = vec![Gf::ZERO; n2 + 1];
        c[0] = Gf::ONE;
        b[0] = Gf::ONE;
        let mut l = 0usize;
        let mut m = 1usize;
        let mut bb = Gf::ONE;
        for n in 0..n2 {
            let mut d = synd[n];
            for i in 1..=l {
                d = f.add(d, f.mul(c[i], synd[n - i]));
            }
            if d.is_zero() {
                m += 1;
            } else if 2 * l <= n {
                let t = c.clone();
                let coef = f.div(d, bb).unwrap();
                for i in 0..=n2 - m {
                    c[i + m] = f.sub(c[i + m], f.mul(coef, b[i]));
                }
                l = n + 1 - l;
                b = t;
                bb = d;
                m = 1;
            } else {
                let coef = f.div(d, bb).unwrap();
                for i in 0..=n2 - m {
                    c[i + m] = f.sub(c[i + m], f.mul(coef, b[i]));
                }
                m += 1;
            }
        }
        // Chien search: locators are inverses of roots of C
        let mut locs = Vec::new();
        for code in 1..f.q {
            let x = Gf(code as u16);
            let mut acc = Gf::ZERO;
            let mut pw = Gf::ONE;
            for &ci in c.iter().take(l + 1) {
                acc = f.add(acc, f.mul(ci, pw));
                pw = f.mul(pw, x);
            }
            if acc.is_zero() {
                locs.push(f.inv(x).unwrap());
            }
        }
        if locs.len() != l {
            return None;
        }
        // Omega = S(x) C(x) mod x^{2t}; Forney with b = 0 convention
        let mut omega = vec![Gf::ZERO; n2];
        for (i, &ci) in c.iter().enumerate().take(l + 1) {
            for (j, &sj) in synd.iter().enumerate() {
                if i + j < n2 {
                    omega[i + j] = f.add(omega[i + j], f.mul(ci, sj));
                }
            }
        }
        let eval_poly = |p: &[Gf], x: Gf| {
            let mut acc = Gf::ZERO;
            let mut pw = Gf::ONE;
            for &ci in p {
                acc = f.add(acc, f.mul(ci, pw));
                pw = f.mul(pw, x);
            }
            acc
        };
        // formal derivative of C
        let mut cder = vec![Gf::ZERO; n2];
        for i in (1..=l).step_by(2) {
            cder[i - 1] = c[i]; // char 2
        }
        let mut out = Vec::new();
        for &p in &locs {
            let xinv = f.inv(p).unwrap();
            let num = eval_poly(&omega, xinv);
            let den = eval_poly(&cder, xinv);
            if den.is_zero() {
                return None;
            }
            let v = f.mul(p, f.div(num, den).unwrap());
            out.push((p, f.neg(v)));
        }
        out.sort();
        Some(out)
    }
}
