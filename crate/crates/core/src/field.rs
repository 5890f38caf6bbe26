//! Exact arithmetic in GF(p^m), p^m <= 2^16, in polynomial-basis representation.
//!
//! An element is stored as an integer code in [0, q); its base-p digits
//! d_0..d_{m-1} are the coefficients of 1, beta, ..., beta^{m-1} where beta
//! is the residue of the generator modulo the defining polynomial.

use crate::error::{Error, Result};

/// Element of a finite field, identified by its integer code.
///
/// Arithmetic goes through [`FieldSpec`]; both operands must come from the
/// same spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for Gf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A concrete field GF(p^m) with a verified-irreducible defining polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub q: u32,
    /// Coefficients of the monic defining polynomial, ascending degree, length m+1.
    pub modulus: Vec<u16>,
}

pub const MAX_Q: u32 = 1 << 16;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Build GF(p^m) from a monic defining polynomial given by its m+1
    /// coefficients in ascending degree. Irreducibility is verified by
    /// exhaustive trial division (fine at q <= 2^16).
    pub fn new(p: u32, m: u32, modulus: &[u32]) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::TooLarge("extension degree must be >= 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q *= p as u64;
            if q > MAX_Q as u64 {
                return Err(Error::TooLarge(format!("p^m = {}^{} exceeds 2^16", p, m)));
            }
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::DimensionMismatch(format!(
                "modulus needs {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus[m as usize] % p != 1 {
            return Err(Error::Parse("modulus must be monic".into()));
        }
        let modulus: Vec<u16> = modulus.iter().map(|&c| (c % p) as u16).collect();
        let spec = FieldSpec {
            p,
            m,
            q: q as u32,
            modulus,
        };
        spec.check_irreducible()?;
        Ok(spec)
    }

    /// The residue of the generator: the element beta, code p (digits 0,1,0,..).
    pub fn generator(&self) -> Gf {
        if self.m == 1 {
            // prime field: no extension generator; fall back to 1
            Gf(1)
        } else {
            Gf(self.p as u16)
        }
    }

    fn digits(&self, code: u16) -> Vec<u16> {
        let mut v = vec![0u16; self.m as usize];
        let mut c = code as u32;
        for d in v.iter_mut() {
            *d = (c % self.p) as u16;
            c /= self.p;
        }
        v
    }

    fn from_digits(&self, d: &[u16]) -> u16 {
        let mut c: u32 = 0;
        for &x in d.iter().rev() {
            c = c * self.p + x as u32;
        }
        c as u16
    }

    pub fn element(&self, code: u32) -> Result<Gf> {
        if code < self.q {
            Ok(Gf(code as u16))
        } else {
            Err(Error::Parse(format!(
                "element code {} out of range for q = {}",
                code, self.q
            )))
        }
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        let (da, db) = (self.digits(a.0), self.digits(b.0));
        let d: Vec<u16> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| ((x as u32 + y as u32) % self.p) as u16)
            .collect();
        Gf(self.from_digits(&d))
    }

    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u16> = self
            .digits(a.0)
            .iter()
            .map(|&x| ((self.p - x as u32) % self.p) as u16)
            .collect();
        Gf(self.from_digits(&d))
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            return Gf::ZERO;
        }
        let (da, db) = (self.digits(a.0), self.digits(b.0));
        let m = self.m as usize;
        // schoolbook product, degree <= 2m-2
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u32 * y as u32) % self.p;
            }
        }
        // reduce by the monic modulus
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in self.modulus.iter().enumerate().take(m) {
                let idx = k - m + j;
                prod[idx] = (prod[idx] + c * (self.p - mj as u32)) % self.p;
            }
        }
        let d: Vec<u16> = prod[..m].iter().map(|&x| x as u16).collect();
        Gf(self.from_digits(&d))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.is_zero() {
            return Gf::ZERO;
        }
        let mut base = a;
        let mut e = e % (self.q as u64 - 1);
        if e == 0 {
            return Gf::ONE;
        }
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.q as u16).map(Gf)
    }

    /// Trial division by every monic polynomial of degree 1..=m/2 over GF(p).
    fn check_irreducible(&self) -> Result<()> {
        let m = self.m as usize;
        let p = self.p;
        for deg in 1..=m / 2 {
            // enumerate monic polys of this degree: p^deg choices of lower coeffs
            let count = (p as u64).pow(deg as u32);
            for mut idx in 0..count {
                let mut divisor = vec![0u32; deg + 1];
                divisor[deg] = 1;
                for d in divisor.iter_mut().take(deg) {
                    *d = (idx % p as u64) as u32;
                    idx /= p as u64;
                }
                if self.poly_divides(&divisor) {
                    let desc = divisor
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| match (i, c) {
                            (0, c) => format!("{}", c),
                            (1, 1) => "x".into(),
                            (1, c) => format!("{}x", c),
                            (i, 1) => format!("x^{}", i),
                            (i, c) => format!("{}x^{}", c, i),
                        })
                        .collect::<Vec<_>>()
                        .join(" + ");
                    return Err(Error::Reducible(desc));
                }
            }
        }
        Ok(())
    }

    /// Does the given monic divisor divide the modulus over GF(p)?
    fn poly_divides(&self, divisor: &[u32]) -> bool {
        let p = self.p;
        let mut rem: Vec<u32> = self.modulus.iter().map(|&c| c as u32).collect();
        let dd = divisor.len() - 1;
        while rem.len() > dd && rem.len() > 1 {
            let lead = *rem.last().unwrap();
            if lead != 0 {
                let k = rem.len() - 1 - dd;
                for (j, &c) in divisor.iter().enumerate() {
                    let t = (lead * c) % p;
                    rem[k + j] = (rem[k + j] + p - t) % p;
                }
            }
            rem.pop();
        }
        rem.iter().all(|&c| c == 0)
    }
}

/// GF(16) as used throughout: F_2[beta]/(beta^4 + beta + 1).
pub fn gf16() -> FieldSpec {
    FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).expect("beta^4+beta+1 is irreducible")
}

/// GF(8): F_2[alpha]/(alpha^3 + alpha + 1).
pub fn gf8() -> FieldSpec {
    FieldSpec::new(2, 3, &[1, 1, 0, 1]).expect("alpha^3+alpha+1 is irreducible")
}

/// GF(4): F_2[alpha]/(alpha^2 + alpha + 1).
pub fn gf4() -> FieldSpec {
    FieldSpec::new(2, 2, &[1, 1, 1]).expect("alpha^2+alpha+1 is irreducible")
}
