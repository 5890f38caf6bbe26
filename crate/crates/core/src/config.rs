//! Workbench configuration: a sectioned `key = value` text format that
//! builds a presentation and a code.
//!
//! ```text
//! [field]
//! p = 2
//! m = 4
//! modulus = 1 1 0 0 1        # ascending-degree coefficients
//!
//! [presentation]
//! vars = X Y
//! row = 4 5                  # one weight-matrix row per line
//! order = integer            # integer | lex | graded-lex | graded-reverse-lex
//! tiebreak = X Y             # highest priority first
//! generator = X^5 + Y^4 + Y  # repeatable
//!
//! [code]
//! ell = 20
//! seed = 42
//! ```

use crate::codes::{build_code, EvaluationCode};
use crate::domain::Presentation;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::order::{SemigroupOrder, WeightOrder};
use crate::poly::parse_poly;

#[derive(Debug, Clone, Default)]
pub struct WorkbenchConfig {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
    pub vars: Vec<String>,
    pub rows: Vec<Vec<u32>>,
    pub order: Option<SemigroupOrder>,
    pub tiebreak: Vec<String>,
    pub generators: Vec<String>,
    pub ell: usize,
    pub seed: u64,
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Config {
        line,
        msg: msg.into(),
    }
}

impl WorkbenchConfig {
    pub fn parse(text: &str) -> Result<WorkbenchConfig> {
        let mut cfg = WorkbenchConfig {
            seed: 0,
            ..Default::default()
        };
        let mut section = String::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let stripped = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if stripped.is_empty() {
                continue;
            }
            if stripped.starts_with('[') && stripped.ends_with(']') {
                section = stripped[1..stripped.len() - 1].trim().to_string();
                continue;
            }
            let Some(eq) = stripped.find('=') else {
                return Err(bad(line, "expected key = value"));
            };
            let key = stripped[..eq].trim();
            let val = stripped[eq + 1..].trim();
            let ints = |v: &str| -> Result<Vec<u32>> {
                v.split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|_| bad(line, "expected integers")))
                    .collect()
            };
            match (section.as_str(), key) {
                ("field", "p") => cfg.p = val.parse().map_err(|_| bad(line, "bad p"))?,
                ("field", "m") => cfg.m = val.parse().map_err(|_| bad(line, "bad m"))?,
                ("field", "modulus") => cfg.modulus = ints(val)?,
                ("presentation", "vars") => {
                    cfg.vars = val.split_whitespace().map(|s| s.to_string()).collect()
                }
                ("presentation", "row") => cfg.rows.push(ints(val)?),
                ("presentation", "order") => {
                    cfg.order = Some(SemigroupOrder::parse(val).map_err(|e| match e {
                        Error::Parse(m) => bad(line, m),
                        e => e,
                    })?)
                }
                ("presentation", "tiebreak") => {
                    cfg.tiebreak = val.split_whitespace().map(|s| s.to_string()).collect()
                }
                ("presentation", "generator") => cfg.generators.push(val.to_string()),
                ("code", "ell") => cfg.ell = val.parse().map_err(|_| bad(line, "bad ell"))?,
                ("code", "seed") => cfg.seed = val.parse().map_err(|_| bad(line, "bad seed"))?,
                _ => return Err(bad(line, format!("unknown key '{}' in [{}]", key, section))),
            }
        }
        if cfg.p == 0 || cfg.m == 0 {
            return Err(bad(0, "missing [field] p / m"));
        }
        if cfg.vars.is_empty() {
            return Err(bad(0, "missing [presentation] vars"));
        }
        if cfg.rows.is_empty() {
            return Err(bad(0, "missing [presentation] row"));
        }
        if cfg.ell == 0 {
            return Err(bad(0, "missing [code] ell"));
        }
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<WorkbenchConfig> {
        let text = std::fs::read_to_string(path)?;
        WorkbenchConfig::parse(&text)
    }

    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.p, self.m, &self.modulus)
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let field = self.field()?;
        let order = WeightOrder::new(
            self.rows.clone(),
            self.order.unwrap_or(SemigroupOrder::Lex),
            self.tiebreak_indices()?,
        )?;
        let gens = self
            .generators
            .iter()
            .map(|g| parse_poly(&field, &self.vars, g))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(field, self.vars.clone(), order, gens)
    }

    fn tiebreak_indices(&self) -> Result<Vec<usize>> {
        if self.tiebreak.is_empty() {
            return Ok((0..self.vars.len()).collect());
        }
        self.tiebreak
            .iter()
            .map(|name| {
                self.vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::Parse(format!("tiebreak names unknown variable {}", name)))
            })
            .collect()
    }

    pub fn code(&self) -> Result<EvaluationCode> {
        build_code(&self.presentation()?, self.ell)
    }
}

/// The Hermitian workbench from the worked example, as config text.
pub fn hermitian_config() -> &'static str {
    "[field]\n\
     p = 2\n\
     m = 4\n\
     modulus = 1 1 0 0 1\n\
     \n\
     [presentation]\n\
     vars = X Y\n\
     row = 4 5\n\
     order = integer\n\
     tiebreak = X Y\n\
     generator = X^5 + Y^4 + Y\n\
     \n\
     [code]\n\
     ell = 20\n\
     seed = 7\n"
}

/// The F8 plane (extended cyclic) workbench, as config text.
pub fn plane8_config() -> &'static str {
    "[field]\n\
     p = 2\n\
     m = 3\n\
     modulus = 1 1 0 1\n\
     \n\
     [presentation]\n\
     vars = X Y\n\
     row = 1 0\n\
     row = 0 1\n\
     order = graded-lex\n\
     tiebreak = X Y\n\
     \n\
     [code]\n\
     ell = 10\n\
     seed = 7\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_hermitian_config() {
        let cfg = WorkbenchConfig::parse(hermitian_config()).unwrap();
        assert_eq!(cfg.p, 2);
        assert_eq!(cfg.m, 4);
        assert_eq!(cfg.ell, 20);
        let pres = cfg.presentation().unwrap();
        assert_eq!(pres.nvars(), 2);
        let code = cfg.code().unwrap();
        assert_eq!(code.n(), 64);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "[field]\np = x\n";
        match WorkbenchConfig::parse(bad) {
            Err(Error::Config { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected config error, got {:?}", other),
        }
    }

    #[test]
    fn rejects_unknown_keys() {
        let bad = "[field]\nbogus = 1\n";
        assert!(WorkbenchConfig::parse(bad).is_err());
    }
}
