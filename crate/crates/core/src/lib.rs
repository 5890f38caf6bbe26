//! Evaluation codes from finitely-generated order domains.
//!
//! The crate builds codes by evaluating an ordered monomial basis of a
//! quotient ring at the rational points of its defining variety, decodes
//! received words for the dual codes with the Berlekamp-Massey-Sakata
//! iteration plus majority voting for unknown syndromes, and recovers error
//! values through truncated inverse systems and a generalized Forney formula.

pub mod codes;
pub mod config;
pub mod decoder;
pub mod domain;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod series;
pub mod values;

pub use codes::{EvaluationCode, RationalPointSet};
pub use decoder::{BmsOutcome, LocatorIdeal, SyndromeTable};
pub use domain::{DeltaBasis, Presentation};
pub use error::{Error, Result};
pub use field::{FieldSpec, Gf};
pub use order::{SemigroupOrder, WeightOrder};
pub use poly::{parse_poly, Exps, Poly};
pub use values::{DecodeResult, ErrorVector};
