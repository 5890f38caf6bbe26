//! Weight monomial orders >_{M,tau}: compare M-weights under a semigroup
//! order on Z^r, break ties with a lexicographic variable priority.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Exps;

/// Weight vector in Z^r (nonnegative for monomials, but kept signed so
/// differences can be formed and tested for semigroup membership).
pub type Weight = Vec<i64>;

/// Total order on weight vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigroupOrder {
    /// Plain integer comparison; requires r = 1.
    Integer,
    Lex,
    GradedLex,
    GradedRevLex,
}

impl SemigroupOrder {
    pub fn parse(s: &str) -> Result<SemigroupOrder> {
        match s {
            "integer" => Ok(SemigroupOrder::Integer),
            "lex" => Ok(SemigroupOrder::Lex),
            "grlex" | "graded-lex" => Ok(SemigroupOrder::GradedLex),
            "grevlex" | "graded-reverse-lex" => Ok(SemigroupOrder::GradedRevLex),
            _ => Err(Error::Parse(format!("unknown semigroup order '{}'", s))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SemigroupOrder::Integer => "integer",
            SemigroupOrder::Lex => "lex",
            SemigroupOrder::GradedLex => "graded-lex",
            SemigroupOrder::GradedRevLex => "graded-reverse-lex",
        }
    }

    pub fn cmp_weights(&self, a: &Weight, b: &Weight) -> Ordering {
        match self {
            SemigroupOrder::Integer => a[0].cmp(&b[0]),
            SemigroupOrder::Lex => a.cmp(b),
            SemigroupOrder::GradedLex => {
                let (da, db) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            SemigroupOrder::GradedRevLex => {
                let (da, db) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// The full monomial order: weight matrix, semigroup order, tie-break
/// priority (variable indices, highest priority first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrder {
    /// r x s matrix, rows linearly independent over the rationals.
    pub matrix: Vec<Vec<u32>>,
    pub sem: SemigroupOrder,
    /// Permutation of 0..s; earlier entries compared first on ties.
    pub tiebreak: Vec<usize>,
}

impl WeightOrder {
    pub fn new(matrix: Vec<Vec<u32>>, sem: SemigroupOrder, tiebreak: Vec<usize>) -> Result<WeightOrder> {
        if matrix.is_empty() {
            return Err(Error::DimensionMismatch("weight matrix has no rows".into()));
        }
        let s = matrix[0].len();
        if s == 0 || matrix.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch(
                "weight matrix rows must be nonempty and equal length".into(),
            ));
        }
        if matches!(sem, SemigroupOrder::Integer) && matrix.len() != 1 {
            return Err(Error::DimensionMismatch(
                "integer semigroup order requires a single weight row".into(),
            ));
        }
        let mut tb = tiebreak;
        if tb.is_empty() {
            tb = (0..s).collect();
        }
        let mut sorted = tb.clone();
        sorted.sort_unstable();
        if sorted != (0..s).collect::<Vec<_>>() {
            return Err(Error::DimensionMismatch(
                "tiebreak must be a permutation of the variables".into(),
            ));
        }
        let w = WeightOrder {
            matrix,
            sem,
            tiebreak: tb,
        };
        if !w.rows_independent() {
            return Err(Error::DimensionMismatch(
                "weight matrix rows are linearly dependent".into(),
            ));
        }
        Ok(w)
    }

    pub fn nvars(&self) -> usize {
        self.matrix[0].len()
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Fraction-free Gaussian elimination over the rationals.
    fn rows_independent(&self) -> bool {
        let mut m: Vec<Vec<i64>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        let rows = m.len();
        let cols = m[0].len();
        if rows > cols {
            return false;
        }
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let piv = (rank..rows).find(|&i| m[i][c] != 0);
            let Some(piv) = piv else { continue };
            m.swap(rank, piv);
            for i in 0..rows {
                if i != rank && m[i][c] != 0 {
                    let (a, b) = (m[rank][c], m[i][c]);
                    for j in 0..cols {
                        m[i][j] = m[i][j] * a - m[rank][j] * b;
                    }
                }
            }
            rank += 1;
        }
        rank == rows
    }

    pub fn weight(&self, e: &Exps) -> Weight {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(e).map(|(&m, &x)| m as i64 * x as i64).sum())
            .collect()
    }

    pub fn cmp_weights(&self, a: &Weight, b: &Weight) -> Ordering {
        self.sem.cmp_weights(a, b)
    }

    /// The monomial order: weights first, then the tie-break.
    pub fn cmp(&self, a: &Exps, b: &Exps) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars());
        debug_assert_eq!(b.len(), self.nvars());
        match self.cmp_weights(&self.weight(a), &self.weight(b)) {
            Ordering::Equal => {
                for &i in &self.tiebreak {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }

    pub fn zero_weight(&self) -> Weight {
        vec![0; self.rank()]
    }

    pub fn add_weights(a: &Weight, b: &Weight) -> Weight {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub_weights(a: &Weight, b: &Weight) -> Weight {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
}

/// Validated comparison entry point matching the spec operation.
pub fn cmp_monomials(a: &Exps, b: &Exps, ord: &WeightOrder) -> Result<Ordering> {
    if a.len() != ord.nvars() || b.len() != ord.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "exponent lengths {}/{} vs {} variables",
            a.len(),
            b.len(),
            ord.nvars()
        )));
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hermitian_order() -> WeightOrder {
        WeightOrder::new(vec![vec![4, 5]], SemigroupOrder::Integer, vec![0, 1]).unwrap()
    }

    fn grlex_xy() -> WeightOrder {
        WeightOrder::new(
            vec![vec![1, 0], vec![0, 1]],
            SemigroupOrder::GradedLex,
            vec![0, 1],
        )
        .unwrap()
    }

    #[test]
    fn weight_tie_broken_by_lex() {
        // X^5 and Y^4 both have weight 20; lex X>Y puts X^5 on top
        let ord = hermitian_order();
        assert_eq!(ord.cmp(&vec![5, 0], &vec![0, 4]), Ordering::Greater);
        assert_eq!(ord.cmp(&vec![2, 1], &vec![2, 1]), Ordering::Equal);
    }

    #[test]
    fn graded_lex_starts_one_y_x() {
        let ord = grlex_xy();
        assert_eq!(ord.cmp(&vec![0, 1], &vec![1, 0]), Ordering::Less); // Y < X
        assert_eq!(ord.cmp(&vec![0, 0], &vec![0, 1]), Ordering::Less);
    }

    #[test]
    fn rejects_dependent_rows() {
        assert!(WeightOrder::new(
            vec![vec![1, 2], vec![2, 4]],
            SemigroupOrder::Lex,
            vec![0, 1]
        )
        .is_err());
    }

    #[test]
    fn dimension_checked() {
        let ord = hermitian_order();
        assert!(cmp_monomials(&vec![1], &vec![1, 0], &ord).is_err());
    }

    #[test]
    fn monomial_order_axioms_random() {
        // 1 is minimal; compatible with exponent addition
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for ord in [
            hermitian_order(),
            grlex_xy(),
            WeightOrder::new(
                vec![vec![0, 1, 3], vec![2, 1, 0]],
                SemigroupOrder::Lex,
                vec![0, 1, 2],
            )
            .unwrap(),
        ] {
            let s = ord.nvars();
            let one = vec![0u32; s];
            for _ in 0..300 {
                let a: Exps = (0..s).map(|_| rng.gen_range(0..6)).collect();
                let b: Exps = (0..s).map(|_| rng.gen_range(0..6)).collect();
                let c: Exps = (0..s).map(|_| rng.gen_range(0..6)).collect();
                assert_ne!(ord.cmp(&one, &a), Ordering::Greater);
                let ab = ord.cmp(&a, &b);
                let ac: Exps = a.iter().zip(&c).map(|(x, y)| x + y).collect();
                let bc: Exps = b.iter().zip(&c).map(|(x, y)| x + y).collect();
                assert_eq!(ab, ord.cmp(&ac, &bc));
                if ab == Ordering::Equal {
                    assert_eq!(a, b, "equal only for identical exponents");
                }
            }
        }
    }
}
