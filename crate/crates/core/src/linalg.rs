//! Dense row-reduction helpers over a finite field, sized for desk-scale
//! instances (dimensions in the dozens).

use crate::field::{FieldSpec, Gf};

/// Row-reduce `m` in place to reduced row echelon form; returns pivot columns.
pub fn rref(field: &FieldSpec, m: &mut [Vec<Gf>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("pivot nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let (head, tail) = m.split_at_mut(std::cmp::max(i, r));
                let (row_i, row_r) = if i < r {
                    (&mut head[i], &tail[0])
                } else {
                    (&mut tail[0], &head[r])
                };
                for (x, &y) in row_i.iter_mut().zip(row_r.iter()) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &FieldSpec, m: &[Vec<Gf>]) -> usize {
    let mut work: Vec<Vec<Gf>> = m.to_vec();
    rref(field, &mut work).len()
}

/// Solve `columns * x = target` where `columns[j]` is the j-th column.
/// Returns any solution, or None when inconsistent.
pub fn solve_columns(field: &FieldSpec, columns: &[Vec<Gf>], target: &[Gf]) -> Option<Vec<Gf>> {
    let ncols = columns.len();
    let nrows = target.len();
    if ncols == 0 {
        return if target.iter().all(|x| x.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let mut aug: Vec<Vec<Gf>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Gf> = columns.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.contains(&ncols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Gf::ZERO; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols];
    }
    Some(x)
}

/// Basis of the null space of the matrix (rows are constraints).
/// Free variables are assigned in increasing column order, one basis vector
/// per free column, so the result is deterministic.
pub fn kernel_basis(field: &FieldSpec, rows: &[Vec<Gf>], ncols: usize) -> Vec<Vec<Gf>> {
    let mut work: Vec<Vec<Gf>> = rows.to_vec();
    let pivots = rref(field, &mut work);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Gf::ZERO; ncols];
        v[free] = Gf::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(work[r][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::gf8;

    #[test]
    fn solves_small_system() {
        let f = gf8();
        // columns of an invertible 2x2
        let cols = vec![vec![Gf(1), Gf(2)], vec![Gf(3), Gf(1)]];
        let t = vec![Gf(5), Gf(6)];
        let x = solve_columns(&f, &cols, &t).unwrap();
        for i in 0..2 {
            let got = f.add(f.mul(cols[0][i], x[0]), f.mul(cols[1][i], x[1]));
            assert_eq!(got, t[i]);
        }
    }

    #[test]
    fn detects_inconsistency() {
        let f = gf8();
        let cols = vec![vec![Gf(1), Gf(1)]];
        assert!(solve_columns(&f, &cols, &[Gf(1), Gf(2)]).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = gf8();
        let rows = vec![
            vec![Gf(1), Gf(2), Gf(3), Gf(4)],
            vec![Gf(0), Gf(1), Gf(1), Gf(7)],
        ];
        let basis = kernel_basis(&f, &rows, 4);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(Gf::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert!(dot.is_zero());
            }
        }
    }
}
