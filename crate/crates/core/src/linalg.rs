//! Exact linear algebra over the coefficient field.

use std::collections::HashMap;

use crate::field::{FieldElement, FieldSpec};
use crate::poly::{Monomial, Polynomial};

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank(field: &FieldSpec, matrix: &[Vec<FieldElement>]) -> usize {
    let mut rows: Vec<Vec<FieldElement>> = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.invert(&rows[r][col]).expect("nonzero pivot");
        let pivot_row: Vec<FieldElement> = rows[r].iter().map(|x| field.mul(x, &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Incrementally maintained K-span of polynomials, kept in echelon form by leading monomial.
#[derive(Debug, Default)]
pub struct PolySpan {
    pivots: HashMap<Monomial, Polynomial>,
}

impl PolySpan {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `p`; returns whether it was linearly independent of what is already held.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let reduced = self.reduce(p);
        match reduced.leading_monomial() {
            None => false,
            Some(m) => {
                self.pivots.insert(m.clone(), reduced.monic());
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.clone();
        let mut done = Polynomial::zero(p.ring());
        while let Some((m, c)) = p.leading_term().cloned() {
            match self.pivots.get(&m) {
                Some(row) => p = &p - &row.scale(&c),
                None => {
                    let head = Polynomial::term(p.ring(), m, c);
                    p = &p - &head;
                    done = &done + &head;
                }
            }
        }
        done
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly_list;
    use crate::poly::Ring;

    #[test]
    fn rank_of_small_matrices() {
        let k = FieldSpec::rationals();
        let m = |rows: &[&[i64]]| -> Vec<Vec<FieldElement>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| k.from_int(x)).collect())
                .collect()
        };
        assert_eq!(rank(&k, &m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&k, &m(&[&[1, 2], &[0, 1]])), 2);
        assert_eq!(rank(&k, &m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&k, &m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 2]])), 2);
        assert_eq!(rank(&k, &[]), 0);
    }

    #[test]
    fn span_dimension() {
        let r = Ring::grevlex(&["x", "y"], FieldSpec::rationals()).unwrap();
        let polys = parse_poly_list("x + y, x - y, x, x*y + 1, 1", &r).unwrap();
        let mut span = PolySpan::new();
        let independent: Vec<bool> = polys.iter().map(|p| span.insert(p)).collect();
        assert_eq!(independent, vec![true, true, false, true, true]);
        assert_eq!(span.dim(), 4);
        assert!(span.contains(&parse_poly_list("x*y", &r).unwrap()[0]));
    }
}
