//! Exact Gaussian elimination over `QQ` or `F_p`, on dense matrices of
//! field elements stored as `BigRational`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::CoefficientField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: CoefficientField,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(field: CoefficientField, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = self.field.normalize(v).expect("entry must be a field element");
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), &inv);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let sub = f.mul(&factor, self.get(row, c));
                    let v = f.sub(self.get(r, c), &sub);
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{v : A v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[fc] = f.from_i64(1);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Stacks `other` to the right of `self`.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r * out.cols + c] = self.get(r, c).clone();
            }
            for c in 0..other.cols {
                out.data[r * out.cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn from_ints(field: CoefficientField, rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(field, rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, BigRational::from_integer(BigInt::from(v)));
            }
        }
        m
    }

    #[test]
    fn rank_over_q_and_fp() {
        let rows: &[&[i64]] = &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]];
        assert_eq!(from_ints(CoefficientField::Rational, rows).rank(), 2);
        // det [[1,2],[3,4]] = -2 vanishes mod 2
        let rows2: &[&[i64]] = &[&[1, 2], &[3, 4]];
        assert_eq!(from_ints(CoefficientField::Rational, rows2).rank(), 2);
        assert_eq!(from_ints(CoefficientField::Prime(2), rows2).rank(), 1);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let rows: &[&[i64]] = &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]];
        let m = from_ints(CoefficientField::Rational, rows);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 4 - m.rank());
        for v in ns {
            for r in 0..m.rows {
                let dot: BigRational = (0..m.cols).map(|c| m.get(r, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
