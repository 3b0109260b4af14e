use super::{PolyError, Polynomial};

/// Dense matrix of polynomials sharing one field and grading, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolynomialMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, PolyError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(PolyError::BadShape { rows, cols, len: entries.len() });
        }
        let first = &entries[0];
        for e in &entries[1..] {
            if e.field() != first.field() {
                return Err(PolyError::FieldMismatch(first.field(), e.field()));
            }
            if e.grading() != first.grading() {
                return Err(PolyError::GradingMismatch);
            }
        }
        Ok(PolynomialMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::BadShape { rows: r, cols: c, len: rows.iter().map(Vec::len).sum() });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.minor_det(&rows, &cols))
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        if n == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        if n == 2 {
            let a = self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]);
            let b = self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]);
            return &a - &b;
        }
        let first = self.get(0, 0);
        let mut acc = Polynomial::zero(first.field(), first.grading());
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let cof = self.minor_det(&rows[1..], &sub_cols);
            let term = entry * &cof;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Determinants of all `k x k` submatrices, rows and columns taken in
    /// increasing lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(self.minor_det(r, c));
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{CoefficientField, Grading};

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(3, 2).len(), 3);
        assert_eq!(combinations(5, 3).len(), 10);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn rejects_bad_shapes() {
        let g = Grading::standard(&["x"]);
        let x = Polynomial::var(CoefficientField::Rational, &g, "x").unwrap();
        assert!(PolynomialMatrix::new(2, 2, vec![x.clone(); 3]).is_err());
        let m = PolynomialMatrix::new(1, 2, vec![x.clone(), x]).unwrap();
        assert!(matches!(m.determinant(), Err(PolyError::NotSquare { .. })));
    }
}
