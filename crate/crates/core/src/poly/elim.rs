use super::{PolyError, Polynomial, PolynomialMatrix};

/// Sylvester matrix of `f` and `g` with respect to variable `var`.
///
/// Rows are the shifted coefficient vectors of `f` (deg_var g of them)
/// followed by those of `g` (deg_var f of them), highest power first.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, var: usize) -> Result<PolynomialMatrix, PolyError> {
    let name = |p: &Polynomial| p.grading().variables().get(var).cloned().unwrap_or_default();
    if var >= f.grading().nvars() {
        return Err(PolyError::UnknownVariable(format!("#{var}")));
    }
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if m == 0 {
        return Err(PolyError::ConstantInVariable(name(f)));
    }
    if n == 0 {
        return Err(PolyError::ConstantInVariable(name(g)));
    }
    let zero = Polynomial::zero(f.field(), f.grading());
    let size = m + n;
    let fc: Vec<Polynomial> = (0..=m).rev().map(|k| f.coefficient(var, k as u32)).collect();
    let gc: Vec<Polynomial> = (0..=n).rev().map(|k| g.coefficient(var, k as u32)).collect();
    let mut entries = vec![zero; size * size];
    for r in 0..n {
        for (j, c) in fc.iter().enumerate() {
            entries[r * size + r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in gc.iter().enumerate() {
            entries[(n + r) * size + r + j] = c.clone();
        }
    }
    PolynomialMatrix::new(size, size, entries)
}

/// Resultant of `f` and `g` in `var`: the Sylvester determinant, free of `var`.
pub fn resultant_univariate(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial, PolyError> {
    if f.field() != g.field() {
        return Err(PolyError::FieldMismatch(f.field(), g.field()));
    }
    if f.grading() != g.grading() {
        return Err(PolyError::GradingMismatch);
    }
    sylvester_matrix(f, g, var)?.determinant()
}

/// Discriminant `b^2 - a*c` of the binary quadratic form
/// `a*x0^2 + 2*b*x0*x1 + c*x1^2`.
pub fn discriminant_binary_quadratic(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
) -> Result<Polynomial, PolyError> {
    let bb = b.checked_mul(b)?;
    let ac = a.checked_mul(c)?;
    bb.checked_sub(&ac)
}
