//! Dense linear algebra over the fraction field.

use crate::arith::{FieldElem, MPoly, Ring};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<FieldElem>>;

fn size(e: &FieldElem) -> usize {
    e.num().len() + e.den().len()
}

fn check_square(m: &Matrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::usage("matrix is not square"));
    }
    Ok(n)
}

/// Determinant by fraction-free (Bareiss) elimination on the matrix with
/// each row's denominators cleared.
pub fn det(m: &Matrix, ring: &Ring) -> Result<FieldElem> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(FieldElem::one(ring));
    }
    let mut scale = MPoly::one(ring);
    let mut a: Vec<Vec<MPoly>> = Vec::with_capacity(n);
    for row in m {
        let mut dens: Vec<&MPoly> = Vec::new();
        for e in row {
            if !e.is_zero() && !e.den().is_monomial() && !dens.contains(&e.den()) {
                dens.push(e.den());
            }
        }
        let d = dens.iter().fold(MPoly::one(ring), |acc, x| &acc * *x);
        let mut out = Vec::with_capacity(n);
        for e in row {
            let k = d.div_exact(e.den()).ok_or_else(|| Error::consistency("denominator does not divide"))?;
            out.push(&k * e.num());
        }
        scale = &scale * &d;
        a.push(out);
    }
    let mut sign = false;
    let mut prev = MPoly::one(ring);
    for k in 0..n - 1 {
        let Some(p) = (k..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| a[r][k].len()) else {
            return Ok(FieldElem::zero(ring));
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).ok_or_else(|| Error::consistency("Bareiss division is not exact"))?;
            }
            a[i][k] = MPoly::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let mut d = a[n - 1][n - 1].clone();
    if sign {
        d = -&d;
    }
    FieldElem::new(d, scale)
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(a: &mut Matrix, cols: usize) -> Result<Vec<usize>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| size(&a[i][c])) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inv()?;
        for k in c..cols {
            a[r][k] = &a[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for k in c..cols {
                    let t = &factor * &a[r][k];
                    a[i][k] = &a[i][k] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(m: &Matrix) -> Result<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    Ok(rref(&mut a, cols)?.len())
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel(m: &Matrix, ring: &Ring) -> Result<Vec<Vec<FieldElem>>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let pivots = rref(&mut a, cols)?;
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElem::zero(ring); cols];
        v[free] = FieldElem::one(ring);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_field_elem, ParamSystem};

    fn mat(ring: &Ring, rows: &[&[&str]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|t| parse_field_elem(t, ring).unwrap()).collect())
            .collect()
    }

    #[test]
    fn symbolic_determinant() {
        let ring = ParamSystem::from_names(&["x"]).unwrap();
        let m = mat(&ring, &[&["x", "1"], &["1", "x"]]);
        assert_eq!(det(&m, &ring).unwrap(), parse_field_elem("x^2 - 1", &ring).unwrap());
        let m = mat(&ring, &[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "x"]]);
        assert_eq!(det(&m, &ring).unwrap(), parse_field_elem("-x", &ring).unwrap());
    }

    #[test]
    fn kernel_of_singular_matrix() {
        let ring = ParamSystem::from_names(&["x"]).unwrap();
        let m = mat(&ring, &[&["x", "x^2"], &["1", "x"]]);
        assert_eq!(rank(&m).unwrap(), 1);
        let k = kernel(&m, &ring).unwrap();
        assert_eq!(k.len(), 1);
        for row in &m {
            let s = &(&row[0] * &k[0][0]) + &(&row[1] * &k[0][1]);
            assert!(s.is_zero());
        }
    }
}
