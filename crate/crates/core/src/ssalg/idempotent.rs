use super::algebra::FDAlgebra;
use super::certificate::{Certificate, Verdict, Witness};
use super::linalg;
use super::nonvanish::nonvanishing_test;
use super::univariate::{field_summand_certificate, trace_form};
use crate::arith::{FieldElem, UniPoly};
use crate::error::{Error, Result};

fn fresh_var(alg: &FDAlgebra) -> String {
    ["X", "T", "W", "X_"]
        .iter()
        .find(|v| alg.ring().index_of(v).is_none())
        .map(|v| v.to_string())
        .unwrap_or_else(|| format!("X{}", alg.ring().len()))
}

/// Minimal polynomial of `x`, when its powers span the algebra.
pub fn monogenic_polynomial(alg: &FDAlgebra, x: &[FieldElem]) -> Result<Option<UniPoly>> {
    let d = alg.dim();
    let mut powers = vec![alg.unity().to_vec()];
    for k in 1..=d {
        powers.push(alg.mul(&powers[k - 1], x)?);
    }
    let m: linalg::Matrix = (0..d).map(|i| (0..=d).map(|k| powers[k][i].clone()).collect()).collect();
    let kernel = linalg::kernel(&m, alg.ring())?;
    if kernel.len() != 1 {
        return Ok(None);
    }
    let f = UniPoly::new(&fresh_var(alg), alg.ring(), kernel[0].clone())?;
    if f.degree() != Some(d) {
        return Ok(None);
    }
    Ok(Some(f.monic()))
}

/// Evaluates a polynomial at an algebra element.
pub fn eval_at(alg: &FDAlgebra, p: &UniPoly, x: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let mut acc = alg.zero_vector();
    for c in p.coeffs().iter().rev() {
        acc = alg.mul(&acc, x)?;
        for (a, u) in acc.iter_mut().zip(alg.unity()) {
            *a = a.checked_add(&c.checked_mul(u)?)?;
        }
    }
    Ok(acc)
}

/// Idempotent cutting out a semisimple summand: the unity when the trace
/// form is nondegenerate, else the CRT idempotent of a monogenic algebra
/// generated by the second basis vector.
pub fn summand_idempotent(alg: &FDAlgebra) -> Result<Option<Vec<FieldElem>>> {
    let gram = trace_form(alg)?;
    if !linalg::det(&gram, alg.ring())?.is_zero() {
        return Ok(Some(alg.unity().to_vec()));
    }
    if alg.dim() < 2 {
        return Ok(None);
    }
    let x = alg.basis_vector(1);
    let Some(f) = monogenic_polynomial(alg, &x)? else {
        return Ok(None);
    };
    let cert = field_summand_certificate(&f)?;
    let Some(Witness::FieldSummand { idempotents, .. }) = &cert.witness else {
        return Ok(None);
    };
    Ok(Some(eval_at(alg, &idempotents[0], &x)?))
}

/// Certifies that `e·alg` is a nonzero semisimple direct summand.
pub fn idempotent_summand_certificate(alg: &FDAlgebra, e: &[FieldElem]) -> Result<Certificate> {
    if e.iter().all(FieldElem::is_zero) || alg.mul(e, e)? != e {
        return Err(Error::usage("not a nonzero idempotent"));
    }
    let n = alg.dim();
    let mut basis: Vec<Vec<FieldElem>> = Vec::new();
    for j in 0..n {
        let v = alg.mul(e, &alg.basis_vector(j))?;
        let mut cols = basis.clone();
        cols.push(v.clone());
        let m: linalg::Matrix = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        if linalg::rank(&m)? == cols.len() {
            basis.push(v);
        }
    }
    let t = trace_form(alg)?;
    let form = |x: &[FieldElem], y: &[FieldElem]| -> Result<FieldElem> {
        let mut acc = FieldElem::zero(alg.ring());
        for a in 0..n {
            for b in 0..n {
                if !x[a].is_zero() && !y[b].is_zero() && !t[a][b].is_zero() {
                    acc = acc.checked_add(&x[a].checked_mul(&y[b])?.checked_mul(&t[a][b])?)?;
                }
            }
        }
        Ok(acc)
    };
    let g = basis
        .iter()
        .map(|x| basis.iter().map(|y| form(x, y)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let det = linalg::det(&g, alg.ring())?;
    Ok(match nonvanishing_test(&det) {
        Some((point, value)) => Certificate::new(
            Verdict::ContainsFieldSummand,
            Some(Witness::IdempotentSummand {
                idempotent: e.to_vec(),
                basis,
                det,
                point,
                value,
            }),
        ),
        None => Certificate::new(Verdict::Inconclusive, None).with_note("trace form on the summand not shown nondegenerate"),
    })
}
