//! Independent re-checking of certificates: only ring operations,
//! remainders and evaluation at points.

use super::algebra::FDAlgebra;
use super::certificate::{Certificate, Member, Point, Verdict, Witness};
use crate::arith::{FieldElem, MPoly, Rational, UniPoly};
use crate::error::{Error, Result};

fn fail(msg: impl Into<String>) -> Error {
    Error::consistency(format!("certificate rejected: {}", msg.into()))
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg))
    }
}

pub fn verify(cert: &Certificate, alg: Option<&FDAlgebra>) -> Result<()> {
    let Some(w) = &cert.witness else {
        return ensure(cert.verdict == Verdict::Inconclusive, "positive verdict without a witness");
    };
    let compatible = match w {
        Witness::Resultant { .. } | Witness::TraceForm { .. } => cert.verdict == Verdict::Semisimple,
        Witness::Nilpotent { .. } | Witness::NilpotentVector { .. } => cert.verdict == Verdict::NotSemisimple,
        Witness::FieldSummand { .. } | Witness::IdempotentSummand { .. } => {
            cert.verdict == Verdict::ContainsFieldSummand
        }
        Witness::Radical { members, .. } => {
            cert.verdict == Verdict::RadicalIdeal
                && members.iter().all(|m| matches!(m.squarefree.as_ref(), Witness::Resultant { .. }))
        }
        Witness::Unresolved { .. } => false,
        Witness::Composite { .. } => true,
    };
    ensure(compatible || cert.verdict == Verdict::Inconclusive, "witness does not support the verdict")?;
    verify_witness(w, alg)
}

pub fn verify_witness(w: &Witness, alg: Option<&FDAlgebra>) -> Result<()> {
    match w {
        Witness::Resultant {
            poly,
            resultant,
            cofactors,
            point,
            value,
        } => verify_resultant(poly, resultant, cofactors, point, value),
        Witness::Unresolved { .. } => Ok(()),
        Witness::Nilpotent { modulus, element, power } => verify_nilpotent(modulus, element, *power),
        Witness::NilpotentVector { coordinates, power } => {
            let alg = alg.ok_or_else(|| fail("nilpotent vector needs its algebra"))?;
            verify_nilpotent_vector(alg, coordinates, *power)
        }
        Witness::FieldSummand {
            modulus,
            summand,
            cofactor,
            bezout,
            idempotents,
            squarefree,
        } => {
            ensure(summand.degree().unwrap_or(0) >= 1, "summand of degree 0")?;
            ensure(summand.mul(cofactor)? == *modulus, "summand · cofactor ≠ modulus")?;
            let one = bezout[0].mul(summand)?.add(&bezout[1].mul(cofactor)?)?;
            ensure(is_one(&one), "Bézout identity fails")?;
            let [e1, e2] = idempotents;
            ensure(e1.sub(&bezout[1].mul(cofactor)?)?.rem(modulus)?.is_zero(), "e1 ≠ v·cofactor")?;
            ensure(is_one(&e1.add(e2)?.rem(modulus)?), "e1 + e2 ≠ 1")?;
            ensure(e1.mul(e2)?.rem(modulus)?.is_zero(), "e1·e2 ≠ 0")?;
            ensure(e1.mul(e1)?.sub(e1)?.rem(modulus)?.is_zero(), "e1² ≠ e1")?;
            ensure(!e1.rem(modulus)?.is_zero(), "e1 = 0")?;
            match squarefree.as_ref() {
                Witness::Resultant { poly, .. } if poly == summand => verify_witness(squarefree, alg),
                _ => Err(fail("summand lacks a squarefreeness witness")),
            }
        }
        Witness::IdempotentSummand {
            idempotent,
            basis,
            det,
            point,
            value,
        } => {
            let alg = alg.ok_or_else(|| fail("idempotent witness needs its algebra"))?;
            verify_idempotent(alg, idempotent, basis, det, point, value)
        }
        Witness::TraceForm { det, point, value } => {
            let alg = alg.ok_or_else(|| fail("trace-form witness needs its algebra"))?;
            verify_trace_form(alg, det, point, value)
        }
        Witness::Radical { generators, members } => verify_radical(generators, members),
        Witness::Composite { parts } => parts.iter().try_for_each(|p| verify(p, alg)),
    }
}

fn is_one(p: &UniPoly) -> bool {
    p.degree() == Some(0) && p.coeff(0).is_one()
}

fn eval_nonzero(h: &FieldElem, point: &Point, value: &Rational) -> Result<()> {
    let v = h.impose_relations()?.eval(point)?;
    ensure(v == *value, "value at the point differs")?;
    ensure(!v.is_zero(), "value at the point is zero")
}

fn verify_resultant(
    poly: &UniPoly,
    resultant: &FieldElem,
    cofactors: &[UniPoly; 2],
    point: &Point,
    value: &Rational,
) -> Result<()> {
    let combo = cofactors[0].mul(poly)?.add(&cofactors[1].mul(&poly.derivative())?)?;
    ensure(combo.degree().unwrap_or(0) == 0, "cofactor combination is not constant")?;
    ensure(combo.coeff(0) == *resultant, "u·f + v·f' ≠ resultant")?;
    eval_nonzero(resultant, point, value)
}

fn verify_nilpotent(modulus: &UniPoly, element: &UniPoly, power: u32) -> Result<()> {
    ensure(power >= 1, "power 0")?;
    ensure(!element.rem(modulus)?.is_zero(), "element is zero")?;
    let mut acc = UniPoly::constant(modulus.var(), FieldElem::one(modulus.ring()));
    for k in 1..=power {
        acc = acc.mul(element)?.rem(modulus)?;
        if k < power {
            ensure(!acc.is_zero(), "a smaller power already vanishes")?;
        }
    }
    ensure(acc.is_zero(), "power does not vanish")
}

fn table_mul(alg: &FDAlgebra, a: &[FieldElem], b: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let n = alg.dim();
    let mut out = vec![FieldElem::zero(alg.ring()); n];
    for i in 0..n {
        for j in 0..n {
            let c = &a[i] * &b[j];
            for (k, t) in alg.table()[i][j].iter().enumerate() {
                out[k] = &out[k] + &(&c * t);
            }
        }
    }
    Ok(out)
}

fn verify_nilpotent_vector(alg: &FDAlgebra, v: &[FieldElem], power: u32) -> Result<()> {
    ensure(v.len() == alg.dim(), "vector length")?;
    ensure(v.iter().any(|c| !c.is_zero()), "element is zero")?;
    let mut acc = v.to_vec();
    for _ in 1..power {
        acc = table_mul(alg, &acc, v)?;
    }
    ensure(acc.iter().all(FieldElem::is_zero), "power does not vanish")
}

fn rational_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] = &a[r][k] - &t;
            }
        }
    }
    det
}

fn specialize_table(alg: &FDAlgebra, point: &Point) -> Result<(Point, Vec<Vec<Vec<Rational>>>)> {
    let mut full = point.clone();
    for name in alg.ring().names() {
        full.entry(name.to_string()).or_insert_with(Rational::one);
    }
    let n = alg.dim();
    let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = alg.table()[i][j][k].impose_relations()?.eval(&full)?;
            }
        }
    }
    Ok((full, c))
}

fn verify_idempotent(
    alg: &FDAlgebra,
    e: &[FieldElem],
    basis: &[Vec<FieldElem>],
    det: &FieldElem,
    point: &Point,
    value: &Rational,
) -> Result<()> {
    let n = alg.dim();
    ensure(e.len() == n && basis.iter().all(|v| v.len() == n), "vector length")?;
    ensure(e.iter().any(|c| !c.is_zero()), "idempotent is zero")?;
    ensure(table_mul(alg, e, e)? == e, "e² ≠ e")?;
    for v in basis {
        ensure(table_mul(alg, e, v)? == *v, "basis vector outside e·A")?;
    }
    let mut rank = FieldElem::zero(alg.ring());
    for j in 0..n {
        let mut bj = vec![FieldElem::zero(alg.ring()); n];
        bj[j] = FieldElem::one(alg.ring());
        rank = &rank + &table_mul(alg, e, &bj)?[j];
    }
    ensure(
        rank.constant_value() == Some(Rational::from(basis.len() as i64)),
        "basis size differs from the rank of e",
    )?;
    eval_nonzero(det, point, value)?;
    let (full, c) = specialize_table(alg, point)?;
    let traces: Vec<Rational> = (0..n)
        .map(|k| (0..n).fold(Rational::zero(), |acc, j| &acc + &c[k][j][j]))
        .collect();
    let vecs = basis
        .iter()
        .map(|v| v.iter().map(|x| x.impose_relations()?.eval(&full)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let trace_of_product = |x: &[Rational], y: &[Rational]| {
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    acc = &acc + &(&(&x[i] * &y[j]) * &(&c[i][j][k] * &traces[k]));
                }
            }
        }
        acc
    };
    let gram = vecs
        .iter()
        .map(|x| vecs.iter().map(|y| trace_of_product(x, y)).collect())
        .collect();
    ensure(rational_det(gram) == *value, "recomputed summand determinant differs")
}

fn verify_trace_form(alg: &FDAlgebra, det: &FieldElem, point: &Point, value: &Rational) -> Result<()> {
    eval_nonzero(det, point, value)?;
    let n = alg.dim();
    let (_, c) = specialize_table(alg, point)?;
    let traces: Vec<Rational> = (0..n)
        .map(|k| (0..n).fold(Rational::zero(), |acc, j| &acc + &c[k][j][j]))
        .collect();
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| &acc + &(&c[i][j][k] * &traces[k])))
                .collect()
        })
        .collect();
    ensure(rational_det(gram) == *value, "recomputed trace-form determinant differs")
}

fn verify_radical(generators: &[MPoly; 2], members: &[Member]) -> Result<()> {
    let g: Vec<MPoly> = generators.iter().map(|p| p.impose_relations()).collect::<Result<_>>()?;
    let ring = g[0].ring().clone();
    let vars: Vec<&str> = members.iter().map(|m| m.var.as_str()).collect();
    ensure(vars.len() == 2 && vars[0] != vars[1], "need one member per variable")?;
    for m in members {
        let combo = &(&m.cofactors[0].impose_relations()? * &g[0]) + &(&m.cofactors[1].impose_relations()? * &g[1]);
        let f = m.poly.impose_relations()?;
        ensure(combo == f, "membership combination differs")?;
        for other in vars.iter().filter(|v| **v != m.var) {
            let i = ring.index_of(other).ok_or_else(|| fail("unknown variable"))?;
            ensure(!f.involves(i), "member involves the other variable")?;
        }
        let poly = match m.squarefree.as_ref() {
            Witness::Resultant { poly, .. } | Witness::Unresolved { poly, .. } => poly,
            _ => return Err(fail("member lacks a squarefreeness witness")),
        };
        let mut small = ring.clone();
        for other in vars.iter().filter(|v| **v != m.var) {
            small = small.without(other);
        }
        let as_uni = UniPoly::from_mpoly(&f.embed(&small)?, &m.var)?;
        ensure(as_uni.to_field_elem() == poly.to_field_elem(), "squarefree witness is for another polynomial")?;
        verify_witness(&m.squarefree, None)?;
    }
    Ok(())
}
