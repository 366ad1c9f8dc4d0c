use super::algebra::FDAlgebra;
use super::certificate::{Certificate, Verdict, Witness};
use super::linalg;
use super::nonvanish::nonvanishing_test;
use crate::arith::{FieldElem, UniPoly};
use crate::error::{Error, Result};

/// Default dimension bound for the trace-form route.
pub const TRACE_FORM_MAX_DIM: usize = 16;

fn positive_degree(f: &UniPoly) -> Result<usize> {
    match f.degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::usage(format!("expected a polynomial of positive degree, got {f}"))),
    }
}

/// `Res(f, f')` with cofactors, as a [`Witness::Resultant`] when a
/// schedule point shows it nonzero, else [`Witness::Unresolved`].
pub fn squarefree_witness(f: &UniPoly) -> Result<Witness> {
    positive_degree(f)?;
    let (res, u, v) = f.resultant_with_cofactors(&f.derivative())?;
    Ok(match nonvanishing_test(&res) {
        Some((point, value)) => Witness::Resultant {
            poly: f.clone(),
            resultant: res,
            cofactors: [u, v],
            point,
            value,
        },
        None => Witness::Unresolved {
            poly: f.clone(),
            resultant: res,
        },
    })
}

/// `(-1)^{d(d-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant(f: &UniPoly) -> Result<FieldElem> {
    let d = positive_degree(f)?;
    let res = f.resultant(&f.derivative())?;
    let q = res.checked_div(&f.lc())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -&q } else { q })
}

pub fn is_semisimple_univariate(f: &UniPoly) -> Result<Certificate> {
    let w = squarefree_witness(f)?;
    match w {
        Witness::Resultant { .. } => Ok(Certificate::new(Verdict::Semisimple, Some(w))),
        Witness::Unresolved { ref resultant, .. } if resultant.is_zero() => {
            let nil = nilpotent_witness(f)?
                .ok_or_else(|| Error::consistency(format!("Res(f, f') = 0 but {f} is squarefree")))?;
            Ok(Certificate::new(Verdict::NotSemisimple, Some(nil)))
        }
        _ => Ok(Certificate::new(Verdict::Inconclusive, Some(w))
            .with_note("no schedule point shows Res(f, f') nonzero")),
    }
}

/// Radical of `f` with its nilpotency index, when `f` is not squarefree.
pub fn nilpotent_witness(f: &UniPoly) -> Result<Option<Witness>> {
    positive_degree(f)?;
    let (_, parts) = f.squarefree_decomposition()?;
    let power = parts.iter().map(|(_, m)| *m).max().unwrap_or(1);
    if power <= 1 {
        return Ok(None);
    }
    let mut m = UniPoly::constant(f.var(), FieldElem::one(f.ring()));
    for (p, _) in &parts {
        m = m.mul(p)?;
    }
    Ok(Some(Witness::Nilpotent {
        modulus: f.clone(),
        element: m.rem(f)?,
        power: power as u32,
    }))
}

/// CRT splitting off the multiplicity-one part `a₁` of `f`.
pub fn field_summand_certificate(f: &UniPoly) -> Result<Certificate> {
    positive_degree(f)?;
    let (_, parts) = f.squarefree_decomposition()?;
    let Some((a1, _)) = parts.iter().find(|(_, m)| *m == 1) else {
        return Ok(Certificate::new(Verdict::Inconclusive, None)
            .with_note("no multiplicity-one factor; a field summand is not excluded"));
    };
    let (cofactor, r) = f.divrem(a1)?;
    if !r.is_zero() {
        return Err(Error::consistency("multiplicity-one factor does not divide f"));
    }
    let ring = f.ring();
    let [u, v] = if cofactor.degree() == Some(0) {
        [UniPoly::zero(f.var(), ring), UniPoly::constant(f.var(), cofactor.lc().inv()?)]
    } else {
        let (res, u, v) = a1.resultant_with_cofactors(&cofactor)?;
        if res.is_zero() {
            return Err(Error::consistency("squarefree factors are not coprime"));
        }
        let inv = res.inv()?;
        [u.scale(&inv), v.scale(&inv)]
    };
    let e1 = v.mul(&cofactor)?.rem(f)?;
    let e2 = u.mul(a1)?.rem(f)?;
    let sq = squarefree_witness(a1)?;
    if matches!(sq, Witness::Unresolved { .. }) {
        return Ok(Certificate::new(Verdict::Inconclusive, Some(sq))
            .with_note("squarefreeness of the multiplicity-one factor not certified"));
    }
    Ok(Certificate::new(
        Verdict::ContainsFieldSummand,
        Some(Witness::FieldSummand {
            modulus: f.clone(),
            summand: a1.clone(),
            cofactor,
            bezout: [u, v],
            idempotents: [e1, e2],
            squarefree: Box::new(sq),
        }),
    ))
}

/// Gram matrix `T_ij = Tr(L_{b_i b_j})`.
pub fn trace_form(alg: &FDAlgebra) -> Result<linalg::Matrix> {
    let n = alg.dim();
    let mut traces = Vec::with_capacity(n);
    for k in 0..n {
        let mut t = FieldElem::zero(alg.ring());
        for j in 0..n {
            t = t.checked_add(&alg.product(k, j)[j])?;
        }
        traces.push(t);
    }
    let mut gram = vec![vec![FieldElem::zero(alg.ring()); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = FieldElem::zero(alg.ring());
            for (c, t) in alg.product(i, j).iter().zip(&traces) {
                if !c.is_zero() && !t.is_zero() {
                    acc = acc.checked_add(&c.checked_mul(t)?)?;
                }
            }
            gram[i][j] = acc.clone();
            gram[j][i] = acc;
        }
    }
    Ok(gram)
}

pub fn trace_form_semisimple(alg: &FDAlgebra) -> Result<Certificate> {
    trace_form_semisimple_bounded(alg, TRACE_FORM_MAX_DIM)
}

pub fn trace_form_semisimple_bounded(alg: &FDAlgebra, max_dim: usize) -> Result<Certificate> {
    if alg.dim() > max_dim {
        return Err(Error::Size(format!(
            "trace form of a {}-dimensional algebra exceeds the bound {max_dim}",
            alg.dim()
        )));
    }
    let gram = trace_form(alg)?;
    let det = linalg::det(&gram, alg.ring())?;
    if det.is_zero() {
        let kernel = linalg::kernel(&gram, alg.ring())?;
        let k = kernel
            .into_iter()
            .next()
            .ok_or_else(|| Error::consistency("singular trace form with trivial kernel"))?;
        let mut power = 1u32;
        let mut acc = k.clone();
        while acc.iter().any(|c| !c.is_zero()) {
            if power as usize > alg.dim() {
                return Err(Error::consistency("trace-form kernel element is not nilpotent"));
            }
            acc = alg.mul(&acc, &k)?;
            power += 1;
        }
        return Ok(Certificate::new(
            Verdict::NotSemisimple,
            Some(Witness::NilpotentVector { coordinates: k, power }),
        ));
    }
    Ok(match nonvanishing_test(&det) {
        Some((point, value)) => Certificate::new(Verdict::Semisimple, Some(Witness::TraceForm { det, point, value })),
        None => Certificate::new(Verdict::Inconclusive, None).with_note(format!("trace-form determinant {det} unresolved")),
    })
}

/// Coordinates of `p mod f` in the basis `1, X, ..., X^{d-1}`.
pub fn coordinates(p: &UniPoly, f: &UniPoly) -> Result<Vec<FieldElem>> {
    let d = positive_degree(f)?;
    let r = p.rem(f)?;
    Ok((0..d).map(|k| r.coeff(k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_field_elem, ParamSystem, Rational, Ring};

    fn upoly(text: &str, ring: &Ring) -> UniPoly {
        let big = ring.with_leading("X").unwrap();
        UniPoly::from_mpoly(parse_field_elem(text, &big).unwrap().num(), "X").unwrap()
    }

    #[test]
    fn quadratic_with_parameter() {
        let ring = ParamSystem::from_names(&["x"]).unwrap();
        let c = is_semisimple_univariate(&upoly("X^2 - x", &ring)).unwrap();
        assert_eq!(c.verdict, Verdict::Semisimple);
        let Some(Witness::Resultant { resultant, value, .. }) = &c.witness else {
            panic!()
        };
        assert_eq!(resultant.to_string(), "-4 * x^1");
        assert_eq!(*value, Rational::from(-4));
    }

    #[test]
    fn square_is_not_semisimple() {
        let ring = ParamSystem::empty();
        let c = is_semisimple_univariate(&upoly("X^2", &ring)).unwrap();
        assert_eq!(c.verdict, Verdict::NotSemisimple);
        let Some(Witness::Nilpotent { element, power, .. }) = &c.witness else {
            panic!()
        };
        assert_eq!(element.to_string(), "1 * X^1");
        assert_eq!(*power, 2);
        assert_eq!(field_summand_certificate(&upoly("X^2", &ring)).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn nilpotent_radical() {
        let ring = ParamSystem::empty();
        let Some(Witness::Nilpotent { element, power, .. }) = nilpotent_witness(&upoly("X^3 - X^2", &ring)).unwrap() else {
            panic!()
        };
        assert_eq!(element.to_string(), "1 * X^2 + -1 * X^1");
        assert_eq!(power, 2);
        assert!(nilpotent_witness(&upoly("X^2 - 1", &ring)).unwrap().is_none());
    }

    #[test]
    fn trace_forms() {
        let ring = ParamSystem::empty();
        let alg = FDAlgebra::univariate_quotient(&upoly("X^2", &ring)).unwrap();
        let g = trace_form(&alg).unwrap();
        assert_eq!(g[0][0].to_string(), "2");
        assert!(g[1][1].is_zero() && g[0][1].is_zero());
        assert_eq!(trace_form_semisimple(&alg).unwrap().verdict, Verdict::NotSemisimple);
        let alg = FDAlgebra::univariate_quotient(&upoly("X^2 - 1", &ring)).unwrap();
        let c = trace_form_semisimple(&alg).unwrap();
        assert_eq!(c.verdict, Verdict::Semisimple);
        let Some(Witness::TraceForm { value, .. }) = &c.witness else {
            panic!()
        };
        assert_eq!(*value, Rational::from(4));
    }

    #[test]
    fn summand_of_blowup_shape() {
        let ring = ParamSystem::from_names(&["z"]).unwrap();
        let c = field_summand_certificate(&upoly("X^2*(X^2 - z)", &ring)).unwrap();
        assert_eq!(c.verdict, Verdict::ContainsFieldSummand);
        let Some(Witness::FieldSummand { summand, .. }) = &c.witness else {
            panic!()
        };
        assert_eq!(summand.to_string(), "1 * X^2 + -1 * z^1");
    }

    #[test]
    fn discriminant_of_quadratic() {
        let ring = ParamSystem::from_names(&["b", "c"]).unwrap();
        let d = discriminant(&upoly("X^2 + b*X + c", &ring)).unwrap();
        assert_eq!(d, parse_field_elem("b^2 - 4*c", &ring).unwrap());
    }
}
