//! One-point blow-up algebras `V = K[A]/(A²(A^{n-1} − z))`, `z = s^{-δ}`.

use serde::Serialize;

use crate::arith::{parse_field_elem, FieldElem, ParamSystem, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::ssalg::{field_summand_certificate, nilpotent_witness, Certificate, FDAlgebra, Verdict, Witness};

#[derive(Clone, Debug, Serialize)]
pub struct BlowupAlgebra {
    pub n: u32,
    /// Variable standing for `s^{-δ}`.
    pub delta: String,
    pub quotient: UniPoly,
    /// Class of `Eq`.
    pub a: UniPoly,
    /// Class of `pq^n`, `B = Az − A^n`.
    pub b: UniPoly,
    #[serde(skip)]
    pub algebra: FDAlgebra,
}

fn upoly(text: &str, ring: &Ring) -> Result<UniPoly> {
    let big = ring.with_leading("A")?;
    let f = parse_field_elem(text, &big)?;
    UniPoly::from_mpoly(f.num(), "A")
}

pub fn build(n: u32, delta: &str) -> Result<BlowupAlgebra> {
    if n < 2 {
        return Err(Error::Parameter(format!("constraint n >= 2 violated (n = {n})")));
    }
    if delta == "A" {
        return Err(Error::usage("the parameter cannot be named `A`"));
    }
    let ring = ParamSystem::from_names(&[delta])?;
    let quotient = upoly(&format!("A^2*(A^{} - {delta})", n - 1), &ring)?;
    let a = upoly("A", &ring)?;
    let b = upoly(&format!("A*{delta} - A^{n}"), &ring)?.rem(&quotient)?;
    let algebra = FDAlgebra::univariate_quotient(&quotient)?;
    let alg = BlowupAlgebra {
        n,
        delta: delta.to_string(),
        quotient,
        a,
        b,
        algebra,
    };
    if !alg.reduce(&alg.a.mul(&alg.b)?)?.is_zero() {
        return Err(Error::consistency("A·B does not vanish"));
    }
    let rhs = alg.b.neg().add(&alg.a.mul(&alg.z())?)?;
    if alg.reduce(&alg.a.pow(n))? != alg.reduce(&rhs)? {
        return Err(Error::consistency("A^n differs from -B + A·z"));
    }
    Ok(alg)
}

impl BlowupAlgebra {
    pub fn ring(&self) -> &Ring {
        self.quotient.ring()
    }

    pub fn z(&self) -> UniPoly {
        let z = FieldElem::var(self.ring(), &self.delta).expect("parameter exists");
        UniPoly::constant("A", z)
    }

    pub fn reduce(&self, p: &UniPoly) -> Result<UniPoly> {
        p.rem(&self.quotient)
    }
}

/// `A^i·A^{n-i} = −B + A·z` for `0 < i < n` and `A^i·A^j = A^{i+j}`
/// untouched by reduction for `i + j < n`.
pub fn verify_e_products(alg: &BlowupAlgebra) -> Result<bool> {
    let n = alg.n;
    let rhs = alg.reduce(&alg.b.neg().add(&alg.a.mul(&alg.z())?)?)?;
    for i in 1..n {
        let lhs = alg.reduce(&alg.a.pow(i).mul(&alg.a.pow(n - i))?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    for i in 1..n {
        for j in 1..n - i {
            let prod = alg.a.pow(i).mul(&alg.a.pow(j))?;
            if alg.reduce(&prod)? != prod || prod != alg.a.pow(i + j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct BlowupAnalysis {
    pub n: u32,
    pub quotient: UniPoly,
    pub b: UniPoly,
    pub certificate: Certificate,
    pub b_squared_zero: bool,
    /// The nilpotent witness equals `−B`.
    pub witness_is_minus_b: bool,
    /// `A` divides zero: `A · A(A^{n-1} − z) ≡ 0`.
    pub a_is_zero_divisor: bool,
    /// Every element of the field-summand component is divisible by `A²`.
    pub summand_divisible_by_a_squared: bool,
    /// `B` lies in the complementary component: `B·e = 0`.
    pub b_in_complement: bool,
}

pub fn analyze(alg: &BlowupAlgebra) -> Result<BlowupAnalysis> {
    let f = &alg.quotient;
    let nil = nilpotent_witness(f)?.ok_or_else(|| Error::consistency("blow-up quotient is squarefree"))?;
    let Witness::Nilpotent { element, .. } = &nil else {
        return Err(Error::consistency("unexpected nilpotent witness"));
    };
    let witness_is_minus_b = *element == alg.b.neg();
    let nil_cert = Certificate::new(Verdict::NotSemisimple, Some(nil.clone()));
    let summand = field_summand_certificate(f)?;
    let Some(Witness::FieldSummand { idempotents, .. }) = &summand.witness else {
        return Err(Error::consistency("no field-summand witness for the blow-up quotient"));
    };
    let e = &idempotents[0];
    let mut divisible = true;
    for k in 0..f.degree().unwrap_or(0) {
        let u = e.mul(&alg.a.pow(k as u32))?.rem(f)?;
        divisible &= u.coeff(0).is_zero() && u.coeff(1).is_zero();
    }
    let b_squared_zero = alg.reduce(&alg.b.mul(&alg.b)?)?.is_zero();
    let cofactor = upoly(&format!("A*(A^{} - {})", alg.n - 1, alg.delta), alg.ring())?;
    let a_is_zero_divisor = alg.reduce(&alg.a.mul(&cofactor)?)?.is_zero() && !alg.reduce(&cofactor)?.is_zero();
    let b_in_complement = alg.reduce(&alg.b.mul(e)?)?.is_zero();
    let certificate = Certificate::new(
        Verdict::NotSemisimple,
        Some(Witness::Composite {
            parts: vec![nil_cert, summand],
        }),
    );
    Ok(BlowupAnalysis {
        n: alg.n,
        quotient: f.clone(),
        b: alg.b.clone(),
        certificate,
        b_squared_zero,
        witness_is_minus_b,
        a_is_zero_divisor,
        summand_divisible_by_a_squared: divisible,
        b_in_complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssalg::verify;

    #[test]
    fn small_cases() {
        let alg = build(2, "z").unwrap();
        assert_eq!(alg.quotient.to_string(), "1 * A^3 + -1 * A^2*z^1");
        assert_eq!(alg.b.to_string(), "-1 * A^2 + 1 * A^1*z^1");
        let alg = build(3, "z").unwrap();
        assert_eq!(alg.quotient.to_string(), "1 * A^4 + -1 * A^2*z^1");
        assert!(matches!(build(1, "z"), Err(Error::Parameter(_))));
    }

    #[test]
    fn e_products() {
        for n in 2..6 {
            assert!(verify_e_products(&build(n, "z").unwrap()).unwrap());
        }
        let mut alg = build(2, "z").unwrap();
        alg.b = alg.b.neg();
        assert!(!verify_e_products(&alg).unwrap());
    }

    #[test]
    fn theorem_verdicts() {
        for n in [2, 3, 5] {
            let alg = build(n, "z").unwrap();
            let r = analyze(&alg).unwrap();
            let v = r.certificate.verdicts();
            assert!(v.contains(&Verdict::NotSemisimple) && v.contains(&Verdict::ContainsFieldSummand));
            assert!(r.b_squared_zero && r.witness_is_minus_b && r.a_is_zero_divisor);
            assert!(r.summand_divisible_by_a_squared && r.b_in_complement);
            verify(&r.certificate, None).unwrap();
            let Some(Witness::FieldSummand { summand, .. }) = &r.certificate.part(Verdict::ContainsFieldSummand).unwrap().witness
            else {
                panic!()
            };
            assert_eq!(*summand, upoly(&format!("A^{} - z", n - 1), alg.ring()).unwrap());
        }
    }
}
