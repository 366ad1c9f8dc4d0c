use serde::Serialize;

use super::certificate::{Certificate, Member, Verdict, Witness};
use super::univariate::squarefree_witness;
use crate::arith::{prs, MPoly, Rational, UniPoly};
use crate::error::{Error, Result};

/// A claimed member `poly = c_1 g_1 + c_2 g_2` depending on `var` only.
#[derive(Clone, Debug)]
pub struct MembershipClaim {
    pub var: String,
    pub poly: MPoly,
    pub cofactors: [MPoly; 2],
}

/// `Res_var(g_1, g_2) = c_1 g_1 + c_2 g_2`.
#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    pub eliminated: String,
    pub resultant: MPoly,
    pub cofactors: [MPoly; 2],
}

fn var_index(p: &MPoly, var: &str) -> Result<usize> {
    p.ring()
        .index_of(var)
        .ok_or_else(|| Error::usage(format!("`{var}` is not a variable of the ideal")))
}

pub fn elimination_resultant(ideal: &[MPoly; 2], eliminate: &str) -> Result<Elimination> {
    let [g1, g2] = ideal;
    g1.check_ring(g2)?;
    let i = var_index(g1, eliminate)?;
    if g1.is_zero() || g2.is_zero() || g1.degree_in(i).max(g2.degree_in(i)) < 1 {
        return Err(Error::usage(format!("generators must be nonzero and involve `{eliminate}`")));
    }
    if g1.min_degree_in(i) < 0 || g2.min_degree_in(i) < 0 {
        return Err(Error::domain(format!("negative power of `{eliminate}`")));
    }
    let (r, u, v) = prs::resultant_with_cofactors(g1, g2, i);
    if r.is_zero() {
        return Err(Error::Domain(format!(
            "resultant in `{eliminate}` vanishes identically: the generators share a factor"
        )));
    }
    Ok(Elimination {
        eliminated: eliminate.to_string(),
        resultant: r,
        cofactors: [u, v],
    })
}

/// Reads a member as a univariate polynomial in its own variable.
pub fn member_unipoly(poly: &MPoly, var: &str, others: &[&str]) -> Result<UniPoly> {
    let mut small = poly.ring().clone();
    for o in others {
        let i = var_index(poly, o)?;
        if poly.involves(i) {
            return Err(Error::usage(format!("member in `{var}` involves `{o}`")));
        }
        small = small.without(o);
    }
    UniPoly::from_mpoly(&poly.embed(&small)?, var)
}

/// Members in each of `vars` obtained by eliminating the other variable;
/// a generator free of the eliminated variable is taken as is. Powers of
/// the kept variable, a unit of the Laurent quotient, are divided out.
pub fn elimination_claims(ideal: &[MPoly; 2], vars: [&str; 2]) -> Result<[MembershipClaim; 2]> {
    let ring = ideal[0].ring();
    let one = MPoly::one(ring);
    let zero = MPoly::zero(ring);
    let claim = |keep: &str, drop: &str| -> Result<MembershipClaim> {
        let i = var_index(&ideal[0], drop)?;
        let (poly, cofactors) = match ideal.iter().position(|g| !g.is_zero() && !g.involves(i)) {
            Some(k) => {
                let mut cofactors = [zero.clone(), zero.clone()];
                cofactors[k] = one.clone();
                (ideal[k].clone(), cofactors)
            }
            None => {
                let e = elimination_resultant(ideal, drop)?;
                (e.resultant, e.cofactors)
            }
        };
        let j = var_index(&poly, keep)?;
        let mut exps = vec![0; ring.len()];
        exps[j] = -poly.min_degree_in(j);
        let unit = MPoly::monomial(ring, exps, Rational::one());
        Ok(MembershipClaim {
            var: keep.to_string(),
            poly: &poly * &unit,
            cofactors: [&cofactors[0] * &unit, &cofactors[1] * &unit],
        })
    };
    Ok([claim(vars[0], vars[1])?, claim(vars[1], vars[0])?])
}

/// Seidenberg's criterion on a two-generator ideal in two variables.
pub fn seidenberg_radical_check(ideal: &[MPoly; 2], claims: &[MembershipClaim; 2]) -> Result<Certificate> {
    let g: Vec<MPoly> = ideal.iter().map(|p| p.impose_relations()).collect::<Result<_>>()?;
    if claims[0].var == claims[1].var {
        return Err(Error::usage("members must be in different variables"));
    }
    let mut members = Vec::new();
    let mut unresolved = Vec::new();
    for (k, c) in claims.iter().enumerate() {
        let f = c.poly.impose_relations()?;
        let combo = c.cofactors[0].impose_relations()?.checked_mul(&g[0])?
            .checked_add(&c.cofactors[1].impose_relations()?.checked_mul(&g[1])?)?;
        if combo != f {
            return Err(Error::usage(format!(
                "membership certificate for the `{}` polynomial does not reproduce it",
                c.var
            )));
        }
        let other = claims[1 - k].var.as_str();
        let uni = member_unipoly(&f, &c.var, &[other])?;
        let w = squarefree_witness(&uni)?;
        if matches!(w, Witness::Unresolved { .. }) {
            unresolved.push(c.var.clone());
        }
        members.push(Member {
            var: c.var.clone(),
            poly: f,
            cofactors: c.cofactors.clone(),
            squarefree: Box::new(w),
        });
    }
    let witness = Witness::Radical {
        generators: [g[0].clone(), g[1].clone()],
        members,
    };
    if unresolved.is_empty() {
        Ok(Certificate::new(Verdict::RadicalIdeal, Some(witness)))
    } else {
        Ok(Certificate::new(Verdict::Inconclusive, Some(witness))
            .with_note(format!("squarefreeness unresolved for {}", unresolved.join(", "))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_field_elem, ParamSystem};

    fn ideal(texts: [&str; 2], names: &[&str]) -> [MPoly; 2] {
        let ring = ParamSystem::from_names(names).unwrap();
        texts.map(|t| parse_field_elem(t, &ring).unwrap().num().clone())
    }

    #[test]
    fn eliminate_linear_and_quadratic() {
        let g = ideal(["A - B", "B^2 - x"], &["A", "B", "x"]);
        let e = elimination_resultant(&g, "B").unwrap();
        assert_eq!(e.resultant, parse_field_elem("A^2 - x", g[0].ring()).unwrap().num().clone());
        let combo = &(&e.cofactors[0] * &g[0]) + &(&e.cofactors[1] * &g[1]);
        assert_eq!(combo, e.resultant);
    }

    #[test]
    fn eliminate_trivial() {
        let g = ideal(["B", "A"], &["A", "B"]);
        let e = elimination_resultant(&g, "B").unwrap();
        assert_eq!(e.resultant.to_string(), "1 * A^1");
        let g = ideal(["B", "B^2"], &["A", "B"]);
        assert!(matches!(elimination_resultant(&g, "B"), Err(Error::Domain(_))));
    }

    #[test]
    fn claims_from_elimination() {
        let g = ideal(["X^2*b - 1", "Y^2*a - 1"], &["X", "Y", "a", "b"]);
        let c = elimination_claims(&g, ["X", "Y"]).unwrap();
        assert_eq!(c[0].poly, g[0]);
        let cert = seidenberg_radical_check(&g, &c).unwrap();
        assert_eq!(cert.verdict, Verdict::RadicalIdeal);
        super::super::verify(&cert, None).unwrap();
        let g = ideal(["X - Y", "Y^2 - 2"], &["X", "Y"]);
        let c = elimination_claims(&g, ["X", "Y"]).unwrap();
        assert_eq!(seidenberg_radical_check(&g, &c).unwrap().verdict, Verdict::RadicalIdeal);
        let g = ideal(["X - Y", "(Y - 1)^2"], &["X", "Y"]);
        let c = elimination_claims(&g, ["X", "Y"]).unwrap();
        assert_eq!(seidenberg_radical_check(&g, &c).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn bad_membership_is_a_usage_error() {
        let g = ideal(["A^2 - 1", "B^2 - 2"], &["A", "B"]);
        let ring = g[0].ring().clone();
        let one = MPoly::one(&ring);
        let zero = MPoly::zero(&ring);
        let claims = [
            MembershipClaim {
                var: "A".into(),
                poly: g[0].clone(),
                cofactors: [one.clone(), zero.clone()],
            },
            MembershipClaim {
                var: "B".into(),
                poly: g[1].clone(),
                cofactors: [one, zero],
            },
        ];
        assert!(matches!(seidenberg_radical_check(&g, &claims), Err(Error::Usage(_))));
    }

    #[test]
    fn radical_of_separated_ideal() {
        let g = ideal(["A^2 - 1", "B^2 - 2"], &["A", "B"]);
        let ring = g[0].ring().clone();
        let one = MPoly::one(&ring);
        let zero = MPoly::zero(&ring);
        let claims = [
            MembershipClaim {
                var: "A".into(),
                poly: g[0].clone(),
                cofactors: [one.clone(), zero.clone()],
            },
            MembershipClaim {
                var: "B".into(),
                poly: g[1].clone(),
                cofactors: [zero, one],
            },
        ];
        let c = seidenberg_radical_check(&g, &claims).unwrap();
        assert_eq!(c.verdict, Verdict::RadicalIdeal);
        super::super::verify::verify(&c, None).unwrap();
    }
}
