//! Radical certificates for the ideal
//! `g1 = A²B² + xA²B − B − z`, `g2 = A²B² + yAB² − A − z`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::certificate::Certificate;
use super::seidenberg::{elimination_resultant, member_unipoly, seidenberg_radical_check, MembershipClaim};
use super::univariate::discriminant;
use crate::arith::{parse_field_elem, FieldElem, MPoly, MonomialRelation, ParamSystem, Rational, Ring, UniPoly};
use crate::error::{Error, Result};

pub const G1: &str = "A^2*B^2 + x*A^2*B - B - z";
pub const G2: &str = "A^2*B^2 + y*A*B^2 - A - z";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HexCase {
    /// `y ≠ z`, `xyz ≠ 1`.
    I,
    /// `y = z`, `xyz ≠ 1`.
    II,
    /// `xyz = 1`.
    III,
}

impl fmt::Display for HexCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HexCase::I => "I",
            HexCase::II => "II",
            HexCase::III => "III",
        })
    }
}

/// Parses a monomial equation such as `y=z` or `xyz=1` over the variables
/// of `ring`; the last variable with exponent ±1 is solved for.
pub fn parse_relation(text: &str, ring: &Ring) -> Result<MonomialRelation> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| Error::usage(format!("relation `{text}` has no `=`")))?;
    let mut exps = vec![0i32; ring.len()];
    monomial_exponents(lhs, ring, 1, &mut exps)?;
    monomial_exponents(rhs, ring, -1, &mut exps)?;
    let v = (0..ring.len())
        .rev()
        .find(|&i| exps[i].abs() == 1)
        .ok_or_else(|| Error::usage(format!("relation `{text}` cannot be solved for a variable")))?;
    let sign = exps[v];
    let target = (0..ring.len())
        .filter(|&i| i != v && exps[i] != 0)
        .map(|i| (ring.name(i).to_string(), -exps[i] * sign))
        .collect::<BTreeMap<_, _>>();
    Ok(MonomialRelation {
        var: ring.name(v).to_string(),
        target,
    })
}

fn monomial_exponents(text: &str, ring: &Ring, sign: i32, exps: &mut [i32]) -> Result<()> {
    let mut rest: &str = &text.replace([' ', '*'], "");
    if rest == "1" {
        return Ok(());
    }
    if rest.is_empty() {
        return Err(Error::usage("empty side in a relation"));
    }
    while !rest.is_empty() {
        let (i, len) = (0..ring.len())
            .filter(|&i| rest.starts_with(ring.name(i)))
            .map(|i| (i, ring.name(i).len()))
            .max_by_key(|&(_, l)| l)
            .ok_or_else(|| Error::usage(format!("unknown variable at `{rest}` in a relation")))?;
        rest = &rest[len..];
        let mut e = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let r = r.trim_start_matches('(');
            let end = r
                .char_indices()
                .find(|&(k, c)| !(c.is_ascii_digit() || (k == 0 && c == '-')))
                .map_or(r.len(), |(k, _)| k);
            e = r[..end]
                .parse::<i32>()
                .map_err(|_| Error::usage(format!("bad exponent in relation near `{rest}`")))?;
            rest = r[end..].trim_start_matches(')');
        }
        exps[i] += sign * e;
    }
    Ok(())
}

fn poly(text: &str, ring: &Ring) -> MPoly {
    let f = parse_field_elem(text, ring).expect("fixed expression parses");
    assert!(f.den().is_one());
    f.num().clone()
}

fn vanishes(text: &str, ring: &Ring) -> bool {
    poly(text, ring).impose_relations().map(|p| p.is_zero()).unwrap_or(false)
}

/// Case selected by the declared relations only.
pub fn case_of(ring: &Ring) -> HexCase {
    if vanishes("x*y*z - 1", ring) {
        HexCase::III
    } else if vanishes("y - z", ring) {
        HexCase::II
    } else {
        HexCase::I
    }
}

fn case_of_swapped(ring: &Ring) -> HexCase {
    if vanishes("x*y*z - 1", ring) {
        HexCase::III
    } else if vanishes("x - z", ring) {
        HexCase::II
    } else {
        HexCase::I
    }
}

/// The member of `I ∩ K[A]` used in each case.
pub fn reference_member(case: HexCase) -> &'static str {
    match case {
        HexCase::I => "(A + y)*(A + z)*(x*A^2 - 1)^2 - A*(A^2 - y*z)^2",
        HexCase::II => "(A + y)*((x*A^2 - 1)^2 - A*(A - y)^2)",
        HexCase::III => "x*(A^2 - y*z)*(A^2 + (y + z - y^2*z^2)*A + y*z)",
    }
}

/// Multiplier chain: `f = c1·g1 + c2·g2` with `f` the case member.
pub fn member_chain(case: HexCase, ring: &Ring) -> MembershipClaim {
    let p = |t: &str| poly(t, ring);
    // e3 = (A+y) g1 − A g2, e4 = AB e3 − (xA²−1) g2
    let e3 = [p("A + y"), p("-A")];
    let e4 = [p("A*B*(A + y)"), p("-A^2*B - x*A^2 + 1")];
    let (m4, m3) = match case {
        HexCase::I => (p("(A + y)*(x*A^2 - 1)"), p("-A*(A^2 - y*z)")),
        HexCase::II => (p("x*A^2 - 1"), p("-A*(A - y)")),
        HexCase::III => (p("A + y"), p("-x^-1*A")),
    };
    let c = |k: usize| &(&m4 * &e4[k]) + &(&m3 * &e3[k]);
    MembershipClaim {
        var: "A".into(),
        poly: p(reference_member(case)),
        cofactors: [c(0), c(1)],
    }
}

/// `A ↔ B`, `x ↔ y`, which exchanges `g1` and `g2`.
pub fn swap(p: &MPoly) -> Result<MPoly> {
    let rename = |n: &str| {
        match n {
            "A" => "B",
            "B" => "A",
            "x" => "y",
            "y" => "x",
            other => other,
        }
        .to_string()
    };
    p.embed_renamed(p.ring(), &rename)
}

fn swapped_chain(case: HexCase, ring: &Ring) -> Result<MembershipClaim> {
    let c = member_chain(case, ring);
    Ok(MembershipClaim {
        var: "B".into(),
        poly: swap(&c.poly)?,
        cofactors: [swap(&c.cofactors[1])?, swap(&c.cofactors[0])?],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HexagonAnalysis {
    pub case_a: HexCase,
    pub case_b: HexCase,
    pub relations: Vec<String>,
    pub ideal: [MPoly; 2],
    pub f_a: MPoly,
    pub f_b: MPoly,
    /// `Res_B(g1, g2)` is divisible by `f_a`.
    pub elimination_divisible: bool,
    pub certificate: Certificate,
}

/// The hexagon ideal over `ring` (which must contain `A, B, x, y, z`).
pub fn hexagon_ideal(ring: &Ring) -> [MPoly; 2] {
    [poly(G1, ring), poly(G2, ring)]
}

/// Certifies that the ideal generated by `ideal` (which must equal the
/// hexagon generators) is radical, with the case chosen from the
/// relations declared on its ring.
pub fn analyze(ideal: &[MPoly; 2]) -> Result<HexagonAnalysis> {
    let ring = ideal[0].ring().clone();
    let expected = hexagon_ideal(&ring);
    for (g, e) in ideal.iter().zip(&expected) {
        if g.impose_relations()? != e.impose_relations()? {
            return Err(Error::usage(format!("{g} is not a hexagon generator")));
        }
    }
    let case_a = case_of(&ring);
    let case_b = case_of_swapped(&ring);
    let claims = [member_chain(case_a, &ring), swapped_chain(case_b, &ring)?];
    let certificate = seidenberg_radical_check(ideal, &claims)?;
    let g: Vec<MPoly> = ideal.iter().map(|p| p.impose_relations()).collect::<Result<_>>()?;
    let f_a = claims[0].poly.impose_relations()?;
    let f_b = claims[1].poly.impose_relations()?;
    let elimination_divisible = match elimination_resultant(&[g[0].clone(), g[1].clone()], "B") {
        Ok(e) => {
            let r = member_unipoly(&e.resultant, "A", &["B"])?;
            let f = member_unipoly(&f_a, "A", &["B"])?;
            r.rem(&f)?.is_zero()
        }
        Err(_) => false,
    };
    let relations = ring
        .relations()
        .iter()
        .map(|r| {
            let rhs: Vec<String> = r.target.iter().map(|(v, e)| format!("{v}^{e}")).collect();
            format!("{} = {}", r.var, if rhs.is_empty() { "1".into() } else { rhs.join("*") })
        })
        .collect();
    Ok(HexagonAnalysis {
        case_a,
        case_b,
        relations,
        ideal: [g[0].clone(), g[1].clone()],
        f_a,
        f_b,
        elimination_divisible,
        certificate,
    })
}

/// Exact split `resultant = factor · cofactor` of a case's squarefreeness
/// resultant, with the cofactor's value at the all-ones point.
#[derive(Clone, Debug, Serialize)]
pub struct CaseFactorization {
    pub case: HexCase,
    pub poly: UniPoly,
    pub resultant: MPoly,
    pub factor: MPoly,
    pub cofactor: MPoly,
    pub value_at_ones: Rational,
    /// Further values at the all-ones point.
    pub checks: Vec<(String, Rational)>,
}

fn uni(text: &str, params: &[&str]) -> Result<UniPoly> {
    let ring = ParamSystem::from_names(params)?;
    let big = ring.with_leading("A")?;
    UniPoly::from_mpoly(&poly(text, &big), "A")
}

fn as_poly(e: &FieldElem) -> Result<MPoly> {
    if !e.den().is_one() {
        return Err(Error::consistency(format!("{e} is not a polynomial")));
    }
    Ok(e.num().clone())
}

pub fn case_factorization(case: HexCase) -> Result<CaseFactorization> {
    let (text, params, factor): (&str, &[&str], &str) = match case {
        HexCase::I => (reference_member(case), &["x", "y", "z"], "x^2*(y - z)^2*(x*y*z - 1)^4"),
        HexCase::II => ("(x*A^2 - 1)^2 - A*(A - y)^2", &["x", "y"], "x^2*(x*y^2 - 1)^2"),
        HexCase::III => ("A^2 + (y + z - y^2*z^2)*A + y*z", &["y", "z"], "1"),
    };
    let f = uni(text, params)?;
    let resultant = match case {
        HexCase::III => as_poly(&discriminant(&f)?)?,
        _ => as_poly(&f.resultant(&f.derivative())?)?,
    };
    let factor = poly(factor, f.ring());
    let cofactor = resultant
        .div_exact(&factor)
        .ok_or_else(|| Error::consistency(format!("{factor} does not divide the resultant")))?;
    let ones = f.ring().all_ones();
    let value_at_ones = cofactor.eval(&ones)?;
    let ring = f.ring().clone();
    let at = |a: &str| -> Result<Rational> { f.eval(&parse_field_elem(a, &ring)?).eval(&ones) };
    let checks = match case {
        HexCase::I => Vec::new(),
        HexCase::II => vec![("f0(-y)".to_string(), at("-y")?)],
        HexCase::III => vec![("f0(1)".to_string(), at("1")?), ("f0(-1)".to_string(), at("-1")?)],
    };
    Ok(CaseFactorization {
        case,
        poly: f,
        resultant,
        factor,
        cofactor,
        value_at_ones,
        checks,
    })
}
