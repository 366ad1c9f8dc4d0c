use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::QHPresentation;
use crate::arith::{Affine, MPoly, Param, ParamSystem, Rational, Ring, UniPoly};
use crate::error::{Error, Result};

/// Terminal form of the reduction.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Reduced {
    Univariate { var: String, quotient: UniPoly },
    Bivariate { vars: [String; 2], generators: [MPoly; 2] },
}

#[derive(Clone, Debug)]
pub struct ReduceOptions {
    /// Parameter variables; defaults to [`default_ring`].
    pub ring: Option<Ring>,
    /// Names of the two surviving generators.
    pub names: [String; 2],
    /// `q u_a = s^{κ_a} · names[0]`, `q u_b = s^{κ_b} · names[1]`.
    pub rescale: Option<[Affine; 2]>,
    /// Generator indices (1-based) to keep; chosen automatically if absent.
    pub pair: Option<[usize; 2]>,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            ring: None,
            names: ["X".to_string(), "Y".to_string()],
            rescale: None,
            pair: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedPresentation {
    #[serde(skip)]
    pub ring: Ring,
    #[serde(skip)]
    pub big: Ring,
    pub pair: [usize; 2],
    pub rescale: [Affine; 2],
    /// `q u_i` as Laurent monomials in the surviving generators.
    pub generators: Vec<MPoly>,
    /// The additive relations, normalized.
    pub relations: [MPoly; 2],
    /// Expression of the second generator through the first, if eliminated.
    pub eliminated: Option<MPoly>,
    pub form: Reduced,
}

/// Variables `s_p = s^p` for each parameter `p` of the supports, preceded
/// by `s` (or `t = s^{1/N}` when the constant parts have denominators).
pub fn default_ring(pres: &QHPresentation) -> Result<Ring> {
    let mut names: Vec<String> = Vec::new();
    let mut denom = num_bigint::BigInt::one();
    for a in &pres.supports {
        denom = denom.lcm(a.constant_part().denom());
        for k in a.coeffs().keys() {
            if !names.contains(k) {
                names.push(k.clone());
            }
        }
    }
    names.sort();
    let base = if denom.is_one() {
        Param {
            name: "s".into(),
            exponent: Some(Affine::constant(Rational::one())),
        }
    } else {
        Param {
            name: "t".into(),
            exponent: Some(Affine::constant(Rational::from_big(1.into(), denom))),
        }
    };
    let mut params = vec![base];
    for n in names {
        params.push(Param {
            name: format!("s_{n}"),
            exponent: Some(Affine::param(&n)),
        });
    }
    ParamSystem::new(params)
}

/// `x = s^{2/3-γ}`, `y = s^{2/3-β}`, `z = s^{α-1/3}`, `r = s^{1/3}`.
pub fn hexagon_ring() -> Ring {
    let form = |c: (i64, i64), p: &str, k: i64| {
        Affine::from_parts(Rational::new(c.0, c.1), [(p.to_string(), Rational::from(k))])
    };
    ParamSystem::new(vec![
        Param {
            name: "x".into(),
            exponent: Some(form((2, 3), "gamma", -1)),
        },
        Param {
            name: "y".into(),
            exponent: Some(form((2, 3), "beta", -1)),
        },
        Param {
            name: "z".into(),
            exponent: Some(form((-1, 3), "alpha", 1)),
        },
        Param {
            name: "r".into(),
            exponent: Some(Affine::constant(Rational::new(1, 3))),
        },
    ])
    .expect("valid names")
}

fn det(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn choose_pair(pres: &QHPresentation) -> Result<[usize; 2]> {
    let e = &pres.normals;
    for rel in &pres.relations {
        if rel.pair.len() == 2 && rel.monomial.len() == 1 && rel.monomial.values().all(|&v| v == 1) {
            let (a, b) = (rel.pair[0], rel.pair[1]);
            if det(e[a - 1], e[b - 1]).abs() == 1 {
                return Ok([a, b]);
            }
        }
    }
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            if det(e[a], e[b]).abs() == 1 {
                return Ok([a + 1, b + 1]);
            }
        }
    }
    Err(Error::consistency("no pair of normals forms a lattice basis"))
}

/// Shifts the generator exponents to start at 0 and scales so the
/// generator-free part is `-1` when it is a single term.
fn normalize_relation(r: &MPoly) -> MPoly {
    let mins = r.min_exponents();
    let mut shift = vec![0; r.nvars()];
    shift[0] = -mins[0];
    shift[1] = -mins[1];
    let r = r.shift(&shift);
    let free = MPoly::from_terms(
        r.ring(),
        r.terms()
            .filter(|(e, _)| e[0] == 0 && e[1] == 0)
            .map(|(e, c)| (e.to_vec(), c.clone())),
    );
    if free.is_monomial() {
        let inv = (-&free).monomial_inverse().expect("monomial");
        &r * &inv
    } else {
        r.monic()
    }
}

fn s_monomial(big: &Ring, ring: &Ring, a: &Affine) -> Result<MPoly> {
    let exps = ring.monomial_for(a)?;
    let mut full = vec![0, 0];
    full.extend(exps);
    Ok(MPoly::monomial(big, full, Rational::one()))
}

pub fn reduce(pres: &QHPresentation) -> Result<ReducedPresentation> {
    reduce_with(pres, &ReduceOptions::default())
}

pub fn reduce_with(pres: &QHPresentation, opts: &ReduceOptions) -> Result<ReducedPresentation> {
    let ring = match &opts.ring {
        Some(r) => r.clone(),
        None => default_ring(pres)?,
    };
    let big = ring.with_leading(&opts.names[1])?.with_leading(&opts.names[0])?;
    let rescale = opts.rescale.clone().unwrap_or_else(|| [Affine::zero(), Affine::zero()]);
    if pres.is_cp2() {
        return reduce_cp2(pres, ring, big, rescale, &opts.names[0]);
    }
    let [a, b] = match opts.pair {
        Some(p) => p,
        None => choose_pair(pres)?,
    };
    let e = &pres.normals;
    let (ea, eb) = (e[a - 1], e[b - 1]);
    let dab = det(ea, eb);
    if dab.abs() != 1 {
        return Err(Error::usage(format!("normals of u{a}, u{b} do not form a lattice basis")));
    }
    let eta = &pres.supports;
    let mut generators = Vec::with_capacity(e.len());
    for (i, ei) in e.iter().enumerate() {
        let m = det(*ei, eb) / dab;
        let n = det(ea, *ei) / dab;
        let sigma = eta[i]
            .sub(&eta[a - 1].scale(&Rational::from(m)))
            .sub(&eta[b - 1].scale(&Rational::from(n)))
            .add(&rescale[0].scale(&Rational::from(m)))
            .add(&rescale[1].scale(&Rational::from(n)));
        let s = s_monomial(&big, &ring, &sigma)?;
        let mut exps = vec![0; big.len()];
        exps[0] = m as i32;
        exps[1] = n as i32;
        generators.push(s.mul_monomial(&exps, &Rational::one()));
    }
    let additive = |row: &[i64]| {
        row.iter()
            .zip(&generators)
            .fold(MPoly::zero(&big), |acc, (&c, g)| &acc + &g.scale(&Rational::from(c)))
    };
    let relations = [
        normalize_relation(&additive(&pres.additive[0])),
        normalize_relation(&additive(&pres.additive[1])),
    ];
    let mut ideal = [relations[0].normalized(), relations[1].normalized()];
    if ideal[0].cmp_terms(&ideal[1]).is_lt() {
        ideal.swap(0, 1);
    }
    let mut out = ReducedPresentation {
        ring: ring.clone(),
        big: big.clone(),
        pair: [a, b],
        rescale,
        generators,
        relations: relations.clone(),
        eliminated: None,
        form: Reduced::Bivariate {
            vars: opts.names.clone(),
            generators: ideal,
        },
    };
    for k in 0..2 {
        let r = &relations[k];
        if r.degree_in(1) != 1 || r.min_degree_in(1) != 0 {
            continue;
        }
        let cs = r.coeffs_in(1);
        if !cs[1].is_monomial() {
            continue;
        }
        let y = &(-&cs[0]) * &cs[1].monomial_inverse()?;
        let sub = relations[1 - k].substitute(1, &y)?;
        if sub.is_zero() {
            continue;
        }
        let mut shift = vec![0; big.len()];
        shift[0] = -sub.min_degree_in(0);
        let q = sub.shift(&shift);
        let xring = ring.with_leading(&opts.names[0])?;
        let quotient = UniPoly::from_mpoly(&q.embed(&xring)?, &opts.names[0])?;
        out.eliminated = Some(y);
        out.form = Reduced::Univariate {
            var: opts.names[0].clone(),
            quotient,
        };
        break;
    }
    Ok(out)
}

fn reduce_cp2(
    pres: &QHPresentation,
    ring: Ring,
    big: Ring,
    rescale: [Affine; 2],
    var: &str,
) -> Result<ReducedPresentation> {
    // X^3 = s^{Σ η}: all q u_i coincide.
    let total = pres.supports.iter().fold(Affine::zero(), |acc, a| acc.add(a));
    let x = MPoly::var(&big, var)?;
    let s = s_monomial(&big, &ring, &total.neg())?;
    let q = &(&s * &x.pow(3)) - &MPoly::one(&big);
    let xring = ring.with_leading(var)?;
    let quotient = UniPoly::from_mpoly(&q.embed(&xring)?, var)?;
    Ok(ReducedPresentation {
        ring,
        big,
        pair: [1, 1],
        rescale,
        generators: vec![x.clone(), x.clone(), x],
        relations: [q.clone(), q],
        eliminated: None,
        form: Reduced::Univariate {
            var: var.to_string(),
            quotient,
        },
    })
}

/// Coefficients of a Laurent polynomial in s-notation: `(c, a)` per term
/// `c · s^a`, using the exponent forms of the ring.
pub fn s_terms(p: &MPoly) -> Option<Vec<(Rational, Affine)>> {
    p.terms()
        .map(|(e, c)| Some((c.clone(), p.ring().exponent_form(e)?)))
        .collect()
}

fn s_term_text(c: &Rational, a: &Affine) -> (bool, String) {
    let neg = c.is_negative();
    let m = c.abs();
    let body = if a.is_zero() {
        m.to_string()
    } else {
        let s = if a.is_constant() && a.constant_part().is_integer() {
            format!("s^{}", a.constant_part())
        } else {
            format!("s^({a})")
        };
        if m.is_one() {
            s
        } else {
            format!("{m}*{s}")
        }
    };
    (neg, body)
}

fn coeff_text(p: &MPoly) -> Option<(bool, String)> {
    let mut terms = s_terms(p)?;
    terms.sort_by(|x, y| x.1.to_string().cmp(&y.1.to_string()));
    if terms.len() == 1 {
        return Some(s_term_text(&terms[0].0, &terms[0].1));
    }
    let mut out = String::new();
    for (i, (c, a)) in terms.iter().enumerate() {
        let (neg, body) = s_term_text(c, a);
        if i == 0 {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out = format!("{out} {} {body}", if neg { "-" } else { "+" });
        }
    }
    Some((false, format!("({out})")))
}

impl ReducedPresentation {
    /// Back-substitutions `q u_i` in the surviving generator(s).
    pub fn back_substitutions(&self) -> Result<Vec<(String, MPoly)>> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let v = match &self.eliminated {
                Some(y) => g.substitute(1, y)?,
                None => g.clone(),
            };
            out.push((format!("q*u{}", i + 1), v));
        }
        Ok(out)
    }

    /// The quotient polynomial with coefficients written as powers of `s`.
    pub fn s_text(&self) -> Option<String> {
        let Reduced::Univariate { quotient, var } = &self.form else {
            return None;
        };
        let (p, _) = quotient.to_mpoly_cleared();
        let mut out = String::new();
        for k in (0..=quotient.degree()?).rev() {
            let c = p.coeffs_in(0).get(k).cloned().unwrap_or_else(|| MPoly::zero(p.ring()));
            if c.is_zero() {
                continue;
            }
            let c = c.embed(&self.ring).ok()?;
            let (neg, body) = coeff_text(&c)?;
            let body = match k {
                0 => body,
                1 => format!("{body} * {var}"),
                _ => format!("{body} * {var}^{k}"),
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out = format!("{out} {} {body}", if neg { "-" } else { "+" });
            }
        }
        Some(out)
    }

    /// Substitutes the reduction back into every original relation and
    /// checks that each vanishes modulo the reduced ideal.
    pub fn check_soundness(&self, pres: &QHPresentation) -> Result<()> {
        if pres.is_cp2() {
            return Ok(());
        }
        for rel in &pres.relations {
            let mut lhs = MPoly::one(&self.big);
            for &i in &rel.pair {
                lhs = &lhs * &self.generators[i - 1];
            }
            let mut rhs = s_monomial(&self.big, &self.ring, &rel.s_exp)?;
            for (u, &e) in &rel.monomial {
                let i: usize = u[1..].parse().map_err(|_| Error::consistency("bad generator label"))?;
                rhs = &rhs * &self.generators[i - 1].powi(e as i32)?;
            }
            if lhs != rhs {
                return Err(Error::consistency(format!("relation {rel} fails after back-substitution")));
            }
        }
        match &self.form {
            Reduced::Univariate { quotient, var } => {
                let y = self.eliminated.as_ref().expect("univariate form eliminates");
                let xring = self.ring.with_leading(var)?;
                for r in &self.relations {
                    let sub = r.substitute(1, y)?;
                    let mut shift = vec![0; self.big.len()];
                    shift[0] = -sub.min_degree_in(0).min(0);
                    let p = UniPoly::from_mpoly(&sub.shift(&shift).embed(&xring)?, var)?;
                    if !p.rem(quotient)?.is_zero() {
                        return Err(Error::consistency("additive relation is not in the reduced ideal"));
                    }
                }
            }
            Reduced::Bivariate { generators, .. } => {
                for r in &self.relations {
                    if !generators.contains(&r.normalized()) {
                        return Err(Error::consistency("relation is not an ideal generator up to a unit"));
                    }
                }
            }
        }
        Ok(())
    }
}
