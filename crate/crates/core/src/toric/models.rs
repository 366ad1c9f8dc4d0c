use std::collections::BTreeMap;

use super::{FanoTag, MomentPolytope, Point};
use crate::arith::{Affine, Rational};
use crate::error::{Error, Result};

/// Parameter names each standard model expects.
pub fn model_params(tag: FanoTag) -> &'static [&'static str] {
    match tag {
        FanoTag::Cp2 => &["scale"],
        FanoTag::S2xS2 => &["a", "b"],
        FanoTag::Cp2Bl1 => &["scale", "size"],
        FanoTag::Cp2Bl2 => &["eps", "delta"],
        FanoTag::Cp2Bl3 => &["alpha", "beta", "gamma"],
    }
}

fn pt(x: Affine, y: Affine) -> Point {
    [x, y]
}

fn c(k: i64) -> Affine {
    Affine::constant(Rational::from(k))
}

fn p(name: &str) -> Affine {
    Affine::param(name)
}

struct Check<'a> {
    values: &'a BTreeMap<String, Rational>,
}

impl Check<'_> {
    fn get(&self, name: &str) -> Rational {
        self.values[name].clone()
    }

    fn require(&self, ok: bool, inequality: &str) -> Result<()> {
        if ok {
            return Ok(());
        }
        let vals: Vec<String> = self.values.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        Err(Error::Parameter(format!("constraint {inequality} violated ({})", vals.join(", "))))
    }

    fn unit_interval(&self, name: &str) -> Result<()> {
        let v = self.get(name);
        self.require(v.is_positive() && v < Rational::one(), &format!("0 < {name} < 1"))
    }
}

/// Moment polytope of a standard model with symbolic vertices.
///
/// The blow-ups of CP2 at two and three points use the clockwise vertex
/// order with facet 1 on top; the other models are counterclockwise.
pub fn standard_model(tag: FanoTag, params: &BTreeMap<String, Rational>) -> Result<MomentPolytope> {
    let names = model_params(tag);
    for k in params.keys() {
        if !names.contains(&k.as_str()) {
            return Err(Error::Parameter(format!(
                "model {tag} takes parameters {names:?}, not `{k}`"
            )));
        }
    }
    for n in names {
        if !params.contains_key(*n) {
            return Err(Error::Parameter(format!("model {tag} needs parameter `{n}`")));
        }
    }
    let ck = Check { values: params };
    let one = c(1);
    let vertices = match tag {
        FanoTag::Cp2 => {
            ck.require(ck.get("scale").is_positive(), "scale > 0")?;
            vec![pt(c(0), c(0)), pt(p("scale"), c(0)), pt(c(0), p("scale"))]
        }
        FanoTag::S2xS2 => {
            ck.require(ck.get("a").is_positive(), "a > 0")?;
            ck.require(ck.get("b").is_positive(), "b > 0")?;
            vec![pt(c(0), c(0)), pt(p("a"), c(0)), pt(p("a"), p("b")), pt(c(0), p("b"))]
        }
        FanoTag::Cp2Bl1 => {
            ck.require(ck.get("size").is_positive(), "size > 0")?;
            ck.require(ck.get("size") < ck.get("scale"), "size < scale")?;
            vec![
                pt(p("size"), c(0)),
                pt(p("scale"), c(0)),
                pt(c(0), p("scale")),
                pt(c(0), p("size")),
            ]
        }
        FanoTag::Cp2Bl2 => {
            ck.unit_interval("eps")?;
            ck.unit_interval("delta")?;
            ck.require(&ck.get("eps") + &ck.get("delta") > Rational::one(), "eps + delta > 1")?;
            let (e, d) = (p("eps"), p("delta"));
            vec![
                pt(c(0), c(0)),
                pt(c(0), e.clone()),
                pt(one.sub(&e), e),
                pt(d.clone(), one.sub(&d)),
                pt(d, c(0)),
            ]
        }
        FanoTag::Cp2Bl3 => {
            for n in ["alpha", "beta", "gamma"] {
                ck.unit_interval(n)?;
            }
            ck.require(ck.get("alpha") < ck.get("gamma"), "alpha < gamma")?;
            ck.require(ck.get("alpha") < ck.get("beta"), "alpha < beta")?;
            ck.require(&ck.get("beta") + &ck.get("gamma") > Rational::one(), "beta + gamma > 1")?;
            let (a, b, g) = (p("alpha"), p("beta"), p("gamma"));
            vec![
                pt(a.clone(), c(0)),
                pt(c(0), a),
                pt(c(0), g.clone()),
                pt(one.sub(&g), g),
                pt(b.clone(), one.sub(&b)),
                pt(b, c(0)),
            ]
        }
    };
    MomentPolytope::new(vertices, params.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(kv: &[(&str, &str)]) -> BTreeMap<String, Rational> {
        kv.iter().map(|(k, v)| (k.to_string(), v.parse().unwrap())).collect()
    }

    fn shown(p: &MomentPolytope) -> Vec<String> {
        p.numeric_vertices().iter().map(|[x, y]| format!("({x},{y})")).collect()
    }

    #[test]
    fn pentagon_vertices_and_supports() {
        let p = standard_model(FanoTag::Cp2Bl2, &vals(&[("eps", "2/3"), ("delta", "3/4")])).unwrap();
        assert_eq!(shown(&p), ["(0,0)", "(0,2/3)", "(1/3,2/3)", "(3/4,1/4)", "(3/4,0)"]);
        let eta: Vec<String> = p.supports().iter().map(|a| a.to_string()).collect();
        assert_eq!(eta, ["-eps", "-1", "-delta", "0", "0"]);
    }

    #[test]
    fn hexagon_vertices_and_supports() {
        let p = standard_model(
            FanoTag::Cp2Bl3,
            &vals(&[("alpha", "1/4"), ("beta", "2/3"), ("gamma", "2/3")]),
        )
        .unwrap();
        assert_eq!(shown(&p), ["(1/4,0)", "(0,1/4)", "(0,2/3)", "(1/3,2/3)", "(2/3,1/3)", "(2/3,0)"]);
        assert_eq!(p.normals(), vec![[0, -1], [-1, -1], [-1, 0], [0, 1], [1, 1], [1, 0]]);
        let eta: Vec<String> = p.supports().iter().map(|a| a.to_string()).collect();
        assert_eq!(eta, ["-gamma", "-1", "-beta", "0", "alpha", "0"]);
    }

    #[test]
    fn constraint_errors_name_the_inequality() {
        let e = standard_model(FanoTag::Cp2Bl2, &vals(&[("eps", "1/4"), ("delta", "1/2")])).unwrap_err();
        assert!(e.to_string().contains("eps + delta > 1"), "{e}");
        let e = standard_model(
            FanoTag::Cp2Bl3,
            &vals(&[("alpha", "3/4"), ("beta", "2/3"), ("gamma", "4/5")]),
        )
        .unwrap_err();
        assert!(e.to_string().contains("alpha < beta"), "{e}");
    }
}
