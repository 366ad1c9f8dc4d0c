//! Quantum homology presentations of toric Fano surfaces from their
//! moment polygons.

mod reduce;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Affine, Rational};
use crate::error::{Error, Result};
use crate::toric::{Fan, FanoTag, MomentPolytope};

pub use reduce::{
    default_ring, hexagon_ring, reduce, reduce_with, s_terms, Reduced, ReduceOptions, ReducedPresentation,
};

/// Pair of non-adjacent facets (1-based) with `w = e_i + e_j` and the
/// minimal cone `J` containing `w`, `w = Σ c_k e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveSet {
    pub pair: [usize; 2],
    pub w: [i64; 2],
    pub cone: Vec<usize>,
    pub coeffs: Vec<i64>,
}

/// `u_i * u_j = s^{s_exp} q^{q_exp} Π u_m^{monomial[m]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumRelation {
    pub pair: Vec<usize>,
    pub d: Vec<i64>,
    pub s_exp: Affine,
    pub s_value: Rational,
    pub q_exp: i64,
    pub monomial: BTreeMap<String, i64>,
}

/// The same relation in the generators `v_i = s^{-η_i} q u_i`, where it
/// carries no parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedRelation {
    pub pair: Vec<usize>,
    pub monomial: BTreeMap<String, i64>,
}

/// How to pick the `d`-vector of each primitive set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DVectors {
    /// `d_k = 0` outside `I ∪ J` with `J` the minimal cone.
    #[default]
    Unique,
    /// Every decomposition of `w` over at most two independent rays
    /// disjoint from `I` with positive integer coefficients.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QHPresentation {
    pub generators: Vec<String>,
    pub normals: Vec<[i64; 2]>,
    pub supports: Vec<Affine>,
    pub values: BTreeMap<String, Rational>,
    /// Rows `(α_1..α_l)` and `(β_1..β_l)`: `Σ α_i u_i = Σ β_i u_i = 0`.
    pub additive: [Vec<i64>; 2],
    pub relations: Vec<QuantumRelation>,
    pub normalized: Vec<NormalizedRelation>,
}

fn monomial_text(m: &BTreeMap<String, i64>) -> String {
    if m.is_empty() {
        return "[M]".to_string();
    }
    let mut keys: Vec<&String> = m.keys().collect();
    keys.sort_by_key(|k| k[1..].parse::<usize>().unwrap_or(0));
    keys.iter()
        .map(|k| if m[*k] == 1 { k.to_string() } else { format!("{k}^{}", m[*k]) })
        .collect::<Vec<_>>()
        .join("*")
}

fn exp_text(base: &str, a: &Affine) -> String {
    if a.is_constant() && a.constant_part().is_integer() {
        format!("{base}^{}", a.constant_part())
    } else {
        format!("{base}^({a})")
    }
}

impl fmt::Display for QuantumRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.pair.iter().map(|i| format!("u{i}")).collect();
        let mut rhs = Vec::new();
        if !self.s_exp.is_zero() {
            rhs.push(exp_text("s", &self.s_exp));
        }
        if self.q_exp != 0 {
            rhs.push(format!("q^{}", self.q_exp));
        }
        rhs.push(monomial_text(&self.monomial));
        write!(f, "{} = {}", lhs.join("*"), rhs.join(" "))
    }
}

impl fmt::Display for NormalizedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.pair.iter().map(|i| format!("v{i}")).collect();
        let rhs = if self.monomial.is_empty() {
            "1".to_string()
        } else {
            monomial_text(&self.monomial)
        };
        write!(f, "{} = {}", lhs.join("*"), rhs)
    }
}

impl QHPresentation {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The triangle, whose single relation involves all three generators.
    pub fn is_cp2(&self) -> bool {
        self.len() == 3
    }

    /// Additive relations as text, e.g. `-u2 - u3 + u5 = 0`.
    pub fn additive_text(&self) -> [String; 2] {
        self.additive.clone().map(|row| {
            let mut out = String::new();
            for (i, &a) in row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let sign = if a < 0 { "-" } else { "+" };
                let mag = if a.abs() == 1 { String::new() } else { format!("{}*", a.abs()) };
                if out.is_empty() {
                    out = format!("{}{mag}u{}", if a < 0 { "-" } else { "" }, i + 1);
                } else {
                    out = format!("{out} {sign} {mag}u{}", i + 1);
                }
            }
            format!("{out} = 0")
        })
    }
}

/// Primitive sets: all pairs of non-adjacent facets.
pub fn primitive_sets(p: &MomentPolytope) -> Result<Vec<PrimitiveSet>> {
    let v = p.validate();
    if !v.fano {
        return Err(Error::NotFano("the polygon is not Fano".into()));
    }
    if p.len() == 3 {
        return Err(Error::Unsupported(
            "CP2 has no primitive pairs; use the built-in CP2 presentation".into(),
        ));
    }
    let fan = Fan::of(p);
    let e = p.normals();
    let n = e.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if p.adjacent(i, j) {
                continue;
            }
            let w = [e[i][0] + e[j][0], e[i][1] + e[j][1]];
            let cone = fan.minimal_cone(w)?;
            if cone.rays.iter().any(|&k| k == i || k == j) {
                return Err(Error::consistency(format!("minimal cone of {w:?} meets {{{}, {}}}", i + 1, j + 1)));
            }
            if cone.coeffs.iter().any(|&c| c <= 0) {
                return Err(Error::consistency(format!("non-positive cone coefficient for {w:?}")));
            }
            out.push(PrimitiveSet {
                pair: [i + 1, j + 1],
                w,
                cone: cone.rays.iter().map(|k| k + 1).collect(),
                coeffs: cone.coeffs,
            });
        }
    }
    Ok(out)
}

fn relation_from_d(pair: Vec<usize>, d: Vec<i64>, p: &MomentPolytope) -> Result<QuantumRelation> {
    let supports = p.supports();
    let mut s_exp = Affine::zero();
    for (k, &dk) in d.iter().enumerate() {
        s_exp = s_exp.add(&supports[k].scale(&Rational::from(dk)));
    }
    let q_exp = -d.iter().sum::<i64>();
    let mut monomial = BTreeMap::new();
    for (k, &dk) in d.iter().enumerate() {
        if !pair.contains(&(k + 1)) && dk != 0 {
            monomial.insert(format!("u{}", k + 1), -dk);
        }
    }
    // deg(u_i * u_j) = 0 in QH_*; RHS: 2 q_exp + (product of r degree-2 classes).
    let r: i64 = monomial.values().sum();
    let rhs_deg = 2 * q_exp + if r == 0 { 4 } else { 2 * r - 4 * (r - 1) };
    let lhs_deg = 2 * pair.len() as i64 - 4 * (pair.len() as i64 - 1);
    if lhs_deg != rhs_deg {
        return Err(Error::consistency(format!("relation for {pair:?} is not homogeneous")));
    }
    let s_value = s_exp.eval(p.values())?;
    Ok(QuantumRelation {
        pair,
        d,
        s_exp,
        s_value,
        q_exp,
        monomial,
    })
}

/// The multiplicative relation of a primitive set.
pub fn mult_relation(ps: &PrimitiveSet, p: &MomentPolytope) -> Result<QuantumRelation> {
    let mut d = vec![0i64; p.len()];
    d[ps.pair[0] - 1] = 1;
    d[ps.pair[1] - 1] = 1;
    for (k, c) in ps.cone.iter().zip(&ps.coeffs) {
        d[k - 1] = -c;
    }
    relation_from_d(ps.pair.to_vec(), d, p)
}

/// All `d`-vectors for a primitive set (see [`DVectors::All`]).
pub fn all_relations(ps: &PrimitiveSet, p: &MomentPolytope) -> Result<Vec<QuantumRelation>> {
    let e = p.normals();
    let n = e.len();
    let w = ps.w;
    let free: Vec<usize> = (0..n).filter(|k| !ps.pair.contains(&(k + 1))).collect();
    let mut ds: Vec<Vec<i64>> = Vec::new();
    let base = |cs: &[(usize, i64)]| {
        let mut d = vec![0i64; n];
        d[ps.pair[0] - 1] = 1;
        d[ps.pair[1] - 1] = 1;
        for &(k, c) in cs {
            d[k] = -c;
        }
        d
    };
    if w == [0, 0] {
        ds.push(base(&[]));
    }
    for &k in &free {
        let r = e[k];
        let det = r[0] * w[1] - r[1] * w[0];
        if det == 0 && w != [0, 0] && r[0] * w[0] + r[1] * w[1] > 0 {
            let g = if r[0] != 0 { w[0] / r[0] } else { w[1] / r[1] };
            if [g * r[0], g * r[1]] == w {
                ds.push(base(&[(k, g)]));
            }
        }
    }
    for (x, &a) in free.iter().enumerate() {
        for &b in &free[x + 1..] {
            let (ra, rb) = (e[a], e[b]);
            let det = ra[0] * rb[1] - ra[1] * rb[0];
            if det == 0 {
                continue;
            }
            let na = w[0] * rb[1] - w[1] * rb[0];
            let nb = ra[0] * w[1] - ra[1] * w[0];
            if na % det == 0 && nb % det == 0 && na / det > 0 && nb / det > 0 {
                ds.push(base(&[(a, na / det), (b, nb / det)]));
            }
        }
    }
    ds.into_iter().map(|d| relation_from_d(ps.pair.to_vec(), d, p)).collect()
}

fn normalized_of(rel: &QuantumRelation) -> NormalizedRelation {
    NormalizedRelation {
        pair: rel.pair.clone(),
        monomial: rel
            .monomial
            .iter()
            .map(|(k, e)| (format!("v{}", &k[1..]), *e))
            .collect(),
    }
}

pub fn presentation(p: &MomentPolytope) -> Result<QHPresentation> {
    presentation_with(p, DVectors::Unique)
}

pub fn presentation_with(p: &MomentPolytope, mode: DVectors) -> Result<QHPresentation> {
    let v = p.validate();
    if !v.fano {
        return Err(Error::NotFano("the polygon is not Fano".into()));
    }
    let e = p.normals();
    let n = e.len();
    let relations = if n == 3 {
        vec![relation_from_d(vec![1, 2, 3], vec![1, 1, 1], p)?]
    } else {
        let mut rels = Vec::new();
        for ps in primitive_sets(p)? {
            match mode {
                DVectors::Unique => rels.push(mult_relation(&ps, p)?),
                DVectors::All => rels.extend(all_relations(&ps, p)?),
            }
        }
        rels
    };
    let normalized = relations.iter().map(normalized_of).collect();
    Ok(QHPresentation {
        generators: (1..=n).map(|i| format!("u{i}")).collect(),
        normals: e.clone(),
        supports: p.supports(),
        values: p.values().clone(),
        additive: [e.iter().map(|r| r[0]).collect(), e.iter().map(|r| r[1]).collect()],
        relations,
        normalized,
    })
}

/// Built-in presentation of CP2 (triangle of size `scale`).
pub fn cp2_presentation(scale: &Rational) -> Result<QHPresentation> {
    let vals: BTreeMap<String, Rational> = [("scale".to_string(), scale.clone())].into();
    let p = crate::toric::standard_model(FanoTag::Cp2, &vals)?;
    presentation(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::standard_model;

    fn pentagon() -> MomentPolytope {
        let vals = [("eps", "2/3"), ("delta", "3/4")]
            .iter()
            .map(|(k, v)| (k.to_string(), v.parse().unwrap()))
            .collect();
        standard_model(FanoTag::Cp2Bl2, &vals).unwrap()
    }

    #[test]
    fn pentagon_primitive_sets() {
        let sets = primitive_sets(&pentagon()).unwrap();
        let pairs: Vec<[usize; 2]> = sets.iter().map(|s| s.pair).collect();
        assert_eq!(pairs, [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]]);
        assert_eq!(sets[0].w, [-1, -1]);
        assert_eq!((sets[0].cone.clone(), sets[0].coeffs.clone()), (vec![2], vec![1]));
    }

    #[test]
    fn pentagon_relations() {
        let pres = presentation(&pentagon()).unwrap();
        assert_eq!(pres.relations[0].to_string(), "u1*u3 = s^(1 - delta - eps) q^-1 u2");
        assert_eq!(pres.relations[1].d, vec![1, 0, 0, 1, 0]);
        assert_eq!(pres.relations[1].to_string(), "u1*u4 = s^(-eps) q^-2 [M]");
        assert_eq!(pres.additive_text(), ["-u2 - u3 + u5 = 0", "-u1 - u2 + u4 = 0"]);
    }

    #[test]
    fn all_d_vectors_include_the_unique_one() {
        let p = pentagon();
        for ps in primitive_sets(&p).unwrap() {
            let all = all_relations(&ps, &p).unwrap();
            assert!(all.contains(&mult_relation(&ps, &p).unwrap()));
        }
    }
}
