//! Parameter systems: the named variables a polynomial lives over.
//!
//! A variable either stands for a power of the Novikov variable `s`
//! (`exponent` is the affine form `γ` with `x = s^γ`) or is a free algebra
//! generator such as `X` or `A` (no exponent recorded).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Affine form `c + Σ a_p p` over named symplectic parameters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Affine {
    constant: Rational,
    coeffs: BTreeMap<String, Rational>,
}

impl Affine {
    pub fn constant(c: Rational) -> Self {
        Affine {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Affine::default()
    }

    pub fn param(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), Rational::one());
        Affine {
            constant: Rational::zero(),
            coeffs,
        }
    }

    pub fn from_parts(constant: Rational, coeffs: impl IntoIterator<Item = (String, Rational)>) -> Self {
        let mut a = Affine::constant(constant);
        for (k, v) in coeffs {
            a.add_term(&k, &v);
        }
        a
    }

    fn add_term(&mut self, name: &str, c: &Rational) {
        let entry = self.coeffs.entry(name.to_string()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(name);
        }
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<String, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Rational {
        self.coeffs.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn add(&self, other: &Affine) -> Affine {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (k, v) in &other.coeffs {
            out.add_term(k, v);
        }
        out
    }

    pub fn sub(&self, other: &Affine) -> Affine {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Affine {
        if c.is_zero() {
            return Affine::zero();
        }
        Affine {
            constant: &self.constant * c,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Affine {
        self.scale(&Rational::from(-1))
    }

    /// Evaluates the form at numeric parameter values.
    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (k, v) in &self.coeffs {
            let x = values
                .get(k)
                .ok_or_else(|| Error::usage(format!("no value for parameter `{k}`")))?;
            acc += &(v * x);
        }
        Ok(acc)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            parts.push(self.constant.to_string());
        }
        for (k, v) in &self.coeffs {
            if v.is_one() {
                parts.push(k.clone());
            } else if *v == Rational::from(-1) {
                parts.push(format!("-{k}"));
            } else {
                parts.push(format!("{v}*{k}"));
            }
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Affine({self})")
    }
}

impl Serialize for Affine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len() + 1))?;
        map.serialize_entry("const", &self.constant)?;
        for (k, v) in &self.coeffs {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Affine {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct AffineVisitor;
        impl<'de> Visitor<'de> for AffineVisitor {
            type Value = Affine;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from parameter names to rational strings")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut m: M) -> std::result::Result<Affine, M::Error> {
                let mut out = Affine::zero();
                while let Some((k, v)) = m.next_entry::<String, Rational>()? {
                    if k == "const" {
                        out.constant = v;
                    } else {
                        out.add_term(&k, &v);
                    }
                }
                Ok(out)
            }
        }
        d.deserialize_map(AffineVisitor)
    }
}

/// One variable of a [`ParamSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<Affine>,
}

/// A declared substitution `var ↦ Π w^e` among parameter variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRelation {
    pub var: String,
    pub target: BTreeMap<String, i32>,
}

/// Ordered variable set shared by all polynomials of one computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSystem {
    params: Vec<Param>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    relations: Vec<MonomialRelation>,
}

pub type Ring = Arc<ParamSystem>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ParamSystem {
    pub fn new(params: Vec<Param>) -> Result<Ring> {
        for (i, p) in params.iter().enumerate() {
            if !is_identifier(&p.name) {
                return Err(Error::usage(format!("`{}` is not a valid variable name", p.name)));
            }
            if params[..i].iter().any(|q| q.name == p.name) {
                return Err(Error::usage(format!("duplicate variable `{}`", p.name)));
            }
        }
        Ok(Arc::new(ParamSystem {
            params,
            relations: Vec::new(),
        }))
    }

    /// Variables with no recorded s-exponent.
    pub fn from_names(names: &[&str]) -> Result<Ring> {
        ParamSystem::new(
            names
                .iter()
                .map(|n| Param {
                    name: n.to_string(),
                    exponent: None,
                })
                .collect(),
        )
    }

    pub fn empty() -> Ring {
        Arc::new(ParamSystem {
            params: Vec::new(),
            relations: Vec::new(),
        })
    }

    pub fn params(&self) -> &[Param] {
        &self.params
    }

    pub fn relations(&self) -> &[MonomialRelation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.params.iter().map(|p| p.name.as_str())
    }

    pub fn name(&self, i: usize) -> &str {
        &self.params[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p.name == name)
    }

    /// Same variables in the same order (exponent annotations are ignored).
    pub fn same_vars(&self, other: &ParamSystem) -> bool {
        self.params.len() == other.params.len()
            && self.params.iter().zip(&other.params).all(|(a, b)| a.name == b.name)
    }

    /// A copy with `name` prepended as the first (most significant) variable.
    pub fn with_leading(&self, name: &str) -> Result<Ring> {
        let mut params = vec![Param {
            name: name.to_string(),
            exponent: None,
        }];
        params.extend(self.params.iter().cloned());
        let mut sys = ParamSystem::new(params)?;
        Arc::make_mut(&mut sys).relations = self.relations.clone();
        Ok(sys)
    }

    pub fn without(&self, name: &str) -> Ring {
        Arc::new(ParamSystem {
            params: self.params.iter().filter(|p| p.name != name).cloned().collect(),
            relations: self
                .relations
                .iter()
                .filter(|r| r.var != name && !r.target.contains_key(name))
                .cloned()
                .collect(),
        })
    }

    /// Variables of `self` followed by those of `other` not already present.
    pub fn union(&self, other: &ParamSystem) -> Ring {
        let mut params = self.params.clone();
        for p in &other.params {
            if self.index_of(&p.name).is_none() {
                params.push(p.clone());
            }
        }
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().cloned());
        Arc::new(ParamSystem { params, relations })
    }

    pub fn with_relation(&self, rel: MonomialRelation) -> Result<Ring> {
        if self.index_of(&rel.var).is_none() {
            return Err(Error::usage(format!("relation on unknown variable `{}`", rel.var)));
        }
        for w in rel.target.keys() {
            if self.index_of(w).is_none() || *w == rel.var {
                return Err(Error::usage(format!("relation target uses invalid variable `{w}`")));
            }
        }
        let mut out = self.clone();
        out.relations.push(rel);
        Ok(Arc::new(out))
    }

    /// The s-exponent `Σ e_v γ_v` of a monomial, when every variable that
    /// occurs carries an exponent form.
    pub fn exponent_form(&self, exps: &[i32]) -> Option<Affine> {
        let mut acc = Affine::zero();
        for (i, &e) in exps.iter().enumerate() {
            if e != 0 {
                let form = self.params[i].exponent.as_ref()?;
                acc = acc.add(&form.scale(&Rational::from(e)));
            }
        }
        Some(acc)
    }

    /// Point assigning 1 to every variable (the specialization `s = 1`).
    pub fn all_ones(&self) -> BTreeMap<String, Rational> {
        self.names().map(|n| (n.to_string(), Rational::one())).collect()
    }

    /// Exponent vector of the Laurent monomial standing for `s^target`.
    ///
    /// Solves `Σ k_v γ_v = target` over the variables that carry an
    /// exponent form; the solution must be unique and integral.
    pub fn monomial_for(&self, target: &Affine) -> Result<Vec<i32>> {
        let vars: Vec<usize> = (0..self.len())
            .filter(|&i| self.params[i].exponent.is_some())
            .collect();
        let mut keys: Vec<String> = Vec::new();
        for &i in &vars {
            for k in self.params[i].exponent.as_ref().unwrap().coeffs.keys() {
                if !keys.contains(k) {
                    keys.push(k.clone());
                }
            }
        }
        for k in target.coeffs.keys() {
            if !keys.contains(k) {
                return Err(Error::domain(format!(
                    "s^({target}) is not expressible: no variable carries parameter `{k}`"
                )));
            }
        }
        keys.sort();
        // rows: constant, then each parameter; columns: vars, then rhs
        let rows = keys.len() + 1;
        let cols = vars.len();
        let mut m: Vec<Vec<Rational>> = Vec::with_capacity(rows);
        let row_of = |a: &Affine, r: usize| -> Rational {
            if r == 0 {
                a.constant.clone()
            } else {
                a.coeff(&keys[r - 1])
            }
        };
        for r in 0..rows {
            let mut row: Vec<Rational> = vars
                .iter()
                .map(|&i| row_of(self.params[i].exponent.as_ref().unwrap(), r))
                .collect();
            row.push(row_of(target, r));
            m.push(row);
        }
        // Gauss-Jordan
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for c in col..=cols {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=cols {
                        let t = &m[row][c] * &f;
                        m[r][c] -= &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if (row..rows).any(|r| !m[r][cols].is_zero()) {
            return Err(Error::domain(format!(
                "s^({target}) is not a monomial in the declared variables"
            )));
        }
        if pivots.len() < cols {
            return Err(Error::domain(format!(
                "exponent forms of the declared variables are dependent; s^({target}) is ambiguous"
            )));
        }
        let mut out = vec![0i32; self.len()];
        for (r, &col) in pivots.iter().enumerate() {
            let v = &m[r][cols];
            let k = v.to_i64().ok_or_else(|| {
                Error::domain(format!("s^({target}) needs a fractional power of `{}`", self.params[vars[col]].name))
            })?;
            out[vars[col]] = k as i32;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon_system() -> Ring {
        let a = |c: Rational, k: &[(&str, i64)]| {
            Some(Affine::from_parts(c, k.iter().map(|(n, v)| (n.to_string(), Rational::from(*v)))))
        };
        ParamSystem::new(vec![
            Param { name: "x".into(), exponent: a(Rational::new(2, 3), &[("gamma", -1)]) },
            Param { name: "y".into(), exponent: a(Rational::new(2, 3), &[("beta", -1)]) },
            Param { name: "z".into(), exponent: a(Rational::new(-1, 3), &[("alpha", 1)]) },
            Param { name: "r".into(), exponent: a(Rational::new(1, 3), &[]) },
        ])
        .unwrap()
    }

    #[test]
    fn monomial_for_solves_integral_combination() {
        let sys = hexagon_system();
        // s^{-gamma} = x r^{-2}
        let t = Affine::param("gamma").neg();
        assert_eq!(sys.monomial_for(&t).unwrap(), vec![1, 0, 0, -2]);
        // s^{1/3 - gamma} = x r^{-1}
        let t = Affine::from_parts(Rational::new(1, 3), [("gamma".to_string(), Rational::from(-1))]);
        assert_eq!(sys.monomial_for(&t).unwrap(), vec![1, 0, 0, -1]);
        assert!(sys.monomial_for(&Affine::constant(Rational::new(1, 6))).is_err());
        assert!(sys.monomial_for(&Affine::param("eps")).is_err());
    }

    #[test]
    fn affine_serde_roundtrip() {
        let a = Affine::from_parts(Rational::one(), [("eps".to_string(), Rational::from(-1)), ("delta".to_string(), Rational::from(-1))]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"const":"1","delta":"-1","eps":"-1"}"#);
        let b: Affine = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1 - delta - eps");
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(ParamSystem::from_names(&["x", "x"]).is_err());
        assert!(ParamSystem::from_names(&["1x"]).is_err());
    }
}
