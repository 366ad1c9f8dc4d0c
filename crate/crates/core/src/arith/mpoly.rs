//! Sparse multivariate Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::params::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically (first variable most
/// significant).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Mono {
    deg: i64,
    exps: Vec<i32>,
}

impl Mono {
    pub(crate) fn new(exps: Vec<i32>) -> Self {
        let deg = exps.iter().map(|&e| e as i64).sum();
        Mono { deg, exps }
    }

    pub(crate) fn one(n: usize) -> Self {
        Mono { deg: 0, exps: vec![0; n] }
    }

    pub(crate) fn exps(&self) -> &[i32] {
        &self.exps
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono {
            deg: self.deg - other.deg,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

/// Polynomial in the variables of a [`ParamSystem`](super::ParamSystem),
/// with integer (possibly negative) exponents and rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex monomials; zero
/// coefficients are never stored.
#[derive(Clone)]
pub struct MPoly {
    ring: Ring,
    terms: BTreeMap<Mono, Rational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_vars(&other.ring) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(ring: &Ring) -> Self {
        MPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        MPoly::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Mono::one(ring.len()), c);
        }
        p
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown variable `{name}`")))?;
        let mut exps = vec![0; ring.len()];
        exps[i] = 1;
        Ok(MPoly::monomial(ring, exps, Rational::one()))
    }

    pub fn monomial(ring: &Ring, exps: Vec<i32>, c: Rational) -> Self {
        assert_eq!(exps.len(), ring.len(), "exponent vector length");
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Mono::new(exps), c);
        }
        p
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Vec<i32>, Rational)>) -> Self {
        let mut p = MPoly::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.len(), "exponent vector length");
            p.add_term(Mono::new(e), &c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().rev().map(|(m, c)| (m.exps(), c))
    }

    /// Compares term lists from the leading term down (monomials first,
    /// then coefficients).
    pub fn cmp_terms(&self, other: &MPoly) -> std::cmp::Ordering {
        let a = self.terms.iter().rev();
        let b = other.terms.iter().rev();
        a.cmp(b)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().exps.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// A single nonzero term, i.e. a unit of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&[i32], &Rational)> {
        self.terms.last_key_value().map(|(m, c)| (m.exps(), c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.last_key_value().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub(crate) fn check_ring(&self, other: &MPoly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_vars(&other.ring) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "operands live over different variable sets ({:?} vs {:?})",
                self.ring.names().collect::<Vec<_>>(),
                other.ring.names().collect::<Vec<_>>()
            )))
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c);
        }
        Ok(big)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MPoly::zero(&self.ring));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        let mut out = MPoly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `c · Π x_i^{e_i}`.
    pub fn mul_monomial(&self, exps: &[i32], c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let m = Mono::new(exps.to_vec());
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(&m), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut result = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents are allowed for monomials only.
    pub fn powi(&self, n: i32) -> Result<MPoly> {
        if n >= 0 {
            return Ok(self.pow(n as u32));
        }
        let inv = self.monomial_inverse()?;
        Ok(inv.pow((-n) as u32))
    }

    pub fn monomial_inverse(&self) -> Result<MPoly> {
        if !self.is_monomial() {
            return Err(Error::domain(format!("{self} is not a unit of the Laurent ring")));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let exps = m.exps.iter().map(|e| -e).collect();
        Ok(MPoly::monomial(&self.ring, exps, c.recip()))
    }

    /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i32> {
        let n = self.ring.len();
        let mut mins: Option<Vec<i32>> = None;
        for m in self.terms.keys() {
            match &mut mins {
                None => mins = Some(m.exps.clone()),
                Some(v) => {
                    for i in 0..n {
                        v[i] = v[i].min(m.exps[i]);
                    }
                }
            }
        }
        mins.unwrap_or_else(|| vec![0; n])
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let n = self.ring.len();
        let mut maxs: Option<Vec<i32>> = None;
        for m in self.terms.keys() {
            match &mut maxs {
                None => maxs = Some(m.exps.clone()),
                Some(v) => {
                    for i in 0..n {
                        v[i] = v[i].max(m.exps[i]);
                    }
                }
            }
        }
        maxs.unwrap_or_else(|| vec![0; n])
    }

    /// Multiplies by `Π x_i^{shift_i}`.
    pub fn shift(&self, shift: &[i32]) -> MPoly {
        if shift.iter().all(|&e| e == 0) {
            return self.clone();
        }
        self.mul_monomial(shift, &Rational::one())
    }

    /// Splits off the largest monomial factor: returns `(m, p)` with
    /// `self = x^m · p` and every variable of `p` having minimum exponent 0.
    pub fn split_monomial(&self) -> (Vec<i32>, MPoly) {
        let m = self.min_exponents();
        let neg: Vec<i32> = m.iter().map(|e| -e).collect();
        (m, self.shift(&neg))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.exps.iter().all(|&e| e >= 0))
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.exps[var]).max().unwrap_or(i32::MIN)
    }

    pub fn min_degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m.exps[var]).min().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exps[var] != 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.deg).max().unwrap_or(i64::MIN)
    }

    /// Coefficients of `self` as a polynomial in `var` (index = power).
    /// Requires nonnegative exponents in `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        assert!(self.min_degree_in(var) >= 0, "negative exponent in main variable");
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let k = m.exps[var] as usize;
            let mut e = m.exps.clone();
            e[var] = 0;
            out[k].terms.insert(Mono::new(e), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(ring: &Ring, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.exps.clone();
                e[var] += k as i32;
                out.add_term(Mono::new(e), v);
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e != 0 {
                let mut exps = m.exps.clone();
                exps[var] -= 1;
                out.add_term(Mono::new(exps), &(c * &Rational::from(e)));
            }
        }
        out
    }

    /// Exact evaluation at a point assigning every variable that occurs.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values = self.point_values(point, true)?;
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e != 0 {
                    t *= &values[i].as_ref().unwrap().pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    fn point_values(&self, point: &BTreeMap<String, Rational>, require_all: bool) -> Result<Vec<Option<Rational>>> {
        let n = self.ring.len();
        let mins = self.min_exponents();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let name = self.ring.name(i);
            let v = point.get(name).cloned();
            if v.is_none() && require_all && self.involves(i) {
                return Err(Error::usage(format!("no value assigned to `{name}`")));
            }
            if let Some(val) = &v {
                if val.is_zero() && mins[i] < 0 {
                    return Err(Error::domain(format!(
                        "`{name}` = 0 but it occurs with a negative exponent"
                    )));
                }
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Evaluates the assigned variables, keeping the others symbolic.
    pub fn specialize_partial(&self, point: &BTreeMap<String, Rational>) -> Result<MPoly> {
        let values = self.point_values(point, false)?;
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut e = m.exps.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    if e[i] != 0 {
                        t *= &v.pow(e[i]);
                        e[i] = 0;
                    }
                }
            }
            out.add_term(Mono::new(e), &t);
        }
        Ok(out)
    }

    /// Substitutes `var ↦ Π x_i^{target_i}` (a Laurent monomial over the
    /// other variables).
    pub fn substitute_monomial(&self, var: usize, target: &[i32]) -> Result<MPoly> {
        if target.len() != self.ring.len() {
            return Err(Error::usage("substitution target has the wrong length"));
        }
        if target[var] != 0 {
            return Err(Error::usage(format!(
                "substitution target for `{}` mentions the variable itself",
                self.ring.name(var)
            )));
        }
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let k = m.exps[var];
            let mut e = m.exps.clone();
            e[var] = 0;
            for i in 0..e.len() {
                e[i] += k * target[i];
            }
            out.add_term(Mono::new(e), c);
        }
        Ok(out)
    }

    /// Substitutes an arbitrary polynomial for `var` (exponents of `var`
    /// must be nonnegative unless `value` is a monomial).
    pub fn substitute(&self, var: usize, value: &MPoly) -> Result<MPoly> {
        self.check_ring(value)?;
        let min = self.min_degree_in(var);
        let max = self.degree_in(var).max(0);
        let mut powers: BTreeMap<i32, MPoly> = BTreeMap::new();
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let k = m.exps[var];
            if !powers.contains_key(&k) {
                powers.insert(k, value.powi(k)?);
            }
            let mut e = m.exps.clone();
            e[var] = 0;
            let t = powers[&k].mul_monomial(&e, c);
            out = &out + &t;
        }
        let _ = (min, max);
        Ok(out)
    }

    /// Renames and re-embeds into another variable set by name.
    pub fn embed(&self, target: &Ring) -> Result<MPoly> {
        let n = self.ring.len();
        let mut map = Vec::with_capacity(n);
        for i in 0..n {
            map.push(target.index_of(self.ring.name(i)));
        }
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.exps.iter().enumerate() {
                if k != 0 {
                    let j = map[i].ok_or_else(|| {
                        Error::usage(format!("variable `{}` is absent from the target system", self.ring.name(i)))
                    })?;
                    e[j] += k;
                }
            }
            out.add_term(Mono::new(e), c);
        }
        Ok(out)
    }

    /// Re-embeds with variables renamed through `rename` (old name → new name).
    pub fn embed_renamed(&self, target: &Ring, rename: &dyn Fn(&str) -> String) -> Result<MPoly> {
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.exps.iter().enumerate() {
                if k != 0 {
                    let name = rename(self.ring.name(i));
                    let j = target
                        .index_of(&name)
                        .ok_or_else(|| Error::usage(format!("variable `{name}` is absent from the target system")))?;
                    e[j] += k;
                }
            }
            out.add_term(Mono::new(e), c);
        }
        Ok(out)
    }

    /// Applies every relation declared on the ring, in order.
    pub fn impose_relations(&self) -> Result<MPoly> {
        let mut out = self.clone();
        for rel in self.ring.relations() {
            let var = self.ring.index_of(&rel.var).unwrap();
            let mut target = vec![0; self.ring.len()];
            for (w, &e) in &rel.target {
                target[self.ring.index_of(w).unwrap()] = e;
            }
            out = out.substitute_monomial(var, &target)?;
        }
        Ok(out)
    }

    /// Exact quotient in the Laurent ring, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if self.check_ring(d).is_err() || d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero(&self.ring));
        }
        if d.is_monomial() {
            return Some(self * &d.monomial_inverse().ok()?);
        }
        let (ma, a) = self.split_monomial();
        let (md, b) = d.split_monomial();
        let q = poly_div_exact(&a, &b)?;
        let shift: Vec<i32> = ma.iter().zip(&md).map(|(x, y)| x - y).collect();
        Some(q.shift(&shift))
    }

    /// Laurent normal form: no monomial factor and leading coefficient 1.
    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (_, p) = self.split_monomial();
        let lc = p.leading_coeff();
        p.scale(&lc.recip())
    }

    /// Multiplies by the smallest monomial making every exponent
    /// nonnegative, then divides by the leading coefficient.
    pub fn poly_normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let shift: Vec<i32> = self.min_exponents().iter().map(|&e| (-e).max(0)).collect();
        self.shift(&shift).monic()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }
}

/// Exact division of polynomials (nonnegative exponents, `b ≠ 0`).
fn poly_div_exact(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (bm, bc) = b.terms.last_key_value().map(|(m, c)| (m.clone(), c.clone()))?;
    let bc_inv = bc.recip();
    let mut r = a.clone();
    let mut q = MPoly::zero(&a.ring);
    // Degree bound per variable: a quotient term can never exceed deg(a) - deg(b).
    let amax = a.max_exponents();
    let bmax = b.max_exponents();
    if amax.iter().zip(&bmax).any(|(x, y)| x < y) {
        return None;
    }
    while let Some((rm, rc)) = r.terms.last_key_value() {
        if !bm.divides(rm) {
            return None;
        }
        let tm = rm.div(&bm);
        if tm.exps.iter().zip(amax.iter().zip(&bmax)).any(|(t, (x, y))| *t > x - y) {
            return None;
        }
        let tc = rc * &bc_inv;
        for (m, c) in &b.terms {
            r.add_term(m.mul(&tm), &-(c * &tc));
        }
        q.terms.insert(tm, tc);
    }
    Some(q)
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| format!("{}^{}", self.ring.name(i), e))
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} * {}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl serde::Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator sugar; panics on mismatched variable sets (use `checked_*` to
// get a `Result`).
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("MPoly add")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("MPoly sub")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("MPoly mul")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&Rational::from(-1))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ParamSystem;

    fn ring() -> Ring {
        ParamSystem::from_names(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let x = MPoly::var(&r, "x").unwrap();
        let one = MPoly::one(&r);
        let p = &(&x + &one) * &(&x - &one);
        assert_eq!(p, &(&x * &x) - &one);
        assert_eq!(p.to_string(), "1 * x^2 + -1");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring();
        let x = MPoly::var(&r, "x").unwrap();
        let p = &x.pow(2) - &MPoly::one(&r);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn exact_division_laurent() {
        let r = ring();
        let x = MPoly::var(&r, "x").unwrap();
        let y = MPoly::var(&r, "y").unwrap();
        let a = &(&x + &y) * &(&x - &y);
        let q = a.div_exact(&(&x - &y)).unwrap();
        assert_eq!(q, &x + &y);
        let xinv = x.monomial_inverse().unwrap();
        let b = &a * &xinv;
        assert_eq!(b.div_exact(&(&x + &y)).unwrap(), &(&x - &y) * &xinv);
        assert!(a.div_exact(&(&x + &MPoly::one(&r))).is_none());
    }

    #[test]
    fn substitution_forced_by_relation() {
        let r = ring();
        let [x, y, z] = ["x", "y", "z"].map(|n| MPoly::var(&r, n).unwrap());
        let p = &(&(&x * &y) * &z) - &MPoly::one(&r);
        let q = p.substitute_monomial(2, &[-1, -1, 0]).unwrap();
        assert!(q.is_zero());
        assert_eq!(p.substitute_monomial(2, &[0, 0, 0]).unwrap(), &(&x * &y) - &MPoly::one(&r));
    }

    #[test]
    fn eval_rejects_zero_at_negative_exponent() {
        let r = ring();
        let x = MPoly::var(&r, "x").unwrap();
        let p = x.monomial_inverse().unwrap();
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), Rational::zero());
        assert!(matches!(p.eval(&pt), Err(Error::Domain(_))));
        pt.insert("x".to_string(), Rational::new(1, 2));
        assert_eq!(p.eval(&pt).unwrap(), Rational::from(2));
    }

    #[test]
    fn mismatched_rings_error() {
        let a = MPoly::var(&ring(), "x").unwrap();
        let b = MPoly::var(&ParamSystem::from_names(&["x"]).unwrap(), "x").unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
    }
}
