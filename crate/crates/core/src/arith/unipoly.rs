//! Univariate polynomials over the fraction field of a parameter system.

use std::collections::BTreeMap;
use std::fmt;

use super::prs;
use super::{FieldElem, MPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Polynomial in the main variable `var` with [`FieldElem`] coefficients
/// over `ring` (index = power, trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    ring: Ring,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(var: &str, ring: &Ring, coeffs: Vec<FieldElem>) -> Result<Self> {
        if ring.index_of(var).is_some() {
            return Err(Error::usage(format!("main variable `{var}` is also a parameter")));
        }
        for c in &coeffs {
            if !c.ring().same_vars(ring) {
                return Err(Error::usage("coefficient over a different parameter system"));
            }
        }
        let mut p = UniPoly {
            var: var.to_string(),
            ring: ring.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(var: &str, ring: &Ring) -> Self {
        UniPoly {
            var: var.to_string(),
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: &str, c: FieldElem) -> Self {
        let ring = c.ring().clone();
        let mut p = UniPoly {
            var: var.to_string(),
            ring,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    /// The main variable itself.
    pub fn x(var: &str, ring: &Ring) -> Self {
        UniPoly {
            var: var.to_string(),
            ring: ring.clone(),
            coeffs: vec![FieldElem::zero(ring), FieldElem::one(ring)],
        }
    }

    /// Reads `p` as a polynomial in `var` (one of its variables); the
    /// coefficients live over the remaining variables.
    pub fn from_mpoly(p: &MPoly, var: &str) -> Result<Self> {
        let i = p
            .ring()
            .index_of(var)
            .ok_or_else(|| Error::usage(format!("`{var}` is not a variable of the polynomial")))?;
        if p.min_degree_in(i) < 0 {
            return Err(Error::domain(format!("negative power of the main variable `{var}`")));
        }
        let ring = p.ring().without(var);
        let coeffs = p
            .coeffs_in(i)
            .into_iter()
            .map(|c| c.embed(&ring).map(FieldElem::from_poly))
            .collect::<Result<Vec<_>>>()?;
        UniPoly::new(var, &ring, coeffs)
    }

    /// Clears denominators: returns `(P, L)` with `self = P / L`, where `P`
    /// lives over the parameter ring with `var` prepended and `L` is a
    /// polynomial in the parameters alone.
    pub fn to_mpoly_cleared(&self) -> (MPoly, MPoly) {
        let big = self.big_ring();
        let mut l = MPoly::one(&self.ring);
        for c in &self.coeffs {
            if !c.den().is_one() {
                l = prs::lcm(&l, c.den());
            }
        }
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let scaled = (&FieldElem::from_poly(l.clone()) * c).num().clone();
            terms.push(scaled.embed(&big).expect("coefficient embeds"));
        }
        let p = MPoly::from_coeffs_in(&big, 0, &terms);
        (p, l)
    }

    fn big_ring(&self) -> Ring {
        self.ring.with_leading(&self.var).expect("main variable is fresh")
    }

    fn from_big(&self, p: &MPoly) -> UniPoly {
        let coeffs = p
            .coeffs_in(0)
            .into_iter()
            .map(|c| FieldElem::from_poly(c.embed(&self.ring).expect("coefficient embeds")))
            .collect();
        let mut out = UniPoly {
            var: self.var.clone(),
            ring: self.ring.clone(),
            coeffs,
        };
        out.trim();
        out
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElem::zero(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| FieldElem::zero(&self.ring))
    }

    fn check(&self, other: &UniPoly) -> Result<()> {
        if self.var != other.var || !self.ring.same_vars(&other.ring) {
            return Err(Error::usage(format!(
                "polynomials in `{}` and `{}` over different systems",
                self.var, other.var
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        UniPoly::new(&self.var, &self.ring, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            var: self.var.clone(),
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(&self.var, &self.ring));
        }
        let mut coeffs = vec![FieldElem::zero(&self.ring); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.var, &self.ring, coeffs)
    }

    pub fn scale(&self, c: &FieldElem) -> UniPoly {
        let mut p = UniPoly {
            var: self.var.clone(),
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        let mut acc = UniPoly::constant(&self.var, FieldElem::one(&self.ring));
        for _ in 0..n {
            acc = acc.mul(self).expect("same system");
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from(i as i64)))
            .collect();
        let mut p = UniPoly {
            var: self.var.clone(),
            ring: self.ring.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// Division with remainder over the fraction field.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::usage("polynomial division by zero"));
        }
        let dd = d.degree().unwrap();
        let inv = d.lc().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElem::zero(&self.ring); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let t = r.last().unwrap() * &inv;
            if !t.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    r[i + k] = &r[i + k] - &(&t * c);
                }
            }
            q[k] = t;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((
            UniPoly::new(&self.var, &self.ring, q)?,
            UniPoly::new(&self.var, &self.ring, r)?,
        ))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(d)?.1)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().expect("nonzero leading coefficient"))
    }

    /// Monic gcd over the fraction field.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::usage("gcd of two zero polynomials"));
        }
        let (a, _) = self.to_mpoly_cleared();
        let (b, _) = other.to_mpoly_cleared();
        let g = prs::gcd(&a, &b);
        Ok(self.from_big(&g).monic())
    }

    /// Resultant in the main variable with cofactors `u·self + v·other = res`.
    pub fn resultant_with_cofactors(&self, other: &UniPoly) -> Result<(FieldElem, UniPoly, UniPoly)> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::usage("resultant with the zero polynomial"));
        }
        let (a, la) = self.to_mpoly_cleared();
        let (b, lb) = other.to_mpoly_cleared();
        let (r, u, v) = prs::resultant_with_cofactors(&a, &b, 0);
        let m = self.degree().unwrap() as u32;
        let n = other.degree().unwrap() as u32;
        // Res(A/la, B/lb) = Res(A, B) / (la^n lb^m).
        let scale = FieldElem::new(MPoly::one(&self.ring), &la.pow(n) * &lb.pow(m))?;
        let res = &FieldElem::from_poly(r.embed(&self.ring)?) * &scale;
        let ua = self.from_big(&u).scale(&(&scale * &FieldElem::from_poly(la)));
        let vb = self.from_big(&v).scale(&(&scale * &FieldElem::from_poly(lb)));
        Ok((res, ua, vb))
    }

    pub fn resultant(&self, other: &UniPoly) -> Result<FieldElem> {
        Ok(self.resultant_with_cofactors(other)?.0)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).map(|g| g.degree() == Some(0)).unwrap_or(false),
        }
    }

    /// Squarefree decomposition `self = unit · Π a_i^{m_i}` with monic,
    /// squarefree, pairwise coprime `a_i` and increasing multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<(FieldElem, Vec<(UniPoly, usize)>)> {
        if self.is_zero() {
            return Err(Error::usage("squarefree decomposition of zero"));
        }
        let (a, _) = self.to_mpoly_cleared();
        let parts = prs::squarefree_decomposition(&a, 0);
        let mut out = Vec::new();
        let mut prod = UniPoly::constant(&self.var, FieldElem::one(&self.ring));
        for (i, p) in parts.iter().enumerate() {
            let u = self.from_big(p).monic();
            if u.degree().unwrap_or(0) == 0 {
                continue;
            }
            prod = prod.mul(&u.pow(i as u32 + 1))?;
            out.push((u, i + 1));
        }
        let unit = &self.lc() / &prod.lc();
        Ok((unit, out))
    }

    /// Evaluates the main variable at a field element.
    pub fn eval(&self, at: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero(&self.ring);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Specializes the parameters, leaving a polynomial with rational coefficients.
    pub fn specialize(&self, point: &BTreeMap<String, Rational>) -> Result<UniPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Ok(FieldElem::from_rational(&self.ring, c.eval(point)?)))
            .collect::<Result<Vec<_>>>()?;
        UniPoly::new(&self.var, &self.ring, coeffs)
    }

    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> Result<FieldElem>) -> Result<UniPoly> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        let ring = coeffs.first().map(|c| c.ring().clone()).unwrap_or_else(|| self.ring.clone());
        UniPoly::new(&self.var, &ring, coeffs)
    }

    pub fn substitute_monomial(&self, var: &str, target: &[i32]) -> Result<UniPoly> {
        let i = self
            .ring
            .index_of(var)
            .ok_or_else(|| Error::usage(format!("unknown parameter `{var}`")))?;
        self.map_coeffs(|c| c.substitute_monomial(i, target))
    }

    /// The polynomial as a rational function over the parameters plus `var`.
    pub fn to_field_elem(&self) -> FieldElem {
        let (p, l) = self.to_mpoly_cleared();
        let big = p.ring().clone();
        FieldElem::new(p, l.embed(&big).expect("embeds")).expect("nonzero denominator")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_field_elem())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({self})", self.var)
    }
}

impl serde::Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
