//! Rational functions in the parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::prs::gcd;
use super::{MPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Element of the fraction field `Q(x_1, ..., x_n)`.
///
/// Canonical form: the denominator is a polynomial with no monomial factor
/// and leading coefficient 1, coprime to the numerator. Monomial
/// denominators are absorbed into the numerator as negative exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    num: MPoly,
    den: MPoly,
}

impl FieldElem {
    pub fn zero(ring: &Ring) -> Self {
        FieldElem {
            num: MPoly::zero(ring),
            den: MPoly::one(ring),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        FieldElem::from_poly(MPoly::one(ring))
    }

    pub fn from_rational(ring: &Ring, c: Rational) -> Self {
        FieldElem::from_poly(MPoly::constant(ring, c))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::one(p.ring());
        FieldElem { num: p, den }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        Ok(FieldElem::from_poly(MPoly::var(ring, name)?))
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        num.check_ring(&den)?;
        if den.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(FieldElem::normalize(num, den))
    }

    fn normalize(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return FieldElem::zero(num.ring());
        }
        let (dm, d) = den.split_monomial();
        let inv: Vec<i32> = dm.iter().map(|e| -e).collect();
        let mut num = num.shift(&inv);
        let mut den = d;
        if !den.is_constant() {
            let g = gcd(&num, &den);
            if !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
                let (dm, d) = den.split_monomial();
                let inv: Vec<i32> = dm.iter().map(|e| -e).collect();
                num = num.shift(&inv);
                den = d;
            }
        }
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let r = lc.recip();
            num = num.scale(&r);
            den = den.scale(&r);
        }
        FieldElem { num, den }
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// A Laurent polynomial (denominator 1).
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_poly() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.num.check_ring(&other.num)?;
        if self.den == other.den {
            return Ok(FieldElem::normalize(&self.num + &other.num, self.den.clone()));
        }
        if self.den.is_one() {
            return Ok(FieldElem::normalize(&(&self.num * &other.den) + &other.num, other.den.clone()));
        }
        if other.den.is_one() {
            return Ok(FieldElem::normalize(&self.num + &(&other.num * &self.den), self.den.clone()));
        }
        let g = gcd(&self.den, &other.den);
        let a = other.den.div_exact(&g).unwrap();
        let b = self.den.div_exact(&g).unwrap();
        let num = &(&self.num * &a) + &(&other.num * &b);
        Ok(FieldElem::normalize(num, &self.den * &a))
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.num.check_ring(&other.num)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FieldElem::zero(self.ring()));
        }
        if self.is_poly() && other.is_poly() {
            return Ok(FieldElem::from_poly(&self.num * &other.num));
        }
        // Cross-cancel before multiplying to keep sizes down.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Ok(FieldElem::normalize(&n1 * &n2, &d1 * &d2))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(FieldElem::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> FieldElem {
        if c.is_zero() {
            return FieldElem::zero(self.ring());
        }
        FieldElem {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i32) -> Result<FieldElem> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(FieldElem {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::domain(format!("denominator {} vanishes at the given point", self.den)));
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn specialize_partial(&self, point: &BTreeMap<String, Rational>) -> Result<FieldElem> {
        let d = self.den.specialize_partial(point)?;
        if d.is_zero() {
            return Err(Error::domain(format!("denominator {} vanishes at the given point", self.den)));
        }
        FieldElem::new(self.num.specialize_partial(point)?, d)
    }

    pub fn substitute_monomial(&self, var: usize, target: &[i32]) -> Result<FieldElem> {
        let d = self.den.substitute_monomial(var, target)?;
        if d.is_zero() {
            return Err(Error::domain("denominator vanishes under the substitution"));
        }
        FieldElem::new(self.num.substitute_monomial(var, target)?, d)
    }

    pub fn impose_relations(&self) -> Result<FieldElem> {
        let d = self.den.impose_relations()?;
        if d.is_zero() {
            return Err(Error::domain("denominator vanishes under the declared relations"));
        }
        FieldElem::new(self.num.impose_relations()?, d)
    }

    pub fn embed(&self, target: &Ring) -> Result<FieldElem> {
        FieldElem::new(self.num.embed(target)?, self.den.embed(target)?)
    }

    pub fn embed_renamed(&self, target: &Ring, rename: &dyn Fn(&str) -> String) -> Result<FieldElem> {
        FieldElem::new(self.num.embed_renamed(target, rename)?, self.den.embed_renamed(target, rename)?)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self})")
    }
}

impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<MPoly> for FieldElem {
    fn from(p: MPoly) -> Self {
        FieldElem::from_poly(p)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.checked_add(rhs).expect("FieldElem add")
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.checked_sub(rhs).expect("FieldElem sub")
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.checked_mul(rhs).expect("FieldElem mul")
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self.checked_div(rhs).expect("FieldElem div")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
