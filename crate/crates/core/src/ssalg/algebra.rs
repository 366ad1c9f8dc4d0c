use serde::{Deserialize, Serialize};

use crate::arith::{parse_field_elem, FieldElem, ParamSystem, Ring, UniPoly};
use crate::error::{Error, Result};

/// Associativity is checked on construction up to this dimension.
pub const ASSOCIATIVITY_CHECK_MAX_DIM: usize = 12;

/// Finite-dimensional commutative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDAlgebra {
    ring: Ring,
    basis: Vec<String>,
    /// `table[i][j]` = coordinates of `b_i · b_j`.
    table: Vec<Vec<Vec<FieldElem>>>,
    unity: Vec<FieldElem>,
}

impl FDAlgebra {
    pub fn new(
        ring: &Ring,
        basis: Vec<String>,
        table: Vec<Vec<Vec<FieldElem>>>,
        unity: Vec<FieldElem>,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::usage("algebra of dimension 0"));
        }
        let shape_ok = table.len() == n
            && unity.len() == n
            && table.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !shape_ok {
            return Err(Error::usage(format!("structure constants do not match the basis of size {n}")));
        }
        for c in table.iter().flatten().flatten().chain(&unity) {
            if !c.ring().same_vars(ring) {
                return Err(Error::usage("structure constant over a different parameter system"));
            }
        }
        let alg = FDAlgebra {
            ring: ring.clone(),
            basis,
            table,
            unity,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..i {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::Validation(format!(
                        "not commutative: {}·{} differs from {}·{}",
                        self.basis[i], self.basis[j], self.basis[j], self.basis[i]
                    )));
                }
            }
        }
        for i in 0..n {
            if self.mul(&self.unity, &self.basis_vector(i))? != self.basis_vector(i) {
                return Err(Error::Validation(format!("unity does not fix {}", self.basis[i])));
            }
        }
        if n <= ASSOCIATIVITY_CHECK_MAX_DIM {
            for i in 0..n {
                for j in i..n {
                    let ij = &self.table[i][j];
                    for k in 0..n {
                        let left = self.mul(ij, &self.basis_vector(k))?;
                        let right = self.mul(&self.basis_vector(i), &self.table[j][k])?;
                        if left != right {
                            return Err(Error::Validation(format!(
                                "not associative on ({}, {}, {})",
                                self.basis[i], self.basis[j], self.basis[k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `K[X]/(f)` on the basis `1, X, ..., X^{d-1}`.
    pub fn univariate_quotient(f: &UniPoly) -> Result<Self> {
        let d = match f.degree() {
            None | Some(0) => return Err(Error::usage("quotient by a zero or constant polynomial")),
            Some(d) => d,
        };
        let ring = f.ring().clone();
        let var = f.var();
        let basis: Vec<String> = (0..d)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            })
            .collect();
        let x = UniPoly::x(var, &ring);
        let mut powers = vec![UniPoly::constant(var, FieldElem::one(&ring))];
        for k in 1..(2 * d - 1) {
            let next = powers[k - 1].mul(&x)?.rem(f)?;
            powers.push(next);
        }
        let coords = |p: &UniPoly| (0..d).map(|k| p.coeff(k)).collect::<Vec<_>>();
        let table = (0..d)
            .map(|i| (0..d).map(|j| coords(&powers[i + j])).collect())
            .collect();
        let unity = coords(&powers[0]);
        FDAlgebra::new(&ring, basis, table, unity)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn table(&self) -> &[Vec<Vec<FieldElem>>] {
        &self.table
    }

    pub fn product(&self, i: usize, j: usize) -> &[FieldElem] {
        &self.table[i][j]
    }

    pub fn unity(&self) -> &[FieldElem] {
        &self.unity
    }

    pub fn zero_vector(&self) -> Vec<FieldElem> {
        vec![FieldElem::zero(&self.ring); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        let mut v = self.zero_vector();
        v[i] = FieldElem::one(&self.ring);
        v
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let n = self.dim();
        if a.len() != n || b.len() != n {
            return Err(Error::usage("vector length differs from the algebra dimension"));
        }
        let mut out = self.zero_vector();
        for i in (0..n).filter(|&i| !a[i].is_zero()) {
            for j in (0..n).filter(|&j| !b[j].is_zero()) {
                let c = a[i].checked_mul(&b[j])?;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].checked_add(&c.checked_mul(t)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &[FieldElem], n: u32) -> Result<Vec<FieldElem>> {
        let mut acc = self.unity.clone();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `a` (column `j` = `a · b_j`).
    pub fn mult_matrix(&self, a: &[FieldElem]) -> Result<Vec<Vec<FieldElem>>> {
        let n = self.dim();
        let cols = (0..n)
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
    }

    /// Re-expresses every structure constant through `f`, over `ring`.
    pub fn map_constants(&self, ring: &Ring, f: impl Fn(&FieldElem) -> Result<FieldElem>) -> Result<FDAlgebra> {
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(&f).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<_>>>>>()?;
        let unity = self.unity.iter().map(&f).collect::<Result<Vec<_>>>()?;
        FDAlgebra::new(ring, self.basis.clone(), table, unity)
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            params: self.ring.names().map(str::to_string).collect(),
            basis: self.basis.clone(),
            unity: self.unity.iter().map(|c| c.to_string()).collect(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|c| c.to_string()).collect()).collect())
                .collect(),
            factors: Vec::new(),
        }
    }

    pub fn from_json(doc: &AlgebraJson) -> Result<Self> {
        let names: Vec<&str> = doc.params.iter().map(String::as_str).collect();
        let ring = ParamSystem::from_names(&names)?;
        let parse = |s: &String| parse_field_elem(s, &ring);
        let unity = doc.unity.iter().map(parse).collect::<Result<Vec<_>>>()?;
        let table = doc
            .table
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(parse).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<_>>>>>()?;
        FDAlgebra::new(&ring, doc.basis.clone(), table, unity)
    }
}

/// On-disk form of an [`FDAlgebra`]; entries in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub params: Vec<String>,
    pub basis: Vec<String>,
    pub unity: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
    /// Parameter headers of the factors, for tensor products.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorHeader>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorHeader {
    pub params: Vec<String>,
    pub renamed: Vec<String>,
    pub basis: Vec<String>,
}

impl Serialize for FDAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_field_elem, ParamSystem};

    fn upoly(text: &str, ring: &Ring) -> UniPoly {
        let big = ring.with_leading("X").unwrap();
        UniPoly::from_mpoly(parse_field_elem(text, &big).unwrap().num(), "X").unwrap()
    }

    #[test]
    fn quotient_by_x_squared_minus_one() {
        let ring = ParamSystem::empty();
        let alg = FDAlgebra::univariate_quotient(&upoly("X^2 - 1", &ring)).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.basis(), ["1", "X"]);
        assert!(alg.product(1, 1)[0].is_one() && alg.product(1, 1)[1].is_zero());
    }

    #[test]
    fn nilpotent_model() {
        let ring = ParamSystem::empty();
        let alg = FDAlgebra::univariate_quotient(&upoly("X^2", &ring)).unwrap();
        assert!(alg.product(1, 1).iter().all(|c| c.is_zero()));
        assert!(FDAlgebra::univariate_quotient(&upoly("3", &ring)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let ring = ParamSystem::from_names(&["x"]).unwrap();
        let alg = FDAlgebra::univariate_quotient(&upoly("X^3 - x*X + 1", &ring)).unwrap();
        let doc = alg.to_json();
        let text = serde_json::to_string(&doc).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(FDAlgebra::from_json(&back).unwrap(), alg);
    }

    #[test]
    fn rejects_noncommutative_table() {
        let ring = ParamSystem::empty();
        let one = FieldElem::one(&ring);
        let zero = FieldElem::zero(&ring);
        let table = vec![
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), zero.clone()]],
        ];
        let err = FDAlgebra::new(&ring, vec!["1".into(), "e".into()], table, vec![one, zero]);
        assert!(matches!(err, Err(Error::Validation(_))));
    }
}
