use std::collections::BTreeMap;

use super::algebra::FDAlgebra;
use crate::arith::{parse_field_elem, FieldElem, ParamSystem};
use crate::error::{Error, Result};

/// True iff substituting `var ↦ Π w^e` (over the union of both parameter
/// systems) maps every structure constant and the unity of `source` to
/// those of `target`.
pub fn check_substitution_homomorphism(
    source: &FDAlgebra,
    var: &str,
    monomial: &BTreeMap<String, i32>,
    target: &FDAlgebra,
) -> Result<bool> {
    if source.dim() != target.dim() {
        return Err(Error::usage(format!(
            "tables of dimension {} and {} cannot correspond",
            source.dim(),
            target.dim()
        )));
    }
    let union = source.ring().union(target.ring());
    let v = union
        .index_of(var)
        .ok_or_else(|| Error::usage(format!("`{var}` is not a parameter")))?;
    let mut exps = vec![0; union.len()];
    for (w, &e) in monomial {
        let i = union
            .index_of(w)
            .ok_or_else(|| Error::usage(format!("`{w}` is not a parameter")))?;
        exps[i] = e;
    }
    let identity = monomial.len() == 1 && monomial.get(var) == Some(&1);
    let map = |c: &FieldElem| -> Result<FieldElem> {
        let c = c.embed(&union)?;
        if identity {
            Ok(c)
        } else {
            c.substitute_monomial(v, &exps)
        }
    };
    let same = |a: &FieldElem, b: &FieldElem| -> Result<bool> { Ok(map(a)? == b.embed(&union)?) };
    for (a, b) in source.unity().iter().zip(target.unity()) {
        if !same(a, b)? {
            return Ok(false);
        }
    }
    let n = source.dim();
    for i in 0..n {
        for j in 0..n {
            for (a, b) in source.product(i, j).iter().zip(target.product(i, j)) {
                if !same(a, b)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Two-element toy tables on `{1, p}` with `p·p = u^-2` over `{u}` and
/// `p·p = q^-2 sk^-2` over `{q, sk}` (`sk` standing for `s^κ`).
pub fn toy_tables() -> Result<(FDAlgebra, FDAlgebra)> {
    let build = |names: &[&str], pp: &str| -> Result<FDAlgebra> {
        let ring = ParamSystem::from_names(names)?;
        let e = |t: &str| parse_field_elem(t, &ring);
        let (one, zero) = (e("1")?, e("0")?);
        let table = vec![
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
            vec![vec![zero.clone(), one.clone()], vec![e(pp)?, zero.clone()]],
        ];
        FDAlgebra::new(&ring, vec!["1".into(), "p".into()], table, vec![one, zero])
    };
    Ok((build(&["u"], "u^-2")?, build(&["q", "sk"], "q^-2*sk^-2")?))
}

pub fn toy_substitution() -> BTreeMap<String, i32> {
    BTreeMap::from([("q".to_string(), 1), ("sk".to_string(), 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_substitution_is_multiplicative() {
        let (src, dst) = toy_tables().unwrap();
        assert!(check_substitution_homomorphism(&src, "u", &toy_substitution(), &dst).unwrap());
        let ring = dst.ring().clone();
        let corrupted = dst
            .map_constants(&ring, |c| {
                if c.num().len() == 1 && !c.is_one() && !c.is_zero() {
                    parse_field_elem("q^-2*sk^-1", &ring)
                } else {
                    Ok(c.clone())
                }
            })
            .unwrap();
        assert!(!check_substitution_homomorphism(&src, "u", &toy_substitution(), &corrupted).unwrap());
    }

    #[test]
    fn identity_substitution() {
        let (src, dst) = toy_tables().unwrap();
        let id = BTreeMap::from([("u".to_string(), 1)]);
        assert!(check_substitution_homomorphism(&src, "u", &id, &src).unwrap());
        let id = BTreeMap::from([("q".to_string(), 1)]);
        assert!(check_substitution_homomorphism(&dst, "q", &id, &dst).unwrap());
    }
}
