//! Tensor products of algebras over merged parameter systems.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{FieldElem, ParamSystem, Ring};
use crate::error::{Error, Result};
use crate::ssalg::{
    idempotent_summand_certificate, summand_idempotent, trace_form_semisimple, AlgebraJson, Certificate,
    FDAlgebra, FactorHeader, Verdict, Witness,
};

/// Union of two parameter systems; right-hand names that collide are
/// suffixed `_2`, `_3`, ...
#[derive(Clone, Debug, Serialize)]
pub struct MergedParamSystem {
    #[serde(skip)]
    pub ring: Ring,
    pub left: Vec<String>,
    /// Original right-hand name → merged name.
    pub right: BTreeMap<String, String>,
}

const MAX_SUFFIX: usize = 64;

pub fn merge(left: &Ring, right: &Ring) -> Result<MergedParamSystem> {
    let mut names: Vec<String> = left.names().map(str::to_string).collect();
    let mut renamed = BTreeMap::new();
    for r in right.names() {
        let mut candidate = r.to_string();
        let mut k = 2;
        while names.contains(&candidate) || right.index_of(&candidate).is_some_and(|_| candidate != r) {
            if k > MAX_SUFFIX {
                return Err(Error::usage(format!("cannot find a fresh name for `{r}`")));
            }
            candidate = format!("{r}_{k}");
            k += 1;
        }
        names.push(candidate.clone());
        renamed.insert(r.to_string(), candidate);
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(MergedParamSystem {
        ring: ParamSystem::from_names(&refs)?,
        left: left.names().map(str::to_string).collect(),
        right: renamed,
    })
}

#[derive(Clone, Debug)]
pub struct Tensor {
    pub algebra: FDAlgebra,
    pub merged: MergedParamSystem,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl Tensor {
    pub fn index(&self, i: usize, k: usize) -> usize {
        i * self.right_dim + k
    }

    fn embed_left(&self, c: &FieldElem) -> Result<FieldElem> {
        c.embed(&self.merged.ring)
    }

    fn embed_right(&self, c: &FieldElem) -> Result<FieldElem> {
        let map = self.merged.right.clone();
        c.embed_renamed(&self.merged.ring, &move |n: &str| map.get(n).cloned().unwrap_or_else(|| n.to_string()))
    }

    /// Coordinates of `a ⊗ b`.
    pub fn pure(&self, a: &[FieldElem], b: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            let x = self.embed_left(x)?;
            for y in b {
                out.push(x.checked_mul(&self.embed_right(y)?)?);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, left: &FDAlgebra, right: &FDAlgebra) -> AlgebraJson {
        let mut doc = self.algebra.to_json();
        doc.factors = vec![
            FactorHeader {
                params: self.merged.left.clone(),
                renamed: self.merged.left.clone(),
                basis: left.basis().to_vec(),
            },
            FactorHeader {
                params: right.ring().names().map(str::to_string).collect(),
                renamed: right.ring().names().map(|n| self.merged.right[n].clone()).collect(),
                basis: right.basis().to_vec(),
            },
        ];
        doc
    }
}

pub fn tensor(a: &FDAlgebra, b: &FDAlgebra) -> Result<Tensor> {
    let merged = merge(a.ring(), b.ring())?;
    let (m, n) = (a.dim(), b.dim());
    let mut t = Tensor {
        algebra: a.clone(),
        merged,
        left_dim: m,
        right_dim: n,
    };
    let basis = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let mut table = Vec::with_capacity(m * n);
    for i in 0..m {
        for k in 0..n {
            let mut row = Vec::with_capacity(m * n);
            for j in 0..m {
                for l in 0..n {
                    row.push(t.pure(a.product(i, j), b.product(k, l))?);
                }
            }
            table.push(row);
        }
    }
    let unity = t.pure(a.unity(), b.unity())?;
    t.algebra = FDAlgebra::new(&t.merged.ring, basis, table, unity)?;
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorSummary {
    pub dim: usize,
    pub semisimple: Certificate,
    pub summand: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct KunnethReport {
    pub factors: [FactorSummary; 2],
    pub tensor_dim: usize,
    pub params: Vec<String>,
    pub certificate: Certificate,
    pub expected: Vec<Verdict>,
    /// `x ⊗ 1` (or `1 ⊗ x`) is nilpotent for each factor nilpotent `x`.
    pub nilpotents_transported: bool,
    pub consistent: bool,
}

fn summarize(alg: &FDAlgebra) -> Result<(FactorSummary, Option<Vec<FieldElem>>)> {
    let semisimple = trace_form_semisimple(alg)?;
    let e = summand_idempotent(alg)?;
    let summand = match &e {
        Some(e) => idempotent_summand_certificate(alg, e)?,
        None => Certificate::new(Verdict::Inconclusive, None).with_note("no summand idempotent found"),
    };
    let e = e.filter(|_| summand.verdict == Verdict::ContainsFieldSummand);
    Ok((
        FactorSummary {
            dim: alg.dim(),
            semisimple,
            summand,
        },
        e,
    ))
}

fn nilpotent_of(c: &Certificate) -> Option<(&[FieldElem], u32)> {
    match &c.witness {
        Some(Witness::NilpotentVector { coordinates, power }) if c.verdict == Verdict::NotSemisimple => {
            Some((coordinates, *power))
        }
        _ => None,
    }
}

pub fn kunneth_check(a: &FDAlgebra, b: &FDAlgebra) -> Result<KunnethReport> {
    let t = tensor(a, b)?;
    let (sa, ea) = summarize(a)?;
    let (sb, eb) = summarize(b)?;
    let alg = &t.algebra;
    let tensor_cert = trace_form_semisimple(alg)?;

    let mut transported = true;
    if let Some((x, p)) = nilpotent_of(&sa.semisimple) {
        let v = t.pure(x, b.unity())?;
        transported &= alg.pow(&v, p)?.iter().all(FieldElem::is_zero);
    }
    if let Some((x, p)) = nilpotent_of(&sb.semisimple) {
        let v = t.pure(a.unity(), x)?;
        transported &= alg.pow(&v, p)?.iter().all(FieldElem::is_zero);
    }

    let (va, vb) = (sa.semisimple.verdict, sb.semisimple.verdict);
    let mut expected = Vec::new();
    if va == Verdict::Semisimple && vb == Verdict::Semisimple {
        expected.push(Verdict::Semisimple);
    }
    if va == Verdict::NotSemisimple || vb == Verdict::NotSemisimple {
        expected.push(Verdict::NotSemisimple);
    }
    let mut parts = vec![tensor_cert];
    if let (Some(ea), Some(eb)) = (&ea, &eb) {
        if !expected.contains(&Verdict::Semisimple) {
            expected.push(Verdict::ContainsFieldSummand);
            let e = t.pure(ea, eb)?;
            parts.push(idempotent_summand_certificate(alg, &e)?);
        }
    }
    let certificate = if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        Certificate::new(parts[0].verdict, Some(Witness::Composite { parts }))
    };
    let got = certificate.verdicts();
    let consistent = transported && expected.iter().all(|v| got.contains(v));
    Ok(KunnethReport {
        factors: [sa, sb],
        tensor_dim: alg.dim(),
        params: alg.ring().names().map(str::to_string).collect(),
        certificate,
        expected,
        nilpotents_transported: transported,
        consistent,
    })
}
