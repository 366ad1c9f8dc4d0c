use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{FieldElem, MPoly, Rational, UniPoly};

pub type Point = BTreeMap<String, Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Semisimple,
    NotSemisimple,
    ContainsFieldSummand,
    RadicalIdeal,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Semisimple => "Semisimple",
            Verdict::NotSemisimple => "NotSemisimple",
            Verdict::ContainsFieldSummand => "ContainsFieldSummand",
            Verdict::RadicalIdeal => "RadicalIdeal",
            Verdict::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

/// Membership `f = c_1 g_1 + c_2 g_2` of a one-variable polynomial in a
/// two-generator ideal, with a squarefreeness witness for `f`.
#[derive(Clone, Debug, Serialize)]
pub struct Member {
    pub var: String,
    pub poly: MPoly,
    pub cofactors: [MPoly; 2],
    pub squarefree: Box<Witness>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `u·f + v·f' = resultant`, nonzero at `point`.
    Resultant {
        poly: UniPoly,
        resultant: FieldElem,
        cofactors: [UniPoly; 2],
        point: Point,
        value: Rational,
    },
    /// The resultant could not be shown nonzero.
    Unresolved { poly: UniPoly, resultant: FieldElem },
    /// `element^power ≡ 0 mod modulus`, `element^(power-1) ≢ 0`.
    Nilpotent {
        modulus: UniPoly,
        element: UniPoly,
        power: u32,
    },
    /// Nilpotent element of an algebra given by coordinates.
    NilpotentVector { coordinates: Vec<FieldElem>, power: u32 },
    /// `modulus = summand · cofactor` with Bézout pair and CRT idempotents;
    /// `summand` is squarefree.
    FieldSummand {
        modulus: UniPoly,
        summand: UniPoly,
        cofactor: UniPoly,
        bezout: [UniPoly; 2],
        idempotents: [UniPoly; 2],
        squarefree: Box<Witness>,
    },
    /// `idempotent·A` spanned by `basis` (of size `Tr L_e`) with a
    /// nondegenerate trace form: a semisimple direct summand.
    IdempotentSummand {
        idempotent: Vec<FieldElem>,
        basis: Vec<Vec<FieldElem>>,
        det: FieldElem,
        point: Point,
        value: Rational,
    },
    /// Nonzero determinant of the trace form, re-checked at `point`.
    TraceForm { det: FieldElem, point: Point, value: Rational },
    /// Seidenberg data: ideal generators and one member per variable.
    Radical { generators: [MPoly; 2], members: Vec<Member> },
    Composite { parts: Vec<Certificate> },
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(verdict: Verdict, witness: Option<Witness>) -> Self {
        Certificate {
            verdict,
            witness,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The top verdict followed by those of composite parts, without
    /// repetitions.
    pub fn verdicts(&self) -> Vec<Verdict> {
        let mut out = vec![self.verdict];
        if let Some(Witness::Composite { parts }) = &self.witness {
            for v in parts.iter().flat_map(Certificate::verdicts) {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn part(&self, verdict: Verdict) -> Option<&Certificate> {
        if self.verdict == verdict && !matches!(self.witness, Some(Witness::Composite { .. })) {
            return Some(self);
        }
        match &self.witness {
            Some(Witness::Composite { parts }) => parts.iter().find_map(|p| p.part(verdict)),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}
