use std::collections::BTreeSet;

use super::certificate::Point;
use crate::arith::{FieldElem, Rational, Ring};

/// Points tried after the all-ones point.
pub const EXTRA_POINTS: usize = 8;

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// The `k`-th point of the fixed schedule on `vars`: all ones for `k = 0`,
/// otherwise `v_i = 1 + 1/p_{k+i-1}`.
pub fn schedule_point(vars: &[String], k: usize) -> Point {
    vars.iter()
        .enumerate()
        .map(|(i, v)| {
            let val = if k == 0 {
                Rational::one()
            } else {
                let p = PRIMES[(k + i - 1) % PRIMES.len()];
                Rational::one() + Rational::new(1, p)
            };
            (v.clone(), val)
        })
        .collect()
}

/// Variables occurring in `h` after imposing the declared relations.
pub fn occurring(h: &FieldElem) -> Vec<String> {
    let ring: &Ring = h.ring();
    let mut set = BTreeSet::new();
    for p in [h.num(), h.den()] {
        for i in 0..ring.len() {
            if p.involves(i) {
                set.insert(i);
            }
        }
    }
    set.into_iter().map(|i| ring.name(i).to_string()).collect()
}

/// First schedule point where `h` is defined and nonzero.
pub fn nonvanishing_test(h: &FieldElem) -> Option<(Point, Rational)> {
    let h = h.impose_relations().ok()?;
    if h.is_zero() {
        return None;
    }
    let vars = occurring(&h);
    for k in 0..=EXTRA_POINTS {
        let point = schedule_point(&vars, k);
        if let Ok(v) = h.eval(&point) {
            if !v.is_zero() {
                return Some((point, v));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_field_elem, ParamSystem};

    #[test]
    fn all_ones_first() {
        let ring = ParamSystem::from_names(&["x"]).unwrap();
        let h = parse_field_elem("-4*x", &ring).unwrap();
        let (p, v) = nonvanishing_test(&h).unwrap();
        assert_eq!(p["x"], Rational::one());
        assert_eq!(v, Rational::from(-4));
    }

    #[test]
    fn skips_vanishing_points() {
        let ring = ParamSystem::from_names(&["y", "z"]).unwrap();
        let h = parse_field_elem("(y - z)^2", &ring).unwrap();
        let (p, v) = nonvanishing_test(&h).unwrap();
        assert_eq!(p["y"], "3/2".parse().unwrap());
        assert_eq!(p["z"], "4/3".parse().unwrap());
        assert_eq!(v, "1/36".parse().unwrap());
        assert!(nonvanishing_test(&FieldElem::zero(&ring)).is_none());
    }
}
