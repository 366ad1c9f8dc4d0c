use proptest::prelude::*;

use toric_qh::arith::{FieldElem, MPoly, ParamSystem, Rational, Ring, UniPoly};
use toric_qh::cli::Check;
use toric_qh::products::tensor;
use toric_qh::ssalg::FDAlgebra;

fn ring() -> Ring {
    ParamSystem::from_names(&["x", "y"]).unwrap()
}

/// Laurent polynomial in x, y with exponents in [-2, 3].
fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((-2i32..=3, -2i32..=3), -5i64..=5), 0..5).prop_map(|terms| {
        MPoly::from_terms(&ring(), terms.into_iter().map(|((a, b), c)| (vec![a, b], Rational::from(c))))
    })
}

fn upoly(var: &'static str) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 2..6).prop_map(move |mut cs| {
        if *cs.last().unwrap() == 0 {
            *cs.last_mut().unwrap() = 1;
        }
        let r = ParamSystem::empty();
        let coeffs = cs.into_iter().map(|c| FieldElem::from_rational(&r, Rational::from(c))).collect();
        UniPoly::new(var, &r, coeffs).unwrap()
    })
}

fn check() -> impl Strategy<Value = Check> {
    prop::sample::select(vec![
        Check::Validate,
        Check::Classify,
        Check::Presentation,
        Check::Reduce,
        Check::Semisimple,
        Check::FieldSummand,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn gcd_and_resultant(f in upoly("X"), g in upoly("X"), h in upoly("X")) {
        let (fh, gh) = (f.mul(&h).unwrap(), g.mul(&h).unwrap());
        let d = fh.gcd(&gh).unwrap();
        prop_assert!(fh.rem(&d).unwrap().is_zero());
        prop_assert!(gh.rem(&d).unwrap().is_zero());
        prop_assert!(h.rem(&d).unwrap().is_zero() || d.degree() >= h.degree());
        prop_assert!(fh.resultant(&gh).unwrap().is_zero());
        let (r, u, v) = f.resultant_with_cofactors(&g).unwrap();
        let combo = u.mul(&f).unwrap().add(&v.mul(&g).unwrap()).unwrap();
        prop_assert_eq!(combo, UniPoly::constant("X", r));
    }

    #[test]
    fn tensor_dimension_and_unity(f in upoly("X"), g in upoly("Y")) {
        let a = FDAlgebra::univariate_quotient(&f).unwrap();
        let b = FDAlgebra::univariate_quotient(&g).unwrap();
        let t = tensor(&a, &b).unwrap();
        prop_assert_eq!(t.algebra.dim(), a.dim() * b.dim());
        let one = t.algebra.unity().to_vec();
        for i in 0..t.algebra.dim() {
            let e = t.algebra.basis_vector(i);
            prop_assert_eq!(t.algebra.mul(&one, &e).unwrap(), e.clone());
        }
        let i = t.index(a.dim() - 1, b.dim() - 1);
        let x = t.pure(&a.basis_vector(a.dim() - 1), &b.basis_vector(b.dim() - 1)).unwrap();
        prop_assert_eq!(x, t.algebra.basis_vector(i));
    }

    #[test]
    fn check_closure_is_dependency_closed(picked in prop::collection::vec(check(), 1..4)) {
        let all = Check::closure(&picked);
        prop_assert!(picked.iter().all(|c| all.contains(c)));
        prop_assert!(all.contains(&Check::Validate));
        let again: Vec<Check> = all.iter().copied().collect();
        prop_assert_eq!(Check::closure(&again), all);
    }
}
