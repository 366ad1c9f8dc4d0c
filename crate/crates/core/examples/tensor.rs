//! Tensor products and the verdicts they inherit from their factors.

use toric_qh::arith::{parse_field_elem, ParamSystem, UniPoly};
use toric_qh::products::{kunneth_check, tensor};
use toric_qh::ssalg::{verify, FDAlgebra};

fn quotient(text: &str, var: &str, params: &[&str]) -> toric_qh::Result<FDAlgebra> {
    let big = ParamSystem::from_names(params)?.with_leading(var)?;
    let f = UniPoly::from_mpoly(parse_field_elem(text, &big)?.num(), var)?;
    FDAlgebra::univariate_quotient(&f)
}

fn main() -> toric_qh::Result<()> {
    let pairs = [
        (quotient("X^2 - x", "X", &["x"])?, quotient("Y^2 - y", "Y", &["y"])?),
        (quotient("X^2 - x", "X", &["x"])?, quotient("E^2", "E", &[])?),
        (quotient("A^2*(A - z)", "A", &["z"])?, quotient("Y^2 - y", "Y", &["y"])?),
        (quotient("X^2 - x", "X", &["x"])?, quotient("X^2 - x", "X", &["x"])?),
    ];
    for (a, b) in &pairs {
        let t = tensor(a, b)?;
        let r = kunneth_check(a, b)?;
        verify(&r.certificate, Some(&t.algebra))?;
        let got: Vec<String> = r.certificate.verdicts().iter().map(|v| v.to_string()).collect();
        println!(
            "{:?} ⊗ {:?} over {:?}: {} (consistent: {})",
            a.basis(),
            b.basis(),
            r.params,
            got.join(" + "),
            r.consistent
        );
    }
    Ok(())
}
