//! Certificates for a univariate quotient given on the command line.
//!
//! cargo run --example certify -- "X^3 - x*X"

use toric_qh::arith::{identifiers, parse_field_elem, ParamSystem, UniPoly};
use toric_qh::ssalg::{
    field_summand_certificate, is_semisimple_univariate, trace_form_semisimple, verify, FDAlgebra,
};

fn main() -> toric_qh::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "X^2*(X^2 - x)".into());
    let mut params: Vec<String> = identifiers(&text)?.into_iter().filter(|v| v != "X").collect();
    params.sort();
    let names: Vec<&str> = params.iter().map(String::as_str).collect();
    let big = ParamSystem::from_names(&names)?.with_leading("X")?;
    let f = UniPoly::from_mpoly(parse_field_elem(&text, &big)?.num(), "X")?;
    let alg = FDAlgebra::univariate_quotient(&f)?;
    for (label, cert, with_alg) in [
        ("resultant", is_semisimple_univariate(&f)?, false),
        ("trace form", trace_form_semisimple(&alg)?, true),
        ("field summand", field_summand_certificate(&f)?, false),
    ] {
        verify(&cert, with_alg.then_some(&alg))?;
        println!("{label}: {}", cert.verdict);
        println!("  {}", cert.to_json());
    }
    Ok(())
}
