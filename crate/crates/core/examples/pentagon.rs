//! The two-point blow-up of CP2: presentation, reduction to one variable
//! and semi-simplicity of the quotient.
//!
//! cargo run --example pentagon -- 2/3 3/4

use std::collections::BTreeMap;

use toric_qh::arith::Rational;
use toric_qh::batyrev::{presentation, reduce, Reduced};
use toric_qh::ssalg::{field_summand_certificate, is_semisimple_univariate, verify, Witness};
use toric_qh::toric::{standard_model, FanoTag};

fn main() -> toric_qh::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let eps: Rational = args.first().map_or("2/3", String::as_str).parse()?;
    let delta: Rational = args.get(1).map_or("3/4", String::as_str).parse()?;
    let values = BTreeMap::from([("eps".to_string(), eps), ("delta".to_string(), delta)]);
    let p = standard_model(FanoTag::Cp2Bl2, &values)?;
    let pres = presentation(&p)?;
    for r in &pres.relations {
        println!("{r}");
    }
    let red = reduce(&pres)?;
    red.check_soundness(&pres)?;
    let Reduced::Univariate { quotient, .. } = &red.form else {
        unreachable!("the pentagon reduces to one variable");
    };
    println!("f(X) = {}", red.s_text().expect("univariate"));

    let at_one = quotient.specialize(&red.ring.all_ones())?;
    println!("f at s = 1: {at_one}");

    let cert = is_semisimple_univariate(quotient)?;
    verify(&cert, None)?;
    if let Some(Witness::Resultant { point, value, .. }) = &cert.witness {
        println!("{}: resultant = {value} at {point:?}", cert.verdict);
    }
    let summand = field_summand_certificate(quotient)?;
    verify(&summand, None)?;
    println!("{}", summand.verdict);
    Ok(())
}
