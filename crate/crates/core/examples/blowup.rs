//! Blow-up algebras: a field summand but no semi-simplicity.
//!
//! cargo run --example blowup -- 4

use toric_qh::blowup::{analyze, build, verify_e_products};
use toric_qh::ssalg::verify;

fn main() -> toric_qh::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let alg = build(n, "z")?;
    println!("V = K[A]/({})", alg.quotient);
    println!("B = {}", alg.b);
    println!("exceptional products hold: {}", verify_e_products(&alg)?);
    let a = analyze(&alg)?;
    verify(&a.certificate, None)?;
    let verdicts: Vec<String> = a.certificate.verdicts().iter().map(|v| v.to_string()).collect();
    println!("{}", verdicts.join(" + "));
    println!("B^2 = 0: {}, witness = -B: {}", a.b_squared_zero, a.witness_is_minus_b);
    println!("summand elements divisible by A^2: {}", a.summand_divisible_by_a_squared);
    Ok(())
}
