//! The rewriting u ↦ q·s^κ maps one product table to the other.

use toric_qh::ssalg::{check_substitution_homomorphism, toy_substitution, toy_tables};

fn main() -> toric_qh::Result<()> {
    let (source, target) = toy_tables()?;
    let ok = check_substitution_homomorphism(&source, "u", &toy_substitution(), &target)?;
    println!("p*p = {} maps to p*p = {}: {ok}", source.product(1, 1)[0], target.product(1, 1)[0]);
    Ok(())
}
