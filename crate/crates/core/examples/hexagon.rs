//! The three-point blow-up of CP2: radical certificates for the hexagon
//! ideal under declared parameter relations, and the exact factorization
//! of each case's squarefreeness resultant.
//!
//! cargo run --release --example hexagon -- II
//! Case I takes a few seconds in release builds.

use toric_qh::arith::ParamSystem;
use toric_qh::ssalg::hexagon::{analyze, case_factorization, hexagon_ideal, parse_relation, HexCase};
use toric_qh::ssalg::verify;

fn main() -> toric_qh::Result<()> {
    let case = match std::env::args().nth(1).as_deref() {
        Some("I") => HexCase::I,
        Some("III") => HexCase::III,
        _ => HexCase::II,
    };
    let mut ring = ParamSystem::from_names(&["A", "B", "x", "y", "z"])?;
    let relation = match case {
        HexCase::I => None,
        HexCase::II => Some("y=z"),
        HexCase::III => Some("xyz=1"),
    };
    if let Some(r) = relation {
        ring = ring.with_relation(parse_relation(r, &ring)?)?;
    }
    let analysis = analyze(&hexagon_ideal(&ring))?;
    verify(&analysis.certificate, None)?;
    println!("case {} / {}: {}", analysis.case_a, analysis.case_b, analysis.certificate.verdict);
    println!("member in A: {}", analysis.f_a);

    let f = case_factorization(case)?;
    println!("resultant = ({}) * ({})", f.factor, f.cofactor);
    println!("cofactor at the all-ones point: {}", f.value_at_ones);
    for (label, v) in &f.checks {
        println!("{label}: {v}");
    }
    Ok(())
}
