//! Fano classification of the five standard models and of a transformed
//! copy of each.

use std::collections::BTreeMap;

use toric_qh::arith::Rational;
use toric_qh::toric::{classify_fano, model_params, standard_model, FanoTag};

fn defaults(tag: FanoTag) -> BTreeMap<String, Rational> {
    let vals: &[&str] = match tag {
        FanoTag::Cp2 => &["1"],
        FanoTag::S2xS2 => &["1", "2"],
        FanoTag::Cp2Bl1 => &["3", "1"],
        FanoTag::Cp2Bl2 => &["2/3", "3/4"],
        FanoTag::Cp2Bl3 => &["1/4", "2/3", "2/3"],
    };
    model_params(tag)
        .iter()
        .zip(vals)
        .map(|(k, v)| (k.to_string(), v.parse().expect("rational")))
        .collect()
}

fn main() -> toric_qh::Result<()> {
    for tag in FanoTag::ALL {
        let p = standard_model(tag, &defaults(tag))?;
        let class = classify_fano(&p)?;
        let moved = p.transform([[2, 1], [1, 1]], [5, -3])?;
        let again = classify_fano(&moved)?;
        println!(
            "{tag}: {} facets, classified as {} (witness {:?}); transformed copy: {}",
            p.len(),
            class.tag,
            class.witness.matrix,
            again.tag
        );
    }
    Ok(())
}
