//! Batyrev relations of every standard model, before and after the
//! parameter-free normalization.

use std::collections::BTreeMap;

use toric_qh::batyrev::{presentation, primitive_sets};
use toric_qh::toric::{standard_model, FanoTag};

fn main() -> toric_qh::Result<()> {
    let models: [(FanoTag, &[(&str, &str)]); 5] = [
        (FanoTag::Cp2, &[("scale", "1")]),
        (FanoTag::S2xS2, &[("a", "1"), ("b", "2")]),
        (FanoTag::Cp2Bl1, &[("scale", "3"), ("size", "1")]),
        (FanoTag::Cp2Bl2, &[("eps", "2/3"), ("delta", "3/4")]),
        (FanoTag::Cp2Bl3, &[("alpha", "1/4"), ("beta", "2/3"), ("gamma", "2/3")]),
    ];
    for (tag, kv) in models {
        let values: BTreeMap<_, _> = kv.iter().map(|(k, v)| (k.to_string(), v.parse().expect("rational"))).collect();
        let p = standard_model(tag, &values)?;
        println!("{tag}");
        if tag != FanoTag::Cp2 {
            for ps in primitive_sets(&p)? {
                println!("  primitive {:?}: w = {:?}, cone {:?}", ps.pair, ps.w, ps.cone);
            }
        }
        let pres = presentation(&p)?;
        let [a, b] = pres.additive_text();
        println!("  {a}\n  {b}");
        for (r, n) in pres.relations.iter().zip(&pres.normalized) {
            println!("  {r}    ({n})");
        }
    }
    Ok(())
}
