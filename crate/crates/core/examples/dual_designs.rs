// Every nonzero weight class of the dual of C̄_2 at m=6 holds a 2-design.

use steinerforge::code::{build_cyclic, dual, extend};
use steinerforge::design::{extract_design, EnumerationMode};
use steinerforge::gf2::Gf2mField;
use steinerforge::weights::brute_weight_distribution;

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(6)?;
    let cd = dual(&extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?);
    let wd = brute_weight_distribution(&cd)?;
    for (w, _) in wd.nonzero().filter(|&(w, _)| w > 0 && w < 64) {
        let mut d = extract_design(&cd, w, EnumerationMode::Exhaustive)?;
        println!("weight {w}: {:?}", d.certify(2)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
