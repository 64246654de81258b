// The Assmus–Mattson hypothesis on two extended codes.

use steinerforge::am::assmus_mattson;
use steinerforge::code::{build_cyclic, dual, extend};
use steinerforge::gf2::Gf2mField;
use steinerforge::weights::{brute_weight_distribution, macwilliams_transform};

pub fn run() -> steinerforge::Result<()> {
    for (m, e, t) in [(6u32, vec![2u32], 2usize), (5, vec![1, 2], 3)] {
        let f = Gf2mField::new(m)?;
        let ce = extend(&build_cyclic(&f, &e.iter().copied().collect())?)?;
        let cd = dual(&ce);
        let dual_wd = brute_weight_distribution(&cd)?;
        let wd = macwilliams_transform(&dual_wd, cd.dimension())?;
        let r = assmus_mattson(&wd, &dual_wd, t)?;
        println!(
            "m={m} E={e:?} t={t}: d={} s={} holds={} design weights {:?} / {:?}",
            r.d, r.s, r.hypothesis_holds, r.primal_design_weights, r.dual_design_weights
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
