// Weight distributions three ways: enumeration, MacWilliams, closed form.

use steinerforge::code::{build_cyclic, dual, extend};
use steinerforge::gf2::Gf2mField;
use steinerforge::weights::{
    brute_weight_distribution, closed_form_dual_wd, extended_primal_wd_closed_form,
    macwilliams_transform, power_moment_check,
};

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(6)?;
    let ce = extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?;
    let cd = dual(&ce);

    let brute = brute_weight_distribution(&cd)?;
    let closed = closed_form_dual_wd(6, 2, true)?;
    println!("dual of C̄_2 at m=6: {}", brute.to_json());
    println!("enumeration == closed form: {}", brute == closed);

    let primal = macwilliams_transform(&brute, cd.dimension())?;
    let primal_closed = extended_primal_wd_closed_form(6)?;
    println!(
        "Ā_4 = {}, Ā_6 = {}, Ā_8 = {}",
        primal.count(4),
        primal.count(6),
        primal.count(8)
    );
    println!("transform == closed form: {}", primal == primal_closed);
    println!(
        "Pless moments hold: {}",
        power_moment_check(&primal, &brute, (ce.dimension(), cd.dimension()))
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
