// AGL(1, 2^m) acting on C̄_E: full-group certification and block-set invariance.

use rand::SeedableRng;
use steinerforge::affine::{
    certify_invariance, permutes_blocks, solve_pair, AffineMap, InvarianceMode,
};
use steinerforge::code::{build_cyclic, build_extended_from_defining_set, extend};
use steinerforge::cyclotomic::DefiningSet;
use steinerforge::design::{extract_design, EnumerationMode};
use steinerforge::gf2::Gf2mField;

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(6)?;
    let ce = extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?;
    let report = certify_invariance(&ce, &f, InvarianceMode::Full, 0)?;
    println!(
        "m=6 E={{2}}: invariant={} over {} maps × {} rows",
        report.invariant, report.maps_checked, report.rows
    );

    let s = solve_pair(&f, (0, 1), (f.alpha_pow(5), f.alpha_pow(17)))?;
    println!("map sending (0, 1) to (α^5, α^17): {s:?}");

    let blocks = extract_design(&ce, 4, EnumerationMode::MeetInTheMiddle)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let fixed = (0..100)
        .filter(|_| permutes_blocks(&f, &blocks, &AffineMap::random(&f, &mut rng)))
        .count();
    println!("{fixed}/100 random maps permute the S(2,4,64) blocks");

    let f4 = Gf2mField::new(4)?;
    let bad = build_extended_from_defining_set(&f4, &DefiningSet::from_cosets(4, [0, 3])?)?;
    let report = certify_invariance(&bad, &f4, InvarianceMode::Full, 0)?;
    println!(
        "{{0}} ∪ C_3 at m=4: invariant={}, witness {:?}",
        report.invariant, report.witness
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
