// The Steiner system S(2,4,64) from the weight-4 codewords of C̄_2, m=6.

use steinerforge::code::{build_cyclic, extend};
use steinerforge::design::{extract_design, steiner_check, EnumerationMode};
use steinerforge::gf2::Gf2mField;

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(6)?;
    let ce = extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?;
    let mut design = extract_design(&ce, 4, EnumerationMode::MeetInTheMiddle)?;
    let verdict = design.certify(2)?;
    println!(
        "{} blocks, first {:?}",
        design.block_count(),
        design.blocks().next().unwrap()
    );
    println!("{verdict:?}");
    println!("Steiner system: {}", steiner_check(&design)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
