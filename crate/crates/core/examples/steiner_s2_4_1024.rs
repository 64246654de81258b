// S(2,4,1024) at m=10 via the syndrome meet-in-the-middle search.

use std::time::Instant;

use steinerforge::code::{build_cyclic, extend};
use steinerforge::design::{extract_design, steiner_check, EnumerationMode};
use steinerforge::gf2::Gf2mField;

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(10)?;
    let ce = extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?;
    let start = Instant::now();
    let mut design = extract_design(&ce, 4, EnumerationMode::MeetInTheMiddle)?;
    println!("{} blocks in {:.2?}", design.block_count(), start.elapsed());
    let start = Instant::now();
    println!("{:?} in {:.2?}", design.certify(2)?, start.elapsed());
    println!("Steiner system: {}", steiner_check(&design)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
