// Construct C_E, its extension and duals, and certify minimum distances.

use steinerforge::code::{build_cyclic, dual, extend, load_code, min_distance, save_code};
use steinerforge::gf2::Gf2mField;

pub fn run() -> steinerforge::Result<()> {
    for (m, e) in [(6u32, vec![2u32]), (6, vec![3]), (5, vec![1, 2])] {
        let f = Gf2mField::new(m)?;
        let c = build_cyclic(&f, &e.iter().copied().collect())?;
        let ce = extend(&c)?;
        println!(
            "m={m} E={e:?}: C_E [{}, {}, {}], extended [{}, {}, {}], duals of dimension {} and {}",
            c.length(),
            c.dimension(),
            min_distance(&c, 8)?,
            ce.length(),
            ce.dimension(),
            min_distance(&ce, 8)?,
            dual(&c).dimension(),
            dual(&ce).dimension(),
        );
    }

    let f = Gf2mField::new(6)?;
    let ce = extend(&build_cyclic(&f, &[2u32].into_iter().collect())?)?;
    let dir = std::env::temp_dir().join(format!("steinerforge-build-{}", std::process::id()));
    let path = save_code(&ce, &dir)?;
    let back = load_code(&path)?;
    println!(
        "saved to {} and reloaded: same code = {}",
        path.display(),
        back.same_code(&ce)
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
