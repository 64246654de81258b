// GF(2^m) arithmetic, cyclotomic cosets and the KLP affine-invariance test.

use steinerforge::cyclotomic::{coset, defining_set_for, klp_affine_invariant, DefiningSet};
use steinerforge::gf2::Gf2mField;

pub fn run() -> steinerforge::Result<()> {
    let f = Gf2mField::new(6)?;
    println!("GF(2^6) modulus: {}", f.modulus());
    let a = f.alpha_pow(1);
    println!(
        "alpha^63 = {}, alpha * alpha^-1 = {}",
        f.pow(a, 63),
        f.mul(a, f.inv(a).unwrap())
    );
    println!("M_alpha(x)   = {}", f.minimal_polynomial(1));
    println!("M_alpha^5(x) = {}", f.minimal_polynomial(5));
    println!("C_5 mod 63 = {:?}", coset(63, 5));

    let e = [2u32].into_iter().collect();
    let t_bar = defining_set_for(6, &e, true)?;
    println!(
        "T̄ for m=6, E={{2}}: {} elements, leaders {:?}",
        t_bar.len(),
        t_bar.coset_leaders()
    );
    println!("KLP witness: {:?}", klp_affine_invariant(&t_bar)?);

    let bad = DefiningSet::from_cosets(4, [0, 3])?;
    println!(
        "KLP witness for {{0}} ∪ C_3 at m=4: {:?}",
        klp_affine_invariant(&bad)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> steinerforge::Result<()> {
    run()
}
