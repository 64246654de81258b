//! GF(2) polynomials, the field GF(2^m), and bit-packed GF(2) matrices.

mod field;
pub mod matrix;
mod poly;

pub use field::{check_primitive, default_modulus, Elem, Gf2mField, MAX_M, MIN_M};
pub use matrix::BitMatrix;
pub use poly::Gf2Poly;
