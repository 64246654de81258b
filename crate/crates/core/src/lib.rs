//! Binary cyclic codes `C_E = C_1 ∪ C_{1+2^e}` over GF(2^m), their weight
//! distributions, and the designs carried by their codewords.
//!
//! The crate is organised bottom-up:
//! [`gf2`] (fields, polynomials, bit matrices), [`cyclotomic`] (cosets, defining sets,
//! the KLP test), [`code`] (construction and membership), [`search`] (codeword
//! enumeration), [`weights`] (distributions), [`design`] (support designs),
//! [`affine`] (AGL(1, 2^m)) and [`am`] (Assmus–Mattson).

pub mod affine;
pub mod am;
pub mod cli;
pub mod code;
pub mod cyclotomic;
pub mod design;
pub mod error;
pub mod gf2;
pub mod search;
pub mod weights;

pub use error::{Error, Result};
