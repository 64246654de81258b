//! Construction of `C_E`, its dual, extension and puncturing, plus the `φ_s`
//! membership view of extended codes.
//!
//! Coordinates of an extended code of length `2^m` follow one convention everywhere:
//! position 0 is the field element 0 and position `j >= 1` is `α^(j-1)`. A cyclic code
//! of length `n` is the same layout with position 0 removed, so its position `i` is `α^i`.

mod serial;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use serial::{load_code, save_code, CodeFile, GENERATOR_BLOB};

use crate::cyclotomic::{defining_set_for, validate_exponent_set, DefiningSet};
use crate::error::{Error, Result};
use crate::gf2::matrix::{self, words_for};
use crate::gf2::{BitMatrix, Elem, Gf2Poly, Gf2mField};
use crate::search;

pub const COORDINATE_CONVENTION: &str = "zero-then-alpha-powers";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeRole {
    Cyclic,
    Dual,
    /// Extension of a cyclic code.
    Extended,
    /// Dual of an extended cyclic code.
    ExtendedDual,
    /// Extension of the dual of a cyclic code.
    DualExtended,
    /// Anything reached by other chains of operations.
    Derived,
}

impl CodeRole {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeRole::Cyclic => "cyclic",
            CodeRole::Dual => "dual",
            CodeRole::Extended => "extended",
            CodeRole::ExtendedDual => "extended-dual",
            CodeRole::DualExtended => "dual-extended",
            CodeRole::Derived => "derived",
        }
    }

    fn dual(self) -> Self {
        match self {
            CodeRole::Cyclic => CodeRole::Dual,
            CodeRole::Dual => CodeRole::Cyclic,
            CodeRole::Extended => CodeRole::ExtendedDual,
            CodeRole::ExtendedDual => CodeRole::Extended,
            CodeRole::DualExtended | CodeRole::Derived => CodeRole::Derived,
        }
    }

    /// Whether coordinates carry the leading field-element-0 position.
    pub fn is_extended_length(self) -> bool {
        matches!(
            self,
            CodeRole::Extended | CodeRole::ExtendedDual | CodeRole::DualExtended
        )
    }
}

impl fmt::Display for CodeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub m: u32,
    /// The exponent set `E`; empty for codes built from an explicit defining set.
    #[serde(rename = "E")]
    pub e: Vec<u32>,
    pub role: CodeRole,
    pub modulus_bits: u64,
    pub convention: String,
}

/// A binary linear code with generator and parity-check matrices, both in RREF.
#[derive(Clone, Debug)]
pub struct LinearCode {
    length: usize,
    dimension: usize,
    generator: BitMatrix,
    parity_check: BitMatrix,
    provenance: Option<Provenance>,
    defining_set: Option<DefiningSet>,
}

impl LinearCode {
    /// Code spanned by the rows of `generator` (need not be full rank).
    pub fn from_generator(generator: &BitMatrix) -> Self {
        let (g, _) = generator.rref();
        let (h, _) = g.nullspace_basis().rref();
        Self {
            length: generator.cols(),
            dimension: g.rows(),
            generator: g,
            parity_check: h,
            provenance: None,
            defining_set: None,
        }
    }

    fn with_meta(
        mut self,
        provenance: Option<Provenance>,
        defining_set: Option<DefiningSet>,
    ) -> Self {
        self.provenance = provenance;
        self.defining_set = defining_set;
        self
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.parity_check
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn role(&self) -> CodeRole {
        self.provenance
            .as_ref()
            .map_or(CodeRole::Derived, |p| p.role)
    }

    /// Defining set of this code, when it is a (extended) primitive cyclic code.
    pub fn defining_set(&self) -> Option<&DefiningSet> {
        self.defining_set.as_ref()
    }

    /// Matrix membership test: `H w^T = 0`.
    pub fn contains(&self, word: &[u64]) -> bool {
        self.parity_check.mul_vec(word).iter().all(|&w| w == 0)
    }

    /// Same row space, compared on the canonical RREF generators.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.length == other.length && self.generator == other.generator
    }
}

/// `n - k` predicted for `C_E`.
pub fn dimension_formula(m: u32, e: &BTreeSet<u32>) -> usize {
    let n = (1usize << m) - 1;
    let m = m as usize;
    let size = e.len();
    if m.is_multiple_of(2) && e.contains(&((m / 2) as u32)) {
        n - (2 * size + 1) * m / 2
    } else {
        n - (size + 1) * m
    }
}

/// `g_E(x) = M_α(x) · lcm{M_{α^{1+2^e}}(x) : e ∈ E}`.
pub fn generator_polynomial(field: &Gf2mField, e: &BTreeSet<u32>) -> Result<Gf2Poly> {
    validate_exponent_set(field.m(), e)?;
    let l = e
        .iter()
        .map(|&x| field.minimal_polynomial(1 + (1 << x)))
        .fold(Gf2Poly::one(), |acc, p| acc.lcm(&p));
    Ok(field.minimal_polynomial(1).mul(&l))
}

/// Generator polynomial `∏ M_{α^s}` over the coset leaders of `T` (with `x - 1` for `0 ∈ T`).
pub fn generator_polynomial_for(field: &Gf2mField, t: &DefiningSet) -> Gf2Poly {
    let mut g = Gf2Poly::one();
    for s in t.coset_leaders() {
        g = g.mul(&field.minimal_polynomial(s));
    }
    if t.contains(0) {
        g = g.mul(&field.minimal_polynomial(0));
    }
    g
}

/// The `k x n` matrix whose row `i` is `x^i g(x)`.
pub fn shift_matrix(g: &Gf2Poly, n: usize) -> BitMatrix {
    let r = g.degree().expect("nonzero generator polynomial");
    let k = n - r;
    let mut m = BitMatrix::zeros(k, n);
    for i in 0..k {
        for e in g.exponents() {
            m.set(i, i + e, true);
        }
    }
    m
}

/// RREF generator of the cyclic code with generator polynomial `g`, pivots at `0..k`.
///
/// Row `i` is the reversal of `x^(n-1-i) + (x^(n-1-i) mod g*)` in the reversed code,
/// whose generator is the reciprocal `g*`.
fn systematic_generator(g: &Gf2Poly, n: usize) -> BitMatrix {
    let r = g.degree().expect("nonzero generator polynomial");
    let k = n - r;
    let recip = g.reciprocal();
    let rw = words_for(r + 1);
    let mut gw = recip.words().to_vec();
    gw.resize(rw, 0);
    let mut out = BitMatrix::zeros(k, n);
    // rem = x^j mod g*, for j = r, r+1, ..., n-1
    let mut rem = vec![0u64; rw];
    matrix::set_bit(&mut rem, r, true);
    matrix::xor_into(&mut rem, &gw);
    for j in r..n {
        let i = n - 1 - j;
        out.set(i, i, true);
        for t in matrix::ones(&rem) {
            out.set(i, n - 1 - t, true);
        }
        // multiply by x and reduce
        let mut carry = 0;
        for w in rem.iter_mut() {
            let next = *w >> 63;
            *w = (*w << 1) | carry;
            carry = next;
        }
        if matrix::get_bit(&rem, r) {
            matrix::xor_into(&mut rem, &gw);
        }
    }
    out
}

fn cyclic_from_polynomial(g: &Gf2Poly, n: usize) -> Result<LinearCode> {
    if !Gf2Poly::x_n_minus_one(n).rem(g)?.is_zero() {
        return Err(Error::Consistency(
            "generator polynomial does not divide x^n - 1".into(),
        ));
    }
    let generator = systematic_generator(g, n);
    let (h, _) = generator.nullspace_basis().rref();
    Ok(LinearCode {
        length: n,
        dimension: generator.rows(),
        generator,
        parity_check: h,
        provenance: None,
        defining_set: None,
    })
}

/// The cyclic code `C_E` of length `2^m - 1`.
pub fn build_cyclic(field: &Gf2mField, e: &BTreeSet<u32>) -> Result<LinearCode> {
    let m = field.m();
    let g = generator_polynomial(field, e)?;
    let n = field.n() as usize;
    let expected = dimension_formula(m, e);
    let deg = g.degree().expect("nonzero");
    if n - deg != expected {
        return Err(Error::Consistency(format!(
            "deg g_E = {deg} gives dimension {}, formula gives {expected}",
            n - deg
        )));
    }
    let code = cyclic_from_polynomial(&g, n)?;
    let t = defining_set_for(m, e, false)?;
    let prov = Provenance {
        m,
        e: e.iter().copied().collect(),
        role: CodeRole::Cyclic,
        modulus_bits: field.modulus_bits(),
        convention: COORDINATE_CONVENTION.into(),
    };
    Ok(code.with_meta(Some(prov), Some(t)))
}

/// Primitive cyclic code with an arbitrary defining set `T ⊆ {0, ..., n-1}`.
pub fn build_cyclic_from_defining_set(field: &Gf2mField, t: &DefiningSet) -> Result<LinearCode> {
    if t.m() != field.m() || t.contains(field.n()) {
        return Err(Error::InvalidDefiningSet(
            "cyclic defining set must lie in 0..n for this field".into(),
        ));
    }
    let g = generator_polynomial_for(field, t);
    let code = cyclic_from_polynomial(&g, field.n() as usize)?;
    let prov = Provenance {
        m: field.m(),
        e: Vec::new(),
        role: CodeRole::Cyclic,
        modulus_bits: field.modulus_bits(),
        convention: COORDINATE_CONVENTION.into(),
    };
    Ok(code.with_meta(Some(prov), Some(t.clone())))
}

/// Extended primitive cyclic code with defining set `T̄` (which must contain 0).
pub fn build_extended_from_defining_set(
    field: &Gf2mField,
    t_bar: &DefiningSet,
) -> Result<LinearCode> {
    let n = field.n();
    if !t_bar.contains(0) {
        return Err(Error::InvalidDefiningSet(
            "extended defining set must contain 0".into(),
        ));
    }
    let t_members: Vec<u32> = if t_bar.contains(n) {
        t_bar
            .members()
            .iter()
            .copied()
            .filter(|&s| s != n)
            .collect()
    } else {
        t_bar
            .members()
            .iter()
            .copied()
            .filter(|&s| s != 0)
            .collect()
    };
    let t = DefiningSet::new(field.m(), t_members)?;
    extend(&build_cyclic_from_defining_set(field, &t)?)
}

/// Prepends the overall parity coordinate (position 0, field element 0).
pub fn extend(code: &LinearCode) -> Result<LinearCode> {
    let role = code.role();
    let new_role = match role {
        CodeRole::Cyclic => CodeRole::Extended,
        CodeRole::Dual => CodeRole::DualExtended,
        other => {
            return Err(Error::WrongRole {
                expected: "cyclic or dual",
                found: other.to_string(),
            });
        }
    };
    let n = code.length;
    let mut g = BitMatrix::zeros(code.dimension, n + 1);
    for i in 0..code.dimension {
        let src = code.generator.row(i);
        let dst = g.row_mut(i);
        let mut carry = 0;
        for (d, &s) in dst.iter_mut().zip(src.iter().chain(std::iter::repeat(&0))) {
            *d = (s << 1) | carry;
            carry = s >> 63;
        }
        if matrix::weight(src) % 2 == 1 {
            dst[0] |= 1;
        }
    }
    let ext = LinearCode::from_generator(&g);
    let defining_set = match (role, &code.defining_set) {
        (CodeRole::Cyclic, Some(t)) => Some(extended_defining_set(t)?),
        _ => None,
    };
    let prov = code.provenance.clone().map(|p| Provenance {
        role: new_role,
        ..p
    });
    Ok(ext.with_meta(prov, defining_set))
}

/// `T̄ = {0} ∪ T` if `0 ∉ T`, else `{0, n} ∪ T`.
fn extended_defining_set(t: &DefiningSet) -> Result<DefiningSet> {
    let mut members: BTreeSet<u32> = t.members().clone();
    if t.contains(0) {
        members.insert(t.n());
    }
    members.insert(0);
    DefiningSet::new(t.m(), members)
}

/// Dual code: generator and parity-check swap.
pub fn dual(code: &LinearCode) -> LinearCode {
    let role = code.role();
    let defining_set = code
        .defining_set
        .as_ref()
        .and_then(|t| dual_defining_set(t, role));
    LinearCode {
        length: code.length,
        dimension: code.length - code.dimension,
        generator: code.parity_check.clone(),
        parity_check: code.generator.clone(),
        provenance: code.provenance.clone().map(|p| Provenance {
            role: role.dual(),
            ..p
        }),
        defining_set,
    }
}

/// Defining set of the dual: negate the complement, mod `n` for cyclic codes and
/// by `s -> n - s` over `{0, ..., n}` for extended ones.
fn dual_defining_set(t: &DefiningSet, role: CodeRole) -> Option<DefiningSet> {
    let n = t.n();
    let members: Vec<u32> = match role {
        CodeRole::Cyclic | CodeRole::Dual => (0..n)
            .filter(|s| !t.contains(*s))
            .map(|s| (n - s) % n)
            .collect(),
        CodeRole::Extended | CodeRole::ExtendedDual => {
            (0..=n).filter(|s| !t.contains(*s)).map(|s| n - s).collect()
        }
        _ => return None,
    };
    DefiningSet::new(t.m(), members).ok()
}

/// Deletes one coordinate.
pub fn puncture(code: &LinearCode, position: usize) -> Result<LinearCode> {
    if position >= code.length {
        return Err(Error::InvalidParameters(format!(
            "position {position} outside length {}",
            code.length
        )));
    }
    let n = code.length;
    let mut g = BitMatrix::zeros(code.dimension, n - 1);
    for i in 0..code.dimension {
        for j in matrix::ones(code.generator.row(i)) {
            if j != position {
                g.set(i, if j > position { j - 1 } else { j }, true);
            }
        }
    }
    let p = LinearCode::from_generator(&g);
    let (role, defining_set) = match (code.role(), position) {
        (CodeRole::Extended, 0) => {
            let t = code.defining_set.as_ref().map(|t| {
                let n = t.n();
                let cyclic: Vec<u32> = if t.contains(n) {
                    t.members().iter().copied().filter(|&s| s != n).collect()
                } else {
                    t.members().iter().copied().filter(|&s| s != 0).collect()
                };
                DefiningSet::new(t.m(), cyclic)
            });
            (CodeRole::Cyclic, t.transpose()?)
        }
        (CodeRole::DualExtended, 0) => (CodeRole::Dual, None),
        _ => (CodeRole::Derived, None),
    };
    let prov = code.provenance.clone().map(|pr| Provenance { role, ..pr });
    Ok(p.with_meta(prov, defining_set))
}

/// Field element sitting at an extended-code position.
pub fn position_to_element(field: &Gf2mField, position: usize) -> Elem {
    if position == 0 {
        0
    } else {
        field.alpha_pow(position as u64 - 1)
    }
}

pub fn element_to_position(field: &Gf2mField, x: Elem) -> usize {
    if x == 0 {
        0
    } else {
        field.log(x) as usize + 1
    }
}

/// `φ_s(word) = Σ_g C_g g^s` over an extended-length word, with `0^0 = 1`.
pub fn phi(field: &Gf2mField, word: &[u64], s: u32) -> Elem {
    let n = field.n() as u64;
    let s = s as u64;
    let mut acc = 0;
    for pos in matrix::ones(word) {
        acc ^= if pos == 0 {
            u32::from(s == 0)
        } else {
            field.alpha_pow((pos as u64 - 1) * s % n)
        };
    }
    acc
}

/// Membership in the extended code defined by `T̄`: `φ_s(word) = 0` for all `s ∈ T̄`.
pub fn membership_by_defining_set(field: &Gf2mField, t_bar: &DefiningSet, word: &[u64]) -> bool {
    t_bar.members().iter().all(|&s| phi(field, word, s) == 0)
}

/// Precomputed `g^s` tables for repeated membership checks against one defining set.
pub struct PhiTable {
    /// `powers[k][pos]` is the field element at `pos` raised to the k-th member of `T̄`.
    powers: Vec<Vec<Elem>>,
}

impl PhiTable {
    pub fn new(field: &Gf2mField, t_bar: &DefiningSet) -> Self {
        let size = field.size() as usize;
        let n = field.n() as u64;
        let powers = t_bar
            .members()
            .iter()
            .map(|&s| {
                (0..size)
                    .map(|pos| {
                        if pos == 0 {
                            u32::from(s == 0)
                        } else {
                            field.alpha_pow((pos as u64 - 1) * s as u64 % n)
                        }
                    })
                    .collect()
            })
            .collect();
        Self { powers }
    }

    /// Membership of a word given by its support.
    pub fn contains_support(&self, support: &[usize]) -> bool {
        self.powers
            .iter()
            .all(|table| support.iter().fold(0, |acc, &p| acc ^ table[p]) == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum MinDistance {
    Exact(usize),
    /// No nonzero codeword of weight below this bound exists; search stopped there.
    AtLeast(usize),
    /// The zero code.
    Undefined,
}

impl MinDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            MinDistance::Exact(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::AtLeast(d) => write!(f, ">= {d} (inexact)"),
            MinDistance::Undefined => write!(f, "undefined"),
        }
    }
}

/// Exact minimum distance by exhaustive enumeration (dimension ≤ 28) or by a
/// syndrome meet-in-the-middle search over weights `1..=budget`.
pub fn min_distance(code: &LinearCode, budget: usize) -> Result<MinDistance> {
    if code.dimension == 0 {
        return Ok(MinDistance::Undefined);
    }
    if code.dimension <= search::EXHAUSTIVE_DIMENSION_CAP {
        let d = search::fold_codewords(
            code.generator(),
            || usize::MAX,
            |best, word| {
                let w = matrix::weight(word);
                if w > 0 && w < *best {
                    *best = w;
                }
            },
            |a, b| a.min(b),
        );
        return Ok(MinDistance::Exact(d));
    }
    for w in 1..=budget.min(code.length) {
        match search::weight_exists(code, w) {
            Ok(true) => return Ok(MinDistance::Exact(w)),
            Ok(false) => {}
            Err(Error::Infeasible(_)) => return Ok(MinDistance::AtLeast(w)),
            Err(e) => return Err(e),
        }
    }
    Ok(MinDistance::AtLeast(budget.min(code.length) + 1))
}
