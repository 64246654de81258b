//! AGL(1, 2^m) acting on the coordinates of extended codes.

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{element_to_position, position_to_element, LinearCode, PhiTable};
use crate::design::DesignInstance;
use crate::error::{Error, Result};
use crate::gf2::matrix;
use crate::gf2::{Elem, Gf2mField};

/// `σ(y) = a y + b` with `a ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    pub a: Elem,
    pub b: Elem,
}

impl AffineMap {
    pub fn new(field: &Gf2mField, a: Elem, b: Elem) -> Result<Self> {
        if a == 0 || a >= field.size() || b >= field.size() {
            return Err(Error::InvalidParameters(format!(
                "({a}, {b}) is not an element of AGL(1, 2^{})",
                field.m()
            )));
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self { a: 1, b: 0 }
    }

    pub fn random<R: Rng + ?Sized>(field: &Gf2mField, rng: &mut R) -> Self {
        Self {
            a: rng.gen_range(1..field.size()),
            b: rng.gen_range(0..field.size()),
        }
    }

    pub fn apply_element(&self, field: &Gf2mField, y: Elem) -> Elem {
        field.add(field.mul(self.a, y), self.b)
    }

    /// Image of a coordinate under the extended-code convention.
    pub fn apply(&self, field: &Gf2mField, position: usize) -> usize {
        element_to_position(
            field,
            self.apply_element(field, position_to_element(field, position)),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, field: &Gf2mField, other: &AffineMap) -> AffineMap {
        AffineMap {
            a: field.mul(self.a, other.a),
            b: self.apply_element(field, other.b),
        }
    }

    pub fn inverse(&self, field: &Gf2mField) -> AffineMap {
        let a = field.inv(self.a).expect("a is nonzero");
        AffineMap {
            a,
            b: field.mul(a, self.b),
        }
    }

    /// The coordinate permutation as an image table.
    pub fn permutation(&self, field: &Gf2mField) -> Vec<usize> {
        (0..field.size() as usize)
            .map(|p| self.apply(field, p))
            .collect()
    }
}

/// Every element of AGL(1, 2^m), `a` outer and `b` inner.
pub fn group_elements(field: &Gf2mField) -> impl Iterator<Item = AffineMap> + '_ {
    (1..field.size()).flat_map(move |a| (0..field.size()).map(move |b| AffineMap { a, b }))
}

pub fn group_order(m: u32) -> u64 {
    (1u64 << m) * ((1u64 << m) - 1)
}

/// The unique map with `σ(x1) = y1`, `σ(x2) = y2`.
pub fn solve_pair(field: &Gf2mField, x: (Elem, Elem), y: (Elem, Elem)) -> Result<AffineMap> {
    if x.0 == x.1 || y.0 == y.1 {
        return Err(Error::InvalidParameters(
            "solve_pair needs x1 != x2 and y1 != y2".into(),
        ));
    }
    let a = field
        .div(field.add(y.0, y.1), field.add(x.0, x.1))
        .expect("x1 != x2");
    let b = field.add(y.0, field.mul(a, x.0));
    Ok(AffineMap { a, b })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "maps", rename_all = "kebab-case")]
pub enum InvarianceMode {
    Full,
    /// `N` maps drawn from a seeded generator.
    Sample(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceWitness {
    pub map: AffineMap,
    /// Index of the generator row whose image left the code.
    pub row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub maps_checked: usize,
    pub rows: usize,
    pub witness: Option<InvarianceWitness>,
}

/// Applies group elements to every generator row and tests each image with the
/// `φ_s` characterization. Linearity extends a pass on the rows to the whole code.
pub fn certify_invariance(
    code: &LinearCode,
    field: &Gf2mField,
    mode: InvarianceMode,
    seed: u64,
) -> Result<InvarianceReport> {
    if !code.role().is_extended_length() || code.length() != field.size() as usize {
        return Err(Error::WrongRole {
            expected: "extended code of length 2^m",
            found: code.role().to_string(),
        });
    }
    let t_bar = code
        .defining_set()
        .filter(|t| t.contains(0) && t.m() == field.m())
        .ok_or_else(|| Error::InvalidDefiningSet("code carries no extended defining set".into()))?;
    let table = PhiTable::new(field, t_bar);
    let supports: Vec<Vec<usize>> = code
        .generator()
        .row_iter()
        .map(|r| matrix::ones(r).collect())
        .collect();
    let maps: Vec<AffineMap> = match mode {
        InvarianceMode::Full => group_elements(field).collect(),
        InvarianceMode::Sample(count) => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            (0..count)
                .map(|_| AffineMap::random(field, &mut rng))
                .collect()
        }
    };
    let witness = maps.par_iter().find_map_first(|map| {
        let perm = map.permutation(field);
        let mut image = Vec::new();
        supports.iter().enumerate().find_map(|(row, s)| {
            image.clear();
            image.extend(s.iter().map(|&p| perm[p]));
            (!table.contains_support(&image)).then_some(InvarianceWitness { map: *map, row })
        })
    });
    Ok(InvarianceReport {
        invariant: witness.is_none(),
        maps_checked: maps.len(),
        rows: supports.len(),
        witness,
    })
}

/// Whether `map` sends the block set onto itself.
pub fn permutes_blocks(field: &Gf2mField, design: &DesignInstance, map: &AffineMap) -> bool {
    if design.v() != field.size() as usize {
        return false;
    }
    let perm = map.permutation(field);
    let blocks: Vec<&[u32]> = design.blocks().collect();
    let mut image = vec![0u32; design.k()];
    // blocks are distinct and the map is a bijection, so inclusion gives equality
    blocks.iter().all(|b| {
        for (dst, &p) in image.iter_mut().zip(b.iter()) {
            *dst = perm[p as usize] as u32;
        }
        image.sort_unstable();
        blocks.binary_search(&image.as_slice()).is_ok()
    })
}
