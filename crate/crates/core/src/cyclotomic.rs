//! 2-cyclotomic cosets, defining sets, and the Kasami–Lin–Peterson test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coset `{s * 2^j mod n}`, sorted.
pub fn coset(n: u32, s: u32) -> Vec<u32> {
    assert!(n > 0 && s < n.max(1), "need 0 <= s < n");
    let mut out = vec![s];
    let mut x = (s as u64 * 2 % n as u64) as u32;
    while x != s {
        out.push(x);
        x = (x as u64 * 2 % n as u64) as u32;
    }
    out.sort_unstable();
    out
}

/// Smallest element of every coset modulo `n`, ascending (0 included).
pub fn coset_leaders(n: u32) -> Vec<u32> {
    let mut seen = vec![false; n as usize];
    let mut leaders = Vec::new();
    for s in 0..n {
        if !seen[s as usize] {
            leaders.push(s);
            for c in coset(n, s) {
                seen[c as usize] = true;
            }
        }
    }
    leaders
}

/// `r ⪯ s`: every base-`p` digit of `r` is at most the matching digit of `s`.
pub fn p_adic_leq(r: u64, s: u64, p: u64, num_digits: u32) -> bool {
    assert!(p >= 2);
    if p == 2 {
        debug_assert!(num_digits >= 64 || (r >> num_digits == 0 && s >> num_digits == 0));
        return r & s == r;
    }
    let (mut r, mut s) = (r, s);
    for _ in 0..num_digits {
        if r % p > s % p {
            return false;
        }
        r /= p;
        s /= p;
    }
    true
}

/// Checks `E` is a nonempty subset of `{1, ..., floor(m/2)}` with `m >= 3`.
pub fn validate_exponent_set(m: u32, e: &BTreeSet<u32>) -> Result<()> {
    let max = m / 2;
    if m < 3 || e.is_empty() || e.iter().any(|&x| x == 0 || x > max) {
        return Err(Error::InvalidExponentSet {
            m,
            e: e.iter().copied().collect(),
            max,
        });
    }
    Ok(())
}

/// A defining set over `{0, ..., n}`, `n = 2^m - 1`.
///
/// `members \ {0, n}` is a union of full cosets. Whether 0 and n belong is tracked
/// independently, since as exponents they name different things (`φ_0` and `φ_n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSet {
    m: u32,
    members: BTreeSet<u32>,
}

impl DefiningSet {
    pub fn new(m: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        if !(2..=crate::gf2::MAX_M).contains(&m) {
            return Err(Error::InvalidDefiningSet(format!("m={m} out of range")));
        }
        let n = (1u32 << m) - 1;
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x > n) {
            return Err(Error::InvalidDefiningSet(format!("{x} exceeds n={n}")));
        }
        for &s in members.iter().filter(|&&s| s != 0 && s != n) {
            if let Some(c) = coset(n, s).into_iter().find(|c| !members.contains(c)) {
                return Err(Error::InvalidDefiningSet(format!(
                    "coset of {s} is incomplete: missing {c}"
                )));
            }
        }
        Ok(Self { m, members })
    }

    /// Union of the cosets of the given representatives modulo `n`.
    /// A representative equal to `n` adds `n` itself.
    pub fn from_cosets(m: u32, reps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let n = (1u32 << m) - 1;
        let mut members = BTreeSet::new();
        for s in reps {
            if s == n {
                members.insert(n);
            } else if s < n {
                members.extend(coset(n, s));
            } else {
                return Err(Error::InvalidDefiningSet(format!("{s} exceeds n={n}")));
            }
        }
        Self::new(m, members)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        (1 << self.m) - 1
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn contains(&self, s: u32) -> bool {
        self.members.contains(&s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Leaders of the cosets making up `members \ {0, n}`.
    pub fn coset_leaders(&self) -> Vec<u32> {
        let n = self.n();
        self.members
            .iter()
            .copied()
            .filter(|&s| s != 0 && s != n && coset(n, s)[0] == s)
            .collect()
    }
}

/// Defining set of `C_E` (`C_1 ∪ ⋃ C_{1+2^e}`), plus `{0}` for the extended code.
pub fn defining_set_for(m: u32, e: &BTreeSet<u32>, extended: bool) -> Result<DefiningSet> {
    validate_exponent_set(m, e)?;
    let n = (1u32 << m) - 1;
    let mut reps = vec![1u32];
    for &x in e {
        let s = 1 + (1u32 << x);
        if coset(n, s)[0] != s {
            return Err(Error::Consistency(format!(
                "1+2^{x}={s} is not a coset leader mod {n}"
            )));
        }
        reps.push(s);
    }
    let mut ds = DefiningSet::from_cosets(m, reps)?;
    // 0 never lies in the cyclic defining set here, so {n} is never added
    debug_assert!(!ds.contains(0));
    if extended {
        ds.members.insert(0);
    }
    Ok(ds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlpWitness {
    /// A member of the defining set.
    pub s: u32,
    /// An `r ⪯ s` missing from the set.
    pub r: u32,
}

/// Kasami–Lin–Peterson: an extended primitive cyclic code is affine-invariant iff its
/// defining set is downward-closed under `⪯` within `{0, ..., n}`.
///
/// Scans `s` ascending and each `s`'s submasks ascending; returns the first violation.
pub fn klp_affine_invariant(defining_set: &DefiningSet) -> Result<Option<KlpWitness>> {
    if !defining_set.contains(0) {
        return Err(Error::InvalidDefiningSet(
            "KLP test needs an extended defining set (0 ∈ T̄)".into(),
        ));
    }
    for &s in defining_set.members() {
        // submasks of s in ascending order
        let mut subs: Vec<u32> = Vec::with_capacity(1 << s.count_ones());
        let mut r = s;
        loop {
            subs.push(r);
            if r == 0 {
                break;
            }
            r = (r - 1) & s;
        }
        if let Some(&r) = subs.iter().rev().find(|&&r| !defining_set.contains(r)) {
            return Ok(Some(KlpWitness { s, r }));
        }
    }
    Ok(None)
}
