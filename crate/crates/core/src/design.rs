//! Support designs of codes: block extraction and exact t-design certification.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::search::{self, EXHAUSTIVE_DIMENSION_CAP, MITM_MAX_WEIGHT};
use crate::weights::binomial_big;

/// Largest number of t-subset counters allocated by [`verify_t_design`].
pub const MAX_TSUBSET_COUNTERS: u64 = 1 << 28;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMode {
    /// Meet-in-the-middle when `w ≤ 8` and feasible, otherwise exhaustive.
    #[default]
    Auto,
    Exhaustive,
    MeetInTheMiddle,
}

/// Supports of every weight-`w` codeword, lexicographically sorted.
pub fn enumerate_weight_w(
    code: &LinearCode,
    w: usize,
    mode: EnumerationMode,
) -> Result<Vec<Vec<u32>>> {
    let supports = match mode {
        EnumerationMode::Exhaustive => search::exhaustive_supports(code, w)?,
        EnumerationMode::MeetInTheMiddle => search::mitm_supports(code, w)?,
        EnumerationMode::Auto => {
            if w <= MITM_MAX_WEIGHT {
                match search::mitm_supports(code, w) {
                    Ok(s) => s,
                    Err(Error::Infeasible(why)) if code.dimension() > EXHAUSTIVE_DIMENSION_CAP => {
                        return Err(Error::Infeasible(why));
                    }
                    Err(Error::Infeasible(_)) => search::exhaustive_supports(code, w)?,
                    Err(e) => return Err(e),
                }
            } else if code.dimension() <= EXHAUSTIVE_DIMENSION_CAP {
                search::exhaustive_supports(code, w)?
            } else {
                return Err(Error::Infeasible(format!(
                    "weight {w} > {MITM_MAX_WEIGHT} needs exhaustive enumeration, but dimension {} > {EXHAUSTIVE_DIMENSION_CAP}",
                    code.dimension()
                )));
            }
        }
    };
    // a binary codeword is determined by its support
    assert!(
        supports.windows(2).all(|p| p[0] < p[1]),
        "duplicate supports"
    );
    Ok(supports)
}

/// Proven `(t, λ)` with the block count it implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub t: usize,
    pub lambda: u64,
    pub b: u64,
}

/// Two t-subsets covered a different number of times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub first: Vec<u32>,
    pub first_count: u64,
    pub second: Vec<u32>,
    pub second_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DesignVerdict {
    Design(Certificate),
    NotDesign(Witness),
}

impl DesignVerdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            DesignVerdict::Design(c) => Some(c),
            DesignVerdict::NotDesign(_) => None,
        }
    }
}

/// Points `0..v`, blocks of size `k` stored flat and strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignInstance {
    v: usize,
    k: usize,
    points: Vec<u32>,
    certificate: Option<Certificate>,
}

impl DesignInstance {
    pub fn new(v: usize, k: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 || k > v {
            return Err(Error::InvalidParameters(format!(
                "block size {k} must lie in 1..={v}"
            )));
        }
        for b in &blocks {
            if b.len() != k {
                return Err(Error::InvalidParameters(format!(
                    "block {b:?} does not have {k} points"
                )));
            }
            if !b.windows(2).all(|p| p[0] < p[1]) || b.iter().any(|&p| p as usize >= v) {
                return Err(Error::InvalidParameters(format!(
                    "block {b:?} is not a sorted subset of 0..{v}"
                )));
            }
        }
        blocks.sort_unstable();
        if blocks.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidParameters("repeated block".into()));
        }
        Ok(Self {
            v,
            k,
            points: blocks.concat(),
            certificate: None,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn block_count(&self) -> usize {
        self.points.len() / self.k
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.points.chunks_exact(self.k)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    /// Runs [`verify_t_design`] and records the certificate on success.
    pub fn certify(&mut self, t: usize) -> Result<DesignVerdict> {
        let verdict = verify_t_design(self, t)?;
        self.certificate = verdict.certificate().copied();
        Ok(verdict)
    }

    /// Block file: a `#design` header, then one block per line.
    pub fn to_block_file(&self, source: &str) -> String {
        let mut s = String::with_capacity(self.points.len() * 5 + 64);
        writeln!(s, "#design v={} k={} source={source}", self.v, self.k).unwrap();
        for b in self.blocks() {
            let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses a block file, returning the design and the `source` tag.
    pub fn from_block_file(text: &str) -> Result<(Self, String)> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty block file".into()))?;
        let rest = header
            .strip_prefix("#design ")
            .ok_or_else(|| Error::Format("missing #design header".into()))?;
        let (mut v, mut k, mut source) = (None, None, String::new());
        for field in rest.split_whitespace() {
            match field.split_once('=') {
                Some(("v", x)) => v = x.parse::<usize>().ok(),
                Some(("k", x)) => k = x.parse::<usize>().ok(),
                Some(("source", x)) => source = x.to_string(),
                _ => return Err(Error::Format(format!("unknown header field {field}"))),
            }
        }
        let (v, k) = v
            .zip(k)
            .ok_or_else(|| Error::Format("header needs v= and k=".into()))?;
        let blocks = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|p| p.parse::<u32>().map_err(|e| Error::Format(e.to_string())))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((Self::new(v, k, blocks)?, source))
    }
}

/// Design formed by the supports of the weight-`w` codewords (`w ≥ 1`).
pub fn extract_design(
    code: &LinearCode,
    w: usize,
    mode: EnumerationMode,
) -> Result<DesignInstance> {
    if w == 0 {
        return Err(Error::InvalidParameters(
            "weight 0 (the zero codeword) carries no blocks".into(),
        ));
    }
    let blocks = enumerate_weight_w(code, w, mode)?;
    DesignInstance::new(code.length(), w, blocks)
}

fn binom_u64(n: u64, k: u64) -> u64 {
    binomial_big(n, k).to_u64().unwrap_or(u64::MAX)
}

/// Colex rank of a sorted t-subset: `Σ C(c_i, i+1)`.
fn colex_rank(subset: &[u32], binom: &[Vec<u64>]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binom[c as usize][i + 1] as usize)
        .sum()
}

fn colex_unrank(mut rank: u64, t: usize, binom: &[Vec<u64>]) -> Vec<u32> {
    let mut out = vec![0u32; t];
    for i in (1..=t).rev() {
        let mut c = i - 1;
        while binom[c + 1][i] <= rank {
            c += 1;
        }
        out[i - 1] = c as u32;
        rank -= binom[c][i];
    }
    out
}

/// Counts, for every t-subset of points, the blocks containing it; the design is a
/// t-design iff all counts agree.
pub fn verify_t_design(design: &DesignInstance, t: usize) -> Result<DesignVerdict> {
    let (v, k) = (design.v, design.k);
    if t == 0 || t > k {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= t <= k, got t={t} k={k}"
        )));
    }
    if design.block_count() == 0 {
        return Err(Error::InvalidParameters("design has no blocks".into()));
    }
    let slots = binom_u64(v as u64, t as u64);
    if slots > MAX_TSUBSET_COUNTERS {
        return Err(Error::Infeasible(format!(
            "C({v}, {t}) = {slots} counters exceeds {MAX_TSUBSET_COUNTERS}"
        )));
    }
    let slots = slots as usize;
    // binom[c][i] = C(c, i) for c ≤ v, i ≤ t
    let binom: Vec<Vec<u64>> = (0..=v as u64)
        .map(|c| (0..=t as u64).map(|i| binom_u64(c, i)).collect())
        .collect();

    let counts = design
        .points
        .par_chunks(k * 4096)
        .fold(
            || vec![0u32; slots],
            |mut acc, chunk| {
                let mut idx: Vec<usize> = Vec::with_capacity(t);
                let mut sub = vec![0u32; t];
                for block in chunk.chunks_exact(k) {
                    if t == 2 {
                        for (j, &b) in block.iter().enumerate().skip(1) {
                            let base = (b as usize) * (b as usize - 1) / 2;
                            for &a in &block[..j] {
                                acc[base + a as usize] += 1;
                            }
                        }
                        continue;
                    }
                    idx.clear();
                    idx.extend(0..t);
                    loop {
                        for (s, &i) in sub.iter_mut().zip(&idx) {
                            *s = block[i];
                        }
                        acc[colex_rank(&sub, &binom)] += 1;
                        let mut i = t;
                        loop {
                            if i == 0 {
                                break;
                            }
                            i -= 1;
                            if idx[i] < k - t + i {
                                break;
                            }
                            if i == 0 {
                                i = usize::MAX;
                                break;
                            }
                        }
                        if i == usize::MAX || idx[i] >= k - t + i {
                            break;
                        }
                        idx[i] += 1;
                        for j in i + 1..t {
                            idx[j] = idx[j - 1] + 1;
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u32; slots],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let lambda = counts[0];
    if let Some(pos) = counts.iter().position(|&c| c != lambda) {
        return Ok(DesignVerdict::NotDesign(Witness {
            first: colex_unrank(0, t, &binom),
            first_count: lambda as u64,
            second: colex_unrank(pos as u64, t, &binom),
            second_count: counts[pos] as u64,
        }));
    }
    let b = design.block_count() as u64;
    let implied = block_count(v as u64, k as u64, t as u64, lambda as u64)?;
    if implied != BigUint::from(b) {
        return Err(Error::Consistency(format!(
            "b={b} but λ C(v,t)/C(k,t) = {implied}"
        )));
    }
    Ok(DesignVerdict::Design(Certificate {
        t,
        lambda: lambda as u64,
        b,
    }))
}

/// `b = λ C(v,t) / C(k,t)`, failing when the quotient is not integral.
pub fn block_count(v: u64, k: u64, t: u64, lambda: u64) -> Result<BigUint> {
    let num = BigUint::from(lambda) * binomial_big(v, t);
    let den = binomial_big(k, t);
    if den.is_zero() {
        return Err(Error::InvalidParameters(format!("C({k}, {t}) = 0")));
    }
    crate::weights::exact_quotient(&num, &den).ok_or_else(|| {
        Error::InvalidParameters(format!(
            "λ C(v,t)/C(k,t) is not integral for ({v},{k},{t},{lambda})"
        ))
    })
}

/// Steiner system: a certified t-design with `t ≥ 2` and `λ = 1`.
pub fn steiner_check(design: &DesignInstance) -> Result<bool> {
    let cert = design
        .certificate()
        .ok_or_else(|| Error::InvalidParameters("design has no certificate".into()))?;
    Ok(cert.t >= 2 && cert.lambda == 1)
}

/// Necessary condition for an S(2,4,v): `v ≡ 1 or 4 (mod 12)`.
pub fn s24_admissible(v: u64) -> bool {
    matches!(v % 12, 1 | 4)
}

/// Certificate file contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: Option<u64>,
    pub b: usize,
    pub steiner: bool,
    pub witness: Option<Witness>,
}

impl CertificateRecord {
    pub fn new(design: &DesignInstance, t: usize, verdict: &DesignVerdict) -> Self {
        match verdict {
            DesignVerdict::Design(c) => Self {
                v: design.v,
                k: design.k,
                t,
                lambda: Some(c.lambda),
                b: design.block_count(),
                steiner: t >= 2 && c.lambda == 1,
                witness: None,
            },
            DesignVerdict::NotDesign(w) => Self {
                v: design.v,
                k: design.k,
                t,
                lambda: None,
                b: design.block_count(),
                steiner: false,
                witness: Some(w.clone()),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(v: u32, k: usize) -> DesignInstance {
        let mut blocks = Vec::new();
        let mut idx: Vec<u32> = (0..k as u32).collect();
        loop {
            blocks.push(idx.clone());
            let mut i = k;
            while i > 0 && idx[i - 1] == v - (k - i + 1) as u32 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        DesignInstance::new(v as usize, k, blocks).unwrap()
    }

    fn fano() -> DesignInstance {
        let lines = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        DesignInstance::new(7, 3, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn complete_pairs_design() {
        let mut d = complete(5, 2);
        assert_eq!(d.block_count(), 10);
        let v = d.certify(2).unwrap();
        assert_eq!(
            v,
            DesignVerdict::Design(Certificate {
                t: 2,
                lambda: 1,
                b: 10
            })
        );
        assert!(steiner_check(&d).unwrap());
    }

    #[test]
    fn fano_plane() {
        let mut d = fano();
        assert_eq!(d.certify(2).unwrap().certificate().unwrap().lambda, 1);
        assert!(steiner_check(&d).unwrap());
        let mut d1 = fano();
        assert_eq!(d1.certify(1).unwrap().certificate().unwrap().lambda, 3);
        assert!(!steiner_check(&d1).unwrap());
        // t=3 fails: {0,1,2} is a block, {0,1,3} is not
        match verify_t_design(&fano(), 3).unwrap() {
            DesignVerdict::NotDesign(w) => assert_ne!(w.first_count, w.second_count),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn general_t_matches_t2_path() {
        // complete 3-subsets of 8 points: a 3-(8,3,1) and 2-(8,3,6) design
        let d = complete(8, 3);
        assert_eq!(
            verify_t_design(&d, 3)
                .unwrap()
                .certificate()
                .unwrap()
                .lambda,
            1
        );
        assert_eq!(
            verify_t_design(&d, 2)
                .unwrap()
                .certificate()
                .unwrap()
                .lambda,
            6
        );
        assert_eq!(
            verify_t_design(&d, 1)
                .unwrap()
                .certificate()
                .unwrap()
                .lambda,
            21
        );
        let d = complete(9, 5);
        assert_eq!(
            verify_t_design(&d, 4)
                .unwrap()
                .certificate()
                .unwrap()
                .lambda,
            5
        );
    }

    #[test]
    fn non_design_witness() {
        let d = DesignInstance::new(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        match verify_t_design(&d, 2).unwrap() {
            DesignVerdict::NotDesign(w) => {
                assert_eq!(w.first, vec![0, 1]);
                assert_eq!(w.first_count, 1);
                assert_eq!(w.second_count, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn block_counts() {
        assert_eq!(block_count(64, 4, 2, 1).unwrap(), BigUint::from(336u32));
        assert_eq!(
            block_count(64, 6, 2, 100).unwrap(),
            BigUint::from(13_440u32)
        );
        assert_eq!(block_count(7, 3, 2, 1).unwrap(), BigUint::from(7u32));
        assert!(block_count(8, 3, 2, 1).is_err());
    }

    #[test]
    fn rank_unrank_round_trip() {
        let binom: Vec<Vec<u64>> = (0..=12u64)
            .map(|c| (0..=4u64).map(|i| binom_u64(c, i)).collect())
            .collect();
        for r in 0..binom_u64(12, 4) {
            let s = colex_unrank(r, 4, &binom);
            assert_eq!(colex_rank(&s, &binom) as u64, r);
        }
    }

    #[test]
    fn invalid_instances() {
        assert!(DesignInstance::new(4, 2, vec![vec![1, 0]]).is_err());
        assert!(DesignInstance::new(4, 2, vec![vec![0, 4]]).is_err());
        assert!(DesignInstance::new(4, 2, vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(DesignInstance::new(4, 3, vec![vec![0, 1]]).is_err());
        let d = DesignInstance::new(4, 2, vec![]).unwrap();
        assert!(verify_t_design(&d, 2).is_err());
    }

    #[test]
    fn block_file_round_trip() {
        let d = fano();
        let text = d.to_block_file("abc123");
        assert!(text.starts_with("#design v=7 k=3 source=abc123\n0 1 2\n"));
        let (back, src) = DesignInstance::from_block_file(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(src, "abc123");
    }

    #[test]
    fn admissibility() {
        assert!(s24_admissible(64));
        assert!(s24_admissible(1024));
        assert!(s24_admissible(13));
        assert!(!s24_admissible(32));
        assert!(!s24_admissible(128));
    }
}
