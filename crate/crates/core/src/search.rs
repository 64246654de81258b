//! Codeword enumeration: exhaustive Gray-code walks over the row space and a
//! syndrome meet-in-the-middle search for low-weight words.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::matrix::{self, xor_into};
use crate::gf2::BitMatrix;

/// Largest dimension walked exhaustively.
pub const EXHAUSTIVE_DIMENSION_CAP: usize = 28;
/// Largest weight handled by the meet-in-the-middle search.
pub const MITM_MAX_WEIGHT: usize = 8;
/// Largest parity-check row count (syndromes are packed in a `u128`).
pub const MITM_MAX_REDUNDANCY: usize = 128;
/// Largest number of half-subsets materialised per list.
pub const MITM_MAX_HALVES: u64 = 1 << 24;

/// Folds `f` over every codeword of the row space of `generator`.
///
/// The index space is cut into chunks walked in Gray-code order, one row update per
/// step; per-chunk states are merged with `reduce`, so the result does not depend on
/// how rayon schedules the chunks as long as `reduce` is associative and commutative.
pub fn fold_codewords<T, I, F, R>(generator: &BitMatrix, init: I, f: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[u64]) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let k = generator.rows();
    assert!(
        k <= EXHAUSTIVE_DIMENSION_CAP + 8,
        "dimension {k} too large to walk"
    );
    let chunk_bits = k.min(10);
    let per_chunk_bits = k - chunk_bits;
    let stride = generator.stride();
    (0u64..1 << chunk_bits)
        .into_par_iter()
        .map(|chunk| {
            let mut state = init();
            let start = chunk << per_chunk_bits;
            let end = (chunk + 1) << per_chunk_bits;
            let gray = start ^ (start >> 1);
            let mut word = vec![0u64; stride];
            for r in 0..k {
                if (gray >> r) & 1 == 1 {
                    xor_into(&mut word, generator.row(r));
                }
            }
            f(&mut state, &word);
            for idx in start + 1..end {
                xor_into(&mut word, generator.row(idx.trailing_zeros() as usize));
                f(&mut state, &word);
            }
            state
        })
        .reduce(&init, &reduce)
}

/// Supports of all weight-`w` codewords by exhaustive enumeration, sorted.
pub fn exhaustive_supports(code: &LinearCode, w: usize) -> Result<Vec<Vec<u32>>> {
    if code.dimension() > EXHAUSTIVE_DIMENSION_CAP {
        return Err(Error::DimensionCap {
            dimension: code.dimension(),
            cap: EXHAUSTIVE_DIMENSION_CAP,
        });
    }
    let mut out = fold_codewords(
        code.generator(),
        Vec::new,
        |acc: &mut Vec<Vec<u32>>, word| {
            if matrix::weight(word) == w {
                acc.push(matrix::ones(word).map(|p| p as u32).collect());
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    out.par_sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy)]
struct Half {
    syndrome: u128,
    len: u8,
    points: [u16; 4],
}

impl Half {
    fn first(&self) -> i32 {
        if self.len == 0 {
            i32::MAX
        } else {
            self.points[0] as i32
        }
    }

    fn last(&self) -> i32 {
        if self.len == 0 {
            -1
        } else {
            self.points[self.len as usize - 1] as i32
        }
    }
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Meet-in-the-middle over the parity-check columns of `code`.
struct Mitm {
    length: usize,
    columns: Vec<u128>,
}

impl Mitm {
    fn new(code: &LinearCode, w: usize) -> Result<Self> {
        let h = code.parity_check();
        if w > MITM_MAX_WEIGHT {
            return Err(Error::Infeasible(format!(
                "weight {w} above the meet-in-the-middle cap {MITM_MAX_WEIGHT}"
            )));
        }
        if h.rows() > MITM_MAX_REDUNDANCY {
            return Err(Error::Infeasible(format!(
                "{} parity checks exceed the syndrome width {MITM_MAX_REDUNDANCY}",
                h.rows()
            )));
        }
        if code.length() > u16::MAX as usize {
            return Err(Error::Infeasible(format!(
                "length {} too large",
                code.length()
            )));
        }
        let half = w.div_ceil(2) as u64;
        let count = binomial_u64(code.length() as u64, half);
        if count > MITM_MAX_HALVES {
            return Err(Error::Infeasible(format!(
                "binom({}, {half}) = {count} half-subsets exceeds the bound {MITM_MAX_HALVES}",
                code.length()
            )));
        }
        let columns = (0..code.length())
            .map(|j| {
                let c = h.column(j);
                c.first().copied().unwrap_or(0) as u128
                    | (c.get(1).copied().unwrap_or(0) as u128) << 64
            })
            .collect();
        Ok(Self {
            length: code.length(),
            columns,
        })
    }

    /// All `size`-subsets with their syndromes, sorted by syndrome then lexicographically.
    fn halves(&self, size: usize) -> Vec<Half> {
        let mut out = Vec::with_capacity(binomial_u64(self.length as u64, size as u64) as usize);
        let mut idx: Vec<usize> = (0..size).collect();
        if size > self.length {
            return out;
        }
        loop {
            let mut points = [0u16; 4];
            let mut syndrome = 0u128;
            for (slot, &p) in idx.iter().enumerate() {
                points[slot] = p as u16;
                syndrome ^= self.columns[p];
            }
            out.push(Half {
                syndrome,
                len: size as u8,
                points,
            });
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    out.par_sort_unstable_by_key(|h| (h.syndrome, h.points));
                    return out;
                }
                i -= 1;
                if idx[i] < self.length - size + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Pairs `(a, b)` from buckets of equal syndrome with `max(a) < min(b)`.
    /// Each weight-`w` codeword arises exactly once: `a` is its `floor(w/2)` smallest points.
    fn fold_pairs<T, I, F, R>(&self, w: usize, init: I, f: F, reduce: R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(&mut T, &Half, &Half) + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let small = self.halves(w / 2);
        let large = if w.is_multiple_of(2) {
            None
        } else {
            Some(self.halves(w / 2 + 1))
        };
        let large_ref: &[Half] = large.as_deref().unwrap_or(&small);
        let buckets = bucket_bounds(&small);
        buckets
            .par_iter()
            .map(|&(lo, hi)| {
                let mut state = init();
                let syn = small[lo].syndrome;
                let start = large_ref.partition_point(|h| h.syndrome < syn);
                let end = large_ref.partition_point(|h| h.syndrome <= syn);
                for a in &small[lo..hi] {
                    for b in &large_ref[start..end] {
                        if a.last() < b.first() {
                            f(&mut state, a, b);
                        }
                    }
                }
                state
            })
            .reduce(&init, &reduce)
    }
}

fn bucket_bounds(sorted: &[Half]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut lo = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i].syndrome != sorted[lo].syndrome {
            out.push((lo, i));
            lo = i;
        }
    }
    out
}

fn join(a: &Half, b: &Half) -> Vec<u32> {
    a.points[..a.len as usize]
        .iter()
        .chain(&b.points[..b.len as usize])
        .map(|&p| p as u32)
        .collect()
}

/// Supports of all weight-`w` codewords by syndrome meet-in-the-middle, sorted.
pub fn mitm_supports(code: &LinearCode, w: usize) -> Result<Vec<Vec<u32>>> {
    if w == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mitm = Mitm::new(code, w)?;
    let mut out = mitm.fold_pairs(
        w,
        Vec::new,
        |acc: &mut Vec<Vec<u32>>, a, b| acc.push(join(a, b)),
        |mut x, y| {
            x.extend(y);
            x
        },
    );
    out.par_sort_unstable();
    Ok(out)
}

/// Number of weight-`w` codewords, by meet-in-the-middle.
pub fn mitm_count(code: &LinearCode, w: usize) -> Result<u64> {
    if w == 0 {
        return Ok(1);
    }
    let mitm = Mitm::new(code, w)?;
    Ok(mitm.fold_pairs(w, || 0u64, |c, _, _| *c += 1, |a, b| a + b))
}

/// Whether a codeword of weight exactly `w` exists.
pub fn weight_exists(code: &LinearCode, w: usize) -> Result<bool> {
    if w == 0 {
        return Ok(true);
    }
    if code.dimension() <= EXHAUSTIVE_DIMENSION_CAP {
        return Ok(!exhaustive_supports(code, w)?.is_empty());
    }
    Ok(mitm_count(code, w)? > 0)
}
