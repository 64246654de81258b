use std::fmt;

use crate::error::{Error, Result};

/// Number of `u64` words needed for `bits` bits.
pub fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

pub fn weight(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn get_bit(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

pub fn set_bit(words: &mut [u64], i: usize, value: bool) {
    let mask = 1u64 << (i % 64);
    if value {
        words[i / 64] |= mask;
    } else {
        words[i / 64] &= !mask;
    }
}

pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Positions of set bits, ascending.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

fn lowest_one(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|wi| wi * 64 + words[wi].trailing_zeros() as usize)
}

/// Dense GF(2) matrix with bit-packed rows.
///
/// Bit `j` of row `i` lives in word `j / 64` of that row at bit position `j % 64`.
/// Padding bits past `cols` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from packed rows; each row must hold exactly `words_for(cols)` words.
    pub fn from_word_rows<'a, I>(cols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [u64]>,
    {
        let stride = words_for(cols);
        let mut data = Vec::new();
        let mut count = 0;
        for r in rows {
            assert_eq!(r.len(), stride, "row width mismatch");
            data.extend_from_slice(r);
            count += 1;
        }
        let mut m = Self {
            rows: count,
            cols,
            stride,
            data,
        };
        m.clear_padding();
        m
    }

    /// Builds from rows of 0/1 characters, e.g. `["110", "011"]`.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, c) in r.chars().enumerate() {
                m.set(i, j, c == '1');
            }
        }
        m
    }

    fn clear_padding(&mut self) {
        let tail = self.cols % 64;
        if tail == 0 || self.stride == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        for i in 0..self.rows {
            self.data[i * self.stride + self.stride - 1] &= mask;
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        get_bit(self.row(i), j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        set_bit(self.row_mut(i), j, value)
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.stride);
        self.data.extend_from_slice(row);
        self.rows += 1;
        self.clear_padding();
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.data.split_at_mut(hi * self.stride);
        left[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut right[..self.stride]);
    }

    /// `row[dst] ^= row[src]`, touching words from `from_word` on.
    fn xor_rows(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (src_row, dst_row) = if src < dst {
            let (l, r) = self.data.split_at_mut(dst * s);
            (&l[src * s..(src + 1) * s], &mut r[..s])
        } else {
            let (l, r) = self.data.split_at_mut(src * s);
            (&r[..s], &mut l[dst * s..(dst + 1) * s])
        };
        xor_into(&mut dst_row[from_word..], &src_row[from_word..]);
    }

    /// Reduced row echelon form and its pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(p, r);
            let w = c / 64;
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_rows(r, i, w);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.stride);
        m.rows = r;
        (m, pivots)
    }

    /// Rank by insertion into an XOR basis keyed on lowest set bit.
    pub fn rank(&self) -> usize {
        let mut basis: Vec<Option<Vec<u64>>> = vec![None; self.cols];
        let mut rank = 0;
        for row in self.row_iter() {
            let mut v = row.to_vec();
            while let Some(p) = lowest_one(&v) {
                match &basis[p] {
                    Some(b) => xor_into(&mut v[p / 64..], &b[p / 64..]),
                    None => {
                        basis[p] = Some(v);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    /// Basis of `{x : M x^T = 0}`, one row per free column of the RREF.
    pub fn nullspace_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = BitMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in ones(self.row(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn multiply(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; rhs.stride];
            for k in ones(self.row(i)) {
                xor_into(&mut acc, rhs.row(k));
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        Ok(out)
    }

    /// `M v^T` for a packed vector of length `cols`; the result is packed over `rows` bits.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; words_for(self.rows)];
        for i in 0..self.rows {
            let parity = self
                .row(i)
                .iter()
                .zip(v)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                & 1;
            if parity == 1 {
                set_bit(&mut out, i, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Column `j` packed over `rows` bits.
    pub fn column(&self, j: usize) -> Vec<u64> {
        let mut out = vec![0u64; words_for(self.rows)];
        for i in 0..self.rows {
            if self.get(i, j) {
                set_bit(&mut out, i, true);
            }
        }
        out
    }

    /// Row-major blob, `ceil(cols / 8)` bytes per row, bit `j` at byte `j / 8`, bit `j % 8`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let per_row = self.cols.div_ceil(8);
        let mut out = Vec::with_capacity(per_row * self.rows);
        for row in self.row_iter() {
            let bytes: Vec<u8> = row.iter().flat_map(|w| w.to_le_bytes()).collect();
            out.extend_from_slice(&bytes[..per_row]);
        }
        out
    }

    pub fn from_bytes(rows: usize, cols: usize, bytes: &[u8]) -> Result<BitMatrix> {
        let per_row = cols.div_ceil(8);
        if bytes.len() != per_row * rows {
            return Err(Error::Format(format!(
                "matrix blob has {} bytes, expected {} for {rows}x{cols}",
                bytes.len(),
                per_row * rows
            )));
        }
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            let chunk = &bytes[i * per_row..(i + 1) * per_row];
            let row = m.row_mut(i);
            for (b, &byte) in chunk.iter().enumerate() {
                row[b / 8] |= (byte as u64) << (8 * (b % 8));
            }
        }
        let before = m.data.clone();
        m.clear_padding();
        if m.data != before {
            return Err(Error::Format("nonzero padding bits in matrix blob".into()));
        }
        Ok(m)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(16) {
            let s: String = (0..self.cols.min(80))
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn nullspace_of_all_ones_row() {
        let m = BitMatrix::from_strs(&["111"]);
        let ns = m.nullspace_basis();
        assert_eq!(ns.rows(), 2);
        for row in ns.row_iter() {
            assert_eq!(weight(row) % 2, 0);
        }
        assert_eq!(ns.rank(), 2);
    }

    #[test]
    fn multiply_shape_mismatch() {
        let a = BitMatrix::zeros(2, 3);
        let b = BitMatrix::zeros(2, 3);
        assert!(matches!(a.multiply(&b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn rref_small_example() {
        let m = BitMatrix::from_strs(&["0110", "1100", "1010"]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, BitMatrix::from_strs(&["1010", "0110"]));
    }

    #[test]
    fn blob_round_trip_and_bit_order() {
        let m = BitMatrix::from_strs(&["100000001", "010000000"]);
        let bytes = m.to_bytes();
        assert_eq!(bytes, vec![0b0000_0001, 0b0000_0001, 0b0000_0010, 0]);
        assert_eq!(BitMatrix::from_bytes(2, 9, &bytes).unwrap(), m);
    }

    fn matrix() -> impl Strategy<Value = BitMatrix> {
        (1usize..12, 1usize..140).prop_flat_map(|(r, c)| {
            prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
                let mut m = BitMatrix::zeros(r, c);
                for (k, b) in bits.into_iter().enumerate() {
                    m.set(k / c, k % c, b);
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in matrix()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(&r, &r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn rank_equals_transpose_rank(m in matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), m.rref().0.rows());
        }

        #[test]
        fn rank_nullity(m in matrix()) {
            let ns = m.nullspace_basis();
            prop_assert_eq!(m.rank() + ns.rows(), m.cols());
            prop_assert!(m.multiply(&ns.transpose()).unwrap().is_zero());
        }
    }
}
