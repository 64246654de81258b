//! Weight distributions: exhaustive enumeration, the MacWilliams transform,
//! closed forms for the `C_e` family, and Pless power-moment cross-checks.
//!
//! Every count is an exact [`BigUint`]; the primal codes at `m = 10` have `2^1003`
//! codewords.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{gcd, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::matrix;
use crate::search::{self, EXHAUSTIVE_DIMENSION_CAP};

#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    length: usize,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(length: usize, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != length + 1 {
            return Err(Error::InvalidParameters(format!(
                "{} counts for length {length}",
                counts.len()
            )));
        }
        Ok(Self { length, counts })
    }

    /// Builds from `(weight, count)` pairs; unlisted weights are zero.
    pub fn from_sparse<I, C>(length: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigUint>,
    {
        let mut counts = vec![BigUint::zero(); length + 1];
        for (i, c) in entries {
            if i > length {
                return Err(Error::InvalidParameters(format!(
                    "weight {i} exceeds length {length}"
                )));
            }
            counts[i] += c.into();
        }
        Ok(Self { length, counts })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    /// Nonzero `(weight, count)` entries, ascending by weight.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `log2` of the total when it is a power of two, i.e. the code dimension.
    pub fn dimension(&self) -> Option<usize> {
        let t = self.total();
        let bits = t.bits();
        (bits > 0 && t == BigUint::one() << (bits - 1)).then(|| bits as usize - 1)
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        self.nonzero().map(|(i, _)| i).find(|&i| i > 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.length).all(|i| self.counts[i] == self.counts[self.length - i])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution(n={}) {{", self.length)?;
        for (i, (w, c)) in self.nonzero().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {w}: {c}")?;
        }
        write!(f, " }}")
    }
}

struct SparseCounts<'a>(&'a [BigUint]);

impl Serialize for SparseCounts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nz: Vec<_> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut map = s.serialize_map(Some(nz.len()))?;
        for (i, c) in nz {
            map.serialize_entry(&i.to_string(), &c.to_str_radix(10))?;
        }
        map.end()
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            length: usize,
            counts: SparseCounts<'a>,
        }
        Repr {
            length: self.length,
            counts: SparseCounts(&self.counts),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            length: usize,
            counts: BTreeMap<String, String>,
        }
        let r = Repr::deserialize(d)?;
        let mut entries = Vec::with_capacity(r.counts.len());
        for (k, v) in r.counts {
            let i: usize = k.parse().map_err(D::Error::custom)?;
            let c: BigUint = v.parse().map_err(D::Error::custom)?;
            entries.push((i, c));
        }
        WeightDistribution::from_sparse(r.length, entries).map_err(D::Error::custom)
    }
}

/// Exact distribution by walking all `2^k` codewords (`k ≤ 28`).
pub fn brute_weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    if code.dimension() > EXHAUSTIVE_DIMENSION_CAP {
        return Err(Error::DimensionCap {
            dimension: code.dimension(),
            cap: EXHAUSTIVE_DIMENSION_CAP,
        });
    }
    let n = code.length();
    let hist = search::fold_codewords(
        code.generator(),
        || vec![0u64; n + 1],
        |h, word| h[matrix::weight(word)] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    WeightDistribution::new(n, hist.into_iter().map(BigUint::from).collect())
}

fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * BigUint::from(n - k) / BigUint::from(k + 1);
    }
    row
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

/// Dual distribution from `A^⊥(z) = 2^{-k} (1+z)^n A((1-z)/(1+z))`.
///
/// The polynomials `(1-z)^i (1+z)^{n-i}` are produced one from the next by an exact
/// division by `(1+z)` and a multiplication by `(1-z)`.
pub fn macwilliams_transform(
    wd: &WeightDistribution,
    dimension: usize,
) -> Result<WeightDistribution> {
    let n = wd.length;
    if wd.total() != BigUint::one() << dimension {
        return Err(Error::Consistency(format!(
            "counts sum to {}, not 2^{dimension}",
            wd.total()
        )));
    }
    let mut poly: Vec<BigInt> = binomial_row(n).into_iter().map(BigInt::from).collect();
    let mut acc = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        if i > 0 {
            // divide by (1+z)
            for j in 1..=n {
                let (lo, hi) = poly.split_at_mut(j);
                hi[0] -= &lo[j - 1];
            }
            debug_assert!(poly[n].is_zero());
            // multiply by (1-z)
            for j in (1..=n).rev() {
                let (lo, hi) = poly.split_at_mut(j);
                hi[0] -= &lo[j - 1];
            }
        }
        let a = &wd.counts[i];
        if !a.is_zero() {
            let a = BigInt::from(a.clone());
            for (dst, p) in acc.iter_mut().zip(&poly) {
                if !p.is_zero() {
                    *dst += &a * p;
                }
            }
        }
    }
    let mut counts = Vec::with_capacity(n + 1);
    for (j, v) in acc.into_iter().enumerate() {
        let q = &v >> dimension;
        if (&q << dimension) != v || v.is_negative() {
            return Err(Error::Consistency(format!(
                "coefficient {j} is not a non-negative multiple of 2^{dimension}"
            )));
        }
        counts.push(q.to_biguint().expect("non-negative"));
    }
    WeightDistribution::new(n, counts)
}

fn pow2(e: u32) -> i128 {
    1i128 << e
}

fn exact_div(num: i128, den: i128) -> Result<i128> {
    if num % den != 0 {
        return Err(Error::Consistency(format!(
            "{num} is not divisible by {den}"
        )));
    }
    Ok(num / den)
}

/// Which of the three `(m, e)` regimes applies to `C_e^⊥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KasamiCase {
    /// `m / gcd(m, e)` odd; carries `h = (m - gcd(m, e)) / 2`.
    OddQuotient { h: u32 },
    /// `m` even and `e = m/2`.
    HalfM,
    /// `m / gcd(m, e)` even and `e < m/2`; carries `ℓ = 2 gcd(m, e)`.
    EvenQuotient { l: u32 },
}

pub fn kasami_case(m: u32, e: u32) -> Result<KasamiCase> {
    if m < 4 || e == 0 || 2 * e > m || m > 40 {
        return Err(Error::InvalidParameters(format!(
            "need m >= 4 and 1 <= e <= m/2, got m={m} e={e}"
        )));
    }
    let g = gcd(m, e);
    Ok(if m.is_multiple_of(2) && 2 * e == m {
        KasamiCase::HalfM
    } else if (m / g) % 2 == 1 {
        KasamiCase::OddQuotient { h: (m - g) / 2 }
    } else {
        KasamiCase::EvenQuotient { l: 2 * g }
    })
}

/// Closed-form distribution of `C_e^⊥` (or of the dual of the extended code).
pub fn closed_form_dual_wd(m: u32, e: u32, extended: bool) -> Result<WeightDistribution> {
    let case = kasami_case(m, e)?;
    let q = pow2(m); // 2^m
    let half = pow2(m - 1);
    let n1 = q - 1;
    let mut entries: Vec<(i128, i128)> = vec![(0, 1)];
    match (case, extended) {
        (KasamiCase::OddQuotient { h }, false) => {
            let off = pow2(m - 1 - h);
            entries.push((half - off, n1 * (pow2(h) + 1) * pow2(h - 1)));
            entries.push((half, n1 * (q - pow2(2 * h) + 1)));
            entries.push((half + off, n1 * (pow2(h) - 1) * pow2(h - 1)));
        }
        (KasamiCase::OddQuotient { h }, true) => {
            let off = pow2(m - 1 - h);
            entries.push((half - off, n1 * pow2(2 * h)));
            entries.push((half, n1 * (2 * q - pow2(2 * h + 1) + 2)));
            entries.push((half + off, n1 * pow2(2 * h)));
        }
        (KasamiCase::HalfM, false) => {
            let off = pow2((m - 2) / 2);
            let r = pow2(m / 2);
            entries.push((half - off, (r - 1) * (half + off)));
            entries.push((half, n1));
            entries.push((half + off, (r - 1) * (half - off)));
        }
        (KasamiCase::HalfM, true) => {
            let off = pow2((m - 2) / 2);
            let r = pow2(m / 2);
            entries.push((half - off, (r - 1) * q));
            entries.push((half, 2 * q - 2));
            entries.push((half + off, (r - 1) * q));
        }
        (KasamiCase::EvenQuotient { l }, false) => {
            let big = pow2((m + l - 2) / 2);
            let small = pow2((m - 2) / 2);
            let d = pow2(l / 2) + 1;
            let a = pow2((m - l - 2) / 2);
            let s = pow2((m - l) / 2);
            let r = pow2(m / 2);
            entries.push((half - big, exact_div(a * (s + 1) * n1, d)?));
            entries.push((half - small, exact_div(big * (r + 1) * n1, d)?));
            entries.push((half, ((pow2(l / 2) - 1) * pow2(m - l) + 1) * n1));
            entries.push((half + small, exact_div(big * (r - 1) * n1, d)?));
            entries.push((half + big, exact_div(a * (s - 1) * n1, d)?));
        }
        (KasamiCase::EvenQuotient { l }, true) => {
            let big = pow2((m + l - 2) / 2);
            let small = pow2((m - 2) / 2);
            let d = pow2(l / 2) + 1;
            let outer = exact_div(pow2(m - l) * n1, d)?;
            let inner = exact_div(pow2((2 * m + l) / 2) * n1, d)?;
            entries.push((half - big, outer));
            entries.push((half - small, inner));
            entries.push((half, 2 * ((pow2(l / 2) - 1) * pow2(m - l) + 1) * n1));
            entries.push((half + small, inner));
            entries.push((half + big, outer));
        }
    }
    if extended {
        entries.push((q, 1));
    }
    let length = if extended { q } else { n1 } as usize;
    let wd = WeightDistribution::from_sparse(
        length,
        entries.into_iter().map(|(w, c)| {
            (
                w as usize,
                BigUint::from(u128::try_from(c).expect("counts are non-negative")),
            )
        }),
    )?;
    let dim = match case {
        KasamiCase::HalfM => 3 * m as usize / 2,
        _ => 2 * m as usize,
    } + usize::from(extended);
    if wd.total() != BigUint::one() << dim {
        return Err(Error::Consistency(format!(
            "closed form for m={m} e={e} does not sum to 2^{dim}"
        )));
    }
    Ok(wd)
}

/// `u` and `v` of the weight enumerator `1 + u z^a + v z^{2^{m-1}} + u z^b + z^{2^m}`
/// of the dual of the extended code, `m ≡ 2 (mod 4)`, `gcd(m, e) = 2`.
pub fn dual_enumerator_uv(m: u32) -> (BigUint, BigUint) {
    let q = BigUint::one() << m;
    let n1 = &q - 1u32;
    let u = &n1 * (BigUint::one() << (m - 2));
    let v = &n1 * ((BigUint::one() << (m + 1)) - (BigUint::one() << (m - 1)) + 2u32);
    (u, v)
}

/// Closed-form distribution of the extended code `C̄_e` for `m ≡ 2 (mod 4)`, `gcd(m, e) = 2`:
///
/// `2^{2m+1} Ā_k = (1+(-1)^k) C(2^m, k) + [k even] (-1)^{k/2} C(2^{m-1}, k/2) v
///                 + u Σ_{i+j=k} ((-1)^i + (-1)^j) C(a, i) C(b, j)`
/// with `a = 2^{m-1} - 2^{m/2}`, `b = 2^{m-1} + 2^{m/2}`.
pub fn extended_primal_wd_closed_form(m: u32) -> Result<WeightDistribution> {
    if m % 4 != 2 || !(6..=16).contains(&m) {
        return Err(Error::InvalidParameters(format!(
            "need m ≡ 2 (mod 4), 6 <= m <= 16, got {m}"
        )));
    }
    let len = 1usize << m;
    let half = len / 2;
    let a = half - (1usize << (m / 2));
    let b = half + (1usize << (m / 2));
    let (u, v) = dual_enumerator_uv(m);
    let (u, v) = (BigInt::from(u), BigInt::from(v));
    let row_len = binomial_row(len);
    let row_half = binomial_row(half);
    let row_a: Vec<BigInt> = binomial_row(a).into_iter().map(BigInt::from).collect();
    let row_b: Vec<BigInt> = binomial_row(b).into_iter().map(BigInt::from).collect();
    let scale = 2 * m + 1;
    let mut counts = Vec::with_capacity(len + 1);
    for k in 0..=len {
        let even = k % 2 == 0;
        let mut total = BigInt::zero();
        if even {
            total += BigInt::from(row_len[k].clone()) * 2;
            let t = BigInt::from(row_half[k / 2].clone()) * &v;
            if (k / 2) % 2 == 0 {
                total += t;
            } else {
                total -= t;
            }
        }
        // (-1)^i + (-1)^j is 2 (both even), -2 (both odd), 0 otherwise
        let mut cross = BigInt::zero();
        #[allow(clippy::needless_range_loop)]
        for i in k.saturating_sub(b)..=k.min(a) {
            let j = k - i;
            if i % 2 != j % 2 {
                continue;
            }
            let t = &row_a[i] * &row_b[j];
            if i % 2 == 0 {
                cross += t;
            } else {
                cross -= t;
            }
        }
        total += cross * 2 * &u;
        let q = &total >> scale;
        if (&q << scale) != total || q.sign() == Sign::Minus {
            return Err(Error::Consistency(format!(
                "Ā_{k} is not a non-negative integer"
            )));
        }
        counts.push(q.to_biguint().expect("non-negative"));
    }
    WeightDistribution::new(len, counts)
}

fn stirling2(r: usize, k: usize) -> BigInt {
    let mut table = vec![vec![BigInt::zero(); r + 1]; r + 1];
    table[0][0] = BigInt::one();
    for i in 1..=r {
        for j in 1..=i {
            table[i][j] = &table[i - 1][j] * BigInt::from(j) + &table[i - 1][j - 1];
        }
    }
    table[r][k].clone()
}

/// Checks the first five Pless power moments `Σ i^r A_i`, `r = 0..4`, against the
/// values the low-order dual counts `B_0..B_r` imply:
///
/// `Σ_i i^r A_i = Σ_{j≤r} (-1)^j B_j Σ_{j≤ν≤r} ν! S(r,ν) 2^{k-ν} C(n-j, n-ν)`
///
/// where `k` is the dimension of the code with distribution `wd`. `dims` is
/// `(k, dimension of the dual)`.
pub fn power_moment_check(
    wd: &WeightDistribution,
    dual_wd: &WeightDistribution,
    dims: (usize, usize),
) -> bool {
    let n = wd.length;
    if dual_wd.length != n || dims.0 + dims.1 != n {
        return false;
    }
    if wd.total() != BigUint::one() << dims.0 || dual_wd.total() != BigUint::one() << dims.1 {
        return false;
    }
    let k = dims.0;
    (0..=4usize).all(|r| {
        // both sides scaled by 2^r so every power of two is integral
        let lhs: BigInt = wd
            .nonzero()
            .map(|(i, c)| BigInt::from(c.clone()) * BigInt::from(i).pow(r as u32))
            .sum::<BigInt>()
            << r;
        let mut rhs = BigInt::zero();
        for j in 0..=r.min(n) {
            let bj = BigInt::from(dual_wd.counts[j].clone());
            if bj.is_zero() {
                continue;
            }
            let mut inner = BigInt::zero();
            for nu in j..=r.min(n) {
                let fact: BigInt = (1..=nu).map(BigInt::from).product();
                let term = fact
                    * stirling2(r, nu)
                    * (BigInt::one() << (k + r - nu))
                    * BigInt::from(binomial((n - j) as u64, (n - nu) as u64));
                inner += term;
            }
            if j % 2 == 0 {
                rhs += bj * inner;
            } else {
                rhs -= bj * inner;
            }
        }
        lhs == rhs
    })
}

/// Number of weight-`w` codewords as a `u64`, if it fits.
pub fn count_u64(wd: &WeightDistribution, w: usize) -> Option<u64> {
    wd.counts.get(w).and_then(|c| c.to_u64())
}

/// `C(n, k)` as a big integer.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    binomial(n, k)
}

/// Divides exactly, failing if there is a remainder.
pub fn exact_quotient(num: &BigUint, den: &BigUint) -> Option<BigUint> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_cyclic, dual, extend};
    use crate::gf2::{BitMatrix, Gf2mField};

    fn wd(length: usize, entries: &[(usize, u64)]) -> WeightDistribution {
        WeightDistribution::from_sparse(length, entries.iter().map(|&(i, c)| (i, BigUint::from(c))))
            .unwrap()
    }

    fn ce(m: u32, e: u32) -> LinearCode {
        build_cyclic(&Gf2mField::new(m).unwrap(), &[e].into_iter().collect()).unwrap()
    }

    #[test]
    fn zero_code_distribution() {
        let z = LinearCode::from_generator(&BitMatrix::zeros(0, 0));
        assert_eq!(brute_weight_distribution(&z).unwrap(), wd(0, &[(0, 1)]));
    }

    #[test]
    fn brute_on_extended_dual_m6_e2() {
        let d = dual(&extend(&ce(6, 2)).unwrap());
        let got = brute_weight_distribution(&d).unwrap();
        assert_eq!(
            got,
            wd(64, &[(0, 1), (24, 1008), (32, 6174), (40, 1008), (64, 1)])
        );
        let (u, v) = dual_enumerator_uv(6);
        assert_eq!((u, v), (BigUint::from(1008u32), BigUint::from(6174u32)));
    }

    #[test]
    fn brute_on_dual_m6_e3() {
        let got = brute_weight_distribution(&dual(&ce(6, 3))).unwrap();
        assert_eq!(got, wd(63, &[(0, 1), (28, 252), (32, 63), (36, 196)]));
        assert_eq!(closed_form_dual_wd(6, 3, false).unwrap(), got);
    }

    #[test]
    fn brute_refuses_large_dimension() {
        assert!(matches!(
            brute_weight_distribution(&ce(6, 2)),
            Err(Error::DimensionCap { cap: 28, .. })
        ));
    }

    #[test]
    fn macwilliams_of_full_space() {
        let full = wd(3, &[(0, 1), (1, 3), (2, 3), (3, 1)]);
        assert_eq!(macwilliams_transform(&full, 3).unwrap(), wd(3, &[(0, 1)]));
    }

    #[test]
    fn macwilliams_hamming_to_simplex() {
        let hamming = wd(7, &[(0, 1), (3, 7), (4, 7), (7, 1)]);
        assert_eq!(
            macwilliams_transform(&hamming, 4).unwrap(),
            wd(7, &[(0, 1), (4, 7)])
        );
    }

    #[test]
    fn macwilliams_rejects_invalid_input() {
        let bogus = wd(3, &[(0, 1), (1, 3)]);
        assert!(matches!(
            macwilliams_transform(&bogus, 2),
            Err(Error::Consistency(_))
        ));
        let bad_total = wd(3, &[(0, 1), (1, 2)]);
        assert!(macwilliams_transform(&bad_total, 1).is_err());
    }

    #[test]
    fn macwilliams_gives_steiner_block_count() {
        let dual_wd = closed_form_dual_wd(6, 2, true).unwrap();
        let primal = macwilliams_transform(&dual_wd, 13).unwrap();
        assert_eq!(primal.count(4), &BigUint::from(336u32));
        assert_eq!(macwilliams_transform(&primal, 51).unwrap(), dual_wd);
    }

    #[test]
    fn closed_form_table_vi_m8_e2() {
        let got = closed_form_dual_wd(8, 2, true).unwrap();
        let want = wd(
            256,
            &[
                (0, 1),
                (96, 816),
                (120, 52224),
                (128, 24990),
                (136, 52224),
                (160, 816),
                (256, 1),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn closed_form_table_v_m6_e3() {
        let got = closed_form_dual_wd(6, 3, true).unwrap();
        assert_eq!(
            got,
            wd(64, &[(0, 1), (28, 448), (32, 126), (36, 448), (64, 1)])
        );
    }

    #[test]
    fn case_dispatch() {
        assert_eq!(kasami_case(6, 2).unwrap(), KasamiCase::OddQuotient { h: 2 });
        assert_eq!(kasami_case(6, 3).unwrap(), KasamiCase::HalfM);
        assert_eq!(
            kasami_case(8, 2).unwrap(),
            KasamiCase::EvenQuotient { l: 4 }
        );
        assert_eq!(kasami_case(4, 2).unwrap(), KasamiCase::HalfM);
        assert!(kasami_case(3, 1).is_err());
        assert!(kasami_case(8, 5).is_err());
    }

    #[test]
    fn primal_closed_form_m6_low_weights() {
        let a = extended_primal_wd_closed_form(6).unwrap();
        assert_eq!(a.count(4), &BigUint::from(336u32));
        assert_eq!(a.count(6), &BigUint::from(13_440u32));
        assert_eq!(a.count(8), &BigUint::from(1_130_040u32));
        assert!(a.nonzero().all(|(k, _)| k % 2 == 0));
        assert_eq!(a.min_distance(), Some(4));
        assert_eq!(a.dimension(), Some(51));
    }

    #[test]
    fn primal_closed_form_rejects_other_m() {
        assert!(extended_primal_wd_closed_form(8).is_err());
    }

    #[test]
    fn power_moments() {
        let hamming = wd(7, &[(0, 1), (3, 7), (4, 7), (7, 1)]);
        let simplex = wd(7, &[(0, 1), (4, 7)]);
        assert!(power_moment_check(&hamming, &simplex, (4, 3)));
        assert!(power_moment_check(&simplex, &hamming, (3, 4)));

        let primal = extended_primal_wd_closed_form(6).unwrap();
        let dual_wd = closed_form_dual_wd(6, 2, true).unwrap();
        assert!(power_moment_check(&primal, &dual_wd, (51, 13)));
        assert!(power_moment_check(&dual_wd, &primal, (13, 51)));

        let mut perturbed = hamming.counts.clone();
        perturbed[3] += 1u32;
        perturbed[4] -= 1u32;
        let perturbed = WeightDistribution::new(7, perturbed).unwrap();
        assert!(!power_moment_check(&perturbed, &simplex, (4, 3)));
    }

    #[test]
    fn json_round_trip_and_format() {
        let a = closed_form_dual_wd(6, 2, true).unwrap();
        let s = a.to_json();
        assert!(s.contains("\"24\": \"1008\""));
        assert_eq!(WeightDistribution::from_json(&s).unwrap(), a);
        let big = extended_primal_wd_closed_form(10).unwrap();
        assert_eq!(WeightDistribution::from_json(&big.to_json()).unwrap(), big);
    }

    #[test]
    fn json_keys_are_numeric_order() {
        let s = wd(12, &[(0, 1), (2, 3), (10, 3)]).to_json();
        assert!(s.find("\"2\"").unwrap() < s.find("\"10\"").unwrap());
    }
}
