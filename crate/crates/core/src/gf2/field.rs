use crate::cyclotomic::coset;
use crate::error::{Error, Result};
use crate::gf2::Gf2Poly;

pub const MIN_M: u32 = 2;
pub const MAX_M: u32 = 20;

/// Element of GF(2^m) in polynomial basis: bit `i` is the coefficient of `α^i`.
pub type Elem = u32;

/// GF(2^m) with log/antilog tables relative to the root `α` of a primitive modulus.
#[derive(Clone, Debug)]
pub struct Gf2mField {
    m: u32,
    modulus: Gf2Poly,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// `antilog[i] = α^i` for `0 <= i < n`.
    antilog: Vec<Elem>,
}

impl PartialEq for Gf2mField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Gf2mField {}

impl Gf2mField {
    /// Builds GF(2^m) over the smallest-encoding primitive polynomial of degree `m`.
    pub fn new(m: u32) -> Result<Self> {
        Self::build(m, None)
    }

    pub fn with_modulus(m: u32, modulus: Gf2Poly) -> Result<Self> {
        Self::build(m, Some(modulus))
    }

    pub fn build(m: u32, modulus: Option<Gf2Poly>) -> Result<Self> {
        if !(MIN_M..=MAX_M).contains(&m) {
            return Err(Error::FieldDegreeOutOfRange { m });
        }
        let modulus = match modulus {
            Some(f) => {
                check_primitive(m, &f)?;
                f
            }
            None => default_modulus(m),
        };
        let bits = modulus.to_bits().expect("degree <= 20") as u32;
        let n = (1u32 << m) - 1;
        let mut antilog = Vec::with_capacity(n as usize);
        let mut log = vec![0u32; 1 << m];
        let mut x: u32 = 1;
        for i in 0..n {
            antilog.push(x);
            log[x as usize] = i;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= bits;
            }
        }
        debug_assert_eq!(x, 1, "α^n = 1");
        Ok(Self {
            m,
            modulus,
            log,
            antilog,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Multiplicative order `2^m - 1`.
    pub fn n(&self) -> u32 {
        (1 << self.m) - 1
    }

    /// Field size `2^m`.
    pub fn size(&self) -> u32 {
        1 << self.m
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus.to_bits().expect("degree <= 20")
    }

    /// `α^e` for any exponent, reduced mod n.
    pub fn alpha_pow(&self, e: u64) -> Elem {
        self.antilog[(e % self.n() as u64) as usize]
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, x: Elem) -> u32 {
        debug_assert!(x != 0);
        self.log[x as usize]
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        let n = self.n();
        self.antilog[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.antilog[((self.n() - l) % self.n()) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.mul(a, self.inv(b)?))
    }

    /// `x^s` with the convention `0^0 = 1`.
    pub fn pow(&self, x: Elem, s: u64) -> Elem {
        if x == 0 {
            return u32::from(s == 0);
        }
        self.alpha_pow(self.log[x as usize] as u64 * s)
    }

    /// Minimal polynomial of `α^exponent` over GF(2): the product of `(x - α^j)`
    /// over the 2-cyclotomic coset of `exponent`.
    pub fn minimal_polynomial(&self, exponent: u32) -> Gf2Poly {
        let n = self.n();
        assert!(exponent < n, "exponent must be below n");
        // coefficients in GF(2^m), lowest degree first
        let mut coeffs: Vec<Elem> = vec![1];
        for root in coset(n, exponent)
            .into_iter()
            .map(|j| self.alpha_pow(j as u64))
        {
            let mut next = vec![0; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] ^= c;
                next[i] ^= self.mul(c, root);
            }
            coeffs = next;
        }
        assert!(
            coeffs.iter().all(|&c| c <= 1),
            "conjugate product must have binary coefficients"
        );
        Gf2Poly::from_exponents(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == 1)
                .map(|(i, _)| i),
        )
    }
}

/// Smallest-integer-encoding primitive polynomial of degree `m`.
pub fn default_modulus(m: u32) -> Gf2Poly {
    let lo = 1u64 << m;
    (lo + 1..lo << 1)
        .step_by(2)
        .map(Gf2Poly::from_bits)
        .find(|f| check_primitive(m, f).is_ok())
        .expect("a primitive polynomial exists for every degree")
}

/// Checks that `f` has degree `m`, is irreducible, and that `x` has order `2^m - 1` modulo `f`.
pub fn check_primitive(m: u32, f: &Gf2Poly) -> Result<()> {
    if f.degree() != Some(m as usize) {
        return Err(Error::ModulusDegree {
            m,
            found: f.degree(),
        });
    }
    // Ben-Or: f is irreducible iff gcd(x^(2^i) - x, f) = 1 for 1 <= i <= m/2
    let x = Gf2Poly::monomial(1);
    for i in 1..=(m as usize) / 2 {
        let t = Gf2Poly::x_pow_2k_mod(i, f)?.add(&x);
        if t.gcd(f).degree() != Some(0) {
            return Err(Error::ReducibleModulus {
                modulus: f.to_string(),
            });
        }
    }
    let n = (1u64 << m) - 1;
    let one = Gf2Poly::one();
    let order = multiplicative_order(n, |e| Gf2Poly::x_pow_mod(e, f).map(|p| p == one))?;
    if order != n {
        return Err(Error::NonPrimitiveModulus {
            modulus: f.to_string(),
            order,
        });
    }
    Ok(())
}

/// Order of an element in a group of order `n`, given a test for `g^e == 1`.
fn multiplicative_order(n: u64, is_identity: impl Fn(u64) -> Result<bool>) -> Result<u64> {
    let mut order = n;
    for p in prime_factors(n) {
        while order.is_multiple_of(p) && is_identity(order / p)? {
            order /= p;
        }
    }
    Ok(order)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
