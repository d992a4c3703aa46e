//! Prime-field scalars.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue in `[0, p)`. Arithmetic goes through the owning [`PrimeField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn residue(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn element(&self, n: u64) -> FieldElement {
        FieldElement((n % self.p as u64) as u32)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Signed representative in `(-p/2, p/2]`, used for rendering.
    pub fn symmetric(&self, a: FieldElement) -> i64 {
        let a = a.0 as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        FieldElement(if s >= p { s - p } else { s } as u32)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: FieldElement, mut n: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero in GF({})", self.p);
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        self.from_i64(t0)
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }
}
