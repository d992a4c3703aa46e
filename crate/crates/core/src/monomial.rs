//! Exponent-vector monomials and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// Exponents are `u32`; every operation that can grow an exponent is checked and
/// reports [`Error::ExponentOverflow`] instead of wrapping.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(width: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; width],
        }
    }

    pub fn new(exponents: impl Into<Vec<u32>>) -> Self {
        Monomial {
            exps: Exponents::from_vec(exponents.into()),
        }
    }

    pub fn variable(width: usize, index: usize) -> Self {
        let mut m = Monomial::one(width);
        m.exps[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn width(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_width(&self, other: &Monomial) -> Result<()> {
        if self.width() != other.width() {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.width(), other.width());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_width(other)?;
        let mut exps = self.exps.clone();
        for (a, &b) in exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(b).ok_or_else(Error::overflow)?;
        }
        Ok(Monomial { exps })
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.width() != other.width() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (a, &b) in exps.iter_mut().zip(&other.exps) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.width(), other.width());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.width(), other.width());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Multiply every exponent by `k`.
    pub fn try_pow(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                (a as u64)
                    .checked_mul(k)
                    .filter(|&v| v <= u32::MAX as u64)
                    .map(|v| v as u32)
                    .ok_or_else(Error::overflow)
            })
            .collect::<Result<Exponents>>()?;
        Ok(Monomial { exps })
    }

    /// Prepend `count` zero exponents.
    pub(crate) fn extend_front(&self, count: usize) -> Monomial {
        let mut exps = Exponents::with_capacity(self.width() + count);
        exps.extend(std::iter::repeat(0).take(count));
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Drop the first `count` exponents.
    pub(crate) fn drop_front(&self, count: usize) -> Monomial {
        Monomial {
            exps: Exponents::from_slice(&self.exps[count..]),
        }
    }

    /// Compact divisibility signature: bit `i` is set when variable `i mod 64` occurs.
    /// If `a | b` then `mask(a) & !mask(b) == 0`.
    #[inline]
    pub(crate) fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }
}

/// Monomial orders. `Eliminate(k)` is the block order that first compares the
/// first `k` variables (degree-reverse-lexicographically) and then the rest
/// (likewise); any monomial involving one of the first `k` variables is larger
/// than every monomial free of them.
///
/// `GradedEliminate(k)` first compares the total degree in the remaining
/// variables, then proceeds as `Eliminate(k)`. It eliminates the first `k`
/// variables only for ideals that are homogeneous in the remaining ones.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    Deglex,
    #[default]
    Degrevlex,
    Eliminate(usize),
    GradedEliminate(usize),
}

#[inline]
fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent on the later variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.width(), b.width());
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Deglex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Degrevlex => degrevlex(&a.exps, &b.exps),
            MonomialOrder::Eliminate(k) => {
                let k = k.min(a.width());
                degrevlex(&a.exps[..k], &b.exps[..k])
                    .then_with(|| degrevlex(&a.exps[k..], &b.exps[k..]))
            }
            MonomialOrder::GradedEliminate(k) => {
                let k = k.min(a.width());
                let da: u64 = a.exps[k..].iter().map(|&e| e as u64).sum();
                let db: u64 = b.exps[k..].iter().map(|&e| e as u64).sum();
                da.cmp(&db)
                    .then_with(|| degrevlex(&a.exps[..k], &b.exps[..k]))
                    .then_with(|| degrevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// Whether a larger total degree always means a larger monomial.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Deglex | MonomialOrder::Degrevlex)
    }
}

/// Compare two monomials, checking that their widths agree.
pub fn mono_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    a.check_width(b)?;
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::Degrevlex;
        // xy vs z^2
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
        // x^3 vs xy
        assert_eq!(o.cmp(&m(&[3, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // x z^2 < y^3 under degrevlex? y^3 has z-exponent 0 < 2 so it is larger.
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
    }

    #[test]
    fn lex_and_deglex_differ_from_degrevlex() {
        // x z^2 vs y^3: lex says x... wins; deglex same degree so lex tie-break
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Deglex.cmp(&a, &b), Ordering::Greater);
        // x vs y^5
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Deglex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_order_puts_eliminated_variables_first() {
        let o = MonomialOrder::Eliminate(1);
        // t vs x^10
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 10, 0])), Ordering::Greater);
        // on t-free monomials it agrees with degrevlex
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[0, 0, 3])), Ordering::Less);
    }

    #[test]
    fn graded_elimination_order() {
        let o = MonomialOrder::GradedEliminate(1);
        // t has weight zero: x^2 beats t^5 x, but t x beats y
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[5, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 0])), Ordering::Greater);
        let d = MonomialOrder::Degrevlex;
        let a = m(&[0, 1, 2]);
        let b = m(&[0, 2, 1]);
        assert_eq!(o.cmp(&a, &b), d.cmp(&a, &b));
    }

    #[test]
    fn width_mismatch_is_reported() {
        assert_eq!(
            mono_compare(&m(&[1]), &m(&[1, 0]), MonomialOrder::Degrevlex),
            Err(Error::WidthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn overflow_is_an_error() {
        let big = m(&[u32::MAX - 1, 0]);
        assert!(big.try_mul(&m(&[1, 0])).is_ok());
        assert!(big.try_mul(&m(&[2, 0])).is_err());
        assert!(m(&[1 << 31]).try_pow(2).is_err());
        assert_eq!(m(&[1 << 30]).try_pow(2).unwrap(), m(&[1 << 31]));
    }

    #[test]
    fn lcm_gcd_division() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&b).checked_div(&b), Some(m(&[1, 0, 0])));
        assert_eq!(a.checked_div(&b), None);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }
}
