//! Monomial ideals in combinatorial form.
//!
//! A monomial ideal has a unique minimal generating set, which serves as its
//! canonical form. Every operation here works purely on exponent vectors.

use crate::error::Result;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{check_same, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    /// Divisibility antichain, descending in the ring order.
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(ring: &Ring, mut gens: Vec<Monomial>) -> MonomialIdeal {
        let order = ring.order();
        // a divisor is never larger than its multiples, so divisors come first
        gens.sort_by(|a, b| order.cmp(a, b));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        let mut masks: Vec<u64> = Vec::with_capacity(gens.len());
        for m in gens {
            let mask = m.support_mask();
            let redundant = kept
                .iter()
                .zip(&masks)
                .any(|(k, &km)| km & !mask == 0 && k.divides(&m));
            if !redundant {
                kept.push(m);
                masks.push(mask);
            }
        }
        kept.reverse();
        MonomialIdeal {
            ring: ring.clone(),
            gens: kept,
        }
    }

    pub fn zero(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one(ring.nvars())],
        }
    }

    /// `None` unless every generator is a single term.
    pub fn from_polynomials(ring: &Ring, gens: &[Polynomial]) -> Option<MonomialIdeal> {
        let mut monos = Vec::with_capacity(gens.len());
        for g in gens {
            match g.terms() {
                [] => {}
                [t] => monos.push(t.monomial.clone()),
                _ => return None,
            }
        }
        Some(MonomialIdeal::minimalize(ring, monos))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|m| Polynomial::from_monomial(&self.ring, m.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    /// `J ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        Ok(other.gens.iter().all(|m| self.contains(m)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::minimalize(&self.ring, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ok(MonomialIdeal::minimalize(&self.ring, gens))
    }

    /// Pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::minimalize(&self.ring, gens))
    }

    /// `(self : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::minimalize(&self.ring, gens)
    }

    /// `(self : J)` as the intersection of the colons by the generators of `J`.
    /// The colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut acc = MonomialIdeal::unit(&self.ring);
        for m in &other.gens {
            acc = acc.intersection(&self.colon_monomial(m))?;
        }
        Ok(acc)
    }

    /// Generators raised to the `q`-th power.
    pub fn bracket(&self, q: u64) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.try_pow(q))
            .collect::<Result<Vec<_>>>()?;
        // scaling exponents preserves both the antichain and the sort order
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn r3() -> Ring {
        RingContext::new(2, ["x", "y", "z"]).unwrap()
    }

    fn m(e: [u32; 3]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(gens: &[[u32; 3]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(&r3(), gens.iter().map(|&e| m(e)).collect())
    }

    #[test]
    fn minimalize_prunes_redundant_generator() {
        let i = ideal(&[[2, 1, 0], [1, 1, 1], [2, 1, 2], [0, 1, 2]]);
        assert_eq!(i, ideal(&[[2, 1, 0], [1, 1, 1], [0, 1, 2]]));
        assert_eq!(i.generators().len(), 3);
        assert_eq!(ideal(&[[1, 2, 3]]).generators(), &[m([1, 2, 3])]);
        assert!(ideal(&[]).is_zero());
    }

    #[test]
    fn membership() {
        let i = ideal(&[[1, 1, 0], [0, 1, 1]]);
        assert!(i.contains(&m([2, 2, 0])));
        assert!(!i.contains(&m([2, 0, 5])));
        assert!(!MonomialIdeal::zero(&r3()).contains(&m([0, 0, 0])));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(&[[2, 2, 0], [0, 2, 2]]);
        assert_eq!(i.colon_monomial(&m([0, 1, 1])), ideal(&[[2, 1, 0], [0, 1, 1]]));
        assert_eq!(i.colon_monomial(&m([1, 1, 0])), ideal(&[[1, 1, 0], [0, 1, 2]]));
        let j = ideal(&[[1, 1, 0], [0, 1, 1]]);
        assert_eq!(i.colon(&j).unwrap(), ideal(&[[2, 1, 0], [1, 1, 1], [0, 1, 2]]));

        let xy = ideal(&[[1, 1, 0]]);
        assert_eq!(xy.colon(&ideal(&[[1, 0, 0]])).unwrap(), ideal(&[[0, 1, 0]]));
        assert!(xy.colon(&MonomialIdeal::zero(&r3())).unwrap().is_unit());
    }

    #[test]
    fn intersection_by_lcm() {
        let a = ideal(&[[1, 1, 0], [0, 1, 2]]);
        let b = ideal(&[[2, 1, 0], [0, 1, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), ideal(&[[2, 1, 0], [1, 1, 1], [0, 1, 2]]));
    }

    #[test]
    fn bracket_and_product() {
        let i = ideal(&[[1, 1, 0], [0, 1, 1]]);
        assert_eq!(i.bracket(4).unwrap(), ideal(&[[4, 4, 0], [0, 4, 4]]));
        let k1 = ideal(&[[2, 1, 0], [1, 1, 1], [0, 1, 2]]);
        let prod = k1.product(&k1.bracket(2).unwrap()).unwrap();
        let expected = ideal(&[
            [6, 3, 0],
            [5, 3, 1],
            [4, 3, 2],
            [3, 3, 3],
            [2, 3, 4],
            [1, 3, 5],
            [0, 3, 6],
        ]);
        assert_eq!(prod, expected);
    }
}
