//! Sparse multivariate polynomials over GF(p).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{check_same, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

/// A polynomial in canonical form: nonzero coefficients, strictly descending
/// monomials under the ring order. The zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// Sort descending, merge equal monomials, drop zeros.
pub(crate) fn normalize(field: &PrimeField, order: MonomialOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.monomial == t.monomial => {
                last.coeff = field.add(last.coeff, t.coeff);
            }
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if out.last().is_some_and(|t| t.coeff.is_zero()) {
        out.pop();
    }
    out
}

/// `a + c * m * b` by merging. `m = None` means the unit monomial.
pub(crate) fn add_scaled(
    field: &PrimeField,
    order: MonomialOrder,
    a: &[Term],
    c: FieldElement,
    m: Option<&Monomial>,
    b: &[Term],
) -> Result<Vec<Term>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().peekable();
    let next_b = |bi: &mut std::iter::Peekable<std::slice::Iter<'_, Term>>| -> Result<Option<Term>> {
        match bi.next() {
            None => Ok(None),
            Some(t) => {
                let monomial = match m {
                    Some(m) => t.monomial.try_mul(m)?,
                    None => t.monomial.clone(),
                };
                Ok(Some(Term {
                    coeff: field.mul(c, t.coeff),
                    monomial,
                }))
            }
        }
    };
    let mut cur_b = next_b(&mut bi)?;
    while let Some(tb) = cur_b.take() {
        if i == a.len() {
            out.push(tb);
            while let Some(t) = next_b(&mut bi)? {
                out.push(t);
            }
            break;
        }
        let ta = &a[i];
        match order.cmp(&ta.monomial, &tb.monomial) {
            Ordering::Greater => {
                out.push(ta.clone());
                i += 1;
                cur_b = Some(tb);
            }
            Ordering::Less => {
                out.push(tb);
                cur_b = next_b(&mut bi)?;
            }
            Ordering::Equal => {
                let s = field.add(ta.coeff, tb.coeff);
                if !s.is_zero() {
                    out.push(Term {
                        coeff: s,
                        monomial: tb.monomial,
                    });
                }
                i += 1;
                cur_b = next_b(&mut bi)?;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    Ok(out)
}

pub(crate) fn mul_terms(
    field: &PrimeField,
    order: MonomialOrder,
    a: &[Term],
    b: &[Term],
) -> Result<Vec<Term>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() == 1 {
        return add_scaled(field, order, &[], small[0].coeff, Some(&small[0].monomial), large);
    }
    let mut products = Vec::with_capacity(a.len() * b.len());
    for s in small {
        for l in large {
            products.push(Term {
                coeff: field.mul(s.coeff, l.coeff),
                monomial: s.monomial.try_mul(&l.monomial)?,
            });
        }
    }
    Ok(normalize(field, order, products))
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                coeff: c,
                monomial: Monomial::one(ring.nvars()),
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable with the given index. Panics if out of range.
    pub fn variable(ring: &Ring, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index {index} out of range");
        Self::from_monomial(ring, Monomial::variable(ring.nvars(), index))
    }

    pub fn var(ring: &Ring, name: &str) -> Option<Self> {
        ring.variable_index(name).map(|i| Self::variable(ring, i))
    }

    /// Panics if the monomial width differs from the ring's variable count.
    pub fn from_monomial(ring: &Ring, m: Monomial) -> Self {
        assert_eq!(m.width(), ring.nvars(), "monomial width");
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: FieldElement::ONE,
                monomial: m,
            }],
        }
    }

    /// Build from integer coefficients; coefficients are reduced mod p.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Result<Self> {
        let field = ring.field();
        let mut raw = Vec::new();
        for (c, m) in terms {
            if m.width() != ring.nvars() {
                return Err(Error::WidthMismatch {
                    left: m.width(),
                    right: ring.nvars(),
                });
            }
            raw.push(Term {
                coeff: field.from_i64(c),
                monomial: m,
            });
        }
        Ok(Self::from_unsorted(ring, raw))
    }

    pub(crate) fn from_unsorted(ring: &Ring, terms: Vec<Term>) -> Self {
        let terms = normalize(ring.field(), ring.order(), terms);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_canonical(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The same polynomial attached to an equivalent ring (for instance one with
    /// different limits).
    pub fn in_ring(&self, ring: &Ring) -> Result<Polynomial> {
        check_same(&self.ring, ring)?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single term (zero excluded).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let terms = add_scaled(
            self.ring.field(),
            self.ring.order(),
            &self.terms,
            FieldElement::ONE,
            None,
            &other.terms,
        )?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let minus_one = self.ring.field().neg(FieldElement::ONE);
        let terms = add_scaled(
            self.ring.field(),
            self.ring.order(),
            &self.terms,
            minus_one,
            None,
            &other.terms,
        )?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let terms = mul_terms(self.ring.field(), self.ring.order(), &self.terms, &other.terms)?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(c, t.coeff),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: t.coeff,
                    monomial: t.monomial.try_mul(m)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`, computed termwise: in characteristic p the Frobenius is additive
    /// and fixes every element of GF(p).
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let q = frobenius_exponent(self.ring.characteristic(), e)?;
        self.bracket(q)
    }

    /// Termwise `q`-th power, where `q` is a power of the characteristic.
    pub(crate) fn bracket(&self, q: u64) -> Result<Polynomial> {
        if q == 1 {
            return Ok(self.clone());
        }
        // scaling every exponent vector by q preserves all supported orders
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: t.coeff,
                    monomial: t.monomial.try_pow(q)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    /// Change the ring to one whose variables are `count` new ones followed by
    /// this ring's variables.
    pub(crate) fn embed_front(&self, target: &Ring, count: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                monomial: t.monomial.extend_front(count),
            })
            .collect();
        Polynomial::from_unsorted(target, terms)
    }

    /// Inverse of [`embed_front`](Self::embed_front); the caller guarantees the
    /// dropped variables do not occur.
    pub(crate) fn project_front(&self, target: &Ring, count: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                monomial: t.monomial.drop_front(count),
            })
            .collect();
        Polynomial::from_unsorted(target, terms)
    }

    /// Canonical text: descending terms, `*` between factors, `^` for powers,
    /// coefficients as signed representatives in `(-p/2, p/2]`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `p^e`, checked to fit the exponent range.
pub fn frobenius_exponent(p: u32, e: u32) -> Result<u64> {
    (p as u64)
        .checked_pow(e)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or_else(|| Error::ExponentOverflow(format!(" computing {p}^{e}")))
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, names: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        let names = self.ring.variables();
        for (i, t) in self.terms.iter().enumerate() {
            let c = field.symmetric(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, names, &t.monomial)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn xyz(p: u64) -> (Ring, Polynomial, Polynomial, Polynomial) {
        let r = RingContext::new(p, ["x", "y", "z"]).unwrap();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let z = Polynomial::variable(&r, 2);
        (r, x, y, z)
    }

    #[test]
    fn char_two_cancellation() {
        let (_, x, y, _) = xyz(2);
        let s = x.add(&y).unwrap();
        assert!(s.add(&s).unwrap().is_zero());
    }

    #[test]
    fn monomial_product() {
        let (_, x, y, z) = xyz(3);
        let xy = x.mul(&y).unwrap();
        let yz = y.mul(&z).unwrap();
        assert_eq!(xy.mul(&yz).unwrap().to_string(), "x*y^2*z");
    }

    #[test]
    fn square_in_char_two() {
        let (_, x, y, _) = xyz(2);
        let s = x.add(&y).unwrap();
        assert_eq!(s.mul(&s).unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn frobenius_examples() {
        let (_, x, y, _) = xyz(2);
        let s = x.add(&y).unwrap();
        assert_eq!(s.frobenius_power(0).unwrap(), s);
        assert_eq!(s.frobenius_power(1).unwrap().to_string(), "x^2 + y^2");

        let r = RingContext::new(2, ["x", "y", "z", "u", "v", "w"]).unwrap();
        let v = |i| Polynomial::variable(&r, i);
        let minor = v(0).mul(&v(4)).unwrap().sub(&v(1).mul(&v(3)).unwrap()).unwrap();
        assert_eq!(minor.frobenius_power(2).unwrap().to_string(), "y^4*u^4 + x^4*v^4");
    }

    #[test]
    fn rendering() {
        let (r, x, y, _) = xyz(5);
        let f = x.pow(4).unwrap().mul(&y.pow(3).unwrap()).unwrap();
        assert_eq!(f.to_string(), "x^4*y^3");
        let g = Polynomial::constant(&r, 3).mul(&x).unwrap().sub(&Polynomial::one(&r)).unwrap();
        assert_eq!(g.to_string(), "-2*x - 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(Polynomial::constant(&r, -1).to_string(), "-1");
    }

    #[test]
    fn context_mismatch() {
        let (_, x, _, _) = xyz(2);
        let (_, x3, _, _) = xyz(3);
        assert_eq!(x.add(&x3).unwrap_err(), Error::ContextMismatch);
        assert_eq!(x.mul(&x3).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn overflow_reported() {
        let r = RingContext::new(2, ["x"]).unwrap();
        let big = Polynomial::from_monomial(&r, Monomial::new(vec![1u32 << 31]));
        assert!(matches!(big.mul(&big), Err(Error::ExponentOverflow(_))));
        assert!(big.frobenius_power(1).is_err());
        assert!(frobenius_exponent(2, 40).is_err());
    }

    #[test]
    fn homogeneity_and_degree() {
        let (_, x, y, z) = xyz(3);
        let f = x.mul(&y).unwrap().add(&z.mul(&z).unwrap()).unwrap();
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(2));
        assert!(!f.add(&x).unwrap().is_homogeneous());
    }
}
