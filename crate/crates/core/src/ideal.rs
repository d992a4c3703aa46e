//! Ideals and the operations built on Gröbner bases.
//!
//! Every operation routes monomial inputs to [`MonomialIdeal`] unless the caller
//! forces the general engine with [`Engine::Groebner`].

use std::collections::HashSet;
use std::fmt;

use once_cell::sync::OnceCell;
use serde::Serialize;

use crate::division::exact_quotient;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, buchberger_truncated, minimal_homogeneous_generators, GroebnerBasis,
};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{frobenius_exponent, Polynomial};
use crate::ring::{check_same, Ring};

/// Which implementation computed a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Path {
    Monomial,
    Groebner,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::Monomial => "monomial",
            Path::Groebner => "groebner",
        })
    }
}

/// Routing policy for ideal operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Monomial kernel when every input is monomial, Gröbner engine otherwise.
    #[default]
    Auto,
    /// Always use the Gröbner engine.
    Groebner,
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceCell<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped; the rest are kept as given.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            check_same(ring, g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceCell::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            basis: OnceCell::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_monomial(&MonomialIdeal::unit(ring))
    }

    pub fn from_monomial(m: &MonomialIdeal) -> Ideal {
        Ideal {
            ring: m.ring().clone(),
            generators: m.to_polynomials(),
            basis: OnceCell::new(),
        }
    }

    fn from_basis(basis: GroebnerBasis) -> Ideal {
        Ideal {
            ring: basis.ring().clone(),
            generators: basis.elements().to_vec(),
            basis: OnceCell::with_value(basis),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Every generator is a single term (the zero ideal included).
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        MonomialIdeal::from_polynomials(&self.ring, &self.generators)
    }

    /// The reduced Gröbner basis, computed at most once.
    pub fn basis(&self) -> Result<&GroebnerBasis> {
        self.basis
            .get_or_try_init(|| buchberger(&self.ring, &self.generators))
    }

    pub fn has_cached_basis(&self) -> bool {
        self.basis.get().is_some()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.generators.iter().any(Polynomial::is_unit) {
            return Ok(true);
        }
        // generators without constant terms all vanish at the origin
        let at_origin = |g: &Polynomial| g.terms().last().is_some_and(|t| !t.monomial.is_one());
        if self.generators.iter().all(at_origin) {
            return Ok(false);
        }
        Ok(self.basis()?.is_unit())
    }

    /// Canonical generators: the minimal monomial generators for monomial ideals,
    /// the reduced Gröbner basis otherwise. Both coincide for monomial ideals.
    pub fn canonical_generators(&self) -> Result<Vec<Polynomial>> {
        match self.as_monomial() {
            Some(m) => Ok(m.to_polynomials()),
            None => Ok(self.basis()?.elements().to_vec()),
        }
    }

    /// The same ideal, generated by its canonical generators.
    pub fn canonical(&self) -> Result<Ideal> {
        match self.as_monomial() {
            Some(m) => Ok(Ideal::from_monomial(&m)),
            None => Ok(Ideal::from_basis(self.basis()?.clone())),
        }
    }

    /// The same ideal with fewer generators where that is cheap to arrange: the
    /// minimal generators of a monomial ideal, or a minimal homogeneous generating
    /// set when the ideal is homogeneous under a degree-compatible order. Otherwise
    /// the generators are kept.
    pub fn minimalized(&self) -> Result<Ideal> {
        self.minimalized_with(Engine::Auto)
    }

    pub fn minimalized_with(&self, engine: Engine) -> Result<Ideal> {
        if self.path(&[], engine) == Path::Monomial {
            let m = self.as_monomial().expect("monomial");
            return Ok(Ideal::from_monomial(&m));
        }
        if self.ring.order().is_degree_compatible() && self.is_homogeneous() {
            let gens = minimal_homogeneous_generators(&self.ring, &self.generators)?;
            let ideal = Ideal::new(&self.ring, gens)?;
            if let Some(b) = self.basis.get() {
                let _ = ideal.basis.set(b.clone());
            }
            return Ok(ideal);
        }
        Ok(self.clone())
    }

    pub fn path(&self, others: &[&Ideal], engine: Engine) -> Path {
        match engine {
            Engine::Auto if self.is_monomial() && others.iter().all(|o| o.is_monomial()) => {
                Path::Monomial
            }
            _ => Path::Groebner,
        }
    }

    fn both_monomial(&self, other: &Ideal, engine: Engine) -> Result<Option<(MonomialIdeal, MonomialIdeal)>> {
        check_same(&self.ring, &other.ring)?;
        if self.path(&[other], engine) == Path::Monomial {
            Ok(Some((
                self.as_monomial().expect("monomial"),
                other.as_monomial().expect("monomial"),
            )))
        } else {
            Ok(None)
        }
    }

    pub fn contains_element(&self, f: &Polynomial) -> Result<bool> {
        self.contains_element_with(f, Engine::Auto)
    }

    pub fn contains_element_with(&self, f: &Polynomial, engine: Engine) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        if engine == Engine::Auto {
            if let Some(m) = self.as_monomial() {
                return Ok(f.terms().iter().all(|t| m.contains(&t.monomial)));
            }
        }
        self.basis()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.contains_with(other, Engine::Auto)
    }

    pub fn contains_with(&self, other: &Ideal, engine: Engine) -> Result<bool> {
        Ok(self.failing_generators_with(other, engine)?.is_empty())
    }

    /// The generators of `other` that do not lie in `self`, in their given order.
    pub fn failing_generators_with(&self, other: &Ideal, engine: Engine) -> Result<Vec<Polynomial>> {
        check_same(&self.ring, other.ring())?;
        if let Some((a, _)) = self.both_monomial(other, engine)? {
            return Ok(other
                .generators
                .iter()
                .filter(|g| !g.terms().iter().all(|t| a.contains(&t.monomial)))
                .cloned()
                .collect());
        }
        let basis = self.membership_basis(&other.generators)?;
        let mut failing = Vec::new();
        for g in &other.generators {
            if !basis.contains(g)? {
                failing.push(g.clone());
            }
        }
        Ok(failing)
    }

    /// A basis good enough to decide membership of `elements`. For homogeneous
    /// data under a degree-compatible order a degree-truncated run suffices.
    fn membership_basis(&self, elements: &[Polynomial]) -> Result<GroebnerBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b.clone());
        }
        let truncatable = self.ring.order().is_degree_compatible()
            && self.is_homogeneous()
            && elements.iter().all(Polynomial::is_homogeneous);
        if truncatable {
            let bound = elements.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
            return buchberger_truncated(&self.ring, &self.generators, bound);
        }
        Ok(self.basis()?.clone())
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.equals_with(other, Engine::Auto)
    }

    pub fn equals_with(&self, other: &Ideal, engine: Engine) -> Result<bool> {
        if let Some((a, b)) = self.both_monomial(other, engine)? {
            return Ok(a == b);
        }
        Ok(self.basis()? == other.basis()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.sum_with(other, Engine::Auto)
    }

    pub fn sum_with(&self, other: &Ideal, engine: Engine) -> Result<Ideal> {
        if let Some((a, b)) = self.both_monomial(other, engine)? {
            return Ok(Ideal::from_monomial(&a.sum(&b)?));
        }
        let mut seen: HashSet<&Polynomial> = self.generators.iter().collect();
        let mut gens = self.generators.clone();
        for g in &other.generators {
            if seen.insert(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.product_with(other, Engine::Auto)
    }

    pub fn product_with(&self, other: &Ideal, engine: Engine) -> Result<Ideal> {
        if let Some((a, b)) = self.both_monomial(other, engine)? {
            return Ok(Ideal::from_monomial(&a.product(&b)?));
        }
        let mut seen = HashSet::new();
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                let prod = a.mul(b)?.monic();
                if seen.insert(prod.clone()) {
                    gens.push(prod);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.intersection_with(other, Engine::Auto)
    }

    /// General path: eliminate `t` from `t*I + (1-t)*J`.
    pub fn intersection_with(&self, other: &Ideal, engine: Engine) -> Result<Ideal> {
        if let Some((a, b)) = self.both_monomial(other, engine)? {
            return Ok(Ideal::from_monomial(&a.intersection(&b)?));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.generators.iter().any(Polynomial::is_unit) {
            return Ok(other.clone());
        }
        if other.generators.iter().any(Polynomial::is_unit) {
            return Ok(self.clone());
        }
        let ext = if self.is_homogeneous() && other.is_homogeneous() {
            self.ring.graded_elimination_extension()
        } else {
            self.ring.elimination_extension()
        };
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for g in &self.generators {
            gens.push(t.mul(&g.embed_front(&ext, 1))?);
        }
        for h in &other.generators {
            gens.push(one_minus_t.mul(&h.embed_front(&ext, 1))?);
        }
        let gb = buchberger(&ext, &gens)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.leading_monomial().unwrap().exponents()[0] == 0)
            .map(|g| g.project_front(&self.ring, 1))
            .collect();
        let ideal = Ideal::new(&self.ring, kept)?;
        if self.ring.order() == crate::monomial::MonomialOrder::Degrevlex {
            // the t-free part of a reduced basis under the block order is the
            // reduced basis of the intersection under degrevlex
            let basis = GroebnerBasis::from_reduced(&self.ring, ideal.generators.clone());
            let _ = ideal.basis.set(basis);
        }
        Ok(ideal)
    }

    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.colon_with(other, Engine::Auto)
    }

    /// `(I : J) = ∩_j (I : f_j)`, with `(I : f) = (I ∩ (f)) / f`.
    /// The colon by the zero ideal is the unit ideal.
    pub fn colon_with(&self, other: &Ideal, engine: Engine) -> Result<Ideal> {
        if let Some((a, b)) = self.both_monomial(other, engine)? {
            return Ok(Ideal::from_monomial(&a.colon(&b)?));
        }
        if other.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.generators {
            let c = self.colon_element(f)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection_with(&c, Engine::Groebner)?,
            });
        }
        Ok(acc.expect("nonzero divisor ideal"))
    }

    fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection_with(&principal, Engine::Groebner)?;
        let mut quotients = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            match exact_quotient(g, f)? {
                Some(q) => quotients.push(q.monic()),
                None => {
                    return Err(Error::Internal(format!(
                        "intersection generator {g} is not divisible by {f}"
                    )))
                }
            }
        }
        Ideal::new(&self.ring, quotients)
    }

    /// `I^{[p^e]}`.
    pub fn bracket_power(&self, e: u32) -> Result<Ideal> {
        let q = frobenius_exponent(self.ring.characteristic(), e)?;
        self.bracket_q(q)
    }

    /// Generators raised to the `q`-th power, `q` a power of the characteristic.
    pub(crate) fn bracket_q(&self, q: u64) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.bracket(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
