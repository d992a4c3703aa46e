//! Buchberger's algorithm with Gebauer–Möller pair management.
//!
//! Pairs are selected by the normal strategy (smallest lcm first, ties broken by
//! index). Redundant pairs are removed with the product (coprime leading monomials)
//! and chain criteria as organised by the Gebauer–Möller update. The output is
//! always the reduced monic basis, sorted by descending leading monomial, so the
//! result depends only on the ideal and the order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::poly::{add_scaled, Polynomial, Term};
use crate::ring::{check_same, Ring};

/// A reduced monic Gröbner basis, sorted by descending leading monomial.
///
/// When `degree_bound` is set the basis is only valid for homogeneous elements of
/// degree at most the bound (it was computed by a truncated run).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    degree_bound: Option<u64>,
}

impl GroebnerBasis {
    /// Wrap elements already known to form a reduced monic basis.
    pub(crate) fn from_reduced(ring: &Ring, mut elements: Vec<Polynomial>) -> GroebnerBasis {
        let order = ring.order();
        elements.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            degree_bound: None,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn degree_bound(&self) -> Option<u64> {
        self.degree_bound
    }

    /// Normal form of `f` with respect to the basis (the unique remainder).
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, f.ring())?;
        if let Some(bound) = self.degree_bound {
            if f.total_degree().unwrap_or(0) > bound || !f.is_homogeneous() {
                return Err(Error::Internal(
                    "truncated basis used beyond its degree bound".into(),
                ));
            }
        }
        let engine = Engine::from_basis(&self.ring, &self.elements);
        let terms = engine.reduce(f.terms().to_vec())?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// `S(f, g) = (L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_same(f.ring(), g.ring())?;
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let ring = f.ring();
    let field = ring.field();
    let l = tf.monomial.lcm(&tg.monomial);
    let mf = l.checked_div(&tf.monomial).expect("lcm");
    let mg = l.checked_div(&tg.monomial).expect("lcm");
    let a = f.mul_monomial(&mf)?.scale(field.inv(tf.coeff));
    let b = g.mul_monomial(&mg)?.scale(field.inv(tg.coeff));
    a.sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    run(ring, gens, None)
}

/// Basis truncated at `bound`: only pairs whose lcm has degree at most `bound` are
/// reduced. Valid when all generators are homogeneous and the order is
/// degree-compatible; generators above the bound are ignored.
pub(crate) fn buchberger_truncated(
    ring: &Ring,
    gens: &[Polynomial],
    bound: u64,
) -> Result<GroebnerBasis> {
    debug_assert!(ring.order().is_degree_compatible());
    debug_assert!(gens.iter().all(Polynomial::is_homogeneous));
    run(ring, gens, Some(bound))
}

/// A minimal generating set of the ideal spanned by homogeneous `gens`, chosen
/// greedily by degree: a generator is kept when it does not lie in the ideal of
/// the ones kept before it. Requires a degree-compatible order.
pub(crate) fn minimal_homogeneous_generators(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    debug_assert!(ring.order().is_degree_compatible());
    debug_assert!(gens.iter().all(Polynomial::is_homogeneous));
    for g in gens {
        check_same(ring, g.ring())?;
    }
    let mut sorted: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| g.total_degree());
    let mut engine = Engine::new(ring, None);
    let mut kept = Vec::new();
    for g in sorted {
        if g.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        let d = g.total_degree().unwrap_or(0);
        // with a graded order the pairs come out by ascending lcm degree, and every
        // pair created below has degree above d
        while engine.pairs.last().is_some_and(|p| p.lcm.degree() <= d) {
            let pair = engine.pairs.pop().expect("nonempty");
            engine.process(pair)?;
        }
        if engine.insert_reduced(g.monic().into_terms())? == Inserted::Added {
            kept.push(g.clone());
        }
    }
    Ok(kept)
}

fn run(ring: &Ring, gens: &[Polynomial], bound: Option<u64>) -> Result<GroebnerBasis> {
    for g in gens {
        check_same(ring, g.ring())?;
    }
    let mut engine = Engine::new(ring, bound);
    let mut inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .filter(|g| bound.is_none_or(|b| g.total_degree().unwrap_or(0) <= b))
        .map(|g| g.monic().into_terms())
        .collect();
    inputs.sort_by(|a, b| ring.order().cmp(&a[0].monomial, &b[0].monomial));
    inputs.dedup();

    for f in inputs {
        if engine.insert_reduced(f)? == Inserted::Unit {
            return Ok(engine.unit_basis());
        }
    }
    while let Some(pair) = engine.pairs.pop() {
        if engine.process(pair)? == Inserted::Unit {
            return Ok(engine.unit_basis());
        }
    }
    engine.finish()
}

struct Entry {
    terms: Vec<Term>,
    mask: u64,
    active: bool,
}

impl Entry {
    fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Inserted {
    Zero,
    Unit,
    Added,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'r> {
    ring: &'r Ring,
    entries: Vec<Entry>,
    /// Sorted so that the next pair to process is last.
    pairs: Vec<Pair>,
    bound: Option<u64>,
    reductions: usize,
}

impl<'r> Engine<'r> {
    fn new(ring: &'r Ring, bound: Option<u64>) -> Self {
        Engine {
            ring,
            entries: Vec::new(),
            pairs: Vec::new(),
            bound,
            reductions: 0,
        }
    }

    /// An engine that only reduces, using an existing monic basis.
    fn from_basis(ring: &'r Ring, basis: &[Polynomial]) -> Self {
        let mut engine = Engine::new(ring, None);
        for b in basis {
            let terms = b.terms().to_vec();
            let mask = terms[0].monomial.support_mask();
            engine.entries.push(Entry {
                terms,
                mask,
                active: true,
            });
        }
        engine
    }

    fn unit_basis(&self) -> GroebnerBasis {
        GroebnerBasis {
            ring: self.ring.clone(),
            elements: vec![Polynomial::one(self.ring)],
            degree_bound: self.bound,
        }
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<&Entry> {
        let mask = m.support_mask();
        self.entries.iter().enumerate().find_map(|(k, e)| {
            (e.active && Some(k) != skip && e.mask & !mask == 0 && e.lm().divides(m)).then_some(e)
        })
    }

    fn reduce(&self, p: Vec<Term>) -> Result<Vec<Term>> {
        self.reduce_skipping(p, None)
    }

    /// Full reduction against the active entries (all assumed monic).
    fn reduce_skipping(&self, mut p: Vec<Term>, skip: Option<usize>) -> Result<Vec<Term>> {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut rem: Vec<Term> = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let lead = &p[start];
            match self.find_reducer(&lead.monomial, skip) {
                Some(r) => {
                    let m = lead.monomial.checked_div(r.lm()).expect("reducer divides");
                    let c = field.neg(lead.coeff);
                    p = add_scaled(field, order, &p[start + 1..], c, Some(&m), &r.terms[1..])?;
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }

    fn spoly(&self, pair: &Pair) -> Result<Vec<Term>> {
        let field = self.ring.field();
        let order = self.ring.order();
        let a = &self.entries[pair.i];
        let b = &self.entries[pair.j];
        let ma = pair.lcm.checked_div(a.lm()).expect("lcm");
        let mb = pair.lcm.checked_div(b.lm()).expect("lcm");
        let left = add_scaled(field, order, &[], FieldElement::ONE, Some(&ma), &a.terms[1..])?;
        add_scaled(field, order, &left, field.neg(FieldElement::ONE), Some(&mb), &b.terms[1..])
    }

    /// Reduce the S-polynomial of `pair` and insert the remainder.
    fn process(&mut self, pair: Pair) -> Result<Inserted> {
        self.reductions += 1;
        if self.reductions > self.ring.limits().max_reductions {
            return Err(Error::ResourceLimit(format!(
                "more than {} S-pair reductions",
                self.ring.limits().max_reductions
            )));
        }
        let s = self
            .spoly(&pair)
            .map_err(|e| e.in_context(|| format!("in S-pair ({}, {})", pair.i, pair.j)))?;
        self.insert_reduced(s)
    }

    /// Reduce `f`, and if the remainder is nonzero add it to the basis.
    fn insert_reduced(&mut self, f: Vec<Term>) -> Result<Inserted> {
        let r = self.reduce(f)?;
        let Some(lead) = r.first() else {
            return Ok(Inserted::Zero);
        };
        if lead.monomial.is_one() {
            return Ok(Inserted::Unit);
        }
        let field = self.ring.field();
        let inv = field.inv(lead.coeff);
        let terms: Vec<Term> = r
            .into_iter()
            .map(|t| Term {
                coeff: field.mul(inv, t.coeff),
                monomial: t.monomial,
            })
            .collect();
        if self.entries.len() >= self.ring.limits().max_basis_size {
            return Err(Error::ResourceLimit(format!(
                "basis grew beyond {} elements",
                self.ring.limits().max_basis_size
            )));
        }
        let mask = terms[0].monomial.support_mask();
        self.entries.push(Entry {
            terms,
            mask,
            active: false,
        });
        self.update(self.entries.len() - 1);
        Ok(Inserted::Added)
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let order = self.ring.order();
        let lm_h = self.entries[h].lm().clone();

        struct Candidate {
            g: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let candidates: Vec<Candidate> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(g, e)| Candidate {
                g,
                lcm: lm_h.lcm(e.lm()),
                coprime: lm_h.is_coprime(e.lm()),
            })
            .collect();

        // chain criterion among the new pairs; exactly one survivor per lcm class
        let mut kept: Vec<&Candidate> = Vec::new();
        for (k, c) in candidates.iter().enumerate() {
            let dominated = candidates[k + 1..]
                .iter()
                .chain(kept.iter().copied())
                .any(|o| o.lcm.divides(&c.lcm));
            if c.coprime || !dominated {
                kept.push(c);
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|c| !c.coprime)
            .filter(|c| self.bound.is_none_or(|b| c.lcm.degree() <= b))
            .map(|c| Pair {
                i: c.g,
                j: h,
                lcm: c.lcm.clone(),
            })
            .collect();

        // chain criterion on the old pairs
        let entries = &self.entries;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lm_h.lcm(entries[p.i].lm()) != p.lcm
                && lm_h.lcm(entries[p.j].lm()) != p.lcm)
        });

        for e in self.entries.iter_mut() {
            if e.active && lm_h.divides(e.lm()) {
                e.active = false;
            }
        }
        self.entries[h].active = true;

        if !new_pairs.is_empty() {
            // descending, so the smallest lcm (then smallest indices) is popped first
            let desc = |a: &Pair, b: &Pair| {
                order
                    .cmp(&b.lcm, &a.lcm)
                    .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
            };
            let mut new_pairs = new_pairs;
            new_pairs.sort_by(desc);
            let old = std::mem::take(&mut self.pairs);
            let mut merged = Vec::with_capacity(old.len() + new_pairs.len());
            let mut a = old.into_iter().peekable();
            let mut b = new_pairs.into_iter().peekable();
            loop {
                let take_a = match (a.peek(), b.peek()) {
                    (Some(x), Some(y)) => desc(x, y) != Ordering::Greater,
                    (Some(_), None) => true,
                    (None, Some(_)) => false,
                    (None, None) => break,
                };
                merged.push(if take_a { a.next() } else { b.next() }.expect("peeked"));
            }
            self.pairs = merged;
        }
    }

    fn finish(self) -> Result<GroebnerBasis> {
        let order = self.ring.order();
        let active: Vec<usize> = (0..self.entries.len())
            .filter(|&k| self.entries[k].active)
            .collect();
        let mut elements = Vec::with_capacity(active.len());
        for &k in &active {
            let e = &self.entries[k];
            let mut terms = vec![e.terms[0].clone()];
            terms.extend(self.reduce_skipping(e.terms[1..].to_vec(), Some(k))?);
            elements.push(Polynomial::from_canonical(self.ring, terms));
        }
        elements.sort_by(|a, b| {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            order.cmp(lb, la)
        });
        debug_assert!(elements
            .windows(2)
            .all(|w| order.cmp(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
                == Ordering::Greater));
        Ok(GroebnerBasis {
            ring: self.ring.clone(),
            elements,
            degree_bound: self.bound,
        })
    }
}
