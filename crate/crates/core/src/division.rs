//! Multivariate division with remainder.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{add_scaled, Polynomial, Term};
use crate::ring::check_same;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub remainder: Polynomial,
    pub cofactors: Vec<Polynomial>,
}

/// Divide `f` by the list `divisors`.
///
/// The result satisfies `f = sum(cofactors[i] * divisors[i]) + remainder` and no
/// term of the remainder is divisible by any leading monomial of `divisors`. The
/// leading term is always reduced first and divisors are tried in list order.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    let ring = f.ring();
    for g in divisors {
        check_same(ring, g.ring())?;
        if g.is_zero() {
            return Err(Error::InvalidConfig("division by the zero polynomial".into()));
        }
    }
    let field = ring.field();
    let order = ring.order();
    let leads: Vec<&Term> = divisors.iter().map(|g| &g.terms()[0]).collect();
    let inverses: Vec<FieldElement> = leads.iter().map(|t| field.inv(t.coeff)).collect();

    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder: Vec<Term> = Vec::new();
    let mut p: Vec<Term> = f.terms().to_vec();

    while let Some(lead) = p.first() {
        let hit = leads
            .iter()
            .position(|g| g.monomial.divides(&lead.monomial));
        match hit {
            Some(i) => {
                let m = lead
                    .monomial
                    .checked_div(&leads[i].monomial)
                    .expect("leading monomial divides");
                let c = field.mul(lead.coeff, inverses[i]);
                quotients[i].push(Term {
                    coeff: c,
                    monomial: m.clone(),
                });
                p = add_scaled(field, order, &p, field.neg(c), Some(&m), divisors[i].terms())
                    .map_err(|e| e.in_context(|| format!("dividing by divisor {i}")))?;
            }
            None => {
                remainder.push(p.remove(0));
            }
        }
    }

    Ok(Division {
        remainder: Polynomial::from_canonical(ring, remainder),
        cofactors: quotients
            .into_iter()
            .map(|q| Polynomial::from_canonical(ring, q))
            .collect(),
    })
}

/// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
pub fn exact_quotient(f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
    let d = normal_form(f, std::slice::from_ref(g))?;
    if d.remainder.is_zero() {
        Ok(d.cofactors.into_iter().next())
    } else {
        Ok(None)
    }
}
