//! The ambient polynomial ring `GF(p)[x_1, ..., x_n]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::MonomialOrder;

/// Ceilings that abort runaway Gröbner computations with [`Error::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of polynomials a basis may hold during a run.
    pub max_basis_size: usize,
    /// Largest number of S-pair reductions in a single run.
    pub max_reductions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis_size: 100_000,
            max_reductions: 10_000_000,
        }
    }
}

#[derive(Debug)]
pub struct RingContext {
    field: PrimeField,
    variables: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

pub type Ring = Arc<RingContext>;

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    /// A ring with the default degrevlex order.
    pub fn new<S: Into<String>>(p: u64, variables: impl IntoIterator<Item = S>) -> Result<Ring> {
        Self::with_order(p, variables, MonomialOrder::Degrevlex)
    }

    pub fn with_order<S: Into<String>>(
        p: u64,
        variables: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidVariables("at least one variable required".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_valid_name(v) {
                return Err(Error::InvalidVariables(format!("bad variable name {v:?}")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidVariables(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Arc::new(RingContext {
            field,
            variables,
            order,
            limits: Limits::default(),
        }))
    }

    /// Copy of this ring with different resource limits.
    pub fn with_limits(&self, limits: Limits) -> Ring {
        Arc::new(RingContext {
            field: self.field,
            variables: self.variables.clone(),
            order: self.order,
            limits,
        })
    }

    /// `GF(p)[t, x_1, ..., x_n]` with an order eliminating `t`.
    ///
    /// The name of the auxiliary variable is not a valid user name, so it can never
    /// collide with one.
    pub(crate) fn elimination_extension(&self) -> Ring {
        self.extension_with(MonomialOrder::Eliminate(1))
    }

    /// As [`RingContext::elimination_extension`] but with `t` of weight zero,
    /// which keeps the computation graded when everything else is homogeneous.
    pub(crate) fn graded_elimination_extension(&self) -> Ring {
        self.extension_with(MonomialOrder::GradedEliminate(1))
    }

    fn extension_with(&self, order: MonomialOrder) -> Ring {
        let mut variables = Vec::with_capacity(self.variables.len() + 1);
        variables.push("@t".to_string());
        variables.extend(self.variables.iter().cloned());
        Arc::new(RingContext {
            field: self.field,
            variables,
            order,
            limits: self.limits,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Same characteristic, variables and order. Limits are not part of identity.
    pub fn same_as(&self, other: &RingContext) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.order == other.order
                && self.variables == other.variables)
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for RingContext {}

pub(crate) fn check_same(a: &RingContext, b: &RingContext) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(RingContext::new(2, ["x", "y"]).is_ok());
        assert_eq!(RingContext::new(4, ["x"]).unwrap_err(), Error::NotPrime(4));
        assert!(RingContext::new(2, Vec::<String>::new()).is_err());
        assert!(RingContext::new(2, ["x", "x"]).is_err());
        assert!(RingContext::new(2, ["1x"]).is_err());
        assert!(RingContext::new(2, ["x_1", "Y2"]).is_ok());
    }

    #[test]
    fn identity_ignores_limits() {
        let r = RingContext::new(3, ["x", "y"]).unwrap();
        let s = r.with_limits(Limits {
            max_basis_size: 1,
            max_reductions: 1,
        });
        assert!(r.same_as(&s));
        let t = RingContext::new(5, ["x", "y"]).unwrap();
        assert!(!r.same_as(&t));
    }
}
