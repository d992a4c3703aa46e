//! Frobenius-map ideal data for quotients of polynomial rings over GF(p).
//!
//! For an ideal `I` the crate computes the colon ideals `K_e = (I^{[p^e]} : I)`,
//! the ideals `L_e` generated by twisted products of lower `K`'s, and decides level
//! by level whether `K_e` is already accounted for by `L_e`.
//!
//! The layers, bottom up:
//!
//! * [`field`], [`monomial`], [`poly`], [`division`]: exact arithmetic.
//! * [`groebner`], [`ideal`]: reduced Gröbner bases and ideal operations.
//! * [`monomial_ideal`]: combinatorial fast path and oracle for monomial ideals.
//! * [`frobenius`]: `K_e`, `L_e` and the finite-generation ladder.
//! * [`problem`], [`report`]: input files, presets and rendered reports.

pub mod division;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod monomial_ideal;
pub mod poly;
pub mod problem;
pub mod report;
pub mod ring;

pub use division::{normal_form, Division};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use frobenius::{
    compositions, Composition, FrobeniusConfig, FrobeniusLadder, LMethod, LevelRecord, Ladder,
};
pub use groebner::{buchberger, s_polynomial, GroebnerBasis};
pub use ideal::{Engine, Ideal, Path};
pub use monomial::{mono_compare, Monomial, MonomialOrder};
pub use monomial_ideal::MonomialIdeal;
pub use poly::{Polynomial, Term};
pub use ring::{Limits, Ring, RingContext};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
