//! The Frobenius ladder: `K_e`, twisted products, `L_e` and the per-level
//! finite-generation verdicts.
//!
//! For `S = R/I`, the `p^e`-th Frobenius maps on the injective hull of the residue
//! field of `S` correspond to `K_e = (I^{[p^e]} : I)`. Composites of maps of lower
//! degrees correspond to `L_e`, the sum over compositions `(b_1, ..., b_s)` of `e`
//! with every part `< e` of
//!
//! ```text
//! K_{b_1} * K_{b_2}^{[p^{b_1}]} * ... * K_{b_s}^{[p^{b_1 + ... + b_{s-1}}]}
//! ```
//!
//! Level `e` is generated by lower levels exactly when `K_e ⊆ L_e`; modulo the maps
//! that vanish (those coming from `I^{[p^e]}`) the test is `K_e ⊆ L_e + I^{[p^e]}`.
//! Both verdicts are reported.

use std::time::Instant;

use once_cell::sync::OnceCell;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Engine, Ideal, Path};
use crate::poly::{frobenius_exponent, Polynomial};
use crate::ring::Ring;

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidConfig(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Twist exponent of each factor: `b_1 + ... + b_{j-1}` for the `j`-th part.
    pub fn twists(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0, |acc, &b| {
                let t = *acc;
                *acc += b;
                Some(t)
            })
            .collect()
    }
}

/// All compositions of `e` whose parts lie in `[1, e-1]`, in lexicographic order.
pub fn compositions(e: u32) -> Vec<Composition> {
    fn extend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for b in 1..=remaining.min(max_part) {
            prefix.push(b);
            extend(remaining - b, max_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if e >= 2 {
        extend(e, e - 1, &mut Vec::new(), &mut out);
    }
    out
}

/// The ideal `I` (proper and nonzero) and the highest level to compute.
#[derive(Clone, Debug)]
pub struct FrobeniusConfig {
    ideal: Ideal,
    e_max: u32,
}

impl FrobeniusConfig {
    pub fn new(ideal: Ideal, e_max: u32) -> Result<FrobeniusConfig> {
        if e_max == 0 {
            return Err(Error::InvalidConfig("e_max must be at least 1".into()));
        }
        if ideal.is_zero() {
            return Err(Error::InvalidConfig("the ideal must be nonzero".into()));
        }
        if ideal.is_unit()? {
            return Err(Error::InvalidConfig("the ideal must be proper".into()));
        }
        Ok(FrobeniusConfig { ideal, e_max })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn e_max(&self) -> u32 {
        self.e_max
    }
}

/// How `L_e` is assembled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LMethod {
    /// `L_e = sum_{b=1}^{e-1} K_b * N_{e-b}^{[p^b]}` with `N_e = K_e + L_e`.
    #[default]
    Recursion,
    /// Literal sum of twisted products over all compositions.
    BruteForce,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct LevelTimings {
    pub k_ms: f64,
    pub l_ms: f64,
    pub check_ms: f64,
}

#[derive(Clone, Debug)]
pub struct LevelRecord {
    pub e: u32,
    pub q: u64,
    pub path: Path,
    /// `K_e` by canonical generators.
    pub k: Ideal,
    /// `N_e = K_e + L_e`.
    pub n: Ideal,
    pub l: Ideal,
    /// `K_e ⊆ L_e`.
    pub contained_raw: bool,
    /// `K_e ⊆ L_e + I^{[q]}`.
    pub contained_mod_bracket: bool,
    /// Canonical generators of `K_e` outside `L_e + I^{[q]}`, smallest first.
    pub witnesses: Vec<Polynomial>,
    pub timings: LevelTimings,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelFailure {
    pub e: u32,
    pub error: Error,
}

#[derive(Clone, Debug)]
pub struct FrobeniusLadder {
    pub levels: Vec<LevelRecord>,
    pub failures: Vec<LevelFailure>,
}

impl FrobeniusLadder {
    pub fn level(&self, e: u32) -> Option<&LevelRecord> {
        self.levels.iter().find(|l| l.e == e)
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Memoizing evaluator for one configuration. Every cache holds one slot per level.
pub struct Ladder {
    config: FrobeniusConfig,
    engine: Engine,
    method: LMethod,
    k: Vec<OnceCell<Ideal>>,
    n: Vec<OnceCell<Ideal>>,
    l: Vec<OnceCell<Ideal>>,
    bracket: Vec<OnceCell<Ideal>>,
}

fn millis(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

impl Ladder {
    pub fn new(config: FrobeniusConfig) -> Ladder {
        let slots = config.e_max as usize + 1;
        let cells = || (0..slots).map(|_| OnceCell::new()).collect::<Vec<_>>();
        Ladder {
            k: cells(),
            n: cells(),
            l: cells(),
            bracket: cells(),
            config,
            engine: Engine::Auto,
            method: LMethod::Recursion,
        }
    }

    pub fn with_engine(mut self, engine: Engine) -> Ladder {
        self.engine = engine;
        self
    }

    pub fn with_method(mut self, method: LMethod) -> Ladder {
        self.method = method;
        self
    }

    pub fn config(&self) -> &FrobeniusConfig {
        &self.config
    }

    pub fn method(&self) -> LMethod {
        self.method
    }

    /// Every ideal derived from a monomial `I` is monomial, so the path is fixed
    /// by `I` alone.
    pub fn path(&self) -> Path {
        self.config.ideal.path(&[], self.engine)
    }

    fn check_level(&self, e: u32) -> Result<()> {
        if e == 0 || e > self.config.e_max {
            return Err(Error::InvalidConfig(format!(
                "level {e} outside 1..={}",
                self.config.e_max
            )));
        }
        Ok(())
    }

    fn q(&self, e: u32) -> Result<u64> {
        frobenius_exponent(self.config.ring().characteristic(), e)
    }

    /// `I^{[p^e]}`.
    pub fn frobenius_bracket(&self, e: u32) -> Result<Ideal> {
        self.check_level(e)?;
        self.bracket[e as usize]
            .get_or_try_init(|| self.config.ideal.bracket_power(e))
            .cloned()
    }

    /// `K_e = (I^{[p^e]} : I)`, by canonical generators.
    pub fn compute_k(&self, e: u32) -> Result<Ideal> {
        self.check_level(e)?;
        self.k[e as usize]
            .get_or_try_init(|| {
                let bracket = self.frobenius_bracket(e)?;
                bracket
                    .colon_with(&self.config.ideal, self.engine)?
                    .canonical()
            })
            .cloned()
    }

    /// `K_{b_1} * K_{b_2}^{[p^{b_1}]} * ...` for a composition with total at most `e_max`.
    pub fn twisted_product(&self, c: &Composition) -> Result<Ideal> {
        self.check_level(c.total())?;
        let mut acc: Option<Ideal> = None;
        for (&b, twist) in c.parts().iter().zip(c.twists()) {
            let factor = self.compute_k(b)?.bracket_q(self.q(twist)?)?;
            acc = Some(match acc {
                None => factor,
                Some(a) => a.product_with(&factor, self.engine)?,
            });
        }
        Ok(acc.expect("nonempty composition"))
    }

    /// `L_e` by the configured method.
    pub fn compute_l(&self, e: u32) -> Result<Ideal> {
        self.check_level(e)?;
        match self.method {
            LMethod::Recursion => self.l[e as usize]
                .get_or_try_init(|| self.l_recursive(e))
                .cloned(),
            LMethod::BruteForce => self.l[e as usize]
                .get_or_try_init(|| self.l_brute_force(e))
                .cloned(),
        }
    }

    /// `N_e = K_e + L_e`, the sum over all compositions of `e` (parts unrestricted).
    pub fn compute_n(&self, e: u32) -> Result<Ideal> {
        self.check_level(e)?;
        self.n[e as usize]
            .get_or_try_init(|| {
                self.compute_k(e)?
                    .sum_with(&self.compute_l(e)?, self.engine)?
                    .minimalized_with(self.engine)
            })
            .cloned()
    }

    fn l_recursive(&self, e: u32) -> Result<Ideal> {
        let mut acc = Ideal::zero(self.config.ring());
        for b in 1..e {
            let tail = self.compute_n(e - b)?.bracket_q(self.q(b)?)?;
            let summand = self.compute_k(b)?.product_with(&tail, self.engine)?;
            acc = acc.sum_with(&summand, self.engine)?;
        }
        acc.minimalized_with(self.engine)
    }

    /// The literal sum over [`compositions`], bypassing the `N` recursion.
    pub fn l_brute_force(&self, e: u32) -> Result<Ideal> {
        self.check_level(e)?;
        let mut acc = Ideal::zero(self.config.ring());
        for c in compositions(e) {
            acc = acc.sum_with(&self.twisted_product(&c)?, self.engine)?;
        }
        acc.minimalized_with(self.engine)
    }

    pub fn finite_generation_step(&self, e: u32) -> Result<LevelRecord> {
        self.check_level(e)?;
        let start = Instant::now();
        let k = self.compute_k(e)?;
        let k_ms = millis(start);

        let start = Instant::now();
        let l = self.compute_l(e)?;
        let n = self.compute_n(e)?;
        let l_ms = millis(start);

        let start = Instant::now();
        let bracket = self.frobenius_bracket(e)?;
        let target = l.sum_with(&bracket, self.engine)?;
        let mut witnesses = target.failing_generators_with(&k, self.engine)?;
        witnesses.reverse();
        let contained_mod_bracket = witnesses.is_empty();
        // L_e ⊆ L_e + I^{[q]}, so a failure modulo the bracket is a raw failure too
        let contained_raw = contained_mod_bracket && l.contains_with(&k, self.engine)?;
        let check_ms = millis(start);

        Ok(LevelRecord {
            e,
            q: self.q(e)?,
            path: self.path(),
            k,
            n,
            l,
            contained_raw,
            contained_mod_bracket,
            witnesses,
            timings: LevelTimings {
                k_ms,
                l_ms,
                check_ms,
            },
        })
    }

    /// Evaluate levels `1..=e_max` in order. A failed level is recorded; later
    /// levels are still attempted when the quantities they depend on exist.
    pub fn run(&self) -> FrobeniusLadder {
        let mut levels = Vec::new();
        let mut failures = Vec::new();
        for e in 1..=self.config.e_max {
            match self.finite_generation_step(e) {
                Ok(rec) => levels.push(rec),
                Err(error) => {
                    failures.push(LevelFailure { e, error });
                    let k_ok = self.k[e as usize].get().is_some();
                    let n_ok = self.method == LMethod::BruteForce || self.n[e as usize].get().is_some();
                    if !(k_ok && n_ok) {
                        for later in e + 1..=self.config.e_max {
                            failures.push(LevelFailure {
                                e: later,
                                error: Error::Skipped(e),
                            });
                        }
                        break;
                    }
                }
            }
        }
        FrobeniusLadder { levels, failures }
    }
}

/// Run the whole ladder with the default routing and the `N` recursion.
pub fn run_ladder(config: &FrobeniusConfig) -> FrobeniusLadder {
    Ladder::new(config.clone()).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn composition_enumeration() {
        assert!(compositions(1).is_empty());
        assert_eq!(compositions(2), vec![Composition::new(vec![1, 1]).unwrap()]);
        let four: Vec<Vec<u32>> = compositions(4).into_iter().map(|c| c.parts).collect();
        assert_eq!(
            four,
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 1],
                vec![1, 3],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
            ]
        );
        for e in 1..=8u32 {
            assert_eq!(compositions(e).len(), (1usize << (e - 1)) - 1);
        }
    }

    #[test]
    fn twists_are_prefix_sums() {
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(c.twists(), vec![0, 2, 3]);
        assert_eq!(c.total(), 6);
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn degenerate_configs_rejected() {
        let r = RingContext::new(2, ["x"]).unwrap();
        assert!(FrobeniusConfig::new(Ideal::zero(&r), 2).is_err());
        assert!(FrobeniusConfig::new(Ideal::unit(&r), 2).is_err());
        let x = Ideal::new(&r, vec![Polynomial::variable(&r, 0)]).unwrap();
        assert!(FrobeniusConfig::new(x.clone(), 0).is_err());
        let ladder = Ladder::new(FrobeniusConfig::new(x, 2).unwrap());
        assert!(ladder.compute_k(3).is_err());
        assert!(ladder.compute_k(0).is_err());
    }

    #[test]
    fn single_level_has_zero_l() {
        let r = RingContext::new(3, ["x", "y", "z"]).unwrap();
        let v = |i| Polynomial::variable(&r, i);
        let i = Ideal::new(&r, vec![v(0).mul(&v(1)).unwrap(), v(1).mul(&v(2)).unwrap()]).unwrap();
        let ladder = run_ladder(&FrobeniusConfig::new(i, 1).unwrap());
        assert_eq!(ladder.levels.len(), 1);
        assert!(ladder.levels[0].l.is_zero());
    }
}
