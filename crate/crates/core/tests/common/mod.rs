#![allow(dead_code)]

use frobenius_core::problem::{parse_polynomial, Preset};
use frobenius_core::{
    FrobeniusConfig, Ideal, Ladder, Monomial, MonomialIdeal, Polynomial, Ring, RingContext,
};
use rand::Rng;

pub fn ring(p: u64, vars: &[&str]) -> Ring {
    RingContext::new(p, vars.iter().copied()).unwrap()
}

pub fn poly(ring: &Ring, text: &str) -> Polynomial {
    parse_polynomial(ring, text).unwrap()
}

pub fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| poly(ring, g)).collect()).unwrap()
}

pub fn mono(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

pub fn monomial_ideal(ring: &Ring, gens: &[&[u32]]) -> Ideal {
    let gens = gens
        .iter()
        .map(|e| Polynomial::from_monomial(ring, mono(e)))
        .collect();
    Ideal::new(ring, gens).unwrap()
}

pub fn preset(preset: Preset, p: u64) -> Ideal {
    let ring = preset.ring(p).unwrap();
    let gens = preset.generators(&ring).unwrap();
    Ideal::new(&ring, gens).unwrap()
}

pub fn ladder(ideal: &Ideal, e_max: u32) -> Ladder {
    Ladder::new(FrobeniusConfig::new(ideal.clone(), e_max).unwrap())
}

/// (x^q y^(q-1), x^(q-1) y^(q-1) z^(q-1), y^(q-1) z^q) written out by hand.
pub fn expected_k(ring: &Ring, q: u32) -> Ideal {
    monomial_ideal(ring, &[&[q, q - 1, 0], &[q - 1, q - 1, q - 1], &[0, q - 1, q]])
}

pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>())
}

/// A nonzero monomial ideal with at most `max_gens` generators.
pub fn random_monomial_ideal(
    rng: &mut impl Rng,
    ring: &Ring,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| random_monomial(rng, ring.nvars(), max_exp))
        .collect();
    MonomialIdeal::minimalize(ring, gens)
}

/// A polynomial with `terms` random terms of degree at most `max_deg`.
pub fn random_poly(rng: &mut impl Rng, ring: &Ring, terms: usize, max_deg: u32) -> Polynomial {
    let p = ring.characteristic() as i64;
    let n = ring.nvars();
    let raw = (0..terms).map(|_| {
        let mut exps = vec![0u32; n];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        (rng.gen_range(1..p), Monomial::new(exps))
    });
    Polynomial::from_terms(ring, raw).unwrap()
}

/// Every monomial with all exponents at most `bound`.
pub fn box_monomials(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=bound).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Divisibility by some generator, computed without the crate's ideal code.
pub fn divisible_by_any(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| {
        g.exponents()
            .iter()
            .zip(m.exponents())
            .all(|(a, b)| a <= b)
    })
}

/// A homogeneous polynomial of degree `deg` with at most `terms` terms.
pub fn random_homogeneous(rng: &mut impl Rng, ring: &Ring, terms: usize, deg: u32) -> Polynomial {
    let p = ring.characteristic() as i64;
    let n = ring.nvars();
    let raw = (0..terms).map(|_| {
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        (rng.gen_range(1..p), Monomial::new(exps))
    });
    Polynomial::from_terms(ring, raw).unwrap()
}
