mod common;

use common::*;
use frobenius_core::problem::parse_polynomial;
use frobenius_core::{
    buchberger, mono_compare, normal_form, s_polynomial, Engine, Ideal, Monomial, MonomialIdeal,
    MonomialOrder, Polynomial, Ring,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

const ORDERS: [MonomialOrder; 5] = [
    MonomialOrder::Lex,
    MonomialOrder::Deglex,
    MonomialOrder::Degrevlex,
    MonomialOrder::Eliminate(1),
    MonomialOrder::GradedEliminate(1),
];

fn exps(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, n).prop_map(Monomial::new)
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn xyz(p: u64) -> Ring {
    ring(p, &["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orders_are_total_and_multiplicative(a in exps(3), b in exps(3), c in exps(3), which in 0usize..5) {
        let order = ORDERS[which];
        let ab = mono_compare(&a, &b, order).unwrap();
        prop_assert_eq!(ab.reverse(), mono_compare(&b, &a, order).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = mono_compare(&b, &c, order).unwrap();
        if ab == Ordering::Greater && bc == Ordering::Greater {
            prop_assert_eq!(mono_compare(&a, &c, order).unwrap(), Ordering::Greater);
        }
        let ac = a.try_mul(&c).unwrap();
        let bc2 = b.try_mul(&c).unwrap();
        prop_assert_eq!(mono_compare(&ac, &bc2, order).unwrap(), ab);
        prop_assert_ne!(mono_compare(&Monomial::one(3), &a, order).unwrap(), Ordering::Greater);
        if order.is_degree_compatible() && a.degree() > b.degree() {
            prop_assert_eq!(ab, Ordering::Greater);
        }
    }

    #[test]
    fn parse_render_round_trip(p in prime(), seed in any::<u64>(), terms in 0usize..7) {
        let r = xyz(p);
        let f = random_poly(&mut rng_from(seed), &r, terms, 5);
        let back = parse_polynomial(&r, &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn frobenius_power_is_pth_power(p in prime(), seed in any::<u64>(), terms in 0usize..7, e in 0u32..4) {
        let r = xyz(p);
        let f = random_poly(&mut rng_from(seed), &r, terms, 2);
        let direct = f.frobenius_power(e).unwrap();
        let mut iterated = f.clone();
        for _ in 0..e {
            iterated = iterated.frobenius_power(1).unwrap();
        }
        prop_assert_eq!(&direct, &iterated);
        if p.pow(e) <= 25 {
            prop_assert_eq!(&direct, &f.pow(p.pow(e)).unwrap());
        }
    }

    #[test]
    fn division_identity(p in prime(), seed in any::<u64>(), ndiv in 1usize..4) {
        let r = xyz(p);
        let mut rng = rng_from(seed);
        let f = random_poly(&mut rng, &r, 6, 5);
        let divisors: Vec<Polynomial> = (0..ndiv)
            .map(|_| random_poly(&mut rng, &r, 3, 3))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!divisors.is_empty());
        let d = normal_form(&f, &divisors).unwrap();
        let mut rebuilt = d.remainder.clone();
        for (q, g) in d.cofactors.iter().zip(&divisors) {
            rebuilt = rebuilt.add(&q.mul(g).unwrap()).unwrap();
        }
        prop_assert_eq!(rebuilt, f);
        for t in d.remainder.terms() {
            for g in &divisors {
                prop_assert!(!g.leading_monomial().unwrap().divides(&t.monomial));
            }
        }
    }

    #[test]
    fn groebner_basis_is_canonical(p in prop::sample::select(vec![2u64, 5]), seed in any::<u64>()) {
        let r = xyz(p);
        let mut rng = rng_from(seed);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let gb = buchberger(&r, &gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let again = buchberger(&r, &rev).unwrap();
        prop_assert_eq!(again.elements(), gb.elements());
        for (i, f) in gb.elements().iter().enumerate() {
            for g in &gb.elements()[i + 1..] {
                prop_assert!(gb.reduce(&s_polynomial(f, g).unwrap()).unwrap().is_zero());
            }
        }
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn colon_and_intersection_characterized(p in prime(), seed in any::<u64>()) {
        let r = xyz(p);
        let mut rng = rng_from(seed);
        let i = Ideal::new(&r, (0..2).map(|_| random_poly(&mut rng, &r, 2, 3)).collect()).unwrap();
        let j = Ideal::new(&r, vec![random_poly(&mut rng, &r, 2, 2)]).unwrap();
        prop_assume!(!i.is_zero() && !j.is_zero());
        let colon = i.colon_with(&j, Engine::Groebner).unwrap();
        for c in colon.generators() {
            for g in j.generators() {
                prop_assert!(i.contains_element(&c.mul(g).unwrap()).unwrap());
            }
        }
        prop_assert!(colon.contains(&i).unwrap());
        let meet = i.intersection_with(&j, Engine::Groebner).unwrap();
        prop_assert!(i.contains(&meet).unwrap() && j.contains(&meet).unwrap());
        let prod = i.product(&j).unwrap();
        prop_assert!(meet.contains(&prod).unwrap());
        // f in I ∩ J exactly when f is in both
        let f = random_poly(&mut rng, &r, 3, 4).mul(&j.generators()[0]).unwrap();
        prop_assert_eq!(meet.contains_element(&f).unwrap(), i.contains_element(&f).unwrap());
    }

    #[test]
    fn homogeneous_intersection_characterized(p in prime(), seed in any::<u64>()) {
        let r = xyz(p);
        let mut rng = rng_from(seed);
        let mut gens = |count: usize| -> Vec<Polynomial> {
            (0..count)
                .map(|_| {
                    let deg = rng.gen_range(1..=3);
                    random_homogeneous(&mut rng, &r, 3, deg)
                })
                .collect()
        };
        let i = Ideal::new(&r, gens(2)).unwrap();
        let j = Ideal::new(&r, gens(2)).unwrap();
        prop_assume!(!i.is_zero() && !j.is_zero() && !i.is_monomial());
        let meet = i.intersection(&j).unwrap();
        prop_assert!(meet.is_homogeneous());
        let sum = i.sum(&j).unwrap().sum(&meet).unwrap();
        let small = sum.minimalized().unwrap();
        prop_assert!(small.generators().len() <= sum.generators().len());
        prop_assert!(small.equals_with(&sum, Engine::Groebner).unwrap());
        prop_assert!(i.contains(&meet).unwrap() && j.contains(&meet).unwrap());
        prop_assert!(meet.contains(&i.product(&j).unwrap()).unwrap());
        let colon = i.colon(&j).unwrap();
        for c in colon.generators() {
            for g in j.generators() {
                prop_assert!(i.contains_element(&c.mul(g).unwrap()).unwrap());
            }
        }
        // I ∩ J = J·(I : J) when J is principal
        let principal = Ideal::new(&r, vec![j.generators()[0].clone()]).unwrap();
        let direct = i.intersection(&principal).unwrap();
        let via_colon = principal.product(&i.colon(&principal).unwrap()).unwrap();
        prop_assert!(direct.equals(&via_colon).unwrap());
    }

    #[test]
    fn bracket_powers_compose(p in prime(), seed in any::<u64>(), a in 0u32..3, b in 0u32..2) {
        let r = xyz(p);
        let mut rng = rng_from(seed);
        let i = Ideal::new(&r, (0..2).map(|_| random_poly(&mut rng, &r, 2, 2)).collect()).unwrap();
        let twice = i.bracket_power(a).unwrap().bracket_power(b).unwrap();
        prop_assert!(twice.equals(&i.bracket_power(a + b).unwrap()).unwrap());
        // independent of the generating set
        let extra = i.generators().iter().fold(Polynomial::zero(&r), |acc, g| acc.add(g).unwrap());
        let mut gens = i.generators().to_vec();
        gens.push(extra);
        let regen = Ideal::new(&r, gens).unwrap();
        prop_assert!(regen.bracket_power(a).unwrap().equals(&i.bracket_power(a).unwrap()).unwrap());
    }

    #[test]
    fn monomial_kernel_matches_box_oracle(seed in any::<u64>()) {
        let r = xyz(2);
        let mut rng = rng_from(seed);
        let i = random_monomial_ideal(&mut rng, &r, 4, 3);
        let j = random_monomial_ideal(&mut rng, &r, 3, 3);
        let colon = i.colon(&j).unwrap();
        let meet = i.intersection(&j).unwrap();
        let prod = i.product(&j).unwrap();
        for m in box_monomials(3, 7) {
            let in_i = divisible_by_any(&m, i.generators());
            let in_j = divisible_by_any(&m, j.generators());
            prop_assert_eq!(i.contains(&m), in_i);
            prop_assert_eq!(divisible_by_any(&m, meet.generators()), in_i && in_j);
            let colon_expected = j
                .generators()
                .iter()
                .all(|g| divisible_by_any(&m.try_mul(g).unwrap(), i.generators()));
            prop_assert_eq!(divisible_by_any(&m, colon.generators()), colon_expected);
            if m.degree() <= 6 {
                let prod_expected = i.generators().iter().any(|a| {
                    j.generators().iter().any(|b| a.try_mul(b).unwrap().divides(&m))
                });
                prop_assert_eq!(divisible_by_any(&m, prod.generators()), prod_expected);
            }
        }
        // minimal generators are an antichain
        for (a, g) in colon.generators().iter().enumerate() {
            for (b, h) in colon.generators().iter().enumerate() {
                prop_assert!(a == b || !g.divides(h));
            }
        }
        prop_assert_eq!(MonomialIdeal::minimalize(&r, colon.generators().to_vec()), colon);
    }
}
