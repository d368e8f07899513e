mod common;

use std::sync::Arc;

use codegree::codegree::{graph_components, lemma21_quotient_check, profile};
use codegree::orbits::{orbits_on_dual, orbits_on_subgroup};
use codegree::structure::{
    core_p, core_p_prime_p, fitting, is_solvable, normal_subgroups, prime_divisors, sylow_seeded,
};
use codegree::verify::{theorem_d_classify, theorem_d_predicate};
use codegree::zoo::{self, Recipe};
use codegree::{CharacterTable, Cyclotomic, FiniteGroup, Permutation};
use common::{brute_is_nilpotent, gcd};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn cyclo(e: u64) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-3i64..=3, e as usize).prop_map(move |c| Cyclotomic::from_coeffs(e, c))
}

fn cyclo_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u64..=15).prop_flat_map(|e| (cyclo(e), cyclo(e), cyclo(e)))
}

/// Subgroup of `S_n` generated by two random permutations.
fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), perm(n), perm(n)))
        .prop_map(|(n, a, b)| FiniteGroup::from_generators(n, vec![a, b]).unwrap())
}

/// `(m, n, u)` with `u^m ≡ 1 (mod n)` and `gcd(u, n) = 1`.
fn semidirect_params() -> impl Strategy<Value = (u64, u64, u64)> {
    (2u64..=40, 1u64..=12).prop_flat_map(|(n, m)| {
        let units: Vec<u64> = (1..=n)
            .filter(|&u| gcd(u, n) == 1 && (0..m).fold(1, |x, _| x * u % n) == 1 % n)
            .collect();
        (Just(m), Just(n), prop::sample::select(units))
    })
}

fn recipe() -> impl Strategy<Value = Recipe> {
    let leaf = prop_oneof![
        (1u64..30).prop_map(Recipe::Cyclic),
        (prop::sample::select(vec![2u64, 3, 5, 7]), 1u64..4)
            .prop_map(|(p, k)| Recipe::ElementaryAbelian(p, k)),
        (3u64..12).prop_map(Recipe::Dihedral),
        Just(Recipe::Quaternion8),
        (1u64..=6).prop_map(Recipe::Symmetric),
        (1u64..=6).prop_map(Recipe::Alternating),
        (1u64..8, 1u64..30, 1u64..30).prop_map(|(m, n, u)| Recipe::SemidirectCyclic(m, n, u)),
        (
            1u64..6,
            prop::collection::vec(
                prop::collection::vec(prop::collection::vec(1u64..6, 2..4), 0..3),
                0..3
            )
        )
            .prop_map(|(degree, gens)| Recipe::Raw { degree, gens }),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Recipe::DirectProduct(Box::new(a), Box::new(b)))
    })
}

proptest! {
    #[test]
    fn composition_applies_left_factor_first(a in perm(7), b in perm(7), x in 0usize..7) {
        prop_assert_eq!(a.compose(&b).apply(x), b.apply(a.apply(x)));
    }

    #[test]
    fn permutation_group_laws(a in perm(6), b in perm(6), c in perm(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
        prop_assert_eq!(a.compose(&Permutation::identity(6)), a.clone());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
    }

    #[test]
    fn cycles_round_trip_and_give_order(a in perm(8)) {
        let cycles = a.cycles();
        prop_assert_eq!(Permutation::from_cycles(8, &cycles).unwrap(), a.clone());
        let lcm = cycles.iter().fold(1u64, |l, c| l / gcd(l, c.len() as u64) * c.len() as u64);
        prop_assert_eq!(a.order(), lcm);
        let mut p = Permutation::identity(8);
        for _ in 0..a.order() {
            p = p.compose(&a);
        }
        prop_assert!(p.is_identity());
    }

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in cyclo_triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn cyclotomic_equality_is_value_equality((a, b, _c) in cyclo_triple(), k in 1u64..4) {
        let e = a.order();
        let lifted = a.lift(e * k);
        prop_assert_eq!(&lifted, &a);
        prop_assert_eq!(lifted.canonical_key(), a.lift(e * k).reduced().canonical_key());
        let same = a.canonical_key() == b.canonical_key();
        prop_assert_eq!(same, a == b);
        let (x, y) = (&a - &b).to_complex();
        if a == b {
            prop_assert!(x.abs() < 1e-6 && y.abs() < 1e-6);
        }
    }

    #[test]
    fn cyclotomic_product_matches_complex_product((a, b, _c) in cyclo_triple()) {
        let (ar, ai) = a.to_complex();
        let (br, bi) = b.to_complex();
        let (pr, pi) = (&a * &b).to_complex();
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-6);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-6);
    }

    #[test]
    fn recipe_text_round_trips(r in recipe()) {
        let text = r.to_string();
        prop_assert_eq!(Recipe::parse(&text).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_closure_invariants(g in small_group()) {
        let n = g.order();
        prop_assert!(g.element(0).is_identity());
        prop_assert_eq!(g.class_sizes().iter().sum::<usize>(), n);
        prop_assert!(g.class_sizes().iter().all(|s| n % s == 0));
        prop_assert_eq!(g.classes()[0].elements(), &[0][..]);
        for i in 0..n {
            prop_assert_eq!(g.centralizer(i).order() * g.classes()[g.class_of(i)].size(), n);
        }
    }

    #[test]
    fn codegree_invariants(g in small_group(), seed in any::<u64>()) {
        let g = Arc::new(g);
        let t = CharacterTable::dixon(g.clone(), seed).unwrap();
        let n = g.order() as u64;
        prop_assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), n);
        let p = profile(&t).unwrap();
        for (row, &c) in p.per_character.iter().enumerate() {
            let d = t.degree(row);
            let index = n / t.kernel_order(row) as u64;
            prop_assert_eq!(c * d, index);
            prop_assert!(c >= d);
            prop_assert_eq!(c == d, index == d * d);
            prop_assert_eq!(n % c, 0);
        }
        prop_assert_eq!(p.cod_set == vec![1], n == 1);
        if theorem_d_predicate(&p) && n > 1 {
            prop_assert_eq!(graph_components(&p.codegree_graph).len(), p.cod_set.len() - 1);
        }
        let again = profile(&CharacterTable::dixon(g.clone(), seed ^ 0x5eed).unwrap()).unwrap();
        prop_assert_eq!(again.cod_set, p.cod_set);
    }

    #[test]
    fn cores_sylows_and_fitting(g in small_group(), seed in any::<u64>()) {
        let f = fitting(&g);
        prop_assert!(brute_is_nilpotent(&g, f.members()));
        let mut meet = g.whole();
        for p in prime_divisors(&g) {
            let op = core_p(&g, p).unwrap();
            prop_assert!(op.is_subgroup_of(&f));
            for s in 0..3 {
                let syl = sylow_seeded(&g, p, seed.wrapping_add(s)).unwrap();
                prop_assert!(op.is_subgroup_of(&syl));
                let full = common::primes_of(g.order() as u64).contains(&p);
                prop_assert!(full);
                let mut part = 1;
                let mut m = g.order();
                while m % p as usize == 0 {
                    m /= p as usize;
                    part *= p as usize;
                }
                prop_assert_eq!(syl.order(), part);
            }
            meet = g.intersection(&meet, &core_p_prime_p(&g, p).unwrap());
        }
        prop_assert!(meet.is_subgroup_of(&f));
        prop_assert_eq!(meet, f);
    }

    #[test]
    fn lemma21_quotients_on_random_groups(g in small_group()) {
        let t = CharacterTable::dixon(Arc::new(g.clone()), 0).unwrap();
        for n in normal_subgroups(&g).members() {
            prop_assert!(lemma21_quotient_check(&t, n, 1).unwrap());
        }
    }

    #[test]
    fn theorem_d_biconditional_on_semidirect_samples((m, n, u) in semidirect_params()) {
        let sd = zoo::semidirect_cyclic(m, n, u).unwrap();
        let g = sd.group;
        prop_assume!(g.order() > 1);
        let t = CharacterTable::dixon(Arc::new(g.clone()), m ^ n).unwrap();
        let p = profile(&t).unwrap();
        let predicate = theorem_d_predicate(&p);
        prop_assert_eq!(predicate, theorem_d_classify(&g, &p).is_some(), "cod {:?}", p.cod_set);
        if predicate {
            prop_assert!(is_solvable(&g));
            prop_assert!(p.primes.len() <= 2);
            prop_assert!(p.cod_set.len() <= 3);
            prop_assert_eq!(graph_components(&p.codegree_graph).len(), p.cod_set.len() - 1);
        }
    }

    #[test]
    fn orbit_sizes_partition_the_module((m, n, u) in semidirect_params()) {
        let sd = zoo::semidirect_cyclic(m, n, u).unwrap();
        let (g, h, v) = (&sd.group, &sd.complement, &sd.kernel);
        for orbits in [orbits_on_subgroup(g, h, v).unwrap(), orbits_on_dual(g, h, v, 3).unwrap()] {
            let sizes = orbits.sizes();
            prop_assert_eq!(sizes.iter().sum::<usize>(), v.order());
            prop_assert!(sizes.iter().all(|s| h.order() % s == 0));
            prop_assert_eq!(sizes.iter().filter(|&&s| s == 1).count() >= 1, true);
        }
        // fixed points on V and on its dual are equinumerous
        let fixed = |o: &codegree::orbits::ActionOrbits| o.sizes().iter().filter(|&&s| s == 1).count();
        prop_assert_eq!(
            fixed(&orbits_on_subgroup(g, h, v).unwrap()),
            fixed(&orbits_on_dual(g, h, v, 3).unwrap())
        );
    }
}
