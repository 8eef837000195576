mod common;

use braidperm_core::analysis::{
    goodness, intersect_stat, is_cyclic, is_transitive, reduction, retraction, supp_stat, GoodnessKind, RSubcomponent,
    ReductionSide, Side,
};
use braidperm_core::braid::{canonical_mu, lin_model, phi, psi};
use braidperm_core::coset::two_subset_action;
use braidperm_core::search::random_valid_params;
use braidperm_core::{BraidRep, ModelParams, Permutation};
use common::{all_perms, arb_perm};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Models with their `(m, k)`, for `m <= 4` and `k` in `3..=8`.
fn constructed() -> Vec<(usize, usize, BraidRep)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut out = Vec::new();
    for k in 3..=8 {
        for m in 1..=4 {
            out.push((m, k, psi(m, k).unwrap()));
            for l in (1..m).filter(|l| m % l == 0) {
                for _ in 0..3 {
                    out.push((m, k, phi(&random_valid_params(m, l, k, &mut rng).unwrap()).unwrap()));
                }
            }
        }
        for which in 1..=3 {
            out.push((2, k, lin_model(which, k).unwrap()));
        }
    }
    out
}

fn random_conjugate(rep: &BraidRep, seed: u64) -> BraidRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rep.conjugate(&Permutation::random(rep.degree(), &mut rng).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn stats_are_conjugation_invariant(m in 1usize..=4, k in 3usize..=7, theta_seed in any::<u64>()) {
        let rep = psi(m, k).unwrap();
        let moved = random_conjugate(&rep, theta_seed);
        prop_assert_eq!(supp_stat(&moved), supp_stat(&rep));
        prop_assert_eq!(intersect_stat(&moved).unwrap(), intersect_stat(&rep).unwrap());
    }

    #[test]
    fn block_model_stats_are_conjugation_invariant(theta in arb_perm(15), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = phi(&random_valid_params(3, 1, 5, &mut rng).unwrap()).unwrap();
        let moved = rep.conjugate(&theta).unwrap();
        prop_assert_eq!(supp_stat(&moved), supp_stat(&rep));
        prop_assert_eq!(intersect_stat(&moved).unwrap(), intersect_stat(&rep).unwrap());
    }
}

#[test]
fn adjacent_supports_cover_half_of_each_cycle() {
    let mut reps: Vec<BraidRep> = constructed().into_iter().map(|(_, _, r)| r).collect();
    reps.extend((3..=8).map(|k| two_subset_action(k).unwrap()));
    reps.extend((3..=8).map(|k| canonical_mu(k).unwrap()));
    for rep in &reps {
        let k = rep.strands();
        for i in 1..k {
            for cycle in rep.gen(i).cycles() {
                for j in [i.wrapping_sub(1), i + 1] {
                    if j == 0 || j >= k {
                        continue;
                    }
                    let other = rep.gen(j);
                    let shared = cycle.iter().filter(|&&x| other.apply(x) != x).count();
                    assert!(2 * shared >= cycle.len());
                }
            }
        }
        assert!(2 * intersect_stat(rep).unwrap() >= supp_stat(rep));
    }
}

#[test]
fn good_transitive_models_have_one_of_two_profiles() {
    for (m, k, rep) in constructed() {
        if rep.degree() != m * k || !is_transitive(&rep) || goodness(&rep).kind == GoodnessKind::NotGood {
            continue;
        }
        let stats = (supp_stat(&rep), intersect_stat(&rep).unwrap());
        assert!(stats == (2 * m, m) || stats == (m * k, m * k), "m={m} k={k} {stats:?}");
    }
}

fn all_equal(rep: &BraidRep) -> bool {
    rep.generators().windows(2).all(|w| w[0] == w[1])
}

#[test]
fn cyclic_retraction_gives_cyclic_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut reps = Vec::new();
    for k in [5, 7] {
        for (m, l) in [(3, 1), (4, 1), (4, 2), (6, 2), (6, 3)] {
            reps.push(phi(&ModelParams::canonical(m, l, k, 0).unwrap()).unwrap());
            for _ in 0..4 {
                let rep = phi(&random_valid_params(m, l, k, &mut rng).unwrap()).unwrap();
                reps.push(random_conjugate(&rep, rng.gen::<u64>()));
                reps.push(rep);
            }
        }
    }
    let mut checked = 0;
    for rep in &reps {
        for side in [Side::Head, Side::Tail] {
            let source = match side {
                Side::Head => rep.gen(1),
                Side::Tail => rep.gen(rep.strands() - 1),
            };
            let mut lengths: Vec<usize> = source.cycle_type().lengths().to_vec();
            lengths.dedup();
            for r in lengths {
                let sub = RSubcomponent::component(rep, side, r).unwrap();
                let Ok(omega) = retraction(rep, &sub) else { continue };
                if all_equal(&omega) {
                    let reduction_side = if side == Side::Head { ReductionSide::Head } else { ReductionSide::Tail };
                    let reduced = reduction(rep, &sub.support(), reduction_side).unwrap();
                    assert!(all_equal(&reduced));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn commuting_with_a_lone_cycle_restricts_to_its_power() {
    let perms = all_perms(6);
    for a in &perms {
        let cycles = a.cycles();
        for c in &cycles {
            if cycles.iter().filter(|d| d.len() == c.len()).count() != 1 {
                continue;
            }
            let mut support = c.clone();
            support.sort_unstable();
            let lone = Permutation::from_cycles(6, std::slice::from_ref(c)).unwrap().restrict(&support).unwrap();
            let powers: Vec<Permutation> = (0..c.len() as i64).map(|q| lone.pow(q)).collect();
            for b in &perms {
                if a * b == b * a {
                    let restricted = b.restrict(&support).expect("commuting maps preserve the lone cycle");
                    assert!(powers.contains(&restricted));
                }
            }
        }
    }
}

#[test]
fn transitive_reduction_of_orbit() {
    let rep = canonical_mu(4).unwrap().disjoint_product(&psi(2, 4).unwrap()).unwrap();
    assert!(!is_transitive(&rep));
    for orbit in braidperm_core::analysis::orbits(&rep) {
        let reduced = reduction(&rep, &orbit, ReductionSide::Full).unwrap();
        assert!(is_transitive(&reduced));
        assert!(!is_cyclic(&reduced));
    }
}
