use braidperm_core::braid::{phi, psi};
use braidperm_core::conjugacy::{are_conjugate, normalize_model};
use braidperm_core::search::{enumerate_t_tables, random_valid_params, NoDeadline, TableMode, DEFAULT_CANDIDATE_LIMIT};
use braidperm_core::{BraidRep, ModelParams, Permutation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn valid_tables(m: usize, l: usize, k: usize) -> Vec<ModelParams> {
    enumerate_t_tables(m, l, k, TableMode::ByCondition, DEFAULT_CANDIDATE_LIMIT, &NoDeadline).unwrap().0
}

fn sample_rep(seed: u64) -> BraidRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    phi(&random_valid_params(3, 1, 5, &mut rng).unwrap()).unwrap()
}

fn random_perm(degree: usize, seed: u64) -> Permutation {
    Permutation::random(degree, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugacy_is_an_equivalence(seed in any::<u64>(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = sample_rep(seed);
        let (t1, t2) = (random_perm(15, s1), random_perm(15, s2));
        let b = a.conjugate(&t1).unwrap();
        let c = b.conjugate(&t2).unwrap();

        let refl = are_conjugate(&a, &a).unwrap().unwrap();
        prop_assert_eq!(a.conjugate(&refl).unwrap(), a.clone());

        let ab = are_conjugate(&a, &b).unwrap().unwrap();
        let ba = are_conjugate(&b, &a).unwrap().unwrap();
        prop_assert_eq!(b.conjugate(&ab.inverse()).unwrap(), a.clone());
        prop_assert_eq!(b.conjugate(&ba).unwrap(), a.clone());

        let bc = are_conjugate(&b, &c).unwrap().unwrap();
        prop_assert_eq!(a.conjugate(&(&ab * &bc)).unwrap(), c.clone());
        prop_assert!(are_conjugate(&a, &c).unwrap().is_some());
    }
}

#[test]
fn normal_forms_round_trip() {
    for (m, l) in [(2, 1), (3, 1), (4, 1), (4, 2), (2, 2), (4, 4)] {
        for k in 2..=6 {
            for params in valid_tables(m, l, k) {
                let nf = normalize_model(&params).unwrap();
                let canonical = ModelParams::canonical(m, l, k, nf.p).unwrap();
                assert_eq!(phi(&params).unwrap().conjugate(&nf.conjugator).unwrap(), phi(&canonical).unwrap());
            }
        }
    }
}

#[test]
fn unit_block_invariant_is_first_row_sum() {
    for m in 2..=4 {
        for k in 3..=5 {
            for params in valid_tables(m, 1, k) {
                let row = &params.table()[0];
                let p = normalize_model(&params).unwrap().p;
                assert_eq!(p, (row[0] + row[1]) % m);
                if k == 4 {
                    let target = phi(&ModelParams::canonical(m, 1, k, p).unwrap()).unwrap();
                    assert!(are_conjugate(&phi(&params).unwrap(), &target).unwrap().is_some());
                }
            }
        }
    }
}

#[test]
fn degree_21_models_are_pairwise_distinct() {
    let k = 7;
    let mut reps = vec![psi(3, k).unwrap()];
    reps.extend((0..3).map(|p| phi(&ModelParams::canonical(3, 1, k, p).unwrap()).unwrap()));
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            assert_eq!(are_conjugate(a, b).unwrap().is_some(), i == j, "{i} vs {j}");
        }
    }
}
