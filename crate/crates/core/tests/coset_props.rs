use braidperm_core::analysis::{is_cyclic, is_transitive};
use braidperm_core::braid::{canonical_mu, lin_model, psi};
use braidperm_core::coset::{derived_hom, pair_stabilizer_generators, two_subset_action, two_subsets, CosetSpace, DEFAULT_COSET_LIMIT};
use braidperm_core::Permutation;

fn p(n: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(s, n).unwrap()
}

#[test]
fn derived_maps_stay_homomorphisms() {
    let spaces = [
        CosetSpace::new(4, vec![p(4, "(1,2)"), p(4, "(3,4)")], DEFAULT_COSET_LIMIT).unwrap(),
        CosetSpace::new(4, vec![p(4, "(1,2,3)"), p(4, "(2,3,4)")], DEFAULT_COSET_LIMIT).unwrap(),
        CosetSpace::new(4, vec![p(4, "(1,2,3,4)")], DEFAULT_COSET_LIMIT).unwrap(),
        CosetSpace::new(4, vec![], DEFAULT_COSET_LIMIT).unwrap(),
    ];
    for cs in &spaces {
        for rep in [canonical_mu(4).unwrap(), lin_model(1, 2).unwrap(), psi(2, 2).unwrap()] {
            if rep.degree() != 4 {
                continue;
            }
            let f = derived_hom(&rep, cs).unwrap();
            assert_eq!(f.degree(), cs.index());
            assert!(f.is_homomorphism());
        }
    }
    let cs = CosetSpace::new(6, vec![p(6, "(1,2)"), p(6, "(3,4)")], DEFAULT_COSET_LIMIT).unwrap();
    let f = derived_hom(&psi(2, 3).unwrap(), &cs).unwrap();
    assert_eq!(f.degree(), 180);
    assert!(f.is_homomorphism());
}

#[test]
fn subset_action_matches_generic_cosets() {
    for k in 4..=6 {
        let cs = CosetSpace::new(k, pair_stabilizer_generators(k).unwrap(), DEFAULT_COSET_LIMIT).unwrap();
        let generic = derived_hom(&canonical_mu(k).unwrap(), &cs).unwrap();
        let direct = two_subset_action(k).unwrap();
        let subsets = two_subsets(k);
        // coset gH corresponds to the subset {g(1), g(2)}
        let relabel: Vec<usize> = cs
            .representatives()
            .iter()
            .map(|r| {
                let (a, b) = (r.apply(1), r.apply(2));
                subsets.iter().position(|&s| s == (a.min(b), a.max(b))).unwrap() + 1
            })
            .collect();
        let theta = Permutation::from_images(&relabel).unwrap();
        assert_eq!(generic.conjugate(&theta.inverse()).unwrap(), direct);
    }
}

#[test]
fn subset_action_is_transitive_and_non_cyclic() {
    for k in 3..=10 {
        let f = two_subset_action(k).unwrap();
        assert_eq!(f.degree(), k * (k - 1) / 2);
        assert!(f.is_homomorphism());
        assert!(is_transitive(&f));
        assert!(!is_cyclic(&f));
    }
}
