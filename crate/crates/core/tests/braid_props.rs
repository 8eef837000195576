mod common;

use braidperm_core::braid::{alpha_word, canonical_mu, lin_model, model_c_part, phi, phi_unchecked, psi};
use braidperm_core::{BraidRep, ModelParams};
use common::{all_tuples, naive_braid_like, naive_commute};

/// Every table for `(m, l, k)`, valid or not.
fn all_tables(m: usize, l: usize, k: usize) -> Vec<ModelParams> {
    all_tuples(m / l, 2 * l * (k - 1))
        .into_iter()
        .map(|flat| ModelParams::new(m, l, k, flat.chunks(2 * l).map(<[usize]>::to_vec).collect()).unwrap())
        .collect()
}

/// Both relation families checked pointwise.
fn naive_is_homomorphism(rep: &BraidRep) -> bool {
    let g = rep.generators();
    (0..g.len()).all(|i| {
        (i + 1 >= g.len() || naive_braid_like(&g[i], &g[i + 1])) && (i + 2..g.len()).all(|j| naive_commute(&g[i], &g[j]))
    })
}

#[test]
fn psi_satisfies_relations() {
    for m in 1..=6 {
        for k in 2..=10 {
            let rep = psi(m, k).unwrap();
            assert_eq!(rep.degree(), m * k);
            assert!(rep.is_homomorphism(), "psi({m}, {k})");
            assert!(naive_is_homomorphism(&rep));
        }
    }
}

#[test]
fn condition_matches_relations_for_unit_blocks() {
    for m in 2..=3 {
        for k in 2..=5 {
            for params in all_tables(m, 1, k) {
                let rep = phi_unchecked(&params).unwrap();
                assert_eq!(rep.is_homomorphism(), params.satisfies_condition(), "{:?}", params.table());
                assert_eq!(rep.is_homomorphism(), naive_is_homomorphism(&rep));
            }
        }
    }
}

#[test]
fn unit_block_condition_is_equal_row_sums() {
    for params in all_tables(3, 1, 4) {
        let sums: Vec<usize> = params.table().iter().map(|r| (r[0] + r[1]) % 3).collect();
        assert_eq!(params.satisfies_condition(), sums.windows(2).all(|w| w[0] == w[1]));
    }
}

fn shift_holds(rep: &BraidRep) -> bool {
    let alpha = rep.image_of_word(&alpha_word(rep.strands())).unwrap();
    (1..rep.strands() - 1).all(|i| rep.gen(i).conjugate(&alpha.inverse()).unwrap() == *rep.gen(i + 1))
}

#[test]
fn alpha_shifts_generators() {
    for k in 3..=8 {
        assert!(shift_holds(&canonical_mu(k).unwrap()));
        for m in 1..=4 {
            assert!(shift_holds(&psi(m, k).unwrap()));
        }
        for which in 1..=3 {
            assert!(shift_holds(&lin_model(which, k).unwrap()));
        }
    }
    for params in all_tables(3, 1, 4).into_iter().filter(ModelParams::satisfies_condition) {
        assert!(shift_holds(&phi(&params).unwrap()));
    }
    for params in all_tables(4, 2, 3).into_iter().filter(ModelParams::satisfies_condition) {
        assert!(shift_holds(&phi(&params).unwrap()));
    }
}

/// For `k = 3`: whether the two C-parts are braid-like, and whether their
/// squares agree on the middle large block.
fn c_part_checks(params: &ModelParams) -> (bool, bool, bool) {
    let degree = params.m() * params.k();
    let c1 = model_c_part(params, 1).unwrap().expand(degree).unwrap();
    let c2 = model_c_part(params, 2).unwrap().expand(degree).unwrap();
    let rep = phi_unchecked(params).unwrap();
    let middle: Vec<usize> = (params.m() + 1..=2 * params.m()).collect();
    let squares_agree = (&c1 * &c1).restrict(&middle).unwrap() == (&c2 * &c2).restrict(&middle).unwrap();
    (naive_braid_like(&c1, &c2), naive_braid_like(rep.gen(1), rep.gen(2)), squares_agree)
}

#[test]
fn braid_likeness_lives_in_the_c_parts() {
    for (m, l) in [(2, 1), (3, 1), (4, 2), (6, 2), (2, 2), (4, 4)] {
        for params in all_tables(m, l, 3) {
            let (c_like, g_like, squares) = c_part_checks(&params);
            assert_eq!(c_like, g_like, "m={m} l={l} {:?}", params.table());
            assert_eq!(c_like, squares, "m={m} l={l} {:?}", params.table());
            assert_eq!(c_like, params.satisfies_condition());
        }
    }
}

#[test]
fn lin_one_has_the_cycle_shape_of_psi_two() {
    for k in 2..=8 {
        let (a, b) = (lin_model(1, k).unwrap(), psi(2, k).unwrap());
        assert!(a.is_homomorphism());
        for i in 1..k {
            assert_eq!(a.gen(i).cycle_type(), b.gen(i).cycle_type());
        }
    }
}
