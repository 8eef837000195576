//! Independent oracles for the integration tests. Nothing here calls the
//! library's own cycle or orbit machinery.
#![allow(dead_code)]

use braidperm_core::Permutation;
use proptest::prelude::*;

/// Every permutation of `1..=n`, as one-line images.
pub fn all_images(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    all_images(n).iter().map(|v| Permutation::from_images(v).unwrap()).collect()
}

/// Every vector in `{0..radix}^len`, lexicographic.
pub fn all_tuples(radix: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..radix).map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

/// Images `σ(start..start+r)` of every single `r`-cycle on that window.
pub fn window_cycles(start: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![start]];
    }
    // a cycle (start, x_2, ..., x_r) for each ordering of the rest
    let mut out = Vec::new();
    for order in all_images(r - 1) {
        let seq: Vec<usize> = std::iter::once(start).chain(order.iter().map(|&x| start + x)).collect();
        let mut sigma = vec![0; r];
        for w in 0..r {
            sigma[seq[w] - start] = seq[(w + 1) % r];
        }
        out.push(sigma);
    }
    out
}

/// Sorted cycle lengths (including 1) by walking the one-line form.
pub fn naive_cycle_lengths(p: &Permutation) -> Vec<usize> {
    let line = p.one_line();
    let mut seen = vec![false; line.len()];
    let mut out = Vec::new();
    for s in 0..line.len() {
        if seen[s] {
            continue;
        }
        let (mut x, mut len) = (s, 0);
        while !seen[x] {
            seen[x] = true;
            x = line[x] - 1;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// `a·b·a == b·a·b` computed pointwise.
pub fn naive_braid_like(a: &Permutation, b: &Permutation) -> bool {
    (1..=a.degree()).all(|x| a.apply(b.apply(a.apply(x))) == b.apply(a.apply(b.apply(x))))
}

pub fn naive_commute(a: &Permutation, b: &Permutation) -> bool {
    (1..=a.degree()).all(|x| a.apply(b.apply(x)) == b.apply(a.apply(x)))
}

pub fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

pub fn arb_perm_any(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(arb_perm)
}
