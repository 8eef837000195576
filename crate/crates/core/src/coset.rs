//! Left-multiplication actions of braid representations on cosets.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::braid::BraidRep;
use crate::error::CosetError;
use crate::perm::Permutation;

/// Default bound on subgroup order and coset count.
pub const DEFAULT_COSET_LIMIT: usize = 100_000;

/// Left cosets `gH` of a subgroup `H ≤ S_N`, each named by its
/// lexicographically least element (one-line form).
#[derive(Clone, Debug)]
pub struct CosetSpace {
    degree: usize,
    subgroup_generators: Vec<Permutation>,
    subgroup: Vec<Permutation>,
    representatives: Vec<Permutation>,
    lookup: BTreeMap<Vec<usize>, usize>,
}

impl CosetSpace {
    /// Enumerates `H` by closure and the cosets by breadth-first search
    /// over adjacent transpositions; both must stay within `limit`.
    pub fn new(degree: usize, subgroup_generators: Vec<Permutation>, limit: usize) -> Result<Self, CosetError> {
        if degree == 0 {
            return Err(CosetError::ZeroDegree);
        }
        let full_order = factorial(degree).ok_or(CosetError::DegreeTooLarge(degree))?;
        for g in &subgroup_generators {
            if g.degree() != degree {
                return Err(CosetError::DegreeMismatch { rep: g.degree(), space: degree });
            }
        }
        let subgroup = closure(degree, &subgroup_generators, limit)?;
        let mut space = CosetSpace {
            degree,
            subgroup_generators,
            subgroup,
            representatives: Vec::new(),
            lookup: BTreeMap::new(),
        };

        let steps: Vec<Permutation> = (1..degree)
            .map(|i| Permutation::transposition(degree, i, i + 1))
            .collect::<Result<_, _>>()?;
        let start = space.canonical(&Permutation::identity(degree)?);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.one_line());
        queue.push_back(start);
        let mut found = Vec::new();
        while let Some(rep) = queue.pop_front() {
            for s in &steps {
                let next = space.canonical(&s.compose_unchecked(&rep));
                if seen.insert(next.one_line()) {
                    if seen.len() > limit {
                        return Err(CosetError::LimitExceeded { what: "cosets", limit });
                    }
                    queue.push_back(next);
                }
            }
            found.push(rep);
        }

        let expected = full_order / space.subgroup.len() as u128;
        if found.len() as u128 != expected {
            return Err(CosetError::IndexMismatch { found: found.len(), expected });
        }
        found.sort();
        space.lookup = found.iter().enumerate().map(|(i, r)| (r.one_line(), i)).collect();
        space.representatives = found;
        Ok(space)
    }

    pub fn ambient_degree(&self) -> usize {
        self.degree
    }

    pub fn subgroup_generators(&self) -> &[Permutation] {
        &self.subgroup_generators
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup.len()
    }

    /// `N! / |H|`.
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Representatives in increasing one-line order; position + 1 is the
    /// point number in derived representations.
    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// Least element of `gH`.
    pub fn canonical(&self, g: &Permutation) -> Permutation {
        self.subgroup
            .iter()
            .map(|h| g.compose_unchecked(h))
            .min()
            .expect("subgroup contains the identity")
    }

    /// 1-based position of the coset `gH`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        self.lookup[&self.canonical(g).one_line()] + 1
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}

fn closure(degree: usize, gens: &[Permutation], limit: usize) -> Result<Vec<Permutation>, CosetError> {
    let id = Permutation::identity(degree)?;
    let mut seen = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(CosetError::LimitExceeded { what: "subgroup elements", limit });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Generator `i` sends coset `a` to the coset of `σ̂_i · rep_a`.
pub fn derived_hom(rep: &BraidRep, space: &CosetSpace) -> Result<BraidRep, CosetError> {
    if rep.degree() != space.degree {
        return Err(CosetError::DegreeMismatch { rep: rep.degree(), space: space.degree });
    }
    let gens = rep
        .generators()
        .iter()
        .map(|g| {
            let images: Vec<usize> =
                space.representatives.iter().map(|r| space.coset_of(&g.compose_unchecked(r))).collect();
            Permutation::from_images(&images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BraidRep::new(gens)?)
}

/// Generators of `S({1,2}) × S({3,...,k})`.
pub fn pair_stabilizer_generators(k: usize) -> Result<Vec<Permutation>, CosetError> {
    if k < 3 {
        return Err(CosetError::TooFewStrands(k));
    }
    core::iter::once(1)
        .chain(3..k)
        .map(|i| Permutation::transposition(k, i, i + 1).map_err(CosetError::from))
        .collect()
}

/// 2-subsets of `{1, ..., k}` in lexicographic order.
pub fn two_subsets(k: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|a| (a + 1..=k).map(move |b| (a, b))).collect()
}

/// The action of the canonical epimorphism on 2-subsets: generator `i`
/// applies `(i, i+1)` to each subset. Points are numbered by
/// [`two_subsets`]; this is the coset action on `S({1,2}) × S({3,...,k})`
/// without enumerating the group.
pub fn two_subset_action(k: usize) -> Result<BraidRep, CosetError> {
    if k < 3 {
        return Err(CosetError::TooFewStrands(k));
    }
    let subsets = two_subsets(k);
    let index: BTreeMap<(usize, usize), usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i + 1)).collect();
    let gens = (1..k)
        .map(|i| {
            let swap = |x: usize| if x == i { i + 1 } else if x == i + 1 { i } else { x };
            let images: Vec<usize> = subsets
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (swap(a), swap(b));
                    index[&(x.min(y), x.max(y))]
                })
                .collect();
            Permutation::from_images(&images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BraidRep::new(gens)?)
}
