//! Structural statistics of braid representations: supports, goodness,
//! orbits, r-components, retractions and reductions.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidRep;
use crate::error::AnalysisError;
use crate::perm::Permutation;

/// `supp(ω) = |supp(σ̂_1)|`.
pub fn supp_stat(rep: &BraidRep) -> usize {
    rep.gen(1).support_size()
}

/// `intersect(ω) = |supp(σ̂_1) ∩ supp(σ̂_2)|`; needs `k >= 3`.
pub fn intersect_stat(rep: &BraidRep) -> Result<usize, AnalysisError> {
    if rep.strands() < 3 {
        return Err(AnalysisError::TooFewStrands { needed: 3, strands: rep.strands() });
    }
    let (a, b) = (rep.gen(1), rep.gen(2));
    Ok((0..rep.degree()).filter(|&x| a.moves0(x) && b.moves0(x)).count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoodnessKind {
    /// Generators at distance `> 1` have disjoint supports.
    Type1,
    /// All generators share one support.
    Type2,
    NotGood,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessVerdict {
    pub kind: GoodnessKind,
    pub type1_holds: bool,
    pub type2_holds: bool,
    /// For `NotGood`: generators `(i, j)`, `|i - j| > 1`, with overlapping supports.
    pub overlapping: Option<(usize, usize)>,
    /// For `NotGood`: generators `(i, j)` with different supports.
    pub unequal: Option<(usize, usize)>,
}

/// Classifies by the two goodness clauses. When both hold (possible only
/// for very few strands) the verdict is `Type2`, with both flags set.
pub fn goodness(rep: &BraidRep) -> GoodnessVerdict {
    let supports: Vec<Vec<usize>> = rep.generators().iter().map(Permutation::support).collect();
    let n = supports.len();
    let mut overlapping = None;
    'outer: for i in 0..n {
        for j in i + 2..n {
            if intersects(&supports[i], &supports[j]) {
                overlapping = Some((i + 1, j + 1));
                break 'outer;
            }
        }
    }
    let unequal = (1..n).find(|&i| supports[i] != supports[0]).map(|i| (1, i + 1));
    let type1_holds = overlapping.is_none();
    let type2_holds = unequal.is_none();
    let kind = if type2_holds {
        GoodnessKind::Type2
    } else if type1_holds {
        GoodnessKind::Type1
    } else {
        GoodnessKind::NotGood
    };
    GoodnessVerdict { kind, type1_holds, type2_holds, overlapping, unequal }
}

fn intersects(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Orbit of the point `x` under the group generated by the images, increasing.
pub fn orbit(rep: &BraidRep, x: usize) -> Vec<usize> {
    orbit_of_gens(rep.generators(), rep.degree(), x)
}

pub(crate) fn orbit_of_gens(gens: &[Permutation], degree: usize, x: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut queue = VecDeque::new();
    seen[x - 1] = true;
    queue.push_back(x - 1);
    // finite group: closure under the generators alone suffices, inverses
    // are positive powers
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g.apply0(y);
            if !seen[z] {
                seen[z] = true;
                queue.push_back(z);
            }
        }
    }
    seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i + 1).collect()
}

/// All orbits, ordered by least point.
pub fn orbits(rep: &BraidRep) -> Vec<Vec<usize>> {
    let mut covered = vec![false; rep.degree()];
    let mut out = Vec::new();
    for x in 1..=rep.degree() {
        if !covered[x - 1] {
            let o = orbit(rep, x);
            for &y in &o {
                covered[y - 1] = true;
            }
            out.push(o);
        }
    }
    out
}

pub fn is_transitive(rep: &BraidRep) -> bool {
    orbit(rep, 1).len() == rep.degree()
}

/// For a homomorphism, cyclic image is equivalent to all generator images
/// coinciding.
pub fn is_cyclic(rep: &BraidRep) -> bool {
    debug_assert!(rep.is_homomorphism(), "is_cyclic expects a homomorphism");
    rep.generators().windows(2).all(|w| w[0] == w[1])
}

/// Cycles of `p` grouped by length.
pub fn r_components(p: &Permutation) -> BTreeMap<usize, Vec<Vec<usize>>> {
    let mut out: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in p.cycles() {
        out.entry(c.len()).or_default().push(c);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Cycles of `σ̂_1`, acted on by `σ̂_3, ..., σ̂_{k-1}`.
    Head,
    /// Cycles of `σ̂_{k-1}`, acted on by `σ̂_1, ..., σ̂_{k-3}`.
    Tail,
}

impl Side {
    /// 1-based indices of the generators acting on this side's subcomponents.
    fn acting_generators(self, strands: usize) -> core::ops::RangeInclusive<usize> {
        match self {
            Side::Head => 3..=strands - 1,
            Side::Tail => 1..=strands - 3,
        }
    }

    fn source_generator(self, strands: usize) -> usize {
        match self {
            Side::Head => 1,
            Side::Tail => strands - 1,
        }
    }
}

/// A set of `r`-cycles of `σ̂_1` (head) or `σ̂_{k-1}` (tail).
///
/// Cycles are kept sorted by least support point; that order numbers the
/// points of the retraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSubcomponent {
    side: Side,
    r: usize,
    cycles: Vec<Vec<usize>>,
}

impl RSubcomponent {
    /// Validates that every cycle is an `r`-cycle of the side's generator.
    pub fn new(rep: &BraidRep, side: Side, r: usize, cycles: Vec<Vec<usize>>) -> Result<Self, AnalysisError> {
        if rep.strands() < 4 {
            return Err(AnalysisError::TooFewStrands { needed: 4, strands: rep.strands() });
        }
        if cycles.is_empty() {
            return Err(AnalysisError::EmptySubcomponent);
        }
        let source = rep.gen(side.source_generator(rep.strands()));
        let own: Vec<Vec<usize>> = source.cycles();
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(cycles.len());
        for (idx, c) in cycles.iter().enumerate() {
            let norm = normalize_cycle(c);
            if c.len() != r || !own.contains(&norm) {
                return Err(AnalysisError::NotASubcomponentCycle { cycle: idx, r });
            }
            if let Some(prev) = normalized.iter().position(|d| *d == norm) {
                return Err(AnalysisError::OverlappingCycles(prev, idx));
            }
            normalized.push(norm);
        }
        normalized.sort();
        Ok(RSubcomponent { side, r, cycles: normalized })
    }

    /// The whole `r`-component of the side's generator.
    pub fn component(rep: &BraidRep, side: Side, r: usize) -> Result<Self, AnalysisError> {
        if rep.strands() < 4 {
            return Err(AnalysisError::TooFewStrands { needed: 4, strands: rep.strands() });
        }
        let source = rep.gen(side.source_generator(rep.strands()));
        let cycles = r_components(source).remove(&r).unwrap_or_default();
        Self::new(rep, side, r, cycles)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Union of the cycle supports, increasing.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }
}

fn normalize_cycle(c: &[usize]) -> Vec<usize> {
    let Some(pos) = c.iter().enumerate().min_by_key(|(_, &x)| x).map(|(i, _)| i) else {
        return Vec::new();
    };
    c[pos..].iter().chain(&c[..pos]).copied().collect()
}

/// The permutation a generator induces on the subcomponent: cycle `a` goes
/// to cycle `b` when `g·D_a·g⁻¹ = D_b`. Composing these respects products,
/// so the result is a representation of the braid group on `k - 2` strands.
pub fn retraction(rep: &BraidRep, sub: &RSubcomponent) -> Result<BraidRep, AnalysisError> {
    let k = rep.strands();
    if k < 4 {
        return Err(AnalysisError::TooFewStrands { needed: 4, strands: k });
    }
    let index: BTreeMap<&[usize], usize> =
        sub.cycles.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let t = sub.cycles.len();
    let mut gens = Vec::new();
    for gi in sub.side.acting_generators(k) {
        let g = rep.gen(gi);
        let mut images = Vec::with_capacity(t);
        for (ci, c) in sub.cycles.iter().enumerate() {
            // g D g⁻¹ is the cycle (g(c_0), g(c_1), ...)
            let moved: Vec<usize> = c.iter().map(|&x| g.apply(x)).collect();
            let target = index
                .get(normalize_cycle(&moved).as_slice())
                .ok_or(AnalysisError::NotStabilized { generator: gi, cycle: ci })?;
            images.push(target + 1);
        }
        gens.push(Permutation::from_images(&images)?);
    }
    Ok(BraidRep::new(gens)?)
}

/// Which generators a reduction keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionSide {
    /// `σ̂_3, ..., σ̂_{k-1}`
    Head,
    /// `σ̂_1, ..., σ̂_{k-3}`
    Tail,
    /// every generator
    Full,
}

/// Restriction of the selected generators to an invariant point set,
/// relabelled onto `1..=|Σ|` in increasing order.
pub fn reduction(rep: &BraidRep, sigma_set: &[usize], side: ReductionSide) -> Result<BraidRep, AnalysisError> {
    let k = rep.strands();
    let range = match side {
        ReductionSide::Full => 1..=k - 1,
        ReductionSide::Head | ReductionSide::Tail => {
            if k < 4 {
                return Err(AnalysisError::TooFewStrands { needed: 4, strands: k });
            }
            let s = if side == ReductionSide::Head { Side::Head } else { Side::Tail };
            s.acting_generators(k)
        }
    };
    let mut gens = Vec::new();
    for gi in range {
        let r = rep.gen(gi).restrict(sigma_set).map_err(|e| match e {
            crate::error::PermError::NotInvariant { .. } => AnalysisError::NotInvariant { generator: gi },
            other => AnalysisError::Perm(other),
        })?;
        gens.push(r);
    }
    Ok(BraidRep::new(gens)?)
}

/// For `ω: B_k → S_k` non-cyclic with `ω(σ_i) = (i, i+1)` for all `i ≠ k-2`,
/// the only possible images of `σ_{k-2}`: `(k-2, k-1)` and `(k-2, k)`.
pub fn missing_mu_candidates(k: usize) -> Result<[Permutation; 2], AnalysisError> {
    if k < 5 {
        return Err(AnalysisError::TooFewStrands { needed: 5, strands: k });
    }
    Ok([
        Permutation::transposition(k, k - 2, k - 1)?,
        Permutation::transposition(k, k - 2, k)?,
    ])
}

/// Whether `rep` has the shape `ω(σ_i) = (i, i+1)` for every `i ≠ k-2`.
pub fn is_mu_except_penultimate(rep: &BraidRep) -> bool {
    let k = rep.strands();
    rep.degree() == k
        && k >= 3
        && (1..k).filter(|&i| i != k - 2).all(|i| {
            let g = rep.gen(i);
            g.cycles() == [vec![i, i + 1]]
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{canonical_mu, lin_model, phi, psi, ModelParams};

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn phi_zero(m: usize, k: usize) -> BraidRep {
        phi(&ModelParams::new(m, 1, k, vec![vec![0, 0]; k - 1]).unwrap()).unwrap()
    }

    #[test]
    fn stats_examples() {
        let mu = canonical_mu(7).unwrap();
        assert_eq!((supp_stat(&mu), intersect_stat(&mu).unwrap()), (2, 1));
        let psi3 = psi(3, 7).unwrap();
        assert_eq!((supp_stat(&psi3), intersect_stat(&psi3).unwrap()), (6, 3));
        let phi2 = lin_model(2, 7).unwrap();
        assert_eq!((supp_stat(&phi2), intersect_stat(&phi2).unwrap()), (14, 14));
        assert_eq!(
            intersect_stat(&canonical_mu(2).unwrap()).unwrap_err(),
            AnalysisError::TooFewStrands { needed: 3, strands: 2 }
        );
    }

    #[test]
    fn goodness_examples() {
        assert_eq!(goodness(&psi(3, 7).unwrap()).kind, GoodnessKind::Type1);
        assert_eq!(goodness(&phi_zero(3, 7)).kind, GoodnessKind::Type2);
        let mixed = canonical_mu(5).unwrap().disjoint_product(&lin_model(2, 5).unwrap()).unwrap();
        let v = goodness(&mixed);
        assert_eq!(v.kind, GoodnessKind::NotGood);
        assert_eq!(v.overlapping, Some((1, 3)));
        assert_eq!(v.unequal, Some((1, 2)));
    }

    #[test]
    fn goodness_tie_break_at_two_strands() {
        let v = goodness(&canonical_mu(2).unwrap());
        assert!(v.type1_holds && v.type2_holds);
        assert_eq!(v.kind, GoodnessKind::Type2);
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&psi(2, 7).unwrap()));
        let embedded = canonical_mu(4).unwrap().extend(5).unwrap();
        assert!(!is_transitive(&embedded));
        assert_eq!(orbit(&embedded, 5), vec![5]);
        assert_eq!(orbits(&embedded), vec![vec![1, 2, 3, 4], vec![5]]);
    }

    #[test]
    fn cyclic_examples() {
        let same = BraidRep::new(vec![p(3, "(1,2,3)"); 3]).unwrap();
        assert!(is_cyclic(&same));
        assert!(!is_cyclic(&psi(3, 7).unwrap()));
        assert!(!is_cyclic(&canonical_mu(7).unwrap()));
    }

    #[test]
    fn r_component_examples() {
        let c = r_components(&p(7, "(1,2)(3,4)(5,6,7)"));
        assert_eq!(c[&2].len(), 2);
        assert_eq!(c[&3], vec![vec![5, 6, 7]]);
        let g1 = phi_zero(3, 7).gen(1).clone();
        let c = r_components(&g1);
        assert_eq!((c[&2].len(), c[&3].len()), (3, 5));
        assert_eq!(r_components(psi(3, 7).unwrap().gen(1))[&6].len(), 1);
    }

    #[test]
    fn retraction_of_block_component_is_mu() {
        let rep = phi_zero(3, 7);
        let sub = RSubcomponent::component(&rep, Side::Head, 3).unwrap();
        assert_eq!(sub.cycles().len(), 5);
        let omega = retraction(&rep, &sub).unwrap();
        assert_eq!(omega, canonical_mu(5).unwrap());
    }

    #[test]
    fn retraction_of_fixed_cycle_is_trivial() {
        let rep = psi(3, 7).unwrap();
        let sub = RSubcomponent::component(&rep, Side::Head, 6).unwrap();
        let omega = retraction(&rep, &sub).unwrap();
        assert_eq!(omega.degree(), 1);
        assert_eq!(omega.strands(), 5);
        assert!(omega.generators().iter().all(Permutation::is_identity));
    }

    #[test]
    fn retraction_rejects_unstable_subsets() {
        let rep = phi_zero(3, 7);
        // A_3 alone is moved to A_4 by σ̂_3
        let sub = RSubcomponent::new(&rep, Side::Head, 3, vec![vec![7, 8, 9]]).unwrap();
        assert_eq!(
            retraction(&rep, &sub).unwrap_err(),
            AnalysisError::NotStabilized { generator: 3, cycle: 0 }
        );
        assert!(RSubcomponent::new(&rep, Side::Head, 3, vec![vec![1, 2, 3]]).is_err());
        assert!(RSubcomponent::new(&rep, Side::Head, 3, vec![vec![8, 9, 7], vec![7, 8, 9]]).is_err());
    }

    #[test]
    fn tail_retraction() {
        let rep = phi_zero(3, 7);
        let sub = RSubcomponent::component(&rep, Side::Tail, 3).unwrap();
        let omega = retraction(&rep, &sub).unwrap();
        assert_eq!(omega, canonical_mu(5).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let embedded = canonical_mu(4).unwrap().extend(6).unwrap();
        let red = reduction(&embedded, &orbit(&embedded, 1), ReductionSide::Full).unwrap();
        assert!(is_transitive(&red));
        assert_eq!(red, canonical_mu(4).unwrap());

        let rep = phi_zero(3, 7);
        assert_eq!(reduction(&rep, &(1..=21).collect::<Vec<_>>(), ReductionSide::Full).unwrap(), rep);

        let sub = RSubcomponent::component(&rep, Side::Head, 3).unwrap();
        let red = reduction(&rep, &sub.support(), ReductionSide::Head).unwrap();
        assert_eq!(red.degree(), 15);
        assert_eq!(red.strands(), 5);
        // σ̂_3 restricted: block pair (3,4) swapped, blocks 5..7 rotated
        assert_eq!(red.gen(1), &p(15, "(1,4)(2,5)(3,6)(7,8,9)(10,11,12)(13,14,15)"));

        assert_eq!(
            reduction(&rep, &[1, 2, 3], ReductionSide::Full).unwrap_err(),
            AnalysisError::NotInvariant { generator: 1 }
        );
    }

    #[test]
    fn missing_mu_predicate() {
        let [a, b] = missing_mu_candidates(6).unwrap();
        assert_eq!(a, p(6, "(4,5)"));
        assert_eq!(b, p(6, "(4,6)"));
        assert!(is_mu_except_penultimate(&canonical_mu(6).unwrap()));
        assert!(!is_mu_except_penultimate(&psi(2, 6).unwrap()));
    }
}
