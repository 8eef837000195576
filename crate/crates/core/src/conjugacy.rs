//! Conjugacy of braid representations and normal forms of the block models.

use alloc::vec;
use alloc::vec::Vec;

use crate::block::{minimal_multiplier, CPermSpec};
use crate::braid::{phi, psi, BraidRep, ModelParams};
use crate::error::ConjugacyError;
use crate::perm::Permutation;

/// Finds `θ` with `a.conjugate(θ) == b` generator-wise, i.e.
/// `θ⁻¹·a_i·θ = b_i` for every `i`.
///
/// Complete backtracking: each `b`-orbit gets one seed image, the rest of
/// the orbit is forced by `θ(b_i(x)) = a_i(θ(x))`.
pub fn are_conjugate(a: &BraidRep, b: &BraidRep) -> Result<Option<Permutation>, ConjugacyError> {
    if a.strands() != b.strands() || a.degree() != b.degree() {
        return Err(ConjugacyError::ShapeMismatch {
            a_strands: a.strands(),
            a_degree: a.degree(),
            b_strands: b.strands(),
            b_degree: b.degree(),
        });
    }
    let same_types = a
        .generators()
        .iter()
        .zip(b.generators())
        .all(|(x, y)| x.cycle_type() == y.cycle_type());
    if !same_types {
        return Ok(None);
    }
    let mut search = Matcher::new(a, b);
    Ok(search.run().then(|| Permutation::from_images0_unchecked(search.theta.iter().map(|v| v.unwrap()).collect())))
}

struct Matcher {
    n: usize,
    /// forward and inverse images, per generator, 0-based
    a_fwd: Vec<Vec<usize>>,
    a_inv: Vec<Vec<usize>>,
    b_fwd: Vec<Vec<usize>>,
    b_inv: Vec<Vec<usize>>,
    /// per point, the cycle length under each generator; images must agree
    a_sig: Vec<Vec<usize>>,
    b_sig: Vec<Vec<usize>>,
    theta: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl Matcher {
    fn new(a: &BraidRep, b: &BraidRep) -> Self {
        let n = a.degree();
        let tables = |r: &BraidRep| -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
            let fwd: Vec<Vec<usize>> = r.generators().iter().map(|g| (0..n).map(|x| g.apply0(x)).collect()).collect();
            let inv = r
                .generators()
                .iter()
                .map(|g| g.inverse())
                .map(|g| (0..n).map(|x| g.apply0(x)).collect())
                .collect();
            (fwd, inv)
        };
        let signature = |r: &BraidRep| -> Vec<Vec<usize>> {
            (0..n).map(|x| r.generators().iter().map(|g| g.cycle_len0(x)).collect()).collect()
        };
        let (a_fwd, a_inv) = tables(a);
        let (b_fwd, b_inv) = tables(b);
        Matcher {
            n,
            a_fwd,
            a_inv,
            b_fwd,
            b_inv,
            a_sig: signature(a),
            b_sig: signature(b),
            theta: vec![None; n],
            used: vec![false; n],
            trail: Vec::new(),
        }
    }

    fn run(&mut self) -> bool {
        self.extend()
    }

    fn extend(&mut self) -> bool {
        let Some(x) = self.theta.iter().position(Option::is_none) else {
            return true;
        };
        for y in 0..self.n {
            if self.used[y] || self.a_sig[y] != self.b_sig[x] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.extend() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            match self.theta[x] {
                Some(z) if z == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.used[y] || self.a_sig[y] != self.b_sig[x] {
                return false;
            }
            self.theta[x] = Some(y);
            self.used[y] = true;
            self.trail.push(x);
            for g in 0..self.b_fwd.len() {
                stack.push((self.b_fwd[g][x], self.a_fwd[g][y]));
                stack.push((self.b_inv[g][x], self.a_inv[g][y]));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.theta[x].take().unwrap();
            self.used[y] = false;
        }
    }
}

/// A block model brought to its canonical table `(p, 0, ..., 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub m: usize,
    pub l: usize,
    pub k: usize,
    pub p: usize,
    /// Carries `phi(params)` onto `phi(canonical(p))` by conjugation.
    pub conjugator: Permutation,
}

impl NormalForm {
    pub fn canonical_params(&self) -> ModelParams {
        ModelParams::canonical(self.m, self.l, self.k, self.p).expect("normal form holds valid parameters")
    }
}

/// Computes the class invariant `p` and an explicit conjugator onto the
/// canonical model. The conjugator is a product of per-block rotations
/// whose offsets `s_q` follow from the table; the round trip is checked.
pub fn normalize_model(params: &ModelParams) -> Result<NormalForm, ConjugacyError> {
    let input = phi(params)?;
    let (m, l, k) = (params.m(), params.l(), params.k());
    let modulus = params.block_modulus();
    let inner = psi(l, k)?;
    // s[q - 1] for small blocks q = 1..=kl
    let mut s = vec![0usize; k * l];

    // Generator 1: every offset of the conjugate except the one at block 1
    // vanishes iff s_{π(d)} = s_d + t^1_{π(d)} along the 2l-cycle π of
    // ψ_l(σ_1), starting from the free anchor π²(1).
    let first = inner.gen(1);
    let anchor = first.apply(first.apply(1));
    s[anchor - 1] = 0;
    let mut d = anchor;
    for _ in 1..2 * l {
        let next = first.apply(d);
        s[next - 1] = (s[d - 1] + params.offset(1, next)) % modulus;
        d = next;
    }
    let p = (s[d - 1] + params.offset(1, anchor)) % modulus;

    for q in 2..k {
        let back = inner.gen(q).inverse();
        for j in q * l + 1..=(q + 1) * l {
            s[j - 1] = (s[back.apply(j) - 1] + params.offset(q, j)) % modulus;
        }
    }

    let degree = m * k;
    let mut conjugator = Permutation::identity(degree).map_err(crate::error::BraidError::from)?;
    for i in 1..=k {
        let start = (i - 1) * l + 1;
        let rotation: Vec<usize> = (start + 1..start + l).chain(core::iter::once(start)).collect();
        let spec = CPermSpec::new(start, modulus, rotation, s[start - 1..start - 1 + l].to_vec())
            .map_err(crate::error::BraidError::from)?;
        let factor = spec.expand(degree).map_err(crate::error::BraidError::from)?;
        // disjoint windows, so the factors commute
        conjugator = conjugator.compose_unchecked(&factor);
    }

    let form = NormalForm { m, l, k, p, conjugator };
    let target = phi(&form.canonical_params())?;
    if input.conjugate(&form.conjugator).map_err(crate::error::BraidError::from)? != target {
        return Err(ConjugacyError::RoundTripFailed);
    }
    Ok(form)
}

/// Least `1 <= l <= modulus` with `l·p ≡ 0 (mod modulus)`.
pub fn minimal_annihilator(p: usize, modulus: usize) -> usize {
    minimal_multiplier(p, modulus)
}

/// Outcome of the class count for the block models with parameters `(m, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassCount {
    /// The hypothesis holds and there are exactly this many classes.
    Exactly(usize),
    /// `2l·l_p = m/l` for this `p`; no count is asserted.
    HypothesisFails { p: usize, l_p: usize },
}

/// `m/l + 1` classes (the models `p = 0..m/l` and `ψ_m`) provided
/// `2l·l_p ≠ m/l` for every residue `p`.
pub fn class_count(m: usize, l: usize) -> Result<ClassCount, ConjugacyError> {
    if l == 0 || !m.is_multiple_of(l) {
        return Err(ConjugacyError::NotADivisor { m, l });
    }
    if l >= m {
        return Err(ConjugacyError::DegenerateDivisor { m, l });
    }
    let modulus = m / l;
    for p in 0..modulus {
        let l_p = minimal_annihilator(p, modulus);
        if 2 * l * l_p == modulus {
            return Ok(ClassCount::HypothesisFails { p, l_p });
        }
    }
    Ok(ClassCount::Exactly(modulus + 1))
}
