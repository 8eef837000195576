//! Candidate homomorphisms `B_k → S_n` given by generator images, and the
//! model families built from block cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::block::{block_cycles_product, CPermSpec};
use crate::error::{BraidError, PermError};
use crate::perm::Permutation;

/// Images of the Artin generators `σ_1, ..., σ_{k-1}` in `S_n`.
///
/// `generators()[i]` is the image of `σ_{i+1}`. Whether the images satisfy
/// the braid relations is checked on demand by [`BraidRep::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidRep {
    degree: usize,
    gens: Vec<Permutation>,
}

/// A violated defining relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationFailure {
    /// `σ̂_i σ̂_{i+1} σ̂_i ≠ σ̂_{i+1} σ̂_i σ̂_{i+1}`
    Braid { i: usize },
    /// `σ̂_i σ̂_j ≠ σ̂_j σ̂_i` with `|i - j| >= 2`
    Commute { i: usize, j: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl BraidRep {
    pub fn new(gens: Vec<Permutation>) -> Result<Self, BraidError> {
        let Some(first) = gens.first() else {
            return Err(BraidError::TooFewStrands(1));
        };
        let degree = first.degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(BraidError::MixedDegrees);
        }
        Ok(BraidRep { degree, gens })
    }

    /// Number of strands `k`.
    pub fn strands(&self) -> usize {
        self.gens.len() + 1
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Image of `σ_i`, 1-based. Panics when `i` is out of range.
    pub fn gen(&self, i: usize) -> &Permutation {
        &self.gens[i - 1]
    }

    pub fn into_generators(self) -> Vec<Permutation> {
        self.gens
    }

    /// Checks every braid and far-commutation relation.
    pub fn verify(&self) -> RelationReport {
        let mut failures = Vec::new();
        let n = self.gens.len();
        for i in 0..n {
            if i + 1 < n && !self.gens[i].is_braid_like_unchecked(&self.gens[i + 1]) {
                failures.push(RelationFailure::Braid { i: i + 1 });
            }
            for j in i + 2..n {
                if !self.gens[i].commutes_unchecked(&self.gens[j]) {
                    failures.push(RelationFailure::Commute { i: i + 1, j: j + 1 });
                }
            }
        }
        RelationReport { failures }
    }

    /// Same verdict as [`verify`](Self::verify), stopping at the first failure.
    pub fn is_homomorphism(&self) -> bool {
        let g = &self.gens;
        (0..g.len()).all(|i| {
            (i + 1 >= g.len() || g[i].is_braid_like_unchecked(&g[i + 1]))
                && (i + 2..g.len()).all(|j| g[i].commutes_unchecked(&g[j]))
        })
    }

    /// Product of generator images along a word; `+i` stands for `σ_i`,
    /// `-i` for `σ_i⁻¹`. The leftmost letter is the leftmost factor.
    pub fn image_of_word(&self, word: &[i64]) -> Result<Permutation, BraidError> {
        let max = self.gens.len();
        let mut acc = Permutation::identity(self.degree)?;
        for &letter in word {
            let idx = letter.unsigned_abs() as usize;
            if letter == 0 || idx > max {
                return Err(BraidError::GeneratorIndex { index: letter, max });
            }
            let g = &self.gens[idx - 1];
            acc = if letter > 0 {
                acc.compose_unchecked(g)
            } else {
                acc.compose_unchecked(&g.inverse())
            };
        }
        Ok(acc)
    }

    /// `rep^θ`: every generator image replaced by `θ⁻¹ σ̂_i θ`.
    pub fn conjugate(&self, theta: &Permutation) -> Result<Self, PermError> {
        if theta.degree() != self.degree {
            return Err(PermError::DegreeMismatch { left: self.degree, right: theta.degree() });
        }
        Ok(BraidRep {
            degree: self.degree,
            gens: self.gens.iter().map(|g| g.conjugate_unchecked(theta)).collect(),
        })
    }

    /// Disjoint product: `other` acts on the points after this one's.
    pub fn disjoint_product(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands() != other.strands() {
            return Err(BraidError::InvalidParams("disjoint product needs equal strand counts"));
        }
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(gens)
    }

    /// The same images acting on a larger point set.
    pub fn extend(&self, degree: usize) -> Result<Self, BraidError> {
        let gens = self.gens.iter().map(|g| g.extend(degree)).collect::<Result<Vec<_>, _>>()?;
        Self::new(gens)
    }
}

/// The word `σ_1 σ_2 ⋯ σ_{k-1}`.
pub fn alpha_word(strands: usize) -> Vec<i64> {
    (1..strands as i64).collect()
}

/// `μ_k(σ_i) = (i, i+1)` on `Δ_k`.
pub fn canonical_mu(k: usize) -> Result<BraidRep, BraidError> {
    if k < 2 {
        return Err(BraidError::TooFewStrands(k));
    }
    let gens = (1..k).map(|i| Permutation::transposition(k, i, i + 1)).collect::<Result<Vec<_>, _>>()?;
    BraidRep::new(gens)
}

/// `ψ_m(σ_i) = C^{(i,i+1),m}_{1,0}`, the `2m`-cycle
/// `(a^i_0, a^{i+1}_0, a^i_1, a^{i+1}_1, ...)` on `Δ_{mk}`.
pub fn psi(m: usize, k: usize) -> Result<BraidRep, BraidError> {
    if k < 2 {
        return Err(BraidError::TooFewStrands(k));
    }
    if m == 0 {
        return Err(BraidError::InvalidParams("m must be at least 1"));
    }
    let degree = m * k;
    let gens = (1..k)
        .map(|i| {
            let offsets = if m == 1 { vec![0, 0] } else { vec![1, 0] };
            CPermSpec::new(i, m, vec![i + 1, i], offsets).and_then(|c| c.expand(degree))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidRep::new(gens)
}

/// Parameters `(m, l, t)` of a block model `φ_{m,l,t}: B_k → S_{mk}`.
///
/// `t[i-1]` lists `t^i_q` for `q = (i-1)l + 1, ..., (i+1)l`, each in
/// `{0, ..., m/l - 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelParams {
    m: usize,
    l: usize,
    k: usize,
    t: Vec<Vec<usize>>,
}

impl ModelParams {
    /// Validates shapes and ranges; does not check the offset condition.
    pub fn new(m: usize, l: usize, k: usize, t: Vec<Vec<usize>>) -> Result<Self, BraidError> {
        if m < 2 {
            return Err(BraidError::InvalidParams("m must be at least 2"));
        }
        if l == 0 || l > m || !m.is_multiple_of(l) {
            return Err(BraidError::NotADivisor { m, l });
        }
        if k < 2 {
            return Err(BraidError::TooFewStrands(k));
        }
        if t.len() != k - 1 {
            return Err(BraidError::InvalidParams("t must have one row per generator"));
        }
        let modulus = m / l;
        for row in &t {
            if row.len() != 2 * l {
                return Err(BraidError::InvalidParams("each row of t must have 2l entries"));
            }
            if row.iter().any(|&v| v >= modulus) {
                return Err(BraidError::InvalidParams("offset outside 0..m/l"));
            }
        }
        Ok(ModelParams { m, l, k, t })
    }

    /// Rows `(p, 0, ..., 0)` for every generator.
    pub fn canonical(m: usize, l: usize, k: usize, p: usize) -> Result<Self, BraidError> {
        if l == 0 {
            return Err(BraidError::NotADivisor { m, l });
        }
        let mut row = vec![0; 2 * l];
        row[0] = p;
        Self::new(m, l, k, vec![row; k.saturating_sub(1)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.t
    }

    /// Size of each small block, `m / l`.
    pub fn block_modulus(&self) -> usize {
        self.m / self.l
    }

    /// `t^i_q`, with `q` an absolute small-block index.
    pub fn offset(&self, i: usize, q: usize) -> usize {
        self.t[i - 1][q - (i - 1) * self.l - 1]
    }

    /// Checks, for `i = 1..k-2` and `j ∈ {0..l-1}`,
    /// `t^i_{(i-1)l+1+|1+j|_l} + t^i_{il+1+|1+j|_l} ≡ t^{i+1}_{(i+1)l+1+j} + t^{i+1}_{il+1+|1+j|_l} (mod m/l)`.
    pub fn check_condition(&self) -> Result<(), BraidError> {
        let l = self.l;
        let n = self.block_modulus();
        for i in 1..self.k.saturating_sub(1) {
            for j in 0..l {
                let jj = (1 + j) % l;
                let lhs = self.offset(i, (i - 1) * l + 1 + jj) + self.offset(i, i * l + 1 + jj);
                let rhs = self.offset(i + 1, (i + 1) * l + 1 + j) + self.offset(i + 1, i * l + 1 + jj);
                if lhs % n != rhs % n {
                    return Err(BraidError::ConditionT { i, next: i + 1, j });
                }
            }
        }
        Ok(())
    }

    pub fn satisfies_condition(&self) -> bool {
        self.check_condition().is_ok()
    }
}

/// The C-part of generator `i` in `φ_{m,l,t}`: the spec on blocks
/// `(i-1)l+1, ..., (i+1)l` of size `m/l` with inner permutation `ψ_l(σ_i)`.
pub fn model_c_part(params: &ModelParams, i: usize) -> Result<CPermSpec, BraidError> {
    let l = params.l;
    let inner = psi(l, params.k)?;
    Ok(CPermSpec::from_block_permutation(
        (i - 1) * l + 1,
        2 * l,
        params.block_modulus(),
        inner.gen(i),
        params.t[i - 1].clone(),
    )?)
}

/// `φ_{m,l,t}` after checking the offset condition.
pub fn phi(params: &ModelParams) -> Result<BraidRep, BraidError> {
    params.check_condition()?;
    phi_unchecked(params)
}

/// `φ_{m,l,t}` without the offset condition; the result need not satisfy
/// the braid relations. Exists for cross-checking the condition by brute force.
pub fn phi_unchecked(params: &ModelParams) -> Result<BraidRep, BraidError> {
    let (m, l, k) = (params.m, params.l, params.k);
    let n = params.block_modulus();
    let degree = m * k;
    let inner = psi(l, k)?;
    let mut gens = Vec::with_capacity(k - 1);
    for i in 1..k {
        let c = CPermSpec::from_block_permutation(
            (i - 1) * l + 1,
            2 * l,
            n,
            inner.gen(i),
            params.t[i - 1].clone(),
        )?
        .expand(degree)?;
        let outside = (1..=(i - 1) * l).chain((i + 1) * l + 1..=k * l);
        let blocks = block_cycles_product(n, outside, degree)?;
        // disjoint supports, so the order of the factors is irrelevant
        gens.push(blocks.compose_unchecked(&c));
    }
    BraidRep::new(gens)
}

/// The three models `B_k → S_{2k}`: `φ_1(σ_i) = (2i-1, 2i+2, 2i, 2i+1)`,
/// `φ_2 = φ_{2,1,(0,0)}`, `φ_3 = φ_{2,1,(0,1)}`.
pub fn lin_model(which: u8, k: usize) -> Result<BraidRep, BraidError> {
    if k < 2 {
        return Err(BraidError::TooFewStrands(k));
    }
    match which {
        1 => {
            let degree = 2 * k;
            let gens = (1..k)
                .map(|i| Permutation::from_cycles(degree, &[[2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1]]))
                .collect::<Result<Vec<_>, _>>()?;
            BraidRep::new(gens)
        }
        2 => phi(&ModelParams::new(2, 1, k, vec![vec![0, 0]; k - 1])?),
        3 => phi(&ModelParams::new(2, 1, k, vec![vec![0, 1]; k - 1])?),
        other => Err(BraidError::UnknownLinModel(other)),
    }
}
