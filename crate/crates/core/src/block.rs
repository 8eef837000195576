//! Block cycles `A^m_i` and the block-permuting family `C^{σ,m}_{t}`.
//!
//! The point set is cut into consecutive blocks of size `m`; block `i`
//! holds `a^i_q = 1 + m(i-1) + q` for `q ∈ {0, ..., m-1}`. A [`CPermSpec`]
//! sends `a^i_q` to `a^{σ(i)}_{q + t_{σ(i)} mod m}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::BlockError;
use crate::perm::{CycleType, Permutation};

/// The point `a^i_q = 1 + m(i-1) + q`.
#[inline]
pub fn block_point(m: usize, i: usize, q: usize) -> usize {
    1 + m * (i - 1) + q
}

/// `A^m_i = (1 + m(i-1), ..., mi)` on `Δ_degree`.
pub fn block_cycle(m: usize, i: usize, degree: usize) -> Result<Permutation, BlockError> {
    if m == 0 {
        return Err(BlockError::ZeroModulus);
    }
    if i == 0 {
        return Err(BlockError::ZeroBlock);
    }
    if degree < m * i {
        return Err(BlockError::DegreeTooSmall { degree, needed: m * i });
    }
    let cycle: Vec<usize> = (0..m).map(|q| block_point(m, i, q)).collect();
    Ok(Permutation::from_cycles(degree, &[cycle]).expect("block cycle is well formed"))
}

/// Product of `A^m_i` over the given blocks, on `Δ_degree`.
pub fn block_cycles_product(
    m: usize,
    blocks: impl IntoIterator<Item = usize>,
    degree: usize,
) -> Result<Permutation, BlockError> {
    if m == 0 {
        return Err(BlockError::ZeroModulus);
    }
    let mut images: Vec<usize> = (0..degree).collect();
    for i in blocks {
        if i == 0 {
            return Err(BlockError::ZeroBlock);
        }
        if degree < m * i {
            return Err(BlockError::DegreeTooSmall { degree, needed: m * i });
        }
        let base = m * (i - 1);
        for q in 0..m {
            images[base + q] = base + (q + 1) % m;
        }
    }
    Ok(Permutation::from_images0_unchecked(images))
}

/// Symbolic `C^{σ,m}_{t}` on the window of blocks `j, ..., j + r - 1`.
///
/// `sigma` and `offsets` are indexed by position in the window but hold
/// absolute block indices: `sigma[p]` is `σ(j + p)` and `offsets[p]` is
/// `t_{j+p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CPermSpec {
    window_start: usize,
    modulus: usize,
    sigma: Vec<usize>,
    offsets: Vec<usize>,
}

impl CPermSpec {
    pub fn new(
        window_start: usize,
        modulus: usize,
        sigma: Vec<usize>,
        offsets: Vec<usize>,
    ) -> Result<Self, BlockError> {
        if modulus == 0 {
            return Err(BlockError::ZeroModulus);
        }
        if window_start == 0 {
            return Err(BlockError::ZeroBlock);
        }
        let r = sigma.len();
        if r == 0 {
            return Err(BlockError::EmptyWindow);
        }
        let end = window_start + r - 1;
        let mut seen = vec![false; r];
        for &s in &sigma {
            if s < window_start || s > end || core::mem::replace(&mut seen[s - window_start], true) {
                return Err(BlockError::InvalidSigma { start: window_start, end });
            }
        }
        if offsets.len() != r {
            return Err(BlockError::OffsetCount { expected: r, got: offsets.len() });
        }
        for (p, &t) in offsets.iter().enumerate() {
            if t >= modulus {
                return Err(BlockError::OffsetOutOfRange { block: window_start + p, value: t, modulus });
            }
        }
        Ok(CPermSpec { window_start, modulus, sigma, offsets })
    }

    /// Spec whose inner permutation is read off a permutation of the window
    /// blocks; `sigma_perm` must have degree at least `window_start + len - 1`
    /// and fix every block index outside the window.
    pub fn from_block_permutation(
        window_start: usize,
        window_len: usize,
        modulus: usize,
        sigma_perm: &Permutation,
        offsets: Vec<usize>,
    ) -> Result<Self, BlockError> {
        if window_start == 0 {
            return Err(BlockError::ZeroBlock);
        }
        let end = window_start + window_len - 1;
        if sigma_perm.degree() < end {
            return Err(BlockError::DegreeTooSmall { degree: sigma_perm.degree(), needed: end });
        }
        let outside_moved = sigma_perm
            .support()
            .into_iter()
            .any(|x| x < window_start || x > end);
        if outside_moved {
            return Err(BlockError::InvalidSigma { start: window_start, end });
        }
        let sigma = (window_start..=end).map(|i| sigma_perm.apply(i)).collect();
        Self::new(window_start, modulus, sigma, offsets)
    }

    /// `C^{id,m}_{0,...,0}`.
    pub fn identity(window_start: usize, window_len: usize, modulus: usize) -> Result<Self, BlockError> {
        Self::new(
            window_start,
            modulus,
            (window_start..window_start + window_len).collect(),
            vec![0; window_len],
        )
    }

    pub fn window_start(&self) -> usize {
        self.window_start
    }

    pub fn window_len(&self) -> usize {
        self.sigma.len()
    }

    pub fn window_end(&self) -> usize {
        self.window_start + self.sigma.len() - 1
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// One-line form of σ on the window, absolute block indices.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Offsets in window order.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    fn pos(&self, block: usize) -> usize {
        block - self.window_start
    }

    /// σ at an absolute block index in the window.
    pub fn sigma_at(&self, block: usize) -> usize {
        self.sigma[self.pos(block)]
    }

    /// `t_block` for an absolute block index in the window.
    pub fn offset_at(&self, block: usize) -> usize {
        self.offsets[self.pos(block)]
    }

    fn sigma_inverse_at(&self, block: usize) -> usize {
        self.window_start + self.sigma.iter().position(|&s| s == block).expect("sigma is a bijection")
    }

    /// Smallest ambient degree this spec fits in.
    pub fn min_degree(&self) -> usize {
        self.modulus * self.window_end()
    }

    pub fn is_identity(&self) -> bool {
        self.offsets.iter().all(|&t| t == 0)
            && self.sigma.iter().enumerate().all(|(p, &s)| s == self.window_start + p)
    }

    /// The permutation of `Δ_degree` this spec denotes; points outside the
    /// window blocks are fixed.
    pub fn expand(&self, degree: usize) -> Result<Permutation, BlockError> {
        let needed = self.min_degree();
        if degree < needed {
            return Err(BlockError::DegreeTooSmall { degree, needed });
        }
        let m = self.modulus;
        let mut images: Vec<usize> = (0..degree).collect();
        for i in self.window_start..=self.window_end() {
            let target = self.sigma_at(i);
            let shift = self.offset_at(target);
            for q in 0..m {
                images[block_point(m, i, q) - 1] = block_point(m, target, (q + shift) % m) - 1;
            }
        }
        Ok(Permutation::from_images0_unchecked(images))
    }

    /// Cycle type from the closed form: when σ is one cycle through all `r`
    /// window blocks, the expansion has `m/l` cycles of length `l·r`, where
    /// `l` is least with `l · Σt ≡ 0 (mod m)`.
    pub fn predicted_cycle_type(&self) -> Result<CycleType, BlockError> {
        let r = self.window_len();
        // walk σ from the first block; it must return only after r steps
        let mut block = self.window_start;
        for step in 1..=r {
            block = self.sigma_at(block);
            if block == self.window_start && step < r {
                return Err(BlockError::NotAWindowCycle);
            }
        }
        if block != self.window_start {
            return Err(BlockError::NotAWindowCycle);
        }
        let m = self.modulus;
        let sum = self.offsets.iter().sum::<usize>() % m;
        let l = minimal_multiplier(sum, m);
        Ok(CycleType::new(vec![l * r; m / l]))
    }

    fn check_compatible(&self, other: &Self) -> Result<(), BlockError> {
        if self.window_start != other.window_start
            || self.window_len() != other.window_len()
            || self.modulus != other.modulus
        {
            return Err(BlockError::WindowMismatch);
        }
        Ok(())
    }

    /// Symbolic product `self · other` (apply `other` first):
    /// inner permutation `σ·τ`, offsets `t_i = t''_{σ⁻¹(i)} + t'_i`.
    pub fn compose(&self, other: &Self) -> Result<Self, BlockError> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let sigma = (self.window_start..=self.window_end())
            .map(|i| self.sigma_at(other.sigma_at(i)))
            .collect();
        let offsets = (self.window_start..=self.window_end())
            .map(|i| (other.offset_at(self.sigma_inverse_at(i)) + self.offset_at(i)) % m)
            .collect();
        Ok(CPermSpec { window_start: self.window_start, modulus: m, sigma, offsets })
    }

    /// Inner permutation `σ⁻¹`, offsets `t'_i = -t_{σ(i)}`.
    pub fn inverse(&self) -> Self {
        let m = self.modulus;
        let mut sigma = vec![0; self.window_len()];
        for i in self.window_start..=self.window_end() {
            sigma[self.pos(self.sigma_at(i))] = i;
        }
        let offsets = (self.window_start..=self.window_end())
            .map(|i| (m - self.offset_at(self.sigma_at(i))) % m)
            .collect();
        CPermSpec { window_start: self.window_start, modulus: m, sigma, offsets }
    }

    /// `by⁻¹ · self · by`: inner permutation `τ⁻¹στ`, offsets
    /// `t_i = t''_{σ⁻¹(τ(i))} + t'_{τ(i)} - t''_{τ(i)}`, where `self` carries
    /// `(σ, t')` and `by` carries `(τ, t'')`.
    pub fn conjugate(&self, by: &Self) -> Result<Self, BlockError> {
        self.check_compatible(by)?;
        let m = self.modulus;
        let by_inv = by.inverse();
        let sigma = (self.window_start..=self.window_end())
            .map(|i| by_inv.sigma_at(self.sigma_at(by.sigma_at(i))))
            .collect();
        let offsets = (self.window_start..=self.window_end())
            .map(|i| {
                let tau_i = by.sigma_at(i);
                let a = by.offset_at(self.sigma_inverse_at(tau_i));
                let b = self.offset_at(tau_i);
                let c = by.offset_at(tau_i);
                (a + b + m - c) % m
            })
            .collect();
        Ok(CPermSpec { window_start: self.window_start, modulus: m, sigma, offsets })
    }

    /// Recovers the spec from a permutation that permutes the window blocks
    /// rigidly (block to block, shifting within blocks cyclically) and fixes
    /// everything else. Returns `None` when `p` is not of that form.
    pub fn factor(p: &Permutation, window_start: usize, window_len: usize, modulus: usize) -> Option<Self> {
        if modulus == 0 || window_start == 0 || window_len == 0 {
            return None;
        }
        let m = modulus;
        let end = window_start + window_len - 1;
        if p.degree() < m * end {
            return None;
        }
        let mut sigma = vec![0; window_len];
        let mut offsets = vec![0; window_len];
        for i in window_start..=end {
            let y = p.apply(block_point(m, i, 0));
            let target = (y - 1) / m + 1;
            if target < window_start || target > end {
                return None;
            }
            sigma[i - window_start] = target;
            offsets[target - window_start] = (y - 1) % m;
        }
        let spec = Self::new(window_start, m, sigma, offsets).ok()?;
        (spec.expand(p.degree()).ok()? == *p).then_some(spec)
    }
}

/// Least `1 <= l <= modulus` with `l · value ≡ 0 (mod modulus)`.
pub fn minimal_multiplier(value: usize, modulus: usize) -> usize {
    (1..=modulus).find(|l| (l * value).is_multiple_of(modulus)).unwrap_or(modulus)
}
