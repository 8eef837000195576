//! Permutations of `{1, ..., n}`.
//!
//! Points are 1-based at every public boundary. Products follow the
//! right-to-left convention: `(f * g)(x) = f(g(x))`, and `a.conjugate(b)`
//! is `b⁻¹ · a · b`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use rand::Rng;

use crate::error::{ParseError, PermError};

/// A bijection of `Δ_n = {1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: images[x] is the image of point x + 1, minus one.
    images: Vec<usize>,
}

/// Multiset of cycle lengths (each at least 2), stored non-increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l >= 2);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of moved points.
    pub fn moved(&self) -> usize {
        self.0.iter().sum()
    }

    /// How many `r`-cycles occur.
    pub fn count(&self, r: usize) -> usize {
        self.0.iter().filter(|&&l| l == r).count()
    }

    pub fn order(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, &l| lcm(acc, l as u64))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        Ok(Permutation { images: (0..degree).collect() })
    }

    /// Builds a permutation from its one-line form, `images[x - 1] = p(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &y in images {
            if y == 0 || y > n {
                return Err(PermError::PointOutOfRange { point: y, degree: n });
            }
            if core::mem::replace(&mut seen[y - 1], true) {
                return Err(PermError::NotBijective);
            }
            out.push(y - 1);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `degree` from disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self, PermError> {
        let mut p = Self::identity(degree)?;
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if core::mem::replace(&mut used[x - 1], true) {
                    return Err(PermError::RepeatedPoint(x));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                p.images[x - 1] = y - 1;
            }
        }
        Ok(p)
    }

    /// The transposition `(a, b)` on `Δ_degree`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, PermError> {
        Self::from_cycles(degree, &[[a, b]])
    }

    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Result<Self, PermError> {
        let mut p = Self::identity(degree)?;
        // Fisher-Yates
        for i in (1..degree).rev() {
            let j = rng.gen_range(0..=i);
            p.images.swap(i, j);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`. Panics if `x` is outside `Δ_n`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// Image of a 0-based point, 0-based.
    #[inline]
    pub(crate) fn apply0(&self, x: usize) -> usize {
        self.images[x]
    }

    pub(crate) fn from_images0_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::is_bijection0(&images));
        Permutation { images }
    }

    fn is_bijection0(images: &[usize]) -> bool {
        let mut seen = vec![false; images.len()];
        images.iter().all(|&y| y < images.len() && !core::mem::replace(&mut seen[y], true))
    }

    /// One-line form, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    fn check_degree(&self, other: &Self) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `self · g`, i.e. `x ↦ self(g(x))`.
    pub fn compose(&self, g: &Self) -> Result<Self, PermError> {
        self.check_degree(g)?;
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &Self) -> Self {
        Permutation { images: g.images.iter().map(|&y| self.images[y]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `b⁻¹ · self · b`, i.e. `x ↦ b⁻¹(self(b(x)))`.
    pub fn conjugate(&self, b: &Self) -> Result<Self, PermError> {
        self.check_degree(b)?;
        Ok(self.conjugate_unchecked(b))
    }

    pub(crate) fn conjugate_unchecked(&self, b: &Self) -> Self {
        let mut out = vec![0; self.images.len()];
        // b⁻¹ a b maps b⁻¹(x) to b⁻¹(a(x)), i.e. relabels x by b⁻¹.
        let binv = b.inverse();
        for (x, &y) in self.images.iter().enumerate() {
            out[binv.images[x]] = binv.images[y];
        }
        Permutation { images: out }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation { images: (0..self.degree()).collect() };
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&sq);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, PermError> {
        self.check_degree(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &Self) -> bool {
        self.images.iter().zip(&other.images).all(|(&a, &b)| self.images[b] == other.images[a])
    }

    /// `g·h·g = h·g·h`.
    pub fn is_braid_like(&self, h: &Self) -> Result<bool, PermError> {
        self.check_degree(h)?;
        Ok(self.is_braid_like_unchecked(h))
    }

    pub(crate) fn is_braid_like_unchecked(&self, h: &Self) -> bool {
        (0..self.degree()).all(|x| {
            let ghg = self.images[h.images[self.images[x]]];
            let hgh = h.images[self.images[h.images[x]]];
            ghg == hgh
        })
    }

    /// Moved points, increasing.
    pub fn support(&self) -> Vec<usize> {
        self.images.iter().enumerate().filter(|(x, &y)| *x != y).map(|(x, _)| x + 1).collect()
    }

    /// Fixed points, increasing.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images.iter().enumerate().filter(|(x, &y)| *x == y).map(|(x, _)| x + 1).collect()
    }

    pub(crate) fn moves0(&self, x: usize) -> bool {
        self.images[x] != x
    }

    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|(x, &y)| *x != y).count()
    }

    /// Non-trivial cycles, each starting at its least point, ordered by
    /// least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Length of the cycle through the 0-based point `x` (1 for fixed points).
    pub(crate) fn cycle_len0(&self, x: usize) -> usize {
        let mut len = 1;
        let mut y = self.images[x];
        while y != x {
            y = self.images[y];
            len += 1;
        }
        len
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    /// Parses a product of disjoint cycles such as `"(1,2)(3,4)"`. Whitespace
    /// is ignored, `"()"` and the empty string denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, ParseError> {
        if degree == 0 {
            return Err(ParseError::Perm(PermError::ZeroDegree));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).peekable();
        while let Some((pos, c)) = chars.next() {
            if c != '(' {
                return Err(ParseError::Unexpected { pos, found: c });
            }
            let mut cycle = Vec::new();
            let mut number: Option<(usize, String)> = None;
            let mut closed = false;
            for (pos, c) in chars.by_ref() {
                match c {
                    '0'..='9' => number.get_or_insert_with(|| (pos, String::new())).1.push(c),
                    ',' | ')' => {
                        match number.take() {
                            Some((npos, digits)) => {
                                let value = digits
                                    .parse::<usize>()
                                    .map_err(|_| ParseError::BadNumber { pos: npos })?;
                                cycle.push(value);
                            }
                            // "()" is allowed, "(1,)" and "(,1)" are not
                            None if c == ')' && cycle.is_empty() => {}
                            None => return Err(ParseError::Unexpected { pos, found: c }),
                        }
                        if c == ')' {
                            closed = true;
                            break;
                        }
                    }
                    other => return Err(ParseError::Unexpected { pos, found: other }),
                }
            }
            if !closed {
                return Err(ParseError::UnclosedCycle);
            }
            cycles.push(cycle);
        }
        Ok(Self::from_cycles(degree, &cycles)?)
    }

    /// Restriction to an invariant point set, relabelled onto `1..=|set|`
    /// in increasing order of the original points.
    pub fn restrict(&self, points: &[usize]) -> Result<Self, PermError> {
        let mut sorted: Vec<usize> = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = self.degree();
        let mut index = vec![usize::MAX; n];
        for (i, &x) in sorted.iter().enumerate() {
            if x == 0 || x > n {
                return Err(PermError::PointOutOfRange { point: x, degree: n });
            }
            index[x - 1] = i;
        }
        let mut images = Vec::with_capacity(sorted.len());
        for &x in &sorted {
            let y = self.images[x - 1];
            if index[y] == usize::MAX {
                return Err(PermError::NotInvariant { point: x, image: y + 1 });
            }
            images.push(index[y]);
        }
        Ok(Permutation { images })
    }

    /// The same permutation acting on a larger point set, fixing the new points.
    pub fn extend(&self, degree: usize) -> Result<Self, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: degree });
        }
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Ok(Permutation { images })
    }

    /// Disjoint union: `other` acts on the points after `self`'s.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&y| y + shift));
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on Δ_{}", self.degree())
    }
}

/// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in permutation product");
        self.compose_unchecked(rhs)
    }
}
