//! Exhaustive and randomized checks: offset-table enumeration,
//! standardization of `supp = 2m` representations, and class censuses.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{goodness, is_cyclic, is_transitive, supp_stat};
use crate::block::block_point;
use crate::braid::{phi, phi_unchecked, psi, BraidRep, ModelParams};
use crate::conjugacy::{are_conjugate, normalize_model};
use crate::error::{SearchError, StandardizeError};
use crate::perm::Permutation;

/// Default bound on candidates examined by one search.
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 1_000_000;

/// Wall-clock budget, polled between candidates.
pub trait Deadline {
    fn expired(&self) -> bool;
}

/// Never expires.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoDeadline;

impl Deadline for NoDeadline {
    fn expired(&self) -> bool {
        false
    }
}

/// Counts and counterexamples of one search. Timing is added by callers
/// that have a clock.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub parameters: BTreeMap<&'static str, u64>,
    pub candidates: u64,
    pub passes: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
    pub seed: Option<u64>,
}

impl SearchReport {
    fn new(parameters: &[(&'static str, u64)], seed: Option<u64>) -> Self {
        SearchReport {
            parameters: parameters.iter().copied().collect(),
            candidates: 0,
            passes: 0,
            failures: 0,
            counterexamples: Vec::new(),
            seed,
        }
    }

    /// No counterexample was found.
    pub fn confirmed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    /// Generate exactly the tables satisfying the offset condition.
    ByCondition,
    /// Try every table and keep those whose model satisfies the braid relations.
    ByBruteForce,
}

fn checked_pow(base: usize, exp: usize) -> Option<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base as u128))
}

fn check_shape(m: usize, l: usize, k: usize) -> Result<(), SearchError> {
    // reuse the parameter validation on an all-zero table
    ModelParams::new(m, l, k, vec![vec![0; 2 * l]; k.saturating_sub(1)])?;
    Ok(())
}

/// Completes a table from its free entries: all of row 1 and the first
/// half of every later row. The second half of row `i + 1` is forced by the
/// offset condition against row `i`.
fn table_from_free(m: usize, l: usize, k: usize, free: &[usize]) -> Vec<Vec<usize>> {
    let modulus = m / l;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(k - 1);
    rows.push(free[..2 * l].to_vec());
    for i in 1..k - 1 {
        let base = 2 * l + (i - 1) * l;
        let mut next = vec![0; 2 * l];
        next[..l].copy_from_slice(&free[base..base + l]);
        let cur = &rows[i - 1];
        for j in 0..l {
            let jj = (1 + j) % l;
            next[l + j] = (cur[jj] + cur[l + jj] + modulus - next[jj]) % modulus;
        }
        rows.push(next);
    }
    rows
}

fn free_len(l: usize, k: usize) -> usize {
    2 * l + (k - 2) * l
}

/// Random table satisfying the offset condition, uniform over all such tables.
pub fn random_valid_params<R: Rng + ?Sized>(m: usize, l: usize, k: usize, rng: &mut R) -> Result<ModelParams, SearchError> {
    check_shape(m, l, k)?;
    let modulus = m / l;
    let free: Vec<usize> = (0..free_len(l, k)).map(|_| rng.gen_range(0..modulus)).collect();
    Ok(ModelParams::new(m, l, k, table_from_free(m, l, k, &free))?)
}

/// Every table satisfying the offset condition, in counter order over the
/// free entries. Yields `(m/l)^{lk}` tables; nothing is built or verified.
pub fn valid_tables(m: usize, l: usize, k: usize) -> Result<ValidTables, SearchError> {
    check_shape(m, l, k)?;
    Ok(ValidTables { m, l, k, digits: Some(vec![0; free_len(l, k)]) })
}

#[derive(Clone, Debug)]
pub struct ValidTables {
    m: usize,
    l: usize,
    k: usize,
    digits: Option<Vec<usize>>,
}

impl Iterator for ValidTables {
    type Item = ModelParams;

    fn next(&mut self) -> Option<ModelParams> {
        let digits = self.digits.as_mut()?;
        let table = table_from_free(self.m, self.l, self.k, digits);
        if !increment(digits, self.m / self.l) {
            self.digits = None;
        }
        Some(ModelParams::new(self.m, self.l, self.k, table).expect("shape checked on creation"))
    }
}

/// Advances a mixed-radix counter; false once it wraps to zero.
fn increment(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn format_table(t: &[Vec<usize>]) -> String {
    let mut s = String::new();
    let _ = write!(s, "{t:?}");
    s
}

/// All offset tables for `φ_{m,l,t}` on `k` strands that give braid group
/// representations, sorted. Counterexamples list tables on which the
/// offset condition and the braid relations disagree.
pub fn enumerate_t_tables(
    m: usize,
    l: usize,
    k: usize,
    mode: TableMode,
    limit: u128,
    deadline: &dyn Deadline,
) -> Result<(Vec<ModelParams>, SearchReport), SearchError> {
    check_shape(m, l, k)?;
    let modulus = m / l;
    let cells = match mode {
        TableMode::ByCondition => free_len(l, k),
        TableMode::ByBruteForce => 2 * l * (k - 1),
    };
    let needed = checked_pow(modulus, cells).unwrap_or(u128::MAX);
    if needed > limit {
        return Err(SearchError::LimitExceeded { needed, limit });
    }
    let mode_flag = match mode {
        TableMode::ByCondition => 0,
        TableMode::ByBruteForce => 1,
    };
    let mut report = SearchReport::new(
        &[("m", m as u64), ("l", l as u64), ("k", k as u64), ("brute_force", mode_flag)],
        None,
    );
    let mut found = Vec::new();
    let mut digits = vec![0usize; cells];
    loop {
        if report.candidates.is_multiple_of(256) && deadline.expired() {
            return Err(SearchError::DeadlineExpired);
        }
        report.candidates += 1;
        let table = match mode {
            TableMode::ByCondition => table_from_free(m, l, k, &digits),
            TableMode::ByBruteForce => digits.chunks(2 * l).map(<[usize]>::to_vec).collect(),
        };
        let params = ModelParams::new(m, l, k, table)?;
        let is_hom = phi_unchecked(&params)?.is_homomorphism();
        if is_hom {
            report.passes += 1;
        } else {
            report.failures += 1;
        }
        if is_hom != params.satisfies_condition() {
            report.counterexamples.push(format_table(params.table()));
        }
        let keep = match mode {
            TableMode::ByCondition => true,
            TableMode::ByBruteForce => is_hom,
        };
        if keep {
            found.push(params);
        }
        if !increment(&mut digits, modulus) {
            break;
        }
    }
    found.sort();
    Ok((found, report))
}

/// For a transitive, non-cyclic, type-1 good representation with
/// `supp = 2m` on `mk` points, a `θ` with `rep.conjugate(θ) == psi(m, k)`.
///
/// Points of the `2m`-cycle of `σ̂_1` are labelled alternately by blocks
/// 1 and 2, starting outside `supp(σ̂_2)`; block `i + 2` is then the image
/// of block `i + 1` under `σ̂_i·σ̂_{i+1}`.
pub fn standardize_supp2m(rep: &BraidRep) -> Result<Permutation, StandardizeError> {
    if !rep.is_homomorphism() {
        return Err(StandardizeError::NotAHomomorphism);
    }
    if !is_transitive(rep) {
        return Err(StandardizeError::NotTransitive);
    }
    if is_cyclic(rep) {
        return Err(StandardizeError::Cyclic);
    }
    if !goodness(rep).type1_holds {
        return Err(StandardizeError::NotTypeOne);
    }
    let (k, degree, supp) = (rep.strands(), rep.degree(), supp_stat(rep));
    if supp % 2 != 0 || degree != supp / 2 * k {
        return Err(StandardizeError::WrongSupport { supp, degree, strands: k });
    }
    let m = supp / 2;
    for (i, g) in rep.generators().iter().enumerate() {
        if g.cycle_type().lengths() != [2 * m] {
            return Err(StandardizeError::NotSingleCycle(i + 1));
        }
    }

    let (g1, g2) = (rep.gen(1), rep.gen(2));
    let start = g1.support().into_iter().find(|&x| !g2.moves0(x - 1)).ok_or(StandardizeError::NotStandard)?;
    let mut cycle = Vec::with_capacity(2 * m);
    let mut x = start;
    for _ in 0..2 * m {
        cycle.push(x);
        x = g1.apply(x);
    }
    // labels[i - 1][j] = x^i_j
    let mut labels: Vec<Vec<usize>> = vec![
        (0..m).map(|j| cycle[2 * j]).collect(),
        (0..m).map(|j| cycle[2 * j + 1]).collect(),
    ];
    for i in 1..k - 1 {
        let (a, b) = (rep.gen(i), rep.gen(i + 1));
        let next = labels[i].iter().map(|&x| a.apply(b.apply(x))).collect();
        labels.push(next);
    }

    let mut images = vec![0usize; degree];
    for (i, row) in labels.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            images[block_point(m, i + 1, j) - 1] = x;
        }
    }
    let theta = Permutation::from_images(&images).map_err(|_| StandardizeError::LabelsNotBijective)?;
    let model = psi(m, k).map_err(|_| StandardizeError::NotStandard)?;
    match rep.conjugate(&theta) {
        Ok(r) if r == model => Ok(theta),
        _ => Err(StandardizeError::NotStandard),
    }
}

/// Which model a degree-`3k` representation is conjugate to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum M3Class {
    Psi,
    /// `φ_{3,1,t}` with normal-form invariant `p`.
    Phi(usize),
}

/// The canonical models of degree `3k`, in [`M3Class`] order.
pub fn m3_models(k: usize) -> Result<Vec<(M3Class, BraidRep)>, SearchError> {
    let mut out = vec![(M3Class::Psi, psi(3, k)?)];
    for p in 0..3 {
        out.push((M3Class::Phi(p), phi(&ModelParams::canonical(3, 1, k, p)?)?));
    }
    Ok(out)
}

/// All canonical models of degree `3k` conjugate to `rep`; a sound
/// classification yields exactly one.
pub fn identify_m3_class(rep: &BraidRep, models: &[(M3Class, BraidRep)]) -> Result<Vec<M3Class>, SearchError> {
    if !rep.is_homomorphism() {
        return Err(SearchError::NotAHomomorphism);
    }
    let mut out = Vec::new();
    for (class, model) in models {
        if are_conjugate(model, rep)?.is_some() {
            out.push(*class);
        }
    }
    Ok(out)
}

/// Randomized check that conjugates of the degree-`3k` models are
/// recognised as exactly the class they came from.
pub fn verify_m3_standardness(k: usize, trials: u64, seed: u64, deadline: &dyn Deadline) -> Result<SearchReport, SearchError> {
    if k < 3 {
        return Err(SearchError::TooFewStrands { needed: 3, found: k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let models = m3_models(k)?;
    let mut report = SearchReport::new(&[("m", 3), ("k", k as u64), ("trials", trials)], Some(seed));
    for trial in 0..trials {
        if deadline.expired() {
            return Err(SearchError::DeadlineExpired);
        }
        report.candidates += 1;
        let (expected, rep) = if rng.gen_range(0..4) == 0 {
            (M3Class::Psi, psi(3, k)?)
        } else {
            let params = random_valid_params(3, 1, k, &mut rng)?;
            (M3Class::Phi(normalize_model(&params)?.p), phi(&params)?)
        };
        let theta = Permutation::random(3 * k, &mut rng).map_err(crate::error::BraidError::from)?;
        let disguised = rep.conjugate(&theta).map_err(crate::error::BraidError::from)?;
        let found = identify_m3_class(&disguised, &models)?;
        if found == [expected] {
            report.passes += 1;
        } else {
            report.failures += 1;
            let mut line = String::new();
            let _ = write!(line, "trial {trial}: expected {expected:?}, matched {found:?}");
            report.counterexamples.push(line);
        }
    }
    Ok(report)
}

/// Conjugacy classes among `ψ_m` and every valid `φ_{m,l,t}` on `k`
/// strands, by pairwise search. Descriptive only: nothing is asserted
/// about the count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCensus {
    pub m: usize,
    pub l: usize,
    pub k: usize,
    /// One representative per class, in discovery order (`ψ_m` first).
    pub representatives: Vec<BraidRep>,
    /// Number of tables (plus `ψ_m`) falling in each class.
    pub sizes: Vec<u64>,
}

pub fn class_census(m: usize, l: usize, k: usize, limit: u128, deadline: &dyn Deadline) -> Result<ClassCensus, SearchError> {
    let (tables, _) = enumerate_t_tables(m, l, k, TableMode::ByCondition, limit, deadline)?;
    let mut representatives = vec![psi(m, k)?];
    let mut sizes = vec![1u64];
    for params in &tables {
        if deadline.expired() {
            return Err(SearchError::DeadlineExpired);
        }
        let rep = phi(params)?;
        let mut placed = false;
        for (i, r) in representatives.iter().enumerate() {
            if are_conjugate(r, &rep)?.is_some() {
                sizes[i] += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            representatives.push(rep);
            sizes.push(1);
        }
    }
    Ok(ClassCensus { m, l, k, representatives, sizes })
}
