use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("point {point} lies outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("images do not form a bijection")]
    NotBijective,
    #[error("point {0} occurs more than once in the cycle list")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point set is not invariant: {point} maps to {image}")]
    NotInvariant { point: usize, image: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("number at byte {pos} does not fit")]
    BadNumber { pos: usize },
    #[error("cycle is not closed")]
    UnclosedCycle,
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("block index must be at least 1")]
    ZeroBlock,
    #[error("window must contain at least one block")]
    EmptyWindow,
    #[error("inner permutation is not a bijection of blocks {start}..={end}")]
    InvalidSigma { start: usize, end: usize },
    #[error("expected {expected} offsets, got {got}")]
    OffsetCount { expected: usize, got: usize },
    #[error("offset {value} for block {block} is not below the modulus {modulus}")]
    OffsetOutOfRange { block: usize, value: usize, modulus: usize },
    #[error("degree {degree} is too small, need at least {needed}")]
    DegreeTooSmall { degree: usize, needed: usize },
    #[error("inner permutation is not a single cycle through every window block")]
    NotAWindowCycle,
    #[error("window or modulus mismatch between operands")]
    WindowMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid representation needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator images have different degrees")]
    MixedDegrees,
    #[error("generator index {index} is outside 1..={max}")]
    GeneratorIndex { index: i64, max: usize },
    #[error("invalid model parameters: {0}")]
    InvalidParams(&'static str),
    #[error("l = {l} does not divide m = {m}")]
    NotADivisor { m: usize, l: usize },
    #[error("offset condition fails between generators {i} and {next} at j = {j}")]
    ConditionT { i: usize, next: usize, j: usize },
    #[error("unknown model {0}, expected 1, 2 or 3")]
    UnknownLinModel(u8),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Block(#[from] BlockError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("statistic needs at least {needed} strands, representation has {strands}")]
    TooFewStrands { needed: usize, strands: usize },
    #[error("cycle {cycle} is not an {r}-cycle of the chosen generator")]
    NotASubcomponentCycle { cycle: usize, r: usize },
    #[error("cycles {0} and {1} of the subcomponent overlap")]
    OverlappingCycles(usize, usize),
    #[error("generator {generator} moves cycle {cycle} outside the subcomponent")]
    NotStabilized { generator: usize, cycle: usize },
    #[error("subcomponent is empty")]
    EmptySubcomponent,
    #[error("generator {generator} does not leave the point set invariant")]
    NotInvariant { generator: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjugacyError {
    #[error("representations differ in shape: {a_strands} strands on {a_degree} points vs {b_strands} on {b_degree}")]
    ShapeMismatch { a_strands: usize, a_degree: usize, b_strands: usize, b_degree: usize },
    #[error("l = {l} does not divide m = {m}")]
    NotADivisor { m: usize, l: usize },
    #[error("need 1 <= l < m, got m = {m}, l = {l}")]
    DegenerateDivisor { m: usize, l: usize },
    #[error("normal form conjugator failed to reproduce the canonical model")]
    RoundTripFailed,
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("ambient degree must be at least 1")]
    ZeroDegree,
    #[error("resource limit {limit} exceeded while enumerating {what}")]
    LimitExceeded { what: &'static str, limit: usize },
    #[error("degree {0} is too large for exact index arithmetic")]
    DegreeTooLarge(usize),
    #[error("enumerated {found} cosets but |S_N|/|H| = {expected}")]
    IndexMismatch { found: usize, expected: u128 },
    #[error("representation degree {rep} differs from the coset space degree {space}")]
    DegreeMismatch { rep: usize, space: usize },
    #[error("two-subset action needs k >= 3, got {0}")]
    TooFewStrands(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardizeError {
    #[error("braid relations fail")]
    NotAHomomorphism,
    #[error("representation is not transitive")]
    NotTransitive,
    #[error("representation is cyclic")]
    Cyclic,
    #[error("representation is not good of type 1")]
    NotTypeOne,
    #[error("supp = {supp} is odd or the degree {degree} is not supp/2 times the strand count {strands}")]
    WrongSupport { supp: usize, degree: usize, strands: usize },
    #[error("generator {0} is not a single 2m-cycle")]
    NotSingleCycle(usize),
    #[error("labels do not cover the point set")]
    LabelsNotBijective,
    #[error("constructed conjugator does not reach the model")]
    NotStandard,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("resource limit exceeded: {needed} candidates, limit {limit}")]
    LimitExceeded { needed: u128, limit: u128 },
    #[error("deadline expired")]
    DeadlineExpired,
    /// Below this many strands the degree-3k models are not pairwise distinct.
    #[error("need at least {needed} strands, got {found}")]
    TooFewStrands { needed: usize, found: usize },
    #[error("braid relations fail; representation rejected before search")]
    NotAHomomorphism,
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Conjugacy(#[from] ConjugacyError),
}
