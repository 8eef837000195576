//! JSON forms of the core types. Field names are fixed and unknown fields
//! are rejected.

use std::collections::BTreeMap;

use braidperm_core::analysis::{goodness, intersect_stat, is_cyclic, is_transitive, supp_stat, GoodnessKind};
use braidperm_core::{BraidRep, CPermSpec, ModelParams, NormalForm, Permutation, SearchReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON near `{near}`: {source}")]
    Json { source: serde_json::Error, near: String },
    #[error("invalid permutation: {0}")]
    Perm(#[from] braidperm_core::PermError),
    #[error("invalid block spec: {0}")]
    Block(#[from] braidperm_core::BlockError),
    #[error("invalid representation: {0}")]
    Braid(#[from] braidperm_core::BraidError),
    #[error("{field} is {found} but the data implies {implied}")]
    Inconsistent { field: &'static str, found: usize, implied: usize },
}

/// Disjoint cycles, 1-based; fixed points omitted.
pub type Cycles = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermJson {
    pub degree: usize,
    pub cycles: Cycles,
}

impl From<&Permutation> for PermJson {
    fn from(p: &Permutation) -> Self {
        PermJson { degree: p.degree(), cycles: p.cycles() }
    }
}

impl TryFrom<&PermJson> for Permutation {
    type Error = FormatError;

    fn try_from(j: &PermJson) -> Result<Self, FormatError> {
        Ok(Permutation::from_cycles(j.degree, &j.cycles)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CPermSpecJson {
    pub window_start: usize,
    pub window_len: usize,
    pub modulus: usize,
    pub sigma: Vec<usize>,
    pub offsets: Vec<usize>,
}

impl From<&CPermSpec> for CPermSpecJson {
    fn from(c: &CPermSpec) -> Self {
        CPermSpecJson {
            window_start: c.window_start(),
            window_len: c.window_len(),
            modulus: c.modulus(),
            sigma: c.sigma().to_vec(),
            offsets: c.offsets().to_vec(),
        }
    }
}

impl TryFrom<&CPermSpecJson> for CPermSpec {
    type Error = FormatError;

    fn try_from(j: &CPermSpecJson) -> Result<Self, FormatError> {
        if j.sigma.len() != j.window_len {
            return Err(FormatError::Inconsistent { field: "window_len", found: j.window_len, implied: j.sigma.len() });
        }
        Ok(CPermSpec::new(j.window_start, j.modulus, j.sigma.clone(), j.offsets.clone())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidRepJson {
    pub strands: usize,
    pub degree: usize,
    pub generators: Vec<Cycles>,
}

impl From<&BraidRep> for BraidRepJson {
    fn from(r: &BraidRep) -> Self {
        BraidRepJson {
            strands: r.strands(),
            degree: r.degree(),
            generators: r.generators().iter().map(Permutation::cycles).collect(),
        }
    }
}

impl TryFrom<&BraidRepJson> for BraidRep {
    type Error = FormatError;

    fn try_from(j: &BraidRepJson) -> Result<Self, FormatError> {
        if j.generators.len() + 1 != j.strands {
            return Err(FormatError::Inconsistent { field: "strands", found: j.strands, implied: j.generators.len() + 1 });
        }
        let gens = j
            .generators
            .iter()
            .map(|c| Permutation::from_cycles(j.degree, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidRep::new(gens)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParamsJson {
    pub m: usize,
    pub l: usize,
    pub k: usize,
    pub t: Vec<Vec<usize>>,
}

impl From<&ModelParams> for ModelParamsJson {
    fn from(p: &ModelParams) -> Self {
        ModelParamsJson { m: p.m(), l: p.l(), k: p.k(), t: p.table().to_vec() }
    }
}

impl TryFrom<&ModelParamsJson> for ModelParams {
    type Error = FormatError;

    fn try_from(j: &ModelParamsJson) -> Result<Self, FormatError> {
        Ok(ModelParams::new(j.m, j.l, j.k, j.t.clone())?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalFormJson {
    pub m: usize,
    pub l: usize,
    pub k: usize,
    pub p: usize,
    pub conjugator: Cycles,
}

impl From<&NormalForm> for NormalFormJson {
    fn from(n: &NormalForm) -> Self {
        NormalFormJson { m: n.m, l: n.l, k: n.k, p: n.p, conjugator: n.conjugator.cycles() }
    }
}

impl TryFrom<&NormalFormJson> for NormalForm {
    type Error = FormatError;

    fn try_from(j: &NormalFormJson) -> Result<Self, FormatError> {
        Ok(NormalForm {
            m: j.m,
            l: j.l,
            k: j.k,
            p: j.p,
            conjugator: Permutation::from_cycles(j.m * j.k, &j.conjugator)?,
        })
    }
}

/// Generators of a subgroup of `S_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupJson {
    pub degree: usize,
    pub generators: Vec<Cycles>,
}

impl SubgroupJson {
    pub fn permutations(&self) -> Result<Vec<Permutation>, FormatError> {
        self.generators
            .iter()
            .map(|c| Permutation::from_cycles(self.degree, c).map_err(FormatError::from))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GoodnessJson {
    Type1,
    Type2,
    NotGood,
}

impl From<GoodnessKind> for GoodnessJson {
    fn from(k: GoodnessKind) -> Self {
        match k {
            GoodnessKind::Type1 => GoodnessJson::Type1,
            GoodnessKind::Type2 => GoodnessJson::Type2,
            GoodnessKind::NotGood => GoodnessJson::NotGood,
        }
    }
}

/// `intersect` is `null` below three strands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisJson {
    pub supp: usize,
    pub intersect: Option<usize>,
    pub goodness: GoodnessJson,
    pub transitive: bool,
    pub cyclic: bool,
    pub cycle_type_gen1: Vec<usize>,
}

impl AnalysisJson {
    pub fn of(rep: &BraidRep) -> Self {
        AnalysisJson {
            supp: supp_stat(rep),
            intersect: intersect_stat(rep).ok(),
            goodness: goodness(rep).kind.into(),
            transitive: is_transitive(rep),
            cyclic: is_cyclic(rep),
            cycle_type_gen1: rep.gen(1).cycle_type().lengths().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchReportJson {
    pub parameters: BTreeMap<String, u64>,
    pub candidates: u64,
    pub passes: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
    pub seed: Option<u64>,
    pub confirmed: bool,
    /// Only present when timing was requested, so that default output is
    /// reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SearchReportJson {
    pub fn new(report: &SearchReport, wall_time_ms: Option<u64>) -> Self {
        SearchReportJson {
            parameters: report.parameters.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            candidates: report.candidates,
            passes: report.passes,
            failures: report.failures,
            counterexamples: report.counterexamples.clone(),
            seed: report.seed,
            confirmed: report.confirmed(),
            wall_time_ms,
        }
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|source| FormatError::Json { near: token_at(text, &source), source })
}

/// The text around the error position, for messages.
fn token_at(text: &str, err: &serde_json::Error) -> String {
    let Some(line) = text.lines().nth(err.line().saturating_sub(1)) else {
        return "<end of input>".into();
    };
    let col = err.column().saturating_sub(1).min(line.len());
    let start = line[..col].rfind([',', '[', '{', ':']).map_or(0, |i| i + 1);
    let end = line[col..].find([',', ']', '}']).map_or(line.len(), |i| col + i);
    let token = line.get(start..end.max(start)).unwrap_or("").trim();
    if token.is_empty() { "<end of input>".into() } else { token.into() }
}

pub fn read_rep(text: &str) -> Result<BraidRep, FormatError> {
    BraidRep::try_from(&parse::<BraidRepJson>(text)?)
}

pub fn read_model(text: &str) -> Result<ModelParams, FormatError> {
    ModelParams::try_from(&parse::<ModelParamsJson>(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
