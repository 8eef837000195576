//! The `braidperm` command line.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;
use std::time::Duration;

use braidperm_core::analysis::goodness;
use braidperm_core::braid::{canonical_mu, lin_model, phi, psi, RelationFailure};
use braidperm_core::conjugacy::{are_conjugate, normalize_model};
use braidperm_core::coset::{derived_hom, two_subset_action, CosetSpace, DEFAULT_COSET_LIMIT};
use braidperm_core::search::{
    enumerate_t_tables, standardize_supp2m, verify_m3_standardness, TableMode, DEFAULT_CANDIDATE_LIMIT,
};
use braidperm_core::{BraidRep, CPermSpec, Permutation, SearchError, SearchReport};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::clock::WallClock;
use crate::format::{
    parse, read_model, read_rep, to_json, AnalysisJson, BraidRepJson, CPermSpecJson, FormatError, ModelParamsJson,
    NormalFormJson, PermJson, SearchReportJson, SubgroupJson,
};

/// Environment variable holding the default candidate limit.
pub const LIMIT_ENV: &str = "BRAIDPERM_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "braidperm", version, about = "Permutation representations of braid groups")]
pub struct Cli {
    /// Print JSON instead of cycle notation.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a model representation, or expand a block permutation.
    Construct(ConstructArgs),
    /// Check the braid relations.
    Verify(RepArg),
    /// Support statistics, goodness, transitivity and cyclicity.
    Analyze(RepArg),
    /// Normal form of a block model: invariant p and a conjugator.
    Normalize {
        /// Model parameters as inline JSON or a file path.
        #[arg(long)]
        model: String,
    },
    /// Search for θ with a^θ = b.
    Conjugate {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Action on cosets of a subgroup, or on 2-subsets.
    Derive(DeriveArgs),
    /// Offset tables giving braid group representations.
    Enumerate(EnumerateArgs),
    /// Conjugator onto ψ_m for a representation with supp = 2m.
    Standardize(RepArg),
    /// Randomized recognition of the degree-3k models.
    #[command(name = "census-m3")]
    CensusM3(CensusArgs),
}

#[derive(Debug, Args)]
pub struct RepArg {
    /// Representation as inline JSON or a file path.
    #[arg(long)]
    pub rep: String,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("which").required(true).args(["psi", "mu", "lin", "model", "cperm"])))]
pub struct ConstructArgs {
    /// ψ_m on k strands.
    #[arg(long, requires_all = ["m", "k"])]
    pub psi: bool,
    /// The canonical epimorphism onto S_k.
    #[arg(long, requires = "k")]
    pub mu: bool,
    /// One of the three degree-2k models.
    #[arg(long, value_name = "1|2|3", requires = "k")]
    pub lin: Option<u8>,
    /// Block model from parameters (inline JSON or file).
    #[arg(long)]
    pub model: Option<String>,
    /// Block permutation spec (inline JSON or file); needs --degree.
    #[arg(long, requires = "degree")]
    pub cperm: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[arg(long, requires = "subgroup", conflicts_with = "young2")]
    pub rep: Option<String>,
    /// Subgroup generators as inline JSON or a file path.
    #[arg(long)]
    pub subgroup: Option<String>,
    /// Use the action on 2-subsets of {1..k}.
    #[arg(long, requires = "k")]
    pub young2: bool,
    #[arg(long)]
    pub k: Option<usize>,
    /// Bound on subgroup order and coset count.
    #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub k: usize,
    /// Filter every table through the braid relations.
    #[arg(long)]
    pub brute: bool,
    #[command(flatten)]
    pub budget: Budget,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: Budget,
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Candidate limit.
    #[arg(long, env = LIMIT_ENV, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
    pub limit: u128,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 60)]
    pub timeout_secs: u64,
    /// Include wall time in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("cannot write output: {0}")]
    Output(io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Compute(String),
    /// A check ran and came out negative.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn load(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|source| CliError::Io { path: arg.to_string(), source })
}

fn rep_text(rep: &BraidRep) -> String {
    let mut s = format!("strands {}, degree {}\n", rep.strands(), rep.degree());
    for (i, g) in rep.generators().iter().enumerate() {
        let _ = writeln!(s, "s{} = {g}", i + 1);
    }
    s
}

fn report_text(report: &SearchReportJson) -> String {
    let params: Vec<String> = report.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!(
        "parameters: {}\ncandidates: {}\npasses: {}\nfailures: {}\nverdict: {}\n",
        params.join(" "),
        report.candidates,
        report.passes,
        report.failures,
        if report.confirmed { "confirmed" } else { "counterexamples found" }
    );
    if let Some(seed) = report.seed {
        let _ = writeln!(s, "seed: {seed}");
    }
    if let Some(ms) = report.wall_time_ms {
        let _ = writeln!(s, "wall time: {ms} ms");
    }
    for c in &report.counterexamples {
        let _ = writeln!(s, "counterexample: {c}");
    }
    s
}

fn timed_report(report: &SearchReport, clock: &WallClock, timing: bool) -> SearchReportJson {
    SearchReportJson::new(report, timing.then(|| clock.elapsed().as_millis() as u64))
}

fn search_error(e: SearchError) -> CliError {
    match e {
        SearchError::NotAHomomorphism => CliError::Failed(e.to_string()),
        other => compute(other),
    }
}

struct Output<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        let line = if self.json { to_json(value) } else { text().trim_end().to_string() };
        writeln!(self.out, "{line}").map_err(CliError::Output)
    }
}

#[derive(Serialize)]
struct RelationJson {
    kind: &'static str,
    i: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
}

#[derive(Serialize)]
struct VerifyJson {
    holds: bool,
    failures: Vec<RelationJson>,
}

#[derive(Serialize)]
struct ConjugateJson {
    conjugate: bool,
    conjugator: Option<PermJson>,
}

#[derive(Serialize)]
struct EnumerateJson {
    report: SearchReportJson,
    tables: Vec<ModelParamsJson>,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut o = Output { json: cli.json, out };
    match cli.command {
        Command::Construct(args) => construct(args, &mut o),
        Command::Verify(RepArg { rep }) => {
            let rep = read_rep(&load(&rep)?)?;
            let report = rep.verify();
            let failures: Vec<RelationJson> = report
                .failures
                .iter()
                .map(|f| match *f {
                    RelationFailure::Braid { i } => RelationJson { kind: "braid", i, j: None },
                    RelationFailure::Commute { i, j } => RelationJson { kind: "commute", i, j: Some(j) },
                })
                .collect();
            let holds = report.passed();
            o.emit(&VerifyJson { holds, failures }, || {
                let mut s = String::from(if holds { "braid relations hold\n" } else { "braid relations fail\n" });
                for f in &report.failures {
                    let _ = match f {
                        RelationFailure::Braid { i } => writeln!(s, "s{i} s{} s{i} != s{} s{i} s{}", i + 1, i + 1, i + 1),
                        RelationFailure::Commute { i, j } => writeln!(s, "s{i} and s{j} do not commute"),
                    };
                }
                s
            })?;
            if holds {
                Ok(())
            } else {
                Err(CliError::Failed(format!("{} relation(s) fail", report.failures.len())))
            }
        }
        Command::Analyze(RepArg { rep }) => {
            let rep = read_rep(&load(&rep)?)?;
            let a = AnalysisJson::of(&rep);
            let verdict = goodness(&rep);
            o.emit(&a, || {
                format!(
                    "supp: {}\nintersect: {}\ngoodness: {:?} (type 1 clause {}, type 2 clause {})\ntransitive: {}\ncyclic: {}\ncycle type of s1: {:?}",
                    a.supp,
                    a.intersect.map_or("n/a".into(), |v| v.to_string()),
                    a.goodness,
                    verdict.type1_holds,
                    verdict.type2_holds,
                    a.transitive,
                    a.cyclic,
                    a.cycle_type_gen1
                )
            })
        }
        Command::Normalize { model } => {
            let params = read_model(&load(&model)?)?;
            let nf = normalize_model(&params).map_err(compute)?;
            o.emit(&NormalFormJson::from(&nf), || format!("p = {}\nconjugator = {}", nf.p, nf.conjugator))
        }
        Command::Conjugate { a, b } => {
            let (a, b) = (read_rep(&load(&a)?)?, read_rep(&load(&b)?)?);
            let theta = are_conjugate(&a, &b).map_err(compute)?;
            o.emit(
                &ConjugateJson { conjugate: theta.is_some(), conjugator: theta.as_ref().map(PermJson::from) },
                || match &theta {
                    Some(t) => format!("conjugate via {t}"),
                    None => "not conjugate".into(),
                },
            )
        }
        Command::Derive(args) => {
            let rep = if args.young2 {
                two_subset_action(args.k.expect("clap enforces --k")).map_err(compute)?
            } else {
                let (Some(rep), Some(sub)) = (args.rep, args.subgroup) else {
                    return Err(CliError::Usage("derive needs --rep with --subgroup, or --young2 with --k".into()));
                };
                let rep = read_rep(&load(&rep)?)?;
                let sub: SubgroupJson = parse(&load(&sub)?)?;
                let space = CosetSpace::new(sub.degree, sub.permutations()?, args.limit).map_err(compute)?;
                derived_hom(&rep, &space).map_err(compute)?
            };
            o.emit(&BraidRepJson::from(&rep), || rep_text(&rep))
        }
        Command::Enumerate(args) => {
            let clock = WallClock::start(Duration::from_secs(args.budget.timeout_secs));
            let mode = if args.brute { TableMode::ByBruteForce } else { TableMode::ByCondition };
            let (tables, report) =
                enumerate_t_tables(args.m, args.l, args.k, mode, args.budget.limit, &clock).map_err(search_error)?;
            let report = timed_report(&report, &clock, args.budget.timing);
            let confirmed = report.confirmed;
            let tables: Vec<ModelParamsJson> = tables.iter().map(ModelParamsJson::from).collect();
            let count = tables.len();
            let text = format!("{count} valid tables\n{}", report_text(&report));
            o.emit(&EnumerateJson { report, tables }, || text)?;
            if confirmed {
                Ok(())
            } else {
                Err(CliError::Failed("condition and braid relations disagree".into()))
            }
        }
        Command::Standardize(RepArg { rep }) => {
            let rep = read_rep(&load(&rep)?)?;
            let theta = standardize_supp2m(&rep).map_err(|e| CliError::Failed(e.to_string()))?;
            o.emit(&PermJson::from(&theta), || format!("conjugator = {theta}"))
        }
        Command::CensusM3(args) => {
            let clock = WallClock::start(Duration::from_secs(args.budget.timeout_secs));
            let report = verify_m3_standardness(args.k, args.trials, args.seed, &clock).map_err(search_error)?;
            let report = timed_report(&report, &clock, args.budget.timing);
            o.emit(&report, || report_text(&report))?;
            if report.confirmed {
                Ok(())
            } else {
                Err(CliError::Failed("counterexamples found".into()))
            }
        }
    }
}

fn construct(args: ConstructArgs, o: &mut Output<'_>) -> Result<(), CliError> {
    if let Some(spec) = &args.cperm {
        let spec = CPermSpec::try_from(&parse::<CPermSpecJson>(&load(spec)?)?)?;
        let p: Permutation = spec.expand(args.degree.expect("clap enforces --degree")).map_err(compute)?;
        return o.emit(&PermJson::from(&p), || p.to_string());
    }
    let rep = if args.psi {
        psi(args.m.expect("clap enforces --m"), args.k.expect("clap enforces --k")).map_err(compute)?
    } else if args.mu {
        canonical_mu(args.k.expect("clap enforces --k")).map_err(compute)?
    } else if let Some(which) = args.lin {
        lin_model(which, args.k.expect("clap enforces --k")).map_err(compute)?
    } else if let Some(model) = &args.model {
        phi(&read_model(&load(model)?)?).map_err(compute)?
    } else {
        return Err(CliError::Usage("construct needs one of --psi, --mu, --lin, --model, --cperm".into()));
    };
    o.emit(&BraidRepJson::from(&rep), || rep_text(&rep))
}
