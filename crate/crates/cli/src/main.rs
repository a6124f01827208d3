use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hopfforge::file::PresentationFile;
use hopfforge::report::{to_json, CohomologyJson};
use hopfforge::run::{
    budget_from_env, cohomology, sweep, verify, Check, Checks, Options, Target, WORD_LIMIT,
};
use hopfforge_core::catalog::{
    instantiate, parameter_grid, smallest_admissible_primes, CaseId, CaseParams, DimClass, Instance, Mode,
    ParamDomain, Primes,
};
use hopfforge_core::hopf::HopfAlgebra;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "hopfforge", version, about = "Verify pointed Hopf algebra presentations and the case catalog")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog cases with dimension formulas and constraints.
    List {
        /// Restrict to one dimension class: p2q, pq2, pqr or pq.
        #[arg(long)]
        dim: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Instantiate one case and run checks on it.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Cohomology of the underlying coalgebra with one-dimensional coefficients.
    Cohomology {
        #[command(flatten)]
        source: SourceArgs,
        /// Group-like acting on the left, as an expression.
        #[arg(long, default_value = "1")]
        g: String,
        /// Group-like acting on the right, as an expression.
        #[arg(long, default_value = "1")]
        h: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Split by weight; needs a graded coalgebra.
        #[arg(long)]
        graded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify every satisfied {0,1} grid point of the selected cases in parallel.
    Sweep {
        #[arg(long)]
        dim: Option<String>,
        /// Restrict to these cases; repeatable.
        #[arg(long = "case")]
        cases: Vec<String>,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Write instantiated cases as presentation files.
    Export {
        #[command(flatten)]
        case: OptCaseArgs,
        /// Every case at its smallest admissible primes and first satisfied grid point.
        #[arg(long, conflicts_with = "case")]
        all: bool,
        /// Output file, or directory with --all; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checks on a presentation file.
    CheckFile {
        path: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Args)]
struct PrimeArgs {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
}

impl PrimeArgs {
    fn get(&self) -> Result<Option<Primes>> {
        match (self.p, self.q, self.r) {
            (None, None, None) => Ok(None),
            (Some(p), Some(q), None) => Ok(Some(Primes::pq(p, q))),
            (Some(p), Some(q), Some(r)) => Ok(Some(Primes::pqr(p, q, r))),
            _ => bail!("give --p and --q (and --r for pqr cases) together"),
        }
    }
}

#[derive(Debug, Args)]
struct CaseArgs {
    #[arg(long)]
    case: String,
    #[command(flatten)]
    primes: PrimeArgs,
    /// Parameter assignment `name=value`; repeatable. Unset parameters default to 0.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    /// Reject violated constraints (default).
    #[arg(long, conflicts_with = "permissive")]
    strict: bool,
    /// Record violated constraints and run the checks anyway.
    #[arg(long)]
    permissive: bool,
}

#[derive(Debug, Args)]
struct OptCaseArgs {
    #[arg(long)]
    case: Option<String>,
    #[command(flatten)]
    primes: PrimeArgs,
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    #[arg(long)]
    permissive: bool,
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[arg(long, conflicts_with = "file")]
    case: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    primes: PrimeArgs,
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Checks to run; repeatable or comma-separated. Default: all but cohomology.
    #[arg(long = "check", value_enum, value_delimiter = ',')]
    checks: Vec<Check>,
    #[arg(long)]
    json: bool,
    /// Record wall time in reports; makes output nondeterministic.
    #[arg(long)]
    timing: bool,
}

impl RunArgs {
    fn options(&self) -> Result<Options> {
        Ok(Options { checks: Checks::from_list(&self.checks), budget: budget_from_env()?, timing: self.timing })
    }
}

/// Usage or constraint error, reported with exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_case(name: &str) -> Result<CaseId> {
    name.parse::<CaseId>().map_err(|e| anyhow!("{e}"))
}

fn parse_class(name: &str) -> Result<DimClass> {
    name.parse::<DimClass>().map_err(|e| anyhow!("{e}"))
}

fn params(id: CaseId, primes: &PrimeArgs, set: &[String]) -> Result<CaseParams> {
    let pr = match primes.get()? {
        Some(pr) => pr,
        None => smallest_admissible_primes(id)[0],
    };
    let mut cp = CaseParams::new(pr);
    for s in set {
        let (k, v) = s.split_once('=').with_context(|| format!("--set `{s}` is not name=value"))?;
        cp = cp.with(k.trim(), v.trim());
    }
    Ok(cp)
}

fn instance(id: CaseId, cp: &CaseParams, mode: Mode) -> Result<Instance> {
    let inst = instantiate(id, cp, mode).map_err(|e| anyhow!("{e}"))?;
    for name in inst.defaulted() {
        eprintln!("warning: {name} is unset; using 0");
    }
    Ok(inst)
}

fn emit<T: Serialize>(json: bool, v: &T, text: impl FnOnce() -> String) {
    if json {
        print!("{}", to_json(v));
    } else {
        print!("{}", text());
    }
}

fn dispatch(cmd: Command) -> Result<bool, Usage> {
    match cmd {
        Command::List { dim, json } => {
            let class = dim.as_deref().map(parse_class).transpose()?;
            let rows: Vec<ListEntry> = CaseId::ALL
                .iter()
                .filter(|c| class.map_or(true, |k| c.entry().class == k))
                .map(|&c| ListEntry::new(c))
                .collect();
            emit(json, &rows, || rows.iter().map(ListEntry::to_text).collect());
            Ok(true)
        }
        Command::Verify { case, run } => {
            let id = parse_case(&case.case)?;
            let cp = params(id, &case.primes, &case.set)?;
            let mode = if case.permissive { Mode::Permissive } else { Mode::Strict };
            let inst = instance(id, &cp, mode)?;
            let rep = verify(&Target::from_instance(&inst), &run.options()?);
            emit(run.json, &rep, || rep.to_text());
            Ok(rep.passed)
        }
        Command::Cohomology { source, g, h, n, graded, json } => {
            let spec = match (&source.case, &source.file) {
                (Some(c), None) => {
                    let id = parse_case(c)?;
                    instance(id, &params(id, &source.primes, &source.set)?, Mode::Strict)?.spec
                }
                (None, Some(f)) => PresentationFile::read(f)?.to_spec()?,
                _ => return Err(anyhow!("give --case or --file").into()),
            };
            let pres = spec.build().map_err(|e| anyhow!("{e}"))?;
            let alg = HopfAlgebra::new(pres, WORD_LIMIT).map_err(|e| anyhow!("{e}"))?;
            let budget = budget_from_env()?;
            match cohomology(&alg, &g, &h, n, graded, budget) {
                Ok(r) => {
                    emit(json, &r, || cohomology_text(&r));
                    Ok(true)
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    Ok(false)
                }
            }
        }
        Command::Sweep { dim, cases, primes, run } => {
            let class = dim.as_deref().map(parse_class).transpose()?;
            let cases = cases.iter().map(|c| parse_case(c)).collect::<Result<Vec<_>>>()?;
            let rep = sweep(class, primes.get()?, &cases, &run.options()?);
            emit(run.json, &rep, || rep.to_text());
            Ok(rep.passed())
        }
        Command::Export { case, all, out } => {
            if all {
                let dir = out.context("--all needs --out DIR")?;
                std::fs::create_dir_all(&dir)?;
                for &id in CaseId::ALL {
                    let pr = smallest_admissible_primes(id)[0];
                    let grid = parameter_grid(id, pr).map_err(|e| anyhow!("{e}"))?;
                    let Some(gp) = grid.iter().find(|g| g.satisfied) else { continue };
                    let inst = instance(id, &gp.params, Mode::Strict)?;
                    let path = dir.join(format!("{}.json", id.name()));
                    std::fs::write(&path, PresentationFile::from_spec(&inst.spec).to_json() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                return Ok(true);
            }
            let name = case.case.context("give --case or --all")?;
            let id = parse_case(&name)?;
            let mode = if case.permissive { Mode::Permissive } else { Mode::Strict };
            let inst = instance(id, &params(id, &case.primes, &case.set)?, mode)?;
            let text = PresentationFile::from_spec(&inst.spec).to_json() + "\n";
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::CheckFile { path, run } => {
            let spec = PresentationFile::read(&path)?.to_spec()?;
            let rep = verify(&Target::from_spec(spec), &run.options()?);
            emit(run.json, &rep, || rep.to_text());
            Ok(rep.passed)
        }
    }
}

fn cohomology_text(r: &CohomologyJson) -> String {
    let mut s = format!("H^{}({}, {}): dimZ {} dimB {} dimH {}\n", r.n, r.g, r.h, r.dim_z, r.dim_b, r.dim_h);
    for (j, d) in r.adams.iter().flatten() {
        s += &format!("  weight {j}: {d}\n");
    }
    s
}

#[derive(Serialize)]
struct ParamJson {
    name: &'static str,
    domain: String,
}

#[derive(Serialize)]
struct ConstraintJson {
    expr: &'static str,
    origin: &'static str,
    source: &'static str,
}

#[derive(Serialize)]
struct ListEntry {
    case: &'static str,
    class: &'static str,
    dimension: &'static str,
    group: &'static str,
    params: Vec<ParamJson>,
    constraints: Vec<ConstraintJson>,
    deviations: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    caveat: Option<&'static str>,
}

impl ListEntry {
    fn new(id: CaseId) -> Self {
        let e = id.entry();
        ListEntry {
            case: id.name(),
            class: e.class.name(),
            dimension: e.class.formula(),
            group: e.group,
            params: e
                .params
                .iter()
                .map(|d| ParamJson {
                    name: d.name,
                    domain: match d.domain {
                        ParamDomain::Binary => "{0,1}".into(),
                        ParamDomain::Field => "K".into(),
                        ParamDomain::Range { lo, hi } => format!("{lo}..={hi}"),
                    },
                })
                .collect(),
            constraints: e
                .constraints
                .iter()
                .map(|c| ConstraintJson { expr: c.expr, origin: c.origin.name(), source: c.source })
                .collect(),
            deviations: e.deviations.to_vec(),
            caveat: e.caveat,
        }
    }

    fn to_text(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|p| format!("{} in {}", p.name, p.domain)).collect();
        let mut s = format!("{:<6} {:<4} dim {:<6} {}", self.case, self.class, self.dimension, self.group);
        if !params.is_empty() {
            s += &format!("  [{}]", params.join(", "));
        }
        s.push('\n');
        for c in &self.constraints {
            s += &format!("         {} = 0 ({}: {})\n", c.expr, c.origin, c.source);
        }
        if let Some(c) = self.caveat {
            s += &format!("         caveat: {c}\n");
        }
        s
    }
}
