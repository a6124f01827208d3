use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use hopfforge_core::catalog::{
    instantiate, is_admissible, parameter_grid, smallest_admissible_primes, CaseId, DimClass, Instance, Mode,
    Primes, ValueSource,
};
use hopfforge_core::cohomology::{cohomology_dims, graded_cohomology_dims, BicomoduleSpec, Coalgebra, DEFAULT_BUDGET};
use hopfforge_core::field::Fq;
use hopfforge_core::hopf::{HopfAlgebra, HopfPresentation, PresentationSpec};
use hopfforge_core::rewrite::AmbiguityKind;
use rayon::prelude::*;

use crate::report::*;

/// Environment variable capping `dim C^(x)(n+1)` in cohomology computations.
pub const MEM_BUDGET_VAR: &str = "HOPFFORGE_MEM_BUDGET";
/// Cap on normal words when materializing an algebra.
pub const WORD_LIMIT: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Check {
    Confluence,
    Dim,
    Hopf,
    Antipode,
    Primitives,
    Cohomology,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub confluence: bool,
    pub dim: bool,
    pub hopf: bool,
    pub antipode: bool,
    pub primitives: bool,
    pub cohomology: bool,
}

impl Checks {
    /// Everything except cohomology.
    pub fn standard() -> Self {
        Checks { confluence: true, dim: true, hopf: true, antipode: true, primitives: true, cohomology: false }
    }

    pub fn all() -> Self {
        Checks { cohomology: true, ..Checks::standard() }
    }

    /// Empty selects [`Checks::standard`].
    pub fn from_list(list: &[Check]) -> Self {
        if list.is_empty() {
            return Checks::standard();
        }
        let mut c = Checks::default();
        for k in list {
            match k {
                Check::Confluence => c.confluence = true,
                Check::Dim => c.dim = true,
                Check::Hopf => c.hopf = true,
                Check::Antipode => c.antipode = true,
                Check::Primitives => c.primitives = true,
                Check::Cohomology => c.cohomology = true,
                Check::All => c = Checks::all(),
            }
        }
        c
    }

    fn needs_algebra(&self) -> bool {
        self.hopf || self.antipode || self.primitives || self.cohomology
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub checks: Checks,
    pub budget: usize,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { checks: Checks::standard(), budget: DEFAULT_BUDGET, timing: false }
    }
}

pub fn budget_from_env() -> Result<usize> {
    match std::env::var(MEM_BUDGET_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{MEM_BUDGET_VAR}={v} is not a count")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => bail!("{MEM_BUDGET_VAR}: {e}"),
    }
}

/// A presentation to verify plus what the catalog knows about it.
#[derive(Clone, Debug)]
pub struct Target {
    pub case: String,
    pub primes: Vec<u32>,
    pub params: Vec<ParamReport>,
    pub violations: Vec<ViolationReport>,
    pub expected: Option<u64>,
    pub spec: PresentationSpec,
}

pub fn primes_vec(pr: Primes) -> Vec<u32> {
    let mut v = vec![pr.p, pr.q];
    v.extend(pr.r);
    v
}

impl Target {
    pub fn from_instance(inst: &Instance) -> Self {
        let ctx = &inst.ctx;
        Target {
            case: inst.id.name().to_string(),
            primes: primes_vec(inst.primes),
            params: inst
                .values
                .iter()
                .map(|a| ParamReport {
                    name: a.name.to_string(),
                    value: ctx.display(a.value).to_string(),
                    source: match a.source {
                        ValueSource::Given => "given",
                        ValueSource::Required => "required",
                        ValueSource::Default => "default",
                    }
                    .to_string(),
                })
                .collect(),
            violations: inst
                .violations
                .iter()
                .map(|v| ViolationReport {
                    predicate: v.predicate.clone(),
                    value: ctx.display(v.value).to_string(),
                    origin: v.constraint.origin.name().to_string(),
                    source: v.constraint.source.to_string(),
                })
                .collect(),
            expected: Some(inst.expected_dim()),
            spec: inst.spec.clone(),
        }
    }

    pub fn from_spec(spec: PresentationSpec) -> Self {
        let name = if spec.name.is_empty() { "presentation".to_string() } else { spec.name.clone() };
        Target { case: name, primes: vec![spec.p], params: vec![], violations: vec![], expected: None, spec }
    }
}

fn confluence_json(pres: &HopfPresentation) -> ConfluenceJson {
    let sys = &pres.sys;
    let report = sys.check_confluence();
    let gens = sys.gens();
    let rules = sys.rules();
    let obstructions = report
        .obstructions()
        .map(|a| {
            let amb = &a.ambiguity;
            AmbiguityJson {
                kind: match amb.kind {
                    AmbiguityKind::Overlap => "overlap",
                    AmbiguityKind::Inclusion => "inclusion",
                }
                .to_string(),
                word: gens.word_str(&amb.word),
                rules: [sys.rule_display(&rules[amb.rules.0]), sys.rule_display(&rules[amb.rules.1])],
                resolvable: a.resolvable(),
                obstruction: a.obstruction.display(sys.ctx(), gens).to_string(),
            }
        })
        .collect();
    ConfluenceJson {
        confluent: report.confluent(),
        rules: rules.len(),
        ambiguities: report.ambiguities.len(),
        obstructions,
    }
}

fn basis_label(h: &HopfAlgebra, i: usize) -> String {
    h.pres.gens().word_str(h.basis_word(i))
}

/// Runs the requested checks. Failures land in the report, never in `Err`.
pub fn verify(t: &Target, opts: &Options) -> CaseReport {
    let start = Instant::now();
    let mut rep = CaseReport {
        case: t.case.clone(),
        primes: t.primes.clone(),
        params: t.params.clone(),
        violations: t.violations.clone(),
        confluence: None,
        dimension: None,
        hopf: None,
        antipode: None,
        primitives: None,
        cohomology: None,
        errors: vec![],
        passed: false,
        wall_time_ms: None,
    };
    let mut ok = true;
    run_checks(t, opts, &mut rep, &mut ok);
    rep.passed = ok && rep.errors.is_empty();
    if opts.timing {
        rep.wall_time_ms = Some(start.elapsed().as_millis());
    }
    rep
}

fn run_checks(t: &Target, opts: &Options, rep: &mut CaseReport, ok: &mut bool) {
    let checks = opts.checks;
    let pres = match t.spec.build() {
        Ok(p) => p,
        Err(e) => {
            rep.errors.push(format!("presentation: {e}"));
            return;
        }
    };
    let conf = confluence_json(&pres);
    let confluent = conf.confluent;
    if checks.confluence {
        *ok &= confluent;
        rep.confluence = Some(conf);
    }
    if checks.dim {
        let computed = pres.sys.normal_count();
        *ok &= confluent && t.expected.map_or(computed.is_some(), |e| computed == Some(e));
        rep.dimension = Some(DimensionJson { computed, expected: t.expected });
    }
    if !checks.needs_algebra() {
        return;
    }
    if !confluent {
        rep.errors.push("not confluent; Hopf checks skipped".into());
        return;
    }
    let h = match HopfAlgebra::new(pres, WORD_LIMIT) {
        Ok(h) => h,
        Err(e) => {
            rep.errors.push(format!("algebra: {e}"));
            return;
        }
    };
    if checks.hopf {
        let b = h.check_bialgebra();
        let mut failures = Vec::new();
        for (i, r) in &b.coproduct_failures {
            failures.push(format!("coproduct does not preserve relation {i}: {r}"));
        }
        for i in &b.counit_failures {
            failures.push(format!("counit does not vanish on relation {i}"));
        }
        for g in &b.coassociativity_failures {
            failures.push(format!("coassociativity fails on {g}"));
        }
        for g in &b.counit_axiom_failures {
            failures.push(format!("counit axiom fails on {g}"));
        }
        *ok &= b.ok();
        rep.hopf = Some(HopfJson { ok: b.ok(), failures });
    }
    if checks.antipode {
        let a = match h.derive_antipode() {
            Ok(s) => {
                let r = h.verify_antipode(&s);
                let mut failures: Vec<String> = Vec::new();
                failures.extend(r.left_failures.iter().map(|x| format!("left antipode axiom fails on {x}")));
                failures.extend(r.right_failures.iter().map(|x| format!("right antipode axiom fails on {x}")));
                failures.extend(r.relation_failures.iter().map(|i| format!("S does not preserve relation {i}")));
                // S^4 has order dividing dim H.
                let order = if r.ok() { h.antipode_order(&s, 4 * h.dim() as u64) } else { None };
                AntipodeJson { ok: r.ok() && order.is_some(), order, failures }
            }
            Err(e) => AntipodeJson { ok: false, order: None, failures: vec![e.to_string()] },
        };
        *ok &= a.ok;
        rep.antipode = Some(a);
    }
    let gl = h.group_likes();
    let one = h.alg.index_of(&[]).expect("1 is a normal word");
    let primitive_dims: Vec<(usize, usize)> =
        gl.elements.iter().map(|&g| (g, h.skew_primitives(one, g).nontrivial_dim())).collect();
    if checks.primitives {
        let filt = h.coradical_filtration();
        let skew_primitives: Vec<SkewPrimitiveJson> = gl
            .elements
            .iter()
            .map(|&g| {
                let sp = h.skew_primitives(one, g);
                SkewPrimitiveJson {
                    g: "1".into(),
                    h: basis_label(&h, g),
                    dim: sp.dim(),
                    nontrivial: sp.nontrivial_dim(),
                }
            })
            .collect();
        let pass = gl.certified && filt.exhausts && filt.taft_wilson != Some(false);
        if !pass {
            rep.errors.push("coradical filtration does not exhaust or group-likes are not certified".into());
        }
        rep.primitives = Some(PrimitivesJson {
            group_likes: gl.elements.iter().map(|&g| basis_label(&h, g)).collect(),
            certified: gl.certified,
            filtration: filt.dims,
            taft_wilson: filt.taft_wilson,
            skew_primitives,
        });
    }
    if checks.cohomology {
        let c = Coalgebra::from_hopf(&h);
        let mut out = Vec::new();
        for &(g, p) in &primitive_dims {
            match cohomology_dims(&c, BicomoduleSpec::new(one, g), 1, opts.budget) {
                Ok(r) => {
                    if r.dim_h != p {
                        rep.errors.push(format!("H^1(1, {}) = {} but P_{{1,g}} adds {p}", basis_label(&h, g), r.dim_h));
                    }
                    out.push(cohomology_json(&h, &r));
                }
                Err(e) => rep.errors.push(format!("cohomology: {e}")),
            }
        }
        let top = if c.is_graded() {
            graded_cohomology_dims(&c, BicomoduleSpec::new(one, one), 2, opts.budget)
        } else {
            cohomology_dims(&c, BicomoduleSpec::new(one, one), 2, opts.budget)
        };
        match top {
            Ok(r) => out.push(cohomology_json(&h, &r)),
            Err(e) => rep.errors.push(format!("cohomology: {e}")),
        }
        rep.cohomology = Some(out);
    }
}

fn cohomology_json(h: &HopfAlgebra, r: &hopfforge_core::cohomology::CohomologyReport) -> CohomologyJson {
    CohomologyJson {
        g: basis_label(h, r.g),
        h: basis_label(h, r.h),
        n: r.n,
        dim_z: r.dim_z,
        dim_b: r.dim_b,
        dim_h: r.dim_h,
        adams: r.adams.clone(),
    }
}

/// Basis index of a group-like given as an expression such as `g^2`.
pub fn grouplike_index(h: &HopfAlgebra, src: &str) -> Result<usize> {
    let poly = h.pres.parse(src).map_err(|e| anyhow!("`{src}`: {e}"))?;
    let v = h.alg.eval(&poly);
    let mut it = v.iter();
    match (it.next(), it.next()) {
        (Some((&i, c)), None) if *c == Fq::ONE && h.is_grouplike(&v) => Ok(i),
        _ => bail!("`{src}` is not a group-like basis element"),
    }
}

/// `H^n` of the coalgebra of `h` with coefficients in `{}^g K^k`.
pub fn cohomology(h: &HopfAlgebra, g: &str, k: &str, n: usize, graded: bool, budget: usize) -> Result<CohomologyJson> {
    let spec = BicomoduleSpec::new(grouplike_index(h, g)?, grouplike_index(h, k)?);
    let c = Coalgebra::from_hopf(h);
    let r = if graded {
        graded_cohomology_dims(&c, spec, n, budget)
    } else {
        cohomology_dims(&c, spec, n, budget)
    }
    .map_err(|e| anyhow!("{e}"))?;
    Ok(cohomology_json(h, &r))
}

/// Every satisfied `{0,1}` grid point of the selected cases, in catalog order.
/// `primes = None` uses each case's smallest admissible primes.
pub fn sweep(class: Option<DimClass>, primes: Option<Primes>, cases: &[CaseId], opts: &Options) -> SweepReport {
    let start = Instant::now();
    let selected: Vec<CaseId> = CaseId::ALL
        .iter()
        .copied()
        .filter(|c| class.map_or(true, |k| c.entry().class == k))
        .filter(|c| cases.is_empty() || cases.contains(c))
        .collect();
    let mut summary = SweepSummary::default();
    let mut skipped = Vec::new();
    let mut jobs: Vec<Instance> = Vec::new();
    for id in selected {
        let prs = match primes {
            Some(pr) => {
                let arity_ok = (pr.r.is_some()) == (id.entry().class.arity() == 3);
                if !arity_ok || !is_admissible(id, pr) {
                    skipped.push(SkippedJson {
                        case: id.name().into(),
                        primes: Some(primes_vec(pr)),
                        reason: if arity_ok { "primes are not admissible" } else { "wrong number of primes" }.into(),
                    });
                    continue;
                }
                vec![pr]
            }
            None => smallest_admissible_primes(id),
        };
        for pr in prs {
            match parameter_grid(id, pr) {
                Ok(grid) => {
                    for gp in grid {
                        if !gp.satisfied {
                            summary.unsatisfied_points += 1;
                            continue;
                        }
                        match instantiate(id, &gp.params, Mode::Strict) {
                            Ok(inst) => jobs.push(inst),
                            Err(e) => skipped.push(SkippedJson {
                                case: id.name().into(),
                                primes: Some(primes_vec(pr)),
                                reason: e.to_string(),
                            }),
                        }
                    }
                }
                Err(e) => skipped.push(SkippedJson {
                    case: id.name().into(),
                    primes: Some(primes_vec(pr)),
                    reason: e.to_string(),
                }),
            }
        }
    }
    let entries: Vec<CaseReport> = jobs.par_iter().map(|inst| verify(&Target::from_instance(inst), opts)).collect();
    summary.entries = entries.len();
    summary.passed = entries.iter().filter(|e| e.passed).count();
    summary.failed = summary.entries - summary.passed;
    summary.skipped_cases = skipped.len();
    SweepReport {
        dim: class.map(|c| c.name().to_string()),
        primes: primes.map(primes_vec),
        entries,
        skipped,
        summary,
        wall_time_ms: opts.timing.then(|| start.elapsed().as_millis()),
    }
}
