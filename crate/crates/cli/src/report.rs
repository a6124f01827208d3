//! Serializable reports. Field order is fixed, maps are ordered, and timing is
//! opt-in, so equal inputs give byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ParamReport {
    pub name: String,
    pub value: String,
    /// `given`, `required` or `default`.
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationReport {
    pub predicate: String,
    pub value: String,
    pub origin: String,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbiguityJson {
    pub kind: String,
    pub word: String,
    pub rules: [String; 2],
    pub resolvable: bool,
    pub obstruction: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfluenceJson {
    pub confluent: bool,
    pub rules: usize,
    pub ambiguities: usize,
    /// Only the non-resolvable ambiguities.
    pub obstructions: Vec<AmbiguityJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionJson {
    /// `None` when the normal words are infinite.
    pub computed: Option<u64>,
    pub expected: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfJson {
    pub ok: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AntipodeJson {
    pub ok: bool,
    pub order: Option<u64>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewPrimitiveJson {
    pub g: String,
    pub h: String,
    pub dim: usize,
    pub nontrivial: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitivesJson {
    pub group_likes: Vec<String>,
    pub certified: bool,
    pub filtration: Vec<usize>,
    pub taft_wilson: Option<bool>,
    pub skew_primitives: Vec<SkewPrimitiveJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyJson {
    pub g: String,
    pub h: String,
    pub n: usize,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adams: Option<BTreeMap<u64, usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub primes: Vec<u32>,
    pub params: Vec<ParamReport>,
    pub violations: Vec<ViolationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confluence: Option<ConfluenceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<DimensionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<AntipodeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitives: Option<PrimitivesJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<CohomologyJson>>,
    pub errors: Vec<String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedJson {
    pub case: String,
    pub primes: Option<Vec<u32>>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    /// Grid points excluded because a constraint fails there.
    pub unsatisfied_points: usize,
    pub skipped_cases: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub dim: Option<String>,
    pub primes: Option<Vec<u32>>,
    pub entries: Vec<CaseReport>,
    pub skipped: Vec<SkippedJson>,
    pub summary: SweepSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl CaseReport {
    pub fn heading(&self) -> String {
        let primes: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        let params: Vec<String> = self.params.iter().map(|a| format!("{}={}", a.name, a.value)).collect();
        let mut s = self.case.clone();
        if !primes.is_empty() {
            let _ = write!(s, " ({})", primes.join(", "));
        }
        if !params.is_empty() {
            let _ = write!(s, " {}", params.join(" "));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = self.heading();
        s.push('\n');
        for v in &self.violations {
            let _ = writeln!(s, "  violated    {} = {} ({}: {})", v.predicate, v.value, v.origin, v.source);
        }
        if let Some(c) = &self.confluence {
            let _ = writeln!(
                s,
                "  confluence  {} ({} rules, {} ambiguities)",
                verdict(c.confluent),
                c.rules,
                c.ambiguities
            );
            for o in &c.obstructions {
                let _ = writeln!(s, "    {} {}: {} | {} leaves {}", o.kind, o.word, o.rules[0], o.rules[1], o.obstruction);
            }
        }
        if let Some(d) = &self.dimension {
            let computed = d.computed.map_or("infinite".to_string(), |n| n.to_string());
            match d.expected {
                Some(e) => {
                    let _ = writeln!(s, "  dimension   {} (expected {e})", computed);
                }
                None => {
                    let _ = writeln!(s, "  dimension   {computed}");
                }
            }
        }
        if let Some(h) = &self.hopf {
            let _ = writeln!(s, "  hopf        {}", verdict(h.ok));
            for f in &h.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        if let Some(a) = &self.antipode {
            let order = a.order.map_or("unknown".to_string(), |o| o.to_string());
            let _ = writeln!(s, "  antipode    {}, order {order}", verdict(a.ok));
            for f in &a.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        if let Some(p) = &self.primitives {
            let filt: Vec<String> = p.filtration.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "  group-likes {} ({})", p.group_likes.len(), p.group_likes.join(", "));
            let _ = writeln!(s, "  filtration  {}", filt.join(" < "));
            for sp in p.skew_primitives.iter().filter(|sp| sp.nontrivial > 0) {
                let _ = writeln!(s, "  P_{{{},{}}}     dim {} ({} nontrivial)", sp.g, sp.h, sp.dim, sp.nontrivial);
            }
        }
        for c in self.cohomology.iter().flatten() {
            let _ = writeln!(s, "  H^{}({}, {})  dim {}", c.n, c.g, c.h, c.dim_h);
        }
        for e in &self.errors {
            let _ = writeln!(s, "  error       {e}");
        }
        if let Some(t) = self.wall_time_ms {
            let _ = writeln!(s, "  time        {t} ms");
        }
        let _ = writeln!(s, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}

impl SweepReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let _ = writeln!(s, "{:<4} {}", if e.passed { "PASS" } else { "FAIL" }, e.heading());
            for err in &e.errors {
                let _ = writeln!(s, "       {err}");
            }
        }
        for k in &self.skipped {
            let _ = writeln!(s, "SKIP {}: {}", k.case, k.reason);
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} entries, {} passed, {} failed, {} unsatisfied grid points, {} cases skipped",
            m.entries, m.passed, m.failed, m.unsatisfied_points, m.skipped_cases
        );
        s
    }
}
