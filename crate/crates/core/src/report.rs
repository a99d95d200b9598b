//! The analysis pipeline behind `groupring analyze`, and its JSON and text
//! renderings.

use crate::arith::{log_exact, prime_divisors};
use crate::components::predict::{
    element_of_order, predict_nilpotent, predict_nonnilpotent, NilpotentFamily, NonNilpotentFamily, Prediction,
};
use crate::components::{count_matrix_components_in, ComponentCount, ComponentKind};
use crate::config::Config;
use crate::error::Result;
use crate::group::{fingerprint, parse_spec, subgroups, FiniteGroup};
use crate::props::{classify_ssn_in, is_ncn_in, nd_verdict_with, NdReason, NdReport, NdVerdict, SsnClass};
use crate::qalgebra::{AlgElem, AlgElemJson};
use serde::Serialize;
use std::collections::BTreeMap;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub spec: String,
    pub label: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Properties {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub sn: bool,
    pub ssn: bool,
    /// Only defined for `p`-groups.
    pub ncn: Option<bool>,
    pub ssn_class: SsnClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct PciSummary {
    pub pair: Option<(Vec<String>, Vec<String>)>,
    pub idempotent_hash: String,
    pub dim: usize,
    pub center_rank: usize,
    pub kind: ComponentKind,
    pub branch: String,
}

/// An exact count, or bounds when some components stayed undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum MatrixCount {
    Exact(usize),
    Range([usize; 2]),
}

impl MatrixCount {
    pub fn from_bounds(low: usize, high: usize) -> Self {
        if low == high {
            MatrixCount::Exact(low)
        } else {
            MatrixCount::Range([low, high])
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            MatrixCount::Exact(n) => Some(n),
            MatrixCount::Range(_) => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub alpha: AlgElemJson,
    pub e: AlgElemJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct NdReportJson {
    pub group: String,
    pub verdict: NdVerdict,
    pub reason: NdReason,
    pub witness: Option<WitnessJson>,
    pub matrix_count: Option<MatrixCount>,
    pub sn: bool,
    pub ssn: bool,
}

impl NdReportJson {
    pub fn new(spec: &str, r: &NdReport) -> Self {
        NdReportJson {
            group: spec.to_string(),
            verdict: r.verdict,
            reason: r.reason.clone(),
            witness: r.witness.as_ref().map(|(a, e)| WitnessJson { alpha: a.to_json_value(), e: e.to_json_value() }),
            matrix_count: r.matrix_count.map(|(l, h)| MatrixCount::from_bounds(l, h)),
            sn: r.sn,
            ssn: r.ssn,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictionReport {
    pub family: String,
    pub prediction: Prediction,
    /// `prediction.one_matrix == (matrix_count == 1)`, when both are known.
    pub agreement: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: GroupInfo,
    pub properties: Properties,
    pub pcis: Option<Vec<PciSummary>>,
    /// Why the PCIs are missing, when they are.
    pub pci_error: Option<String>,
    pub matrix_count: Option<MatrixCount>,
    pub nd: NdReportJson,
    pub prediction: Option<PredictionReport>,
    /// Milliseconds per phase; only filled in on request, so that reports
    /// stay byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, u128>>,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub cap: usize,
    pub witness_budget: usize,
    pub probe_budget: usize,
    pub seed: u64,
    pub timing: bool,
}

impl From<&Config> for AnalyzeOptions {
    fn from(c: &Config) -> Self {
        AnalyzeOptions {
            cap: c.order_cap,
            witness_budget: c.witness_budget,
            probe_budget: c.probe_budget,
            seed: c.probe_seed,
            timing: false,
        }
    }
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        (&Config::default()).into()
    }
}

fn idempotent_hash(e: &AlgElem) -> String {
    let mut h = DefaultHasher::new();
    e.numerators().hash(&mut h);
    e.denominator().hash(&mut h);
    format!("{:016x}", h.finish())
}

pub fn analyze(spec: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let t0 = Instant::now();
    let parsed = parse_spec(spec)?;
    let g = Arc::new(parsed.build(opts.cap)?);
    let mut rep = analyze_group(&g, &parsed.to_string(), opts)?;
    if let Some(t) = rep.timing.as_mut() {
        t.insert("total".into(), t0.elapsed().as_millis());
    }
    Ok(rep)
}

pub fn analyze_group(g: &Arc<FiniteGroup>, spec: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut timing = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timing: &mut BTreeMap<String, u128>| {
        timing.insert(name.to_string(), clock.elapsed().as_millis());
        clock = Instant::now();
    };
    let lat = subgroups(g);
    lap("subgroups", &mut timing);
    let class = classify_ssn_in(g, &lat);
    let sn = crate::props::is_sn_in(g, &lat);
    let ssn = crate::props::is_ssn_in(g, &lat);
    let properties = Properties {
        abelian: g.is_abelian(),
        nilpotent: g.is_nilpotent(),
        solvable: g.is_solvable(),
        sn,
        ssn,
        ncn: is_ncn_in(g, &lat).ok(),
        ssn_class: class.clone(),
    };
    lap("properties", &mut timing);
    let (count, pci_error): (Option<ComponentCount>, Option<String>) =
        match count_matrix_components_in(g, &lat, opts.probe_budget, opts.seed) {
            Ok(c) => (Some(c), None),
            Err(e) => (None, Some(e.to_string())),
        };
    lap("components", &mut timing);
    let nd = nd_verdict_with(g, &lat, count.as_ref(), opts.witness_budget)?;
    lap("nd", &mut timing);
    let matrix_count = count.as_ref().map(|c| MatrixCount::from_bounds(c.low, c.high));
    let pcis = count.as_ref().map(|c| {
        c.entries
            .iter()
            .map(|x| {
                let j = x.to_json(g);
                PciSummary {
                    pair: j.pair,
                    idempotent_hash: idempotent_hash(&x.e),
                    dim: x.dim,
                    center_rank: x.center_rank,
                    kind: x.kind(),
                    branch: x.classification.branch.clone(),
                }
            })
            .collect()
    });
    let prediction = family_of(g, &class).and_then(|f| {
        let p = match &f {
            Family::Nilpotent(n) => predict_nilpotent(n).ok()?,
            Family::NonNilpotent(n) => predict_nonnilpotent(n).ok()?,
        };
        let agreement = matrix_count.and_then(|m| m.exact()).map(|m| p.one_matrix == (m == 1));
        Some(PredictionReport { family: p.family.clone(), prediction: p, agreement })
    });
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        group: GroupInfo { spec: spec.to_string(), label: g.label().to_string(), order: g.order() },
        properties,
        pcis,
        pci_error,
        matrix_count,
        nd: NdReportJson::new(spec, &nd),
        prediction,
        timing: opts.timing.then_some(timing),
    })
}

/// The SSN family a group belongs to, with parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Nilpotent(NilpotentFamily),
    NonNilpotent(NonNilpotentFamily),
}

fn first_match(g: &FiniteGroup, candidates: impl IntoIterator<Item = NilpotentFamily>) -> Option<NilpotentFamily> {
    let fp = fingerprint(g);
    candidates
        .into_iter()
        .find(|f| f.order() == g.order() as u64 && f.build(g.order()).is_ok_and(|h| fingerprint(&h) == fp))
}

/// Elementary divisors of the abelian subgroup of odd-order elements.
fn odd_elementary_divisors(g: &FiniteGroup) -> Vec<u64> {
    let mut out = Vec::new();
    for p in prime_divisors(g.order() as u64).into_iter().filter(|&p| p != 2) {
        let pu = p as usize;
        // at_least[k]: number of cyclic factors of order at least p^k.
        let count = |k: u32| (0..g.order()).filter(|&x| g.pow(x, pu.pow(k)) == 0).count() as u64;
        let mut prev = 1;
        let mut at_least = Vec::new();
        for k in 1.. {
            let c = count(k);
            if c == prev {
                break;
            }
            at_least.push(log_exact(p, c / prev).unwrap_or(0));
            prev = c;
        }
        for (i, &m) in at_least.iter().enumerate() {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            for _ in 0..m.saturating_sub(next) {
                out.push(p.pow(i as u32 + 1));
            }
        }
    }
    out
}

pub fn family_of(g: &FiniteGroup, class: &SsnClass) -> Option<Family> {
    match class {
        SsnClass::Hamiltonian => {
            let two = 1u64 << (g.order() as u64).trailing_zeros();
            let e_rank = log_exact(2, two / 8)?;
            Some(Family::Nilpotent(NilpotentFamily::Hamiltonian { e_rank, odd_invariants: odd_elementary_divisors(g) }))
        }
        SsnClass::PGroupNcn { p, tags } => {
            let total = log_exact(*p, g.order() as u64)?;
            for tag in tags {
                let found = match tag.as_str() {
                    "BJ1" => first_match(g, (2..total).map(|m| NilpotentFamily::Bj1 { p: *p, m, n: total - m })),
                    "BJ2" => {
                        let z = g.center().order() as u64;
                        first_match(g, [false, true].map(|second| NilpotentFamily::Bj2 { p: *p, zorder: z, second }))
                    }
                    "BJ4" => Some(NilpotentFamily::Bj4),
                    "BJ5" => Some(NilpotentFamily::Bj5),
                    "BJ6" => Some(NilpotentFamily::Bj6),
                    "BJ7" => Some(NilpotentFamily::Bj7),
                    "BJ8" => Some(NilpotentFamily::Bj8),
                    "BJ9" => Some(NilpotentFamily::Bj9),
                    t => t
                        .strip_prefix("BJ3(")
                        .and_then(|r| r.strip_suffix(')'))
                        .and_then(|r| r.parse().ok())
                        .map(|n| NilpotentFamily::Bj3 { n }),
                };
                if let Some(f) = found {
                    return Some(Family::Nilpotent(f));
                }
            }
            None
        }
        SsnClass::SolvableTypeI { p, n, q } => Some(Family::NonNilpotent(NonNilpotentFamily::Faithful { p: *p, n: *n, q: *q })),
        SsnClass::SolvableTypeII { p, q, k, k0 } => {
            let r0 = element_of_order(*p, q.pow(*k0))?;
            Some(Family::NonNilpotent(NonNilpotentFamily::NonFaithful { p: *p, q: *q, k: *k, k0: *k0, r0 }))
        }
        _ => None,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let p = &self.properties;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(s, "group      {} (order {})", self.group.spec, self.group.order);
        let _ = writeln!(
            s,
            "properties abelian={} nilpotent={} solvable={} SN={} SSN={} NCN={}",
            yn(p.abelian),
            yn(p.nilpotent),
            yn(p.solvable),
            yn(p.sn),
            yn(p.ssn),
            p.ncn.map_or("n/a", yn)
        );
        let _ = writeln!(s, "class      {:?}", p.ssn_class);
        match &self.pcis {
            Some(list) => {
                let _ = writeln!(s, "components {}", list.len());
                for c in list {
                    let pair = c
                        .pair
                        .as_ref()
                        .map(|(h, k)| format!("H=<{}> K=<{}>", h.join(","), k.join(",")))
                        .unwrap_or_else(|| "-".into());
                    let _ = writeln!(
                        s,
                        "  dim {:>4}  centre {:>3}  {:<24} {:<18} {}",
                        c.dim,
                        c.center_rank,
                        format!("{:?}", c.kind),
                        c.branch,
                        pair
                    );
                }
            }
            None => {
                let _ = writeln!(s, "components unavailable: {}", self.pci_error.as_deref().unwrap_or("?"));
            }
        }
        let mc = match self.matrix_count {
            Some(MatrixCount::Exact(n)) => n.to_string(),
            Some(MatrixCount::Range([l, h])) => format!("{l}..{h}"),
            None => "unknown".into(),
        };
        let _ = writeln!(s, "matrix     {mc}");
        let _ = writeln!(s, "ND         {:?} ({})", self.nd.verdict, reason_text(&self.nd.reason));
        if let Some(pr) = &self.prediction {
            let agree = match pr.agreement {
                Some(true) => "agrees",
                Some(false) => "DISAGREES",
                None => "not comparable",
            };
            let _ = writeln!(s, "family     {} one_matrix={} ({agree})", pr.family, pr.prediction.one_matrix);
        }
        if let Some(t) = &self.timing {
            let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}ms")).collect();
            let _ = writeln!(s, "timing     {}", parts.join(" "));
        }
        s
    }
}

pub fn reason_text(r: &NdReason) -> String {
    match r {
        NdReason::OneMatrixComponent { matrix_components } => format!("{matrix_components} matrix component(s)"),
        NdReason::WitnessFound { source } => format!("witness from {source}"),
        NdReason::BudgetExhausted { budget, tests } => format!("search budget {budget} exhausted after {tests} tests"),
        NdReason::SearchFinished { tests } => format!("search finished after {tests} tests without a witness"),
    }
}

/// `Table(...)` spec reproducing `g` exactly.
pub fn table_spec(g: &FiniteGroup) -> String {
    crate::group::GroupSpec::Table(g.table_rows()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a4_report() {
        let r = analyze("A4", &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.matrix_count, Some(MatrixCount::Exact(1)));
        assert_eq!(r.nd.verdict, NdVerdict::HasND);
        assert_eq!(r.pcis.as_ref().unwrap().len(), 3);
        assert_eq!(r.prediction.as_ref().unwrap().agreement, Some(true));
    }

    #[test]
    fn trivial_group_report() {
        let r = analyze("C(1)", &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.pcis.as_ref().unwrap().len(), 1);
        assert_eq!(r.matrix_count, Some(MatrixCount::Exact(0)));
    }

    #[test]
    fn c3_c8_is_never_has_nd() {
        let r = analyze("SdCyc(3,8,2)", &AnalyzeOptions::default()).unwrap();
        assert!(r.properties.ssn);
        assert!(r.matrix_count.unwrap().exact().unwrap() >= 2);
        assert_ne!(r.nd.verdict, NdVerdict::HasND);
    }

    #[test]
    fn non_metabelian_group_still_reports() {
        let r = analyze("S4", &AnalyzeOptions::default()).unwrap();
        assert!(r.pcis.is_none());
        assert!(r.pci_error.is_some());
        assert!(!r.properties.sn);
    }

    #[test]
    fn families_recognised() {
        let lat_class = |spec: &str| {
            let g = parse_spec(spec).unwrap().build(250).unwrap();
            let lat = subgroups(&g);
            let c = classify_ssn_in(&g, &lat);
            family_of(&g, &c)
        };
        assert_eq!(lat_class("M16"), Some(Family::Nilpotent(NilpotentFamily::Bj1 { p: 2, m: 3, n: 1 })));
        assert_eq!(
            lat_class("X(Q(8),C(15))"),
            Some(Family::Nilpotent(NilpotentFamily::Hamiltonian { e_rank: 0, odd_invariants: vec![3, 5] }))
        );
        assert_eq!(
            lat_class("X(Q(8),C(9))"),
            Some(Family::Nilpotent(NilpotentFamily::Hamiltonian { e_rank: 0, odd_invariants: vec![9] }))
        );
        assert_eq!(lat_class("A4"), Some(Family::NonNilpotent(NonNilpotentFamily::Faithful { p: 2, n: 2, q: 3 })));
        assert_eq!(lat_class("D12"), None);
    }

    #[test]
    fn json_is_deterministic() {
        let a = analyze("Q12", &AnalyzeOptions::default()).unwrap().to_json();
        let b = analyze("Q12", &AnalyzeOptions::default()).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }
}
