//! Family sweeps: predicted against computed matrix component counts.

use crate::components::count_matrix_components_in;
use crate::components::predict::{
    element_of_order, predict_nilpotent, predict_nonnilpotent, repunit_instances, NilpotentFamily, NonNilpotentFamily,
    Prediction,
};
use crate::arith::{ipow, is_prime};
use crate::error::{Error, Result};
use crate::group::{subgroups, FiniteGroup};
use rayon::prelude::*;
use serde::Serialize;
use std::ops::RangeInclusive;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepFamily {
    /// `C_{p^m} x| C_{p^n}` over the given ranges.
    Bj1 { p: RangeInclusive<u64>, m: RangeInclusive<u32>, n: RangeInclusive<u32> },
    Bj3 { n: RangeInclusive<u32> },
    /// `C_p^n x| C_q` with `q = (p^n - 1)/(p - 1)` prime.
    Repunit { n: RangeInclusive<u32>, p_max: u64 },
    Faithful { max_order: u64 },
    NonFaithful { p: RangeInclusive<u64>, q: RangeInclusive<u64>, k: RangeInclusive<u32> },
}

impl SweepFamily {
    pub const NAMES: [&'static str; 5] = ["bj1", "bj3", "repunit", "faithful", "nonfaithful"];
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub params: String,
    pub order: u64,
    pub predicted_one_matrix: Option<bool>,
    pub predicted_count: Option<usize>,
    /// `[low, high]` matrix components from the PCIs, when built.
    pub computed: Option<[usize; 2]>,
    pub agreement: Option<bool>,
    pub note: Option<String>,
}

enum Instance {
    Nil(NilpotentFamily),
    Non(NonNilpotentFamily),
}

fn instances(f: &SweepFamily) -> Vec<Instance> {
    let mut out = Vec::new();
    match f {
        SweepFamily::Bj1 { p, m, n } => {
            for p in p.clone().filter(|&p| is_prime(p)) {
                for m in m.clone().filter(|&m| m >= 2) {
                    for n in n.clone().filter(|&n| n >= 1) {
                        out.push(Instance::Nil(NilpotentFamily::Bj1 { p, m, n }));
                    }
                }
            }
        }
        SweepFamily::Bj3 { n } => out.extend(n.clone().filter(|&n| n >= 2).map(|n| Instance::Nil(NilpotentFamily::Bj3 { n }))),
        SweepFamily::Repunit { n, p_max } => {
            out.extend(
                repunit_instances(n.clone(), *p_max)
                    .into_iter()
                    .map(|(p, n, q)| Instance::Non(NonNilpotentFamily::Faithful { p, n, q })),
            )
        }
        SweepFamily::Faithful { max_order } => {
            out.extend(crate::components::predict::faithful_instances(*max_order).into_iter().map(Instance::Non))
        }
        SweepFamily::NonFaithful { p, q, k } => {
            for p in p.clone().filter(|&p| is_prime(p) && p > 2) {
                for q in q.clone().filter(|&q| is_prime(q) && q != p) {
                    for k in k.clone().filter(|&k| k >= 2) {
                        for k0 in 1..k {
                            if (p - 1) % ipow(q, k0) != 0 {
                                continue;
                            }
                            if let Some(r0) = element_of_order(p, ipow(q, k0)) {
                                out.push(Instance::Non(NonNilpotentFamily::NonFaithful { p, q, k, k0, r0 }));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn computed(g: FiniteGroup, probe_budget: usize, seed: u64) -> Result<[usize; 2]> {
    let g = Arc::new(g);
    let lat = subgroups(&g);
    let c = count_matrix_components_in(&g, &lat, probe_budget, seed)?;
    Ok([c.low, c.high])
}

fn row(pr: Prediction, order: u64, built: Option<Result<FiniteGroup>>, cap: usize, probe_budget: usize, seed: u64) -> SweepRow {
    let mut r = SweepRow {
        params: pr.family.clone(),
        order,
        predicted_one_matrix: Some(pr.one_matrix),
        predicted_count: pr.matrix_count,
        computed: None,
        agreement: None,
        note: None,
    };
    if order > cap as u64 {
        r.note = Some(format!("order above cap {cap}"));
        return r;
    }
    match built.map(|b| b.and_then(|g| computed(g, probe_budget, seed))) {
        Some(Ok(c)) => {
            r.computed = Some(c);
            if c[0] == c[1] {
                let mut ok = pr.one_matrix == (c[0] == 1);
                if let Some(n) = pr.matrix_count {
                    ok &= n == c[0];
                }
                r.agreement = Some(ok);
            } else {
                r.note = Some("some components undecided".into());
            }
        }
        Some(Err(e)) => r.note = Some(e.to_string()),
        None => {}
    }
    r
}

/// One row per instance, in parameter order; rows run in parallel.
pub fn sweep(f: &SweepFamily, cap: usize, probe_budget: usize, seed: u64) -> Result<Vec<SweepRow>> {
    let list = instances(f);
    if list.is_empty() {
        return Err(Error::InconsistentFamilyParams("no instances in range".into()));
    }
    Ok(list
        .into_par_iter()
        .map(|inst| match inst {
            Instance::Nil(f) => match predict_nilpotent(&f) {
                Ok(pr) => {
                    let order = f.order();
                    let built = (order <= cap as u64).then(|| f.build(cap));
                    row(pr, order, built, cap, probe_budget, seed)
                }
                Err(e) => bad_row(f.name(), f.order(), e),
            },
            Instance::Non(f) => match predict_nonnilpotent(&f) {
                Ok(pr) => {
                    let order = f.order();
                    let built = (order <= cap as u64).then(|| f.build(cap));
                    row(pr, order, built, cap, probe_budget, seed)
                }
                Err(e) => bad_row(f.name(), f.order(), e),
            },
        })
        .collect())
}

fn bad_row(params: String, order: u64, e: Error) -> SweepRow {
    SweepRow {
        params,
        order,
        predicted_one_matrix: None,
        predicted_count: None,
        computed: None,
        agreement: None,
        note: Some(e.to_string()),
    }
}

pub fn render_rows(rows: &[SweepRow]) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "{:<34} {:>7} {:>10} {:>9} {:>9}  note", "instance", "order", "predicted", "computed", "agree");
    for r in rows {
        let pred = match (r.predicted_one_matrix, r.predicted_count) {
            (Some(_), Some(n)) => n.to_string(),
            (Some(true), None) => "1".into(),
            (Some(false), None) => ">=2".into(),
            _ => "-".into(),
        };
        let comp = match r.computed {
            Some([l, h]) if l == h => l.to_string(),
            Some([l, h]) => format!("{l}..{h}"),
            None => "-".into(),
        };
        let agree = match r.agreement {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let _ = writeln!(s, "{:<34} {:>7} {:>10} {:>9} {:>9}  {}", r.params, r.order, pred, comp, agree, r.note.as_deref().unwrap_or(""));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bj1_small_range_agrees() {
        let rows = sweep(&SweepFamily::Bj1 { p: 2..=3, m: 2..=3, n: 1..=2 }, 250, 20_000, 1).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.agreement == Some(true)), "{rows:?}");
    }

    #[test]
    fn nonfaithful_seven_three() {
        let rows = sweep(&SweepFamily::NonFaithful { p: 7..=7, q: 3..=3, k: 2..=4 }, 250, 20_000, 1).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.predicted_one_matrix == Some(true)));
        assert!(rows.iter().filter(|r| r.order <= 250).all(|r| r.agreement == Some(true)));
    }

    #[test]
    fn repunit_rows() {
        let rows = sweep(&SweepFamily::Repunit { n: 2..=5, p_max: 7 }, 60, 20_000, 1).unwrap();
        let params: Vec<&str> = rows.iter().map(|r| r.params.as_str()).collect();
        assert_eq!(
            params,
            [
                "Faithful(2,2,3)",
                "Faithful(2,3,7)",
                "Faithful(2,5,31)",
                "Faithful(3,3,13)",
                "Faithful(5,3,31)",
                "Faithful(7,5,2801)"
            ]
        );
        assert!(rows.iter().all(|r| r.predicted_one_matrix == Some(true)));
        assert_eq!(rows[0].agreement, Some(true));
        assert!(rows[5].computed.is_none());
    }
}
