use clap::{Args, Parser, Subcommand};
use groupring::config::Config;
use groupring::group::catalog::{self, CATALOG};
use groupring::report::{analyze, AnalyzeOptions};
use groupring::sweep::{render_rows, sweep, SweepFamily};
use groupring::verify::{run_all, select, VerifyOptions};
use groupring::{Error, Result};
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "groupring", version, about = "Wedderburn components and nilpotent decomposition of Q[G]")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to build.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Integrality tests allowed in the ND witness search.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<usize>,
    /// Seed for the randomised steps.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// TOML file with order_cap, witness_budget, probe_budget and probe_seed.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group, e.g. `A4`, `SdCyc(3,8,2)` or `X(Q(8),C(4))`.
    Analyze {
        spec: String,
        /// Include per-phase timings.
        #[arg(long)]
        timing: bool,
    },
    /// Predicted against computed matrix component counts for a family.
    Sweep {
        /// One of bj1, bj3, repunit, faithful, nonfaithful.
        family: String,
        /// Prime `p`, as a range such as `2..3` or a single value.
        #[arg(long)]
        p: Option<String>,
        /// Prime `q` (nonfaithful).
        #[arg(long)]
        q: Option<String>,
        /// Exponent `k` of `C_{q^k}` (nonfaithful).
        #[arg(long)]
        k: Option<String>,
        /// Exponent `m` of `C_{p^m}` (bj1).
        #[arg(long)]
        m: Option<String>,
        /// Second exponent `n` (bj1, bj3, repunit).
        #[arg(long)]
        n: Option<String>,
        /// Largest order for the faithful family and largest p for repunits.
        #[arg(long)]
        max: Option<u64>,
    },
    /// Run the acceptance suite and print claims against computed results.
    VerifyTheorems {
        /// Criterion ids or tags, e.g. `nilpotent` or `1,4`.
        #[arg(long)]
        only: Vec<String>,
    },
    /// List the named groups.
    Catalog,
}

fn range<T: std::str::FromStr + Copy>(s: Option<&str>, default: RangeInclusive<T>) -> Result<RangeInclusive<T>> {
    let Some(s) = s else { return Ok(default) };
    let parse = |x: &str| x.trim().parse::<T>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad range `{s}`") });
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

fn run(cli: Cli, out: &mut String) -> Result<bool> {
    use std::fmt::Write as _;
    let mut config = Config::discover(cli.global.config.as_deref())?;
    if let Some(c) = cli.global.cap {
        config.order_cap = c;
    }
    if let Some(b) = cli.global.budget {
        config.witness_budget = b;
    }
    if let Some(s) = cli.global.seed {
        config.probe_seed = s;
    }
    let json = cli.global.json;
    match cli.command {
        Command::Analyze { spec, timing } => {
            let opts = AnalyzeOptions { timing, ..AnalyzeOptions::from(&config) };
            let rep = analyze(&spec, &opts)?;
            if json {
                let _ = writeln!(out, "{}", rep.to_json());
            } else {
                out.push_str(&rep.render_text());
            }
            Ok(true)
        }
        Command::Sweep { family, p, q, k, m, n, max } => {
            let f = match family.to_ascii_lowercase().as_str() {
                "bj1" => SweepFamily::Bj1 {
                    p: range(p.as_deref(), 2..=3)?,
                    m: range(m.as_deref(), 2..=3)?,
                    n: range(n.as_deref(), 1..=2)?,
                },
                "bj3" => SweepFamily::Bj3 { n: range(n.as_deref(), 2..=4)? },
                "repunit" => SweepFamily::Repunit { n: range(n.as_deref(), 2..=5)?, p_max: max.unwrap_or(7) },
                "faithful" => SweepFamily::Faithful { max_order: max.unwrap_or(200) },
                "nonfaithful" => SweepFamily::NonFaithful {
                    p: range(p.as_deref(), 3..=13)?,
                    q: range(q.as_deref(), 2..=7)?,
                    k: range(k.as_deref(), 2..=4)?,
                },
                other => {
                    return Err(Error::UnknownFamily(format!(
                        "{other}; expected one of {}",
                        SweepFamily::NAMES.join(", ")
                    )))
                }
            };
            let rows = sweep(&f, config.order_cap, config.probe_budget, config.probe_seed)?;
            if json {
                let v = serde_json::json!({ "schema": 1, "family": family, "rows": rows });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("rows serialize"));
            } else {
                out.push_str(&render_rows(&rows));
            }
            Ok(rows.iter().all(|r| r.agreement != Some(false)))
        }
        Command::VerifyTheorems { only } => {
            let ids = select(&only)?;
            let opts = VerifyOptions::from(&config);
            let results = run_all(&ids, &opts);
            let ok = results.iter().all(|r| r.passed());
            if json {
                let v = serde_json::json!({ "schema": 1, "passed": ok, "criteria": results });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("results serialize"));
            } else {
                for r in &results {
                    let _ = writeln!(out, "{}", r.summary_line());
                    for row in &r.rows {
                        let mark = if row.ok { "ok" } else { "FAIL" };
                        let _ = writeln!(out, "    [{mark}] {}\n          computed: {}", row.claim, row.computed);
                    }
                }
            }
            Ok(ok)
        }
        Command::Catalog => {
            if json {
                let v: Vec<_> = CATALOG
                    .iter()
                    .map(|e| {
                        let order = catalog::build_named(e.name, config.order_cap).map(|g| g.order()).ok();
                        serde_json::json!({ "name": e.name, "definition": e.definition, "description": e.description, "order": order })
                    })
                    .collect();
                let v = serde_json::json!({ "schema": 1, "groups": v });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("catalog serializes"));
            } else {
                for e in CATALOG {
                    let order = catalog::build_named(e.name, config.order_cap).map(|g| g.order().to_string()).unwrap_or("?".into());
                    let _ = writeln!(out, "{:<10} {:>4}  {}", e.name, order, e.description);
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
