//! Command-line surface: subcommands and their JSON reports.
//!
//! Every rational is printed as a `"num/den"` string and `+∞` as `"inf"`.
//! A computed verdict exits with 0 (optimal or not); input and hypothesis
//! errors exit with 2; a batch run that finds a counterexample exits with 1.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::batch::{run_batch, Property, RunConfig};
use crate::error::{Error, Result};
use crate::newton::newton_polygon;
use crate::scalar::PadicContext;
use crate::sendov::{
    analyze, check_report, counterexample_family, require_monic_degree, sendov_radius,
    FactoredPoly, Regime, SendovReport,
};
use crate::text::{parse_factor_list, parse_multiplicities, parse_poly, rational_string};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sendov",
    version,
    about = "Exact non-archimedean Sendov bounds and optimality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Valuation of the Sendov radius r_n.
    Radius {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        ram: u32,
    },
    /// Newton polygon of a polynomial.
    Newton {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        ram: u32,
    },
    /// Coefficient criterion for I(f) = r_n.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        ram: u32,
    },
    /// Exact I(f) from a factorization.
    Ioff {
        /// Factors separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        /// Multiplicities separated by ','; all 1 when omitted.
        #[arg(long)]
        mult: Option<String>,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        ram: u32,
    },
    /// The family z^N - z with its full report.
    Family {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        prime: u64,
    },
    /// Seeded property run over random factored instances.
    Batch {
        #[arg(long)]
        property: Property,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        ram: u32,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub exit_code: i32,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output {
            json,
            exit_code: EXIT_OK,
        }
    }
}

pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Radius { degree, prime, ram } => {
            let ctx = PadicContext::new(*prime, *ram)?;
            let r = sendov_radius(*degree, ctx)?;
            Ok(Output::ok(json!({ "radius_valuation": r.to_string() })))
        }
        Command::Newton { poly, prime, ram } => {
            let ctx = PadicContext::new(*prime, *ram)?;
            let f = parse_poly(poly, ctx)?;
            let np = newton_polygon(&f)?;
            let vertices: Vec<Value> = np
                .vertices()
                .iter()
                .map(|(i, v)| json!([i, rational_string(v)]))
                .collect();
            let segments: Vec<Value> = np
                .segments()
                .iter()
                .map(|s| json!({ "slope": rational_string(&s.slope), "length": s.length }))
                .collect();
            Ok(Output::ok(json!({
                "vertices": vertices,
                "segments": segments,
                "zero_order": np.zero_order(),
            })))
        }
        Command::Check { poly, prime, ram } => {
            let ctx = PadicContext::new(*prime, *ram)?;
            let f = parse_poly(poly, ctx)?;
            check(&f)
        }
        Command::Ioff {
            factors,
            mult,
            prime,
            ram,
        } => {
            let ctx = PadicContext::new(*prime, *ram)?;
            let polys = parse_factor_list(factors, ctx)?;
            let mults = match mult {
                Some(m) => parse_multiplicities(m)?,
                None => vec![1; polys.len()],
            };
            let f = FactoredPoly::with_multiplicities(polys, mults)?;
            let report = analyze(&f)?;
            Ok(Output::ok(report_json(&f, &report)))
        }
        Command::Family { degree, prime } => {
            let ctx = PadicContext::unramified(*prime)?;
            let f = counterexample_family(*degree, ctx)?;
            let report = analyze(&f)?;
            let mut json = report_json(&f, &report);
            let obj = json.as_object_mut().expect("object");
            obj.insert("degree".into(), json!(degree));
            obj.insert("prime".into(), json!(prime));
            obj.insert("poly".into(), json!(f.expanded().to_string()));
            obj.insert(
                "factors".into(),
                json!(f
                    .factors()
                    .iter()
                    .map(|(h, _)| h.to_string())
                    .collect::<Vec<_>>()),
            );
            obj.insert(
                "multiplicities".into(),
                json!(f.factors().iter().map(|(_, e)| e).collect::<Vec<_>>()),
            );
            Ok(Output::ok(json))
        }
        Command::Batch {
            property,
            seed,
            count,
            prime,
            ram,
        } => {
            let cfg = RunConfig {
                prime: *prime,
                ram: *ram,
                property: *property,
                seed: *seed,
                count: *count,
            };
            let report = run_batch(&cfg)?;
            let exit_code = if report.ok() {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            Ok(Output {
                json: serde_json::to_value(&report).expect("serializable"),
                exit_code,
            })
        }
    }
}

fn check(f: &crate::poly::UPoly) -> Result<Output> {
    match check_report(f) {
        Ok(report) => Ok(Output::ok(json!({
            "regime": report.regime.as_str(),
            "optimal": report.optimal,
            "hypothesis_ok": report.hypothesis_ok,
            "radius_valuation": report.radius_val.to_string(),
        }))),
        Err(err @ Error::HypothesisViolated { .. }) => {
            let n = require_monic_degree(f)?;
            let ctx = f.ctx();
            Ok(Output {
                json: json!({
                    "regime": Regime::of_degree(ctx, n).as_str(),
                    "optimal": false,
                    "hypothesis_ok": false,
                    "radius_valuation": sendov_radius(n, ctx)?.to_string(),
                    "error": err.to_string(),
                }),
                exit_code: EXIT_INPUT_ERROR,
            })
        }
        Err(e) => Err(e),
    }
}

fn report_json(f: &FactoredPoly, report: &SendovReport) -> Value {
    let per_orbit: Vec<Value> = report
        .per_orbit
        .iter()
        .map(|o| {
            json!({
                "factor": o.factor,
                "poly": f.factors()[o.factor].0.to_string(),
                "multiplicity": o.multiplicity,
                "min_distance_valuation": o.min_distance.to_string(),
                "profile": o.profile.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "regime": report.regime.as_str(),
        "ioff_valuation": report.i_of_f_val.as_ref().map(ToString::to_string),
        "radius_valuation": report.radius_val.to_string(),
        "optimal": report.optimal,
        "criterion_optimal": report.criterion,
        "hypothesis_ok": report.hypothesis_ok,
        "per_orbit": per_orbit,
    })
}
