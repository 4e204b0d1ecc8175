//! Regression battery: every job is summarized to a small JSON value and
//! compared with `expected/paper_suite.json`.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use superprolong::oddode::OdeSpec;
use superprolong::superfield::{standard_model, DistributionJson, DistributionSpec};
use superprolong::{Field, Gaussian, Rational, Result};

use crate::jobs::{self, resolve, run_prolongation};
use crate::{DistArgs, G0Arg, ModuleArg, Output, ProlongArgs, Source};

const EXPECTED: &str = include_str!("../expected/paper_suite.json");
const NOT_REGULAR: &str = include_str!("../../../data/distributions/not_regular.json");
const ODES: [(&str, &str); 4] = [
    ("odesym trivial2", include_str!("../../../data/odes/trivial2.json")),
    ("odesym trivial3", include_str!("../../../data/odes/trivial3.json")),
    ("odesym linear3", include_str!("../../../data/odes/linear3.json")),
    ("odesym cubic3", include_str!("../../../data/odes/cubic3.json")),
];

fn args(name: &str, g0: Option<G0Arg>, reduce: &[&str], max_degree: Option<i32>) -> ProlongArgs {
    ProlongArgs {
        source: Source {
            name: Some(name.into()),
            input: None,
        },
        g0,
        reduce: reduce.iter().map(|s| s.to_string()).collect(),
        max_degree,
    }
}

fn prolong_summary<F: Field>(a: &ProlongArgs) -> Result<Value> {
    let r = run_prolongation(&resolve::<F>(&a.source)?, a)?;
    let degrees: Map<String, Value> = r
        .superdims_by_degree()
        .into_iter()
        .map(|(d, s)| (d.to_string(), json!(s.to_string())))
        .collect();
    Ok(json!({
        "degrees": degrees,
        "total": r.total_superdim().to_string(),
        "stabilized": r.is_stabilized(),
    }))
}

fn cohomology_summary<F: Field>(a: &ProlongArgs, k: usize, d: &str, module: ModuleArg) -> Result<Value> {
    let out = jobs::cohomology_cmd::<F>(a, k, Some(d), Some(module))?;
    let rows: Map<String, Value> = out.json["rows"]
        .as_array()
        .expect("rows")
        .iter()
        .map(|r| (r["d"].to_string(), json!(format!("({}|{})", r["dim_even"], r["dim_odd"]))))
        .collect();
    Ok(Value::Object(rows))
}

fn dist_args() -> DistArgs {
    DistArgs {
        input: None,
        name: None,
        seed: 0,
        samples: 5,
        max_depth: 8,
        degree_cap: superprolong::superfield::DEFAULT_DEGREE_CAP,
    }
}

fn regularity_summary(out: &Output) -> Value {
    let mut v = json!({
        "regular": out.json["regularity"]["regular"],
        "witness": out.json["regularity"]["witness"],
    });
    if let Some(sym) = out.json.get("symbol") {
        let mut dims: Map<String, Value> = Map::new();
        for b in sym["basis"].as_array().expect("basis") {
            let d = b["degree"].to_string();
            let e = dims.entry(d).or_insert(json!([0, 0]));
            let k = if b["parity"] == "odd" { 1 } else { 0 };
            e[k] = json!(e[k].as_u64().unwrap() + 1);
        }
        v["symbol"] = Value::Object(
            dims.into_iter()
                .map(|(d, e)| (d, json!(format!("({}|{})", e[0], e[1]))))
                .collect(),
        );
        v["matches_catalog"] = out.json.get("matches_catalog").cloned().unwrap_or(Value::Null);
    }
    v
}

fn ode_summary(src: &str) -> Result<Value> {
    let out = jobs::odesym_report(&OdeSpec::from_json_str(src)?)?;
    let j = &out.json;
    let sd = |v: &Value| format!("({}|{})", v["even"], v["odd"]);
    Ok(json!({
        "equation": j["equation"],
        "superdim": sd(&j["superdim"]),
        "bound": sd(&j["bound"]),
        "generators": j["generators"].as_array().expect("generators").iter().map(|g| g["f"].clone()).collect::<Vec<_>>(),
        "brackets": j["bracket_table"]["entries"],
    }))
}

/// Name and computed summary of every job.
pub fn compute() -> Vec<(String, Result<Value>)> {
    let mut jobs: Vec<(String, Result<Value>)> = Vec::new();
    let mut push = |name: &str, v: Result<Value>| jobs.push((name.to_string(), v));
    push("prolong shc_symbol", prolong_summary::<Rational>(&args("shc_symbol", None, &[], None)));
    for n in [2, 3] {
        let name = format!("odd_ode_symbol:{n}");
        push(
            &format!("prolong {name} scalings"),
            prolong_summary::<Rational>(&args(&name, Some(G0Arg::Scalings), &[], None)),
        );
    }
    push("prolong cpe:2", prolong_summary::<Rational>(&args("cpe:2", None, &[], None)));
    push("prolong spe_ab:2:1:2", prolong_summary::<Rational>(&args("spe_ab:2:1:2", None, &[], None)));
    push("prolong spe_sk:2 to degree 5", prolong_summary::<Rational>(&args("spe_sk:2", None, &[], Some(5))));
    for name in ["osp:2:2", "osp:3:2", "osp:4:4", "spo:0:2", "spo:0:3"] {
        push(&format!("prolong {name}"), prolong_summary::<Rational>(&args(name, None, &[], None)));
    }
    for name in ["gl:2:1", "gl:1:2", "gl:2:2"] {
        push(
            &format!("prolong {name} reduced 1:trace"),
            prolong_summary::<Rational>(&args(name, None, &["1:trace"], None)),
        );
    }
    for n in [1, 2] {
        let name = format!("supertranslation:{n}");
        push(&format!("prolong {name}"), prolong_summary::<Gaussian>(&args(&name, None, &[], None)));
    }
    push(
        "cohomology sl21_ode k=1",
        cohomology_summary::<Rational>(&args("sl21_ode", None, &[], None), 1, "1..2", ModuleArg::Adjoint),
    );
    push(
        "cohomology gl:2:1 reduced 1:trace k=1",
        cohomology_summary::<Rational>(&args("gl:2:1", None, &["1:trace"], None), 1, "2", ModuleArg::Prolongation),
    );
    let not_regular = serde_json::from_str::<DistributionJson>(NOT_REGULAR)
        .map_err(superprolong::Error::from)
        .and_then(|j| DistributionSpec::<Rational>::from_json(&j))
        .and_then(|spec| jobs::distribution_report(&spec, None, &dist_args(), true))
        .map(|o| regularity_summary(&o));
    push("check-regular not_regular.json", not_regular);
    let shc = resolve::<Rational>(&Source {
        name: Some("shc_symbol".into()),
        input: None,
    })
    .and_then(|p| {
        let (spec, frame) = standard_model(&p.symbol)?;
        jobs::distribution_report(&spec, Some(&(p.symbol, frame)), &dist_args(), true)
    })
    .map(|o| regularity_summary(&o));
    push("symbol shc_symbol model", shc);
    for (name, src) in ODES {
        push(name, ode_summary(src));
    }
    jobs
}

pub fn run() -> Result<Output> {
    let expected: Map<String, Value> = serde_json::from_str(EXPECTED)?;
    let mut table = String::new();
    let mut computed = Map::new();
    let mut failures = 0;
    for (name, value) in compute() {
        let value = match value {
            Ok(v) => v,
            Err(e) => json!({ "error": e.to_string() }),
        };
        match expected.get(&name) {
            Some(want) if *want == value => writeln!(table, "PASS  {name}").unwrap(),
            Some(want) => {
                failures += 1;
                writeln!(table, "FAIL  {name}\n      expected {want}\n      got      {value}").unwrap();
            }
            None => {
                failures += 1;
                writeln!(table, "FAIL  {name}: no expected entry; got {value}").unwrap();
            }
        }
        computed.insert(name, value);
    }
    writeln!(table, "{} jobs, {failures} failed", computed.len()).unwrap();
    Ok(Output {
        json: Value::Object(computed),
        table,
        code: if failures == 0 { 0 } else { 1 },
    })
}
