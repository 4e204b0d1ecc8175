use std::fmt::Write as _;
use std::path::Path;

use serde_json::json;
use superprolong::liesuper::catalog::{self, Named};
use superprolong::oddode::{determine_symmetries, FunctionBasis, OdeJson, OdeSpec, DEFAULT_POLY_DEGREE};
use superprolong::prolong::{prolong, ProlongationResult, Reduction, Status, G0};
use superprolong::spencer::{cohomology_table, CoefficientModule, SpencerComplex};
use superprolong::superfield::{
    check_strong_regularity, derived_flag_capped, extract_symbol, extract_symbol_in_frame, sample_points,
    standard_model, DistributionJson, DistributionSpec, GradedFrame,
};
use superprolong::{Field, LieSuperalgebra, Parity, Rational, Result};

use crate::{input_error, DistArgs, G0Arg, ModuleArg, Output, ProlongArgs, Source};

/// A symbol with an optional fixed `g0` and an optional ambient graded algebra.
pub struct Problem<F> {
    pub symbol: LieSuperalgebra<F>,
    pub given: Option<LieSuperalgebra<F>>,
    pub graded: Option<LieSuperalgebra<F>>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn holonomic<F: Field>(g0: LieSuperalgebra<F>) -> Result<Problem<F>> {
    let rep = &g0
        .realization()
        .ok_or_else(|| input_error("matrix algebra without a representation"))?
        .rep;
    let p = rep.iter().filter(|x| !x.is_odd()).count();
    Ok(Problem {
        symbol: catalog::abelian_symbol(p, rep.len() - p)?,
        given: Some(g0),
        graded: None,
    })
}

pub fn resolve<F: Field>(source: &Source) -> Result<Problem<F>> {
    match (&source.name, &source.input) {
        (Some(name), _) => match catalog::build_named::<F>(name)? {
            Named::Symbol(m) => Ok(Problem { symbol: m, given: None, graded: None }),
            Named::SymbolWithG0 { symbol, g0 } => Ok(Problem { symbol, given: Some(g0), graded: None }),
            Named::Holonomic(g0) => holonomic(g0),
            Named::Graded(g) => Ok(Problem {
                symbol: g.negative_part()?,
                given: None,
                graded: Some(g),
            }),
        },
        (None, Some(path)) => {
            let g = LieSuperalgebra::<F>::from_json_str(&read(path)?)?;
            let report = g.validate();
            if !report.is_ok() {
                return Err(input_error(format!("{}: {}", path.display(), report.violations[0])));
            }
            if let Some(r) = g.realization() {
                let rebuilt = LieSuperalgebra::from_matrices(g.space().basis().to_vec(), r.rep.clone(), r.matrices.clone())
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                if rebuilt.to_json() != g.to_json() {
                    return Err(input_error(format!(
                        "{}: representation does not reproduce the brackets",
                        path.display()
                    )));
                }
            }
            let degrees: Vec<i32> = (0..g.dim()).map(|a| g.degree(a)).collect();
            if degrees.iter().all(|&d| d < 0) {
                Ok(Problem { symbol: g, given: None, graded: None })
            } else if g.realization().is_some() && degrees.iter().all(|&d| d == 0) {
                holonomic(g)
            } else {
                Ok(Problem {
                    symbol: g.negative_part()?,
                    given: None,
                    graded: Some(g),
                })
            }
        }
        (None, None) => Err(input_error("give --name or --input")),
    }
}

fn parse_reduction<F: Field>(s: &str) -> Result<(i32, Reduction<F>)> {
    let (l, kind) = s
        .split_once(':')
        .ok_or_else(|| input_error(format!("--reduce {s:?}: expected ℓ:subspace")))?;
    let l: i32 = l
        .trim()
        .parse()
        .map_err(|_| input_error(format!("--reduce {s:?}: bad degree")))?;
    let r = match kind.trim() {
        "zero" | "0" => Reduction::Zero,
        "all" => Reduction::All,
        "trace" => Reduction::ProjectiveTrace,
        other => return Err(input_error(format!("--reduce: unknown subspace {other:?} (zero, all, trace)"))),
    };
    Ok((l, r))
}

pub fn run_prolongation<F: Field>(p: &Problem<F>, args: &ProlongArgs) -> Result<ProlongationResult<F>> {
    let g0 = match (args.g0, &p.given) {
        (Some(G0Arg::Full), _) | (None, None) => G0::Full,
        (Some(G0Arg::Scalings), _) => G0::Scalings,
        (Some(G0Arg::Given) | None, Some(g)) => G0::Given(g.clone()),
        (Some(G0Arg::Given), None) => return Err(input_error("--g0 given: this input carries no g0")),
    };
    let reductions = args
        .reduce
        .iter()
        .map(|s| parse_reduction(s))
        .collect::<Result<Vec<_>>>()?;
    if args.max_degree.is_some_and(|d| d < 0) {
        return Err(input_error("--max-degree must be nonnegative"));
    }
    prolong(&p.symbol, g0, &reductions, args.max_degree)
}

fn status_text(s: Status) -> String {
    match s {
        Status::Stabilized { at } => format!("stabilized (g_{at} = 0)"),
        Status::Truncated { max_degree } => format!("truncated at max degree {max_degree}"),
    }
}

pub fn prolongation_table<F: Field>(r: &ProlongationResult<F>) -> String {
    let mut t = String::new();
    writeln!(t, "{:>6}  {:>5}  {:>5}", "degree", "even", "odd").unwrap();
    for (d, s) in r.superdims_by_degree() {
        writeln!(t, "{d:>6}  {:>5}  {:>5}", s.even, s.odd).unwrap();
    }
    writeln!(t, "total  {}", r.total_superdim()).unwrap();
    writeln!(t, "status {}", status_text(r.status)).unwrap();
    writeln!(t, "{}", r.bound_sentence()).unwrap();
    t
}

pub fn prolong_cmd<F: Field>(args: &ProlongArgs) -> Result<Output> {
    let p = resolve::<F>(&args.source)?;
    let r = run_prolongation(&p, args)?;
    Ok(Output {
        json: serde_json::to_value(r.report(true))?,
        table: prolongation_table(&r),
        code: if r.is_stabilized() { 0 } else { 3 },
    })
}

fn parse_degrees(s: &str) -> Result<Vec<i32>> {
    let num = |t: &str| {
        t.trim()
            .parse::<i32>()
            .map_err(|_| input_error(format!("--d {s:?}: expected a degree or a..b")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((num(a)?..=num(b)?).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

pub fn cohomology_cmd<F: Field>(
    args: &ProlongArgs,
    k: usize,
    d: Option<&str>,
    module: Option<ModuleArg>,
) -> Result<Output> {
    let p = resolve::<F>(&args.source)?;
    let module = module.unwrap_or(if p.graded.is_some() { ModuleArg::Adjoint } else { ModuleArg::Prolongation });
    let mut complex = match module {
        ModuleArg::Adjoint => {
            let g = p
                .graded
                .as_ref()
                .ok_or_else(|| input_error("--module adjoint needs a graded algebra with nonnegative part"))?;
            SpencerComplex::adjoint(g)?
        }
        ModuleArg::Prolongation => {
            let r = run_prolongation(&p, args)?;
            SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None)?)?
        }
        ModuleArg::Symbol => {
            let m = p.symbol.clone();
            let module = CoefficientModule::adjoint(&m, m.dim());
            SpencerComplex::new(m, module)?
        }
    };
    let degrees = match d {
        Some(s) => parse_degrees(s)?,
        None => complex.degrees(k).into_iter().collect(),
    };
    let rows = cohomology_table(&mut complex, degrees, k);
    let mut t = String::new();
    writeln!(t, "{:>4}  {:>2}  H^(d,k)", "d", "k").unwrap();
    for r in &rows {
        writeln!(t, "{:>4}  {:>2}  ({}|{})", r.d, r.k, r.dim_even, r.dim_odd).unwrap();
    }
    let name = match module {
        ModuleArg::Adjoint => "adjoint",
        ModuleArg::Prolongation => "prolongation",
        ModuleArg::Symbol => "symbol",
    };
    Ok(Output {
        json: json!({ "k": k, "module": name, "rows": rows }),
        table: t,
        code: 0,
    })
}

pub fn distribution_cmd<F: Field>(args: &DistArgs, with_symbol: bool) -> Result<Output> {
    let (spec, model) = match (&args.input, &args.name) {
        (Some(path), _) => {
            let j: DistributionJson = serde_json::from_str(&read(path)?)?;
            (DistributionSpec::<F>::from_json(&j)?, None)
        }
        (None, Some(name)) => {
            let p = resolve::<F>(&Source { name: Some(name.clone()), input: None })?;
            let (spec, frame) = standard_model(&p.symbol)?;
            (spec, Some((p.symbol, frame)))
        }
        (None, None) => return Err(input_error("give --input or --name")),
    };
    distribution_report(&spec, model.as_ref(), args, with_symbol)
}

pub fn distribution_report<F: Field>(
    spec: &DistributionSpec<F>,
    model: Option<&(LieSuperalgebra<F>, GradedFrame<F>)>,
    args: &DistArgs,
    with_symbol: bool,
) -> Result<Output> {
    let flag = derived_flag_capped(spec, args.max_depth, args.degree_cap)?;
    let points = sample_points(&spec.base_point, args.samples, args.seed);
    let report = check_strong_regularity(&flag, &points);
    let mut t = String::new();
    let ranks: Vec<String> = report.ranks.iter().map(ToString::to_string).collect();
    writeln!(t, "flag ranks        {}", ranks.join(" ⊂ ")).unwrap();
    writeln!(t, "bracket-generating {}", report.bracket_generating).unwrap();
    writeln!(t, "sample points     {}", report.sample_points).unwrap();
    writeln!(t, "strongly regular  {}", if report.regular { "PASS" } else { "FAIL" }).unwrap();
    if let Some(w) = &report.witness {
        writeln!(t, "witness           {}", serde_json::to_string(w)?).unwrap();
    }
    let mut out = json!({ "regularity": report });
    if with_symbol && report.regular {
        let sym = match model {
            Some((_, frame)) => extract_symbol_in_frame(&flag, frame, &points)?,
            None => extract_symbol(&flag, &points)?,
        };
        let dims: Vec<String> = sym
            .space()
            .superdims_by_degree()
            .into_iter()
            .rev()
            .map(|(d, s)| format!("g{d} = {s}"))
            .collect();
        writeln!(t, "symbol            {}", dims.join(", ")).unwrap();
        out["symbol"] = serde_json::to_value(sym.to_json())?;
        if let Some((m, _)) = model {
            let same = sym.to_json() == m.to_json();
            writeln!(t, "matches catalog   {same}").unwrap();
            out["matches_catalog"] = json!(same);
        }
    }
    Ok(Output {
        json: out,
        table: t,
        code: if report.regular { 0 } else { 4 },
    })
}

pub fn odesym_cmd(
    input: Option<&Path>,
    order: Option<usize>,
    rhs: Option<&str>,
    poly_degree: Option<u32>,
    exponentials: &[String],
) -> Result<Output> {
    let spec = match (input, order, rhs) {
        (Some(path), _, _) => {
            let mut j: OdeJson = serde_json::from_str(&read(path)?)?;
            if let Some(d) = poly_degree {
                j.basis.get_or_insert_with(Default::default).poly_degree = Some(d);
            }
            OdeSpec::from_json(&j)?
        }
        (None, Some(n), Some(rhs)) => {
            let lambdas = exponentials
                .iter()
                .map(|s| <Rational as Field>::parse_scalar(s).map_err(input_error))
                .collect::<Result<Vec<_>>>()?;
            let basis = FunctionBasis::polynomial(poly_degree.unwrap_or(DEFAULT_POLY_DEGREE)).with_exponentials(lambdas);
            OdeSpec::with_basis(n, rhs, basis, true)?
        }
        _ => return Err(input_error("give --input, or --order with --rhs")),
    };
    odesym_report(&spec)
}

pub fn odesym_report(spec: &OdeSpec) -> Result<Output> {
    let r = determine_symmetries(spec)?;
    let bound = r.bound()?;
    let sd = r.superdim();
    let names = r.names();
    let table = r.bracket_table()?;
    let fmt = |f: &superprolong::oddode::JetFn| r.alg.format(f);
    let jet = superprolong::oddode::JetAlgebra::new(1, spec.order)?;
    let mut gens = Vec::new();
    let mut t = String::new();
    writeln!(t, "equation  {}", spec.equation()).unwrap();
    writeln!(t, "{:>6}  {:>5}  {:<24}  prolonged field", "parity", "grade", "f").unwrap();
    for g in &r.generators {
        let f = r.alg.embed(&g.f, &jet)?;
        let field = superprolong::oddode::prolong_field(&jet, &f, spec.order)?.format(&jet);
        let grade = g.grade.map_or("?".to_string(), |x| x.to_string());
        let parity = if g.parity == Parity::Even { "even" } else { "odd" };
        writeln!(t, "{parity:>6}  {grade:>5}  {:<24}  {field}", fmt(&g.f)).unwrap();
        gens.push(json!({ "f": fmt(&g.f), "parity": g.parity, "grade": g.grade, "field": field }));
    }
    let complete = sd == bound;
    writeln!(t, "symmetry dimension {sd}, bound dim pr(m, g0) = {bound}").unwrap();
    if complete {
        writeln!(t, "the bound is attained: the list is complete").unwrap();
    } else {
        writeln!(t, "all symmetries with coefficients in the ansatz span; the bound is not attained").unwrap();
    }
    if let Some(note) = &r.basis_note {
        writeln!(t, "note: {note}").unwrap();
    }
    let cells: Vec<Vec<String>> = table.iter().map(|row| row.iter().map(&fmt).collect()).collect();
    let width = cells.iter().flatten().chain(&names).map(|s| s.chars().count()).max().unwrap_or(1);
    writeln!(t, "\nLagrange brackets [row, column]").unwrap();
    let pad = |s: &str| format!("{s:>width$}");
    writeln!(t, "{}  {}", pad(""), names.iter().map(|n| pad(n)).collect::<Vec<_>>().join("  ")).unwrap();
    for (n, row) in names.iter().zip(&cells) {
        let row: Vec<String> = row.iter().map(|c| pad(if c == "0" { "·" } else { c })).collect();
        writeln!(t, "{}  {}", pad(n), row.join("  ")).unwrap();
    }
    let json = json!({
        "equation": spec.equation(),
        "generators": gens,
        "superdim": sd,
        "bound": bound,
        "complete": complete,
        "bracket_table": { "basis": names, "entries": cells },
        "algebra": r.algebra.to_json(),
        "note": r.basis_note,
    });
    Ok(Output { json, table: t, code: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use superprolong::Rational;

    #[test]
    fn reductions() {
        assert!(matches!(parse_reduction::<Rational>("1:trace"), Ok((1, Reduction::ProjectiveTrace))));
        assert!(matches!(parse_reduction::<Rational>(" 2 : 0 "), Ok((2, Reduction::Zero))));
        assert!(parse_reduction::<Rational>("1").is_err());
        assert!(parse_reduction::<Rational>("x:all").is_err());
    }

    #[test]
    fn degree_ranges() {
        assert_eq!(parse_degrees("2").unwrap(), [2]);
        assert_eq!(parse_degrees("-1..2").unwrap(), [-1, 0, 1, 2]);
        assert_eq!(parse_degrees("1..=1").unwrap(), [1]);
        assert!(parse_degrees("a..b").is_err());
    }
}
