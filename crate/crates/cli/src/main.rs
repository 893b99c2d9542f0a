//! Batch front end: parse module/table/degree-sequence inputs, run the
//! pipelines, emit certificates and pretty tables.
//!
//! Exit codes: 0 success, 2 validation error, 3 mathematical error
//! condition, 4 resource cap.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lctab::decomp::{
    bs_greedy, decompose_pd1, non_vertex_certificate, vertex_test, CertificateOutcome,
    DecompError, DecompGenerator, Pd1Input,
};
use lctab::gamma::{gamma_module, gdp_check, thm68_check, DiagramTables, GammaError};
use lctab::monomial::{
    classify, dimension_filtration, ext_table, graded_betti, hilbert_series, local_coh_table,
    DimensionFactor, ExtError, GradedModule,
};
use lctab::pure::GeneratorRef;
use lctab::rat::rat_to_string;
use lctab::ratfunc::RatFunc;
use lctab::sacm::{decompose_sacm, sacm_assemble, FactorList, SacmError};
use lctab::table::{Orientation, Table};

#[derive(Parser)]
#[command(name = "lctab", about = "Exact table calculus for graded modules", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Graded Betti table of a module
    Betti(IoArgs),
    /// Hilbert series of a module
    Hilbert(IoArgs),
    /// Ext table of a module
    Ext(IoArgs),
    /// Local cohomology table of a module
    Lc(IoArgs),
    /// Boij-Soderberg decomposition of a Betti table into pure tables
    #[command(name = "bs-decompose")]
    BsDecompose(IoArgs),
    /// Decomposition of a pd-1 module (or transpose Betti table) over the
    /// generator families
    #[command(name = "pd1-decompose")]
    Pd1Decompose(IoArgs),
    /// Decomposition of an saCM module or factor list
    #[command(name = "sacm-decompose")]
    SacmDecompose(IoArgs),
    /// Vertex classification of a generator
    #[command(name = "vertex-test")]
    VertexTest(IoArgs),
    /// Pole-order non-membership certificate
    #[command(name = "certify-nonvertex")]
    CertifyNonvertex(IoArgs),
    /// Dimension filtration of a module
    Filtration(IoArgs),
    /// Homological classification of a module
    Classify(IoArgs),
    /// Module of global sections with its finite quotient series
    Gamma(IoArgs),
    /// Torsion-splitting identity checker
    Thm68(IoArgs),
    /// General decomposition principle checker
    Gdp(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Read the input document from a file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Inline JSON input
    #[arg(long)]
    inline: Option<String>,
    /// Series window for pretty display, as lo:hi
    #[arg(long, default_value = "-10:10", allow_hyphen_values = true)]
    window: String,
    /// Also print a human-readable rendering
    #[arg(long)]
    pretty: bool,
    /// Write the JSON result document to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Validation(String),
    Math(String),
    Resource(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Math(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Math(m) | CliError::Resource(m) => m,
        }
    }
}

fn validation(e: impl ToString) -> CliError {
    CliError::Validation(e.to_string())
}

impl From<ExtError> for CliError {
    fn from(e: ExtError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::WrongShape(_) | DecompError::Pure(_) | DecompError::Table(_)
            | DecompError::Map(_) => CliError::Validation(e.to_string()),
            DecompError::Ext(inner) => CliError::from(inner),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<SacmError> for CliError {
    fn from(e: SacmError) -> Self {
        match e {
            SacmError::BadFactorShape(_) | SacmError::NonzeroDroppedEntry => {
                CliError::Validation(e.to_string())
            }
            SacmError::Ext(inner) => CliError::from(inner),
            SacmError::Decomp(inner) => CliError::from(inner),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<GammaError> for CliError {
    fn from(e: GammaError) -> Self {
        match e {
            GammaError::WrongDimension(_) | GammaError::ShapeMismatch(_) => {
                CliError::Validation(e.to_string())
            }
            GammaError::Ext(inner) => CliError::from(inner),
            _ => CliError::Math(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, result) = run(&cli.verb);
    match result {
        Ok(doc) => {
            let rendered = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            if let Some(path) = &args.out {
                if let Err(e) = fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if args.pretty {
                match pretty_render(&cli.verb, &doc, args) {
                    Ok(text) => print!("{text}"),
                    Err(e) => eprintln!("warning: pretty rendering unavailable: {}", e.message()),
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(verb: &Verb) -> (&IoArgs, Result<Value, CliError>) {
    let args = io_args(verb);
    let out = parse_window(&args.window)
        .and_then(|_| read_input(args))
        .and_then(|v| dispatch(verb, v));
    (args, out)
}

fn io_args(verb: &Verb) -> &IoArgs {
    match verb {
        Verb::Betti(a)
        | Verb::Hilbert(a)
        | Verb::Ext(a)
        | Verb::Lc(a)
        | Verb::BsDecompose(a)
        | Verb::Pd1Decompose(a)
        | Verb::SacmDecompose(a)
        | Verb::VertexTest(a)
        | Verb::CertifyNonvertex(a)
        | Verb::Filtration(a)
        | Verb::Classify(a)
        | Verb::Gamma(a)
        | Verb::Thm68(a)
        | Verb::Gdp(a) => a,
    }
}

fn read_input(args: &IoArgs) -> Result<Value, CliError> {
    let text = match (&args.input, &args.inline) {
        (Some(_), Some(_)) => {
            return Err(validation("pass exactly one of --input and --inline"))
        }
        (Some(path), None) => fs::read_to_string(path)
            .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(validation("an input document is required")),
    };
    serde_json::from_str(&text).map_err(|e| validation(format!("bad JSON: {e}")))
}

fn parse_module(v: &Value) -> Result<GradedModule, CliError> {
    let m: GradedModule = serde_json::from_value(v.clone()).map_err(validation)?;
    GradedModule::new(m.summands).map_err(validation)
}

fn parse_table(v: &Value) -> Result<Table, CliError> {
    serde_json::from_value(v.clone()).map_err(validation)
}

fn dispatch(verb: &Verb, input: Value) -> Result<Value, CliError> {
    match verb {
        Verb::Betti(_) => {
            let m = parse_module(&input)?;
            Ok(json!({ "table": graded_betti(&m) }))
        }
        Verb::Hilbert(_) => {
            let m = parse_module(&input)?;
            Ok(json!({ "series": hilbert_series(&m) }))
        }
        Verb::Ext(_) => {
            let m = parse_module(&input)?;
            Ok(json!({ "table": ext_table(&m)? }))
        }
        Verb::Lc(_) => {
            let m = parse_module(&input)?;
            Ok(json!({ "table": local_coh_table(&m)? }))
        }
        Verb::BsDecompose(_) => {
            let t = parse_table(&input)?;
            let dec = bs_greedy(&t)?;
            Ok(json!({ "decomposition": dec }))
        }
        Verb::Pd1Decompose(_) => {
            let dec = if input.get("summands").is_some() {
                let m = parse_module(&input)?;
                decompose_pd1(Pd1Input::Module(&m))?
            } else {
                let t = parse_table(&input)?;
                decompose_pd1(Pd1Input::TransposeBetti(&t))?
            };
            // cross-reference: pole-order certificates for the A3 terms
            let mut nonvertex = Vec::new();
            for (_, g) in &dec.terms {
                if let DecompGenerator::Family(f @ GeneratorRef::A3 { .. }) = g {
                    let t = lctab::pure::generator_table(f, f.e()).map_err(validation)?;
                    if let CertificateOutcome::Certificate { pole_order, limit } =
                        non_vertex_certificate(&t)?
                    {
                        nonvertex.push(json!({
                            "generator": f,
                            "certificate": { "pole_order": pole_order, "limit": limit },
                        }));
                    }
                }
            }
            Ok(json!({ "decomposition": dec, "nonvertex_certificates": nonvertex }))
        }
        Verb::SacmDecompose(_) => {
            let factors: FactorList = if input.get("summands").is_some() {
                let m = parse_module(&input)?;
                let filtration = dimension_filtration(&m);
                let mut out = Vec::new();
                for (e, f) in filtration.factors.iter().enumerate() {
                    match f {
                        DimensionFactor::Zero => {}
                        DimensionFactor::Module(fm) => out.push((e, local_coh_table(fm)?)),
                        DimensionFactor::Raw { .. } => {
                            return Err(CliError::Math(format!(
                                "dimension-{e} factor is not expressible in the module class"
                            )))
                        }
                    }
                }
                out
            } else {
                parse_factor_list(&input)?
            };
            let assembled = sacm_assemble(&factors)?;
            let (terms, residual) = decompose_sacm(&factors)?;
            let terms: Vec<Value> = terms
                .iter()
                .map(|(c, g)| json!({ "coeff": rat_to_string(c), "generator": g }))
                .collect();
            Ok(json!({
                "assembled": assembled,
                "terms": terms,
                "residual_zero": residual.is_zero(),
            }))
        }
        Verb::VertexTest(_) => {
            let g: GeneratorRef = serde_json::from_value(input).map_err(validation)?;
            Ok(json!({ "vertex": vertex_test(&g) }))
        }
        Verb::CertifyNonvertex(_) => {
            let t = parse_table(&input)?;
            match non_vertex_certificate(&t)? {
                CertificateOutcome::Certificate { pole_order, limit } => Ok(json!({
                    "certificate": { "pole_order": pole_order, "limit": limit }
                })),
                CertificateOutcome::Inconclusive { reason } => {
                    Ok(json!({ "inconclusive": reason }))
                }
            }
        }
        Verb::Filtration(_) => {
            let m = parse_module(&input)?;
            let f = dimension_filtration(&m);
            let factors: Vec<Value> = f
                .factors
                .iter()
                .enumerate()
                .filter_map(|(e, fac)| match fac {
                    DimensionFactor::Zero => None,
                    DimensionFactor::Module(fm) => Some(json!({ "dim": e, "module": fm })),
                    DimensionFactor::Raw { hs, depth } => {
                        Some(json!({ "dim": e, "hs": hs, "depth": depth }))
                    }
                })
                .collect();
            let summands: Vec<Value> = f
                .summands
                .iter()
                .map(|s| json!({ "summand": s.summand, "levels": s.levels }))
                .collect();
            Ok(json!({ "factors": factors, "summands": summands }))
        }
        Verb::Classify(_) => {
            let m = parse_module(&input)?;
            let c = classify(&m).map_err(|e| CliError::Math(e.to_string()))?;
            Ok(serde_json::to_value(c).expect("serializable"))
        }
        Verb::Gamma(_) => {
            let m = parse_module(&input)?;
            let g = gamma_module(&m)?;
            Ok(json!({ "gamma": g.gamma, "quotient_hs": g.quotient_hs }))
        }
        Verb::Thm68(_) => {
            let hm = parse_table(input.get("HM").ok_or_else(|| validation("missing HM"))?)?;
            let htor =
                parse_table(input.get("HTor").ok_or_else(|| validation("missing HTor"))?)?;
            let hquot =
                parse_table(input.get("HQuot").ok_or_else(|| validation("missing HQuot"))?)?;
            let hs: RatFunc = serde_json::from_value(
                input
                    .get("hs_h1Q")
                    .ok_or_else(|| validation("missing hs_h1Q"))?
                    .clone(),
            )
            .map_err(validation)?;
            let v = thm68_check(&hm, &htor, &hquot, &hs)?;
            Ok(serde_json::to_value(v).expect("serializable"))
        }
        Verb::Gdp(_) => {
            let d: DiagramTables =
                serde_json::from_value(input.clone()).map_err(validation)?;
            let assert_h3 = input
                .get("connecting_map_zero")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            let report = gdp_check(&d, assert_h3)?;
            Ok(serde_json::to_value(report).expect("serializable"))
        }
    }
}

fn parse_factor_list(v: &Value) -> Result<FactorList, CliError> {
    let factors = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| validation("expected a factors array"))?;
    let mut out = Vec::new();
    for f in factors {
        let dim = f
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| validation("factor needs a dim field"))? as usize;
        let table = parse_table(f)?;
        out.push((dim, table));
    }
    Ok(out)
}

fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| validation("window must be lo:hi"))?;
    let lo = lo.trim().parse().map_err(validation)?;
    let hi = hi.trim().parse().map_err(validation)?;
    if lo > hi {
        return Err(validation("window must satisfy lo <= hi"));
    }
    Ok((lo, hi))
}

/// Human rendering of the result document; display only, all computation
/// stays exact.
fn pretty_render(verb: &Verb, doc: &Value, args: &IoArgs) -> Result<String, CliError> {
    let window = parse_window(&args.window)?;
    let mut out = String::new();
    match verb {
        Verb::Betti(_) | Verb::Ext(_) | Verb::Lc(_) => {
            let t = parse_table(doc.get("table").ok_or_else(|| validation("no table"))?)?;
            out.push_str(&pretty_table(&t, window));
            if matches!(verb, Verb::Betti(_)) {
                if let Some(grid) = betti_grid(&t) {
                    out.push_str(&grid);
                }
            }
        }
        Verb::Hilbert(_) => {
            let f: RatFunc = serde_json::from_value(
                doc.get("series")
                    .ok_or_else(|| validation("no series"))?
                    .clone(),
            )
            .map_err(validation)?;
            out.push_str(&format!("HS = {f}\n"));
        }
        _ => {
            // structured documents already read well as JSON
            out.push_str("(see the JSON document above)\n");
        }
    }
    Ok(out)
}

fn pretty_table(t: &Table, (lo, hi): (i64, i64)) -> String {
    let dir = t.orientation().direction();
    let mut out = String::new();
    let label = match t.orientation() {
        Orientation::V => "entry",
        Orientation::Vstar => "H^",
    };
    for (i, f) in t.entries().iter().enumerate() {
        out.push_str(&format!("{label}{i} = {f}\n"));
        let coeffs = f.expand(lo, hi, dir);
        let rendered: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != lctab::rat::rat_int(0))
            .map(|(k, c)| format!("{}:{}", lo + k as i64, rat_to_string(c)))
            .collect();
        if !rendered.is_empty() {
            out.push_str(&format!("  series[{lo}..{hi}]: {}\n", rendered.join(" ")));
        }
    }
    out
}

/// Macaulay-style shifted grid for a polynomial Betti table: the row of a
/// term `t^j` in column `i` is `j - i`.
fn betti_grid(t: &Table) -> Option<String> {
    let n = t.n();
    let mut rows_lo = i64::MAX;
    let mut rows_hi = i64::MIN;
    for (i, f) in t.entries().iter().enumerate() {
        if !f.is_laurent_poly() {
            return None;
        }
        for d in f.numerator().support() {
            rows_lo = rows_lo.min(d - i as i64);
            rows_hi = rows_hi.max(d - i as i64);
        }
    }
    if rows_lo > rows_hi {
        return None;
    }
    let mut out = String::from("\n      ");
    for i in 0..=n {
        out.push_str(&format!("{i:>8}"));
    }
    out.push('\n');
    for r in rows_lo..=rows_hi {
        out.push_str(&format!("{r:>5}:"));
        for i in 0..=n {
            let c = t.entry(i).numerator().coeff(r + i as i64);
            if c == lctab::rat::rat_int(0) {
                out.push_str(&format!("{:>8}", "."));
            } else {
                out.push_str(&format!("{:>8}", rat_to_string(&c)));
            }
        }
        out.push('\n');
    }
    Some(out)
}
