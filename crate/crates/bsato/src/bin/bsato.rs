//! Command-line driver: JSON in, text or JSON report out.
//!
//! Exit codes: 0 success, 1 parse/validation error, 2 precondition unmet,
//! 3 indeterminate result.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num::BigInt;
use serde::Deserialize;
use serde_json::json;

use bsato::aomoto::{certify_root, Verdict};
use bsato::arrangement::{
    build_report, cone_from_affine, generic_bfunction, Arrangement,
};
use bsato::monomial::{lct, newton_exponents_dim2, roots_dim2, roots_general};
use bsato::newton::{Expo, MonomialIdeal};
use bsato::spectrum::{exponents, spectrum_wh, wh_root_multiset, window_check, WeightVector};
use bsato::{Error, Rat};

const EXIT_PARSE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bsato",
    version,
    about = "Exact b-function root data for monomial ideals, weighted-homogeneous \
             singularities, and hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of a text report.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Roots of the b-function of a monomial ideal from its Newton polyhedron.
    MonomialRoots {
        /// JSON file {"n": int, "generators": [[int,...],...]}.
        input: PathBuf,
        /// Upper bound "p/q" on reported roots (required meaningfully for n = 3).
        #[arg(long)]
        bound: Option<String>,
    },
    /// Log canonical threshold (minimal root) of a monomial ideal.
    Lct { input: PathBuf },
    /// Spectrum of a weighted-homogeneous isolated singularity.
    Spectrum {
        /// Comma-separated weights, e.g. "1/5,1/4".
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<String>,
    },
    /// Exponents of a plane-curve singularity from its Newton polygon.
    NewtonExponents {
        /// JSON file {"n": 2, "support": [[int, int],...]}.
        input: PathBuf,
    },
    /// Intersection-lattice report of a central arrangement: dense edges,
    /// candidate roots, Betti data, and the closed-form b-function when known.
    ArrangementReport {
        input: PathBuf,
        /// Override the infinity hyperplane (1-based form index).
        #[arg(long)]
        infinity: Option<usize>,
    },
    /// b-function of a generic central arrangement.
    GenericB { input: PathBuf },
    /// Certify k/d and k/d + 1 as roots or non-roots of a rank-3 arrangement.
    Certify {
        input: PathBuf,
        /// Numerator k with alpha = k/d, 1 <= k <= d.
        #[arg(long)]
        k: usize,
        /// Comma-separated 1-based form indices (k - 1 of them, not infinity).
        #[arg(long = "I", value_delimiter = ',')]
        index_set: Option<Vec<usize>>,
        /// Search for a nonresonant index set when none is supplied.
        #[arg(long)]
        search: bool,
        /// Override the infinity hyperplane (1-based form index).
        #[arg(long)]
        infinity: Option<usize>,
    },
    /// Cone an affine line arrangement into central-arrangement JSON.
    Cone {
        /// JSON file {"affine_lines": [[a, b, c],...]} for lines ax + by = c.
        input: PathBuf,
    },
}

/// Rationals in input files may be plain integers or "p/q" strings.
#[derive(Deserialize)]
#[serde(untagged)]
enum RatLike {
    Int(i64),
    Str(String),
}

impl RatLike {
    fn to_rat(&self) -> Result<Rat, String> {
        match self {
            RatLike::Int(n) => Ok(Rat::int(*n)),
            RatLike::Str(s) => s.parse().map_err(|e| format!("bad rational {s:?}: {e}")),
        }
    }
}

#[derive(Deserialize)]
struct IdealInput {
    n: usize,
    generators: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct SupportInput {
    n: usize,
    support: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct ArrangementInput {
    n: usize,
    forms: Vec<Vec<RatLike>>,
    /// 1-based index of the hyperplane at infinity.
    infinity_index: Option<usize>,
}

#[derive(Deserialize)]
struct LinesInput {
    affine_lines: Vec<[RatLike; 3]>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Fail = (u8, String);

fn fail_parse(msg: impl Into<String>) -> Fail {
    (EXIT_PARSE, msg.into())
}

fn lib_err(e: Error) -> Fail {
    let code = match e {
        Error::Invalid(_) | Error::UnitIdeal | Error::DivisionByZero | Error::NotReduced(_, _) => {
            EXIT_PARSE
        }
        _ => EXIT_PRECONDITION,
    };
    (code, e.to_string())
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail_parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| fail_parse(format!("{}: {e}", path.display())))
}

fn parse_ideal(path: &PathBuf) -> Result<MonomialIdeal, Fail> {
    let input: IdealInput = read_json(path)?;
    let gens: Vec<Expo> = input
        .generators
        .iter()
        .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    MonomialIdeal::new(input.n, gens).map_err(lib_err)
}

fn parse_arrangement(path: &PathBuf, infinity_flag: Option<usize>) -> Result<Arrangement, Fail> {
    let input: ArrangementInput = read_json(path)?;
    let forms = input
        .forms
        .iter()
        .map(|row| row.iter().map(RatLike::to_rat).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail_parse)?;
    let one_based = infinity_flag.or(input.infinity_index);
    let infinity = match one_based {
        Some(0) => return Err(fail_parse("infinity index is 1-based")),
        Some(i) => Some(i - 1),
        None => None,
    };
    Arrangement::new(input.n, forms, infinity).map_err(lib_err)
}

fn run(cli: &Cli) -> Result<ExitCode, Fail> {
    match &cli.command {
        Command::MonomialRoots { input, bound } => monomial_roots(cli, input, bound.as_deref()),
        Command::Lct { input } => {
            let ideal = parse_ideal(input)?;
            let value = lct(&ideal).map_err(lib_err)?;
            if cli.json {
                emit(&json!({ "lct": value, "method": method_for(ideal.dim()) }));
            } else {
                println!("lct: {value}");
                println!("method: {}", method_for(ideal.dim()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { weights } => spectrum_cmd(cli, weights),
        Command::NewtonExponents { input } => {
            let parsed: SupportInput = read_json(input)?;
            if parsed.n != 2 {
                return Err((EXIT_PRECONDITION, "only n = 2 is supported".into()));
            }
            let support: Vec<Expo> = parsed
                .support
                .iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let exps = newton_exponents_dim2(&support).map_err(lib_err)?;
            if cli.json {
                emit(&json!({ "exponents": exps, "method": "newton-polygon-exponents" }));
            } else {
                println!("exponents ({}):", exps.len());
                for e in exps.iter() {
                    println!("  {e}");
                }
                println!("method: newton-polygon-exponents");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ArrangementReport { input, infinity } => {
            let a = parse_arrangement(input, *infinity)?;
            let report = build_report(&a).map_err(lib_err)?;
            if cli.json {
                emit(&serde_json::to_value(&report).expect("report serializes"));
            } else {
                print_report(&report);
            }
            if report.indeterminate {
                return Ok(ExitCode::from(EXIT_INDETERMINATE));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GenericB { input } => {
            let a = parse_arrangement(input, None)?;
            let b = generic_bfunction(&a).map_err(lib_err)?;
            if cli.json {
                emit(&json!({ "roots": b, "method": "generic-arrangement-formula" }));
            } else {
                println!("b-function roots (negated): {b}");
                println!("method: generic-arrangement-formula");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { input, k, index_set, search, infinity } => {
            let a = parse_arrangement(input, *infinity)?;
            let indices: Option<BTreeSet<usize>> = match index_set {
                Some(raw) => {
                    if raw.iter().any(|&i| i == 0) {
                        return Err(fail_parse("index set entries are 1-based"));
                    }
                    Some(raw.iter().map(|&i| i - 1).collect())
                }
                None => None,
            };
            let cert = certify_root(&a, *k, indices.as_ref(), *search).map_err(lib_err)?;
            if cli.json {
                emit(&serde_json::to_value(&cert).expect("certification serializes"));
            } else {
                println!("alpha = {}", cert.alpha);
                println!("  {:10} {:?}", cert.alpha, cert.verdict_alpha);
                let shifted = cert.alpha.clone() + Rat::one();
                println!("  {shifted:10} {:?}", cert.verdict_alpha_plus_1);
                let rules: String = cert.rules_fired.iter().collect();
                println!("rules: {}", if rules.is_empty() { "-".into() } else { rules });
                for note in &cert.diagnostics.notes {
                    println!("note: {note}");
                }
                println!("method: twisted-cohomology-certification");
            }
            if cert.verdict_alpha == Verdict::Unknown
                || cert.verdict_alpha_plus_1 == Verdict::Unknown
            {
                return Ok(ExitCode::from(EXIT_INDETERMINATE));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cone { input } => {
            let parsed: LinesInput = read_json(input)?;
            let mut lines = Vec::new();
            for row in &parsed.affine_lines {
                let [a, b, c] = row;
                lines.push([
                    a.to_rat().map_err(fail_parse)?,
                    b.to_rat().map_err(fail_parse)?,
                    c.to_rat().map_err(fail_parse)?,
                ]);
            }
            for (i, l) in lines.iter().enumerate() {
                if lines[..i].contains(l) {
                    return Err(fail_parse(format!("duplicate line at position {}", i + 1)));
                }
            }
            let a = cone_from_affine(&lines).map_err(lib_err)?;
            emit(&json!({
                "n": a.dim(),
                "forms": a.forms(),
                "infinity_index": a.infinity_index().map(|i| i + 1),
            }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn method_for(n: usize) -> &'static str {
    if n == 2 {
        "newton-polygon-2d"
    } else {
        "newton-polyhedron-general"
    }
}

fn monomial_roots(cli: &Cli, input: &PathBuf, bound: Option<&str>) -> Result<ExitCode, Fail> {
    let ideal = parse_ideal(input)?;
    let bound: Option<Rat> = bound
        .map(|s| s.parse().map_err(|e| fail_parse(format!("bad --bound: {e}"))))
        .transpose()?;
    let (roots, truncated, method) = if ideal.dim() == 2 && bound.is_none() {
        (roots_dim2(&ideal).map_err(lib_err)?, false, "dim2")
    } else {
        let b = bound.unwrap_or_else(|| Rat::int(ideal.dim() as i64));
        (roots_general(&ideal, &b).map_err(lib_err)?, true, "general")
    };
    let minimum = roots.min().cloned();
    if cli.json {
        emit(&json!({
            "roots": roots,
            "lct": minimum,
            "truncated": truncated,
            "method": method,
        }));
    } else {
        println!("roots ({}):", roots.len());
        for r in roots.iter() {
            let flag = if Some(r) == minimum.as_ref() { "  (lct)" } else { "" };
            println!("  {r}{flag}");
        }
        if truncated {
            println!("note: roots listed up to the requested bound only");
        }
        println!("method: {method}");
    }
    Ok(ExitCode::SUCCESS)
}

fn spectrum_cmd(cli: &Cli, weights: &[String]) -> Result<ExitCode, Fail> {
    let parsed: Vec<Rat> = weights
        .iter()
        .map(|s| s.parse().map_err(|e| fail_parse(format!("bad weight {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let n = parsed.len();
    let w = WeightVector::new(parsed).map_err(lib_err)?;
    let sp = spectrum_wh(&w).map_err(lib_err)?;
    let exps = exponents(&sp).map_err(lib_err)?;
    let alpha_tilde = w.alpha_tilde();
    let roots = wh_root_multiset(&w).map_err(lib_err)?;
    let (window_ok, violations) = window_check(&roots, &alpha_tilde, n);
    let terms: Vec<(String, String)> = sp
        .terms()
        .map(|(e, c)| (e.to_string(), c.to_string()))
        .collect();
    if cli.json {
        emit(&json!({
            "spectrum": terms,
            "exponents": exps,
            "alpha_tilde": alpha_tilde,
            "window_ok": window_ok,
        }));
    } else {
        println!("alpha_tilde: {alpha_tilde}");
        println!("spectrum ({} terms):", terms.len());
        for (e, c) in &terms {
            println!("  t^({e})  x{c}");
        }
        println!("window check: {}", if window_ok { "ok" } else { "violated" });
        for v in &violations {
            println!("  violation: {v}");
        }
        println!("method: weighted-homogeneous-product");
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &bsato::arrangement::ArrangementReport) {
    println!("central arrangement: n = {}, d = {}", report.n, report.d);
    println!("alpha': {}    alpha_min: {}", report.alpha_prime, report.alpha_min);
    println!("dense-edge root candidates: {}", report.candidates);
    if let Some(betti) = &report.betti {
        println!(
            "projective complement: b1 = {}, b2 = {}, chi = {}, nu3 = {}",
            betti.b1, betti.b2, betti.chi, betti.nu3
        );
    }
    match (&report.bfunction, report.indeterminate) {
        (Some(b), _) => {
            if let Some(r) = report.r {
                println!("b-function roots (negated), r = {r}: {b}");
            } else {
                println!("b-function roots (negated): {b}");
            }
        }
        (None, true) => println!("b-function: indeterminate (both values of r are possible; try certify)"),
        (None, false) => println!("b-function: no closed form applies"),
    }
    println!("edges (1-based indices):");
    for e in &report.edges {
        println!(
            "  codim {} m {} {:?}{}",
            e.codim,
            e.m,
            e.indices,
            if e.dense { "  dense" } else { "" }
        );
    }
    println!("method: intersection-lattice-report");
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("value serializes"));
}
