//! Batch front end: generating functions, coefficient series, count tables
//! and the verification suite, in text, JSON or b-file form.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! usage errors.

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use stripwalks::{
    basketball_denominators, basketball_gf_linear, count_walks, expand, soccer_linear,
    stabilized_series, to_json_report, verify_decompositions, verify_initial_table,
    verify_linear_agreement_with, verify_recurrence_identity, verify_soccer_agreement,
    verify_structure, CheckResult, DenomSequence, ExpansionRequest, IntPoly, RationalGF,
    RecurrenceKind, SequenceOrigin, SeriesVec, StripSystem, Var, WalkModel,
};

#[derive(Parser)]
#[command(
    name = "stripwalks",
    version,
    about = "Exact generating functions and counts for directed walks confined to a strip 0 <= y <= w"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    /// steps (1,1), (1,-1)
    Soccer,
    /// steps (1,1), (1,-1), (2,2), (2,-2)
    Basketball,
    /// steps (1,1), (1,-1), (p,2), (p,-2); set p with --p
    #[value(name = "general-p")]
    GeneralP,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    /// OEIS-style "n a(n)" lines (series output only)
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComponentArg {
    /// floor-to-floor walks (0 -> 0)
    F,
    /// ascending walks (0 -> 1)
    G,
    /// descending walks (1 -> 0)
    H,
    /// level-one walks (1 -> 1)
    J,
}

impl ComponentArg {
    fn as_str(self) -> &'static str {
        match self {
            ComponentArg::F => "f",
            ComponentArg::G => "g",
            ComponentArg::H => "h",
            ComponentArg::J => "j",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    All,
    Theorem1,
    Theorem2,
    Theorem3,
    Soccer,
    Decompositions,
    Structure,
}

#[derive(Clone, Copy, Debug)]
struct WidthRange {
    lo: usize,
    hi: usize,
}

fn parse_width_range(s: &str) -> Result<WidthRange, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") {
        return Err(
            "infinite width is not supported; use the `stabilized` subcommand for the \
             width-independent sequence"
                .into(),
        );
    }
    if let Some((a, b)) = s.split_once("..") {
        let lo = a
            .trim()
            .parse()
            .map_err(|_| format!("invalid width {a:?}"))?;
        let hi = b
            .trim()
            .parse()
            .map_err(|_| format!("invalid width {b:?}"))?;
        if hi < lo {
            return Err(format!("width range {s:?} is empty"));
        }
        Ok(WidthRange { lo, hi })
    } else {
        let w = s.parse().map_err(|_| format!("invalid width {s:?}"))?;
        Ok(WidthRange { lo: w, hi: w })
    }
}

fn parse_single_width(s: &str) -> Result<usize, String> {
    let r = parse_width_range(s)?;
    if r.lo != r.hi {
        return Err("expected a single width, not a range".into());
    }
    Ok(r.lo)
}

#[derive(Subcommand)]
enum Command {
    /// Print the numerator and denominator of a strip generating function
    Gf {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// x-span p of the (p,±2) steps; requires --model general-p
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        /// width w, or an inclusive range a..b
        #[arg(long, value_parser = parse_width_range)]
        width: WidthRange,
        /// which of the four strip series to print (soccer has only f)
        #[arg(long, value_enum, default_value = "f")]
        component: ComponentArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print coefficients of the width-w generating function
    Series {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        #[arg(long, value_parser = parse_single_width)]
        width: usize,
        /// number of coefficients to print
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run identity and agreement checks; exit 1 if any check fails
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        which: WhichArg,
        #[arg(long, default_value_t = 12)]
        max_width: usize,
        /// z-degree cutoff for the series-based checks
        #[arg(long, default_value_t = 12)]
        terms: usize,
        /// step span for --which theorem2 (with --which all: restrict to this p)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// corrupt a seed denominator before checking (self-test of the failure path)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Count matrix: one row per width, one column per degree
    Table {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        #[arg(long, default_value_t = 8)]
        max_width: usize,
        /// number of columns
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Width-independent coefficients: z^n read off where it has stabilized
    Stabilized {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: Option<u32>,
        /// number of coefficients to print
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gf {
            model,
            p,
            width,
            component,
            format,
        } => cmd_gf(model, p, width, component, format),
        Command::Series {
            model,
            p,
            width,
            terms,
            format,
        } => cmd_series(model, p, width, terms, format),
        Command::Verify {
            which,
            max_width,
            terms,
            p,
            format,
            inject_fault,
        } => cmd_verify(which, max_width, terms, p, format, inject_fault),
        Command::Table {
            model,
            p,
            max_width,
            terms,
            format,
        } => cmd_table(model, p, max_width, terms, format),
        Command::Stabilized {
            model,
            p,
            terms,
            format,
        } => cmd_stabilized(model, p, terms, format),
    }
}

/// The (p,±2) span implied by the model flags, if any.
fn resolve_span(model: ModelArg, p: Option<u32>) -> Result<Option<u32>, String> {
    match (model, p) {
        (ModelArg::GeneralP, Some(p)) => Ok(Some(p)),
        (ModelArg::GeneralP, None) => Err("--model general-p requires --p".into()),
        (_, Some(_)) => Err("--p is only valid with --model general-p".into()),
        (_, None) => Ok(None),
    }
}

fn walk_model(model: ModelArg, p: Option<u32>) -> Result<WalkModel, String> {
    Ok(match model {
        ModelArg::Soccer => WalkModel::soccer(),
        ModelArg::Basketball => WalkModel::basketball(),
        ModelArg::GeneralP => WalkModel::general(resolve_span(model, p)?.expect("validated")),
    })
}

fn model_name(model: ModelArg, p: Option<u32>) -> String {
    match model {
        ModelArg::Soccer => "soccer".into(),
        ModelArg::Basketball => "basketball".into(),
        ModelArg::GeneralP => format!("general-p(p={})", p.expect("validated")),
    }
}

/// One generating function per width in the range, for the chosen component.
fn gfs_for(
    model: ModelArg,
    p: Option<u32>,
    width: WidthRange,
    component: ComponentArg,
) -> Result<Vec<(usize, RationalGF)>, String> {
    let span = resolve_span(model, p)?;
    let widths = width.lo..=width.hi;
    match model {
        ModelArg::Soccer => {
            if component != ComponentArg::F {
                return Err(
                    "the soccer model has a single generating function; use --component f".into(),
                );
            }
            let denoms = soccer_linear(width.hi);
            Ok(widths.map(|w| (w, denoms.gf(w))).collect())
        }
        ModelArg::Basketball if component == ComponentArg::F => {
            Ok(widths.map(|w| (w, basketball_gf_linear(w))).collect())
        }
        _ => {
            let system = match span {
                Some(p) => StripSystem::new(p),
                None => StripSystem::basketball(),
            };
            let chain = system.chain(width.hi).map_err(|e| e.to_string())?;
            Ok(widths
                .map(|w| {
                    let state = &chain[w];
                    let gf = match component {
                        ComponentArg::F => state.f(),
                        ComponentArg::G => state.g(),
                        ComponentArg::H => state.h(),
                        ComponentArg::J => state.j(),
                    };
                    (w, gf.clone())
                })
                .collect())
        }
    }
}

fn t_view_notice() {
    println!("# var: t (odd t-powers present; t^2 = z)");
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn cmd_gf(
    model: ModelArg,
    p: Option<u32>,
    width: WidthRange,
    component: ComponentArg,
    format: FormatArg,
) -> Result<ExitCode, String> {
    let values = gfs_for(model, p, width, component)?;
    let var = if values.iter().all(|(_, v)| v.is_even_in_t()) {
        Var::Z
    } else {
        Var::T
    };
    match format {
        FormatArg::Text => {
            if var == Var::T {
                t_view_notice();
            }
            for (w, v) in &values {
                let num = v.num().render(var).expect("var chosen by parity");
                let den = v.den().render(var).expect("var chosen by parity");
                println!("w={w} num: {num}");
                println!("w={w} den: {den}");
            }
        }
        FormatArg::Json => {
            let entries: Vec<Value> = values
                .iter()
                .map(|(w, v)| {
                    json!({
                        "w": w,
                        "num": v.num().to_json(var).expect("var chosen by parity"),
                        "den": v.den().to_json(var).expect("var chosen by parity"),
                    })
                })
                .collect();
            print_json(&json!({
                "model": model_name(model, p),
                "component": component.as_str(),
                "entries": entries,
            }));
        }
        FormatArg::Bfile => {
            return Err(
                "b-file output applies to coefficient series; use `series` or `stabilized`".into(),
            )
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_series(series: &SeriesVec, format: FormatArg, header: Option<&str>) {
    match format {
        FormatArg::Text => {
            if series.var() == Var::T {
                t_view_notice();
            }
            let line: Vec<String> = series.coeffs().iter().map(BigInt::to_string).collect();
            println!("{}", line.join(" "));
        }
        FormatArg::Bfile => {
            if let Some(h) = header {
                println!("# {h}");
            }
            if series.var() == Var::T {
                println!("# indexed by t-exponent (t^2 = z)");
            }
            print!("{}", series.to_bfile());
        }
        FormatArg::Json => print_json(&series.to_json()),
    }
}

fn cmd_series(
    model: ModelArg,
    p: Option<u32>,
    width: usize,
    terms: usize,
    format: FormatArg,
) -> Result<ExitCode, String> {
    if terms == 0 {
        return Err("--terms must be positive".into());
    }
    let range = WidthRange {
        lo: width,
        hi: width,
    };
    let (_, gf) = gfs_for(model, p, range, ComponentArg::F)?
        .pop()
        .expect("one width");
    let var = gf.natural_var();
    let series = expand(&ExpansionRequest {
        gf: &gf,
        terms,
        var,
    })
    .map_err(|e| e.to_string())?;
    let header = format!(
        "{} width {width}, floor-to-floor counts",
        model_name(model, p)
    );
    print_series(&series, format, Some(&header));
    Ok(ExitCode::SUCCESS)
}

fn cmd_stabilized(
    model: ModelArg,
    p: Option<u32>,
    terms: usize,
    format: FormatArg,
) -> Result<ExitCode, String> {
    if terms == 0 {
        return Err("--terms must be positive".into());
    }
    let m = walk_model(model, p)?;
    let series = stabilized_series(&m, terms - 1);
    let header = format!(
        "{}, width-independent counts by z-degree",
        model_name(model, p)
    );
    print_series(&series, format, Some(&header));
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(
    model: ModelArg,
    p: Option<u32>,
    max_width: usize,
    terms: usize,
    format: FormatArg,
) -> Result<ExitCode, String> {
    if terms == 0 {
        return Err("--terms must be positive".into());
    }
    let m = walk_model(model, p)?;
    let z_graded = m.is_z_graded();
    let xmax = if z_graded { 2 * (terms - 1) } else { terms - 1 };
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_width + 1);
    for w in 0..=max_width {
        let counts = count_walks(&m, w, 0, 0, xmax).expect("floor heights fit every strip");
        let row = if z_graded {
            counts.to_z().expect("z-graded model").coeffs().to_vec()
        } else {
            counts.coeffs().to_vec()
        };
        rows.push(row);
    }
    let var = if z_graded { Var::Z } else { Var::T };
    match format {
        FormatArg::Text => {
            println!(
                "# {}: rows w=0..{max_width}, columns {}^0..{}^{}",
                model_name(model, p),
                var.as_str(),
                var.as_str(),
                terms - 1
            );
            for (w, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                println!("{w}: {}", cells.join(" "));
            }
        }
        FormatArg::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| Value::Array(row.iter().map(|c| Value::String(c.to_string())).collect()))
                .collect();
            print_json(&json!({
                "model": model_name(model, p),
                "max_width": max_width,
                "terms": terms,
                "var": var.as_str(),
                "rows": rows_json,
            }));
        }
        FormatArg::Bfile => {
            return Err(
                "b-file output applies to a single sequence; use `series` or `stabilized`".into(),
            )
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn corrupted_denominators(w_max: usize) -> DenomSequence {
    let good = basketball_denominators(w_max.max(2));
    let mut entries = good.entries().to_vec();
    // flip one non-constant coefficient of the width-2 seed
    entries[2] = IntPoly::from_z_coeffs(&[1, -2, -4]);
    DenomSequence::from_entries(SequenceOrigin::Basketball, entries)
}

fn cmd_verify(
    which: WhichArg,
    max_width: usize,
    terms: usize,
    p: Option<u32>,
    format: FormatArg,
    inject_fault: bool,
) -> Result<ExitCode, String> {
    if !matches!(which, WhichArg::Theorem2 | WhichArg::All) && p.is_some() {
        return Err("--p applies to --which theorem2 (or all)".into());
    }
    let widths: RangeInclusive<usize> = 0..=max_width;
    let err = |e: stripwalks::StripError| e.to_string();
    let denoms = if inject_fault {
        corrupted_denominators(max_width)
    } else {
        basketball_denominators(max_width)
    };
    let mut checks: Vec<CheckResult> = Vec::new();

    let theorem2_spans = |p: Option<u32>| -> Vec<u32> {
        match p {
            Some(p) => vec![p],
            None => vec![1, 2, 3],
        }
    };
    match which {
        WhichArg::Theorem1 => {
            checks
                .extend(verify_recurrence_identity(RecurrenceKind::Theorem1, widths).map_err(err)?);
        }
        WhichArg::Theorem2 => {
            let p = p.ok_or("--which theorem2 requires --p")?;
            checks.extend(
                verify_recurrence_identity(RecurrenceKind::Theorem2 { p }, widths).map_err(err)?,
            );
        }
        WhichArg::Theorem3 => {
            checks.extend(verify_initial_table(&denoms));
            checks.extend(verify_linear_agreement_with(&denoms, max_width).map_err(err)?);
        }
        WhichArg::Soccer => {
            checks.extend(verify_recurrence_identity(RecurrenceKind::Soccer, widths).map_err(err)?);
            checks.extend(verify_soccer_agreement(max_width).map_err(err)?);
        }
        WhichArg::Decompositions => {
            checks.extend(verify_decompositions(max_width, terms));
        }
        WhichArg::Structure => {
            checks.extend(verify_structure(max_width).map_err(err)?);
        }
        WhichArg::All => {
            checks.extend(
                verify_recurrence_identity(RecurrenceKind::Theorem1, widths.clone())
                    .map_err(err)?,
            );
            for span in theorem2_spans(p) {
                checks.extend(
                    verify_recurrence_identity(
                        RecurrenceKind::Theorem2 { p: span },
                        widths.clone(),
                    )
                    .map_err(err)?,
                );
            }
            checks.extend(verify_initial_table(&denoms));
            checks.extend(verify_linear_agreement_with(&denoms, max_width).map_err(err)?);
            checks.extend(
                verify_recurrence_identity(RecurrenceKind::Soccer, widths.clone()).map_err(err)?,
            );
            checks.extend(verify_decompositions(max_width, terms));
            checks.extend(verify_structure(max_width).map_err(err)?);
        }
    }

    let ok = stripwalks::all_ok(&checks);
    match format {
        FormatArg::Text => {
            for c in &checks {
                let status = if c.ok { "ok  " } else { "FAIL" };
                let mut line = format!("{status} {} w={}", c.kind, c.w);
                if let Some(d) = c.residual_degree {
                    line.push_str(&format!(" residual_degree={d}"));
                }
                if let Some(n) = &c.note {
                    line.push_str(&format!(" ({n})"));
                }
                println!("{line}");
            }
            let failed = checks.iter().filter(|c| !c.ok).count();
            if ok {
                println!("all {} checks passed", checks.len());
            } else {
                println!("{failed} of {} checks FAILED", checks.len());
            }
        }
        FormatArg::Json => print_json(&to_json_report(&checks)),
        FormatArg::Bfile => {
            return Err(
                "b-file output applies to coefficient series; use `series` or `stabilized`".into(),
            )
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
