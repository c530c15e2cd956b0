//! Command-line front end: verification suites, the q/Q table dump,
//! bound evaluation, certified enclosures, and the pinned-constants
//! reproduction report.
//!
//! Exit codes: 0 on success / all checks passing, 1 when a verification
//! or report check fails, 2 on usage and domain errors. Data goes to
//! stdout, diagnostics to stderr. Output is deterministic for fixed
//! flags; `report` in particular is byte-stable.

use std::fmt;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;

use crate::bounds::{
    b_k, corollary1_lower, corollary2_upper, distinct_product_partial, enclose_distinct_product,
    enclose_odd_divisor_sum, eval_family, r_k_value, Enclosure, Side,
};
use crate::constants::{quarter_constants, r_numerator_checks, sixteen_term_lower_bound};
use crate::error::Error;
use crate::fibonacci::FibCache;
use crate::partitions::{PrimePowerSet, Provenance, QTable};
use crate::rational::{EvalPoint, ExactRational, RoundMode};
use crate::verify::{run_all, run_suite, Suite, VerificationReport};

#[derive(Parser)]
#[command(
    name = "oddparts",
    version,
    about = "Exact arithmetic for partitions into odd parts: tables, identities, certified bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity and inequality suites against brute-force enumeration
    Verify(VerifyArgs),
    /// Dump n, q(n), F_n and the Q_k(n) histogram columns
    Qtable(QtableArgs),
    /// Evaluate one member of a bound family at an exact rational point
    Bound(BoundArgs),
    /// Two-sided enclosure of the odd-divisor sum or the distinct product
    Enclose(EncloseArgs),
    /// Reproduce the pinned constants at x = 1/4 with PASS/FAIL lines
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all" for every suite with shared tables
    #[arg(long, default_value = "all")]
    suite: String,
    /// Bound on n: replaces the suite default, or caps every default
    /// when running all suites
    #[arg(long)]
    max_n: Option<u64>,
    /// Bound on k for the suites with a k grid, same semantics
    #[arg(long)]
    max_k: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct QtableArgs {
    /// Rows to print (brute-force enumeration per row)
    #[arg(long, default_value_t = 20)]
    max_n: u64,
    /// Dense Q_k columns to print; the JSON form always carries the
    /// full sparse histogram
    #[arg(long, default_value_t = 4)]
    max_k: u64,
    /// Lift the n <= 100 enumeration guard
    #[arg(long)]
    allow_large: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BoundArgs {
    /// Ak | Bk | Bk-closed | Rk | corollary1 | corollary2 | mixed2 | mixed3
    #[arg(long)]
    family: String,
    /// Family index, where the family has one
    #[arg(long)]
    k: Option<u64>,
    /// Evaluation point, an exact rational like 1/4
    #[arg(long)]
    x: String,
    /// Comma-separated subset of P for the corollary families
    #[arg(long, default_value = "3")]
    pset: String,
    /// Fractional digits in the decimal annotation
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Sum,
    Product,
}

#[derive(Args)]
struct EncloseArgs {
    #[arg(long, value_enum)]
    target: Target,
    /// Evaluation point, an exact rational like 1/4
    #[arg(long)]
    x: String,
    /// Terms kept exactly before the certified tail bound
    #[arg(long, default_value_t = 30)]
    terms: u64,
    /// Fractional digits in the decimal annotations
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ReportArgs {
    /// Evaluation point; expectations are pinned at 1/4 only
    #[arg(long, default_value = "1/4")]
    x: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Qtable(args) => cmd_qtable(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Enclose(args) => cmd_enclose(args),
        Command::Report(args) => cmd_report(args),
    }
}

fn fail_usage(msg: impl fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    if args.max_n == Some(0) {
        return fail_usage("empty range: --max-n must be at least 1");
    }
    if args.max_k == Some(0) {
        return fail_usage("empty range: --max-k must be at least 1");
    }
    let reports = if args.suite == "all" {
        run_all(args.max_n, args.max_k)
    } else {
        match Suite::from_name(&args.suite) {
            Some(suite) => vec![run_suite(suite, args.max_n, args.max_k, None)],
            None => {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return fail_usage(format!(
                    "unknown suite '{}'; expected all or one of: {}",
                    args.suite,
                    names.join(", ")
                ));
            }
        }
    };
    match args.format {
        Format::Text => {
            for report in &reports {
                println!("{report}");
            }
        }
        Format::Csv => {
            println!("suite,range,status,n,k,lhs,rhs");
            for report in &reports {
                match &report.counterexample {
                    None => println!("{},\"{}\",pass,,,,", report.suite, report.range),
                    Some(c) => println!(
                        "{},\"{}\",fail,{},{},{},{}",
                        report.suite, report.range, c.n, c.k, c.lhs, c.rhs
                    ),
                }
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports.iter().map(report_json).collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    }
}

fn report_json(report: &VerificationReport) -> serde_json::Value {
    serde_json::json!({
        "suite": report.suite,
        "range": report.range,
        "passed": report.passed(),
        "counterexample": report.counterexample.as_ref().map(|c| serde_json::json!({
            "n": c.n,
            "k": c.k,
            "lhs": c.lhs.to_string(),
            "rhs": c.rhs.to_string(),
        })),
    })
}

/// JSON numbers where they fit, decimal strings where they do not, so
/// big Fibonacci numbers survive the trip exactly.
fn json_big(v: &BigInt) -> serde_json::Value {
    match u64::try_from(v) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

fn cmd_qtable(args: QtableArgs) -> u8 {
    if args.max_n == 0 {
        return fail_usage("empty range: --max-n must be at least 1");
    }
    if args.max_n > 100 && !args.allow_large {
        return fail_usage(format!(
            "--max-n {} exceeds the enumeration guard (100); pass --allow-large to proceed",
            args.max_n
        ));
    }
    let mut table = QTable::build(args.max_n);
    if let Err(e) = table.annotate_closed_forms() {
        eprintln!("error: {e}");
        return 1;
    }
    let mut fib = FibCache::new();
    match args.format {
        Format::Text => {
            let mut header = String::from("n q F");
            for k in 1..=args.max_k {
                let _ = write!(header, " Q{k}");
            }
            println!("{header}");
            for row in table.rows() {
                let n = row.n();
                let mut line = format!("{} {} {}", n, row.total(), fib.get(n as usize));
                for k in 1..=args.max_k {
                    let key = BigInt::from(k);
                    let mark = match row.provenance(&key) {
                        Some(Provenance::ClosedForm) => "*",
                        _ => "",
                    };
                    let _ = write!(line, " {}{}", row.q_k(&key), mark);
                }
                println!("{line}");
            }
            println!("(* = entry confirmed by a closed form)");
        }
        Format::Csv => {
            let mut header = String::from("n,q,F");
            for k in 1..=args.max_k {
                let _ = write!(header, ",Q{k}");
            }
            println!("{header}");
            for row in table.rows() {
                let n = row.n();
                let mut line = format!("{},{},{}", n, row.total(), fib.get(n as usize));
                for k in 1..=args.max_k {
                    let _ = write!(line, ",{}", row.q_k_u64(k));
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .rows()
                .map(|row| {
                    let n = row.n();
                    let q_map: serde_json::Map<String, serde_json::Value> = row
                        .iter()
                        .map(|(k, count, _)| (k.to_string(), json_big(count)))
                        .collect();
                    serde_json::json!({
                        "n": n,
                        "q": json_big(&row.total()),
                        "F": json_big(&fib.get(n as usize)),
                        "Q": q_map,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    0
}

fn parse_pset(text: &str) -> Result<PrimePowerSet, String> {
    let mut elems = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match part.parse::<u64>() {
            Ok(m) => elems.push(m),
            Err(_) => return Err(format!("invalid P-subset element '{part}'")),
        }
    }
    PrimePowerSet::from_elements(&elems).map_err(|e| e.to_string())
}

fn cmd_bound(args: BoundArgs) -> u8 {
    let x: ExactRational = match args.x.parse() {
        Ok(v) => v,
        Err(e) => return fail_usage(e),
    };
    let family = args.family.as_str();
    let needs_k = matches!(
        family,
        "Ak" | "Bk" | "Bk-closed" | "Rk" | "mixed2" | "mixed3"
    );
    let is_corollary = matches!(family, "corollary1" | "corollary2");
    if !needs_k && !is_corollary {
        return fail_usage(format!(
            "unknown family '{family}'; expected Ak, Bk, Bk-closed, Rk, corollary1, corollary2, mixed2 or mixed3"
        ));
    }
    if needs_k && args.k.is_none() {
        return fail_usage(format!("family {family} requires --k"));
    }
    if is_corollary && args.k.is_some() {
        return fail_usage(format!("family {family} takes --pset, not --k"));
    }
    let subset = if is_corollary {
        match parse_pset(&args.pset) {
            Ok(s) => s,
            Err(msg) => return fail_usage(msg),
        }
    } else {
        PrimePowerSet::empty()
    };
    let result = match eval_family(family, args.k, x.clone(), &subset) {
        Ok(r) => r,
        Err(e) => return fail_usage(e),
    };
    let (side, mode) = match result.side {
        Side::Lower => ("lower", RoundMode::Floor),
        Side::Upper => ("upper", RoundMode::Ceil),
    };
    let decimal = result.value.to_decimal(args.digits, mode);
    match args.format {
        Format::Text => println!("{} ~ {} ({} bound)", result.value, decimal, side),
        Format::Csv => {
            println!("family,k,x,side,value,decimal");
            println!(
                "{},{},{},{},{},{}",
                result.family,
                result.k.map(|k| k.to_string()).unwrap_or_default(),
                x,
                side,
                result.value,
                decimal
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "family": result.family,
                "k": result.k,
                "x": x.to_string(),
                "side": side,
                "value": result.value.to_string(),
                "decimal": decimal,
            })
        ),
    }
    0
}

fn print_enclosure(
    enclosure: &Enclosure,
    digits: u32,
    format: Format,
    target: &str,
    x: &ExactRational,
    terms: u64,
) {
    match format {
        Format::Text => {
            println!("{}", enclosure.render(digits));
            println!(
                "width = {} ~ {}",
                enclosure.width(),
                enclosure.width().to_decimal(digits, RoundMode::Ceil)
            );
        }
        Format::Csv => {
            println!("target,x,terms,lo,hi,width");
            println!(
                "{},{},{},{},{},{}",
                target,
                x,
                terms,
                enclosure.lo,
                enclosure.hi,
                enclosure.width()
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "target": target,
                "x": x.to_string(),
                "terms": terms,
                "lo": enclosure.lo.to_string(),
                "hi": enclosure.hi.to_string(),
                "width": enclosure.width().to_string(),
            })
        ),
    }
}

fn cmd_enclose(args: EncloseArgs) -> u8 {
    let x: ExactRational = match args.x.parse() {
        Ok(v) => v,
        Err(e) => return fail_usage(e),
    };
    let point = match EvalPoint::unit_interval(x.clone()) {
        Ok(p) => p,
        Err(e) => return fail_usage(e),
    };
    match args.target {
        Target::Sum => match enclose_odd_divisor_sum(&point, args.terms) {
            Ok(e) => {
                print_enclosure(&e, args.digits, args.format, "sum", &x, args.terms);
                0
            }
            Err(e) => fail_usage(e),
        },
        Target::Product => match enclose_distinct_product(&point, args.terms) {
            Ok(e) => {
                print_enclosure(&e, args.digits, args.format, "product", &x, args.terms);
                0
            }
            Err(Error::TailDiverges) => {
                let lo = distinct_product_partial(&point, args.terms)
                    .expect("partial product is defined on the whole unit interval");
                match args.format {
                    Format::Text => {
                        println!(
                            "lo = {} ~ {}",
                            lo,
                            lo.to_decimal(args.digits, RoundMode::Floor)
                        );
                        println!(
                            "hi inconclusive: tail bound x^(N+1)/(1-x) >= 1 at N = {}",
                            args.terms
                        );
                    }
                    Format::Csv => {
                        println!("target,x,terms,lo,hi,width");
                        println!("product,{},{},{},,", x, args.terms, lo);
                    }
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "target": "product",
                            "x": x.to_string(),
                            "terms": args.terms,
                            "lo": lo.to_string(),
                            "hi": serde_json::Value::Null,
                            "note": "tail bound x^(N+1)/(1-x) >= 1; hi inconclusive",
                        })
                    ),
                }
                0
            }
            Err(e) => fail_usage(e),
        },
    }
}

struct ReportLine {
    label: String,
    relation: &'static str,
    /// What text mode prints on the right-hand side of the relation.
    rhs_text: String,
    /// Exact rational (or polynomial) strings for csv/json round-trips.
    computed: String,
    expected: String,
    pass: bool,
    /// Extra " (...)" annotation for text mode; empty when absent.
    note: String,
}

impl ReportLine {
    fn equality(label: &str, computed: String, expected: String, pass: bool) -> Self {
        ReportLine {
            label: label.to_string(),
            relation: "=",
            rhs_text: expected.clone(),
            computed,
            expected,
            pass,
            note: String::new(),
        }
    }

    fn comparison(
        label: &str,
        relation: &'static str,
        rhs_text: &str,
        computed: String,
        expected: String,
        pass: bool,
    ) -> Self {
        ReportLine {
            label: label.to_string(),
            relation,
            rhs_text: rhs_text.to_string(),
            computed,
            expected,
            pass,
            note: String::new(),
        }
    }

    fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }

    fn text(&self) -> String {
        if self.relation == "=" && !self.pass {
            return format!(
                "FAIL {} = {} (expected {})",
                self.label, self.computed, self.expected
            );
        }
        format!(
            "{} {} {} {}{}",
            self.status(),
            self.label,
            self.relation,
            self.rhs_text,
            self.note
        )
    }
}

fn report_lines() -> crate::error::Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for check in quarter_constants()? {
        lines.push(ReportLine::equality(
            check.label,
            check.computed.to_string(),
            check.expected.to_string(),
            check.passed(),
        ));
    }
    for check in r_numerator_checks()? {
        lines.push(ReportLine::equality(
            check.label,
            check.computed.to_string(),
            check.expected.to_string(),
            check.passed(),
        ));
    }
    let threshold = sixteen_term_lower_bound()?;
    let mut line = ReportLine::comparison(
        threshold.label,
        ">=",
        &threshold.threshold.to_string(),
        threshold.computed.to_string(),
        threshold.threshold.to_string(),
        threshold.passed(),
    );
    line.note = format!(
        " (value ~ {})",
        threshold.computed.to_decimal(10, RoundMode::Floor)
    );
    lines.push(line);

    let point = crate::constants::quarter_point();
    let product = enclose_distinct_product(&point, 30)?;
    let sum = enclose_odd_divisor_sum(&point, 30)?;
    let tolerance = ExactRational::new(1, BigInt::from(10u32).pow(15));
    lines.push(ReportLine::comparison(
        "product enclosure (30 terms) width",
        "<",
        "10^-15",
        product.width().to_string(),
        tolerance.to_string(),
        product.width() < tolerance,
    ));
    lines.push(ReportLine::comparison(
        "sum enclosure (30 terms) width",
        "<",
        "10^-15",
        sum.width().to_string(),
        tolerance.to_string(),
        sum.width() < tolerance,
    ));

    let three = PrimePowerSet::from_elements(&[3])?;
    let uppers: [(&str, ExactRational); 4] = [
        ("B1", b_k(&point, 1)?.value),
        ("R4", r_k_value(&point, 4)?.value),
        ("R5", r_k_value(&point, 5)?.value),
        ("R6", r_k_value(&point, 6)?.value),
    ];
    for (label, value) in uppers {
        lines.push(ReportLine::comparison(
            label,
            ">",
            "product.hi",
            value.to_string(),
            product.hi.to_string(),
            value > product.hi,
        ));
    }
    let c1 = corollary1_lower(&point, &three)?.value;
    lines.push(ReportLine::comparison(
        "corollary1 P={3}",
        "<",
        "product.lo",
        c1.to_string(),
        product.lo.to_string(),
        c1 < product.lo,
    ));
    let sixteen = sixteen_term_lower_bound()?.computed;
    lines.push(ReportLine::comparison(
        "corollary1 P={3} + 16-term sum",
        "<",
        "product.lo",
        sixteen.to_string(),
        product.lo.to_string(),
        sixteen < product.lo,
    ));
    let c2 = corollary2_upper(&point, &three)?.value;
    lines.push(ReportLine::comparison(
        "corollary2 P={3}",
        ">",
        "sum.hi",
        c2.to_string(),
        sum.hi.to_string(),
        c2 > sum.hi,
    ));
    Ok(lines)
}

fn cmd_report(args: ReportArgs) -> u8 {
    let x: ExactRational = match args.x.parse() {
        Ok(v) => v,
        Err(e) => return fail_usage(e),
    };
    if x != ExactRational::new(1, 4) {
        return fail_usage(
            "report expectations are pinned at x = 1/4; no expected values exist elsewhere",
        );
    }
    let lines = match report_lines() {
        Ok(lines) => lines,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let passed = lines.iter().filter(|l| l.pass).count();
    let failed = lines.len() - passed;
    match args.format {
        Format::Text => {
            for line in &lines {
                println!("{}", line.text());
            }
            println!(
                "report: {} checks, {} passed, {} failed",
                lines.len(),
                passed,
                failed
            );
        }
        Format::Csv => {
            println!("label,relation,computed,expected,status");
            for line in &lines {
                println!(
                    "\"{}\",{},{},{},{}",
                    line.label,
                    line.relation,
                    line.computed,
                    line.expected,
                    line.status()
                );
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = lines
                .iter()
                .map(|line| {
                    serde_json::json!({
                        "label": line.label,
                        "relation": line.relation,
                        "computed": line.computed,
                        "expected": line.expected,
                        "pass": line.pass,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "x": "1/4",
                    "checks": rows,
                    "passed": passed,
                    "failed": failed,
                })
            );
        }
    }
    if failed == 0 {
        0
    } else {
        1
    }
}
