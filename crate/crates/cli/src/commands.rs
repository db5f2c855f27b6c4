//! Subcommand implementations. Each returns the process exit code:
//! 0 on success (and all-pass for verification), 1 when a verification
//! sweep produced failures, 2 for usage or parameter errors.

use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use qmeixner::rational::exact_str;
use qmeixner::{quasi_orth_order_by_expansion, quasi_orth_sums, zeros_of, MeixnerParams, Rational};

use crate::grid::GridSpec;
use crate::render::{decimal_auto, decimal_for_width};
use crate::report::CSV_HEADER;
use crate::suites::run_suite;
use crate::table::{reference_table, TableId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Csv,
    Json,
}

fn make_params(n: usize, beta: &Rational, c: &Rational) -> Result<MeixnerParams, i32> {
    MeixnerParams::new(n, beta.clone(), c.clone()).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

pub fn cmd_eval(n: usize, beta: &Rational, c: &Rational, x: &Rational) -> i32 {
    let p = match make_params(n, beta, c) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let value = p.eval_recurrence(x);
    if let Ok(via_series) = p.eval_series(x) {
        if via_series != value {
            eprintln!("internal error: evaluation routes disagree");
            return 1;
        }
    }
    if value.denom().is_one() {
        println!("{}", value.numer());
    } else {
        let mut decimal = decimal_auto(&value, 12);
        if decimal.contains('.') && !decimal.contains('e') {
            decimal = decimal
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string();
        }
        println!("{} ({decimal})", exact_str(&value));
    }
    0
}

pub fn cmd_zeros(
    n: usize,
    beta: &Rational,
    c: &Rational,
    width: &Rational,
    format: OutputFormat,
) -> i32 {
    if !width.is_positive() {
        eprintln!("error: width must be positive");
        return 2;
    }
    let p = match make_params(n, beta, c) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let set = zeros_of(&p, width);
    let dec = |r: &Rational| decimal_for_width(r, width);
    match format {
        OutputFormat::Pretty => {
            println!(
                "degree {}  distinct real zeros {}  real count {}",
                set.degree(),
                set.len(),
                set.real_count()
            );
            for (i, iv) in set.intervals().iter().enumerate() {
                let tag = match iv.exact() {
                    Some(e) => format!("exact {}", exact_str(e)),
                    None => format!("[{}, {}]", exact_str(iv.lo()), exact_str(iv.hi())),
                };
                println!(
                    "{:>3}  {}  mult {}  {}",
                    i + 1,
                    dec(&iv.midpoint()),
                    iv.multiplicity(),
                    tag
                );
            }
        }
        OutputFormat::Csv => {
            println!("index,lo,hi,midpoint,multiplicity");
            for (i, iv) in set.intervals().iter().enumerate() {
                println!(
                    "{},{},{},{},{}",
                    i + 1,
                    dec(iv.lo()),
                    dec(iv.hi()),
                    dec(&iv.midpoint()),
                    iv.multiplicity()
                );
            }
        }
        OutputFormat::Json => {
            let intervals: Vec<_> = set
                .intervals()
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    let mut obj = json!({
                        "index": i + 1,
                        "lo": exact_str(iv.lo()),
                        "hi": exact_str(iv.hi()),
                        "midpoint_decimal": dec(&iv.midpoint()),
                        "multiplicity": iv.multiplicity(),
                    });
                    if let Some(e) = iv.exact() {
                        obj.as_object_mut()
                            .unwrap()
                            .insert("exact".into(), json!(exact_str(e)));
                    }
                    obj
                })
                .collect();
            let out = json!({
                "degree": set.degree(),
                "real_count": set.real_count(),
                "intervals": intervals,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    0
}

pub fn cmd_table(id: &str, format: OutputFormat) -> i32 {
    let table_id: TableId = match id.parse() {
        Ok(t) => t,
        Err(()) => {
            eprintln!("error: unknown table `{id}` (expected table1 or table2)");
            return 2;
        }
    };
    let table = reference_table(table_id);
    match format {
        OutputFormat::Pretty => {
            let mut widths: Vec<usize> = table.header.iter().map(|h| h.len()).collect();
            for row in &table.rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let fmt_row = |cells: &[String]| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, cell)| format!("{:<w$}", cell, w = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let header: Vec<String> = table.header.iter().map(|h| h.to_string()).collect();
            println!("{}", fmt_row(&header).trim_end());
            for row in &table.rows {
                println!("{}", fmt_row(row).trim_end());
            }
        }
        OutputFormat::Csv => {
            println!("{}", table.header.join(","));
            for row in &table.rows {
                println!("{}", row.join(","));
            }
        }
        OutputFormat::Json => {
            let out = json!({
                "header": table.header,
                "rows": table.rows,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    0
}

pub fn cmd_verify(
    suite: &str,
    grid: &GridSpec,
    jobs: usize,
    timing: bool,
    format: OutputFormat,
) -> i32 {
    let Some((records, summary)) = run_suite(suite, grid, jobs.max(1), timing) else {
        eprintln!(
            "error: unknown suite `{suite}` (expected one of: {})",
            crate::suites::SUITES.join(", ")
        );
        return 2;
    };
    match format {
        OutputFormat::Pretty => {
            for r in &records {
                println!("{}", r.to_pretty());
            }
            println!("{}", summary.to_pretty());
        }
        OutputFormat::Csv => {
            println!("{CSV_HEADER}");
            for r in &records {
                println!("{}", r.to_csv_row());
            }
        }
        OutputFormat::Json => {
            let out = json!({
                "records": records.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "summary": summary.to_json(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    if summary.fail > 0 {
        1
    } else {
        0
    }
}

pub fn cmd_qorder(beta: &Rational, c: &Rational, n: usize) -> i32 {
    match quasi_orth_order_by_expansion(beta, c, n) {
        Ok(r) => {
            println!("{r}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn cmd_qsums(
    n: usize,
    beta: &Rational,
    c: &Rational,
    r: usize,
    x_max: u64,
    format: OutputFormat,
) -> i32 {
    let p = match make_params(n, beta, c) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match quasi_orth_sums(&p, r, x_max) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let classify = |m: &qmeixner::MomentSum| {
        if m.distinctly_nonzero() {
            "nonzero"
        } else if m.consistent_with_zero() {
            "zero-consistent"
        } else {
            "inconclusive"
        }
    };
    match format {
        OutputFormat::Pretty => {
            println!(
                "order r = {}  truncation X = {}",
                report.order_r, report.truncation_x
            );
            for m in &report.moments {
                println!(
                    "m = {:<2}  sum = {:<14}  tail bound = {:<12}  {}",
                    m.m,
                    decimal_auto(&m.partial_sum, 6),
                    decimal_auto(&m.tail_bound, 3),
                    classify(m)
                );
            }
        }
        OutputFormat::Csv => {
            println!("m,partial_sum,tail_bound,classification");
            for m in &report.moments {
                println!(
                    "{},{},{},{}",
                    m.m,
                    decimal_auto(&m.partial_sum, 12),
                    decimal_auto(&m.tail_bound, 6),
                    classify(m)
                );
            }
        }
        OutputFormat::Json => {
            let moments: Vec<_> = report
                .moments
                .iter()
                .map(|m| {
                    json!({
                        "m": m.m,
                        "partial_sum": exact_str(&m.partial_sum),
                        "partial_sum_decimal": decimal_auto(&m.partial_sum, 12),
                        "tail_bound_decimal": decimal_auto(&m.tail_bound, 6),
                        "classification": classify(m),
                    })
                })
                .collect();
            let out = json!({
                "order_r": report.order_r,
                "truncation_x": report.truncation_x,
                "moments": moments,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
    }
    0
}

/// Applies `--beta`, `--c`, `--n` and `--width` overrides to a grid.
pub fn apply_grid_overrides(
    grid: &mut GridSpec,
    beta: Option<&str>,
    c: Option<&str>,
    n: Option<&str>,
    width: Option<&str>,
) -> Result<(), String> {
    let parse_list = |list: &str| -> Result<Vec<Rational>, String> {
        list.split(',')
            .map(|s| qmeixner::parse_rational(s).map_err(|e| e.to_string()))
            .collect()
    };
    if let Some(list) = beta {
        grid.beta_values = parse_list(list)?;
    }
    if let Some(list) = c {
        grid.c_values = parse_list(list)?;
        if grid.c_values.iter().any(|c| c.is_zero() || c.is_one()) {
            return Err("c must differ from 0 and 1".to_string());
        }
    }
    if let Some(range) = n {
        let (lo, hi) = match range.split_once("..") {
            Some((a, b)) => (
                a.parse::<usize>().map_err(|e| e.to_string())?,
                b.parse::<usize>().map_err(|e| e.to_string())?,
            ),
            None => {
                let v = range.parse::<usize>().map_err(|e| e.to_string())?;
                (v, v)
            }
        };
        if hi < lo {
            return Err("n range upper bound below lower bound".to_string());
        }
        grid.n_min = lo;
        grid.n_max = hi;
    }
    if let Some(w) = width {
        let w = qmeixner::parse_rational(w).map_err(|e| e.to_string())?;
        if !w.is_positive() {
            return Err("width must be positive".to_string());
        }
        grid.width = w;
    }
    Ok(())
}
