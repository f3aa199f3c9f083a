use clap::ValueEnum;
use gw_core::verify::SuiteReport;
use gw_core::{format_rational, Rational};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One value with explicit indices. For `L` records `m` carries `n`.
pub struct Record {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub m: i64,
    pub value: String,
}

impl Record {
    pub fn new(n: u32, k: u32, d: u32, m: i64, value: Rational) -> Self {
        Record {
            n,
            k,
            d,
            m,
            value: format_rational(&value),
        }
    }
}

const CSV_HEADER: &str = "N,k,d,m,value\n";

fn csv(records: &[Record]) -> String {
    let mut s = String::from(CSV_HEADER);
    for r in records {
        s.push_str(&format!("{},{},{},{},{}\n", r.n, r.k, r.d, r.m, r.value));
    }
    s
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serialisation") + "\n"
}

fn table(header: [&str; 3], rows: &[[String; 3]]) -> String {
    let mut width = header.map(str::len);
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 3]| format!("{:>w0$}  {:>w1$}  {}\n", cells[0], cells[1], cells[2], w0 = width[0], w1 = width[1]);
    let mut s = line(header);
    for row in rows {
        s.push_str(&line([&row[0], &row[1], &row[2]]));
    }
    s
}

pub fn constants(format: Format, n: u32, k: u32, records: &[Record]) -> String {
    match format {
        Format::Csv => csv(records),
        Format::Json => {
            let entries: Vec<Value> = records
                .iter()
                .map(|r| json!({"d": r.d, "m": r.m, "value": r.value}))
                .collect();
            pretty(&json!({"schema": 1, "N": n, "k": k, "entries": entries}))
        }
        Format::Text => {
            let rows: Vec<[String; 3]> = records
                .iter()
                .map(|r| [r.d.to_string(), r.m.to_string(), r.value.clone()])
                .collect();
            format!("L~^{{N={n}, k={k}}}\n") + &table(["d", "m", "value"], &rows)
        }
    }
}

pub fn real(format: Format, n: u32, k: u32, d: u32, (lo, hi): (i64, i64), records: &[Record]) -> String {
    let outside = |m: i64| m < lo || m > hi;
    let note = format!("outside window {lo}..={hi}");
    match format {
        Format::Csv => {
            for r in records.iter().filter(|r| outside(r.m)) {
                eprintln!("n = {}: {note}", r.m);
            }
            csv(records)
        }
        Format::Json => {
            let entries: Vec<Value> = records
                .iter()
                .map(|r| {
                    let mut e = json!({"d": r.d, "n": r.m, "value": r.value});
                    if outside(r.m) {
                        e["note"] = Value::String(note.clone());
                    }
                    e
                })
                .collect();
            pretty(&json!({"schema": 1, "N": n, "k": k, "L": {"d": d, "window": [lo, hi], "entries": entries}}))
        }
        Format::Text => {
            let rows: Vec<[String; 3]> = records
                .iter()
                .map(|r| {
                    let v = if outside(r.m) { format!("{}  ({note})", r.value) } else { r.value.clone() };
                    [r.d.to_string(), r.m.to_string(), v]
                })
                .collect();
            format!("L^{{N={n}, k={k}}}, window {lo}..={hi}\n") + &table(["d", "n", "value"], &rows)
        }
    }
}

pub fn report(format: Format, report: &SuiteReport) -> String {
    let passed = report.checks.iter().filter(|c| c.passed).count();
    match format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "lhs": c.lhs, "rhs": c.rhs}))
                .collect();
            pretty(&json!({"suite": report.suite.id(), "passed": report.passed(), "checks": checks}))
        }
        Format::Csv => {
            let mut s = String::from("check,status,lhs,rhs\n");
            for c in &report.checks {
                let status = if c.passed { "pass" } else { "fail" };
                s.push_str(&format!("{},{status},{},{}\n", quote(&c.name), quote(&c.lhs), quote(&c.rhs)));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                if c.passed {
                    s.push_str(&format!("PASS {}\n", c.name));
                } else {
                    s.push_str(&format!("FAIL {}\n  got  {}\n  want {}\n", c.name, c.lhs, c.rhs));
                }
            }
            s.push_str(&format!("{}: {passed}/{} checks passed\n", report.suite, report.checks.len()));
            s
        }
    }
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
