//! Text renderings. CSV uses `.` as decimal separator and prints rationals
//! as `num/den`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundCertificate, Direction, Report, Witness};
use crate::sweep::{GridCell, SuiteResult, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub n: u64,
    pub g: u64,
    pub fibgen_at_least: u64,
    pub d_min: u64,
    pub prime: u64,
    pub holds_at_d_min: bool,
    pub holds_below: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub fibgen_ge: u64,
    pub prime: u64,
    pub asymptotic_ratio: String,
    pub exact_threshold: String,
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Degeneration(w) => format!("p={} e={} gamma={}", w.p, w.e, w.gamma),
        Witness::Threshold(w) => format!("p={} g={} r={} e={}", w.p, w.g, w.r, w.e),
        Witness::Index { iota, theta: Some(t) } => format!("iota={iota} theta={t:.6}"),
        Witness::Index { iota, theta: None } => format!("iota={iota}"),
        Witness::None => "-".into(),
    }
}

fn certificate_line(c: &BoundCertificate) -> String {
    let rel = match c.direction {
        Direction::Lower => ">=",
        Direction::Upper => "<=",
    };
    let mut line = format!(
        "{:<5} {:<24} value {:<12} {rel} {:<4} {:<28} [{}]",
        match c.direction {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        },
        c.kind.as_str(),
        c.value.display(),
        c.integer_value,
        witness_text(&c.witness),
        c.hypothesis,
    );
    if let Some(note) = &c.conditional_note {
        let _ = write!(line, " conditional: {note}");
    }
    line.trim_end().to_owned()
}

pub fn report_human(r: &Report) -> String {
    let h = r.hypersurface;
    let mut s = format!(
        "X_{{{},{}}} in P^{} (n = {}, d = {}, Fano index {})\n",
        h.n(),
        h.d(),
        h.n() + 1,
        h.n(),
        h.d(),
        h.fano_index()
    );
    for c in r.certificates() {
        let _ = writeln!(s, "  {}", certificate_line(c));
    }
    match r.best_certificate() {
        Some(c) => {
            let _ = writeln!(
                s,
                "best unconditional lower bound: fib.gen >= {} ({})",
                r.best_lower, c.kind
            );
        }
        None => {
            let _ = writeln!(s, "best unconditional lower bound: fib.gen >= 0 (all bounds vacuous)");
        }
    }
    let _ = writeln!(
        s,
        "upper bounds: fib.gen <= {}, fib.gon <= {}",
        r.upper_genus.integer_value, r.upper_gonality.integer_value
    );
    s
}

pub fn report_csv(r: &Report) -> String {
    let mut s = String::from("direction,kind,value,integer_value,hypothesis,witness,conditional\n");
    for c in r.certificates() {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            match c.direction {
                Direction::Lower => "lower",
                Direction::Upper => "upper",
            },
            c.kind,
            c.value.display(),
            c.integer_value,
            match c.hypothesis {
                crate::bounds::Hypothesis::VeryGeneral => "very_general",
                crate::bounds::Hypothesis::AnySmooth => "any_smooth",
            },
            witness_text(&c.witness),
            c.is_conditional(),
        );
    }
    s
}

pub fn table_records(rows: &[TableRow]) -> Vec<TableRecord> {
    rows.iter()
        .map(|r| TableRecord {
            fibgen_ge: r.guaranteed_fibgen,
            prime: r.prime,
            asymptotic_ratio: format!(
                "{}/{}",
                r.asymptotic_degree_numerator, r.asymptotic_degree_denominator
            ),
            exact_threshold: r.exact_threshold.to_string(),
        })
        .collect()
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("fibgen_ge,prime,asymptotic_ratio,exact_threshold\n");
    for r in table_records(rows) {
        let _ = writeln!(s, "{},{},{},{}", r.fibgen_ge, r.prime, r.asymptotic_ratio, r.exact_threshold);
    }
    s
}

pub fn table_human(rows: &[TableRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<10} {:>5}  {:<10} exact threshold", "fib.gen >=", "p", "d >~");
    for r in rows {
        let _ = writeln!(
            s,
            "{:<10} {:>5}  {:<10} d >= {}",
            r.guaranteed_fibgen,
            r.prime,
            format!("{}n/{}", r.asymptotic_degree_numerator, r.asymptotic_degree_denominator),
            r.exact_threshold
        );
    }
    s
}

pub fn grid_csv(cells: &[GridCell]) -> String {
    let mut s = String::from("n,d,best_lower,best_kind,upper_genus,closed_form\n");
    for c in cells {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            c.n,
            c.d,
            c.best_lower,
            c.best_kind.map_or("none", |k| k.as_str()),
            c.upper_genus,
            c.closed_form
        );
    }
    s
}

/// Matrix of best lower bounds: one row per `n`, one column per `d`.
pub fn grid_human(cells: &[GridCell], n_min: u64, n_max: u64, d_min: u64, d_max: u64) -> String {
    let width = cells.iter().map(|c| c.best_lower.to_string().len()).max().unwrap_or(1).max(2);
    let mut s = format!("best lower bound on fib.gen; rows n = {n_min}..{n_max}, columns d = {d_min}..{d_max}\n");
    let _ = write!(s, "{:>5} |", "n\\d");
    for d in d_min..=d_max {
        let _ = write!(s, " {:>width$}", d);
    }
    s.push('\n');
    for row in cells.chunks((d_max - d_min + 1) as usize) {
        let _ = write!(s, "{:>5} |", row[0].n);
        for c in row {
            let _ = write!(s, " {:>width$}", c.best_lower);
        }
        s.push('\n');
    }
    s
}

pub fn threshold_human(t: &ThresholdResult) -> String {
    format!(
        "n = {}, g = {}: fib.gen >= {} for every degree d >= {} (prime p = {})\n  \
         threshold inequality at d = {}: {}\n  threshold inequality at d = {}: {}\n",
        t.n,
        t.g,
        t.fibgen_at_least,
        t.d_min,
        t.prime,
        t.d_min,
        if t.holds_at_d_min { "holds" } else { "fails" },
        t.d_min - 1,
        if t.holds_below { "holds" } else { "fails" },
    )
}

pub fn threshold_csv(t: &ThresholdResult) -> String {
    format!(
        "n,g,fibgen_ge,d_min,prime,holds_at_d_min,holds_below\n{},{},{},{},{},{},{}\n",
        t.n, t.g, t.fibgen_at_least, t.d_min, t.prime, t.holds_at_d_min, t.holds_below
    )
}

pub fn checks_human(results: &[SuiteResult]) -> String {
    let mut s = String::new();
    for r in results {
        let _ = writeln!(
            s,
            "{} {:<26} {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(s, "{} of {} suites passed", results.len() - failed, results.len());
    s
}
