//! Rendering and command logic behind the `mobius-hosoya` binary.
//!
//! Every command returns its complete output as a `String` so the binary
//! stays a thin dispatcher and tests can inspect output directly.

use std::fmt::Write as _;

use mobius_hosoya::verify::{self, CheckStatus, Overall, VerificationReport};
use mobius_hosoya::{
    assemble_block_distance_matrix, hosoya_coeffs_closed, indices_closed, HosoyaPolynomial,
    IndexReport, LadderSpec, Rational,
};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mobius_hosoya::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Dot => "dot",
        }
    }
}

/// How `poly` obtains the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// BFS over the constructed ladder.
    Bfs,
    /// Published closed forms (n = 3 only).
    Closed,
    /// Block-assembled distance matrix (n = 3, m >= 6).
    Blocks,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Bfs => "bfs",
            Method::Closed => "closed",
            Method::Blocks => "blocks",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Polynomial,
    Closed,
    Both,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::Polynomial => "polynomial",
            Source::Closed => "closed",
            Source::Both => "both",
        }
    }
}

fn no_dot(format: OutputFormat, command: &str) -> CliResult<()> {
    if format == OutputFormat::Dot {
        return usage(format!("--format {} is only supported by `graph`, not `{command}`", format.name()));
    }
    Ok(())
}

fn require_n3(n: usize, what: &str) -> CliResult<()> {
    if n != 3 {
        return usage(format!("{what} requires n = 3 (got n = {n})"));
    }
    Ok(())
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

/// Decimal rendering with six significant digits.
pub fn approx(value: &Rational) -> String {
    let x = value.to_f64().unwrap_or(f64::NAN);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn exact(value: &Rational) -> String {
    value.to_string()
}

fn text_value(value: &Rational) -> String {
    if value.is_integer() {
        exact(value)
    } else {
        format!("{} (~{})", exact(value), approx(value))
    }
}

fn polynomial_for(m: usize, n: usize, method: Method) -> CliResult<HosoyaPolynomial> {
    match method {
        Method::Bfs => Ok(LadderSpec::new(m, n)?.build().hosoya_polynomial()?),
        Method::Closed => {
            require_n3(n, "--method closed")?;
            Ok(hosoya_coeffs_closed(m)?)
        }
        Method::Blocks => {
            require_n3(n, "--method blocks")?;
            Ok(assemble_block_distance_matrix(m)?.hosoya_polynomial()?)
        }
    }
}

/// `poly`: Hosoya coefficients of `M(m, n)`.
pub fn cmd_poly(m: usize, n: usize, method: Method, format: OutputFormat) -> CliResult<String> {
    no_dot(format, "poly")?;
    let p = polynomial_for(m, n, method)?;
    Ok(match format {
        OutputFormat::Text => format!("H = {p}\n"),
        OutputFormat::Json => {
            let coeffs: Map<String, Value> =
                p.terms().map(|(k, c)| (k.to_string(), json!(c))).collect();
            json_string(&json!({
                "m": m,
                "n": n,
                "method": method.name(),
                "coefficients": coeffs,
            }))
        }
        OutputFormat::Csv => csv_string(
            &["k", "coefficient"],
            p.terms().map(|(k, c)| vec![k.to_string(), c.to_string()]),
        )?,
        OutputFormat::Dot => unreachable!(),
    })
}

fn index_values(r: &IndexReport<Rational>) -> Vec<(&'static str, Rational)> {
    r.named().into_iter().map(|(name, v)| (name, v.clone())).collect()
}

/// `indices`: W, WW, Ha, TSZ of `M(m, n)`.
pub fn cmd_indices(m: usize, n: usize, source: Source, format: OutputFormat) -> CliResult<String> {
    no_dot(format, "indices")?;
    if source != Source::Polynomial {
        require_n3(n, "--source closed/both")?;
    }
    let from_poly = || -> CliResult<_> {
        let p = LadderSpec::new(m, n)?.build().hosoya_polynomial()?;
        Ok(p.indices::<Rational>())
    };
    let closed = || -> CliResult<_> { Ok(indices_closed::<Rational>(m)?) };

    let single = match source {
        Source::Polynomial => Some(from_poly()?),
        Source::Closed => Some(closed()?),
        Source::Both => None,
    };
    if let Some(report) = single {
        let values = index_values(&report);
        return Ok(match format {
            OutputFormat::Text => {
                let mut s = String::new();
                for (name, v) in &values {
                    writeln!(s, "{name:<3} = {}", text_value(v)).unwrap();
                }
                s
            }
            OutputFormat::Json => {
                let map: Map<String, Value> =
                    values.iter().map(|(k, v)| (k.to_string(), json!(exact(v)))).collect();
                json_string(&json!({ "m": m, "n": n, "source": source.name(), "indices": map }))
            }
            OutputFormat::Csv => csv_string(
                &["index", "value"],
                values.iter().map(|(k, v)| vec![k.to_string(), exact(v)]),
            )?,
            OutputFormat::Dot => unreachable!(),
        });
    }

    // Closed first so m = 4, 5 fail before the BFS work.
    let closed = index_values(&closed()?);
    let poly = index_values(&from_poly()?);
    let rows: Vec<_> = poly
        .iter()
        .zip(&closed)
        .map(|((name, p), (_, c))| {
            let known = verify::KNOWN_DISCREPANCIES
                .iter()
                .any(|k| k.check == verify::index_check_name(name));
            (*name, p, c, p == c, known)
        })
        .collect();
    let status = |matched: bool, known: bool| match (matched, known) {
        (true, _) => "match",
        (false, true) => "MISMATCH (known)",
        (false, false) => "MISMATCH",
    };
    Ok(match format {
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "{:<7}{:<28}{:<28}status", "index", "polynomial", "closed").unwrap();
            for (name, p, c, matched, known) in &rows {
                writeln!(s, "{name:<7}{:<28}{:<28}{}", text_value(p), text_value(c), status(*matched, *known))
                    .unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let map: Map<String, Value> = rows
                .iter()
                .map(|(name, p, c, matched, known)| {
                    let entry = json!({
                        "polynomial": exact(p),
                        "closed": exact(c),
                        "match": matched,
                        "known_discrepancy": !matched && *known,
                    });
                    (name.to_string(), entry)
                })
                .collect();
            json_string(&json!({ "m": m, "n": n, "source": "both", "indices": map }))
        }
        OutputFormat::Csv => csv_string(
            &["index", "polynomial", "closed", "status"],
            rows.iter().map(|(name, p, c, matched, known)| {
                vec![name.to_string(), exact(p), exact(c), status(*matched, *known).to_string()]
            }),
        )?,
        OutputFormat::Dot => unreachable!(),
    })
}

/// Output of `verify` plus the process exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub output: String,
    pub exit_code: i32,
    pub unexpected_mismatches: usize,
}

fn overall_name(o: Overall) -> &'static str {
    match o {
        Overall::AllMatch => "all_match",
        Overall::HasMismatch => "has_mismatch",
    }
}

/// `verify`: sweep `m_min..=m_max`. Under `strict`, any mismatch outside
/// [`verify::KNOWN_DISCREPANCIES`] yields exit code 1.
pub fn cmd_verify(m_min: usize, m_max: usize, strict: bool, format: OutputFormat) -> CliResult<VerifyOutcome> {
    no_dot(format, "verify")?;
    if m_min < LadderSpec::MIN_M || m_min > m_max {
        return usage(format!("invalid range: need 4 <= m-min <= m-max (got {m_min}..{m_max})"));
    }
    let reports = verify::sweep(m_min, m_max)?;
    let unexpected: usize = reports.iter().map(|r| r.unexpected_mismatches().count()).sum();
    let output = match format {
        OutputFormat::Text => verify_text(&reports, unexpected),
        OutputFormat::Json => {
            let reports: Vec<Value> = reports.iter().map(report_json).collect();
            json_string(&json!({
                "m_min": m_min,
                "m_max": m_max,
                "strict": strict,
                "unexpected_mismatches": unexpected,
                "reports": reports,
            }))
        }
        OutputFormat::Csv => csv_string(
            &["m", "check", "status", "expected", "actual", "known_discrepancy"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    let known = c.status == CheckStatus::Mismatch && c.known_discrepancy().is_some();
                    vec![
                        r.m.to_string(),
                        c.name.clone(),
                        c.status.as_str().to_string(),
                        c.expected.to_string(),
                        c.actual.to_string(),
                        known.to_string(),
                    ]
                })
            }),
        )?,
        OutputFormat::Dot => unreachable!(),
    };
    let exit_code = if strict && unexpected > 0 { 1 } else { 0 };
    Ok(VerifyOutcome { output, exit_code, unexpected_mismatches: unexpected })
}

fn report_json(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let known = match (c.status, c.known_discrepancy()) {
                (CheckStatus::Mismatch, Some(k)) => json!(k.note),
                _ => Value::Null,
            };
            json!({
                "name": c.name,
                "status": c.status.as_str(),
                "expected": c.expected.to_string(),
                "actual": c.actual.to_string(),
                "known_discrepancy": known,
            })
        })
        .collect();
    json!({ "m": r.m, "overall": overall_name(r.overall()), "checks": checks })
}

fn verify_text(reports: &[VerificationReport], unexpected: usize) -> String {
    let mut s = String::new();
    let mut known = 0;
    for r in reports {
        writeln!(s, "m = {}: {}", r.m, overall_name(r.overall())).unwrap();
        for c in &r.checks {
            match c.status {
                CheckStatus::Match => {
                    writeln!(s, "  {:<26}match     {}", c.name, c.actual).unwrap();
                }
                CheckStatus::Skipped => {
                    writeln!(s, "  {:<26}skipped", c.name).unwrap();
                }
                CheckStatus::Mismatch => {
                    let tag = match c.known_discrepancy() {
                        Some(k) => {
                            known += 1;
                            format!("  [known: {}]", k.note)
                        }
                        None => String::new(),
                    };
                    writeln!(
                        s,
                        "  {:<26}MISMATCH  expected {}, actual {}{tag}",
                        c.name, c.expected, c.actual
                    )
                    .unwrap();
                }
            }
        }
    }
    writeln!(
        s,
        "summary: {} values of m, {known} known mismatches, {unexpected} unexpected mismatches",
        reports.len()
    )
    .unwrap();
    s
}

/// `graph`: the edge structure of `M(m, n)`.
pub fn cmd_graph(m: usize, n: usize, format: OutputFormat) -> CliResult<String> {
    let spec = LadderSpec::new(m, n)?;
    let g = spec.build();
    let edges = g.edges();
    Ok(match format {
        OutputFormat::Text => {
            let mut s = format!("{spec}: {} vertices, {} edges\n", g.vertex_count(), edges.len());
            for (u, v) in &edges {
                writeln!(s, "{u} -- {v}").unwrap();
            }
            s
        }
        OutputFormat::Dot => {
            let mut s = format!("graph \"{spec}\" {{\n");
            for v in 0..g.vertex_count() {
                let (i, j) = spec.position(v);
                writeln!(s, "  {v} [label=\"({i},{j})\"];").unwrap();
            }
            for (u, v) in &edges {
                writeln!(s, "  {u} -- {v};").unwrap();
            }
            s.push_str("}\n");
            s
        }
        OutputFormat::Csv => {
            csv_string(&["u", "v"], edges.iter().map(|(u, v)| vec![u.to_string(), v.to_string()]))?
        }
        OutputFormat::Json => json_string(&json!({
            "m": m,
            "n": n,
            "vertices": g.vertex_count(),
            "edges": edges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        })),
    })
}
