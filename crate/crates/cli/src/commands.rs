//! Command dispatch: each command is a thin wrapper over a core operation
//! that returns a [`Report`].

use std::cmp::Ordering;

use expalg_core::props::{cantor_structure_score, hausdorff, limset, PropsError};
use expalg_core::rug::{Integer, Rational};
use expalg_core::witnesses::{by_name, darboux_violation, db1_upper_density, CantorSequence};
use expalg_core::{
    certify_free_combination, check_q_independence, induce, isolate_roots, monotone_decomposition,
    preimage_count, tail_radius, Basis, Direction, ExpSum, ExponentVector, FreeAlgError,
    GeneratorSet, Interval, IsolationConfig, NumericExpSum, RootCertificate, RootError, Value,
    WitnessError,
};
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::args::{CheckCommand, Cli, Command, SequenceName, WitnessCommand};
use crate::config::{Config, ConfigError};
use crate::output::{Format, Outcome, Report, Table};
use crate::parse::{
    parse_expsum, parse_lincomb, parse_polynomial, parse_rational, LowerError, ParseError,
};

/// Digits printed for interval endpoints.
const DIGITS: usize = 20;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Props(#[from] PropsError),
    #[error("{0}")]
    Usage(String),
}

impl From<LowerError> for CliError {
    fn from(e: LowerError) -> Self {
        match e {
            LowerError::Parse(p) => CliError::Parse(p),
            LowerError::FreeAlg(f) => CliError::FreeAlg(f),
        }
    }
}

impl CliError {
    /// Module-level error name shown before the message.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(p) => p.kind.name(),
            CliError::Config(_) => "ConfigError",
            CliError::FreeAlg(_) => "FreeAlgError",
            CliError::Root(_) => "RootError",
            CliError::Witness(_) => "WitnessError",
            CliError::Props(_) => "PropsError",
            CliError::Usage(_) => "UsageError",
        }
    }
}

/// Settings shared by every command.
pub struct Context {
    pub basis: Basis,
    pub precision: u32,
    pub tol: f64,
}

impl Context {
    pub fn new(config: &Config, precision: Option<u32>) -> Result<Self, CliError> {
        let precision = precision.unwrap_or(config.precision);
        if !(16..=65536).contains(&precision) {
            return Err(ConfigError::BadPrecision(precision).into());
        }
        Ok(Context {
            basis: config.basis()?,
            precision,
            tol: config.tol,
        })
    }

    fn isolation(&self, tol: Option<f64>) -> IsolationConfig {
        IsolationConfig::default()
            .with_tol(tol.unwrap_or(self.tol))
            .with_precision(self.precision)
    }
}

pub fn format_of(cli: &Cli) -> Format {
    if cli.global.json {
        Format::Json
    } else if cli.global.csv {
        Format::Csv
    } else {
        Format::Text
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let config = Config::load(cli.global.config.as_deref())?;
    let ctx = Context::new(&config, cli.global.precision)?;
    match &cli.command {
        Command::Normalize { expr } => normalize(&ctx, expr),
        Command::Roots { expr, tol } => roots(&ctx, expr, *tol),
        Command::Monotone { expr, domain, tol } => monotone(&ctx, expr, domain.as_deref(), *tol),
        Command::Preimage { expr, c, tol } => preimage(&ctx, expr, c, *tol),
        Command::Independent { vectors } => independent(&ctx, vectors),
        Command::Induce { poly, gens } => induce_cmd(&ctx, poly, gens),
        Command::Certify { poly, gens } => certify(&ctx, poly, gens),
        Command::Witness(WitnessCommand::Eval { name, x }) => witness_eval(&ctx, name, x),
        Command::Witness(WitnessCommand::Dump { name, n }) => witness_dump(&ctx, name, *n),
        Command::Check(CheckCommand::Darboux { expr }) => check_darboux(&ctx, expr),
        Command::Check(CheckCommand::Density { k, n_max }) => check_density(*k, *n_max),
        Command::Check(CheckCommand::Limset {
            witness,
            n,
            resolution,
        }) => check_limset(*witness, *n, *resolution),
        Command::Report => report(&ctx),
    }
}

fn interval_strings(i: &Interval) -> (String, String) {
    i.to_decimal_strings(DIGITS)
}

fn sign_char(s: Ordering) -> &'static str {
    match s {
        Ordering::Less => "-",
        Ordering::Equal => "0",
        Ordering::Greater => "+",
    }
}

fn terms_table(f: &ExpSum) -> Table {
    let mut table = Table::new(&["coeff", "exponent"]);
    for t in f.terms() {
        table.push(vec![t.coeff.to_string(), t.exponent.to_string()]);
    }
    table
}

pub fn normalize(ctx: &Context, expr: &str) -> Result<Report, CliError> {
    let f = parse_expsum(expr, &ctx.basis)?;
    let text = format!(
        "{f}\nrank {}, {}",
        f.rank(),
        if f.is_exponential_like() {
            "exponential-like"
        } else {
            "not exponential-like"
        }
    );
    Ok(Report {
        command: "normalize".into(),
        json: json!({
            "normalized": f.to_string(),
            "rank": f.rank(),
            "exp_like": f.is_exponential_like(),
            "sum": f.to_json_value(),
        }),
        text,
        table: terms_table(&f),
        outcome: Outcome::Certified,
    })
}

fn certificate_report(
    command: &str,
    heading: String,
    cert: &RootCertificate,
    extra: Json,
) -> Report {
    let mut text = heading;
    text.push_str(&format!(
        "\nprecision {} bits, tail radius M = {}\nsign on (-inf, -M]: {}, sign on [M, inf): {}\n",
        cert.precision,
        cert.tail_radius.to_string_radix(10, Some(DIGITS)),
        sign_char(cert.left_tail_sign),
        sign_char(cert.right_tail_sign),
    ));
    text.push_str(&format!(
        "{} isolating, {} ambiguous (bound {})",
        cert.isolating.len(),
        cert.ambiguous.len(),
        cert.upper_bound
    ));
    let mut table = Table::new(&["kind", "lo", "hi"]);
    let mut cells: Vec<(&str, &Interval)> = cert
        .isolating
        .iter()
        .map(|i| ("isolating", i))
        .chain(cert.ambiguous.iter().map(|i| ("ambiguous", i)))
        .collect();
    cells.sort_by(|a, b| a.1.lo().partial_cmp(b.1.lo()).unwrap());
    for (kind, cell) in cells {
        let (lo, hi) = interval_strings(cell);
        text.push_str(&format!("\n  {kind:<9} [{lo}, {hi}]"));
        table.push(vec![kind.into(), lo, hi]);
    }
    let mut json = cert.to_json();
    if let (Json::Object(map), Json::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    Report {
        command: command.into(),
        json,
        text,
        table,
        outcome: Outcome::Certified,
    }
}

pub fn roots(ctx: &Context, expr: &str, tol: Option<f64>) -> Result<Report, CliError> {
    let f = parse_expsum(expr, &ctx.basis)?;
    let cert = isolate_roots(&f, &ctx.isolation(tol))?;
    Ok(certificate_report(
        "roots",
        format!("roots of {f}"),
        &cert,
        json!({ "sum": f.to_string() }),
    ))
}

pub fn preimage(ctx: &Context, expr: &str, c: &str, tol: Option<f64>) -> Result<Report, CliError> {
    let f = parse_expsum(expr, &ctx.basis)?;
    let c = parse_rational(c)?;
    let cert = preimage_count(&f, &c, &ctx.isolation(tol))?;
    Ok(certificate_report(
        "preimage",
        format!("solutions of {f} = {c}: at most {}", f.rank()),
        &cert,
        json!({ "sum": f.to_string(), "level": c.to_string(), "rank": f.rank() }),
    ))
}

/// A symmetric integer window outside which the derivative has constant sign.
fn default_monotone_domain(f: &ExpSum, prec: u32) -> Result<Interval, CliError> {
    let numeric = NumericExpSum::new(f, prec)?;
    let radius = tail_radius(&numeric.diff_numeric())?;
    let r = radius.to_integer().unwrap_or_default() + 1;
    let r = Rational::from(r);
    Ok(Interval::from_rationals(&Rational::from(-&r), &r, prec))
}

pub fn monotone(
    ctx: &Context,
    expr: &str,
    domain: Option<&[String]>,
    tol: Option<f64>,
) -> Result<Report, CliError> {
    let f = parse_expsum(expr, &ctx.basis)?;
    if f.terms().iter().all(|t| t.exponent.is_zero()) {
        return Err(RootError::NotExponentialLike.into());
    }
    let domain = match domain {
        Some([a, b]) => {
            let (a, b) = (parse_rational(a)?, parse_rational(b)?);
            if a >= b {
                return Err(RootError::BadDomain.into());
            }
            Interval::from_rationals(&a, &b, ctx.precision)
        }
        Some(_) => return Err(CliError::Usage("--domain takes two endpoints".into())),
        None => default_monotone_domain(&f, ctx.precision)?,
    };
    let pieces = monotone_decomposition(&f, &domain, &ctx.isolation(tol))?;
    let (dlo, dhi) = interval_strings(&domain);
    let mut text = format!("monotone pieces of {f} on [{dlo}, {dhi}]: {}", pieces.len());
    let mut table = Table::new(&["lo", "hi", "direction"]);
    let mut items = Vec::new();
    for p in &pieces {
        let (lo, hi) = interval_strings(&p.domain);
        let dir = match p.direction {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        };
        text.push_str(&format!("\n  {dir:<10} [{lo}, {hi}]"));
        items.push(json!({ "lo": lo, "hi": hi, "direction": dir }));
        table.push(vec![lo, hi, dir.into()]);
    }
    Ok(Report {
        command: "monotone".into(),
        json: json!({
            "sum": f.to_string(),
            "domain": { "lo": dlo, "hi": dhi },
            "pieces": items,
        }),
        text,
        table,
        outcome: Outcome::Certified,
    })
}

fn parse_vectors(ctx: &Context, texts: &[String]) -> Result<Vec<ExponentVector>, CliError> {
    texts
        .iter()
        .map(|t| parse_lincomb(t, &ctx.basis).map_err(CliError::from))
        .collect()
}

pub fn independent(ctx: &Context, texts: &[String]) -> Result<Report, CliError> {
    let vectors = parse_vectors(ctx, texts)?;
    let result = check_q_independence(&vectors);
    let mut table = Table::new(&["index", "vector", "witness"]);
    let witness: Option<Vec<String>> = result
        .witness
        .as_ref()
        .map(|w| w.iter().map(Integer::to_string).collect());
    for (i, v) in vectors.iter().enumerate() {
        let w = witness.as_ref().map_or(String::new(), |w| w[i].clone());
        table.push(vec![(i + 1).to_string(), v.to_string(), w]);
    }
    let text = match &witness {
        None => format!("independent over Q ({} vectors)", vectors.len()),
        Some(w) => {
            let mut relation = String::new();
            for (k, v) in w.iter().zip(&vectors).filter(|(k, _)| k.as_str() != "0") {
                let (neg, abs) = match k.strip_prefix('-') {
                    Some(a) => (true, a),
                    None => (false, k.as_str()),
                };
                if relation.is_empty() {
                    relation.push_str(if neg { "-" } else { "" });
                } else {
                    relation.push_str(if neg { " - " } else { " + " });
                }
                relation.push_str(&format!("{abs}*({v})"));
            }
            format!("dependent over Q: {relation} = 0")
        }
    };
    Ok(Report {
        command: "independent".into(),
        json: json!({
            "vectors": vectors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "independent": result.independent,
            "witness": witness,
        }),
        text,
        table,
        outcome: if result.independent {
            Outcome::Certified
        } else {
            Outcome::Violation
        },
    })
}

fn generator_set(ctx: &Context, gens: &[String]) -> Result<GeneratorSet, CliError> {
    Ok(GeneratorSet::allow_dependent(parse_vectors(ctx, gens)?)?)
}

pub fn induce_cmd(ctx: &Context, poly: &str, gens: &[String]) -> Result<Report, CliError> {
    let gens = generator_set(ctx, gens)?;
    let p = parse_polynomial(poly, Some(gens.len()))?;
    let f = induce(&p, &gens)?;
    let independent = gens.independence().independent;
    let text = format!(
        "{p} at exp(r*t) = {f}\nrank {} from {} terms; generators {}",
        f.rank(),
        p.terms().len(),
        if independent {
            "independent"
        } else {
            "dependent"
        }
    );
    Ok(Report {
        command: "induce".into(),
        json: json!({
            "polynomial": p.to_string(),
            "generators": gens.gens().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "generators_independent": independent,
            "induced": f.to_json_value(),
            "induced_text": f.to_string(),
            "rank": f.rank(),
            "term_count": p.terms().len(),
        }),
        text,
        table: terms_table(&f),
        outcome: Outcome::Certified,
    })
}

pub fn certify(ctx: &Context, poly: &str, gens: &[String]) -> Result<Report, CliError> {
    let gens = generator_set(ctx, gens)?;
    let p = parse_polynomial(poly, Some(gens.len()))?;
    let cert = certify_free_combination(&p, &gens)?;
    let text = format!(
        "{p} at exp(r*t) = {}\nrank {} from {} terms: {}",
        cert.induced,
        cert.rank,
        cert.term_count,
        if cert.exp_like {
            "exponential-like, certified"
        } else {
            "NOT exponential-like"
        }
    );
    let mut json = cert.to_json();
    json["polynomial"] = json!(p.to_string());
    Ok(Report {
        command: "certify".into(),
        json,
        text,
        table: terms_table(&cert.induced),
        outcome: if cert.exp_like {
            Outcome::Certified
        } else {
            Outcome::Violation
        },
    })
}

fn value_strings(v: &Value, prec: u32) -> (String, String, bool) {
    match v {
        Value::Exact(q) => (q.to_string(), q.to_string(), true),
        Value::Enclosure(i) => {
            let (lo, hi) = interval_strings(&i.with_prec(prec));
            (lo, hi, false)
        }
    }
}

pub fn witness_eval(ctx: &Context, name: &str, x: &str) -> Result<Report, CliError> {
    let w = by_name(name)?;
    let x = parse_rational(x)?;
    let v = w.eval(&x, ctx.precision)?;
    let (lo, hi, exact) = value_strings(&v, ctx.precision);
    let mut text = if exact {
        format!("{name}({x}) = {lo} (exact)")
    } else {
        format!("{name}({x}) in [{lo}, {hi}]")
    };
    if let Some(d) = w.disclaimer() {
        text.push_str(&format!("\nnote: {d}"));
    }
    let mut table = Table::new(&["x", "lo", "hi", "exact"]);
    table.push(vec![
        x.to_string(),
        lo.clone(),
        hi.clone(),
        exact.to_string(),
    ]);
    Ok(Report {
        command: "witness eval".into(),
        json: json!({
            "witness": name,
            "x": x.to_string(),
            "exact": exact,
            "lo": lo,
            "hi": hi,
            "disclaimer": w.disclaimer(),
        }),
        text,
        table,
        outcome: Outcome::Certified,
    })
}

pub fn witness_dump(ctx: &Context, name: &str, n: u64) -> Result<Report, CliError> {
    if !(2..=1_000_000).contains(&n) {
        return Err(CliError::Usage("--n must lie in 2..=1000000".into()));
    }
    let mut table = Table::new(&["index", "x", "lo", "hi"]);
    let mut disclaimer = None;
    if name == "cantor" {
        for i in 0..n {
            let v = CantorSequence::term(i).to_string();
            table.push(vec![i.to_string(), String::new(), v.clone(), v]);
        }
    } else {
        let w = by_name(name)?;
        disclaimer = w.disclaimer().map(str::to_string);
        let (lo, hi) = w.sample_window();
        let span = Rational::from(&hi - &lo);
        for i in 0..n {
            let x = &lo + Rational::from(&span * i) / (n - 1);
            let (vlo, vhi, _) = value_strings(&w.eval(&x, ctx.precision)?, ctx.precision);
            table.push(vec![i.to_string(), x.to_string(), vlo, vhi]);
        }
    }
    let mut text = format!("{name}: {n} samples\nindex x lo hi");
    for row in &table.rows {
        text.push_str(&format!("\n{}", row.join(" ")));
    }
    if let Some(d) = &disclaimer {
        text.push_str(&format!("\nnote: {d}"));
    }
    let rows: Vec<Json> = table
        .rows
        .iter()
        .map(|r| json!({ "index": r[0], "x": r[1], "lo": r[2], "hi": r[3] }))
        .collect();
    Ok(Report {
        command: "witness dump".into(),
        json: json!({ "witness": name, "samples": rows, "disclaimer": disclaimer }),
        text,
        table,
        outcome: Outcome::Certified,
    })
}

pub fn check_darboux(ctx: &Context, expr: &str) -> Result<Report, CliError> {
    let f = parse_expsum(expr, &ctx.basis)?;
    let ev = darboux_violation(&f)?;
    let mut table = Table::new(&["n", "x", "lo", "hi"]);
    let mut text = format!(
        "f = {f}, rank {}\nf(step(x)) on (2^-{}, 1] takes {} certified distinct values:",
        ev.rank,
        ev.rank + 1,
        ev.certified_distinct
    );
    for (n, v) in &ev.values {
        let (lo, hi) = interval_strings(v);
        text.push_str(&format!("\n  f(1/{n}) in [{lo}, {hi}]"));
        table.push(vec![n.to_string(), format!("1/{n}"), lo, hi]);
    }
    let mut json = ev.to_json();
    json["sum"] = json!(f.to_string());
    json["status"] = json!("certified");
    Ok(Report {
        command: "check darboux".into(),
        json,
        text,
        table,
        outcome: if ev.certified_distinct >= 2 {
            Outcome::Certified
        } else {
            Outcome::Violation
        },
    })
}

pub fn check_density(k: u32, n_max: u64) -> Result<Report, CliError> {
    let d = db1_upper_density(k, n_max).ok_or_else(|| {
        CliError::Usage(format!(
            "no block n <= {n_max} carries the plateau value for k = {k} (need 1 <= k <= 40)"
        ))
    })?;
    let quarter = Rational::from((1, 4));
    let holds = d >= quarter;
    let level = Rational::from((k - 1, k));
    let text = format!(
        "upper density of F^-1({level}) at 0: {d} ~ {:.12}\n{} 1/4",
        d.to_f64(),
        if holds { ">=" } else { "<" }
    );
    let mut table = Table::new(&["k", "n_max", "density", "density_f64", "at_least_quarter"]);
    table.push(vec![
        k.to_string(),
        n_max.to_string(),
        d.to_string(),
        d.to_f64().to_string(),
        holds.to_string(),
    ]);
    Ok(Report {
        command: "check density".into(),
        json: json!({
            "k": k,
            "n_max": n_max,
            "level": level.to_string(),
            "density": d.to_string(),
            "density_f64": d.to_f64(),
            "at_least_quarter": holds,
            "status": "certified",
        }),
        text,
        table,
        outcome: if holds {
            Outcome::Certified
        } else {
            Outcome::Violation
        },
    })
}

pub fn check_limset(
    seq: SequenceName,
    n: u64,
    resolution: Option<f64>,
) -> Result<Report, CliError> {
    let SequenceName::Cantor = seq;
    if !(10..=1 << 24).contains(&n) {
        return Err(CliError::Usage("--N must lie in 10..=16777216".into()));
    }
    // Deepest level whose terms are all within the prefix.
    let level = 63 - (n + 2).leading_zeros() - 1;
    if level < 2 {
        return Err(CliError::Usage("--N too small to complete level 2".into()));
    }
    let compare_level = level - 1;
    let resolution = resolution.unwrap_or_else(|| 3f64.powi(-(compare_level as i32)));
    let values: Vec<f64> = (0..n).map(|i| CantorSequence::term(i).to_f64()).collect();
    let est = limset(&values, resolution)?;
    let score = cantor_structure_score(&est)?;
    let reference: Vec<f64> = CantorSequence::level_endpoints(compare_level)
        .iter()
        .map(Rational::to_f64)
        .collect();
    let distance = hausdorff(&est.points, &reference);
    let holds = distance <= resolution && score.isolated_points == 0;
    let text = format!(
        "cantor prefix N = {n} (levels 1..={level}), resolution {resolution:.6e}\n\
         {} cluster points; Hausdorff distance to level-{compare_level} endpoints {distance:.6e}\n\
         isolated points {}, largest gap ratio {:.6}\n\
         evidence only: finite-resolution proxy for the limit set",
        est.points.len(),
        score.isolated_points,
        score.max_gap_ratio,
    );
    let mut table = Table::new(&["index", "point"]);
    for (i, p) in est.points.iter().enumerate() {
        table.push(vec![i.to_string(), format!("{p:.17e}")]);
    }
    let mut json = est.to_json();
    json["score"] = score.to_json();
    json["reference_level"] = json!(compare_level);
    json["hausdorff"] = json!(distance);
    json["within_resolution"] = json!(distance <= resolution);
    Ok(Report {
        command: "check limset".into(),
        json,
        text,
        table,
        outcome: if holds {
            Outcome::Certified
        } else {
            Outcome::Violation
        },
    })
}

/// Fixed suite over every module with pinned inputs.
pub fn report(ctx: &Context) -> Result<Report, CliError> {
    let mut sections: Vec<Report> = vec![
        roots(ctx, "1*exp(2*t) - 2*exp(1*t) + 1*exp(0*t)", None)?,
        roots(ctx, "1*exp(1*t) - 2*exp(0*t)", None)?,
        preimage(
            ctx,
            "1*exp(sqrt2*t) - 3*exp(1*t) + 1/2*exp((-1)*t)",
            "1",
            None,
        )?,
        monotone(ctx, "1*exp(2*t) - 3*exp(1*t)", None, None)?,
        certify(ctx, "x1*x2 - x1", &["sqrt2".into(), "sqrt3".into()])?,
    ];
    let mut dependent = independent(ctx, &["sqrt2".into(), "2*sqrt2".into()])?;
    // The dependency is the expected finding here.
    dependent.outcome = match dependent.outcome {
        Outcome::Violation => Outcome::Certified,
        Outcome::Certified => Outcome::Violation,
    };
    dependent.command = "independent (expected dependent)".into();
    sections.push(dependent);
    sections.push(induce_cmd(
        ctx,
        "x1^2 - x2",
        &["sqrt2".into(), "2*sqrt2".into()],
    )?);
    sections.push(check_darboux(
        ctx,
        "1*exp(1*t) - 1*exp(sqrt2*t) + 2*exp((-1/2)*t)",
    )?);
    for k in 1..=5 {
        sections.push(check_density(k, 20)?);
    }
    sections.push(check_limset(SequenceName::Cantor, 1022, None)?);

    let mut outcome = Outcome::Certified;
    let mut text = String::new();
    let mut table = Table::new(&["section", "row", "field", "value"]);
    let mut items = Vec::new();
    for (i, s) in sections.iter().enumerate() {
        outcome = outcome.and(s.outcome);
        let status = match s.outcome {
            Outcome::Certified => "ok",
            Outcome::Violation => "VIOLATION",
        };
        text.push_str(&format!("== {} [{status}]\n{}\n\n", s.command, s.text));
        for (r, row) in s.table.rows.iter().enumerate() {
            for (field, value) in s.table.header.iter().zip(row) {
                table.push(vec![
                    format!("{i}:{}", s.command),
                    r.to_string(),
                    field.clone(),
                    value.clone(),
                ]);
            }
        }
        items.push(json!({ "command": s.command, "ok": s.outcome == Outcome::Certified, "result": s.json }));
    }
    let passed = sections
        .iter()
        .filter(|s| s.outcome == Outcome::Certified)
        .count();
    text.push_str(&format!("{passed} of {} sections ok", sections.len()));
    Ok(Report {
        command: "report".into(),
        json: json!({ "sections": items, "passed": passed, "total": sections.len() }),
        text,
        table,
        outcome,
    })
}
