//! Subcommand definitions and dispatch.
//!
//! Exit codes: 0 for success, 2 when `certify` returns anything short
//! of an absence certificate for every requested degree, 1 for errors
//! of any kind (usage, parse, semantic). Errors still produce a Report
//! on stdout with a machine-readable code.

use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use wpfol_core::{
    basis_fol, certify_absence, frobenius, hircurve_predicate, intersect, jouanolou_bounds,
    milnor_report, reduce_weights, represent, singular_points_chart, CertifyOutcome,
    ChartSolutions, DivisorClass, Foliation, GaussRat, NormalForm, OneForm, ProjPoint, QHPoly,
    WeightVector,
};

use crate::parse::{parse_oneform, parse_polynomial, parse_scalar};
use crate::report::{gauss_json, rational_json, CliError, ErrorPayload, Report, TOOL_VERSION};

#[derive(Parser)]
#[command(
    name = "wpfol",
    version,
    about = "Exact arithmetic for holomorphic foliations on weighted projective planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// List a monomial-combination basis of the degree-d foliation forms.
    Basis {
        /// Weights l0,l1,l2 with 1 <= l0 <= l1 <= l2.
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        /// Normal degree d of the forms.
        #[arg(long)]
        degree: i64,
    },
    /// Decide whether a quasi-homogeneous curve is invariant for a form.
    Check {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        /// One-form expression, or @FILE to read it from a file.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Polynomial expression, or @FILE.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
    },
    /// Locate the singular points of a foliation, chart by chart.
    Sing {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Local Milnor numbers and the global count they must add up to.
    Milnor {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Algebraic multiplicity of a foliation at a coordinate vertex.
    Multiplicity {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Vertex index 0, 1 or 2.
        #[arg(long)]
        vertex: usize,
    },
    /// Riccati data of a foliation on P(1,1,k).
    Riccati {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Certify absence of invariant curves of low quasi-degree through a point.
    Certify {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Homogeneous coordinates c0:c1:c2, each a scalar expression.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Certify curve degrees 1 through this bound.
        #[arg(long)]
        max_degree: i64,
        /// Also write the per-degree outcomes to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named example family member and print its defining form.
    Example {
        /// Family tag, e.g. rational-1, log-2, special-d, beta, delta, eta.
        #[arg(long)]
        family: String,
        #[arg(long, value_name = "L0,L1,L2")]
        weights: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        j0: Option<u32>,
        #[arg(long)]
        j1: Option<u32>,
        /// Scalar expression, e.g. 2, -3/4, 1+2*i.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Degree bounds guaranteeing an invariant algebraic curve.
    Bounds {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
    },
    /// Frobenius number of the semigroup <a, b> and optional membership.
    Frobenius {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// Also decide whether n = a*x + b*y is solvable in nonnegative integers.
        #[arg(long)]
        n: Option<i64>,
    },
    /// Intersection data of the class a*F + b*E on the Hirzebruch surface F_k.
    Hirzebruch {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Reduce a weight vector to its pairwise-coprime model.
    Reduce {
        #[arg(long, value_name = "L0,L1,L2")]
        weights: String,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Basis { .. } => "basis",
            Cmd::Check { .. } => "check",
            Cmd::Sing { .. } => "sing",
            Cmd::Milnor { .. } => "milnor",
            Cmd::Multiplicity { .. } => "multiplicity",
            Cmd::Riccati { .. } => "riccati",
            Cmd::Certify { .. } => "certify",
            Cmd::Example { .. } => "example",
            Cmd::Bounds { .. } => "bounds",
            Cmd::Frobenius { .. } => "frobenius",
            Cmd::Hirzebruch { .. } => "hirzebruch",
            Cmd::Reduce { .. } => "reduce",
        }
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // --help/--version go to stdout with exit 0; usage errors
            // exit 1 (clap's own default of 2 is reserved for
            // inconclusive certificates).
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                emit(&e.to_string());
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    let mut inputs = Map::new();
    let mut weights = None;
    let (results, error, exit) = match dispatch(&cli.cmd, &mut inputs, &mut weights) {
        Ok((results, exit)) => (results, None, exit),
        Err(e) => (
            Value::Null,
            Some(ErrorPayload { code: e.code.to_string(), message: e.message }),
            1,
        ),
    };
    let report = Report {
        command: cli.cmd.name().to_string(),
        weights,
        inputs: Value::Object(inputs),
        results,
        error,
        exact: true,
        tool_version: TOOL_VERSION,
    };
    match serde_json::to_string_pretty(&report) {
        Ok(text) => {
            emit(&(text + "\n"));
            exit
        }
        Err(e) => {
            eprintln!("report serialization failed: {e}");
            1
        }
    }
}

/// Write to stdout, tolerating a closed pipe (e.g. piping into head).
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn parse_weights(s: &str) -> Result<WeightVector, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "--weights expects three comma-separated integers, got {s:?}"
        )));
    }
    let mut l = [0u32; 3];
    for (i, p) in parts.iter().enumerate() {
        l[i] = p.trim().parse().map_err(|_| {
            CliError::usage(format!("--weights component {p:?} is not a positive integer"))
        })?;
    }
    if l[0] < 1 || l[0] > l[1] || l[1] > l[2] {
        return Err(CliError::usage(format!(
            "weights must satisfy 1 <= l0 <= l1 <= l2, got ({},{},{})",
            l[0], l[1], l[2]
        )));
    }
    Ok(WeightVector::new(l[0], l[1], l[2]))
}

/// `@FILE` arguments stand for the trimmed contents of FILE.
fn resolve(text: &str) -> Result<String, CliError> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::io(format!("cannot read {path:?}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn load_form(w: WeightVector, text: &str) -> Result<OneForm, CliError> {
    Ok(parse_oneform(w, &resolve(text)?)?)
}

fn load_foliation(w: WeightVector, text: &str) -> Result<Foliation, CliError> {
    Ok(Foliation::new(load_form(w, text)?)?)
}

fn load_curve(w: WeightVector, text: &str) -> Result<(QHPoly, i64), CliError> {
    let c = parse_polynomial(&resolve(text)?)?;
    let wl = [w.l[0] as i64, w.l[1] as i64, w.l[2] as i64];
    match c.quasi_degree(&wl) {
        Some(n) if !c.is_constant() => Ok((c, n)),
        Some(_) => Err(CliError {
            code: "parameter",
            message: "curve must be nonconstant".to_string(),
        }),
        None => Err(CliError {
            code: "not_quasi_homogeneous",
            message: format!("curve {} is not quasi-homogeneous for weights {w}", c.to_text()),
        }),
    }
}

fn parse_point(w: WeightVector, text: &str) -> Result<ProjPoint, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "--point expects coordinates c0:c1:c2, got {text:?}"
        )));
    }
    let mut coords = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
    for (i, p) in parts.iter().enumerate() {
        coords[i] = parse_scalar(p)?;
    }
    Ok(ProjPoint::new(w, coords)?)
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("family {family:?} requires --{flag}")))
}

fn need_scalar(v: &Option<String>, flag: &str, family: &str) -> Result<GaussRat, CliError> {
    let text = need(v.as_deref(), flag, family)?;
    Ok(parse_scalar(text)?)
}

fn chart_json(cs: &ChartSolutions, w: WeightVector) -> Value {
    let solutions: Vec<Value> = cs
        .solutions
        .iter()
        .map(|(x, y)| {
            let p = ProjPoint::from_chart(w, cs.chart, x, y);
            json!({ "x": gauss_json(x), "y": gauss_json(y), "point": p.to_text() })
        })
        .collect();
    json!({
        "chart": cs.chart,
        "group_order": w.l[cs.chart],
        "solutions": solutions,
        "residual": cs.residual,
    })
}

fn all_charts(f: &Foliation) -> Result<[ChartSolutions; 3], CliError> {
    Ok([
        singular_points_chart(f, 0)?,
        singular_points_chart(f, 1)?,
        singular_points_chart(f, 2)?,
    ])
}

fn foliation_json(f: &Foliation) -> Value {
    json!({
        "form": f.omega.to_text(),
        "degree": f.d,
        "saturated": f.saturated,
    })
}

fn dispatch(
    cmd: &Cmd,
    inputs: &mut Map<String, Value>,
    weights: &mut Option<[u32; 3]>,
) -> Result<(Value, i32), CliError> {
    match cmd {
        Cmd::Basis { weights: ws, degree } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            inputs.insert("degree".into(), json!(degree));
            let basis = basis_fol(&w, *degree);
            let elements: Vec<Value> =
                basis.iter().map(|f| Value::String(f.to_text())).collect();
            Ok((
                json!({
                    "degree": degree,
                    "dimension": basis.len(),
                    "coefficient_degrees": [degree - w.l[0] as i64,
                                            degree - w.l[1] as i64,
                                            degree - w.l[2] as i64],
                    "basis": elements,
                }),
                0,
            ))
        }
        Cmd::Check { weights: ws, form, curve } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            let (c, n) = load_curve(w, curve)?;
            inputs.insert("curve".into(), Value::String(c.to_text()));
            let invariant = f.is_invariant(&c);
            Ok((
                json!({
                    "invariant": invariant,
                    "curve_degree": n,
                    "form_degree": f.d,
                    "saturated": f.saturated,
                }),
                0,
            ))
        }
        Cmd::Sing { weights: ws, form } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            let charts = all_charts(&f)?;
            let chart_values: Vec<Value> =
                charts.iter().map(|cs| chart_json(cs, w)).collect();
            Ok((
                json!({
                    "degree": f.d,
                    "saturated": f.saturated,
                    "charts": chart_values,
                }),
                0,
            ))
        }
        Cmd::Milnor { weights: ws, form } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            let charts = all_charts(&f)?;
            let report = milnor_report(&f, &charts)?;
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "point": e.point.to_text(),
                        "chart": e.chart,
                        "cover_multiplicity": e.cover_multiplicity,
                        "local": rational_json(&e.local),
                    })
                })
                .collect();
            let complete = report.complete();
            let agrees = complete && report.total == report.global;
            Ok((
                json!({
                    "degree": f.d,
                    "entries": entries,
                    "residuals": report.residuals,
                    "total": rational_json(&report.total),
                    "global": rational_json(&report.global),
                    "complete": complete,
                    "agrees": agrees,
                }),
                0,
            ))
        }
        Cmd::Multiplicity { weights: ws, form, vertex } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            if *vertex > 2 {
                return Err(CliError::usage(format!(
                    "--vertex must be 0, 1 or 2, got {vertex}"
                )));
            }
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            inputs.insert("vertex".into(), json!(vertex));
            let r = f.algebraic_multiplicity(*vertex)?;
            Ok((
                json!({
                    "vertex": vertex,
                    "point": ProjPoint::vertex(w, *vertex).to_text(),
                    "multiplicity": r,
                }),
                0,
            ))
        }
        Cmd::Riccati { weights: ws, form } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            let r = f.riccati()?;
            Ok((
                json!({
                    "k": r.k,
                    "d": r.d,
                    "r": r.r,
                    "exceptional_invariant": r.exceptional_invariant,
                    "e": r.e,
                    "riccati": r.riccati,
                    "riccati_invariant_branch": r.riccati_invariant_branch,
                }),
                0,
            ))
        }
        Cmd::Certify { weights: ws, form, point, max_degree, out } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let f = load_foliation(w, form)?;
            inputs.insert("form".into(), Value::String(f.omega.to_text()));
            let p = parse_point(w, point)?;
            inputs.insert("point".into(), Value::String(p.to_text()));
            inputs.insert("max_degree".into(), json!(max_degree));
            if *max_degree < 1 {
                return Err(CliError::usage(format!(
                    "--max-degree must be at least 1, got {max_degree}"
                )));
            }
            let mut outcomes = Vec::new();
            let mut all_absent = true;
            for n in 1..=*max_degree {
                match certify_absence(&f, &p, n)? {
                    CertifyOutcome::Absent(cert) => {
                        let value = serde_json::to_value(&cert)
                            .map_err(|e| CliError::io(e.to_string()))?;
                        outcomes.push(json!({
                            "n": n,
                            "status": "absent",
                            "certificate": value,
                        }));
                    }
                    CertifyOutcome::Found { chart, curve } => {
                        all_absent = false;
                        outcomes.push(json!({
                            "n": n,
                            "status": "found",
                            "chart": chart,
                            "curve": curve.to_text(),
                        }));
                        // Any invariant curve of degree <= n also has
                        // degree <= n + 1; higher bounds add nothing.
                        break;
                    }
                    CertifyOutcome::Inconclusive { reason } => {
                        all_absent = false;
                        outcomes.push(json!({
                            "n": n,
                            "status": "inconclusive",
                            "reason": reason,
                        }));
                    }
                }
            }
            let results = json!({ "outcomes": outcomes, "all_absent": all_absent });
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&results)
                    .map_err(|e| CliError::io(e.to_string()))?;
                fs::write(path, text + "\n")
                    .map_err(|e| CliError::io(format!("cannot write {path:?}: {e}")))?;
            }
            Ok((results, if all_absent { 0 } else { 2 }))
        }
        Cmd::Example {
            family,
            weights: ws,
            k,
            i,
            j,
            j0,
            j1,
            a,
            b,
            c,
            lambda,
            mu,
            gamma,
        } => {
            inputs.insert("family".into(), Value::String(family.clone()));
            let fam = family.as_str();
            let wv = || -> Result<WeightVector, CliError> {
                parse_weights(need(ws.as_deref(), "weights", fam)?)
            };
            let nf = match fam {
                "rational-1" => NormalForm::Rational1(wv()?),
                "rational-2" => NormalForm::Rational2(wv()?),
                "rational-3" => NormalForm::Rational3 {
                    w: wv()?,
                    i: need(*i, "i", fam)?,
                    j: need(*j, "j", fam)?,
                },
                "rational-4a" => NormalForm::Rational4a(wv()?),
                "rational-4b" => NormalForm::Rational4b(wv()?),
                "log-1" => NormalForm::Log1 {
                    w: wv()?,
                    a: need_scalar(a, "a", fam)?,
                    b: need_scalar(b, "b", fam)?,
                    c: need_scalar(c, "c", fam)?,
                },
                "log-2" => NormalForm::Log2 {
                    w: wv()?,
                    i: need(*i, "i", fam)?,
                    j: need(*j, "j", fam)?,
                },
                "log-3" => NormalForm::Log3(wv()?),
                "special-a" => NormalForm::SpecialA { k: need(*k, "k", fam)? },
                "special-b" => NormalForm::SpecialB { k: need(*k, "k", fam)? },
                "special-c" => NormalForm::SpecialC { k: need(*k, "k", fam)? },
                "special-d" => NormalForm::SpecialD {
                    k: need(*k, "k", fam)?,
                    i: need(*i, "i", fam)?,
                },
                "special-e" => NormalForm::SpecialE {
                    k: need(*k, "k", fam)?,
                    a: need_scalar(a, "a", fam)?,
                    b: need_scalar(b, "b", fam)?,
                    c: need_scalar(c, "c", fam)?,
                },
                "beta" => NormalForm::Beta {
                    w: wv()?,
                    lambda: need_scalar(lambda, "lambda", fam)?,
                    mu: need_scalar(mu, "mu", fam)?,
                    gamma: need_scalar(gamma, "gamma", fam)?,
                },
                "omega-p2" => NormalForm::OmegaP2,
                "delta" => NormalForm::Delta { k: need(*k, "k", fam)? },
                "eta" => NormalForm::Eta {
                    w: wv()?,
                    j0: need(*j0, "j0", fam)?,
                    j1: need(*j1, "j1", fam)?,
                    a: need_scalar(a, "a", fam)?,
                },
                other => {
                    return Err(CliError::usage(format!(
                        "unknown family {other:?}; valid tags: rational-1, rational-2, \
                         rational-3, rational-4a, rational-4b, log-1, log-2, log-3, \
                         special-a, special-b, special-c, special-d, special-e, beta, \
                         omega-p2, delta, eta"
                    )));
                }
            };
            let f = nf.build()?;
            *weights = Some(f.w.l);
            let mut results = Map::new();
            results.insert("family".into(), Value::String(nf.tag().to_string()));
            if let Value::Object(base) = foliation_json(&f) {
                results.extend(base);
            }
            Ok((Value::Object(results), 0))
        }
        Cmd::Bounds { weights: ws } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let b = jouanolou_bounds(&w);
            Ok((serde_json::to_value(&b).map_err(|e| CliError::io(e.to_string()))?, 0))
        }
        Cmd::Frobenius { a, b, n } => {
            inputs.insert("a".into(), json!(a));
            inputs.insert("b".into(), json!(b));
            let g = frobenius(*a, *b)?;
            let mut results = Map::new();
            results.insert("g".into(), json!(g));
            if let Some(n) = n {
                inputs.insert("n".into(), json!(n));
                let rep = represent(*a, *b, *n)?;
                results.insert(
                    "representation".into(),
                    match rep {
                        Some((x, y)) => json!({ "x": x, "y": y }),
                        None => Value::Null,
                    },
                );
            }
            Ok((Value::Object(results), 0))
        }
        Cmd::Hirzebruch { k, a, b } => {
            inputs.insert("k".into(), json!(k));
            inputs.insert("a".into(), json!(a));
            inputs.insert("b".into(), json!(b));
            let fiber = DivisorClass::new(*k, 1, 0)?;
            let section = DivisorClass::new(*k, 0, 1)?;
            let class = DivisorClass::new(*k, *a, *b)?;
            let pair = |x: &DivisorClass, y: &DivisorClass| -> Result<i64, CliError> {
                Ok(intersect(x, y)?)
            };
            let nf = pair(&class, &fiber)?;
            let ne = pair(&class, &section)?;
            let nn = pair(&class, &class)?;
            let forced = match hircurve_predicate(*a, *b, *k)? {
                Some(branch) => {
                    serde_json::to_value(&branch).map_err(|e| CliError::io(e.to_string()))?
                }
                None => Value::Null,
            };
            Ok((
                json!({
                    "class": { "fiber_coefficient": a, "section_coefficient": b },
                    "intersections": {
                        "F.F": pair(&fiber, &fiber)?,
                        "F.E": pair(&fiber, &section)?,
                        "E.E": pair(&section, &section)?,
                        "N.F": nf,
                        "N.E": ne,
                        "N.N": nn,
                    },
                    "tangency": { "section": ne - 2, "fiber": nf - 2 },
                    "baum_bott": nn,
                    "riccati": *b == 2,
                    "generic_bound": wpfol_core::hirzebruch_bound(*a, *b, *k),
                    "forced_curve": forced,
                }),
                0,
            ))
        }
        Cmd::Reduce { weights: ws } => {
            let w = parse_weights(ws)?;
            *weights = Some(w.l);
            let r = reduce_weights(&w);
            Ok((serde_json::to_value(&r).map_err(|e| CliError::io(e.to_string()))?, 0))
        }
    }
}
